"""Size caps shared by the lattice, oracle, order-complex and Buchberger code.

Defaults can be overridden with the ``DFILAB_CAPS`` environment variable, a
comma separated list such as ``lattice=5000,oracle=14``.
"""
import os
from dataclasses import dataclass, replace

ENV_VAR = "DFILAB_CAPS"


@dataclass(frozen=True)
class Caps:
    lattice: int = 20000        # lcm-lattice elements
    oracle: int = 12            # Taylor oracle generators
    complex: int = 2_000_000    # simplices in one order complex
    budget: int = 200_000       # Buchberger pair reductions
    search: int = 4096          # complexes enumerated by necessity_search


def _parse(text):
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, _, value = item.partition("=")
        key = key.strip()
        if key not in Caps.__dataclass_fields__:
            raise ValueError(f"unknown cap {key!r} in {ENV_VAR}")
        out[key] = int(value)
    return out


def get_caps() -> Caps:
    """Current caps, re-reading the environment on every call."""
    return replace(Caps(), **_parse(os.environ.get(ENV_VAR, "")))
