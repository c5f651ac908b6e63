"""Resource cutoffs.

Every cutoff can be overridden through an environment variable read at
import time; :func:`set_cutoffs` changes them at runtime.

==================================  =======  ==========================================
variable                            default  bounds
==================================  =======  ==========================================
``EDGEIDEAL_ENUM_CUTOFF``           25       vertices for independent-set enumeration
``EDGEIDEAL_ORACLE_CUTOFF``         16       variables for the Hochster oracle
``EDGEIDEAL_VD_CUTOFF``             20       vertices for vertex decomposability
``EDGEIDEAL_FACE_BUDGET``           200000   faces of a single simplicial complex
``EDGEIDEAL_CLIQUE_EDGE_CUTOFF``    600      edges entering the 3-disjoint clique search
``EDGEIDEAL_SEARCH_CUTOFF``         20       vertices for bouquet / domination searches
==================================  =======  ==========================================
"""
from __future__ import annotations

import dataclasses
import os

ENV_PREFIX = "EDGEIDEAL_"


@dataclasses.dataclass(frozen=True)
class Cutoffs:
    enumeration: int = 25
    oracle: int = 16
    decomposability: int = 20
    face_budget: int = 200_000
    clique_edges: int = 600
    search: int = 20

    @classmethod
    def from_env(cls, environ=None) -> "Cutoffs":
        environ = os.environ if environ is None else environ
        names = {
            "enumeration": "ENUM_CUTOFF",
            "oracle": "ORACLE_CUTOFF",
            "decomposability": "VD_CUTOFF",
            "face_budget": "FACE_BUDGET",
            "clique_edges": "CLIQUE_EDGE_CUTOFF",
            "search": "SEARCH_CUTOFF",
        }
        values = {}
        for field, suffix in names.items():
            raw = environ.get(ENV_PREFIX + suffix)
            if raw is not None:
                try:
                    values[field] = int(raw)
                except ValueError:
                    raise ValueError(f"{ENV_PREFIX + suffix} must be an integer, got {raw!r}") from None
        return cls(**values)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


CUTOFFS = Cutoffs.from_env()


def set_cutoffs(**changes) -> Cutoffs:
    """Replace selected cutoffs; returns the previous settings."""
    global CUTOFFS
    previous = CUTOFFS
    CUTOFFS = dataclasses.replace(CUTOFFS, **changes)
    return previous
