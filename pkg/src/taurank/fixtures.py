"""Bundled example algebras, embedded so the CLI needs no input files.

ALG-A: three vertices with triple arrows 2->1 and 3->2 and six quadratic
relations (the sign in a1*b3 + a3*b1 matters); the source of the
non-additive rank example.  ALG-B: A_3 with the single relation a*b.
ALG-B0: hereditary A_3.  ALG-C: a 2-vertex algebra with radical square
zero.  ALG-K: the Kronecker quiver.
"""

from __future__ import annotations

from .algebra import build_algebra
from .quiver import parse_quiver_file

ALG_A_QA = """\
# triple-arrow string with signed commutation relations
vertices: 1 2 3
arrow a1: 2 -> 1
arrow a2: 2 -> 1
arrow a3: 2 -> 1
arrow b1: 3 -> 2
arrow b2: 3 -> 2
arrow b3: 3 -> 2
relations:
a1*b1
a2*b2
a3*b3
a1*b2 - a2*b1
a1*b3 + a3*b1
a2*b3 - a3*b2
"""

ALG_B_QA = """\
# A_3 string algebra: 1 <- 2 <- 3 with a*b = 0
vertices: 1 2 3
arrow a: 2 -> 1
arrow b: 3 -> 2
relations:
a*b
"""

ALG_B0_QA = """\
# hereditary A_3: 1 <- 2 <- 3
vertices: 1 2 3
arrow a: 2 -> 1
arrow b: 3 -> 2
"""

ALG_C_QA = """\
# two vertices, arrows both ways, radical square zero
vertices: 1 2
arrow a: 1 -> 2
arrow b: 2 -> 1
arrow c: 2 -> 1
relations:
a*b
a*c
b*a
c*a
"""

ALG_K_QA = """\
# Kronecker quiver
vertices: 1 2
arrow a1: 2 -> 1
arrow a2: 2 -> 1
"""

FIXTURE_SOURCES = {
    "ALG-A": ALG_A_QA,
    "ALG-B": ALG_B_QA,
    "ALG-B0": ALG_B0_QA,
    "ALG-C": ALG_C_QA,
    "ALG-K": ALG_K_QA,
}

FIXTURE_NAMES = tuple(FIXTURE_SOURCES)

_cache = {}


def load_fixture(name: str):
    if name not in FIXTURE_SOURCES:
        raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}")
    if name not in _cache:
        quiver, relations = parse_quiver_file(FIXTURE_SOURCES[name])
        _cache[name] = build_algebra(quiver, relations)
    return _cache[name]
