"""Module files (.mod.json) and inline module expressions.

A module file is a JSON object with keys "algebra" (informational path
to the .qa source), "dim" (integer dimension vector) and "arrows"
(arrow name -> row-major matrix; entries are ints or "p/q" strings).
Expressions like "S(2)+S(3)" or "P(1)^2+I(2)" name sums of standard
modules directly on the command line.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .fields import QQ
from .linalg import Matrix
from .reps import Representation, check_relations, direct_sum, injective, projective, simple


class ModuleFormatError(ValueError):
    pass


def _parse_scalar(field, x):
    if isinstance(x, int):
        return field.from_int(x)
    if isinstance(x, str):
        return field.from_fraction(Fraction(x))
    raise ModuleFormatError(f"matrix entries must be ints or 'p/q' strings, got {x!r}")


def module_from_dict(algebra, data, field=QQ, validate=True):
    if "dim" not in data:
        raise ModuleFormatError("module file is missing 'dim'")
    dims = data["dim"]
    if not isinstance(dims, list) or len(dims) != algebra.quiver.n or any(
        not isinstance(d, int) or d < 0 for d in dims
    ):
        raise ModuleFormatError("'dim' must be a vector of non-negative ints, one per vertex")
    arrows = {}
    raw = data.get("arrows", {})
    for name, grid in raw.items():
        arrow = algebra.quiver.by_name.get(name)
        if arrow is None:
            raise ModuleFormatError(f"unknown arrow {name!r} in module file")
        nrows, ncols = dims[arrow.target - 1], dims[arrow.source - 1]
        if len(grid) != nrows or any(len(r) != ncols for r in grid):
            raise ModuleFormatError(
                f"arrow {name!r} matrix must be {nrows}x{ncols} (target x source)"
            )
        arrows[name] = Matrix(field, [[_parse_scalar(field, x) for x in r] for r in grid],
                              ncols)
    m = Representation(algebra, field, tuple(dims), arrows)
    if validate:
        check_relations(m)
    return m


def load_module_file(algebra, path, field=QQ, validate=True):
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return module_from_dict(algebra, data, field, validate)


def module_to_dict(m: Representation, algebra_path=""):
    f = m.field
    return {
        "algebra": algebra_path,
        "dim": list(m.dims),
        "arrows": {
            name: [[f.to_json(x) for x in row] for row in mat.rows]
            for name, mat in m.arrows.items()
        },
    }


def save_module_file(m: Representation, path, algebra_path=""):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(module_to_dict(m, algebra_path), fh, indent=1, sort_keys=True)
        fh.write("\n")


_TERM_RE = re.compile(r"^([SPI])\((\d+)\)(?:\^(\d+))?$")


def module_from_expr(algebra, expr, field=QQ):
    """Sums of standard modules: e.g. 'S(2)+S(3)', 'P(1)^2+I(2)'."""
    makers = {"S": simple, "P": projective, "I": injective}
    parts = []
    for raw in expr.replace(" ", "").split("+"):
        m = _TERM_RE.match(raw)
        if not m:
            raise ModuleFormatError(
                f"cannot parse module term {raw!r}; expected S(i), P(i) or I(i) "
                "with an optional ^power"
            )
        kind, vertex, power = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        if vertex not in algebra.idempotent_index:
            raise ModuleFormatError(f"vertex {vertex} does not exist in this algebra")
        parts.extend([makers[kind](algebra, vertex, field)] * power)
    if not parts:
        raise ModuleFormatError("empty module expression")
    return direct_sum(parts)


def load_module_arg(algebra, arg, field=QQ):
    """A module argument is a .mod.json path or an inline expression."""
    if arg.endswith(".json"):
        return load_module_file(algebra, arg, field)
    return module_from_expr(algebra, arg, field)
