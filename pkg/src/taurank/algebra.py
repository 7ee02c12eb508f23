"""Finite-dimensional path algebra quotients in structure-constant form.

`build_algebra` quotients the path algebra by the two-sided ideal the
relations generate: the relation set is closed level by level under
left/right multiplication by arrows, echelonized per (source, target)
pair, and the surviving path residues become the basis.  Products are
stored as a structure-constant table; ideals, quotient algebras and the
opposite algebra all operate on that table, so quotient algebras go
through the exact same representation-theoretic code paths as quiver
presentations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, intersect_row_spaces
from .fields import QQ
from .quiver import Quiver, RelationPoly, QuiverSyntaxError


class NotFiniteDimensional(RuntimeError):
    pass


@dataclass(frozen=True)
class BasisElement:
    """Residue of a path: word in composition order (after-convention)."""

    source: int
    target: int
    word: tuple  # arrow names; empty for the idempotent e_source

    @property
    def length(self):
        return len(self.word)

    def label(self):
        return "*".join(self.word) if self.word else f"e{self.source}"


def _word_key(quiver, source, word):
    return (len(word), tuple(quiver.arrow_index[a] for a in word), source)


class _TipTable:
    """Echelonized ideal vectors keyed by their leading path."""

    def __init__(self, quiver):
        self.quiver = quiver
        self.by_tip = {}  # (source, word) -> dict[(source, word)] = Fraction

    def order_key(self, key):
        source, word = key
        return _word_key(self.quiver, source, word)

    def reduce(self, vec):
        """Fully reduce vec (dict key->coeff) against the table."""
        vec = {k: c for k, c in vec.items() if c != 0}
        while True:
            hit = None
            for k in sorted(vec, key=self.order_key, reverse=True):
                if k in self.by_tip:
                    hit = k
                    break
            if hit is None:
                return vec
            g = self.by_tip[hit]
            c = vec[hit] / g[hit]
            for k2, c2 in g.items():
                s = vec.get(k2, 0) - c * c2
                if s:
                    vec[k2] = s
                else:
                    vec.pop(k2, None)

    def insert(self, vec):
        """Reduce and insert; returns the new tip key or None if vec died."""
        vec = self.reduce(vec)
        if not vec:
            return None
        tip = max(vec, key=self.order_key)
        self.by_tip[tip] = vec
        return tip


def build_algebra(quiver: Quiver, relations, max_len: int = 30, validate: bool = True):
    """Construct KQ/I with the length-graded residue basis.

    Raises NotFiniteDimensional if path residues still survive at
    max_len.  With validate=True the associativity of the structure
    constants is spot-checked exhaustively over the basis.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    for rel in relations:
        if not isinstance(rel, RelationPoly):
            raise TypeError("relations must be RelationPoly instances")

    table = _TipTable(quiver)
    arrows = quiver.arrows
    # pending[length] = vectors whose lead has that length
    pending = {}

    def vec_of_relation(rel):
        return {(rel.source, w): Fraction(c) for c, w in rel.terms}

    def schedule(vec):
        if not vec:
            return
        tip = max(vec, key=table.order_key)
        pending.setdefault(len(tip[1]), []).append(vec)

    for rel in relations:
        schedule(vec_of_relation(rel))

    def left_mult(arrow, vec):
        out = {}
        for (src, word), c in vec.items():
            tgt = quiver.word_target(word) if word else src
            if tgt == arrow.source:
                out[(src, (arrow.name,) + word)] = c
        return out

    def right_mult(vec, arrow):
        out = {}
        for (src, word), c in vec.items():
            if src == arrow.target:
                out[(arrow.source, word + (arrow.name,))] = c
        return out

    def drain(upto):
        """Process all pending vectors with lead length <= upto."""
        while True:
            levels = sorted(l for l in pending if l <= upto)
            if not levels:
                return
            lvl = levels[0]
            vecs = pending.pop(lvl)
            for vec in vecs:
                tip = table.insert(vec)
                if tip is None:
                    continue
                g = table.by_tip[tip]
                if len(tip[1]) + 1 <= max_len:
                    for a in arrows:
                        schedule(left_mult(a, g))
                        schedule(right_mult(g, a))

    # survivors per length; terminate at the first empty level
    survivors = {0: [(i, ()) for i in quiver.vertices]}
    nilpotency = None
    for length in range(1, max_len + 1):
        drain(length)
        prev = survivors[length - 1]
        level = []
        for (src, word) in prev:
            tgt = quiver.word_target(word) if word else src
            for a in arrows:
                if a.source == tgt:
                    key = (src, (a.name,) + word)
                    if key not in table.by_tip:
                        level.append(key)
        level.sort(key=table.order_key)
        survivors[length] = level
        if not level:
            nilpotency = length
            break
    if nilpotency is None:
        raise NotFiniteDimensional(
            f"path residues still survive at length {max_len}; "
            "not finite-dimensional within max_len"
        )

    basis = []
    for length in range(nilpotency):
        for (src, word) in survivors[length]:
            tgt = quiver.word_target(word) if word else src
            basis.append(BasisElement(src, tgt, word))
    index = {(b.source, b.word): i for i, b in enumerate(basis)}

    # left multiplication by an arrow on a reduced vector, as basis coords
    def reduce_to_coords(vec):
        vec = table.reduce(vec)
        out = {}
        for key, c in vec.items():
            if key not in index:
                raise AssertionError(f"unreduced path {key} escaped the tip table")
            out[index[key]] = out.get(index[key], Fraction(0)) + c
        return {k: c for k, c in out.items() if c}

    alg = Algebra(
        quiver=quiver,
        basis=basis,
        relations=list(relations),
        _reduce_word=lambda src, word: reduce_to_coords({(src, word): Fraction(1)}),
    )
    if validate:
        alg._validate()
    return alg


class Algebra:
    """Basic algebra with a path-residue basis and structure constants.

    Built either from a quiver presentation (`build_algebra`) or as a
    quotient of another Algebra.  Elements are sparse dicts index->Fraction
    over `basis`.
    """

    def __init__(self, quiver, basis, relations=None, _reduce_word=None,
                 parent=None, parent_ideal=None, _products=None,
                 _arrow_elements=None):
        self.quiver = quiver
        self.basis = list(basis)
        self.relations = relations or []
        self.dim = len(self.basis)
        self.parent = parent
        self.parent_ideal = parent_ideal
        self.index = {(b.source, b.word): i for i, b in enumerate(self.basis)}
        self.idempotent_index = {}
        for i, b in enumerate(self.basis):
            if b.length == 0:
                self.idempotent_index[b.source] = i
        self.vertices = sorted(self.idempotent_index)
        self._op = None
        if _products is not None:
            self.products = _products
        else:
            self.products = self._build_products(_reduce_word)
        if _arrow_elements is not None:
            self.arrow_element_cache = dict(_arrow_elements)
        else:
            # arrows of a presentation are always basis residues
            self.arrow_element_cache = {}
            for a in quiver.arrows:
                key = (a.source, (a.name,))
                self.arrow_element_cache[a.name] = (
                    {self.index[key]: Fraction(1)} if key in self.index else {}
                )

    # -- construction helpers -----------------------------------------

    def _image_of_word(self, source, word):
        """Coordinates of a parent-quiver path residue in this algebra."""
        key = (source, word)
        if key in self.index:
            return {self.index[key]: Fraction(1)}
        # multiply out arrow by arrow via the product table
        vec = {self.idempotent_index[source]: Fraction(1)} \
            if source in self.idempotent_index else {}
        for name in reversed(word):
            nxt = {}
            for i, c in vec.items():
                img = self.arrow_left_mult(name, i)
                for j, c2 in img.items():
                    s = nxt.get(j, 0) + c * c2
                    if s:
                        nxt[j] = s
                    else:
                        nxt.pop(j, None)
            vec = nxt
            if not vec:
                break
        return vec

    def arrow_left_mult(self, name, j):
        """Coordinates of (arrow `name`) * basis[j]."""
        a = self.arrow_element_cache[name]
        out = {}
        for i, c in a.items():
            prod = self.products.get((i, j))
            if prod:
                for k, c2 in prod.items():
                    s = out.get(k, 0) + c * c2
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def _build_products(self, reduce_word):
        """Structure constants via NF of concatenated words (arrow peeling)."""
        products = {}
        # memo: left multiplication by an arrow on a basis index
        memo = {}

        def arrow_mult(name, j):
            key = (name, j)
            if key in memo:
                return memo[key]
            b = self.basis[j]
            arrow = self.quiver.by_name[name]
            if arrow.source != b.target:
                memo[key] = {}
                return {}
            out = reduce_word(b.source, (name,) + b.word)
            memo[key] = out
            return out

        def elem_arrow_peel(word, j):
            vec = {j: Fraction(1)}
            for name in reversed(word):
                nxt = {}
                for i, c in vec.items():
                    for k, c2 in arrow_mult(name, i).items():
                        s = nxt.get(k, 0) + c * c2
                        if s:
                            nxt[k] = s
                        else:
                            nxt.pop(k, None)
                vec = nxt
                if not vec:
                    break
            return vec

        for i, bi in enumerate(self.basis):
            for j, bj in enumerate(self.basis):
                if bi.source != bj.target:
                    continue
                if bi.length == 0:
                    vec = {j: Fraction(1)}
                elif bj.length == 0:
                    vec = {i: Fraction(1)}
                else:
                    vec = elem_arrow_peel(bi.word, j)
                if vec:
                    products[(i, j)] = vec
        return products

    def _validate(self):
        for i in self.quiver.vertices:
            if i not in self.idempotent_index:
                raise AssertionError(f"missing idempotent e{i}")
        for (i, j), vec in self.products.items():
            bi, bj = self.basis[i], self.basis[j]
            for k in vec:
                bk = self.basis[k]
                if bk.source != bj.source or bk.target != bi.target:
                    raise AssertionError("product leaves its (source,target) block")
        # exhaustive associativity spot-check on the basis
        if self.dim <= 24:
            idxs = range(self.dim)
            for i in idxs:
                for j in idxs:
                    ij = self.products.get((i, j))
                    for k in idxs:
                        jk = self.products.get((j, k))
                        left = {}
                        if ij:
                            for m, c in ij.items():
                                for t, c2 in self.products.get((m, k), {}).items():
                                    left[t] = left.get(t, 0) + c * c2
                        right = {}
                        if jk:
                            for m, c in jk.items():
                                for t, c2 in self.products.get((i, m), {}).items():
                                    right[t] = right.get(t, 0) + c * c2
                        left = {t: c for t, c in left.items() if c}
                        right = {t: c for t, c in right.items() if c}
                        if left != right:
                            raise AssertionError(
                                f"associativity fails on basis triple ({i},{j},{k})"
                            )

    # -- elements -------------------------------------------------------

    def zero_element(self):
        return {}

    def idempotent(self, i):
        return {self.idempotent_index[i]: Fraction(1)}

    def one(self):
        return {j: Fraction(1) for j in self.idempotent_index.values()}

    def arrow_element(self, name):
        return dict(self.arrow_element_cache[name])

    def element_from_terms(self, terms):
        """Terms: (coeff, word) with word a tuple of arrow names, or
        (coeff, ("e", i)) for idempotents."""
        out = {}
        for coeff, word in terms:
            coeff = Fraction(coeff)
            if len(word) == 2 and word[0] == "e":
                vec = self.idempotent(int(word[1]))
            else:
                for name in word:
                    self.quiver.arrow(name)
                if not self.quiver.word_is_composable(word):
                    raise QuiverSyntaxError(f"non-composable path {'*'.join(word)!r}")
                vec = self._image_of_word(self.quiver.word_source(word), tuple(word))
            for k, c in vec.items():
                s = out.get(k, 0) + coeff * c
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def multiply(self, x, y):
        out = {}
        for j, cy in y.items():
            for i, cx in x.items():
                prod = self.products.get((i, j))
                if prod:
                    c = cx * cy
                    for k, ck in prod.items():
                        s = out.get(k, 0) + c * ck
                        if s:
                            out[k] = s
                        else:
                            out.pop(k, None)
        return out

    def generator_elements(self):
        """Idempotents plus arrow images; they generate the algebra."""
        gens = [self.idempotent(i) for i in self.vertices]
        gens += [self.arrow_element(a.name) for a in self.quiver.arrows
                 if self.arrow_element_cache[a.name]]
        return gens

    def dims_of_projective(self, i):
        """Dimension vector of P(i) = A e_i (basis: residues with source i)."""
        dims = [0] * self.quiver.n
        for b in self.basis:
            if b.source == i:
                dims[b.target - 1] += 1
        return tuple(dims)

    # -- derived algebras -------------------------------------------------

    def opposite(self):
        """Same basis with reversed tags and transposed products."""
        if self._op is not None:
            return self._op
        rev_quiver = self.quiver.reversed()
        op_basis = [
            BasisElement(b.target, b.source, tuple(reversed(b.word))) for b in self.basis
        ]
        op_products = {(j, i): dict(vec) for (i, j), vec in self.products.items()}
        op = Algebra(
            quiver=rev_quiver,
            basis=op_basis,
            relations=None,
            _products=op_products,
            _arrow_elements={n: dict(v) for n, v in self.arrow_element_cache.items()},
        )
        op._op = self
        self._op = op
        return op

    def radical(self):
        rows = []
        for i, b in enumerate(self.basis):
            if b.length >= 1:
                v = [Fraction(0)] * self.dim
                v[i] = Fraction(1)
                rows.append(v)
        return Ideal(self, rows, closed=True)

    def quotient(self, ideal: "Ideal"):
        """Quotient algebra A/I plus the vertex projection map.

        The quotient keeps the parent quiver; vertices whose idempotent
        lies in I are dropped from the surviving vertex list and every
        module over the quotient has dimension 0 there.
        """
        if ideal.algebra is not self:
            raise ValueError("ideal belongs to a different algebra")
        if ideal.dim == self.dim:
            raise ValueError("cannot quotient by the whole algebra (I = A)")
        pivots = set(ideal.pivots())
        keep = [i for i in range(self.dim) if i not in pivots]
        new_index = {old: new for new, old in enumerate(keep)}
        for i in self.vertices:
            e = self.idempotent_index[i]
            # e_i in I forces its whole Peirce block in; membership check:
            if ideal.contains(self.idempotent(i)) and e in new_index:
                raise AssertionError("idempotent inside ideal survived echelon")
        basis = [self.basis[i] for i in keep]

        def project(vec):
            red = ideal.reduce(vec)
            return {new_index[k]: c for k, c in red.items()}

        products = {}
        for (i, j), vec in self.products.items():
            if i in new_index and j in new_index:
                pv = project(vec)
                if pv:
                    products[(new_index[i], new_index[j])] = pv
        arrow_elements = {
            a.name: project(self.arrow_element(a.name)) for a in self.quiver.arrows
        }
        quot = Algebra(
            quiver=self.quiver,
            basis=basis,
            relations=self.relations,
            parent=self,
            parent_ideal=ideal,
            _products=products,
            _arrow_elements=arrow_elements,
        )
        vertex_map = {
            i: i for i in self.vertices if i in quot.idempotent_index
        }
        return quot, vertex_map

    def root(self):
        return self if self.parent is None else self.parent.root()

    def __repr__(self):
        return f"Algebra(dim {self.dim} on {self.quiver!r})"


class Ideal:
    """Two-sided ideal, stored as a canonical reduced echelon span."""

    def __init__(self, algebra: Algebra, spanning_rows, closed=False):
        self.algebra = algebra
        rows = [list(r) for r in spanning_rows]
        if rows and not closed:
            rows = self._close(rows)
        self.rows = self._canonical(rows)
        self.dim = len(self.rows)

    @staticmethod
    def zero(algebra):
        return Ideal(algebra, [], closed=True)

    @staticmethod
    def from_generators(algebra, elements):
        rows = []
        for el in elements:
            v = [Fraction(0)] * algebra.dim
            for k, c in el.items():
                v[k] = c
            rows.append(v)
        return Ideal(algebra, rows)

    def _canonical(self, rows):
        if not rows:
            return []
        m = Matrix(QQ, rows, self.algebra.dim)
        return m.row_space_rows()

    def _close(self, rows):
        """Close the span under multiplication by algebra generators."""
        alg = self.algebra
        gens = alg.generator_elements()
        span = Matrix(QQ, rows, alg.dim).row_space_rows()
        while True:
            new_rows = []
            current = Matrix(QQ, span, alg.dim) if span else None
            for r in span:
                el = {i: c for i, c in enumerate(r) if c}
                for g in gens:
                    for prod in (alg.multiply(g, el), alg.multiply(el, g)):
                        if prod:
                            v = [Fraction(0)] * alg.dim
                            for k, c in prod.items():
                                v[k] = c
                            new_rows.append(v)
            if not new_rows:
                return span
            stacked = span + new_rows
            closed = Matrix(QQ, stacked, alg.dim).row_space_rows()
            if len(closed) == len(span):
                return closed
            span = closed

    def pivots(self):
        out = []
        for r in self.rows:
            for j, x in enumerate(r):
                if x != 0:
                    out.append(j)
                    break
        return out

    def reduce(self, element):
        """Normal form of a sparse element modulo the ideal."""
        vec = dict(element)
        for r, p in zip(self.rows, self.pivots()):
            c = vec.get(p)
            if c:
                for j, x in enumerate(r):
                    if x:
                        s = vec.get(j, 0) - c * x
                        if s:
                            vec[j] = s
                        else:
                            vec.pop(j, None)
        return vec

    def contains(self, element):
        return not self.reduce(element)

    def is_zero(self):
        return self.dim == 0

    def intersect(self, other: "Ideal"):
        if other.algebra is not self.algebra:
            raise ValueError("ideals over different algebras")
        rows = intersect_row_spaces(QQ, self.rows, other.rows, self.algebra.dim)
        return Ideal(self.algebra, rows, closed=True)

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and other.algebra is self.algebra
            and other.rows == self.rows
        )

    def __repr__(self):
        return f"Ideal(dim {self.dim} of {self.algebra!r})"
