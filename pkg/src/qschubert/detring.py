"""Generalized quantum determinantal rings.

The quantum matrix algebra carries the poset of all square minor labels
([I|J], sizes 1..m); products of quantum minors straighten into the
standard-monomial basis indexed by multichains, graded by total minor
size.  Quotients by the labels not above a chosen delta give the
generalized determinantal rings; the classical ideal of t x t minors is
the case delta = [1..t-1|1..t-1].

The module also verifies, degree by degree, the dehomogenization
transfer: the index map sends the matrix-minor poset isomorphically
onto the grassmannian labels below the top one, matrix minors map to
K-bar * M-bar^(-1) in the localized quotient, and straightening
commutes with that map.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .config import default_budget
from .coeffield import (
    ONE,
    ZERO,
    LaurentQ,
    matrix_rank,
    matrix_rank_at,
    solve_linear,
)
from .errors import (
    BudgetExceeded,
    NoRelationFound,
    PreconditionViolated,
    VerificationFailed,
)
from .minors import (
    IndexPair,
    MinorRelation,
    find_relations,
    format_index_pair,
    format_index_set,
    index_pair,
    index_set,
    quantum_minor,
)
from .ncpoly import NcPoly, nc_mul
from .poset import MinorPoset, delta_map, delta_map_top, leq_st
from .schubert import AlgElement, straighten_project

DetFactors = tuple[IndexPair, ...]


def det_is_standard(factors: DetFactors) -> bool:
    return all(leq_st(factors[k], factors[k + 1]) for k in range(len(factors) - 1))


def det_degree(factors: DetFactors) -> int:
    return sum(len(p.rows) for p in factors)


def det_content(factors: DetFactors, m: int, n: int):
    rows = [0] * m
    cols = [0] * n
    for p in factors:
        for i in p.rows:
            rows[i - 1] += 1
        for j in p.cols:
            cols[j - 1] += 1
    return (tuple(rows), tuple(cols))


_DET_CHAIN_CACHE: dict[tuple[int, int, int], list[DetFactors]] = {}


def det_standard_monomials(
    m: int, n: int, d: int, delta: Optional[IndexPair] = None
) -> list[DetFactors]:
    """Multichains of minor labels with total size d.

    delta restricts to labels above delta (the residual poset of the
    quotient ring).
    """
    key = (m, n, d)
    all_chains = _DET_CHAIN_CACHE.get(key)
    if all_chains is None:
        elems = MinorPoset.matrix(m, n).elements()
        all_chains = []

        def rec(prefix: DetFactors, last, rem: int):
            if rem == 0:
                all_chains.append(prefix)
                return
            for e in elems:
                if len(e.rows) <= rem and (last is None or leq_st(last, e)):
                    rec(prefix + (e,), e, rem - len(e.rows))

        rec((), None, d)
        _DET_CHAIN_CACHE[key] = all_chains
    if delta is None:
        return list(all_chains)
    return [
        ch for ch in all_chains if all(leq_st(delta, p) for p in ch)
    ]


_DET_CONTENT_CACHE: dict[tuple[int, int, int], dict] = {}


def _det_by_content(m: int, n: int, d: int):
    key = (m, n, d)
    hit = _DET_CONTENT_CACHE.get(key)
    if hit is None:
        hit = {}
        for mono in det_standard_monomials(m, n, d):
            hit.setdefault(det_content(mono, m, n), []).append(mono)
        _DET_CONTENT_CACHE[key] = hit
    return hit


_DET_NF_CACHE: dict[tuple[int, int, DetFactors], NcPoly] = {}


def det_monomial_normal_form(factors: DetFactors, m: int, n: int) -> NcPoly:
    key = (m, n, tuple(factors))
    hit = _DET_NF_CACHE.get(key)
    if hit is not None:
        return hit
    shape = (m, n)
    out = NcPoly.one(shape)
    for p in factors:
        out = nc_mul(out, quantum_minor(p, shape))
    _DET_NF_CACHE[key] = out
    return out


def det_dimension_check(
    m: int,
    n: int,
    max_deg: int = 3,
    q0s: Sequence[Fraction] = (Fraction(2), Fraction(1, 3)),
) -> dict:
    """Standard-monomial counts against exact degree-component ranks.

    For each total size d, spans the degree component with the normal
    forms of every product of minor labels of total size d and takes
    the matrix rank, over Q(q) and specialized at each q0.  All ranks
    must equal the multichain count, so the dimensions do not depend on
    the specialization.
    """
    elems = MinorPoset.matrix(m, n).elements()
    failures: list[str] = []
    rank_checks = []
    for d in range(max_deg + 1):
        seqs: list[DetFactors] = []

        def rec(prefix: DetFactors, rem: int):
            if rem == 0:
                seqs.append(prefix)
                return
            for e in elems:
                if len(e.rows) <= rem:
                    rec(prefix + (e,), rem - len(e.rows))

        rec((), d)
        count = len(det_standard_monomials(m, n, d))
        vectors = []
        coords: dict = {}
        for seq in seqs:
            vec = det_monomial_normal_form(seq, m, n).terms
            for k in vec:
                coords.setdefault(k, len(coords))
            vectors.append(vec)
        rows: list[list[LaurentQ]] = [
            [vec.get(k, ZERO) for vec in vectors] for k in coords
        ]
        generic = matrix_rank(rows)
        entry = {"degree": d, "standard_monomials": count, "generic_rank": generic}
        if generic != count:
            failures.append(f"degree {d}: generic rank {generic} != {count}")
        for q0 in q0s:
            evaluated = [[c.evaluate(q0) for c in row] for row in rows]
            r = matrix_rank_at(evaluated)
            entry[f"rank_at_{q0}"] = r
            if r != count:
                failures.append(f"degree {d}: rank at q={q0} is {r}, expected {count}")
        rank_checks.append(entry)
    return {
        "m": m,
        "n": n,
        "max_deg": max_deg,
        "rank_checks": rank_checks,
        "failures": failures,
        "ok": not failures,
    }


class DetAlgElement:
    """A linear combination of standard monomials in minor labels."""

    __slots__ = ("m", "n", "delta", "terms")

    def __init__(self, m: int, n: int, delta: Optional[IndexPair] = None, terms=None):
        self.m = m
        self.n = n
        self.delta = delta
        self.terms: dict[DetFactors, LaurentQ] = {}
        if terms:
            for f, c in terms.items():
                if c:
                    self.terms[tuple(f)] = c

    def _add_term(self, f: DetFactors, c: LaurentQ) -> None:
        s = self.terms.get(f, ZERO) + c
        if s:
            self.terms[f] = s
        else:
            self.terms.pop(f, None)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, DetAlgElement):
            return NotImplemented
        return (
            (self.m, self.n, self.delta) == (other.m, other.n, other.delta)
            and self.terms == other.terms
        )

    def __add__(self, other):
        out = DetAlgElement(self.m, self.n, self.delta, dict(self.terms))
        for f, c in other.terms.items():
            out._add_term(f, c)
        return out

    def scale(self, c: LaurentQ) -> "DetAlgElement":
        if not c:
            return DetAlgElement(self.m, self.n, self.delta)
        return DetAlgElement(
            self.m, self.n, self.delta, {f: c * x for f, x in self.terms.items()}
        )

    def expand(self) -> NcPoly:
        out = NcPoly((self.m, self.n))
        for f, c in self.terms.items():
            out = out + det_monomial_normal_form(f, self.m, self.n).scale(c)
        return out

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for f, c in self.sorted_terms():
            body = "*".join(format_index_pair(p) for p in f) if f else "1"
            if c == ONE:
                text = body
            elif c.is_unit() and not str(c).startswith("-"):
                text = f"{c}*{body}"
            else:
                text = f"({c})*{body}"
            parts.append(text)
        return " + ".join(parts)

    def __repr__(self):
        return f"DetAlgElement({self.m}, {self.n}, {self.delta}, {str(self)!r})"


_DET_STRAIGHTEN_CACHE: dict[tuple[int, int, DetFactors], DetAlgElement] = {}


def straighten_det(factors: Iterable[IndexPair], m: int, n: int) -> DetAlgElement:
    """Standard-monomial expansion of a product of quantum minors.

    Solved exactly inside the graded component fixed by the row and
    column content, then certified by re-expansion.
    """
    factors = tuple(
        p if isinstance(p, IndexPair) else index_pair(*p) for p in factors
    )
    key = (m, n, factors)
    hit = _DET_STRAIGHTEN_CACHE.get(key)
    if hit is not None:
        return hit
    if det_is_standard(factors):
        out = DetAlgElement(m, n, None, {factors: ONE})
        _DET_STRAIGHTEN_CACHE[key] = out
        return out
    d = det_degree(factors)
    candidates = _det_by_content(m, n, d).get(det_content(factors, m, n), [])
    budget = default_budget()
    if len(candidates) > budget.max_component:
        raise BudgetExceeded(
            f"{len(candidates)} candidate monomials exceed budget {budget.max_component}"
        )
    target = det_monomial_normal_form(factors, m, n)
    polys = [det_monomial_normal_form(c, m, n) for c in candidates]
    support = sorted(set().union(target.terms.keys(), *(p.terms.keys() for p in polys)))
    columns = [[p.terms.get(w, ZERO) for w in support] for p in polys]
    rhs = [target.terms.get(w, ZERO) for w in support]
    x = solve_linear(columns, rhs)
    if x is None:
        raise VerificationFailed(
            f"product {factors} does not lie in the standard-monomial span"
        )
    out = DetAlgElement(m, n, None, dict(zip(candidates, x)))
    if out.expand() != target:
        raise VerificationFailed(f"straightening of {factors} failed re-expansion")
    _DET_STRAIGHTEN_CACHE[key] = out
    return out


def project_det(e: DetAlgElement, delta: IndexPair) -> DetAlgElement:
    """Image in the quotient by the labels not above delta."""
    out = DetAlgElement(e.m, e.n, delta)
    for f, c in e.terms.items():
        if not f or leq_st(delta, f[0]):
            out._add_term(f, c)
    return out


def straighten_det_project(
    factors: Iterable[IndexPair], m: int, n: int, delta: Optional[IndexPair]
) -> DetAlgElement:
    ambient = straighten_det(factors, m, n)
    return ambient if delta is None else project_det(ambient, delta)


# ----------------------------------------------------------------------
# the classical determinantal case delta = [1..t-1|1..t-1]


def determinantal_delta(t: int) -> IndexPair:
    if t < 2:
        raise PreconditionViolated("need t >= 2 for a determinantal quotient")
    return index_pair(range(1, t), range(1, t))


def determinantal_ideal_check(t: int, m: int, n: int) -> bool:
    """Labels not above delta_t are exactly the minors of size >= t."""
    delta = determinantal_delta(t)
    poset = MinorPoset.matrix(m, n)
    cmpl = set(poset.ideal_complement(delta))
    expected = {p for p in poset.elements() if len(p.rows) >= t}
    return cmpl == expected


def a_t_generators(t: int, m: int, n: int) -> list[tuple[int, int]]:
    """Generators of the localization subalgebra: entries meeting the
    first t-1 rows or columns."""
    return [
        (i, j)
        for i in range(1, m + 1)
        for j in range(1, n + 1)
        if i <= t - 1 or j <= t - 1
    ]


def a_t_generator_count(t: int, m: int, n: int) -> int:
    return m * n - (m - t + 1) * (n - t + 1)


def a_t_gkdim(t: int, m: int, n: int) -> int:
    """Dimension of the localization subalgebra A_t."""
    return m * n - (m - t + 1) * (n - t + 1)


def delta_normality_check(t: int, m: int, n: int) -> dict:
    """delta = [1..t-1|1..t-1] conjugates each A_t generator into a
    pure q-power multiple: delta*g = q^c g*delta.

    Exact normal-form verification, recording the exponent per
    generator.
    """
    if t < 2:
        raise PreconditionViolated("need t >= 2")
    shape = (m, n)
    delta = quantum_minor(determinantal_delta(t), shape)
    exponents: dict[str, int] = {}
    failures: list[str] = []
    for (i, j) in a_t_generators(t, m, n):
        g = NcPoly.generator(i, j, shape)
        a = nc_mul(delta, g)
        b = nc_mul(g, delta)
        word, coeff = next(iter(a.sorted_terms()))
        other = b.coefficient(word)
        ok = False
        if other:
            ratio = coeff / other
            if ratio.is_unit():
                ((e, c),) = ratio.items()
                if c == 1 and a == b.scale(ratio):
                    exponents[f"X{i}{j}"] = e
                    ok = True
        if not ok:
            failures.append(f"delta is not q-normal past X{i}{j}")
    return {
        "t": t,
        "m": m,
        "n": n,
        "generators": len(exponents) + len(failures),
        "exponents": exponents,
        "failures": failures,
        "ok": not failures,
    }


# ----------------------------------------------------------------------
# Laplace development along the last row


def laplace_last_row(
    t: int, rows: Iterable[int], cols: Iterable[int], m: int, n: int
) -> MinorRelation:
    """Develop [rows|cols] along its last row.

    Returns the verified relation with the big minor first (coefficient
    one), followed by the products X_{i_t, c} * [rows - i_t | cols - c]
    in column order.
    """
    rows = index_set(rows)
    cols = index_set(cols)
    if len(rows) != t or len(cols) != t:
        raise PreconditionViolated(f"expected index sets of size t={t}")
    if t == 1:
        raise PreconditionViolated("a 1 x 1 minor has no development")
    shape = (m, n)
    big = index_pair(rows, cols)
    products: list[tuple[IndexPair, Optional[IndexPair]]] = [(big, None)]
    for c in cols:
        rest_cols = tuple(x for x in cols if x != c)
        products.append(
            (index_pair([rows[-1]], [c]), index_pair(rows[:-1], rest_cols))
        )
    relations = find_relations(products, shape)
    chosen = None
    for rel in relations:
        coeff = next((c for c, left, right in rel.terms if (left, right) == products[0]), None)
        if coeff:
            chosen = (rel, coeff)
            break
    if chosen is None:
        raise NoRelationFound(
            f"no development found for {format_index_pair(big)}"
        )
    rel, coeff = chosen
    inv = coeff.unit_inverse()
    terms = tuple((c * inv, left, right) for c, left, right in rel.terms)
    return MinorRelation(shape, terms).verify()


# ----------------------------------------------------------------------
# the dehomogenization correspondence


def dehom_correspondence_check(
    delta: IndexPair, m: int, n: int, max_deg: int = 2
) -> dict:
    """Degree-by-degree verification of the dehomogenization transfer.

    With gamma the image of delta and M the top label on 1..m+n:

    * the index map sends the labels not above delta onto the labels
      not above gamma, bijectively;
    * M-bar is normal in the Schubert quotient: M-bar K-bar =
      mu_K K-bar M-bar with mu_K a unit, for every residual K;
    * for residual pairs p1, p2 with |p1| + |p2| <= max_deg, the
      image of the straightening of p1 p2 agrees with the product of
      the images K1-bar M-bar^(-1) K2-bar M-bar^(-1) after clearing
      denominators by a common power of M-bar.
    """
    delta = index_pair(delta.rows, delta.cols)
    gm, gn = m, m + n
    gamma = delta_map(delta, m, n)
    top = delta_map_top(m, n)
    failures: list[str] = []
    dposet = MinorPoset.matrix(m, n)
    gposet = MinorPoset.grassmannian(gm, gn)

    # part one: the ideal correspondence
    image_of_ideal = sorted(delta_map(p, m, n) for p in dposet.ideal_complement(delta))
    gamma_ideal = sorted(x for x in gposet.ideal_complement(gamma))
    if image_of_ideal != gamma_ideal:
        failures.append("index map does not carry the quotient ideal across")

    # part two: normality scalars of the top label in the quotient
    mu: dict[tuple[int, ...], LaurentQ] = {}
    for K in gposet.residual(gamma):
        if K == top:
            mu[K] = ONE
            continue
        e = straighten_project((top, K), gm, gn, gamma)
        if set(e.terms.keys()) != {(K, top)}:
            failures.append(
                f"top label is not normal past {format_index_set(K)} in the quotient"
            )
            continue
        c = e.terms[(K, top)]
        if not c.is_unit():
            failures.append(f"normality scalar {c} at {format_index_set(K)} not a unit")
            continue
        mu[K] = c

    # part three: straightening transfers through the localization
    residual = dposet.residual(delta)
    checked = 0
    for p1, p2 in itertools.product(residual, repeat=2):
        total = len(p1.rows) + len(p2.rows)
        if total > max_deg:
            continue
        checked += 1
        F = straighten_det_project((p1, p2), m, n, delta)
        K1 = delta_map(p1, m, n)
        K2 = delta_map(p2, m, n)
        if K2 not in mu:
            continue
        clearing = max([2] + [len(ch) for ch in F.terms])
        lhs = straighten_project(
            (K1, K2) + (top,) * (clearing - 2), gm, gn, gamma
        ).scale(mu[K2].unit_inverse())
        rhs = AlgElement(gm, gn, gamma)
        bad = False
        for chain, c in F.terms.items():
            images = tuple(delta_map(r, m, n) for r in chain)
            # moving the j-th inverse top factor to the right crosses
            # each later image once: scalar prod mu_{K_j}^{-(j-1)}
            scalar = ONE
            for jpos in range(1, len(images)):
                scalar = scalar * mu[images[jpos]].unit_inverse() ** jpos
            rhs = rhs + straighten_project(
                images + (top,) * (clearing - len(images)), gm, gn, gamma
            ).scale(c * scalar)
        if lhs != rhs:
            failures.append(
                f"transfer fails for {format_index_pair(p1)} * {format_index_pair(p2)}"
            )
    return {
        "delta": format_index_pair(delta),
        "m": m,
        "n": n,
        "gamma": format_index_set(gamma),
        "max_deg": max_deg,
        "pairs_checked": checked,
        "failures": failures,
        "ok": not failures,
    }
