"""Quantum minors and exact linear relations between their products.

A quantum minor indexed by rows I = (i_1 < ... < i_t) and columns
J = (j_1 < ... < j_t) is

    [I|J] = sum over permutations s of (-q)^(inversions of s) *
            X_{i_s(1), j_1} * ... * X_{i_s(t), j_t}.

Relation discovery works per multidegree: products of minors with a
common multidegree span a finite-dimensional space of normal words, and
exact kernel computation over Q(q) finds every linear dependency.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .coeffield import ONE, ZERO, LaurentQ, q_power, solve_kernel
from .errors import (
    InhomogeneousInput,
    PreconditionViolated,
    ShapeMismatch,
    VerificationFailed,
)
from .ncpoly import NcPoly, Shape, check_shape, nc_mul

IndexSet = tuple[int, ...]


def index_set(values: Iterable[int]) -> IndexSet:
    out = tuple(int(v) for v in values)
    if not out:
        raise ValueError("empty index set")
    if any(v < 1 for v in out):
        raise ValueError(f"indices must be positive: {out}")
    if any(a >= b for a, b in zip(out, out[1:])):
        raise ValueError(f"indices must be strictly increasing: {out}")
    return out


class IndexPair(NamedTuple):
    """Row and column index sets of a quantum minor; equal sizes."""

    rows: IndexSet
    cols: IndexSet


def index_pair(rows: Iterable[int], cols: Iterable[int]) -> IndexPair:
    r = index_set(rows)
    c = index_set(cols)
    if len(r) != len(c):
        raise ValueError(f"row and column sets differ in size: {r} vs {c}")
    return IndexPair(r, c)


def format_index_set(s: IndexSet) -> str:
    return "[" + ",".join(map(str, s)) + "]"


def format_index_pair(p: IndexPair) -> str:
    return "[" + ",".join(map(str, p.rows)) + "|" + ",".join(map(str, p.cols)) + "]"


_SET_RE = re.compile(r"^\[([0-9, ]+)\]$")
_PAIR_RE = re.compile(r"^\[([0-9, ]+)\|([0-9, ]+)\]$")


def parse_index_set(text: str) -> IndexSet:
    m = _SET_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse index set {text!r}; expected like [1,3,6]")
    return index_set(int(x) for x in m.group(1).split(","))


def parse_index_pair(text: str) -> IndexPair:
    m = _PAIR_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse index pair {text!r}; expected like [1,2|1,3]")
    return index_pair(
        (int(x) for x in m.group(1).split(",")),
        (int(x) for x in m.group(2).split(",")),
    )


def _inversions(perm: Sequence[int]) -> int:
    return sum(
        1
        for a, b in itertools.combinations(range(len(perm)), 2)
        if perm[a] > perm[b]
    )


_MINOR_CACHE: dict[tuple[IndexPair, Shape], NcPoly] = {}


def quantum_minor(pair: IndexPair, shape: Shape) -> NcPoly:
    """The quantum minor [I|J] as a normal-form element."""
    shape = check_shape(shape)
    pair = index_pair(pair.rows, pair.cols) if not isinstance(pair, IndexPair) else pair
    key = (pair, shape)
    hit = _MINOR_CACHE.get(key)
    if hit is not None:
        return hit
    m, n = shape
    rows, cols = pair
    if rows[-1] > m or cols[-1] > n:
        raise ShapeMismatch(f"minor {format_index_pair(pair)} outside shape {shape}")
    out = NcPoly(shape)
    for perm in itertools.permutations(range(len(rows))):
        word = tuple((rows[perm[k]], cols[k]) for k in range(len(rows)))
        coeff = q_power(_inversions(perm))
        if _inversions(perm) % 2:
            coeff = -coeff
        out = out + NcPoly.from_word(word, shape, coeff)
    _MINOR_CACHE[key] = out
    return out


def maximal_minor(cols: Iterable[int], shape: Shape) -> NcPoly:
    """The minor on all m rows and the given m columns."""
    m, _ = check_shape(shape)
    cols = index_set(cols)
    if len(cols) != m:
        raise ValueError(f"maximal minor needs {m} columns, got {cols}")
    return quantum_minor(IndexPair(tuple(range(1, m + 1)), cols), shape)


# ----------------------------------------------------------------------
# products and relations

Product = tuple[LaurentQ, IndexPair, Optional[IndexPair]]


def _product_poly(left: IndexPair, right: Optional[IndexPair], shape: Shape) -> NcPoly:
    p = quantum_minor(left, shape)
    if right is not None:
        p = nc_mul(p, quantum_minor(right, shape))
    return p


def _product_multidegree(left: IndexPair, right: Optional[IndexPair], shape: Shape):
    m, n = shape
    rows = [0] * m
    cols = [0] * n
    for pair in (left, right):
        if pair is None:
            continue
        for i in pair.rows:
            rows[i - 1] += 1
        for j in pair.cols:
            cols[j - 1] += 1
    return (tuple(rows), tuple(cols))


@dataclass(frozen=True)
class MinorRelation:
    """An exact identity  sum_s coeff_s * left_s * right_s = 0.

    right_s may be None for a bare-minor term, which keeps Laplace
    developments and mixed-degree identities in one type.
    """

    shape: Shape
    terms: tuple[Product, ...]
    verified: bool = False

    def expand(self) -> NcPoly:
        total = NcPoly(self.shape)
        for coeff, left, right in self.terms:
            total = total + _product_poly(left, right, self.shape).scale(coeff)
        return total

    def verify(self) -> "MinorRelation":
        if not self.expand().is_zero():
            raise VerificationFailed(f"relation does not vanish: {self}")
        return MinorRelation(self.shape, self.terms, verified=True)

    def __str__(self):
        if not self.terms:
            return "0 = 0"
        parts = []
        for coeff, left, right in self.terms:
            frag = format_index_pair(left)
            if right is not None:
                frag += "*" + format_index_pair(right)
            if coeff == ONE:
                text = frag
            elif coeff.is_unit() and next(iter(coeff.items()))[1] > 0:
                text = f"{coeff}*{frag}"
            else:
                text = f"({coeff})*{frag}"
            parts.append(text)
        return " + ".join(parts) + " = 0"

    def to_json(self) -> str:
        payload = {
            "shape": list(self.shape),
            "verified": self.verified,
            "terms": [
                {
                    "coeff": str(coeff),
                    "left": [list(left.rows), list(left.cols)],
                    "right": None if right is None else [list(right.rows), list(right.cols)],
                }
                for coeff, left, right in self.terms
            ],
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "MinorRelation":
        payload = json.loads(text)
        terms = []
        for t in payload["terms"]:
            left = index_pair(*t["left"])
            right = None if t["right"] is None else index_pair(*t["right"])
            terms.append((LaurentQ.parse(t["coeff"]), left, right))
        rel = cls(tuple(payload["shape"]), tuple(terms))
        return rel.verify() if payload.get("verified") else rel


def find_relations(
    products: Sequence[tuple[IndexPair, Optional[IndexPair]]], shape: Shape
) -> list[MinorRelation]:
    """All linear dependencies among the given minor products.

    The products must share a multidegree.  Returns one verified
    relation per kernel basis vector, in deterministic order.
    """
    shape = check_shape(shape)
    if not products:
        return []
    mds = {_product_multidegree(left, right, shape) for left, right in products}
    if len(mds) != 1:
        raise InhomogeneousInput(f"products carry {len(mds)} distinct multidegrees")
    polys = [_product_poly(left, right, shape) for left, right in products]
    support = sorted(set().union(*(p.terms.keys() for p in polys)))
    rows = [[p.terms.get(w, ZERO) for p in polys] for w in support]
    relations = []
    for vec in solve_kernel(rows, ncols=len(products)):
        terms = tuple(
            (c, left, right)
            for c, (left, right) in zip(vec, products)
            if c
        )
        relations.append(MinorRelation(shape, terms).verify())
    return relations


# ----------------------------------------------------------------------
# the extension principle for relations among complementary minors


def muir_extend(relation: MinorRelation, p_rows: Iterable[int], q_cols: Iterable[int], n: int) -> MinorRelation:
    """Extend a vanishing sum of minor products by complementary indices.

    Given a verified relation among products [I|J][K|L] with all row
    sets inside P and all column sets inside Q (|P| = |Q|, subsets of
    {1..n}), the same coefficients give a vanishing sum of the extended
    products [I u Pc | J u Qc][K u Pc | L u Qc], where Pc and Qc are the
    complements of P and Q in {1..n}.  Both the input and the extension
    are re-verified by expansion in the n x n algebra.
    """
    P = index_set(p_rows)
    Q = index_set(q_cols)
    if len(P) != len(Q):
        raise PreconditionViolated(f"|P| = {len(P)} differs from |Q| = {len(Q)}")
    if P[-1] > n or Q[-1] > n:
        raise PreconditionViolated(f"P or Q not contained in 1..{n}")
    pset, qset = set(P), set(Q)
    for _, left, right in relation.terms:
        for pair in (left, right):
            if pair is None:
                continue
            if not set(pair.rows) <= pset or not set(pair.cols) <= qset:
                raise PreconditionViolated(
                    f"term {format_index_pair(pair)} leaves rows {P} x cols {Q}"
                )
    pc = tuple(sorted(set(range(1, n + 1)) - pset))
    qc = tuple(sorted(set(range(1, n + 1)) - qset))
    ambient = MinorRelation((n, n), relation.terms)
    if not ambient.expand().is_zero():
        raise PreconditionViolated("input relation does not vanish in the n x n algebra")

    def extend(pair: Optional[IndexPair]) -> Optional[IndexPair]:
        if pair is None:
            return None
        return index_pair(sorted(pair.rows + pc), sorted(pair.cols + qc))

    extended = MinorRelation(
        (n, n),
        tuple((c, extend(left), extend(right)) for c, left, right in relation.terms),
    )
    if not extended.expand().is_zero():
        raise VerificationFailed("extended relation does not vanish")
    return MinorRelation(extended.shape, extended.terms, verified=True)


def scale_by_q(p: NcPoly) -> NcPoly:
    """The graded automorphism sending each generator X_ij to q*X_ij."""
    return NcPoly(p.shape, {w: c.shift(len(w)) for w, c in p.terms.items()})
