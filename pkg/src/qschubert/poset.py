"""The standard partial order on minor labels, and its combinatorics.

Two kinds of label are ordered here.  Index sets I = (i_1 < ... < i_m)
of a fixed size are compared componentwise; they label maximal minors
of the quantum grassmannian.  Index pairs ([I|J]) of varying size t are
compared by

    ([I|J]) <= ([K|L])  iff  t >= u, i_s <= k_s and j_s <= l_s for s <= u,

so larger minors sit lower.  On top of the order this module provides
rank and chain counts, ladders attached to a grassmannian label, the
index map identifying matrix minors with grassmannian labels, the
block/gap classifier for the Gorenstein property, and an independent
h-vector oracle for cross-checking it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Union

from .errors import HypothesisViolated, NotInResidualPoset, VerificationFailed
from .minors import IndexPair, IndexSet, index_pair, index_set

Label = Union[IndexSet, IndexPair]


def leq_st(a: Label, b: Label) -> bool:
    """The standard order; dispatches on the label kind."""
    if isinstance(a, IndexPair) or isinstance(b, IndexPair):
        if not (isinstance(a, IndexPair) and isinstance(b, IndexPair)):
            raise TypeError("cannot compare an index set with an index pair")
        t, u = len(a.rows), len(b.rows)
        if t < u:
            return False
        return all(a.rows[s] <= b.rows[s] for s in range(u)) and all(
            a.cols[s] <= b.cols[s] for s in range(u)
        )
    if len(a) != len(b):
        raise ValueError(f"index sets of different sizes: {a} vs {b}")
    return all(x <= y for x, y in zip(a, b))


def lt_st(a: Label, b: Label) -> bool:
    return a != b and leq_st(a, b)


def comparable(a: Label, b: Label) -> bool:
    return leq_st(a, b) or leq_st(b, a)


class MinorPoset:
    """The finite poset of minor labels for one algebra.

    kind "grassmannian": index sets of size m inside {1..n}, labelling
    the maximal quantum minors.  kind "matrix": index pairs of every
    size 1..m inside an m x n grid.
    """

    def __init__(self, kind: str, shape: tuple[int, int]):
        if kind not in ("grassmannian", "matrix"):
            raise ValueError(f"unknown poset kind {kind!r}")
        m, n = shape
        if kind == "grassmannian" and m > n:
            raise ValueError(f"grassmannian labels need m <= n, got {shape}")
        self.kind = kind
        self.shape = (int(m), int(n))
        self._elements: Optional[list[Label]] = None

    @classmethod
    def grassmannian(cls, m: int, n: int) -> "MinorPoset":
        return cls("grassmannian", (m, n))

    @classmethod
    def matrix(cls, m: int, n: int) -> "MinorPoset":
        return cls("matrix", (m, n))

    # ------------------------------------------------------------------

    def elements(self) -> list[Label]:
        if self._elements is None:
            m, n = self.shape
            if self.kind == "grassmannian":
                self._elements = [
                    tuple(c) for c in itertools.combinations(range(1, n + 1), m)
                ]
            else:
                out: list[Label] = []
                for t in range(1, m + 1):
                    for rows in itertools.combinations(range(1, m + 1), t):
                        for cols in itertools.combinations(range(1, n + 1), t):
                            out.append(IndexPair(rows, cols))
                out.sort(key=lambda p: (len(p.rows), p.rows, p.cols))
                self._elements = out
        return list(self._elements)

    def check_member(self, x: Label) -> Label:
        if self.kind == "grassmannian":
            x = index_set(x)
            m, n = self.shape
            if len(x) != m or x[-1] > n:
                raise ValueError(f"{x} is not a size-{m} subset of 1..{n}")
            return x
        x = index_pair(x.rows, x.cols)
        m, n = self.shape
        if len(x.rows) > m or x.rows[-1] > m or x.cols[-1] > n:
            raise ValueError(f"{x} does not fit in the {m} x {n} grid")
        return x

    def minimal(self) -> Label:
        m, _ = self.shape
        if self.kind == "grassmannian":
            return tuple(range(1, m + 1))
        return IndexPair(tuple(range(1, m + 1)), tuple(range(1, m + 1)))

    def residual(self, gamma: Optional[Label] = None) -> list[Label]:
        """Elements above gamma (all elements when gamma is None)."""
        if gamma is None:
            return self.elements()
        gamma = self.check_member(gamma)
        return [x for x in self.elements() if leq_st(gamma, x)]

    def ideal_complement(self, gamma: Label) -> list[Label]:
        """Elements NOT above gamma: the labels generating the quotient ideal."""
        gamma = self.check_member(gamma)
        return [x for x in self.elements() if not leq_st(gamma, x)]

    def upper_neighbours(self, x: Label) -> list[Label]:
        """Covers of x: minimal elements strictly above it."""
        x = self.check_member(x)
        above = [y for y in self.elements() if lt_st(x, y)]
        return [y for y in above if not any(lt_st(z, y) for z in above if z != y)]

    def maximum(self) -> Optional[Label]:
        """The greatest element if one exists (grassmannian posets have one)."""
        elems = self.elements()
        tops = [x for x in elems if all(leq_st(y, x) for y in elems)]
        return tops[0] if tops else None

    # ------------------------------------------------------------------
    # chains

    def rank(self, gamma: Optional[Label] = None) -> int:
        """Longest chain size in the residual poset of gamma."""
        elems = self.residual(gamma)
        order = {x: k for k, x in enumerate(elems)}
        below: list[list[int]] = [[] for _ in elems]
        for a, b in itertools.permutations(range(len(elems)), 2):
            if lt_st(elems[a], elems[b]):
                below[b].append(a)
        height = [0] * len(elems)

        def h(k: int) -> int:
            if height[k] == 0:
                height[k] = 1 + max((h(j) for j in below[k]), default=0)
            return height[k]

        return max((h(k) for k in range(len(elems))), default=0)

    def chain_counts(self, gamma: Optional[Label] = None) -> list[int]:
        """c_k = number of strictly increasing k-chains in the residual poset.

        c_0 = 1 by convention; the list runs up to the rank.
        """
        elems = self.residual(gamma)
        idx = range(len(elems))
        less: list[list[int]] = [
            [j for j in idx if lt_st(elems[j], elems[i])] for i in idx
        ]
        counts = [1]
        ending = {i: 1 for i in idx}
        while ending:
            counts.append(sum(ending.values()))
            ending = {
                i: s
                for i in idx
                if (s := sum(ending[j] for j in less[i] if j in ending))
            }
        return counts

    def multichains(self, d: int, gamma: Optional[Label] = None):
        """All nondecreasing chains of length d, lexicographic order."""
        elems = self.residual(gamma)

        def rec(prefix: tuple, last: Optional[Label], remaining: int):
            if remaining == 0:
                yield prefix
                return
            for e in elems:
                if last is None or leq_st(last, e):
                    yield from rec(prefix + (e,), e, remaining - 1)

        yield from rec((), None, d)

    def multichain_count(self, d: int, gamma: Optional[Label] = None) -> int:
        elems = self.residual(gamma)
        counts = {x: 1 for x in elems}
        for _ in range(d - 1):
            counts = {
                x: sum(c for y, c in counts.items() if leq_st(y, x)) for x in elems
            }
        return sum(counts.values()) if d >= 1 else 1


# ----------------------------------------------------------------------
# dimension formulas


def gkdim_grassmannian(gamma: IndexSet, m: int, n: int) -> int:
    """Dimension of the quantum Schubert quotient attached to gamma."""
    gamma = index_set(gamma)
    if len(gamma) != m or gamma[-1] > n:
        raise ValueError(f"{gamma} is not a size-{m} subset of 1..{n}")
    return m * (n - m) + m * (m + 1) // 2 - sum(gamma) + 1


def gkdim_matrix(delta: IndexPair, m: int, n: int) -> int:
    """Dimension of the quantum matrix quotient attached to delta."""
    r = len(delta.rows)
    return (m + n) * r - sum(delta.rows) - sum(delta.cols) + r


def rank_and_gkdim(
    poset: MinorPoset, gamma: Label
) -> tuple[int, int]:
    """(longest chain in the residual poset, closed-form dimension).

    The two must agree; a mismatch raises VerificationFailed.
    """
    m, n = poset.shape
    rk = poset.rank(gamma)
    if poset.kind == "grassmannian":
        dim = gkdim_grassmannian(gamma, m, n)
    else:
        dim = gkdim_matrix(gamma, m, n)
    if rk != dim:
        raise VerificationFailed(
            f"rank {rk} of the residual poset at {gamma} disagrees with "
            f"the dimension formula {dim}"
        )
    return rk, dim


# ----------------------------------------------------------------------
# ladders


def ladder_positions(gamma: IndexSet, m: int, n: int) -> list[tuple[int, int]]:
    """Grid positions (i, j) with j > gamma_{m+1-i} and j not in gamma."""
    gamma = index_set(gamma)
    out = []
    gset = set(gamma)
    for i in range(1, m + 1):
        threshold = gamma[m - i]
        for j in range(threshold + 1, n + 1):
            if j not in gset:
                out.append((i, j))
    out.sort()
    return out


def ladder_label(pos: tuple[int, int], gamma: IndexSet, m: int) -> IndexSet:
    """The one-column mutation of gamma attached to a ladder position."""
    i, j = pos
    removed = gamma[m - i]
    return index_set(sorted((set(gamma) - {removed}) | {j}))


def ladder(gamma: IndexSet, m: int, n: int) -> list[tuple[tuple[int, int], IndexSet]]:
    """Ladder positions with their labels, positions in lex order."""
    return [
        (pos, ladder_label(pos, gamma, m)) for pos in ladder_positions(gamma, m, n)
    ]


def ladder_label_characterization(gamma: IndexSet, m: int, n: int) -> bool:
    """Labels are exactly the index sets strictly above gamma that swap
    a single element, i.e. |x - gamma| = 1 as sets."""
    gamma = index_set(gamma)
    labels = {lab for _, lab in ladder(gamma, m, n)}
    expected = set()
    for x in itertools.combinations(range(1, n + 1), m):
        if x != gamma and leq_st(gamma, x):
            if len(set(x) - set(gamma)) == 1:
                expected.add(x)
    return labels == expected


# ----------------------------------------------------------------------
# the index map from matrix minors to grassmannian labels


def delta_map(pair: IndexPair, m: int, n: int) -> IndexSet:
    """Send a t x t matrix minor label to a grassmannian label of size m.

    The image lives in subsets of {1..m+n}: columns stay, and the rows
    NOT used survive as reversed entries n + m + 1 - i.
    """
    pair = index_pair(pair.rows, pair.cols)
    if pair.rows[-1] > m or pair.cols[-1] > n:
        raise ValueError(f"{pair} does not fit in the {m} x {n} grid")
    tail = set(range(n + 1, n + m + 1)) - {n + m + 1 - i for i in pair.rows}
    return index_set(sorted(set(pair.cols) | tail))


def delta_map_top(m: int, n: int) -> IndexSet:
    """The label {n+1..n+m}: the image of an empty minor, the maximum."""
    return tuple(range(n + 1, n + m + 1))


def delta_map_is_order_iso(m: int, n: int) -> bool:
    """The map is a bijection onto all labels except the maximum, and
    both it and its inverse preserve the order."""
    source = MinorPoset.matrix(m, n).elements()
    images = [delta_map(p, m, n) for p in source]
    target = set(MinorPoset.grassmannian(m, m + n).elements())
    target.discard(delta_map_top(m, n))
    if len(set(images)) != len(images) or set(images) != target:
        return False
    for a, b in itertools.product(range(len(source)), repeat=2):
        if leq_st(source[a], source[b]) != leq_st(images[a], images[b]):
            return False
    return True


# ----------------------------------------------------------------------
# the block/gap Gorenstein classifier and its h-vector oracle


@dataclass(frozen=True)
class BlockGapDecomposition:
    """gamma split into maximal runs of consecutive integers (blocks)
    and the runs of missing integers after each block (gaps).

    Integers below the first entry of gamma belong to no gap.  The
    final gap collects everything above the last block up to n and may
    be empty.
    """

    blocks: tuple[tuple[int, ...], ...]
    gaps: tuple[tuple[int, ...], ...]

    @property
    def s(self) -> int:
        return len(self.blocks) - 1


def block_gap_decomposition(gamma: IndexSet, n: int) -> BlockGapDecomposition:
    gamma = index_set(gamma)
    if gamma[-1] > n:
        raise ValueError(f"{gamma} is not contained in 1..{n}")
    blocks: list[tuple[int, ...]] = []
    current = [gamma[0]]
    for v in gamma[1:]:
        if v == current[-1] + 1:
            current.append(v)
        else:
            blocks.append(tuple(current))
            current = [v]
    blocks.append(tuple(current))
    gaps = []
    for k, block in enumerate(blocks):
        after = block[-1]
        until = blocks[k + 1][0] - 1 if k + 1 < len(blocks) else n
        gaps.append(tuple(range(after + 1, until + 1)))
    return BlockGapDecomposition(tuple(blocks), tuple(gaps))


def gorenstein(gamma: IndexSet, n: int) -> tuple[bool, BlockGapDecomposition]:
    """Block/gap criterion for the Gorenstein property of the quotient.

    With blocks b_0..b_s and gaps g_0..g_s, and t = s when the last
    entry of gamma is below n (so g_s is nonempty) and t = s - 1
    otherwise, the quotient is Gorenstein iff |g_{i-1}| = |b_i| for all
    1 <= i <= t.
    """
    decomp = block_gap_decomposition(gamma, n)
    s = decomp.s
    t = s if gamma[-1] < n else s - 1
    ok = all(len(decomp.gaps[i - 1]) == len(decomp.blocks[i]) for i in range(1, t + 1))
    return ok, decomp


def h_vector(poset: MinorPoset, gamma: Optional[Label] = None) -> tuple[int, ...]:
    """Numerator coefficients of the Hilbert series over (1-t)^rank.

    With c_k strict k-chains in the residual poset and r its rank,
    h(t) = sum_k c_k t^k (1-t)^(r-k); trailing zeros are stripped.
    The multichain generating function identity
    sum_d (#multichains of size d) t^d = h(t) / (1-t)^r
    makes this an independent Hilbert-series numerator.
    """
    counts = poset.chain_counts(gamma)
    r = len(counts) - 1
    coeffs = [0] * (r + 1)
    for k, c in enumerate(counts):
        # add c * t^k * (1-t)^(r-k)
        row = [1]
        for _ in range(r - k):
            row = [a - b for a, b in zip(row + [0], [0] + row)]
        for e, x in enumerate(row):
            coeffs[k + e] += c * x
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def is_palindromic(h: Sequence[int]) -> bool:
    return list(h) == list(reversed(h))


def gorenstein_hvector_oracle(poset: MinorPoset, gamma: Optional[Label] = None) -> bool:
    """Gorenstein test via palindromicity of the h-vector.

    For the graded quotients considered here (Cohen-Macaulay domains),
    the Gorenstein property is equivalent to a palindromic h-vector.
    """
    return is_palindromic(h_vector(poset, gamma))
