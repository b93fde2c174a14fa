"""The quantum coordinate ring of m x n matrices, in normal form.

Generators X_ij (1-based) satisfy, for i < k and j < l:

    X_ij X_il = q X_il X_ij          (same row)
    X_ij X_kj = q X_kj X_ij          (same column)
    X_il X_kj = X_kj X_il            (antidiagonal pair)
    X_ij X_kl - X_kl X_ij = (q - q^-1) X_il X_kj   (diagonal pair)

Monomials are kept sorted by lexicographically nondecreasing generator
index; rewriting any descending adjacent pair by the relations above
terminates and yields a canonical normal form.  Elements are stored as
maps from normal words to Laurent coefficients.
"""

from __future__ import annotations

import itertools
import json
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .config import default_budget
from .coeffield import ONE, ZERO, LaurentQ, q_power
from .errors import BudgetExceeded, ShapeMismatch

Gen = tuple[int, int]
Word = tuple[Gen, ...]
Shape = tuple[int, int]

_QINV = q_power(-1)
_NEG_QDIFF = -(q_power(1) - q_power(-1))


def check_shape(shape: Shape) -> Shape:
    m, n = shape
    if m < 1 or n < 1:
        raise ValueError(f"invalid shape {shape}")
    return (int(m), int(n))


def check_gen(g: Gen, shape: Shape) -> Gen:
    i, j = g
    m, n = shape
    if not (1 <= i <= m and 1 <= j <= n):
        raise ValueError(f"generator {g} outside shape {shape}")
    return (int(i), int(j))


def is_normal(word: Word) -> bool:
    return all(word[k] <= word[k + 1] for k in range(len(word) - 1))


def _first_descent(word: Word) -> Optional[int]:
    for k in range(len(word) - 1):
        if word[k] > word[k + 1]:
            return k
    return None


def _rewrite_pair(a: Gen, b: Gen):
    """Replacement terms for the descending adjacent product a*b (a > b).

    Returns ((coeff, (gen, gen)), ...) pairs whose sum equals a*b.
    """
    i1, j1 = a
    i2, j2 = b
    if i1 == i2 or j1 == j2:
        return ((_QINV, (b, a)),)
    if j1 < j2:
        # rows descend while columns ascend: the pair commutes
        return ((ONE, (b, a)),)
    return ((ONE, (b, a)), (_NEG_QDIFF, ((i2, j1), (i1, j2))))


_NF_CACHE: dict[Word, dict[Word, LaurentQ]] = {}


def normal_form_word(word: Word) -> dict[Word, LaurentQ]:
    """Normal form of a single word as a map normal word -> coefficient.

    The relations do not involve the shape bounds, so the cache is
    shared across shapes.
    """
    word = tuple(word)
    hit = _NF_CACHE.get(word)
    if hit is not None:
        return hit
    result: dict[Word, LaurentQ] = {}
    pending: dict[Word, LaurentQ] = {word: ONE}
    while pending:
        w, c = pending.popitem()
        k = _first_descent(w)
        if k is None:
            s = result.get(w, ZERO) + c
            if s:
                result[w] = s
            else:
                result.pop(w, None)
            continue
        hit = _NF_CACHE.get(w)
        if hit is not None:
            for w2, c2 in hit.items():
                s = result.get(w2, ZERO) + c * c2
                if s:
                    result[w2] = s
                else:
                    result.pop(w2, None)
            continue
        for coeff, pair in _rewrite_pair(w[k], w[k + 1]):
            w2 = w[:k] + pair + w[k + 2 :]
            s = pending.get(w2, ZERO) + coeff * c
            if s:
                pending[w2] = s
            else:
                pending.pop(w2, None)
    _NF_CACHE[word] = result
    return result


def normal_form_word_at(word: Word, q0) -> dict[Word, Fraction]:
    """Normal form computed directly at a rational q0 != 0.

    Shares the rewrite structure with the generic routine but none of
    its arithmetic, so it serves as an independent consistency check of
    specialization.
    """
    q0 = Fraction(q0)
    if q0 == 0:
        from .errors import ZeroSpecialization

        raise ZeroSpecialization("q = 0 is outside the parameter domain")
    qinv = 1 / q0
    neg_qdiff = -(q0 - qinv)
    result: dict[Word, Fraction] = {}
    pending: dict[Word, Fraction] = {tuple(word): Fraction(1)}
    while pending:
        w, c = pending.popitem()
        k = _first_descent(w)
        if k is None:
            s = result.get(w, Fraction(0)) + c
            if s:
                result[w] = s
            else:
                result.pop(w, None)
            continue
        (i1, j1), (i2, j2) = w[k], w[k + 1]
        swapped = w[:k] + (w[k + 1], w[k]) + w[k + 2 :]
        if i1 == i2 or j1 == j2:
            repl = ((qinv, swapped),)
        elif j1 < j2:
            repl = ((Fraction(1), swapped),)
        else:
            corr = w[:k] + ((i2, j1), (i1, j2)) + w[k + 2 :]
            repl = ((Fraction(1), swapped), (neg_qdiff, corr))
        for coeff, w2 in repl:
            s = pending.get(w2, Fraction(0)) + coeff * c
            if s:
                pending[w2] = s
            else:
                pending.pop(w2, None)
    return result


def inversion_measure(word: Word) -> tuple[int, int]:
    """(row inversions, total inversions) of a word.

    Every single rewrite step strictly decreases this measure in the
    lexicographic order, which is what guarantees termination: a swap of
    a same-row/same-column or commuting pair lowers the inversion count
    without raising row inversions, and both replacement words of a
    diagonal pair have strictly fewer row inversions.
    """
    row_inv = 0
    total_inv = 0
    for a, b in itertools.combinations(word, 2):
        if a > b:
            total_inv += 1
        if a[0] > b[0]:
            row_inv += 1
    return (row_inv, total_inv)


class NcPoly:
    """An element of the quantum matrix algebra of a fixed shape."""

    __slots__ = ("shape", "terms")

    def __init__(self, shape: Shape, terms: Optional[dict[Word, LaurentQ]] = None):
        self.shape = check_shape(shape)
        self.terms: dict[Word, LaurentQ] = {}
        if terms:
            for w, c in terms.items():
                if c:
                    self.terms[tuple(w)] = c

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, shape: Shape) -> "NcPoly":
        return cls(shape)

    @classmethod
    def one(cls, shape: Shape) -> "NcPoly":
        return cls(shape, {(): ONE})

    @classmethod
    def generator(cls, i: int, j: int, shape: Shape) -> "NcPoly":
        g = check_gen((i, j), shape)
        return cls(shape, {(g,): ONE})

    @classmethod
    def from_word(cls, word: Iterable[Gen], shape: Shape, coeff: LaurentQ = ONE) -> "NcPoly":
        word = tuple(check_gen(g, shape) for g in word)
        out = cls(shape)
        if not coeff:
            return out
        for w, c in normal_form_word(word).items():
            out._add_term(w, coeff * c)
        return out

    def _add_term(self, w: Word, c: LaurentQ) -> None:
        s = self.terms.get(w, ZERO) + c
        if s:
            self.terms[w] = s
        else:
            self.terms.pop(w, None)

    # ------------------------------------------------------------------
    # structure

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.shape == other.shape and self.terms == other.terms

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self.terms.items()))))

    def coefficient(self, word: Word) -> LaurentQ:
        return self.terms.get(tuple(word), ZERO)

    def total_degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def multidegree(self) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Common (row counts, column counts) of all words, or None.

        The defining relations preserve both row and column content, so
        a homogeneous element has a well-defined multidegree.  Mixed
        elements and the zero element return None.
        """
        m, n = self.shape
        found = None
        for w in self.terms:
            rows = [0] * m
            cols = [0] * n
            for i, j in w:
                rows[i - 1] += 1
                cols[j - 1] += 1
            md = (tuple(rows), tuple(cols))
            if found is None:
                found = md
            elif found != md:
                return None
        return found

    # ------------------------------------------------------------------
    # arithmetic

    def __neg__(self):
        return NcPoly(self.shape, {w: -c for w, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} vs {other.shape}")
        out = NcPoly(self.shape, dict(self.terms))
        for w, c in other.terms.items():
            out._add_term(w, c)
        return out

    def __sub__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, NcPoly):
            return nc_mul(self, other)
        coerced = LaurentQ._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.scale(coerced)

    def __rmul__(self, other):
        # scalars commute with everything; NcPoly * NcPoly goes via __mul__
        coerced = LaurentQ._coerce(other)
        if coerced is None:
            return NotImplemented
        return self.scale(coerced)

    def scale(self, c: LaurentQ) -> "NcPoly":
        if not c:
            return NcPoly(self.shape)
        return NcPoly(self.shape, {w: c * x for w, x in self.terms.items()})

    def evaluate(self, q0) -> dict[Word, Fraction]:
        """Coefficientwise value at a rational q0 != 0; drops zeros."""
        out = {}
        for w, c in self.terms.items():
            v = c.evaluate(q0)
            if v:
                out[w] = v
        return out

    # ------------------------------------------------------------------
    # serialization and printing

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: t[0])

    def __str__(self):
        if not self.terms:
            return "0"
        rendered = []
        for w, c in self.sorted_terms():
            word_text = "*".join(f"X{i}{j}" for i, j in w) if w else "1"
            if c == ONE:
                body, neg = word_text, False
            elif c == -ONE:
                body, neg = word_text, True
            elif c.is_unit():
                neg = next(iter(c.items()))[1] < 0
                mag = -c if neg else c
                body = f"{mag}*{word_text}" if w else str(mag)
            else:
                body, neg = (f"({c})*{word_text}" if w else f"({c})"), False
            rendered.append((neg, body))
        neg, body = rendered[0]
        text = ("-" if neg else "") + body
        for neg, body in rendered[1:]:
            text += (" - " if neg else " + ") + body
        return text

    def __repr__(self):
        return f"NcPoly({self.shape}, {str(self)!r})"

    def to_json(self) -> str:
        payload = {
            "shape": list(self.shape),
            "terms": [
                {"word": [list(g) for g in w], "coeff": str(c)}
                for w, c in self.sorted_terms()
            ],
        }
        return json.dumps(payload, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "NcPoly":
        payload = json.loads(text)
        shape = tuple(payload["shape"])
        out = cls(shape)
        for t in payload["terms"]:
            word = tuple(check_gen(tuple(g), shape) for g in t["word"])
            if not is_normal(word):
                raise ValueError(f"non-normal word in serialized element: {word}")
            out._add_term(word, LaurentQ.parse(t["coeff"]))
        return out


def nc_mul(a: NcPoly, b: NcPoly, max_degree: Optional[int] = None) -> NcPoly:
    """Product in the quantum matrix algebra.

    max_degree caps the length of any intermediate word; None uses the
    configured default budget.
    """
    if a.shape != b.shape:
        raise ShapeMismatch(f"{a.shape} vs {b.shape}")
    cap = default_budget().max_degree if max_degree is None else max_degree
    out = NcPoly(a.shape)
    for w1, c1 in a.terms.items():
        for w2, c2 in b.terms.items():
            if len(w1) + len(w2) > cap:
                raise BudgetExceeded(
                    f"product word length {len(w1) + len(w2)} exceeds budget {cap}"
                )
            c = c1 * c2
            for w, cw in normal_form_word(w1 + w2).items():
                out._add_term(w, c * cw)
    return out


def generators(shape: Shape) -> list[Gen]:
    m, n = check_shape(shape)
    return [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]


def graded_basis(
    shape: Shape,
    degree: Optional[int] = None,
    multidegree: Optional[tuple[Sequence[int], Sequence[int]]] = None,
) -> list[Word]:
    """Normal words of the given total degree or multidegree, sorted.

    Normal words of degree d are exactly the nondecreasing sequences of
    d generators, so the total-degree basis is a combinations-with-
    replacement enumeration.
    """
    if (degree is None) == (multidegree is None):
        raise ValueError("pass exactly one of degree, multidegree")
    gens = generators(shape)
    if degree is not None:
        if degree < 0:
            raise ValueError("negative degree")
        return [tuple(w) for w in itertools.combinations_with_replacement(gens, degree)]
    rows, cols = multidegree
    m, n = check_shape(shape)
    if len(rows) != m or len(cols) != n:
        raise ValueError("multidegree length does not match shape")
    if sum(rows) != sum(cols):
        return []
    words: list[Word] = []
    # distribute each row's count over the columns, then read off the
    # normal word row by row
    def fill(row: int, remaining_cols: list[int], acc: list[Gen]):
        if row > m:
            if all(x == 0 for x in remaining_cols):
                words.append(tuple(acc))
            return
        need = rows[row - 1]

        def choose(col: int, left: int, picked: list[Gen]):
            if left == 0:
                fill(row + 1, remaining_cols, acc + picked)
                return
            if col > n:
                return
            avail = remaining_cols[col - 1]
            for k in range(min(avail, left), -1, -1):
                remaining_cols[col - 1] -= k
                choose(col + 1, left - k, picked + [(row, col)] * k)
                remaining_cols[col - 1] += k

        choose(1, need, [])

    fill(1, list(cols), [])
    return sorted(words)


def confluence_check(shape: Shape) -> dict:
    """Resolve all length-3 overlap ambiguities of the rewriting system.

    For every triple a >= b >= c of generators, reduce a*b*c two ways:
    first rewriting the left pair, and first rewriting the right pair,
    then normalizing fully.  Both must agree with the canonical normal
    form.
    """
    gens = generators(shape)
    failures = []
    count = 0
    for a in gens:
        for b in gens:
            if b > a:
                continue
            for c in gens:
                if c > b:
                    continue
                count += 1
                word = (a, b, c)
                canonical = normal_form_word(word)
                for first in (0, 1):
                    if word[first] <= word[first + 1]:
                        continue  # no redex at this position
                    acc: dict[Word, LaurentQ] = {}
                    for coeff, pair in _rewrite_pair(word[first], word[first + 1]):
                        w2 = word[:first] + pair + word[first + 2 :]
                        for w3, c3 in normal_form_word(w2).items():
                            s = acc.get(w3, ZERO) + coeff * c3
                            if s:
                                acc[w3] = s
                            else:
                                acc.pop(w3, None)
                    if acc != canonical:
                        failures.append(
                            {
                                "triple": [list(a), list(b), list(c)],
                                "strategy": "left" if first == 0 else "right",
                            }
                        )
    return {
        "shape": list(shape),
        "triples": count,
        "failures": failures,
        "ok": not failures,
    }
