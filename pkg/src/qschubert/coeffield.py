"""Exact scalar arithmetic in the deformation parameter q.

Coefficients throughout the library are Laurent polynomials in q with
rational coefficients.  Linear solving additionally needs the fraction
field Q(q), represented here by reduced ratios of integer-coefficient
polynomials.  Everything is immutable and exact; floating point never
appears.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import VerificationFailed, ZeroSpecialization


class LaurentQ:
    """A Laurent polynomial sum of c_e * q^e with Fraction coefficients.

    The term map never stores a zero coefficient, so equal values have
    identical maps; hashing and equality are structural.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        data: dict[int, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if not isinstance(c, Fraction):
                    c = Fraction(c)
                if c:
                    data[int(e)] = c
        self._terms = data
        self._hash = None

    # ------------------------------------------------------------------
    # inspection

    def items(self):
        """Terms as (exponent, coefficient) pairs, exponent descending."""
        return sorted(self._terms.items(), reverse=True)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_unit(self) -> bool:
        """True iff this is a nonzero monomial c*q^k (the units of the ring)."""
        return len(self._terms) == 1

    def degree(self) -> Optional[int]:
        return max(self._terms) if self._terms else None

    def low(self) -> Optional[int]:
        return min(self._terms) if self._terms else None

    def constant_value(self) -> Optional[Fraction]:
        """The rational value if this is a constant, else None."""
        if not self._terms:
            return Fraction(0)
        if set(self._terms) == {0}:
            return self._terms[0]
        return None

    # ------------------------------------------------------------------
    # arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentQ):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentQ({0: other})
        return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items())))
        return self._hash

    def __neg__(self):
        return LaurentQ({e: -c for e, c in self._terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data = dict(self._terms)
        for e, c in other._terms.items():
            s = data.get(e, _F0) + c
            if s:
                data[e] = s
            else:
                data.pop(e, None)
        out = LaurentQ.__new__(LaurentQ)
        out._terms = data
        out._hash = None
        return out

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        data: dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = data.get(e, _F0) + c1 * c2
                if s:
                    data[e] = s
                else:
                    data.pop(e, None)
        out = LaurentQ.__new__(LaurentQ)
        out._terms = data
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.unit_inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def unit_inverse(self) -> "LaurentQ":
        """Inverse of a monomial c*q^k; raises on non-units."""
        if len(self._terms) != 1:
            raise ArithmeticError(f"not a unit: {self}")
        ((e, c),) = self._terms.items()
        return LaurentQ({-e: 1 / c})

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_unit():
            return self * other.unit_inverse()
        return (RatFun.from_laurent(self) / RatFun.from_laurent(other)).to_laurent()

    def shift(self, k: int) -> "LaurentQ":
        """Multiply by q^k."""
        return LaurentQ({e + k: c for e, c in self._terms.items()})

    def evaluate(self, q0) -> Fraction:
        """Exact value at a nonzero rational q0."""
        q0 = Fraction(q0)
        if q0 == 0:
            raise ZeroSpecialization("q = 0 is outside the parameter domain")
        total = _F0
        for e, c in self._terms.items():
            total += c * q0**e
        return total

    # ------------------------------------------------------------------
    # text form

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                body = str(abs(c))
            else:
                base = "q" if e == 1 else f"q^{e}"
                body = base if abs(c) == 1 else f"{abs(c)}*{base}"
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"LaurentQ({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "LaurentQ":
        """Inverse of str(); accepts forms like '2*q^-1 + 1/3 - q^2'."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty coefficient text")
        if s == "0":
            return ZERO
        # protect exponent minus signs, then split on top-level +/-
        s = s.replace("^-", "^~")
        chunks = re.findall(r"[+-]?[^+-]+", s)
        if "".join(chunks) != s:
            raise ValueError(f"cannot parse coefficient: {text!r}")
        data: dict[int, Fraction] = {}
        for chunk in chunks:
            m = _TERM_RE.match(chunk.replace("~", "-"))
            if not m or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            if m.group(3) is None:
                exp = 0
            elif m.group(4) is None:
                exp = 1
            else:
                exp = int(m.group(4))
            data[exp] = data.get(exp, _F0) + sign * coeff
        return cls(data)


_F0 = Fraction(0)
_TERM_RE = re.compile(r"^([+-]?)(?:(\d+(?:/\d+)?)\*?)?(q(?:\^(-?\d+))?)?$")

ZERO = LaurentQ()
ONE = LaurentQ({0: 1})


def laurent(c, e: int = 0) -> LaurentQ:
    """The monomial c*q^e."""
    return LaurentQ({e: c})


def q_power(e: int) -> LaurentQ:
    return LaurentQ({e: 1})


def laurent_mul(a: LaurentQ, b: LaurentQ) -> LaurentQ:
    return a * b


def laurent_eval(a: LaurentQ, q0) -> Fraction:
    return a.evaluate(q0)


def parse_laurent(text: str) -> LaurentQ:
    return LaurentQ.parse(text)


# ----------------------------------------------------------------------
# dense integer polynomials (low degree first), used by RatFun and the
# fraction-free elimination.  The zero polynomial is the empty tuple.


def _ptrim(t):
    t = list(t)
    while t and not t[-1]:
        t.pop()
    return tuple(t)


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _ptrim(out)


def _pneg(a):
    return tuple(-x for x in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _ptrim(out)


def _pcontent(a) -> int:
    g = 0
    for x in a:
        g = math.gcd(g, abs(x))
    return g


def _pdivmod_q(a, b):
    """Quotient and remainder over Q; coefficients become Fractions."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(x) for x in a]
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = Fraction(b[-1])
    for k in range(len(rem) - len(b), -1, -1):
        c = rem[k + len(b) - 1] / lead
        if c:
            quo[k] = c
            for i, x in enumerate(b):
                rem[k + i] -= c * x
    while rem and not rem[-1]:
        rem.pop()
    while quo and not quo[-1]:
        quo.pop()
    return tuple(quo), tuple(rem)


def _pdivexact(a, b):
    """a // b when b divides a in Z[q]."""
    quo, rem = _pdivmod_q(a, b)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    out = []
    for c in quo:
        if c.denominator != 1:
            raise ArithmeticError("inexact polynomial division")
        out.append(c.numerator)
    return tuple(out)


def _pprimitive(a):
    """Content-free copy with positive leading coefficient."""
    if not a:
        return ()
    g = _pcontent(a)
    if a[-1] < 0:
        g = -g
    return tuple(x // g for x in a)


def _pgcd(a, b):
    """Primitive gcd in Z[q] (positive leading coefficient)."""
    fa = tuple(Fraction(x) for x in a)
    fb = tuple(Fraction(x) for x in b)
    while fb:
        fa, fb = fb, _pdivmod_q(fa, fb)[1]
    if not fa:
        return ()
    # clear denominators, then strip content
    den = math.lcm(*(c.denominator for c in fa))
    ints = [int(c * den) for c in fa]
    return _pprimitive(ints)


def _plcm(a, b):
    if not a or not b:
        return ()
    return _pdivexact(_pmul(a, b), _pgcd(a, b))


def _laurent_to_poly(a: LaurentQ, shift: int, scale: int):
    """Integer polynomial for scale * q^(-shift) * a; exact by construction."""
    if a.is_zero():
        return ()
    out = [0] * (a.degree() - shift + 1)
    for e, c in a._terms.items():
        val = c * scale
        assert val.denominator == 1
        out[e - shift] = int(val)
    return _ptrim(out)


def _poly_to_laurent(p, shift: int = 0) -> LaurentQ:
    return LaurentQ({i + shift: c for i, c in enumerate(p) if c})


class RatFun:
    """A reduced ratio of integer polynomials in q.

    Normal form: gcd(num, den) = 1 as polynomials, joint integer content
    1, and the denominator has positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = _ptrim(num)
        den = _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = (), (1,)
            return
        g = _pgcd(num, den)
        if g != (1,):
            num = _pdivexact(num, g)
            den = _pdivexact(den, g)
        c = math.gcd(_pcontent(num), _pcontent(den))
        if den[-1] < 0:
            c = -c
        if c != 1:
            num = tuple(x // c for x in num)
            den = tuple(x // c for x in den)
        self.num, self.den = num, den

    @classmethod
    def from_laurent(cls, a: LaurentQ) -> "RatFun":
        if a.is_zero():
            return _RF0
        low = a.low()
        den_scale = math.lcm(*(c.denominator for c in a._terms.values()))
        num = _laurent_to_poly(a, low, den_scale)
        if low >= 0:
            return cls(_pmul(num, _monomial(low)), (den_scale,))
        return cls(num, _pmul((den_scale,), _monomial(-low)))

    def to_laurent(self) -> LaurentQ:
        """Convert back; requires the denominator to be a monomial c*q^k."""
        nz = [i for i, c in enumerate(self.den) if c]
        if len(nz) != 1:
            raise ArithmeticError(f"denominator {self.den} is not a unit")
        k = nz[0]
        c = self.den[k]
        return LaurentQ({i - k: Fraction(x, c) for i, x in enumerate(self.num) if x})

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFun((other,))
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        out = RatFun.__new__(RatFun)
        out.num, out.den = _pneg(self.num), self.den
        return out

    def __add__(self, other):
        return RatFun(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return RatFun(_pmul(self.num, other.num), _pmul(self.den, other.den))

    def __truediv__(self, other):
        if not other.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatFun(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __repr__(self):
        return f"RatFun({self.num}, {self.den})"


_RF0 = RatFun(())
_RF1 = RatFun((1,))


def _monomial(k: int):
    return (0,) * k + (1,)


# ----------------------------------------------------------------------
# exact linear algebra


def _rows_to_polys(rows: Sequence[Sequence[LaurentQ]]):
    """Clear units row by row: each row becomes integer polynomials.

    Scaling a row by the unit L*q^(-shift) does not change the kernel.
    """
    out = []
    for row in rows:
        nonzero = [a for a in row if a]
        if not nonzero:
            continue
        shift = min(a.low() for a in nonzero)
        scale = math.lcm(*(c.denominator for a in nonzero for c in a._terms.values()))
        out.append([_laurent_to_poly(a, shift, scale) if a else () for a in row])
    return out


def _row_content_reduce(row):
    g = 0
    for p in row:
        g = math.gcd(g, _pcontent(p))
        if g == 1:
            return row
    if g <= 1:
        return row
    return [tuple(x // g for x in p) for p in row]


def _echelon(rows: Sequence[Sequence[LaurentQ]]):
    """Fraction-free echelon form; returns list of (pivot_col, poly_row)."""
    pivots: list[tuple[int, list]] = []
    for row in _rows_to_polys(rows):
        for pc, prow in pivots:
            if row[pc]:
                a, b = prow[pc], row[pc]
                row = [_psub(_pmul(x, a), _pmul(prow[i], b)) for i, x in enumerate(row)]
                row = _row_content_reduce(row)
        lead = next((i for i, p in enumerate(row) if p), None)
        if lead is not None:
            pivots.append((lead, row))
            pivots.sort(key=lambda t: t[0])
    return pivots


def matrix_rank(rows: Sequence[Sequence[LaurentQ]]) -> int:
    """Rank over the fraction field Q(q)."""
    return len(_echelon(rows))


def matrix_rank_at(rows: Sequence[Sequence[Fraction]], q0=None) -> int:
    """Rank over Q of a rational matrix (entries already evaluated)."""
    work = [list(map(Fraction, r)) for r in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pr = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if pr is None:
            continue
        work[rank], work[pr] = work[pr], work[rank]
        piv = work[rank][col]
        for r in range(len(work)):
            if r != rank and work[r][col]:
                f = work[r][col] / piv
                for c in range(col, ncols):
                    work[r][c] -= f * work[rank][c]
        rank += 1
    return rank


def _primitive_laurent_vector(vec: Sequence[RatFun]):
    """Scale a Q(q)-vector to Laurent entries with no common factor.

    The sign convention: the first nonzero entry has a positive leading
    coefficient.  Deterministic.
    """
    support = [v for v in vec if v]
    if not support:
        return tuple(ZERO for _ in vec)
    lcm = (1,)
    for v in support:
        lcm = _plcm(lcm, v.den)
    polys = [_pmul(v.num, _pdivexact(lcm, v.den)) if v else () for v in vec]
    g = ()
    for p in polys:
        g = _pgcd(g, p)
        if g == (1,):
            break
    if g and g != (1,):
        polys = [_pdivexact(p, g) if p else () for p in polys]
    first = next(p for p in polys if p)
    if first[-1] < 0:
        polys = [_pneg(p) for p in polys]
    return tuple(_poly_to_laurent(p) for p in polys)


def solve_kernel(
    rows: Sequence[Sequence[LaurentQ]], ncols: Optional[int] = None
) -> list[tuple[LaurentQ, ...]]:
    """Basis of the right kernel of a matrix over Q(q).

    One basis vector per free column of the echelon form, free columns
    ascending; each vector is scaled so all entries are Laurent
    polynomials with no common factor.
    """
    rows = list(rows)
    if ncols is None:
        if not rows:
            return []
        ncols = len(rows[0])
    for r in rows:
        if len(r) != ncols:
            raise ValueError("ragged matrix")
    pivots = _echelon(rows)
    pivot_cols = [pc for pc, _ in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for f in free_cols:
        v: list[RatFun] = [_RF0] * ncols
        v[f] = _RF1
        for pc, prow in reversed(pivots):
            if pc > f:
                continue
            s = _RF0
            for c in range(pc + 1, ncols):
                if prow[c] and v[c]:
                    s = s + RatFun(prow[c]) * v[c]
            if s:
                v[pc] = -s / RatFun(prow[pc])
        basis.append(_primitive_laurent_vector(v))
    return basis


def solve_linear(
    columns: Sequence[Sequence[LaurentQ]], rhs: Sequence[LaurentQ]
) -> Optional[list[LaurentQ]]:
    """One exact solution x of sum x_i * columns[i] = rhs, or None.

    Deterministic: reduced echelon solve with free variables set to
    zero.  Raises VerificationFailed if a solution exists over Q(q) but
    some coordinate is not a Laurent polynomial.
    """
    nvars = len(columns)
    nrows = len(rhs)
    for col in columns:
        if len(col) != nrows:
            raise ValueError("ragged column")
    aug = [
        [RatFun.from_laurent(columns[j][r]) for j in range(nvars)]
        + [RatFun.from_laurent(rhs[r])]
        for r in range(nrows)
    ]
    rank = 0
    pivots: list[int] = []
    for col in range(nvars):
        pr = next((r for r in range(rank, nrows) if aug[r][col]), None)
        if pr is None:
            continue
        aug[rank], aug[pr] = aug[pr], aug[rank]
        piv = aug[rank][col]
        aug[rank] = [x / piv for x in aug[rank]]
        for r in range(nrows):
            if r != rank and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, nrows):
        if aug[r][nvars]:
            return None
    x = [ZERO] * nvars
    for r, col in enumerate(pivots):
        val = aug[r][nvars]
        if val:
            try:
                x[col] = val.to_laurent()
            except ArithmeticError as exc:
                raise VerificationFailed(
                    f"solution coordinate {val!r} is not a Laurent polynomial"
                ) from exc
    return x


def vectors_proportional(
    v: Sequence[LaurentQ], w: Sequence[LaurentQ]
) -> bool:
    """True iff v and w span the same line (or are both zero)."""
    if len(v) != len(w):
        return False
    for i in range(len(v)):
        for j in range(i + 1, len(v)):
            if v[i] * w[j] != v[j] * w[i]:
                return False
    return (any(map(bool, v)) == any(map(bool, w)))
