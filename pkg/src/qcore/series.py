"""Exact arithmetic on truncated formal power series in q.

Coefficients are plain Python integers, so they are arbitrary precision and
nothing is ever rounded.  A series knows its truncation order N and stores
the exact coefficients of q^0 .. q^N.  Truncation discards information; it
never approximates it.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Tuple

# Multiplication strategy: when one factor has at most this many nonzero
# terms, convolve over just those terms; otherwise pack both factors into
# big integers and let CPython's integer multiply do the convolution.
_SPARSE_LIMIT = 64
_SMALL_ORDER = 128


class NonUnitConstantTerm(ValueError):
    """Inversion or division by a series whose constant term is not +1 or -1."""


class TruncatedSeries:
    """Immutable dense power series with exact integer coefficients.

    ``coeffs[n]`` is the coefficient of q^n for 0 <= n <= order.  Binary
    operations on series of different orders truncate to the smaller order.
    Reading an index below 0 returns 0 (the usual convention for sequences
    extended to negative arguments); reading beyond the truncation order
    raises IndexError, because those coefficients were discarded, not zero.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[int], order: Optional[int] = None):
        coeffs = tuple(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient sequence needs an explicit order")
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs = coeffs + (0,) * (order + 1 - len(coeffs))
        elif len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        self.order = order
        self.coeffs = coeffs

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls((0,) * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls((1,) + (0,) * order, order)

    @classmethod
    def monomial(cls, order: int, coeff: int = 1, exponent: int = 0) -> "TruncatedSeries":
        """The series coeff * q^exponent at the given truncation order."""
        if exponent < 0:
            raise ValueError("negative exponents are not representable")
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c, order)

    # -- basic protocol ------------------------------------------------

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"coefficient of q^{n} lies beyond truncation order {self.order}")
        return self.coeffs[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c:
                if n == 0:
                    terms.append(str(c))
                else:
                    mag = "" if abs(c) == 1 else str(abs(c))
                    s = "-" if c < 0 else ("+" if terms else "")
                    terms.append(f"{s}{mag}q^{n}" if n > 1 else f"{s}{mag}q")
            if len(terms) >= 8:
                terms.append("...")
                break
        body = " ".join(terms) if terms else "0"
        return f"TruncatedSeries({body}; order={self.order})"

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def nonzero_count(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def truncate(self, order: int) -> "TruncatedSeries":
        """Forget coefficients above ``order`` (which must not exceed self.order)."""
        if order > self.order:
            raise ValueError("cannot extend a series beyond its truncation order")
        if order == self.order:
            return self
        return TruncatedSeries(self.coeffs[: order + 1], order)

    # -- ring operations -----------------------------------------------

    def add(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries([a[i] + b[i] for i in range(order + 1)], order)

    def sub(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return TruncatedSeries([a[i] - b[i] for i in range(order + 1)], order)

    def scale(self, k: int) -> "TruncatedSeries":
        if k == 1:
            return self
        return TruncatedSeries([k * c for c in self.coeffs], self.order)

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        order = min(self.order, other.order)
        a = self.coeffs[: order + 1]
        b = other.coeffs[: order + 1]
        nza = sum(1 for c in a if c)
        nzb = sum(1 for c in b if c)
        if nza == 0 or nzb == 0:
            return TruncatedSeries.zero(order)
        if min(nza, nzb) <= _SPARSE_LIMIT or order <= _SMALL_ORDER:
            if nzb < nza:
                a, b = b, a
            return TruncatedSeries(_convolve_sparse(a, b, order), order)
        return TruncatedSeries(_convolve_packed(a, b, order), order)

    def invert(self) -> "TruncatedSeries":
        """Multiplicative inverse, by the exact quadratic recurrence.

        The recurrence solves a_0 b_n = -sum_{k>=1} a_k b_{n-k}; zero terms
        of a contribute nothing, so the inner sum runs over the nonzero
        coefficients only.
        """
        a = self.coeffs
        a0 = a[0]
        if a0 not in (1, -1):
            raise NonUnitConstantTerm(f"constant term is {a0}, need +1 or -1")
        order = self.order
        pairs = [(k, a[k]) for k in range(1, order + 1) if a[k]]
        out = [0] * (order + 1)
        out[0] = a0
        for n in range(1, order + 1):
            s = 0
            for k, c in pairs:
                if k > n:
                    break
                s += c * out[n - k]
            if s:
                out[n] = -s if a0 == 1 else s
        return TruncatedSeries(out, order)

    def div(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Exact long division; ``other`` must have unit constant term."""
        b = other.coeffs
        b0 = b[0]
        if b0 not in (1, -1):
            raise NonUnitConstantTerm(f"constant term is {b0}, need +1 or -1")
        order = min(self.order, other.order)
        a = self.coeffs
        pairs = [(k, b[k]) for k in range(1, order + 1) if b[k]]
        out = [0] * (order + 1)
        for n in range(order + 1):
            s = a[n]
            for k, c in pairs:
                if k > n:
                    break
                s -= c * out[n - k]
            out[n] = s if b0 == 1 else -s
        return TruncatedSeries(out, order)

    def pow(self, k: int) -> "TruncatedSeries":
        """k-th power by repeated exact multiplication (k >= 0)."""
        if k < 0:
            raise ValueError("negative powers: use invert() then pow()")
        if k == 0:
            return TruncatedSeries.one(self.order)
        result = self
        for _ in range(k - 1):
            result = result.mul(self)
        return result

    # -- substitutions and index surgery --------------------------------

    def inflate(self, m: int, order: Optional[int] = None) -> "TruncatedSeries":
        """Substitute q -> q^m.

        The result is exact up to self.order*m + m - 1 (the slots between
        multiples of m are genuinely zero); by default the result order is
        self.order*m, and an explicit ``order`` may request anything up to
        the exact limit.
        """
        if m < 1:
            raise ValueError("inflation step must be >= 1")
        natural = self.order * m
        if order is None:
            order = natural
        elif order > natural + m - 1:
            raise ValueError("requested order exceeds what the source determines exactly")
        if m == 1 and order == self.order:
            return self
        out = [0] * (order + 1)
        for i, c in enumerate(self.coeffs):
            pos = i * m
            if pos > order:
                break
            out[pos] = c
        return TruncatedSeries(out, order)

    def extract_ap(self, m: int, r: int) -> "TruncatedSeries":
        """Coefficients along the arithmetic progression mn + r, re-indexed to q^n."""
        if m < 1:
            raise ValueError("progression step must be >= 1")
        if not 0 <= r < m:
            raise ValueError("residue must satisfy 0 <= r < m")
        if self.order < r:
            raise ValueError("series order too small to contain residue class")
        if m == 1:
            return self
        order = (self.order - r) // m
        return TruncatedSeries([self.coeffs[m * n + r] for n in range(order + 1)], order)

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k; order is preserved, the top k coefficients fall off."""
        if k < 0:
            raise ValueError("shift distance must be >= 0")
        if k == 0:
            return self
        out = (0,) * min(k, self.order + 1) + self.coeffs[: self.order + 1 - k]
        return TruncatedSeries(out, self.order)

    def alternate(self) -> "TruncatedSeries":
        """Substitute q -> -q: negate the odd-index coefficients."""
        return TruncatedSeries(
            [c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)], self.order
        )

    # -- operators -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.add(other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.sub(other)
        return NotImplemented

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.mul(other)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if isinstance(k, int):
            return self.pow(k)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.div(other)
        return NotImplemented


def first_mismatch(
    a: TruncatedSeries, b: TruncatedSeries
) -> Optional[Tuple[int, int, int]]:
    """Smallest index where a and b differ (up to the shared order), or None."""
    order = min(a.order, b.order)
    ca, cb = a.coeffs, b.coeffs
    for n in range(order + 1):
        if ca[n] != cb[n]:
            return n, ca[n], cb[n]
    return None


# -- multiplication kernels ------------------------------------------------


def _convolve_sparse(a, b, order):
    """Cauchy convolution driven by the nonzero terms of a (the sparser factor)."""
    out = [0] * (order + 1)
    for i, c in enumerate(a):
        if not c:
            continue
        top = order - i
        if c == 1:
            for j in range(min(top, len(b) - 1) + 1):
                d = b[j]
                if d:
                    out[i + j] += d
        elif c == -1:
            for j in range(min(top, len(b) - 1) + 1):
                d = b[j]
                if d:
                    out[i + j] -= d
        else:
            for j in range(min(top, len(b) - 1) + 1):
                d = b[j]
                if d:
                    out[i + j] += c * d
    return out


def _pack(vals, width):
    buf = bytearray(len(vals) * width)
    off = 0
    for v in vals:
        if v:
            buf[off : off + width] = v.to_bytes(width, "little")
        off += width
    return int.from_bytes(buf, "little")


def _unpack(n, count, width):
    total = count * width
    raw = n.to_bytes(max(total, (n.bit_length() + 7) // 8), "little")[:total]
    return [
        int.from_bytes(raw[i * width : (i + 1) * width], "little") for i in range(count)
    ]


def _convolve_packed(a, b, order):
    """Exact convolution via big-integer multiplication (Kronecker substitution).

    Signed coefficients are split into positive and negative parts; the
    digit width is chosen so no packed digit can overflow, which keeps the
    digitwise reading of the products exact.
    """
    max_a = max(abs(c) for c in a)
    max_b = max(abs(c) for c in b)
    bits = max_a.bit_length() + max_b.bit_length() + (order + 1).bit_length() + 2
    width = (bits + 7) // 8
    count = order + 1

    if all(c >= 0 for c in a) and all(c >= 0 for c in b):
        return _unpack(_pack(a, width) * _pack(b, width), count, width)

    a_pos = [c if c > 0 else 0 for c in a]
    a_neg = [-c if c < 0 else 0 for c in a]
    b_pos = [c if c > 0 else 0 for c in b]
    b_neg = [-c if c < 0 else 0 for c in b]
    ap, an = _pack(a_pos, width), _pack(a_neg, width)
    bp, bn = _pack(b_pos, width), _pack(b_neg, width)
    # same-sign and mixed-sign convolutions are both digitwise nonnegative,
    # and mixed >= 0 digit by digit, so the integer subtraction is exact.
    same = ap * bp + an * bn
    mixed = (ap + an) * (bp + bn) - same
    ps = _unpack(same, count, width)
    ms = _unpack(mixed, count, width)
    return [p - m for p, m in zip(ps, ms)]
