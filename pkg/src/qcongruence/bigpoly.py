"""
Dense exact polynomial arithmetic over Z and Q, plus integer Laurent
polynomials.

Coefficients are stored ascending, entry i holding the coefficient of q^i,
with trailing zeros trimmed so every value has exactly one representation.
The zero polynomial is the empty tuple and its degree is -inf, which keeps
degree(a*b) == degree(a) + degree(b) true without special cases.

Multiplication picks between schoolbook convolution (iterating over the
operand with fewer nonzero entries, so multiplying by a binomial stays
linear in the other operand) and Kronecker substitution for two genuinely
dense operands: coefficients are packed into big nonnegative integers in
fixed byte-aligned slots, CPython multiplies those, and the convolution is
read back out of the slots. Positive and negative parts are packed
separately so the slot digits stay nonnegative. Everything is exact.
"""
from __future__ import annotations

import dataclasses
import math
from fractions import Fraction

from .exceptions import NotDivisible

NEG_INF = float("-inf")

# Slot cost of Kronecker packing is tiny, but for short convolutions the
# schoolbook loop wins. Crossover measured loosely; exactness never depends
# on it.
_KRON_MIN_OPS = 4096
_KRON_MIN_LEN = 24


def _trim(cs):
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def _fmt_terms(coeffs, shift=0):
    """Render ascending coefficients as a human-readable sum in q."""
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        e = i + shift
        if e == 0:
            body = str(abs(c) if c < 0 else c)
            if c < 0:
                parts.append(("-", body) if parts else ("", "-" + body))
                continue
        else:
            a = abs(c)
            head = "" if a == 1 else f"{a}*"
            body = f"{head}q" if e == 1 else f"{head}q^{e}"
        if not parts:
            parts.append(("", ("-" if c < 0 else "") + body))
        else:
            parts.append(("-" if c < 0 else "+", body))
    out = parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _pack(cs, nbytes):
    buf = bytearray(len(cs) * nbytes)
    for i, c in enumerate(cs):
        if c:
            buf[i * nbytes:(i + 1) * nbytes] = c.to_bytes(nbytes, "little")
    return int.from_bytes(buf, "little")


def _unpack(z, nslots, nbytes):
    buf = z.to_bytes(nslots * nbytes, "little")
    return [
        int.from_bytes(buf[i * nbytes:(i + 1) * nbytes], "little")
        for i in range(nslots)
    ]


def _mul_kronecker(a, b):
    maxa = max(map(abs, a), default=0)
    maxb = max(map(abs, b), default=0)
    if maxa == 0 or maxb == 0:
        return [0] * max(len(a) + len(b) - 1, 0)
    # Each slot of pos*pos + neg*neg is at most 2 * maxa * maxb * minlen,
    # and bit_length of that bound gives a strict power-of-two cap.
    bound = 2 * maxa * maxb * min(len(a), len(b))
    nbytes = (bound.bit_length() + 8) // 8
    ap = _pack([c if c > 0 else 0 for c in a], nbytes)
    an = _pack([-c if c < 0 else 0 for c in a], nbytes)
    bp = _pack([c if c > 0 else 0 for c in b], nbytes)
    bn = _pack([-c if c < 0 else 0 for c in b], nbytes)
    n = len(a) + len(b) - 1
    plus = _unpack(ap * bp + an * bn, n, nbytes)
    minus = _unpack(ap * bn + an * bp, n, nbytes)
    return [p - m for p, m in zip(plus, minus)]


def _mul_school(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                if d:
                    out[i + j] += c * d
    return out


def _mul_lists(a, b):
    """Exact convolution of two nonempty coefficient lists."""
    nza = sum(1 for c in a if c)
    nzb = sum(1 for c in b if c)
    if nza > nzb:
        a, b, nza, nzb = b, a, nzb, nza
    if nza == 0:
        return []
    if (nza * len(b) < _KRON_MIN_OPS or len(a) < _KRON_MIN_LEN
            or len(b) < _KRON_MIN_LEN):
        return _mul_school(a, b)
    return _mul_kronecker(a, b)


@dataclasses.dataclass(init=False, frozen=True, eq=True)
class IntPoly:
    """A polynomial in q with integer coefficients."""

    coeffs: tuple

    def __init__(self, *coeffs):
        if len(coeffs) == 1 and not isinstance(coeffs[0], int):
            coeffs = tuple(coeffs[0])
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __repr__(self):
        """
        >>> IntPoly(-1, 0, 1)
        q^2 - 1
        >>> IntPoly()
        0
        """
        return _fmt_terms(self.coeffs)

    @property
    def degree(self):
        """Degree, with the zero polynomial at -inf."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPoly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other if isinstance(other, IntPoly) else IntPoly(-other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return IntPoly()
            return IntPoly([other * c for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return IntPoly()
        return IntPoly(_mul_lists(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = IntPoly(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def times_q(self, k):
        """Multiply by q^k, k >= 0.

        >>> IntPoly(1, 1).times_q(2)
        q^3 + q^2
        """
        if k < 0:
            raise ValueError("use LaurentInt for negative exponents")
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def evaluate(self, x):
        """Horner evaluation at an integer or Fraction.

        >>> IntPoly(1, 1, 1).evaluate(2)
        7
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def content(self):
        """gcd of the coefficients, 0 for the zero polynomial.

        >>> IntPoly(6, -9, 3).content()
        3
        """
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def div_exact(self, other):
        """Quotient self / other when the division is exact over Z.

        Raises NotDivisible otherwise.

        >>> (IntPoly(-1, 0, 1)).div_exact(IntPoly(1, 1))
        q - 1
        >>> IntPoly(1, 1).div_exact(IntPoly(0, 1))
        Traceback (most recent call last):
        ...
        qcongruence.exceptions.NotDivisible: remainder 1
        """
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero:
            return IntPoly()
        bc = other.coeffs
        db = len(bc)
        rem = list(self.coeffs)
        if len(rem) < db:
            raise NotDivisible(f"remainder {self!r}")
        lead = bc[-1]
        qout = [0] * (len(rem) - db + 1)
        for i in range(len(rem) - db, -1, -1):
            t = rem[i + db - 1]
            if not t:
                continue
            if t % lead:
                raise NotDivisible("leading coefficient does not divide")
            c = t // lead
            qout[i] = c
            for j in range(db):
                rem[i + j] -= c * bc[j]
        if any(rem):
            raise NotDivisible(f"remainder {IntPoly(rem)!r}")
        return IntPoly(qout)

    def rem_monic(self, mod):
        """Remainder of self modulo a monic integer polynomial.

        >>> IntPoly(0, 0, 0, 0, 0, 1).rem_monic(IntPoly(1, 1, 1))
        -q - 1
        """
        if mod.lead != 1:
            raise ValueError("modulus must be monic")
        dm = len(mod.coeffs)
        if dm == 1:
            return IntPoly()
        rem = list(self.coeffs)
        mc = mod.coeffs
        for i in range(len(rem) - dm, -1, -1):
            c = rem[i + dm - 1]
            if c:
                for j in range(dm):
                    rem[i + j] -= c * mc[j]
        return IntPoly(rem[:dm - 1])

    def to_rat(self):
        return RatPoly([Fraction(c) for c in self.coeffs])


@dataclasses.dataclass(init=False, frozen=True, eq=True)
class RatPoly:
    """A polynomial in q with rational coefficients."""

    coeffs: tuple

    def __init__(self, *coeffs):
        if len(coeffs) == 1 and not isinstance(coeffs[0], (int, Fraction)):
            coeffs = tuple(coeffs[0])
        object.__setattr__(
            self, "coeffs", _trim([Fraction(c) for c in coeffs]))

    def __repr__(self):
        return _fmt_terms(self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _as_rat(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_as_rat(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly([other * c for c in self.coeffs])
        other = _as_rat(other)
        if self.is_zero or other.is_zero:
            return RatPoly()
        # Rational products stay small here (field reductions, Euclid), so
        # plain convolution is enough.
        return RatPoly(_mul_school(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _as_rat(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        bc = other.coeffs
        db = len(bc)
        if len(rem) < db:
            return RatPoly(), self
        lead = bc[-1]
        qout = [Fraction(0)] * (len(rem) - db + 1)
        for i in range(len(rem) - db, -1, -1):
            c = rem[i + db - 1] / lead
            if c:
                qout[i] = c
                for j in range(db):
                    rem[i + j] -= c * bc[j]
        return RatPoly(qout), RatPoly(rem[:db - 1])

    def rem_mod(self, mod):
        """Remainder modulo another polynomial (IntPoly or RatPoly).

        >>> RatPoly(0, 0, 1).rem_mod(IntPoly(1, 1, 1))
        -q - 1
        """
        return divmod(self, _as_rat(mod))[1]

    def evaluate(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self):
        if self.is_zero:
            return self
        inv = 1 / self.lead
        return RatPoly([c * inv for c in self.coeffs])

    def clear_denominators(self):
        """Return (IntPoly, d) with d > 0 minimal and d * self integral."""
        if self.is_zero:
            return IntPoly(), 1
        d = math.lcm(*(c.denominator for c in self.coeffs))
        return IntPoly([int(c * d) for c in self.coeffs]), d


def _as_rat(p):
    if isinstance(p, RatPoly):
        return p
    if isinstance(p, IntPoly):
        return p.to_rat()
    return RatPoly(p)


@dataclasses.dataclass(init=False, frozen=True, eq=True)
class LaurentInt:
    """An integer Laurent polynomial, base * q^shift.

    Normalized so the base has a nonzero constant term (or is zero with
    shift 0), which makes equality structural.

    >>> LaurentInt(IntPoly(0, -1, -1), -3)
    -q^-1 - q^-2
    """

    base: IntPoly
    shift: int

    def __init__(self, base, shift=0):
        if not isinstance(base, IntPoly):
            base = IntPoly(base)
        if base.is_zero:
            shift = 0
        else:
            k = 0
            while not base.coeffs[k]:
                k += 1
            if k:
                base = IntPoly(base.coeffs[k:])
                shift += k
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "shift", shift)

    def __repr__(self):
        return _fmt_terms(self.base.coeffs, self.shift)

    @property
    def is_zero(self):
        return self.base.is_zero

    @property
    def min_exp(self):
        return self.shift

    @property
    def max_exp(self):
        return self.shift + len(self.base.coeffs) - 1

    def __add__(self, other):
        other = _as_laurent(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        s = min(self.shift, other.shift)
        a = (0,) * (self.shift - s) + self.base.coeffs
        b = (0,) * (other.shift - s) + other.base.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LaurentInt(IntPoly(out), s)

    __radd__ = __add__

    def __neg__(self):
        return LaurentInt(-self.base, self.shift)

    def __sub__(self, other):
        return self + (-_as_laurent(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentInt(self.base * other, self.shift)
        other = _as_laurent(other)
        return LaurentInt(self.base * other.base, self.shift + other.shift)

    __rmul__ = __mul__

    def times_q(self, k):
        """Multiply by q^k; k may be negative."""
        if self.is_zero:
            return self
        return LaurentInt(self.base, self.shift + k)

    def evaluate_at_one(self):
        return self.base.evaluate(1)


def _as_laurent(p):
    if isinstance(p, LaurentInt):
        return p
    if isinstance(p, IntPoly):
        return LaurentInt(p, 0)
    return LaurentInt(IntPoly(p), 0)
