"""
Cyclotomic polynomials and the 1 - q^h factorization layer.

Phi_d is built from the Moebius product over the squarefree divisors e of d:
multiply out every (q^{d/e} - 1) with mu(e) = +1, then exactly divide by the
ones with mu(e) = -1. Multiplying or dividing by a binomial q^h - 1 is a
linear pass, so the whole construction is fast enough to tabulate thousands
of Phi_d. The classical division construction (q^d - 1 over the proper
lower Phi_e) is kept as phi_by_division; it is slower and exists to
cross-check the product route.
"""
from __future__ import annotations

import functools

from .bigpoly import IntPoly, LaurentInt
from .exceptions import DomainError


def divisors(n):
    """All positive divisors of n in increasing order.

    >>> divisors(12)
    [1, 2, 3, 4, 6, 12]
    """
    if n < 1:
        raise DomainError(f"divisors of {n}")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def prime_factors(n):
    """Distinct prime factors in increasing order.

    >>> prime_factors(360)
    [2, 3, 5]
    """
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return out


def euler_phi(n):
    """Euler's totient.

    >>> euler_phi(36)
    12
    """
    if n < 1:
        raise DomainError(f"totient of {n}")
    out = n
    for p in prime_factors(n):
        out = out // p * (p - 1)
    return out


def _binom_mul(cs, h):
    """cs times (q^h - 1), as a coefficient list."""
    out = [-c for c in cs] + [0] * h
    for i, c in enumerate(cs):
        out[i + h] += c
    return out


def _binom_div(cs, h):
    """Exact quotient of cs by (q^h - 1).

    From f = g*(q^h - 1): f_i = g_{i-h} - g_i, so g_i = g_{i-h} - f_i with
    g vanishing outside 0 <= i < len(f) - h. The top h positions of f are a
    consistency check on exactness.
    """
    n = len(cs) - h
    g = [0] * n
    for i in range(n):
        g[i] = (g[i - h] if i >= h else 0) - cs[i]
    for i in range(n, len(cs)):
        assert cs[i] == (g[i - h] if i - h < n else 0), "inexact binomial division"
    return g


@functools.lru_cache(maxsize=None)
def phi(d):
    """The d-th cyclotomic polynomial as an IntPoly.

    >>> phi(1)
    q - 1
    >>> phi(4)
    q^2 + 1
    >>> phi(6)
    q^2 - q + 1
    >>> phi(12)
    q^4 - q^2 + 1
    """
    if d < 1:
        raise DomainError(f"phi({d})")
    ps = prime_factors(d)
    muls, divs = [], []
    for mask in range(1 << len(ps)):
        e = 1
        bits = 0
        for i, p in enumerate(ps):
            if mask >> i & 1:
                e *= p
                bits += 1
        (muls if bits % 2 == 0 else divs).append(d // e)
    cs = [1]
    for h in sorted(muls):
        cs = _binom_mul(cs, h)
    for h in sorted(divs, reverse=True):
        cs = _binom_div(cs, h)
    return IntPoly(cs)


def phi_by_division(d, _memo={}):
    """Phi_d by dividing q^d - 1 by all lower Phi_e with e | d, e < d.

    Quadratic; retained as an independent construction for cross-checks.
    """
    if d < 1:
        raise DomainError(f"phi({d})")
    got = _memo.get(d)
    if got is not None:
        return got
    num = IntPoly([-1] + [0] * (d - 1) + [1])
    for e in divisors(d):
        if e < d:
            num = num.div_exact(phi_by_division(e))
    _memo[d] = num
    return num


def phi_at_one(d):
    """Phi_d(1) without expanding: p when d is a power of the prime p,
    otherwise 1. Defined for d >= 2.

    >>> phi_at_one(9)
    3
    >>> phi_at_one(6)
    1
    """
    if d < 2:
        raise DomainError(f"phi_at_one({d}) is not defined")
    ps = prime_factors(d)
    return ps[0] if len(ps) == 1 else 1


def q_int(n):
    """The q-integer [n]_q as an integer Laurent polynomial.

    [n]_q = (1 - q^n)/(1 - q); for n < 0 this equals -q^n [-n]_q.

    >>> q_int(3)
    q^2 + q + 1
    >>> q_int(-2)
    -q^-1 - q^-2
    >>> q_int(0)
    0
    """
    if n == 0:
        return LaurentInt(IntPoly(), 0)
    if n > 0:
        return LaurentInt(IntPoly([1] * n), 0)
    return LaurentInt(IntPoly([-1] * (-n)), n)
