"""Exact arithmetic in Z/p^eZ for an odd prime p.

Residues are plain Python ints reduced into ``[0, q)``; the :class:`Modulus`
carries the context. Everything here is a pure function.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, List, Tuple, TypeVar

from .exceptions import InvalidParameters, NoFiniteOrder, NotAResidue, NotAUnit

Factorization = List[Tuple[int, int]]
T = TypeVar("T")

MAX_MODULUS = 2**63

# Deterministic for every n < 3.3e24, which covers the whole 63-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Modulus:
    """The ring Z/p^eZ, with ``p`` an odd prime and ``e >= 1``."""

    p: int
    e: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.e, int):
            raise InvalidParameters("p and e must be integers")
        if self.p == 2 or not is_prime(self.p):
            raise InvalidParameters("p must be an odd prime")
        if self.e < 1:
            raise InvalidParameters("e must be at least 1")
        if self.p**self.e >= MAX_MODULUS:
            raise InvalidParameters("p**e must fit in 63 bits")

    @property
    def q(self) -> int:
        return self.p**self.e

    def reduce(self, x: int) -> int:
        return x % self.q

    def is_unit(self, x: int) -> bool:
        return x % self.p != 0

    def lower(self, e: int) -> "Modulus":
        """The quotient ring Z/p^eZ for a smaller exponent."""
        return Modulus(self.p, e)

    def __str__(self):
        return f"Z/{self.p}^{self.e}"


def mod_inverse(x: int, m: Modulus) -> int:
    if x % m.p == 0:
        raise NotAUnit(f"{x} is not a unit modulo {m.p}^{m.e}")
    return pow(x, -1, m.q)


def logp(x: int, m: Modulus) -> int:
    """p-adic valuation of ``x`` capped at ``e``; ``logp(0) == e``."""
    x %= m.q
    if x == 0:
        return m.e
    k = 0
    while x % m.p == 0:
        x //= m.p
        k += 1
    return k


def factorize(n: int) -> Factorization:
    """Trial-division factorization, primes in increasing order."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: Factorization = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            k = 0
            while n % d == 0:
                n //= d
                k += 1
            out.append((d, k))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def merge_factorizations(*parts: Factorization) -> Factorization:
    acc: dict = {}
    for part in parts:
        for prime, k in part:
            acc[prime] = acc.get(prime, 0) + k
    return sorted((prime, k) for prime, k in acc.items() if k > 0)


@lru_cache(maxsize=None)
def unit_group_exponent(p: int, e: int) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """Order p^(e-1)(p-1) of the unit group of Z/p^eZ, with its factorization."""
    fac = merge_factorizations(factorize(p - 1), [(p, e - 1)])
    return p ** (e - 1) * (p - 1), tuple(fac)


def order_by_divide_down(
    x: T,
    exponent: int,
    factors,
    power: Callable[[T, int], T],
    one: T,
) -> int:
    """Least m with ``power(x, m) == one``, given that m divides ``exponent``.

    Strips each prime factor from the exponent while the power stays trivial.
    """
    if power(x, exponent) != one:
        raise NoFiniteOrder("element does not satisfy x**E == 1")
    order = exponent
    for prime, _ in factors:
        while order % prime == 0 and power(x, order // prime) == one:
            order //= prime
    return order


def mult_order(x: int, m: Modulus) -> int:
    if x % m.p == 0:
        raise NotAUnit(f"{x} is not a unit modulo {m.p}^{m.e}")
    exponent, fac = unit_group_exponent(m.p, m.e)
    return order_by_divide_down(x % m.q, exponent, fac, lambda y, k: pow(y, k, m.q), 1)


def is_qr(d: int, m: Modulus) -> bool:
    """Quadratic-residue test for a unit ``d`` (Euler's criterion mod p).

    For odd p the reduction map on unit groups has kernel of odd order, so a
    unit is a square modulo p^e exactly when it is a square modulo p.
    """
    if d % m.p == 0:
        raise NotAUnit(f"{d} is not a unit modulo {m.p}")
    return pow(d % m.p, (m.p - 1) // 2, m.p) == 1


def _tonelli_shanks(n: int, p: int) -> int:
    n %= p
    if p % 4 == 3:
        return pow(n, (p + 1) // 4, p)
    s, qq = 0, p - 1
    while qq % 2 == 0:
        qq //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    mm, c, t, r = s, pow(z, qq, p), pow(n, qq, p), pow(n, (qq + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (mm - i - 1), p)
        mm, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt_mod(d: int, m: Modulus) -> int:
    """Canonical (smaller) square root of a unit quadratic residue mod p^e."""
    if not is_qr(d, m):
        raise NotAResidue(f"{d} is not a quadratic residue modulo {m.p}^{m.e}")
    p = m.p
    r = _tonelli_shanks(d, p)
    mod = p
    for _ in range(1, m.e):
        mod *= p
        # Newton step; 2r is a unit because p is odd and r is a unit.
        r = (r - (r * r - d) * pow(2 * r, -1, mod)) % mod
    r %= m.q
    return min(r, m.q - r)
