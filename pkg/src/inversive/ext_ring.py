"""Quadratic quotient rings Z/p^eZ[t]/(t^2 + c1 t + c0).

Elements are pairs ``(u0, u1)`` standing for ``u0 + u1*t``. When the modulus
polynomial is basic irreducible the quotient is the Galois ring GR(p^e, 2);
the arithmetic below does not rely on that, only the order routine does.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Optional, Tuple, Union

from .exceptions import NotAUnit
from .ring import (
    Modulus,
    factorize,
    is_qr,
    merge_factorizations,
    mod_inverse,
    order_by_divide_down,
    sqrt_mod,
)


class ExtElem(NamedTuple):
    u0: int
    u1: int


ONE = ExtElem(1, 0)


@dataclass(frozen=True)
class QuadExt:
    """Z/p^eZ[t] modulo the monic polynomial ``t^2 + c1*t + c0``."""

    m: Modulus
    c1: int
    c0: int

    def __post_init__(self):
        object.__setattr__(self, "c1", self.c1 % self.m.q)
        object.__setattr__(self, "c0", self.c0 % self.m.q)

    @property
    def t(self) -> ExtElem:
        return ExtElem(0, 1)

    def elem(self, u0: int, u1: int = 0) -> ExtElem:
        q = self.m.q
        return ExtElem(u0 % q, u1 % q)

    def add(self, x: ExtElem, y: ExtElem) -> ExtElem:
        return self.elem(x[0] + y[0], x[1] + y[1])

    def sub(self, x: ExtElem, y: ExtElem) -> ExtElem:
        return self.elem(x[0] - y[0], x[1] - y[1])

    def mul(self, x: ExtElem, y: ExtElem) -> ExtElem:
        return ext_mul(x, y, self)

    def inverse(self, x: ExtElem) -> ExtElem:
        return ext_inverse(x, self)

    def pow(self, x: ExtElem, n: int) -> ExtElem:
        result, base = ONE, self.elem(*x)
        while n:
            if n & 1:
                result = ext_mul(result, base, self)
            base = ext_mul(base, base, self)
            n >>= 1
        return result

    def norm(self, x: ExtElem) -> int:
        u0, u1 = x
        return (u0 * u0 - self.c1 * u0 * u1 + self.c0 * u1 * u1) % self.m.q

    def is_unit(self, x: ExtElem) -> bool:
        return self.norm(x) % self.m.p != 0

    def lower(self, e: int) -> "QuadExt":
        """Same modulus polynomial over Z/p^eZ for a smaller exponent."""
        return QuadExt(self.m.lower(e), self.c1, self.c0)

    def reduce(self, x: ExtElem) -> ExtElem:
        return self.elem(*x)


def ext_mul(x: ExtElem, y: ExtElem, R: QuadExt) -> ExtElem:
    q = R.m.q
    hi = x[1] * y[1]
    # t^2 = -c1*t - c0
    return ExtElem(
        (x[0] * y[0] - R.c0 * hi) % q,
        (x[0] * y[1] + x[1] * y[0] - R.c1 * hi) % q,
    )


def ext_inverse(x: ExtElem, R: QuadExt) -> ExtElem:
    """Inverse via the conjugate: x * conj(x) = N(x) lies in Z/p^eZ."""
    n = R.norm(x)
    if n % R.m.p == 0:
        raise NotAUnit(f"{tuple(x)} is not a unit of the quotient ring")
    n_inv = mod_inverse(n, R.m)
    u0, u1 = x
    return R.elem((u0 - R.c1 * u1) * n_inv, -u1 * n_inv)


@lru_cache(maxsize=None)
def ext_group_exponent(p: int, e: int) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """p^(2(e-1)) (p^2 - 1), the order of GR(p^e, 2)^x, with factorization."""
    fac = merge_factorizations(factorize(p - 1), factorize(p + 1), [(p, 2 * (e - 1))])
    return p ** (2 * (e - 1)) * (p * p - 1), tuple(fac)


def ext_order(x: ExtElem, R: QuadExt) -> int:
    if not R.is_unit(x):
        raise NotAUnit(f"{tuple(x)} is not a unit of the quotient ring")
    exponent, fac = ext_group_exponent(R.m.p, R.m.e)
    return order_by_divide_down(R.reduce(x), exponent, fac, R.pow, ONE)


def g_polynomial(a: int, b: int, m: Modulus) -> QuadExt:
    """Z/p^eZ[t]/(g) for g(t) = t^2 + (a^-1 b^2 + 2) t + 1.

    The roots of g are alpha/beta and beta/alpha.
    """
    c = (mod_inverse(a, m) * b * b + 2) % m.q
    return QuadExt(m, c, 1)


def poly_order_g(a: int, b: int, m: Modulus) -> int:
    """ord(alpha/beta) modulo p^e, computed as the order of t in Z/p^eZ[t]/(g)."""
    disc = (4 * a + b * b) % m.q
    if a % m.p == 0 or b % m.p == 0:
        raise NotAUnit("poly_order_g expects a and b to be units")
    if is_qr(disc, m):
        raise ValueError("poly_order_g expects 4a + b^2 to be a non-residue")
    R = g_polynomial(a, b, m)
    return ext_order(R.t, R)


@dataclass(frozen=True)
class RootsResult:
    """Roots of f(t) = t^2 - b t - a.

    ``kind`` is ``"split"`` (alpha, beta are residues) or ``"irreducible"``
    (alpha, beta are elements of ``ext`` = Z/p^eZ[t]/(f)).
    """

    kind: str
    alpha: Union[int, ExtElem]
    beta: Union[int, ExtElem]
    ext: Optional[QuadExt] = None

    @property
    def split(self) -> bool:
        return self.kind == "split"

    def swapped(self) -> "RootsResult":
        return RootsResult(self.kind, self.beta, self.alpha, self.ext)


def roots_of_f(a: int, b: int, m: Modulus) -> RootsResult:
    q = m.q
    disc = (4 * a + b * b) % q
    if disc % m.p == 0:
        raise NotAUnit("4a + b^2 is not a unit; the roots are not separated")
    if is_qr(disc, m):
        r = sqrt_mod(disc, m)
        half = mod_inverse(2, m)
        return RootsResult("split", (b + r) * half % q, (b - r) * half % q)
    R = QuadExt(m, -b, -a)
    alpha = R.t
    return RootsResult("irreducible", alpha, R.sub(R.elem(b), alpha), R)


def is_basic_irreducible(a: int, b: int, m: Modulus) -> bool:
    return (4 * a + b * b) % m.p != 0
