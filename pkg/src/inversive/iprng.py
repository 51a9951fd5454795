"""The inversive generator x -> a x^-1 + b over Z/p^eZ and its companion recurrence."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, List, NamedTuple

from .ring import Modulus


@dataclass(frozen=True)
class Params:
    m: Modulus
    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.m.q)
        object.__setattr__(self, "b", self.b % self.m.q)

    @classmethod
    def of(cls, p: int, e: int, a: int, b: int) -> "Params":
        return cls(Modulus(p, e), a, b)

    @property
    def p(self) -> int:
        return self.m.p

    @property
    def e(self) -> int:
        return self.m.e

    @property
    def q(self) -> int:
        return self.m.q

    def as_dict(self) -> dict:
        return {"p": self.p, "e": self.e, "a": self.a, "b": self.b}

    def __str__(self):
        return f"(a={self.a}, b={self.b}, p={self.p}, e={self.e})"


class PeriodInfo(NamedTuple):
    pre_period: int
    period: int


def step(x: int, P: Params) -> int:
    q = P.m.q
    if x % P.m.p == 0:
        return P.b
    return (P.a * pow(x, -1, q) + P.b) % q


def iter_orbit(x0: int, P: Params) -> Iterator[int]:
    """Endless stream x0, phi(x0), phi^2(x0), ..."""
    x = x0 % P.q
    while True:
        yield x
        x = step(x, P)


def orbit(x0: int, n: int, P: Params) -> List[int]:
    return list(islice(iter_orbit(x0, P), n))


def slrs(x0: int, n: int, P: Params) -> List[int]:
    """First n terms of y_{k+2} = b y_{k+1} + a y_k with (y0, y1) = (1, x0)."""
    q = P.q
    out: List[int] = []
    y0, y1 = 1 % q, x0 % q
    for _ in range(n):
        out.append(y0)
        y0, y1 = y1, (P.b * y1 + P.a * y0) % q
    return out


def _mat_mul(A, B, q):
    return (
        ((A[0][0] * B[0][0] + A[0][1] * B[1][0]) % q, (A[0][0] * B[0][1] + A[0][1] * B[1][1]) % q),
        ((A[1][0] * B[0][0] + A[1][1] * B[1][0]) % q, (A[1][0] * B[0][1] + A[1][1] * B[1][1]) % q),
    )


def slrs_term(x0: int, n: int, P: Params) -> int:
    """y_n of the companion recurrence by companion-matrix powering."""
    q = P.q
    result = ((1, 0), (0, 1))
    base = ((P.b, P.a), (1, 0))
    k = n
    while k:
        if k & 1:
            result = _mat_mul(result, base, q)
        base = _mat_mul(base, base, q)
        k >>= 1
    # (y_{n+1}, y_n)^T = M^n (y_1, y_0)^T
    return (result[1][0] * x0 + result[1][1]) % q


def measure_period(x0: int, P: Params) -> PeriodInfo:
    """Exact (pre-period, least period) by iterating until the first repeat."""
    seen = {}
    for i, x in enumerate(iter_orbit(x0, P)):
        if x in seen:
            return PeriodInfo(seen[x], i - seen[x])
        seen[x] = i
    raise AssertionError("unreachable")
