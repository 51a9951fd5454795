"""Closed-form predictions of pre-periods, periods and whole graph structures.

:func:`classify` sorts a parameter tuple into one of the case labels below and
precomputes the roots of f(t) = t^2 - b t - a and the orders of alpha/beta that
every later formula needs. :func:`predict_period` and :func:`predict_structure`
then evaluate the closed forms for that case without iterating the generator.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

from .exceptions import WrongCase
from .ext_ring import ExtElem, QuadExt, ext_order, roots_of_f
from .iprng import Params, PeriodInfo, slrs, step
from .ring import Modulus, is_qr, logp, mod_inverse, mult_order
from .structure import (
    Component,
    ConvergentTree,
    CycleSet,
    GComponent,
    GraphStructure,
    SelfLoop,
    StructureResult,
    Verdict,
)


class CaseLabel(str, enum.Enum):
    E1_A_ZERO = "E1_A_ZERO"
    E1_B_ZERO = "E1_B_ZERO"
    E1_DISC_ZERO = "E1_DISC_ZERO"
    E1_GENERIC = "E1_GENERIC"
    A_ZERO = "A_ZERO"
    AB_IN_P = "AB_IN_P"
    A_IN_P = "A_IN_P"
    B_IN_P_QR = "B_IN_P_QR"
    B_IN_P_NQR = "B_IN_P_NQR"
    UNITS_QR = "UNITS_QR"
    UNITS_NQR = "UNITS_NQR"
    UNITS_DISC_ZERO = "UNITS_DISC_ZERO"
    UNSUPPORTED_DISC_ZERO = "UNSUPPORTED_DISC_ZERO"

    def __str__(self):
        return self.value


# Labels whose structure prediction is a definite claim.
SUPPORTED_LABELS = frozenset(CaseLabel) - {CaseLabel.AB_IN_P, CaseLabel.UNSUPPORTED_DISC_ZERO}

_ROOT_LABELS = {
    CaseLabel.E1_GENERIC,
    CaseLabel.B_IN_P_QR,
    CaseLabel.B_IN_P_NQR,
    CaseLabel.UNITS_QR,
    CaseLabel.UNITS_NQR,
}


def _exact_div(num: int, den: int) -> int:
    qt, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"cycle count {num}/{den} is not integral")
    return qt


@dataclass
class CaseAnalysis:
    """Case label plus the constants the closed forms for that case use.

    Only the fields relevant to ``label`` are populated:

    * ``roots``, ``k``, ``ord_full``, ``qr`` for the separated-root cases,
      where ``k`` is the order of alpha/beta mod p and ``ord_full`` mod p^e;
    * ``k_b`` = logp(b) for the b-in-(p) cases;
    * ``omega`` = b/2 mod p and ``f_omega`` = f(omega) mod p^2 for the
      repeated-root-mod-p cases;
    * ``logp_a``, ``h``, ``tree_k`` and the fixed point ``x_tilde`` for the
      convergent-tree case.
    """

    params: Params
    label: CaseLabel
    roots: Optional[object] = None
    qr: Optional[bool] = None
    k_b: Optional[int] = None
    k: Optional[int] = None
    ord_full: Optional[int] = None
    omega: Optional[int] = None
    f_omega: Optional[int] = None
    logp_a: Optional[int] = None
    h: Optional[int] = None
    tree_k: Optional[int] = None
    x_tilde: Optional[int] = None
    _ext: Optional[QuadExt] = field(default=None, repr=False, compare=False)
    _alpha: Optional[ExtElem] = field(default=None, repr=False, compare=False)
    _beta: Optional[ExtElem] = field(default=None, repr=False, compare=False)
    _rho: Optional[ExtElem] = field(default=None, repr=False, compare=False)
    _orders: Dict[int, int] = field(default_factory=dict, repr=False, compare=False)
    _dlog: Optional[Dict[ExtElem, int]] = field(default=None, repr=False, compare=False)
    _main_cycle: Optional[Dict[int, int]] = field(default=None, repr=False, compare=False)

    @property
    def supported(self) -> bool:
        return self.label in SUPPORTED_LABELS

    @property
    def alpha(self):
        return None if self.roots is None else self.roots.alpha

    @property
    def beta(self):
        return None if self.roots is None else self.roots.beta

    def e0(self, x0: int) -> int:
        P = self.params
        return logp(x0 * x0 - P.b * x0 - P.a, P.m)

    def order_at(self, level: int) -> int:
        """ord(alpha/beta) modulo p^level."""
        if level not in self._orders:
            P = self.params
            if self.roots.split:
                self._orders[level] = mult_order(self._rho.u0, Modulus(P.p, level))
            else:
                R = self._ext.lower(level)
                self._orders[level] = ext_order(R.reduce(self._rho), R)
        return self._orders[level]

    def omega_bar_index(self, x0: int) -> Optional[int]:
        """n in [1, k-1] with (x0-alpha)/(x0-beta) == (alpha/beta)^n mod p, else None.

        That n is the first index at which the companion recurrence leaves the
        units, so it is also the number of steps from x0 to the state b.
        """
        if self._dlog is None:
            R1 = self._ext.lower(1)
            rho1 = R1.reduce(self._rho)
            table, cur = {}, rho1
            for n in range(1, self.k):
                table[cur] = n
                cur = R1.mul(cur, rho1)
            self._dlog = table
        R1 = self._ext.lower(1)
        x = R1.elem(x0)
        num = R1.sub(x, R1.reduce(self._alpha))
        den = R1.sub(x, R1.reduce(self._beta))
        if not R1.is_unit(den):
            return None
        return self._dlog.get(R1.mul(num, R1.inverse(den)))

    def root_offset(self, x0: int) -> int:
        """max(logp(x0 - alpha), logp(x0 - beta)); zero when the roots are not residues."""
        if not self.roots.split:
            return 0
        m = self.params.m
        return max(logp(x0 - self.alpha, m), logp(x0 - self.beta, m))

    def main_cycle_position(self, x0: int, length: int) -> Optional[int]:
        """Position j of x0 on the cycle b -> phi(b) -> ... of the G component.

        The cycle nodes are phi^j(b) = y_{j+1} / y_j for the companion
        recurrence seeded with (1, b).
        """
        if self._main_cycle is None:
            P = self.params
            ys = slrs(P.b, length + 1, P)
            self._main_cycle = {
                ys[j + 1] * mod_inverse(ys[j], P.m) % P.q: j for j in range(length)
            }
        return self._main_cycle.get(x0)


def classify(P: Params, swap_roots: bool = False) -> CaseAnalysis:
    m, a, b = P.m, P.a, P.b
    p, e, q = m.p, m.e, m.q
    disc = (4 * a + b * b) % q
    A = None

    if e == 1:
        if a == 0:
            A = CaseAnalysis(P, CaseLabel.E1_A_ZERO)
        elif b == 0:
            A = CaseAnalysis(P, CaseLabel.E1_B_ZERO, qr=is_qr(a, m))
        elif disc == 0:
            A = CaseAnalysis(P, CaseLabel.E1_DISC_ZERO, omega=b * mod_inverse(2, m) % p)
        else:
            A = CaseAnalysis(P, CaseLabel.E1_GENERIC, qr=is_qr(disc, m))
    elif a == 0:
        A = CaseAnalysis(P, CaseLabel.A_ZERO)
    elif a % p == 0:
        if b % p == 0:
            A = CaseAnalysis(P, CaseLabel.AB_IN_P)
        else:
            A = _tree_case(P)
    elif b % p == 0:
        qr = is_qr(disc, m)
        label = CaseLabel.B_IN_P_QR if qr else CaseLabel.B_IN_P_NQR
        A = CaseAnalysis(P, label, qr=qr, k_b=logp(b, m))
    elif disc % p:
        qr = is_qr(disc, m)
        A = CaseAnalysis(P, CaseLabel.UNITS_QR if qr else CaseLabel.UNITS_NQR, qr=qr)
    else:
        omega = b * mod_inverse(2, m) % p
        f_omega = (omega * omega - b * omega - a) % (p * p)
        label = CaseLabel.UNITS_DISC_ZERO if f_omega else CaseLabel.UNSUPPORTED_DISC_ZERO
        A = CaseAnalysis(P, label, omega=omega, f_omega=f_omega)

    if A.label in _ROOT_LABELS:
        _attach_roots(A, swap_roots)
    return A


def _attach_roots(A: CaseAnalysis, swap: bool) -> None:
    P = A.params
    roots = roots_of_f(P.a, P.b, P.m)
    if swap:
        roots = roots.swapped()
    R = QuadExt(P.m, -P.b, -P.a)
    if roots.split:
        alpha, beta = R.elem(roots.alpha), R.elem(roots.beta)
    else:
        alpha, beta = roots.alpha, roots.beta
    A.roots = roots
    A._ext, A._alpha, A._beta = R, alpha, beta
    A._rho = R.mul(alpha, R.inverse(beta))
    A.k = A.order_at(1)
    A.ord_full = A.order_at(P.e)


def _tree_case(P: Params) -> CaseAnalysis:
    la = logp(P.a, P.m)
    h = -(-P.e // la) - 1
    x = P.b
    for _ in range(h):
        x = step(x, P)
    return CaseAnalysis(
        P, CaseLabel.A_IN_P, logp_a=la, h=h, tree_k=P.e - h * la, x_tilde=x
    )


def _analysis_for(P: Params, analysis: Optional[CaseAnalysis]) -> CaseAnalysis:
    if analysis is None:
        return classify(P)
    if analysis.params != P:
        raise ValueError("analysis was computed for different parameters")
    return analysis


def predict_period(
    x0: int, P: Params, analysis: Optional[CaseAnalysis] = None
) -> Union[PeriodInfo, Verdict]:
    A = _analysis_for(P, analysis)
    m, a, b = P.m, P.a, P.b
    p, e = m.p, m.e
    x0 %= m.q
    L = A.label

    if L in (CaseLabel.E1_A_ZERO, CaseLabel.A_ZERO):
        return PeriodInfo(0 if x0 == b else 1, 1)

    if L is CaseLabel.AB_IN_P:
        if x0 == b:
            return PeriodInfo(0, 1)
        return PeriodInfo(1 if step(x0, P) == b else 2, 1)

    if L is CaseLabel.E1_B_ZERO:
        if x0 == 0 or x0 * x0 % p == a:
            return PeriodInfo(0, 1)
        return PeriodInfo(0, 2)

    if L is CaseLabel.E1_DISC_ZERO:
        return PeriodInfo(0, 1 if x0 == A.omega else p - 1)

    if L is CaseLabel.A_IN_P:
        v = logp(x0 - A.x_tilde, m)
        if v == e:
            return PeriodInfo(0, 1)
        j = -1 if v < A.tree_k else (v - A.tree_k) // A.logp_a
        return PeriodInfo(A.h - j, 1)

    if L in (CaseLabel.B_IN_P_QR, CaseLabel.B_IN_P_NQR):
        if x0 % p == 0:
            return PeriodInfo(0 if x0 == b else 1, 1)
        if A.roots.split and x0 in (A.alpha, A.beta):
            return PeriodInfo(0, 1)
        return PeriodInfo(0, A.order_at(e - A.root_offset(x0)))

    if L in (CaseLabel.E1_GENERIC, CaseLabel.UNITS_QR, CaseLabel.UNITS_NQR):
        if A.roots.split and x0 in (A.alpha, A.beta):
            return PeriodInfo(0, 1)
        n = A.omega_bar_index(x0)
        if n is not None:
            return _g_component_period(A, x0, n, A.k - 1)
        return PeriodInfo(0, A.order_at(e - A.root_offset(x0)))

    # UNITS_DISC_ZERO and UNSUPPORTED_DISC_ZERO: the period law only needs
    # 4a + b^2 = 0 mod p, so it is evaluated for both labels.
    w = A.omega
    if x0 % p == w:
        return PeriodInfo(0, p ** (e - A.e0(x0)))
    # first n >= 1 with n (x0/omega - 1) + 1 = 0 mod p
    c = (x0 * mod_inverse(w, m.lower(1)) - 1) % p
    n = -pow(c, -1, p) % p
    return _g_component_period(A, x0, n, p - 1)


def _g_component_period(A: CaseAnalysis, x0: int, steps_to_b: int, length: int) -> PeriodInfo:
    """Period data for a node of G(length, .), given its distance to the hub b."""
    pos = A.main_cycle_position(x0, length)
    if pos is not None and pos == length - steps_to_b:
        return PeriodInfo(0, length)
    return PeriodInfo(steps_to_b, length)


def tree_depth_profile(P: Params, analysis: Optional[CaseAnalysis] = None) -> Dict[int, int]:
    """Node count at each distance from the fixed point, for the a-in-(p) tree."""
    A = _analysis_for(P, analysis)
    if A.label is not CaseLabel.A_IN_P:
        raise WrongCase(f"tree_depth_profile needs A_IN_P, got {A.label}")
    p, e = P.p, P.e
    profile = {0: 1}
    for j in range(-1, A.h):
        lo = 0 if j == -1 else j * A.logp_a + A.tree_k
        hi = A.tree_k - 1 if j == -1 else (j + 1) * A.logp_a + A.tree_k - 1
        profile[A.h - j] = sum((p - 1) * p ** (e - 1 - v) for v in range(lo, hi + 1))
    return profile


def predict_structure(P: Params, analysis: Optional[CaseAnalysis] = None) -> StructureResult:
    A = _analysis_for(P, analysis)
    p, e, q = P.p, P.e, P.q
    L = A.label
    comps: List[Component] = []

    if L in (CaseLabel.E1_A_ZERO, CaseLabel.A_ZERO):
        comps = [GComponent(1, q - 1)]
    elif L is CaseLabel.AB_IN_P:
        return Verdict.DELEGATED
    elif L is CaseLabel.UNSUPPORTED_DISC_ZERO:
        return Verdict.UNSUPPORTED
    elif L is CaseLabel.E1_B_ZERO:
        s = 2 if A.qr else 0
        comps = [CycleSet(2, _exact_div(p - 1 - s, 2)), SelfLoop(s + 1)]
    elif L is CaseLabel.E1_DISC_ZERO:
        comps = [CycleSet(p - 1, 1), SelfLoop(1)]
    elif L is CaseLabel.E1_GENERIC:
        k, v = A.k, 2 if A.qr else 0
        comps = [CycleSet(k - 1, 1), CycleSet(k, _exact_div(p - k + 1 - v, k)), SelfLoop(v)]
    elif L is CaseLabel.A_IN_P:
        comps = [ConvergentTree(A.x_tilde, tree_depth_profile(P, A))]
    elif L is CaseLabel.B_IN_P_QR:
        kb = A.k_b
        comps = [
            GComponent(1, p ** (e - 1) - 1),
            CycleSet(2 * p ** (e - kb), _exact_div((p - 3) * p ** (kb - 1), 2)),
        ]
        if e >= kb + 2:
            v, w = p**kb - 1, (p - 1) * p ** (kb - 1)
        else:
            v, w = p ** (e - 1) - 1, 0
        for kp in range(1, e - kb):
            comps.append(CycleSet(2 * p ** (e - kb - kp), w))
        comps += [CycleSet(2, v), SelfLoop(2)]
    elif L is CaseLabel.B_IN_P_NQR:
        kb = A.k_b
        comps = [
            GComponent(1, p ** (e - 1) - 1),
            CycleSet(2 * p ** (e - kb), _exact_div((p - 1) * p ** (kb - 1), 2)),
        ]
    elif L is CaseLabel.UNITS_QR:
        k, full = A.k, A.ord_full
        comps = [
            GComponent(k - 1, p ** (e - 1) - 1),
            CycleSet(full, _exact_div((p - 1 - k) * p ** (e - 1), full)),
        ]
        for kp in range(1, e):
            o = A.order_at(e - kp)
            comps.append(CycleSet(o, _exact_div(2 * (p - 1) * p ** (e - kp - 1), o)))
        comps.append(SelfLoop(2))
    elif L is CaseLabel.UNITS_NQR:
        k, full = A.k, A.ord_full
        comps = [
            GComponent(k - 1, p ** (e - 1) - 1),
            CycleSet(full, _exact_div((p - k + 1) * p ** (e - 1), full)),
        ]
    elif L is CaseLabel.UNITS_DISC_ZERO:
        comps = [GComponent(p - 1, p ** (e - 1) - 1), CycleSet(p ** (e - 1), 1)]
    else:  # pragma: no cover
        raise AssertionError(f"unhandled label {L}")

    comps = [c for c in comps if getattr(c, "count", 1) > 0]
    return GraphStructure(tuple(comps))
