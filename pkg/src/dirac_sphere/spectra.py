"""Closed-form spectra and eigenfunctions for both models, with physicality flags.

Energies are computed first as the dimensionless square (E*R)^2; the pair
E = -+sqrt/R is attached only when the square is non-negative.  A level is
*physical* when both the closed-form square is non-negative and the printed
eigenfunction is square-integrable; the two criteria are carried separately
because they disagree for Model I as printed (the Model-I envelope exponent
is negative for 0 < C1 < 1/2, so every printed eigenfunction has a divergent
norm -- the package evaluates the form verbatim and flags it).
"""
import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

import numpy as np

from . import specfun
from .errors import (
    ComplexExponentError,
    ConstraintError,
    DomainError,
    IntegrationError,
    ZeroModeError,
)
from .gauge import Model1Params, Model2Params, midya_constants

__all__ = [
    "SpectralLine",
    "WaveFunctionSpec",
    "energy_model1",
    "wavefn_model1",
    "energy_model2",
    "energy_model2_matched",
    "wavefn_model2",
    "classify_levels_model1",
    "partner_map",
    "PartnerPair",
    "PartnerMap",
]


@dataclass(frozen=True)
class SpectralLine:
    """One level: dimensionless (E*R)^2, physicality verdict, and the energy pair."""

    level: int
    E_sq_bar: float
    R: float
    physical: bool
    reason: Optional[str] = None
    E_minus: Optional[float] = None
    E_plus: Optional[float] = None
    radicand_ok: bool = False
    norm_finite: Optional[bool] = None

    @staticmethod
    def build(level, e_sq, R, norm_finite=None):
        radicand_ok = e_sq >= 0.0
        if radicand_ok:
            e_plus = math.sqrt(e_sq) / R
            e_minus = -e_plus
        else:
            e_plus = e_minus = None
        physical = radicand_ok and norm_finite is not False
        if not radicand_ok:
            reason = "negative-radicand"
        elif norm_finite is False:
            reason = "divergent-norm"
        else:
            reason = None
        return SpectralLine(
            level=level,
            E_sq_bar=e_sq,
            R=R,
            physical=physical,
            reason=reason,
            E_minus=e_minus,
            E_plus=e_plus,
            radicand_ok=radicand_ok,
            norm_finite=norm_finite,
        )


@dataclass
class WaveFunctionSpec:
    """First-component eigenfunction candidate on the w axis.

    eval is normalized to unit norm when the norm integral converges;
    otherwise it is the raw printed form and norm_finite is False.
    eval_raw is always the unnormalized form.
    """

    component: int
    level: int
    eval_raw: Callable
    norm_finite: bool
    norm_sq: Optional[float] = None
    eval: Callable = None
    pole_warning: Optional[str] = None
    label: str = ""

    def __post_init__(self):
        if self.eval is None:
            if self.norm_finite and self.norm_sq and self.norm_sq > 0:
                scale = 1.0 / math.sqrt(self.norm_sq)
                raw = self.eval_raw
                self.eval = lambda w, _r=raw, _s=scale: _s * _r(w)
            else:
                self.eval = self.eval_raw


def _check_model1_level(n, p: Model1Params):
    if n < 0 or int(n) != n:
        raise DomainError(f"level must be a non-negative integer, got {n}")
    rad = 1.0 - 4.0 * p.C1 * p.C1
    if rad < 0.0:
        raise ComplexExponentError(
            f"C1 = {p.C1} gives complex exponents; need |C1| < 1/2"
        )
    s = (-1.0 + math.sqrt(rad)) / 2.0
    if s - n == 0.0:
        raise ZeroDivisionError(f"level denominator s - n vanishes at n={n} (s={s})")
    return s


def energy_model1(n, p: Model1Params, k, R) -> SpectralLine:
    """Closed-form Model-I level n.

    (E*R)^2 = 1/2 + 2 C1 (k - C3) - (C2 - 1/2)^2 - (s - n)^2 - (C1(1+2C2)/2)^2/(s - n)^2
    with s = (-1 + sqrt(1 - 4 C1^2))/2.  The physicality flag here reflects the
    sign of the square only; classify_levels_model1 folds in normalizability.
    """
    if not R > 0:
        raise DomainError(f"radius must be positive, got {R}")
    if not p.is_constrained(k):
        raise ConstraintError(
            f"Model-I closed forms need a constraint branch (params {p}, k={k})"
        )
    s = _check_model1_level(n, p)
    half_slope = p.C1 * (1.0 + 2.0 * p.C2) / 2.0
    e_sq = (
        0.5
        + 2.0 * p.C1 * (k - p.C3)
        - (p.C2 - 0.5) ** 2
        - (s - n) ** 2
        - half_slope * half_slope / (s - n) ** 2
    )
    return SpectralLine.build(n, e_sq, R)


def wavefn_model1(n, p: Model1Params, k) -> WaveFunctionSpec:
    """Printed Model-I eigenfunction, evaluated verbatim.

    (1 - tanh w)^s (1 + tanh w)^B P_n^(2s, 2B)(tanh w) with s as in the
    energy formula and B = C1 (1 + 2 C2) / 2.  For 0 < C1 < 1/2 the exponent
    s is negative, so the norm integral diverges at w -> +inf; the record is
    returned unnormalized with norm_finite=False.
    """
    if not p.is_constrained(k):
        raise ConstraintError("Model-I closed forms need a constraint branch")
    s = _check_model1_level(n, p)
    B = p.C1 * (1.0 + 2.0 * p.C2) / 2.0

    def raw(w):
        w = np.asarray(w, dtype=float)
        t = np.tanh(w)
        val = (1.0 - t) ** s * (1.0 + t) ** B * specfun.jacobi(int(n), 2.0 * s, 2.0 * B, t)
        return val if val.ndim else float(val)

    # Norm integrand ~ (1-t)^(2s-1) (1+t)^(2B-1): integrable iff s > 0 and B > 0.
    finite = s > 0.0 and B > 0.0
    norm_sq = None
    if finite:
        norm_sq = _norm_sq_tanh(raw)
        finite = norm_sq is not None
    return WaveFunctionSpec(
        component=1,
        level=int(n),
        eval_raw=raw,
        norm_finite=finite,
        norm_sq=norm_sq,
        label=f"model1 printed n={int(n)}",
    )


def _norm_sq_tanh(raw, tol=1e-10):
    """Norm integral over w via the t = tanh(w) substitution; None if divergent."""

    def integrand(t):
        t = np.asarray(t, dtype=float)
        w = np.arctanh(t)
        val = raw(w) ** 2 / (1.0 - t * t)
        return val

    try:
        res = specfun.integrate(integrand, -1.0 + 1e-14, 1.0 - 1e-14, tol=tol)
    except IntegrationError:
        return None
    return res.value


def energy_model2(m, alpha, beta, k, R) -> SpectralLine:
    """Closed-form Model-II level m >= 0 as printed.

    (E*R)^2 = (m + (a+b)/2)(m + (a+b+2)/2) + b/a - (a^2 + b^2 - 2)/4 - k^2/(1+k^2)^2.
    The level index m is offset by one from the polynomial degree (m = n - 1).
    """
    if alpha == 0.0:
        raise DomainError("energy formula needs alpha != 0")
    if m < 0 or int(m) != m:
        raise DomainError(f"level must be a non-negative integer, got {m}")
    if not R > 0:
        raise DomainError(f"radius must be positive, got {R}")
    s = alpha + beta
    e_sq = (
        (m + s / 2.0) * (m + (s + 2.0) / 2.0)
        + beta / alpha
        - (alpha * alpha + beta * beta - 2.0) / 4.0
        - k * k / (1.0 + k * k) ** 2
    )
    return SpectralLine.build(int(m), e_sq, R, norm_finite=True)


def energy_model2_matched(m, p: Model2Params) -> float:
    """Level constant implied by the solvable-model identity: the additive
    constant of the closed-form potential plus the level constant of the
    right-hand side at degree m + 1.

    This is the (E*R)^2 at which the rational-extension eigenfunction
    actually solves the closed-form potential (exactly when C1 = 1/k and the
    branch pair is used); the report compares it against the printed formula.
    """
    k0 = (
        0.25
        - p.C6
        + 2.0 * p.C1 * p.C4
        - 2.0 * p.C1 * p.k
        - p.C3 * p.C3
    )
    consts = midya_constants(p.alpha, p.beta, int(m) + 1)
    return k0 + consts[1]


def wavefn_model2(m, alpha, beta, polynomial="classical") -> WaveFunctionSpec:
    """Model-II eigenfunction at level m, in either polynomial interpretation.

    polynomial='classical' uses the ordinary Jacobi polynomial of degree m+1,
    exactly as typeset; polynomial='x1' substitutes the rational-extension
    member of the same degree.  Both share the envelope
    (1-t)^((alpha+1)/2) (1+t)^((beta+1)/2) / (alpha + beta + (alpha-beta) t).
    The denominator vanishes on the real axis when alpha*beta < 0; the record
    then carries a pole warning and a divergent norm.
    """
    if polynomial not in ("classical", "x1"):
        raise DomainError(f"polynomial must be 'classical' or 'x1', got {polynomial!r}")
    if m < 0 or int(m) != m:
        raise DomainError(f"level must be a non-negative integer, got {m}")
    if alpha <= -1 or beta <= -1 or alpha == beta:
        raise DomainError("need alpha, beta > -1 and alpha != beta")
    m = int(m)
    ea, eb = (alpha + 1.0) / 2.0, (beta + 1.0) / 2.0

    def raw(w):
        w = np.asarray(w, dtype=float)
        t = np.tanh(w)
        den = alpha + beta + (alpha - beta) * t
        if polynomial == "classical":
            poly = specfun.jacobi(m + 1, alpha, beta, t)
        else:
            poly = specfun.x1_jacobi(m + 1, alpha, beta, t)
        val = (1.0 - t) ** ea * (1.0 + t) ** eb * poly / den
        return val if val.ndim else float(val)

    pole_warning = None
    ratio = (alpha + beta) / (alpha - beta) if alpha != beta else None
    has_pole = ratio is not None and abs(ratio) < 1.0
    if has_pole:
        pole_warning = (
            f"envelope denominator vanishes at tanh(w) = {-ratio} "
            "(alpha*beta < 0 branch); norm integral diverges"
        )
    norm_sq = None
    finite = not has_pole
    if finite:
        norm_sq = _norm_sq_tanh(raw)
        finite = norm_sq is not None
    return WaveFunctionSpec(
        component=1,
        level=m,
        eval_raw=raw,
        norm_finite=finite,
        norm_sq=norm_sq,
        pole_warning=pole_warning,
        label=f"model2 {polynomial} m={m}",
    )


def classify_levels_model1(p: Model1Params, k, R, n_max) -> List[SpectralLine]:
    """Levels 0..n_max with physicality combining radicand sign and norm check."""
    out = []
    for n in range(int(n_max) + 1):
        line = energy_model1(n, p, k, R)
        wf = wavefn_model1(n, p, k)
        out.append(
            SpectralLine.build(n, line.E_sq_bar, R, norm_finite=wf.norm_finite)
        )
    return out


@dataclass(frozen=True)
class PartnerPair:
    m: int
    e1_sq: float
    e2_sq: float
    deviation: float


@dataclass(frozen=True)
class PartnerMap:
    """Pairing of level m of the first system with level m-1 of the second."""

    pairs: Tuple[PartnerPair, ...]

    @property
    def max_deviation(self):
        return max((p.deviation for p in self.pairs), default=0.0)


def _e_sq_of(x):
    return x.E_sq_bar if isinstance(x, SpectralLine) else float(x)


def partner_map(lines1, lines2) -> PartnerMap:
    """Pair level m >= 1 of system 1 with level m-1 of system 2.

    Accepts SpectralLine sequences or plain level-constant sequences;
    deviations are |e1[m] - e2[m-1]|.  Empty input gives an empty report.
    """
    e1 = [_e_sq_of(x) for x in lines1]
    e2 = [_e_sq_of(x) for x in lines2]
    pairs = []
    for m in range(1, len(e1)):
        if m - 1 >= len(e2):
            break
        pairs.append(
            PartnerPair(m=m, e1_sq=e1[m], e2_sq=e2[m - 1], deviation=abs(e1[m] - e2[m - 1]))
        )
    return PartnerMap(pairs=tuple(pairs))
