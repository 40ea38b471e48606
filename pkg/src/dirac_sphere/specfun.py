"""Jacobi polynomials, their rational-extension companions, and adaptive quadrature.

Everything here is a pure function; evaluation accepts scalars or numpy arrays.
"""
import warnings

import numpy as np

from .errors import DomainError, IntegrationError

__all__ = [
    "jacobi",
    "jacobi_deriv",
    "x1_jacobi",
    "x1_jacobi_deriv",
    "integrate",
    "QuadResult",
    "OutsideDomainWarning",
]


class OutsideDomainWarning(UserWarning):
    """Evaluation at |x| > 1 beyond rounding slack: analytic but untested territory."""


_CLAMP_SLACK = 1e-12


def _check_index(n, alpha, beta):
    if n < 0 or int(n) != n:
        raise DomainError(f"polynomial degree must be a non-negative integer, got {n}")
    if alpha <= -1 or beta <= -1:
        raise DomainError(f"Jacobi parameters must exceed -1, got alpha={alpha}, beta={beta}")


def _prepare_x(x):
    x = np.asarray(x, dtype=float)
    over = np.abs(x) > 1.0 + _CLAMP_SLACK
    if np.any(over):
        warnings.warn(
            "Jacobi evaluation outside [-1, 1]; value is the analytic continuation",
            OutsideDomainWarning,
            stacklevel=3,
        )
        return x
    return np.clip(x, -1.0, 1.0)


def jacobi(n, alpha, beta, x):
    """Evaluate P_n^(alpha,beta)(x) by the ascending three-term recurrence.

    Stable on [-1, 1] for the moderate degrees used here (n <= ~50).  Values
    of x within 1e-12 of the interval are clamped; farther out, the analytic
    continuation is returned with an OutsideDomainWarning.
    """
    _check_index(n, alpha, beta)
    x = _prepare_x(x)
    n = int(n)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    p = (alpha - beta) / 2.0 + (alpha + beta + 2.0) / 2.0 * x
    for m in range(2, n + 1):
        s = 2.0 * m + alpha + beta
        a = 2.0 * m * (m + alpha + beta) * (s - 2.0)
        b = (s - 1.0) * (alpha * alpha - beta * beta)
        c = (s - 1.0) * s * (s - 2.0)
        d = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * s
        p, p_prev = ((b + c * x) * p - d * p_prev) / a, p
    return p if p.ndim else float(p)


def jacobi_deriv(n, alpha, beta, x):
    """d/dx P_n^(alpha,beta)(x) via the parameter-shift identity; 0 for n = 0."""
    _check_index(n, alpha, beta)
    if n == 0:
        x = np.asarray(x, dtype=float)
        z = np.zeros_like(x)
        return z if z.ndim else 0.0
    return 0.5 * (n + alpha + beta + 1.0) * jacobi(n - 1, alpha + 1.0, beta + 1.0, x)


def _check_x1_params(alpha, beta):
    if alpha <= -1 or beta <= -1:
        raise DomainError(f"parameters must exceed -1, got alpha={alpha}, beta={beta}")
    if alpha == beta:
        raise DomainError("rational-extension family needs alpha != beta")
    if alpha * beta == 0.0:
        raise DomainError("rational-extension family needs alpha*beta != 0")


def x1_jacobi(nu, alpha, beta, x):
    """Degree-nu member (nu >= 1) of the rational extension of the Jacobi family.

    The family starts at degree 1 and is orthogonal on [-1, 1] under the
    weight (1-x)^alpha (1+x)^beta / ((beta-alpha) x - (beta+alpha))^2.  With
    b = (beta+alpha)/(beta-alpha) and m = nu - 1 the member is

        [A (x - b) + 2 alpha beta / (alpha - beta)] P_m(x) + (1 - x^2) P_m'(x),

    where A = m^2 + (alpha+beta+1) m + alpha*beta and P_m is classical Jacobi.
    These are the polynomial factors of the bound states of the second
    gauge-field model; orthogonality is exercised in the test suite.
    """
    if nu < 1 or int(nu) != nu:
        raise DomainError(f"degree must be a positive integer, got {nu}")
    _check_x1_params(alpha, beta)
    m = int(nu) - 1
    acc = m * m + (alpha + beta + 1.0) * m + alpha * beta
    b = (beta + alpha) / (beta - alpha)
    c = 2.0 * alpha * beta / (alpha - beta)
    x = np.asarray(x, dtype=float)
    val = (acc * (x - b) + c) * jacobi(m, alpha, beta, x) + (1.0 - x * x) * jacobi_deriv(
        m, alpha, beta, x
    )
    return val if val.ndim else float(val)


def x1_jacobi_deriv(nu, alpha, beta, x):
    """Derivative of x1_jacobi in x (product rule on the defining combination)."""
    if nu < 1 or int(nu) != nu:
        raise DomainError(f"degree must be a positive integer, got {nu}")
    _check_x1_params(alpha, beta)
    m = int(nu) - 1
    acc = m * m + (alpha + beta + 1.0) * m + alpha * beta
    b = (beta + alpha) / (beta - alpha)
    c = 2.0 * alpha * beta / (alpha - beta)
    x = np.asarray(x, dtype=float)
    p = jacobi(m, alpha, beta, x)
    dp = jacobi_deriv(m, alpha, beta, x)
    if m >= 1:
        ddp = 0.25 * (m + alpha + beta + 1.0) * (m + alpha + beta + 2.0) * jacobi(
            max(m - 2, 0), alpha + 2.0, beta + 2.0, x
        )
        if m == 1:
            ddp = np.zeros_like(x)
    else:
        ddp = np.zeros_like(x)
    val = acc * p + (acc * (x - b) + c) * dp - 2.0 * x * dp + (1.0 - x * x) * ddp
    return val if val.ndim else float(val)


class QuadResult:
    """Value and achieved error estimate of an adaptive quadrature."""

    __slots__ = ("value", "error_estimate", "panels")

    def __init__(self, value, error_estimate, panels):
        self.value = value
        self.error_estimate = error_estimate
        self.panels = panels

    def __repr__(self):
        return f"QuadResult(value={self.value!r}, error_estimate={self.error_estimate!r}, panels={self.panels})"


_GL10 = np.polynomial.legendre.leggauss(10)
_GL21 = np.polynomial.legendre.leggauss(21)


def _panel(f, a, b):
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    lo = half * float(np.dot(_GL10[1], f(mid + half * _GL10[0])))
    hi = half * float(np.dot(_GL21[1], f(mid + half * _GL21[0])))
    return hi, abs(hi - lo)


def integrate(f, a, b, tol=1e-10, max_panels=4096):
    """Adaptive panel quadrature of a vectorized callable on [a, b].

    Each panel is estimated with a 10/21-point Gauss-Legendre pair; the pair
    difference drives bisection, worst panel first, until the summed error
    estimate falls below tol.  Running out of the panel budget raises
    IntegrationError carrying the partial estimate (this is the designed
    detector for divergent norm integrals).  Semi-infinite domains are the
    caller's job, via the t = tanh(w) substitution.
    """
    if not b > a:
        raise DomainError(f"need a < b, got a={a}, b={b}")
    if not tol > 0:
        raise DomainError(f"need tol > 0, got {tol}")
    val, err = _panel(f, a, b)
    panels = [(err, a, b, val)]
    count = 1
    while True:
        total_err = sum(p[0] for p in panels)
        if total_err <= tol:
            return QuadResult(sum(p[3] for p in panels), total_err, count)
        if count >= max_panels:
            raise IntegrationError(
                f"quadrature did not reach tol={tol} within {max_panels} panels "
                f"(estimate {sum(p[3] for p in panels)!r}, error {total_err!r})",
                value=sum(p[3] for p in panels),
                error_estimate=total_err,
                panels=count,
            )
        panels.sort(key=lambda p: p[0])
        _, pa, pb, _ = panels.pop()
        pm = 0.5 * (pa + pb)
        v1, e1 = _panel(f, pa, pm)
        v2, e2 = _panel(f, pm, pb)
        panels.append((e1, pa, pm, v1))
        panels.append((e2, pm, pb, v2))
        count += 1
