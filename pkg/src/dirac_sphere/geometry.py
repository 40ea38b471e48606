"""Sphere chart in isothermal coordinates.

The sphere of radius R is parametrized by (u, v) with |v| < pi/2; the
isothermal longitude keeps u and maps v to w with cosh(w) = sec(v), which
brings the metric to conformal form with factor R*sech(w).  All coordinates
are dimensionless; R carries the length unit.
"""
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = ["SphereChart", "w_from_v", "v_from_w", "conformal_factor"]


def w_from_v(v):
    """Isothermal coordinate w = log(tan v + sec v) = asinh(tan v), |v| < pi/2.

    The asinh form is used throughout: it is the same function, without the
    cancellation of log(tan v + sec v) near the poles.
    """
    v = np.asarray(v, dtype=float)
    if np.any(np.abs(v) >= math.pi / 2):
        raise DomainError("chart excludes the poles: need |v| < pi/2")
    w = np.arcsinh(np.tan(v))
    return w if w.ndim else float(w)


def v_from_w(w):
    """Inverse map: the v with cosh(w) = sec(v) and sign(v) = sign(w)."""
    w = np.asarray(w, dtype=float)
    v = np.arcsin(np.tanh(w))
    return v if v.ndim else float(v)


@dataclass(frozen=True)
class SphereChart:
    """Sphere of radius R > 0; energies scale as 1/R."""

    R: float

    def __post_init__(self):
        if not self.R > 0:
            raise DomainError(f"sphere radius must be positive, got {self.R}")


def conformal_factor(chart, w):
    """Conformal factor R*sech(w): positive, even, decreasing in |w|."""
    w = np.asarray(w, dtype=float)
    val = chart.R / np.cosh(w)
    return val if val.ndim else float(val)
