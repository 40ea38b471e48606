"""Independent numerical ground truth for the transformed Dirac eigenproblems.

The second-order operator -(cosh^2 w phi')' + V(w) phi is discretized with a
conservative (flux-form) finite-difference scheme on a uniform grid over
[-L, L] with Dirichlet walls.  The scheme keeps the matrix exactly symmetric
in its banded storage, so real spectra are structural.  A discrete first-order
factorization with configurable sign conventions provides the forced
isospectrality check (the two compositions of one matrix share their nonzero
spectrum no matter what), and the consistency-report engine attaches a
verdict to every closed-form formula of both gauge models.

Verdict policy: mathematically forced claims must PASS; transcription claims
are always 'recorded' with their metric, because the closed forms contain
apparent typos that this package is meant to expose, not hide.
"""
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import eig_banded, eigh_tridiagonal

from .errors import DomainError, SingularPotentialError, ZeroModeError
from .gauge import (
    EffectivePotential,
    Model1Params,
    Model2Params,
    a_u_model1,
    a_u_model2,
    da_u_model1,
    da_u_model2,
    midya_rhs,
    v_eff_general,
    v_eff_model1,
    v_eff_model1_raw,
    v_eff_model2,
    v_eff_model2_raw,
)
from .spectra import (
    WaveFunctionSpec,
    energy_model1,
    energy_model2,
    energy_model2_matched,
    wavefn_model1,
    wavefn_model2,
)

__all__ = [
    "Grid",
    "SLMatrix",
    "FactorizationConvention",
    "CONVENTIONS",
    "build_sl_matrix",
    "eig_lowest",
    "eig_values",
    "compose_factorized",
    "verify_eigenpair",
    "derive_partner_component",
    "Claim",
    "VerificationReport",
    "consistency_report",
]

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class Grid:
    """Uniform interior grid on [-L, L] with Dirichlet boundaries at +-L."""

    L: float
    N: int

    def __post_init__(self):
        if not self.L > 0:
            raise DomainError(f"grid half-width must be positive, got {self.L}")
        if self.N < 3 or int(self.N) != self.N:
            raise DomainError(f"need at least 3 interior points, got {self.N}")

    @property
    def h(self):
        return 2.0 * self.L / (self.N + 1)

    def points(self):
        return -self.L + self.h * np.arange(1, self.N + 1)

    def half_points(self):
        return -self.L + self.h * (np.arange(0, self.N + 1) + 0.5)


@dataclass
class SLMatrix:
    """Symmetric banded matrix in lower band storage: bands[d, i] = M[i+d, i].

    Symmetry is structural (only the lower bands are stored), so the
    symmetry defect of the represented matrix is identically zero.
    """

    bands: np.ndarray
    grid: Grid
    provenance: str = ""

    @property
    def order(self):
        return self.bands.shape[1]

    @property
    def bandwidth(self):
        return self.bands.shape[0] - 1

    def matvec(self, x):
        y = self.bands[0] * x
        for d in range(1, self.bands.shape[0]):
            band = self.bands[d, : self.order - d]
            y[d:] += band * x[:-d]
            y[:-d] += band * x[d:]
        return y

    def dense(self):
        if self.order > 4001:
            raise DomainError("dense reconstruction limited to N <= 4001")
        m = np.zeros((self.order, self.order))
        for d in range(self.bands.shape[0]):
            band = self.bands[d, : self.order - d]
            m += np.diag(band, -d)
            if d:
                m += np.diag(band, d)
        return m

    def norm_estimate(self):
        """Upper bound on the spectral radius (Gershgorin over the bands)."""
        r = np.abs(self.bands[0]).astype(float)
        for d in range(1, self.bands.shape[0]):
            band = np.abs(self.bands[d, : self.order - d])
            r[d:] += band
            r[:-d] += band
        return float(r.max())


def build_sl_matrix(p_fn, q_fn, grid: Grid, q_poles: Sequence[float] = ()) -> SLMatrix:
    """Flux-form discretization of -(p(w) phi')' + q(w) phi on the grid.

    Row i couples p at the half points w_{i +- 1/2}:
       (M phi)_i = [p_{i+1/2}(phi_i - phi_{i+1}) + p_{i-1/2}(phi_i - phi_{i-1})]/h^2
                   + q(w_i) phi_i.
    Declared poles of q inside [-L, L], or non-finite samples, raise
    SingularPotentialError naming the location.
    """
    for w0 in q_poles:
        if w0 is not None and abs(w0) < grid.L:
            raise SingularPotentialError(
                f"potential pole at w = {w0} lies inside [-{grid.L}, {grid.L}]",
                location=w0,
            )
    w = grid.points()
    ph = np.asarray(p_fn(grid.half_points()), dtype=float)
    if np.any(~np.isfinite(ph)) or np.any(ph <= 0.0):
        raise SingularPotentialError("p(w) must be positive and finite on the grid")
    qv = np.asarray(q_fn(w), dtype=float)
    bad = ~np.isfinite(qv)
    if np.any(bad):
        raise SingularPotentialError(
            f"potential is not finite at w = {w[bad][0]}", location=float(w[bad][0])
        )
    h2 = grid.h * grid.h
    bands = np.zeros((2, grid.N))
    bands[0] = (ph[:-1] + ph[1:]) / h2 + qv
    bands[1, : grid.N - 1] = -ph[1:-1] / h2
    return SLMatrix(bands=bands[:2], grid=grid, provenance="sturm-liouville flux scheme")


def _band_count(m: SLMatrix):
    # trim trailing all-zero bands so tridiagonal matrices use the fast path
    bw = m.bands.shape[0] - 1
    while bw > 1 and not np.any(m.bands[bw]):
        bw -= 1
    return bw


def eig_lowest(m: SLMatrix, count: int):
    """The `count` algebraically smallest eigenpairs, ascending.

    Eigenvectors are normalized in the h-weighted discrete norm and
    sign-fixed so that the first component above 1e-12 of the max is
    positive (determinism).
    """
    if count < 1 or count > m.order:
        raise DomainError(f"count must be in [1, {m.order}], got {count}")
    bw = _band_count(m)
    if bw == 1:
        vals, vecs = eigh_tridiagonal(
            m.bands[0], m.bands[1, : m.order - 1], select="i", select_range=(0, count - 1)
        )
    else:
        vals, vecs = eig_banded(
            m.bands[: bw + 1],
            lower=True,
            select="i",
            select_range=(0, count - 1),
        )
    out = []
    sqrt_h = math.sqrt(m.grid.h)
    for i in range(count):
        v = vecs[:, i]
        nz = np.nonzero(np.abs(v) > 1e-12 * np.abs(v).max())[0]
        if nz.size and v[nz[0]] < 0:
            v = -v
        v = v / (np.linalg.norm(v) * sqrt_h)
        out.append((float(vals[i]), v))
    return out


def eig_values(m: SLMatrix):
    """All eigenvalues, ascending (no eigenvectors)."""
    bw = _band_count(m)
    if bw == 1:
        vals = eigh_tridiagonal(
            m.bands[0], m.bands[1, : m.order - 1], eigvals_only=True
        )
    else:
        vals = eig_banded(m.bands[: bw + 1], lower=True, eigvals_only=True)
    return np.sort(vals)


@dataclass(frozen=True)
class FactorizationConvention:
    """Sign/offset convention of the discrete first-order operator.

    D = Cosh * Delta_c + diag(f),  f = cosh(w) (sign_k*k + sign_A*A(w)) + half_sinh*sinh(w)/2,
    with Delta_c the centered first difference (exactly antisymmetric under
    Dirichlet truncation, so the adjoint is the literal transpose).
    """

    sign_k: int = 1
    sign_A: int = -1
    half_sinh: bool = True

    @property
    def name(self):
        ks = "+k" if self.sign_k > 0 else "-k"
        As = "+A" if self.sign_A > 0 else "-A"
        tail = "+sinh/2" if self.half_sinh else ""
        return f"cosh*d/dw + cosh*({ks}{As}){tail}"


# The conventions the report scans: all four k/A sign pairs with the
# similarity-transform offset, plus the bare profile without it.
CONVENTIONS: Tuple[FactorizationConvention, ...] = (
    FactorizationConvention(1, -1, True),
    FactorizationConvention(-1, 1, True),
    FactorizationConvention(1, 1, True),
    FactorizationConvention(-1, -1, True),
    FactorizationConvention(1, -1, False),
)


def _first_order_diagonals(A, k, grid: Grid, conv: FactorizationConvention):
    w = grid.points()
    c = np.cosh(w)
    f = c * (conv.sign_k * k + conv.sign_A * np.asarray(A(w), dtype=float))
    if conv.half_sinh:
        f = f + 0.5 * np.sinh(w)
    inv2h = 1.0 / (2.0 * grid.h)
    sup = c[:-1] * inv2h  # D[i, i+1]
    sub = -c[1:] * inv2h  # D[i, i-1]
    return f, sup, sub


def compose_factorized(
    A, k, grid: Grid, convention: FactorizationConvention = FactorizationConvention()
):
    """Return (D Dt, Dt D) as exactly symmetric banded matrices.

    Both compositions are assembled entry-wise from the three diagonals of D,
    so each is symmetric by construction and the two share their nonzero
    spectrum up to linear-algebra roundoff -- the forced invariant.
    """
    a, b, c = _first_order_diagonals(A, k, grid, convention)
    n = grid.N
    bpad = np.concatenate([b, [0.0]])  # b_i defined for i = 0..N-2
    cpad = np.concatenate([[0.0], c])  # c_i defined for i = 1..N-1

    ddt = np.zeros((3, n))
    ddt[0] = cpad * cpad + a * a + bpad * bpad
    ddt[1, : n - 1] = a[:-1] * cpad[1:] + bpad[:-1] * a[1:]
    ddt[2, : n - 2] = bpad[:-2] * cpad[2:]

    dtd = np.zeros((3, n))
    bprev = np.concatenate([[0.0], b])  # b_{j-1}
    cnext = np.concatenate([c, [0.0]])  # c_{j+1}
    dtd[0] = bprev * bprev + a * a + cnext * cnext
    dtd[1, : n - 1] = a[:-1] * bprev[1:] + cnext[:-1] * a[1:]
    dtd[2, : n - 2] = cnext[:-2] * bprev[2:]

    label = f"factorized [{convention.name}]"
    return (
        SLMatrix(bands=ddt, grid=grid, provenance=f"D*Dt {label}"),
        SLMatrix(bands=dtd, grid=grid, provenance=f"Dt*D {label}"),
    )


def isospectrality_metric(m1: SLMatrix, m2: SLMatrix):
    """Max relative deviation between matched sorted spectra above the
    numerical-zero floor.

    Eigenvalues below floor = 1e8 * eps * max|spectrum| cannot be certified
    at 1e-8 relative accuracy by a banded solver, so they are treated as the
    (possibly empty) common numerical kernel; counts below the floor must
    agree.  Returns (metric, floor, n_below).
    """
    s1 = eig_values(m1)
    s2 = eig_values(m2)
    scale = max(np.abs(s1).max(), np.abs(s2).max())
    floor = 1e8 * _EPS * scale
    keep = (np.abs(s1) > floor) | (np.abs(s2) > floor)
    below1 = int(np.sum(np.abs(s1) <= floor))
    below2 = int(np.sum(np.abs(s2) <= floor))
    if below1 != below2:
        return float("inf"), floor, max(below1, below2)
    if not np.any(keep):
        return 0.0, floor, below1
    rel = np.abs(s1[keep] - s2[keep]) / np.maximum(np.abs(s1[keep]), floor)
    return float(rel.max()), floor, below1


def _sample_wavefunction(phi, grid: Grid):
    if isinstance(phi, WaveFunctionSpec):
        return np.asarray(phi.eval(grid.points()), dtype=float)
    if callable(phi):
        return np.asarray(phi(grid.points()), dtype=float)
    arr = np.asarray(phi, dtype=float)
    if arr.shape != (grid.N,):
        raise DomainError(f"grid function must have shape ({grid.N},), got {arr.shape}")
    return arr


def verify_eigenpair(
    pot, phi, lam, grid: Grid, window: Optional[float] = None, p_fn=None
) -> float:
    """Relative residual ||M phi - lam phi|| / ||phi|| on the (masked) grid.

    The kinetic coefficient defaults to cosh^2 (the transformed operator);
    pass p_fn for other problems such as the flat particle-in-a-box control.
    The row adjacent to each Dirichlet wall is dropped unless the sampled
    wavefunction has decayed below 1e-10 of its max there (the wall assumes a
    zero neighbor).  An optional window keeps only |w| <= window: the flux
    scheme's truncation error grows with cosh^2 toward the walls, so a
    windowed residual is the meaningful adjudicator for slowly decaying or
    growing candidates; the window used is recorded by the report.
    """
    q_fn = pot.fn if isinstance(pot, EffectivePotential) else pot
    poles = pot.poles if isinstance(pot, EffectivePotential) else ()
    if p_fn is None:
        p_fn = lambda w: np.cosh(w) ** 2
    m = build_sl_matrix(p_fn, q_fn, grid, q_poles=poles)
    vec = _sample_wavefunction(phi, grid)
    if not np.all(np.isfinite(vec)):
        raise DomainError("wavefunction is not finite on the grid")
    res = m.matvec(vec) - lam * vec
    keep = np.ones(grid.N, dtype=bool)
    peak = np.abs(vec).max()
    if peak == 0.0:
        raise DomainError("wavefunction vanishes identically on the grid")
    if abs(vec[0]) > 1e-10 * peak:
        keep[0] = False
    if abs(vec[-1]) > 1e-10 * peak:
        keep[-1] = False
    if window is not None:
        keep &= np.abs(grid.points()) <= window
    denom = np.linalg.norm(vec[keep])
    if denom == 0.0:
        raise DomainError("wavefunction vanishes on the residual window")
    return float(np.linalg.norm(res[keep]) / denom)


def derive_partner_component(
    phi1,
    E,
    A,
    k,
    R,
    grid: Grid,
    convention: FactorizationConvention = FactorizationConvention(),
) -> WaveFunctionSpec:
    """Partner-component grid function (1/(E*R)) * Dt phi1 under the convention.

    Maps a first-component eigenfunction to its second-component partner via
    the transposed discrete first-order operator.  E = 0 raises ZeroModeError:
    zero modes belong to a single partner and do not propagate.
    """
    if E == 0:
        raise ZeroModeError("zero modes do not map to the partner component")
    vec = _sample_wavefunction(phi1, grid)
    a, b, c = _first_order_diagonals(A, k, grid, convention)
    # Dt rows: (Dt x)_i = a_i x_i + c_{i+1} x_{i+1} + b_{i-1} x_{i-1}
    out = a * vec
    out[:-1] += c * vec[1:]
    out[1:] += b * vec[:-1]
    out /= E * R
    w = grid.points()
    norm_sq = float(grid.h * np.dot(out, out))

    def eval_interp(x, _w=w, _v=out.copy()):
        x = np.asarray(x, dtype=float)
        val = np.interp(x, _w, _v, left=0.0, right=0.0)
        return val if val.ndim else float(val)

    return WaveFunctionSpec(
        component=2,
        level=-1,
        eval_raw=eval_interp,
        norm_finite=True,
        norm_sq=norm_sq,
        eval=eval_interp,
        label=f"partner-derived [{convention.name}]",
    )


@dataclass
class Claim:
    """One verified statement: metric against tolerance, with provenance."""

    claim_id: str
    paper_ref: str
    description: str
    metric: float
    tolerance: float
    verdict: str
    grid: Dict[str, float]
    details: Dict[str, object] = field(default_factory=dict)

    def as_dict(self):
        tol = _plain(self.tolerance)
        if isinstance(tol, float) and not math.isfinite(tol):
            tol = None  # recorded claims have no pass/fail threshold
        return {
            "claim_id": self.claim_id,
            "paper_ref": self.paper_ref,
            "description": self.description,
            "metric": _plain(self.metric),
            "tolerance": tol,
            "verdict": self.verdict,
            "grid": {key: _plain(val) for key, val in self.grid.items()},
            "details": _plain(self.details),
        }


def _plain(x):
    if isinstance(x, dict):
        return {key: _plain(val) for key, val in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, (np.floating, np.integer)):
        return x.item()
    if isinstance(x, np.ndarray):
        return [_plain(v) for v in x.tolist()]
    return x


@dataclass
class VerificationReport:
    """All claims for one model at one configuration, in fixed order."""

    model: int
    k: float
    R: float
    levels: int
    params: Dict[str, float]
    claims: List[Claim]

    def as_dict(self):
        return {
            "model": self.model,
            "k": _plain(self.k),
            "R": _plain(self.R),
            "levels": self.levels,
            "params": _plain(self.params),
            "claims": [c.as_dict() for c in self.claims],
        }

    def forced_failures(self):
        return [c for c in self.claims if c.claim_id.startswith("f.") and c.verdict != "pass"]

    def claim(self, claim_id):
        for c in self.claims:
            if c.claim_id == claim_id:
                return c
        raise KeyError(claim_id)


def _constancy(diff_fn, w_lo=-4.0, w_hi=4.0, n_pts=2001):
    """max |d(w) - mean d| and the mean, over a fixed uniform sample."""
    w = np.linspace(w_lo, w_hi, n_pts)
    d = np.asarray(diff_fn(w), dtype=float)
    mean = float(d.mean())
    return float(np.abs(d - mean).max()), mean


_CONSTANCY_TOL = 1e-9
_ISO_TOL = 1e-8
_COMPOSE_GRID = Grid(4.0, 401)
_CONVENTION_GRID = Grid(6.0, 801)
_RESIDUAL_WINDOW = 8.0


def consistency_report(
    model,
    params,
    k,
    R,
    grid: Grid,
    levels: int = 4,
    residual_window: float = _RESIDUAL_WINDOW,
    compose_grid: Grid = _COMPOSE_GRID,
    convention_grid: Grid = _CONVENTION_GRID,
    corrupt_forced: bool = False,
) -> VerificationReport:
    """Assemble the full verification report for one model.

    Claim families: forced linear-algebra invariants (f.*), the factorization
    convention scan, transcription constancy checks (a.*, b.*), closed-form
    spectrum versus oracle eigenvalues (c.*), eigenfunction residuals (d.*),
    partner-level pairing (e.*), and the model's solvable-structure identity
    (g.*).  Forced claims must pass; everything else is recorded with a finite
    metric and the grid it was measured on.  corrupt_forced is a test hook
    that perturbs one composed matrix so the forced claim fails.
    """
    if model == 1:
        if not isinstance(params, Model1Params):
            raise DomainError("model 1 requires Model1Params")
        return _report_model1(
            params, k, R, grid, levels, residual_window, compose_grid,
            convention_grid, corrupt_forced,
        )
    if model == 2:
        if not isinstance(params, Model2Params):
            raise DomainError("model 2 requires Model2Params")
        if params.k != k:
            raise DomainError(
                f"wave number mismatch: params carry k={params.k}, report got k={k}"
            )
        return _report_model2(
            params, k, R, grid, levels, residual_window, compose_grid,
            convention_grid, corrupt_forced,
        )
    raise DomainError(f"model must be 1 or 2, got {model}")


def _gdict(g: Grid):
    return {"L": g.L, "N": g.N}


def _forced_claims(A, k, gen_v1, gen_v2, compose_grid, convention_grid, corrupt, q_poles=()):
    """Shared forced + convention claims.

    gen_v1/gen_v2 are the general-form j=1/j=2 potentials (callables): the
    convention scan asks which first-order composition reproduces the
    transformed operator itself, so it compares against first principles,
    not against the printed closed forms.
    """
    claims = []
    ddt, dtd = compose_factorized(A, k, compose_grid)
    if corrupt:
        ddt.bands[0, compose_grid.N // 2] += 1e-3 * (
            1.0 + abs(ddt.bands[0, compose_grid.N // 2])
        )
    sym_defect = 0.0
    for mat in (ddt, dtd):
        d = mat.dense()
        sym_defect = max(sym_defect, float(np.abs(d - d.T).max()))
    claims.append(
        Claim(
            claim_id="f.matrix-symmetry",
            paper_ref="sl-operator.flux-discretization",
            description="banded storage keeps every oracle matrix exactly symmetric",
            metric=sym_defect,
            tolerance=0.0,
            verdict="pass" if sym_defect <= 0.0 else "fail",
            grid=_gdict(compose_grid),
        )
    )

    metric, floor, n_zero = isospectrality_metric(ddt, dtd)
    claims.append(
        Claim(
            claim_id="f.isospectrality",
            paper_ref="factorization.first-order",
            description=(
                "nonzero spectra of D*Dt and Dt*D agree (forced); eigenvalues "
                "below the numerical-zero floor are excluded and counted"
            ),
            metric=metric,
            tolerance=_ISO_TOL,
            verdict="pass" if metric <= _ISO_TOL else "fail",
            grid=_gdict(compose_grid),
            details={"zero_floor": floor, "n_below_floor": n_zero},
        )
    )

    per_convention = {}
    best_name, best_metric = None, float("inf")
    sl1 = build_sl_matrix(lambda w: np.cosh(w) ** 2, gen_v1, convention_grid, q_poles=q_poles)
    sl2 = build_sl_matrix(lambda w: np.cosh(w) ** 2, gen_v2, convention_grid, q_poles=q_poles)
    ref1 = np.array([v for v, _ in eig_lowest(sl1, 5)])
    ref2 = np.array([v for v, _ in eig_lowest(sl2, 5)])
    for conv in CONVENTIONS:
        m1, m2 = compose_factorized(A, k, convention_grid, conv)
        s1 = eig_values(m1)
        s2 = eig_values(m2)
        d1 = float(
            np.max(np.min(np.abs(s1[None, :] - ref1[:, None]), axis=1) / (1.0 + np.abs(ref1)))
        )
        d2 = float(
            np.max(np.min(np.abs(s2[None, :] - ref2[:, None]), axis=1) / (1.0 + np.abs(ref2)))
        )
        per_convention[conv.name] = {"match_j1": d1, "match_j2": d2}
        if d1 < best_metric:
            best_metric, best_name = d1, conv.name
    claims.append(
        Claim(
            claim_id="conventions.factorization-match",
            paper_ref="factorization.first-order",
            description=(
                "which first-order sign convention reproduces the transformed "
                "second-order operators (nearest-eigenvalue match of the "
                "compositions against the flux-form discretizations)"
            ),
            metric=best_metric,
            tolerance=float("nan"),
            verdict="recorded",
            grid=_gdict(convention_grid),
            details={"per_convention": per_convention, "best_convention": best_name},
        )
    )
    return claims


def _constancy_claim(claim_id, paper_ref, description, diff_fn, grid_used):
    metric, mean = _constancy(diff_fn)
    return Claim(
        claim_id=claim_id,
        paper_ref=paper_ref,
        description=description,
        metric=metric,
        tolerance=_CONSTANCY_TOL,
        verdict="recorded",
        grid=grid_used,
        details={"additive_constant": mean},
    )


_CONSTANCY_GRID = {"w_lo": -4.0, "w_hi": 4.0, "n_pts": 2001}


def _report_model1(
    p, k, R, grid, levels, window, compose_grid, convention_grid, corrupt
):
    A, dA = a_u_model1(p), da_u_model1(p)
    gen1 = v_eff_general(A, dA, k, 1)
    gen2 = v_eff_general(A, dA, k, 2)
    raw1 = v_eff_model1_raw(p, k)
    closed1 = v_eff_model1(p, k, 1)
    closed2 = v_eff_model1(p, k, 2)

    claims = _forced_claims(
        A, k, gen1.fn, gen2.fn, compose_grid, convention_grid, corrupt
    )

    claims.append(
        _constancy_claim(
            "a.veff1-expansion",
            "model1.veff1.expanded",
            "expanded first-component potential minus the general form (identity up to constant)",
            lambda w: raw1(w) - gen1(w),
            _CONSTANCY_GRID,
        )
    )
    claims.append(
        _constancy_claim(
            "b.veff1-constrained",
            "model1.veff1.closed",
            "Rosen-Morse closed form minus the constrained expanded form; the constant gap is the bookkeeping discrepancy",
            lambda w: closed1(w) - raw1(w),
            _CONSTANCY_GRID,
        )
    )
    claims.append(
        _constancy_claim(
            "b.veff2-constrained",
            "model1.veff2.closed",
            "second-component closed form minus the constrained general form",
            lambda w: closed2(w) - gen2(w),
            _CONSTANCY_GRID,
        )
    )

    sl1 = build_sl_matrix(lambda w: np.cosh(w) ** 2, closed1.fn, grid)
    pairs1 = eig_lowest(sl1, levels)
    sl2 = build_sl_matrix(lambda w: np.cosh(w) ** 2, closed2.fn, grid)
    pairs2 = eig_lowest(sl2, levels)

    for n in range(levels):
        line = energy_model1(n, p, k, R)
        lam_oracle = pairs1[n][0]
        claims.append(
            Claim(
                claim_id=f"c.spectrum.m{n}",
                paper_ref="model1.spectrum.closed",
                description="closed-form level constant vs oracle eigenvalue of the closed j=1 potential",
                metric=abs(line.E_sq_bar - lam_oracle),
                tolerance=float("nan"),
                verdict="recorded",
                grid=_gdict(grid),
                details={
                    "closed_form": line.E_sq_bar,
                    "oracle": lam_oracle,
                    "radicand_ok": line.radicand_ok,
                },
            )
        )

    for n in range(levels):
        wf = wavefn_model1(n, p, k)
        lam = energy_model1(n, p, k, R).E_sq_bar
        res = verify_eigenpair(closed1, wf, lam, grid, window=window)
        claims.append(
            Claim(
                claim_id=f"d.eigenfunction.m{n}",
                paper_ref="model1.eigenfunction.closed",
                description="windowed eigenpair residual of the printed eigenfunction at the printed level constant",
                metric=res,
                tolerance=float("nan"),
                verdict="recorded",
                grid=_gdict(grid),
                details={
                    "lambda": lam,
                    "window": window,
                    "norm_finite": wf.norm_finite,
                },
            )
        )

    e1 = [v for v, _ in pairs1]
    e2 = [v for v, _ in pairs2]
    for m in range(1, levels):
        claims.append(
            Claim(
                claim_id=f"e.partner.m{m}",
                paper_ref="partner.level-pairing",
                description="oracle spectra of the two components paired with the one-level shift",
                metric=abs(e1[m] - e2[m - 1]),
                tolerance=float("nan"),
                verdict="recorded",
                grid=_gdict(grid),
                details={
                    "e1": e1[m],
                    "e2_shifted": e2[m - 1],
                    "unshifted_deviation": abs(e1[m] - e2[m]),
                },
            )
        )

    # Solvable-structure identity: for a true eigenfunction the local energy
    # (H phi)/phi is constant; evaluated analytically for the printed ground state.
    s = (-1.0 + math.sqrt(1.0 - 4.0 * p.C1 * p.C1)) / 2.0
    B = p.C1 * (1.0 + 2.0 * p.C2) / 2.0

    def local_energy(w):
        t = np.tanh(np.asarray(w, dtype=float))
        dlog = -s / (1.0 - t) + B / (1.0 + t)
        d2log = -s / (1.0 - t) ** 2 - B / (1.0 + t) ** 2
        return -(1.0 - t * t) * (dlog * dlog + d2log) + closed1(w)

    metric, mean = _constancy(local_energy)
    claims.append(
        Claim(
            claim_id="g.local-energy-constancy",
            paper_ref="model1.eigenfunction.closed",
            description=(
                "local energy (H phi)/phi of the printed ground state under the "
                "closed j=1 potential; constant iff the printed pair solves the operator"
            ),
            metric=metric,
            tolerance=float("nan"),
            verdict="recorded",
            grid=_CONSTANCY_GRID,
            details={
                "mean_local_energy": mean,
                "closed_form_level0": energy_model1(0, p, k, R).E_sq_bar,
            },
        )
    )

    return VerificationReport(
        model=1,
        k=k,
        R=R,
        levels=levels,
        params={"C1": p.C1, "C2": p.C2, "C3": p.C3, "branch": p.branch},
        claims=claims,
    )


def _report_model2(
    p, k, R, grid, levels, window, compose_grid, convention_grid, corrupt
):
    A, dA = a_u_model2(p), da_u_model2(p)
    gen1 = v_eff_general(A, dA, k, 1)
    gen2 = v_eff_general(A, dA, k, 2)
    raw1 = v_eff_model2_raw(p)
    closed1 = v_eff_model2(p, 1)
    closed2 = v_eff_model2(p, 2)
    alpha, beta = p.alpha, p.beta

    claims = _forced_claims(
        A, k, gen1.fn, gen2.fn, compose_grid, convention_grid, corrupt,
        q_poles=closed1.poles,
    )

    claims.append(
        _constancy_claim(
            "a.veff1-expansion",
            "model2.veff1.expanded",
            "expanded first-component potential minus the general form (identity up to constant)",
            lambda w: raw1(w) - gen1(w),
            _CONSTANCY_GRID,
        )
    )
    claims.append(
        _constancy_claim(
            "b.veff1-constrained",
            "model2.veff1.closed",
            "closed rational form minus the constrained expanded form; the add-and-subtract bookkeeping gap",
            lambda w: closed1(w) - raw1(w),
            _CONSTANCY_GRID,
        )
    )
    claims.append(
        _constancy_claim(
            "b.veff2-constrained",
            "model2.veff2.closed",
            "second-component closed form minus the constrained general form (any w-dependence is a transcription defect)",
            lambda w: closed2(w) - gen2(w),
            _CONSTANCY_GRID,
        )
    )

    sl1 = build_sl_matrix(
        lambda w: np.cosh(w) ** 2, closed1.fn, grid, q_poles=closed1.poles
    )
    pairs1 = eig_lowest(sl1, levels)
    sl2 = build_sl_matrix(
        lambda w: np.cosh(w) ** 2, closed2.fn, grid, q_poles=closed2.poles
    )
    pairs2 = eig_lowest(sl2, levels)

    for m in range(levels):
        line = energy_model2(m, alpha, beta, k, R)
        lam_oracle = pairs1[m][0]
        matched = energy_model2_matched(m, p)
        claims.append(
            Claim(
                claim_id=f"c.spectrum.m{m}",
                paper_ref="model2.spectrum.closed",
                description="closed-form level constant vs oracle eigenvalue of the closed j=1 potential",
                metric=abs(line.E_sq_bar - lam_oracle),
                tolerance=float("nan"),
                verdict="recorded",
                grid=_gdict(grid),
                details={
                    "closed_form": line.E_sq_bar,
                    "oracle": lam_oracle,
                    "identity_matched": matched,
                    "oracle_minus_matched": lam_oracle - matched,
                },
            )
        )

    for m in range(levels):
        lam = energy_model2(m, alpha, beta, k, R).E_sq_bar
        matched = energy_model2_matched(m, p)
        for variant in ("classical", "x1"):
            wf = wavefn_model2(m, alpha, beta, polynomial=variant)
            res = verify_eigenpair(closed1, wf, lam, grid, window=window)
            res_matched = verify_eigenpair(closed1, wf, matched, grid, window=window)
            claims.append(
                Claim(
                    claim_id=f"d.eigenfunction.{variant}.m{m}",
                    paper_ref="model2.eigenfunction.closed",
                    description=(
                        f"windowed eigenpair residual of the {variant} polynomial "
                        "interpretation at the printed level constant"
                    ),
                    metric=res,
                    tolerance=float("nan"),
                    verdict="recorded",
                    grid=_gdict(grid),
                    details={
                        "lambda_printed": lam,
                        "residual_at_identity_energy": res_matched,
                        "lambda_identity": matched,
                        "window": window,
                        "norm_finite": wf.norm_finite,
                    },
                )
            )

    e1 = [v for v, _ in pairs1]
    e2 = [v for v, _ in pairs2]
    for m in range(1, levels):
        claims.append(
            Claim(
                claim_id=f"e.partner.m{m}",
                paper_ref="partner.level-pairing",
                description="oracle spectra of the two components paired with the one-level shift",
                metric=abs(e1[m] - e2[m - 1]),
                tolerance=float("nan"),
                verdict="recorded",
                grid=_gdict(grid),
                details={
                    "e1": e1[m],
                    "e2_shifted": e2[m - 1],
                    "unshifted_deviation": abs(e1[m] - e2[m]),
                },
            )
        )

    printed0 = energy_model2(0, alpha, beta, k, R).E_sq_bar
    for variant in ("sech2", "sech1"):
        rhs = midya_rhs(alpha, beta, 1, variant=variant)
        metric, mean = _constancy(lambda w: closed1(w) + rhs(w))
        claims.append(
            Claim(
                claim_id=f"g.midya-rhs.{variant}",
                paper_ref="model2.solvable-rhs",
                description=(
                    "closed j=1 potential plus the solvable-model right-hand side "
                    f"({variant} single-pole term); constant iff the identity holds, "
                    "and the constant is the implied ground level"
                ),
                metric=metric,
                tolerance=float("nan"),
                verdict="recorded",
                grid=_CONSTANCY_GRID,
                details={
                    "implied_level0": mean,
                    "printed_level0": printed0,
                    "implied_minus_printed": mean - printed0,
                },
            )
        )

    return VerificationReport(
        model=2,
        k=k,
        R=R,
        levels=levels,
        params={
            "C1": p.C1,
            "a1": p.a1,
            "a2": p.a2,
            "k": p.k,
            "alpha": alpha,
            "beta": beta,
            "C2": p.C2,
            "C3": p.C3,
            "C4": p.C4,
            "C5": p.C5,
            "C6": p.C6,
        },
        claims=claims,
    )
