"""Parameter sweeps, critical-point extraction, finite-size studies and the
Kitaev density/compressibility analog.

Finite-N quantities are Brillouin-zone sums; "thermodynamic" means adaptive
quadrature of the corresponding integral (not a huge-N sum).  All routines
are pure functions of their arguments; sweep points and disorder
realizations are independent and may be evaluated in any order.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .entanglement import (
    concurrence,
    concurrence_from_eta,
    eta_analytic,
    eta_thermodynamic,
    mode_index,
    rdm_from_restriction,
    rdm_pair,
)
from .errors import (
    GaplessError,
    GridTooCoarseError,
    NoRootError,
    ParityError,
    WindowError,
)
from .gaussian import flatten_from_fill, restrict, spectral_flatten
from .models import (
    Boundary,
    Family,
    GAP_TOL,
    DisorderSpec,
    ModelSpec,
    bloch_vector,
    momentum_grid,
    realspace_hamiltonian,
)

SQRT2_MINUS_1 = np.sqrt(2.0) - 1.0


# ---------------------------------------------------------------- eta values

def eta_finite(N: int, lam: float, pair: str = "intra") -> float:
    """Discrete Brillouin-zone sum for eta1 (intra) or eta2 (inter)."""
    spec = ModelSpec.ssh(N, lam)
    ks = momentum_grid(N)
    s = 0.0
    for k in ks:
        h = bloch_vector(spec, k).normalized()
        s += h.hx if pair == "intra" else np.cos(k) * h.hx + np.sin(k) * h.hy
    return s / N


def eta1(lam: float, N: int | None = None) -> float:
    """eta1 = BZ average of normalized h_x; quadrature when N is None."""
    if N is None:
        return eta_thermodynamic(lam, "intra").value
    return eta_finite(N, lam, "intra")


def eta2(lam: float, N: int | None = None) -> float:
    if N is None:
        return eta_thermodynamic(lam, "inter").value
    return eta_finite(N, lam, "inter")


def _deta1_integrand(lam: float):
    # d(hx/|h|)/dlambda, with dhx/dlam = -1 + cos k, dhy/dlam = sin k
    def f(k):
        t1, t2 = 1.0 - lam, 1.0 + lam
        hx = t1 + t2 * np.cos(k)
        hy = t2 * np.sin(k)
        r2 = hx * hx + hy * hy
        r = np.sqrt(r2)
        return hy * (hy * (np.cos(k) - 1.0) - hx * np.sin(k)) / (r2 * r)
    return f


def deta1(lam: float, N: int | None = None) -> float:
    """d(eta1)/d(lambda), exact per momentum (no finite differences)."""
    if abs(lam) < GAP_TOL:
        raise GaplessError("derivative undefined at lambda = 0")
    if N is None:
        val, _ = quad(_deta1_integrand(lam), 0.0, np.pi,
                      points=[np.pi], epsabs=1e-12, epsrel=1e-12, limit=400)
        return val / np.pi
    f = _deta1_integrand(lam)
    return float(np.mean([f(k) for k in momentum_grid(N)]))


# -------------------------------------------------------------------- sweeps

@dataclass
class SweepResult:
    """Per-lambda eta and concurrence columns of one sweep.

    ``N`` is None for the thermodynamic limit.  Points where the gap closes
    are recorded in ``errors`` as (lambda, message) and carry NaN columns.
    """

    lambdas: np.ndarray
    eta1: np.ndarray
    eta2: np.ndarray
    c1: np.ndarray
    c2: np.ndarray
    N: int | None
    dc2_dlambda: np.ndarray | None = None
    errors: list = field(default_factory=list)


def sweep(lambda_grid, N: int | None = None,
          with_derivative: bool = True) -> SweepResult:
    """eta1/eta2/C1/C2 over a lambda grid for a clean periodic SSH chain."""
    lams = np.asarray(lambda_grid, dtype=float)
    if np.any(np.diff(lams) <= 0):
        raise ValueError("lambda grid must be strictly increasing")
    cols = {name: np.full(lams.shape, np.nan) for name in ("e1", "e2", "c1", "c2")}
    errors = []
    for i, lam in enumerate(lams):
        try:
            e1 = eta1(lam, N)
            e2 = eta2(lam, N)
        except GaplessError as exc:
            errors.append((float(lam), str(exc)))
            continue
        cols["e1"][i] = e1
        cols["e2"][i] = e2
        cols["c1"][i] = concurrence_from_eta(e1)
        cols["c2"][i] = concurrence_from_eta(e2)
    result = SweepResult(lambdas=lams, eta1=cols["e1"], eta2=cols["e2"],
                         c1=cols["c1"], c2=cols["c2"], N=N, errors=errors)
    if with_derivative and len(lams) >= 3:
        result.dc2_dlambda = derivative(result.c2, lams)
    return result


def derivative(values, grid) -> np.ndarray:
    """Centered finite differences on a uniform grid; endpoints are NaN."""
    values = np.asarray(values, dtype=float)
    grid = np.asarray(grid, dtype=float)
    if len(grid) < 3:
        raise GridTooCoarseError("need at least 3 points")
    steps = np.diff(grid)
    if np.max(np.abs(steps - steps[0])) > 1e-9 * max(abs(steps[0]), 1e-300):
        raise ValueError("derivative requires a uniform grid")
    out = np.full(values.shape, np.nan)
    out[1:-1] = (values[2:] - values[:-2]) / (grid[2:] - grid[:-2])
    return out


# --------------------------------------------------------- critical analysis

def find_lambda_plus(N: int | None = None,
                     bracket=(1e-6, 0.9), xtol=1e-12) -> float:
    """Root of eta1(lambda) = sqrt(2) - 1 on (0, 1): where C1 dies.

    Finite chains with N in {2, 4} have no root (eta1(0+) already sits below
    the threshold) and raise NoRootError.
    """
    def f(lam):
        return eta1(lam, N) - SQRT2_MINUS_1
    fa, fb = f(bracket[0]), f(bracket[1])
    if fa * fb > 0:
        raise NoRootError(f"eta1 - (sqrt(2)-1) does not change sign on {bracket}")
    return float(brentq(f, bracket[0], bracket[1], xtol=xtol))


def find_lambda_minus(N: int | None = None,
                      bracket=(-0.9, -1e-6), xtol=1e-12) -> float:
    """Root of eta2(lambda) = sqrt(2) - 1 on (-1, 0): where C2 dies."""
    def f(lam):
        return eta2(lam, N) - SQRT2_MINUS_1
    fa, fb = f(bracket[0]), f(bracket[1])
    if fa * fb > 0:
        raise NoRootError(f"eta2 - (sqrt(2)-1) does not change sign on {bracket}")
    return float(brentq(f, bracket[0], bracket[1], xtol=xtol))


def jump_at_zero(N: int) -> float:
    """Discontinuity |eta1(0+) - eta1(0-)| of an even-N chain; equals 2/N.

    Evaluated through the one-sided limits: away from k = pi the normalized
    h_x is continuous at lambda = 0, while the k = pi term contributes
    -sign(lambda).  Odd N (no k = pi on the grid) raises ParityError.
    """
    if N % 2:
        raise ParityError("eta1 is continuous for odd N")
    ks = momentum_grid(N)
    smooth = sum(abs(np.cos(k / 2.0)) for k in ks if abs(k - np.pi) > 1e-12)
    eta_plus = (smooth - 1.0) / N
    eta_minus = (smooth + 1.0) / N
    return abs(eta_plus - eta_minus)


@dataclass(frozen=True)
class LogFitResult:
    slope: float
    intercept: float
    max_residual: float
    asymptotic: bool


def logfit(window=(1e-5, 1e-3), N: int | None = None,
           num_points: int = 9) -> LogFitResult:
    """Least-squares fit of d(eta1)/d(lambda) against ln(lambda).

    In the thermodynamic limit the slope approaches 2/pi and the intercept
    (2/pi) ln(e/2)^2; the fit is meaningful only for |lambda| << 1, so a
    window outside the asymptotic regime is flagged (``asymptotic=False``).
    """
    lo, hi = window
    if lo <= 0 or hi <= 0:
        raise WindowError("fit window must not touch lambda = 0")
    if lo >= hi:
        raise WindowError("empty fit window")
    lams = np.geomspace(lo, hi, num_points)
    y = np.array([deta1(lam, N) for lam in lams])
    x = np.log(lams)
    design = np.vstack([x, np.ones_like(x)]).T
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = np.max(np.abs(design @ np.array([slope, intercept]) - y))
    scale = max(np.max(np.abs(y)), 1e-300)
    return LogFitResult(slope=float(slope), intercept=float(intercept),
                        max_residual=float(resid),
                        asymptotic=bool(resid < 0.01 * scale))


def slope_c1_at_lambda_plus(N: int | None = None,
                            lambda_plus: float | None = None) -> float:
    """dC1/dlambda approached from below lambda_plus: sqrt(2) * eta1'(lambda_plus)."""
    lp = find_lambda_plus(N) if lambda_plus is None else lambda_plus
    return float(np.sqrt(2.0) * deta1(lp, N))


@dataclass(frozen=True)
class CriticalReport:
    lambda_plus: float
    lambda_minus: float
    slope_at_plus: float
    logfit_slope: float
    logfit_intercept: float
    logfit_asymptotic: bool
    jump_delta: float | None  # even finite N only
    N: int | None


def critical_report(N: int | None = None) -> CriticalReport:
    lp = find_lambda_plus(N)
    lm = find_lambda_minus(N)
    fit = logfit(N=N)
    jump = jump_at_zero(N) if (N is not None and N % 2 == 0) else None
    return CriticalReport(lambda_plus=lp, lambda_minus=lm,
                          slope_at_plus=slope_c1_at_lambda_plus(N, lp),
                          logfit_slope=fit.slope, logfit_intercept=fit.intercept,
                          logfit_asymptotic=fit.asymptotic,
                          jump_delta=jump, N=N)


# -------------------------------------------------------- free-energy check

def ground_state_energy(N: int, lam: float) -> float:
    """E(lambda) = -sum_k |h(k)|, the T -> 0 free energy."""
    spec = ModelSpec.ssh(N, lam)
    return -sum(bloch_vector(spec, k).magnitude for k in momentum_grid(N))


def free_energy_check(N: int, lam: float, h_step: float = 1e-5):
    """Compare dE/dlambda (centered difference) with N (eta1 - eta2).

    Returns (lhs, rhs, |difference|)."""
    if abs(lam) < 10 * h_step:
        raise GaplessError("step straddles the critical point")
    lhs = (ground_state_energy(N, lam + h_step)
           - ground_state_energy(N, lam - h_step)) / (2.0 * h_step)
    rhs = N * (eta_finite(N, lam, "intra") - eta_finite(N, lam, "inter"))
    return lhs, rhs, abs(lhs - rhs)


# ------------------------------------------------------------- Kitaev analog

def kitaev_eta_z(mu: float, t: float = 1.0, delta: float = 1.0,
                 N: int | None = None) -> float:
    """BZ average of the normalized h_z of the Kitaev chain."""
    if N is None:
        def f(k):
            hz = -mu / 2.0 - t * np.cos(k)
            hy = delta * np.sin(k)
            return hz / np.hypot(hz, hy)
        val, _ = quad(f, 0.0, np.pi, epsabs=1e-12, epsrel=1e-12, limit=400)
        return val / np.pi
    spec = ModelSpec.kitaev(N, t=t, delta=delta, mu=mu)
    s = 0.0
    for k in momentum_grid(N):
        h = bloch_vector(spec, k).normalized()
        s += h.hz
    return s / N


def kitaev_local_density(mu: float, t: float = 1.0, delta: float = 1.0,
                         N: int | None = None) -> float:
    """Local electron density n = (1 - eta_z) / 2 of the single-site RDM."""
    return 0.5 * (1.0 - kitaev_eta_z(mu, t, delta, N))


@dataclass
class KitaevDensityTable:
    mus: np.ndarray
    eta_z: np.ndarray
    density: np.ndarray
    compressibility: np.ndarray  # dn/dmu, NaN at endpoints / failed points
    N: int | None
    errors: list = field(default_factory=list)


def kitaev_density(mu_grid, t: float = 1.0, delta: float = 1.0,
                   N: int | None = None) -> KitaevDensityTable:
    """Local density and compressibility over a chemical-potential sweep."""
    mus = np.asarray(mu_grid, dtype=float)
    eta_z = np.full(mus.shape, np.nan)
    errors = []
    for i, mu in enumerate(mus):
        try:
            eta_z[i] = kitaev_eta_z(mu, t, delta, N)
        except GaplessError as exc:
            errors.append((float(mu), str(exc)))
    density = 0.5 * (1.0 - eta_z)
    comp = np.full(mus.shape, np.nan)
    if len(mus) >= 3:
        comp[1:-1] = (density[2:] - density[:-2]) / (mus[2:] - mus[:-2])
    return KitaevDensityTable(mus=mus, eta_z=eta_z, density=density,
                              compressibility=comp, N=N, errors=errors)


def kitaev_density_jump(N: int, t: float = 1.0) -> float:
    """Density discontinuity across mu = 2t for even N; equals 1/N.

    One-sided limits: the k = pi term of eta_z flips sign while all other
    grid terms are continuous, exactly as for the SSH eta1 jump.  Odd N
    raises ParityError."""
    if N % 2:
        raise ParityError("density is continuous in mu for odd N")
    # the smooth (k != pi) part of eta_z cancels in the one-sided difference
    eta_pi_below = 1.0 / N    # sign(hz(pi)) = +1 for mu -> 2t-
    eta_pi_above = -1.0 / N
    n_below = 0.5 * (1.0 - eta_pi_below)
    n_above = 0.5 * (1.0 - eta_pi_above)
    return abs(n_above - n_below)


def kitaev_compressibility_logfit(window=(1e-5, 1e-3), t: float = 1.0,
                                  delta: float = 1.0,
                                  num_points: int = 9) -> LogFitResult:
    """Fit of the thermodynamic dn/dmu against ln|mu - mu_c| near mu_c = 2t.

    The divergence is logarithmic.  Under this parametrization the exact
    prefactor is 1/(4 pi delta): dn/dmu = -(1/2) d(eta_z)/dmu and the k = pi
    expansion carries d(h_z)/dmu = -1/2 (against -2 for the SSH d(h_x)/dlambda).
    """
    lo, hi = window
    if lo <= 0 or hi <= 0 or lo >= hi:
        raise WindowError("fit window must not touch mu_c")
    mus = 2.0 * t - np.geomspace(lo, hi, num_points)

    def dn_dmu(mu):
        def f(k):
            hz = -mu / 2.0 - t * np.cos(k)
            hy = delta * np.sin(k)
            r2 = hz * hz + hy * hy
            # dn/dmu integrand: -(1/2) * dhz/dmu * hy^2 / r^3, dhz/dmu = -1/2
            return 0.25 * hy * hy / (r2 * np.sqrt(r2))
        val, _ = quad(f, 0.0, np.pi, points=[np.pi],
                      epsabs=1e-12, epsrel=1e-12, limit=400)
        return val / np.pi

    y = np.array([dn_dmu(mu) for mu in mus])
    x = np.log(np.abs(mus - 2.0 * t))
    design = np.vstack([x, np.ones_like(x)]).T
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = np.max(np.abs(design @ np.array([slope, intercept]) - y))
    scale = max(np.max(np.abs(y)), 1e-300)
    return LogFitResult(slope=float(slope), intercept=float(intercept),
                        max_residual=float(resid),
                        asymptotic=bool(resid < 0.01 * scale))


# -------------------------------------------------- disorder / open boundary

def _central_inter_pair(N: int):
    c = N // 2 - 1 if N % 2 == 0 else N // 2
    return (c, "b"), (c + 1, "a")


def central_pair_concurrence(spec: ModelSpec, fill: int | None = None) -> float:
    """Concurrence of the central inter-cell pair via the real-space pipeline."""
    s1, s2 = _central_inter_pair(spec.N)
    return concurrence(rdm_pair(spec, s1, s2, fill=fill))


@dataclass
class DisorderTable:
    lambdas: np.ndarray
    mean_c2: np.ndarray
    std_c2: np.ndarray
    per_seed: np.ndarray  # shape (num_realizations, len(lambdas))
    seeds: np.ndarray
    N: int
    amplitude: float


def disorder_ensemble(N: int, lambda_grid, amplitude: float = 0.1,
                      num_realizations: int = 100, base_seed: int = 20260826,
                      boundary: Boundary = Boundary.PERIODIC) -> DisorderTable:
    """Mean and standard deviation of the central-bond C2 over disorder seeds.

    Seeds are ``base_seed + i``; identical inputs give identical tables.
    """
    lams = np.asarray(lambda_grid, dtype=float)
    seeds = base_seed + np.arange(num_realizations)
    per_seed = np.empty((num_realizations, len(lams)))
    for i, seed in enumerate(seeds):
        dis = DisorderSpec(amplitude=amplitude, seed=int(seed))
        for j, lam in enumerate(lams):
            spec = ModelSpec.ssh(N, lam, boundary=boundary, disorder=dis)
            per_seed[i, j] = central_pair_concurrence(spec)
    return DisorderTable(lambdas=lams, mean_c2=per_seed.mean(axis=0),
                         std_c2=per_seed.std(axis=0), per_seed=per_seed,
                         seeds=seeds, N=N, amplitude=amplitude)


def obc_fill_count(N: int, lam: float, fill: str) -> int:
    """Occupation count placing the Fermi level below or above the two
    midgap states of an open chain (lam > 0); below the gap otherwise."""
    if fill not in ("below", "above"):
        raise ValueError("fill must be 'below' or 'above'")
    if lam <= 0:
        return N
    return N - 1 if fill == "below" else N + 1


@dataclass
class ObcTable:
    lambdas: np.ndarray
    c2: np.ndarray
    dc2_dlambda: np.ndarray
    peak_lambda: float
    peak_height: float
    N: int
    fill: str


def obc_center_derivative(N: int, lambda_grid, fill: str = "below") -> ObcTable:
    """dC2/dlambda of the central pair of an open chain, plus peak location.

    The grid may be non-uniform (log-spaced grids resolve the peak near 0);
    derivatives use np.gradient on the actual grid.
    """
    lams = np.asarray(lambda_grid, dtype=float)
    if len(lams) < 3:
        raise GridTooCoarseError("need at least 3 points")
    c2 = np.empty(len(lams))
    for j, lam in enumerate(lams):
        spec = ModelSpec.ssh(N, lam, boundary=Boundary.OPEN)
        c2[j] = central_pair_concurrence(spec, fill=obc_fill_count(N, lam, fill))
    dc2 = np.gradient(c2, lams)
    ipk = int(np.nanargmax(dc2))
    return ObcTable(lambdas=lams, c2=c2, dc2_dlambda=dc2,
                    peak_lambda=float(lams[ipk]), peak_height=float(dc2[ipk]),
                    N=N, fill=fill)
