"""Large-deviation rate functions and asymptotic verifiers.

Covers three families of rate functions, each in a Euclidean, a
self-adjoint matrix ("H") and a non-self-adjoint matrix ("M") flavour:

* cone rates on probability measures -- relative entropy plus a moment
  penalty (Euclidean), or logarithmic energy plus a p-dependent constant
  (matrix flavours);
* beta rates on [0, 1] for the norm-split statistic B, in closed form;
* empirical-measure rates combining the cone rate with the mixture
  corrections.

The speed regime enters through the parameter ktheta: "critical" selects
the nondegenerate case (speed n for Euclidean targets, n^2 for matrix
targets); "greater" collapses the rate to the point mass at 1.

Also provided: a numerical Legendre-Fenchel transform with golden-section
refinement, a Monte-Carlo scaled cumulant generating function with its
analytic counterpart, and Laplace / boundary-Laplace (Breitung) ratio
checks used by the desk-scale verification experiments.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate, optimize
from scipy.interpolate import CubicSpline
from scipy.special import gammaln, logsumexp

from .distributions import ParameterError, _check_positive
from .measures import MeasureRep, log_energy, moment_p, relative_entropy_gen_gaussian

_EUCLID_TARGETS = ("cone-euclid", "beta-euclid", "emp-euclid")
_MATRIX_TARGETS = ("cone-H", "beta-H", "emp-H", "cone-M", "beta-M", "emp-M")


@dataclass
class RateFnSpec:
    """Parameter bundle selecting one of the rate functions.

    alpha is the limit of alpha_n / n (Euclidean targets) or alpha_n / n^2
    (matrix targets); c <= 0 is the limit of n^(-k) log(1 - theta_n);
    ktheta says whether the Dirac-weight decay exponent k equals the
    critical speed exponent or exceeds it.
    """

    target: str
    p: float
    beta: float = 2.0
    alpha: float = 0.0
    ktheta: str = "critical"  # "critical" | "greater"
    c: float = 0.0

    def __post_init__(self):
        if self.target not in _EUCLID_TARGETS + _MATRIX_TARGETS:
            raise ParameterError(f"unknown rate target {self.target!r}")
        _check_positive("p", self.p)
        if self.alpha < 0:
            raise ParameterError("alpha must be >= 0")
        if self.c > 0:
            raise ParameterError("correction c must be <= 0")
        if self.ktheta not in ("critical", "greater"):
            raise ParameterError("ktheta must be 'critical' or 'greater'")
        if self.target in _MATRIX_TARGETS and self.beta not in (1.0, 2.0, 4.0):
            raise ParameterError("matrix targets require beta in {1, 2, 4}")

    @property
    def gate(self) -> float:
        """The beta-law shape rate: 1/p, beta/(2p), or beta/p."""
        if self.target.endswith("euclid"):
            return 1.0 / self.p
        if self.target.endswith("H"):
            return self.beta / (2.0 * self.p)
        return self.beta / self.p


# --- beta rates ---------------------------------------------------------------

def _rate_beta_generic(x: float, g: float, alpha: float, ktheta: str,
                       c: float) -> float:
    if not (0.0 <= x <= 1.0):
        raise ParameterError("the norm-split statistic lives on [0, 1]")
    if ktheta == "greater":
        return 0.0 if x == 1.0 else np.inf
    if alpha == 0.0:
        if x == 0.0:
            return np.inf
        return -g * np.log(x) - c
    if x == 0.0 or x == 1.0:
        return np.inf
    return (-g * np.log(x / g) - alpha * np.log((1.0 - x) / alpha)
            - (g + alpha) * np.log(g + alpha) - c)


def rate_beta_euclid(x: float, spec: RateFnSpec) -> float:
    return _rate_beta_generic(x, 1.0 / spec.p, spec.alpha, spec.ktheta, spec.c)


def rate_beta_H(x: float, spec: RateFnSpec) -> float:
    return _rate_beta_generic(x, spec.beta / (2.0 * spec.p), spec.alpha,
                              spec.ktheta, spec.c)


def rate_beta_M(x: float, spec: RateFnSpec) -> float:
    return _rate_beta_generic(x, spec.beta / spec.p, spec.alpha, spec.ktheta,
                              spec.c)


def rate_beta(x: float, spec: RateFnSpec) -> float:
    """Dispatch on spec.target."""
    return _rate_beta_generic(x, spec.gate, spec.alpha, spec.ktheta, spec.c)


# --- cone rates ---------------------------------------------------------------

def rate_cone_euclid(mu: MeasureRep, p: float) -> float:
    """H(mu || N_p) + (1 - m_p(mu)) on {m_p <= 1}, +inf outside."""
    m = moment_p(mu, p)
    if m > 1.0:
        return np.inf
    h = relative_entropy_gen_gaussian(mu, p)
    return h + (1.0 - m)


def log_energy_constant(p: float) -> float:
    """log of sqrt(pi) p Gamma(p/2) / (2^p sqrt(e) Gamma((p+1)/2)), the
    p-dependent additive constant of the matrix cone rates, assembled via
    log-Gamma."""
    _check_positive("p", p)
    return (0.5 * np.log(np.pi) + np.log(p) + gammaln(p / 2.0)
            - p * np.log(2.0) - 0.5 - gammaln((p + 1.0) / 2.0))


def rate_cone_H(mu: MeasureRep, p: float, beta: float) -> float:
    """(beta/2) * log-energy + (beta/(2p)) * constant on {m_p <= 1}."""
    m = moment_p(mu, p)
    if m > 1.0:
        return np.inf
    return (beta / 2.0) * log_energy(mu) + (beta / (2.0 * p)) * log_energy_constant(p)


def rate_cone_M(mu: MeasureRep, p: float, beta: float) -> float:
    """(beta/2) * log-energy + (beta/p) * constant on {m_{p/2} <= 1},
    nonnegative support required."""
    _require_nonnegative_support(mu)
    m = moment_p(mu, p / 2.0)
    if m > 1.0:
        return np.inf
    return (beta / 2.0) * log_energy(mu) + (beta / p) * log_energy_constant(p)


def _require_nonnegative_support(mu: MeasureRep):
    if mu.kind == "atoms":
        bad = np.any(mu.positions < 0)
    elif mu.kind == "grid":
        bad = mu.grid[0] < 0 and np.any(mu.density[mu.grid < 0] > 0)
    else:
        bad = mu.support[0] < 0
    if bad:
        raise ParameterError("this rate target requires nonnegative support")


# --- empirical-measure rates --------------------------------------------------

def _emp_terms(cone_val: float, m: float, g: float, alpha: float,
               c: float) -> dict:
    """Itemized summands of the empirical rate in the alpha > 0 branch."""
    return {
        "cone": cone_val,
        "g_log_g": g * np.log(g),
        "neg_sum_log": -(g + alpha) * np.log(g + alpha),
        "alpha_term": -alpha * np.log((1.0 - m) / alpha),
        "neg_c": -c,
    }


def rate_emp_itemized(mu: MeasureRep, spec: RateFnSpec) -> dict:
    """The empirical-measure rate with each summand reported.

    Returns a dict with keys "value", "branch", and "terms".
    """
    target = spec.target
    if target == "emp-euclid":
        cone = rate_cone_euclid(mu, spec.p)
        m = moment_p(mu, spec.p)
    elif target == "emp-H":
        cone = rate_cone_H(mu, spec.p, spec.beta)
        m = moment_p(mu, spec.p)
    elif target == "emp-M":
        cone = rate_cone_M(mu, spec.p, spec.beta)
        m = moment_p(mu, spec.p / 2.0)
    else:
        raise ParameterError(f"{target!r} is not an empirical-measure target")

    g = spec.gate
    if spec.alpha == 0.0:
        value = cone - spec.c
        return {"value": value, "branch": "alpha-zero",
                "terms": {"cone": cone, "neg_c": -spec.c}}
    if m >= 1.0:
        return {"value": np.inf, "branch": "moment-gate-saturated",
                "terms": {}}
    if not np.isfinite(cone):
        return {"value": np.inf, "branch": "cone-infinite", "terms": {}}
    terms = _emp_terms(cone, m, g, spec.alpha, spec.c)
    return {"value": sum(terms.values()), "branch": "alpha-positive",
            "terms": terms}


def rate_emp_euclid(mu: MeasureRep, spec: RateFnSpec) -> float:
    return rate_emp_itemized(mu, spec)["value"]


def rate_emp_H(mu: MeasureRep, spec: RateFnSpec) -> float:
    return rate_emp_itemized(mu, spec)["value"]


def rate_emp_M(mu: MeasureRep, spec: RateFnSpec) -> float:
    return rate_emp_itemized(mu, spec)["value"]


def scaled_family_cone_minimum(p: float, n_grid: int = 400) -> tuple[float, float]:
    """Diagnostic: minimum of the Euclidean cone rate over the scaled
    generalized-Gaussian family (densities proportional to exp(-|x|^p/z)).

    Returns (z_min, value).  The closed form gives the minimum at z = p
    with value 1 - (1 + log p)/p, which vanishes at p = 1 and is positive
    otherwise; this is reported as-is, no recentering is applied.
    """
    zs = np.exp(np.linspace(np.log(0.2), np.log(5.0 * p), n_grid))
    vals = np.array([rate_cone_euclid(MeasureRep.gen_gaussian_scaled(p, z), p)
                     for z in zs])
    i = int(np.argmin(vals))
    return float(zs[i]), float(vals[i])


# --- Legendre-Fenchel transform -------------------------------------------

def legendre_transform(t: np.ndarray, f: np.ndarray, x) -> np.ndarray:
    """Lambda*(x) = sup_t [x t - Lambda(t)] for Lambda sampled on a grid.

    Lambda is treated as +inf outside the grid interval, so the supremum
    is over [t[0], t[-1]].  Interior maxima are refined by golden-section
    search on a cubic-spline interpolant within the bracketing cells.
    """
    t = np.asarray(t, dtype=float)
    f = np.asarray(f, dtype=float)
    if t.size < 4 or np.any(np.diff(t) <= 0):
        raise ParameterError("grid must be increasing with at least 4 knots")
    spline = CubicSpline(t, f)
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty_like(xs)
    for j, xj in enumerate(xs):
        h = xj * t - f
        i = int(np.argmax(h))
        lo = t[max(i - 1, 0)]
        hi = t[min(i + 1, t.size - 1)]
        if hi > lo:
            res = optimize.minimize_scalar(
                lambda s: -(xj * s - spline(s)), bounds=(lo, hi),
                method="bounded",
                options={"xatol": 1e-12})
            out[j] = max(float(-res.fun), float(h[i]))
        else:
            out[j] = float(h[i])
    return out if np.ndim(x) else float(out[0])


def legendre_biconjugate(t: np.ndarray, f: np.ndarray) -> np.ndarray:
    """(Lambda*)* evaluated back on the original grid.

    The dual grid is taken over the range of one-sided slopes of Lambda,
    which is the effective domain of Lambda* seen by the data.
    """
    t = np.asarray(t, dtype=float)
    f = np.asarray(f, dtype=float)
    slopes = np.diff(f) / np.diff(t)
    xs = np.linspace(slopes.min(), slopes.max(), max(8 * t.size, 512))
    fstar = legendre_transform(t, f, xs)
    return np.asarray(legendre_transform(xs, fstar, t))


# --- Gaertner-Ellis -----------------------------------------------------------

def scaled_cgf_estimate(samples: np.ndarray, t: float, n: int, k: int) -> float:
    """(1/n^k) log (1/N) sum exp(n^k t B_i), via log-sum-exp."""
    if k not in (1, 2):
        raise ParameterError("k must be 1 or 2")
    b = np.asarray(samples, dtype=float)
    if b.size == 0:
        raise ParameterError("need at least one sample")
    if np.any((b < 0) | (b > 1)):
        raise ParameterError("samples must lie in [0, 1]")
    s = float(n) ** k
    return float((logsumexp(s * t * b) - np.log(b.size)) / s)


def _psi_star(t: float, p: float, alpha: float) -> float:
    """Psi*(-t) = sup over y in (0,1) of [-t y + (1/p) log(1-y) + alpha log y],
    the Legendre term of the analytic scaled CGF."""
    g = 1.0 / p

    def obj(y):
        return -t * y + g * np.log1p(-y) + alpha * np.log(y)

    # stationary points solve t y^2 - (t + g + alpha) y + alpha = 0
    if t == 0.0:
        y = alpha / (g + alpha)
    else:
        disc = (t + g + alpha) ** 2 - 4.0 * t * alpha
        sq = np.sqrt(disc)
        roots = [(t + g + alpha - sq) / (2.0 * t),
                 (t + g + alpha + sq) / (2.0 * t)]
        cands = [y for y in roots if 0.0 < y < 1.0]
        if not cands:
            raise ParameterError(f"no stationary point in (0,1) for t={t}")
        y = max(cands, key=obj)
    return obj(y)


def analytic_scaled_cgf(t: float, p: float, alpha: float, c: float = 0.0) -> float:
    """The closed-form limit of the scaled CGF of B for the critical-speed
    mixture with alpha > 0:

        Lambda(t) = t + c - (1/p) log(1/p) - alpha log alpha
                    + (1/p + alpha) log(1/p + alpha) + Psi*(-t).
    """
    _check_positive("alpha", alpha)
    g = 1.0 / p
    return (t + c - g * np.log(g) - alpha * np.log(alpha)
            + (g + alpha) * np.log(g + alpha) + _psi_star(t, p, alpha))


# --- Laplace / boundary-Laplace verifiers ----------------------------------

def _interior_max(pfn, lo, hi):
    res = optimize.minimize_scalar(lambda x: -pfn(x), bounds=(lo, hi),
                                   method="bounded", options={"xatol": 1e-12})
    return float(res.x), float(-res.fun)


def _second_derivative(pfn, x0, h=1e-4):
    return (pfn(x0 + h) - 2.0 * pfn(x0) + pfn(x0 - h)) / h ** 2


def _log_integral(q, pfn, lo, hi, n, shift):
    """log of integral q(x) exp(n (pfn(x) - shift)) dx, numerically safe."""
    val, _ = integrate.quad(lambda x: q(x) * np.exp(n * (pfn(x) - shift)),
                            lo, hi, limit=400)
    return np.log(val) + 0.0  # shift re-applied by callers in log space


def laplace_check(q, pfn, interval, n) -> float:
    """Ratio of integral q e^{n p} over the interval to the interior
    Laplace approximation sqrt(2 pi / (n |p''(x0)|)) q(x0) e^{n p(x0)};
    tends to 1 as n grows."""
    lo, hi = interval
    x0, p0 = _interior_max(pfn, lo, hi)
    d2 = _second_derivative(pfn, x0)
    if d2 >= 0:
        raise ParameterError("pfn must have a strict interior maximum")
    log_num = _log_integral(q, pfn, lo, hi, n, p0)
    log_den = 0.5 * np.log(2.0 * np.pi / (n * abs(d2))) + np.log(q(x0))
    return float(np.exp(log_num - log_den))


def adapted_laplace_limit(q, pfn, interval, n, c: float) -> tuple[float, float]:
    """The expanded two-coefficient form: with s1 = 1 and s2 = e^{c n},

        (1/n) log [ s1 + s2 * integral q e^{n p} ]

    is returned along with its limit c + p(x0)."""
    lo, hi = interval
    x0, p0 = _interior_max(pfn, lo, hi)
    log_int = _log_integral(q, pfn, lo, hi, n, p0) + n * p0
    est = float(np.logaddexp(0.0, c * n + log_int) / n)
    return est, float(c + p0)


def breitung_check(q, pfn, n, hi: float = 1.0) -> float:
    """Boundary case: p maximal at 0 with p'(0) < 0.  Ratio of
    integral_0^hi q e^{n p} to n^{-1} |p'(0)|^{-1} q(0) e^{n p(0)}."""
    h = 1e-7
    dp0 = (pfn(h) - pfn(0.0)) / h
    if dp0 >= 0:
        raise ParameterError("pfn must decrease from the boundary")
    p0 = pfn(0.0)
    log_num = _log_integral(q, pfn, 0.0, hi, n, p0)
    log_den = -np.log(n) - np.log(abs(dp0)) + np.log(q(0.0))
    return float(np.exp(log_num - log_den))


def adapted_breitung_limit(q, pfn, n, c: float, hi: float = 1.0) -> tuple[float, float]:
    """Boundary analogue of adapted_laplace_limit: the estimate of
    (1/n) log [1 + e^{c n} integral] and its limit c + p(0)."""
    p0 = pfn(0.0)
    log_int = _log_integral(q, pfn, 0.0, hi, n, p0) + n * p0
    est = float(np.logaddexp(0.0, c * n + log_int) / n)
    return est, float(c + p0)
