"""Geometry and exact samplers on the Euclidean ell_p ball.

Implements the p-norm, log-space ball volumes, the cone measure, the
uniform measure, and the radial mixture family obtained by dividing an
n-vector of generalized Gaussians by (||X||_p^p + W)^(1/p) for a mixing
weight W.  Also provides the norm-split statistic

    B = ||X||_p^p / (||X||_p^p + W),

whose law is an explicit Dirac/Beta mixture, and the boundary density
psi describing how mass accumulates near the sphere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.special import gammaln

from .distributions import (
    ParameterError,
    RadialLawW,
    sample_beta,
    sample_gamma,
    sample_gen_gaussian,
    sample_gen_gaussian_positive,
    sample_W,
    _check_positive,
)
from .rng import RngStream


def lp_norm(x: np.ndarray, p: float, axis: int = -1) -> np.ndarray:
    """||x||_p with the max factored out for overflow safety."""
    _check_positive("p", p)
    x = np.abs(np.asarray(x, dtype=float))
    if x.shape[axis] == 0:
        raise ParameterError("lp_norm of an empty vector")
    m = np.max(x, axis=axis, keepdims=True)
    safe_m = np.where(m == 0.0, 1.0, m)
    s = np.sum((x / safe_m) ** p, axis=axis, keepdims=True)
    out = np.squeeze(m * s ** (1.0 / p), axis=axis)
    return out if out.ndim else float(out)


def log_ball_volume(n: int, p: float) -> float:
    """log of the volume of the unit ell_p ball in R^n."""
    _check_positive("p", p)
    if n < 1:
        raise ParameterError(f"dimension n must be >= 1, got {n}")
    return n * (np.log(2.0) + gammaln(1.0 + 1.0 / p)) - gammaln(1.0 + n / p)


def ball_volume(n: int, p: float) -> float:
    return float(np.exp(log_ball_volume(n, p)))


@dataclass
class PBallSample:
    """Draws from a law on the ell_p ball plus bookkeeping.

    points has shape (size, n); norms_p holds ||x||_p per row; on_sphere
    flags rows that sit exactly on the boundary (W drew its atom at 0).
    """

    points: np.ndarray
    norms_p: np.ndarray
    on_sphere: np.ndarray
    p: float


def _finish_sample(x: np.ndarray, w: np.ndarray, p: float) -> PBallSample:
    norm_pow = np.sum(np.abs(x) ** p, axis=-1)
    pts = x / (norm_pow + w)[:, None] ** (1.0 / p)
    return PBallSample(points=pts, norms_p=lp_norm(pts, p),
                       on_sphere=(w == 0.0), p=p)


def sample_cone(n: int, p: float, rng: RngStream, size: int = 1,
                positive: bool = False) -> PBallSample:
    """Cone (normalized surface) measure on the ell_p sphere: W = delta_0."""
    sampler = sample_gen_gaussian_positive if positive else sample_gen_gaussian
    x = sampler(p, rng, size=(size, n))
    return _finish_sample(x, np.zeros(size), p)


def sample_uniform_ball(n: int, p: float, rng: RngStream, size: int = 1,
                        positive: bool = False) -> PBallSample:
    """Uniform measure on the ell_p ball: W = Exp(1)."""
    sampler = sample_gen_gaussian_positive if positive else sample_gen_gaussian
    x = sampler(p, rng, size=(size, n))
    w = sample_gamma(1.0, 1.0, rng, size=size)
    return _finish_sample(x, w, p)


def sample_pnpw(n: int, p: float, law: RadialLawW, rng: RngStream,
                size: int = 1, positive: bool = False) -> PBallSample:
    """The radial mixture law on the ball driven by the mixing weight W."""
    sampler = sample_gen_gaussian_positive if positive else sample_gen_gaussian
    x = sampler(p, rng, size=(size, n))
    w = np.atleast_1d(sample_W(law, rng, size=size))
    return _finish_sample(x, w, p)


def norm_split_B(n: int, p: float, m: float, law: RadialLawW, rng: RngStream,
                 size: int = 1) -> np.ndarray:
    """Exact draws of B = G/(G+W) with G ~ Gamma((n+m)/p, 1).

    The law is theta * delta_1 + (1-theta) * Beta((n+m)/p, alpha) when W is
    the theta/alpha mixture.  This routine samples the construction
    directly so it also covers tabulated W.
    """
    _check_positive("n + m", n + m)
    g = sample_gamma((n + m) / p, 1.0, rng, size=size)
    w = np.atleast_1d(sample_W(law, rng, size=size))
    return g / (g + w)


@dataclass
class PsiSpec:
    """Parameters of the boundary density psi_f(s), s in [0, 1).

    psi depends on the data only through the combined degree
    d = (n + m)/p and the mixing law W.
    """

    n: int
    p: float
    m: float = 0.0
    law: RadialLawW | None = None

    @property
    def d(self) -> float:
        return (self.n + self.m) / self.p


def psi_density(spec: PsiSpec, s) -> np.ndarray:
    """The density psi at radial coordinates s in [0, 1).

    Closed forms: psi == 0 for W = delta_0, psi == 1 for W = Exp(1), and

        psi(s) = Gamma(alpha + d) / (Gamma(alpha) Gamma(d + 1))
                 * (1 - s^p)^(alpha - 1)

    for W = Gamma(alpha, 1), with d = (n+m)/p.  Mixtures scale the gamma
    part by (1 - theta); tabulated laws are integrated numerically.
    """
    s = np.asarray(s, dtype=float)
    if np.any((s < 0) | (s > 1)):
        raise ParameterError("psi is defined on [0, 1]")
    law = spec.law or RadialLawW.exponential()
    d = spec.d
    p = spec.p

    if law.variant == "tabulated":
        if np.any(s == 1.0):
            raise ParameterError(
                "psi at the boundary s = 1 is only available for the "
                "closed-form mixing laws")
        return _psi_tabulated(spec, law, s)

    theta = law.theta
    if theta == 1.0:
        return np.zeros_like(s)
    alpha = law.alpha
    log_c = gammaln(alpha + d) - gammaln(alpha) - gammaln(d + 1.0)
    # at s = 1 the factor (1-s^p)^(alpha-1) has analytic limit 0 / const /
    # +inf according to the sign of alpha - 1
    with np.errstate(divide="ignore", invalid="ignore"):
        tail = np.log1p(-s ** p)
        expo = (alpha - 1.0) * tail
    expo = np.where(np.isnan(expo), 0.0, expo)
    out = (1.0 - theta) * np.exp(log_c + expo)
    return out


def _kernel_moment(k: float, t: float, w0: np.ndarray, w1: np.ndarray) -> np.ndarray:
    """int_{w0}^{w1} w^k e^{-t w} dw per cell, exactly via the regularized
    lower incomplete gamma function."""
    from scipy.special import gammainc

    if t * float(np.max(w1)) < 1e-8:
        # e^{-t w} is 1 to well below quadrature tolerance
        return (w1 ** (k + 1.0) - w0 ** (k + 1.0)) / (k + 1.0)
    scale = np.exp(gammaln(k + 1.0) - (k + 1.0) * np.log(t))
    return scale * (gammainc(k + 1.0, t * w1) - gammainc(k + 1.0, t * w0))


def _psi_tabulated(spec: PsiSpec, law: RadialLawW, s: np.ndarray) -> np.ndarray:
    """psi for a tabulated W:

        psi(s) = (1 - s^p)^(-(d+1)) / Gamma(d+1)
                 * int w^d exp(-s^p w / (1 - s^p)) W(dw).

    The piecewise-linear density part is integrated exactly cell by cell
    (the kernel moments reduce to incomplete gamma functions), so the only
    approximation left is the tabulation itself.
    """
    d = spec.d
    p = spec.p
    out = np.zeros_like(np.atleast_1d(s), dtype=float)
    flat_s = np.atleast_1d(s)
    if law.grid is not None:
        w0, w1 = law.grid[:-1], law.grid[1:]
        r0, r1 = law.density[:-1], law.density[1:]
        slope = (r1 - r0) / (w1 - w0)
        intercept = r0 - slope * w0  # density(w) = intercept + slope * w
    for i, si in enumerate(flat_s):
        t = si ** p / (1.0 - si ** p)
        val = 0.0
        for x, wgt in law.atoms or []:
            if x > 0.0:
                val += wgt * np.exp(d * np.log(x) - t * x)
            # the atom at 0 contributes 0 to the integral (w^d = 0 for d > 0)
        if law.grid is not None:
            val += float(np.sum(intercept * _kernel_moment(d, t, w0, w1)
                                + slope * _kernel_moment(d + 1.0, t, w0, w1)))
        out[i] = val * np.exp(-(d + 1.0) * np.log1p(-si ** p) - gammaln(d + 1.0))
    return out if np.ndim(s) else float(out[0])


def psi_normalization_defect(spec: PsiSpec) -> float:
    """Distance of the total mass identity from 1, i.e. the absolute error in

        int_0^1 (n+m) s^(n+m-1) psi(s) ds + W({0})

    from 1.  The substitution u = s^(n+m) removes the steep polynomial
    factor, so the quadrature sees a flat integrand.
    """
    law = spec.law or RadialLawW.exponential()
    nm = spec.n + spec.m

    def integrand(u):
        s = u ** (1.0 / nm)
        return psi_density(spec, s)

    val, _ = integrate.quad(integrand, 0.0, 1.0, limit=200)
    return abs(val + law.mass_at_zero() - 1.0)
