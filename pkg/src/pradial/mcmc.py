"""Metropolis-within-Gibbs sampling of weighted generalized-Gaussian
densities on R^n and on the positive orthant,

    pi(x) proportional to exp(-||x||_p^p) * f(x),

with f a homogeneous weight (see weights.py).  The chain state feeds the
radial mixture construction: dividing a draw X ~ pi by
(||X||_p^p + W)^(1/p) produces the weighted law on the ell_p ball.

The hot sweep lives in _kernels.py (numba with a numpy fallback).  All
randomness is pre-generated from the counter-based stream, so both
backends produce identical chains for a given seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from . import _kernels
from .distributions import ParameterError, RadialLawW, sample_W, _check_positive
from .lpgeom import PBallSample
from .rng import RngStream
from .weights import KIND_CUSTOM, WeightFn


@dataclass
class ChainConfig:
    n_samples: int = 1000
    burn_in: int = 2000          # adaptation steps (coordinate flips)
    thin: int = 1                # post-burn-in sweeps between kept states
    n_chains: int = 4
    target_accept: float = 0.35
    init_scale: float = 1.0
    accept_window: tuple = (0.2, 0.6)  # acceptable mean acceptance band


@dataclass
class ChainResult:
    samples: np.ndarray          # (n_samples, n), pooled across chains
    accept_rate: float
    accept_per_coord: np.ndarray
    ess: float                   # effective sample size of ||x||_p^p
    ok: bool                     # acceptance inside the required window
    backend: str = _kernels.BACKEND


def log_target(x: np.ndarray, p: float, weight: WeightFn) -> float:
    """log pi up to the normalization constant."""
    x = np.asarray(x, dtype=float)
    return -np.sum(np.abs(x) ** p, axis=-1) + weight.log_eval(x)


def _initial_state(n: int, p: float, weight: WeightFn, rng: RngStream):
    """A valid starting point: spread coordinates so repulsive weights are
    finite."""
    gen = rng.gen
    if weight.orthant_only:
        x = np.sort(gen.random(n)) + np.arange(n) * 0.5 + 0.1
    else:
        x = np.sort(gen.standard_normal(n)) + np.arange(n) * 0.5
    return x


def geyer_ess(series: np.ndarray) -> float:
    """Effective sample size via the initial monotone sequence estimator."""
    x = np.asarray(series, dtype=float)
    m = x.size
    if m < 4:
        return float(m)
    x = x - x.mean()
    var = np.dot(x, x) / m
    if var == 0.0:
        return float(m)
    # autocovariances via FFT
    nfft = int(2 ** np.ceil(np.log2(2 * m)))
    f = np.fft.rfft(x, nfft)
    acov = np.fft.irfft(f * np.conj(f), nfft)[:m].real / m
    rho = acov / acov[0]
    # pair sums Gamma_k = rho_{2k} + rho_{2k+1}; keep while positive and
    # enforce monotonicity
    gamma_sum = 0.0
    prev = np.inf
    k = 0
    while 2 * k + 1 < m:
        g = rho[2 * k] + rho[2 * k + 1]
        if g <= 0.0:
            break
        g = min(g, prev)
        gamma_sum += g
        prev = g
        k += 1
    tau = max(2.0 * gamma_sum - 1.0, 1.0)
    return float(m / tau)


def mcmc_sample(n: int, p: float, weight: WeightFn, rng: RngStream,
                config: ChainConfig | None = None) -> ChainResult:
    """Draw from pi(x) ~ exp(-||x||_p^p) f(x).

    Repulsive weights produce exchangeable coordinates; states are emitted
    sorted ascending so the output is the ordered vector.  Chains run with
    independent substreams and are pooled.
    """
    _check_positive("p", p)
    cfg = config or ChainConfig()
    if weight.kind == KIND_CUSTOM:
        raise ParameterError(
            "custom weights need a bespoke chain; only coded weights are "
            "supported by the compiled kernel")

    per_chain = -(-cfg.n_samples // cfg.n_chains)  # ceil
    streams = rng.split(cfg.n_chains)
    all_samples = []
    acc = np.zeros((n, 2))
    for s in streams:
        out, a = _run_one_chain(n, p, weight, s, cfg, per_chain)
        all_samples.append(out)
        acc += a

    # ordered emission: every state is reported sorted ascending; callers
    # that need exchangeable coordinates apply a uniform permutation
    samples = np.sort(np.concatenate(all_samples, axis=0)[:cfg.n_samples], axis=1)
    rate = acc[:, 0].sum() / max(acc[:, 1].sum(), 1.0)
    per_coord = acc[:, 0] / np.maximum(acc[:, 1], 1.0)
    norm_series = np.sum(np.abs(samples) ** p, axis=1)
    ess = geyer_ess(norm_series)
    lo, hi = cfg.accept_window
    return ChainResult(samples=samples, accept_rate=float(rate),
                       accept_per_coord=per_coord, ess=ess,
                       ok=bool(lo <= rate <= hi))


def _run_one_chain(n, p, weight, stream, cfg, n_keep):
    gen = stream.gen
    n_adapt = cfg.burn_in
    n_post = n_keep * cfg.thin * n  # sweeps -> coordinate flips
    n_steps = n_adapt + n_post

    coord_idx = gen.integers(0, n, size=n_steps).astype(np.int64)
    normals = gen.standard_normal(n_steps)
    log_unifs = np.log(gen.random(n_steps))
    # Robbins-Monro step sizes t^(-0.6), frozen after burn-in; the
    # multiplicative factors are precomputed so the compiled kernel and
    # the numpy fallback apply bit-identical updates
    adapt_rates = 1.0 / (1.0 + np.arange(n_steps, dtype=np.float64)) ** 0.6
    adapt_up = np.exp(adapt_rates * (1.0 - cfg.target_accept))
    adapt_down = np.exp(adapt_rates * (0.0 - cfg.target_accept))

    x0 = _initial_state(n, p, weight, stream.fresh())
    scales = np.full(n, cfg.init_scale)
    out = np.empty((n_keep, n))
    acc_count = np.zeros((n, 2), dtype=np.int64)
    # thinning counts sweeps of n flips; translate to flip units
    _kernels.run_chain(x0, float(p), int(weight.kind), float(weight.beta),
                       coord_idx, normals, log_unifs, scales,
                       int(n_adapt), adapt_up, adapt_down,
                       int(cfg.thin * n), out, acc_count)
    return out, acc_count


def sample_weighted_pnpw(n: int, p: float, weight: WeightFn, law: RadialLawW,
                         rng: RngStream, size: int = 1,
                         config: ChainConfig | None = None) -> PBallSample:
    """The weighted radial mixture on the ball: X ~ pi from the chain, then
    X / (||X||_p^p + W)^(1/p)."""
    cfg = config or ChainConfig(n_samples=size)
    cfg.n_samples = size
    r_chain, r_w = rng.split(2)
    res = mcmc_sample(n, p, weight, r_chain, cfg)
    x = res.samples
    w = np.atleast_1d(sample_W(law, r_w, size=size))
    norm_pow = np.sum(np.abs(x) ** p, axis=-1)
    pts = x / (norm_pow + w)[:, None] ** (1.0 / p)
    from .lpgeom import lp_norm

    return PBallSample(points=pts, norms_p=lp_norm(pts, p),
                       on_sphere=(w == 0.0), p=p)


def estimate_norm_const(n: int, p: float, weight: WeightFn, rng: RngStream,
                        size: int = 100000) -> tuple[float, float]:
    """Monte-Carlo estimate of the normalization constant C making
    C * integral exp(-||x||_p^p) f(x) dx = 1.

    Importance-samples with the product generalized Gaussian (or its
    positive half on the orthant) and averages f in log space via
    log-sum-exp.  Returns (log C, standard error of log C), the latter
    being the relative error of the underlying mean.
    """
    from .distributions import sample_gen_gaussian, sample_gen_gaussian_positive

    sampler = (sample_gen_gaussian_positive if weight.orthant_only
               else sample_gen_gaussian)
    x = sampler(p, rng, size=(size, n))
    logf = np.asarray(weight.log_eval(x), dtype=float)
    finite = np.isfinite(logf)
    # base normalization: the product density integrates
    # (2 Gamma(1+1/p))^n over R^n, halved per coordinate on the orthant
    log_base = n * (np.log(2.0) + gammaln(1.0 + 1.0 / p))
    if weight.orthant_only:
        log_base -= n * np.log(2.0)
    m = np.max(logf[finite]) if finite.any() else -np.inf
    if not np.isfinite(m):
        return -np.inf, np.inf
    vals = np.exp(logf - m, where=finite, out=np.zeros_like(logf))
    mean = vals.mean()
    se = vals.std(ddof=1) / np.sqrt(size)
    log_c_inv = log_base + m + np.log(mean)
    return float(-log_c_inv), float(se / mean)
