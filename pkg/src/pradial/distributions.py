"""Base scalar distributions: generalized Gaussian, gamma, beta, and the
radial mixing law W.

The generalized Gaussian here is the variant with density
``exp(-|x|^p) / (2*Gamma(1+1/p))``; all probabilistic representations in
this package are built from it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import gammaln

from .rng import RngStream


class ParameterError(ValueError):
    pass


def _check_positive(name, value):
    if not np.isfinite(value) or value <= 0:
        raise ParameterError(f"{name} must be finite and positive, got {value!r}")


def sample_gamma(a: float, b: float, rng: RngStream, size=None):
    """Gamma(a, b) draws in the rate parametrization (mean a/b).

    Shapes below 1 go through the boosting identity
    Gamma(a) =d= Gamma(a+1) * U^(1/a), which stays exact for small a.
    """
    _check_positive("shape a", a)
    _check_positive("rate b", b)
    gen = rng.gen
    if a >= 1.0:
        g = gen.standard_gamma(a, size=size)
    else:
        g = gen.standard_gamma(a + 1.0, size=size)
        u = gen.random(size=size)
        # guard exact zeros from the uniform; measure-zero but log() below
        u = np.where(u == 0.0, np.nextafter(0.0, 1.0), u) if size is not None else (
            u if u > 0.0 else np.nextafter(0.0, 1.0))
        g = g * np.exp(np.log(u) / a)
    return g / b


def sample_beta(a: float, b: float, rng: RngStream, size=None):
    """Beta(a, b) via the gamma-ratio construction G1/(G1+G2)."""
    _check_positive("a", a)
    _check_positive("b", b)
    g1 = sample_gamma(a, 1.0, rng, size=size)
    g2 = sample_gamma(b, 1.0, rng, size=size)
    return g1 / (g1 + g2)


def sample_gen_gaussian(p: float, rng: RngStream, size=None):
    """Draws with density exp(-|x|^p)/(2*Gamma(1+1/p)).

    Uses the exact power transform X = S * G^(1/p) with S a uniform sign
    and G ~ Gamma(1/p, 1).
    """
    _check_positive("p", p)
    g = sample_gamma(1.0 / p, 1.0, rng, size=size)
    signs = rng.gen.integers(0, 2, size=size) * 2 - 1
    return signs * g ** (1.0 / p)


def sample_gen_gaussian_positive(p: float, rng: RngStream, size=None):
    """The truncated-to-[0, inf) generalized Gaussian, i.e. |X|."""
    _check_positive("p", p)
    g = sample_gamma(1.0 / p, 1.0, rng, size=size)
    return g ** (1.0 / p)


def gen_gaussian_pdf(p: float, x):
    _check_positive("p", p)
    x = np.asarray(x, dtype=float)
    return np.exp(-np.abs(x) ** p - np.log(2.0) - gammaln(1.0 + 1.0 / p))


def gen_gaussian_logpdf(p: float, x):
    _check_positive("p", p)
    x = np.asarray(x, dtype=float)
    return -np.abs(x) ** p - np.log(2.0) - gammaln(1.0 + 1.0 / p)


def gen_gaussian_cdf(p: float, x):
    """CDF of the generalized Gaussian via the regularized incomplete gamma."""
    from scipy.special import gammainc

    _check_positive("p", p)
    x = np.asarray(x, dtype=float)
    tail = gammainc(1.0 / p, np.abs(x) ** p)
    return 0.5 + 0.5 * np.sign(x) * tail


@dataclass
class RadialLawW:
    """The mixing measure W = theta * delta_0 + (1-theta) * Gamma(alpha, 1),
    or a tabulated Borel law on [0, inf).

    Tabulated laws carry point atoms plus a density sampled on a grid; the
    total mass must be 1 within 1e-12.
    """

    theta: float = 0.0
    alpha: float = 1.0
    variant: str = "exponential"  # dirac-at-zero | exponential | gamma | mixture | tabulated
    atoms: list | None = None  # list of (position, weight), tabulated only
    grid: np.ndarray | None = None  # knots, tabulated only
    density: np.ndarray | None = None  # density values at knots

    def __post_init__(self):
        if not (0.0 <= self.theta <= 1.0):
            raise ParameterError(f"theta must lie in [0, 1], got {self.theta}")
        if self.variant == "tabulated":
            if (self.atoms is None or len(self.atoms) == 0) and self.grid is None:
                raise ParameterError("tabulated law needs atoms and/or a density grid")
            total = sum(w for _, w in (self.atoms or []))
            if self.grid is not None:
                self.grid = np.asarray(self.grid, dtype=float)
                self.density = np.asarray(self.density, dtype=float)
                if np.any(self.density < 0):
                    raise ParameterError("tabulated density must be nonnegative")
                total += np.trapezoid(self.density, self.grid)
            if abs(total - 1.0) > 1e-12:
                raise ParameterError(f"tabulated masses sum to {total}, not 1")
        else:
            if self.theta < 1.0:
                _check_positive("alpha", self.alpha)

    @classmethod
    def dirac(cls) -> "RadialLawW":
        return cls(theta=1.0, variant="dirac-at-zero")

    @classmethod
    def exponential(cls) -> "RadialLawW":
        return cls(theta=0.0, alpha=1.0, variant="exponential")

    @classmethod
    def gamma(cls, alpha: float) -> "RadialLawW":
        return cls(theta=0.0, alpha=alpha, variant="gamma")

    @classmethod
    def mixture(cls, theta: float, alpha: float) -> "RadialLawW":
        return cls(theta=theta, alpha=alpha, variant="mixture")

    @classmethod
    def tabulated(cls, atoms=None, grid=None, density=None) -> "RadialLawW":
        return cls(variant="tabulated", atoms=list(atoms or []), grid=grid,
                   density=density)

    def mass_at_zero(self) -> float:
        if self.variant == "tabulated":
            return sum(w for x, w in (self.atoms or []) if x == 0.0)
        return self.theta

    # --- tabulated helpers -------------------------------------------------

    def _tab_continuous_mass(self) -> float:
        if self.grid is None:
            return 0.0
        return float(np.trapezoid(self.density, self.grid))

    def _tab_inverse_cdf(self, u: np.ndarray) -> np.ndarray:
        """Inverse CDF of the grid density part, scaled to unit mass."""
        cdf = np.concatenate([[0.0], np.cumsum(
            0.5 * (self.density[1:] + self.density[:-1]) * np.diff(self.grid))])
        cdf /= cdf[-1]
        # cdf is monotone by nonnegativity; interp inverts it
        return np.interp(u, cdf, self.grid)


def sample_W(law: RadialLawW, rng: RngStream, size=None):
    """Draw from the mixing measure.  Returns exact zeros with probability
    law.mass_at_zero()."""
    gen = rng.gen
    scalar = size is None
    m = 1 if scalar else int(np.prod(size))

    if law.variant == "tabulated":
        positions = np.array([x for x, _ in law.atoms], dtype=float)
        weights = np.array([w for _, w in law.atoms], dtype=float)
        cont = law._tab_continuous_mass()
        probs = np.concatenate([weights, [cont]])
        probs = probs / probs.sum()
        choice = gen.choice(len(probs), size=m, p=probs)
        out = np.empty(m)
        atom_mask = choice < len(positions)
        out[atom_mask] = positions[choice[atom_mask]] if len(positions) else 0.0
        n_cont = int((~atom_mask).sum())
        if n_cont:
            out[~atom_mask] = law._tab_inverse_cdf(gen.random(n_cont))
    else:
        out = np.zeros(m)
        if law.theta < 1.0:
            is_zero = gen.random(m) < law.theta
            n_pos = int((~is_zero).sum())
            if n_pos:
                out[~is_zero] = sample_gamma(law.alpha, 1.0, rng, size=n_pos)
        # theta == 1: all zeros, nothing to draw

    if scalar:
        return float(out[0])
    return out.reshape(size)
