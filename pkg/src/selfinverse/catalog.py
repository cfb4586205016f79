"""Scalar and bivariate distributions: specs, densities, cdfs and samplers.

Scalar laws are :class:`DistSpec` values; bivariate laws are subclasses of
:class:`JointSpec`.  Both are immutable and can be shared freely; every
sampling function takes an exclusively owned :class:`~selfinverse.rng.RandomStream`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

import numpy as np
from scipy import special

from .errors import CapabilityError, SpecDomainError, ZeroDenominatorError
from .rng import RandomStream, StreamKey

__all__ = [
    "DistSpec", "JointSpec", "ProductJoint", "BivariateNormalJoint",
    "DiscreteTable", "RegionUniform", "Rectangle", "ConstructedPair",
    "Sample", "PairSample",
    "standard_cauchy", "cauchy", "corr_normal_ratio", "f_ratio", "laha",
    "log_uniform", "log_rademacher", "exponential", "constant", "normal",
    "PAPER_TABLE", "PAPER_REGIONS",
    "density", "cdf", "cdf_left", "sample", "sample_joint",
    "joint_density", "joint_pmf_table", "LAHA_ENVELOPE_M",
]


class _KindInfo(NamedTuple):
    params: tuple
    has_density: bool
    has_cdf: bool = True
    has_sampler: bool = True


_KINDS = {
    "standard_cauchy": _KindInfo((), True),
    "cauchy": _KindInfo(("mu", "sigma"), True),
    "corr_normal_ratio": _KindInfo(("rho",), True),
    "f_ratio": _KindInfo(("n",), True),
    "laha": _KindInfo((), True),
    "log_uniform": _KindInfo((), True),
    "log_rademacher": _KindInfo((), False),
    "exponential": _KindInfo(("rate",), True),
    "constant": _KindInfo(("c",), False),
    "normal": _KindInfo(("mu", "sigma"), True),
}


@dataclass(frozen=True)
class DistSpec:
    """A validated scalar distribution from the catalog.

    Parameters are stored positionally in ``params`` in the order given by
    the kind (e.g. ``("mu", "sigma")`` for ``cauchy``) and are readable as
    attributes: ``spec.rho``, ``spec.n``.
    """

    kind: str
    params: tuple = ()

    def __post_init__(self):
        info = _KINDS.get(self.kind)
        if info is None:
            raise ValueError(f"unknown distribution kind {self.kind!r}")
        if len(self.params) != len(info.params):
            raise ValueError(f"{self.kind} takes parameters {info.params}, got {self.params}")
        p = dict(zip(info.params, self.params))
        for name, v in p.items():
            if not math.isfinite(v):
                raise SpecDomainError(name, v, "finite reals")
        if "sigma" in p and not p["sigma"] > 0:
            raise SpecDomainError("sigma", p["sigma"], "(0, inf)")
        if "rate" in p and not p["rate"] > 0:
            raise SpecDomainError("rate", p["rate"], "(0, inf)")
        if "rho" in p and not -1 < p["rho"] < 1:
            raise SpecDomainError("rho", p["rho"], "(-1, 1)")
        if "n" in p and not (float(p["n"]).is_integer() and p["n"] >= 1):
            raise SpecDomainError("n", p["n"], "positive integers")

    def __getattr__(self, name):
        info = _KINDS.get(object.__getattribute__(self, "kind"))
        if info is not None and name in info.params:
            return self.params[info.params.index(name)]
        raise AttributeError(name)

    @property
    def has_density(self) -> bool:
        return _KINDS[self.kind].has_density

    @property
    def has_cdf(self) -> bool:
        return _KINDS[self.kind].has_cdf

    @property
    def has_sampler(self) -> bool:
        return _KINDS[self.kind].has_sampler

    @property
    def ratio_eligible(self) -> bool:
        """True when Pr[X = 0] = 0, so the law may sit in a ratio."""
        return not (self.kind == "constant" and self.c == 0)

    @property
    def positive(self) -> bool:
        """True when the support lies in (0, inf)."""
        if self.kind in ("f_ratio", "log_uniform", "log_rademacher", "exponential"):
            return True
        return self.kind == "constant" and self.c > 0

    @property
    def self_inverse(self) -> bool:
        """Ground-truth label: does Z have the same law as 1/Z?

        Cauchy(mu, sigma) inverts to Cauchy(mu/r, sigma/r) with
        r = mu**2 + sigma**2, so it is self-inverse exactly when r = 1
        (this covers the correlated-normal ratio, mu = rho and
        sigma = sqrt(1 - rho**2)).  A point mass c is self-inverse iff c = +-1.
        """
        k = self.kind
        if k in ("standard_cauchy", "corr_normal_ratio", "f_ratio",
                 "log_uniform", "log_rademacher"):
            return True
        if k == "cauchy":
            return math.isclose(self.mu ** 2 + self.sigma ** 2, 1.0, rel_tol=0, abs_tol=1e-12)
        if k == "constant":
            return abs(self.c) == 1
        return False

    def __str__(self):
        from .grammar import to_text
        return to_text(self)


def _num(v):
    v = float(v)
    return v


def standard_cauchy() -> DistSpec:
    return DistSpec("standard_cauchy")


def cauchy(mu: float = 0.0, sigma: float = 1.0) -> DistSpec:
    return DistSpec("cauchy", (_num(mu), _num(sigma)))


def corr_normal_ratio(rho: float) -> DistSpec:
    return DistSpec("corr_normal_ratio", (_num(rho),))


def f_ratio(n: int) -> DistSpec:
    if not float(n).is_integer():
        raise SpecDomainError("n", n, "positive integers")
    return DistSpec("f_ratio", (int(n),))


def laha() -> DistSpec:
    return DistSpec("laha")


def log_uniform() -> DistSpec:
    return DistSpec("log_uniform")


def log_rademacher() -> DistSpec:
    return DistSpec("log_rademacher")


def exponential(rate: float = 1.0) -> DistSpec:
    return DistSpec("exponential", (_num(rate),))


def constant(c: float) -> DistSpec:
    return DistSpec("constant", (_num(c),))


def normal(mu: float = 0.0, sigma: float = 1.0) -> DistSpec:
    return DistSpec("normal", (_num(mu), _num(sigma)))


# ---------------------------------------------------------------------------
# Joint specs
# ---------------------------------------------------------------------------

class JointSpec:
    """Base class for bivariate laws of a pair (X, Y)."""

    kind: str = ""

    def __str__(self):
        from .grammar import to_text
        return to_text(self)


@dataclass(frozen=True)
class ProductJoint(JointSpec):
    """X and Y independent with the given marginals."""

    x: DistSpec
    y: DistSpec
    kind = "product"


@dataclass(frozen=True)
class BivariateNormalJoint(JointSpec):
    """Standard bivariate normal with unit variances and correlation ``rho``."""

    rho: float
    kind = "bivariate_normal"

    def __post_init__(self):
        if not -1 < self.rho < 1:
            raise SpecDomainError("rho", self.rho, "(-1, 1)")


@dataclass(frozen=True)
class DiscreteTable(JointSpec):
    """Finite joint pmf with exact rational probabilities.

    ``probabilities[i][j]`` is Pr[X = support_x[i], Y = support_y[j]].
    """

    support_x: tuple
    support_y: tuple
    probabilities: tuple
    name: str | None = None
    kind = "discrete_table"

    def __post_init__(self):
        sx = tuple(Fraction(v) for v in self.support_x)
        sy = tuple(Fraction(v) for v in self.support_y)
        probs = tuple(tuple(Fraction(p) for p in row) for row in self.probabilities)
        object.__setattr__(self, "support_x", sx)
        object.__setattr__(self, "support_y", sy)
        object.__setattr__(self, "probabilities", probs)
        if len(probs) != len(sx) or any(len(r) != len(sy) for r in probs):
            raise ValueError("probability table shape does not match supports")
        if len(set(sx)) != len(sx) or len(set(sy)) != len(sy):
            raise ValueError("support values must be distinct")
        if any(p < 0 for r in probs for p in r):
            raise SpecDomainError("probabilities", "negative entry", "[0, 1]")
        total = sum(p for r in probs for p in r)
        if total != 1:
            raise SpecDomainError("probabilities", f"sum {total}", "sum exactly 1")

    def cells(self):
        """Yield ``(x, y, p)`` for every cell in row-major order."""
        for i, x in enumerate(self.support_x):
            for j, y in enumerate(self.support_y):
                yield x, y, self.probabilities[i][j]

    def marginal_x(self) -> dict:
        return {x: sum(row) for x, row in zip(self.support_x, self.probabilities)}

    def marginal_y(self) -> dict:
        return {y: sum(r[j] for r in self.probabilities) for j, y in enumerate(self.support_y)}


class Rectangle(NamedTuple):
    """Open rectangle (x0, x1) x (y0, y1) carrying constant density ``height``."""

    x0: Fraction
    x1: Fraction
    y0: Fraction
    y1: Fraction
    height: Fraction

    @property
    def mass(self) -> Fraction:
        return (self.x1 - self.x0) * (self.y1 - self.y0) * self.height


@dataclass(frozen=True)
class RegionUniform(JointSpec):
    """Piecewise-constant joint density on disjoint rectangles."""

    regions: tuple
    name: str | None = None
    kind = "region_uniform"

    def __post_init__(self):
        rects = tuple(Rectangle(*(Fraction(v) for v in r)) for r in self.regions)
        object.__setattr__(self, "regions", rects)
        for r in rects:
            if not (r.x0 < r.x1 and r.y0 < r.y1 and r.height > 0):
                raise SpecDomainError("region", r, "nonempty rectangle with positive density")
        for i, a in enumerate(rects):
            for b in rects[i + 1:]:
                if a.x0 < b.x1 and b.x0 < a.x1 and a.y0 < b.y1 and b.y0 < a.y1:
                    raise SpecDomainError("regions", (a, b), "pairwise disjoint rectangles")
        total = sum(r.mass for r in rects)
        if total != 1:
            raise SpecDomainError("regions", f"total mass {total}", "total mass exactly 1")


@dataclass(frozen=True)
class ConstructedPair(JointSpec):
    """(X, Y) = (W Z^I, W Z^(1-I)) with Z, W, I independent and I a fair coin.

    Built and admitted by :func:`selfinverse.construction.build_pair`.
    """

    z: DistSpec
    w: DistSpec = field(default_factory=lambda: constant(1.0))
    kind = "constructed"


_F = Fraction
PAPER_TABLE = DiscreteTable(
    support_x=(1, 2, 3),
    support_y=(1, 2, 3),
    probabilities=(
        (_F(2, 36), _F(9, 36), _F(1, 36)),
        (_F(1, 36), _F(2, 36), _F(9, 36)),
        (_F(9, 36), _F(1, 36), _F(2, 36)),
    ),
    name="paper",
)

PAPER_REGIONS = RegionUniform(
    regions=(
        (0, 1, 1, 2, _F(1, 3)),
        (1, 2, 2, 3, _F(1, 3)),
        (2, 3, 0, 1, _F(1, 3)),
    ),
    name="paper",
)


# ---------------------------------------------------------------------------
# Samples
# ---------------------------------------------------------------------------

@dataclass
class Sample:
    """Draws of a scalar law with provenance (stream key, start counter, spec text)."""

    values: np.ndarray
    key: StreamKey | None = None
    counter: int = 0
    spec_text: str = ""

    def __len__(self):
        return len(self.values)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)

    def provenance(self) -> dict:
        return {
            "spec": self.spec_text,
            "n": len(self.values),
            "stream": None if self.key is None else self.key.as_dict(),
            "counter": self.counter,
        }


@dataclass
class PairSample:
    """Draws of a bivariate law."""

    x: np.ndarray
    y: np.ndarray
    key: StreamKey | None = None
    counter: int = 0
    spec_text: str = ""

    def __len__(self):
        return len(self.x)

    def swapped(self) -> "PairSample":
        return PairSample(self.y, self.x, self.key, self.counter, self.spec_text)

    def provenance(self) -> dict:
        return {
            "spec": self.spec_text,
            "n": len(self.x),
            "stream": None if self.key is None else self.key.as_dict(),
            "counter": self.counter,
        }


# ---------------------------------------------------------------------------
# Densities and cdfs
# ---------------------------------------------------------------------------

_INV_PI = 1.0 / math.pi
_SQRT2 = math.sqrt(2.0)
_E = math.e


def _out(x, v):
    return float(v) if np.ndim(x) == 0 else v


def density(d: DistSpec, x):
    """Density of ``d`` at ``x`` (scalar or array)."""
    if not d.has_density:
        raise CapabilityError(f"{d.kind} has no density")
    xa = np.asarray(x, dtype=float)
    k = d.kind
    if k in ("standard_cauchy", "cauchy"):
        mu, s = (0.0, 1.0) if k == "standard_cauchy" else (d.mu, d.sigma)
        t = (xa - mu) / s
        v = _INV_PI / (s * (1.0 + t * t))
    elif k == "corr_normal_ratio":
        r = d.rho
        q = 1.0 - r * r
        v = _INV_PI * math.sqrt(q) / (q + (xa - r) ** 2)
    elif k == "f_ratio":
        h = 0.5 * d.n
        with np.errstate(divide="ignore", invalid="ignore"):
            logv = (h - 1.0) * np.log(xa) - d.n * np.log1p(xa) - special.betaln(h, h)
            v = np.where(xa > 0, np.exp(logv), 0.0)
    elif k == "laha":
        v = _SQRT2 * _INV_PI / (1.0 + xa ** 4)
    elif k == "log_uniform":
        with np.errstate(divide="ignore"):
            v = np.where((xa >= 1 / _E) & (xa <= _E), 0.5 / xa, 0.0)
    elif k == "exponential":
        v = np.where(xa >= 0, d.rate * np.exp(-d.rate * np.maximum(xa, 0.0)), 0.0)
    elif k == "normal":
        t = (xa - d.mu) / d.sigma
        v = np.exp(-0.5 * t * t) / (d.sigma * math.sqrt(2 * math.pi))
    else:  # pragma: no cover - guarded by has_density
        raise CapabilityError(f"{k} has no density")
    return _out(x, v)


def _laha_cdf(x):
    # antiderivative of 1/(1+x^4), normalized by sqrt(2)/pi and anchored at cdf(0) = 1/2
    s = _SQRT2
    x = np.asarray(x, dtype=float)
    big = np.abs(x) > 1.0
    # (x^2 + s x + 1)/(x^2 - s x + 1), written in t = 1/x when |x| > 1 to avoid overflow
    t = np.where(big, 1.0 / np.where(big, x, 1.0), x)
    ratio = np.where(big, (1.0 + s * t + t * t) / (1.0 - s * t + t * t),
                     (t * t + s * t + 1.0) / (t * t - s * t + 1.0))
    return 0.5 + (np.log(ratio) + 2.0 * np.arctan(s * x + 1.0)
                  + 2.0 * np.arctan(s * x - 1.0)) / (4.0 * math.pi)


def _cdf(d: DistSpec, xa: np.ndarray, left: bool) -> np.ndarray:
    k = d.kind
    if k in ("standard_cauchy", "cauchy"):
        mu, s = (0.0, 1.0) if k == "standard_cauchy" else (d.mu, d.sigma)
        return 0.5 + np.arctan((xa - mu) / s) * _INV_PI
    if k == "corr_normal_ratio":
        r = d.rho
        return 0.5 + np.arctan((xa - r) / math.sqrt(1.0 - r * r)) * _INV_PI
    if k == "f_ratio":
        h = 0.5 * d.n
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(xa > 0, special.betainc(h, h, np.where(xa > 0, xa / (1.0 + xa), 0.0)), 0.0)
    if k == "laha":
        return _laha_cdf(xa)
    if k == "log_uniform":
        with np.errstate(divide="ignore", invalid="ignore"):
            v = 0.5 * (np.log(np.where(xa > 0, xa, 1.0)) + 1.0)
        return np.where(xa <= 0, 0.0, np.clip(v, 0.0, 1.0))
    if k == "log_rademacher":
        lo, hi = 1 / _E, _E
        if left:
            return np.where(xa <= lo, 0.0, np.where(xa <= hi, 0.5, 1.0))
        return np.where(xa < lo, 0.0, np.where(xa < hi, 0.5, 1.0))
    if k == "exponential":
        return np.where(xa > 0, -np.expm1(-d.rate * np.maximum(xa, 0.0)), 0.0)
    if k == "constant":
        return (xa > d.c).astype(float) if left else (xa >= d.c).astype(float)
    if k == "normal":
        return special.ndtr((xa - d.mu) / d.sigma)
    raise CapabilityError(f"{k} has no cdf")  # pragma: no cover


def cdf(d: DistSpec, x):
    """Pr[X <= x]."""
    if not d.has_cdf:
        raise CapabilityError(f"{d.kind} has no cdf")
    return _out(x, _cdf(d, np.asarray(x, dtype=float), left=False))


def cdf_left(d: DistSpec, x):
    """Pr[X < x]; differs from :func:`cdf` only at atoms."""
    if not d.has_cdf:
        raise CapabilityError(f"{d.kind} has no cdf")
    return _out(x, _cdf(d, np.asarray(x, dtype=float), left=True))


# ---------------------------------------------------------------------------
# Samplers
# ---------------------------------------------------------------------------

# Laha envelope: the standard Cauchy g(x) = 1/(pi (1+x^2)).  With s = x^2 the
# ratio f/g = sqrt(2) (1+s)/(1+s^2); its derivative vanishes where
# 1 - 2s - s^2 = 0, i.e. s = sqrt(2) - 1, and there 1 + s^2 = 2 (2 - sqrt(2)),
# so sup f/g = sqrt(2) * sqrt(2) / (2 (2 - sqrt(2))) = (2 + sqrt(2)) / 2.
LAHA_ENVELOPE_M = (2.0 + _SQRT2) / 2.0


def _laha_draws(stream: RandomStream, n: int) -> np.ndarray:
    out = np.empty(n)
    filled = 0
    while filled < n:
        # 1/M ~ 0.586 acceptance; oversize the batch so one round usually suffices
        m = max(16, int(1.8 * (n - filled)) + 16)
        cand = np.tan(math.pi * (stream.uniform01(m) - 0.5))
        u = stream.uniform01(m)
        ratio = _SQRT2 * (1.0 + cand * cand) / (1.0 + cand ** 4) / LAHA_ENVELOPE_M
        acc = cand[u < ratio]
        take = min(len(acc), n - filled)
        out[filled:filled + take] = acc[:take]
        filled += take
    return out


def _draw(d: DistSpec, stream: RandomStream, n: int) -> np.ndarray:
    k = d.kind
    if k in ("standard_cauchy", "cauchy"):
        mu, s = (0.0, 1.0) if k == "standard_cauchy" else (d.mu, d.sigma)
        return mu + s * np.tan(math.pi * (stream.uniform01(n) - 0.5))
    if k == "corr_normal_ratio":
        # X/Y for unit-variance normals with correlation rho (Cholesky factor)
        r = d.rho
        z1 = stream.normal01(n)
        z2 = stream.normal01(n)
        y = r * z1 + math.sqrt(1.0 - r * r) * z2
        if np.any(y == 0):
            raise ZeroDenominatorError(f"zero denominator drawn from {stream!r}")
        return z1 / y
    if k == "f_ratio":
        # ratio of two iid chi-square(n), each a sum of n squared normals
        m = d.n
        num = (stream.normal01(n * m).reshape(n, m) ** 2).sum(axis=1)
        den = (stream.normal01(n * m).reshape(n, m) ** 2).sum(axis=1)
        if np.any(den == 0):
            raise ZeroDenominatorError(f"zero denominator drawn from {stream!r}")
        return num / den
    if k == "laha":
        return _laha_draws(stream, n)
    if k == "log_uniform":
        return np.exp(2.0 * stream.uniform01(n) - 1.0)
    if k == "log_rademacher":
        return np.exp(2.0 * stream.bernoulli_half(n) - 1.0)
    if k == "exponential":
        return -np.log1p(-stream.uniform01(n)) / d.rate
    if k == "constant":
        return np.full(n, float(d.c))
    if k == "normal":
        return d.mu + d.sigma * stream.normal01(n)
    raise CapabilityError(f"{k} has no sampler")  # pragma: no cover


def sample(d: DistSpec, stream: RandomStream, n: int) -> Sample:
    """Draw ``n`` iid values of ``d``."""
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    if not d.has_sampler:
        raise CapabilityError(f"{d.kind} has no sampler")
    key, start = stream.key, stream.counter
    return Sample(_draw(d, stream, n), key, start, str(d))


def sample_joint(j: JointSpec, stream: RandomStream, n: int) -> PairSample:
    """Draw ``n`` iid pairs (X, Y) from ``j``."""
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    key, start = stream.key, stream.counter
    if isinstance(j, ProductJoint):
        x = _draw(j.x, stream, n)
        y = _draw(j.y, stream, n)
    elif isinstance(j, BivariateNormalJoint):
        x = stream.normal01(n)
        y = j.rho * x + math.sqrt(1.0 - j.rho ** 2) * stream.normal01(n)
    elif isinstance(j, DiscreteTable):
        # inverse cdf over the cells in row-major order
        cells = list(j.cells())
        cum = np.cumsum([float(p) for _, _, p in cells])
        idx = np.searchsorted(cum, stream.uniform01(n), side="right")
        idx = np.minimum(idx, len(cells) - 1)
        xs = np.array([float(c[0]) for c in cells])
        ys = np.array([float(c[1]) for c in cells])
        x, y = xs[idx], ys[idx]
    elif isinstance(j, RegionUniform):
        # Pick a rectangle by mass, then place the point uniformly in it.  For
        # the three equal-mass unit squares of PAPER_REGIONS this is exactly
        # (X, Y) = (I + U1, J + U2) with I uniform on {0,1,2}, J = I+1 for
        # I < 2 and J = 0 for I = 2.
        rects = j.regions
        cum = np.cumsum([float(r.mass) for r in rects])
        idx = np.minimum(np.searchsorted(cum, stream.uniform01(n), side="right"), len(rects) - 1)
        u1 = stream.uniform01(n)
        u2 = stream.uniform01(n)
        x0 = np.array([float(r.x0) for r in rects])[idx]
        x1 = np.array([float(r.x1) for r in rects])[idx]
        y0 = np.array([float(r.y0) for r in rects])[idx]
        y1 = np.array([float(r.y1) for r in rects])[idx]
        x = x0 + (x1 - x0) * u1
        y = y0 + (y1 - y0) * u2
    elif isinstance(j, ConstructedPair):
        from .construction import sample_constructed
        return sample_constructed(j, stream, n)
    else:
        raise CapabilityError(f"cannot sample joint kind {j.kind!r}")
    return PairSample(np.asarray(x, float), np.asarray(y, float), key, start, str(j))


def joint_density(j: JointSpec, x, y):
    """Joint density f(x, y) for continuous joints."""
    xa = np.asarray(x, dtype=float)
    ya = np.asarray(y, dtype=float)
    if isinstance(j, ProductJoint):
        if not (j.x.has_density and j.y.has_density):
            raise CapabilityError("product joint needs both marginals to have densities")
        v = np.asarray(density(j.x, xa)) * np.asarray(density(j.y, ya))
    elif isinstance(j, BivariateNormalJoint):
        q = 1.0 - j.rho ** 2
        v = np.exp(-(xa * xa - 2 * j.rho * xa * ya + ya * ya) / (2 * q)) / (2 * math.pi * math.sqrt(q))
    elif isinstance(j, RegionUniform):
        v = np.zeros(np.broadcast(xa, ya).shape)
        for r in j.regions:
            inside = (xa > r.x0) & (xa < r.x1) & (ya > r.y0) & (ya < r.y1)
            v = v + np.where(inside, float(r.height), 0.0)
    elif isinstance(j, DiscreteTable):
        raise CapabilityError("discrete tables have a pmf, not a density; use joint_pmf_table")
    else:
        raise CapabilityError(f"no closed-form density for joint kind {j.kind!r}")
    return float(v) if np.ndim(v) == 0 else v


def region_density_exact(j: RegionUniform, x, y) -> Fraction:
    """Exact rational density of a region-uniform joint at a rational point."""
    x, y = Fraction(x), Fraction(y)
    return sum((r.height for r in j.regions if r.x0 < x < r.x1 and r.y0 < y < r.y1), Fraction(0))


def joint_pmf_table(j: JointSpec) -> dict:
    """Exact pmf ``{(x, y): Fraction}`` of a discrete table."""
    if not isinstance(j, DiscreteTable):
        raise CapabilityError(f"joint kind {j.kind!r} has no pmf table")
    return {(x, y): p for x, y, p in j.cells()}
