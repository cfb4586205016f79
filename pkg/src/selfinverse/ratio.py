"""Distribution of Z = X / Y from a joint law.

* exact rational pmf for finite discrete tables,
* quadrature of  f_Z(z) = int_0^inf y f(yz, y) dy - int_-inf^0 y f(yz, y) dy
  for joints with a density (exact piecewise-polynomial integration for
  region-uniform joints),
* reciprocal transforms and the two-term mixture cdf of Z and 1/Z,
* sampled ratios.

A ratio with numerator zero is 0 (the usual convention g(x, y) = 0 when
xy = 0); an exactly-zero drawn denominator is an error.
"""
from __future__ import annotations

import functools
import math
from fractions import Fraction

import numpy as np

from . import catalog as C
from .errors import CapabilityError, ZeroDenominatorError
from .quadrature import integrate

__all__ = [
    "ratio_density", "ratio_density_with_error", "ratio_pmf", "reciprocal_pmf",
    "reciprocal_density", "reciprocal_cdf", "mixture_cdf",
    "ratio_sample", "swapped_ratio_sample", "ratios_from_pairs",
]

TOL_MIN, TOL_MAX = 1e-12, 1e-2


def _check_tol(tol):
    if not TOL_MIN <= tol <= TOL_MAX:
        raise ValueError(f"tol must lie in [{TOL_MIN}, {TOL_MAX}], got {tol}")


def _region_ratio_density(j: C.RegionUniform, z: Fraction) -> Fraction:
    """Exact f_Z(z) for a piecewise-constant joint.

    On each rectangle the integrand is h*|y| over the y-range where both
    y in (y0, y1) and yz in (x0, x1), so each piece integrates to
    h * (b^2 - a^2) / 2 on y > 0 and h * (a^2 - b^2) / 2 on y < 0.
    """
    total = Fraction(0)
    for r in j.regions:
        lo, hi = r.y0, r.y1
        if z > 0:
            lo, hi = max(lo, r.x0 / z), min(hi, r.x1 / z)
        elif z < 0:
            lo, hi = max(lo, r.x1 / z), min(hi, r.x0 / z)
        elif not (r.x0 < 0 < r.x1):
            continue
        if lo >= hi:
            continue
        # split at y = 0 where |y| has its kink
        if hi > 0:
            a = max(lo, Fraction(0))
            total += r.height * (hi * hi - a * a) / 2
        if lo < 0:
            b = min(hi, Fraction(0))
            total += r.height * (lo * lo - b * b) / 2
    return total


def _has_pointwise_density(joint) -> bool:
    if isinstance(joint, C.ProductJoint):
        return joint.x.has_density and joint.y.has_density
    return isinstance(joint, (C.BivariateNormalJoint, C.RegionUniform))


def ratio_density_with_error(joint: C.JointSpec, z: float, tol: float = 1e-8,
                             swap: bool = False) -> tuple[float, float]:
    """Ratio density and its quadrature error bound.

    With ``swap=True`` the density arguments are exchanged, i.e. the
    integrand is y f(y, yz); this is the density of Y/X.
    """
    _check_tol(tol)
    if not _has_pointwise_density(joint):
        raise CapabilityError(
            f"ratio density needs a joint with a pointwise density; got {joint.kind!r}"
            " (discrete and mixed joints are not supported, use ratio_pmf)")
    if isinstance(joint, C.RegionUniform):
        if swap:
            joint = C.RegionUniform(tuple((r.y0, r.y1, r.x0, r.x1, r.height) for r in joint.regions))
        return float(_region_ratio_density(joint, Fraction(z))), 0.0

    z = float(z)
    if swap:
        def dens(a, b):
            return C.joint_density(joint, b, a)
    else:
        dens = functools.partial(C.joint_density, joint)

    if abs(z) <= 1.0:
        def f(y):
            return dens(y * z, y)
    else:
        # for large |z| the mass sits near y ~ 1/|z|; substitute x = yz so the
        # integrand keeps unit scale:  int |y| f(yz, y) dy = int |x| f(x, x/z) dx / z^2
        zz = z * z

        def f(x):
            return dens(x, x / z) / zz

    # substitute y -> -y on the negative half-line so both pieces run over
    # (0, inf); each gets half of the tolerance budget
    pos = integrate(lambda y: y * np.asarray(f(y)), 0.0, math.inf, tol / 2)
    neg = integrate(lambda y: y * np.asarray(f(-y)), 0.0, math.inf, tol / 2)
    if abs(z) > 1.0 and z < 0:
        # x = yz flips the half-lines; the sum of both pieces is unchanged
        pos, neg = neg, pos
    return pos.value + neg.value, pos.error + neg.error


def ratio_density(joint: C.JointSpec, z: float, tol: float = 1e-8) -> float:
    """Density of X/Y at ``z``.

    Raises :class:`~selfinverse.errors.QuadratureError` (carrying the
    achieved bound) if adaptive refinement cannot reach ``tol``.
    """
    return ratio_density_with_error(joint, z, tol)[0]


def ratio_pmf(joint: C.DiscreteTable) -> dict:
    """Exact pmf of X/Y as ``{Fraction: Fraction}`` with reduced keys."""
    if not isinstance(joint, C.DiscreteTable):
        raise CapabilityError(f"ratio_pmf needs a discrete table, got {joint.kind!r}")
    out: dict = {}
    for x, y, p in joint.cells():
        if p == 0:
            continue
        if y == 0:
            raise ZeroDenominatorError(f"support cell (x={x}, y=0) has positive mass {p}")
        q = Fraction(x) / Fraction(y)
        out[q] = out.get(q, Fraction(0)) + p
    return out


def reciprocal_pmf(pmf: dict) -> dict:
    """pmf of 1/Z from the pmf of Z (key 0 stays 0)."""
    out: dict = {}
    for q, p in pmf.items():
        k = Fraction(0) if q == 0 else 1 / Fraction(q)
        out[k] = out.get(k, Fraction(0)) + p
    return out


def reciprocal_density(d: C.DistSpec, z):
    """Density of 1/Z: f(1/z) / z**2, with value 0 at z = 0."""
    za = np.asarray(z, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        inv = np.where(za != 0, 1.0 / np.where(za != 0, za, 1.0), 0.0)
        v = np.where(za != 0, np.asarray(C.density(d, inv)) * inv * inv, 0.0)
    return float(v) if np.ndim(z) == 0 else v


def reciprocal_cdf(d: C.DistSpec, z):
    """Pr[1/Z <= z].

    1/x is decreasing on each half-line, so with F(a-) = Pr[Z < a]:

    * z > 0:  {1/Z <= z} = {Z < 0} u {Z >= 1/z}   ->  F(0-) + 1 - F(1/z -)
    * z = 0:  {1/Z <= 0} = {Z < 0}                 ->  F(0-)
    * z < 0:  {1/Z <= z} = {1/z <= Z < 0}          ->  F(0-) - F(1/z -)
    """
    za = np.asarray(z, dtype=float)
    neg_mass = float(C.cdf_left(d, 0.0))
    with np.errstate(divide="ignore"):
        inv = np.where(za != 0, 1.0 / np.where(za != 0, za, 1.0), 0.0)
    f_inv = np.asarray(C.cdf_left(d, inv))
    v = np.where(za > 0, neg_mass + 1.0 - f_inv,
                 np.where(za < 0, neg_mass - f_inv, neg_mass))
    v = np.clip(v, 0.0, 1.0)
    return float(v) if np.ndim(z) == 0 else v


def mixture_cdf(d: C.DistSpec, z):
    """cdf of the equal mixture of Z and 1/Z: (Pr[Z <= z] + Pr[1/Z <= z]) / 2."""
    v = 0.5 * np.asarray(C.cdf(d, z)) + 0.5 * np.asarray(reciprocal_cdf(d, z))
    return float(v) if np.ndim(z) == 0 else v


def ratios_from_pairs(pairs: C.PairSample, swapped: bool = False) -> C.Sample:
    """Componentwise X/Y (or Y/X) of a pair sample."""
    num, den = (pairs.y, pairs.x) if swapped else (pairs.x, pairs.y)
    zero = np.flatnonzero(den == 0)
    if zero.size:
        raise ZeroDenominatorError(
            f"exact zero denominator at draw {int(zero[0])} "
            f"(stream {pairs.key}, start counter {pairs.counter}, spec {pairs.spec_text!r})")
    text = f"{'Y/X' if swapped else 'X/Y'} of {pairs.spec_text}"
    return C.Sample(num / den, pairs.key, pairs.counter, text)


def ratio_sample(joint: C.JointSpec, stream, n: int) -> C.Sample:
    """Draw ``n`` pairs and return X/Y."""
    return ratios_from_pairs(C.sample_joint(joint, stream, n))


def swapped_ratio_sample(joint: C.JointSpec, stream, n: int) -> C.Sample:
    """Draw ``n`` pairs and return Y/X (same draws as :func:`ratio_sample`)."""
    return ratios_from_pairs(C.sample_joint(joint, stream, n), swapped=True)
