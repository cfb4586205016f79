"""Exchangeable pairs whose ratio has a prescribed law.

For Z and W independent and I a fair coin independent of both, the pair

    (X, Y) = (W Z^I, W Z^(1-I)) = (W [(1-I) + I Z], W [I + (1-I) Z])

is exchangeable and X/Y = Z^(2I-1), whose law is the equal mixture of the
laws of Z and 1/Z.  When Z is self-inverse this is the law of Z itself.
"""
from __future__ import annotations

import numpy as np

from . import catalog as C
from .errors import AdmissionError
from .rng import RandomStream

__all__ = ["ConstructedPair", "build_pair", "sample_constructed", "exchangeability_certificate"]

ConstructedPair = C.ConstructedPair

# labels of the per-call child streams, spawned in this order
_Z, _W, _I = 0, 1, 2


def build_pair(z_dist: C.DistSpec, w_dist: C.DistSpec | None = None) -> C.ConstructedPair:
    """Admit ``z_dist`` and ``w_dist`` (default: the constant 1) into a constructed pair."""
    if w_dist is None:
        w_dist = C.constant(1.0)
    for role, d in (("z", z_dist), ("w", w_dist)):
        if not isinstance(d, C.DistSpec):
            raise AdmissionError(f"{role} must be a scalar distribution, got {d!r}")
        if not d.has_sampler:
            raise AdmissionError(f"{role}={d} cannot be sampled")
        if not d.ratio_eligible:
            raise AdmissionError(f"{role}={d} has positive mass at 0")
    return C.ConstructedPair(z_dist, w_dist)


def sample_constructed(pair: C.ConstructedPair, stream: RandomStream, n: int,
                       form: str = "power") -> C.PairSample:
    """Draw ``n`` pairs (X, Y).

    Z, W and I come from three child streams spawned in the order (Z, W, I),
    so the Z and I draws do not depend on which law W has.

    ``form`` picks the algebraic form used to assemble the pair:
    ``"power"`` for (W Z^I, W Z^(1-I)), ``"linear"`` for
    (W [(1-I) + I Z], W [I + (1-I) Z]).  Both give identical draws.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be >= 1")
    key, start = stream.key, stream.counter
    zs = stream.spawn(_Z)
    ws = stream.spawn(_W)
    is_ = stream.spawn(_I)
    z = C.sample(pair.z, zs, n).values
    w = C.sample(pair.w, ws, n).values
    i = is_.bernoulli_half(n)
    if form == "power":
        x = w * np.where(i == 1, z, 1.0)
        y = w * np.where(i == 1, 1.0, z)
    elif form == "linear":
        x = w * ((1 - i) + i * z)
        y = w * (i + (1 - i) * z)
    else:
        raise ValueError(f"unknown form {form!r}")
    return C.PairSample(x, y, key, start, str(pair))


def exchangeability_certificate(pair: C.JointSpec, stream: RandomStream, n: int = 100_000,
                                grid=6, alpha: float = 0.01):
    """Check (X, Y) =d (Y, X) for a joint.

    Discrete tables are checked exactly; every other joint is sampled and
    run through the Bowker symmetry test on ``grid``.
    """
    from .inference import exchangeability_exact, exchangeability_test

    if isinstance(pair, C.DiscreteTable):
        return exchangeability_exact(pair, alpha=alpha)
    pairs = C.sample_joint(pair, stream, n)
    return exchangeability_test(pairs, grid=grid, alpha=alpha)
