"""Tests of self-inverseness, exchangeability and iid ratio decomposability.

KS p-values use the asymptotic Kolmogorov distribution with Stephens'
small-sample correction::

    p = Q_KS((sqrt(m) + 0.12 + 0.11 / sqrt(m)) * D)

where ``Q_KS(x) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 x^2)`` is the Kolmogorov
survival function and ``m = n`` (one sample) or ``m = n1 n2 / (n1 + n2)``
(two samples).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy import special, stats

from . import catalog as C
from .errors import CapabilityError, SampleSizeError, SelfInverseError
from .ratio import ratio_sample

__all__ = [
    "TestReport", "CfCurve",
    "ks_two_sample", "ks_one_sample", "self_inverse_test", "log_symmetry_test",
    "exchangeability_test", "exchangeability_exact",
    "analytic_log_cf", "empirical_cf", "log_abs", "iid_decomposability_obstruction",
    "null_rejection_rate",
]

MIN_KS = 25
MIN_CF = 100


@dataclass
class TestReport:
    """Outcome of a test.

    ``p_value`` is None for exact verdicts; ``decision`` is ``"reject"`` iff
    ``p_value < alpha`` or an exact refutation was found.
    """

    __test__ = False  # keep pytest from collecting this class

    test: str
    statistic: float
    p_value: float | None
    alpha: float
    decision: str
    n: int
    seed: int | None = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.decision == "pass"

    def to_dict(self) -> dict:
        return {
            "test": self.test,
            "statistic": self.statistic,
            "p_value": self.p_value,
            "alpha": self.alpha,
            "decision": self.decision,
            "n": self.n,
            "seed": self.seed,
            "diagnostics": _jsonable(self.diagnostics),
        }

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)


def _jsonable(v):
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else str(v)
    if isinstance(v, (np.integer,)):
        return int(v)
    if isinstance(v, (np.floating,)):
        return float(v)
    if isinstance(v, np.bool_):
        return bool(v)
    if isinstance(v, complex):
        return [v.real, v.imag]
    return v


def _decide(p, alpha):
    return "reject" if p < alpha else "pass"


def _values(a) -> np.ndarray:
    return np.asarray(a.values if isinstance(a, C.Sample) else a, dtype=float)


def _seed_of(*objs):
    for o in objs:
        key = getattr(o, "key", None)
        if key is not None:
            return key.seed
    return None


def _kolmogorov_p(d, m):
    sm = math.sqrt(m)
    return float(min(1.0, max(0.0, special.kolmogorov((sm + 0.12 + 0.11 / sm) * d))))


def ks_two_sample(a, b, alpha: float = 0.01) -> TestReport:
    """Two-sample Kolmogorov-Smirnov test of equal laws."""
    x = np.sort(_values(a))
    y = np.sort(_values(b))
    n1, n2 = len(x), len(y)
    if min(n1, n2) < MIN_KS:
        raise SampleSizeError(f"KS needs at least {MIN_KS} values per sample, got {n1} and {n2}")
    grid = np.concatenate([x, y])
    d = float(np.max(np.abs(np.searchsorted(x, grid, side="right") / n1
                            - np.searchsorted(y, grid, side="right") / n2)))
    p = _kolmogorov_p(d, n1 * n2 / (n1 + n2))
    return TestReport("ks-two-sample", d, p, alpha, _decide(p, alpha), n1 + n2,
                      _seed_of(a, b), {"n1": n1, "n2": n2})


def ks_one_sample(a, cdf, alpha: float = 0.01) -> TestReport:
    """One-sample KS test against a reference cdf (callable or DistSpec)."""
    if isinstance(cdf, C.DistSpec):
        ref = cdf
        cdf = lambda v: C.cdf(ref, v)  # noqa: E731
    x = np.sort(_values(a))
    n = len(x)
    if n < MIN_KS:
        raise SampleSizeError(f"KS needs at least {MIN_KS} values, got {n}")
    f = np.asarray(cdf(x), dtype=float)
    i = np.arange(1, n + 1)
    d = float(max(np.max(i / n - f), np.max(f - (i - 1) / n)))
    p = _kolmogorov_p(d, n)
    return TestReport("ks-one-sample", d, p, alpha, _decide(p, alpha), n, _seed_of(a))


def _two_halves(source, n, stream, what):
    """Two independent draws of size n, or the two halves of a given sample."""
    if isinstance(source, C.DistSpec):
        if stream is None:
            raise ValueError("a stream is required to sample a distribution")
        return C.sample(source, stream, n).values, C.sample(source, stream, n).values, stream.key.seed
    if isinstance(source, C.JointSpec):
        if stream is None:
            raise ValueError("a stream is required to sample a joint")
        return (ratio_sample(source, stream, n).values,
                ratio_sample(source, stream, n).values, stream.key.seed)
    v = _values(source)
    h = len(v) // 2
    if h < MIN_KS:
        raise SampleSizeError(f"{what} needs at least {2 * MIN_KS} values, got {len(v)}")
    return v[:h], v[h:2 * h], _seed_of(source)


def self_inverse_test(source, n: int = 20_000, alpha: float = 0.01, theta: float = 1.0,
                      stream=None) -> TestReport:
    """Test Z =d theta^2 / Z (log-symmetry about theta; theta = 1 is Z =d 1/Z).

    ``source`` is a DistSpec (Z sampled), a JointSpec (Z = X/Y sampled) or a
    sample (split in half).  The first batch of Z is compared with
    theta^2 / Z computed from a second, independent batch, never with its
    own reciprocals.
    """
    if not theta > 0:
        raise ValueError("theta must be positive")
    a, b, seed = _two_halves(source, n, stream, "self_inverse_test")
    if theta != 1 and (np.any(a <= 0) or np.any(b <= 0)):
        raise SelfInverseError("log-symmetry about theta != 1 needs positive values")
    if np.any(b == 0):
        raise SelfInverseError("sample contains 0; its reciprocal is undefined")
    r = ks_two_sample(a, theta * theta / b, alpha)
    r.test = "self-inverse"
    r.seed = seed
    r.diagnostics.update(theta=theta, source=str(source) if not isinstance(
        source, (np.ndarray, list, C.Sample)) else getattr(source, "spec_text", "sample"))
    return r


def log_symmetry_test(source, n: int = 20_000, alpha: float = 0.01, stream=None) -> TestReport:
    """Test that log Z is symmetric about 0 (Z > 0).

    Compares log Z from the first batch with -log Z from an independent
    second batch.
    """
    a, b, seed = _two_halves(source, n, stream, "log_symmetry_test")
    if np.any(a <= 0) or np.any(b <= 0):
        raise SelfInverseError("log-symmetry needs strictly positive values")
    r = ks_two_sample(np.log(a), -np.log(b), alpha)
    r.test = "log-symmetry"
    r.seed = seed
    return r


def _bowker(counts: np.ndarray):
    k = counts.shape[0]
    iu = np.triu_indices(k, 1)
    nij = counts[iu]
    nji = counts.T[iu]
    tot = nij + nji
    used = tot > 0
    stat = float(np.sum((nij[used] - nji[used]) ** 2 / tot[used]))
    return stat, int(used.sum()), tot


def exchangeability_test(pairs: C.PairSample, grid=6, alpha: float = 0.01,
                         min_pair_count: int = 5) -> TestReport:
    """Bowker test of (X, Y) =d (Y, X) on a square binning.

    ``grid`` is either the number of bins k (cut points at equal-probability
    quantiles of the pooled X and Y values) or a sequence of interior cut
    points shared by both axes.  With automatic cuts, k is lowered until
    every off-diagonal cell pair holds at least ``min_pair_count`` counts.
    Pairs with no counts at all carry no information and are left out of
    the degrees of freedom.
    """
    x = np.asarray(pairs.x, float)
    y = np.asarray(pairs.y, float)
    auto = np.ndim(grid) == 0
    k = int(grid) if auto else len(grid) + 1
    if k < 2:
        raise ValueError("grid needs at least 2 bins per axis")
    while True:
        if auto:
            pooled = np.concatenate([x, y])
            cuts = np.quantile(pooled, np.arange(1, k) / k)
        else:
            cuts = np.sort(np.asarray(grid, float))
        ix = np.searchsorted(cuts, x, side="right")
        iy = np.searchsorted(cuts, y, side="right")
        counts = np.zeros((k, k), dtype=np.int64)
        np.add.at(counts, (ix, iy), 1)
        stat, df, tot = _bowker(counts)
        sparse = int(np.sum((tot > 0) & (tot < min_pair_count)))
        if auto and sparse and k > 2:
            k -= 1
            continue
        break
    if np.count_nonzero(counts) <= 1:
        raise SelfInverseError("degenerate grid: all pairs fall in a single cell")
    p = float(stats.chi2.sf(stat, df)) if df > 0 else 1.0
    return TestReport(
        "exchangeability", stat, p, alpha, _decide(p, alpha), len(x), _seed_of(pairs),
        {"k": k, "df": df, "cuts": cuts.tolist(), "sparse_pairs": sparse,
         "nominal_df": k * (k - 1) // 2},
    )


def exchangeability_exact(table: C.DiscreteTable, alpha: float = 0.01) -> TestReport:
    """Exact symmetry check T[x, y] == T[y, x] of a discrete table.

    The first asymmetric cell pair in row-major order is reported as witness.
    """
    pmf = C.joint_pmf_table(table)
    support = sorted(set(table.support_x) | set(table.support_y))
    witness = None
    worst = Fraction(0)
    for i, a in enumerate(support):
        for b in support[i + 1:]:
            pab = pmf.get((a, b), Fraction(0))
            pba = pmf.get((b, a), Fraction(0))
            gap = abs(pab - pba)
            if gap and witness is None:
                witness = {"cells": [[a, b], [b, a]], "probabilities": [pab, pba]}
            worst = max(worst, gap)
    decision = "reject" if witness else "pass"
    diag = {"exact": True, "witness": witness}
    return TestReport("exchangeability-exact", float(worst), None, alpha, decision, 0, None, diag)


# ---------------------------------------------------------------------------
# Characteristic functions of log|Z|
# ---------------------------------------------------------------------------

@dataclass
class CfCurve:
    """Characteristic-function values on an increasing t grid.

    ``band`` is a uniform half-width (0 for analytic curves).  Analytic
    curves keep an ``evaluator`` for refining witnesses between grid points.
    """

    t: np.ndarray
    values: np.ndarray
    band: float = 0.0
    source: str = "analytic"
    n: int | None = None
    evaluator: Callable | None = field(default=None, repr=False, compare=False)


def _sinc(t):
    t = np.asarray(t, float)
    return np.where(t == 0, 1.0, np.sin(t) / np.where(t == 0, 1.0, t)).astype(complex)


def _cos(t):
    return np.cos(np.asarray(t, float)).astype(complex)


_ANALYTIC = {"log_uniform": _sinc, "log_rademacher": _cos}


def analytic_log_cf(d: C.DistSpec, t_grid) -> CfCurve:
    """Closed-form cf of log Z: sin(t)/t for log-uniform, cos(t) for log-Rademacher."""
    fn = _ANALYTIC.get(d.kind)
    if fn is None:
        raise CapabilityError(f"no closed-form log-cf for {d.kind}")
    t = np.asarray(t_grid, float)
    return CfCurve(t, fn(t), 0.0, "analytic", None, fn)


def log_abs(sample) -> np.ndarray:
    """log|z| of a sample (zeros rejected)."""
    v = _values(sample)
    if np.any(v == 0):
        raise SelfInverseError("log|z| undefined at z = 0")
    return np.log(np.abs(v))


def empirical_cf(sample, t_grid) -> CfCurve:
    """Empirical cf (1/n) sum exp(i t u_k) with conservative band 3/sqrt(n).

    Values at negative t are conjugates of the values at |t|, so the
    symmetry phi(-t) = conj(phi(t)) holds exactly.
    """
    u = _values(sample)
    n = len(u)
    if n < MIN_CF:
        raise SampleSizeError(f"empirical cf needs at least {MIN_CF} values, got {n}")
    t = np.asarray(t_grid, float)
    at = np.abs(t)
    tu = np.multiply.outer(at, u)
    vals = np.cos(tu).mean(axis=1) + 1j * np.sin(tu).mean(axis=1)
    vals = np.where(t < 0, np.conj(vals), vals)
    return CfCurve(t, vals, 3.0 / math.sqrt(n), "empirical", n)


def _bisect(h, lo, hi, iters=80):
    # h(lo) >= 0 > h(hi) or the reverse; returns the crossing point
    s_lo = h(lo) < 0
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if (h(mid) < 0) == s_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def iid_decomposability_obstruction(curve: CfCurve, alpha: float = 0.01) -> TestReport:
    """Search a log-cf curve for a certified negative value.

    If Z = X/Y with X, Y iid then the cf of log|Z| is |phi|^2 >= 0.  A point
    with Re < -band and |Im| <= band therefore refutes any iid ratio
    representation.  Each maximal run of such grid points is one negativity
    interval; for analytic curves its ends are refined by bisection.  The
    witness is the centre of the interval whose centre has the largest
    margin ``-Re - band``, which keeps it as far as possible from the sign
    changes.  Finding nothing is not a proof of decomposability.

    Only meaningful for curves of log|Z| with Z > 0.
    """
    t = np.asarray(curve.t, float)
    v = np.asarray(curve.values, complex)
    band = float(curve.band)
    ok = (v.real < -band) & (np.abs(v.imag) <= band)
    imin = int(np.argmin(v.real))
    diag = {"source": curve.source, "band": band,
            "min_re": float(v.real[imin]), "t_min_re": float(t[imin])}

    runs = []
    i = 0
    while i < len(t):
        if ok[i]:
            j = i
            while j + 1 < len(t) and ok[j + 1]:
                j += 1
            runs.append((i, j))
            i = j + 1
        else:
            i += 1

    best = None
    for i0, i1 in runs:
        if curve.evaluator is not None:
            def h(s):
                return float(np.real(curve.evaluator(np.array([s]))[0])) + band
            left = _bisect(h, t[i0 - 1], t[i0]) if i0 > 0 else t[i0]
            right = _bisect(h, t[i1], t[i1 + 1]) if i1 + 1 < len(t) else t[i1]
            tw = 0.5 * (left + right)
            val = complex(curve.evaluator(np.array([tw]))[0])
            if abs(val.imag) > band:
                continue
        else:
            left, right = t[i0], t[i1]
            mid = 0.5 * (left + right)
            k = i0 + int(np.argmin(np.abs(t[i0:i1 + 1] - mid)))
            tw, val = t[k], complex(v[k])
        margin = -val.real - band
        if best is None or margin > best["margin"]:
            best = {"t": float(tw), "value": val, "margin": float(margin),
                    "interval": [float(left), float(right)]}

    if best is None:
        diag["witness"] = None
        stat = -diag["min_re"] - band
        return TestReport("iid-obstruction", float(stat), None, alpha, "pass",
                          curve.n or 0, None, diag)
    diag["witness"] = best
    diag["intervals"] = len(runs)
    return TestReport("iid-obstruction", best["margin"], None, alpha, "reject",
                      curve.n or 0, None, diag)


def null_rejection_rate(trials: int = 1000, n: int = 500, alpha: float = 0.01,
                        seed: int = 0, dist: C.DistSpec | None = None) -> float:
    """Fraction of ``trials`` two-sample KS tests under the null that reject.

    Trial k draws both samples from stream id k; results are aggregated in
    stream-id order.
    """
    from .rng import new_stream

    dist = dist or C.normal()
    rejects = 0
    for k in range(trials):
        s = new_stream(seed=seed, stream_id=k)
        a = C.sample(dist, s, n)
        b = C.sample(dist, s, n)
        rejects += ks_two_sample(a, b, alpha).decision == "reject"
    return rejects / trials
