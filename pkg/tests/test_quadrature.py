import math

import numpy as np
import pytest
from scipy import integrate as sci

from selfinverse.errors import QuadratureError
from selfinverse.quadrature import gk15, integrate


def test_gk15_exact_for_polynomials():
    v, e = gk15(lambda x: x ** 10, 0.0, 1.0)
    assert v == pytest.approx(1 / 11, abs=1e-15)
    assert e < 1e-14


@pytest.mark.parametrize("f, a, b", [
    (np.sin, 0.0, math.pi),
    (lambda x: np.exp(-x * x), -3.0, 2.0),
    (lambda x: 1 / (1 + x * x), 0.0, 10.0),
    (np.sqrt, 0.0, 1.0),
])
def test_finite_matches_scipy(f, a, b):
    ref = sci.quad(f, a, b, epsabs=1e-13, epsrel=1e-13)[0]
    assert integrate(f, a, b, 1e-11).value == pytest.approx(ref, abs=1e-10)


def test_infinite_limits_with_tan_map():
    r = integrate(lambda x: 1 / (math.pi * (1 + x * x)), -math.inf, math.inf, 1e-12)
    assert r.value == pytest.approx(1.0, abs=1e-11)
    r = integrate(lambda x: np.exp(-x), 0.0, math.inf, 1e-12)
    assert r.value == pytest.approx(1.0, abs=1e-11)
    r = integrate(lambda x: np.exp(x), -math.inf, 0.0, 1e-12)
    assert r.value == pytest.approx(1.0, abs=1e-11)


def test_break_points_handle_kink():
    f = lambda x: np.abs(x - 0.3)  # noqa: E731
    r = integrate(f, 0.0, 1.0, 1e-13, points=[0.3])
    assert r.value == pytest.approx(0.5 * (0.3 ** 2 + 0.7 ** 2), abs=1e-14)
    assert r.intervals == 2


def test_reversed_limits():
    assert integrate(np.cos, 1.0, 0.0, 1e-12).value == pytest.approx(-math.sin(1.0), abs=1e-12)


def test_nonconvergence_reports_bound():
    # 1/x on (0, 1] diverges
    with pytest.raises(QuadratureError) as ei:
        integrate(lambda x: 1 / x, 0.0, 1.0, 1e-10)
    assert ei.value.error > 1e-10
    r = integrate(lambda x: 1 / x, 0.0, 1.0, 1e-10, raise_on_fail=False)
    assert r.error > 1e-10
