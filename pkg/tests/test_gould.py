import cmath
import math

import pytest

from _oracles import pascal_binomial
from qdivide.afunc import AParams, is_integer_poly
from qdivide.errors import HypothesisNotMet, PrecisionGuard
from qdivide.gould import (
    GouldInstance,
    gould_lhs,
    root_unity_sum_exact,
    root_unity_sum_numeric,
    root_unity_sum_rounded,
    theorem9_check,
    theorem9_hypothesis,
)


def test_instance_validation():
    with pytest.raises(ValueError):
        GouldInstance(3, 3, 3, 0)
    with pytest.raises(ValueError):
        GouldInstance(3, 0, 0, 0)
    with pytest.raises(ValueError):
        GouldInstance(-1, 0, 2, 0)


@pytest.mark.parametrize(
    "inst,lhs",
    [((2, 0, 2, 0), 2), ((1, 0, 3, 1), 5), ((0, 0, 5, 0), 1)],
)
def test_lhs(inst, lhs):
    assert gould_lhs(GouldInstance(*inst)) == lhs


def test_lhs_matches_pascal_sum():
    for n in range(1, 8):
        for N in range(0, 15):
            for M in range(n):
                for m in range(3):
                    top = N + m * n
                    want = sum(pascal_binomial(top, M + j * n) for j in range(top + 1))
                    assert gould_lhs(GouldInstance(N, M, n, m)) == want


@pytest.mark.parametrize(
    "inst,total",
    [((3, 1, 3, 0), 9), ((1, 0, 3, 1), 15), ((2, 0, 2, 0), 4), ((0, 0, 1, 0), 1)],
)
def test_exact_root_sum(inst, total):
    assert root_unity_sum_exact(GouldInstance(*inst)) == total


def test_hand_evaluation_with_cube_roots():
    # 1 + w + w^2 = 0 turns the N=3, M=1, n=3 sum into 8 - w - w^2 = 9
    w = cmath.exp(2j * math.pi / 3)
    assert abs((8 - w - w * w) - 9) < 1e-12


@pytest.mark.parametrize(
    "inst,value,tol",
    [((3, 1, 3, 0), 9, 1e-6), ((2, 0, 2, 0), 4, 1e-9), ((0, 0, 1, 0), 1, 1e-12)],
)
def test_numeric(inst, value, tol):
    z = root_unity_sum_numeric(GouldInstance(*inst))
    assert abs(z - value) < tol


def test_precision_guard():
    with pytest.raises(PrecisionGuard):
        root_unity_sum_numeric(GouldInstance(201, 0, 3, 0))
    with pytest.raises(PrecisionGuard):
        root_unity_sum_numeric(GouldInstance(1, 0, 4, 50))
    root_unity_sum_numeric(GouldInstance(200, 0, 3, 0))


def test_numeric_identity_grid():
    for n in range(1, 13):
        for N in range(0, 31):
            for M in range(n):
                for m in range(4):
                    g = GouldInstance(N, M, n, m)
                    exact = root_unity_sum_exact(g)
                    z = root_unity_sum_numeric(g)
                    scale = max(1, abs(exact))
                    assert abs(z - exact) < 1e-6 * scale
                    assert abs(z.imag) < 1e-6 * scale


def test_rounded_high_precision_sum_is_divisible_by_n():
    for n in range(1, 13):
        for N in range(0, 31, 3):
            for M in range(n):
                g = GouldInstance(N, M, n, 3)
                r = root_unity_sum_rounded(g)
                assert r == root_unity_sum_exact(g)
                assert r % n == 0


class TestTheorem9:
    def test_examples(self):
        g = GouldInstance(3, 1, 3, 0)
        assert theorem9_hypothesis(g) and theorem9_check(g)
        g = GouldInstance(2, 1, 2, 0)
        assert gould_lhs(g) == 2 and theorem9_check(g)

    def test_hypothesis_not_met(self):
        with pytest.raises(HypothesisNotMet):
            theorem9_check(GouldInstance(2, 0, 2, 0))

    def test_zero_function_excluded(self):
        # A(1,4;0,2) = 0 is in Z[q], yet 4 does not divide C(4,2) = 6
        g = GouldInstance(0, 2, 4, 1)
        assert is_integer_poly(AParams(1, 4, 0, 2))
        assert gould_lhs(g) == 6
        assert not theorem9_hypothesis(g)
        with pytest.raises(HypothesisNotMet):
            theorem9_check(g)

    def test_grid_and_propagation(self):
        for n in range(1, 13):
            for N in range(0, 37):
                for M in range(n):
                    for m in range(5):
                        g = GouldInstance(N, M, n, m)
                        if not theorem9_hypothesis(g):
                            continue
                        assert theorem9_check(g), (N, M, n, m)
                        top = g.top
                        for j in range(0, (top - M) // n + 1):
                            assert is_integer_poly(AParams(1, n, top, M + j * n))
