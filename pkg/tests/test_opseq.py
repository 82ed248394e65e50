"""Recurrences, moment-based recovery, orthogonality, block determinants."""

import random
from fractions import Fraction

import pytest

from qmap import (
    BlockView,
    MomentFunctional,
    Poly,
    Recurrence,
    act,
    delta_det,
    ops_from_recurrence,
    orthogonality_check,
    pearson_moments,
    recurrence_from_moments,
)
from qmap.errors import RegularityError
from qmap.families import little_q_laguerre_pair

from conftest import random_nonzero_scalar, random_scalar

X = Poly.x()


def _random_recurrence(rng, n):
    b = [random_scalar(rng, 4, 4) for _ in range(n)]
    a = [random_nonzero_scalar(rng, 4, 4) for _ in range(n - 1)]
    return Recurrence(b, a)


def test_ops_from_recurrence_examples():
    rec = Recurrence([0, 0, 0], [1, 1])
    ops = ops_from_recurrence(rec, 2)
    assert ops[2] == X * X - 1

    tau = Fraction(2, 3)
    rec2 = Recurrence([tau, 0], [1])
    assert ops_from_recurrence(rec2, 1)[1] == X - tau


def test_ops_from_recurrence_expansion():
    rng = random.Random(31)
    for _ in range(50):
        rec = _random_recurrence(rng, 3)
        ops = ops_from_recurrence(rec, 2)
        b0, b1, a1 = rec.b_at(0), rec.b_at(1), rec.a_at(1)
        assert ops[2] == (X - b0) * (X - b1) - Poly.constant(a1)


def test_recurrence_from_moments_regularity_error():
    # Dirac-like moments (1, 0, 0, ...) fail at level 1
    u = MomentFunctional([1] + [0] * 10)
    with pytest.raises(RegularityError, match="level 1"):
        recurrence_from_moments(u, 4)


def test_recurrence_round_trip(q_half):
    pair = little_q_laguerre_pair(Fraction(1, 4), q_half)
    u = pearson_moments(pair, 1, 24, q_half)
    rec, ops = recurrence_from_moments(u, 12)
    ops2 = ops_from_recurrence(rec, 12)
    assert all(ops[i] == ops2[i] for i in range(13))


def test_orthogonality_and_norm_telescoping(q_half):
    pair = little_q_laguerre_pair(Fraction(1, 4), q_half)
    u = pearson_moments(pair, 1, 24, q_half)
    rec, ops = recurrence_from_moments(u, 12)
    rep = orthogonality_check(u, ops, 12)
    assert rep.ok

    # <u, p_n^2> = a_1 a_2 ... a_n u_0
    prod = u.moment(0)
    for n in range(1, 12):
        prod = prod * rec.a_at(n)
        assert act(u, ops[n] * ops[n]) == prod


def test_orthogonality_detects_swapped_moments(q_half):
    pair = little_q_laguerre_pair(Fraction(1, 4), q_half)
    u = pearson_moments(pair, 1, 24, q_half)
    _, ops = recurrence_from_moments(u, 10)
    bad = list(u.moments)
    bad[4], bad[5] = bad[5], bad[4]
    rep = orthogonality_check(MomentFunctional(bad), ops, 10)
    assert not rep.ok
    assert rep.first_failure is not None


# -- block determinants -------------------------------------------------------


from helpers import delta_bruteforce as _delta_bruteforce


def test_delta_base_cases(q_half):
    rng = random.Random(32)
    rec = _random_recurrence(rng, 12)
    view = BlockView(rec, 3)
    assert delta_det(view, 1, 4, 2) == Poly.one()
    assert delta_det(view, 0, 3, 0).is_zero
    assert delta_det(view, 0, 2, 1) == X - rec.b_at(1)


def test_delta_2x2_expansion():
    rng = random.Random(33)
    rec = _random_recurrence(rng, 8)
    view = BlockView(rec, 3)
    d = delta_det(view, 0, 1, 1)
    assert d == (X - rec.b_at(0)) * (X - rec.b_at(1)) - Poly.constant(rec.a_at(1))


def test_delta_against_cofactor_oracle():
    rng = random.Random(34)
    count = 0
    while count < 220:
        rec = _random_recurrence(rng, 14)
        k = rng.randint(2, 4)
        view = BlockView(rec, k)
        n = rng.randint(0, 2)
        i = rng.randint(1, 5)
        j = rng.randint(i - 2, i + 3)
        if n * k + j >= len(rec.b):
            continue
        assert delta_det(view, n, i, j) == _delta_bruteforce(view, n, i, j)
        count += 1


def test_delta_top_corner_is_the_polynomial_itself():
    # Delta_0(1, m-1; x) = p_m(x) for any recurrence
    rng = random.Random(37)
    for _ in range(40):
        rec = _random_recurrence(rng, 9)
        ops = ops_from_recurrence(rec, 8)
        view = BlockView(rec, 3)
        for m in range(9):
            assert delta_det(view, 0, 1, m - 1) == ops[m]


def test_delta_block_shift_convention():
    # Delta_n(k+i, k+j; x) = Delta_{n+1}(i, j; x)
    rng = random.Random(35)
    rec = _random_recurrence(rng, 16)
    for k in (2, 3):
        view = BlockView(rec, k)
        for i in range(1, 4):
            for j in range(i - 1, i + 2):
                if 2 * k + j >= len(rec.b):
                    continue
                assert delta_det(view, 0, k + i, k + j) == delta_det(view, 1, i, j)
                assert delta_det(view, 1, k + i, k + j) == delta_det(view, 2, i, j)


def test_block_view_wraparound():
    rng = random.Random(36)
    rec = _random_recurrence(rng, 12)
    view = BlockView(rec, 3)
    for n in range(2):
        for j in range(3):
            assert view.b(n, 3 + j) == view.b(n + 1, j)
            assert view.a(n, 3 + j) == view.a(n + 1, j)


def test_recurrence_serialization():
    rec = Recurrence([1, 2], [Fraction(1, 2)])
    assert [str(v) for v in rec.b] == ["1/1", "2/1"]
    assert [str(v) for v in rec.a] == ["1/2"]
