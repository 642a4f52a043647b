import random

import pytest

from wittlat.errors import NotInCoverError, ParameterMismatchError
from wittlat.matrix import GroupShape, WittMat, identity, in_group, p_power_diagonal
from wittlat.snf import Cochar, divisor_type
from wittlat.strata import (classify, dominance_leq, enumerate_strata,
                            in_cover, in_orbit_closure, regular_cochar,
                            sample_cover, sample_group, sample_orbit,
                            subregular_cochar, valuation_predicate)
from wittlat.witt import witt_ring


def test_cochar_families():
    assert regular_cochar(3, 2).exponents == (6, 0, 0)
    assert subregular_cochar(3, 2, 1).exponents == (5, 1, 0)
    assert subregular_cochar(2, 2, 2).exponents == (2, 2)
    with pytest.raises(ValueError):
        subregular_cochar(2, 1, 2)  # i > nr/2


def test_in_cover():
    R = witt_ring(2, 3)
    assert in_cover(p_power_diagonal(R, (2, 0)), 1)
    assert not in_cover(identity(R, 2), 1)
    rng = random.Random(0)
    mu = regular_cochar(2, 1)
    for _ in range(30):
        assert in_cover(sample_orbit(R, mu, rng), 1)
    with pytest.raises(ParameterMismatchError):
        in_cover(identity(R, 2), 2)


def test_valuation_predicate_examples():
    n, r = 2, 2
    R = witt_ring(2, n * r + 1)
    gamma1 = p_power_diagonal(R, subregular_cochar(n, r, 1).exponents)
    assert valuation_predicate(gamma1, 1)
    mu = p_power_diagonal(R, regular_cochar(n, r).exponents)
    assert valuation_predicate(mu, 0)
    # diag(1, p^{nr}): corner entry is a unit, corner minor is zero, so the
    # predicate holds at i = 1; diag(p^{nr}, 1) fails it since v(c) = 0
    swapped = p_power_diagonal(R, (0, n * r))  # not dominant, still a matrix
    assert valuation_predicate(swapped, 1)
    assert not valuation_predicate(mu, 1)
    with pytest.raises(ValueError):
        valuation_predicate(mu, n * r)


def test_in_orbit_closure_basic():
    n, r = 2, 2
    R = witt_ring(2, n * r + 1)
    rng = random.Random(1)
    strata = enumerate_strata(n, r).strata
    for gamma in strata:
        a = n * r - gamma.exponents[0]
        A = sample_orbit(R, gamma, rng)
        for i in range(n * r // 2 + 1):
            assert in_orbit_closure(A, i) == (a >= i)
    mu = p_power_diagonal(R, regular_cochar(n, r).exponents)
    assert not in_orbit_closure(mu, 1)
    with pytest.raises(NotInCoverError):
        in_orbit_closure(identity(R, 2), 1)


def test_predicate_does_not_imply_closure():
    # Explicit counterexample family: [[p, 1], [0, p^{nr-1}]] satisfies both
    # corner valuation conditions at i = 1 yet lies in the open stratum.
    # Closure membership must therefore be decided by divisor type; the
    # valuation predicate is only a chart-local description.
    for p, n, r in [(2, 2, 1), (2, 2, 2), (3, 2, 2)]:
        nr = n * r
        R = witt_ring(p, nr + 1)
        rows = [[R.p_power(1), R.one], [R.zero, R.p_power(nr - 1)]]
        A = WittMat(R, rows)
        assert in_cover(A, r)
        if nr >= 2:
            assert valuation_predicate(A, 1)
            assert divisor_type(A).exponents == (nr, 0)
            assert not in_orbit_closure(A, 1)


def test_closure_implies_corner_minor_valuation():
    # the corner minor is one (n-1)-minor, so its valuation dominates the
    # stratum index; this half of the predicate does follow from closure
    n, r = 2, 2
    R = witt_ring(2, n * r + 1)
    rng = random.Random(2)
    for _ in range(200):
        A = sample_cover(R, n, r, rng)
        a = n * r - divisor_type(A).exponents[0]
        assert A.corner_minor().valuation() >= a


def test_enumerate_strata_examples():
    poset = enumerate_strata(2, 1)
    assert [c.exponents for c in poset.strata] == [(2, 0), (1, 1)]
    assert poset.hasse == ((1, 0),)
    poset = enumerate_strata(2, 2)
    assert [c.exponents for c in poset.strata] == [(4, 0), (3, 1), (2, 2)]
    assert poset.hasse == ((1, 0), (2, 1))
    for n, r in [(2, 1), (3, 1), (3, 2), (4, 1)]:
        poset = enumerate_strata(n, r)
        exps = [c.exponents for c in poset.strata]
        assert regular_cochar(n, r).exponents in exps
        if n * r >= 2:
            assert subregular_cochar(n, r, 1).exponents in exps
        # every stratum is a partition of nr with at most n parts
        for e in exps:
            assert sum(e) == n * r and len(e) == n
        # stratum index ranges over [0, (n-1)r]
        assert {n * r - e[0] for e in exps} == set(range((n - 1) * r + 1))


def test_hasse_edges_are_single_unit_transfers():
    for n, r in [(3, 2), (4, 2)]:
        poset = enumerate_strata(n, r)
        for lo, hi in poset.hasse:
            low = poset.strata[lo].exponents
            high = poset.strata[hi].exponents
            assert dominance_leq(poset.strata[lo], poset.strata[hi])
            diffs = [h - l for h, l in zip(high, low)]
            assert sorted(diffs) == [-1] + [0] * (n - 2) + [1]


def test_dominance_examples():
    assert dominance_leq(Cochar(2, (1, 1)), Cochar(2, (2, 0)))
    g = Cochar(3, (3, 2, 1))
    assert dominance_leq(g, g)
    assert not dominance_leq(Cochar(3, (3, 1, 0)), Cochar(3, (2, 2, 0)))
    # first partial sum passes, second fails: (2,4,4) vs (2,3,4)
    assert not dominance_leq(Cochar(3, (2, 2, 0)), Cochar(3, (2, 1, 1)))
    assert dominance_leq(Cochar(3, (2, 2, 0)), Cochar(3, (3, 1, 0)))
    with pytest.raises(ValueError):
        dominance_leq(Cochar(2, (1, 1)), Cochar(2, (2, 1)))
    with pytest.raises(ValueError):
        dominance_leq(Cochar(2, (1, 1)), Cochar(3, (2, 0, 0)))


def test_closure_downset_matches_dominance():
    # {gamma : stratum index >= i} is exactly the dominance down-set of the
    # index-i subregular vector
    for n, r in [(2, 2), (3, 1), (3, 2)]:
        nr = n * r
        strata = enumerate_strata(n, r).strata
        for i in range(nr // 2 + 1):
            gsr = subregular_cochar(n, r, i)
            for gamma in strata:
                a = nr - gamma.exponents[0]
                assert (a >= i) == dominance_leq(gamma, gsr)


def test_sample_group_contract():
    R = witt_ring(2, 3)
    for shape in GroupShape:
        for seed in range(5):
            A = sample_group(R, 3, shape, seed)
            assert in_group(A, shape)
    # fixed seed determinism
    assert sample_group(R, 3, GroupShape.B, 7) == sample_group(R, 3, GroupShape.B, 7)


def test_sample_orbit_contract():
    R = witt_ring(3, 4)
    rng = random.Random(3)
    strata = enumerate_strata(3, 1).strata
    for gamma in strata:
        A = sample_orbit(R, gamma, rng)
        assert divisor_type(A) == gamma
    assert sample_orbit(R, strata[0], 11) == sample_orbit(R, strata[0], 11)


def test_classify_reports():
    R = witt_ring(2, 3)
    mu = p_power_diagonal(R, (2, 0))
    rep = classify(mu, 1)
    assert rep.to_obj() == {
        "in_Xr": True, "divisors": [2, 0], "stratum_index": 0,
        "val_b": 2, "val_c": 0, "pred_val_i": 0, "deepest_closure_i": 0,
    }
    rep = classify(identity(R, 2), 1)
    assert rep.in_Xr is False and rep.stratum_index is None
    assert rep.val_b == 0 and rep.val_c == 0
    scalar = p_power_diagonal(R, (1, 1))
    rep = classify(scalar, 1)
    assert rep.stratum_index == 1 and rep.deepest_closure_i == 1
    assert rep.pred_val_i == 1
    with pytest.raises(ParameterMismatchError):
        classify(mu, 2)


def test_closure_invariance_under_group_action():
    n, r = 2, 2
    R = witt_ring(2, n * r + 1)
    rng = random.Random(4)
    for _ in range(50):
        A = sample_cover(R, n, r, rng)
        g = sample_group(R, n, GroupShape.FULL, rng)
        h = sample_group(R, n, GroupShape.FULL, rng)
        for i in range(n * r // 2 + 1):
            assert in_orbit_closure(g * A * h, i) == in_orbit_closure(A, i)
