import pytest

from wittlat.dimension import (complete_intersection_check, dim_lattice_orbit,
                               dim_matrix_orbit, dim_matrix_orbit_closed_form,
                               dim_report, regular_lattice_dim,
                               shape_space_dim, stabilizer_dim,
                               tiny_exhaustive_census)
from wittlat.matrix import GroupShape
from wittlat.snf import Cochar
from wittlat.strata import enumerate_strata, regular_cochar, subregular_cochar

FULL2 = (GroupShape.FULL, GroupShape.FULL)
PP = (GroupShape.P, GroupShape.P_MINUS)
BB = (GroupShape.B, GroupShape.B_MINUS)


def test_stabilizer_full_example():
    # mu_1 at n=2, N=3: per-entry count n^2 N + sum min(s_i, s_j) = 12 + 2
    assert stabilizer_dim(Cochar(2, (2, 0)), FULL2, 3) == 14


def test_stabilizer_full_general():
    # sum over pairs of min(s_i, s_j) equals sum (2k-1) s_k for sorted s
    for exps, N in [((3, 1, 0), 5), ((2, 2, 1), 7), ((4, 0), 5)]:
        g = Cochar(len(exps), exps)
        want = len(exps) ** 2 * N + sum((2 * k + 1) * e for k, e in enumerate(exps))
        assert stabilizer_dim(g, FULL2, N) == want


def test_closed_forms_full_matrix():
    for n in range(2, 5):
        for r in range(1, 4):
            nr = n * r
            N = nr + 1
            for i in range(nr // 2 + 1):
                g = subregular_cochar(n, r, i)
                assert stabilizer_dim(g, FULL2, N) == n * n * N + nr + 2 * i
                assert stabilizer_dim(g, PP, N) == N * ((n - 1) ** 2 + 1) + nr + 2 * i
                assert stabilizer_dim(g, BB, N) == n * n * nr + n + nr + 2 * i


def test_orbit_dims_agree_across_shape_pairs():
    for n in range(2, 5):
        for r in range(1, 4):
            nr = n * r
            N = nr + 1
            for i in range(nr // 2 + 1):
                g = subregular_cochar(n, r, i)
                want = dim_matrix_orbit_closed_form(i, n, r)
                assert want == n * n * N - (nr + 2 * i)
                assert dim_matrix_orbit(g, N) == want
                assert dim_matrix_orbit(g, N, PP) == want
                assert dim_matrix_orbit(g, N, BB) == want


def test_shape_space_dims():
    # dim P = (n^2 - (n-1)) N and dim B = n^2 nr + n(n+1)/2
    for n in range(2, 5):
        for N in (3, 5):
            nr = N - 1
            assert shape_space_dim(GroupShape.FULL, n, N) == n * n * N
            assert shape_space_dim(GroupShape.P, n, N) == (n * n - (n - 1)) * N
            assert shape_space_dim(GroupShape.P_MINUS, n, N) == (n * n - (n - 1)) * N
            assert shape_space_dim(GroupShape.B, n, N) == n * n * nr + n * (n + 1) // 2
            assert shape_space_dim(GroupShape.B_MINUS, n, N) == \
                n * n * nr + n * (n + 1) // 2


def test_orbit_dim_examples():
    # codimension of the full cover is nr; scalar strata are single points
    for n, r in [(2, 1), (3, 2)]:
        nr = n * r
        N = nr + 1
        assert dim_matrix_orbit(regular_cochar(n, r), N) == n * n * N - nr
        scalar = Cochar(n, (r,) * n)
        assert dim_matrix_orbit(scalar, N) == n * n * N - n * n * r
        assert dim_lattice_orbit(scalar, r) == 0


def test_lattice_dims():
    assert dim_lattice_orbit(regular_cochar(3, 1), 1) == 6 == regular_lattice_dim(3, 1)
    # n=2, r=2, shifted (3,1): 2 = n(n-1)r - 2
    assert dim_lattice_orbit(Cochar(2, (3, 1)), 2) == 2
    for n in range(2, 5):
        for r in range(1, 4):
            nr = n * r
            prev = None
            for i in range(nr // 2 + 1):
                d = dim_lattice_orbit(subregular_cochar(n, r, i), r)
                assert d % 2 == 0 and d >= 0
                if i == 0:
                    assert d == (n - 1) * n * r
                if prev is not None:
                    assert prev - d == 2
                prev = d
    with pytest.raises(ValueError):
        dim_lattice_orbit(Cochar(2, (1, 0)), 1)


def test_lattice_matrix_consistency():
    # (n^2 N - orbit(gamma)) - nr == (n-1)nr - dim_lattice_orbit(gamma)
    for n, r in [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1)]:
        nr = n * r
        N = nr + 1
        for gamma in enumerate_strata(n, r).strata:
            lhs = (n * n * N - dim_matrix_orbit(gamma, N)) - nr
            rhs = (n - 1) * nr - dim_lattice_orbit(gamma, r)
            assert lhs == rhs


def test_complete_intersection_checks():
    for n in range(2, 5):
        for r in range(1, 4):
            for i in range(n * r // 2 + 1):
                assert complete_intersection_check(i, n, r)
                # perturbed generator count is a negative control
                assert not complete_intersection_check(
                    i, n, r, generator_count=n * r + 2 * i + 1)


def test_dim_report():
    rep = dim_report(subregular_cochar(2, 1, 1), 1)
    assert rep.dim_matrix_orbit == 8 and rep.codim_in_mat == 4
    assert rep.stab_dim == 16
    assert rep.sources["dim_matrix_orbit"] == "closed-form+linear-oracle"
    obj = rep.to_obj()
    assert obj["gamma"] == {"n": 2, "exponents": [1, 1]}
    rep2 = dim_report(Cochar(3, (2, 2, 2)), 2)
    assert rep2.dim_lattice_orbit == 0
    assert rep2.sources["dim_matrix_orbit"] == "linear-oracle"


def test_tiny_census_frozen_values():
    census = tiny_exhaustive_census()
    assert census.total_matrices == 4096
    assert census.group_order == 1536  # |GL_2(F_2)| * 2^8 = 6 * 256
    # full histogram derived by orbit-stabilizer counting over Z/8
    assert census.histogram == {
        (0, 0): 1536, (1, 0): 1152, (1, 1): 96, (2, 0): 576, (2, 1): 72,
        (2, 2): 6, (3, 0): 576, (3, 1): 72, (3, 2): 9, (3, 3): 1,
    }
    assert census.stab_pairs == {(2, 0): 4096, (1, 1): 24576}
    assert census.orbit_counts_ok
    assert census.cover_size == 672 and census.partition_ok
    assert sum(census.histogram.values()) == 4096


def test_tiny_census_jobs_agree():
    a = tiny_exhaustive_census()
    b = tiny_exhaustive_census(jobs=2)
    assert a == b
