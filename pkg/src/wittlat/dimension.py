"""Orbit, stabilizer and stratum dimension counts, with independent oracles.

Closed-form dimensions are checked against a per-entry linear-algebra
oracle: for gamma = diag(p^{s_1}, ..., p^{s_n}), the stabilizer condition
X gamma = gamma Y decouples into one equation p^{s_j} x = p^{s_i} y per
entry, whose solution space has a computable k-dimension even under the
per-entry constraints (zero, or valuation >= 1) imposed by the subgroup
shapes.  A tiny exhaustive census over W_3(F_2) validates the
orbit-stabilizer arithmetic at the group level.
"""

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .matrix import GroupShape, WittMat
from .snf import Cochar, divisor_type
from .witt import witt_ring


def regular_lattice_dim(n, r):
    """Dimension of the full lattice variety: (n-1)nr."""
    return (n - 1) * n * r


def dim_lattice_orbit(gamma, r):
    """Lattice-orbit dimension 2 * sum_{i>=2} (1-i) * c_i for the centered
    exponents c = gamma - r (which sum to zero)."""
    n = gamma.n
    if gamma.total != n * r:
        raise ValueError("exponents must sum to nr")
    if gamma.exponents[0] > n * r:
        raise ValueError("leading exponent exceeds nr")
    centered = [e - r for e in gamma.exponents]
    return -2 * sum(k * centered[k] for k in range(1, n))


def dim_matrix_orbit_closed_form(i, n, r):
    """Closed form n^2(nr+1) - (nr+2i) for the index-i subregular orbit."""
    nr = n * r
    if not 0 <= i <= nr // 2:
        raise ValueError(f"index i must lie in [0, {nr // 2}]")
    return n * n * (nr + 1) - (nr + 2 * i)


def _constraint_exponent(shape, i, j, N):
    """Per-entry constraint for a shape: entries live in p^alpha * W_N."""
    if shape is GroupShape.FULL:
        return 0
    if shape is GroupShape.P:
        return N if (j == 0 and i > 0) else 0
    if shape is GroupShape.P_MINUS:
        return N if (i == 0 and j > 0) else 0
    if shape is GroupShape.B:
        return 1 if i > j else 0
    if shape is GroupShape.B_MINUS:
        return 1 if i < j else 0
    raise ValueError(f"unknown shape {shape!r}")


def shape_space_dim(shape, n, N):
    """k-dimension of the matrix space underlying a subgroup shape."""
    return sum(N - _constraint_exponent(shape, i, j, N)
               for i in range(n) for j in range(n))


def stabilizer_dim(gamma, shapes, N):
    """k-dimension of {(X, Y) in S_X x S_Y : X gamma = gamma Y}.

    Entry (i, j) contributes the dimension of the solution space of
    p^{s_j} x = p^{s_i} y with x in p^aX * W_N, y in p^aY * W_N:
    (N - aX) + (N - aY) - N + min(s_j + aX, s_i + aY, N).
    """
    s = gamma.exponents
    n = gamma.n
    if any(e > N for e in s):
        raise ValueError("exponents must lie in [0, N]")
    shape_x, shape_y = shapes
    total = 0
    for i in range(n):
        for j in range(n):
            ax = _constraint_exponent(shape_x, i, j, N)
            ay = _constraint_exponent(shape_y, i, j, N)
            total += (N - ax) + (N - ay) - N + min(s[j] + ax, s[i] + ay, N)
    return total


def dim_matrix_orbit(gamma, N, shapes=(GroupShape.FULL, GroupShape.FULL)):
    """Orbit dimension by orbit-stabilizer: dim S_X + dim S_Y - dim Stab."""
    n = gamma.n
    sx, sy = shapes
    return (shape_space_dim(sx, n, N) + shape_space_dim(sy, n, N)
            - stabilizer_dim(gamma, shapes, N))


def complete_intersection_check(i, n, r, generator_count=None):
    """Numeric shadow of the complete-intersection property: the ideal
    generator count nr+2i must equal the oracle codimension of the
    index-i subregular orbit closure."""
    nr = n * r
    if not 0 <= i <= nr // 2:
        raise ValueError(f"index i must lie in [0, {nr // 2}]")
    if generator_count is None:
        generator_count = nr + 2 * i
    N = nr + 1
    gamma = Cochar(n, (nr - i, i) + (0,) * (n - 2))
    codim = n * n * N - dim_matrix_orbit(gamma, N)
    return generator_count == codim


@dataclass(frozen=True)
class DimReport:
    gamma: Cochar
    n: int
    r: int
    dim_lattice_orbit: int
    dim_matrix_orbit: int
    stab_dim: int
    codim_in_mat: int
    sources: dict = field(default_factory=dict)

    def to_obj(self):
        return {
            "gamma": self.gamma.to_obj(),
            "n": self.n,
            "r": self.r,
            "dim_lattice_orbit": self.dim_lattice_orbit,
            "dim_matrix_orbit": self.dim_matrix_orbit,
            "stab_dim": self.stab_dim,
            "codim_in_mat": self.codim_in_mat,
            "sources": dict(self.sources),
        }


def dim_report(gamma, r):
    """All dimension quantities for one stratum, oracle-derived; the
    closed form is cross-checked when gamma is a subregular vector."""
    n = gamma.n
    nr = n * r
    N = nr + 1
    stab = stabilizer_dim(gamma, (GroupShape.FULL, GroupShape.FULL), N)
    orbit = dim_matrix_orbit(gamma, N)
    sources = {
        "dim_lattice_orbit": "closed-form",
        "dim_matrix_orbit": "linear-oracle",
        "stab_dim": "linear-oracle",
        "codim_in_mat": "linear-oracle",
    }
    tail = (0,) * (n - 2)
    if gamma.exponents[2:] == tail and gamma.exponents[1] <= nr // 2:
        i = gamma.exponents[1]
        closed = dim_matrix_orbit_closed_form(i, n, r)
        if closed != orbit:
            raise RuntimeError("oracle disagrees with the closed form")
        sources["dim_matrix_orbit"] = "closed-form+linear-oracle"
    return DimReport(
        gamma=gamma, n=n, r=r,
        dim_lattice_orbit=dim_lattice_orbit(gamma, r),
        dim_matrix_orbit=orbit,
        stab_dim=stab,
        codim_in_mat=n * n * N - orbit,
        sources=sources,
    )


# -- tiny exhaustive census: 2x2 matrices over W_3(F_2) = Z/8 ------------------------

_TINY_MOD = 8


def _det2(a):
    return (a[0] * a[3] - a[1] * a[2]) % _TINY_MOD


def _mul2(a, b):
    return ((a[0] * b[0] + a[1] * b[2]) % _TINY_MOD,
            (a[0] * b[1] + a[1] * b[3]) % _TINY_MOD,
            (a[2] * b[0] + a[3] * b[2]) % _TINY_MOD,
            (a[2] * b[1] + a[3] * b[3]) % _TINY_MOD)


def _tiny_divisor_chunk(entries):
    ring = witt_ring(2, 3)
    counts = Counter()
    for a in entries:
        A = WittMat.from_ints(ring, ((a[0], a[1]), (a[2], a[3])))
        counts[divisor_type(A).exponents] += 1
    return counts


@dataclass(frozen=True)
class TinyCensus:
    total_matrices: int
    group_order: int
    histogram: dict           # exponent tuple -> count over all matrices
    stab_pairs: dict          # exponent tuple -> #{(x, y) in G^2 : x g = g y}
    orbit_counts_ok: bool
    cover_size: int           # #{A : v_p(det A) = 2}
    partition_ok: bool

    def to_obj(self):
        return {
            "total_matrices": self.total_matrices,
            "group_order": self.group_order,
            "histogram": [{"exponents": list(k), "count": v}
                          for k, v in sorted(self.histogram.items())],
            "stab_pairs": [{"exponents": list(k), "pairs": v}
                           for k, v in sorted(self.stab_pairs.items())],
            "orbit_counts_ok": self.orbit_counts_ok,
            "cover_size": self.cover_size,
            "partition_ok": self.partition_ok,
        }


def tiny_exhaustive_census(jobs=1):
    """Exhaustive validation at p=2, n=2, r=1 over Z/8.

    Counts all 4096 matrices by divisor type, enumerates the unit group,
    counts stabilizer pairs {(x, y) : x gamma = gamma y} for the two
    height-1 strata, and checks orbit size = |G|^2 / #pairs plus the
    partition of the cover variety.
    """
    mats = list(itertools.product(range(_TINY_MOD), repeat=4))
    group = [a for a in mats if _det2(a) % 2 == 1]
    g_order = len(group)

    if jobs > 1:
        chunk = (len(mats) + jobs - 1) // jobs
        parts = [mats[k:k + chunk] for k in range(0, len(mats), chunk)]
        histogram = Counter()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for c in pool.map(_tiny_divisor_chunk, parts):
                histogram.update(c)
    else:
        histogram = _tiny_divisor_chunk(mats)

    stab_pairs = {}
    counts_ok = True
    for exps in ((2, 0), (1, 1)):
        gamma = (2 ** exps[0] % _TINY_MOD, 0, 0, 2 ** exps[1] % _TINY_MOD)
        left = Counter(_mul2(x, gamma) for x in group)
        right = Counter(_mul2(gamma, y) for y in group)
        pairs = sum(c * right.get(k, 0) for k, c in left.items())
        stab_pairs[exps] = pairs
        if g_order * g_order % pairs or histogram[exps] != g_order * g_order // pairs:
            counts_ok = False

    cover_size = 0
    for a in mats:
        d = _det2(a)
        if d % 8 != 0 and d % 4 == 0:
            cover_size += 1
    partition_ok = histogram[(2, 0)] + histogram[(1, 1)] == cover_size

    return TinyCensus(
        total_matrices=len(mats),
        group_order=g_order,
        histogram=dict(histogram),
        stab_pairs=stab_pairs,
        orbit_counts_ok=counts_ok,
        cover_size=cover_size,
        partition_ok=partition_ok,
    )
