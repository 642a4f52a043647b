"""Stratification of the matrix cover of special lattices.

The cover variety at height r consists of the n x n matrices over
W_{nr+1} whose determinant is p^{nr} times a unit.  Its two-sided orbits
are indexed by dominant exponent vectors summing to nr; the closure
order is dominance.  The subregular family at index i is the closure of
the orbit of diag(p^{nr-i}, p^i, 1, ..., 1), cut out (locally) by
valuation conditions on the corner entry and the corner minor.
"""

import random
from dataclasses import dataclass

from .errors import NotInCoverError, ParameterMismatchError
from .matrix import GroupShape, WittMat, in_group, p_power_diagonal
from .snf import Cochar, divisor_type


def regular_cochar(n, r):
    """Exponents of the open (regular) orbit: (nr, 0, ..., 0)."""
    if n < 2 or r < 1:
        raise ValueError("need n >= 2 and r >= 1")
    return Cochar(n, (n * r,) + (0,) * (n - 1))


def subregular_cochar(n, r, i):
    """Exponents (nr-i, i, 0, ..., 0); i = 0 gives the regular vector."""
    nr = n * r
    if not 0 <= i <= nr // 2:
        raise ValueError(f"index i must lie in [0, {nr // 2}]")
    return Cochar(n, (nr - i, i) + (0,) * (n - 2))


def _ambient_nr(A):
    return A.ring.N - 1


def in_cover(A, r):
    """det A = p^{nr} * unit, i.e. the determinant valuation is exactly nr."""
    nr = A.n * r
    if A.ring.N != nr + 1:
        raise ParameterMismatchError(
            f"ring length N={A.ring.N} but height r={r} requires N={nr + 1}")
    return A.det().valuation() == nr


def valuation_predicate(A, i):
    """Corner conditions: v_p(corner minor) >= i and v_p(corner entry) <= nr-i.

    This is the local-chart description of the subregular family; it is
    not equivalent to orbit-closure membership away from the chart (see
    in_orbit_closure).
    """
    nr = _ambient_nr(A)
    if not 0 <= i <= nr // 2:
        raise ValueError(f"index i must lie in [0, {nr // 2}]")
    return (A.corner_minor().valuation() >= i
            and A.corner_entry().valuation() <= nr - i)


def in_orbit_closure(A, i):
    """Closure membership for the index-i subregular orbit, decided by the
    honest two-sided invariant: divisor type r_1 <= nr - i."""
    nr = _ambient_nr(A)
    if nr % A.n:
        raise ParameterMismatchError("ring length N-1 is not divisible by n")
    if not 0 <= i <= nr // 2:
        raise ValueError(f"index i must lie in [0, {nr // 2}]")
    div = divisor_type(A)
    if div.total != nr:
        raise NotInCoverError("matrix determinant valuation differs from nr")
    return div.exponents[0] <= nr - i


def dominance_leq(eta, gamma):
    """Partial-sum dominance; requires equal size and equal totals."""
    if eta.n != gamma.n:
        raise ValueError("size mismatch")
    if eta.total != gamma.total:
        raise ValueError("total mismatch")
    acc_e = acc_g = 0
    for e, g in zip(eta.exponents, gamma.exponents):
        acc_e += e
        acc_g += g
        if acc_e > acc_g:
            return False
    return True


def _partitions(total, parts, cap):
    if parts == 1:
        if total <= cap:
            yield (total,)
        return
    for first in range(min(total, cap), -1, -1):
        if first * parts < total:
            break
        for rest in _partitions(total - first, parts - 1, first):
            yield (first,) + rest


@dataclass(frozen=True)
class StrataPoset:
    n: int
    r: int
    strata: tuple          # Cochar, ordered by stratum index then lex
    hasse: tuple           # pairs (lo, hi) of indices: strata[lo] is covered by strata[hi]

    def to_obj(self):
        return {
            "n": self.n,
            "r": self.r,
            "strata": [{"a": self.n * self.r - c.exponents[0],
                        "exponents": list(c.exponents)} for c in self.strata],
            "hasse": [list(e) for e in self.hasse],
        }


def enumerate_strata(n, r):
    """All dominant exponent vectors summing to nr, with Hasse covers of
    the dominance order (each cover is a single-unit transfer)."""
    if n < 2 or r < 1:
        raise ValueError("need n >= 2 and r >= 1")
    nr = n * r
    strata = [Cochar(n, exps) for exps in _partitions(nr, n, nr)]
    strata.sort(key=lambda c: (nr - c.exponents[0], tuple(-e for e in c.exponents)))
    below = {}
    for a, ca in enumerate(strata):
        for b, cb in enumerate(strata):
            if a != b and dominance_leq(ca, cb):
                below.setdefault(b, set()).add(a)
    hasse = []
    for hi, los in sorted(below.items()):
        for lo in sorted(los):
            if not any(lo in below.get(mid, ()) for mid in los if mid != lo):
                hasse.append((lo, hi))
    return StrataPoset(n=n, r=r, strata=tuple(strata), hasse=tuple(sorted(hasse)))


# -- seeded sampling ------------------------------------------------------------

def _as_rng(seed_or_rng):
    if isinstance(seed_or_rng, random.Random):
        return seed_or_rng
    return random.Random(seed_or_rng)


def sample_group(ring, n, shape, seed):
    """A pseudorandom element of the requested subgroup shape.

    FULL uses rejection on the unit-determinant condition; the triangular
    and parabolic shapes are built structurally so acceptance is certain.
    """
    rng = _as_rng(seed)
    if shape is GroupShape.FULL:
        for _ in range(10000):
            A = WittMat._make(ring, tuple(
                tuple(ring.random(rng) for _ in range(n)) for _ in range(n)))
            if A.det().is_unit():
                return A
        raise RuntimeError("unit-determinant rejection sampling did not converge")
    if shape in (GroupShape.B, GroupShape.B_MINUS):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append(ring.random_unit(rng))
                elif (i > j) == (shape is GroupShape.B):
                    row.append(ring.random_multiple_of_p(rng))
                else:
                    row.append(ring.random(rng))
            rows.append(tuple(row))
        A = WittMat._make(ring, tuple(rows))
    elif shape in (GroupShape.P, GroupShape.P_MINUS):
        corner = ring.random_unit(rng)
        block = sample_group(ring, n - 1, GroupShape.FULL, rng) if n > 1 else None
        rows = [[ring.zero] * n for _ in range(n)]
        rows[0][0] = corner
        for i in range(1, n):
            for j in range(1, n):
                rows[i][j] = block.rows[i - 1][j - 1]
        for k in range(1, n):
            edge = ring.random(rng)
            if shape is GroupShape.P:
                rows[0][k] = edge
            else:
                rows[k][0] = edge
        A = WittMat._make(ring, tuple(tuple(r) for r in rows))
    else:
        raise ValueError(f"unknown shape {shape!r}")
    if not in_group(A, shape):
        raise RuntimeError("structural sampler produced an out-of-shape matrix")
    return A


def sample_orbit(ring, gamma, seed):
    """x * diag(p^gamma) * y with fresh FULL samples x, y."""
    rng = _as_rng(seed)
    n = gamma.n
    x = sample_group(ring, n, GroupShape.FULL, rng)
    y = sample_group(ring, n, GroupShape.FULL, rng)
    return x * p_power_diagonal(ring, gamma.exponents) * y


def sample_cover(ring, n, r, seed):
    """A cover-variety sample: orbit sample over a uniformly chosen stratum."""
    rng = _as_rng(seed)
    if ring.N != n * r + 1:
        raise ParameterMismatchError("ring length must be nr + 1")
    strata = enumerate_strata(n, r).strata
    gamma = strata[rng.randrange(len(strata))]
    return sample_orbit(ring, gamma, rng)


# -- classification report ----------------------------------------------------------

@dataclass(frozen=True)
class StratumReport:
    """Membership flags and valuations for one matrix.

    The stratum fields are None when the matrix lies outside the cover
    variety (its determinant valuation is not nr).
    """

    in_Xr: bool
    divisors: Cochar
    stratum_index: int | None
    val_b: int
    val_c: int
    pred_val_i: int | None
    deepest_closure_i: int | None

    def to_obj(self):
        return {
            "in_Xr": self.in_Xr,
            "divisors": list(self.divisors.exponents),
            "stratum_index": self.stratum_index,
            "val_b": self.val_b,
            "val_c": self.val_c,
            "pred_val_i": self.pred_val_i,
            "deepest_closure_i": self.deepest_closure_i,
        }


def classify(A, r):
    """Full stratum report for a matrix over W_{nr+1}."""
    n = A.n
    nr = n * r
    if A.ring.N != nr + 1:
        raise ParameterMismatchError(
            f"ring length N={A.ring.N} but height r={r} requires N={nr + 1}")
    div = divisor_type(A)
    member = div.total == nr
    val_b = A.corner_entry().valuation()
    val_c = A.corner_minor().valuation()
    if member:
        a = nr - div.exponents[0]
        pred_i = None
        deep_i = None
        for i in range(nr // 2 + 1):
            if valuation_predicate(A, i):
                pred_i = i
            if div.exponents[0] <= nr - i:
                deep_i = i
        return StratumReport(in_Xr=True, divisors=div, stratum_index=a,
                             val_b=val_b, val_c=val_c,
                             pred_val_i=pred_i, deepest_closure_i=deep_i)
    return StratumReport(in_Xr=False, divisors=div, stratum_index=None,
                         val_b=val_b, val_c=val_c,
                         pred_val_i=None, deepest_closure_i=None)
