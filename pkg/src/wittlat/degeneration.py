"""Executable degeneration witnesses between orbit strata.

The basic move replaces a pair of diagonal exponents (r1, rj) by
(r1+b, rj-b).  It is witnessed by an exact 2x2 identity: the deformed
matrix with diagonal (p^{r1}, p^{rj}) and corner entry p^{rj-b} xi(t)
factors as u1 * diag(p^{r1+b}, p^{rj-b}) * u2 * u3 with unipotent
u1, u2, u3, for every nonzero t.  Chains of such moves certify any
dominance relation between exponent vectors of equal total.
"""

from dataclasses import dataclass

from .matrix import WittMat, identity, p_power_diagonal
from .snf import Cochar
from .strata import dominance_leq


def deformation_matrix(ring, exponents, j, b, t, i=0):
    """diag(p^{e_0}, ..., p^{e_{n-1}}) plus the entry p^{e_j - b} xi(t) at (j, i).

    Requires t != 0 and 0 <= b <= e_j.  Dominance of the exponent vector is
    the caller's responsibility.
    """
    t = ring.field.elem(t)
    if not any(t):
        raise ValueError("parameter t must be nonzero")
    n = len(exponents)
    if not 0 <= i < j < n:
        raise ValueError("need 0 <= i < j < n")
    if not 0 <= b <= exponents[j]:
        raise ValueError("need 0 <= b <= exponents[j]")
    rows = [list(r) for r in p_power_diagonal(ring, exponents).rows]
    rows[j][i] = ring.p_power(exponents[j] - b) * ring.teichmuller(t)
    return WittMat._make(ring, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class TransferWitness:
    """Verified four-factor decomposition of the 2x2 deformation matrix.

    factors[0] * factors[1] * factors[2] * factors[3] == target, exactly,
    where factors[1] = diag(p^{r1+b}, p^{rj-b}) and the other three are
    unipotent.
    """

    r1: int
    rj: int
    b: int
    t: tuple
    factors: tuple
    target: WittMat

    @property
    def upper_exponents(self):
        return (self.r1 + self.b, self.rj - self.b)


def transfer_witness(ring, r1, rj, b, t):
    """Construct and verify the four-factor identity for given parameters.

    Preconditions: t != 0, 0 <= b <= rj, and r1 + b >= rj so the first
    factor's entry lies in the ring.
    """
    t = ring.field.elem(t)
    if not any(t):
        raise ValueError("parameter t must be nonzero")
    if r1 < 0 or rj < 0:
        raise ValueError("exponents must be nonnegative")
    if not 0 <= b <= rj:
        raise ValueError("need 0 <= b <= rj")
    if r1 + b - rj < 0:
        raise ValueError("need r1 + b >= rj")
    xi = ring.teichmuller(t)
    xi_inv = ring.teichmuller(ring.field.inv(t))
    one, zero = ring.one, ring.zero
    pb_minus_1 = ring.p_power(b) - one
    f0 = WittMat._make(ring, (
        (one, -(ring.p_power(r1 + b - rj) * pb_minus_1 * xi_inv)),
        (zero, one)))
    f1 = p_power_diagonal(ring, (r1 + b, rj - b))
    f2 = WittMat._make(ring, ((one, zero), (xi, one)))
    f3 = WittMat._make(ring, ((one, pb_minus_1 * xi_inv), (zero, one)))
    target = deformation_matrix(ring, (r1, rj), 1, b, t)
    product = f0 * f1 * f2 * f3
    if product != target:
        raise RuntimeError("four-factor product identity failed")
    return TransferWitness(r1=r1, rj=rj, b=b, t=t,
                           factors=(f0, f1, f2, f3), target=target)


def _embed2(ring, block, n, i, j):
    rows = [list(r) for r in identity(ring, n).rows]
    rows[i][i] = block.rows[0][0]
    rows[i][j] = block.rows[0][1]
    rows[j][i] = block.rows[1][0]
    rows[j][j] = block.rows[1][1]
    return WittMat._make(ring, tuple(tuple(r) for r in rows))


def embed_witness(w, n, j, ambient, i=0):
    """Place the 2x2 witness into slots (i, j) of an n x n ambient diagonal.

    Returns (x, eta_prime, y) with x * eta_prime * y^{-1} equal to the
    embedded deformation matrix; x and y are invertible.
    """
    ring = w.target.ring
    ambient = tuple(int(e) for e in ambient)
    if len(ambient) != n:
        raise ValueError("ambient exponent vector must have length n")
    if not 0 <= i < j < n:
        raise ValueError("need 0 <= i < j < n")
    if ambient[i] != w.r1 or ambient[j] != w.rj:
        raise ValueError("ambient slots must carry the witness exponents")
    upper = list(ambient)
    upper[i], upper[j] = w.r1 + w.b, w.rj - w.b
    x = _embed2(ring, w.factors[0], n, i, j)
    eta_prime = p_power_diagonal(ring, upper)
    y_inv = _embed2(ring, w.factors[2] * w.factors[3], n, i, j)
    y = _embed2(ring, (w.factors[2] * w.factors[3]).inverse(), n, i, j)
    eta = deformation_matrix(ring, ambient, j, w.b, w.t, i)
    if x * eta_prime * y_inv != eta:
        raise RuntimeError("embedded witness product check failed")
    if y * y_inv != identity(ring, n):
        raise RuntimeError("embedded witness inverse check failed")
    return x, eta_prime, y


@dataclass(frozen=True)
class ChainStep:
    """One single-unit transfer: `lower` lies in the closure of the orbit
    of `upper`, witnessed at the chosen parameter t."""

    upper: Cochar
    lower: Cochar
    i: int
    j: int
    b: int
    witness: TransferWitness
    x: WittMat
    eta_prime: WittMat
    y: WittMat
    deformed: WittMat


def _transfer_slots(cur, tgt):
    d = next(k for k in range(len(cur)) if cur[k] != tgt[k])
    i_star = d
    while i_star + 1 < len(cur) and cur[i_star + 1] == cur[d]:
        i_star += 1
    j = next(k for k in range(len(cur)) if cur[k] < tgt[k])
    return i_star, j


def degeneration_chain(ring, src, dst, t=None):
    """Single-unit transfer steps taking `dst` down to `src`.

    Requires dominance_leq(src, dst) and equal totals; the empty list is
    returned iff src == dst.  Every step carries a verified embedded
    witness at parameter t (default 1).
    """
    if not dominance_leq(src, dst):
        raise ValueError("source must be dominated by destination")
    if ring.N < dst.total + 1:
        raise ValueError("ring length must exceed the exponent total")
    if t is None:
        t = ring.field.one
    n = src.n
    steps = []
    cur = list(dst.exponents)
    tgt = src.exponents
    while tuple(cur) != tgt:
        i, j = _transfer_slots(cur, tgt)
        lower = list(cur)
        lower[i] -= 1
        lower[j] += 1
        w = transfer_witness(ring, lower[i], lower[j], 1, t)
        x, eta_prime, y = embed_witness(w, n, j, tuple(lower), i)
        steps.append(ChainStep(
            upper=Cochar(n, tuple(cur)), lower=Cochar(n, tuple(lower)),
            i=i, j=j, b=1, witness=w, x=x, eta_prime=eta_prime, y=y,
            deformed=deformation_matrix(ring, tuple(lower), j, 1, t, i)))
        cur = lower
    return steps
