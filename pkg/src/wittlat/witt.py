"""Truncated Witt vector arithmetic: the ring W_N(F_{p^m}).

Elements are stored as residues in the unramified extension
(Z/p^N)[x]/(Phi), where Phi is the Teichmueller lift of the field modulus
(the unique monic lift dividing x^{p^m} - x mod p^N).  With that modulus
the Frobenius automorphism is simply x -> x^p, and the Teichmueller lift
of a residue is computed by q^(N-1)-power stabilization.

The standard Witt digit view is computed on demand.  An element decomposes
as sum_i p^i xi(b_i) with b_i in F_{p^m}; the stored digits are the Witt
coordinates a_i = b_i^(p^i), so that the element equals
sum_i xi(a_i)^(p^-i) p^i.  For m = 1 the two views coincide and the whole
ring is Z/p^N under the integer codec.
"""

import threading

from .errors import CodecUnsupportedError, NotAUnitError, RingMismatchError
from .field import FieldDescriptor

_RING_CACHE = {}
_RING_LOCK = threading.Lock()


def witt_ring(p, N, m=1, modulus=None):
    """Shared-instance constructor for W_N(F_{p^m})."""
    key = (p, N, m, tuple(modulus) if modulus is not None else None)
    ring = _RING_CACHE.get(key)
    if ring is None:
        with _RING_LOCK:
            ring = _RING_CACHE.get(key)
            if ring is None:
                ring = WittRing(p, N, m, modulus)
                _RING_CACHE[key] = ring
    return ring


def _int_val(c, p, N):
    if c == 0:
        return N
    v = 0
    while c % p == 0:
        c //= p
        v += 1
    return v


class WittRing:
    """Descriptor and operation table for W_N(F_{p^m})."""

    __slots__ = ("field", "p", "m", "N", "pN", "key", "phi",
                 "_frob_images", "_frob_inv_images", "zero", "one")

    def __init__(self, p, N, m=1, modulus=None):
        if N < 1:
            raise ValueError("length N must be >= 1")
        self.field = FieldDescriptor(p, m, modulus)
        self.p = p
        self.m = m
        self.N = N
        self.pN = p ** N
        self.key = (p, m, N, self.field.modulus)
        if m == 1:
            self.phi = None
            self._frob_images = None
            self._frob_inv_images = None
        else:
            self.phi = self._lift_modulus()
            self._frob_images = self._frobenius_basis()
            self._frob_inv_images = self._frobenius_inv_basis()
        self.zero = WittElem._make(self, (0,) * m)
        self.one = WittElem._make(self, (1,) + (0,) * (m - 1))

    def __eq__(self, other):
        return isinstance(other, WittRing) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"WittRing(p={self.p}, m={self.m}, N={self.N})"

    # -- modulus lifting -----------------------------------------------------

    def _lift_modulus(self):
        """Phi = prod over the Frobenius orbit of (X - tau), tau the
        Teichmueller lift of the field generator in a scratch quotient."""
        p, m, N, pN = self.p, self.m, self.N, self.pN
        f0 = tuple(int(c) for c in self.field.modulus)  # naive monic lift

        def mul0(a, b):
            out = [0] * (2 * m - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] = (out[i + j] + ai * bj) % pN
            for k in range(2 * m - 2, m - 1, -1):
                c = out[k]
                if c:
                    for j in range(m):
                        out[k - m + j] = (out[k - m + j] - c * f0[j]) % pN
                    out[k] = 0
            return tuple(out[:m])

        def pow0(a, e):
            result = (1,) + (0,) * (m - 1)
            while e:
                if e & 1:
                    result = mul0(result, a)
                a = mul0(a, a)
                e >>= 1
            return result

        gen = (0, 1) + (0,) * (m - 2)
        tau = pow0(gen, self.field.q ** (N - 1))
        roots = [tau]
        for _ in range(m - 1):
            roots.append(pow0(roots[-1], p))
        # expand prod (X - root) with coefficients in the scratch quotient
        zero0 = (0,) * m
        poly = [(1,) + (0,) * (m - 1)]
        for rt in roots:
            neg_rt = tuple((-c) % pN for c in rt)
            new = [zero0] * (len(poly) + 1)
            for k, co in enumerate(poly):
                new[k + 1] = tuple((new[k + 1][j] + co[j]) % pN for j in range(m))
                prod = mul0(co, neg_rt)
                new[k] = tuple((new[k][j] + prod[j]) % pN for j in range(m))
            poly = new
        phi = []
        for co in poly:
            if any(co[1:]):
                raise RuntimeError("modulus lift produced non-scalar coefficient")
            phi.append(co[0])
        if tuple(c % p for c in phi) != self.field.modulus:
            raise RuntimeError("modulus lift does not reduce to the field modulus")
        return tuple(phi)

    def _reduce_poly(self, out):
        # out: coefficient list of length 2m-1, reduced mod the lifted modulus
        m, pN, phi = self.m, self.pN, self.phi
        for k in range(2 * m - 2, m - 1, -1):
            c = out[k]
            if c:
                for j in range(m):
                    out[k - m + j] = (out[k - m + j] - c * phi[j]) % pN
                out[k] = 0
        return tuple(out[:m])

    def _poly_mul(self, a, b):
        m, pN = self.m, self.pN
        out = [0] * (2 * m - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % pN
        return self._reduce_poly(out)

    def _frobenius_basis(self):
        """Images of the power basis under x -> x^p."""
        xp = self._poly_pow((0, 1) + (0,) * (self.m - 2), self.p)
        images = [(1,) + (0,) * (self.m - 1)]
        for _ in range(self.m - 1):
            images.append(self._poly_mul(images[-1], xp))
        return tuple(images)

    def _frobenius_inv_basis(self):
        m = self.m
        images = [tuple(int(i == k) for i in range(m)) for k in range(m)]
        for _ in range(m - 1):
            images = [self._apply_linear(img, self._frob_images) for img in images]
        return tuple(images)

    def _apply_linear(self, coeffs, images):
        m, pN = self.m, self.pN
        out = [0] * m
        for k, c in enumerate(coeffs):
            if c:
                img = images[k]
                for j in range(m):
                    out[j] = (out[j] + c * img[j]) % pN
        return tuple(out)

    def _poly_pow(self, a, e):
        result = (1,) + (0,) * (self.m - 1)
        while e:
            if e & 1:
                result = self._poly_mul(result, a)
            a = self._poly_mul(a, a)
            e >>= 1
        return result

    # -- element construction --------------------------------------------------

    def from_coeffs(self, coeffs):
        if isinstance(coeffs, int):
            return self.from_int(coeffs)
        coeffs = tuple(int(c) % self.pN for c in coeffs)
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients")
        return WittElem._make(self, coeffs)

    def from_int(self, k):
        """Canonical map Z -> W_N (an isomorphism onto Z/p^N for m = 1)."""
        return WittElem._make(self, (k % self.pN,) + (0,) * (self.m - 1))

    def p_power(self, e):
        if e < 0:
            raise ValueError("negative p-power exponent")
        return self.from_int(pow(self.p, e)) if e < self.N else self.zero

    def teichmuller(self, a):
        """The multiplicative representative of a field element."""
        a = self.field.elem(a)
        if self.m == 1:
            return WittElem._make(self, (pow(a[0], self.p ** (self.N - 1), self.pN),))
        lift = tuple(a)
        return WittElem._make(self, self._poly_pow(lift, self.field.q ** (self.N - 1)))

    def from_digits(self, digits):
        """Inverse of WittElem.digits(): sum_i xi(a_i)^(p^-i) p^i."""
        digits = [self.field.elem(d) for d in digits]
        if len(digits) != self.N:
            raise ValueError(f"expected {self.N} digits")
        fld = self.field
        acc = self.zero
        for i, a in enumerate(digits):
            if not any(a):
                continue
            b = a
            for _ in range(i % self.m if self.m > 1 else 0):
                b = fld.frobenius_inv(b)
            term = self.teichmuller(b)
            pe = self.p_power(i)
            acc = acc + term * pe
        return acc

    def random(self, rng):
        return WittElem._make(self, tuple(rng.randrange(self.pN) for _ in range(self.m)))

    def random_unit(self, rng):
        # unit iff the residue is nonzero; resample just the residue part
        while True:
            a = self.random(rng)
            if a.is_unit():
                return a

    def random_multiple_of_p(self, rng):
        p = self.p
        return WittElem._make(
            self, tuple(p * rng.randrange(self.pN // p) % self.pN for _ in range(self.m)))

    def divide_exact(self, a, b):
        """Some q with q*b == a, assuming valuation(a) >= valuation(b) > -1.

        Quotients are only defined up to the annihilator of b; any solution
        is returned, which is all elimination algorithms need.
        """
        v = b.valuation()
        if v >= self.N:
            raise ZeroDivisionError("division by zero in W_N")
        if a.valuation() < v:
            raise ValueError("exact division requires valuation(a) >= valuation(b)")
        pv = self.p ** v
        unit = WittElem._make(self, tuple(c // pv for c in b.coeffs))
        shifted = WittElem._make(self, tuple(c // pv for c in a.coeffs))
        return shifted * unit.inverse()


class WittElem:
    """Immutable element of a WittRing."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        if not isinstance(ring, WittRing):
            raise TypeError("ring must be a WittRing")
        self.ring = ring
        self.coeffs = tuple(int(c) % ring.pN for c in coeffs)
        if len(self.coeffs) != ring.m:
            raise ValueError(f"expected {ring.m} coefficients")

    @classmethod
    def _make(cls, ring, coeffs):
        self = object.__new__(cls)
        self.ring = ring
        self.coeffs = coeffs
        return self

    def _common_ring(self, other):
        ra = self.ring
        if not isinstance(other, WittElem):
            raise TypeError(f"cannot combine WittElem with {type(other).__name__}")
        rb = other.ring
        if ra is rb or ra.key == rb.key:
            return ra
        raise RingMismatchError(f"ring mismatch: {ra} vs {rb}")

    # -- ring operations --------------------------------------------------------

    def __add__(self, other):
        ring = self._common_ring(other)
        if ring.m == 1:
            return WittElem._make(ring, ((self.coeffs[0] + other.coeffs[0]) % ring.pN,))
        pN = ring.pN
        return WittElem._make(
            ring, tuple((x + y) % pN for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        ring = self._common_ring(other)
        if ring.m == 1:
            return WittElem._make(ring, ((self.coeffs[0] - other.coeffs[0]) % ring.pN,))
        pN = ring.pN
        return WittElem._make(
            ring, tuple((x - y) % pN for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        ring = self.ring
        pN = ring.pN
        return WittElem._make(ring, tuple((-x) % pN for x in self.coeffs))

    def __mul__(self, other):
        ring = self._common_ring(other)
        if ring.m == 1:
            return WittElem._make(ring, ((self.coeffs[0] * other.coeffs[0]) % ring.pN,))
        return WittElem._make(ring, ring._poly_mul(self.coeffs, other.coeffs))

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        ring = self.ring
        if ring.m == 1:
            return WittElem._make(ring, (pow(self.coeffs[0], e, ring.pN),))
        result = ring.one
        acc = self
        while e:
            if e & 1:
                result = result * acc
            acc = acc * acc
            e >>= 1
        return result

    def inverse(self):
        ring = self.ring
        if not self.is_unit():
            raise NotAUnitError(f"{self!r} is not a unit")
        if ring.m == 1:
            return WittElem._make(ring, (pow(self.coeffs[0], -1, ring.pN),))
        # Newton lift of the residue-field inverse
        fld = ring.field
        y = ring.from_coeffs(fld.inv(self.residue()))
        two = ring.from_int(2)
        steps = max(1, (ring.N - 1).bit_length() + 1)
        for _ in range(steps):
            y = y * (two - self * y)
        if (self * y) != ring.one:
            raise RuntimeError("inverse lift failed to converge")
        return y

    def __eq__(self, other):
        if not isinstance(other, WittElem):
            return NotImplemented
        return self.ring.key == other.ring.key and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ring.key, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        ring = self.ring
        if ring.m == 1:
            return f"W({self.coeffs[0]} mod {ring.p}^{ring.N})"
        return f"W({list(self.coeffs)} mod {ring.p}^{ring.N}, m={ring.m})"

    # -- structure maps ---------------------------------------------------------

    def is_zero(self):
        return not any(self.coeffs)

    def is_unit(self):
        p = self.ring.p
        return any(c % p for c in self.coeffs)

    def valuation(self):
        """Index of the first nonzero Witt digit; N for the zero element."""
        ring = self.ring
        if ring.m == 1:
            return _int_val(self.coeffs[0], ring.p, ring.N)
        return min(_int_val(c, ring.p, ring.N) for c in self.coeffs)

    def residue(self):
        p = self.ring.p
        return tuple(c % p for c in self.coeffs)

    def frobenius(self):
        """The lift of the field Frobenius; raises each digit to the p-th power."""
        ring = self.ring
        if ring.m == 1:
            return self
        return WittElem._make(ring, ring._apply_linear(self.coeffs, ring._frob_images))

    def verschiebung(self):
        """Digit right-shift; equals p * frobenius^{-1}."""
        ring = self.ring
        if ring.m == 1:
            return WittElem._make(ring, ((self.coeffs[0] * ring.p) % ring.pN,))
        shifted = ring._apply_linear(self.coeffs, ring._frob_inv_images)
        p, pN = ring.p, ring.pN
        return WittElem._make(ring, tuple((c * p) % pN for c in shifted))

    def teichmuller_digits(self):
        """Digits (b_0, ..., b_{N-1}) of the plain expansion sum p^i xi(b_i)."""
        ring = self.ring
        p, N, pN = ring.p, ring.N, ring.pN
        if ring.m == 1:
            c = self.coeffs[0]
            out = []
            texp = p ** (N - 1)
            for _ in range(N):
                b = c % p
                if b:
                    c = (c - pow(b, texp, pN)) % pN
                out.append((b,))
                c //= p
            return tuple(out)
        z = self
        out = []
        for _ in range(N):
            b = z.residue()
            if any(b):
                z = z - ring.teichmuller(b)
            z = WittElem._make(ring, tuple(c // p for c in z.coeffs))
            out.append(b)
        return tuple(out)

    def digits(self):
        """Standard Witt coordinates (a_0, ..., a_{N-1}), a_i = b_i^(p^i)."""
        ring = self.ring
        raw = self.teichmuller_digits()
        if ring.m == 1:
            return raw
        fld = ring.field
        out = []
        for i, b in enumerate(raw):
            a = b
            for _ in range(i % ring.m):
                a = fld.frobenius(a)
            out.append(a)
        return tuple(out)

    def to_int(self):
        """Integer codec W_N(F_p) = Z/p^N; only defined for m = 1."""
        if self.ring.m != 1:
            raise CodecUnsupportedError("integer codec requires m = 1")
        return self.coeffs[0]


# -- JSON codec ------------------------------------------------------------------

def elem_to_obj(a):
    """JSON object for a WittElem: digit arrays of field coefficients."""
    ring = a.ring
    return {
        "p": ring.p,
        "m": ring.m,
        "N": ring.N,
        "digits": [list(d) for d in a.digits()],
    }


def elem_from_obj(obj):
    ring = witt_ring(int(obj["p"]), int(obj["N"]), int(obj["m"]))
    digits = obj["digits"]
    if len(digits) != ring.N:
        raise ValueError(f"expected {ring.N} digits")
    return ring.from_digits(digits)
