"""Exact arithmetic in Z, Z/n, and small dense matrix rings over them.

Rings are described by immutable ``RingSpec`` values and populated by
immutable ``Element`` values.  Every operation returns a fresh element, so
everything in this module is safe to share across threads.  All arithmetic
is integer arithmetic: residues are kept canonical in ``[0, n)`` and matrix
entries over Z use Python's arbitrary precision integers.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator


class RingError(Exception):
    """Base class for errors raised by this package."""


class RingMismatchError(RingError):
    """Operands live in different rings."""


class InfiniteRingError(RingError):
    """An enumeration or exhaustive scan was requested on an infinite ring."""


class UnsupportedRingError(RingError):
    """The requested quantity is not defined for this ring kind."""


class PreconditionError(RingError):
    """A documented precondition of an operation does not hold."""


class VerificationError(RingError):
    """A runtime self-check failed after a construction; indicates a defect."""


_INTEGERS = "integers"
_MODULAR = "modular"
_MATRIX = "matrix"


@dataclass(frozen=True)
class RingSpec:
    """Descriptor of a supported ring: Z, Z/n, or k-by-k matrices over one of those.

    Matrix rings nest exactly one level deep; entries are always plain
    integers or residues.  The trivial ring (modulus 1) is rejected.
    """

    kind: str
    n: int = 0
    base: "RingSpec | None" = None
    dim: int = 0

    def __post_init__(self) -> None:
        if self.kind == _INTEGERS:
            if self.n or self.base is not None or self.dim:
                raise ValueError("the integer ring takes no parameters")
        elif self.kind == _MODULAR:
            if self.base is not None or self.dim:
                raise ValueError("a modular ring takes only a modulus")
            if self.n < 2:
                raise ValueError("modulus must be at least 2; the trivial ring is not supported")
        elif self.kind == _MATRIX:
            if self.n:
                raise ValueError("a matrix ring takes a base ring and a dimension")
            if self.base is None or self.base.kind == _MATRIX:
                raise ValueError("matrix entries must come from Z or Z/n")
            if self.dim < 1:
                raise ValueError("matrix dimension must be at least 1")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @property
    def is_matrix(self) -> bool:
        return self.kind == _MATRIX

    @property
    def scalar_base(self) -> "RingSpec":
        """The ring the entries live in (self for scalar rings)."""
        return self.base if self.kind == _MATRIX else self

    @property
    def modulus(self) -> int | None:
        """The scalar modulus, or None over the integers."""
        sb = self.scalar_base
        return sb.n if sb.kind == _MODULAR else None

    @property
    def is_finite(self) -> bool:
        return self.modulus is not None

    def size(self) -> int:
        if not self.is_finite:
            raise InfiniteRingError(f"{self} is infinite")
        if self.kind == _MODULAR:
            return self.n
        return self.base.n ** (self.dim * self.dim)

    def element(self, payload) -> "Element":
        """Build an element from an integer or a row-major array of integers."""
        return Element(self, payload)

    def zero(self) -> "Element":
        if self.is_matrix:
            k = self.dim
            return Element(self, tuple((0,) * k for _ in range(k)))
        return Element(self, 0)

    def one(self) -> "Element":
        if self.is_matrix:
            k = self.dim
            return Element(self, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))
        return Element(self, 1)

    def elements(self) -> Iterator["Element"]:
        """Yield every element exactly once, in a fixed lexicographic order."""
        if not self.is_finite:
            raise InfiniteRingError(f"cannot enumerate {self}")
        n = self.modulus
        if not self.is_matrix:
            for v in range(n):
                yield Element(self, v)
            return
        k = self.dim
        for flat in itertools.product(range(n), repeat=k * k):
            yield Element(self, tuple(flat[r * k:(r + 1) * k] for r in range(k)))

    def element_at(self, index: int) -> "Element":
        """Random access into the ``elements()`` order (mixed-radix decode)."""
        size = self.size()
        if not 0 <= index < size:
            raise IndexError(f"index {index} out of range for {self} of size {size}")
        if not self.is_matrix:
            return Element(self, index)
        n = self.base.n
        k = self.dim
        digits = []
        v = index
        for _ in range(k * k):
            v, d = divmod(v, n)
            digits.append(d)
        digits.reverse()
        return Element(self, tuple(tuple(digits[r * k:(r + 1) * k]) for r in range(k)))

    def __str__(self) -> str:
        if self.kind == _INTEGERS:
            return "Z"
        if self.kind == _MODULAR:
            return f"Z/{self.n}"
        return f"M{self.dim}({self.base})"


Z = RingSpec(_INTEGERS)


def modular(n: int) -> RingSpec:
    return RingSpec(_MODULAR, n=n)


def matrix(base: RingSpec, dim: int) -> RingSpec:
    return RingSpec(_MATRIX, base=base, dim=dim)


def _entry(v) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"matrix entries must be integers, got {v!r}")
    return v


@dataclass(frozen=True)
class Element:
    """An immutable ring element; payload is an int or a tuple of row tuples.

    Payloads are reduced to canonical form on construction, so equality and
    hashing are plain structural comparisons.
    """

    ring: RingSpec
    payload: "int | tuple[tuple[int, ...], ...]"

    def __post_init__(self) -> None:
        ring = self.ring
        if ring.is_matrix:
            k = ring.dim
            try:
                rows = tuple(tuple(_entry(v) for v in row) for row in self.payload)
            except TypeError:
                raise ValueError(f"{ring} elements need a {k}x{k} array payload") from None
            if len(rows) != k or any(len(row) != k for row in rows):
                raise ValueError(f"{ring} elements need a {k}x{k} array payload")
            m = ring.modulus
            if m is not None:
                rows = tuple(tuple(v % m for v in row) for row in rows)
            object.__setattr__(self, "payload", rows)
        else:
            v = self.payload
            if isinstance(v, bool) or not isinstance(v, int):
                raise ValueError(f"{ring} elements need an integer payload, got {v!r}")
            if ring.kind == _MODULAR:
                v %= ring.n
            object.__setattr__(self, "payload", v)

    def _require_same_ring(self, other: "Element") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"mixed rings: {self.ring} and {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_ring(other)
        if self.ring.is_matrix:
            rows = tuple(
                tuple(x + y for x, y in zip(r, s))
                for r, s in zip(self.payload, other.payload)
            )
            return Element(self.ring, rows)
        return Element(self.ring, self.payload + other.payload)

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_ring(other)
        if self.ring.is_matrix:
            rows = tuple(
                tuple(x - y for x, y in zip(r, s))
                for r, s in zip(self.payload, other.payload)
            )
            return Element(self.ring, rows)
        return Element(self.ring, self.payload - other.payload)

    def __neg__(self):
        return self * -1

    def _scale(self, c: int) -> "Element":
        if self.ring.is_matrix:
            return Element(self.ring, tuple(tuple(c * v for v in row) for row in self.payload))
        return Element(self.ring, c * self.payload)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self._scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        self._require_same_ring(other)
        if self.ring.is_matrix:
            k = self.ring.dim
            a, b = self.payload, other.payload
            rows = tuple(
                tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k))
                for i in range(k)
            )
            return Element(self.ring, rows)
        return Element(self.ring, self.payload * other.payload)

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self._scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Element":
        """Square-and-multiply; exponent 0 gives the identity."""
        if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __str__(self) -> str:
        if self.ring.is_matrix:
            return "[" + ",".join(
                "[" + ",".join(str(v) for v in row) + "]" for row in self.payload
            ) + "]"
        return str(self.payload)

    def __repr__(self) -> str:
        return f"Element({self.ring}, {self})"


def is_idempotent(x: Element) -> bool:
    return x * x == x


def is_tripotent(x: Element) -> bool:
    return x * x * x == x


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as ascending (prime, exponent) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        primes = [p for p, _ in self.pairs]
        if primes != sorted(set(primes)) or any(e < 1 for _, e in self.pairs):
            raise ValueError("factorization pairs must be ascending with positive exponents")

    @property
    def n(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p ** e
        return out

    @property
    def max_exponent(self) -> int:
        return max(e for _, e in self.pairs)


def factorize(n: int) -> Factorization:
    """Trial-division factorization; fine for the modulus sizes used here."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError("factorize needs an integer n >= 2")
    pairs = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            pairs.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        pairs.append((rest, 1))
    return Factorization(tuple(pairs))


@dataclass(frozen=True)
class NilpotencyWitness:
    """Minimal index m >= 1 with x^m = 0."""

    index: int


def nilpotency_bound(ring: RingSpec) -> int:
    """An exponent B such that x in the ring is nilpotent iff x^B = 0.

    Z/n: the largest prime exponent e of n (x nilpotent iff rad(n) | x, and
    then x^e covers every prime power).  Matrices over Z: the dimension k,
    by Cayley-Hamilton.  Matrices over Z/n: k*e, because x^k vanishes mod
    rad(n) and stacking e such products clears every prime power of n.
    """
    if ring.kind == _MODULAR:
        return factorize(ring.n).max_exponent
    if ring.kind == _MATRIX:
        if ring.base.kind == _INTEGERS:
            return ring.dim
        return ring.dim * factorize(ring.base.n).max_exponent
    raise UnsupportedRingError("Z has no finite nilpotency bound; only 0 is nilpotent there")


def is_nilpotent(x: Element) -> NilpotencyWitness | None:
    """Return a witness holding the minimal vanishing exponent, or None."""
    ring = x.ring
    zero = ring.zero()
    if ring.kind == _INTEGERS:
        return NilpotencyWitness(1) if x == zero else None
    bound = nilpotency_bound(ring)
    power = x
    for m in range(1, bound + 1):
        if power == zero:
            return NilpotencyWitness(m)
        if m < bound:
            power = power * x
    return None


def inverse_of_unipotent(u: Element, witness: NilpotencyWitness | None = None) -> Element:
    """Invert u = 1 + w with w nilpotent via the finite alternating series.

    With w^m = 0 the inverse is 1 - w + w^2 - ... +- w^(m-1).  The product
    is re-checked; a failure means the supplied witness was wrong.
    """
    one = u.ring.one()
    w = u - one
    if witness is None:
        witness = is_nilpotent(w)
        if witness is None:
            raise PreconditionError(f"{u} is not unipotent: u - 1 is not nilpotent")
    acc = one
    power = one
    for j in range(1, witness.index):
        power = power * w
        acc = acc - power if j % 2 else acc + power
    if u * acc != one or acc * u != one:
        raise VerificationError("unipotent inversion failed; the nilpotency witness is invalid")
    return acc


def _int_matmul(a: list, b: list, k: int) -> list:
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k)] for i in range(k)]


def char_poly(x: Element) -> tuple[int, ...]:
    """Coefficients of det(tI - x), constant term first, leading term 1.

    Computed exactly over Z with the Faddeev-LeVerrier recurrence (the
    divisions by 1..k are exact integers), then reduced in the entry ring.
    """
    if not x.ring.is_matrix:
        raise PreconditionError("char_poly needs a matrix element")
    k = x.ring.dim
    a = [list(row) for row in x.payload]
    m = [[int(i == j) for j in range(k)] for i in range(k)]
    desc = [1]
    for j in range(1, k + 1):
        am = _int_matmul(a, m, k)
        tr = sum(am[i][i] for i in range(k))
        q, r = divmod(-tr, j)
        if r:
            raise VerificationError("characteristic polynomial recurrence lost exactness")
        desc.append(q)
        m = [[am[i][l] + (q if i == l else 0) for l in range(k)] for i in range(k)]
    coeffs = list(reversed(desc))
    mod = x.ring.modulus
    if mod is not None:
        coeffs = [c % mod for c in coeffs]
    return tuple(coeffs)


def det(x: Element) -> int:
    """Exact determinant, reduced in the entry ring."""
    c0 = char_poly(x)[0]
    d = c0 if x.ring.dim % 2 == 0 else -c0
    mod = x.ring.modulus
    return d % mod if mod is not None else d


def is_unit(x: Element) -> bool:
    """Two-sided invertibility: gcd with the modulus, or det = +-1 over Z."""
    ring = x.ring
    if ring.kind == _MODULAR:
        return math.gcd(x.payload, ring.n) == 1
    if ring.kind == _INTEGERS:
        return x.payload in (1, -1)
    if ring.base.kind == _INTEGERS:
        return det(x) in (1, -1)
    return math.gcd(det(x), ring.base.n) == 1
