"""Drazin, strongly Drazin, and Hirano inverses with checkable certificates.

For a candidate inverse b of a, all three notions share ab = ba and
bab = b and differ only in which defect must be nilpotent:

    Drazin           a - a^2 b
    strongly Drazin  a - a b
    Hirano           a^2 - a b

Existence is decided by polynomial criteria: a has a Hirano inverse iff
a - a^3 is nilpotent, and a strongly Drazin inverse iff a - a^2 is
nilpotent.  Constructions go through idempotent lifting and unipotent
inversion, and every certificate re-verifies its defining equations before
it is returned.  Brute-force scans over whole rings are provided as
independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lifting import (
    LiftedIdempotent,
    PolynomialCertificate,
    lift_idempotent,
    poly_compose,
    poly_sub,
)
from .rings import (
    Element,
    InfiniteRingError,
    NilpotencyWitness,
    PreconditionError,
    RingMismatchError,
    RingSpec,
    VerificationError,
    is_nilpotent,
    inverse_of_unipotent,
)


@dataclass(frozen=True)
class HiranoCertificate:
    """b with ab = ba, bab = b, and nilpotent defect a^2 - ab."""

    a: Element
    b: Element
    defect: Element
    defect_witness: NilpotencyWitness


@dataclass(frozen=True)
class SDrazinCertificate:
    """b with ab = ba, bab = b, and nilpotent defect a - ab."""

    a: Element
    b: Element
    defect: Element
    defect_witness: NilpotencyWitness


@dataclass(frozen=True)
class DrazinCertificate:
    """b with ab = ba, bab = b, nilpotent defect a - a^2 b, and a^k = a^(k+1) b."""

    a: Element
    b: Element
    defect: Element
    defect_witness: NilpotencyWitness
    index: int


@dataclass(frozen=True)
class SemigroupProfile:
    """Minimal i >= 1 and period p >= 1 with a^(i+p) = a^i."""

    index: int
    period: int


def _axioms_shared(a: Element, b: Element) -> Element | None:
    """Return ab when ab = ba and bab = b hold, else None."""
    if a.ring != b.ring:
        raise RingMismatchError(f"mixed rings: {a.ring} and {b.ring}")
    ab = a * b
    if ab != b * a:
        return None
    if b * ab != b:
        return None
    return ab


def check_hirano(a: Element, b: Element) -> HiranoCertificate | None:
    """Certificate when b satisfies the Hirano equations for a, else None."""
    ab = _axioms_shared(a, b)
    if ab is None:
        return None
    defect = a * a - ab
    witness = is_nilpotent(defect)
    if witness is None:
        return None
    return HiranoCertificate(a, b, defect, witness)


def check_strongly_drazin(a: Element, b: Element) -> SDrazinCertificate | None:
    ab = _axioms_shared(a, b)
    if ab is None:
        return None
    defect = a - ab
    witness = is_nilpotent(defect)
    if witness is None:
        return None
    return SDrazinCertificate(a, b, defect, witness)


def _drazin_axioms(a: Element, b: Element) -> tuple[Element, NilpotencyWitness] | None:
    ab = _axioms_shared(a, b)
    if ab is None:
        return None
    defect = a - a * ab
    witness = is_nilpotent(defect)
    if witness is None:
        return None
    return defect, witness


def check_drazin(a: Element, b: Element, index: int) -> DrazinCertificate | None:
    found = _drazin_axioms(a, b)
    if found is None:
        return None
    defect, witness = found
    if index < 0 or a ** index != a ** (index + 1) * b:
        return None
    return DrazinCertificate(a, b, defect, witness, index)


def has_hirano(a: Element) -> bool:
    """Existence criterion: a - a^3 nilpotent."""
    return is_nilpotent(a - a ** 3) is not None


def has_strongly_drazin(a: Element) -> bool:
    """Existence criterion: a - a^2 nilpotent."""
    return is_nilpotent(a - a * a) is not None


def hirano(a: Element) -> HiranoCertificate:
    """Construct the Hirano inverse of a.

    Lift a^2 to an idempotent e (the defect a^2 - a^4 inherits nilpotency
    from a - a^3), write a^2 = e + w with w nilpotent, and take
    b = a * (1 + w)^-1 * e.  Everything in sight is a polynomial in a.
    """
    if is_nilpotent(a - a ** 3) is None:
        raise PreconditionError(f"{a!r} has no Hirano inverse: a - a^3 is not nilpotent")
    lifted = lift_idempotent(a * a)
    e = lifted.element
    w = a * a - e
    one = a.ring.one()
    b = a * (inverse_of_unipotent(one + w) * e)
    cert = check_hirano(a, b)
    if cert is None:
        raise VerificationError("constructed Hirano inverse failed its equations")
    return cert


def strongly_drazin(a: Element) -> SDrazinCertificate:
    """Construct the strongly Drazin inverse: b = e * (1 + ea - e)^-1 with e = lift(a)."""
    if is_nilpotent(a - a * a) is None:
        raise PreconditionError(
            f"{a!r} has no strongly Drazin inverse: a - a^2 is not nilpotent"
        )
    e = lift_idempotent(a).element
    one = a.ring.one()
    u = one + (e * a - e)
    b = e * inverse_of_unipotent(u)
    cert = check_strongly_drazin(a, b)
    if cert is None:
        raise VerificationError("constructed strongly Drazin inverse failed its equations")
    return cert


def semigroup_profile(a: Element) -> SemigroupProfile:
    """Minimal eventual period of the powers of a, by hashing the orbit."""
    if not a.ring.is_finite:
        raise InfiniteRingError(f"power orbits need a finite ring, not {a.ring}")
    seen: dict = {}
    power = a
    exponent = 1
    while power.payload not in seen:
        seen[power.payload] = exponent
        power = power * a
        exponent += 1
    first = seen[power.payload]
    return SemigroupProfile(index=first, period=exponent - first)


def drazin_finite(a: Element) -> DrazinCertificate:
    """Drazin inverse in a finite ring: b = a^(m-1) with m the first multiple
    of the period at least index + 1."""
    profile = semigroup_profile(a)
    i, p = profile.index, profile.period
    m = -((i + 1) // -p) * p
    b = a ** (m - 1)
    cert = check_drazin(a, b, index=i)
    if cert is None:
        raise VerificationError("power-formula Drazin inverse failed its equations")
    return cert


def _drazin_from_hirano(cert: HiranoCertificate) -> DrazinCertificate:
    """Over Z, a Hirano inverse is the Drazin inverse; find its index by search."""
    a, b = cert.a, cert.b
    bound = a.ring.dim if a.ring.is_matrix else 1
    for k in range(bound + 2):
        out = check_drazin(a, b, index=k)
        if out is not None:
            return out
    raise VerificationError("no Drazin index found for a verified Hirano inverse")


@dataclass(frozen=True)
class InverseReport:
    """Classification of one element.  has_drazin is None when undecided
    (non-Hirano integer matrices; the general integer-matrix Drazin inverse
    is out of scope)."""

    element: Element
    has_drazin: bool | None
    has_strongly_drazin: bool
    has_hirano: bool
    drazin: DrazinCertificate | None
    strongly_drazin: SDrazinCertificate | None
    hirano: HiranoCertificate | None


def classify(a: Element) -> InverseReport:
    hir = hirano(a) if has_hirano(a) else None
    sd = strongly_drazin(a) if has_strongly_drazin(a) else None
    ring = a.ring
    if ring.is_finite:
        dz: DrazinCertificate | None = drazin_finite(a)
        has_dz: bool | None = True
    elif hir is not None:
        dz = _drazin_from_hirano(hir)
        has_dz = True
    elif not ring.is_matrix:
        # over Z only 0 and +-1 are Drazin invertible, and those are Hirano
        dz, has_dz = None, False
    else:
        dz, has_dz = None, None
    if hir is not None and dz is not None and hir.b != dz.b:
        raise VerificationError("uniqueness failure: Hirano and Drazin inverses disagree")
    return InverseReport(
        element=a,
        has_drazin=has_dz,
        has_strongly_drazin=sd is not None,
        has_hirano=hir is not None,
        drazin=dz,
        strongly_drazin=sd,
        hirano=hir,
    )


@dataclass(frozen=True)
class TripotentDecomposition:
    """a = p + w with p^3 = p, w nilpotent, pw = wp, and p = e - f for
    commuting idempotents e and f.

    Certificates place p (and, when 2 is a unit, e and f) in Z[a].  Over Z
    the idempotent halves need not be integer polynomials in a, so e and f
    are populated only when (a^2 +- a)/2 are integer elements and their
    certificates stay None.
    """

    subject: Element
    tripotent: Element
    nilpotent_part: Element
    nilpotent_witness: NilpotencyWitness
    plus_idempotent: Element | None
    minus_idempotent: Element | None
    tripotent_certificate: PolynomialCertificate
    plus_certificate: PolynomialCertificate | None
    minus_certificate: PolynomialCertificate | None


def inverse_of_two(ring: RingSpec) -> int | None:
    """The integer residue acting as 1/2, or None when 2 is not a unit."""
    m = ring.modulus
    if m is None or m % 2 == 0:
        return None
    return (m + 1) // 2


def _half_exact(x: Element) -> Element | None:
    """x/2 over Z when every entry is even, else None."""
    if x.ring.is_matrix:
        if any(v % 2 for row in x.payload for v in row):
            return None
        return x.ring.element(tuple(tuple(v // 2 for v in row) for row in x.payload))
    if x.payload % 2:
        return None
    return x.ring.element(x.payload // 2)


def _validate_decomposition(d: TripotentDecomposition) -> None:
    a, p, w = d.subject, d.tripotent, d.nilpotent_part
    ok = p ** 3 == p and a == p + w and p * w == w * p
    if ok and d.plus_idempotent is not None:
        e, f = d.plus_idempotent, d.minus_idempotent
        ok = (
            e * e == e
            and f * f == f
            and e * f == f * e
            and p == e - f
        )
    if ok:
        for cert, target in (
            (d.tripotent_certificate, p),
            (d.plus_certificate, d.plus_idempotent),
            (d.minus_certificate, d.minus_idempotent),
        ):
            if cert is not None and cert.evaluate() != target:
                ok = False
                break
    if not ok:
        raise VerificationError("tripotent decomposition failed its own checks")


def tripotent_decomposition(a: Element) -> TripotentDecomposition:
    """Split a Hirano-invertible a as tripotent plus commuting nilpotent.

    When 2 is a unit, lift g = (a^2 + a)/2 and h = (a^2 - a)/2 to
    idempotents e and f; then p = e - f is tripotent and a - p is
    nilpotent.  Over Z the split is only available for exact tripotents
    (a = a^3), where p = a and w = 0.
    """
    witness3 = is_nilpotent(a - a ** 3)
    if witness3 is None:
        raise PreconditionError(f"{a!r} does not decompose: a - a^3 is not nilpotent")
    ring = a.ring
    inv2 = inverse_of_two(ring)
    if inv2 is None:
        if ring.is_finite:
            raise PreconditionError(f"2 is not a unit in {ring}")
        if a != a ** 3:
            raise PreconditionError(
                "over Z only exact tripotents (a = a^3) decompose; 2 is not a unit"
            )
        e = _half_exact(a * a + a)
        f = None if e is None else e - a
        decomp = TripotentDecomposition(
            subject=a,
            tripotent=a,
            nilpotent_part=ring.zero(),
            nilpotent_witness=NilpotencyWitness(1),
            plus_idempotent=e,
            minus_idempotent=f,
            tripotent_certificate=PolynomialCertificate((0, 1), a),
            plus_certificate=None,
            minus_certificate=None,
        )
        _validate_decomposition(decomp)
        return decomp
    g = inv2 * (a * a + a)
    h = inv2 * (a * a - a)
    lifted_g = lift_idempotent(g)
    lifted_h = lift_idempotent(h)
    e, f = lifted_g.element, lifted_h.element
    p = e - f
    w = a - p
    witness = is_nilpotent(w)
    if witness is None:
        raise VerificationError("tripotent decomposition produced a non-nilpotent remainder")
    cert_e = PolynomialCertificate(
        poly_compose(lifted_g.certificate.coefficients, (0, inv2, inv2)), a
    )
    cert_f = PolynomialCertificate(
        poly_compose(lifted_h.certificate.coefficients, (0, -inv2, inv2)), a
    )
    cert_p = PolynomialCertificate(poly_sub(cert_e.coefficients, cert_f.coefficients), a)
    decomp = TripotentDecomposition(
        subject=a,
        tripotent=p,
        nilpotent_part=w,
        nilpotent_witness=witness,
        plus_idempotent=e,
        minus_idempotent=f,
        tripotent_certificate=cert_p,
        plus_certificate=cert_e,
        minus_certificate=cert_f,
    )
    _validate_decomposition(decomp)
    return decomp


def sd_difference_decomposition(a: Element) -> tuple[Element, Element]:
    """Write a = b - c with commuting b, c both strongly Drazin invertible.

    Takes b = e and c = f - w from the tripotent decomposition.  Both parts
    differ from an idempotent by a commuting nilpotent, so both pass
    has_strongly_drazin.
    """
    d = tripotent_decomposition(a)
    if d.plus_idempotent is None:
        raise PreconditionError(
            "no integral idempotent split exists for this element over Z"
        )
    b = d.plus_idempotent
    c = d.minus_idempotent - d.nilpotent_part
    ok = (
        a == b - c
        and b * c == c * b
        and is_nilpotent(b - b * b) is not None
        and is_nilpotent(c - c * c) is not None
    )
    if not ok:
        raise VerificationError("difference decomposition failed its own checks")
    return b, c


def hirano_via_square(a: Element) -> HiranoCertificate:
    """Hirano inverse through the square: b = a * sD(a^2).

    Also recomputes the direct construction and insists the two agree,
    which uniqueness guarantees.
    """
    if not has_strongly_drazin(a * a):
        raise PreconditionError(
            f"{a!r}: a^2 has no strongly Drazin inverse, so a has no Hirano inverse"
        )
    sd = strongly_drazin(a * a)
    b = a * sd.b
    cert = check_hirano(a, b)
    if cert is None or cert.b != hirano(a).b:
        raise VerificationError("square route disagreed with the direct Hirano inverse")
    return cert


def hirano_of_hirano(cert: HiranoCertificate) -> Element:
    """The Hirano inverse of the inverse: a^2 * b, cross-checked directly."""
    a, b = cert.a, cert.b
    y = a * a * b
    if not has_hirano(b):
        raise VerificationError("a Hirano inverse must itself be Hirano invertible")
    if hirano(b).b != y:
        raise VerificationError("inverse-of-inverse formula disagreed with construction")
    return y


def brute_force_hirano(a: Element) -> list[Element]:
    """All b in the ring satisfying the Hirano equations verbatim, in
    enumeration order.  Uniqueness says there is at most one."""
    if not a.ring.is_finite:
        raise InfiniteRingError(f"cannot scan {a.ring}")
    return [b for b in a.ring.elements() if check_hirano(a, b) is not None]


def brute_force_strongly_drazin(a: Element) -> list[Element]:
    if not a.ring.is_finite:
        raise InfiniteRingError(f"cannot scan {a.ring}")
    return [b for b in a.ring.elements() if check_strongly_drazin(a, b) is not None]


def brute_force_drazin(a: Element) -> list[Element]:
    if not a.ring.is_finite:
        raise InfiniteRingError(f"cannot scan {a.ring}")
    return [b for b in a.ring.elements() if _drazin_axioms(a, b) is not None]
