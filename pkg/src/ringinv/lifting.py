"""Idempotents from almost-idempotents, with polynomial certificates.

Given x whose defect x - x^2 is nilpotent, iterating t <- 3t^2 - 2t^3
fixes idempotents and at least squares the defect each step, so it reaches
an exact idempotent e with x - e nilpotent after logarithmically many
steps.  The iteration is mirrored on integer polynomials, producing a
certificate that e is a polynomial in x; evaluating the certificate must
reproduce e exactly.  That membership is what later constructions rely on
for commutation: anything commuting with x commutes with e.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rings import Element, PreconditionError, VerificationError, is_nilpotent

Poly = tuple[int, ...]  # integer coefficients, constant term first


def _trim(coeffs: list[int]) -> Poly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_add(p: Poly, q: Poly) -> Poly:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def poly_sub(p: Poly, q: Poly) -> Poly:
    return poly_add(p, tuple(-c for c in q))


def poly_scale(p: Poly, c: int) -> Poly:
    return _trim([c * v for v in p])


def poly_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_compose(outer: Poly, inner: Poly) -> Poly:
    """Coefficients of outer(inner(t)) over Z, by Horner on polynomials."""
    acc: Poly = ()
    for c in reversed(outer):
        acc = poly_add(poly_mul(acc, inner), (c,))
    return acc


def format_polynomial(coeffs: Poly, var: str = "a") -> str:
    if not coeffs:
        return "0"
    parts = []
    for power, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if power == 0:
            term = str(mag)
        else:
            t = var if power == 1 else f"{var}^{power}"
            term = t if mag == 1 else f"{mag}*{t}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


@dataclass(frozen=True)
class PolynomialCertificate:
    """An integer polynomial whose value at ``subject`` is the certified element."""

    coefficients: Poly
    subject: Element

    def evaluate(self) -> Element:
        ring = self.subject.ring
        acc = ring.zero()
        one = ring.one()
        for c in reversed(self.coefficients):
            acc = acc * self.subject + c * one
        return acc


@dataclass(frozen=True)
class LiftedIdempotent:
    element: Element
    certificate: PolynomialCertificate


def lift_idempotent(x: Element) -> LiftedIdempotent:
    """Lift x with nilpotent defect x - x^2 to an idempotent e with x - e nilpotent.

    Convergence takes at most ceil(log2 m) steps for defect index m; the cap
    below adds slack, and hitting it means the precondition check was fooled,
    which is reported as a defect rather than looping forever.
    """
    defect = x - x * x
    witness = is_nilpotent(defect)
    if witness is None:
        raise PreconditionError(f"cannot lift {x!r}: x - x^2 is not nilpotent")
    cap = (witness.index - 1).bit_length() + 2
    t = x
    poly: Poly = (0, 1)
    steps = 0
    while t * t != t:
        if steps >= cap:
            raise VerificationError("idempotent refinement did not converge within its cap")
        square = t * t
        t = 3 * square - 2 * (square * t)
        psquare = poly_mul(poly, poly)
        poly = poly_sub(poly_scale(psquare, 3), poly_scale(poly_mul(psquare, poly), 2))
        steps += 1
    cert = PolynomialCertificate(poly, x)
    if cert.evaluate() != t or is_nilpotent(x - t) is None:
        raise VerificationError("idempotent lift failed its own certificate checks")
    return LiftedIdempotent(t, cert)
