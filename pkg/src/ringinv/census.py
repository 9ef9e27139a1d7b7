"""Whole-ring classification and law verification.

run_census counts nilpotents, idempotents, tripotents, units, and the
three generalized-inverse classes across a finite ring, always through
two independent paths: the fast polynomial criteria element by element,
and a definitional equation scan (vectorized, in _scan).  Any
disagreement is a hard error naming the element; the scan is exhaustive
on rings of at most 10**4 elements and seeded-random above that.

verify_theorem drives the law registry: each law id names a fixed
checkable statement about one ring, run either exhaustively over the
instance space or on seeded samples, with violations surfaced as
structured records.  A law callable returns None when an instance falls
outside the hypothesis, True when the conclusion verified, and a detail
string when the instance falsifies the law.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ._scan import RingScan
from .calculus import (
    cline,
    commuting_product,
    jacobson_transfer,
    orthogonal_sum,
    power_formula,
    power_transfer,
    square_zero_sum,
)
from .gen_inverse import (
    _drazin_axioms,
    drazin_finite,
    has_hirano,
    has_strongly_drazin,
    hirano,
    hirano_of_hirano,
    inverse_of_two,
    sd_difference_decomposition,
    strongly_drazin,
    tripotent_decomposition,
)
from .rings import (
    Element,
    InfiniteRingError,
    PreconditionError,
    RingSpec,
    VerificationError,
    is_idempotent,
    is_nilpotent,
    is_tripotent,
    is_unit,
)

EXHAUSTIVE_SCAN_CAP = 10_000
ORACLE_RING_CAP = 65_536
RING_SIZE_CAP = 1_000_000
MAX_VIOLATIONS = 25
MAX_EXHAUSTIVE_INSTANCES = 2_000_000

_COUNT_KEYS = (
    "total",
    "nilpotent",
    "idempotent",
    "tripotent",
    "unit",
    "drazin",
    "strongly_drazin",
    "hirano",
)


class CensusMismatchError(VerificationError):
    """The fast criteria and the definitional scan disagreed."""


@dataclass(frozen=True)
class InclusionWitness:
    element: str
    index: int
    reason: str


@dataclass(frozen=True)
class CrossCheckInfo:
    strategy: str
    seed: int | None
    checked: int


@dataclass(frozen=True)
class CensusReport:
    ring: str
    counts: dict
    witnesses: tuple
    is_strongly_2_nil_clean: bool
    cross_check: CrossCheckInfo

    def as_dict(self) -> dict:
        return {
            "ring": self.ring,
            "counts": dict(self.counts),
            "witnesses": [
                {"element": w.element, "index": w.index, "reason": w.reason}
                for w in self.witnesses
            ],
            "is_strongly_2_nil_clean": self.is_strongly_2_nil_clean,
            "cross_check": {
                "strategy": self.cross_check.strategy,
                "seed": self.cross_check.seed,
                "checked": self.cross_check.checked,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


def _element_index(ring: RingSpec, a: Element) -> int:
    if ring.is_matrix:
        m = ring.scalar_base.n
        flat = [v for row in a.payload for v in row]
    else:
        m = ring.n
        flat = [a.payload]
    code = 0
    for v in flat:
        code = code * m + v
    return code


def _census_chunk(ring: RingSpec, start: int, stop: int):
    counts = dict.fromkeys(_COUNT_KEYS, 0)
    first_hirano_not_sd: int | None = None
    first_not_hirano: int | None = None
    for index in range(start, stop):
        a = ring.element_at(index)
        counts["total"] += 1
        if is_nilpotent(a) is not None:
            counts["nilpotent"] += 1
        if is_idempotent(a):
            counts["idempotent"] += 1
        if is_tripotent(a):
            counts["tripotent"] += 1
        if is_unit(a):
            counts["unit"] += 1
        counts["drazin"] += 1
        hir = has_hirano(a)
        sd = has_strongly_drazin(a)
        if hir:
            counts["hirano"] += 1
        if sd:
            counts["strongly_drazin"] += 1
        if hir and not sd and first_hirano_not_sd is None:
            first_hirano_not_sd = index
        if not hir and first_not_hirano is None:
            first_not_hirano = index
    return counts, first_hirano_not_sd, first_not_hirano


def _cross_check_element(ring: RingSpec, scan: RingScan, index: int) -> None:
    a = ring.element_at(index)
    found = scan.inverse_scan(index)
    checks = (
        ("hirano", has_hirano(a), bool(found["hirano"])),
        ("strongly_drazin", has_strongly_drazin(a), bool(found["strongly_drazin"])),
        ("drazin", True, bool(found["drazin"])),
        ("unit", is_unit(a), found["unit"]),
    )
    for category, fast, brute in checks:
        if fast != brute:
            raise CensusMismatchError(
                f"dual-path mismatch in {ring} at element {a}: "
                f"{category} fast path says {fast}, equation scan says {brute}"
            )
    if found["hirano"] and _element_index(ring, hirano(a).b) not in found["hirano"]:
        raise CensusMismatchError(
            f"constructed Hirano inverse of {a} in {ring} is not in the scanned set"
        )
    if found["strongly_drazin"]:
        b = strongly_drazin(a).b
        if _element_index(ring, b) not in found["strongly_drazin"]:
            raise CensusMismatchError(
                f"constructed strongly Drazin inverse of {a} in {ring} "
                "is not in the scanned set"
            )
    if _element_index(ring, drazin_finite(a).b) not in found["drazin"]:
        raise CensusMismatchError(
            f"power-formula Drazin inverse of {a} in {ring} is not in the scanned set"
        )


def run_census(
    ring: RingSpec,
    workers: int = 1,
    max_ring_size: int = RING_SIZE_CAP,
    seed: int = 0,
    samples: int = 50,
) -> CensusReport:
    if not ring.is_finite:
        raise InfiniteRingError(f"cannot run a census over {ring}")
    size = ring.size()
    if size > max_ring_size:
        raise PreconditionError(
            f"{ring} has {size} elements, above the cap {max_ring_size}"
        )
    if workers < 1:
        raise PreconditionError("workers must be >= 1")
    chunk = -(size // -workers)
    bounds = [(s, min(s + chunk, size)) for s in range(0, size, chunk)]
    if workers == 1:
        parts = [_census_chunk(ring, s, t) for s, t in bounds]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_census_chunk, ring, s, t) for s, t in bounds]
            parts = [f.result() for f in futures]
    counts = dict.fromkeys(_COUNT_KEYS, 0)
    first_hirano_not_sd: int | None = None
    first_not_hirano: int | None = None
    for part_counts, sd_gap, hir_gap in parts:
        for key in _COUNT_KEYS:
            counts[key] += part_counts[key]
        if first_hirano_not_sd is None:
            first_hirano_not_sd = sd_gap
        if first_not_hirano is None:
            first_not_hirano = hir_gap
    if not counts["strongly_drazin"] <= counts["hirano"] <= counts["drazin"] == size:
        raise VerificationError(f"census hierarchy violated in {ring}: {counts}")
    witnesses = []
    if first_hirano_not_sd is not None:
        witnesses.append(
            InclusionWitness(
                element=str(ring.element_at(first_hirano_not_sd)),
                index=first_hirano_not_sd,
                reason="has a Hirano inverse but no strongly Drazin inverse",
            )
        )
    if first_not_hirano is not None:
        witnesses.append(
            InclusionWitness(
                element=str(ring.element_at(first_not_hirano)),
                index=first_not_hirano,
                reason="has a Drazin inverse but no Hirano inverse",
            )
        )
    scan = RingScan(ring)
    if size <= EXHAUSTIVE_SCAN_CAP:
        indexes = range(size)
        info = CrossCheckInfo(strategy="exhaustive", seed=None, checked=size)
    else:
        rng = random.Random(seed)
        indexes = sorted(rng.sample(range(size), min(samples, size)))
        info = CrossCheckInfo(strategy="sampled", seed=seed, checked=len(indexes))
    for index in indexes:
        _cross_check_element(ring, scan, index)
    return CensusReport(
        ring=str(ring),
        counts=counts,
        witnesses=tuple(witnesses),
        is_strongly_2_nil_clean=counts["hirano"] == counts["total"],
        cross_check=info,
    )


@dataclass(frozen=True)
class ViolationRecord:
    law: str
    inputs: tuple
    detail: str


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    ring: str
    strategy: str
    seed: int | None
    instances: int
    checked: int
    violations: tuple
    notes: tuple
    elapsed_seconds: float

    @property
    def ok(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "ring": self.ring,
            "strategy": self.strategy,
            "seed": self.seed,
            "instances": self.instances,
            "checked": self.checked,
            "violations": [
                {"law": v.law, "inputs": list(v.inputs), "detail": v.detail}
                for v in self.violations
            ],
            "notes": list(self.notes),
            "elapsed_seconds": self.elapsed_seconds,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2)


@dataclass
class _LawContext:
    ring: RingSpec
    notes: list = field(default_factory=list)
    _scan: RingScan | None = None
    _tripotents: list | None = None

    def note(self, text: str) -> None:
        if text not in self.notes:
            self.notes.append(text)

    @property
    def scan(self) -> RingScan:
        if self._scan is None:
            if self.ring.size() > ORACLE_RING_CAP:
                raise PreconditionError(
                    f"{self.ring} is too large for the equation-scan oracle "
                    f"(cap {ORACLE_RING_CAP} elements)"
                )
            self._scan = RingScan(self.ring)
        return self._scan

    @property
    def oracle_ok(self) -> bool:
        return self.ring.size() <= ORACLE_RING_CAP

    @property
    def tripotents(self) -> list:
        if self._tripotents is None:
            self._tripotents = [p for p in self.ring.elements() if is_tripotent(p)]
        return self._tripotents


def _law_hirano_implies_drazin(ctx: _LawContext, a: Element):
    if not has_hirano(a):
        return None
    cert = hirano(a)
    if _drazin_axioms(a, cert.b) is None:
        return "Hirano inverse fails the Drazin equations"
    return True


def _law_uniqueness(ctx: _LawContext, a: Element):
    found = ctx.scan.inverse_scan(_element_index(ctx.ring, a))["hirano"]
    if len(found) > 1:
        return f"{len(found)} distinct candidates satisfy the Hirano equations"
    if found:
        index = found[0]
        if _element_index(ctx.ring, hirano(a).b) != index:
            return "constructed inverse differs from the scanned one"
        if _element_index(ctx.ring, drazin_finite(a).b) != index:
            return "power-formula Drazin inverse differs from the Hirano inverse"
    elif has_hirano(a):
        return "criterion accepts but no candidate satisfies the equations"
    return True


def _law_square_route(ctx: _LawContext, a: Element):
    hir = has_hirano(a)
    sd2 = has_strongly_drazin(a * a)
    if hir != sd2:
        return f"has_hirano(a) = {hir} but has_strongly_drazin(a^2) = {sd2}"
    if not hir:
        return None
    h = hirano(a).b
    s = strongly_drazin(a * a).b
    if s != h * h:
        return "strongly Drazin inverse of a^2 is not the squared Hirano inverse"
    if h != a * s:
        return "a times the strongly Drazin inverse of a^2 is not the Hirano inverse"
    return True


def _law_criterion(ctx: _LawContext, a: Element):
    found = ctx.scan.inverse_scan(_element_index(ctx.ring, a))["hirano"]
    if has_hirano(a) != bool(found):
        return f"criterion says {has_hirano(a)}, equation scan found {len(found)}"
    if found and _element_index(ctx.ring, hirano(a).b) not in found:
        return "constructed inverse not among scanned candidates"
    return True


def _law_inverse_of_inverse(ctx: _LawContext, a: Element):
    if not has_hirano(a):
        return None
    cert = hirano(a)
    try:
        y = hirano_of_hirano(cert)
    except VerificationError as err:
        return str(err)
    if y != a * a * cert.b:
        return "inverse of the inverse is not a^2 b"
    return True


def _law_tripotent_split(ctx: _LawContext, a: Element):
    if not has_hirano(a):
        return None
    try:
        d = tripotent_decomposition(a)
    except (PreconditionError, VerificationError) as err:
        return str(err)
    if ctx.ring.size() <= 100:
        matches = [
            p
            for p in ctx.tripotents
            if is_nilpotent(a - p) is not None and p * a == a * p
        ]
        if d.tripotent not in matches:
            return "constructed tripotent not found by the brute-force search"
    return True


def _law_sd_difference_forward(ctx: _LawContext, a: Element):
    if not has_hirano(a):
        return None
    try:
        b, c = sd_difference_decomposition(a)
    except (PreconditionError, VerificationError) as err:
        return str(err)
    if a != b - c or b * c != c * b:
        return "difference decomposition identities fail"
    if not (has_strongly_drazin(b) and has_strongly_drazin(c)):
        return "a part of the difference decomposition is not strongly Drazin invertible"
    return True


def _law_sd_difference_converse(ctx: _LawContext, b: Element, c: Element):
    if b * c != c * b:
        return None
    if not (has_strongly_drazin(b) and has_strongly_drazin(c)):
        return None
    if not has_hirano(b - c):
        return f"b - c = {b - c} lacks a Hirano inverse"
    return True


def _law_all_hirano_ring(ctx: _LawContext):
    ring = ctx.ring
    if not ctx.oracle_ok:
        raise PreconditionError(
            f"{ring} is too large for the whole-ring law (cap {ORACLE_RING_CAP})"
        )
    all_hirano = True
    all_split = True
    first_unsplit = None
    for a in ring.elements():
        if not has_hirano(a):
            all_hirano = False
        split = any(
            a * p == p * a and is_nilpotent(a - p) is not None for p in ctx.tripotents
        )
        if not split:
            all_split = False
            if first_unsplit is None:
                first_unsplit = a
    if all_hirano != all_split:
        who = f"; first element without a split: {first_unsplit}" if first_unsplit else ""
        return (
            f"every-element-Hirano is {all_hirano} but "
            f"every-element-splits is {all_split}{who}"
        )
    return True


def _law_cline(ctx: _LawContext, a: Element, b: Element, c: Element):
    if a * b * a != a * c * a:
        return None
    left = has_hirano(a * c)
    right = has_hirano(b * a)
    if left != right:
        return f"existence biconditional fails: ac {left}, ba {right}"
    if not left:
        return True
    try:
        cert = cline(a, b, c, hirano(a * c))
    except VerificationError as err:
        return str(err)
    if ctx.oracle_ok:
        found = ctx.scan.inverse_scan(_element_index(ctx.ring, b * a))["hirano"]
        if _element_index(ctx.ring, cert.b) not in found:
            return "transferred inverse rejected by the equation scan"
    return True


def _law_cline_pair(ctx: _LawContext, a: Element, b: Element):
    return _law_cline(ctx, a, b, b)


def _law_power_transfer(ctx: _LawContext, a: Element, b: Element):
    for k in (1, 2, 3):
        try:
            power_transfer(a, b, k)
        except VerificationError as err:
            return str(err)
    return True


def _law_commuting_product(ctx: _LawContext, a: Element, b: Element):
    if a * b != b * a or not (has_hirano(a) and has_hirano(b)):
        return None
    ha, hb = hirano(a), hirano(b)
    try:
        cert = commuting_product(ha, hb)
    except VerificationError as err:
        return str(err)
    if ha.b * hb.b != hb.b * ha.b:
        return "the two inverses do not commute"
    if cert.b != hb.b * ha.b:
        return "product inverse is order-dependent"
    return True


def _law_power_formula(ctx: _LawContext, a: Element):
    if not has_hirano(a):
        return None
    ha = hirano(a)
    for n in (1, 2, 3, 4):
        try:
            power_formula(ha, n)
        except VerificationError as err:
            return f"n = {n}: {err}"
    return True


def _law_jacobson(ctx: _LawContext, a: Element, b: Element, c: Element):
    if a * b * a != a * c * a:
        return None
    try:
        jacobson_transfer(a, b, c)
    except VerificationError as err:
        return str(err)
    return True


def _law_jacobson_pair(ctx: _LawContext, a: Element, b: Element):
    return _law_jacobson(ctx, a, b, b)


def _law_orthogonal_sum(ctx: _LawContext, a: Element, b: Element):
    zero = ctx.ring.zero()
    if a * b != zero or b * a != zero:
        return None
    if not (has_hirano(a) and has_hirano(b)):
        return None
    try:
        orthogonal_sum(hirano(a), hirano(b))
    except VerificationError as err:
        return str(err)
    return True


def _law_square_zero_sum(ctx: _LawContext, a: Element, b: Element):
    zero = ctx.ring.zero()
    if a * a != zero or b * b != zero:
        return None
    if not has_strongly_drazin(a * b):
        return None
    sd = strongly_drazin(a * b)
    try:
        result = square_zero_sum(a, b, sd)
    except VerificationError as err:
        return str(err)
    if not result.statement_valid:
        return "statement form fails the Hirano equations"
    if not result.proof_valid:
        ctx.note(f"proof form fails at a = {a}, b = {b}")
    elif not result.forms_agree:
        ctx.note(f"statement and proof forms differ at a = {a}, b = {b}")
    return True


@dataclass(frozen=True)
class _Law:
    law_id: str
    passes: tuple
    requires_half: bool = False


LAWS: dict[str, _Law] = {
    law.law_id: law
    for law in (
        _Law("2.1", ((1, _law_hirano_implies_drazin),)),
        _Law("2.2", ((1, _law_uniqueness),)),
        _Law("2.4", ((1, _law_square_route),)),
        _Law("3.1", ((1, _law_criterion),)),
        _Law("3.2", ((1, _law_inverse_of_inverse),)),
        _Law("3.3", ((1, _law_tripotent_split),), requires_half=True),
        _Law(
            "3.4",
            ((1, _law_sd_difference_forward), (2, _law_sd_difference_converse)),
            requires_half=True,
        ),
        _Law("3.6", ((0, _law_all_hirano_ring),)),
        _Law("4.1", ((3, _law_cline),)),
        _Law("4.2", ((2, _law_cline_pair),)),
        _Law("4.3", ((2, _law_power_transfer),)),
        _Law("4.4", ((2, _law_commuting_product),)),
        _Law("4.5", ((1, _law_power_formula),)),
        _Law("5.1", ((3, _law_jacobson),)),
        _Law("5.2", ((2, _law_jacobson_pair),)),
        _Law("5.4", ((2, _law_orthogonal_sum),)),
        _Law("5.5", ((2, _law_square_zero_sum),)),
    )
}


def verify_theorem(
    theorem_id: str,
    ring: RingSpec,
    strategy: str | None = None,
    seed: int = 0,
    samples: int = 10_000,
    max_instances: int = MAX_EXHAUSTIVE_INSTANCES,
) -> TheoremReport:
    law = LAWS.get(theorem_id)
    if law is None:
        known = ", ".join(sorted(LAWS))
        raise PreconditionError(f"unknown law id {theorem_id!r}; known ids: {known}")
    if not ring.is_finite:
        raise InfiniteRingError(f"law verification needs a finite ring, not {ring}")
    size = ring.size()
    if size > RING_SIZE_CAP:
        raise PreconditionError(
            f"{ring} has {size} elements, above the cap {RING_SIZE_CAP}"
        )
    if law.requires_half and inverse_of_two(ring) is None:
        raise PreconditionError(
            f"law {theorem_id} needs 2 to be a unit, which fails in {ring}"
        )
    max_arity = max(arity for arity, _ in law.passes)
    if strategy is None:
        strategy = "exhaustive" if size ** max_arity <= max_instances else "sampled"
    if strategy not in ("exhaustive", "sampled"):
        raise PreconditionError(f"unknown strategy {strategy!r}")
    if strategy == "exhaustive" and size ** max_arity > max_instances:
        raise PreconditionError(
            f"{ring} yields {size ** max_arity} instances at arity {max_arity}, "
            f"above the cap {max_instances}"
        )
    started = time.monotonic()
    ctx = _LawContext(ring)
    violations: list[ViolationRecord] = []
    instances = 0
    checked = 0
    for pass_number, (arity, check) in enumerate(law.passes):
        if arity == 0:
            space = [()]
        elif strategy == "exhaustive":
            space = itertools.product(*(ring.elements() for _ in range(arity)))
        else:
            rng = random.Random(seed + pass_number)
            space = (
                tuple(ring.element_at(rng.randrange(size)) for _ in range(arity))
                for _ in range(samples)
            )
        for elems in space:
            instances += 1
            verdict = check(ctx, *elems)
            if verdict is None:
                continue
            checked += 1
            if verdict is not True:
                violations.append(
                    ViolationRecord(
                        law=theorem_id,
                        inputs=tuple(str(e) for e in elems),
                        detail=verdict,
                    )
                )
                if len(violations) >= MAX_VIOLATIONS:
                    ctx.note(f"stopped after {MAX_VIOLATIONS} violations")
                    break
        if len(violations) >= MAX_VIOLATIONS:
            break
    elapsed = time.monotonic() - started
    return TheoremReport(
        theorem=theorem_id,
        ring=str(ring),
        strategy=strategy,
        seed=seed if strategy == "sampled" else None,
        instances=instances,
        checked=checked,
        violations=tuple(violations),
        notes=tuple(ctx.notes),
        elapsed_seconds=round(elapsed, 3),
    )
