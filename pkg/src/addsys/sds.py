"""Sum-and-distance systems and their bijections with sum systems.

A non-inclusive system's parts, signed both ways and summed one element
per part, cover a symmetric progression of consecutive odd numbers; an
inclusive system additionally admits 0 from each part and covers the
consecutive integers.  Non-inclusive systems correspond one-to-one to
sum systems with all part sizes even, inclusive ones to all sizes odd;
the four maps realising those bijections are pure index arithmetic on
sorted parts.  Mixed-parity sum systems are rejected by both converse
maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

from .core import (
    DEFAULT_CAP,
    InputError,
    Progression,
    SumSystem,
    VerificationFailedError,
    VerificationReport,
    as_component_set,
    is_progression,
    minkowski_sum,
)
from .sumsystem import verify_sum_system

NON_INCLUSIVE = "non-inclusive"
INCLUSIVE = "inclusive"
FLAVOURS = (NON_INCLUSIVE, INCLUSIVE)


@dataclass(frozen=True)
class SdsSystem:
    """Positive component sets plus the flavour of target they claim."""

    parts: tuple[tuple[int, ...], ...]
    flavour: str

    def __post_init__(self) -> None:
        if self.flavour not in FLAVOURS:
            raise InputError(f"flavour must be one of {FLAVOURS}, got {self.flavour!r}")
        if not self.parts:
            raise InputError("sum-and-distance system needs at least one part")
        frozen = tuple(
            as_component_set(p, require_positive=True, context=f"part {i + 1}")
            for i, p in enumerate(self.parts)
        )
        object.__setattr__(self, "parts", frozen)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


def _signed(part: tuple[int, ...], with_zero: bool) -> list[int]:
    mirrored = [-x for x in reversed(part)]
    if with_zero:
        return mirrored + [0] + list(part)
    return mirrored + list(part)


def _target(s: SdsSystem) -> Progression:
    if s.flavour == NON_INCLUSIVE:
        total = 1
        for n in s.sizes:
            total *= 2 * n
        return Progression(start=1 - total, step=2, count=total)
    total = 1
    for n in s.sizes:
        total *= 2 * n + 1
    return Progression(start=-(total - 1) // 2, step=1, count=total)


def verify_sds(s: SdsSystem, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Check the defining property for either flavour.

    Sums every signed copy (plus 0 for the inclusive flavour) one
    element per part and compares against the flavour's symmetric
    target progression.
    """
    signed_parts = [_signed(p, s.flavour == INCLUSIVE) for p in s.parts]
    sums = minkowski_sum(signed_parts, cap=cap)
    return is_progression(sums, _target(s))


def verify_sds_two_part(s: SdsSystem, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Two-part check in absolute-value form.

    For parts A, B the multiset of |a +- b| (together with the elements
    themselves when inclusive) must be the flavour's positive target.
    Agrees with verify_sds on every two-part input.
    """
    if len(s.parts) != 2:
        raise InputError(f"two-part check needs exactly 2 parts, got {len(s.parts)}")
    first, second = s.parts
    count = 2 * len(first) * len(second)
    values = [abs(a + b) for a in first for b in second]
    values += [abs(a - b) for a in first for b in second]
    if s.flavour == INCLUSIVE:
        values += list(chain(first, second))
        target = Progression(start=1, step=1, count=count + len(first) + len(second))
    else:
        target = Progression(start=1, step=2, count=count)
    if len(values) > cap:
        raise InputError(f"two-part multiset of {len(values)} values exceeds cap {cap}")
    values.sort()
    return is_progression(values, target)


def _checked_sds(s: SdsSystem, flavour: str, cap: int, check: bool) -> None:
    if s.flavour != flavour:
        raise InputError(f"expected a {flavour} system, got {s.flavour}")
    if check:
        report = verify_sds(s, cap=cap)
        if not report.passed:
            raise VerificationFailedError(f"{flavour} system", report)


def _checked_sumsys(ss: SumSystem, cap: int, check: bool) -> None:
    if check:
        report = verify_sum_system(ss, cap=cap)
        if not report.passed:
            raise VerificationFailedError("sum system", report)


def sds_to_sumsys_noninclusive(
    s: SdsSystem, cap: int = DEFAULT_CAP, check: bool = True
) -> SumSystem:
    """Half-sum map: part A becomes {(max A - a) / 2, (max A + a) / 2}."""
    _checked_sds(s, NON_INCLUSIVE, cap, check)
    parts = []
    for i, part in enumerate(s.parts):
        top = part[-1]
        halves = []
        for a in part:
            if (top - a) % 2:
                raise InputError(
                    f"part {i + 1}: max {top} and element {a} differ in parity"
                )
            halves.append((top - a) // 2)
            halves.append((top + a) // 2)
        parts.append(tuple(sorted(halves)))
    return SumSystem(tuple(parts))


def sumsys_to_sds_noninclusive(
    ss: SumSystem, cap: int = DEFAULT_CAP, check: bool = True
) -> SdsSystem:
    """Differences of elements mirrored about the centre of each part.

    Every part must have even cardinality; the offending part is named
    otherwise.
    """
    for i, part in enumerate(ss.parts):
        if len(part) % 2:
            raise InputError(
                f"part {i + 1} has odd cardinality {len(part)};"
                " non-inclusive conversion needs all parts even"
            )
    _checked_sumsys(ss, cap, check)
    parts = []
    for part in ss.parts:
        half = len(part) // 2
        parts.append(tuple(part[half + k] - part[half - 1 - k] for k in range(half)))
    return SdsSystem(tuple(parts), NON_INCLUSIVE)


def sds_to_sumsys_inclusive(
    s: SdsSystem, cap: int = DEFAULT_CAP, check: bool = True
) -> SumSystem:
    """Shift map: part A becomes max A + (-A, 0, A)."""
    _checked_sds(s, INCLUSIVE, cap, check)
    parts = []
    for part in s.parts:
        top = part[-1]
        parts.append(tuple(top + x for x in _signed(part, with_zero=True)))
    return SumSystem(tuple(parts))


def sumsys_to_sds_inclusive(
    ss: SumSystem, cap: int = DEFAULT_CAP, check: bool = True
) -> SdsSystem:
    """Half-differences about the centre element of each odd-sized part.

    Every part must have odd cardinality.  A half-difference that fails
    to be an integer means the input was not a sum system at all.
    """
    for i, part in enumerate(ss.parts):
        if len(part) % 2 == 0:
            raise InputError(
                f"part {i + 1} has even cardinality {len(part)};"
                " inclusive conversion needs all parts odd"
            )
    _checked_sumsys(ss, cap, check)
    parts = []
    for i, part in enumerate(ss.parts):
        half = len(part) // 2
        out = []
        for k in range(1, half + 1):
            spread = part[half + k] - part[half - k]
            if spread % 2:
                raise InputError(
                    f"part {i + 1}: elements {part[half + k]} and {part[half - k]}"
                    " straddle the centre with odd spread; corrupt input"
                )
            out.append(spread // 2)
        parts.append(tuple(out))
    return SdsSystem(tuple(parts), INCLUSIVE)


def infer_flavour(ss: SumSystem) -> str:
    """Flavour of the matching sum-and-distance system, by size parity."""
    parities = {len(p) % 2 for p in ss.parts}
    if parities == {0}:
        return NON_INCLUSIVE
    if parities == {1}:
        return INCLUSIVE
    raise InputError(
        "mixed part-size parity: no single sum-and-distance flavour applies"
    )


def to_json_doc(s: SdsSystem) -> dict:
    return {"flavour": s.flavour, "parts": [list(p) for p in s.parts]}


def from_json_doc(doc: object) -> SdsSystem:
    """Parse ``{"flavour": "inclusive"|"non-inclusive", "parts": [[...], ...]}``."""
    if not isinstance(doc, dict):
        raise InputError("sum-and-distance document must be a JSON object")
    missing = {"flavour", "parts"} - doc.keys()
    if missing:
        raise InputError(f"sum-and-distance document lacks {sorted(missing)}")
    parts = doc["parts"]
    if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
        raise InputError("'parts' must be a list of lists")
    return SdsSystem(tuple(tuple(p) for p in parts), doc["flavour"])
