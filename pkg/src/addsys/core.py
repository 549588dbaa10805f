"""Exact integer primitives: progressions, component sets, Minkowski sums.

Every verifier in the package reduces to two operations defined here:
forming the multiset of elementwise sums of several integer sets, and
comparing that multiset against a prescribed arithmetic progression.
All arithmetic is exact and restricted to signed 64-bit magnitudes;
exceeding that range is a hard error, never a silent wraparound.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

#: Default ceiling for materialised sum multisets and tensor entry counts.
DEFAULT_CAP = 100_000_000


class InputError(ValueError):
    """Malformed or out-of-domain input (bad schema, unsorted set, ...)."""


class Int64OverflowError(OverflowError):
    """A computed value left the signed 64-bit range."""


class CapExceededError(RuntimeError):
    """A materialised result would exceed the configured element cap."""


class InternalContradictionError(RuntimeError):
    """A state arose that the verified precondition rules out.

    Raised by the decomposition routines when an input that claimed to
    be verified turns out not to be.
    """


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a structural check.

    ``passed`` is true exactly when ``violated_invariant`` is absent.
    ``witness`` identifies the first offending value or index in a
    deterministic scan order.  ``note`` records a convention the check
    relied on (for example toroidal block indexing).
    """

    passed: bool
    violated_invariant: str | None = None
    witness: Any = None
    note: str | None = None

    def __post_init__(self) -> None:
        if self.passed and self.violated_invariant is not None:
            raise InputError("a passing report cannot name a violated invariant")
        if not self.passed and self.violated_invariant is None:
            raise InputError("a failing report must name the violated invariant")

    @staticmethod
    def ok(note: str | None = None) -> "VerificationReport":
        return VerificationReport(passed=True, note=note)

    @staticmethod
    def fail(invariant: str, witness: Any = None, note: str | None = None) -> "VerificationReport":
        return VerificationReport(
            passed=False, violated_invariant=invariant, witness=witness, note=note
        )

    def to_json_doc(self) -> dict:
        doc: dict[str, Any] = {"passed": self.passed}
        if self.violated_invariant is not None:
            doc["violated_invariant"] = self.violated_invariant
        if self.witness is not None:
            doc["witness"] = self.witness
        if self.note is not None:
            doc["note"] = self.note
        return doc


class VerificationFailedError(RuntimeError):
    """An operation required a verified input and the check failed."""

    def __init__(self, context: str, report: VerificationReport):
        self.context = context
        self.report = report
        super().__init__(f"{context}: {report.violated_invariant} (witness {report.witness!r})")


def ensure_int64(value: int, context: str = "value") -> int:
    if not (INT64_MIN <= value <= INT64_MAX):
        raise Int64OverflowError(f"{context} {value} exceeds signed 64-bit range")
    return value


@dataclass(frozen=True)
class Progression:
    """The arithmetic progression ``{start + k*step : 0 <= k < count}``."""

    start: int
    step: int
    count: int

    def __post_init__(self) -> None:
        if self.step < 1:
            raise InputError(f"progression step must be >= 1, got {self.step}")
        if self.count < 1:
            raise InputError(f"progression count must be >= 1, got {self.count}")
        ensure_int64(self.start, "progression start")
        ensure_int64(self.last, "progression end")

    @property
    def last(self) -> int:
        return self.start + (self.count - 1) * self.step


def first_segment(count: int) -> Progression:
    """The progression 0, 1, ..., count - 1."""
    return Progression(start=0, step=1, count=count)


def progression_set(p: Progression) -> tuple[int, ...]:
    """Expand a progression into its sorted element tuple."""
    return tuple(range(p.start, p.start + p.step * p.count, p.step))


def as_component_set(
    elements: Iterable[int],
    *,
    require_zero_start: bool = False,
    require_positive: bool = False,
    context: str = "component set",
) -> tuple[int, ...]:
    """Validate and freeze one component set.

    Elements must be strictly increasing integers within 64-bit range.
    Sum-system parts must start at 0; sum-and-distance parts must be
    strictly positive.
    """
    out = tuple(elements)
    if not out:
        raise InputError(f"{context} is empty")
    for x in out:
        if not isinstance(x, int) or isinstance(x, bool):
            raise InputError(f"{context} contains non-integer {x!r}")
        ensure_int64(x, context)
    for a, b in zip(out, out[1:]):
        if a >= b:
            raise InputError(f"{context} is not strictly increasing at {a}, {b}")
    if out[0] < 0:
        raise InputError(f"{context} contains negative element {out[0]}")
    if require_zero_start and out[0] != 0:
        raise InputError(f"{context} must contain 0, starts at {out[0]}")
    if require_positive and out[0] == 0:
        raise InputError(f"{context} must contain positive integers only, contains 0")
    return out


@dataclass(frozen=True)
class SumSystem:
    """A list of component sets claimed to sum-cover 0 .. prod(dims) - 1.

    Construction checks only shape invariants (strictly increasing parts,
    each containing 0, cardinality at least 2).  Whether the parts really
    generate the target progression is a separate, potentially expensive
    check performed by ``sumsystem.verify_sum_system``.
    """

    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise InputError("sum system needs at least one part")
        frozen = []
        for i, part in enumerate(self.parts):
            cs = as_component_set(part, require_zero_start=True, context=f"part {i + 1}")
            if len(cs) < 2:
                raise InputError(f"part {i + 1} has cardinality {len(cs)}, need >= 2")
            frozen.append(cs)
        object.__setattr__(self, "parts", tuple(frozen))

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @property
    def target_size(self) -> int:
        n = 1
        for p in self.parts:
            n *= len(p)
        return n


def minkowski_sum(
    sets: Sequence[Sequence[int]], cap: int = DEFAULT_CAP
) -> list[int]:
    """All elementwise sums, one per index tuple, sorted, duplicates kept.

    The result has exactly prod(len(s)) entries.  Raises CapExceededError
    before materialising anything larger than ``cap`` elements, and
    Int64OverflowError if any sum could leave 64-bit range.
    """
    total = 1
    for s in sets:
        if not s:
            raise InputError("minkowski_sum requires nonempty sets")
        total *= len(s)
        if total > cap:
            raise CapExceededError(
                f"sum multiset would hold {total}+ elements, cap is {cap}"
            )
    ensure_int64(sum(max(s) for s in sets), "largest sum")
    ensure_int64(sum(min(s) for s in sets), "smallest sum")
    sums = [0]
    for s in sets:
        sums = [a + b for b in s for a in sums]
    sums.sort()
    return sums


def is_progression(multiset: Sequence[int], p: Progression) -> VerificationReport:
    """Does a sorted multiset equal a progression with multiplicity one each?"""
    expected = list(range(p.start, p.start + p.step * p.count, p.step))
    actual = list(multiset)
    if actual == expected:
        return VerificationReport.ok()
    if len(actual) != len(expected):
        return VerificationReport.fail("cardinality", witness=len(actual))
    for got, want in zip(actual, expected):
        if got != want:
            return VerificationReport.fail("target-mismatch", witness=got)
    raise AssertionError("unreachable")
