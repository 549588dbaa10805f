"""Joint ordered factorisations of a dimension vector.

A joint ordered factorisation (JOF) of dims ``(n_1, ..., n_m)`` is a
sequence of (direction, factor) steps such that the factors assigned to
each direction multiply to that direction's dimension, every factor is
at least 2, and consecutive steps never use the same direction.  These
sequences parametrise every sum system and every principal reversible
cuboid of the given dimensions, so this module is the combinatorial
backbone of the package.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .core import InputError, VerificationReport

Step = tuple[int, int]


@dataclass(frozen=True)
class JointOrderedFactorisation:
    """A step sequence together with the dimension vector it factorises.

    Instances are plain records; use ``validate_jof`` to check the
    defining clauses of a raw sequence.
    """

    steps: tuple[Step, ...]
    dims: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def as_text(self) -> str:
        return format_jof(self.steps)


@lru_cache(maxsize=None)
def _divisors_ge2(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(2, n + 1) if n % d == 0)


def validate_jof(steps: Sequence[Step], dims: Sequence[int]) -> VerificationReport:
    """Check the two defining clauses plus factor and direction ranges.

    Violations come back as failed reports, never exceptions, so callers
    can surface them verbatim.
    """
    dims = tuple(dims)
    if not dims or any(n < 1 for n in dims):
        return VerificationReport.fail("dims-range", witness=list(dims))
    m = len(dims)
    for l, (j, f) in enumerate(steps, start=1):
        if not (1 <= j <= m):
            return VerificationReport.fail("direction-range", witness=l)
        if f < 2:
            return VerificationReport.fail("factor-range", witness=l)
    for l in range(1, len(steps)):
        if steps[l][0] == steps[l - 1][0]:
            return VerificationReport.fail("adjacent-directions", witness=l + 1)
    products = [1] * m
    for j, f in steps:
        products[j - 1] *= f
    for j in range(m):
        if products[j] != dims[j]:
            return VerificationReport.fail(
                "direction-product",
                witness={"direction": j + 1, "product": products[j], "expected": dims[j]},
            )
    return VerificationReport.ok()


def _require_enumerable(dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(dims)
    if not dims:
        raise InputError("dims vector is empty")
    for n in dims:
        if n < 2:
            raise InputError(f"dims must all be >= 2, got {list(dims)}")
    return dims


def enumerate_jofs(dims: Sequence[int]) -> Iterator[JointOrderedFactorisation]:
    """Yield every JOF of ``dims`` exactly once, in lexicographic step order.

    Steps are compared as (direction, factor) pairs.  The stream is
    deterministic so golden files and paginated CLI output stay stable.
    """
    dims = _require_enumerable(dims)
    m = len(dims)
    quotients = list(dims)
    steps: list[Step] = []

    def walk(last: int) -> Iterator[JointOrderedFactorisation]:
        live = False
        for j in range(m):
            if j == last or quotients[j] == 1:
                continue
            live = True
            q = quotients[j]
            for f in _divisors_ge2(q):
                steps.append((j + 1, f))
                quotients[j] = q // f
                yield from walk(j)
                quotients[j] = q
                steps.pop()
        if not live and all(q == 1 for q in quotients):
            yield JointOrderedFactorisation(tuple(steps), dims)

    # A finished sequence can never be extended (all quotients are 1), so
    # completed JOFs are exactly the dead ends with nothing left to factor.
    yield from walk(-1)


def count_jofs(dims: Sequence[int]) -> int:
    """Number of JOFs of ``dims``, equal to the length of enumerate_jofs.

    Counts by memoised recursion over the multiset of remaining
    per-direction quotients; directions holding equal quotients are
    interchangeable, which collapses the state space far below the
    enumeration tree.
    """
    dims = _require_enumerable(dims)
    return _count_multiset(tuple(sorted(dims)), 0)


@lru_cache(maxsize=None)
def _count_multiset(quotients: tuple[int, ...], blocked: int) -> int:
    # ``blocked`` is the quotient value held by the direction used in the
    # previous step (0 when unconstrained); one holder of that value is
    # excluded this turn.  Holders of equal values are symmetric, so the
    # value alone identifies the state.
    if not quotients:
        return 1
    total = 0
    counts = Counter(quotients)
    for value, mult in counts.items():
        available = mult - (1 if blocked == value else 0)
        if available == 0:
            continue
        rest = list(quotients)
        rest.remove(value)
        for f in _divisors_ge2(value):
            left = value // f
            if left > 1:
                total += available * _count_multiset(tuple(sorted(rest + [left])), left)
            else:
                total += available * _count_multiset(tuple(rest), 0)
    return total


def canonicalise(steps: Sequence[Step], dims: Sequence[int]) -> JointOrderedFactorisation:
    """Fuse adjacent same-direction steps until the adjacency clause holds.

    The input must already satisfy the per-direction product clause;
    only the adjacency clause may be violated.  Idempotent.
    """
    dims = tuple(dims)
    report = validate_jof(steps, dims)
    if not report.passed and report.violated_invariant != "adjacent-directions":
        raise InputError(
            f"cannot canonicalise: {report.violated_invariant} (witness {report.witness!r})"
        )
    fused: list[Step] = []
    for j, f in steps:
        if fused and fused[-1][0] == j:
            fused[-1] = (j, fused[-1][1] * f)
        else:
            fused.append((j, f))
    return JointOrderedFactorisation(tuple(fused), dims)


def format_jof(steps: Sequence[Step]) -> str:
    """Render steps in the CLI text syntax, e.g. ``1:5,2:2,1:3``."""
    return ",".join(f"{j}:{f}" for j, f in steps)


def parse_jof(text: str) -> JointOrderedFactorisation:
    """Parse the CLI text syntax; dims are inferred from the steps.

    The number of directions is the largest direction index mentioned.
    """
    body = text.strip()
    if not body:
        raise InputError("empty joint ordered factorisation")
    steps: list[Step] = []
    for piece in body.split(","):
        part = piece.strip()
        try:
            j_text, f_text = part.split(":")
            j, f = int(j_text), int(f_text)
        except ValueError:
            raise InputError(f"malformed step {part!r}, expected direction:factor") from None
        steps.append((j, f))
    m = max(j for j, _ in steps)
    if min(j for j, _ in steps) < 1:
        raise InputError("directions must be positive")
    dims = [1] * m
    for j, f in steps:
        if f < 2:
            raise InputError(f"factor {f} in step {j}:{f} must be >= 2")
        dims[j - 1] *= f
    jof = JointOrderedFactorisation(tuple(steps), tuple(dims))
    report = validate_jof(jof.steps, jof.dims)
    if not report.passed:
        raise InputError(
            f"invalid joint ordered factorisation: {report.violated_invariant}"
            f" (witness {report.witness!r})"
        )
    return jof
