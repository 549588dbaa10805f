"""Sum systems: construction from factorisations, verification, decomposition.

A sum system is a list of integer sets, each containing 0, whose
elementwise sums hit every integer in 0 .. prod(sizes) - 1 exactly once.
Every sum system arises from a joint ordered factorisation of its part
sizes by accumulating scaled segments, and that construction can be
inverted; both directions live here.  A polynomial identity provides an
independent route to the verification: the product of the parts'
characteristic polynomials must have all-ones coefficients.
"""

from __future__ import annotations

from typing import Sequence

from .core import (
    DEFAULT_CAP,
    CapExceededError,
    InputError,
    InternalContradictionError,
    SumSystem,
    VerificationFailedError,
    VerificationReport,
    as_component_set,
    ensure_int64,
    first_segment,
    is_progression,
    minkowski_sum,
)
from .factorisation import JointOrderedFactorisation, canonicalise, validate_jof


def _require_buildable(jof: JointOrderedFactorisation) -> None:
    report = validate_jof(jof.steps, jof.dims)
    if not report.passed:
        raise InputError(
            f"invalid joint ordered factorisation: {report.violated_invariant}"
            f" (witness {report.witness!r})"
        )
    if any(n < 2 for n in jof.dims):
        raise InputError(f"buildable dims must all be >= 2, got {list(jof.dims)}")


def build_sum_system(jof: JointOrderedFactorisation) -> SumSystem:
    """Expand a joint ordered factorisation into its sum system.

    Each step (j, f) extends part j with f copies of itself offset by
    multiples of the running product of all factors applied so far,
    which keeps every part sorted and disjoint by construction.
    """
    _require_buildable(jof)
    parts: list[list[int]] = [[0] for _ in jof.dims]
    scale = 1
    for j, f in jof.steps:
        part = parts[j - 1]
        parts[j - 1] = [x + l * scale for l in range(f) for x in part]
        scale *= f
        ensure_int64(scale, "running factor product")
    return SumSystem(tuple(tuple(p) for p in parts))


def verify_sum_system(ss: SumSystem, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Full check: the sum multiset equals 0 .. prod(sizes) - 1, once each."""
    sums = minkowski_sum(ss.parts, cap=cap)
    return is_progression(sums, first_segment(ss.target_size))


def check_palindromic(elements: Sequence[int]) -> VerificationReport:
    """Is the set equal to its reflection about its maximum?

    Every part of a valid sum system has this symmetry, so a failure
    here is a quick certificate that no completion can be valid.
    """
    cs = as_component_set(elements, context="set")
    top = cs[-1]
    members = set(cs)
    for x in cs:
        if top - x not in members:
            return VerificationReport.fail("palindromic", witness=x)
    return VerificationReport.ok()


def parity_signature(
    ss: SumSystem, cap: int = DEFAULT_CAP, check: bool = True
) -> tuple[int, ...]:
    """Parity (0 even, 1 odd) of each part's maximum.

    For a valid sum system either every maximum is even (all part sizes
    odd) or exactly one maximum is odd (some part size even).
    """
    if check:
        report = verify_sum_system(ss, cap=cap)
        if not report.passed:
            raise VerificationFailedError("parity_signature input", report)
    return tuple(part[-1] % 2 for part in ss.parts)


def polynomial_check(ss: SumSystem, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Multiply the parts' characteristic polynomials with exact integers.

    The system is valid exactly when the product is 1 + x + ... +
    x^(d-1) with d = prod(sizes); this never forms the sum multiset, so
    it is an independent oracle for verify_sum_system.
    """
    d = ss.target_size
    if d > cap:
        raise CapExceededError(f"product polynomial would have {d} coefficients, cap is {cap}")
    coeffs = [1]
    for part in ss.parts:
        out = [0] * (len(coeffs) + part[-1])
        for i, c in enumerate(coeffs):
            if c:
                for x in part:
                    out[i + x] += c
        coeffs = out
    width = max(len(coeffs), d)
    for exponent in range(width):
        have = coeffs[exponent] if exponent < len(coeffs) else 0
        want = 1 if exponent < d else 0
        if have != want:
            return VerificationReport.fail("polynomial-coefficient", witness=exponent)
    return VerificationReport.ok()


def decompose_sum_system(
    ss: SumSystem, cap: int = DEFAULT_CAP, check: bool = True
) -> JointOrderedFactorisation:
    """Recover the canonical joint ordered factorisation of a sum system.

    Grows a valid subsystem from one element per part.  At every stage
    the smallest integer not yet covered is the next unconsumed element
    of exactly one part; consuming along that part until another part's
    next element becomes smaller closes one factorisation step, and the
    consumed stretch must consist of whole offset copies of the part's
    consumed prefix.  ``check=False`` skips the up-front verification
    for callers that already hold a verified system.
    """
    if check:
        report = verify_sum_system(ss, cap=cap)
        if not report.passed:
            raise VerificationFailedError("decompose input", report)
    parts = ss.parts
    dims = ss.dims
    m = len(parts)
    consumed = [1] * m
    product = 1
    steps: list[tuple[int, int]] = []
    while True:
        open_dirs = [j for j in range(m) if consumed[j] < dims[j]]
        if not open_dirs:
            break
        nexts = [parts[j][consumed[j]] for j in open_dirs]
        smallest = min(nexts)
        if nexts.count(smallest) != 1:
            raise InternalContradictionError(
                f"next element {smallest} appears in more than one part"
            )
        j = open_dirs[nexts.index(smallest)]
        fence = min(
            (parts[k][consumed[k]] for k in open_dirs if k != j), default=None
        )
        base = consumed[j]
        cursor = base
        part = parts[j]
        while cursor < dims[j] and (fence is None or part[cursor] < fence):
            cursor += 1
        if cursor % base != 0:
            raise InternalContradictionError(
                f"part {j + 1} advanced from {base} to {cursor} elements,"
                " not a whole number of copies"
            )
        factor = cursor // base
        for l in range(1, factor):
            offset = l * product
            for r in range(base):
                if part[l * base + r] != part[r] + offset:
                    raise InternalContradictionError(
                        f"part {j + 1} element {part[l * base + r]} breaks the"
                        f" copy structure at offset {offset}"
                    )
        consumed[j] = cursor
        product *= factor
        steps.append((j + 1, factor))
    return canonicalise(steps, dims)


def base_q_system(q: int, m: int) -> SumSystem:
    """The positional base-q system: digits scaled by powers of q."""
    if q < 2 or m < 1:
        raise InputError(f"need q >= 2 and m >= 1, got q={q}, m={m}")
    ensure_int64(q**m - 1, "largest representable value")
    return SumSystem(
        tuple(tuple(i * q**k for i in range(q)) for k in range(m))
    )


def to_json_doc(ss: SumSystem) -> dict:
    return {"dims": list(ss.dims), "parts": [list(p) for p in ss.parts]}


def from_json_doc(doc: object) -> SumSystem:
    """Parse the sum-system document ``{"parts": [[...], ...], "dims": [...]}``.

    ``dims`` repeats the part sizes; the redundancy is deliberate and a
    mismatch is rejected.
    """
    if not isinstance(doc, dict):
        raise InputError("sum system document must be a JSON object")
    missing = {"parts", "dims"} - doc.keys()
    if missing:
        raise InputError(f"sum system document lacks {sorted(missing)}")
    parts = doc["parts"]
    dims = doc["dims"]
    if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
        raise InputError("'parts' must be a list of lists")
    ss = SumSystem(tuple(tuple(p) for p in parts))
    if not isinstance(dims, list) or tuple(dims) != ss.dims:
        raise InputError(f"'dims' {dims} do not match part sizes {list(ss.dims)}")
    return ss
