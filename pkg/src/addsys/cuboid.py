"""Dense integer tensors with the reversible-square symmetries.

A cuboid here is an order-m tensor of non-negative integers stored as a
flat row-major array with direction 1 varying fastest.  A principal
reversible cuboid additionally satisfies the vertex cross sum property
(opposite corners of every axis-aligned rectangle slice have equal pair
sums), carries the entry set 0 .. prod(dims) - 1, and increases
strictly along every line in every direction; line reversal symmetry
then follows.  Such cuboids are in bijection with sum systems (read the
coordinate axes) and are generated by chains of building operators that
stack offset copies of a smaller cuboid along one direction.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Sequence

from .core import (
    DEFAULT_CAP,
    CapExceededError,
    InputError,
    InternalContradictionError,
    SumSystem,
    VerificationFailedError,
    VerificationReport,
    ensure_int64,
)
from .factorisation import JointOrderedFactorisation, canonicalise, validate_jof
from .sumsystem import verify_sum_system


@dataclass(frozen=True)
class Cuboid:
    """Flat row-major tensor, direction 1 fastest, all indices 1-based."""

    dims: tuple[int, ...]
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.dims or any(n < 1 for n in self.dims):
            raise InputError(f"dims must be positive, got {list(self.dims)}")
        total = 1
        for n in self.dims:
            total *= n
        if len(self.entries) != total:
            raise InputError(
                f"entry count {len(self.entries)} does not match dims product {total}"
            )

    @property
    def order(self) -> int:
        return len(self.dims)

    @property
    def size(self) -> int:
        return len(self.entries)


def strides(dims: Sequence[int]) -> tuple[int, ...]:
    out = []
    acc = 1
    for n in dims:
        out.append(acc)
        acc *= n
    return tuple(out)


def flat_index(dims: Sequence[int], index: Sequence[int]) -> int:
    """Flat position of a 1-based multiindex."""
    if len(index) != len(dims):
        raise InputError(f"index {list(index)} has wrong length for dims {list(dims)}")
    flat = 0
    scale = 1
    for k, n in zip(index, dims):
        if not (1 <= k <= n):
            raise InputError(f"index component {k} outside 1..{n}")
        flat += (k - 1) * scale
        scale *= n
    return flat


def multi_index(dims: Sequence[int], flat: int) -> tuple[int, ...]:
    """1-based multiindex of a flat position."""
    out = []
    for n in dims:
        flat, k = divmod(flat, n)
        out.append(k + 1)
    return tuple(out)


def trivial_cuboid(order: int) -> Cuboid:
    """The one-entry cuboid (0) every building chain starts from."""
    if order < 1:
        raise InputError(f"order must be >= 1, got {order}")
    return Cuboid((1,) * order, (0,))


def kron_dir(v: Sequence[int], j: int, M: Cuboid) -> Cuboid:
    """Direction-j Kronecker product: stack len(v) copies of M scaled by v.

    Copy l (0-based) occupies index range l*n_j + 1 .. (l+1)*n_j in
    direction j and holds v[l] times the entries of M.
    """
    if not (1 <= j <= M.order):
        raise InputError(f"direction {j} outside 1..{M.order}")
    weights = tuple(v)
    if not weights:
        raise InputError("weight vector is empty")
    for w in weights:
        if not isinstance(w, int) or isinstance(w, bool) or w < 0:
            raise InputError(f"weights must be non-negative integers, got {w!r}")
    if M.entries:
        ensure_int64(max(weights) * max(M.entries), "scaled entry")
    block = strides(M.dims)[j - 1] * M.dims[j - 1]
    out: list[int] = []
    for start in range(0, M.size, block):
        chunk = M.entries[start : start + block]
        for w in weights:
            out.extend(w * x for x in chunk)
    dims = list(M.dims)
    dims[j - 1] *= len(weights)
    return Cuboid(tuple(dims), tuple(out))


def building_op(j: int, k: int, M: Cuboid) -> Cuboid:
    """Stack k copies of M along direction j, copy l offset by l * size."""
    if not (1 <= j <= M.order):
        raise InputError(f"direction {j} outside 1..{M.order}")
    if k < 1:
        raise InputError(f"copy count must be >= 1, got {k}")
    total = M.size
    ensure_int64((k - 1) * total + max(M.entries), "offset entry")
    block = strides(M.dims)[j - 1] * M.dims[j - 1]
    out: list[int] = []
    for start in range(0, total, block):
        chunk = M.entries[start : start + block]
        for l in range(k):
            offset = l * total
            out.extend(x + offset for x in chunk)
    dims = list(M.dims)
    dims[j - 1] *= k
    return Cuboid(tuple(dims), tuple(out))


def build_cuboid(jof: JointOrderedFactorisation, cap: int = DEFAULT_CAP) -> Cuboid:
    """Run the building-operator chain of a joint ordered factorisation."""
    report = validate_jof(jof.steps, jof.dims)
    if not report.passed:
        raise InputError(
            f"invalid joint ordered factorisation: {report.violated_invariant}"
            f" (witness {report.witness!r})"
        )
    if any(n < 2 for n in jof.dims):
        raise InputError(f"buildable dims must all be >= 2, got {list(jof.dims)}")
    total = 1
    for n in jof.dims:
        total *= n
    if total > cap:
        raise CapExceededError(f"cuboid would hold {total} entries, cap is {cap}")
    M = trivial_cuboid(len(jof.dims))
    for j, f in jof.steps:
        M = building_op(j, f, M)
    return M


def axis_values(M: Cuboid, j: int) -> tuple[int, ...]:
    """Entries along the direction-j coordinate axis, root included."""
    step = strides(M.dims)[j - 1]
    return tuple(M.entries[l * step] for l in range(M.dims[j - 1]))


def axis_sets(M: Cuboid, check: bool = True) -> SumSystem:
    """The sum system sitting on the coordinate axes of a reversible cuboid."""
    if check:
        report = verify_reversible(M)
        if not report.passed:
            raise VerificationFailedError("axis_sets input", report)
    return SumSystem(tuple(axis_values(M, j) for j in range(1, M.order + 1)))


def cuboid_from_sumsystem(
    ss: SumSystem, cap: int = DEFAULT_CAP, check: bool = True
) -> Cuboid:
    """Tabulate a sum system as the tensor of all elementwise sums.

    Inverse of ``axis_sets``: entry at multiindex k is the sum of the
    k_j-th elements of the parts.
    """
    if check:
        report = verify_sum_system(ss, cap=cap)
        if not report.passed:
            raise VerificationFailedError("cuboid_from_sumsystem input", report)
    total = ss.target_size
    if total > cap:
        raise CapExceededError(f"cuboid would hold {total} entries, cap is {cap}")
    ensure_int64(sum(p[-1] for p in ss.parts), "largest entry")
    entries = [0]
    for part in ss.parts:
        entries = [base + x for x in part for base in entries]
    return Cuboid(ss.dims, tuple(entries))


def verify_property_V(M: Cuboid) -> VerificationReport:
    """Vertex cross sum property, checked through its closed form.

    Equivalent to requiring every entry to equal the sum of its axis
    projections minus (order - 1) times the root entry; the root need
    not be zero.
    """
    root = M.entries[0]
    expected = [root]
    for j in range(1, M.order + 1):
        offsets = [a - root for a in axis_values(M, j)]
        expected = [base + off for off in offsets for base in expected]
    if list(M.entries) == expected:
        return VerificationReport.ok()
    for flat, (got, want) in enumerate(zip(M.entries, expected)):
        if got != want:
            return VerificationReport.fail(
                "vertex-sums", witness=list(multi_index(M.dims, flat))
            )
    raise AssertionError("unreachable")


def verify_reversible(M: Cuboid) -> VerificationReport:
    """All defining checks of a principal reversible cuboid.

    Checked in order: strict monotonicity along every line of every
    direction, the vertex cross sum property, entry set equal to
    0 .. size - 1, then line reversal symmetry.  The last is implied by
    the first three, so it can never be the sole failure.
    """
    entries = M.entries
    stride_of = strides(M.dims)
    for j in range(1, M.order + 1):
        step = stride_of[j - 1]
        block = step * M.dims[j - 1]
        for start in range(0, M.size, block):
            chunk = entries[start : start + block]
            if not all(map(operator.lt, chunk, chunk[step:])):
                for i, (a, b) in enumerate(zip(chunk, chunk[step:])):
                    if a >= b:
                        return VerificationReport.fail(
                            "monotonicity",
                            witness={
                                "direction": j,
                                "index": list(multi_index(M.dims, start + i)),
                            },
                        )
    vertex = verify_property_V(M)
    if not vertex.passed:
        return vertex
    seen = bytearray(M.size)
    for flat, x in enumerate(entries):
        if not (0 <= x < M.size) or seen[x]:
            return VerificationReport.fail("entry-set", witness=x)
        seen[x] = 1
    # Vertex sums hold, so line reversal reduces to palindromy of the axes.
    for j in range(1, M.order + 1):
        axis = axis_values(M, j)
        top = axis[-1]
        for l, a in enumerate(axis):
            if a + axis[len(axis) - 1 - l] != top:
                return VerificationReport.fail(
                    "line-reversal", witness={"direction": j, "position": l + 1}
                )
    return VerificationReport.ok()


def _gather(M: Cuboid, shape: Sequence[int], shift: Sequence[int]) -> list[int]:
    # Entries of the sub-box of extents ``shape`` whose corner sits at
    # 0-based offsets ``shift``; direction 1 runs are copied as slices.
    stride_of = strides(M.dims)
    entries = M.entries
    out: list[int] = []
    width = shape[0]
    first = shift[0]

    def rec(direction: int, base: int) -> None:
        if direction == 0:
            out.extend(entries[base + first : base + first + width])
            return
        step = stride_of[direction]
        origin = base + shift[direction] * step
        for _ in range(shape[direction]):
            rec(direction - 1, origin)
            origin += step
    rec(M.order - 1, 0)
    return out


def decompose_cuboid(M: Cuboid, check: bool = True) -> JointOrderedFactorisation:
    """Recover the canonical building chain of a reversible cuboid.

    Works directly on the tensor: grows a sub-box from the root corner,
    always extending the direction whose next axis entry is the
    smallest integer not yet covered, closing a step when the smallest
    missing value moves to another direction.  Each closed step must
    consist of whole copies of the previous sub-box offset by its size,
    and that copy structure is checked entrywise.
    """
    if check:
        report = verify_reversible(M)
        if not report.passed:
            raise VerificationFailedError("decompose input", report)
    dims = M.dims
    m = M.order
    axes = [axis_values(M, j) for j in range(1, m + 1)]
    consumed = [1] * m
    product = 1
    steps: list[tuple[int, int]] = []
    while True:
        open_dirs = [j for j in range(m) if consumed[j] < dims[j]]
        if not open_dirs:
            break
        nexts = [axes[j][consumed[j]] for j in open_dirs]
        smallest = min(nexts)
        if nexts.count(smallest) != 1:
            raise InternalContradictionError(
                f"axis value {smallest} appears in more than one direction"
            )
        j = open_dirs[nexts.index(smallest)]
        fence = min(
            (axes[k][consumed[k]] for k in open_dirs if k != j), default=None
        )
        base = consumed[j]
        cursor = base
        axis = axes[j]
        while cursor < dims[j] and (fence is None or axis[cursor] < fence):
            cursor += 1
        if cursor % base != 0:
            raise InternalContradictionError(
                f"direction {j + 1} advanced from {base} to {cursor} slices,"
                " not a whole number of copies"
            )
        factor = cursor // base
        shape = list(consumed)
        shape[j] = base
        shift = [0] * m
        reference = _gather(M, shape, shift)
        for l in range(1, factor):
            shift[j] = l * base
            offset = l * product
            if _gather(M, shape, shift) != [x + offset for x in reference]:
                raise InternalContradictionError(
                    f"direction {j + 1} copy {l} breaks the offset-copy structure"
                )
        consumed[j] = cursor
        product *= factor
        steps.append((j + 1, factor))
    return canonicalise(steps, dims)


def to_json_doc(M: Cuboid) -> dict:
    return {"dims": list(M.dims), "entries": list(M.entries)}


def from_json_doc(doc: object, cap: int = DEFAULT_CAP) -> Cuboid:
    """Parse ``{"dims": [...], "entries": [flat row-major]}``."""
    if not isinstance(doc, dict):
        raise InputError("cuboid document must be a JSON object")
    missing = {"dims", "entries"} - doc.keys()
    if missing:
        raise InputError(f"cuboid document lacks {sorted(missing)}")
    dims = doc["dims"]
    entries = doc["entries"]
    if not isinstance(dims, list) or not all(isinstance(n, int) for n in dims):
        raise InputError("'dims' must be a list of integers")
    if not isinstance(entries, list):
        raise InputError("'entries' must be a flat list of integers")
    if len(entries) > cap:
        raise CapExceededError(f"cuboid holds {len(entries)} entries, cap is {cap}")
    for x in entries:
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise InputError(f"entries must be non-negative integers, got {x!r}")
        ensure_int64(x, "entry")
    return Cuboid(tuple(dims), tuple(entries))


def to_csv(M: Cuboid) -> str:
    """Order-2 slices as comma-separated rows, blank line between slices.

    Within a slice, direction 1 runs along a row and direction 2 counts
    the rows; slices are emitted in lexicographic order of the fixed
    indices (k_3, ..., k_m).
    """
    from itertools import product

    n1 = M.dims[0]
    n2 = M.dims[1] if M.order >= 2 else 1
    slice_size = n1 * n2
    fixed_dims = M.dims[2:]
    stride_of = strides(M.dims)[2:]
    blocks = []
    for fixed in product(*(range(n) for n in fixed_dims)):
        start = sum(k * s for k, s in zip(fixed, stride_of))
        rows = []
        for r in range(n2):
            row = M.entries[start + r * n1 : start + r * n1 + n1]
            rows.append(",".join(str(x) for x in row))
        blocks.append("\n".join(rows))
    return "\n\n".join(blocks) + "\n"
