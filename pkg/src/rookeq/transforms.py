"""(i,j)-transforms and reachability under (i,1)-transforms.

The (i,j)-transform reflects the part of the board weakly below row ``i`` and
weakly right of column ``j`` across its own diagonal, keeping the result only
when it is again a Ferrers board. Two partitions are (i,1)-equivalent when a
chain of (i,1)-transforms connects them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from rookeq.errors import InvalidTransformError, NotEquivalentError, PreconditionError
from rookeq.partition import Box, Partition


@dataclass(frozen=True)
class TransformStep:
    i: int
    j: int = 1

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


def ij_transform(mu: Partition, i: int, j: int) -> Partition:
    """Return the (i,j)-transform of ``mu``.

    Raises :class:`InvalidTransformError` when the reflected box set is not a
    Ferrers board.
    """
    if i < 1 or j < 1:
        raise InvalidTransformError("i and j must be positive")
    boxes = set()
    for b in mu.boxes():
        if b.row >= i and b.col >= j:
            boxes.add(Box(i + (b.col - j), j + (b.row - i)))
        else:
            boxes.add(b)
    n_rows = max((b.row for b in boxes), default=0)
    rows = [0] * n_rows
    for b in boxes:
        rows[b.row - 1] += 1
    for r, length in enumerate(rows, 1):
        if any(Box(r, c) not in boxes for c in range(1, length + 1)):
            raise InvalidTransformError(f"({i},{j})-transform of {mu}: row {r} is not left-justified")
    for r in range(1, n_rows):
        if rows[r] > rows[r - 1]:
            raise InvalidTransformError(
                f"({i},{j})-transform of {mu}: row {r + 1} is longer than row {r}"
            )
    return Partition._trusted(rows)


def _try(mu: Partition, i: int, j: int = 1) -> Partition | None:
    try:
        return ij_transform(mu, i, j)
    except InvalidTransformError:
        return None


def valid_i1_rows(mu: Partition) -> frozenset[int]:
    return frozenset(i for i in range(1, len(mu) + 1) if _try(mu, i) is not None)


def _moves(mu: Partition):
    # (i, target) for every valid (i,1)-transform that changes mu
    for i in range(1, len(mu) + 1):
        nu = _try(mu, i)
        if nu is not None and nu != mu:
            yield i, nu


def i1_class(mu: Partition) -> frozenset[Partition]:
    """Closure of ``{mu}`` under (i,1)-transforms, by breadth-first search."""
    seen = {mu}
    queue = deque([mu])
    while queue:
        cur = queue.popleft()
        for _, nxt in _moves(cur):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def i1_path(mu: Partition, nu: Partition) -> list[TransformStep]:
    """Shortest chain of (i,1)-steps taking ``mu`` to ``nu``.

    Searches from both ends at once; a (i,1)-step is undone by the same step,
    so the backward search uses the forward moves. Raises
    :class:`NotEquivalentError` when no chain exists.
    """
    if mu.weight != nu.weight:
        raise PreconditionError(f"weights differ: {mu.weight} vs {nu.weight}")
    if mu == nu:
        return []
    # parent maps: node -> (neighbour one step closer to the root, row i)
    fwd: dict[Partition, tuple[Partition, int] | None] = {mu: None}
    bwd: dict[Partition, tuple[Partition, int] | None] = {nu: None}
    fdist, bdist = {mu: 0}, {nu: 0}
    f_front, b_front = [mu], [nu]

    while f_front and b_front:
        forward = len(f_front) <= len(b_front)
        front, parents, dist, other = (
            (f_front, fwd, fdist, bdist) if forward else (b_front, bwd, bdist, fdist)
        )
        new_front = []
        best: tuple[int, Partition] | None = None
        for cur in front:
            for i, nxt in _moves(cur):
                if nxt in parents:
                    continue
                parents[nxt] = (cur, i)
                dist[nxt] = dist[cur] + 1
                new_front.append(nxt)
                if nxt in other:
                    total = dist[nxt] + other[nxt]
                    if best is None or total < best[0]:
                        best = (total, nxt)
        if best is not None:
            return _join(fwd, bwd, best[1])
        if forward:
            f_front = new_front
        else:
            b_front = new_front
    raise NotEquivalentError(f"{mu} and {nu} are not (i,1)-equivalent")


def _join(fwd, bwd, meet: Partition) -> list[TransformStep]:
    head = []
    node = meet
    while fwd[node] is not None:
        node, i = fwd[node]
        head.append(TransformStep(i))
    head.reverse()
    tail = []
    node = meet
    while bwd[node] is not None:
        node, i = bwd[node]
        tail.append(TransformStep(i))
    return head + tail


def replay(mu: Partition, steps: list[TransformStep]) -> list[dict]:
    """Apply ``steps`` in order, returning before/after records for each."""
    records = []
    cur = mu
    for step in steps:
        nxt = ij_transform(cur, step.i, step.j)
        records.append({"step": str(step), "i": step.i, "j": step.j,
                        "before": str(cur), "after": str(nxt)})
        cur = nxt
    return records
