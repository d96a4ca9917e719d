"""Exhaustive brute-force counterparts of the fast algorithms.

These enumerate directly from the definitions and are exponential in the
board size; they exist to cross-check the fast paths and back the CLI's
``--oracle`` flag. Keep inputs at desk scale (weight up to ~16).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from rookeq.partition import Box, Partition


def rook_numbers_exhaustive(mu: Partition) -> tuple[int, ...]:
    """Count k-subsets of cells with pairwise distinct rows and columns, for every k."""
    cells = sorted(mu.boxes())
    counts = [1]
    for k in range(1, min(len(mu), mu.part(1)) + 1):
        c = 0
        for placement in combinations(cells, k):
            rows = {b.row for b in placement}
            cols = {b.col for b in placement}
            if len(rows) == k and len(cols) == k:
                c += 1
        if c == 0:
            break
        counts.append(c)
    return tuple(counts)


@lru_cache(maxsize=None)
def _deletion_patterns(alpha: Partition) -> dict[Partition, tuple[tuple[int, ...], tuple[int, ...]]]:
    # every board reachable by keeping a subset of rows and a subset of columns,
    # with one (rows, cols) certificate each
    out: dict[Partition, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    rows = range(1, len(alpha) + 1)
    cols = range(1, alpha.part(1) + 1)
    col_subsets = [c for r in range(len(cols) + 1) for c in combinations(cols, r)]
    for nr in range(len(alpha) + 1):
        for kept_rows in combinations(rows, nr):
            for kept_cols in col_subsets:
                shape = []
                for r in kept_rows:
                    length = sum(1 for c in kept_cols if c <= alpha[r - 1])
                    if length:
                        shape.append(length)
                out.setdefault(Partition._trusted(shape), (kept_rows, kept_cols))
    return out


def deletion_certificate(alpha: Partition, mu: Partition):
    """Kept ``(rows, columns)`` of ``alpha`` that leave exactly ``mu``, or ``None``."""
    return _deletion_patterns(Partition(alpha)).get(Partition(mu))


def contains_exhaustive(alpha: Partition, mu: Partition) -> bool:
    """Decide containment by trying every set of kept rows and kept columns."""
    if mu.weight > alpha.weight:
        return False
    return Partition(mu) in _deletion_patterns(Partition(alpha))


def nested_sequences(mu: Partition, k: int):
    """Yield every nested sequence of ``k`` L's in ``mu`` as a tuple of corners.

    Corners are listed bottom-left first; each later corner is strictly above
    and strictly right of the one before it.
    """

    def extend(seq: tuple[Box, ...]):
        if len(seq) == k:
            yield seq
            return
        last = seq[-1]
        for row in range(1, last.row):
            for col in range(last.col + 1, mu[row - 1] + 1):
                yield from extend(seq + (Box(row, col),))

    if k < 1:
        return
    for box in sorted(mu.boxes()):
        yield from extend((box,))


def sequence_weight(mu: Partition, corners) -> int:
    # direct box count of the union of L's; nested L's never overlap
    boxes = set()
    for c in corners:
        boxes.update(Box(c.row, x) for x in range(c.col, mu.part(c.row) + 1))
        boxes.update(Box(y, c.col) for y in range(1, c.row + 1))
    return len(boxes)


def max_nested_weight_oracle(mu: Partition, k: int) -> int | None:
    """Largest total weight of ``k`` nested L's, or ``None`` if there are none."""
    best, _ = maximal_nested_sequences(mu, k)
    return best


def maximal_nested_sequences(mu: Partition, k: int) -> tuple[int | None, list[tuple[Box, ...]]]:
    """Return the maximum weight and every sequence achieving it."""
    best: int | None = None
    winners: list[tuple[Box, ...]] = []
    for seq in nested_sequences(mu, k):
        w = sequence_weight(mu, seq)
        if best is None or w > best:
            best, winners = w, [seq]
        elif w == best:
            winners.append(seq)
    return best, winners
