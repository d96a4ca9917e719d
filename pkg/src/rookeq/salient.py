"""Salient rows, staircase rank and nested sequences of L's.

An L with corner ``(i, j)`` is the part of row ``i`` from column ``j``
rightward together with column ``j`` from row ``i`` up to the top row; it has
``i + mu_i - j`` boxes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from rookeq.errors import InvalidPartitionError
from rookeq.partition import Box, Partition


def salient_rows(mu: Partition) -> frozenset[int]:
    """Rows ``i <= len(mu)`` with some lower row ``j > i`` where ``j + mu_j <= i + mu_i``.

    Rows past the length count as rows of length zero, so the search may run
    below the board; past row ``len(mu) + mu_i`` nothing can qualify.
    """
    out = set()
    for i in range(1, len(mu) + 1):
        v = i + mu.part(i)
        if any(j + mu.part(j) <= v for j in range(i + 1, len(mu) + mu.part(i) + 1)):
            out.add(i)
    return frozenset(out)


@dataclass(frozen=True)
class SSignature:
    entries: tuple[int, ...]  # sorted

    def __len__(self) -> int:
        return len(self.entries)

    def top(self, k: int) -> int:
        return sum(sorted(self.entries, reverse=True)[:k])


def s_signature(mu: Partition) -> SSignature:
    return SSignature(tuple(sorted(i + mu.part(i) for i in salient_rows(mu))))


def non_salient_values(mu: Partition, upto: int) -> list[int]:
    """Values ``i + mu_i`` of non-salient rows ``i <= upto``, sorted.

    Every row past the length is non-salient, so ``upto`` may exceed ``len(mu)``.
    """
    salient = salient_rows(mu)
    return sorted(i + mu.part(i) for i in range(1, upto + 1) if i not in salient)


def staircase_rank(mu: Partition) -> int:
    """Largest k with ``mu_i >= k - i + 1`` for every ``i <= k``."""
    k = 0
    while all(mu.part(i) >= k + 1 - i + 1 for i in range(1, k + 2)):
        k += 1
    return k


def l_weight(mu: Partition, corner: Box) -> int:
    if not mu.has_box(corner):
        raise InvalidPartitionError(f"corner {corner} lies outside {mu}")
    return corner.row + mu.part(corner.row) - corner.col


def l_boxes(mu: Partition, corner: Box) -> set[Box]:
    if not mu.has_box(corner):
        raise InvalidPartitionError(f"corner {corner} lies outside {mu}")
    i, j = corner.row, corner.col
    return {Box(i, x) for x in range(j, mu.part(i) + 1)} | {Box(y, j) for y in range(1, i + 1)}


@dataclass(frozen=True)
class LSequence:
    """Nested L's, corners listed from bottom-left to top-right."""

    mu: Partition
    corners: tuple[Box, ...]

    def __post_init__(self):
        for c in self.corners:
            if not self.mu.has_box(c):
                raise InvalidPartitionError(f"corner {c} lies outside {self.mu}")
        for lo, hi in zip(self.corners, self.corners[1:]):
            if not (hi.row < lo.row and hi.col > lo.col):
                raise ValueError(f"corner {hi} is not strictly above and right of {lo}")

    @property
    def weight(self) -> int:
        return sum(l_weight(self.mu, c) for c in self.corners)


def max_nested_weight(mu: Partition, k: int) -> int | None:
    """Maximum weight ``w_k`` of ``k`` nested L's, ``None`` when none exist.

    Optimal corners sit in salient rows and the first ``k`` columns. Sliding
    their vertical legs into column 1 changes the weight by ``0 + 1 + ... +
    (k - 1)``, and a first-column L in row ``i`` weighs ``i + mu_i - 1``, so
    ``w_k`` is the sum of the ``k`` largest salient values minus ``k(k+1)/2``.
    """
    if k < 1:
        raise ValueError("k must be positive")
    s = s_signature(mu)
    if k > len(s):
        return None
    return s.top(k) - k * (k + 1) // 2


def w_vector(mu: Partition) -> list[int]:
    """``[w_1, ..., w_K]`` with K the staircase rank."""
    s = sorted(s_signature(mu).entries, reverse=True)
    out, total = [], 0
    for k, v in enumerate(s, 1):
        total += v
        out.append(total - k * (k + 1) // 2)
    return out


def optimal_sequence(mu: Partition, k: int) -> LSequence | None:
    """A nested sequence of ``k`` L's of weight ``w_k``.

    Picks the ``k`` salient rows with the largest values (lowest row on ties)
    and puts the t-th lowest corner in column t.
    """
    rows = sorted(salient_rows(mu), key=lambda i: (-(i + mu.part(i)), -i))[:k]
    if len(rows) < k:
        return None
    rows.sort(reverse=True)
    return LSequence(mu, tuple(Box(r, t) for t, r in enumerate(rows, 1)))


def nested_equivalent(mu: Partition, nu: Partition) -> bool:
    """Equal staircase ranks and equal ``w_k`` for every k up to that rank."""
    return staircase_rank(mu) == staircase_rank(nu) and w_vector(mu) == w_vector(nu)


def kth_salient_row_lengths(mu: Partition) -> Sequence[int]:
    """Lengths of the salient rows, bottom one first."""
    return [mu.part(i) for i in sorted(salient_rows(mu), reverse=True)]
