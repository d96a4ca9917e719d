"""Integer partitions viewed as Ferrers boards.

A partition is stored as a tuple of positive parts, largest first. Parts past
the stored length are zero, so ``mu.part(i)`` is defined for every ``i >= 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from rookeq.errors import InvalidPartitionError


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Indexing with ``[]`` is the ordinary 0-based tuple indexing; use
    :meth:`part` for the 1-based, zero-extended accessor.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(p) for p in parts)
        for p in parts:
            if p <= 0:
                raise InvalidPartitionError(f"parts must be positive, got {p}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise InvalidPartitionError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Sequence[int]) -> "Partition":
        # caller guarantees validity; skips the checks in __new__
        return tuple.__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """Return the ``i``-th part (1-based), 0 beyond the length."""
        if i < 1:
            raise IndexError("row indices start at 1")
        return self[i - 1] if i <= len(self) else 0

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def boxes(self) -> set["Box"]:
        return {Box(i, j) for i, row in enumerate(self, 1) for j in range(1, row + 1)}

    def has_box(self, box: "Box") -> bool:
        return box.row >= 1 and 1 <= box.col <= self.part(box.row)


@dataclass(frozen=True, order=True)
class Box:
    """Cell of a board; rows counted from the top, columns from the left, both from 1."""

    row: int
    col: int


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse the canonical comma-separated form, e.g. ``"4,3,3,2,2"``.

    The empty string is the empty partition. Surrounding whitespace around
    tokens is tolerated; anything else raises :class:`InvalidPartitionError`.
    """
    text = text.strip()
    if not text:
        return EMPTY
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            parts.append(int(token))
        except ValueError:
            raise InvalidPartitionError(f"malformed part {token!r} in {text!r}") from None
    return Partition(parts)


def conjugate(mu: Sequence[int]) -> Partition:
    """Column lengths of ``mu``: the j-th part is the number of rows of length >= j."""
    if not mu:
        return EMPTY
    cols = [0] * mu[0]
    for row in mu:
        for j in range(row):
            cols[j] += 1
    return Partition._trusted(cols)


def pointwise_sum(nu: Sequence[int], alpha: Sequence[int]) -> Partition:
    """Row-by-row sum ``nu_i + alpha_i``; adds the columns of ``alpha`` to ``nu``."""
    n = max(len(nu), len(alpha))
    nu = tuple(nu) + (0,) * (n - len(nu))
    alpha = tuple(alpha) + (0,) * (n - len(alpha))
    return Partition._trusted([a + b for a, b in zip(nu, alpha)])


def merge_rows(gamma: Sequence[int], beta: Sequence[int]) -> Partition:
    """Insert the rows of ``beta`` into ``gamma`` as new rows.

    Requires ``beta_1 <= gamma_1`` so that the top row is unchanged.
    """
    if beta and (not gamma or beta[0] > gamma[0]):
        raise InvalidPartitionError(
            f"row {beta[0]} is longer than the top row of {tuple(gamma)}"
        )
    return Partition._trusted(sorted((*gamma, *beta), reverse=True))


def durfee_rank(mu: Sequence[int]) -> int:
    """Side of the largest square fitting in the top-left corner."""
    d = 0
    while d < len(mu) and mu[d] >= d + 1:
        d += 1
    return d


def render_diagram(
    mu: Partition,
    highlights: Sequence[tuple[Iterable[Box], str]] = (),
) -> str:
    """Render ``mu`` as left-justified rows of ``#``.

    Each entry of ``highlights`` is a set of boxes and a one-character label;
    highlighted boxes are drawn with their label. Later sets win on overlap.
    The empty partition renders as the empty string.
    """
    grid = [["#"] * row for row in mu]
    for boxes, label in highlights:
        if len(label) != 1 or label == "#":
            raise ValueError(f"highlight label must be a single non-'#' character: {label!r}")
        for box in boxes:
            if not mu.has_box(box):
                raise InvalidPartitionError(f"box {box} lies outside {mu}")
            grid[box.row - 1][box.col - 1] = label
    return "\n".join("".join(row) for row in grid)
