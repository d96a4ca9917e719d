"""Rook numbers, the i + mu_i multiset criterion, and strict normal forms."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from rookeq.partition import EMPTY, Partition, conjugate
from rookeq.salient import s_signature


@lru_cache(maxsize=64)
def _partitions(n: int, max_part: int) -> tuple[Partition, ...]:
    if n == 0:
        return (EMPTY,)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            out.append(Partition._trusted((first, *rest)))
    return tuple(out)


def enumerate_partitions(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order.

    >>> [str(p) for p in enumerate_partitions(4)]
    ['4', '3,1', '2,2', '2,1,1', '1,1,1,1']

    ``max_part`` restricts to partitions whose largest part is at most that.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_partitions(n, n if max_part is None else max(0, min(n, max_part))))


def rook_numbers(mu: Partition) -> tuple[int, ...]:
    """Rook vector ``(r_0, r_1, ..., r_K)`` with trailing zeros trimmed.

    Columns are processed shortest first; a column of height b, placed after
    t - 1 rooks already sit in shorter columns, has b - (t - 1) free cells.
    """
    heights = sorted(conjugate(mu))
    d = [1]
    for b in heights:
        nxt = d + [0]
        for t in range(1, len(d) + 1):
            nxt[t] += d[t - 1] * max(0, b - (t - 1))
        d = nxt
    while len(d) > 1 and d[-1] == 0:
        d.pop()
    return tuple(d)


@dataclass(frozen=True)
class MSignature:
    """Finite part of the multiset ``{i + mu_i}``.

    Only rows ``1..length`` are stored; the implicit tail is
    ``length + 1, length + 2, ...``.
    """

    entries: tuple[int, ...]
    length: int

    def padded(self, n: int) -> tuple[int, ...]:
        """Entries for rows ``1..n`` (``n >= length``), sorted."""
        if n < self.length:
            raise ValueError("cannot pad below the stored length")
        return tuple(sorted(self.entries + tuple(range(self.length + 1, n + 1))))


def m_signature(mu: Partition) -> MSignature:
    return MSignature(tuple(sorted(i + p for i, p in enumerate(mu, 1))), len(mu))


def rook_equivalent(mu: Partition, nu: Partition) -> bool:
    if mu.weight != nu.weight:
        return False
    n = max(len(mu), len(nu))
    return m_signature(mu).padded(n) == m_signature(nu).padded(n)


def class_key(mu: Partition) -> tuple[int, ...]:
    """Class invariant for partitions of a fixed weight: the signature padded to the weight."""
    return m_signature(mu).padded(mu.weight)


def strict_normal_form(mu: Partition) -> Partition:
    """The unique strict partition rook equivalent to ``mu``.

    Sorting the salient values ``s_1 > s_2 > ... > s_K`` and subtracting the row
    index gives the strict representative.
    """
    s = sorted(s_signature(mu).entries, reverse=True)
    return Partition._trusted([v - t for t, v in enumerate(s, 1)])


@dataclass(frozen=True)
class RookClass:
    n: int
    strict_rep: Partition
    members: tuple[Partition, ...]

    @property
    def m_signature_entries(self) -> tuple[int, ...]:
        return class_key(self.strict_rep) if self.n else ()

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "strict_rep": str(self.strict_rep),
            "members": [str(p) for p in self.members],
            "m_signature_entries": list(self.m_signature_entries),
        }


def rook_classes(n: int, key=class_key) -> list[RookClass]:
    """Split the partitions of ``n`` into rook-equivalence classes.

    ``key`` maps a partition to its class invariant; pass
    :func:`rook_numbers` (or the exhaustive oracle) to group by rook vectors
    instead of signatures. Members and classes come out in reverse-lex order
    of their largest member.
    """
    groups: dict[object, list[Partition]] = {}
    for mu in enumerate_partitions(n):
        groups.setdefault(key(mu), []).append(mu)
    classes = []
    for members in groups.values():
        strict = [p for p in members if p.is_strict()]
        if len(strict) != 1:
            raise AssertionError(f"class {members} has strict members {strict}")
        classes.append(RookClass(n, strict[0], tuple(members)))
    return classes
