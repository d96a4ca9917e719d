"""Pattern containment of Ferrers boards and containment counts.

``alpha`` contains ``mu`` when deleting some rows and columns of ``alpha``
leaves exactly ``mu``. P_n(mu) is the set of partitions of n containing mu,
and P_n(mu, k) the ones among them with first part ``mu_1 + k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from rookeq.errors import InvalidPartitionError, PreconditionError
from rookeq.partition import EMPTY, Partition, merge_rows, pointwise_sum
from rookeq.rook import enumerate_partitions


@dataclass(frozen=True)
class ContainmentWitness:
    """Rows and columns of the host that are kept (1-based, increasing)."""

    kept_rows: tuple[int, ...]
    kept_columns: tuple[int, ...]

    def restrict(self, host: Partition) -> Partition:
        shape = []
        for r in self.kept_rows:
            length = sum(1 for c in self.kept_columns if c <= host.part(r))
            if length:
                shape.append(length)
        return Partition(shape)


def containment_witness(alpha: Partition, mu: Partition) -> ContainmentWitness | None:
    """Certificate that ``alpha`` contains ``mu``, or ``None``.

    With kept host rows ``i_1 < ... < i_l`` of lengths ``a_1 >= ... >= a_l``,
    the columns can be chosen iff ``a_t - a_{t+1} >= mu_t - mu_{t+1}`` for all
    t (taking ``a_{l+1} = mu_{l+1} = 0``). Rows are picked greedily from the
    bottom, always taking the lowest row that still works; the kept columns
    are the leftmost ``mu_t - mu_{t+1}`` in each interval ``(a_{t+1}, a_t]``.
    """
    ell = len(mu)
    rows: list[int] = []
    below_value, below_index = 0, len(alpha) + 1
    for t in range(ell, 0, -1):
        need = below_value + mu.part(t) - mu.part(t + 1)
        idx = below_index - 1
        while idx >= 1 and alpha[idx - 1] < need:
            idx -= 1
        if idx < 1:
            return None
        rows.append(idx)
        below_value, below_index = alpha[idx - 1], idx
    rows.reverse()

    cols = []
    lengths = [alpha[r - 1] for r in rows] + [0]
    for t in range(ell):
        gap = mu[t] - (mu[t + 1] if t + 1 < ell else 0)
        cols.extend(range(lengths[t + 1] + 1, lengths[t + 1] + gap + 1))
    return ContainmentWitness(tuple(rows), tuple(sorted(cols)))


@lru_cache(maxsize=1 << 16)
def contains(alpha: Partition, mu: Partition) -> bool:
    if mu.weight > alpha.weight or len(mu) > len(alpha):
        return False
    return containment_witness(alpha, mu) is not None


def count_containing(n: int, mu: Partition, *, oracle: bool = False) -> int:
    """``|P_n(mu)|`` by enumerating every partition of ``n``."""
    test = _oracle_contains if oracle else contains
    return sum(1 for alpha in enumerate_partitions(n) if test(alpha, mu))


def count_containing_top(n: int, mu: Partition, k: int, *, oracle: bool = False) -> int:
    """``|P_n(mu, k)|``: members of P_n(mu) whose first part is ``mu_1 + k``."""
    test = _oracle_contains if oracle else contains
    top = mu.part(1) + k
    if top > n:
        return 0
    # partitions with first part exactly `top`
    return sum(
        1
        for rest in enumerate_partitions(n - top, max_part=top)
        if test(Partition._trusted((top, *rest)), mu)
    )


def _oracle_contains(alpha: Partition, mu: Partition) -> bool:
    from rookeq.oracles import contains_exhaustive

    return contains_exhaustive(alpha, mu)


@dataclass(frozen=True)
class ExtensionPair:
    alpha: Partition  # added as columns
    beta: Partition  # added as rows

    @property
    def k(self) -> int:
        return self.alpha.part(1)

    @property
    def weight(self) -> int:
        return self.alpha.weight + self.beta.weight


def extend(nu: Partition, pair: ExtensionPair) -> Partition:
    """Add the columns of ``alpha`` to ``nu``, then the rows of ``beta``.

    The result has first part ``nu_1 + alpha_1`` and contains ``nu``.
    """
    widened = pointwise_sum(nu, pair.alpha)
    if pair.beta.part(1) > widened.part(1):
        raise InvalidPartitionError(
            f"beta_1 = {pair.beta.part(1)} exceeds nu_1 + k = {widened.part(1)}"
        )
    return merge_rows(widened, pair.beta)


def extension_pairs(nu: Partition, k: int, w: int):
    """Every pair with ``alpha_1 = k`` (alpha empty iff k = 0), ``beta_1 <= nu_1 + k``
    and total weight ``w``."""
    cap = nu.part(1) + k
    if k == 0:
        alphas = [EMPTY]
    else:
        alphas = [
            Partition._trusted((k, *rest))
            for a in range(k, w + 1)
            for rest in enumerate_partitions(a - k, max_part=k)
        ]
    for alpha in alphas:
        for beta in enumerate_partitions(w - alpha.weight, max_part=cap):
            yield ExtensionPair(alpha, beta)


def enumerate_extensions(nu: Partition, k: int, w: int) -> set[Partition]:
    return {extend(nu, pair) for pair in extension_pairs(nu, k, w)}


@dataclass(frozen=True)
class Distinction:
    """Weight at which two distinct strict partitions have different counts.

    ``larger`` is the argument whose containment count is predicted to be
    strictly bigger at ``weight``.
    """

    weight: int
    r: int
    m: int
    smaller: Partition
    larger: Partition

    def to_record(self) -> dict:
        return {"weight": self.weight, "r": self.r, "m": self.m,
                "smaller": str(self.smaller), "larger": str(self.larger)}


def distinguishing_weight(mu: Partition, nu: Partition) -> Distinction:
    """For distinct strict partitions of equal weight n, return ``n + m - 1``.

    ``r`` is the last row where the two differ, the partition with the longer
    r-th row is ``larger``, and ``m = r + larger_r``.
    """
    if not (mu.is_strict() and nu.is_strict()):
        raise PreconditionError("both partitions must be strict")
    if mu == nu:
        raise PreconditionError("partitions must be distinct")
    if mu.weight != nu.weight:
        raise PreconditionError(f"weights differ: {mu.weight} vs {nu.weight}")
    r = max(i for i in range(1, max(len(mu), len(nu)) + 1) if mu.part(i) != nu.part(i))
    small, large = (mu, nu) if mu.part(r) < nu.part(r) else (nu, mu)
    m = r + large.part(r)
    return Distinction(mu.weight + m - 1, r, m, small, large)


def wilf_equivalent_up_to(mu: Partition, nu: Partition, N: int, *, oracle: bool = False) -> bool:
    """Equal containment counts for every weight ``1..N``."""
    return all(
        count_containing(t, mu, oracle=oracle) == count_containing(t, nu, oracle=oracle)
        for t in range(1, N + 1)
    )


def first_difference(mu: Partition, nu: Partition, N: int) -> int | None:
    """Smallest ``t <= N`` with different counts, if any."""
    for t in range(1, N + 1):
        if count_containing(t, mu) != count_containing(t, nu):
            return t
    return None
