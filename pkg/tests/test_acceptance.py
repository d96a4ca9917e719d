"""Exit criteria. Each test records one PASS/FAIL line, shown in the pytest summary."""

import time
from collections import Counter
from itertools import combinations

import pytest

from conftest import ACCEPTANCE_LINES
from rookeq import (
    Box,
    ExtensionPair,
    LSequence,
    Partition,
    contains,
    count_containing,
    count_containing_top,
    distinguishing_weight,
    enumerate_extensions,
    enumerate_partitions,
    extend,
    i1_class,
    ij_transform,
    m_signature,
    max_nested_weight,
    rook_numbers,
    s_signature,
    salient_rows,
    staircase_rank,
    strict_normal_form,
    w_vector,
)
from rookeq.oracles import (
    contains_exhaustive,
    max_nested_weight_oracle,
    maximal_nested_sequences,
    rook_numbers_exhaustive,
)
from rookeq.salient import kth_salient_row_lengths, non_salient_values

P = Partition


def record(number, title, failures, extra=""):
    ok = not failures
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
    if extra:
        line += f" ({extra})"
    if not ok:
        line += f" -- {len(failures)} failure(s), first: {failures[0]}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def grouping(parts, key):
    groups = {}
    for mu in parts:
        groups.setdefault(key(mu), set()).add(mu)
    return {frozenset(g) for g in groups.values()}


def test_criterion_1_criteria_agree():
    start = time.perf_counter()
    failures = []
    for n in range(13):
        parts = enumerate_partitions(n)
        by_m = grouping(parts, lambda mu: m_signature(mu).padded(n))
        by_s = grouping(parts, lambda mu: s_signature(mu).entries)
        by_w = grouping(parts, lambda mu: (staircase_rank(mu), tuple(w_vector(mu))))
        if not by_m == by_s == by_w:
            failures.append(f"n={n}: M/S/w groupings differ")
        if n <= 10:
            by_rook = grouping(parts, rook_numbers)
            by_bfs = {i1_class(mu) for mu in parts}
            if not by_m == by_rook == by_bfs:
                failures.append(f"n={n}: rook-vector or (i,1)-BFS grouping differs")
    elapsed = time.perf_counter() - start
    if elapsed > 120:
        failures.append(f"runtime {elapsed:.1f}s exceeds 120s")
    record(1, "M / S / w-vector / rook-vector / (i,1)-BFS classes coincide", failures,
           f"{elapsed:.2f}s")


def test_criterion_2_unique_strict_representative():
    failures = []
    for n in range(13):
        parts = enumerate_partitions(n)
        for cls in grouping(parts, lambda mu: m_signature(mu).padded(n)):
            strict = [mu for mu in cls if mu.is_strict()]
            if len(strict) != 1:
                failures.append(f"n={n}: class {sorted(cls)} has strict members {strict}")
                continue
            for mu in cls:
                rho = strict_normal_form(mu)
                if rho != strict[0]:
                    failures.append(f"normal form of {mu} is {rho}, expected {strict[0]}")
                if strict_normal_form(rho) != rho:
                    failures.append(f"normal form not idempotent at {mu}")
    record(2, "each class has exactly one strict member, the normal form", failures)


def test_criterion_3_worked_examples():
    failures = []

    def check(label, got, want):
        if got != want:
            failures.append(f"{label}: got {got!r}, want {want!r}")

    host = P([6, 5, 5, 5, 4, 4, 2, 2])
    check("containment figure", contains(host, P([4, 3, 3, 2, 2])), True)
    check("containment figure (oracle)", contains_exhaustive(host, P([4, 3, 3, 2, 2])), True)
    check("(2,3)-transform", ij_transform(P([6, 5, 5, 5, 4, 2]), 2, 3), P([6, 6, 6, 5, 2, 2]))
    fig = P([6, 5, 5, 5, 4, 2])
    check("nested L weight", LSequence(fig, (Box(5, 1), Box(3, 3), Box(2, 5))).weight, 15)
    mu = P([4, 3, 3, 2, 2, 2])
    check("salient rows", salient_rows(mu), frozenset({1, 3, 5, 6}))
    check("salient multiset", s_signature(mu).entries, (5, 6, 7, 8))
    a, b = ExtensionPair(P([1, 1, 1]), P([3, 1])), ExtensionPair(P([1, 1]), P([3, 2]))
    check("extension of mu, first pair", extend(P([10, 7, 1]), a), P([11, 8, 3, 2, 1]))
    check("extension of mu, second pair", extend(P([10, 7, 1]), b), P([11, 8, 3, 2, 1]))
    check("extension of nu, first pair", extend(P([7, 6, 5]), a), P([8, 7, 6, 3, 1]))
    check("extension of nu, second pair", extend(P([7, 6, 5]), b), P([8, 7, 5, 3, 2]))
    record(3, "worked examples reproduce exactly", failures)


def test_criterion_4_oracle_equivalences():
    failures = []
    boards = 0
    for n in range(9):
        for mu in enumerate_partitions(n):
            boards += 1
            if rook_numbers(mu) != rook_numbers_exhaustive(mu):
                failures.append(f"rook numbers of {mu}")
    pairs = 0
    for n in range(9):
        for host in enumerate_partitions(n):
            for m in range(n + 1):
                for pat in enumerate_partitions(m):
                    pairs += 1
                    if contains(host, pat) != contains_exhaustive(host, pat):
                        failures.append(f"containment of {pat} in {host}")
    wk = 0
    for n in range(13):
        for mu in enumerate_partitions(n):
            for k in range(1, staircase_rank(mu) + 2):
                wk += 1
                if max_nested_weight(mu, k) != max_nested_weight_oracle(mu, k):
                    failures.append(f"w_{k} of {mu}")
    record(4, "fast paths equal exhaustive oracles", failures,
           f"{boards} boards, {pairs} containment pairs, {wk} w_k values")


def strict_partitions(n):
    return [mu for mu in enumerate_partitions(n) if mu.is_strict()]


def test_criterion_5_wilf_theorems():
    start = time.perf_counter()
    failures = []
    for n in range(1, 9):
        parts = enumerate_partitions(n)
        for mu, nu in combinations(parts, 2):
            if strict_normal_form(mu) != strict_normal_form(nu):
                continue
            for t in range(1, n + 7):
                if count_containing(t, mu) != count_containing(t, nu):
                    failures.append(f"rook-equivalent {mu}, {nu} differ at t={t}")
        for x, y in combinations(strict_partitions(n), 2):
            d = distinguishing_weight(x, y)
            mu, nu, N, m = d.smaller, d.larger, d.weight, d.m
            if not count_containing(N, mu) < count_containing(N, nu):
                failures.append(f"{mu} vs {nu}: counts at {N} not strictly increasing")
            for k in range(N + 1):
                a, b = count_containing_top(N, mu, k), count_containing_top(N, nu, k)
                if a > b or (k == 1 and a >= b):
                    failures.append(f"{mu} vs {nu}: stratum k={k} has {a} vs {b}")
            if not (nu.part(1) >= m - 1 and mu.part(1) > m - 1):
                failures.append(f"{mu} vs {nu}: top-row bounds fail for m={m}")
    elapsed = time.perf_counter() - start
    record(5, "Wilf counts: equal for rook-equivalent pairs, separated for strict pairs",
           failures, f"{elapsed:.2f}s")


def test_criterion_6_structural_lemmas():
    failures = []
    for n in range(15):
        for mu in enumerate_partitions(n):
            k = staircase_rank(mu)
            if len(salient_rows(mu)) != k:
                failures.append(f"{mu}: {len(salient_rows(mu))} salient rows, rank {k}")
            top = len(mu) + k + 5
            vals = [v for v in non_salient_values(mu, top) if v <= top]
            if vals != list(range(k + 1, top + 1)):
                failures.append(f"{mu}: non-salient values {vals}")
            for idx, length in enumerate(kth_salient_row_lengths(mu), 1):
                if length < idx:
                    failures.append(f"{mu}: salient row {idx} from the bottom has length {length}")
            if n <= 12:
                sal = salient_rows(mu)
                for kk in range(1, k + 1):
                    for seq in maximal_nested_sequences(mu, kk)[1]:
                        if not {c.row for c in seq} <= sal:
                            failures.append(f"{mu}: optimal sequence {seq} leaves salient rows")
    record(6, "salient-row lemmas", failures)


def test_criterion_7_extension_completeness():
    failures = []
    cases = 0
    for n in range(1, 9):
        for nu in strict_partitions(n):
            for k in range(5):
                for w in range(7):
                    cases += 1
                    got = enumerate_extensions(nu, k, w)
                    top = nu.part(1) + k
                    want = {a for a in enumerate_partitions(n + w)
                            if a and a[0] == top and contains(a, nu)}
                    if got != want:
                        failures.append(f"nu={nu}, k={k}, w={w}: "
                                        f"missing {sorted(want - got)}, extra {sorted(got - want)}")
    record(7, "extensions enumerate exactly the containing partitions", failures, f"{cases} cases")
