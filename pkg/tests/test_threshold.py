"""Threshold encoding tests: construction strings, functionals, machines."""

import itertools

import pytest

from graphdd.bdd import build, count, enumerate_strings
from graphdd.errors import InvalidArgumentError
from graphdd.threshold import (
    thr_clique_number,
    thr_decode,
    thr_edge_count,
    thr_machine,
    thr_machine_clique,
    thr_machine_edges,
)


def all_strings(n):
    return ["".join(t) for t in itertools.product("LR", repeat=n - 1)]


def test_decode_examples():
    g = thr_decode("")
    assert g.n == 1 and g.edge_count == 0
    g = thr_decode("R")  # second vertex universal: an edge
    assert g.n == 2 and g.edge_count == 1
    g = thr_decode("L")
    assert g.n == 2 and g.edge_count == 0
    g = thr_decode("RR")  # triangle
    assert g.n == 3 and g.edge_count == 3
    g = thr_decode("LR")  # star center added last
    assert g.n == 3 and g.edge_count == 2


def test_every_string_decodes_to_threshold_graph():
    from graphdd.classes import THRESHOLD
    from graphdd.oracle import recognize

    for n in range(1, 7):
        for t in all_strings(n):
            assert recognize(thr_decode(t), THRESHOLD)


def test_functionals_match_decoded_graph():
    from graphdd.oracle import brute_clique_number

    for n in range(1, 8):
        for t in all_strings(n):
            g = thr_decode(t)
            assert g.n == n
            assert thr_edge_count(t) == g.edge_count
            assert thr_clique_number(t) == brute_clique_number(g)


def test_count_closed_form():
    for n in range(1, 20):
        assert count(build(thr_machine(n))) == 2 ** (n - 1)
    assert count(build(thr_machine(64))) == 2 ** 63


def test_distinct_strings_distinct_graphs():
    from graphdd.oracle import canonical_key

    for n in range(1, 7):
        keys = {canonical_key(thr_decode(t)) for t in all_strings(n)}
        assert len(keys) == 2 ** (n - 1)


def test_language_is_everything():
    for n in range(1, 7):
        d = build(thr_machine(n))
        assert set(enumerate_strings(d)) == set(all_strings(n))


def test_clique_machine():
    for n in range(1, 7):
        for k in range(1, n + 1):
            want = {t for t in all_strings(n) if thr_clique_number(t) <= k}
            got = set(enumerate_strings(build(thr_machine_clique(n, k))))
            assert got == want


def test_edges_machine():
    for n in range(1, 7):
        total = 0
        for m in range(0, n * (n - 1) // 2 + 1):
            want = {t for t in all_strings(n) if thr_edge_count(t) == m}
            got = set(enumerate_strings(build(thr_machine_edges(n, m))))
            assert got == want
            total += len(want)
        assert total == 2 ** (n - 1)


def test_machine_argument_validation():
    with pytest.raises(InvalidArgumentError):
        thr_machine(0)
    with pytest.raises(InvalidArgumentError):
        thr_machine_clique(3, 0)
    with pytest.raises(InvalidArgumentError):
        thr_machine_edges(3, -1)
