"""Chain encoding tests: decode, biclique/edge functionals, machines."""

import itertools

import pytest

from graphdd.bdd import build, count, enumerate_strings
from graphdd.bitstring import inverse_alternate
from graphdd.chain import (
    chain_biclique_number,
    chain_canonical,
    chain_decode,
    chain_edge_count,
    chain_machine,
    chain_machine_biclique,
    chain_machine_edges,
)
from graphdd.errors import InvalidArgumentError, UndefinedBicliqueError

# oracle-confirmed chain graph counts for n = 1..7
CHAIN_COUNTS = [1, 2, 3, 6, 10, 20, 36]


def machine_language(machine):
    d = build(machine)
    out = set()
    for w in enumerate_strings(d):
        out.add(inverse_alternate(w) if machine.order == "alternate" else w)
    return out


def all_strings(n):
    return ["".join(t) for t in itertools.product("LR", repeat=n)]


def test_decode_examples():
    g = chain_decode("LLR")  # no R before any L: edgeless
    assert g.n == 3 and g.edge_count == 0
    g = chain_decode("RLL")  # first vertex joined to both others
    assert g.n == 3 and g.edges == frozenset({(0, 1), (0, 2)})
    g = chain_decode("LRL")
    assert g.edges == frozenset({(1, 2)})
    g = chain_decode("")
    assert g.n == 0 and g.edge_count == 0


def test_decoded_graphs_are_bipartite_chain():
    from graphdd.classes import CHAIN
    from graphdd.oracle import recognize

    for n in range(1, 7):
        for c in all_strings(n):
            assert recognize(chain_decode(c), CHAIN)


def test_edge_count_matches_decode():
    for n in range(1, 8):
        for c in all_strings(n):
            assert chain_edge_count(c) == chain_decode(c).edge_count


def test_biclique_number_matches_brute_force():
    from graphdd.oracle import brute_biclique_number

    for n in range(1, 8):
        for c in all_strings(n):
            brute = brute_biclique_number(chain_decode(c))
            if brute == 0:
                with pytest.raises(UndefinedBicliqueError):
                    chain_biclique_number(c)
            else:
                assert chain_biclique_number(c) == brute


def test_machine_counts_frozen():
    for n, want in enumerate(CHAIN_COUNTS, start=1):
        assert count(build(chain_machine(n))) == want


def test_machine_language_is_canonical_set():
    for n in range(1, 8):
        want = {c for c in all_strings(n) if chain_canonical(c)}
        assert machine_language(chain_machine(n)) == want


def test_canonical_strings_cover_every_graph_once():
    from graphdd.oracle import canonical_key

    for n in range(1, 8):
        all_keys = {canonical_key(chain_decode(c)) for c in all_strings(n)}
        canon_keys = [
            canonical_key(chain_decode(c))
            for c in all_strings(n)
            if chain_canonical(c)
        ]
        assert len(canon_keys) == len(set(canon_keys)) == len(all_keys)


def test_edges_machine_language():
    for n in range(1, 7):
        base = {c for c in all_strings(n) if chain_canonical(c)}
        total = 0
        for m in range(0, n * n // 4 + 1):
            want = {c for c in base if chain_edge_count(c) == m}
            assert machine_language(chain_machine_edges(n, m)) == want
            total += len(want)
        assert total == len(base)


def test_biclique_machine_language():
    for n in range(1, 7):
        base = {c for c in all_strings(n) if chain_canonical(c)}
        for k in range(2, n + 1):
            want = set()
            for c in base:
                try:
                    if chain_biclique_number(c) <= k:
                        want.add(c)
                except UndefinedBicliqueError:
                    want.add(c)  # edgeless: vacuously within any bound
            assert machine_language(chain_machine_biclique(n, k)) == want


def test_machine_argument_validation():
    with pytest.raises(InvalidArgumentError):
        chain_machine_biclique(4, 1)  # any edge already forms a 2-biclique
    with pytest.raises(InvalidArgumentError):
        chain_machine_edges(4, -1)


def test_zero_length_machine_accepts_empty():
    d = build(chain_machine(0))
    assert count(d) == 1
    assert list(enumerate_strings(d)) == [""]
