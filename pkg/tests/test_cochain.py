"""Cochain encoding tests: n-bit strings, expansions, machines."""

import itertools

import pytest

from graphdd.bdd import build, count, enumerate_strings
from graphdd.bitstring import inverse_alternate, reverse_complement
from graphdd.cochain import (
    cochain_clique_number,
    cochain_decode,
    cochain_edge_count,
    cochain_expand,
    cochain_from_expansion,
    cochain_machine,
    cochain_machine_clique,
    cochain_machine_edges,
    cochain_partner,
    cochain_valid,
    expansion_canonical,
    expansion_valid,
)
from graphdd.errors import InvalidArgumentError

# cochain graph counts n = 1..7 (complements of chain graphs, oracle-confirmed)
COCHAIN_GRAPH_COUNTS = [1, 2, 3, 6, 10, 20, 36]


def machine_language(machine):
    d = build(machine)
    out = set()
    for w in enumerate_strings(d):
        out.add(inverse_alternate(w) if machine.order == "alternate" else w)
    return out


def valid_strings(n):
    return [
        "".join(t)
        for t in itertools.product("LR", repeat=n)
        if not "".join(t).endswith("R")
    ]


def test_valid_rule():
    assert cochain_valid("L")
    assert not cochain_valid("R")
    assert cochain_valid("RL")
    assert not cochain_valid("LR")
    assert cochain_valid("RRL")


def test_unconstrained_count_is_power_of_two():
    for n in range(1, 11):
        assert count(build(cochain_machine(n))) == 2 ** (n - 1)


def test_unconstrained_language():
    for n in range(1, 8):
        assert machine_language(cochain_machine(n)) == set(valid_strings(n))


def test_expand_parse_round_trip():
    for n in range(1, 8):
        for c in valid_strings(n):
            s = cochain_expand(c)
            assert len(s) == 2 * n
            assert expansion_valid(s)
            assert cochain_from_expansion(s) == c


def test_expansion_valid_exactly_the_expansions():
    for n in range(1, 6):
        expansions = {cochain_expand(c) for c in valid_strings(n)}
        for t in itertools.product("LR", repeat=2 * n):
            s = "".join(t)
            assert expansion_valid(s) == (s in expansions)


def test_partner_properties():
    from graphdd.oracle import canonical_key

    for n in range(1, 8):
        for c in valid_strings(n):
            p = cochain_partner(c)
            assert cochain_valid(p)
            assert cochain_partner(p) == c
            assert canonical_key(cochain_decode(p)) == canonical_key(cochain_decode(c))


def test_known_duplicate_pair():
    from graphdd.oracle import canonical_key

    assert cochain_partner("RLL") == "RRL"
    a = cochain_decode("RLL")
    b = cochain_decode("RRL")
    assert a.n == b.n == 3
    assert a.edge_count == b.edge_count == 1
    assert canonical_key(a) == canonical_key(b)


def test_decoded_graph_set_sizes():
    from graphdd.oracle import canonical_key

    for n, want in enumerate(COCHAIN_GRAPH_COUNTS, start=1):
        keys = {canonical_key(cochain_decode(c)) for c in valid_strings(n)}
        assert len(keys) == want


def test_functionals_match_decoded_graph():
    from graphdd.oracle import brute_clique_number

    for n in range(1, 7):
        for c in valid_strings(n):
            g = cochain_decode(c)
            assert g.n == n
            assert cochain_edge_count(c) == g.edge_count
            assert cochain_clique_number(c) == brute_clique_number(g)


def test_expansion_canonicity_rule():
    from graphdd.bitstring import height_ge

    for n in range(1, 6):
        for c in valid_strings(n):
            s = cochain_expand(c)
            assert expansion_canonical(s) == height_ge(s, reverse_complement(s))


def test_constrained_machine_languages():
    for n in range(1, 6):
        expansions = {cochain_expand(c) for c in valid_strings(n)}
        canonical = {s for s in expansions if expansion_canonical(s)}
        from graphdd.pi import pi_clique_number, pi_edge_count

        for k in range(1, n + 1):
            want = {s for s in canonical if pi_clique_number(s) <= k}
            assert machine_language(cochain_machine_clique(n, k)) == want
        for m in range(0, n * (n - 1) // 2 + 1):
            want = {s for s in canonical if pi_edge_count(s) == m}
            assert machine_language(cochain_machine_edges(n, m)) == want


def test_machine_argument_validation():
    # n=0 is legal at this layer and accepts exactly the empty string
    assert machine_language(cochain_machine(0)) == {""}
    with pytest.raises(InvalidArgumentError):
        cochain_machine(-1)
    with pytest.raises(InvalidArgumentError):
        cochain_machine_clique(3, 0)
    with pytest.raises(InvalidArgumentError):
        cochain_machine_edges(3, -1)
