"""Cochain graphs: two cliques X and Y with nested cross-neighborhoods.

The n-bit encoding c lists, left to right, the closing order of the X
intervals (R) interleaved with the opening order of the Y intervals (L); its
2n-bit expansion L^{n_X} . c . R^{n_Y} is a relaxed proper-interval string
that decodes the graph.  Every n-bit string not ending in R is a valid
encoding.  The encoding is not injective on unlabeled graphs: swapping the
roles of X and Y maps the expansion s to reverse_complement(s), and the two
n-bit forms of one graph are L^a.w and L^a.reverse_complement(w) (a = count
of universal vertices, forced into Y).  The unconstrained machine accepts all
valid encodings, duplicates included; the constrained machines run on the
2n-bit expansion, where the pairing aligns with the outside-in order, and
keep exactly the expansions with s >= reverse_complement(s), one per graph.
"""

from __future__ import annotations

from .bdd import StateMachine
from .bitstring import check_string, height_ge, reverse_complement
from .errors import InvalidArgumentError
from .graphs import Graph
from .pi import pi_clique_number, pi_decode, pi_edge_count


def cochain_valid(c: str) -> bool:
    """Valid encodings are empty or end with L (a trailing R would re-encode
    a universal vertex that the format keeps in Y)."""
    check_string(c)
    return c == "" or c[-1] == "L"


def cochain_expand(c: str) -> str:
    """L^{n_X} . c . R^{n_Y} with n_X = #R(c): open all X, replay c, close all Y."""
    if not cochain_valid(c):
        raise InvalidArgumentError("cochain encodings must not end with R")
    n_x = c.count("R")
    return "L" * n_x + c + "R" * (len(c) - n_x)


def cochain_decode(c: str) -> Graph:
    """Decode via the proper-interval reading of the expansion."""
    return pi_decode(cochain_expand(c))


def cochain_clique_number(c: str) -> int:
    return pi_clique_number(cochain_expand(c))


def cochain_edge_count(c: str) -> int:
    return pi_edge_count(cochain_expand(c))


def cochain_partner(c: str) -> str:
    """The other encoding of the same unlabeled graph (may equal c).

    Leading L's are universal vertices and stay put; the remainder flips to
    its reverse-complement, which is the X/Y swap seen at the n-bit level.
    """
    if not cochain_valid(c):
        raise InvalidArgumentError("cochain encodings must not end with R")
    a = len(c) - len(c.lstrip("L"))
    return c[:a] + reverse_complement(c[a:])


def expansion_valid(s: str) -> bool:
    """True iff s is the expansion of some valid n-bit encoding.

    Characterization: |s| even, exactly half the characters L, prefix heights
    never negative, and leading-L run + trailing-R run >= n.  The parse is
    then unique with n_X = (last L position) - n.
    """
    check_string(s)
    if len(s) % 2:
        return False
    if s == "":
        return True
    n = len(s) // 2
    if s.count("L") != n:
        return False
    h = 0
    for ch in s:
        h += 1 if ch == "L" else -1
        if h < 0:
            return False
    lead = len(s) - len(s.lstrip("L"))
    trail = len(s) - len(s.rstrip("R"))
    return lead + trail >= n


def expansion_canonical(s: str) -> bool:
    """One expansion per unlabeled graph: s >= reverse_complement(s)."""
    if not expansion_valid(s):
        raise InvalidArgumentError("not a valid cochain expansion")
    return height_ge(s, reverse_complement(s))


def cochain_from_expansion(s: str) -> str:
    """Inverse of cochain_expand on valid expansions."""
    if not expansion_valid(s):
        raise InvalidArgumentError("not a valid cochain expansion")
    if s == "":
        return ""
    n = len(s) // 2
    last_l = s.rfind("L") + 1  # 1-based position
    n_x = last_l - n
    return s[n_x : n_x + n]


def cochain_machine(n: int) -> StateMachine:
    """All valid n-bit encodings (last character L); no duplicate removal.

    One graph can appear under two encodings here; exact one-per-graph
    acceptance provably needs exponential width at this representation, so
    the duplication is surfaced by the verification report instead.
    """
    if n < 0:
        raise InvalidArgumentError("vertex count must be non-negative")

    def transition(state, level, sym):
        if level == n and sym == "R":
            return None
        return 0

    return StateMachine(
        length=n,
        initial=0,
        transition=transition,
        accept=lambda state: True,
        order="natural",
    )


def _expansion_machine(n: int, cap=None, target=None) -> StateMachine:
    """Constrained machines over the 2n-bit expansion, outside-in order.

    State: (front_in_run, lead, h_front, back_in_run, trail, h_back, flag)
    plus an edge accumulator in the edge variant.  lead/trail measure the
    leading-L and trailing-R runs whose sum must reach n; heights may touch
    zero (disconnected graphs allowed); flag runs the reverse-complement
    comparison exactly as in the proper-interval machine.
    """
    if n < 0:
        raise InvalidArgumentError("vertex count must be non-negative")
    if cap is not None and cap < 1:
        raise InvalidArgumentError("clique bound must be at least 1")
    if target is not None and target < 0:
        raise InvalidArgumentError("edge count must be non-negative")
    total = 2 * n
    with_acc = target is not None

    def transition(state, level, sym):
        if with_acc:
            f_run, lead, h_f, b_run, trail, h_b, flag, acc = state
        else:
            f_run, lead, h_f, b_run, trail, h_b, flag = state
            acc = 0
        if level & 1:  # front character of the expansion
            if sym == "L":
                h_f += 1
                if cap is not None and h_f > cap:
                    return None
                if with_acc:
                    acc += h_f - 1
                    if acc > target:
                        return None
                if f_run:
                    lead += 1
            else:
                h_f -= 1
                if h_f < 0:
                    return None
                f_run = 0
        else:  # back character
            if not flag:
                if h_f - 1 == h_b:  # front character of this pair was L
                    if sym == "L":
                        flag = 1
                else:
                    if sym == "R":
                        return None
            if sym == "L":
                if with_acc:
                    acc += h_b - 1
                    if acc > target:
                        return None
                h_b -= 1
                if h_b < 0:
                    return None
                b_run = 0
            else:
                h_b += 1
                if cap is not None and h_b > cap:
                    return None
                if b_run:
                    trail += 1
        if abs(h_f - h_b) > total - level:
            return None
        if not f_run and not b_run and lead + trail < n:
            return None  # expansion shape can no longer hold
        if with_acc:
            return (f_run, lead, h_f, b_run, trail, h_b, flag, acc)
        return (f_run, lead, h_f, b_run, trail, h_b, flag)

    def accept(state):
        if state[2] != state[5]:  # heights must meet
            return False
        if state[1] + state[4] < n:
            return False
        if with_acc and state[7] != target:
            return False
        return True

    initial = (1, 0, 0, 1, 0, 0, 0, 0) if with_acc else (1, 0, 0, 1, 0, 0, 0)
    return StateMachine(
        length=total,
        initial=initial,
        transition=transition,
        accept=accept,
        order="alternate",
    )


def cochain_machine_clique(n: int, k: int) -> StateMachine:
    """Canonical expansions whose graph has clique number at most k."""
    return _expansion_machine(n, cap=k)


def cochain_machine_edges(n: int, m: int) -> StateMachine:
    """Canonical expansions whose graph has exactly m edges."""
    return _expansion_machine(n, target=m)
