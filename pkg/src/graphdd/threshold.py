"""Threshold graphs encoded as vertex-addition sequences.

A graph on n vertices is encoded by the length-(n-1) string over {L, R} that
builds it one vertex at a time on top of a single initial vertex: L adds an
isolated vertex, R adds a universal one (adjacent to everything so far).
Every such string is a valid encoding and distinct strings give distinct
unlabeled graphs, so no canonicity filter is needed.
"""

from __future__ import annotations

from .bdd import StateMachine
from .bitstring import check_string
from .errors import InvalidArgumentError
from .graphs import Graph


def thr_decode(t: str) -> Graph:
    """Replay the addition sequence; vertex 0 is the initial vertex."""
    check_string(t)
    n = len(t) + 1
    edges = []
    for j, ch in enumerate(t, start=1):
        if ch == "R":
            edges.extend((u, j) for u in range(j))
    return Graph(n, edges)


def thr_edge_count(t: str) -> int:
    """A universal vertex added at 1-based position j contributes j edges."""
    check_string(t)
    return sum(j for j, ch in enumerate(t, start=1) if ch == "R")


def thr_clique_number(t: str) -> int:
    """The initial vertex plus all universal additions form a maximum clique."""
    check_string(t)
    return t.count("R") + 1


def thr_machine(n: int) -> StateMachine:
    """Machine of length n-1 accepting every addition sequence."""
    if n < 1:
        raise InvalidArgumentError("threshold machines need n >= 1")
    return StateMachine(
        length=n - 1,
        initial=0,
        transition=lambda state, level, sym: 0,
        accept=lambda state: True,
        order="natural",
    )


def thr_machine_clique(n: int, k: int) -> StateMachine:
    """Addition sequences whose graph has clique number at most k.

    Clique number is (number of R characters) + 1, so the machine just caps a
    running R count at k-1.
    """
    if n < 1:
        raise InvalidArgumentError("threshold machines need n >= 1")
    if k < 1:
        raise InvalidArgumentError("clique bound must be at least 1")

    def transition(state, level, sym):
        if sym == "L":
            return state
        return state + 1 if state + 1 <= k - 1 else None

    return StateMachine(
        length=n - 1,
        initial=0,
        transition=transition,
        accept=lambda state: True,
        order="natural",
    )


def thr_machine_edges(n: int, m: int) -> StateMachine:
    """Addition sequences whose graph has exactly m edges.

    R at 1-based position j adds j edges; the accumulator is monotone, so any
    overshoot prunes immediately.
    """
    if n < 1:
        raise InvalidArgumentError("threshold machines need n >= 1")
    if m < 0:
        raise InvalidArgumentError("edge count must be non-negative")

    def transition(state, level, sym):
        if sym == "L":
            return state
        acc = state + level
        return acc if acc <= m else None

    return StateMachine(
        length=n - 1,
        initial=0,
        transition=transition,
        accept=lambda state: state == m,
        order="natural",
    )
