"""Proper interval graphs as balanced 2n-bit strings.

A connected proper interval graph on n vertices corresponds to a string with n
L's and n R's: reading left to right, L opens an interval and R closes the
oldest open one.  The canonical representative of a graph is the
height-greater of the string and its reverse-complement.  Machines run in the
alternate (outside-in) variable order and keep two height counters plus a
canonicity flag, so the diagram width stays quadratic in n.
"""

from __future__ import annotations

from .bdd import StateMachine
from .bitstring import check_string, height_ge, height_profile, reverse_complement
from .errors import InvalidArgumentError
from .graphs import Graph


def pi_valid(s: str) -> bool:
    """Connected-representation test: starts L, ends R, balanced, interior heights positive."""
    check_string(s)
    if len(s) % 2:
        raise InvalidArgumentError("representation strings have even length")
    if not s or s[0] != "L" or s[-1] != "R":
        return False
    profile = height_profile(s)
    return profile[-1] == 0 and all(h > 0 for h in profile[1:-1])


def pi_canonical(s: str) -> bool:
    """True iff s is height-greater-or-equal to its reverse-complement."""
    if not pi_valid(s):
        raise InvalidArgumentError("not a valid connected representation string")
    return height_ge(s, reverse_complement(s))


def _relaxed_check(s: str) -> list:
    """Balanced, never-negative height profile; allows disconnected interval systems."""
    check_string(s)
    if len(s) % 2:
        raise InvalidArgumentError("representation strings have even length")
    profile = height_profile(s)
    if s and (profile[-1] != 0 or min(profile) < 0):
        raise InvalidArgumentError("string is not a balanced interval representation")
    return profile


def pi_decode(s: str) -> Graph:
    """Interpret L as opening an interval and R as closing the oldest open one.

    Accepts any balanced, never-negative string, so disconnected systems (used
    by the clique-chain encoding) decode too.  Vertex i is the i-th interval
    by opening position; an edge joins i < j iff interval j opens before i
    closes.
    """
    _relaxed_check(s)
    opens = [i for i, ch in enumerate(s) if ch == "L"]
    closes = [i for i, ch in enumerate(s) if ch == "R"]
    n = len(opens)
    edges = []
    for j in range(n):
        for i in range(j):
            if opens[j] < closes[i]:
                edges.append((i, j))
    return Graph(n, edges)


def pi_edge_count(s: str) -> int:
    """Each L overlaps every interval already open, contributing that many edges."""
    profile = _relaxed_check(s)
    return sum(profile[i] for i, ch in enumerate(s) if ch == "L")


def pi_clique_number(s: str) -> int:
    """Maximum overlap depth equals the clique number (intervals satisfy Helly)."""
    profile = _relaxed_check(s)
    if not s:
        return 0
    return max(profile)


def _pi_machine(n: int, cap=None, target=None) -> StateMachine:
    """Shared factory for the plain, clique-bounded, and edge-count machines.

    State is (h_front, h_back, flag) plus an edge accumulator in the edge
    variant.  Odd levels read front characters, even levels read back
    characters of the reverse-complemented suffix.  While flag is 0 the string
    still ties its reverse-complement; the pre-update height comparison
    h_front - 1 == h_back recovers the front character of the current pair and
    decides whether the tie continues, resolves favourably, or prunes.
    """
    if n < 1:
        raise InvalidArgumentError("machines need n >= 1")
    if cap is not None and cap < 1:
        raise InvalidArgumentError("clique bound must be at least 1")
    if target is not None and target < 0:
        raise InvalidArgumentError("edge count must be non-negative")
    total = 2 * n
    with_acc = target is not None

    def transition(state, level, sym):
        if with_acc:
            h_front, h_back, flag, acc = state
        else:
            h_front, h_back, flag = state
            acc = 0
        if level & 1:  # front character
            if sym == "L":
                h_front += 1
                if cap is not None and h_front > cap:
                    return None
                if with_acc:
                    acc += h_front - 1  # overlaps the intervals already open
                    if acc > target:
                        return None
            else:
                h_front -= 1
                if h_front <= 0:
                    return None
        else:  # back character
            if not flag:
                if h_front - 1 == h_back:  # front character of this pair was L
                    if sym == "L":
                        flag = 1
                else:
                    if sym == "R":
                        return None
            if sym == "L":
                if with_acc:
                    acc += h_back - 1
                    if acc > target:
                        return None
                h_back -= 1
                if h_back <= 0:
                    return None
            else:
                h_back += 1
                if cap is not None and h_back > cap:
                    return None
        if abs(h_front - h_back) > total - level:  # heights can never rejoin
            return None
        if with_acc:
            return (h_front, h_back, flag, acc)
        return (h_front, h_back, flag)

    if with_acc:
        accept = lambda st: st[0] == st[1] and st[3] == target
        fast = None
    else:
        accept = lambda st: st[0] == st[1]
        fast = ("pi", n, 0 if cap is None else cap)
    initial = (0, 0, 0, 0) if with_acc else (0, 0, 0)
    return StateMachine(
        length=total,
        initial=initial,
        transition=transition,
        accept=accept,
        order="alternate",
        fast_spec=fast,
    )


def pi_machine(n: int) -> StateMachine:
    """Alternate-order machine for canonical connected representations."""
    return _pi_machine(n)


def pi_machine_clique(n: int, k: int) -> StateMachine:
    """Canonical representations whose graph has clique number at most k."""
    return _pi_machine(n, cap=k)


def pi_machine_edges(n: int, m: int) -> StateMachine:
    """Canonical representations whose graph has exactly m edges."""
    return _pi_machine(n, target=m)
