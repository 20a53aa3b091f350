"""Chain graphs: bipartite with nested neighborhoods on each side.

Encoding: one character per vertex, L for side X and R for side Y; an edge
joins an L to every R standing before it.  The canonical representative of a
graph with kappa isolated vertices and component string w (starting R, ending
L, unique up to reverse-complement) is

    L^ceil(kappa/2) . max(w, reverse_complement(w)) . R^floor(kappa/2)

with the isolated block split around the component.  Splitting it keeps the
reverse-complement comparison aligned with the outside-in read order, so the
unconstrained machine needs only finitely many control states; a one-sided
isolated block would force exponential width.
"""

from __future__ import annotations

from .bdd import StateMachine
from .bitstring import check_string, height_ge, reverse_complement
from .errors import InvalidArgumentError, UndefinedBicliqueError
from .graphs import Graph

# canonicity control tags
_ISO = "ISO"  # leading-L / trailing-R pattern so far, no component seen
_EQE = "EQE"  # component entered by a front R; its back partner must be L
_EQ = "EQ"  # centered component, between pair steps
_EQP = "EQP"  # centered component, front char buffered for this pair
_OFW = "OFW"  # component entered by a back L; next front char must be R
_OFF = "OFF"  # off-by-one component, between pair steps
_OFP = "OFP"  # off-by-one component, back char buffered for this pair
_FIN = "FIN"  # accepted at the middle character

_TIE = "T"
_GT = "G"


def chain_decode(c: str) -> Graph:
    """L positions are X vertices, R positions Y; edge iff the L comes later."""
    check_string(c)
    n = len(c)
    edges = [
        (i, j)
        for j in range(n)
        if c[j] == "L"
        for i in range(j)
        if c[i] == "R"
    ]
    return Graph(n, edges)


def chain_edge_count(c: str) -> int:
    """Each L is adjacent to every R before it."""
    check_string(c)
    acc = 0
    rs = 0
    for ch in c:
        if ch == "R":
            rs += 1
        else:
            acc += rs
    return acc


def chain_biclique_number(c: str) -> int:
    """Max vertices of a complete bipartite subgraph with both sides nonempty.

    Every R in a prefix is adjacent to every L in the corresponding suffix,
    and any biclique arises this way, so scan all split points.
    """
    check_string(c)
    n = len(c)
    total_l = c.count("L")
    best = None
    r_pref = 0
    l_pref = 0
    for i in range(1, n):
        if c[i - 1] == "R":
            r_pref += 1
        else:
            l_pref += 1
        l_suf = total_l - l_pref
        if r_pref >= 1 and l_suf >= 1:
            size = r_pref + l_suf
            if best is None or size > best:
                best = size
    if best is None:
        raise UndefinedBicliqueError("graph has no edges, biclique size undefined")
    return best


def chain_canonical(c: str) -> bool:
    """True iff c is the canonical representative of its graph."""
    check_string(c)
    n = len(c)
    lead = n - len(c.lstrip("L"))
    trail = n - len(c.rstrip("R"))
    if lead + trail == n:  # edgeless: pure L-block then R-block
        return lead == (n + 1) // 2
    w = c[lead : n - trail]
    kappa = lead + trail
    return lead == (kappa + 1) // 2 and height_ge(w, reverse_complement(w))


def _canon_step(tag, level, sym, n):
    """One transition of the canonicity control; returns new tag or None."""
    kind = tag[0]
    front = bool(level & 1)
    last = level == n
    if kind == _ISO:
        if front:
            if sym == "L":
                return tag
            return None if last else (_EQE,)
        if sym == "R":
            return tag
        return None if last else (_OFW,)
    if kind == _EQE:  # always a back read
        return (_EQ, _TIE) if sym == "L" else None
    if kind == _EQ:  # always a front read
        if last:  # middle self-pair of the component
            if tag[1] == _GT:
                return (_FIN,)
            return (_FIN,) if sym == "L" else None
        return (_EQP, tag[1], sym)
    if kind == _EQP:  # always a back read
        f, ch = tag[1], tag[2]
        if sym == ch:
            if ch == "L":
                return (_EQ, _GT)
            return None if f == _TIE else (_EQ, _GT)
        return (_EQ, f)
    if kind == _OFW:  # always a front read
        return (_OFF, _TIE) if sym == "R" else None
    if kind == _OFF:  # always a back read
        if last:  # middle self-pair, read from the back
            if tag[1] == _GT:
                return (_FIN,)
            return (_FIN,) if sym == "L" else None
        return (_OFP, tag[1], sym)
    if kind == _OFP:  # always a front read
        f, ch = tag[1], tag[2]
        if sym == ch:
            if ch == "L":
                return (_OFF, _GT)
            return None if f == _TIE else (_OFF, _GT)
        return (_OFF, f)
    raise AssertionError(f"unexpected control tag {tag!r} at level {level}")


_ACCEPT_TAGS = (_ISO, _EQ, _OFF, _FIN)


def chain_machine(n: int) -> StateMachine:
    """Canonical chain strings, one per unlabeled chain graph; O(1) width."""
    if n < 0:
        raise InvalidArgumentError("vertex count must be non-negative")

    def transition(state, level, sym):
        return _canon_step(state, level, sym, n)

    return StateMachine(
        length=n,
        initial=(_ISO,),
        transition=transition,
        accept=lambda state: state[0] in _ACCEPT_TAGS,
        order="alternate",
    )


def chain_machine_edges(n: int, m: int) -> StateMachine:
    """Canonical chain strings with exactly m edges.

    Front R's all precede back L's, so the cross pairs contribute their
    product at acceptance; within-sweep pairs accumulate as they appear.
    """
    if n < 0:
        raise InvalidArgumentError("vertex count must be non-negative")
    if m < 0:
        raise InvalidArgumentError("edge count must be non-negative")

    def transition(state, level, sym):
        tag, r_front, l_back, acc = state
        nxt = _canon_step(tag, level, sym, n)
        if nxt is None:
            return None
        if level & 1:  # front read
            if sym == "R":
                r_front += 1
            else:
                acc += r_front
        else:  # back read
            if sym == "L":
                l_back += 1
            else:
                acc += l_back
        if acc + r_front * l_back > m:
            return None
        return (nxt, r_front, l_back, acc)

    def accept(state):
        tag, r_front, l_back, acc = state
        return tag[0] in _ACCEPT_TAGS and acc + r_front * l_back == m

    return StateMachine(
        length=n,
        initial=((_ISO,), 0, 0, 0),
        transition=transition,
        accept=accept,
        order="alternate",
    )


def chain_machine_biclique(n: int, k: int) -> StateMachine:
    """Canonical chain strings whose decoded graph has max biclique size <= k.

    The biclique number is


        #L(c) - min over valid splits of the prefix height,

    so the front sweep records the minimum prefix height at its component
    positions and the back sweep the maximum suffix height at its component
    positions; the two meet at acceptance.  Edgeless strings never set either
    record and pass vacuously.
    """
    if n < 0:
        raise InvalidArgumentError("vertex count must be non-negative")
    if k < 2:
        raise InvalidArgumentError("any edge forms a 2-vertex biclique; k must be >= 2")

    def transition(state, level, sym):
        tag, h_f, mn_f, g_b, mx_b, l_cnt, r_cnt = state
        was_iso = tag[0] == _ISO
        nxt = _canon_step(tag, level, sym, n)
        if nxt is None:
            return None
        if sym == "L":
            l_cnt += 1
        else:
            r_cnt += 1
        if level & 1:  # front read
            h_f += 1 if sym == "L" else -1
            if not was_iso or nxt[0] != _ISO:  # a component position
                mn_f = h_f if mn_f is None else min(mn_f, h_f)
        else:  # back read
            g_b += 1 if sym == "L" else -1
            if not was_iso or nxt[0] != _ISO:
                mx_b = g_b if mx_b is None else max(mx_b, g_b)
        if mn_f is not None and l_cnt - mn_f > k:
            return None
        if mx_b is not None and r_cnt + mx_b > k:
            return None
        return (nxt, h_f, mn_f, g_b, mx_b, l_cnt, r_cnt)

    def accept(state):
        tag, h_f, mn_f, g_b, mx_b, l_cnt, r_cnt = state
        if tag[0] not in _ACCEPT_TAGS:
            return False
        if mn_f is None and mx_b is None:  # edgeless
            return True
        height = h_f + g_b
        return l_cnt - min(mn_f, height - mx_b) <= k

    return StateMachine(
        length=n,
        initial=((_ISO,), 0, None, 0, None, 0, 0),
        transition=transition,
        accept=accept,
        order="alternate",
    )
