"""Connected bipartite permutation graphs via interleaved endpoint strings.

A permutation diagram places each vertex as a line segment from a top
position to a bottom position.  For a connected bipartite graph the diagram
can be normalized so one side of the bipartition leans right (top position
before bottom position) and the other leans left; edges are exactly the
crossing pairs.  The string s = x1 y1 x2 y2 ... xn yn records, per top and
bottom position, which way the segment through it leans.

A string represents such a diagram iff it starts with L, ends with R, is
balanced, and keeps strictly positive height in between.  Each graph has up
to four strings (vertical flip, horizontal flip, 180-degree rotation); the
canonical one is the maximum under the height order, and the machine keeps
one comparison flag per flip while reading the string outside-in.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bdd import StateMachine
from .bitstring import (
    check_string,
    height_ge,
    height_profile,
    reverse_complement,
)
from .errors import InconsistencyError, InvalidArgumentError
from .graphs import Graph

# rotation flag: tied with the rotated string, or strictly greater
_R_TIE = "T"
_R_GT = "G"
# vertical-flip flag: still tied, back pair saw s ahead / behind, or decided
_V_TIE = "BT"
_V_AHEAD = "BA"
_V_BEHIND = "BB"
_V_GOOD = "G"
# horizontal-flip flag: no difference yet, pending ahead / behind, or decided
_H_NONE = "NP"
_H_PA = "PA"
_H_PB = "PB"
_H_GOOD = "G"


@dataclass(frozen=True)
class PermutationDiagram:
    """Segment model: vertex v runs from top pi1[v] to bottom pi2[v], 1-based."""

    n: int
    pi1: tuple
    pi2: tuple

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgumentError("diagram needs at least one vertex")
        for name, perm in (("pi1", self.pi1), ("pi2", self.pi2)):
            if len(perm) != self.n or sorted(perm) != list(range(1, self.n + 1)):
                raise InvalidArgumentError(
                    f"{name} must be a permutation of 1..{self.n}"
                )
        if self.n > 1:
            for v in range(self.n):
                if self.pi1[v] == self.pi2[v]:
                    raise InvalidArgumentError(
                        "straight vertical segment only allowed for a single vertex"
                    )


def bp_valid(s: str) -> bool:
    """Starts L, ends R, balanced, and strictly positive interior heights."""
    check_string(s)
    if len(s) % 2:
        raise InvalidArgumentError("encoded length must be even")
    if not s:
        return False
    if s[0] != "L" or s[-1] != "R":
        return False
    profile = height_profile(s)
    return profile[-1] == 0 and all(h > 0 for h in profile[1:-1])


def bp_string(d: PermutationDiagram) -> str:
    """Encode a diagram: per top then bottom position, L/R by lean direction."""
    if d.n == 1:
        return "LR"
    top = [0] * d.n
    bottom = [0] * d.n
    for v in range(d.n):
        top[d.pi1[v] - 1] = v
        bottom[d.pi2[v] - 1] = v
    out = []
    for i in range(d.n):
        v = top[i]
        out.append("L" if d.pi1[v] < d.pi2[v] else "R")
        w = bottom[i]
        out.append("R" if d.pi2[w] > d.pi1[w] else "L")
    return "".join(out)


def bp_flips(s: str):
    """The three equivalent encodings: vertical, horizontal, rotated."""
    check_string(s)
    if len(s) % 2:
        raise InvalidArgumentError("encoded length must be even")
    swapped = []
    for i in range(0, len(s), 2):
        swapped.append(s[i + 1])
        swapped.append(s[i])
    s_v = "".join(swapped)
    return s_v, reverse_complement(s_v), reverse_complement(s)


def bp_canonical(s: str) -> bool:
    """True iff s is the height-maximum among its four equivalent encodings."""
    if not bp_valid(s):
        raise InvalidArgumentError("string does not encode a connected diagram")
    return all(height_ge(s, f) for f in bp_flips(s))


def bp_decode(s: str) -> Graph:
    """Rebuild a diagram and return its crossing graph.

    Same-side segments never cross, so the k-th right-leaning top position
    pairs with the k-th right-leaning bottom position, likewise left-leaning.
    """
    check_string(s)
    if len(s) % 2:
        raise InvalidArgumentError("encoded length must be even")
    x = s[0::2]
    y = s[1::2]
    n = len(x)
    x_tops = [i for i, ch in enumerate(x) if ch == "L"]
    x_bottoms = [i for i, ch in enumerate(y) if ch == "R"]
    if len(x_tops) != len(x_bottoms):
        raise InvalidArgumentError("top and bottom side counts disagree")
    y_tops = [i for i, ch in enumerate(x) if ch == "R"]
    y_bottoms = [i for i, ch in enumerate(y) if ch == "L"]
    segments = list(zip(x_tops, x_bottoms)) + list(zip(y_tops, y_bottoms))
    edges = []
    for u in range(n):
        tu, bu = segments[u]
        for v in range(u + 1, n):
            tv, bv = segments[v]
            if (tu - tv) * (bu - bv) < 0:
                edges.append((u, v))
    return Graph(n, edges)


def bp_edge_count(s: str) -> int:
    """Half the sum of heights at even positions; each crossing adds two."""
    check_string(s)
    if len(s) % 2:
        raise InvalidArgumentError("encoded length must be even")
    profile = height_profile(s)
    total = sum(profile[i] for i in range(2, len(s) + 1, 2))
    if total % 2:
        raise InconsistencyError(
            f"even-position height sum {total} is odd; string is malformed"
        )
    return total // 2


def _bp_machine(n: int, target) -> StateMachine:
    """Shared builder; target is the doubled edge sum to hit, or None."""
    if n < 1:
        raise InvalidArgumentError("vertex count must be at least 1")
    length = 2 * n
    mid_front = length - 1 if n % 2 else None  # self-paired top char
    mid_back = length if n % 2 else None  # self-paired bottom char

    def transition(state, level, sym):
        if target is None:
            h_l, h_r, c_l, c_r, f_v, f_h, f_r = state
            acc = 0
        else:
            h_l, h_r, c_l, c_r, f_v, f_h, f_r, acc = state
        phase = level & 3
        if phase & 1:  # front read
            h_l += 1 if sym == "L" else -1
            if h_l <= 0:
                return None
            if phase == 1:  # top-position character
                c_l = sym
                if level == mid_front and f_h == _H_NONE:
                    # middle top char against its own complement
                    if sym == "R":
                        return None
                    f_h = _H_GOOD
            else:  # bottom-position character, front side
                if target is not None:
                    acc += h_l
                    if acc > target:
                        return None
                if f_v != _V_GOOD and sym != c_l:
                    if c_l != "L":
                        return None
                    f_v = _V_GOOD
                if f_h == _H_NONE and sym == c_r:
                    f_h = _H_PA if sym == "L" else _H_PB
        else:  # back read
            if f_r == _R_TIE:
                # pre-update heights reveal the partner front character
                if h_l - 1 == h_r:
                    if sym == "L":
                        f_r = _R_GT
                elif sym == "R":
                    return None
            if phase == 2:  # bottom-position character, back side
                if target is not None:
                    acc += h_r
                    if acc > target:
                        return None
                h_r += 1 if sym == "R" else -1
                if h_r <= 0:
                    return None
                c_r = sym
                if level == mid_back and f_v != _V_GOOD and sym != c_l:
                    if c_l != "L":
                        return None
                    f_v = _V_GOOD
            else:  # top-position character, back side
                h_r += 1 if sym == "R" else -1
                if h_r <= 0:
                    return None
                if f_v != _V_GOOD and sym != c_r:
                    f_v = _V_AHEAD if sym == "L" else _V_BEHIND
                if f_h != _H_GOOD:
                    if sym == c_l:  # top pair differs and outranks any pending
                        if c_l != "L":
                            return None
                        f_h = _H_GOOD
                    elif f_h == _H_PA:
                        f_h = _H_GOOD
                    elif f_h == _H_PB:
                        return None
        if abs(h_l - h_r) > length - level:
            return None
        if target is None:
            return (h_l, h_r, c_l, c_r, f_v, f_h, f_r)
        return (h_l, h_r, c_l, c_r, f_v, f_h, f_r, acc)

    def accept(state):
        if state[0] != state[1]:
            return False
        if state[4] == _V_BEHIND or state[5] in (_H_PA, _H_PB):
            return False
        if target is not None and state[7] != target:
            return False
        return True

    initial = (0, 0, "L", "L", _V_TIE, _H_NONE, _R_TIE)
    if target is not None:
        initial = initial + (0,)
    return StateMachine(
        length=length,
        initial=initial,
        transition=transition,
        accept=accept,
        order="alternate",
        fast_spec=("bp", n) if target is None else None,
    )


def bp_machine(n: int) -> StateMachine:
    """Canonical strings of connected diagrams, one per unlabeled graph."""
    return _bp_machine(n, None)


def bp_machine_edges(n: int, m: int) -> StateMachine:
    """As bp_machine, restricted to exactly m crossings.

    Heights at bottom positions are collected from whichever sweep reads
    them; the total is twice the edge count, so the target is 2m.
    """
    if m < 0:
        raise InvalidArgumentError("edge count must be non-negative")
    return _bp_machine(n, 2 * m)
