"""Levelled binary decision diagrams built breadth-first from deterministic state machines.

A machine describes, level by level, how a state reacts to reading an "L" or an
"R".  The builder sweeps the levels once, merging states on the fly, so the
diagram never holds two nodes with the same state at the same level.  Arcs that
can no longer reach acceptance are routed to the 0-terminal immediately; no
bottom-up reduction pass is needed afterwards.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from time import perf_counter
from typing import Any, Callable, Optional

import numpy as np

from .errors import EmptyLanguageError, InvalidArgumentError

ZERO = -1  # arc value: 0-terminal
ONE = -2  # arc value: 1-terminal

SYMBOLS = ("L", "R")


@dataclass(frozen=True)
class StateMachine:
    """Deterministic levelled automaton over the alphabet {L, R}.

    transition(state, level, symbol) returns the successor state or None to
    reject.  Levels are 1-based and run from 1 to length.  accept() is asked
    about states reached after the final level.  order records how a path
    string maps back to a natural left-to-right string: "natural" means the
    path is the string itself, "alternate" means the path visits string
    positions outside-in (first, last, second, second-to-last, ...).
    fast_spec optionally names a compiled kernel that builds the same diagram.
    """

    length: int
    initial: Any
    transition: Callable[[Any, int, str], Any]
    accept: Callable[[Any], bool]
    order: str = "natural"
    fast_spec: Optional[tuple] = None

    def __post_init__(self):
        if self.length < 0:
            raise InvalidArgumentError("machine length must be non-negative")
        if self.order not in ("natural", "alternate"):
            raise InvalidArgumentError(f"unknown symbol order: {self.order!r}")

    def accepts(self, word: str) -> bool:
        """Run the machine directly on a path string (machine symbol order)."""
        if len(word) != self.length:
            return False
        state = self.initial
        for i, ch in enumerate(word):
            if ch not in ("L", "R"):
                raise InvalidArgumentError(f"invalid symbol {ch!r}")
            state = self.transition(state, i + 1, ch)
            if state is None:
                return False
        return bool(self.accept(state))


@dataclass
class BuildStats:
    """Node counts per internal level plus totals for one built diagram."""

    nodes_per_level: list
    total_nodes: int
    build_time: float


class LevelledBdd:
    """Quasi-reduced levelled BDD with per-level int32 arc arrays.

    l_arcs[i][j] / r_arcs[i][j] give the L- and R-arc of node j at level i+1.
    Non-negative values index nodes of the next level; ZERO and ONE are the
    terminals.  The root is node 0 of level 1.  States are dropped once the
    build finishes; only the arc structure remains.
    """

    __slots__ = ("length", "l_arcs", "r_arcs", "accepts_empty", "build_time", "_completions")

    def __init__(self, length, l_arcs, r_arcs, accepts_empty, build_time):
        self.length = length
        self.l_arcs = l_arcs
        self.r_arcs = r_arcs
        self.accepts_empty = accepts_empty
        self.build_time = build_time
        self._completions = None

    def width(self, level: int) -> int:
        return len(self.l_arcs[level - 1])


def _build_python(machine: StateMachine):
    """Breadth-first frontier sweep with per-level state merging."""
    states = {machine.initial: 0}
    l_arcs = []
    r_arcs = []
    last = machine.length
    for level in range(1, last + 1):
        width = len(states)
        la = [ZERO] * width
        ra = [ZERO] * width
        nxt: dict = {}
        for state, idx in states.items():
            for sym, arcs in (("L", la), ("R", ra)):
                succ = machine.transition(state, level, sym)
                if succ is None:
                    continue
                if level == last:
                    if machine.accept(succ):
                        arcs[idx] = ONE
                else:
                    slot = nxt.get(succ)
                    if slot is None:
                        slot = len(nxt)
                        nxt[succ] = slot
                    arcs[idx] = slot
        l_arcs.append(np.array(la, dtype=np.int32))
        r_arcs.append(np.array(ra, dtype=np.int32))
        if not nxt and level < last:
            # dead frontier: no reachable nodes remain at deeper levels
            empty = np.empty(0, dtype=np.int32)
            for _ in range(level + 1, last + 1):
                l_arcs.append(empty)
                r_arcs.append(empty)
            break
        states = nxt
    return l_arcs, r_arcs


def build(machine: StateMachine, backend: str = "auto") -> LevelledBdd:
    """Construct the levelled BDD for a machine.

    backend "python" forces the pure sweep, "native" requires a compiled
    kernel matching machine.fast_spec, and "auto" prefers the compiled kernel
    when one is available.
    """
    if backend not in ("auto", "python", "native"):
        raise InvalidArgumentError(f"unknown backend: {backend!r}")
    t0 = perf_counter()
    if machine.length == 0:
        return LevelledBdd(0, [], [], bool(machine.accept(machine.initial)), perf_counter() - t0)

    arrays = None
    if backend != "python" and machine.fast_spec is not None:
        from . import _native

        kernel = _native.builder_for(machine.fast_spec)
        if kernel is not None:
            arrays = kernel()
    if arrays is None:
        if backend == "native":
            raise InvalidArgumentError(
                "native backend unavailable for this machine (no compiled kernel)"
            )
        arrays = _build_python(machine)
    l_arcs, r_arcs = arrays
    return LevelledBdd(machine.length, l_arcs, r_arcs, False, perf_counter() - t0)


def _completions(d: LevelledBdd) -> list:
    """completions[i][j]: accepted-suffix count below node j of level i+1."""
    if d._completions is not None:
        return d._completions
    per_level: list = [None] * d.length
    nxt = None  # completion counts one level down
    for i in range(d.length - 1, -1, -1):
        la = d.l_arcs[i]
        ra = d.r_arcs[i]
        cur = [0] * len(la)
        for j in range(len(la)):
            total = 0
            for a in (int(la[j]), int(ra[j])):
                if a == ONE:
                    total += 1
                elif a >= 0:
                    total += nxt[a]
            cur[j] = total
        per_level[i] = cur
        nxt = cur
    d._completions = per_level
    return per_level


def count(d: LevelledBdd) -> int:
    """Number of accepted strings (root-to-1-terminal paths), exact bigint."""
    if d.length == 0:
        return 1 if d.accepts_empty else 0
    return _completions(d)[0][0]


def sample(d: LevelledBdd, seed) -> str:
    """Draw one accepted string uniformly at random.

    seed may be an int (fresh deterministic generator) or a random.Random
    instance to draw several samples from one stream.  Raises
    EmptyLanguageError when the diagram accepts nothing.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    if d.length == 0:
        if d.accepts_empty:
            return ""
        raise EmptyLanguageError("diagram accepts no strings")
    comp = _completions(d)
    if comp[0][0] == 0:
        raise EmptyLanguageError("diagram accepts no strings")
    out = []
    node = 0
    for i in range(d.length):
        l_arc = int(d.l_arcs[i][node])
        r_arc = int(d.r_arcs[i][node])
        below = comp[i + 1] if i + 1 < d.length else None
        l_count = 1 if l_arc == ONE else (below[l_arc] if l_arc >= 0 else 0)
        r_count = 1 if r_arc == ONE else (below[r_arc] if r_arc >= 0 else 0)
        pick = rng.randrange(l_count + r_count)
        if pick < l_count:
            out.append("L")
            node = l_arc
        else:
            out.append("R")
            node = r_arc
    return "".join(out)


def enumerate_strings(d: LevelledBdd):
    """Yield all accepted strings, L-branch before R-branch at every node."""
    if d.length == 0:
        if d.accepts_empty:
            yield ""
        return

    prefix = []

    def walk(level, node):
        if node == ZERO:
            return
        if node == ONE:
            yield "".join(prefix)
            return
        for sym, arcs in (("L", d.l_arcs), ("R", d.r_arcs)):
            prefix.append(sym)
            yield from walk(level + 1, int(arcs[level][node]))
            prefix.pop()

    if len(d.l_arcs[0]) > 0:
        yield from walk(0, 0)


def stats(d: LevelledBdd) -> BuildStats:
    """Per-level node counts; total adds the two terminals."""
    per_level = [len(a) for a in d.l_arcs]
    return BuildStats(per_level, sum(per_level) + 2, d.build_time)


def export_dot(d: LevelledBdd) -> str:
    """Render the reachable part of the diagram as Graphviz DOT text.

    Internal nodes are named n<level>_<index> and labelled with their level;
    L-arcs are solid, R-arcs dashed.  Terminals appear as boxes named t0/t1.
    """
    lines = ["digraph levelled_bdd {", "  rankdir=TB;"]
    if d.length == 0:
        term = "t1" if d.accepts_empty else "t0"
        label = "1" if d.accepts_empty else "0"
        lines.append(f'  {term} [shape=box, label="{label}"];')
        lines.append("}")
        return "\n".join(lines)

    reachable = [set() for _ in range(d.length)]
    reachable[0].add(0)
    used_terminals = set()
    for i in range(d.length):
        for j in sorted(reachable[i]):
            for arcs in (d.l_arcs, d.r_arcs):
                a = int(arcs[i][j])
                if a >= 0:
                    reachable[i + 1].add(a)
                elif a == ZERO:
                    used_terminals.add("t0")
                else:
                    used_terminals.add("t1")

    for i in range(d.length):
        for j in sorted(reachable[i]):
            lines.append(f'  n{i + 1}_{j} [label="{i + 1}"];')
    for name in sorted(used_terminals):
        lines.append(f'  {name} [shape=box, label="{name[1]}"];')
    for i in range(d.length):
        for j in sorted(reachable[i]):
            for sym, arcs, style in (("L", d.l_arcs, "solid"), ("R", d.r_arcs, "dashed")):
                a = int(arcs[i][j])
                if a >= 0:
                    dst = f"n{i + 2}_{a}"
                elif a == ZERO:
                    dst = "t0"
                else:
                    dst = "t1"
                lines.append(f'  n{i + 1}_{j} -> {dst} [label="{sym}", style={style}];')
    lines.append("}")
    return "\n".join(lines)
