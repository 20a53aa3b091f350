"""Independent ground truth for the class machines.

Everything here works on graphs, not on the class encodings: exhaustive
unlabeled-graph enumeration, witness-search recognizers straight from the
class definitions, brute-force constraint functionals, and the cross-check
harness comparing a machine's decoded output against the oracle's graph set.
Canonicalization is the minimal adjacency bit sequence over all vertex
permutations, so no third-party isomorphism code is involved.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

import numpy as np

from .bdd import build, enumerate_strings
from .bitstring import inverse_alternate
from .classes import (
    BIPARTITE_PERMUTATION,
    CHAIN,
    CLASS_IDS,
    COCHAIN,
    PROPER_INTERVAL,
    EnumerationSpec,
    decode as decode_string,
    encoded_length,
    machine as machine_for,
)
from .cochain import cochain_valid, expansion_canonical, expansion_valid
from .errors import InvalidArgumentError, ResourceLimitError, UndefinedBicliqueError
from .graphs import Graph
from .bitstring import height_profile
from .bp import bp_canonical, bp_decode, bp_edge_count, bp_valid
from .chain import chain_biclique_number, chain_canonical, chain_edge_count
from .pi import pi_canonical, pi_clique_number, pi_decode, pi_edge_count, pi_valid
from .threshold import thr_clique_number, thr_edge_count

MAX_ORACLE_N = 8

# classes enumerated connected-only, matching the machine contracts
_CONNECTED_CLASSES = (PROPER_INTERVAL, BIPARTITE_PERMUTATION)


@dataclass(frozen=True)
class CanonicalGraph:
    """Isomorphism-class handle: minimal adjacency bits over all labelings."""

    n: int
    canon: int


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one machine-vs-oracle comparison.

    missing/extra are graphs on exactly one side, so they are empty iff the
    two sides agree as sets.  For injective encodings that also forces the
    counts to match; the one deliberately non-injective machine (cochain
    without constraints) shows its repeats in duplicates instead.
    """

    cls: str
    n: int
    k: Optional[int]
    m: Optional[int]
    oracle_count: int
    bdd_count: int
    missing: Tuple[CanonicalGraph, ...]
    extra: Tuple[CanonicalGraph, ...]
    duplicates: Tuple[Tuple[CanonicalGraph, int], ...]
    language_checked: bool
    language_equal: Optional[bool]

    @property
    def mismatches(self) -> Tuple[CanonicalGraph, ...]:
        return self.missing + self.extra

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra and self.language_equal is not False


# ---------------------------------------------------------------------------
# canonical forms


_PERM_TABLES: Dict[int, tuple] = {}


def _pairs(n: int):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def _perm_tables(n: int):
    if n not in _PERM_TABLES:
        pairs = _pairs(n)
        t_index = {p: t for t, p in enumerate(pairs)}
        perms = list(itertools.permutations(range(n)))
        maps = np.empty((len(perms), len(pairs)), dtype=np.int64)
        for row, sigma in enumerate(perms):
            for t, (u, v) in enumerate(pairs):
                a, b = sigma[u], sigma[v]
                maps[row, t] = t_index[(a, b) if a < b else (b, a)]
        width = len(pairs)
        weights = np.array(
            [1 << (width - 1 - t) for t in range(width)], dtype=np.int64
        )
        _PERM_TABLES[n] = (maps, weights, t_index)
    return _PERM_TABLES[n]


def canonical_key(g: Graph) -> int:
    """Minimal upper-triangle adjacency bits over all n! relabelings."""
    n = g.n
    if n > MAX_ORACLE_N:
        raise ResourceLimitError(f"canonical forms limited to n <= {MAX_ORACLE_N}")
    if n < 2:
        return 0
    maps, weights, t_index = _perm_tables(n)
    vec = np.zeros(maps.shape[1], dtype=np.int64)
    for u, v in g.edges:
        vec[t_index[(u, v)]] = 1
    return int((vec[maps] @ weights).min())


def canonical_form(g: Graph) -> CanonicalGraph:
    return CanonicalGraph(g.n, canonical_key(g))


def graph_from_key(n: int, canon: int) -> Graph:
    """Rebuild the representative graph of a canonical key."""
    pairs = _pairs(n)
    width = len(pairs)
    edges = [pairs[t] for t in range(width) if canon >> (width - 1 - t) & 1]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# exhaustive unlabeled enumeration


_REPS: Dict[int, Dict[int, Graph]] = {}


def _reps(n: int) -> Dict[int, Graph]:
    """One representative Graph per isomorphism class, keyed by canon."""
    if n not in _REPS:
        if n <= 1:
            _REPS[n] = {0: Graph(n, [])}
        else:
            out: Dict[int, Graph] = {}
            for smaller in _reps(n - 1).values():
                base = list(smaller.edges)
                for mask in range(1 << (n - 1)):
                    edges = base + [
                        (v, n - 1) for v in range(n - 1) if mask >> v & 1
                    ]
                    g = Graph(n, edges)
                    key = canonical_key(g)
                    if key not in out:
                        out[key] = g
            _REPS[n] = out
    return _REPS[n]


def enumerate_unlabeled(n: int) -> FrozenSet[CanonicalGraph]:
    """All unlabeled graphs on n vertices."""
    if not 1 <= n <= MAX_ORACLE_N:
        raise ResourceLimitError(f"unlabeled enumeration limited to 1..{MAX_ORACLE_N}")
    return frozenset(CanonicalGraph(n, key) for key in _reps(n))


def _alt_canonical_key(g: Graph) -> int:
    """Same canonical choice computed the slow way with reversed orderings."""
    n = g.n
    pairs = [(u, v) for v in range(n) for u in range(v)]  # column-major
    has = {tuple(sorted(p)): True for p in g.edges}
    best = None
    for sigma in reversed(list(itertools.permutations(range(n)))):
        bits = 0
        for u, v in pairs:
            a, b = sigma[u], sigma[v]
            bits = bits * 2 + (1 if has.get((a, b) if a < b else (b, a)) else 0)
        if best is None or bits < best:
            best = bits
    return best if best is not None else 0


def _burnside_count(n: int) -> int:
    """Unlabeled graph count from orbit counting over vertex permutations."""
    pairs = _pairs(n)
    t_index = {p: t for t, p in enumerate(pairs)}
    total = 0
    for sigma in itertools.permutations(range(n)):
        seen = [False] * len(pairs)
        cycles = 0
        for t, (u, v) in enumerate(pairs):
            if seen[t]:
                continue
            cycles += 1
            a, b = u, v
            while True:
                a, b = sigma[a], sigma[b]
                t2 = t_index[(a, b) if a < b else (b, a)]
                if seen[t2]:
                    break
                seen[t2] = True
        total += 1 << cycles
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    return total // fact

def self_check(n: int) -> dict:
    """Recount the unlabeled graphs by independent routes; sizes must agree.

    Exhaustive relabeling with a different pair and permutation order is
    only affordable for small n; the orbit count covers the rest.
    """
    counts = {"incremental": len(_reps(n)), "burnside": _burnside_count(n)}
    if n <= 5:
        alt = set()
        width = n * (n - 1) // 2
        pairs = _pairs(n)
        for mask in range(1 << width):
            edges = [pairs[t] for t in range(width) if mask >> t & 1]
            alt.add(_alt_canonical_key(Graph(n, edges)))
        counts["exhaustive"] = len(alt)
    return counts


# ---------------------------------------------------------------------------
# witness-search recognizers


def _neighbor_masks(g: Graph):
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    return nbr


def _side_ok(mask: int, nbr, clique: bool) -> bool:
    rest = mask
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        inside = nbr[v] & mask
        if clique:
            if inside != mask & ~(1 << v):
                return False
        elif inside:
            return False
    return True


def _nested(family) -> bool:
    family = sorted(family, key=lambda s: bin(s).count("1"))
    return all(a & ~b == 0 for a, b in zip(family, family[1:]))


def _partition_witness(g: Graph, x_clique: bool, y_clique: bool) -> bool:
    """Search all bipartitions for the class-defining nested structure."""
    n = g.n
    nbr = _neighbor_masks(g)
    full = (1 << n) - 1
    for x_mask in range(1 << n):
        y_mask = full & ~x_mask
        if not _side_ok(x_mask, nbr, x_clique):
            continue
        if not _side_ok(y_mask, nbr, y_clique):
            continue
        family = []
        rest = x_mask
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            family.append(nbr[v] & y_mask)
        if _nested(family):
            return True
    return False


def _is_bipartite(g: Graph) -> bool:
    color = [None] * g.n
    for start in range(g.n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for v in g.neighbors(u):
                if color[v] is None:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False
    return True


def _balanced_nonneg_strings(length: int):
    """All strings whose height stays non-negative and ends at zero."""
    out = []

    def rec(prefix, h, remaining):
        if remaining == 0:
            out.append("".join(prefix))
            return
        if h < remaining:  # room to add an L and still return to zero
            prefix.append("L")
            rec(prefix, h + 1, remaining - 1)
            prefix.pop()
        if h > 0:
            prefix.append("R")
            rec(prefix, h - 1, remaining - 1)
            prefix.pop()

    rec([], 0, length)
    return out


def _interval_witness_graph(s: str) -> Graph:
    """Sweep an interval model: L opens, R closes the oldest open interval."""
    open_ids = []
    edges = []
    nxt = 0
    for ch in s:
        if ch == "L":
            for w in open_ids:
                edges.append((w, nxt))
            open_ids.append(nxt)
            nxt += 1
        else:
            open_ids.pop(0)
    return Graph(nxt, edges)


_PI_KEYS: Dict[int, FrozenSet[int]] = {}


def _pi_keys(n: int) -> FrozenSet[int]:
    if n not in _PI_KEYS:
        keys = {
            canonical_key(_interval_witness_graph(s))
            for s in _balanced_nonneg_strings(2 * n)
        }
        _PI_KEYS[n] = frozenset(keys)
    return _PI_KEYS[n]


_PERM_GRAPH_KEYS: Dict[int, FrozenSet[int]] = {}


def _perm_graph_keys(n: int) -> FrozenSet[int]:
    if n not in _PERM_GRAPH_KEYS:
        keys = set()
        for sigma in itertools.permutations(range(n)):
            edges = [
                (i, j)
                for i in range(n)
                for j in range(i + 1, n)
                if sigma[i] > sigma[j]
            ]
            keys.add(canonical_key(Graph(n, edges)))
        _PERM_GRAPH_KEYS[n] = frozenset(keys)
    return _PERM_GRAPH_KEYS[n]


def recognize(g: Graph, cls: str) -> bool:
    """Class membership by exhaustive witness search over the definition."""
    if cls not in CLASS_IDS:
        raise InvalidArgumentError(f"unknown class {cls!r}")
    if g.n > MAX_ORACLE_N:
        raise ResourceLimitError(f"recognition limited to n <= {MAX_ORACLE_N}")
    if cls == PROPER_INTERVAL:
        return canonical_key(g) in _pi_keys(g.n)
    if cls == BIPARTITE_PERMUTATION:
        return _is_bipartite(g) and canonical_key(g) in _perm_graph_keys(g.n)
    if cls == COCHAIN:
        return _partition_witness(g, True, True)
    if cls == CHAIN:
        return _partition_witness(g, False, False)
    return _partition_witness(g, True, False)  # threshold


# ---------------------------------------------------------------------------
# brute-force constraint functionals


def brute_clique_number(g: Graph) -> int:
    nbr = _neighbor_masks(g)
    best = 0
    for mask in range(1 << g.n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        rest = mask
        ok = True
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if nbr[v] & mask != mask & ~(1 << v):
                ok = False
                break
        if ok:
            best = size
    return best


def brute_biclique_number(g: Graph) -> int:
    """Largest |A| + |B| over disjoint nonempty A, B with all cross edges; 0 if none."""
    n = g.n
    nbr = _neighbor_masks(g)
    best = 0
    for a_mask in range(1, 1 << n):
        comp = ((1 << n) - 1) & ~a_mask
        # candidates adjacent to every vertex of A
        cand = comp
        rest = a_mask
        while rest and cand:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            cand &= nbr[v]
        if cand:
            size = bin(a_mask).count("1") + bin(cand).count("1")
            if size > best:
                best = size
    return best


# ---------------------------------------------------------------------------
# class member sets and cross-checking


_MEMBERS: Dict[Tuple[str, int], FrozenSet[int]] = {}
_PROPS: Dict[Tuple[int, int], Tuple[int, int, int, bool]] = {}


def _class_members(cls: str, n: int) -> FrozenSet[int]:
    """Canon keys of all class members on n vertices, connectivity applied."""
    memo_key = (cls, n)
    if memo_key not in _MEMBERS:
        connected_only = cls in _CONNECTED_CLASSES
        keys = set()
        for key, g in _reps(n).items():
            if connected_only and not g.is_connected():
                continue
            if recognize(g, cls):
                keys.add(key)
        _MEMBERS[memo_key] = frozenset(keys)
    return _MEMBERS[memo_key]


def _graph_props(n: int, key: int):
    """(edge count, clique number, biclique number, connected) for a key."""
    memo_key = (n, key)
    if memo_key not in _PROPS:
        g = graph_from_key(n, key)
        _PROPS[memo_key] = (
            g.edge_count,
            brute_clique_number(g),
            brute_biclique_number(g),
            g.is_connected(),
        )
    return _PROPS[memo_key]


def string_language(spec: EnumerationSpec) -> set:
    """Accepted natural-order strings, by filtering instead of machines."""
    length = encoded_length(spec)
    if length > 12:
        raise ResourceLimitError("string-level filtering limited to length 12")
    cls, k, m = spec.cls, spec.k, spec.m
    out = set()
    for tup in itertools.product("LR", repeat=length):
        s = "".join(tup)
        if cls == PROPER_INTERVAL:
            if not (pi_valid(s) and pi_canonical(s)):
                continue
            if k is not None and pi_clique_number(s) > k:
                continue
            if m is not None and pi_edge_count(s) != m:
                continue
        elif cls == COCHAIN:
            if k is None and m is None:
                if not cochain_valid(s):
                    continue
            else:
                # constrained machines run on the expanded representation
                if not (expansion_valid(s) and expansion_canonical(s)):
                    continue
                if k is not None and pi_clique_number(s) > k:
                    continue
                if m is not None and pi_edge_count(s) != m:
                    continue
        elif cls == BIPARTITE_PERMUTATION:
            if not (bp_valid(s) and bp_canonical(s)):
                continue
            if m is not None and bp_edge_count(s) != m:
                continue
        elif cls == CHAIN:
            if not chain_canonical(s):
                continue
            if m is not None and chain_edge_count(s) != m:
                continue
            if k is not None:
                try:
                    if chain_biclique_number(s) > k:
                        continue
                except UndefinedBicliqueError:
                    pass  # no edges, vacuously within bound
        else:  # threshold: every string decodes, constraints filter
            if k is not None and thr_clique_number(s) > k:
                continue
            if m is not None and thr_edge_count(s) != m:
                continue
        out.add(s)
    return out


def height_formula_audit(max_n: int) -> dict:
    """Audit the two height-based edge-count formulas against the decoders.

    Taken literally, the documented closed forms overcount: summing heights
    at L positions gives 3 on the two-vertex interval string LLRR whose
    graph has one edge, and summing even-position heights gives 2 on the
    matching crossing string.  The corrected forms, sum of (h - 1) over L
    positions and half of the even-height sum, are what the edge-count
    functions implement; this audit re-checks them against full decoding
    for every valid string up to max_n vertices.
    """
    pair = "LLRR"
    profile = height_profile(pair)
    interval_literal = sum(
        profile[i] for i in range(1, len(pair) + 1) if pair[i - 1] == "L"
    )
    crossing_literal = sum(profile[2 * i] for i in range(1, len(pair) // 2 + 1))

    interval_checked = crossing_checked = 0
    interval_ok = crossing_ok = True
    for n in range(1, max_n + 1):
        for s in _balanced_nonneg_strings(2 * n):
            if not pi_valid(s):
                continue
            interval_checked += 1
            if pi_edge_count(s) != pi_decode(s).edge_count:
                interval_ok = False
            crossing_checked += 1
            if bp_edge_count(s) != bp_decode(s).edge_count:
                crossing_ok = False

    return {
        "pair_string": pair,
        "pair_edges": pi_decode(pair).edge_count,
        "interval_literal": interval_literal,
        "interval_corrected": pi_edge_count(pair),
        "crossing_literal": crossing_literal,
        "crossing_corrected": bp_edge_count(pair),
        "max_n": max_n,
        "interval_strings_checked": interval_checked,
        "crossing_strings_checked": crossing_checked,
        "interval_ok": interval_ok,
        "crossing_ok": crossing_ok,
    }


def cross_check(spec: EnumerationSpec) -> OracleReport:
    """Compare a machine's decoded graphs against the oracle's member set."""
    cls, n, k, m = spec.cls, spec.n, spec.k, spec.m
    if n > MAX_ORACLE_N:
        raise ResourceLimitError(f"cross-checks limited to n <= {MAX_ORACLE_N}")

    oracle_keys = _class_members(cls, n)
    if k is not None:
        which = 2 if cls == CHAIN else 1  # biclique vs clique bound
        oracle_keys = frozenset(
            key for key in oracle_keys if _graph_props(n, key)[which] <= k
        )
    elif m is not None:
        oracle_keys = frozenset(
            key for key in oracle_keys if _graph_props(n, key)[0] == m
        )

    mach = machine_for(spec)
    diagram = build(mach)
    natural = []
    for w in enumerate_strings(diagram):
        natural.append(inverse_alternate(w) if mach.order == "alternate" else w)
    counter = Counter(canonical_key(decode_string(spec, s)) for s in natural)

    machine_keys = frozenset(counter)
    missing = tuple(
        CanonicalGraph(n, key) for key in sorted(oracle_keys - machine_keys)
    )
    extra = tuple(
        CanonicalGraph(n, key) for key in sorted(machine_keys - oracle_keys)
    )
    duplicates = tuple(
        (CanonicalGraph(n, key), cnt)
        for key, cnt in sorted(counter.items())
        if cnt > 1
    )

    language_checked = False
    language_equal = None
    if encoded_length(spec) <= 12:
        language_checked = True
        language_equal = set(natural) == string_language(spec)

    return OracleReport(
        cls=cls,
        n=n,
        k=k,
        m=m,
        oracle_count=len(oracle_keys),
        bdd_count=sum(counter.values()),
        missing=missing,
        extra=extra,
        duplicates=duplicates,
        language_checked=language_checked,
        language_equal=language_equal,
    )
