"""Registry tying class identifiers to machines, decoders, and lengths."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import bp, chain, cochain, pi, threshold
from .bdd import StateMachine
from .errors import InvalidArgumentError
from .graphs import Graph

PROPER_INTERVAL = "proper-interval"
COCHAIN = "cochain"
BIPARTITE_PERMUTATION = "bipartite-permutation"
CHAIN = "chain"
THRESHOLD = "threshold"

CLASS_IDS = (PROPER_INTERVAL, COCHAIN, BIPARTITE_PERMUTATION, CHAIN, THRESHOLD)

# classes whose constraint parameter k exists (biclique for chain, clique else)
_K_CLASSES = (PROPER_INTERVAL, COCHAIN, CHAIN, THRESHOLD)


@dataclass(frozen=True)
class EnumerationSpec:
    """A single enumeration request: class, size, optional constraint."""

    cls: str
    n: int
    k: Optional[int] = None
    m: Optional[int] = None
    seed: Optional[int] = None

    def __post_init__(self):
        if self.cls not in CLASS_IDS:
            raise InvalidArgumentError(
                f"unknown class {self.cls!r}; choose from {', '.join(CLASS_IDS)}"
            )
        if self.n < 1:
            raise InvalidArgumentError("n must be at least 1")
        if self.k is not None and self.m is not None:
            raise InvalidArgumentError("k and m are mutually exclusive")
        if self.k is not None and self.cls not in _K_CLASSES:
            raise InvalidArgumentError(f"class {self.cls} has no size-k constraint")


def machine(spec: EnumerationSpec) -> StateMachine:
    """Build the state machine this enumeration request selects."""
    cls, n, k, m = spec.cls, spec.n, spec.k, spec.m
    if cls == PROPER_INTERVAL:
        if k is not None:
            return pi.pi_machine_clique(n, k)
        if m is not None:
            return pi.pi_machine_edges(n, m)
        return pi.pi_machine(n)
    if cls == COCHAIN:
        if k is not None:
            return cochain.cochain_machine_clique(n, k)
        if m is not None:
            return cochain.cochain_machine_edges(n, m)
        return cochain.cochain_machine(n)
    if cls == BIPARTITE_PERMUTATION:
        if m is not None:
            return bp.bp_machine_edges(n, m)
        return bp.bp_machine(n)
    if cls == CHAIN:
        if k is not None:
            return chain.chain_machine_biclique(n, k)
        if m is not None:
            return chain.chain_machine_edges(n, m)
        return chain.chain_machine(n)
    if k is not None:
        return threshold.thr_machine_clique(n, k)
    if m is not None:
        return threshold.thr_machine_edges(n, m)
    return threshold.thr_machine(n)


def encoded_length(spec: EnumerationSpec) -> int:
    """Length of the accepted strings for this spec."""
    cls, n = spec.cls, spec.n
    if cls in (PROPER_INTERVAL, BIPARTITE_PERMUTATION):
        return 2 * n
    if cls == COCHAIN:
        # constrained machines run on the expanded two-characters-per-vertex
        # representation; the unconstrained one is one character per vertex
        return n if spec.k is None and spec.m is None else 2 * n
    if cls == CHAIN:
        return n
    return n - 1


def decode(spec: EnumerationSpec, s: str) -> Graph:
    """Decode a natural-order accepted string of this spec's machine."""
    cls = spec.cls
    if cls == PROPER_INTERVAL:
        return pi.pi_decode(s)
    if cls == COCHAIN:
        if spec.k is None and spec.m is None:
            return cochain.cochain_decode(s)
        return pi.pi_decode(s)  # constrained strings are expanded encodings
    if cls == BIPARTITE_PERMUTATION:
        return bp.bp_decode(s)
    if cls == CHAIN:
        return chain.chain_decode(s)
    return threshold.thr_decode(s)
