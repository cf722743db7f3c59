"""Minimal st-separator enumeration and the tame-class TAR/TJ solver.

Enumeration follows the classical output-sensitive expansion scheme:
seed with the minimal separator close to s, then push each known
separator past each of its vertices by taking component neighborhoods of
the graph minus (separator union closed neighborhood), minimalizing
every candidate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InputError, ResourceLimitError
from .graph import Graph
from .instance import ReconfigInstance, ReconfigSequence, Rule
from .separators import (
    State,
    canon,
    is_minimal_separator,
    shrink_to_minimal,
)
from .tar_tj import is_trivially_negative_tar, tj_to_tar_instance

DEFAULT_FAMILY_CAP = 1_000_000


@dataclass(frozen=True)
class SeparatorFamily:
    members: frozenset[State]
    s: int
    t: int

    def sorted_members(self) -> list[State]:
        return sorted(self.members, key=canon)


def enumerate_minimal_separators(
    g: Graph, s: int, t: int, family_cap: int = DEFAULT_FAMILY_CAP
) -> SeparatorFamily:
    """All minimal st-separators of a connected graph."""
    if not g.is_connected():
        raise InputError("enumeration expects a connected graph")
    if g.has_edge(s, t):
        raise InputError("adjacent terminals admit no separator")

    seed = shrink_to_minimal(g, s, t, g.neighbors(s) - {t})
    found: set[State] = {seed}
    queue: deque[State] = deque([seed])
    while queue:
        sep = queue.popleft()
        for x in sorted(sep):
            removed = sep | (g.neighbors(x) - {s, t}) | {x}
            for comp in g.components(removed):
                cand = frozenset(v for c in comp for v in g.neighbors(c)) - comp
                if cand in found or not cand:
                    continue
                if s in cand or t in cand:
                    continue
                if not is_minimal_separator(g, s, t, cand):
                    continue
                if len(found) >= family_cap:
                    raise ResourceLimitError(
                        f"separator family cap {family_cap} exceeded"
                    )
                found.add(cand)
                queue.append(cand)
    return SeparatorFamily(frozenset(found), s, t)


@dataclass(frozen=True)
class OverlapGraph:
    """Minimal separators as nodes; edges join pairs whose union fits the
    TAR bound."""

    nodes: list[State]
    edges: frozenset[tuple[State, State]]
    k: int

    def neighbors(self, node: State) -> list[State]:
        out = []
        for a, b in self.edges:
            if a == node:
                out.append(b)
            elif b == node:
                out.append(a)
        return sorted(out, key=canon)


def build_overlap_graph(family: SeparatorFamily, k: int) -> OverlapGraph:
    nodes = family.sorted_members()
    edges = set()
    for i, a in enumerate(nodes):
        for b in nodes[i + 1:]:
            if len(a | b) <= k:
                edges.add((a, b))
    return OverlapGraph(nodes, frozenset(edges), k)


@dataclass(frozen=True)
class SolveResult:
    reachable: bool
    sequence: ReconfigSequence | None = None


def _greedy_edge_walk(cur: State, nxt: State) -> ReconfigSequence:
    """TAR steps across one overlap edge: add the missing vertices in
    ascending order, then drop the surplus ones."""
    seq: ReconfigSequence = []
    st = cur
    for v in sorted(nxt - cur):
        st = st | {v}
        seq.append(st)
    for v in sorted(cur - nxt):
        st = st - {v}
        seq.append(st)
    return seq


def tame_solve(
    instance: ReconfigInstance, family_cap: int = DEFAULT_FAMILY_CAP
) -> SolveResult:
    """Polynomial TAR/TJ solver for graphs with few minimal separators.

    YES iff the minimalized endpoints lie in the same overlap-graph
    component.  A TJ instance is first recast as TAR with bound k+1; the
    certificate is then a TAR(k+1) sequence for that recast instance.
    """
    if instance.rule is Rule.TS:
        raise InputError("tame solver handles TAR and TJ only")
    if instance.rule is Rule.TJ:
        instance = tj_to_tar_instance(instance)
    g, s, t, k = instance.graph, instance.s, instance.t, instance.k
    assert k is not None

    if instance.source == instance.target:
        return SolveResult(True, [instance.source])
    if is_trivially_negative_tar(instance):
        return SolveResult(False)

    family = enumerate_minimal_separators(g, s, t, family_cap)
    overlap = build_overlap_graph(family, k)
    sa = shrink_to_minimal(g, s, t, instance.source)
    sb = shrink_to_minimal(g, s, t, instance.target)

    # BFS in the overlap graph, deterministic ordering
    parent: dict[State, State | None] = {sa: None}
    queue = deque([sa])
    while queue and sb not in parent:
        cur = queue.popleft()
        for nxt in overlap.neighbors(cur):
            if nxt not in parent:
                parent[nxt] = cur
                queue.append(nxt)
    if sb not in parent:
        return SolveResult(False)

    path = [sb]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])  # type: ignore[arg-type]
    path.reverse()

    seq: ReconfigSequence = [instance.source]
    st = instance.source
    for v in sorted(instance.source - sa):
        st = st - {v}
        seq.append(st)
    for cur, nxt in zip(path, path[1:]):
        seq.extend(_greedy_edge_walk(st, nxt))
        st = nxt
    for v in sorted(instance.target - sb):
        st = st | {v}
        seq.append(st)
    # collapse accidental no-ops at the seams
    out = [seq[0]]
    for x in seq[1:]:
        if x != out[-1]:
            out.append(x)
    return SolveResult(True, out)
