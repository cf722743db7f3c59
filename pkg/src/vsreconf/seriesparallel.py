"""Separator reconfiguration on series-parallel graphs.

A 2-connected series-parallel graph arises from a single edge by
repeatedly subdividing an edge (series operation) or duplicating one
(parallel operation).  Recording the operations yields a rooted full
binary tree over multigraph edges — here called the construction tree —
from which one can read off, for any non-adjacent vertex pair (s, t),
a canonical minimum st-separator M(s, t) together with a constructive
procedure reconfiguring any separator into one containing M(s, t) under
token jumping.  Since both endpoints of an instance reach such a state,
every TJ instance on a series-parallel graph is a YES instance.

The reduction runs per 2-connected block; pairs split by a cut vertex
are routed through a state holding that cut vertex instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ContractViolationError, InputError, NotApplicableError
from .graph import Graph
from .instance import ReconfigInstance, ReconfigSequence, Rule
from .separators import State, is_separator, shrink_to_minimal


# ---------------------------------------------------------------------------
# construction trees


@dataclass
class PSTree:
    """Record of the series/parallel construction of one 2-connected
    block: edge ids with endpoints, the operation applied to each
    non-leaf edge, and parent pointers.  ``order`` lists targeted edges
    in construction order, starting from ``root_edge`` (the two-vertex
    stage); the first operation is always parallel."""

    block_vertices: frozenset[int]
    root_edge: int
    endpoints: dict[int, tuple[int, int]]
    # targeted eid -> (op kind 'S'|'P', created vertex or None, (child, child))
    op: dict[int, tuple[str, int | None, tuple[int, int]]]
    parent: dict[int, int]
    support: dict[int, int]  # created vertex -> subdivided edge id
    order: list[int]
    leaves: frozenset[int]
    _subtree_cache: dict[int, frozenset[int]] = field(default_factory=dict)

    # -- structural lookups -------------------------------------------------

    def root_vertices(self) -> frozenset[int]:
        return frozenset(self.endpoints[self.root_edge])

    def ancestors(self, eid: int) -> list[int]:
        """Chain from the root edge down to (and including) eid."""
        chain = [eid]
        while chain[-1] in self.parent:
            chain.append(self.parent[chain[-1]])
        chain.reverse()
        return chain

    def is_descendant(self, eid: int, anc: int) -> bool:
        cur = eid
        while True:
            if cur == anc:
                return True
            if cur not in self.parent:
                return False
            cur = self.parent[cur]

    def subtree_created(self, eid: int) -> frozenset[int]:
        """Vertices created by series operations at eid or below."""
        if eid not in self._subtree_cache:
            out: set[int] = set()
            stack = [eid]
            while stack:
                e = stack.pop()
                if e in self.op:
                    kind, created, kids = self.op[e]
                    if kind == "S":
                        out.add(created)
                    stack.extend(kids)
            self._subtree_cache[eid] = frozenset(out)
        return self._subtree_cache[eid]

    def espan(self, v: int) -> list[int]:
        """Series-targeted ancestors of the support of v, from the root
        down to the support itself."""
        if v not in self.support:
            raise InputError(f"vertex {v} belongs to the two-vertex stage")
        return [e for e in self.ancestors(self.support[v]) if self.op[e][0] == "S"]

    def edges_with_endpoints(self, u: int, v: int) -> list[int]:
        pair = frozenset((u, v))
        return [e for e, ends in self.endpoints.items() if frozenset(ends) == pair]

    def epsilon(self, u: int, v: int) -> int:
        return sum(
            1 for e in self.edges_with_endpoints(u, v) if self.op.get(e, ("",))[0] == "P"
        )

    def vertices_supported_on(self, u: int, v: int) -> frozenset[int]:
        pair = frozenset((u, v))
        return frozenset(
            x
            for x, e in self.support.items()
            if frozenset(self.endpoints[e]) == pair
        )

    def other_endpoint(self, eid: int, v: int) -> int:
        a, b = self.endpoints[eid]
        if v == a:
            return b
        if v == b:
            return a
        raise InputError(f"{v} is not an endpoint of edge {eid}")

    def lca(self, e: int, f: int) -> int:
        ae, af = self.ancestors(e), self.ancestors(f)
        common = None
        for x, y in zip(ae, af):
            if x != y:
                break
            common = x
        assert common is not None
        return common

    def child_towards(self, anc: int, eid: int) -> int:
        """The child of anc on the path down to eid (eid != anc)."""
        chain = self.ancestors(eid)
        i = chain.index(anc)
        return chain[i + 1]

    # -- replay -------------------------------------------------------------

    def replay(self) -> list[frozenset[int]]:
        """Re-run the recorded construction; returns the endpoint pairs
        of the final multigraph's edges (with multiplicity collapsed)."""
        live = {self.root_edge}
        for e in self.order:
            if e not in live:
                raise ContractViolationError("construction order is inconsistent")
            live.remove(e)
            live.update(self.op[e][2])
        if live != set(self.leaves):
            raise ContractViolationError("replay does not end at the leaf edges")
        return [frozenset(self.endpoints[e]) for e in live]

    def to_term(self) -> str:
        """Nested parenthesized rendering of the construction."""

        def render(eid: int) -> str:
            u, v = self.endpoints[eid]
            if eid not in self.op:
                return f"{u}-{v}"
            kind, created, (l, r) = self.op[eid]
            tag = f"S@{created}" if kind == "S" else "P"
            return f"({tag} {u}-{v} {render(l)} {render(r)})"

        return render(self.root_edge)


def build_ps_tree(block_edges: list[tuple[int, int]]) -> PSTree:
    """Reduce a 2-connected block to a single edge by series and parallel
    reductions, recording the inverse construction.

    Deterministic: parallel reductions first (lowest edge-id pair), then
    the series reduction at the highest-id degree-2 vertex (inner pieces
    carry high ids in the reference fixtures, so the frame vertices
    survive to the root).  Raises NotApplicableError if the block is not
    series-parallel.
    """
    endpoints: dict[int, tuple[int, int]] = {}
    for i, (a, b) in enumerate(sorted(tuple(sorted(e)) for e in block_edges)):
        endpoints[i] = (a, b)
    leaves = frozenset(endpoints)
    block_vertices = frozenset(v for e in endpoints.values() for v in e)

    live = set(endpoints)
    op: dict[int, tuple[str, int | None, tuple[int, int]]] = {}
    parent: dict[int, int] = {}
    support: dict[int, int] = {}
    reductions: list[int] = []
    next_id = len(endpoints)

    def incident(v: int) -> list[int]:
        return sorted(e for e in live if v in endpoints[e])

    while len(live) > 1:
        # parallel reduction at the lowest edge-id pair
        groups: dict[frozenset[int], list[int]] = {}
        for e in sorted(live):
            groups.setdefault(frozenset(endpoints[e]), []).append(e)
        par = [g for g in groups.values() if len(g) >= 2]
        if par:
            e1, e2 = min(par, key=lambda g: g[0])[:2]
            m = next_id
            next_id += 1
            endpoints[m] = endpoints[e1]
            op[m] = ("P", None, (e1, e2))
            parent[e1] = parent[e2] = m
            live -= {e1, e2}
            live.add(m)
            reductions.append(m)
            continue
        # series reduction at the highest degree-2 vertex
        done = False
        for w in sorted(block_vertices, reverse=True):
            inc = incident(w)
            if len(inc) != 2:
                continue
            e1, e2 = inc
            u = next(x for x in endpoints[e1] if x != w)
            v = next(x for x in endpoints[e2] if x != w)
            if u == v:
                continue  # would form a loop; the pair is parallel instead
            a, b = min(u, v), max(u, v)
            m = next_id
            next_id += 1
            endpoints[m] = (a, b)
            first = e1 if a in endpoints[e1] else e2
            second = e2 if first == e1 else e1
            op[m] = ("S", w, (first, second))
            parent[e1] = parent[e2] = m
            support[w] = m
            live -= {e1, e2}
            live.add(m)
            reductions.append(m)
            done = True
            break
        if not done:
            raise NotApplicableError(
                "block is not series-parallel: "
                f"vertices {sorted(block_vertices)}"
            )
    (root,) = live
    tree = PSTree(
        block_vertices=block_vertices,
        root_edge=root,
        endpoints=endpoints,
        op=op,
        parent=parent,
        support=support,
        order=list(reversed(reductions)),
        leaves=leaves,
    )
    if tree.order and tree.op[tree.order[0]][0] != "P":
        raise ContractViolationError("construction must start with a parallel step")
    return tree


@dataclass
class SPDecomposition:
    graph: Graph
    trees: list[PSTree]  # one per multi-edge block; K2 blocks carry no tree
    k2_blocks: list[frozenset[int]]

    def tree_for(self, s: int, t: int) -> PSTree | None:
        for tr in self.trees:
            if s in tr.block_vertices and t in tr.block_vertices:
                return tr
        return None


def recognize_and_decompose(g: Graph) -> SPDecomposition:
    """Construction trees for every 2-connected block of a connected
    graph; raises NotApplicableError naming the first non-series-parallel
    block."""
    if not g.is_connected():
        raise InputError("decomposition expects a connected graph")
    trees = []
    k2 = []
    for block in g.blocks():
        edges = sorted(block)
        if len(edges) == 1:
            k2.append(frozenset(edges[0]))
            continue
        trees.append(build_ps_tree(edges))
    return SPDecomposition(g, trees, k2)


# ---------------------------------------------------------------------------
# pair classification and canonical separators


@dataclass(frozen=True)
class Parallel:
    a: int
    b: int


@dataclass(frozen=True)
class Serial:
    a: int
    z: int


@dataclass(frozen=True)
class Sequential:
    a: int
    v_st: frozenset[int]


@dataclass(frozen=True)
class Nested:
    a: int
    z: int


@dataclass(frozen=True)
class RootBoth:
    v_st: frozenset[int]


@dataclass(frozen=True)
class RootEdge:
    a: int
    v_st: frozenset[int]


@dataclass(frozen=True)
class RootNoEdge:
    a: int
    z: int


@dataclass(frozen=True)
class CutVertexSeparated:
    w: int


PairClassification = (
    Parallel
    | Serial
    | Sequential
    | Nested
    | RootBoth
    | RootEdge
    | RootNoEdge
    | CutVertexSeparated
)


def _lowest_incident_ancestor(tree: PSTree, eid: int, v: int) -> int | None:
    """Deepest edge on the root path of eid (excluding eid itself only if
    not v-incident) having v as an endpoint."""
    found = None
    for anc in tree.ancestors(eid):
        if v in tree.endpoints[anc]:
            found = anc
    return found


def _classify_block(tree: PSTree, s: int, t: int) -> tuple[PairClassification, bool]:
    """Classification plus a flag marking that the roles of s and t were
    swapped to fit the orientation conventions."""
    roots = tree.root_vertices()
    s_in, t_in = s in roots, t in roots
    if s_in and t_in:
        return RootBoth(tree.vertices_supported_on(s, t)), False
    swapped = False
    if t_in and not s_in:
        s, t, swapped = t, s, True
        s_in = True

    st_edges = tree.edges_with_endpoints(s, t)
    if s_in:
        if st_edges:
            a = tree.other_endpoint(tree.support[t], s)
            return RootEdge(a, tree.vertices_supported_on(s, t)), swapped
        f = _lowest_incident_ancestor(tree, tree.support[t], s)
        assert f is not None and tree.op[f][0] == "S"
        z = tree.op[f][1]
        a = tree.other_endpoint(f, s)
        assert z is not None
        return RootNoEdge(a, z), swapped

    if st_edges:
        if s in tree.endpoints[tree.support[t]]:
            a = tree.other_endpoint(tree.support[t], s)
            return Sequential(a, tree.vertices_supported_on(s, t)), swapped
        assert t in tree.endpoints[tree.support[s]]
        a = tree.other_endpoint(tree.support[s], t)
        return Sequential(a, tree.vertices_supported_on(s, t)), not swapped

    for outer, inner, flip in ((s, t, swapped), (t, s, not swapped)):
        f = _lowest_incident_ancestor(tree, tree.support[inner], outer)
        if f is not None:
            assert tree.op[f][0] == "S"
            z = tree.op[f][1]
            a = tree.other_endpoint(f, outer)
            assert z is not None
            return Nested(a, z), flip

    l = tree.lca(tree.support[s], tree.support[t])
    kind, created, _ = tree.op[l]
    if kind == "P":
        a, b = tree.endpoints[l]
        return Parallel(a, b), swapped
    assert created is not None
    ct = tree.child_towards(l, tree.support[t])
    a = tree.other_endpoint(ct, created)
    return Serial(a, created), swapped


def classify_pair(decomp: SPDecomposition, s: int, t: int) -> PairClassification:
    g = decomp.graph
    g.check_vertex(s)
    g.check_vertex(t)
    if s == t or g.has_edge(s, t):
        raise InputError("expects distinct non-adjacent vertices")
    tree = decomp.tree_for(s, t)
    if tree is None:
        for k2 in decomp.k2_blocks:
            if s in k2 and t in k2:
                raise InputError("expects distinct non-adjacent vertices")
        for w in sorted(g.cut_vertices()):
            if w not in (s, t) and is_separator(g, s, t, {w}):
                return CutVertexSeparated(w)
        raise ContractViolationError("no block or cut vertex found for the pair")
    return _classify_block(tree, s, t)[0]


@dataclass(frozen=True)
class CanonicalSeparator:
    members: State
    classification: PairClassification
    epsilon: int


def canonical_separator(decomp: SPDecomposition, s: int, t: int) -> CanonicalSeparator:
    """The canonical minimum st-separator M(s, t) read off the
    construction tree (a cut vertex for pairs split across blocks)."""
    kind = classify_pair(decomp, s, t)
    if isinstance(kind, CutVertexSeparated):
        members: State = frozenset({kind.w})
        eps = 0
    elif isinstance(kind, (Parallel,)):
        members = frozenset({kind.a, kind.b})
        eps = 0
    elif isinstance(kind, (Serial, Nested, RootNoEdge)):
        members = frozenset({kind.a, kind.z})
        eps = 0
    elif isinstance(kind, RootBoth):
        members = kind.v_st
        tree = decomp.tree_for(s, t)
        assert tree is not None
        eps = tree.epsilon(s, t)
    else:
        assert isinstance(kind, (Sequential, RootEdge))
        members = kind.v_st | {kind.a}
        tree = decomp.tree_for(s, t)
        assert tree is not None
        eps = tree.epsilon(s, t)
    if not is_separator(decomp.graph, s, t, members):
        raise ContractViolationError("canonical set fails the separator check")
    expected = eps + (1 if isinstance(kind, RootBoth) else 2)
    if len(members) != expected:
        raise ContractViolationError("canonical separator has unexpected size")
    return CanonicalSeparator(members, kind, eps)


# ---------------------------------------------------------------------------
# constructive reconfiguration toward the canonical separator


class _Walker:
    """Token moves over a minimal separator with per-step validation."""

    def __init__(self, g: Graph, s: int, t: int, start: State):
        self.g, self.s, self.t = g, s, t
        self.cur = start
        self.seq: ReconfigSequence = [start]

    def move(self, x: int, d: int) -> None:
        if x == d:
            return
        if x not in self.cur or d in self.cur or d in (self.s, self.t):
            raise ContractViolationError(f"illegal move {x}->{d}")
        nxt = self.cur - {x} | {d}
        if not is_separator(self.g, self.s, self.t, nxt):
            raise ContractViolationError(f"move {x}->{d} breaks the separator")
        self.cur = nxt
        self.seq.append(nxt)

    def move_any_to(self, d: int, protected: frozenset[int] = frozenset()) -> None:
        if d in self.cur:
            return
        for x in sorted(self.cur - protected):
            nxt = self.cur - {x} | {d}
            if is_separator(self.g, self.s, self.t, nxt):
                self.cur = nxt
                self.seq.append(nxt)
                return
        raise ContractViolationError(f"no token can reach {d}")

    def reach_from(self, v: int) -> frozenset[int]:
        return frozenset(self.g.reachable_from(v, self.cur))


def _span_suffix(tree: PSTree, t: int, top: int) -> list[int]:
    """Edges of the span of t that descend from (or equal) top."""
    return [e for e in tree.espan(t) if tree.is_descendant(e, top)]


def _span_walk(tree: PSTree, w: _Walker, t: int, F: list[int]) -> None:
    """Reconfigure a separator contained in the pieces of F[0] until it
    holds both endpoints of F[0]; F is a suffix of the span of t."""
    cur_endpoint_idx = None
    for i, f in enumerate(F):
        if set(tree.endpoints[f]) & w.cur:
            cur_endpoint_idx = i
            break

    if cur_endpoint_idx is None:
        supp_t = tree.support[t]
        moved = False
        # a token inside a branch hanging off the support of t moves to
        # the branch's outer endpoint
        if supp_t in tree.op:
            _, _, kids = tree.op[supp_t]
            for kid in kids:
                inside = sorted(w.cur & tree.subtree_created(kid))
                if inside:
                    outer = tree.other_endpoint(kid, t)
                    w.move(inside[0], outer)
                    moved = True
                    break
        if not moved:
            # a token forming a parallel pair with t jumps to the endpoint
            # of the shared frame edge that t can still reach
            pairs_f = {frozenset(tree.endpoints[f]): f for f in F}
            for x in sorted(w.cur):
                if x not in tree.support:
                    continue
                sx, st_ = tree.support[x], tree.support[t]
                if tree.is_descendant(sx, st_) or tree.is_descendant(st_, sx):
                    continue
                l = tree.lca(sx, st_)
                if tree.op[l][0] != "P":
                    continue
                frame = frozenset(tree.endpoints[l])
                if frame not in pairs_f:
                    continue
                reach = w.reach_from(t)
                ends = sorted(frame)
                reachable = [v for v in ends if v in reach]
                if len(reachable) != 1:
                    raise ContractViolationError(
                        "parallel-pair frame must have exactly one reachable endpoint"
                    )
                w.move(x, reachable[0])
                moved = True
                break
        if not moved:
            # largest-index frame edge with one endpoint cut off: a token
            # in the sibling branch moves onto the cut endpoint
            reach = w.reach_from(t)
            for i in range(len(F) - 1, -1, -1):
                x, y = tree.endpoints[F[i]]
                if (x in reach) == (y in reach):
                    continue
                blocked = x if x not in reach else y
                _, created, kids = tree.op[F[i]]
                sibling = next(k for k in kids if blocked in tree.endpoints[k])
                inside = sorted(w.cur & tree.subtree_created(sibling))
                if not inside:
                    continue
                w.move(inside[0], blocked)
                moved = True
                break
        if not moved:
            raise ContractViolationError("span walk found no applicable move")
        for i, f in enumerate(F):
            if set(tree.endpoints[f]) & w.cur:
                cur_endpoint_idx = i
                break
        assert cur_endpoint_idx is not None

    i = cur_endpoint_idx
    x, y = tree.endpoints[F[i]]
    have = x if x in w.cur else y
    other = y if have == x else x
    w.move_any_to(other, protected=frozenset({have}))
    # walk outward along the span, one shared endpoint at a time
    for j in range(i - 1, -1, -1):
        inner = frozenset(tree.endpoints[F[j + 1]])
        outer_e = frozenset(tree.endpoints[F[j]])
        (shared,) = inner & outer_e
        (d_new,) = outer_e - inner
        (d_old,) = inner - outer_e
        if d_new not in w.cur:
            w.move(d_old, d_new)


def _do_sequential(
    tree: PSTree, w: _Walker, s: int, t: int, v_st: frozenset[int], a: int | None
) -> None:
    for z in sorted(v_st):
        if z in w.cur:
            continue
        e = tree.support[z]
        inside = sorted(w.cur & tree.subtree_created(e))
        if not inside:
            raise ContractViolationError("separator misses a parallel branch")
        w.move(inside[0], z)
    if a is not None:
        w.move_any_to(a, protected=v_st)


def _do_nested(
    tree: PSTree, w: _Walker, s: int, t: int, a: int, z: int, f: int
) -> None:
    _, _, kids = tree.op[f]
    kid_z_outer = next(k for k in kids if a in tree.endpoints[k])  # the z-a side
    kid_z_s = next(k for k in kids if k != kid_z_outer)  # the s-z side
    F = _span_suffix(tree, t, kid_z_outer)
    if {a, z} <= w.cur:
        return
    if a in w.cur:
        w.move_any_to(z, protected=frozenset({a}))
        return
    if z in w.cur:
        w.move_any_to(a, protected=frozenset({z}))
        return
    reach = w.reach_from(t)
    if a not in reach and z not in reach:
        _span_walk(tree, w, t, F)
        return
    if z in reach:
        inside = sorted(w.cur & tree.subtree_created(kid_z_s))
        if not inside:
            raise ContractViolationError("reachable hub without a guarding token")
        w.move(inside[0], z)
    else:
        inside = sorted(w.cur & tree.subtree_created(kid_z_outer))
        if not inside:
            raise ContractViolationError("no token on the inner branch")
        w.move(inside[0], z)
    w.move_any_to(a, protected=frozenset({z}))


def _do_serial(tree: PSTree, w: _Walker, s: int, t: int, a: int, z: int, l: int) -> None:
    ct = tree.child_towards(l, tree.support[t])
    cs = tree.child_towards(l, tree.support[s])
    b = tree.other_endpoint(l, a)
    F = _span_suffix(tree, t, ct)
    if {a, z} <= w.cur:
        return
    if a in w.cur:
        w.move_any_to(z, protected=frozenset({a}))
        return
    if z in w.cur:
        w.move_any_to(a, protected=frozenset({z}))
        return
    reach = w.reach_from(t)
    if a not in reach and z not in reach:
        _span_walk(tree, w, t, F)
        return
    if (a in reach) != (z in reach):
        blocked = a if a not in reach else z
        inside = sorted(w.cur & tree.subtree_created(ct))
        if not inside:
            raise ContractViolationError("frame endpoint cut without a branch token")
        w.move(inside[0], blocked)
        _span_walk(tree, w, t, F)
        return
    # both frame endpoints reachable from t: the separator cuts s off on
    # the far branch (frame z-b); walk the span of s there, then shift
    # the token on b over to a
    Fs = _span_suffix(tree, s, cs)
    ws = _Walker(w.g, t, s, w.cur)  # roles swapped for the walk
    _span_walk(tree, ws, s, Fs)
    w.seq.extend(ws.seq[1:])
    w.cur = ws.cur
    assert {z, b} <= w.cur
    w.move(b, a)


def _do_parallel(tree: PSTree, w: _Walker, s: int, t: int, a: int, b: int, l: int) -> None:
    ct = tree.child_towards(l, tree.support[t])
    cs = tree.child_towards(l, tree.support[s])
    if {a, b} <= w.cur:
        return
    if a in w.cur:
        w.move_any_to(b, protected=frozenset({a}))
        return
    if b in w.cur:
        w.move_any_to(a, protected=frozenset({b}))
        return
    a_t = w.cur & tree.subtree_created(ct)
    a_s = w.cur & tree.subtree_created(cs)
    if w.cur == a_t:
        _span_walk(tree, w, t, _span_suffix(tree, t, ct))
        return
    if w.cur == a_s:
        ws = _Walker(w.g, t, s, w.cur)
        _span_walk(tree, ws, s, _span_suffix(tree, s, cs))
        w.seq.extend(ws.seq[1:])
        w.cur = ws.cur
        return
    if not a_s or not a_t:
        raise ContractViolationError("parallel pair with a one-sided separator")
    reach_s = w.g.reachable_from(s, w.cur)
    first = a if a not in reach_s else b
    second = b if first == a else a
    if first not in w.cur:
        w.move(sorted(a_s)[0], first)
    w.move_any_to(second, protected=frozenset({first}))


def reconfigure_to_canonical(
    decomp: SPDecomposition, s: int, t: int, a_sep: State
) -> ReconfigSequence:
    """TJ sequence carrying a minimal st-separator to a separator that
    contains the canonical set M(s, t); every move is re-validated."""
    g = decomp.graph
    from .separators import is_minimal_separator

    if not is_minimal_separator(g, s, t, a_sep):
        raise InputError("expects a minimal separator; shrink the input first")
    canon = canonical_separator(decomp, s, t)
    kind = canon.classification
    w = _Walker(g, s, t, a_sep)
    if canon.members <= w.cur:
        return w.seq

    if isinstance(kind, CutVertexSeparated):
        w.move_any_to(kind.w)
        return w.seq

    tree = decomp.tree_for(s, t)
    assert tree is not None
    kind_b, swapped = _classify_block(tree, s, t)
    ss, tt = (t, s) if swapped else (s, t)
    if swapped:
        w = _Walker(g, ss, tt, a_sep)  # separator checks are symmetric

    if isinstance(kind_b, (RootBoth,)):
        _do_sequential(tree, w, ss, tt, kind_b.v_st, None)
    elif isinstance(kind_b, RootEdge):
        _do_sequential(tree, w, ss, tt, kind_b.v_st, kind_b.a)
    elif isinstance(kind_b, Sequential):
        _do_sequential(tree, w, ss, tt, kind_b.v_st, kind_b.a)
    elif isinstance(kind_b, (Nested, RootNoEdge)):
        f = _lowest_incident_ancestor(tree, tree.support[tt], ss)
        assert f is not None
        _do_nested(tree, w, ss, tt, kind_b.a, kind_b.z, f)
    elif isinstance(kind_b, Serial):
        l = tree.lca(tree.support[ss], tree.support[tt])
        _do_serial(tree, w, ss, tt, kind_b.a, kind_b.z, l)
    else:
        assert isinstance(kind_b, Parallel)
        l = tree.lca(tree.support[ss], tree.support[tt])
        _do_parallel(tree, w, ss, tt, kind_b.a, kind_b.b, l)

    if not canon.members <= w.cur:
        raise ContractViolationError("canonicalization did not reach M(s,t)")
    return w.seq


# ---------------------------------------------------------------------------
# full solver


def _with_surplus(
    core_seq: ReconfigSequence, full_start: State
) -> ReconfigSequence:
    """Lift a core (minimal-separator) sequence to full states carrying
    the surplus tokens unchanged; when a core move lands on a surplus
    token, the two tokens swap roles and no state is emitted."""
    surplus = set(full_start - core_seq[0])
    out = [full_start]
    for prev, nxt in zip(core_seq, core_seq[1:]):
        gone = prev - nxt
        new = nxt - prev
        assert len(gone) == 1 and len(new) == 1
        (d,) = new
        if d in surplus:
            (x,) = gone
            surplus.discard(d)
            surplus.add(x)
            continue
        state = frozenset(nxt | surplus)
        if state != out[-1]:
            out.append(state)
    return out


def _bridge(start: State, goal: State, keep: State) -> ReconfigSequence:
    """Jump the tokens off ``keep`` one at a time; all intermediate states
    contain ``keep`` and are therefore separators."""
    seq: ReconfigSequence = []
    cur = start
    for x, d in zip(sorted(start - goal), sorted(goal - start)):
        assert x not in keep and d not in keep
        cur = cur - {x} | {d}
        seq.append(cur)
    assert cur == goal
    return seq


def sp_solve_tj(instance: ReconfigInstance) -> ReconfigSequence:
    """Constructive TJ solver: the answer is always YES.

    Pairs split by a cut vertex route both endpoints through states
    containing it; pairs inside one block (which must be series-parallel)
    are canonicalized toward M(s, t) with surplus tokens carried inertly,
    then bridged.
    """
    if instance.rule is not Rule.TJ:
        raise InputError("expects a TJ instance")
    g, s, t = instance.graph, instance.s, instance.t
    a, b = instance.source, instance.target
    if a == b:
        return [a]
    decomp = recognize_and_decompose(g)
    tree = decomp.tree_for(s, t)

    if tree is None:
        # different blocks: any state holding a separating cut vertex is
        # a separator, so one token anchors it while the rest jump freely
        kind = classify_pair(decomp, s, t)
        assert isinstance(kind, CutVertexSeparated)
        wv = kind.w
        seq = [a]
        cur = a
        if wv not in cur:
            x = sorted(cur)[0]
            cur = cur - {x} | {wv}
            seq.append(cur)
        goal = b
        tail: ReconfigSequence = []
        if wv not in goal:
            x = sorted(goal)[0]
            mid = goal - {x} | {wv}
            tail = [goal]
            goal = mid
        seq.extend(_bridge(cur, goal, frozenset({wv})))
        seq.extend(tail)
    else:
        a_core = shrink_to_minimal(g, s, t, a)
        b_core = shrink_to_minimal(g, s, t, b)
        fwd = _with_surplus(reconfigure_to_canonical(decomp, s, t, a_core), a)
        bwd = _with_surplus(reconfigure_to_canonical(decomp, s, t, b_core), b)
        canon = canonical_separator(decomp, s, t)
        seq = fwd + _bridge(fwd[-1], bwd[-1], canon.members) + list(reversed(bwd))[1:]

    out = [seq[0]]
    for st_ in seq[1:]:
        if st_ != out[-1]:
            out.append(st_)
    from .oracle import verify_sequence

    check = verify_sequence(instance, out)
    if not check:
        raise ContractViolationError(f"constructed sequence invalid: {check.reason}")
    return out
