"""Simple undirected graphs over dense integer vertex ids.

All algorithm modules share this representation: vertices are 0..n-1,
edges are unordered pairs, no loops or multi-edges.  Instances are
immutable after construction, so they can be shared freely.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .errors import InputError

Edge = tuple[int, int]


def _norm_edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


class Graph:
    """A finite simple undirected graph."""

    __slots__ = ("n", "edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        es: set[Edge] = set()
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise InputError(f"edge ({a},{b}) has an endpoint outside [0,{n})")
            if a == b:
                raise InputError(f"self-loop at vertex {a}")
            e = _norm_edge(a, b)
            if e in es:
                continue
            es.add(e)
            adj[a].add(b)
            adj[b].add(a)
        self.n = n
        self.edges = frozenset(es)
        self._adj = tuple(frozenset(s) for s in adj)

    # -- basic queries ------------------------------------------------

    def check_vertex(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise InputError(f"vertex id {v} outside [0,{self.n})")
        return v

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: int, b: int) -> bool:
        self.check_vertex(a)
        self.check_vertex(b)
        return b in self._adj[a]

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"

    # -- traversal ----------------------------------------------------

    def reachable_from(self, start: int, removed: frozenset[int] | set[int] = frozenset()) -> set[int]:
        """Vertices reachable from `start` in the graph minus `removed`."""
        self.check_vertex(start)
        if start in removed:
            raise InputError(f"start vertex {start} is in the removed set")
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in seen and y not in removed:
                    seen.add(y)
                    queue.append(y)
        return seen

    def components(self, removed: frozenset[int] | set[int] = frozenset()) -> list[set[int]]:
        """Connected components of the graph minus `removed`, each sorted
        by smallest member."""
        seen: set[int] = set(removed)
        comps = []
        for v in range(self.n):
            if v in seen:
                continue
            comp = self.reachable_from(v, frozenset(removed))
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return len(self.reachable_from(0)) == self.n

    def bfs_distances(self, start: int) -> dict[int, int]:
        dist = {start: 0}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in self._adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        return dist

    def diameter(self) -> int:
        """Exact diameter via all-pairs BFS.  Raises on disconnected input."""
        if not self.is_connected():
            raise InputError("diameter undefined: graph is disconnected")
        if self.n == 0:
            raise InputError("diameter undefined: empty graph")
        best = 0
        for v in range(self.n):
            best = max(best, max(self.bfs_distances(v).values()))
        return best

    # -- structure ----------------------------------------------------

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def bipartition(self) -> tuple[set[int], set[int]] | None:
        """A 2-coloring (per component, the side holding the smallest
        vertex goes left), or None if the graph is odd-cycle-bearing."""
        color: dict[int, int] = {}
        for v in range(self.n):
            if v in color:
                continue
            color[v] = 0
            queue = deque([v])
            while queue:
                x = queue.popleft()
                for y in self._adj[x]:
                    if y not in color:
                        color[y] = 1 - color[x]
                        queue.append(y)
                    elif color[y] == color[x]:
                        return None
        left = {v for v, c in color.items() if c == 0}
        return left, set(range(self.n)) - left

    def cut_vertices(self) -> set[int]:
        """Articulation points (Hopcroft-Tarjan, iterative)."""
        disc: dict[int, int] = {}
        low: dict[int, int] = {}
        cuts: set[int] = set()
        timer = 0
        for root in range(self.n):
            if root in disc:
                continue
            stack: list[tuple[int, int | None, Iterator[int]]] = [
                (root, None, iter(self._adj[root]))
            ]
            disc[root] = low[root] = timer
            timer += 1
            root_children = 0
            while stack:
                v, parent, it = stack[-1]
                advanced = False
                for w in it:
                    if w == parent:
                        continue
                    if w in disc:
                        low[v] = min(low[v], disc[w])
                    else:
                        disc[w] = low[w] = timer
                        timer += 1
                        if v == root:
                            root_children += 1
                        stack.append((w, v, iter(self._adj[w])))
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    if stack:
                        pv = stack[-1][0]
                        low[pv] = min(low[pv], low[v])
                        if pv != root and low[v] >= disc[pv]:
                            cuts.add(pv)
            if root_children >= 2:
                cuts.add(root)
        return cuts

    def blocks(self) -> list[frozenset[Edge]]:
        """Biconnected components as edge sets (bridges come out as
        single-edge blocks).  Ordered by smallest edge."""
        disc: dict[int, int] = {}
        low: dict[int, int] = {}
        timer = 0
        estack: list[Edge] = []
        out: list[frozenset[Edge]] = []

        for root in range(self.n):
            if root in disc:
                continue
            disc[root] = low[root] = timer
            timer += 1
            stack: list[tuple[int, int | None, Iterator[int]]] = [
                (root, None, iter(sorted(self._adj[root])))
            ]
            while stack:
                v, parent, it = stack[-1]
                advanced = False
                for w in it:
                    if w == parent:
                        continue
                    if w in disc:
                        if disc[w] < disc[v]:
                            estack.append(_norm_edge(v, w))
                            low[v] = min(low[v], disc[w])
                    else:
                        estack.append(_norm_edge(v, w))
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append((w, v, iter(sorted(self._adj[w]))))
                        advanced = True
                        break
                if not advanced:
                    stack.pop()
                    if stack:
                        pv = stack[-1][0]
                        low[pv] = min(low[pv], low[v])
                        if low[v] >= disc[pv]:
                            block = []
                            e = _norm_edge(pv, v)
                            while estack:
                                f = estack.pop()
                                block.append(f)
                                if f == e:
                                    break
                            out.append(frozenset(block))
        return sorted(out, key=lambda b: sorted(b))

    def subgraph_with_edges(self, edges: Iterable[Edge]) -> "Graph":
        """Same vertex universe, restricted edge set."""
        return Graph(self.n, edges)

    # -- text format --------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        """Parse the shared graph format: first data line ``n m``, then m
        lines ``a b``; ``#`` comment lines and blank lines are skipped."""
        lines = []
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            lines.append(line)
        if not lines:
            raise InputError("empty graph description")
        head = lines[0].split()
        if len(head) != 2:
            raise InputError(f"expected 'n m' header, got {lines[0]!r}")
        try:
            n, m = int(head[0]), int(head[1])
        except ValueError as exc:
            raise InputError(f"bad header {lines[0]!r}") from exc
        if len(lines) - 1 != m:
            raise InputError(f"header promises {m} edges, found {len(lines) - 1}")
        edges = []
        for line in lines[1:]:
            parts = line.split()
            if len(parts) != 2:
                raise InputError(f"bad edge line {line!r}")
            try:
                edges.append((int(parts[0]), int(parts[1])))
            except ValueError as exc:
                raise InputError(f"bad edge line {line!r}") from exc
        return cls(n, edges)

    def to_text(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines.extend(f"{a} {b}" for a, b in sorted(self.edges))
        return "\n".join(lines) + "\n"


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
