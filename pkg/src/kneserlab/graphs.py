"""Graph families (Kneser, bipartite Kneser, odd, middle levels) and
basic structural queries: degrees, components, distances, girth.

Graphs are immutable after construction.  Vertices are Blocks listed in
colexicographic (bitmask) order; every index-based API refers to that
order.  Edge labels exist only for the odd and middle-levels families:
for an odd graph the label of (u, v) is the unique ground element outside
u | v, for a middle levels graph the unique element of u ^ v.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterator, Optional, Sequence

from .errors import NotAdjacentError, ParameterError, UnlabeledGraphError
from .setcore import Block, binomial, check_ground, k_blocks

KNESER = "kneser"
BIPARTITE_KNESER = "bikneser"
ODD = "odd"
MIDDLE_LEVELS = "middle"

_FAMILY_KINDS = (KNESER, BIPARTITE_KNESER, ODD, MIDDLE_LEVELS)


@dataclass(frozen=True)
class Family:
    """Identifier of a graph family instance.

    Odd(n) is the Kneser graph on (n-1)-subsets of [2n-1]; MiddleLevels(n)
    is the bipartite Kneser graph on the (n-1)- and n-subsets of [2n-1].
    """

    kind: str
    n: int
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind not in _FAMILY_KINDS:
            raise ParameterError(f"unknown family kind {self.kind!r}")
        if self.kind in (KNESER, BIPARTITE_KNESER):
            if self.k is None or not 0 < self.k < self.n:
                raise ParameterError(
                    f"{self.kind} requires 0 < k < n, got n={self.n}, k={self.k}"
                )
            check_ground(self.n)
        else:
            if self.n < 1:
                raise ParameterError(f"{self.kind} requires n >= 1, got {self.n}")
            if self.k is not None:
                raise ParameterError(f"{self.kind} takes a single parameter")
            check_ground(2 * self.n - 1)

    @classmethod
    def kneser(cls, n: int, k: int) -> "Family":
        return cls(KNESER, n, k)

    @classmethod
    def bipartite_kneser(cls, n: int, k: int) -> "Family":
        return cls(BIPARTITE_KNESER, n, k)

    @classmethod
    def odd(cls, n: int) -> "Family":
        return cls(ODD, n)

    @classmethod
    def middle_levels(cls, n: int) -> "Family":
        return cls(MIDDLE_LEVELS, n)

    @property
    def ground(self) -> int:
        if self.kind in (ODD, MIDDLE_LEVELS):
            return 2 * self.n - 1
        return self.n

    @property
    def subset_size(self) -> int:
        """Size k of the defining blocks (n-1 for the one-parameter families)."""
        if self.kind in (ODD, MIDDLE_LEVELS):
            return self.n - 1
        assert self.k is not None
        return self.k

    @property
    def params(self) -> tuple[int, ...]:
        if self.kind in (ODD, MIDDLE_LEVELS):
            return (self.n,)
        assert self.k is not None
        return (self.n, self.k)

    def __str__(self) -> str:
        return f"{self.kind}({','.join(str(p) for p in self.params)})"


@dataclass(frozen=True)
class DegreeProfile:
    """Degree classification of a graph.

    kind is one of "regular", "biregular", "irregular".  For biregular
    graphs a >= b and sides holds the two vertex-index classes (degree-a
    side first).
    """

    kind: str
    a: int = 0
    b: int = 0
    degree_counts: tuple[tuple[int, int], ...] = ()
    sides: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

    @property
    def signature(self) -> tuple:
        """Census key: ("regular", d) or ("biregular", a, b) or ("irregular",)."""
        if self.kind == "regular":
            return ("regular", self.a)
        if self.kind == "biregular":
            return ("biregular", self.a, self.b)
        return ("irregular",)

    def __str__(self) -> str:
        if self.kind == "regular":
            return f"regular({self.a})"
        if self.kind == "biregular":
            return f"biregular({self.a},{self.b})"
        return "irregular"


@dataclass(frozen=True)
class LabeledGraph:
    """Immutable undirected graph on Block vertices with optional edge colors.

    adj[i] is a tuple of (neighbor index, label-or-None) pairs sorted by
    neighbor index; every edge is stored in both endpoint lists with the
    same label.
    """

    ground: int
    vertices: tuple[Block, ...]
    adj: tuple[tuple[tuple[int, Optional[int]], ...], ...]
    family: Optional[Family] = None
    labeled: bool = False

    @cached_property
    def index(self) -> dict[Block, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def adj_map(self) -> tuple[dict[int, Optional[int]], ...]:
        """Per-vertex {neighbor index: label} for O(1) adjacency tests."""
        return tuple(dict(row) for row in self.adj)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def n_edges(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def degree(self, i: int) -> int:
        return len(self.adj[i])

    def neighbors(self, i: int) -> tuple[int, ...]:
        return tuple(j for j, _ in self.adj[i])

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adj_map[i]

    def index_of(self, v: Block) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise ParameterError(f"vertex {v} not in graph") from None

    def edges(self) -> Iterator[tuple[int, int, Optional[int]]]:
        """All edges as (i, j, label) with i < j, sorted by (i, j)."""
        for i, row in enumerate(self.adj):
            for j, lab in row:
                if i < j:
                    yield i, j, lab

    def label_between(self, i: int, j: int) -> Optional[int]:
        try:
            return self.adj_map[i][j]
        except KeyError:
            raise NotAdjacentError(
                f"vertices {self.vertices[i]} and {self.vertices[j]} are not adjacent"
            ) from None

    def subgraph(self, vertex_indices: Sequence[int]) -> "LabeledGraph":
        """Induced subgraph; vertices re-sorted into canonical order."""
        chosen = sorted(vertex_indices, key=lambda i: self.vertices[i].bits)
        keep = {old: new for new, old in enumerate(chosen)}
        verts = tuple(self.vertices[i] for i in chosen)
        adj = tuple(
            tuple((keep[j], lab) for j, lab in self.adj[i] if j in keep)
            for i in chosen
        )
        return LabeledGraph(self.ground, verts, adj, family=None, labeled=self.labeled)

    def is_connected(self) -> bool:
        if self.n_vertices == 0:
            return True
        return len(_component_of(self, 0)) == self.n_vertices

    def __str__(self) -> str:
        fam = f" {self.family}" if self.family else ""
        return (
            f"LabeledGraph{fam}(ground=[{self.ground}], "
            f"{self.n_vertices} vertices, {self.n_edges} edges)"
        )


def _assemble(
    ground: int,
    vertices: list[Block],
    edge_list: list[tuple[int, int, Optional[int]]],
    family: Optional[Family],
    labeled: bool,
) -> LabeledGraph:
    rows: list[list[tuple[int, Optional[int]]]] = [[] for _ in vertices]
    for i, j, lab in edge_list:
        rows[i].append((j, lab))
        rows[j].append((i, lab))
    adj = tuple(tuple(sorted(row)) for row in rows)
    return LabeledGraph(ground, tuple(vertices), adj, family=family, labeled=labeled)


def graph_from_edges(
    ground: int,
    vertices: Sequence[Block],
    edges: Sequence[tuple[int, int, Optional[int]]],
    family: Optional[Family] = None,
    labeled: Optional[bool] = None,
) -> LabeledGraph:
    """Build a graph from explicit vertex and (i, j, label) edge lists.

    Vertices must already be distinct; they are re-sorted into canonical
    colex order and edge indices remapped accordingly.  labeled defaults
    to whether any edge carries a label.
    """
    order = sorted(range(len(vertices)), key=lambda i: vertices[i].bits)
    remap = {old: new for new, old in enumerate(order)}
    verts = [vertices[i] for i in order]
    if len(set(verts)) != len(verts):
        raise ParameterError("duplicate vertices")
    if labeled is None:
        labeled = any(lab is not None for _, _, lab in edges)
    seen = set()
    edge_list = []
    for i, j, lab in edges:
        a, b = remap[i], remap[j]
        if a == b:
            raise ParameterError("self-loops are not allowed")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParameterError("duplicate edge")
        seen.add(key)
        edge_list.append((a, b, lab))
    return _assemble(ground, verts, edge_list, family, labeled)


def build(family: Family) -> LabeledGraph:
    """Construct a family instance with canonical vertex order.

    Labels are populated only for the odd and middle-levels families,
    where the defining difference set is a singleton.
    """
    if family.kind in (KNESER, ODD):
        return _build_kneser(family)
    return _build_bipartite_kneser(family)


def _build_kneser(family: Family) -> LabeledGraph:
    m = family.ground
    k = family.subset_size
    label_edges = family.kind == ODD
    vertices = k_blocks(m, k)
    index = {v.bits: i for i, v in enumerate(vertices)}
    full = (1 << m) - 1
    edge_list: list[tuple[int, int, Optional[int]]] = []
    for i, u in enumerate(vertices):
        rest = [e for e in range(1, m + 1) if not (u.bits >> (e - 1)) & 1]
        for combo in combinations(rest, k):
            bits = 0
            for e in combo:
                bits |= 1 << (e - 1)
            j = index[bits]
            if i < j:
                lab = None
                if label_edges:
                    missing = full & ~(u.bits | bits)
                    lab = missing.bit_length()  # unique element outside u | v
                edge_list.append((i, j, lab))
    return _assemble(m, vertices, edge_list, family, label_edges)


def _build_bipartite_kneser(family: Family) -> LabeledGraph:
    m = family.ground
    k = family.subset_size
    lo, hi = min(k, m - k), max(k, m - k)
    label_edges = family.kind == MIDDLE_LEVELS
    blocks = k_blocks(m, lo) if lo == hi else k_blocks(m, lo) + k_blocks(m, hi)
    vertices = sorted(blocks, key=lambda b: b.bits)
    index = {v.bits: i for i, v in enumerate(vertices)}
    edge_list: list[tuple[int, int, Optional[int]]] = []
    if lo != hi:
        for v in k_blocks(m, lo):
            i = index[v.bits]
            rest = [e for e in range(1, m + 1) if not (v.bits >> (e - 1)) & 1]
            for combo in combinations(rest, hi - lo):
                bits = v.bits
                for e in combo:
                    bits |= 1 << (e - 1)
                j = index[bits]
                lab = None
                if label_edges:
                    lab = (bits ^ v.bits).bit_length()  # unique element of u ^ v
                edge_list.append((i, j, lab))
    return _assemble(m, vertices, edge_list, family, label_edges)


def edge_label(g: LabeledGraph, u: Block, v: Block) -> int:
    """The color of edge (u, v) in a labeled graph."""
    if not g.labeled:
        raise UnlabeledGraphError("graph carries no edge labels")
    lab = g.label_between(g.index_of(u), g.index_of(v))
    assert lab is not None
    return lab


def degree_profile(g: LabeledGraph) -> DegreeProfile:
    """Classify a graph as regular / biregular / irregular.

    A graph is (a, b)-biregular when it is bipartite with every vertex of
    one side of degree a and every vertex of the other of degree b; a
    regular classification takes precedence when a == b.
    """
    degs = [g.degree(i) for i in range(g.n_vertices)]
    counts: dict[int, int] = {}
    for d in degs:
        counts[d] = counts.get(d, 0) + 1
    count_items = tuple(sorted(counts.items()))
    if len(counts) == 1:
        return DegreeProfile("regular", a=degs[0] if degs else 0,
                             degree_counts=count_items)
    if len(counts) == 2:
        b, a = sorted(counts)
        side_a = tuple(i for i, d in enumerate(degs) if d == a)
        side_b = tuple(i for i, d in enumerate(degs) if d == b)
        crossing = all(
            g.degree(j) == b for i in side_a for j in g.neighbors(i)
        ) and all(g.degree(j) == a for i in side_b for j in g.neighbors(i))
        if crossing:
            return DegreeProfile(
                "biregular", a=a, b=b, degree_counts=count_items,
                sides=(side_a, side_b),
            )
    return DegreeProfile("irregular", degree_counts=count_items)


def expected_family_degree(family: Family) -> int:
    """Closed-form regular degree C(n-k, k) of a family instance."""
    if family.kind in (ODD, MIDDLE_LEVELS):
        return family.n
    assert family.k is not None
    return binomial(family.n - family.k, family.k)


def _component_of(g: LabeledGraph, start: int) -> list[int]:
    seen = bytearray(g.n_vertices)
    seen[start] = 1
    queue = deque([start])
    out = [start]
    while queue:
        x = queue.popleft()
        for y, _ in g.adj[x]:
            if not seen[y]:
                seen[y] = 1
                out.append(y)
                queue.append(y)
    return out


def component_index_sets(g: LabeledGraph) -> list[list[int]]:
    """Vertex-index sets of the connected components, ordered by smallest
    contained vertex (equivalently smallest index, since vertex order is
    canonical)."""
    seen = bytearray(g.n_vertices)
    comps = []
    for s in range(g.n_vertices):
        if seen[s]:
            continue
        comp = _component_of(g, s)
        for x in comp:
            seen[x] = 1
        comps.append(sorted(comp))
    return comps


def components(g: LabeledGraph) -> list[LabeledGraph]:
    """Connected components as induced subgraphs, labels inherited."""
    return [g.subgraph(ixs) for ixs in component_index_sets(g)]


def bfs_distances(g: LabeledGraph, start: int) -> list[int]:
    """BFS distance from start to every vertex; -1 marks unreachable."""
    dist = [-1] * g.n_vertices
    dist[start] = 0
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y, _ in g.adj[x]:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: LabeledGraph, u: Block, v: Block) -> Optional[int]:
    """Shortest-path distance between two vertices; None if unreachable."""
    iu, iv = g.index_of(u), g.index_of(v)
    d = bfs_distances(g, iu)[iv]
    return None if d < 0 else d


def girth(g: LabeledGraph) -> Optional[int]:
    """Length of a shortest cycle; None for forests.

    Runs a BFS from every vertex and inspects non-tree edges.
    """
    best: Optional[int] = None
    n = g.n_vertices
    for s in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            if best is not None and 2 * dist[x] >= best:
                continue
            for y, _ in g.adj[x]:
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y and parent[y] != x:
                    cand = dist[x] + dist[y] + 1
                    if best is None or cand < best:
                        best = cand
    return best


@dataclass(frozen=True)
class PathSeq:
    """A walk in a graph: ordered vertex indices plus the edge-label trace.

    closed means the last vertex connects back to the first; the closing
    label is then included in the trace.  Construction validates that
    every consecutive pair is an edge.
    """

    graph: LabeledGraph
    indices: tuple[int, ...]
    closed: bool
    labels: tuple[Optional[int], ...]

    @classmethod
    def from_indices(
        cls, g: LabeledGraph, indices: Sequence[int], closed: bool
    ) -> "PathSeq":
        idxs = tuple(indices)
        if not idxs:
            raise ParameterError("empty vertex sequence")
        labels = []
        steps = list(zip(idxs, idxs[1:]))
        if closed and len(idxs) > 1:
            steps.append((idxs[-1], idxs[0]))
        for x, y in steps:
            labels.append(g.label_between(x, y))  # raises if not an edge
        return cls(g, idxs, closed, tuple(labels))

    @classmethod
    def from_blocks(
        cls, g: LabeledGraph, blocks: Sequence[Block], closed: bool
    ) -> "PathSeq":
        return cls.from_indices(g, [g.index_of(b) for b in blocks], closed)

    def blocks(self) -> tuple[Block, ...]:
        return tuple(self.graph.vertices[i] for i in self.indices)

    @property
    def length(self) -> int:
        """Number of edges traversed."""
        return len(self.labels)

    def is_simple(self) -> bool:
        return len(set(self.indices)) == len(self.indices)


@dataclass
class Report:
    """Outcome of a verification run: a named check with measured data."""

    name: str
    ok: bool
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        parts = [f"{self.name}: {status}"]
        for key, val in self.details.items():
            parts.append(f"{key}={val}")
        if self.failures:
            parts.append(f"first failure: {self.failures[0]}")
        return "  ".join(str(p) for p in parts)


def verify_distance_formula(n: int) -> Report:
    """Check the intersection-size distance rule on every vertex pair of
    the odd graph, with BFS as ground truth.

    For distinct (n-1)-subsets u, v of [2n-1] with c = |u & v| the rule
    predicts d(u, v) = min(2(n-1-c), 2c+1): even distances 2r arise from
    c = n-1-r and odd distances 2r+1 from c = r; the diameter must equal
    n-1.
    """
    if n < 2:
        raise ParameterError("distance check needs n >= 2")
    g = build(Family.odd(n))
    failures = []
    diameter = 0
    for i in range(g.n_vertices):
        dist = bfs_distances(g, i)
        u = g.vertices[i]
        for j in range(i + 1, g.n_vertices):
            v = g.vertices[j]
            c = (u & v).card
            want = min(2 * (n - 1 - c), 2 * c + 1)
            got = dist[j]
            diameter = max(diameter, got)
            if got != want:
                failures.append((str(u), str(v), c, got, want))
    ok = not failures and diameter == n - 1
    return Report(
        f"distance-formula O_{n}",
        ok,
        details={"pairs": g.n_vertices * (g.n_vertices - 1) // 2,
                 "diameter": diameter, "expected_diameter": n - 1},
        failures=failures,
    )
