"""Hamiltonian cycle search and the lift-and-embed recursion diagnostics.

The search kernel is compiled (Cython) when available and pure Python
otherwise; both implement the same exhaustive backtracking with identical
expansion order, so a negative answer is a proof of non-Hamiltonicity
regardless of kernel.

The recursion pipeline walks the chain odd(n-1) <- middle(n-1) -> odd(n):
find a Hamiltonian cycle downstairs, lift it through the double cover,
embed the lift as a regular component of odd(n) minus two colors, and
connect every embedded vertex into the remainder piece by a two-color
path.  The pipeline reports feasibility data only; it never claims a
Hamiltonian cycle of odd(n), because stitching the pieces into one simple
cycle is exactly the unresolved step.
"""

from __future__ import annotations

import random
import sys
import time
from dataclasses import dataclass, field
from typing import Optional

from .decompose import canonical_colors, remainder_graph
from .errors import DegenerateCaseError, ParameterError
from .graphs import Family, LabeledGraph, PathSeq, build
from .morphisms import LiftResult, embed_middle_in_odd, lift_circuit
from .superstructure import two_color_path

try:  # compiled kernel, optional
    from . import _hamcore as _kernel

    HAVE_COMPILED_KERNEL = True
except ImportError:  # pragma: no cover - depends on build environment
    from . import _hamcore_py as _kernel

    HAVE_COMPILED_KERNEL = False

FOUND = "found"
NONE = "none"  # search space exhausted: proof of non-Hamiltonicity
EXHAUSTED_BUDGET = "exhausted-budget"

_STATUS = {0: FOUND, 1: NONE, 2: EXHAUSTED_BUDGET}


def kernel_name() -> str:
    return _kernel.KERNEL_NAME


@dataclass(frozen=True)
class SearchBudget:
    """Limits for the backtracking search; all limits must be positive."""

    max_nodes: int = 10_000_000
    max_seconds: float = 60.0
    seed: int = 0

    def __post_init__(self):
        if self.max_nodes <= 0 or self.max_seconds <= 0:
            raise ParameterError("budget limits must be positive")


@dataclass
class SearchResult:
    """Outcome of a Hamiltonian cycle search."""

    status: str
    cycle: Optional[PathSeq]
    nodes: int
    elapsed: float
    kernel: str
    reason: str = ""

    @property
    def found(self) -> bool:
        return self.status == FOUND


def _tie_break_ranks(n: int, seed: int) -> list[int]:
    rank = list(range(n))
    random.Random(seed).shuffle(rank)
    return rank


def find_hamiltonian_cycle(
    g: LabeledGraph,
    budget: SearchBudget = SearchBudget(),
    kernel=None,
) -> SearchResult:
    """Search g for a Hamiltonian cycle within the budget.

    FOUND comes with a verified cycle; NONE means the search tree was
    exhausted and is a proof that no Hamiltonian cycle exists; the budget
    status carries no conclusion.  Identical budgets and seeds give
    identical results run to run.
    """
    if g.n_vertices == 0:
        return SearchResult(NONE, None, 0, 0.0, kernel_name(), "empty graph")
    if not g.is_connected():
        return SearchResult(
            NONE, None, 0, 0.0, kernel_name(), "disconnected input"
        )
    kern = kernel if kernel is not None else _kernel
    neighbors = [list(g.neighbors(i)) for i in range(g.n_vertices)]
    rank = _tie_break_ranks(g.n_vertices, budget.seed)
    depth_need = g.n_vertices + 100
    old_limit = sys.getrecursionlimit()
    if old_limit < depth_need + 1000:
        sys.setrecursionlimit(depth_need + 1000)
    t0 = time.perf_counter()
    try:
        code, path, nodes = kern.solve(
            neighbors, 0, rank, budget.max_nodes, budget.max_seconds
        )
    finally:
        sys.setrecursionlimit(old_limit)
    elapsed = time.perf_counter() - t0
    status = _STATUS[code]
    cycle = None
    if status == FOUND:
        cycle = PathSeq.from_indices(g, path, closed=True)
        if not verify_cycle(g, path):
            raise AssertionError("kernel returned an invalid cycle")
    return SearchResult(status, cycle, nodes, elapsed, kern.KERNEL_NAME)


def verify_cycle(g: LabeledGraph, sequence) -> bool:
    """True iff the index sequence is a closed simple cycle covering every
    vertex of g exactly once, with every step an edge."""
    idxs = list(sequence.indices) if isinstance(sequence, PathSeq) else list(sequence)
    if len(idxs) != g.n_vertices or g.n_vertices == 0:
        return False
    if len(set(idxs)) != len(idxs):
        return False
    if any(not 0 <= i < g.n_vertices for i in idxs):
        return False
    if g.n_vertices == 1:
        return True
    if g.n_vertices == 2:
        return False  # a 2-cycle would reuse the single edge
    return all(
        g.has_edge(idxs[i], idxs[(i + 1) % len(idxs)]) for i in range(len(idxs))
    )


@dataclass
class PipelineReport:
    """Feasibility data from one lift-and-embed round ending in odd(n)."""

    n: int
    start: str
    base_search: SearchResult
    lift: Optional[LiftResult] = None
    embedded_lengths: tuple[int, ...] = ()
    embedded_vertex_count: int = 0
    lifted_is_hamiltonian_middle: bool = False
    remainder_size: int = 0
    remainder_odd: bool = False
    connector_count: int = 0
    connectors_complete: bool = False
    middle_vertex_collisions: int = 0
    fallback_search: Optional[SearchResult] = None
    notes: list[str] = field(default_factory=list)

    def summary_lines(self) -> list[str]:
        base_name = (
            f"odd({self.n - 1})" if self.start == "odd" else f"middle({self.n - 1})"
        )
        lines = [f"recursion pipeline into odd({self.n}), starting from {base_name}"]
        lines.append(
            f"  base {base_name} search: {self.base_search.status}"
            f" ({self.base_search.nodes} nodes,"
            f" {self.base_search.elapsed:.2f}s, {self.base_search.kernel})"
        )
        if self.embedded_vertex_count:
            lines.append(
                f"  embedded vertices in odd({self.n}): "
                f"{self.embedded_vertex_count}"
            )
            lines.append(
                f"  remainder size: {self.remainder_size}"
                f" ({'odd' if self.remainder_odd else 'even'})"
            )
            lines.append(
                f"  two-color connectors: {self.connector_count}"
                f" (complete: {self.connectors_complete},"
                f" middle-vertex collisions: {self.middle_vertex_collisions})"
            )
        if self.lift is not None:
            kind = (
                "single circuit" if self.lift.kind == "single"
                else "two antipodal circuits"
            )
            lens = ", ".join(str(c.length) for c in self.lift.circuits)
            lines.append(f"  lift: {kind} of length {lens}")
            if self.start == "odd":
                lines.append(
                    f"  lifted cycle Hamiltonian in middle({self.n - 1}): "
                    f"{self.lifted_is_hamiltonian_middle}"
                )
        if self.fallback_search is not None:
            lines.append(
                f"  fallback direct search in odd({self.n}): "
                f"{self.fallback_search.status}"
            )
        for note in self.notes:
            lines.append(f"  note: {note}")
        return lines


def recursion_pipeline(
    n: int, budget: SearchBudget = SearchBudget(), start: str = "odd"
) -> PipelineReport:
    """Run one recursion round ending in odd(n) and report feasibility data.

    With start="odd" (the odd-category round) the pipeline searches
    odd(n-1), lifts the cycle through the double cover into middle(n-1)
    and embeds the lift.  With start="middle" (the middle-category round)
    it searches middle(n-1) directly, embeds that cycle, and then lifts
    the embedded circuit onward through the cover of odd(n) by middle(n).
    When the base search proves its graph non-Hamiltonian (odd(3)), the
    pipeline falls back to a direct search of odd(n) and says so.
    """
    if n < 3:
        raise ParameterError("pipeline needs n >= 3")
    if start not in ("odd", "middle"):
        raise ParameterError("start must be 'odd' or 'middle'")
    middle = build(Family.middle_levels(n - 1))
    base = build(Family.odd(n - 1)) if start == "odd" else middle
    result = find_hamiltonian_cycle(base, budget)
    report = PipelineReport(n=n, start=start, base_search=result)
    if result.status != FOUND:
        if result.status == NONE:
            report.notes.append(
                "base graph has no Hamiltonian cycle (exhaustive);"
                " falling back to direct search"
            )
            report.fallback_search = find_hamiltonian_cycle(
                build(Family.odd(n)), budget
            )
        else:
            report.notes.append("base search exhausted its budget; partial report")
        return report

    assert result.cycle is not None
    odd_up = build(Family.odd(n))
    emb = embed_middle_in_odd(n - 1, odd_graph=odd_up)

    if start == "odd":
        lift = lift_circuit(result.cycle, middle_graph=middle)
        report.lift = lift
        report.embedded_lengths = tuple(c.length for c in lift.circuits)
        report.lifted_is_hamiltonian_middle = (
            lift.kind == "single"
            and verify_cycle(middle, lift.circuits[0])
        )
        embedded = {emb.apply(v) for v in middle.vertices}
    else:
        embedded_blocks = [emb.apply(x) for x in result.cycle.blocks()]
        embedded_cycle = PathSeq.from_blocks(odd_up, embedded_blocks, closed=True)
        report.embedded_lengths = (embedded_cycle.length,)
        embedded = set(embedded_blocks)
        onward = lift_circuit(embedded_cycle)
        report.lift = onward

    report.embedded_vertex_count = len(embedded)

    colors = canonical_colors(n, 2)
    a, b = colors.elements()
    rem = remainder_graph(n, 2, odd_graph=odd_up)
    rem_vertices = set(rem.graph.vertices)
    report.remainder_size = len(rem_vertices)
    report.remainder_odd = len(rem_vertices) % 2 == 1
    if report.remainder_odd:
        report.notes.append(
            "remainder size is odd; the antipode-splicing scheme cannot pair"
            " its vertices"
        )

    middles = []
    complete = True
    for v in sorted(embedded, key=lambda x: x.bits):
        try:
            path = two_color_path(odd_up, v, a, b)
        except DegenerateCaseError:
            complete = False
            continue
        mid = path.blocks()[1]
        if mid not in rem_vertices:
            complete = False
            continue
        middles.append(mid)
    report.connector_count = len(middles)
    report.connectors_complete = complete and len(middles) == len(embedded)
    report.middle_vertex_collisions = len(middles) - len(set(middles))
    if report.middle_vertex_collisions:
        report.notes.append(
            "connector middle vertices collide in the remainder; any tour"
            " built from them would repeat vertices (simplicity violation)"
        )
    coverage = len(embedded) + len(rem_vertices)
    if coverage == odd_up.n_vertices:
        report.notes.append(
            "embedded component and remainder partition the vertex set"
        )
    return report
