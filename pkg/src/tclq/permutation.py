"""Scanline decision procedure for permutation graphs.

A permutation pi of 1..n is drawn as n lines joining top position i to
bottom position pi^{-1}(i); vertex i-1 is line i, and two lines are
adjacent iff they cross.  A scanline is a pair of gap indices (top,
bottom) in 0..n, sitting between line endpoints.  tcl(G[pi]) <= k holds
iff the graph on k-small scanlines (crossing set coverable by <= k
cliques) admits a directed path from (0,0) to (n,n); the candidate
components along such a path form a path decomposition of width <= k.
"""

from bisect import bisect_right
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from .bitset import bits
from .decomposition import AugmentedTreeDecomposition
from .graph import Graph


class Scanline(NamedTuple):
    top: int
    bottom: int


@dataclass(frozen=True)
class PermutationDiagram:
    pi: Tuple[int, ...]
    pi_inverse: Tuple[int, ...]  # pi_inverse[v] = 1-indexed position of value v+1
    lines: Tuple[Tuple[int, int], ...]  # vertex v -> (top, bottom) positions, 1-indexed

    @property
    def n(self) -> int:
        return len(self.pi)


def diagram(pi: Sequence[int]) -> PermutationDiagram:
    n = len(pi)
    if sorted(pi) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {list(pi)}")
    inv = [0] * n
    for pos, value in enumerate(pi, start=1):
        inv[value - 1] = pos
    lines = tuple((v + 1, inv[v]) for v in range(n))
    return PermutationDiagram(tuple(pi), tuple(inv), lines)


def inversion_graph(pi: Sequence[int]) -> Graph:
    """Graph on vertices 0..n-1 where lines i+1 and j+1 cross."""
    d = diagram(pi)
    n = d.n
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if d.pi_inverse[u] > d.pi_inverse[v]:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(n, adj)


def crossing_lines(d: PermutationDiagram, s: Scanline) -> int:
    """Lines with exactly one endpoint on each side of the scanline."""
    m = 0
    for v in range(d.n):
        if (v + 1 <= s.top) != (d.pi_inverse[v] <= s.bottom):
            m |= 1 << v
    return m


def _cover_piles(d: PermutationDiagram, lines: int) -> List[int]:
    """Greedy partition of a line set into cliques (pairwise-crossing piles).

    Lines are scanned by ascending top position; each goes to the
    leftmost pile whose previous bottom is larger (so tops increase and
    bottoms decrease within a pile, i.e. the pile is pairwise crossing).
    The pile count equals the minimum clique cover of the induced
    subgraph.
    """
    lasts: List[int] = []  # current bottom of each pile, kept increasing
    piles: List[int] = []
    for v in bits(lines):
        b = d.pi_inverse[v]
        i = bisect_right(lasts, b)
        if i == len(lasts):
            lasts.append(b)
            piles.append(1 << v)
        else:
            lasts[i] = b
            piles[i] |= 1 << v
    return piles


def cover_of_line_set(d: PermutationDiagram, lines: int) -> int:
    return len(_cover_piles(d, lines))


def k_small_scanlines(d: PermutationDiagram, k: int) -> List[Scanline]:
    """All canonical scanlines whose crossing set is coverable by <= k cliques."""
    if k < 1:
        raise ValueError("k must be at least 1")
    out = []
    for t in range(d.n + 1):
        for b in range(d.n + 1):
            s = Scanline(t, b)
            if cover_of_line_set(d, crossing_lines(d, s)) <= k:
                out.append(s)
    return out


@dataclass(frozen=True)
class ScanlineGraph:
    k: int
    nodes: Tuple[Scanline, ...]
    succ: Dict[Scanline, Tuple[Scanline, ...]]

    def arc_set(self) -> set:
        return {(s, t) for s, ts in self.succ.items() for t in ts}


def _candidate_component(cross: Dict[Scanline, int], s: Scanline, t: Scanline) -> int:
    # s and t share a gap index, so no line fits strictly between them;
    # the candidate component reduces to the two crossing sets.
    return cross[s] | cross[t]


def build_scanline_graph(d: PermutationDiagram, k: int) -> ScanlineGraph:
    """Arcs go between scanlines sharing one gap index, the other strictly
    increasing, whenever the candidate component is coverable by <= k cliques."""
    if k < 1:
        raise ValueError("k must be at least 1")
    nodes = k_small_scanlines(d, k)
    node_set = set(nodes)
    cross = {s: crossing_lines(d, s) for s in nodes}
    succ: Dict[Scanline, Tuple[Scanline, ...]] = {}
    for s in nodes:
        targets = []
        for t2 in range(s.top + 1, d.n + 1):
            t = Scanline(t2, s.bottom)
            if t in node_set and cover_of_line_set(d, _candidate_component(cross, s, t)) <= k:
                targets.append(t)
        for b2 in range(s.bottom + 1, d.n + 1):
            t = Scanline(s.top, b2)
            if t in node_set and cover_of_line_set(d, _candidate_component(cross, s, t)) <= k:
                targets.append(t)
        succ[s] = tuple(targets)
    return ScanlineGraph(k, tuple(nodes), succ)


def decide_tcl_at_most_k(
    pi: Sequence[int], k: int
) -> Tuple[bool, Optional[AugmentedTreeDecomposition]]:
    """Reachability (0,0) -> (n,n) in the scanline graph, with a path
    decomposition witness on yes.  The witness bags are the candidate
    components along the path; covers are the pile partitions."""
    if k < 1:
        raise ValueError("k must be at least 1")
    d = diagram(pi)
    s_l, s_r = Scanline(0, 0), Scanline(d.n, d.n)
    if s_l == s_r:  # n == 0
        return True, AugmentedTreeDecomposition((-1,), (0,), ((),))
    w = build_scanline_graph(d, k)
    parent: Dict[Scanline, Optional[Scanline]] = {s_l: None}
    queue = [s_l]
    head = 0
    while head < len(queue) and s_r not in parent:
        s = queue[head]
        head += 1
        for t in w.succ[s]:
            if t not in parent:
                parent[t] = s
                queue.append(t)
    if s_r not in parent:
        return False, None
    path = [s_r]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    cross = {s: crossing_lines(d, s) for s in path}
    bags = []
    covers = []
    for a, b in zip(path, path[1:]):
        bag = cross[a] | cross[b]
        bags.append(bag)
        covers.append(tuple(sorted(_cover_piles(d, bag))))
    parents = tuple(i - 1 for i in range(len(bags)))
    return True, AugmentedTreeDecomposition(parents, tuple(bags), tuple(covers))


def compute_tcl(pi: Sequence[int]) -> int:
    """Smallest k accepted by the decision procedure."""
    d = diagram(pi)
    if d.n == 0:
        return 0
    k = 1
    while not decide_tcl_at_most_k(pi, k)[0]:
        k += 1
    return k
