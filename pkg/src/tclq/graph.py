"""Undirected graphs on vertices 0..n-1 with bitmask adjacency.

A Graph is immutable.  adj[v] is the open neighborhood of v as a mask;
all set-valued arguments and results are bitmasks (see bitset).  The
module also hosts the enumeration primitives the solvers share: maximal
cliques, maximal independent sets, minimal separators, and the potential
maximal clique test.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .bitset import bit_list, bits, mask_of


class Graph:
    __slots__ = ("n", "adj", "full")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)
        self.full = (1 << n) - 1

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def edges(self) -> List[Tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] & -(1 << (u + 1))):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return self.adj[u] >> v & 1 == 1

    def nbr_closed(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, s: int) -> int:
        """Open neighborhood of a set: N(S) = (union of N(v)) minus S."""
        m = 0
        for v in bits(s):
            m |= self.adj[v]
        return m & ~s

    def is_clique(self, s: int) -> bool:
        for v in bits(s):
            if s & ~self.nbr_closed(v):
                return False
        return True

    def is_independent(self, s: int) -> bool:
        for v in bits(s):
            if s & self.adj[v]:
                return False
        return True

    def is_complete(self) -> bool:
        return self.is_clique(self.full)

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def clique_number(self) -> int:
        return max((c.bit_count() for c in maximal_cliques_within(self, self.full)), default=0)

    def complement(self) -> "Graph":
        return Graph(self.n, [self.full & ~self.nbr_closed(v) for v in range(self.n)])

    def complete_set(self, s: int) -> "Graph":
        """Copy of the graph with the set s completed into a clique."""
        adj = list(self.adj)
        for v in bits(s):
            adj[v] |= s & ~(1 << v)
        return Graph(self.n, adj)

    def induced_subgraph(self, s: int) -> Tuple["Graph", List[int]]:
        """Induced subgraph on s, relabeled to 0..|s|-1.

        Returns (subgraph, verts) where verts[i] is the original index of
        the subgraph's vertex i.
        """
        verts = bit_list(s)
        pos = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for i, v in enumerate(verts):
            for w in bits(self.adj[v] & s):
                adj[i] |= 1 << pos[w]
        return Graph(len(verts), adj), verts

    def components_within(self, s: int) -> List[int]:
        """Connected components of G[s] as masks, ordered by least vertex."""
        out = []
        rest = s
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                grow = 0
                for v in bits(frontier):
                    grow |= self.adj[v]
                grow &= s & ~comp
                comp |= grow
                frontier = grow
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self, s: Optional[int] = None) -> bool:
        if s is None:
            s = self.full
        if s == 0:
            return True
        return len(self.components_within(s)) == 1

    def components_of_removal(self, s: int) -> "SeparatorInfo":
        """Components of G with s removed, with their full-component flags."""
        comps = tuple(self.components_within(self.full & ~s))
        flags = tuple(self.neighbors(c) == s for c in comps)
        return SeparatorInfo(s, comps, flags)


@dataclass(frozen=True)
class SeparatorInfo:
    separator: int
    components: Tuple[int, ...]
    full: Tuple[bool, ...]


def expand_mask(small: int, verts: Sequence[int]) -> int:
    """Map a mask over relabeled vertices back through verts."""
    return mask_of(verts[i] for i in bits(small))


def maximal_cliques_within(g: Graph, sub: int) -> List[int]:
    """Maximal cliques of G[sub] as masks, sorted.

    The empty set is the unique maximal clique of the empty graph, so
    sub == 0 yields [0].
    """
    if sub == 0:
        return [0]
    adj = g.adj
    out: List[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        # Pivot on the vertex covering the most candidates.
        best_u, best = -1, -1
        for u in bits(p | x):
            c = (p & adj[u]).bit_count()
            if c > best:
                best, best_u = c, u
        for v in bits(p & ~adj[best_u]):
            vb = 1 << v
            expand(r | vb, p & adj[v], x & adj[v])
            p &= ~vb
            x |= vb

    expand(0, sub, 0)
    out.sort()
    return out


def enumerate_maximal_independent_sets(g: Graph, sub: Optional[int] = None) -> List[int]:
    """Maximal independent sets of G[sub] (whole graph by default)."""
    if sub is None:
        sub = g.full
    return maximal_cliques_within(g.complement(), sub)


def enumerate_minimal_separators(g: Graph) -> List[int]:
    """All inclusion-minimal a-b separators of G, sorted.

    A disconnected graph contributes the empty separator plus the minimal
    separators of each component.
    """
    n = g.n
    if n == 0:
        return []
    if not g.is_connected():
        seps = {0}
        for comp in g.components_within(g.full):
            sub, verts = g.induced_subgraph(comp)
            for s in enumerate_minimal_separators(sub):
                seps.add(expand_mask(s, verts))
        seps.discard(0)
        return [0] + sorted(seps)

    # Berry-Bordat-Cogis generation: seed with neighborhoods of the
    # components of G minus N[v], then saturate by removing N(x) for
    # each x in an already-found separator.
    seps = set()
    queue: List[int] = []
    for v in range(n):
        rest = g.full & ~g.nbr_closed(v)
        for comp in g.components_within(rest):
            s = g.neighbors(comp)
            if s and s not in seps:
                seps.add(s)
                queue.append(s)
    while queue:
        s = queue.pop()
        for x in bit_list(s):
            rest = g.full & ~(s | g.adj[x])
            for comp in g.components_within(rest):
                cand = g.neighbors(comp)
                if cand and cand not in seps:
                    seps.add(cand)
                    queue.append(cand)
    return sorted(seps)


def is_pmc(g: Graph, omega: int) -> bool:
    """Potential maximal clique test.

    omega is a PMC iff no component of G minus omega sees all of omega,
    and every non-adjacent pair inside omega is covered by the
    neighborhood of some component.
    """
    if omega == 0:
        return False
    covers = []
    for c in g.components_within(g.full & ~omega):
        nc = g.neighbors(c)
        if nc == omega:
            return False
        covers.append(nc)
    ov = bit_list(omega)
    for i, u in enumerate(ov):
        for v in ov[i + 1:]:
            if g.adj[u] >> v & 1:
                continue
            pair = (1 << u) | (1 << v)
            if not any(pair & ~nc == 0 for nc in covers):
                return False
    return True
