"""Shared test corpora: all graphs up to isomorphism for small n.

Enumeration is by incremental vertex addition with invariant bucketing
and exact isomorphism checks inside buckets.  Results are cached on
disk in graph6 format (tests/data/all_graphs_<n>.g6) and regenerated if
the cache is missing.  Counts are pinned against the known numbers of
graphs / connected graphs up to isomorphism.
"""

import os
from functools import lru_cache
from typing import Dict, List, Optional, Tuple

from tclq.graph import Graph

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")

# graphs on n vertices up to isomorphism, n = 0..8
GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156, 1044, 12346]
# nonempty connected graphs up to isomorphism, n = 0..8
CONNECTED_COUNTS = [0, 1, 1, 2, 6, 21, 112, 853, 11117]


# ---------------------------------------------------------------- graph6

def to_graph6(g: Graph) -> str:
    if not (0 <= g.n <= 62):
        raise ValueError("graph6 small form needs n <= 62")
    out = [chr(g.n + 63)]
    bit_buf = 0
    bit_cnt = 0
    for j in range(1, g.n):
        for i in range(j):
            bit_buf = (bit_buf << 1) | (g.adj[i] >> j & 1)
            bit_cnt += 1
            if bit_cnt == 6:
                out.append(chr(bit_buf + 63))
                bit_buf = bit_cnt = 0
    if bit_cnt:
        out.append(chr((bit_buf << (6 - bit_cnt)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    n = ord(text[0]) - 63
    adj = [0] * n
    need = n * (n - 1) // 2
    bits_seen = 0
    pos = 1
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    while bits_seen < need:
        chunk = ord(text[pos]) - 63
        pos += 1
        for k in range(5, -1, -1):
            if bits_seen >= need:
                break
            if chunk >> k & 1:
                i, j = pairs[bits_seen]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bits_seen += 1
    return Graph(n, adj)


# ------------------------------------------------------- isomorphism test

def _wl_colors(g: Graph, rounds: int = 3) -> Tuple[int, ...]:
    # seed with (degree, triangle count) so regular graphs split early
    colors = [
        (g.degree(v) << 8) + sum((g.adj[v] & g.adj[u]).bit_count() for u in range(g.n) if g.adj[v] >> u & 1)
        for v in range(g.n)
    ]
    for _ in range(rounds):
        sigs = []
        for v in range(g.n):
            nb = sorted(colors[u] for u in range(g.n) if g.adj[v] >> u & 1)
            sigs.append((colors[v], tuple(nb)))
        canon = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [canon[s] for s in sigs]
        if new == colors:
            break
        colors = new
    return tuple(colors)


def invariant_key(g: Graph, colors: Optional[Tuple[int, ...]] = None) -> Tuple:
    if colors is None:
        colors = _wl_colors(g)
    sig = tuple(sorted((colors[v], tuple(sorted(colors[u] for u in range(g.n) if g.adj[v] >> u & 1)))
                       for v in range(g.n)))
    return (g.n, g.edge_count(), sig)


def isomorphic(g: Graph, h: Graph,
               cg: Optional[Tuple[int, ...]] = None,
               ch: Optional[Tuple[int, ...]] = None) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if cg is None:
        cg = _wl_colors(g)
    if ch is None:
        ch = _wl_colors(h)
    if sorted(cg) != sorted(ch):
        return False
    n = g.n
    # map g vertices in order of rarest color first
    freq: Dict[int, int] = {}
    for c in cg:
        freq[c] = freq.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (freq[cg[v]], cg[v], v))
    image = [-1] * n  # g vertex -> h vertex
    used = 0

    def extend(idx: int) -> bool:
        nonlocal used
        if idx == n:
            return True
        v = order[idx]
        for w in range(n):
            if used >> w & 1 or ch[w] != cg[v]:
                continue
            ok = True
            for prev in order[:idx]:
                if (g.adj[v] >> prev & 1) != (h.adj[w] >> image[prev] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used |= 1 << w
                if extend(idx + 1):
                    return True
                used &= ~(1 << w)
        return False

    return extend(0)


# ------------------------------------------------------------ enumeration

def _extend_all(smaller: List[Graph]) -> List[Graph]:
    """All graphs on n vertices from the isomorph-free list on n-1."""
    buckets: Dict[Tuple, List[Tuple[Graph, Tuple[int, ...]]]] = {}
    result: List[Graph] = []
    for h in smaller:
        n = h.n + 1
        for ext in range(1 << h.n):
            adj = [h.adj[v] | ((ext >> v & 1) << h.n) for v in range(h.n)]
            adj.append(ext)
            g = Graph(n, adj)
            colors = _wl_colors(g)
            key = invariant_key(g, colors)
            bucket = buckets.setdefault(key, [])
            if any(isomorphic(g, x, colors, cx) for x, cx in bucket):
                continue
            bucket.append((g, colors))
            result.append(g)
    return result


def _cache_path(n: int) -> str:
    return os.path.join(DATA_DIR, f"all_graphs_{n}.g6")


@lru_cache(maxsize=None)
def all_graphs(n: int) -> Tuple[Graph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    path = _cache_path(n)
    if os.path.exists(path):
        with open(path) as fh:
            graphs = tuple(from_graph6(line.strip()) for line in fh if line.strip())
        if len(graphs) == GRAPH_COUNTS[n]:
            return graphs
    if n == 0:
        graphs = (Graph(0, []),)
    else:
        graphs = tuple(_extend_all(list(all_graphs(n - 1))))
    os.makedirs(DATA_DIR, exist_ok=True)
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
    return graphs


def connected_graphs(n: int) -> List[Graph]:
    return [g for g in all_graphs(n) if g.n > 0 and g.is_connected()]


def graphs_up_to(n: int) -> List[Graph]:
    out: List[Graph] = []
    for i in range(n + 1):
        out.extend(all_graphs(i))
    return out
