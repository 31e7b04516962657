"""Clique-cover machinery.

The central object is the CoverTable: values[S] = vcc(G[S]) for every
vertex subset S, where vcc is the minimum number of disjoint cliques
covering S (equivalently the chromatic number of the complement graph
restricted to S).  Two builders produce identical tables on different
schedules, and an inclusion-exclusion engine counts covers/partitions by
independent sets, which doubles as a chromatic-number routine with a
constructive coloring mode.
"""

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .bitset import bit_list, bits, lowest_bit
from .graph import Graph, enumerate_maximal_independent_sets, maximal_cliques_within

CAP = 64
INF = float("inf")


class CapacityError(Exception):
    """Raised when a subset-table operation gets a graph above the cap."""


def _check_cap(g: Graph) -> None:
    if g.n > CAP:
        raise CapacityError(f"n={g.n} exceeds the subset-table cap of {CAP}")


class CoverTable:
    """Dense subset table of clique cover numbers with reconstruction.

    choice[S], when present, is the clique removed at S's optimum; tables
    built without choice data reconstruct partitions lazily from values.
    """

    __slots__ = ("g", "values", "choice", "pmc_marks")

    def __init__(self, g: Graph, values: List[int], choice: Optional[List[int]],
                 pmc_marks: Optional[List[bool]] = None):
        self.g = g
        self.values = values
        self.choice = choice
        self.pmc_marks = pmc_marks

    def partition(self, s: int) -> List[int]:
        """Disjoint cliques covering s, exactly values[s] of them."""
        parts = []
        if self.choice is not None:
            while s:
                d = self.choice[s]
                parts.append(d)
                s &= ~d
            return parts
        g, values = self.g, self.values
        while s:
            v = lowest_bit(s)
            vbit = 1 << v
            target = values[s] - 1
            picked = None
            for d in maximal_cliques_within(g, s & g.adj[v]):
                dd = d | vbit
                if values[s & ~dd] == target:
                    picked = dd
                    break
            assert picked is not None, "cover table inconsistent"
            parts.append(picked)
            s &= ~picked
        return parts


def lawler_table(g: Graph, mark_pmcs: bool = False) -> CoverTable:
    """vcc(G[S]) for every S by the remove-one-clique recurrence.

    values[S] = 1 + min over maximal cliques D of G[S] containing the
    lowest vertex of S, of values[S without D].  Restricting to cliques
    through one fixed vertex preserves the optimum: every partition has a
    class containing that vertex, and the class extends to a maximal
    clique without breaking the rest.  Ties pick the lexicographically
    smallest clique mask so outputs are reproducible.
    """
    _check_cap(g)
    n = g.n
    size = 1 << n
    values = [0] * size
    choice = [0] * size
    adj = g.adj
    for s in range(1, size):
        v = lowest_bit(s)
        vbit = 1 << v
        best = None
        best_d = 0
        for d in maximal_cliques_within(g, s & adj[v]):
            dd = d | vbit
            cand = values[s & ~dd]
            if best is None or cand < best:
                best, best_d = cand, dd
        values[s] = best + 1
        choice[s] = best_d
    marks = None
    if mark_pmcs:
        from .graph import is_pmc

        marks = [is_pmc(g, s) for s in range(size)]
    return CoverTable(g, values, choice, marks)


def _complement_rows(g: Graph, s: int) -> Tuple[List[int], List[int]]:
    """Adjacency of complement(G)[s] relabeled to 0..|s|-1."""
    verts = bit_list(s)
    pos = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for i, v in enumerate(verts):
        for w in bits(s & ~(g.adj[v] | (1 << v))):
            rows[i] |= 1 << pos[w]
    return rows, verts

def _bipartite(rows: List[int], m: int) -> bool:
    seen = 0
    side = [0] * m
    for r in range(m):
        if seen >> r & 1:
            continue
        seen |= 1 << r
        queue = [r]
        while queue:
            v = queue.pop()
            for w in bits(rows[v]):
                if seen >> w & 1:
                    if side[w] == side[v]:
                        return False
                else:
                    seen |= 1 << w
                    side[w] = side[v] ^ 1
                    queue.append(w)
    return True


def _k_colorable(rows: List[int], m: int, k: int) -> bool:
    colors = [0] * m

    def bt(i: int, used: int) -> bool:
        if i == m:
            return True
        taken = 0
        for w in bits(rows[i] & ((1 << i) - 1)):
            taken |= 1 << colors[w]
        cap = used + 1 if used < k else k
        for c in range(cap):
            if taken >> c & 1:
                continue
            colors[i] = c
            if bt(i + 1, max(used, c + 1)):
                return True
        return False

    return bt(0, 0)


def fast_table(g: Graph) -> CoverTable:
    """Same values as lawler_table on a three-pass schedule.

    Pass 1 settles every subset with cover number at most 3 exactly
    (clique test, complement bipartiteness, exact complement
    3-coloring).  Pass 2 settles the 4s: each 3-subset extended by a
    maximal clique of the remainder is coverable by 4, and cover numbers
    are monotone under taking subsets, so a downward closure over the
    subset lattice flags exactly the sets with cover number at most 4.
    Pass 3 resolves the rest (values 5 and up) with the plain
    remove-one-clique pull; by then every strict subset is final.

    No choice data is recorded; partitions reconstruct lazily.
    """
    _check_cap(g)
    n = g.n
    size = 1 << n
    values: List = [INF] * size
    values[0] = 0
    threes = []
    for s in range(1, size):
        if g.is_clique(s):
            values[s] = 1
            continue
        rows, _ = _complement_rows(g, s)
        m = len(rows)
        if _bipartite(rows, m):
            values[s] = 2
        elif _k_colorable(rows, m, 3):
            values[s] = 3
            threes.append(s)

    flagged = bytearray(size)
    for s in threes:
        for d in maximal_cliques_within(g, g.full & ~s):
            if d:
                flagged[s | d] = 1
    for u in range(size - 1, 0, -1):
        if flagged[u]:
            for i in bits(u):
                flagged[u & ~(1 << i)] = 1
    for s in range(1, size):
        if values[s] is INF and flagged[s]:
            values[s] = 4

    adj = g.adj
    for s in range(1, size):
        if values[s] is not INF:
            continue
        v = lowest_bit(s)
        vbit = 1 << v
        best = None
        for d in maximal_cliques_within(g, s & adj[v]):
            cand = values[s & ~(d | vbit)]
            if best is None or cand < best:
                best = cand
        values[s] = best + 1
    return CoverTable(g, values, None)


@dataclass(frozen=True)
class IECounters:
    """Inclusion-exclusion aggregates for one graph.

    alpha[S] counts maximal independent sets avoiding S; c_k[k] counts
    k-subsets of distinct maximal independent sets covering V; p_k[k]
    counts ordered k-tuples of nonempty independent sets covering V.
    """

    alpha: List[int]
    c_k: List[int]
    p_k: List[int]


def _alpha_table(g: Graph) -> List[int]:
    size = 1 << g.n
    zeta = [0] * size
    for m in enumerate_maximal_independent_sets(g):
        zeta[m] = 1
    for i in range(g.n):
        ibit = 1 << i
        for t in range(size):
            if t & ibit:
                zeta[t] += zeta[t & ~ibit]
    full = g.full
    return [zeta[full & ~s] for s in range(size)]


def _independent_count_table(g: Graph) -> List[int]:
    """ind[T] = number of independent sets (including empty) inside T."""
    size = 1 << g.n
    ind = [0] * size
    ind[0] = 1
    for t in range(1, size):
        v = lowest_bit(t)
        ind[t] = ind[t & ~(1 << v)] + ind[t & ~g.nbr_closed(v)]
    return ind


def ie_count_covers(g: Graph, k: int) -> int:
    """Number of k-subsets of distinct maximal independent sets whose
    union is V; chi(G) is the smallest k making this positive."""
    _check_cap(g)
    if k < 0:
        raise ValueError("k must be nonnegative")
    alpha = _alpha_table(g)
    total = 0
    for s in range(1 << g.n):
        term = math.comb(alpha[s], k)
        total += -term if s.bit_count() & 1 else term
    return total


def ie_count_partitions(g: Graph, k: int) -> int:
    """Number of ordered k-tuples of nonempty independent sets covering V.

    Positive exactly when chi(G) <= k; the solver paths only consume the
    positivity, which is what the subset-parity sum decides.
    """
    _check_cap(g)
    if k < 0:
        raise ValueError("k must be nonnegative")
    ind = _independent_count_table(g)
    full = g.full
    total = 0
    for x in range(1 << g.n):
        a = ind[full & ~x] - 1
        term = a**k
        total += -term if x.bit_count() & 1 else term
    return total


def ie_counters(g: Graph, k_max: int) -> IECounters:
    _check_cap(g)
    alpha = _alpha_table(g)
    ind = _independent_count_table(g)
    full = g.full
    c_k = [0] * (k_max + 1)
    p_k = [0] * (k_max + 1)
    for s in range(1 << g.n):
        sign = -1 if s.bit_count() & 1 else 1
        a = alpha[s]
        b = ind[full & ~s] - 1
        for k in range(k_max + 1):
            c_k[k] += sign * math.comb(a, k)
            p_k[k] += sign * b**k
    return IECounters(alpha, c_k, p_k)


def _ie_chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    ind = _independent_count_table(g)
    full = g.full
    for k in range(1, g.n + 1):
        total = 0
        for x in range(1 << g.n):
            a = ind[full & ~x] - 1
            term = a**k
            total += -term if x.bit_count() & 1 else term
        if total > 0:
            return k
    return g.n


def ie_chromatic_with_construction(g: Graph) -> Tuple[int, List[int]]:
    """chi(G) by counting, plus a proper coloring with exactly chi colors.

    The construction repeatedly takes the lexicographically first
    non-adjacent pair and adds the edge; if the chromatic number is
    unchanged the edge stays, otherwise every optimal coloring agrees on
    the pair and the two vertices merge.  When the working graph becomes
    complete, its vertices are the color classes.
    """
    _check_cap(g)
    n = g.n
    if n == 0:
        return 0, []
    k = _ie_chromatic(g)
    groups: List[int] = [1 << v for v in range(n)]
    h = g

    def first_nonedge(gr: Graph) -> Optional[Tuple[int, int]]:
        for i in range(gr.n):
            rest = gr.full & ~(gr.adj[i] | ((1 << (i + 1)) - 1))
            if rest:
                return i, lowest_bit(rest)
        return None

    while True:
        pair = first_nonedge(h)
        if pair is None:
            break
        i, j = pair
        trial_adj = list(h.adj)
        trial_adj[i] |= 1 << j
        trial_adj[j] |= 1 << i
        trial = Graph(h.n, trial_adj)
        # chi can only stay or grow by one under an edge addition
        if ie_count_partitions(trial, k) > 0:
            h = trial
        else:
            groups[i] |= groups[j]
            merged_adj = []
            low = (1 << j) - 1
            for v in range(h.n):
                if v == j:
                    continue
                row = h.adj[v]
                if v == i:
                    row |= h.adj[j]
                elif row >> j & 1:
                    row |= 1 << i
                row &= ~((1 << j) | (1 << v))
                # drop bit j, shifting higher bits down
                merged_adj.append((row & low) | ((row >> 1) & ~low))
            groups.pop(j)
            h = Graph(h.n - 1, merged_adj)

    assert h.n == k, "complete merge graph must have chi vertices"
    coloring = [0] * n
    for color, grp in enumerate(groups):
        for v in bits(grp):
            coloring[v] = color
    return k, coloring


def vcc(g: Graph, s: int) -> Tuple[int, List[int]]:
    """Minimum disjoint clique partition of s, by direct backtracking.

    Independent of the subset tables on purpose: it serves as the
    second route for cross-checks and for re-covering decomposition
    bags.  Returns (count, class masks).
    """
    verts = bit_list(s)
    m = len(verts)
    if m == 0:
        return 0, []
    adj = g.adj
    for k in range(1, m + 1):
        classes = [0] * k

        def bt(i: int, used: int) -> bool:
            if i == m:
                return True
            v = verts[i]
            vbit = 1 << v
            cap = used + 1 if used < k else k
            for c in range(cap):
                if classes[c] & ~adj[v]:
                    continue
                classes[c] |= vbit
                if bt(i + 1, max(used, c + 1)):
                    return True
                classes[c] &= ~vbit
            return False

        if bt(0, 0):
            return k, [c for c in classes if c]
    return m, [1 << v for v in verts]
