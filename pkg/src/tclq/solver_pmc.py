"""Block-and-PMC dynamic program for tree-clique width.

Values are computed for full blocks (S, C): S a minimal separator, C a
component of G - S with N(C) = S.  Blocks are processed by increasing
part size.  A block's value is the minimum over potential maximal
cliques Omega with S proper-subset Omega subseteq S union C of
max(vcc(Omega), values of the sub-blocks (N(D), D) for the components D
of the part minus Omega); a block admitting no such Omega is an
inclusion-minimal block and costs vcc of its whole part (one bag).

All vcc values are measured in G itself.  Completing S into a clique
never changes the recurrence: every admissible Omega contains S, so the
fill edges vanish from every subproblem, and charging bags by cliques of
the filled graph would undercount the real covers.

The graph's value minimizes over inclusion-minimal separators S: the
root bag S costs vcc(S), each full component contributes its block
value, and each non-full component C contributes the value of the full
block (N(C), C).
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .bitset import bits
from .cover import CoverTable, lawler_table
from .decomposition import (AugmentedTreeDecomposition, combine_forest,
                            relabel, sanitize)
from .graph import Graph, enumerate_minimal_separators


@dataclass
class Block:
    s: int
    c: int
    full: bool


@dataclass
class PmcCatalog:
    pmcs: List[int]
    pmc_vcc: Dict[int, int]
    separators: List[int]
    sep_vcc: Dict[int, int]
    inclusion_minimal: List[int]
    table: CoverTable = field(repr=False, default=None)


def build_catalog(g: Graph) -> Tuple[PmcCatalog, CoverTable]:
    """All PMCs (subset sweep), all minimal separators, their vcc values
    from one shared cover table, and the inclusion-minimal separators."""
    table = lawler_table(g, mark_pmcs=True)
    pmcs = [s for s in range(1 << g.n) if table.pmc_marks[s]]
    seps = enumerate_minimal_separators(g)
    sep_set = set(seps)
    incl_min = [s for s in seps if not any(t != s and t & ~s == 0 for t in sep_set)]
    catalog = PmcCatalog(
        pmcs=pmcs,
        pmc_vcc={p: table.values[p] for p in pmcs},
        separators=seps,
        sep_vcc={s: table.values[s] for s in seps},
        inclusion_minimal=incl_min,
        table=table,
    )
    return catalog, table


def _single_bag(g: Graph, table: CoverTable) -> AugmentedTreeDecomposition:
    return AugmentedTreeDecomposition(
        (-1,), (g.full,), (tuple(sorted(table.partition(g.full))),))


def tcl_via_pmc(g: Graph, catalog: PmcCatalog) -> Tuple[int, AugmentedTreeDecomposition]:
    """Exact tcl with witness for connected G via the block recurrence."""
    if not g.is_connected():
        raise ValueError("block recurrence requires a connected graph")
    table = catalog.table
    values = table.values
    if g.n == 0:
        return 0, AugmentedTreeDecomposition((-1,), (0,), ((),))
    if not catalog.separators:
        # no separator means the graph is complete: one bag, one clique
        return values[g.full], _single_bag(g, table)

    blocks: List[Block] = []
    for s in catalog.separators:
        info = g.components_of_removal(s)
        for c, isfull in zip(info.components, info.full):
            if isfull:
                blocks.append(Block(s, c, True))
    blocks.sort(key=lambda b: ((b.s | b.c).bit_count(), b.s | b.c, b.s))

    val: Dict[Tuple[int, int], int] = {}
    pick: Dict[Tuple[int, int], Optional[int]] = {}
    for blk in blocks:
        part = blk.s | blk.c
        best: Optional[int] = None
        best_omega: Optional[int] = None
        for omega in catalog.pmcs:
            # admissibility: S proper subset of Omega, Omega inside the part
            if omega & ~part or blk.s & ~omega or omega == blk.s:
                continue
            cost = catalog.pmc_vcc[omega]
            for d in g.components_within(part & ~omega):
                nd = g.neighbors(d)
                sub = (nd, d)
                assert (nd | d).bit_count() < part.bit_count(), "sub-block must shrink"
                assert sub in val, "sub-block value missing from the schedule"
                cost = max(cost, val[sub])
            if best is None or cost < best:
                best, best_omega = cost, omega
        if best is None:
            # inclusion-minimal block: single realization bag
            best, best_omega = values[part], None
        val[(blk.s, blk.c)] = best
        pick[(blk.s, blk.c)] = best_omega

    best_total: Optional[int] = None
    best_sep: Optional[int] = None
    for s in catalog.inclusion_minimal:
        total = values[s]
        info = g.components_of_removal(s)
        for c, isfull in zip(info.components, info.full):
            sub = (s, c) if isfull else (g.neighbors(c), c)
            assert sub in val, "component block value missing"
            total = max(total, val[sub])
        if best_total is None or total < best_total:
            best_total, best_sep = total, s

    def block_witness(sep: int, comp: int, parents, bags, covers, parent: int) -> None:
        omega = pick[(sep, comp)]
        part = sep | comp
        bag = part if omega is None else omega
        idx = len(parents)
        parents.append(parent)
        bags.append(bag)
        covers.append(tuple(sorted(table.partition(bag))))
        if omega is not None:
            for d in g.components_within(part & ~omega):
                block_witness(g.neighbors(d), d, parents, bags, covers, idx)

    parents: List[int] = [-1]
    bags: List[int] = [best_sep]
    covers: List[Tuple[int, ...]] = [tuple(sorted(table.partition(best_sep)))]
    info = g.components_of_removal(best_sep)
    for c, isfull in zip(info.components, info.full):
        sep = best_sep if isfull else g.neighbors(c)
        block_witness(sep, c, parents, bags, covers, 0)
    atd = AugmentedTreeDecomposition(tuple(parents), tuple(bags), tuple(covers))
    atd = sanitize(g, atd)
    return best_total, atd


def compute_tcl(g: Graph) -> Tuple[int, AugmentedTreeDecomposition]:
    """Per-component wrapper around the block recurrence."""
    if g.n == 0:
        return 0, AugmentedTreeDecomposition((-1,), (0,), ((),))
    parts: List[AugmentedTreeDecomposition] = []
    best = 0
    for comp in g.components_within(g.full):
        sub, verts = g.induced_subgraph(comp)
        catalog, _ = build_catalog(sub)
        k, atd = tcl_via_pmc(sub, catalog)
        best = max(best, k)
        parts.append(relabel(atd, verts))
    return best, combine_forest(parts)
