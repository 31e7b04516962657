"""Augmented tree decompositions: model, validation, width, sanitize.

A decomposition is a rooted tree (node 0 is the root, parents[0] == -1)
with a bag per node and an explicit clique collection per node covering
the bag.  Validation returns a report of violated conditions instead of
raising; sanitization enforces the structural hygiene the solvers'
witness-gluing step may break (empty margins, disconnected components,
dangling adhesion vertices) and re-derives minimal covers.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .bitset import bit_list, bits, mask_of
from .graph import Graph, expand_mask


@dataclass(frozen=True)
class AugmentedTreeDecomposition:
    parents: Tuple[int, ...]
    bags: Tuple[int, ...]
    covers: Tuple[Tuple[int, ...], ...]

    @property
    def num_nodes(self) -> int:
        return len(self.parents)

    def children(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in self.parents]
        for i, p in enumerate(self.parents):
            if p >= 0:
                out[p].append(i)
        return out


@dataclass(frozen=True)
class NodeAnatomy:
    adhesion: int
    margin: int
    cone: int
    component: int


@dataclass
class ValidityReport:
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        return "valid" if self.ok else "; ".join(self.violations)


def _tree_structure_errors(d: AugmentedTreeDecomposition) -> List[str]:
    n = d.num_nodes
    errs = []
    if n == 0:
        return ["decomposition has no nodes"]
    if len(d.bags) != n or len(d.covers) != n:
        return ["bags/covers length does not match node count"]
    if d.parents[0] != -1:
        errs.append("node 0 must be the root (parent -1)")
    for i in range(1, n):
        p = d.parents[i]
        if not (0 <= p < n):
            errs.append(f"node {i} has out-of-range parent {p}")
    if errs:
        return errs
    # every node must reach the root without revisiting
    for i in range(n):
        seen = set()
        v = i
        while v != 0:
            if v in seen:
                return [f"parent links contain a cycle through node {v}"]
            seen.add(v)
            v = d.parents[v]
    return []


def validate(g: Graph, d: AugmentedTreeDecomposition,
             strict_bag_edges: bool = False) -> ValidityReport:
    """Check the decomposition conditions and report every violation.

    The default width semantics is vertex covering: per bag the cliques
    must be cliques of G, be contained in the bag, and union to exactly
    the bag.  strict_bag_edges additionally demands that every G-edge
    inside a bag lies inside one of its cliques; solver outputs use
    disjoint minimum covers and generally do not satisfy it.
    """
    report = ValidityReport()
    errs = _tree_structure_errors(d)
    if errs:
        report.violations.extend(errs)
        return report
    n = d.num_nodes

    union_bags = 0
    for b in d.bags:
        if b & ~g.full:
            report.violations.append(f"bag contains out-of-range vertices: {bin(b)}")
            return report
        union_bags |= b
    if union_bags != g.full:
        missing = bit_list(g.full & ~union_bags)
        report.violations.append(f"vertex coverage: vertices {missing} in no bag")

    for (u, v) in g.edges():
        pair = (1 << u) | (1 << v)
        if not any(pair & ~b == 0 for b in d.bags):
            report.violations.append(f"edge coverage: edge ({u},{v}) in no bag")

    kids = d.children()
    for v in range(g.n):
        nodes = [t for t in range(n) if d.bags[t] >> v & 1]
        if not nodes:
            continue
        want = set(nodes)
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            t = stack.pop()
            nbrs = kids[t] + ([d.parents[t]] if d.parents[t] >= 0 else [])
            for u in nbrs:
                if u in want and u not in seen:
                    seen.add(u)
                    stack.append(u)
        if seen != want:
            report.violations.append(f"subtree connectivity: vertex {v} bags are disconnected")

    for t in range(n):
        cover_union = 0
        for c in d.covers[t]:
            if c & ~d.bags[t]:
                report.violations.append(f"clique validity: node {t} clique leaves the bag")
            if not g.is_clique(c):
                report.violations.append(f"clique validity: node {t} set {bit_list(c)} is not a clique")
            cover_union |= c
        if cover_union != d.bags[t]:
            report.violations.append(f"cover union: node {t} cliques do not union to the bag")
        if strict_bag_edges:
            for (u, v) in g.edges():
                pair = (1 << u) | (1 << v)
                if pair & ~d.bags[t] == 0 and not any(pair & ~c == 0 for c in d.covers[t]):
                    report.violations.append(
                        f"bag edge coverage: node {t} edge ({u},{v}) in no clique")
    return report


def width(d: AugmentedTreeDecomposition) -> int:
    return max((len(c) for c in d.covers), default=0)


def anatomy(d: AugmentedTreeDecomposition, t: int) -> NodeAnatomy:
    parent = d.parents[t]
    adhesion = d.bags[t] & d.bags[parent] if parent >= 0 else 0
    cone = 0
    stack = [t]
    kids = d.children()
    while stack:
        u = stack.pop()
        cone |= d.bags[u]
        stack.extend(kids[u])
    return NodeAnatomy(adhesion, d.bags[t] & ~adhesion, cone, cone & ~adhesion)


def _subtree_nodes(parents: List[int], t: int) -> List[int]:
    kids: Dict[int, List[int]] = {}
    for i, p in enumerate(parents):
        if p >= 0:
            kids.setdefault(p, []).append(i)
    out = []
    stack = [t]
    while stack:
        u = stack.pop()
        out.append(u)
        stack.extend(kids.get(u, []))
    return out


def sanitize(g: Graph, d: AugmentedTreeDecomposition) -> AugmentedTreeDecomposition:
    """Normalize a valid decomposition into a sane one.

    Repeats three mass-reducing rewrites until none applies: contract a
    tree edge when one bag contains the other; split a node whose
    component induces a disconnected subgraph into per-component sibling
    clones (bags clipped to component plus adhesion); drop adhesion
    vertices with no neighbor in the node's component from the whole
    subtree.  Afterwards covers are recomputed as minimum clique
    partitions and nodes renumbered breadth-first.  Bags only ever
    shrink, so the width never increases.
    """
    from .cover import vcc

    rep = validate(g, d)
    if not rep.ok:
        raise ValueError(f"sanitize requires a valid decomposition: {rep}")

    parents: List[int] = list(d.parents)
    bags: List[int] = list(d.bags)
    alive: List[bool] = [True] * len(bags)

    def live_children(p: int) -> List[int]:
        return [i for i, pp in enumerate(parents) if alive[i] and pp == p]

    def contract_once() -> bool:
        for c in range(len(bags)):
            if not alive[c] or parents[c] < 0:
                continue
            p = parents[c]
            if bags[c] | bags[p] in (bags[c], bags[p]):
                # keep the superset at the parent slot
                bags[p] = bags[c] | bags[p]
                for i in range(len(bags)):
                    if alive[i] and parents[i] == c:
                        parents[i] = p
                alive[c] = False
                return True
        return False

    def split_once() -> bool:
        # the root's component is all of V, connected by precondition,
        # so only non-root nodes can need a split
        for t in range(len(bags)):
            if not alive[t] or parents[t] < 0:
                continue
            sub = _subtree_nodes([p if alive[i] else -2 for i, p in enumerate(parents)], t)
            sub = [u for u in sub if alive[u]]
            cone = 0
            for u in sub:
                cone |= bags[u]
            par = parents[t]
            adhesion = bags[t] & bags[par]
            comp = cone & ~adhesion
            pieces = g.components_within(comp)
            if len(pieces) <= 1:
                continue
            # clone the subtree once per piece, clipped to piece + adhesion
            for piece in pieces:
                keep = piece | adhesion
                remap = {}
                for u in sub:
                    remap[u] = len(bags)
                    parents.append(par if u == t else remap[parents[u]])
                    bags.append(bags[u] & keep)
                    alive.append(True)
            for u in sub:
                alive[u] = False
            return True
        return False

    def prune_once() -> bool:
        for t in range(len(bags)):
            if not alive[t] or parents[t] < 0:
                continue
            sub = _subtree_nodes([p if alive[i] else -2 for i, p in enumerate(parents)], t)
            sub = [u for u in sub if alive[u]]
            cone = 0
            for u in sub:
                cone |= bags[u]
            adhesion = bags[t] & bags[parents[t]]
            comp = cone & ~adhesion
            drop = 0
            for v in bits(adhesion):
                if g.adj[v] & comp == 0:
                    drop |= 1 << v
            if not drop:
                continue
            for u in sub:
                bags[u] &= ~drop
            return True
        return False

    steps = 0
    cap = 200 + 40 * len(bags) * max(1, g.n)
    while True:
        if contract_once() or prune_once() or split_once():
            steps += 1
            assert steps <= cap, "sanitize failed to converge"
            continue
        break

    # renumber breadth-first from the surviving root
    roots = [i for i in range(len(bags)) if alive[i] and parents[i] == -1]
    assert len(roots) == 1, "sanitize lost the root"
    order = [roots[0]]
    pos = {roots[0]: 0}
    queue = [roots[0]]
    while queue:
        t = queue.pop(0)
        for c in sorted(live_children(t), key=lambda i: (bags[i], i)):
            pos[c] = len(order)
            order.append(c)
            queue.append(c)
    new_parents = tuple(-1 if parents[t] < 0 else pos[parents[t]] for t in order)
    new_bags = tuple(bags[t] for t in order)
    new_covers = tuple(tuple(sorted(vcc(g, b)[1])) for b in new_bags)
    out = AugmentedTreeDecomposition(new_parents, new_bags, new_covers)
    rep = validate(g, out)
    assert rep.ok, f"sanitize broke the decomposition: {rep}"
    return out


def relabel(d: AugmentedTreeDecomposition, verts: Sequence[int]) -> AugmentedTreeDecomposition:
    """Map a decomposition over relabeled vertices back through verts."""
    bags = tuple(expand_mask(b, verts) for b in d.bags)
    covers = tuple(tuple(expand_mask(c, verts) for c in cov) for cov in d.covers)
    return AugmentedTreeDecomposition(d.parents, bags, covers)


def combine_forest(parts: List[AugmentedTreeDecomposition]) -> AugmentedTreeDecomposition:
    """Join per-component decompositions into one tree by hanging the
    later roots under the first root.  Valid because the vertex sets are
    disjoint."""
    assert parts
    parents: List[int] = []
    bags: List[int] = []
    covers: List[Tuple[int, ...]] = []
    for d in parts:
        offset = len(parents)
        for i, p in enumerate(d.parents):
            if p == -1:
                parents.append(0 if offset else -1)
            else:
                parents.append(p + offset)
            bags.append(d.bags[i])
            covers.append(tuple(d.covers[i]))
    return AugmentedTreeDecomposition(tuple(parents), tuple(bags), tuple(covers))
