"""Cotrees and the linear-time tree-clique width rules for cographs.

A cotree is given as an s-expression: ``(label child child ...)`` where
label 0 means disjoint union and label 1 means product (join).  Leaves
are bare atoms; a single atom by itself denotes K1.  Parsing produces a
binary cotree (k-ary nodes are folded into left-deep same-label chains),
and the per-node folds below run in one bottom-up pass each.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .bitset import bits
from .graph import Graph

UNION = 0
PRODUCT = 1


@dataclass(frozen=True)
class Cotree:
    """Binary cotree over vertices 0..n-1.

    Nodes are 0..num_nodes-1 with node 0 the root.  kids[t] is () for a
    leaf and a (left, right) pair otherwise.  label[t] is UNION/PRODUCT
    for internal nodes and None for leaves.  leaf_vertex[t] is the
    vertex id at leaf t (leaves are numbered by first appearance in the
    expression, left to right).  source[t] is the index of the k-ary
    node in the parsed expression that node t realizes, or None for the
    intermediate nodes a binarization chain introduces.
    """

    kids: Tuple[Tuple[int, ...], ...]
    label: Tuple[Optional[int], ...]
    leaf_vertex: Tuple[Optional[int], ...]
    leaf_names: Tuple[str, ...]
    source: Tuple[Optional[int], ...]

    @property
    def num_nodes(self) -> int:
        return len(self.kids)

    @property
    def n(self) -> int:
        return len(self.leaf_names)

    def check_binary(self) -> None:
        for t, ch in enumerate(self.kids):
            if len(ch) not in (0, 2):
                raise ValueError(f"node {t} has {len(ch)} children; cotree is not binary")


class CotreeParseError(ValueError):
    pass


def _tokenize(text: str) -> List[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _parse_expr(tokens: List[str], pos: int):
    """Returns (node, next_pos); node is ('leaf', name) or (label, [children])."""
    if pos >= len(tokens):
        raise CotreeParseError("unexpected end of input")
    tok = tokens[pos]
    if tok == ")":
        raise CotreeParseError("unexpected ')'")
    if tok != "(":
        return ("leaf", tok), pos + 1
    pos += 1
    if pos >= len(tokens) or tokens[pos] in ("(", ")"):
        raise CotreeParseError("internal node must start with a 0/1 label")
    lab_tok = tokens[pos]
    if lab_tok not in ("0", "1"):
        raise CotreeParseError(f"unknown node label {lab_tok!r} (expected 0 or 1)")
    pos += 1
    children = []
    while pos < len(tokens) and tokens[pos] != ")":
        child, pos = _parse_expr(tokens, pos)
        children.append(child)
    if pos >= len(tokens):
        raise CotreeParseError("missing ')'")
    if len(children) < 2:
        raise CotreeParseError(f"internal node has {len(children)} children, needs at least 2")
    return (int(lab_tok), children), pos + 1


def parse_and_binarize(text: str) -> Cotree:
    """Parse a cotree expression and fold k-ary nodes left-deep.

    A node (lab c1 c2 ... ck) with k > 2 becomes (lab (... (lab c1 c2)
    ...) ck); the topmost chain node keeps the original node's identity
    in ``source``, the synthesized ones carry None.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise CotreeParseError("empty cotree expression")
    ast, pos = _parse_expr(tokens, 0)
    if pos != len(tokens):
        raise CotreeParseError(f"trailing input after expression: {tokens[pos]!r}")

    kids: List[Tuple[int, ...]] = []
    label: List[Optional[int]] = []
    leaf_vertex: List[Optional[int]] = []
    source: List[Optional[int]] = []
    leaf_names: List[str] = []
    seen: Dict[str, int] = {}
    orig_counter = [0]

    def new_node(lab, lv, src) -> int:
        kids.append(())
        label.append(lab)
        leaf_vertex.append(lv)
        source.append(src)
        return len(kids) - 1

    def fold(lab, children, src) -> int:
        # topmost chain node allocated first, so the root ends up as node 0
        t = new_node(lab, None, src)
        if len(children) == 2:
            left = build(children[0])
        else:
            left = fold(lab, children[:-1], None)
        right = build(children[-1])
        kids[t] = (left, right)
        return t

    def build(node) -> int:
        src = orig_counter[0]
        orig_counter[0] += 1
        if node[0] == "leaf":
            name = node[1]
            if name in seen:
                raise CotreeParseError(f"duplicate leaf {name!r}")
            seen[name] = len(leaf_names)
            leaf_names.append(name)
            return new_node(None, seen[name], src)
        lab, children = node
        return fold(lab, children, src)

    build(ast)
    return Cotree(tuple(kids), tuple(label), tuple(leaf_vertex), tuple(leaf_names), tuple(source))


def _postorder(tree: Cotree) -> List[int]:
    order: List[int] = []
    stack = [0]
    while stack:
        t = stack.pop()
        order.append(t)
        stack.extend(tree.kids[t])
    order.reverse()
    return order


def cotree_to_graph(tree: Cotree) -> Graph:
    """Realize the cograph: label 0 is disjoint union, label 1 joins."""
    n = tree.n
    adj = [0] * n
    vmask = [0] * tree.num_nodes
    for t in _postorder(tree):
        if not tree.kids[t]:
            vmask[t] = 1 << tree.leaf_vertex[t]
            continue
        a, b = tree.kids[t]
        vmask[t] = vmask[a] | vmask[b]
        if tree.label[t] == PRODUCT:
            for u in bits(vmask[a]):
                adj[u] |= vmask[b]
            for u in bits(vmask[b]):
                adj[u] |= vmask[a]
    return Graph(n, adj)


def compute_ecc(tree: Cotree, visits: Optional[List[int]] = None) -> List[int]:
    """Per-node clique cover numbers of the realized subgraphs.

    Leaf: 1.  Union: left + right.  Product: max(left, right).  When
    ``visits`` is given, every evaluated node id is appended to it (each
    node exactly once).
    """
    tree.check_binary()
    vals = [0] * tree.num_nodes
    for t in _postorder(tree):
        if visits is not None:
            visits.append(t)
        if not tree.kids[t]:
            vals[t] = 1
        elif tree.label[t] == UNION:
            vals[t] = vals[tree.kids[t][0]] + vals[tree.kids[t][1]]
        else:
            vals[t] = max(vals[tree.kids[t][0]], vals[tree.kids[t][1]])
    return vals


def compute_tcl(tree: Cotree, visits: Optional[List[int]] = None) -> List[int]:
    """Per-node tree-clique width of the realized subgraphs.

    Leaf: 1.  Union: max of children.  Product of A and B:
    min(max(cover(A), tcl(B)), max(tcl(A), cover(B))).
    """
    tree.check_binary()
    ecc = compute_ecc(tree)
    vals = [0] * tree.num_nodes
    for t in _postorder(tree):
        if visits is not None:
            visits.append(t)
        if not tree.kids[t]:
            vals[t] = 1
        else:
            a, b = tree.kids[t]
            if tree.label[t] == UNION:
                vals[t] = max(vals[a], vals[b])
            else:
                vals[t] = min(max(ecc[a], vals[b]), max(vals[a], ecc[b]))
    return vals
