"""Plane trees with integer node or edge labels.

Two labeled families are used: degree trees (every leaf labeled 0, and at
every internal node with children v1..vk and s(u) = k + sum of child labels,
s(u) - l(v1) <= l(u) <= s(u)) and v-trees (leaves labeled 0 or 1, non-root
nodes u with 0 <= l(u) <= 1 + sum of child labels, root label exactly
1 + sum of child labels).  Degree trees carry an equivalent edge labeling:
s(u) - l(u) sits on the leftmost descending edge of u, all other edges carry
0; node labels are recovered as the subtree edge count minus the sum of the
subtree's edge labels.

Text format: ``<label>[child,child,...]`` with brackets omitted on leaves,
e.g. ``2[1[0],0]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .lambda_core import ParseError


@dataclass(frozen=True)
class LabeledTree:
    label: int
    children: tuple["LabeledTree", ...] = ()

    def node_count(self) -> int:
        return 1 + sum(c.node_count() for c in self.children)

    def edge_count(self) -> int:
        return self.node_count() - 1

    def __repr__(self):
        return render_labeled_tree(self)


@dataclass(frozen=True)
class EdgeLabeledTree:
    """Plane tree with a nonnegative label on each edge to a child."""
    children: tuple[tuple[int, "EdgeLabeledTree"], ...] = ()

    def edge_count(self) -> int:
        return sum(1 + c.edge_count() for _lbl, c in self.children)


def render_labeled_tree(t: LabeledTree) -> str:
    if not t.children:
        return str(t.label)
    return f"{t.label}[{','.join(render_labeled_tree(c) for c in t.children)}]"


def parse_labeled_tree(text: str) -> LabeledTree:
    s = "".join(text.split())
    pos = 0

    def number() -> int:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected a label", start)
        return int(s[start:pos])

    def rec() -> LabeledTree:
        nonlocal pos
        label = number()
        children = []
        if pos < len(s) and s[pos] == "[":
            pos += 1
            children.append(rec())
            while pos < len(s) and s[pos] == ",":
                pos += 1
                children.append(rec())
            if pos >= len(s) or s[pos] != "]":
                raise ParseError("expected ']'", pos)
            pos += 1
        return LabeledTree(label, tuple(children))

    t = rec()
    if pos != len(s):
        raise ParseError(f"trailing input {s[pos:]!r}", pos)
    return t


def node_labels_from_edge_labels(t: EdgeLabeledTree) -> LabeledTree:
    """l(v) = (edges in the subtree at v) - (sum of edge labels in it)."""
    kids = []
    label = 0
    for elbl, child in t.children:
        sub = node_labels_from_edge_labels(child)
        kids.append(sub)
        label += sub.label + 1 - elbl
    return LabeledTree(label, tuple(kids))


def edge_labels_from_node_labels(t: LabeledTree) -> EdgeLabeledTree:
    """s(u) - l(u) on the leftmost descending edge, 0 elsewhere."""
    if not t.children:
        return EdgeLabeledTree()
    s = len(t.children) + sum(c.label for c in t.children)
    kids = []
    for i, c in enumerate(t.children):
        kids.append((s - t.label if i == 0 else 0, edge_labels_from_node_labels(c)))
    return EdgeLabeledTree(tuple(kids))


def validate_degree_tree(t: LabeledTree) -> bool:
    if not t.children:
        return t.label == 0
    s = len(t.children) + sum(c.label for c in t.children)
    if not (s - t.children[0].label <= t.label <= s):
        return False
    return all(validate_degree_tree(c) for c in t.children)


class VTreeCheck(NamedTuple):
    valid: bool
    positive: bool


def validate_vtree(t: LabeledTree) -> VTreeCheck:
    """Check the v-tree conditions; positive additionally forbids label 0."""
    def nonroot_ok(u: LabeledTree) -> bool:
        if not (0 <= u.label <= 1 + sum(c.label for c in u.children)):
            return False
        return all(nonroot_ok(c) for c in u.children)

    def has_zero(u: LabeledTree) -> bool:
        return u.label == 0 or any(has_zero(c) for c in u.children)

    valid = (t.label == 1 + sum(c.label for c in t.children)
             and all(nonroot_ok(c) for c in t.children))
    return VTreeCheck(valid, valid and not has_zero(t))
