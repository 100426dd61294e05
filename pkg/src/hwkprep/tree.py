"""Hamming trees: binary trees whose leaves enumerate the weight-k strings.

A node at level ``i`` stands for the string ``0^(n-i-ones) 1^ones b`` where the
suffix ``b`` has length ``i`` and ``ones + HW(b) = k``. The left child fixes the
next suffix bit to 0, the right child fixes it to 1 (and keeps the parent's
string). Suffixes are stored as integers, not materialized strings.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .state import InvalidK


@dataclass(eq=False, slots=True)
class HammingNode:
    n: int
    level: int
    ones: int
    suffix_bits: int = 0
    left: HammingNode | None = field(default=None, repr=False)
    right: HammingNode | None = field(default=None, repr=False)

    @property
    def suffix(self) -> str:
        return format(self.suffix_bits, f"0{self.level}b") if self.level else ""

    @property
    def is_leaf(self) -> bool:
        return self.ones == 0 or self.ones == self.n - self.level

    @property
    def full_string(self) -> str:
        free = self.n - self.level
        return "0" * (free - self.ones) + "1" * self.ones + self.suffix


@dataclass(eq=False)
class HammingTree:
    n: int
    k: int
    root: HammingNode

    def preorder(self) -> Iterator[HammingNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if not node.is_leaf:
                stack.append(node.right)
                stack.append(node.left)

    def internal_nodes(self) -> Iterator[HammingNode]:
        return (v for v in self.preorder() if not v.is_leaf)


def _expand(node: HammingNode) -> None:
    stack = [node]
    while stack:
        v = stack.pop()
        if v.is_leaf:
            continue
        i = v.level
        v.left = HammingNode(v.n, i + 1, v.ones, v.suffix_bits)
        v.right = HammingNode(v.n, i + 1, v.ones - 1, v.suffix_bits | (1 << i))
        stack.append(v.right)
        stack.append(v.left)


def build_hamming_tree(n: int, k: int) -> HammingTree:
    if n < 1 or not 0 <= k <= n:
        raise InvalidK(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    root = HammingNode(n, 0, k)
    _expand(root)
    return HammingTree(n, k, root)


def leaves_preorder(tree: HammingTree) -> list[str]:
    return [v.full_string for v in tree.preorder() if v.is_leaf]


def count_nodes(tree: HammingTree) -> tuple[int, int]:
    """Return ``(leaves, internal)``."""
    leaves = internal = 0
    for v in tree.preorder():
        if v.is_leaf:
            leaves += 1
        else:
            internal += 1
    return leaves, internal


def to_dot(tree: HammingTree) -> str:
    lines = [f"digraph hamming_tree_n{tree.n}_k{tree.k} {{", "  node [shape=box, fontname=monospace];"]
    ids: dict[HammingNode, int] = {}
    edges = []
    for v in tree.preorder():
        ids[v] = len(ids)
        style = "" if v.is_leaf else ", style=rounded"
        lines.append(f'  v{ids[v]} [label="{v.full_string}\\n(i={v.level}, l={v.ones})"{style}];')
    for v in tree.preorder():
        if not v.is_leaf:
            edges.append(f'  v{ids[v]} -> v{ids[v.left]} [label="0"];')
            edges.append(f'  v{ids[v]} -> v{ids[v.right]} [label="1"];')
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines) + "\n"
