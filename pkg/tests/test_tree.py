import math

import pytest

from hwkprep.state import InvalidK
from hwkprep.tree import build_hamming_tree, count_nodes, leaves_preorder, to_dot

from conftest import brute_weight_k


def test_fixture_4_2():
    tree = build_hamming_tree(4, 2)
    root = tree.root
    assert root.full_string == "0011"
    assert (root.left.full_string, root.left.level, root.left.ones, root.left.suffix) == ("0110", 1, 2, "0")
    assert (root.right.full_string, root.right.level, root.right.ones, root.right.suffix) == ("0011", 1, 1, "1")
    assert leaves_preorder(tree) == ["1100", "1010", "0110", "1001", "0101", "0011"]
    assert count_nodes(tree) == (6, 5)


def test_weight_zero_is_single_leaf():
    for n in range(1, 6):
        tree = build_hamming_tree(n, 0)
        assert tree.root.is_leaf
        assert tree.root.left is None and tree.root.right is None
        assert leaves_preorder(tree) == ["0" * n]
        assert count_nodes(tree) == (1, 0)


def test_two_one():
    tree = build_hamming_tree(2, 1)
    assert tree.root.full_string == "01"
    assert leaves_preorder(tree) == ["10", "01"]


def test_three_three():
    assert leaves_preorder(build_hamming_tree(3, 3)) == ["111"]


def test_six_three_counts():
    assert count_nodes(build_hamming_tree(6, 3)) == (20, 19)


def test_invalid():
    with pytest.raises(InvalidK):
        build_hamming_tree(3, 4)
    with pytest.raises(InvalidK):
        build_hamming_tree(0, 0)


@pytest.mark.parametrize("n", range(1, 15))
def test_leaves_enumerate_weight_k(n):
    for k in range(n + 1):
        tree = build_hamming_tree(n, k)
        leaves = leaves_preorder(tree)
        assert len(leaves) == math.comb(n, k)
        if n <= 10:
            assert sorted(leaves) == brute_weight_k(n, k)
        else:
            assert len(set(leaves)) == len(leaves)
            assert all(len(x) == n and x.count("1") == k for x in leaves)
        leaf_count, internal = count_nodes(tree)
        assert internal == leaf_count - 1


@pytest.mark.parametrize("n", range(1, 11))
def test_node_invariants(n):
    for k in range(n + 1):
        tree = build_hamming_tree(n, k)
        assert tree.root.full_string == "0" * (n - k) + "1" * k
        for v in tree.preorder():
            i, ell, b = v.level, v.ones, v.suffix
            assert len(b) == i
            assert ell + b.count("1") == k
            assert max(0, k - i) <= ell <= min(n - i, k)
            assert v.is_leaf == (ell == 0 or ell == n - i)
            s = v.full_string
            assert len(s) == n and s.count("1") == k
            if not v.is_leaf:
                assert i <= n - 2
                assert v.left.full_string.endswith("0" + b)
                assert v.right.full_string == s
                assert v.left.suffix == "0" + b and v.right.suffix == "1" + b


@pytest.mark.parametrize("n,k,nodes", [(2, 1, 3), (4, 2, 11), (1, 1, 1)])
def test_dot_node_statements(n, k, nodes):
    dot = to_dot(build_hamming_tree(n, k))
    statements = [line for line in dot.splitlines() if "[label=" in line and "->" not in line]
    assert len(statements) == nodes
    assert dot.startswith("digraph") and dot.rstrip().endswith("}")
