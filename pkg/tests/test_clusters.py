"""Tests for clusters, RF distance, LCA and the compatibility oracle."""

import random

import pytest

from treegraft.core import (
    Cluster,
    LeafSetMismatchError,
    UnknownTaxonError,
    clusters,
    compatible_oracle,
    find_cluster_node,
    lca,
    leaf_set,
    pairwise_compatible,
    parse_newick,
    rf_distance,
)


def cl(tree, labels):
    return Cluster.from_labels(tree, labels)


def label_sets(cluster_set, tree):
    return {frozenset(c.labels(tree)) for c in cluster_set}


class TestLeafSet:
    def test_leaf(self):
        tree = parse_newick("((a,b),c);")
        assert leaf_set(tree, tree.leaf_node("a")).labels(tree) == ["a"]

    def test_root(self):
        tree = parse_newick("((a,b),c);")
        assert leaf_set(tree, tree.root).labels(tree) == ["a", "b", "c"]

    def test_internal(self):
        tree = parse_newick("((a,b),c);")
        ab = tree.children(tree.root)[0]
        assert leaf_set(tree, ab) == cl(tree, "ab")
        assert len(leaf_set(tree, ab)) == tree.size(ab)


class TestClusters:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("((a,b),c);", [{"a", "b"}]),
            ("(a,b,c);", []),
            ("((a,b),(c,d));", [{"a", "b"}, {"c", "d"}]),
            ("(((a,b),c),d);", [{"a", "b"}, {"a", "b", "c"}]),
            ("a;", []),
        ],
    )
    def test_examples(self, text, expected):
        tree = parse_newick(text)
        assert label_sets(clusters(tree), tree) == {frozenset(e) for e in expected}

    def test_sizes_nontrivial(self, make_random_tree):
        rng = random.Random(3)
        for _ in range(50):
            tree = make_random_tree(rng, rng.randint(2, 40))
            n = tree.n_leaves
            found = clusters(tree)
            internal = [
                v for v in tree.internal_nodes() if v != tree.root
            ]
            assert len(found) == len(internal)
            assert all(1 < len(c) < n for c in found)

    def test_cluster_helpers(self):
        tree = parse_newick("((a,b),c,d);")
        a = cl(tree, "ba")
        assert a.ids == (0, 1)
        assert tree.taxa.id_of("a") in a
        assert not a.is_trivial(4)
        assert cl(tree, "abcd").is_trivial(4)
        assert cl(tree, "c").is_trivial(4)


class TestRF:
    def test_identity(self):
        tree = parse_newick("((a,b),(c,d),e);")
        assert rf_distance(tree, tree) == 0
        assert rf_distance(tree, tree, symmetric=True) == 0

    def test_one_sided_and_symmetric(self):
        ta = parse_newick("((a,b),c,d);")
        tb = parse_newick("((c,d),a,b);")
        assert rf_distance(ta, tb) == 1
        assert rf_distance(ta, tb, symmetric=True) == 2

    def test_against_star(self):
        ta = parse_newick("((a,b),c);")
        tb = parse_newick("(a,b,c);")
        assert rf_distance(ta, tb) == 1
        assert rf_distance(tb, ta) == 0

    def test_subset_gives_zero(self):
        coarse = parse_newick("((a,b),c,d,e);")
        fine = parse_newick("(((a,b),c),(d,e));")
        assert rf_distance(coarse, fine) == 0
        assert rf_distance(fine, coarse) == 2

    def test_mismatch(self):
        with pytest.raises(LeafSetMismatchError) as exc:
            rf_distance(parse_newick("(a,b);"), parse_newick("(a,c);"))
        assert exc.value.only_left == ["b"]
        assert exc.value.only_right == ["c"]


class TestLCA:
    def test_single_leaf(self):
        tree = parse_newick("((a,b),c);")
        assert lca(tree, cl(tree, "a")) == tree.leaf_node("a")

    def test_root(self):
        tree = parse_newick("((a,b),c);")
        assert lca(tree, cl(tree, "ac")) == tree.root

    def test_internal(self):
        tree = parse_newick("((a,b),c);")
        assert lca(tree, cl(tree, "ab")) == tree.children(tree.root)[0]

    def test_deep(self):
        tree = parse_newick("((((a,b),c),d),((e,f),g));")
        assert tree.size(lca(tree, cl(tree, "bd"))) == 4
        assert tree.size(lca(tree, cl(tree, "fe"))) == 2
        assert lca(tree, cl(tree, "ag")) == tree.root

    def test_unknown_taxon(self):
        tree = parse_newick("((a,b),c);")
        with pytest.raises(UnknownTaxonError):
            lca(tree, Cluster.of([7]))


class TestCompatibility:
    def test_star_accepts_everything(self):
        tree = parse_newick("(a,b,c,d);")
        assert compatible_oracle(cl(tree, "ab"), tree)

    def test_overlap_rejected(self):
        tree = parse_newick("((a,b),c,d);")
        assert not compatible_oracle(cl(tree, "bc"), tree)

    def test_full_set_and_singleton(self):
        tree = parse_newick("((a,b),c,d);")
        assert compatible_oracle(cl(tree, "abcd"), tree)
        assert compatible_oracle(cl(tree, "c"), tree)

    def test_nesting_accepted(self):
        tree = parse_newick("((a,b),c,d);")
        assert compatible_oracle(cl(tree, "abc"), tree)

    def test_pairwise_equivalence(self, make_random_tree):
        rng = random.Random(11)
        for _ in range(1000):
            n = rng.randint(2, 32)
            tree = make_random_tree(rng, n)
            k = rng.randint(1, n)
            a = Cluster.of(rng.sample(range(n), k))
            expected = pairwise_compatible(a, clusters(tree).clusters)
            assert compatible_oracle(a, tree) == expected

    def test_find_cluster_node(self):
        tree = parse_newick("((a,b),c,d);")
        assert find_cluster_node(tree, cl(tree, "ab")) == tree.children(tree.root)[0]
        assert find_cluster_node(tree, cl(tree, "abc")) is None
        assert find_cluster_node(tree, Cluster.of([9])) is None
