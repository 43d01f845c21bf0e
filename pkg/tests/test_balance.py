"""Complete-tree interval covers, shallowisation, and the width bound."""

import math
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from sdlabel import Graph, gen_gnp, sdd_exact
from sdlabel.balance import (
    Orientation,
    complete_tree,
    interval_cover,
    orient_low_outdegree,
    shallowise,
    subtree_interval,
    width_bound,
)
from sdlabel.model import (
    SignedTreeModel,
    is_clean,
    make_clean,
    realize,
    stm_from_witness,
    validate,
    width,
)

from conftest import build_figure_model


def min_cover_oracle(n, i, j):
    """Independent DP over leaf positions: (minimum node count, number of
    optimal covers) for partitioning [i, j] into subtree leaf sets."""
    t = complete_tree(n)
    starts = {}
    for node in range(t.n_nodes):
        lo, hi = t.interval[node]
        if i <= lo and hi <= j:
            starts.setdefault(lo, []).append(hi)

    @lru_cache(maxsize=None)
    def f(p):
        if p == j + 1:
            return 0, 1
        best, count = None, 0
        for hi in starts.get(p, ()):
            sub_best, sub_count = f(hi + 1)
            if sub_best is None:
                continue
            cand = sub_best + 1
            if best is None or cand < best:
                best, count = cand, sub_count
            elif cand == best:
                count += sub_count
        if best is None:
            return None, 0
        return best, count

    return f(i)


class TestCompleteTree:
    @pytest.mark.parametrize("n", list(range(1, 35)) + [100, 255, 256, 257])
    def test_shape(self, n):
        t = complete_tree(n)
        assert t.n_nodes == 2 * n - 1
        expected = 1 if n == 1 else math.ceil(math.log2(n)) + 1
        assert t.depth == expected
        # left-aligned: leaf depths never increase left to right
        depths = []
        for k in range(1, n + 1):
            node, d = t.leaf_of_pos[k], 1
            while t.parent[node] != -1:
                node, d = t.parent[node], d + 1
            depths.append(d)
        assert all(a >= b for a, b in zip(depths, depths[1:]))


class TestIntervalCover:
    def test_whole_range(self):
        assert interval_cover(8, 1, 8).nodes == (0,)

    def test_single_leaf(self):
        c = interval_cover(8, 1, 1)
        t = complete_tree(8)
        assert c.nodes == (t.leaf_of_pos[1],)

    def test_middle_range(self):
        t = complete_tree(8)
        c = interval_cover(8, 2, 7)
        assert [t.interval[x] for x in c.nodes] == [(2, 2), (3, 4), (5, 6), (7, 7)]

    def test_rejects_bad_range(self):
        with pytest.raises(ValueError):
            interval_cover(8, 0, 3)
        with pytest.raises(ValueError):
            interval_cover(8, 5, 3)

    @pytest.mark.parametrize("n", [2, 3, 5, 8, 12, 16, 23, 32])
    def test_minimal_unique_partition(self, n):
        t = complete_tree(n)
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                c = interval_cover(n, i, j)
                best, count = min_cover_oracle(n, i, j)
                assert len(c.nodes) == best
                assert count == 1  # unique minimum
                leaves = [
                    p
                    for x in c.nodes
                    for p in range(t.interval[x][0], t.interval[x][1] + 1)
                ]
                assert leaves == list(range(i, j + 1))  # ordered partition
                for a in c.nodes:
                    for b in c.nodes:
                        if a != b:
                            la, ha = t.interval[a]
                            lb, hb = t.interval[b]
                            assert not (la <= lb and hb <= ha)  # antichain

    @pytest.mark.parametrize("n", [2, 7, 16, 63, 100, 256])
    def test_two_log_bound_sampled(self, n):
        for i in range(1, n + 1):
            for j in range(i, n + 1):
                assert len(interval_cover(n, i, j).nodes) <= 2 * math.log2(n)


class TestSubtreeInterval:
    def test_root_and_leaves(self, figure_model):
        m, names = figure_model
        root = m.root
        assert subtree_interval(m, root) == (1, 14)
        for k, leaf in enumerate(m.leaf_order(), start=1):
            assert subtree_interval(m, leaf) == (k, k)

    def test_figure_parent_of_45(self, figure_model):
        m, names = figure_model
        assert subtree_interval(m, names["f"]) == (4, 5)

    def test_intersecting_intervals_are_nested(self, figure_model):
        m, _ = figure_model
        iv = m.node_intervals()
        for x in range(m.n_nodes):
            for y in range(m.n_nodes):
                lx, hx = iv[x]
                ly, hy = iv[y]
                if max(lx, ly) <= min(hx, hy):  # intersect
                    assert (lx <= ly and hy <= hx) or (ly <= lx and hx <= hy)


class TestWidthBound:
    @pytest.mark.parametrize("m,expect", [(0, 0), (1, 1), (3, 2), (6, 3), (10, 4)])
    def test_values(self, m, expect):
        assert width_bound(m) == expect

    def test_triangle_attains(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        from sdlabel import degeneracy

        assert degeneracy(g).d == width_bound(3) == 2

    def test_k4_attains(self):
        from sdlabel import degeneracy

        g = Graph(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
        assert degeneracy(g).d == width_bound(6) == 3

    @given(st.integers(min_value=0, max_value=10_000))
    def test_ceil_sqrt(self, m):
        b = width_bound(m)
        if m:
            assert (b + 1) ** 2 >= 2 * m > b * b  # ceil(sqrt(2m)) = b + 1


class TestOrientation:
    def test_empty(self):
        o = orient_low_outdegree(range(4), [])
        assert o.max_outdegree == 0 and o.owner == {}

    def test_star(self):
        pairs = [(0, k) for k in range(1, 6)]
        o = orient_low_outdegree(range(6), pairs)
        assert o.max_outdegree == 1
        center_owned = sum(1 for p, owner in o.owner.items() if owner == 0)
        assert center_owned <= 1

    def test_triangle(self):
        o = orient_low_outdegree(range(3), [(0, 1), (1, 2), (0, 2)])
        assert o.max_outdegree == 2

    def test_matches_degeneracy(self):
        g = gen_gnp(12, 0.4, 2)
        from sdlabel import degeneracy

        o = orient_low_outdegree(range(g.n), g.edges())
        assert o.max_outdegree == degeneracy(g).d


class TestShallowise:
    def test_already_complete_leaf_pairs(self):
        # all signed pairs between leaves: covers are singletons and the
        # pair set survives unchanged up to renumbering
        t = complete_tree(4)
        children = list(t.children)
        leafv = [-1] * t.n_nodes
        for k in range(1, 5):
            leafv[t.leaf_of_pos[k]] = k - 1
        pos = {k: t.leaf_of_pos[k] for k in range(1, 5)}
        green = [(pos[1], pos[2]), (pos[3], pos[4])]
        blue = [(pos[1], pos[3])]
        m = make_clean(SignedTreeModel(children, leafv, green, blue))
        b = shallowise(m, 2)
        assert sorted(b.green) == sorted(m.green)
        assert sorted(b.blue) == sorted(m.blue)

    def test_realization_preserved_on_witness_models(self):
        for seed in range(6):
            g = gen_gnp(11, 0.35, seed)
            d, w = sdd_exact(g)
            m = stm_from_witness(g, w)
            b = shallowise(m, d + 1)
            ok, issues = validate(b)
            assert ok, issues
            assert realize(b) == g
            n = g.n
            assert max(b.depth) + 1 == math.ceil(math.log2(n)) + 1

    def test_hand_built_conflict_keeps_blue(self):
        # green (x, leaf4) strictly above blue (x1, leaf4); both emit the
        # complete-tree pair ({1,2}-node, leaf 4), which must stay blue
        children = [None, None, None, None, (0, 1), (4, 2), (5, 3)]
        leafv = [0, 1, 2, 3, -1, -1, -1]
        green = [(5, 3), (0, 1)]
        blue = [(4, 3), (4, 2)]
        m = SignedTreeModel(children, leafv, green, blue)
        assert is_clean(m) and validate(m)[0]
        b = shallowise(m, 2)
        t = complete_tree(4)
        left_internal = t.children[0][0]
        leaf4 = t.leaf_of_pos[4]
        conflicted = tuple(sorted((left_internal, leaf4)))
        assert conflicted in b.blue and conflicted not in b.green
        assert realize(b) == realize(m)

    def test_requires_clean(self):
        children = [None, None, (0, 1)]
        m = SignedTreeModel(children, [0, 1, -1])
        with pytest.raises(ValueError, match="clean"):
            shallowise(m, 1)

    def test_sparsity_declaration_checked(self, figure_model):
        m, _ = figure_model
        mc = make_clean(m)
        with pytest.raises(ValueError, match="sparse"):
            shallowise(mc, 0)

    def test_pair_count_bound(self):
        for seed in range(4):
            g = gen_gnp(13, 0.5, seed)
            d, w = sdd_exact(g)
            m = stm_from_witness(g, w)
            b = shallowise(m, d + 1)
            n = g.n
            cap = (2 * n - 1) * (d + 1) * (2 * math.log2(n)) ** 2
            assert len(b.green | b.blue) <= cap

    def test_output_width_within_edge_bound(self):
        g = gen_gnp(12, 0.4, 7)
        d, w = sdd_exact(g)
        b = shallowise(stm_from_witness(g, w), d + 1)
        assert width(b) <= width_bound(len(b.green | b.blue))
