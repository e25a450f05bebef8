import random

import pytest

import halinstar as hs
from halinstar.cubic import (
    CASE_BRANCH_STUB,
    CASE_LEAF_STUB,
    ColorPermutation,
    base_case_coloring,
)
from halinstar.errors import NotCubic, WrongBaseShape


def leaf_stub_instance() -> hs.HalinGraph:
    # three internal vertices in a row; the middle one carries a single leaf
    t = hs.PlaneTree(0, [(1, 2, 3), (), (), (4, 5), (), (6, 7), (), ()])
    return hs.build_halin(t)


def branch_stub_instance() -> hs.HalinGraph:
    # middle vertex carries an internal branch with two leaves
    t = hs.PlaneTree(
        0, [(1, 4, 7), (2, 3), (), (), (5, 6), (), (), (8, 9), (), ()]
    )
    return hs.build_halin(t)


class TestBaseCases:
    def test_wheel3_uses_five_colors(self, k4):
        c = base_case_coloring(k4, 2)
        assert hs.is_star_valid(k4, c)
        assert c.num_colors_used == 5

    def test_ell3_uses_six_colors(self, ell3):
        c = base_case_coloring(ell3, 3)
        assert hs.is_star_valid(ell3, c)
        assert c.num_colors_used == 6

    def test_wrong_shape_rejected(self, k4, ell3):
        with pytest.raises(WrongBaseShape):
            base_case_coloring(k4, 3)
        with pytest.raises(WrongBaseShape):
            base_case_coloring(ell3, 2)

    def test_base_table_applies_to_relabelled_instance(self):
        # same shape, different embedding ids
        t = hs.PlaneTree(2, [(), (), (0, 1, 3), (4, 5), (), ()])
        g = hs.build_halin(t)
        c = base_case_coloring(g, 3)
        assert hs.is_star_valid(g, c)


class TestColorPermutation:
    def test_must_be_bijection(self):
        with pytest.raises(ValueError):
            ColorPermutation((1, 1, 2, 3, 4, 5))

    def test_preserves_validity(self, ell3):
        coloring = hs.color_cubic(ell3)
        rng = random.Random(7)
        for _ in range(20):
            perm = list(range(1, 7))
            rng.shuffle(perm)
            permuted = ColorPermutation(tuple(perm)).apply(coloring)
            assert hs.is_star_valid(ell3, permuted)

    def test_sending_pins_requested_values(self):
        perm = ColorPermutation.sending({4: 1, 2: 2, 6: 3})
        assert perm.mapping[3] == 1
        assert perm.mapping[1] == 2
        assert perm.mapping[5] == 3


class TestReduce:
    def test_leaf_stub_case(self):
        g = leaf_stub_instance()
        path = hs.longest_tree_path(g)
        gp, frame = hs.reduce_instance(g, path)
        assert frame.case == CASE_LEAF_STUB
        assert len(gp.cycle) == len(g.cycle) - 2
        assert gp.is_cubic

    def test_branch_stub_case(self):
        g = branch_stub_instance()
        path = hs.longest_tree_path(g)
        gp, frame = hs.reduce_instance(g, path)
        assert frame.case == CASE_BRANCH_STUB
        assert len(gp.cycle) == len(g.cycle) - 3
        assert gp.is_cubic

    def test_new_cycle_edges_attach_the_stub(self):
        g = branch_stub_instance()
        gp, frame = hs.reduce_instance(g, hs.longest_tree_path(g))
        u = frame.old_to_new[frame.roles["u"]]
        x1 = frame.old_to_new[frame.roles["x1"]]
        z = frame.old_to_new[frame.roles["z"]]
        assert gp.has_edge(u, x1)
        assert gp.has_edge(u, z)
        assert gp.tree.is_leaf(u)

    def test_roles_are_consistent_with_the_path(self):
        g = leaf_stub_instance()
        path = hs.longest_tree_path(g)
        _, frame = hs.reduce_instance(g, path)
        assert frame.roles["v"] == path[1]
        assert frame.roles["u"] == path[2]
        assert frame.roles["w"] == path[3]
        # the fan is consecutive on the cycle: x1 v1 v2 y1 z
        r = frame.roles
        order = [r["x1"], r["v1"], r["v2"], r["y1"], r["z"]]
        pos = {leaf: i for i, leaf in enumerate(g.cycle)}
        n = len(g.cycle)
        steps = {(pos[b] - pos[a]) % n for a, b in zip(order, order[1:])}
        assert steps == {1} or steps == {n - 1}

    def test_extension_recolors_validly(self):
        for build in (leaf_stub_instance, branch_stub_instance):
            g = build()
            gp, frame = hs.reduce_instance(g, hs.longest_tree_path(g))
            phi_prime = hs.color_cubic(gp)
            phi = hs.extend_coloring(phi_prime, frame)
            assert hs.is_star_valid(g, phi)
            assert phi.num_colors_used <= 6


class TestColorCubic:
    def test_rejects_non_cubic(self, wheel5):
        with pytest.raises(NotCubic):
            hs.color_cubic(wheel5)

    def test_k4_stays_at_five(self, k4):
        c = hs.color_cubic(k4)
        assert c.num_colors_used == 5
        assert hs.is_star_valid(k4, c)

    def test_random_sweep_within_six(self):
        stats = hs.ColoringStats()
        for seed in range(150):
            internal = 1 + seed % 19
            g = hs.build_halin(
                hs.generate(hs.GenSpec("cubicRandom", n=internal, seed=seed))
            )
            c = hs.color_cubic(g, stats=stats)
            assert hs.is_star_valid(g, c)
            assert c.num_colors_used <= 6
        assert stats.fallbacks == 0

    def test_enumerated_shapes_within_six(self):
        for tree in hs.enumerate_small_cubic_halin(8):
            g = hs.build_halin(tree)
            c = hs.color_cubic(g)
            assert hs.is_star_valid(g, c)
            assert c.num_colors_used <= 6

    def test_never_beats_the_exact_index(self):
        for tree in hs.enumerate_small_cubic_halin(5):
            g = hs.build_halin(tree)
            exact = hs.star_chromatic_index(g)
            constructed = hs.color_cubic(g).num_colors_used
            assert exact in (5, 6)
            assert constructed >= exact

    def test_trace_records_every_reduction(self):
        g = hs.build_halin(hs.generate(hs.GenSpec("cubicRandom", n=8, seed=3)))
        trace: list = []
        hs.color_cubic(g, trace=trace)
        assert trace, "a reducible instance must log frames"
        for frame in trace:
            assert frame["cycle_after"] < frame["cycle_before"]
            assert frame["case"] in (CASE_LEAF_STUB, CASE_BRANCH_STUB)
