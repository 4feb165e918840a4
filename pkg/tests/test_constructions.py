import pytest

import cyclebound as cb


class TestCycleGraph:
    def test_c6_profile_and_circumference(self):
        g = cb.cycle_graph(6)
        p = cb.metric_profile(g)
        assert (p.radius, p.diameter) == (3, 3)
        assert cb.circumference(g).length == 6

    def test_c3_is_triangle(self):
        assert cb.cycle_graph(3) == cb.from_edges(3, [(0, 1), (1, 2), (2, 0)])

    def test_even_cycle_is_extremal_for_equal_radius_diameter(self):
        for r in range(2, 7):
            g = cb.cycle_graph(2 * r)
            p = cb.metric_profile(g)
            assert (p.radius, p.diameter) == (r, r)
            assert cb.circumference(g).length == 4 * r - 2 * r

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            cb.cycle_graph(2)


class TestSunGraph:
    def test_sun41_shape(self):
        g = cb.sun_graph(4, 1)
        assert g.n == 8
        p = cb.metric_profile(g)
        assert (p.radius, p.diameter) == (3, 4)
        assert cb.circumference(g).length == 4

    def test_sun62_shape(self):
        g = cb.sun_graph(6, 2)
        assert g.n == 18
        p = cb.metric_profile(g)
        assert (p.radius, p.diameter) == (5, 7)
        assert cb.circumference(g).length == 6

    def test_sun31_degree_sequence(self):
        g = cb.sun_graph(3, 1)
        assert g.n == 6
        assert sorted(g.degree(v) for v in range(6)) == [1, 1, 1, 3, 3, 3]

    def test_degrees_by_role(self):
        g = cb.sun_graph(5, 3)
        for v in range(5):
            assert g.degree(v) == 3
        for j in range(5):
            ray = [5 + j * 3 + s for s in range(3)]
            assert g.degree(ray[-1]) == 1
            for v in ray[:-1]:
                assert g.degree(v) == 2

    def test_unicyclic(self):
        for m, k in [(3, 1), (4, 2), (6, 2), (5, 4)]:
            g = cb.sun_graph(m, k)
            assert g.edge_count == g.n
            assert cb.circumference(g).length == m

    def test_invalid_specs_rejected(self):
        with pytest.raises(ValueError):
            cb.sun_graph(2, 1)
        with pytest.raises(ValueError):
            cb.sun_graph(4, 0)
        with pytest.raises(ValueError):
            cb.SunSpec(3, 0)

    def test_spec_order(self):
        assert cb.SunSpec(6, 2).order == 18


class TestExtremalGraph:
    def test_figure_pairs(self):
        assert cb.extremal_graph(3, 4) == cb.sun_graph(4, 1)
        assert cb.extremal_graph(5, 7) == cb.sun_graph(6, 2)

    def test_equal_radius_diameter_is_even_cycle(self):
        g = cb.extremal_graph(4, 4)
        assert g == cb.cycle_graph(8)
        assert cb.circumference(g).length == 8 == 4 * 4 - 2 * 4

    def test_contract_over_admissible_range(self):
        for r in range(2, 9):
            for d in range(r, 2 * r - 1):
                if d > r and r < 3:
                    continue
                g = cb.extremal_graph(r, d)
                p = cb.metric_profile(g)
                assert (p.radius, p.diameter) == (r, d)
                assert cb.circumference(g).length == 4 * r - 2 * d

    def test_inadmissible_rejected(self):
        with pytest.raises(ValueError):
            cb.extremal_graph(3, 5)  # bound vacuous at d = 2r - 1
        with pytest.raises(ValueError):
            cb.extremal_graph(3, 2)  # diameter below radius
        with pytest.raises(ValueError):
            cb.extremal_graph(1, 1)


class TestTightnessWitness:
    def test_r5(self):
        g = cb.tightness_witness(5)
        assert g.n == 14
        p = cb.metric_profile(g)
        assert p.radius == 5
        assert p.diameter == 6  # well under the 2r - 2 = 8 ceiling
        assert cb.circumference(g).length == 9

    def test_r3(self):
        g = cb.tightness_witness(3)
        assert g.n == 8
        assert cb.metric_profile(g).radius == 3
        assert cb.circumference(g).length == 5

    def test_exactly_two_pendant_ends_at_distance_three(self):
        for r in range(3, 8):
            g = cb.tightness_witness(r)
            pend = [v for v in range(g.n) if g.degree(v) == 1]
            assert len(pend) == r
            close = [
                (u, v)
                for i, u in enumerate(pend)
                for v in pend[i + 1:]
                if cb.bfs_distances(g, u)[v] == 3
            ]
            assert len(close) == 1
            for i, u in enumerate(pend):
                row = cb.bfs_distances(g, u)
                for v in pend[i + 1:]:
                    assert row[v] >= 3

    def test_no_geodesic_cycle_of_length_2r_or_2r_plus_1(self):
        for r in range(3, 7):
            g = cb.tightness_witness(r)
            assert cb.find_geodesic_cycle(g, 2 * r) is None
            assert cb.find_geodesic_cycle(g, 2 * r + 1) is None

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            cb.tightness_witness(2)


class TestMultiSun:
    def test_degenerates_to_sun(self):
        assert cb.multi_sun(4, 1, 1) == cb.sun_graph(4, 1)

    def test_two_rays(self):
        g = cb.multi_sun(4, 1, 2)
        assert g.n == 12
        p = cb.metric_profile(g)
        assert (p.radius, p.diameter) == (3, 4)
        assert cb.circumference(g).length == 4

    def test_three_rays_length_two(self):
        g = cb.multi_sun(6, 2, 3)
        assert g.n == 42
        p = cb.metric_profile(g)
        assert (p.radius, p.diameter) == (5, 7)
        assert cb.circumference(g).length == 6

    def test_invalid_rejected(self):
        with pytest.raises(ValueError):
            cb.multi_sun(5, 1, 1)  # odd cycle
        with pytest.raises(ValueError):
            cb.multi_sun(4, 0, 1)
        with pytest.raises(ValueError):
            cb.multi_sun(4, 1, 0)


class TestDeterminism:
    def test_repeated_calls_identical(self):
        for build in (
            lambda: cb.cycle_graph(9),
            lambda: cb.sun_graph(6, 2),
            lambda: cb.extremal_graph(5, 7),
            lambda: cb.tightness_witness(6),
            lambda: cb.multi_sun(4, 2, 2),
        ):
            assert cb.to_graph6(build()) == cb.to_graph6(build())
