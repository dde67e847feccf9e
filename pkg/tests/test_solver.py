import pytest

from movdom import (
    all_minimum_sets,
    corona,
    enumerate_connected,
    family,
    join,
    mask_of,
    parse_graph6,
    recheck_certificate,
    solve,
    solve_naive,
)
from movdom.graphs import LimitExceededError, random_connected
from movdom.solver import sorted_bits


class TestSolve:
    def test_p4_mt2_nonexistent(self, p4):
        res = solve(p4, "gamma_mt2")
        assert res.value is None
        assert res.certificate.nonexistent
        assert res.certificate.witness == ()

    def test_k4_mt2(self, k4):
        res = solve(k4, "gamma_mt2")
        assert res.value == 2
        assert res.certificate.witness == (0, 1)

    def test_fan_mt2(self, fan4):
        assert solve(fan4, "gamma_mt2").value == 2

    def test_c6_gamma_t(self):
        assert solve(family("cycle", 6), "gamma_t").value == 4

    def test_corona_c3_p3_mt2(self):
        gh, _ = corona(family("cycle", 3), family("path", 3))
        assert solve(gh, "gamma_mt2").value == 6

    def test_gamma_t_nonexistent_with_isolated_vertex(self):
        g = family("empty", 3)
        assert solve(g, "gamma_t").value is None

    def test_unknown_kind(self, p3):
        with pytest.raises(ValueError, match="unknown invariant kind"):
            solve(p3, "gamma_x")

    def test_certificates_recheck(self, k4, p4, fan4):
        for g in (k4, p4, fan4, family("cycle", 5)):
            for kind in ("gamma", "gamma_t", "gamma_m2", "gamma_mt2"):
                res = solve(g, kind)
                assert recheck_certificate(g, res.certificate)

    def test_certificate_embeds_graph(self, k4):
        res = solve(k4, "gamma_mt2")
        assert parse_graph6(res.certificate.graph6) == k4

    def test_deterministic(self, k4):
        a = solve(k4, "gamma_mt2")
        b = solve(k4, "gamma_mt2")
        assert a.certificate == b.certificate


class TestSolveNaive:
    def test_k2_gamma_t(self, k2):
        res = solve_naive(k2, "gamma_t")
        assert (res.value, res.certificate.witness) == (2, (0, 1))

    def test_p3_gamma(self, p3):
        res = solve_naive(p3, "gamma")
        assert (res.value, res.certificate.witness) == (1, (1,))

    def test_matches_solve_on_p4(self, p4):
        for kind in ("gamma", "gamma_t", "gamma_m2", "gamma_mt2"):
            a, b = solve(p4, kind), solve_naive(p4, kind)
            assert a.value == b.value
            assert a.certificate.witness == b.certificate.witness

    def test_order_limit(self):
        g, _ = corona(family("cycle", 5), family("path", 3))
        with pytest.raises(LimitExceededError):
            solve_naive(g, "gamma")

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_oracle_equivalence_small(self, n):
        for g in enumerate_connected(n):
            for kind in ("gamma", "gamma_t", "gamma_m2", "gamma_mt2"):
                a, b = solve(g, kind), solve_naive(g, kind)
                assert a.value == b.value
                assert a.certificate.witness == b.certificate.witness

    def test_oracle_equivalence_allow_equal(self):
        for g in enumerate_connected(4):
            for kind in ("gamma_m2", "gamma_mt2"):
                a = solve(g, kind, allow_equal_replacements=True)
                b = solve_naive(g, kind, allow_equal_replacements=True)
                assert a.value == b.value
                assert a.certificate.witness == b.certificate.witness


class TestAllMinimumSets:
    def test_k4_gamma_t(self, k4):
        sets = all_minimum_sets(k4, "gamma_t")
        assert len(sets) == 6
        assert all(s.bit_count() == 2 for s in sets)

    def test_p4_mt2_empty(self, p4):
        assert all_minimum_sets(p4, "gamma_mt2") == []

    def test_p3_gamma_t(self, p3):
        assert all_minimum_sets(p3, "gamma_t") == [mask_of([0, 1]), mask_of([1, 2])]

    def test_lexicographic_order(self, k4):
        sets = all_minimum_sets(k4, "gamma_t")
        keys = [tuple(sorted_bits(s)) for s in sets]
        assert keys == sorted(keys)


class TestInvariantInequalities:
    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_gamma_chain(self, n):
        for g in enumerate_connected(n):
            gamma = solve(g, "gamma").value
            gt = solve(g, "gamma_t").value
            m2 = solve(g, "gamma_m2").value
            mt2 = solve(g, "gamma_mt2").value
            if gt is not None:
                assert gamma <= gt
            if mt2 is not None:
                assert mt2 >= 2
                assert m2 is not None and m2 <= mt2

    def test_random_graph_agreement(self):
        for seed in range(30):
            g = random_connected(7, 0.5, seed)
            for kind in ("gamma", "gamma_t", "gamma_m2", "gamma_mt2"):
                a, b = solve(g, kind), solve_naive(g, kind)
                assert (a.value, a.certificate.witness) == (b.value, b.certificate.witness)
