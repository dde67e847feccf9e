import pytest

from movdom import (
    all_minimum_sets,
    check_lemma_projection_in,
    check_lemma_projection_out,
    check_thm_corona,
    check_thm_join,
    check_thm_join_k1,
    check_thm_monotone,
    corona,
    family,
    mask_of,
    solve,
    sweep,
)
from movdom.formats import report_to_dict
from movdom.graphs import LimitExceededError


class TestMonotone:
    def test_k4(self, k4):
        v = check_thm_monotone(k4)
        assert v.status == "pass"
        assert v.got <= v.expected == 2

    def test_p4_vacuous(self, p4):
        v = check_thm_monotone(p4)
        assert v.status == "pass"
        assert "vacuous" in v.note

    def test_c6(self):
        v = check_thm_monotone(family("cycle", 6))
        assert v.status == "pass"
        assert v.expected == solve(family("cycle", 6), "gamma_mt2").value


class TestJoin:
    def test_k2_k2(self, k2):
        v = check_thm_join(k2, k2)
        assert (v.status, v.got) == ("pass", 2)

    def test_p3_p4(self, p3, p4):
        assert check_thm_join(p3, p4).status == "pass"

    def test_small_operand_skipped(self, k2):
        assert check_thm_join(family("complete", 1), k2).status == "skip"


class TestJoinK1:
    def test_p3(self, p3):
        v = check_thm_join_k1(p3)
        assert (v.status, v.expected, v.got) == ("pass", 2, 2)

    def test_c5(self):
        v = check_thm_join_k1(family("cycle", 5))
        assert (v.status, v.expected, v.got) == ("pass", 3, 3)

    def test_star(self):
        v = check_thm_join_k1(family("star", 4))
        assert (v.status, v.expected, v.got) == ("pass", 2, 2)

    def test_too_small_skipped(self, k2):
        assert check_thm_join_k1(k2).status == "skip"


class TestProjectionLemmas:
    @pytest.fixture
    def c3p3(self):
        return corona(family("cycle", 3), family("path", 3))

    def test_minimum_sets_project_in(self, c3p3):
        gh, layout = c3p3
        for t in all_minimum_sets(gh, "gamma_mt2"):
            for a in range(layout.g_order):
                if t >> a & 1:
                    assert check_lemma_projection_in(gh, layout, t, a).status == "pass"

    def test_union_of_copy_sets_projects_out(self, c3p3):
        gh, layout = c3p3
        # the union of one total dominating pair per copy, centers excluded
        t = 0
        for a in range(layout.g_order):
            t |= mask_of([layout.copy_vertex(a, 0), layout.copy_vertex(a, 1)])
        for a in range(layout.g_order):
            assert check_lemma_projection_out(gh, layout, t, a).status == "pass"

    def test_projection_out_negative_is_precondition_violation(self):
        # a set missing coverage of a copy whose center is excluded can
        # never totally dominate the corona, so the "constructed negative"
        # surfaces as a precondition violation
        gh, layout = corona(family("complete", 2), family("path", 3))
        t = mask_of([layout.copy_vertex(0, 0), layout.copy_vertex(0, 1), 0])
        with pytest.raises(ValueError, match="not a total dominating set"):
            check_lemma_projection_out(gh, layout, t, 1)

    def test_projection_in_precondition(self, c3p3):
        gh, layout = c3p3
        t = all_minimum_sets(gh, "gamma_mt2")[0]
        outside_center = next(a for a in range(layout.g_order) if not t >> a & 1) \
            if any(not t >> a & 1 for a in range(layout.g_order)) else None
        if outside_center is not None:
            with pytest.raises(ValueError, match="not in the set"):
                check_lemma_projection_in(gh, layout, t, outside_center)

    def test_projection_out_precondition(self, c3p3):
        gh, layout = c3p3
        t = gh.full_mask
        with pytest.raises(ValueError, match="is in the set"):
            check_lemma_projection_out(gh, layout, t, 0)


class TestCorona:
    def test_c3_p3_both(self, p3):
        v = check_thm_corona(family("cycle", 3), p3, "both")
        assert (v.status, v.expected, v.got) == ("pass", 6, 6)

    def test_c3_k2_modes(self, k2):
        c3 = family("cycle", 3)
        stmt = check_thm_corona(c3, k2, "statement")
        assert stmt.status in ("pass", "fail")  # recorded outcome either way
        assert check_thm_corona(c3, k2, "proof").status == "skip"

    def test_k2_p3_statement_skipped(self, k2, p3):
        assert check_thm_corona(k2, p3, "statement").status == "skip"

    def test_bad_mode(self, k2, p3):
        with pytest.raises(ValueError, match="mode"):
            check_thm_corona(k2, p3, "neither")


class TestSweep:
    def test_join_order3(self):
        report = sweep("thm3.3", max_order=3)
        assert report.total == report.checked == 25
        assert report.ok

    def test_join_k1_order3(self):
        report = sweep("thm3.4", max_order=3)
        assert report.checked == 4
        assert report.ok
        data = report.extras["gamma_t_set_movability"]
        assert data["instances"] == 4

    def test_corona_3_2_all_skipped(self):
        report = sweep("thm3.8", pg=3, ph=2, mode="both")
        assert report.total == report.skipped == 4
        assert report.checked == 0
        # these instances satisfy the statement filter but not the proof's
        assert len(report.extras["hypothesis_discrepancies"]) == 4

    def test_monotone_order4(self):
        report = sweep("thm3.1", max_order=4)
        assert report.checked == 1 + 1 + 4 + 38
        assert report.ok

    def test_accounting(self):
        report = sweep("thm3.8", pg=3, ph=3, mode="both")
        assert report.checked + report.skipped == report.total
        assert report.ok

    def test_reproducible(self):
        a = report_to_dict(sweep("thm3.3", max_order=3))
        b = report_to_dict(sweep("thm3.3", max_order=3))
        a.pop("elapsed"), b.pop("elapsed")
        assert a == b

    def test_jobs_do_not_change_report(self):
        a = report_to_dict(sweep("thm3.4", max_order=4, jobs=1))
        b = report_to_dict(sweep("thm3.4", max_order=4, jobs=2))
        a.pop("elapsed"), b.pop("elapsed")
        assert a == b

    def test_sampled_family_deterministic(self):
        a = report_to_dict(sweep("thm3.1", max_order=7, sample=10, seed=11))
        b = report_to_dict(sweep("thm3.1", max_order=7, sample=10, seed=11))
        a.pop("elapsed"), b.pop("elapsed")
        assert a == b
        assert a["instances_total"] == 10

    def test_limits(self):
        with pytest.raises(LimitExceededError):
            sweep("thm3.3", max_order=7)
        with pytest.raises(LimitExceededError):
            sweep("thm3.8", pg=5, ph=4)

    def test_unknown_theorem(self):
        with pytest.raises(ValueError, match="unknown theorem"):
            sweep("thm9.9")

    def test_report_schema(self):
        doc = report_to_dict(sweep("thm3.4", max_order=3))
        assert {"theorem", "instances_total", "instances_checked",
                "counterexamples", "elapsed"} <= set(doc)
