from __future__ import annotations

import pytest

from src.elements import full_mask, mask_of, subsets_of_size
from src.errors import UnknownLemma
from src.families import boundary_member
from src.graph import Multigraph, complete_graph, cycle_graph
from src.matroid import Matroid, cycle_matroid, dual, from_bases, uniform
from src.suites import SUITE_ORDER, check_name, run_lemma_suite
from src.utils import SweepSettings


def test_suite_names():
    assert check_name("3.1") == "size_lemma"
    assert check_name("2.4") == "lemma_suite(2.4)"
    assert SUITE_ORDER[0] == "2.1"
    assert "oracles" in SUITE_ORDER


def test_unknown_suite_rejected(k4):
    with pytest.raises(UnknownLemma):
        run_lemma_suite(k4, "9.9")


def test_coclosure_suite_is_exhaustive_on_k4(k4):
    report = run_lemma_suite(k4, "2.3", "M(K4)")
    assert report.passed
    assert report.check == "lemma_suite(2.3)"
    # Six choices of z times every subset of the other five elements.
    assert report.cases == 192
    assert report.stats["mode"] == "exhaustive"
    assert "seed" not in report.stats


def test_bixby_suite_counts_verdicts(k4):
    report = run_lemma_suite(k4, "2.10")
    assert report.passed
    assert report.cases == 6
    assert report.stats["verdicts"] == {"both": 6}


def test_cosegment_contractions_on_rank_three_uniform():
    report = run_lemma_suite(uniform(3, 5), "2.6")
    assert report.passed
    assert report.cases == 5


def test_size_lemma(k4, family3):
    empty = run_lemma_suite(k4, "3.1")
    assert empty.check == "size_lemma"
    assert empty.passed and empty.cases == 0 and empty.vacuous == 1
    member = run_lemma_suite(family3, "3.1")
    assert member.passed and member.cases >= 1


@pytest.mark.parametrize("which", ["2.1", "2.4", "2.5", "2.8", "2.9", "2.11", "2.12", "2.13", "oracles"])
def test_suites_hold_on_k4(k4, which):
    report = run_lemma_suite(k4, which)
    assert report.passed, report.certificates


def test_suites_skip_without_three_connectivity():
    report = run_lemma_suite(cycle_matroid(cycle_graph(4)), "2.1")
    assert report.passed
    assert report.cases == 0
    assert report.stats["hypothesis"] == "not 3-connected"


def test_sampled_mode_is_seeded():
    k5 = cycle_matroid(complete_graph(5))
    settings = SweepSettings(seed=3, samples=40)
    first = run_lemma_suite(k5, "2.3", "M(K5)", settings=settings)
    second = run_lemma_suite(k5, "2.3", "M(K5)", settings=settings)
    assert first.stats["mode"] == "sampled"
    assert first.stats["seed"] == 3
    assert first.cases == 40
    assert first.passed
    assert first == second


def test_large_matroids_are_skipped(family3):
    report = run_lemma_suite(family3, "2.1", settings=SweepSettings(sample_max=10))
    assert report.stats["mode"] == "skipped"
    assert report.vacuous == 1
    assert report.passed


def test_all_suites_merge(u24):
    report = run_lemma_suite(u24, "all", "U(2,4)")
    assert report.passed
    assert report.check == "lemma_suite(all)"
    assert report.stats["suites"] == len(SUITE_ORDER)
    assert report.stats["mode"] == "exhaustive"


def two_lines() -> Matroid:
    """Rank 3 on seven points: lines {0,1,2} and {3,4,5}, point 6 free."""
    lines = {mask_of([0, 1, 2]), mask_of([3, 4, 5])}
    return from_bases(7, [b for b in subsets_of_size(full_mask(7), 3) if b not in lines])


def test_series_class_closes_to_circuit():
    # Triangle with 02 doubled: {01, 12} is a series class spanning both copies of 02.
    M = cycle_matroid(Multigraph(3, ((0, 1), (1, 2), (0, 2), (0, 2))))
    report = run_lemma_suite(M, "2.2")
    assert report.passed
    assert report.cases >= 2


def test_contraction_separations_on_k4(k4):
    report = run_lemma_suite(k4, "2.7")
    assert report.passed
    assert report.cases == 6


def test_segment_suites_on_two_lines():
    M = two_lines()
    # No element of either line is a bad contraction, so the cosegment suite has nothing to test.
    cosegment = run_lemma_suite(M, "3.2")
    assert cosegment.passed
    assert cosegment.cases == 0
    assert cosegment.vacuous >= 1
    hyperplane = run_lemma_suite(M, "3.3")
    assert hyperplane.passed
    assert hyperplane.cases >= 1


def test_minimal_partition_on_family_member(family3):
    report = run_lemma_suite(family3, "3.4", "P*(3)")
    assert report.passed, report.certificates
    assert report.cases > 0
    assert report.stats["mode"] == "sampled"
    assert "x2_sides_unmet" in report.stats


@pytest.mark.parametrize("which", ["3.5", "3.6"])
def test_vertical_suites_on_family_member(family3, which):
    report = run_lemma_suite(family3, which, "P*(3)")
    assert report.passed, report.certificates
    assert report.cases > 0


def test_cosegment_maximality_on_rank_three_uniform():
    report = run_lemma_suite(uniform(3, 5), "3.7")
    assert report.passed
    assert report.cases >= 1


def test_cohyperplane_description_on_dual_family(family3):
    report = run_lemma_suite(dual(family3), "3.8", "M(K~3,3)")
    assert report.passed
    assert report.cases >= 1
    assert "boundary" not in report.stats


def test_cohyperplane_description_accepts_the_prism_dual():
    report = run_lemma_suite(dual(boundary_member()), "3.8", "M(K~3,2)")
    assert report.passed
    assert report.cases >= 1
    assert report.stats["boundary"] is True
