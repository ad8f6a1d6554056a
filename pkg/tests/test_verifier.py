from __future__ import annotations

from dataclasses import replace

import pytest

from src.elements import full_mask, size
from src.errors import NotThreeConnected
from src.families import boundary_member, is_boundary_member, is_in_P_star
from src.graph import complete_graph, cycle_graph
from src.matroid import cycle_matroid, dual, uniform
from src.verifier import (
    CERT_LIMIT,
    Tally,
    check_main_theorem,
    check_vertical_theorem,
    cite,
    contraction_bad_set,
    property_hyperplanes,
    revalidate,
)


def test_k4_has_no_property_hyperplane(k4):
    assert contraction_bad_set(k4) == 0
    report = check_main_theorem(k4, "M(K4)")
    assert report.passed
    assert report.cases == 7
    assert report.stats["property_hyperplanes"] == 0
    assert "family_n" not in report.stats


def test_uniform_has_no_property_hyperplane():
    assert property_hyperplanes(uniform(3, 6)) == []
    assert check_main_theorem(uniform(3, 6)).passed


def test_family_member_is_recognized(family3):
    assert full_mask(9) in property_hyperplanes(family3)
    report = check_main_theorem(family3, "P*(3)")
    assert report.passed
    assert report.stats["family_n"] == 3
    [cert] = report.certificates
    assert cert.kind == "family-witness"
    assert cert.set("H") == full_mask(9)
    assert dict(cert.values)["r:H"] == 6
    assert revalidate(family3, cert)


def test_prism_boundary_member_is_recognized():
    M = boundary_member()
    assert is_in_P_star(M) is None
    witness = is_boundary_member(M)
    assert witness is not None
    assert witness.n == 2
    assert size(witness.hyperplane) == 6
    assert witness.hyperplane in property_hyperplanes(M)
    report = check_main_theorem(M, "M*(K~3,2)")
    assert report.passed
    assert report.stats["family_n"] == 2
    [cert] = report.certificates
    assert cert.kind == "family-boundary"
    assert revalidate(M, cert)


def test_boundary_check_needs_the_dual_orientation(k4):
    assert is_boundary_member(dual(boundary_member())) is None
    assert is_boundary_member(k4) is None


def test_graphic_k5_passes():
    report = check_main_theorem(cycle_matroid(complete_graph(5)), "M(K5)")
    assert report.passed
    assert report.stats["property_hyperplanes"] == 0


def test_checks_need_three_connectivity():
    square = cycle_matroid(cycle_graph(4))
    with pytest.raises(NotThreeConnected):
        check_main_theorem(square)
    with pytest.raises(NotThreeConnected):
        check_vertical_theorem(square)


def test_vertical_theorem_is_vacuous_on_k4(k4):
    report = check_vertical_theorem(k4, "M(K4)")
    assert report.passed
    assert report.cases == 0
    assert report.vacuous == 1


def test_vertical_theorem_on_family_member(family3):
    report = check_vertical_theorem(family3, "P*(3)")
    assert report.passed
    assert report.cases > 0
    for cert in report.certificates:
        assert cert.kind in ("witness", "review")
        assert revalidate(family3, cert)


def test_vertical_theorem_counts_one_sided_partitions(k4, family3):
    assert check_vertical_theorem(k4).stats["one_sided"] == 0
    report = check_vertical_theorem(family3, "P*(3)")
    reviews = sum(c.kind == "review" for c in report.certificates)
    assert report.stats["one_sided"] >= reviews
    assert (report.stats["one_sided"] > 0) == report.review
    assert report.stats["one_sided"] <= report.cases


def test_revalidate_detects_tampering(k4):
    cert = cite(k4, "sample", sets={"A": 0b000111}, ranks=("A",), lambdas=("A",), extra={"n": 5})
    assert dict(cert.values) == {"r:A": 3, "lambda:A": 2, "n": 5}
    assert revalidate(k4, cert)
    bumped = replace(cert, values=(("r:A", 2),))
    assert not revalidate(k4, bumped)
    dangling = replace(cert, values=(("r:B", 1),))
    assert not revalidate(k4, dangling)


def test_tally_caps_certificates(k4):
    tally = Tally("M", "demo")
    for _ in range(CERT_LIMIT + 3):
        tally.held()
        tally.fail(cite(k4, "bad", sets={"A": 1}))
    report = tally.report()
    assert not report.passed
    assert report.cases == CERT_LIMIT + 3
    assert report.stats["failures"] == CERT_LIMIT + 3
    assert len(report.certificates) == CERT_LIMIT


def test_empty_tally_reports_vacuous():
    report = Tally("M", "demo", mode="sampled", seed=4).report()
    assert report.passed
    assert report.vacuous == 1
    assert report.stats["seed"] == 4
    assert report.to_dict()["stats"]["mode"] == "sampled"
