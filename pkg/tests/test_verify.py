import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artin_hnn.embedding import construct
from artin_hnn.oracles import BrittonOracle, ReductionBudget
from artin_hnn.presentations import Homomorphism
from artin_hnn.verify import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    check_homomorphism,
    check_index,
    check_injectivity_samples,
    check_relator_count,
    check_theta_stable_order,
    check_well_definedness,
    run_checks,
    sample_kernel_words,
)
from artin_hnn.words import exponent_sum, word

from helpers import broken, e1, e2, empty_phi, random_instance

CHECKS_ARTIN = [
    "well_definedness",
    "cover_invariants",
    "hnn_graph_of_groups",
    "kernel_reidemeister_schreier",
    "index",
    "delta_star_collapse",
    "rose_is_artin",
    "eta_relators",
    "label_set",
    "relator_count",
    "injectivity_samples",
]


def test_well_definedness_examples():
    assert check_well_definedness(*e1()).status == PASS
    assert check_well_definedness(*e2()).status == PASS


def test_well_definedness_reports_conflict():
    res = check_well_definedness(*broken(), k=5)
    assert res.status == FAIL
    conflict = res.data["conflicts"][0]
    assert sorted(w[3] for w in conflict["witnesses"]) == [2, 3]
    assert "m(" in res.detail


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_well_definedness_holds_for_label_preserving_input(seed):
    assert check_well_definedness(*random_instance(random.Random(seed))).status == PASS


def test_swapped_images_fail_the_homomorphism_check():
    for kind in ("artin", "coxeter"):
        cert = construct(*e1(kind))
        images = dict(cert.eta.images)
        images["a@0"], images["a@1"] = images["a@1"], images["a@0"]
        bad = Homomorphism(cert.eta.source, cert.eta.target, images, "bad")
        if kind == "artin":
            res = check_homomorphism(bad, cert.target_system)
        else:
            res = check_homomorphism(bad.compose(cert.theta_doubling), cert.target_system, "tits")
        assert res.status == FAIL, res.detail


def test_structural_homomorphism_check_is_inconclusive_not_pass():
    cert = construct(*e1("coxeter"))
    images = dict(cert.eta.images)
    images["a@0"], images["a@1"] = images["a@1"], images["a@0"]
    bad = Homomorphism(cert.eta.source, cert.eta.target, images, "bad")
    assert check_homomorphism(bad, None, "structural").status == INCONCLUSIVE


def test_relator_count_examples():
    assert check_relator_count(construct(*e1())).status == PASS
    assert check_relator_count(construct(*e1("coxeter"))).status == PASS


def test_index_examples():
    for builder in (e1, e2, empty_phi):
        for kind in ("artin", "coxeter"):
            res = check_index(construct(*builder(kind)))
            assert res.status == PASS, (builder.__name__, kind, res.detail)


def test_index_overflow_is_inconclusive():
    res = check_index(construct(*e1()), max_cosets=2)
    assert res.status == INCONCLUSIVE


def test_theta_stable_order():
    assert check_theta_stable_order(construct(*e1("coxeter"))).status == PASS


def test_sampled_words_are_in_the_kernel_and_distinct():
    cert = construct(*e1("coxeter"))
    words = sample_kernel_words(cert, 50, 4, seed=3)
    assert len(words) == 50
    britton = BrittonOracle(cert.system, cert.phi, cert.kernel.stable)
    for n, w in enumerate(words):
        assert exponent_sum(w, "t") % 3 == 0
        assert not any(britton.equal(w, v) for v in words[:n])


def test_injectivity_examples():
    for builder in (e1, e2):
        for kind in ("artin", "coxeter"):
            cert = construct(*builder(kind))
            res = check_injectivity_samples(cert, count=40)
            assert res.status != FAIL
            assert res.data["collisions"] == 0


def test_injectivity_detects_a_collapsing_map():
    cert = construct(*e1("coxeter"))
    trivial = {g: () for g in cert.embedding.source.generators}
    hom = Homomorphism(cert.embedding.source, cert.embedding.target, trivial, "zero")
    res = check_injectivity_samples(cert, count=10, hom=hom)
    assert res.status == FAIL


def test_run_checks_e1_artin():
    report = run_checks(construct(*e1()))
    assert [c.name for c in report.checks] == CHECKS_ARTIN
    assert report.ok and not report.inconclusive()


def test_run_checks_coxeter_names():
    report = run_checks(construct(*e1("coxeter")), samples=20)
    names = [c.name for c in report.checks]
    assert "theta_relators" in names and "theta_stable_order" in names and "rose_is_artin" not in names
    assert report.ok


def test_report_is_deterministic():
    a = run_checks(construct(*e1("coxeter")), samples=30, seed=5).to_dict(timings=False)
    b = run_checks(construct(*e1("coxeter")), samples=30, seed=5).to_dict(timings=False)
    assert a == b
    assert a["seed"] == 5 and a["budgets"]["samples"] == 30


def test_small_budget_gives_inconclusive_not_fail():
    report = run_checks(construct(*e1("coxeter")), samples=5, budget=ReductionBudget(max_length=2))
    assert report.ok
    assert report.inconclusive()


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from(["artin", "coxeter"]))
def test_no_check_fails_on_valid_input(seed, kind):
    system, phi = random_instance(random.Random(seed), kind=kind)
    report = run_checks(construct(system, phi), samples=20)
    assert report.ok, [(c.name, c.detail) for c in report.failed()]
    for c in report.inconclusive():
        # only sampling can run short, when the kernel has few short elements
        assert c.name == "injectivity_samples" and "distinct samples" in c.detail
