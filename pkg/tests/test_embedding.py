import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artin_hnn.embedding import (
    certificate,
    construct,
    kernel_subgroup,
    path_words,
    reidemeister_schreier,
    rewrite_kernel_word,
)
from artin_hnn.errors import StageError
from artin_hnn.oracles import BrittonOracle, RAAGOracle, TitsOracle
from artin_hnn.presentations import Homomorphism
from artin_hnn.systems import INF
from artin_hnn.words import abelianize, commutator, concat, inverse, letter, parse_word, word

from helpers import broken, e1, e2, empty_phi, identity_phi, random_instance


def test_kernel_generators_e1():
    kern = kernel_subgroup(*e1(), 3)
    assert kern.generator_words["a@0"] == word("a")
    assert kern.generator_words["b@2"] == word("t", "t", "b", "t^-1", "t^-1")
    assert kern.generator_words["t@2"] == word("t", "t", "t")
    assert kern.transversal == ((), word("t"), word("t", "t"))


def test_kernel_k_one_is_whole_group():
    kern = kernel_subgroup(*empty_phi(), 1)
    assert kern.generator_words == {"a@0": word("a"), "b@0": word("b"), "t@0": word("t")}


def test_rewrite_kernel_word():
    assert rewrite_kernel_word(word("t", "a", "t^-1"), "t", 3) == word("a@1")
    assert rewrite_kernel_word(word("t", "t", "t"), "t", 3) == word("t@2")
    assert rewrite_kernel_word(word("t^-1", "b", "t"), "t", 3) == word("t@2^-1", "b@2", "t@2")
    with pytest.raises(ValueError):
        rewrite_kernel_word(word("t"), "t", 3)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**9))
def test_rewriting_inverts_generator_words(seed):
    rng = random.Random(seed)
    system, phi = random_instance(rng, max_gens=4)
    k = rng.randint(1, 4)
    kern = kernel_subgroup(system, phi, k)
    gens = list(kern.generator_words)
    w = tuple((rng.choice(gens), rng.choice((1, -1))) for _ in range(rng.randint(0, 8)))
    ambient = concat(*[kern.generator_words[g] if e == 1 else inverse(kern.generator_words[g]) for g, e in w])
    assert kern.rewrite(ambient) == concat(w)


def test_reidemeister_schreier_matches_cycle_e1():
    kern = kernel_subgroup(*e1(), 3)
    rs = reidemeister_schreier(kern)
    assert set(rs.generators) == set(kern.subgroup_presentation.generators)
    assert rs.relator_classes() == kern.subgroup_presentation.relator_classes()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**9))
def test_reidemeister_schreier_matches_cycle(seed):
    rng = random.Random(seed)
    system, phi = random_instance(rng, max_gens=4, kind=rng.choice(("artin", "coxeter")))
    k = rng.randint(1, 4)
    kern = kernel_subgroup(system, phi, k)
    assert reidemeister_schreier(kern).relator_classes() == kern.subgroup_presentation.relator_classes()


def test_path_words():
    assert path_words(3, lambda i: letter(f"t{i}")) == [(), word("t0"), word("t0", "t1"), word("t0", "t1", "t2")]


def test_eta_images_e1():
    cert = construct(*e1())
    img = cert.eta.images
    assert img["a@0"] == word("a_0") and img["b@0"] == word("b_0")
    assert img["a@1"] == word("t0", "a_1", "t0^-1")
    assert img["b@1"] == word("t0", "a_0", "t0^-1")
    assert img["a@2"] == word("t0", "t1", "b_0", "t1^-1", "t0^-1")
    assert img["t@2"] == word("t0", "t1", "t2")


def test_eta_images_e2_commute_and_abelian_rank():
    cert = construct(*e2())
    img = cert.eta.images
    orc = RAAGOracle(cert.target_system)
    x, y, u = img["a@0"], img["b@0"], img["t@1"]
    for p, q in ((x, y), (x, u), (y, u)):
        assert orc.is_identity(commutator(p, q))
    vectors = [abelianize(w) for w in (x, y, u)]
    assert vectors == [{"a_0": 1}, {"b_0": 1}, {"t0": 1, "t1": 1}]


def test_coxeter_theta_images():
    cert = construct(*e1("coxeter"))
    th = cert.theta_doubling.images
    assert th["t1"] == word("u1", "u1'") and th["a_0"] == word("a_0")
    assert cert.embedding.images["t@2"] == word("u0", "u0'", "u1", "u1'", "u2", "u2'")


def test_vertex_only_images_are_not_injective():
    """Sending s@i to psi_i(s) alone and the kernel stable letter to t_(k-1)
    respects relators but merges distinct kernel elements."""
    cert = construct(*e1("coxeter"))
    k = cert.k
    naive = {g: letter(cert.cover.psi[int(g.split("@")[1])][g.split("@")[0]]) for g in cert.eta.images if not g.startswith("t@")}
    naive["t@2"] = letter(f"t{k - 1}")
    naive_hom = Homomorphism(cert.kernel.subgroup_presentation, cert.gstar, naive, "naive")
    comp = naive_hom.compose(cert.theta_doubling)
    conj = word("t", "t", "a", "t^-1", "t^-1")
    w1 = concat(word("a"), conj, word("a"))
    w2 = concat(conj, word("a"), conj)
    britton = BrittonOracle(cert.system, cert.phi, cert.kernel.stable)
    assert not britton.equal(w1, w2)
    tits = TitsOracle(cert.target_system)
    r1, r2 = cert.kernel.rewrite(w1), cert.kernel.rewrite(w2)
    assert tits.equal(comp.apply(r1), comp.apply(r2))
    assert not tits.equal(cert.embedding.apply(r1), cert.embedding.apply(r2))


@pytest.mark.parametrize("builder", [e1, e2, empty_phi, identity_phi])
@pytest.mark.parametrize("kind", ["artin", "coxeter"])
def test_certificate_builds(builder, kind):
    cert = construct(*builder(kind))
    assert cert.kind == kind
    holds, got, allowed = cert.label_claim()
    assert holds


def test_label_set_e1_equality():
    cert = construct(*e1())
    assert cert.target_system.label_set() == cert.system.label_set() | {2, INF} == {2, 3, INF}


def test_label_set_right_angled_stays_right_angled():
    cert = construct(*e2())
    assert cert.target_system.is_right_angled
    assert cert.target_system.label_set() == {2, INF}


def test_degenerate_k_one():
    for builder in (empty_phi, identity_phi):
        cert = construct(*builder())
        assert cert.k == 1 and len(cert.cover.classes) == 2


def test_certificate_raises_on_conflict():
    with pytest.raises(StageError) as info:
        construct(*broken(), k=5)
    assert info.value.stage == "labels"


def test_certificate_runs_checks():
    cert = certificate(*e1(), samples=20)
    assert cert.report.ok and cert.report["index"].status == "pass"


def test_certificate_kind_override():
    cert = certificate(*e1(), kind="coxeter", samples=10)
    assert cert.target_system.kind == "coxeter"


def test_parse_word_for_kernel_rewrite_round_trip():
    w = parse_word("t a t^-1 t t b t^-1 t^-1")
    assert rewrite_kernel_word(w, "t", 3) == word("a@1", "b@2")
