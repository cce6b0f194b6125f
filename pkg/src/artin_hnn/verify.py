"""Instance-level checks of a constructed embedding.

Every check returns a :class:`CheckResult` with status ``pass``, ``fail`` or
``inconclusive``.  Only ``fail`` blocks a certificate; ``inconclusive`` is
what an oracle says when it runs out of budget or cannot decide.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable

from .coupling import (
    build_coupling_graph,
    build_cover,
    check_cover_invariants,
    collect_witnesses,
    compute_k,
)
from .embedding import (
    EmbeddingCertificate,
    SubgroupDescription,
    delta_k,
    delta_star,
    gamma_k,
    reidemeister_schreier,
)
from .errors import ArtinHNNError, BudgetExhausted, CosetOverflow, UnsupportedOracle
from .oracles import (
    DISTINCT,
    ArtinDistinguisher,
    BrittonOracle,
    RAAGOracle,
    ReductionBudget,
    TitsOracle,
    coset_enumerate,
)
from .presentations import (
    Homomorphism,
    Presentation,
    eliminate,
    fundamental_group,
    hnn_presentation,
    mangle,
    rename,
    stable_name,
)
from .systems import INF, ArtinSystem, LabelPreservingBijection, pair_key
from .words import Word, cyclic_key, exponent_sum, format_word, inverse, letter, power

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"
DEFAULT_MAX_COSETS = 50_000


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    elapsed: float = 0.0
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAIL


@dataclass
class VerificationReport:
    checks: list[CheckResult]
    seed: int
    budgets: dict

    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    def inconclusive(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == INCONCLUSIVE]

    @property
    def ok(self) -> bool:
        return not self.failed()

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self, timings: bool = True) -> dict:
        checks = []
        for c in self.checks:
            d = asdict(c)
            if not timings:
                d.pop("elapsed")
            checks.append(d)
        return {"seed": self.seed, "budgets": dict(self.budgets), "checks": checks}


def _timed(name: str, fn: Callable[[], CheckResult]) -> CheckResult:
    start = time.perf_counter()
    try:
        res = fn()
    except BudgetExhausted as exc:
        res = CheckResult(name, INCONCLUSIVE, str(exc))
    except ArtinHNNError as exc:
        res = CheckResult(name, FAIL, f"{type(exc).__name__}: {exc}")
    res.name = name
    res.elapsed = time.perf_counter() - start
    return res


# -- labels and cover --------------------------------------------------------


def check_well_definedness(system: ArtinSystem, phi: LabelPreservingBijection, k: int | None = None) -> CheckResult:
    """Brute-force scan of all witnesses for every pair of cover classes.

    ``phi`` need not have been label-checked; conflicts are reported.
    """
    lam = build_coupling_graph(system, phi)
    if k is None:
        k = compute_k(lam)
    cover = build_cover(lam, phi, system, k)
    found = collect_witnesses(system, cover)
    conflicts = []
    for key, wits in found.items():
        if len({w[3] for w in wits}) > 1:
            x, y = sorted(key, key=cover.classes.index)
            conflicts.append({"pair": [x, y], "witnesses": [[i, s, t, _lab(v)] for i, s, t, v in wits]})
    conflicts.sort(key=lambda c: c["pair"])
    nwit = sum(len(w) for w in found.values())
    if conflicts:
        first = conflicts[0]
        desc = ", ".join(f"i={i}: m({s},{t})={v}" for i, s, t, v in first["witnesses"])
        return CheckResult(
            "well_definedness",
            FAIL,
            f"{len(conflicts)} class pair(s) with conflicting labels; first {first['pair']}: {desc}",
            data={"conflicts": conflicts},
        )
    return CheckResult(
        "well_definedness", PASS, f"{len(found)} class pairs, {nwit} witnesses, no conflicts"
    )


def check_cover(cert: EmbeddingCertificate) -> CheckResult:
    check_cover_invariants(cert.cover)
    return CheckResult(
        "cover_invariants",
        PASS,
        f"k={cert.k}, {len(cert.cover.classes)} classes; every psi_i injective, "
        "every class meets each layer at most once, each base edge has k lifts",
    )


def check_label_claim(cert: EmbeddingCertificate) -> CheckResult:
    holds, got, allowed = cert.label_claim()
    detail = f"target labels {_labels(got)} within {_labels(allowed)}"
    if cert.target_system.kind == "artin" and cert.system.is_right_angled:
        detail += "; right-angled input gives right-angled target"
    return CheckResult("label_set", PASS if holds else FAIL, detail, data={"labels": _labels(got)})


def check_relator_count(cert: EmbeddingCertificate) -> CheckResult:
    finite = len(cert.mbar.labels)
    new = cert.k * len(cert.phi)
    expected = finite + new
    if cert.kind == "coxeter":
        new *= 2
        expected = finite + new + len(cert.target_system.generators)
    got = len(cert.target.relators)
    status = PASS if got == expected else FAIL
    return CheckResult("relator_count", status, f"{got} target relators, expected {expected}")


# -- homomorphisms -----------------------------------------------------------


def _oracle_for(system: ArtinSystem, choice: str, budget: ReductionBudget | None):
    if choice == "auto":
        if system.kind == "coxeter":
            choice = "tits"
        elif system.is_right_angled:
            choice = "raag"
        else:
            choice = "distinguish"
    if choice == "tits":
        return choice, TitsOracle(system, budget)
    if choice == "raag":
        return choice, RAAGOracle(system)
    if choice == "distinguish":
        return choice, ArtinDistinguisher(system, budget)
    if choice == "structural":
        return choice, None
    raise ValueError(f"unknown oracle {choice!r}")


def check_homomorphism(
    hom: Homomorphism,
    target_system: ArtinSystem | None = None,
    oracle: str = "auto",
    budget: ReductionBudget | None = None,
    name: str | None = None,
) -> CheckResult:
    """Verify that every source relator maps to a trivial word.

    Structural first: the image's cyclic reduction is empty or matches a
    target relator up to rotation and inversion.  Otherwise the oracle
    decides; a distinguisher can only prove failure.
    """
    name = name or f"hom_{hom.name}"
    classes = hom.target.relator_classes()
    if target_system is None and oracle != "structural":
        oracle = "structural"
    choice, orc = (oracle, None) if target_system is None else _oracle_for(target_system, oracle, budget)
    structural = by_oracle = 0
    failures, undecided = [], []
    for r in hom.source.relators:
        img = hom.apply(r)
        key = cyclic_key(img)
        if not key or key in classes:
            structural += 1
            continue
        try:
            if choice in ("tits", "raag"):
                trivial = orc.is_identity(img)
            elif choice == "distinguish":
                trivial = None if orc.distinguish(img, ()) != DISTINCT else False
            else:
                trivial = None
        except BudgetExhausted:
            trivial = None
        if trivial:
            by_oracle += 1
        elif trivial is None:
            undecided.append((r, img))
        else:
            failures.append((r, img))
    data = {"structural": structural, "oracle": by_oracle, "oracle_kind": choice}
    if failures:
        r, img = failures[0]
        return CheckResult(
            name,
            FAIL,
            f"{len(failures)} relator image(s) nontrivial; first: {format_word(r)} -> {format_word(img)}",
            data=data,
        )
    if undecided:
        r, img = undecided[0]
        return CheckResult(
            name,
            INCONCLUSIVE,
            f"{len(undecided)} relator image(s) undecided; first: {format_word(r)} -> {format_word(img)}",
            data=data,
        )
    return CheckResult(
        name,
        PASS,
        f"{len(hom.source.relators)} relators respected ({structural} structurally, {by_oracle} by {choice})",
        data=data,
    )


def check_theta_stable_order(cert: EmbeddingCertificate, n_max: int = 8, budget: ReductionBudget | None = None) -> CheckResult:
    """Each ``theta(t_i) = u_i u_i'`` has no power ``1 <= n <= n_max`` equal to 1."""
    oracle = TitsOracle(cert.target_system, budget)
    for g in cert.theta_doubling.source.generators:
        if not g.startswith("t") or g not in {f"t{i}" for i in range(cert.k)}:
            continue
        img = cert.theta_doubling.images[g]
        for n in range(1, n_max + 1):
            if oracle.is_identity(power(img, n)):
                return CheckResult("theta_stable_order", FAIL, f"theta({g})^{n} = 1")
    return CheckResult("theta_stable_order", PASS, f"theta(t_i)^n != 1 for 1 <= n <= {n_max}, all i")


# -- presentations of the kernel ---------------------------------------------


def _compare_presentations(name: str, a: Presentation, b: Presentation, what: str) -> CheckResult:
    if set(a.generators) != set(b.generators):
        diff = sorted(set(a.generators) ^ set(b.generators))
        return CheckResult(name, FAIL, f"{what}: generator sets differ on {diff}")
    ca, cb = a.relator_classes(), b.relator_classes()
    if ca != cb:
        only_a, only_b = len(ca - cb), len(cb - ca)
        return CheckResult(name, FAIL, f"{what}: {only_a} relator classes only on the left, {only_b} only on the right")
    return CheckResult(name, PASS, f"{what}: {len(a.generators)} generators, {len(ca)} relator classes agree")


def check_hnn_graph(cert: EmbeddingCertificate) -> CheckResult:
    """pi_1 of the one-vertex self-loop reproduces the HNN presentation exactly."""
    gog = delta_k(cert.system, cert.phi, 1)
    pres = fundamental_group(gog)
    stable = cert.kernel.stable
    mapping = {mangle(s, "0"): s for s in cert.system.generators}
    mapping[stable_name("0")] = stable
    ren = rename(pres, mapping)
    hnn = hnn_presentation(cert.system, cert.phi, stable)
    if ren.generators == hnn.generators and ren.relators == hnn.relators:
        return CheckResult("hnn_graph_of_groups", PASS, f"{len(hnn.relators)} relators match letter for letter")
    return CheckResult("hnn_graph_of_groups", FAIL, "self-loop fundamental group differs from the HNN presentation")


def check_kernel_cross(cert: EmbeddingCertificate) -> CheckResult:
    """The cycle graph-of-groups presentation and the Reidemeister-Schreier
    presentation of the kernel define the same group on the same generators."""
    rs = reidemeister_schreier(cert.kernel)
    gog = cert.kernel.subgroup_presentation
    ident = {g: letter(g) for g in gog.generators}
    there = check_homomorphism(Homomorphism(gog, rs, ident, "id"), oracle="structural")
    back = check_homomorphism(Homomorphism(rs, gog, ident, "id"), oracle="structural")
    if there.status == PASS and back.status == PASS:
        return CheckResult(
            "kernel_reidemeister_schreier",
            PASS,
            f"{len(gog.relators)} graph relators and {len(rs.relators)} rewritten relators map into each other",
        )
    bad = there if there.status != PASS else back
    return CheckResult("kernel_reidemeister_schreier", FAIL, bad.detail)


def check_delta_star(cert: EmbeddingCertificate) -> CheckResult:
    """Collapsing the tree of the augmented cycle gives the rose presentation."""
    dstar = delta_star(cert.system, cert.phi, cert.cover, cert.mbar)
    pres = fundamental_group(dstar)
    subst = {
        mangle(s, str(i)): letter(mangle(cert.cover.psi[i][s], "*"))
        for i in range(cert.k)
        for s in cert.system.generators
    }
    collapsed = eliminate(pres, subst)
    rose = fundamental_group(gamma_k(cert.system, cert.phi, cert.cover, cert.mbar))
    res = _compare_presentations("delta_star_collapse", collapsed, rose, "augmented cycle vs rose")
    return res


def check_rose_is_target(cert: EmbeddingCertificate) -> CheckResult:
    """In the Artin case each stable-letter relator of the rose is a commutator,
    so the rose group is the target Artin group."""
    for i in range(cert.k):
        for s in cert.phi.domain:
            nxt = cert.cover.psi[(i + 1) % cert.k][cert.phi.mapping[s]]
            if cert.cover.psi[i][s] != nxt:
                return CheckResult("rose_is_artin", FAIL, f"psi_{i}({s}) != psi_{i + 1}(phi({s}))")
    return _compare_presentations("rose_is_artin", cert.gstar, cert.target, "rose vs target Artin group")


# -- index ------------------------------------------------------------------


def check_index(cert: EmbeddingCertificate, max_cosets: int = DEFAULT_MAX_COSETS) -> CheckResult:
    kernel: SubgroupDescription = cert.kernel
    k = kernel.k
    bad = [g for g, w in kernel.generator_words.items() if exponent_sum(w, kernel.stable) % k]
    if bad:
        return CheckResult("index", FAIL, f"generators outside the kernel of rho: {bad}")
    try:
        table = coset_enumerate(kernel.ambient, list(kernel.generator_words.values()), max_cosets)
    except CosetOverflow as exc:
        return CheckResult(
            "index", INCONCLUSIVE, f"exponent sums all divisible by {k} (index >= {k}); coset enumeration: {exc}"
        )
    reps = {table.act(0, w) for w in kernel.transversal}
    data = {"index": table.index, "cosets_defined": table.cosets_defined}
    if table.index != k or len(reps) != k:
        return CheckResult(
            "index", FAIL, f"coset enumeration gives index {table.index}, transversal hits {len(reps)} cosets; expected {k}", data=data
        )
    return CheckResult("index", PASS, f"index {k}; transversal t^0..t^{k - 1} hits every coset", data=data)


# -- injectivity evidence ---------------------------------------------------


def _source_oracle(cert: EmbeddingCertificate, budget):
    """Britton oracle on the HNN-extension, or on its Coxeter quotient when
    the base is a general Artin group (then only sufficient for distinctness)."""
    sys_ = cert.system
    exact = sys_.kind == "coxeter" or sys_.is_right_angled
    if not exact:
        sys_ = sys_.with_kind("coxeter")
    return BrittonOracle(sys_, cert.phi, cert.kernel.stable, budget), exact


def sample_kernel_words(
    cert: EmbeddingCertificate,
    count: int,
    max_syllables: int,
    seed: int,
    budget: ReductionBudget | None = None,
    max_piece: int = 3,
    max_attempts: int | None = None,
) -> list[Word]:
    """Pairwise-distinct Britton-reduced words with t-exponent sum divisible by k.

    A word alternates random base pieces (at most ``max_piece`` letters) with
    at most ``max_syllables`` stable letters.
    """
    rng = random.Random(seed)
    oracle, exact = _source_oracle(cert, budget)
    gens = cert.system.generators
    signs = (1,) if cert.kind == "coxeter" else (1, -1)
    stable, k = cert.kernel.stable, cert.k
    max_attempts = max_attempts or 200 * count
    kept: list[Word] = []
    for _ in range(max_attempts):
        if len(kept) >= count:
            break
        n = rng.randint(0, max_syllables)
        exps = [rng.choice((1, -1)) for _ in range(n)]
        if sum(exps) % k:
            continue
        w = []
        for j in range(n + 1):
            w.extend((rng.choice(gens), rng.choice(signs)) for _ in range(rng.randint(0, max_piece)))
            if j < n:
                w.append((stable, exps[j]))
        form = oracle.reduce(w)
        if exact:
            cand = form.word
        else:
            # keep the word itself; no pinch even in the quotient means none in the group
            if form.stable_length != n:
                continue
            cand = tuple(w)
        if any(oracle.equal(cand, v) for v in kept):
            continue
        kept.append(cand)
    return kept


def check_injectivity_samples(
    cert: EmbeddingCertificate,
    count: int = 100,
    max_syllables: int = 4,
    seed: int = 0,
    budget: ReductionBudget | None = None,
    hom: Homomorphism | None = None,
) -> CheckResult:
    name = "injectivity_samples"
    hom = hom or cert.embedding
    words = sample_kernel_words(cert, count, max_syllables, seed, budget)
    images = [hom.apply(cert.kernel.rewrite(w)) for w in words]
    tsys = cert.target_system
    choice, orc = _oracle_for(tsys, "auto", budget)
    data = {"samples": len(words), "oracle_kind": choice}
    collisions, inconclusive = [], 0
    if choice in ("tits", "raag"):
        norm = orc.canonical if choice == "tits" else orc.normal_form
        seen: dict[Word, int] = {}
        for n, img in enumerate(images):
            nf = norm(img)
            if nf in seen:
                collisions.append((seen[nf], n))
            else:
                seen[nf] = n
    else:
        sigs = [orc.signature(img) for img in images]
        for a in range(len(sigs)):
            for b in range(a + 1, len(sigs)):
                if orc.compare(sigs[a], sigs[b]) != DISTINCT:
                    inconclusive += 1
    data.update({"collisions": len(collisions), "inconclusive_pairs": inconclusive})
    if collisions:
        a, b = collisions[0]
        return CheckResult(
            name,
            FAIL,
            f"{len(collisions)} collision(s); e.g. {format_word(words[a])} and {format_word(words[b])} have equal images",
            data=data,
        )
    if len(words) < count:
        return CheckResult(name, INCONCLUSIVE, f"only {len(words)} of {count} distinct samples found", data=data)
    if inconclusive:
        return CheckResult(
            name, INCONCLUSIVE, f"{len(words)} samples, {inconclusive} image pairs not separated by the distinguisher", data=data
        )
    return CheckResult(name, PASS, f"{len(words)} distinct kernel words have pairwise distinct images ({choice})", data=data)


# -- driver -----------------------------------------------------------------


def run_checks(
    cert: EmbeddingCertificate,
    samples: int = 100,
    max_syllables: int = 4,
    seed: int = 0,
    budget: ReductionBudget | None = None,
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> VerificationReport:
    """Every check, in a fixed order."""
    budget = budget or ReductionBudget()
    tsys = cert.target_system
    steps: list[tuple[str, Callable[[], CheckResult]]] = [
        ("well_definedness", lambda: check_well_definedness(cert.system, cert.phi, cert.k)),
        ("cover_invariants", lambda: check_cover(cert)),
        ("hnn_graph_of_groups", lambda: check_hnn_graph(cert)),
        ("kernel_reidemeister_schreier", lambda: check_kernel_cross(cert)),
        ("index", lambda: check_index(cert, max_cosets)),
        ("delta_star_collapse", lambda: check_delta_star(cert)),
    ]
    if cert.kind == "artin":
        steps += [
            ("rose_is_artin", lambda: check_rose_is_target(cert)),
            ("eta_relators", lambda: check_homomorphism(cert.eta, tsys, "auto", budget)),
        ]
    else:
        steps += [
            ("eta_relators", lambda: check_homomorphism(cert.eta, None, "structural")),
            ("theta_relators", lambda: check_homomorphism(cert.theta_doubling, tsys, "tits", budget)),
            ("theta_stable_order", lambda: check_theta_stable_order(cert, budget=budget)),
        ]
    steps += [
        ("label_set", lambda: check_label_claim(cert)),
        ("relator_count", lambda: check_relator_count(cert)),
    ]
    if samples > 0:
        steps.append(
            ("injectivity_samples", lambda: check_injectivity_samples(cert, samples, max_syllables, seed, budget))
        )
    checks = [_timed(name, fn) for name, fn in steps]
    budgets = {
        "max_states": budget.max_states,
        "max_length": budget.max_length,
        "max_cosets": max_cosets,
        "samples": samples,
        "max_syllables": max_syllables,
    }
    return VerificationReport(checks, seed, budgets)


def _lab(v):
    return "inf" if v == INF else v


def _labels(labels: Iterable) -> list:
    return sorted((_lab(v) for v in labels), key=lambda v: (v == "inf", v if v != "inf" else 0))
