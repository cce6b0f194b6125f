"""The index-k subgroup of an Artin/Coxeter HNN-extension and its embedding.

Pipeline::

    (S, m, phi) -> coupling graph -> k -> cover -> labels on classes
                -> kernel K = pi_1 of the k-cycle graph of groups
                -> eta : K -> G* (an Artin group, or pi_1 of the rose in the
                   Coxeter case) -> theta : G* -> W+ (Coxeter case only)

Naming conventions: vertex ``i`` of the k-cycle is ``"i"``; the copy of a
base generator ``s`` at vertex ``i`` is ``"s@i"``; the one stable letter of
the k-cycle (on the edge ``k-1 -> 0``) is ``"t@{k-1}"``.  In the target, the
cover class of ``(i, s)`` is ``"s_i"`` and the stable letters are ``t0 ..``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .coupling import (
    CouplingGraph,
    CoverGraph,
    LabelFunction,
    build_coupling_graph,
    build_cover,
    build_label_function,
    compute_k,
)
from .errors import ArtinHNNError, StageError
from .presentations import (
    GraphOfGroups,
    Homomorphism,
    Presentation,
    artin_presentation,
    doubling_names,
    fundamental_group,
    hnn_presentation,
    mangle,
    rename,
    stable_letter_name,
    stable_name,
    target_artin,
    target_coxeter,
)
from .systems import INF, ArtinSystem, LabelPreservingBijection, label_set
from .words import EMPTY, Word, concat, exponent_sum, inverse, letter, power


def delta_k(system: ArtinSystem, phi: LabelPreservingBijection, k: int) -> GraphOfGroups:
    """The directed k-cycle with copies of the base group and associated subgroup.

    The spanning tree is the path ``0 -> 1 -> ... -> k-1``; for ``k = 1`` this
    is the self-loop whose fundamental group is the HNN-extension itself.
    """
    vg = artin_presentation(system)
    eg = artin_presentation(system.restrict(phi.domain))
    fmap = phi.mapping
    vertices = tuple(str(i) for i in range(k))
    edges = {str(i): (str(i), str((i + 1) % k)) for i in range(k)}
    return GraphOfGroups(
        vertices=vertices,
        edges=edges,
        vertex_groups={v: vg for v in vertices},
        edge_groups={e: eg for e in edges},
        attach_init={e: {s: letter(s) for s in eg.generators} for e in edges},
        attach_term={e: {s: letter(fmap[s]) for s in eg.generators} for e in edges},
        spanning_tree=frozenset(str(i) for i in range(k - 1)),
    )


def gamma_k(
    system: ArtinSystem,
    phi: LabelPreservingBijection,
    cover: CoverGraph,
    mbar: LabelFunction,
) -> GraphOfGroups:
    """The k-leaved rose with vertex group on the cover classes."""
    k = cover.k
    vstar = artin_presentation(mbar.as_system(system.kind))
    eg = artin_presentation(system.restrict(phi.domain))
    fmap = phi.mapping
    edges = {str(i): ("*", "*") for i in range(k)}
    return GraphOfGroups(
        vertices=("*",),
        edges=edges,
        vertex_groups={"*": vstar},
        edge_groups={e: eg for e in edges},
        attach_init={str(i): {s: letter(cover.psi[i][s]) for s in eg.generators} for i in range(k)},
        attach_term={
            str(i): {s: letter(cover.psi[(i + 1) % k][fmap[s]]) for s in eg.generators} for i in range(k)
        },
        spanning_tree=frozenset(),
    )


def delta_star(
    system: ArtinSystem,
    phi: LabelPreservingBijection,
    cover: CoverGraph,
    mbar: LabelFunction,
) -> GraphOfGroups:
    """The k-cycle with an extra vertex ``*`` joined to every vertex.

    Tree: the k edges ``i -> *``, whose edge groups are full copies of the
    base group attached by the identity and by ``psi_i``.
    """
    k = cover.k
    cyc = delta_k(system, phi, k)
    vg = artin_presentation(system)
    vstar = artin_presentation(mbar.as_system(system.kind))
    edges = dict(cyc.edges)
    edge_groups = dict(cyc.edge_groups)
    attach_init = dict(cyc.attach_init)
    attach_term = dict(cyc.attach_term)
    for i in range(k):
        e = f"{i}*"
        edges[e] = (str(i), "*")
        edge_groups[e] = vg
        attach_init[e] = {s: letter(s) for s in vg.generators}
        attach_term[e] = {s: letter(cover.psi[i][s]) for s in vg.generators}
    vertex_groups = dict(cyc.vertex_groups)
    vertex_groups["*"] = vstar
    return GraphOfGroups(
        vertices=cyc.vertices + ("*",),
        edges=edges,
        vertex_groups=vertex_groups,
        edge_groups=edge_groups,
        attach_init=attach_init,
        attach_term=attach_term,
        spanning_tree=frozenset(f"{i}*" for i in range(k)),
    )


def rose_presentation(gamma: GraphOfGroups, k: int) -> Presentation:
    """pi_1 of the rose with the ``@*`` mangling removed and ``t@i`` renamed ``ti``."""
    pres = fundamental_group(gamma)
    mapping = {mangle(x, "*"): x for x in gamma.vertex_groups["*"].generators}
    mapping.update({stable_name(str(i)): f"t{i}" for i in range(k)})
    return rename(pres, mapping)


@dataclass(frozen=True)
class SubgroupDescription:
    ambient: Presentation
    stable: str
    k: int
    transversal: tuple[Word, ...]
    generator_words: dict[str, Word]
    subgroup_presentation: Presentation
    graph: GraphOfGroups = field(repr=False)

    @property
    def kernel_stable(self) -> str:
        return stable_name(str(self.k - 1))

    def rewrite(self, w: Iterable) -> Word:
        return rewrite_kernel_word(w, self.stable, self.k)


def rewrite_kernel_word(w: Iterable, stable: str, k: int) -> Word:
    """Reidemeister rewriting of an ambient word into kernel generators.

    Uses the transversal ``1, t, ..., t^(k-1)``; raises ``ValueError`` if the
    word's t-exponent sum is not divisible by ``k``.
    """
    u = stable_name(str(k - 1))
    coset = 0
    out = []
    for g, e in w:
        if g == stable:
            if e == 1:
                if coset == k - 1:
                    out.append((u, 1))
                coset = (coset + 1) % k
            else:
                if coset == 0:
                    out.append((u, -1))
                coset = (coset - 1) % k
        else:
            out.append((mangle(g, str(coset)), e))
    if coset != 0:
        raise ValueError(f"word has t-exponent sum not divisible by k={k}")
    return concat(out)


def kernel_subgroup(system: ArtinSystem, phi: LabelPreservingBijection, k: int) -> SubgroupDescription:
    stable = stable_letter_name(system)
    ambient = hnn_presentation(system, phi, stable)
    graph = delta_k(system, phi, k)
    pres = fundamental_group(graph)
    t = letter(stable)
    words: dict[str, Word] = {}
    for i in range(k):
        conj = power(t, i)
        for s in system.generators:
            words[mangle(s, str(i))] = concat(conj, letter(s), inverse(conj))
    words[stable_name(str(k - 1))] = power(t, k)
    for g, w in words.items():
        if exponent_sum(w, stable) % k:
            raise ArtinHNNError(f"kernel generator {g} has t-exponent sum not divisible by {k}")
    transversal = tuple(power(t, i) for i in range(k))
    return SubgroupDescription(ambient, stable, k, transversal, words, pres, graph)


def reidemeister_schreier(kernel: SubgroupDescription) -> Presentation:
    """Presentation of the kernel from the ambient one, rewriting every
    conjugate ``t^i R t^-i`` of every ambient relator."""
    k, stable = kernel.k, kernel.stable
    base = [g for g in kernel.ambient.generators if g != stable]
    gens = [mangle(s, str(i)) for i in range(k) for s in base] + [stable_name(str(k - 1))]
    rels, tags = [], []
    t = letter(stable)
    for i in range(k):
        conj = power(t, i)
        for r, tag in zip(kernel.ambient.relators, kernel.ambient.tags):
            rels.append(rewrite_kernel_word(conj + r + inverse(conj), stable, k))
            tags.append("stable-letter" if tag == "hnn" and i == 0 else "tree-identification" if tag == "hnn" else tag)
    return Presentation(tuple(gens), tuple(rels), tuple(tags))


def path_words(k: int, stable_image) -> list[Word]:
    """``P_i = image(t_0) ... image(t_(i-1))`` for ``i = 0 .. k``."""
    out = [EMPTY]
    for i in range(k):
        out.append(concat(out[-1], stable_image(i)))
    return out


def embed_kernel(
    kernel: SubgroupDescription,
    cover: CoverGraph,
    target: Presentation,
    stable_image=None,
    name: str = "eta",
) -> Homomorphism:
    """The embedding of the kernel into the rose group.

    The copy of ``s`` at vertex ``i`` goes to ``P_i psi_i(s) P_i^-1`` and the
    kernel's stable letter to ``P_k``, where ``P_i`` is the image of the tree
    path ``0 -> i``: the product of the rose's stable letters ``t_0 .. t_(i-1)``.
    ``stable_image(i)`` gives the image of ``t_i`` (default: the letter ``ti``).
    """
    k = cover.k
    if stable_image is None:
        stable_image = lambda i: letter(f"t{i}")  # noqa: E731
    paths = path_words(k, stable_image)
    images: dict[str, Word] = {}
    base = [g for g in kernel.ambient.generators if g != kernel.stable]
    for i in range(k):
        for s in base:
            images[mangle(s, str(i))] = concat(paths[i], letter(cover.psi[i][s]), inverse(paths[i]))
    images[kernel.kernel_stable] = paths[k]
    return Homomorphism(kernel.subgroup_presentation, target, images, name)


def coxeter_doubling(gstar: Presentation, wplus: Presentation, k: int) -> Homomorphism:
    """theta: fixes the cover classes and sends ``t_i`` to ``u_i u_i'``."""
    stables = {f"t{i}": i for i in range(k)}
    pairs = doubling_names(k)
    images = {}
    for g in gstar.generators:
        if g in stables:
            u, u2 = pairs[stables[g]]
            images[g] = ((u, 1), (u2, 1))
        else:
            images[g] = letter(g)
    return Homomorphism(gstar, wplus, images, "theta")


@dataclass
class EmbeddingCertificate:
    system: ArtinSystem
    phi: LabelPreservingBijection
    coupling: CouplingGraph
    k: int
    cover: CoverGraph
    mbar: LabelFunction
    kernel: SubgroupDescription
    gstar: Presentation
    target_system: ArtinSystem
    target: Presentation
    eta: Homomorphism
    theta_doubling: Homomorphism | None = None
    report: object = None

    @property
    def kind(self) -> str:
        return self.system.kind

    @property
    def embedding(self) -> Homomorphism:
        """The composite from the kernel into the final Artin/Coxeter group."""
        if self.theta_doubling is None:
            return self.eta
        return self.eta.compose(self.theta_doubling, "theta.eta")

    def label_claim(self) -> tuple[bool, set, set]:
        """``(holds, target labels, allowed labels)``."""
        allowed = label_set(self.system) | {2, INF}
        got = label_set(self.target_system)
        return got <= allowed, got, allowed


def _stage(name: str, fn, *args):
    try:
        return fn(*args)
    except StageError:
        raise
    except ArtinHNNError as exc:
        raise StageError(name, exc) from exc


def construct(system: ArtinSystem, phi: LabelPreservingBijection, k: int | None = None) -> EmbeddingCertificate:
    """Run every construction stage; no verification."""
    lam = _stage("coupling", build_coupling_graph, system, phi)
    if k is None:
        k = compute_k(lam)
    cover = _stage("cover", build_cover, lam, phi, system, k)
    mbar = _stage("labels", build_label_function, system, cover)
    kernel = _stage("kernel", kernel_subgroup, system, phi, k)
    gamma = _stage("rose", gamma_k, system, phi, cover, mbar)
    gstar = _stage("rose", rose_presentation, gamma, k)
    if system.kind == "artin":
        tsys, tpres = _stage("target", target_artin, system, phi, k, cover, mbar)
        eta = _stage("eta", embed_kernel, kernel, cover, tpres)
        theta = None
    else:
        tsys, tpres = _stage("target", target_coxeter, system, phi, k, cover, mbar)
        eta = _stage("eta", embed_kernel, kernel, cover, gstar)
        theta = _stage("theta", coxeter_doubling, gstar, tpres, k)
    return EmbeddingCertificate(system, phi, lam, k, cover, mbar, kernel, gstar, tsys, tpres, eta, theta)


def certificate(system: ArtinSystem, phi: LabelPreservingBijection, kind: str | None = None, k: int | None = None, **verify_options) -> EmbeddingCertificate:
    """Construct, verify and return a certificate.

    Raises :class:`StageError` if a construction stage or any check fails;
    inconclusive checks are kept in the report but do not block.
    """
    from .verify import run_checks

    if kind is not None and kind != system.kind:
        system = system.with_kind(kind)
    cert = construct(system, phi, k)
    report = run_checks(cert, **verify_options)
    cert.report = report
    failed = report.failed()
    if failed:
        raise StageError(
            "verify", ArtinHNNError("; ".join(f"{c.name}: {c.detail}" for c in failed))
        )
    return cert
