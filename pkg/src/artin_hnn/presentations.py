"""Finitely presented groups as data.

Relators are stored as single freely reduced words ``u v^-1``.  Every relator
carries a provenance tag so that reports can say where it came from.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .coupling import CoverGraph, LabelFunction
from .errors import HomomorphismError, PresentationError
from .systems import ArtinSystem, LabelPreservingBijection, pair_key
from .words import (
    Word,
    alternating,
    concat,
    cyclic_key,
    free_reduce,
    inverse,
    letter,
    substitute,
)

TAGS = ("artin", "involution", "hnn", "tree-identification", "stable-letter")


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()
    tags: tuple[str, ...] = ()

    def __post_init__(self):
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generators in presentation")
        if len(self.tags) != len(self.relators):
            raise PresentationError("one tag per relator is required")
        gens = set(self.generators)
        for r in self.relators:
            for g, _ in r:
                if g not in gens:
                    raise PresentationError(f"relator uses undeclared generator {g!r}")
        for tag in self.tags:
            if tag not in TAGS:
                raise PresentationError(f"unknown relator tag {tag!r}")

    def relators_tagged(self, tag: str) -> list[Word]:
        return [r for r, t in zip(self.relators, self.tags) if t == tag]

    def relator_classes(self) -> set[Word]:
        return {cyclic_key(r) for r in self.relators} - {()}


class _Builder:
    def __init__(self, generators: Iterable[str]):
        self.generators = list(generators)
        self.relators: list[Word] = []
        self.tags: list[str] = []

    def add(self, rel: Iterable, tag: str) -> None:
        self.relators.append(free_reduce(rel))
        self.tags.append(tag)

    def build(self) -> Presentation:
        return Presentation(tuple(self.generators), tuple(self.relators), tuple(self.tags))


def artin_relator(s: str, t: str, m: int) -> Word:
    """``(s t s ...)(t s t ...)^-1`` with ``m`` letters on each side."""
    return concat(alternating(s, t, m), inverse(alternating(t, s, m)))


def artin_presentation(system: ArtinSystem) -> Presentation:
    b = _Builder(system.generators)
    for s, t, m in system.finite_pairs():
        b.add(artin_relator(s, t, m), "artin")
    if system.kind == "coxeter":
        for s in system.generators:
            b.add(((s, 1), (s, 1)), "involution")
    return b.build()


def fresh_name(base: str, taken: Iterable[str]) -> str:
    taken = set(taken)
    name = base
    while name in taken:
        name += "'"
    return name


def stable_letter_name(system: ArtinSystem) -> str:
    return fresh_name("t", system.generators)


def hnn_presentation(system: ArtinSystem, phi: LabelPreservingBijection, stable: str | None = None) -> Presentation:
    t = stable or stable_letter_name(system)
    base = artin_presentation(system)
    b = _Builder(base.generators + (t,))
    b.relators.extend(base.relators)
    b.tags.extend(base.tags)
    fmap = phi.mapping
    for s in phi.ordered_domain(system):
        b.add(((t, -1), (s, 1), (t, 1), (fmap[s], -1)), "hnn")
    return b.build()


@dataclass(frozen=True)
class GraphOfGroups:
    """A graph of groups with a chosen spanning tree.

    ``edges`` maps an edge id to ``(initial vertex, terminal vertex)``.
    ``attach_init[e]`` / ``attach_term[e]`` send each edge-group generator to
    a word in the initial / terminal vertex group.
    """

    vertices: tuple[str, ...]
    edges: dict[str, tuple[str, str]]
    vertex_groups: dict[str, Presentation]
    edge_groups: dict[str, Presentation]
    attach_init: dict[str, dict[str, Word]]
    attach_term: dict[str, dict[str, Word]]
    spanning_tree: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        for v in self.vertices:
            if v not in self.vertex_groups:
                raise PresentationError(f"vertex {v!r} has no group")
        for e, (a, b) in self.edges.items():
            if a not in self.vertex_groups or b not in self.vertex_groups:
                raise PresentationError(f"edge {e!r} has an unknown endpoint")
            eg = self.edge_groups[e]
            for side, v in ((self.attach_init, a), (self.attach_term, b)):
                images = side[e]
                if set(images) != set(eg.generators):
                    raise PresentationError(f"attaching map of edge {e!r} is not defined on every generator")
                vgens = set(self.vertex_groups[v].generators)
                for img in images.values():
                    for g, _ in img:
                        if g not in vgens:
                            raise PresentationError(
                                f"attaching map of edge {e!r} uses {g!r}, not a generator at vertex {v!r}"
                            )
        self._check_tree()

    def _check_tree(self) -> None:
        parent = {v: v for v in self.vertices}

        def find(v):
            while parent[v] != v:
                v = parent[v]
            return v

        for e in self.spanning_tree:
            if e not in self.edges:
                raise PresentationError(f"tree edge {e!r} is not an edge")
            a, b = map(find, self.edges[e])
            if a == b:
                raise PresentationError("spanning tree contains a cycle")
            parent[a] = b
        if len({find(v) for v in self.vertices}) != 1:
            raise PresentationError("spanning tree does not span the graph")


def mangle(gen: str, vertex: str) -> str:
    return f"{gen}@{vertex}"


def stable_name(edge: str) -> str:
    return f"t@{edge}"


def fundamental_group(gog: GraphOfGroups) -> Presentation:
    gens = [mangle(g, v) for v in gog.vertices for g in gog.vertex_groups[v].generators]
    non_tree = [e for e in gog.edges if e not in gog.spanning_tree]
    b = _Builder(gens + [stable_name(e) for e in non_tree])
    for v in gog.vertices:
        vg = gog.vertex_groups[v]
        ren = {g: letter(mangle(g, v)) for g in vg.generators}
        for r, tag in zip(vg.relators, vg.tags):
            b.add(substitute(r, ren), tag)
    for e, (a, c) in gog.edges.items():
        eg = gog.edge_groups[e]
        ren_a = {g: letter(mangle(g, a)) for g in gog.vertex_groups[a].generators}
        ren_c = {g: letter(mangle(g, c)) for g in gog.vertex_groups[c].generators}
        for g in eg.generators:
            left = substitute(gog.attach_init[e][g], ren_a)
            right = substitute(gog.attach_term[e][g], ren_c)
            if e in gog.spanning_tree:
                b.add(concat(left, inverse(right)), "tree-identification")
            else:
                te = letter(stable_name(e))
                b.add(concat(inverse(te), left, te, inverse(right)), "stable-letter")
    return b.build()


def rename(pres: Presentation, mapping: Mapping[str, str]) -> Presentation:
    ren = {g: letter(mapping.get(g, g)) for g in pres.generators}
    return Presentation(
        tuple(mapping.get(g, g) for g in pres.generators),
        tuple(substitute(r, ren) for r in pres.relators),
        pres.tags,
    )


def eliminate(pres: Presentation, substitution: Mapping[str, Word]) -> Presentation:
    """Tietze-eliminate generators by substitution.

    Relators that become freely trivial are dropped and relators equal up to
    cyclic permutation and inversion are kept once.
    """
    gens = tuple(g for g in pres.generators if g not in substitution)
    rels, tags, seen = [], [], set()
    for r, tag in zip(pres.relators, pres.tags):
        w = substitute(r, substitution)
        key = cyclic_key(w)
        if not key or key in seen:
            continue
        seen.add(key)
        rels.append(w)
        tags.append(tag)
    return Presentation(gens, tuple(rels), tuple(tags))


@dataclass(frozen=True)
class Homomorphism:
    source: Presentation
    target: Presentation
    images: dict[str, Word]
    name: str = "hom"

    def __post_init__(self):
        missing = set(self.source.generators) - set(self.images)
        if missing:
            raise HomomorphismError(f"{self.name}: no image for {sorted(missing)}")
        tg = set(self.target.generators)
        for g, img in self.images.items():
            for x, _ in img:
                if x not in tg:
                    raise HomomorphismError(f"{self.name}: image of {g} uses {x!r}, not a target generator")

    def apply(self, w: Iterable) -> Word:
        return substitute(w, self.images)

    def compose(self, other: "Homomorphism", name: str | None = None) -> "Homomorphism":
        """``other`` after ``self``."""
        images = {g: other.apply(img) for g, img in self.images.items()}
        return Homomorphism(self.source, other.target, images, name or f"{other.name}.{self.name}")


def target_artin(
    system: ArtinSystem,
    phi: LabelPreservingBijection,
    k: int,
    cover: CoverGraph,
    mbar: LabelFunction,
) -> tuple[ArtinSystem, Presentation]:
    """The Artin system on the cover classes plus ``t0 .. t(k-1)``.

    ``t_i`` commutes with ``psi_i(s)`` for ``s`` in the domain of ``phi``; all
    other new pairs are free.
    """
    stables = [f"t{i}" for i in range(k)]
    labels = dict(mbar.labels)
    for i in range(k):
        for s in phi.domain:
            labels[pair_key(stables[i], cover.psi[i][s])] = 2
    sys_ = ArtinSystem(mbar.classes + tuple(stables), labels, "artin")
    return sys_, artin_presentation(sys_)


def doubling_names(k: int) -> list[tuple[str, str]]:
    return [(f"u{i}", f"u{i}'") for i in range(k)]


def target_coxeter(
    system: ArtinSystem,
    phi: LabelPreservingBijection,
    k: int,
    cover: CoverGraph,
    mbar: LabelFunction,
) -> tuple[ArtinSystem, Presentation]:
    """The Coxeter system on the cover classes plus ``u_i, u_i'`` for each ``i``."""
    pairs = doubling_names(k)
    labels = dict(mbar.labels)
    gens = list(mbar.classes)
    for i, (u, u2) in enumerate(pairs):
        gens += [u, u2]
        for s in phi.domain:
            x = cover.psi[i][s]
            labels[pair_key(u, x)] = 2
            labels[pair_key(u2, x)] = 2
    sys_ = ArtinSystem(tuple(gens), labels, "coxeter")
    return sys_, artin_presentation(sys_)
