"""Coupling graph of a partial bijection, its k-fold cover and the induced labels.

The coupling graph has an edge ``s -> phi(s)`` for each ``s`` in the domain
of ``phi``.  Its k-fold cover lives on ``Z/k x S`` with edges
``(i, s) -> (i+1, phi(s))``; the connected components of the cover are the
generators of the big Artin group, and ``psi[i][s]`` is the component
containing ``(i, s)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations

from .errors import ConstructionError, InvalidCoverIndex, LabelConflict
from .systems import INF, ArtinSystem, LabelPreservingBijection, pair_key

Vertex = tuple[int, str]


@dataclass(frozen=True)
class CouplingGraph:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    loops: tuple[tuple[str, ...], ...]
    paths: tuple[tuple[str, ...], ...]

    @property
    def loop_lengths(self) -> list[int]:
        return [len(c) for c in self.loops]

    @property
    def path_lengths(self) -> list[int]:
        # a path is stored as its vertex sequence
        return [len(p) - 1 for p in self.paths]


def build_coupling_graph(system: ArtinSystem, phi: LabelPreservingBijection) -> CouplingGraph:
    succ = phi.mapping
    pred = phi.inverse_mapping
    seen: set[str] = set()
    paths = []
    for s in system.generators:
        if s in pred:
            continue
        path = [s]
        while path[-1] in succ:
            path.append(succ[path[-1]])
        seen.update(path)
        paths.append(tuple(path))
    loops = []
    for s in system.generators:
        if s in seen:
            continue
        # every remaining vertex has a predecessor, so it lies on a cycle
        cycle = [s]
        nxt = succ[s]
        while nxt != s:
            cycle.append(nxt)
            nxt = succ[nxt]
        seen.update(cycle)
        loops.append(tuple(cycle))
    edges = tuple((s, succ[s]) for s in phi.ordered_domain(system))
    return CouplingGraph(system.generators, edges, tuple(loops), tuple(paths))


def k_is_valid(graph: CouplingGraph, k: int) -> bool:
    if k < 1:
        return False
    if any(k % n for n in graph.loop_lengths):
        return False
    return all(k > 2 * n for n in graph.path_lengths)


def compute_k(graph: CouplingGraph) -> int:
    """Smallest common multiple of the loop lengths exceeding twice every path length."""
    step = reduce(math.lcm, graph.loop_lengths, 1)
    bound = 2 * max(graph.path_lengths, default=0)
    return step * (bound // step + 1)


@dataclass(frozen=True)
class CoverGraph:
    system: ArtinSystem
    phi: LabelPreservingBijection
    k: int
    edges: tuple[tuple[Vertex, Vertex], ...]
    classes: tuple[str, ...]
    members: dict[str, tuple[Vertex, ...]]
    psi: tuple[dict[str, str], ...]
    class_of: dict[Vertex, str] = field(repr=False)

    @property
    def vertices(self) -> list[Vertex]:
        return [(i, s) for i in range(self.k) for s in self.system.generators]

    @staticmethod
    def project_base(v: Vertex) -> str:
        return v[1]

    @staticmethod
    def project_cycle(v: Vertex) -> int:
        return v[0]


def class_name(i: int, s: str) -> str:
    return f"{s}_{i}"


def build_cover(graph: CouplingGraph, phi: LabelPreservingBijection, system: ArtinSystem, k: int) -> CoverGraph:
    if not k_is_valid(graph, k):
        raise InvalidCoverIndex(
            f"k={k} must be a multiple of every loop length {graph.loop_lengths} "
            f"and exceed twice every path length {graph.path_lengths}"
        )
    gens = system.generators
    order = {s: n for n, s in enumerate(gens)}
    succ = phi.mapping
    parent: dict[Vertex, Vertex] = {(i, s): (i, s) for i in range(k) for s in gens}

    def find(v: Vertex) -> Vertex:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def key(v: Vertex):
        return (v[0], order[v[1]])

    edges = []
    for i in range(k):
        for s in phi.ordered_domain(system):
            u, v = (i, s), ((i + 1) % k, succ[s])
            edges.append((u, v))
            ru, rv = find(u), find(v)
            if ru != rv:
                if key(rv) < key(ru):
                    ru, rv = rv, ru
                parent[rv] = ru

    groups: dict[Vertex, list[Vertex]] = {}
    for i in range(k):
        for s in gens:
            groups.setdefault(find((i, s)), []).append((i, s))
    members: dict[str, tuple[Vertex, ...]] = {}
    class_of: dict[Vertex, str] = {}
    for root in sorted(groups, key=key):
        verts = tuple(sorted(groups[root], key=key))
        name = class_name(*verts[0])
        members[name] = verts
        for v in verts:
            class_of[v] = name
    classes = tuple(members)
    psi = tuple({s: class_of[(i, s)] for s in gens} for i in range(k))
    cover = CoverGraph(system, phi, k, tuple(edges), classes, members, psi, class_of)
    check_cover_invariants(cover)
    return cover


def check_cover_invariants(cover: CoverGraph) -> None:
    """Raise :class:`ConstructionError` if the cover is malformed."""
    k = cover.k
    for name, verts in cover.members.items():
        layers = [i for i, _ in verts]
        if len(set(layers)) != len(layers):
            raise ConstructionError(f"class {name} meets some layer twice: {verts}")
        if len(verts) > k:
            raise ConstructionError(f"class {name} has {len(verts)} > k members")
    for i, table in enumerate(cover.psi):
        if len(set(table.values())) != len(table):
            raise ConstructionError(f"psi_{i} is not injective")
    base_edges = {(s, cover.phi.mapping[s]) for s in cover.phi.domain}
    counts: dict[tuple[str, str], int] = {}
    for (i, s), (j, t) in cover.edges:
        if (s, t) not in base_edges or j != (i + 1) % k:
            raise ConstructionError(f"cover edge {(i, s)}->{(j, t)} does not project to an edge")
        counts[(s, t)] = counts.get((s, t), 0) + 1
    if any(counts.get(e, 0) != k for e in base_edges):
        raise ConstructionError("some base edge does not have exactly k lifts")


@dataclass(frozen=True)
class LabelFunction:
    classes: tuple[str, ...]
    labels: dict[frozenset, int]
    witnesses: dict[frozenset, tuple[tuple[int, str, str, object], ...]]

    def m(self, x: str, y: str):
        return self.labels.get(pair_key(x, y), INF)

    def as_system(self, kind: str = "artin") -> ArtinSystem:
        return ArtinSystem(self.classes, dict(self.labels), kind)


def collect_witnesses(system: ArtinSystem, cover: CoverGraph):
    """Every ``(i, s, t, m(s,t))`` realising a pair ``{psi_i(s), psi_i(t)}``."""
    found: dict[frozenset, list] = {}
    for i, table in enumerate(cover.psi):
        for s, t in combinations(system.generators, 2):
            x, y = table[s], table[t]
            found.setdefault(pair_key(x, y), []).append((i, s, t, system.m(s, t)))
    return found


def build_label_function(system: ArtinSystem, cover: CoverGraph) -> LabelFunction:
    """Labels on cover classes; unwitnessed pairs get ``INF``.

    Raises :class:`LabelConflict` if two witnesses disagree, which cannot
    happen when ``phi`` preserves labels.
    """
    found = collect_witnesses(system, cover)
    labels: dict[frozenset, int] = {}
    for key, wits in found.items():
        values = {w[3] for w in wits}
        if len(values) > 1:
            x, y = sorted(key, key=cover.classes.index)
            raise LabelConflict((x, y), wits)
        (value,) = values
        if value != INF:
            labels[key] = value
    witnesses = {key: tuple(w) for key, w in found.items()}
    return LabelFunction(cover.classes, labels, witnesses)
