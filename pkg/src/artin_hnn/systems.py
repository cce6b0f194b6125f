"""Artin/Coxeter systems and label-preserving partial bijections."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    BadGeneratorName,
    ContradictoryLabels,
    DuplicateGenerator,
    InvalidLabel,
    LabelMismatch,
    RepeatedSource,
    RepeatedTarget,
    SelfPairLabel,
    UnknownGenerator,
    ValidationError,
)

INF = math.inf
KINDS = ("artin", "coxeter")

# '@' and '*' are reserved for name-mangling inside graph-of-groups presentations.
_NAME_RE = re.compile(r"^[A-Za-z0-9_'.]+$")


def pair_key(s: str, t: str) -> frozenset[str]:
    return frozenset((s, t))


@dataclass(frozen=True, eq=True)
class ArtinSystem:
    """A finite generating set with a symmetric label function.

    Only finite labels are stored; an absent pair has label ``INF``.
    ``kind`` selects whether the system is read as an Artin or a Coxeter
    group (the latter adds ``s^2 = 1`` for every generator).
    """

    generators: tuple[str, ...]
    labels: Mapping[frozenset, int] = field(default_factory=dict)
    kind: str = "artin"

    __hash__ = None  # labels is a dict

    def m(self, s: str, t: str):
        if s == t:
            raise ValueError(f"no label for the pair ({s},{s})")
        return self.labels.get(pair_key(s, t), INF)

    def index(self, s: str) -> int:
        return self.generators.index(s)

    def pairs(self) -> Iterator[tuple[str, str]]:
        """Unordered pairs in generator order."""
        return combinations(self.generators, 2)

    def finite_pairs(self) -> Iterator[tuple[str, str, int]]:
        for s, t in self.pairs():
            lab = self.labels.get(pair_key(s, t))
            if lab is not None:
                yield s, t, lab

    def label_set(self) -> set:
        return label_set(self)

    @property
    def is_right_angled(self) -> bool:
        return self.label_set() <= {2, INF}

    def restrict(self, subset: Iterable[str]) -> "ArtinSystem":
        keep = set(subset)
        gens = tuple(g for g in self.generators if g in keep)
        labels = {p: v for p, v in self.labels.items() if p <= keep}
        return ArtinSystem(gens, labels, self.kind)

    def with_kind(self, kind: str) -> "ArtinSystem":
        return ArtinSystem(self.generators, dict(self.labels), kind)

    def label_triples(self) -> list[tuple[str, str, int]]:
        return list(self.finite_pairs())


def _parse_label(value):
    if value is None:
        return INF
    if isinstance(value, str):
        if value.strip().lower() in ("inf", "infinity", "oo", "∞"):
            return INF
        try:
            value = int(value)
        except ValueError:
            raise InvalidLabel(f"label {value!r} is not an integer or 'inf'") from None
    if isinstance(value, float):
        if math.isinf(value) and value > 0:
            return INF
        if not value.is_integer():
            raise InvalidLabel(f"label {value!r} is not an integer")
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidLabel(f"label {value!r} is not an integer or 'inf'")
    if value < 2:
        raise InvalidLabel(f"label {value} < 2")
    return value


def validate_system(
    generators: Sequence[str],
    labels: Iterable[Sequence] = (),
    kind: str = "artin",
) -> ArtinSystem:
    """Check raw input and return a normalized :class:`ArtinSystem`.

    ``labels`` is an iterable of ``(s, t, m)`` triples; ``m`` may be an
    integer >= 2 or ``"inf"``.  Repeated triples for one pair must agree.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    gens = tuple(generators)
    seen: set[str] = set()
    for g in gens:
        if not isinstance(g, str) or not _NAME_RE.match(g):
            raise BadGeneratorName(f"bad generator name {g!r}")
        if g in seen:
            raise DuplicateGenerator(f"duplicate generator {g!r}")
        seen.add(g)

    assigned: dict[frozenset, object] = {}
    for triple in labels:
        if len(triple) != 3:
            raise InvalidLabel(f"label entry {triple!r} is not a (s, t, m) triple")
        s, t, raw = triple
        for g in (s, t):
            if g not in seen:
                raise UnknownGenerator(f"label mentions unknown generator {g!r}")
        if s == t:
            raise SelfPairLabel(f"label given for the pair ({s},{t})")
        value = _parse_label(raw)
        key = pair_key(s, t)
        if key in assigned and assigned[key] != value:
            raise ContradictoryLabels(
                f"contradictory labels for {{{s},{t}}}: {_fmt(assigned[key])} and {_fmt(value)}"
            )
        assigned[key] = value
    finite = {k: v for k, v in assigned.items() if v != INF}
    return ArtinSystem(gens, finite, kind)


def label_set(system: ArtinSystem) -> set:
    """The set of labels, counting absent pairs as ``INF``."""
    out = set()
    for s, t in system.pairs():
        out.add(system.labels.get(pair_key(s, t), INF))
    return out


@dataclass(frozen=True)
class LabelPreservingBijection:
    pairs: tuple[tuple[str, str], ...]

    @property
    def mapping(self) -> dict[str, str]:
        return dict(self.pairs)

    @property
    def inverse_mapping(self) -> dict[str, str]:
        return {t: s for s, t in self.pairs}

    @property
    def domain(self) -> tuple[str, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def image(self) -> tuple[str, ...]:
        return tuple(t for _, t in self.pairs)

    def __call__(self, s: str) -> str:
        return self.mapping[s]

    def __len__(self) -> int:
        return len(self.pairs)

    def ordered_domain(self, system: ArtinSystem) -> tuple[str, ...]:
        dom = set(self.domain)
        return tuple(g for g in system.generators if g in dom)


def validate_bijection(
    system: ArtinSystem,
    pairs: Iterable[Sequence[str]],
    check_labels: bool = True,
) -> LabelPreservingBijection:
    """Validate a partial bijection ``phi`` on the generators of ``system``.

    With ``check_labels=False`` only the bijection shape is checked; this is
    how deliberately broken inputs reach the downstream conflict detectors.
    """
    gens = set(system.generators)
    sources: set[str] = set()
    targets: set[str] = set()
    normalized = []
    for entry in pairs:
        if len(entry) != 2:
            raise ValidationError(f"phi entry {entry!r} is not a (source, target) pair")
        s, t = entry
        for g in (s, t):
            if g not in gens:
                raise UnknownGenerator(f"phi mentions unknown generator {g!r}")
        if s in sources:
            raise RepeatedSource(f"phi has two images for {s!r}")
        if t in targets:
            raise RepeatedTarget(f"phi has two preimages of {t!r}")
        sources.add(s)
        targets.add(t)
        normalized.append((s, t))
    phi = LabelPreservingBijection(tuple(normalized))
    if check_labels:
        violation = find_label_violation(system, phi)
        if violation is not None:
            raise LabelMismatch(*violation)
    return phi


def find_label_violation(system: ArtinSystem, phi: LabelPreservingBijection):
    """First pair ``{s, s'}`` in the domain whose label is not preserved."""
    fmap = phi.mapping
    for s, s2 in combinations(phi.ordered_domain(system), 2):
        a, b = system.m(s, s2), system.m(fmap[s], fmap[s2])
        if a != b:
            return (s, s2), (fmap[s], fmap[s2]), (a, b)
    return None


def _fmt(v) -> str:
    return "inf" if v == INF else str(v)
