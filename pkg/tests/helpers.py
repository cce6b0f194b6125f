"""Shared builders for tests: worked examples and random instances."""

from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path

from artin_hnn.errors import LabelMismatch
from artin_hnn.systems import INF, validate_bijection, validate_system

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def e1(kind="artin"):
    s = validate_system(["a", "b"], [("a", "b", 3)], kind)
    return s, validate_bijection(s, [("a", "b")])


def e2(kind="artin"):
    s = validate_system(["a", "b"], [("a", "b", 2)], kind)
    return s, validate_bijection(s, [("a", "b"), ("b", "a")])


def empty_phi(kind="artin"):
    s = validate_system(["a", "b"], [("a", "b", 3)], kind)
    return s, validate_bijection(s, [])


def identity_phi(kind="artin"):
    s = validate_system(["a", "b"], [("a", "b", 3)], kind)
    return s, validate_bijection(s, [("a", "a")])


def broken():
    s = validate_system(["a", "b", "c"], [("a", "b", 3), ("b", "c", 2)])
    return s, validate_bijection(s, [("a", "b"), ("b", "c")], check_labels=False)


def random_system(rng: random.Random, max_gens=5, labels=(2, 3, INF), kind="artin"):
    n = rng.randint(1, max_gens)
    gens = [chr(ord("a") + i) for i in range(n)]
    triples = []
    for s, t in combinations(gens, 2):
        lab = rng.choice(labels)
        if lab != INF:
            triples.append((s, t, lab))
    return validate_system(gens, triples, kind)


def random_phi(rng: random.Random, system, tries=50):
    """A random label-preserving partial bijection (rejection sampling).

    The size is drawn first and lowered only when no sample of that size is
    label preserving, so larger bijections are not starved.
    """
    gens = list(system.generators)
    for size in range(rng.randint(0, len(gens)), 0, -1):
        for _ in range(tries):
            dom = rng.sample(gens, size)
            img = rng.sample(gens, size)
            try:
                return validate_bijection(system, list(zip(dom, img)))
            except LabelMismatch:
                continue
    return validate_bijection(system, [])


def random_instance(rng: random.Random, max_gens=5, kind="artin"):
    system = random_system(rng, max_gens, kind=kind)
    return system, random_phi(rng, system)
