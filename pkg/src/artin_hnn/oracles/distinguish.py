"""Sound partial inequality test for general Artin groups.

Two words are reported ``distinct`` when they differ in the abelianization
or in the Coxeter quotient; equality is never claimed.  The abelianization
of an Artin group is free abelian on the classes of generators joined by
odd labels, so exponent sums are pooled over those classes.
"""

from __future__ import annotations

from typing import Iterable

from ..errors import BudgetExhausted
from ..systems import ArtinSystem
from ..words import abelianize
from .tits import ReductionBudget, TitsOracle

DISTINCT = "distinct"
INCONCLUSIVE = "inconclusive"


def _odd_classes(system: ArtinSystem) -> dict[str, str]:
    """Each generator's representative under the odd-label equivalence."""
    parent = {g: g for g in system.generators}

    def find(g):
        while parent[g] != g:
            parent[g] = parent[parent[g]]
            g = parent[g]
        return g

    for s, t, m in system.finite_pairs():
        if m % 2:
            a, b = find(s), find(t)
            if a != b:
                parent[max(a, b, key=system.generators.index)] = min(a, b, key=system.generators.index)
    return {g: find(g) for g in system.generators}


class ArtinDistinguisher:
    def __init__(self, system: ArtinSystem, budget: ReductionBudget | None = None):
        self.system = system
        self.coxeter = TitsOracle(system, budget)
        self.odd_class = _odd_classes(system)

    def signature(self, w: Iterable):
        """``(abelianization, Coxeter normal form or None if undecided)``."""
        w = tuple(w)
        pooled: dict[str, int] = {}
        for g, e in abelianize(w).items():
            rep = self.odd_class[g]
            pooled[rep] = pooled.get(rep, 0) + e
        abel = tuple(sorted((g, e) for g, e in pooled.items() if e))
        try:
            cox = self.coxeter.canonical(w)
        except BudgetExhausted:
            cox = None
        return abel, cox

    @staticmethod
    def compare(sig1, sig2) -> str:
        if sig1[0] != sig2[0]:
            return DISTINCT
        if sig1[1] is not None and sig2[1] is not None and sig1[1] != sig2[1]:
            return DISTINCT
        return INCONCLUSIVE

    def distinguish(self, w1: Iterable, w2: Iterable) -> str:
        return self.compare(self.signature(w1), self.signature(w2))


def distinguish_in_artin_target(
    system: ArtinSystem,
    w1: Iterable,
    w2: Iterable,
    budget: ReductionBudget | None = None,
) -> str:
    if system.kind != "artin":
        raise ValueError("the distinguisher is for Artin systems")
    return ArtinDistinguisher(system, budget).distinguish(w1, w2)
