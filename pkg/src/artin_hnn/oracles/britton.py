"""Britton-reduced forms in Artin/Coxeter HNN-extensions.

A pinch is ``t^-1 g t`` with ``g`` in the parabolic subgroup on the domain
of phi, or ``t g t^-1`` with ``g`` in the parabolic on its image.  Deciding
parabolic membership needs a base-group normal form with the support
property, which we have for Coxeter groups (Tits) and right-angled Artin
groups only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import UnsupportedOracle
from ..systems import ArtinSystem, LabelPreservingBijection
from ..words import Word, inverse
from .raag import RAAGOracle
from .tits import ReductionBudget, TitsOracle


def base_oracle(system: ArtinSystem, budget: ReductionBudget | None = None):
    """Word-problem oracle for the base group, with ``in_parabolic`` support."""
    if system.kind == "coxeter":
        return TitsOracle(system, budget)
    if system.is_right_angled:
        return RAAGOracle(system)
    raise UnsupportedOracle(
        "parabolic membership is only decidable here for Coxeter or right-angled Artin base groups"
    )


def normal_form(oracle, w: Iterable) -> Word:
    if isinstance(oracle, TitsOracle):
        return oracle.canonical(w)
    return oracle.normal_form(w)


@dataclass(frozen=True)
class BrittonForm:
    """``pieces[0] t^e1 pieces[1] ... t^en pieces[n]``."""

    pieces: tuple[Word, ...]
    exponents: tuple[int, ...]
    stable: str = "t"

    @property
    def word(self) -> Word:
        out = list(self.pieces[0])
        for e, piece in zip(self.exponents, self.pieces[1:]):
            out.append((self.stable, e))
            out.extend(piece)
        return tuple(out)

    @property
    def is_trivial(self) -> bool:
        return not self.exponents and not self.pieces[0]

    @property
    def stable_length(self) -> int:
        return len(self.exponents)


class BrittonOracle:
    def __init__(
        self,
        system: ArtinSystem,
        phi: LabelPreservingBijection,
        stable: str = "t",
        budget: ReductionBudget | None = None,
        base=None,
    ):
        self.system = system
        self.phi = phi
        self.stable = stable
        self.base = base or base_oracle(system, budget)
        self.domain = set(phi.domain)
        self.image = set(phi.image)
        self.forward = phi.mapping
        self.backward = phi.inverse_mapping

    def _pinch(self, prev: int, nxt: int, piece: list) -> Word | None:
        """Replacement for ``t^prev piece t^nxt`` if it is a pinch."""
        if prev != -nxt:
            return None
        subset, f = (self.domain, self.forward) if prev == -1 else (self.image, self.backward)
        nf = normal_form(self.base, piece)
        if any(g not in subset for g, _ in nf):
            return None
        return tuple((f[g], e) for g, e in nf)

    def reduce(self, w: Iterable) -> BrittonForm:
        pieces: list[list] = [[]]
        exps: list[int] = []
        for g, e in w:
            if g != self.stable:
                pieces[-1].append((g, e))
                continue
            if exps:
                repl = self._pinch(exps[-1], e, pieces[-1])
                if repl is not None:
                    pieces.pop()
                    exps.pop()
                    pieces[-1].extend(repl)
                    continue
            exps.append(e)
            pieces.append([])
        normed = tuple(normal_form(self.base, p) for p in pieces)
        return BrittonForm(normed, tuple(exps), self.stable)

    def has_pinch(self, form: BrittonForm) -> bool:
        for n in range(1, len(form.exponents)):
            if self._pinch(form.exponents[n - 1], form.exponents[n], list(form.pieces[n])) is not None:
                return True
        return False

    def is_identity(self, w: Iterable) -> bool:
        return self.reduce(w).is_trivial

    def equal(self, u: Iterable, v: Iterable) -> bool:
        return self.is_identity(tuple(u) + inverse(tuple(v)))


def britton_normal_form(
    system: ArtinSystem,
    phi: LabelPreservingBijection,
    w: Iterable,
    stable: str = "t",
    budget: ReductionBudget | None = None,
) -> BrittonForm:
    return BrittonOracle(system, phi, stable, budget).reduce(w)
