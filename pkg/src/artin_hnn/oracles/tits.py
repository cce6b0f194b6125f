"""Word problem for Coxeter groups by braid moves and deletions.

A word is reduced iff no sequence of braid moves brings two equal letters
together, and any two reduced words for one element are joined by braid
moves.  So the closure of a word under braid moves either exposes a
cancellation or is exactly the set of reduced words of the element; the
lexicographically least member of that set is a normal form.

Words are processed one letter at a time, so each closure is over the
reduced words of a prefix times one letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import BudgetExhausted, UnsupportedOracle
from ..systems import ArtinSystem
from ..words import Word


@dataclass(frozen=True)
class ReductionBudget:
    max_states: int = 200_000
    max_length: int = 4_000

    def __post_init__(self):
        if self.max_states <= 0 or self.max_length <= 0:
            raise ValueError("budgets must be positive")


DEFAULT_BUDGET = ReductionBudget()


class TitsOracle:
    """Normal forms in the Coxeter group of ``system``.

    The system's ``kind`` is ignored, so this also gives the Coxeter
    quotient of an Artin system.  The memo is private to the instance.
    """

    def __init__(self, system: ArtinSystem, budget: ReductionBudget | None = None):
        self.system = system
        self.budget = budget or DEFAULT_BUDGET
        self.gens = system.generators
        self.index = {g: n for n, g in enumerate(self.gens)}
        n = len(self.gens)
        self.m = [[0] * n for _ in range(n)]
        for s, t, lab in system.finite_pairs():
            a, b = self.index[s], self.index[t]
            self.m[a][b] = self.m[b][a] = lab
        self._memo: dict[tuple[int, ...], tuple[int, ...]] = {}
        self.states_used = 0

    def encode(self, w: Iterable) -> tuple[int, ...]:
        try:
            return tuple(self.index[g] for g, _ in w)
        except KeyError as exc:
            raise ValueError(f"letter {exc.args[0]!r} is not a generator") from None

    def decode(self, w: tuple[int, ...]) -> Word:
        return tuple((self.gens[x], 1) for x in w)

    def reduce_ints(self, w: Iterable[int]) -> tuple[int, ...]:
        cur: tuple[int, ...] = ()
        for x in w:
            cur = self._push(cur, x)
        return cur

    def canonical(self, w: Iterable) -> Word:
        """Lexicographically least reduced word for the element of ``w``."""
        w = tuple(w)
        if len(w) > self.budget.max_length:
            raise BudgetExhausted(f"word length {len(w)} exceeds max_length={self.budget.max_length}")
        return self.decode(self.reduce_ints(self.encode(w)))

    def is_identity(self, w: Iterable) -> bool:
        return not self.canonical(w)

    def equal(self, u: Iterable, v: Iterable) -> bool:
        return self.canonical(u) == self.canonical(v)

    def length(self, w: Iterable) -> int:
        return len(self.canonical(w))

    def in_parabolic(self, w: Iterable, subset: Iterable[str]) -> bool:
        """Reduced words of an element all have the same support."""
        keep = set(subset)
        return all(g in keep for g, _ in self.canonical(w))

    def _push(self, cur: tuple[int, ...], x: int) -> tuple[int, ...]:
        w = cur + (x,)
        hit = self._memo.get(w)
        if hit is not None:
            return hit
        orbit, cancel = self._closure(w)
        if cancel is not None:
            shorter = cancel
            orbit, again = self._closure(shorter)
            if again is not None:  # pragma: no cover - cur was reduced
                raise AssertionError("prefix was not reduced")
        result = min(orbit)
        self._memo[w] = result
        return result

    def _closure(self, start: tuple[int, ...]):
        """Braid-move orbit of ``start``; stops early at the first cancellation.

        Returns ``(orbit, None)`` or ``(None, word with the pair deleted)``.
        """
        m = self.m
        seen = {start}
        stack = [start]
        limit = self.budget.max_states
        while stack:
            w = stack.pop()
            n = len(w)
            for p in range(n - 1):
                a, b = w[p], w[p + 1]
                if a == b:
                    return None, w[:p] + w[p + 2 :]
                mab = m[a][b]
                if not mab or p + mab > n:
                    continue
                ok = True
                for j in range(2, mab):
                    if w[p + j] != (a if j % 2 == 0 else b):
                        ok = False
                        break
                if not ok:
                    continue
                flipped = tuple(b if j % 2 == 0 else a for j in range(mab))
                nw = w[:p] + flipped + w[p + mab :]
                if nw not in seen:
                    seen.add(nw)
                    stack.append(nw)
                    self.states_used += 1
                    if len(seen) > limit:
                        raise BudgetExhausted(
                            f"braid-move closure exceeded max_states={limit} at word length {n}"
                        )
        return seen, None


def tits_reduce(system: ArtinSystem, w: Iterable, budget: ReductionBudget | None = None) -> Word:
    """Canonical reduced word of ``w`` in the Coxeter group of ``system``."""
    if system.kind != "coxeter":
        raise UnsupportedOracle("tits_reduce needs a Coxeter system")
    return TitsOracle(system, budget).canonical(w)
