"""Normal forms in right-angled Artin groups."""

from __future__ import annotations

from typing import Iterable

from ..errors import UnsupportedOracle
from ..systems import ArtinSystem
from ..words import Word


class RAAGOracle:
    def __init__(self, system: ArtinSystem):
        if system.kind != "artin" or not system.is_right_angled:
            raise UnsupportedOracle("RAAG normal forms need a right-angled Artin system")
        self.system = system
        self.index = {g: n for n, g in enumerate(system.generators)}
        n = len(system.generators)
        self.commute = [[False] * n for _ in range(n)]
        for s, t, _ in system.finite_pairs():
            a, b = self.index[s], self.index[t]
            self.commute[a][b] = self.commute[b][a] = True

    def normal_form(self, w: Iterable) -> Word:
        letters = []
        for g, e in w:
            try:
                letters.append((self.index[g], e))
            except KeyError:
                raise ValueError(f"letter {g!r} is not a generator") from None
        reduced = self._cancel(letters)
        gens = self.system.generators
        return tuple((gens[a], e) for a, e in self._lex_least(reduced))

    def is_identity(self, w: Iterable) -> bool:
        return not self.normal_form(w)

    def equal(self, u: Iterable, v: Iterable) -> bool:
        return self.normal_form(u) == self.normal_form(v)

    def in_parabolic(self, w: Iterable, subset: Iterable[str]) -> bool:
        keep = set(subset)
        return all(g in keep for g, _ in self.normal_form(w))

    def _cancel(self, letters):
        # Appending to a reduced word: x^e cancels against the last x^-e that
        # can be shuffled to the end past commuting letters.
        out: list[tuple[int, int]] = []
        for a, e in letters:
            j = len(out) - 1
            cancelled = False
            while j >= 0:
                b, f = out[j]
                if b == a:
                    if f == -e:
                        del out[j]
                        cancelled = True
                    break
                if not self.commute[a][b]:
                    break
                j -= 1
            if not cancelled:
                out.append((a, e))
        return out

    def _lex_least(self, letters):
        remaining = list(letters)
        out = []
        while remaining:
            best = None
            for p, (a, e) in enumerate(remaining):
                if all(self.commute[a][b] for b, _ in remaining[:p]):
                    key = (a, 0 if e == 1 else 1)
                    if best is None or key < best[0]:
                        best = (key, p)
            out.append(remaining.pop(best[1]))
        return out


def raag_normal_form(system: ArtinSystem, w: Iterable) -> Word:
    return RAAGOracle(system).normal_form(w)
