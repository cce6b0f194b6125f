"""Todd-Coxeter coset enumeration (HLT strategy with coincidence handling)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..errors import CosetOverflow
from ..presentations import Presentation
from ..words import Word

DEFAULT_MAX_COSETS = 200_000


@dataclass(frozen=True)
class CosetTable:
    """A closed coset table; coset 0 is the subgroup itself."""

    generators: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    cosets_defined: int

    @property
    def index(self) -> int:
        return len(self.table)

    def act(self, coset: int, w: Iterable) -> int:
        col = {g: 2 * n for n, g in enumerate(self.generators)}
        for g, e in w:
            coset = self.table[coset][col[g] + (0 if e == 1 else 1)]
        return coset

    def permutation(self, gen: str) -> tuple[int, ...]:
        c = 2 * self.generators.index(gen)
        return tuple(row[c] for row in self.table)


class _Enumerator:
    def __init__(self, pres: Presentation, max_cosets: int):
        self.gens = pres.generators
        self.col = {g: 2 * n for n, g in enumerate(self.gens)}
        self.ncols = 2 * len(self.gens)
        self.max_cosets = max_cosets
        self.table: list[list[int]] = [[-1] * self.ncols]
        self.parent = [0]
        self.relators = [self.encode(r) for r in pres.relators if r]

    def encode(self, w: Word) -> list[int]:
        return [self.col[g] + (0 if e == 1 else 1) for g, e in w]

    def alive(self, c: int) -> bool:
        return self.parent[c] == c

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c: int, x: int) -> None:
        n = len(self.table)
        if n >= self.max_cosets:
            raise CosetOverflow(f"coset enumeration exceeded {self.max_cosets} cosets")
        self.table.append([-1] * self.ncols)
        self.parent.append(n)
        self.table[c][x] = n
        self.table[n][x ^ 1] = c

    def scan_and_fill(self, c: int, w: list[int]) -> None:
        table = self.table
        f, b = c, c
        i, j = 0, len(w) - 1
        while True:
            while i <= j and table[f][w[i]] != -1:
                f = table[f][w[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][w[j] ^ 1] != -1:
                b = table[b][w[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][w[i]] = b
                table[b][w[i] ^ 1] = f
                return
            self.define(f, w[i])

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if b < a:
            a, b = b, a
        self.parent[b] = a
        queue.append(b)

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = table[e][x]
                if f == -1:
                    continue
                if table[f][x ^ 1] == e:
                    table[f][x ^ 1] = -1
                e1, f1 = self.rep(e), self.rep(f)
                if table[e1][x] != -1:
                    self._merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] != -1:
                    self._merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1

    def run(self, subgroup: Sequence[Word]) -> CosetTable:
        for w in subgroup:
            if w:
                self.scan_and_fill(0, self.encode(w))
        c = 0
        while c < len(self.table):
            for r in self.relators:
                if not self.alive(c):
                    break
                self.scan_and_fill(c, r)
            if self.alive(c):
                for x in range(self.ncols):
                    if self.table[c][x] == -1:
                        self.define(c, x)
            c += 1
        return self._compact()

    def _compact(self) -> CosetTable:
        live = [c for c in range(len(self.table)) if self.alive(c)]
        renum = {c: n for n, c in enumerate(live)}
        rows = []
        for c in live:
            if -1 in self.table[c]:  # pragma: no cover - HLT leaves live rows complete
                raise AssertionError(f"coset {c} has an undefined entry after closing")
            row = tuple(renum[self.rep(d)] for d in self.table[c])
            rows.append(row)
        return CosetTable(self.gens, tuple(rows), len(self.table))


def coset_enumerate(
    pres: Presentation,
    subgroup_words: Sequence[Word] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> CosetTable:
    """Enumerate the cosets of ``<subgroup_words>`` in the group of ``pres``.

    Raises :class:`CosetOverflow` instead of returning a partial answer.
    """
    return _Enumerator(pres, max_cosets).run(subgroup_words)
