"""Faithful permutation models of small finite Coxeter groups.

These are independent of the braid-move oracle and of coset enumeration:
a word is evaluated by composing permutations, and a group is listed by
closure under the generators.
"""

from __future__ import annotations

from artin_hnn.systems import validate_system


def compose(p, q):
    """``p`` then ``q``."""
    return tuple(q[i] for i in p)


def identity(n):
    return tuple(range(n))


def evaluate(model, w):
    gens, perms = model
    out = identity(len(next(iter(perms.values()))))
    for g, _ in w:
        out = compose(out, perms[g])
    return out


def closure(perms):
    perms = list(perms)
    n = len(perms[0]) if perms else 0
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for p in frontier:
            for q in perms:
                r = compose(p, q)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return seen


def dihedral(n):
    """Order ``2n``: reflections ``i -> -i`` and ``i -> 2 - i`` on ``Z/2n``."""
    size = 2 * n
    a = tuple((-i) % size for i in range(size))
    b = tuple((2 - i) % size for i in range(size))
    system = validate_system(["a", "b"], [("a", "b", n)], "coxeter")
    return system, (system.generators, {"a": a, "b": b})


def symmetric(n):
    """Type A_(n-1): adjacent transpositions, order ``n!``."""
    gens = [f"s{i}" for i in range(1, n)]
    perms = {}
    for i, g in enumerate(gens):
        p = list(range(n))
        p[i], p[i + 1] = p[i + 1], p[i]
        perms[g] = tuple(p)
    labels = []
    for i, g in enumerate(gens):
        for j in range(i + 1, len(gens)):
            labels.append((g, gens[j], 3 if j == i + 1 else 2))
    system = validate_system(gens, labels, "coxeter")
    return system, (system.generators, perms)


def hyperoctahedral():
    """Type B_3, order 48, as signed permutations on six points.

    Point ``2j`` is ``+e_j`` and ``2j+1`` is ``-e_j``.
    """

    def signed(perm, flips=()):
        out = [0] * 6
        for j in range(3):
            sign = 1 if j in flips else 0
            out[2 * j] = 2 * perm[j] + sign
            out[2 * j + 1] = 2 * perm[j] + (1 - sign)
        return tuple(out)

    a = signed((0, 1, 2), flips=(0,))
    b = signed((1, 0, 2))
    c = signed((0, 2, 1))
    system = validate_system(["a", "b", "c"], [("a", "b", 4), ("b", "c", 3), ("a", "c", 2)], "coxeter")
    return system, (system.generators, {"a": a, "b": b, "c": c})
