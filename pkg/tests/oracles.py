"""Independent oracles used by the tests.

Nothing here calls the normal-form code.  Words are encoded as strings, one
character per letter, and equalities are proven only by free reduction and
substitution of relator pieces.
"""

from __future__ import annotations

import itertools

from mismatch.presentation import A, T, Letter

# a A t T, then b1 B1 b2 B2 ...
_STABLE_CHARS = "bBcCdDeEfFgGhH"


def char_of(x: Letter) -> str:
    if x.gen == A:
        return "a" if x.sign > 0 else "A"
    if x.gen == T:
        return "t" if x.sign > 0 else "T"
    return _STABLE_CHARS[2 * (x.gen - 1) + (0 if x.sign > 0 else 1)]


def encode(w) -> str:
    return "".join(char_of(x) for x in w)


def inv_char(c: str) -> str:
    return c.swapcase()


def inv(s: str) -> str:
    return "".join(inv_char(c) for c in reversed(s))


def free_reduce(s: str) -> str:
    out = []
    for c in s:
        if out and out[-1] == inv_char(c):
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def relator_strings(exponents) -> list:
    """at = ta and Bi t bi = a^ni t written as strings equal to the identity."""
    rels = ["atAT"]
    for i, n in enumerate(exponents):
        b, B = _STABLE_CHARS[2 * i], _STABLE_CHARS[2 * i + 1]
        rels.append(B + "t" + b + "T" + ("A" * n if n > 0 else "a" * -n))
    return rels


def substitutions(exponents) -> dict:
    """u -> [v, ...] such that u v^-1 is a cyclic conjugate of a relator or
    its inverse."""
    table = {}
    for rel in relator_strings(exponents):
        for r in (rel, inv(rel)):
            for k in range(len(r)):
                rot = r[k:] + r[:k]
                for cut in range(len(rot) + 1):
                    u, rest = rot[:cut], rot[cut:]
                    table.setdefault(u, set()).add(inv(rest))
    return {u: sorted(vs, key=lambda v: (len(v), v)) for u, vs in table.items()}


def reduced_words(alphabet: str, maxlen: int):
    yield ""
    level = [""]
    for _ in range(maxlen):
        level = [w + c for w in level for c in alphabet if not (w and w[-1] == inv_char(c))]
        yield from level


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        parent = self.parent
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while parent.get(x, x) != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def relator_closure(exponents, maxlen: int, slack: int = 2) -> _UnionFind:
    """Union freely reduced words of length <= maxlen connected by a single
    relator substitution whose freely reduced result also fits.

    Substitutions producing more than ``maxlen + slack`` letters before free
    reduction are skipped; this only loses proofs, never adds false ones.
    """
    k = len(exponents)
    alphabet = "aAtT" + _STABLE_CHARS[: 2 * k]
    subs = substitutions(exponents)
    longest = max(len(u) for u in subs)
    limit = maxlen + slack
    uf = _UnionFind()
    for w in reduced_words(alphabet, maxlen):
        n = len(w)
        for i in range(n + 1):
            for j in range(i, min(n, i + longest) + 1):
                room = limit - n + (j - i)
                for v in subs.get(w[i:j], ()):
                    if len(v) > room:
                        break
                    other = free_reduce(w[:i] + v + w[j:])
                    if len(other) <= maxlen:
                        uf.union(w, other)
    return uf


def all_alignments(M: int, N: int):
    """Every monotone lattice path from (0,0) to (M,N) with unit steps."""

    def walk(i, j):
        if (i, j) == (M, N):
            yield ((i, j),)
            return
        for di, dj in ((1, 0), (0, 1), (1, 1)):
            if i + di <= M and j + dj <= N:
                for rest in walk(i + di, j + dj):
                    yield ((i, j),) + rest

    yield from walk(0, 0)


def brute_frechet(grid) -> float:
    M, N = len(grid) - 1, len(grid[0]) - 1
    return min(max(grid[i][j] for i, j in path) for path in all_alignments(M, N))


def all_words(alphabet, maxlen: int):
    for n in range(maxlen + 1):
        yield from itertools.product(alphabet, repeat=n)


class SemidirectModel:
    """G as the free group F(a, b1..bk) extended by t, where conjugation by t
    fixes a and sends bi to bi a^ni.

    An element is ``(f, m)`` meaning ``f t^m`` with ``f`` a freely reduced
    string over a, A and the stable characters.  This model shares no code or
    reasoning with the normal forms under test.
    """

    def __init__(self, exponents):
        self.exponents = tuple(exponents)

    def _twist(self, c: str, m: int) -> str:
        if c in "aA" or m == 0:
            return c
        i = _STABLE_CHARS.index(c)
        n = self.exponents[i // 2] * m
        tail = "a" * n if n > 0 else "A" * -n
        return c + tail if i % 2 == 0 else inv(tail) + c

    def multiply(self, x, y):
        (f, m), (g, n) = x, y
        return free_reduce(f + "".join(self._twist(c, m) for c in g)), m + n

    def evaluate(self, s: str):
        elem = ("", 0)
        for c in s:
            if c == "t":
                step = ("", 1)
            elif c == "T":
                step = ("", -1)
            else:
                step = (c, 0)
            elem = self.multiply(elem, step)
        return elem
