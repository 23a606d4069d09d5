"""Synchronous and asynchronous fellow-traveller distances between word paths.

A word of length M traces M+1 vertices in the Cayley graph.  The synchronous
distance compares vertices at equal times (the shorter path waits at its
end); the asynchronous distance is the discrete Frechet distance, i.e. the
minimum over monotone lattice alignments of the largest vertex distance.
Vertex distances come from a ball of radius ``cap``; anything further away
counts as infinite.
"""

from __future__ import annotations

from typing import NamedTuple

from .cayley import EXCEEDS_CAP, cached_ball
from .presentation import GroupSpec, invert
from .rewrite import IDENTITY, NormalForm, append_letter, headers, normalize

__all__ = [
    "Alignment",
    "path_vertices",
    "distance_grid",
    "sync_fellow_distance",
    "async_fellow_distance",
    "frechet_from_grid",
    "alignment_steps",
    "parallel_structure",
]

_INF = float("inf")

# Steps of an alignment: D advances along the first path, R along the
# second, G along both.
_MOVES = {(1, 0): "D", (0, 1): "R", (1, 1): "G"}


class Alignment(NamedTuple):
    pairs: tuple

    def steps(self) -> str:
        return alignment_steps(self.pairs)


def alignment_steps(pairs) -> str:
    return "".join(
        _MOVES[(i1 - i0, j1 - j0)] for (i0, j0), (i1, j1) in zip(pairs, pairs[1:])
    )


def path_vertices(spec: GroupSpec, w) -> list:
    out = [IDENTITY]
    nf = IDENTITY
    for x in w:
        nf = append_letter(spec, nf, x)
        out.append(nf)
    return out


def distance_grid(spec: GroupSpec, w, u, cap: int) -> list:
    """``grid[i][j]`` is d(w[:i], u[:j]), or infinity beyond ``cap``.

    Row i starts from the normal form of the inverse of w[:i] and appends
    the letters of u one at a time.
    """
    ball = cached_ball(spec, cap).entries
    w, u = tuple(w), tuple(u)
    grid = []
    for i in range(len(w) + 1):
        nf = normalize(spec, invert(w[:i]))
        row = []
        hit = ball.get(nf)
        row.append(_INF if hit is None else hit[0])
        for x in u:
            nf = append_letter(spec, nf, x)
            hit = ball.get(nf)
            row.append(_INF if hit is None else hit[0])
        grid.append(row)
    return grid


def sync_fellow_distance(spec: GroupSpec, w, u, cap: int):
    if cap < 0:
        raise ValueError("cap must be non-negative")
    grid = distance_grid(spec, w, u, cap)
    M, N = len(grid) - 1, len(grid[0]) - 1
    worst = max(grid[min(s, M)][min(s, N)] for s in range(max(M, N) + 1))
    return EXCEEDS_CAP if worst == _INF else int(worst)


def frechet_from_grid(grid) -> tuple:
    """Discrete Frechet value and an optimal alignment for a distance grid."""
    M, N = len(grid) - 1, len(grid[0]) - 1
    best = [[_INF] * (N + 1) for _ in range(M + 1)]
    for i in range(M + 1):
        for j in range(N + 1):
            if i == 0 and j == 0:
                prev = -_INF
            else:
                prev = min(
                    best[i - 1][j - 1] if i and j else _INF,
                    best[i - 1][j] if i else _INF,
                    best[i][j - 1] if j else _INF,
                )
            best[i][j] = max(prev, grid[i][j])
    # walk back, preferring diagonal moves on ties
    pairs = [(M, N)]
    i, j = M, N
    while (i, j) != (0, 0):
        options = []
        if i and j:
            options.append((best[i - 1][j - 1], i - 1, j - 1))
        if i:
            options.append((best[i - 1][j], i - 1, j))
        if j:
            options.append((best[i][j - 1], i, j - 1))
        _, i, j = min(options, key=lambda o: o[0])
        pairs.append((i, j))
    return best[M][N], Alignment(tuple(reversed(pairs)))


def async_fellow_distance(spec: GroupSpec, w, u, cap: int):
    """``(value, alignment)`` or EXCEEDS_CAP."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    value, alignment = frechet_from_grid(distance_grid(spec, w, u, cap))
    if value == _INF:
        return EXCEEDS_CAP
    return int(value), alignment


def parallel_structure(spec: GroupSpec, w: NormalForm, u: NormalForm) -> bool:
    return headers(w) == headers(u)
