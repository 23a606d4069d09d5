"""Breadth-first exploration of the Cayley graph.

Vertices are normal forms (unique per element), edges are right
multiplication by the 2(k+2) generators.  The ball around the identity gives
word-metric distances; ``bounded_distance`` answers single queries with a
bidirectional search instead.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache

from .presentation import GroupSpec, Letter, invert, letter_name, spell_word
from .rewrite import IDENTITY, NormalForm, append_letter, normalize, spell_nf

__all__ = [
    "Unbounded",
    "BEYOND_RADIUS",
    "EXCEEDS_CAP",
    "BallIndex",
    "BallBudgetExceeded",
    "build_ball",
    "cached_ball",
    "element_distance",
    "bounded_distance",
    "nf_key",
    "ball_rows",
    "export_ball",
]

DEFAULT_MAX_ENTRIES = 5_000_000


class Unbounded(enum.Enum):
    BEYOND_RADIUS = "beyond-radius"
    EXCEEDS_CAP = "exceeds-cap"

    def __repr__(self):
        return self.name


BEYOND_RADIUS = Unbounded.BEYOND_RADIUS
EXCEEDS_CAP = Unbounded.EXCEEDS_CAP


def nf_key(nf: NormalForm) -> str:
    return spell_word(spell_nf(nf))


@dataclass
class BallIndex:
    """``entries`` maps each normal form within ``radius`` to
    ``(distance, parent_letter)``; the identity has parent ``None``."""

    spec: GroupSpec
    radius: int
    entries: dict = field(repr=False)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, nf):
        return nf in self.entries

    def geodesic(self, nf: NormalForm) -> tuple:
        """A shortest word for ``nf``, recovered from parent letters."""
        letters = []
        while nf != IDENTITY:
            _, x = self.entries[nf]
            letters.append(x)
            nf = append_letter(self.spec, nf, x.inverse())
        return tuple(reversed(letters))


class BallBudgetExceeded(RuntimeError):
    """The entry cap was hit; ``partial`` is the ball of ``completed_radius``."""

    def __init__(self, completed_radius: int, max_entries: int, partial: BallIndex):
        super().__init__(
            f"ball exceeded {max_entries} entries after completing radius {completed_radius}"
        )
        self.completed_radius = completed_radius
        self.max_entries = max_entries
        self.partial = partial


def build_ball(spec: GroupSpec, radius: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> BallIndex:
    if radius < 0:
        raise ValueError("radius must be non-negative")
    gens = spec.alphabet
    entries = {IDENTITY: (0, None)}
    frontier = [IDENTITY]
    for d in range(1, radius + 1):
        nxt = []
        for nf in frontier:
            for x in gens:
                m = append_letter(spec, nf, x)
                if m not in entries:
                    entries[m] = (d, x)
                    nxt.append(m)
        if len(entries) > max_entries:
            partial = {k: v for k, v in entries.items() if v[0] < d}
            raise BallBudgetExceeded(d - 1, max_entries, BallIndex(spec, d - 1, partial))
        frontier = nxt
    return BallIndex(spec, radius, entries)


@lru_cache(maxsize=16)
def cached_ball(spec: GroupSpec, radius: int, max_entries: int = DEFAULT_MAX_ENTRIES) -> BallIndex:
    """Shared ball for repeated distance lookups; treat it as read-only."""
    return build_ball(spec, radius, max_entries)


def element_distance(ball: BallIndex, nf: NormalForm):
    hit = ball.entries.get(nf)
    return BEYOND_RADIUS if hit is None else hit[0]


def bounded_distance(spec: GroupSpec, w1, w2, cap: int):
    """Word-metric distance between the elements spelled by w1 and w2, or
    EXCEEDS_CAP when it is larger than ``cap``."""
    if cap < 0:
        raise ValueError("cap must be non-negative")
    target = normalize(spec, tuple(invert(w1)) + tuple(w2))
    return _meet_in_middle(spec, target, cap)


def _meet_in_middle(spec: GroupSpec, target: NormalForm, cap: int):
    if target == IDENTITY:
        return 0
    gens = spec.alphabet
    # the graph is undirected, so both searches use right multiplication
    dist = ({IDENTITY: 0}, {target: 0})
    frontiers = ([IDENTITY], [target])
    radii = [0, 0]
    while radii[0] + radii[1] < cap:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = dist[side], dist[1 - side]
        radii[side] += 1
        nxt = []
        best = None
        for nf in frontiers[side]:
            for x in gens:
                m = append_letter(spec, nf, x)
                if m in mine:
                    continue
                mine[m] = radii[side]
                nxt.append(m)
                if m in other:
                    total = radii[side] + other[m]
                    if best is None or total < best:
                        best = total
        if best is not None:
            return best
        frontiers = (nxt, frontiers[1]) if side == 0 else (frontiers[0], nxt)
        if not nxt:
            break
    return EXCEEDS_CAP


def ball_rows(ball: BallIndex) -> list:
    """(key, distance) rows ordered by distance then key."""
    return sorted(((nf_key(nf), d) for nf, (d, _) in ball.entries.items()), key=lambda r: (r[1], r[0]))


def export_ball(ball: BallIndex, fmt: str = "json") -> str:
    rows = ball_rows(ball)
    if fmt == "json":
        return json.dumps(
            {
                "exponents": list(ball.spec.exponents),
                "radius": ball.radius,
                "entries": [{"key": k, "distance": d} for k, d in rows],
            }
        )
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["key", "distance"])
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "dot":
        lines = ["graph ball {"]
        for k, d in rows:
            lines.append(f'  "{k}" [label="{k or "1"}\\n{d}"];')
        seen = set()
        for nf in ball.entries:
            for x in ball.spec.alphabet:
                if x.sign < 0:
                    continue
                m = append_letter(ball.spec, nf, x)
                if m in ball.entries and (nf, m) not in seen:
                    seen.add((nf, m))
                    lines.append(f'  "{nf_key(nf)}" -- "{nf_key(m)}" [label="{letter_name(x)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
