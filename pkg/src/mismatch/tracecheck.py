"""Replay and validate rewrite traces.

Each step must be a free-group move (cancel or insert ``x x^-1``) or the
replacement of a subword ``u`` by ``v`` where ``u v^-1`` is a cyclic
conjugate of a defining relator or of its inverse.  The relator list is
rebuilt here from the exponents alone; nothing from the normal form code is
used.
"""

from __future__ import annotations

from .presentation import GroupSpec, Letter, invert

__all__ = ["TraceError", "check_trace"]

_LEGAL_KINDS = {"free_cancel", "free_insert", "commute", "relator", "pinch"}


class TraceError(ValueError):
    pass


def _cyclic_words(spec: GroupSpec) -> tuple:
    a_t_only = set()
    everything = set()
    for i, rel in enumerate(spec.relators()):
        for r in (rel, invert(rel)):
            for k in range(len(r)):
                rot = tuple(r[k:] + r[:k])
                everything.add(rot)
                if i == 0:
                    a_t_only.add(rot)
    return a_t_only, everything


def _is_cancelling_pair(seq) -> bool:
    return len(seq) == 2 and seq[0] == Letter(seq[1].gen, -seq[1].sign)


def check_trace(spec: GroupSpec, word, steps) -> tuple:
    """Replay ``steps`` starting from ``word``; return the final word.

    Raises TraceError naming the first illegal step.
    """
    commutators, relators = _cyclic_words(spec)
    current = list(word)
    for n, step in enumerate(steps):
        kind, pos, before, after = step
        before, after = tuple(before), tuple(after)
        if kind not in _LEGAL_KINDS:
            raise TraceError(f"step {n}: unknown kind {kind!r}")
        if not 0 <= pos <= len(current) or tuple(current[pos:pos + len(before)]) != before:
            raise TraceError(f"step {n}: subword mismatch at position {pos}")
        if kind in ("free_cancel", "pinch"):
            ok = _is_cancelling_pair(before) and after == ()
            if kind == "pinch":
                ok = ok and before[0].is_stable
        elif kind == "free_insert":
            ok = before == () and _is_cancelling_pair(after)
        elif kind == "commute":
            ok = before + invert(after) in commutators
        else:
            ok = before + invert(after) in relators
        if not ok:
            raise TraceError(f"step {n}: illegal {kind} {before} -> {after}")
        current[pos:pos + len(before)] = after
    return tuple(current)
