"""A deterministic acceptor for the language of normal-form spellings.

The accepted words are ``a^i t^j (r1 a^g1) ... (rl a^gl)`` spelled with
sign-locked runs (no ``a A`` inside a run) and with no ``Bi bi`` or ``bi Bi``
adjacency.  Every accepted word is the spelling of exactly one normal form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .presentation import A, T, GroupSpec, Letter, letter_name, parse_word

__all__ = [
    "Automaton",
    "EnumerationLimitExceeded",
    "build_acceptor",
    "accepts",
    "enumerate_accepted",
    "export_automaton",
    "automaton_from_json",
]


class EnumerationLimitExceeded(RuntimeError):
    def __init__(self, limit: int, maxlen: int):
        super().__init__(f"more than {limit} accepted words of length <= {maxlen}")
        self.limit = limit
        self.maxlen = maxlen


@dataclass(frozen=True)
class Automaton:
    """States are strings; ``transitions`` maps (state, letter) to a state.

    Missing transitions go to an implicit rejecting sink.
    """

    alphabet: tuple
    states: tuple
    initial: str
    accepting: frozenset
    transitions: dict = field(hash=False)

    def step(self, state, x: Letter):
        return self.transitions.get((state, x))

    def successors(self, state) -> list:
        """Legal (letter, next state) pairs in alphabet order."""
        out = []
        for x in self.alphabet:
            nxt = self.transitions.get((state, x))
            if nxt is not None:
                out.append((x, nxt))
        return out


def _run(sign: int) -> str:
    return "+" if sign > 0 else "-"


def build_acceptor(spec: GroupSpec) -> Automaton:
    a, t = Letter(A, 1), Letter(T, 1)
    stables = [Letter(i, s) for i in range(1, spec.k + 1) for s in (1, -1)]
    trans = {}

    def after_stable(x: Letter) -> str:
        return f"stable:{letter_name(x)}"

    def add_stables(state, banned=None):
        for s in stables:
            if s != banned:
                trans[(state, s)] = after_stable(s)

    # head a-run, then head t-run
    trans[("start", a)] = "head_a+"
    trans[("start", a.inverse())] = "head_a-"
    for sign in (1, -1):
        trans[("start", Letter(T, sign))] = f"head_t{_run(sign)}"
    add_stables("start")
    for sign in (1, -1):
        st = f"head_a{_run(sign)}"
        trans[(st, Letter(A, sign))] = st
        for ts in (1, -1):
            trans[(st, Letter(T, ts))] = f"head_t{_run(ts)}"
        add_stables(st)
        st = f"head_t{_run(sign)}"
        trans[(st, Letter(T, sign))] = st
        add_stables(st)
    # blocks: a stable letter, then a sign-locked tail
    for s in stables:
        st = after_stable(s)
        for sign in (1, -1):
            trans[(st, Letter(A, sign))] = f"tail{_run(sign)}"
        add_stables(st, banned=s.inverse())
    for sign in (1, -1):
        st = f"tail{_run(sign)}"
        trans[(st, Letter(A, sign))] = st
        add_stables(st)

    states = ["start", "head_a+", "head_a-", "head_t+", "head_t-"]
    states += [after_stable(s) for s in stables] + ["tail+", "tail-"]
    return Automaton(
        alphabet=spec.alphabet,
        states=tuple(states),
        initial="start",
        # every prefix of a normal-form spelling is itself one
        accepting=frozenset(states),
        transitions=trans,
    )


def accepts(aut: Automaton, w) -> bool:
    state = aut.initial
    for x in w:
        state = aut.transitions.get((state, x))
        if state is None:
            return False
    return state in aut.accepting


def enumerate_accepted(aut: Automaton, maxlen: int, limit: int = 1_000_000) -> list:
    """All accepted words of length <= maxlen in length-lexicographic order."""
    if maxlen < 0:
        raise ValueError("maxlen must be non-negative")
    out = []
    level = [((), aut.initial)]
    for length in range(maxlen + 1):
        for w, state in level:
            if state in aut.accepting:
                out.append(w)
                if len(out) > limit:
                    raise EnumerationLimitExceeded(limit, maxlen)
        if length == maxlen:
            break
        # expanding in alphabet order keeps each level lexicographic
        level = [(w + (x,), nxt) for w, state in level for x, nxt in aut.successors(state)]
        if len(level) > limit:
            raise EnumerationLimitExceeded(limit, maxlen)
    return out


def _reachable(aut: Automaton) -> list:
    seen = [aut.initial]
    found = {aut.initial}
    for state in seen:
        for _, nxt in aut.successors(state):
            if nxt not in found:
                found.add(nxt)
                seen.append(nxt)
    return seen


def export_automaton(aut: Automaton, fmt: str = "json") -> str:
    states = [s for s in aut.states if s in set(_reachable(aut))]
    edges = [
        (src, letter_name(x), dst)
        for src in states
        for x, dst in aut.successors(src)
    ]
    if fmt == "json":
        return json.dumps(
            {
                "alphabet": [letter_name(x) for x in aut.alphabet],
                "states": states,
                "initial": aut.initial,
                "accepting": [s for s in states if s in aut.accepting],
                "transitions": [{"from": s, "letter": x, "to": d} for s, x, d in edges],
            },
            indent=2,
        )
    if fmt == "dot":
        lines = ["digraph acceptor {", "  rankdir=LR;"]
        for s in states:
            shape = "doublecircle" if s in aut.accepting else "circle"
            bold = ", style=bold" if s == aut.initial else ""
            lines.append(f'  "{s}" [shape={shape}{bold}];')
        for s, x, d in edges:
            lines.append(f'  "{s}" -> "{d}" [label="{x}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def automaton_from_json(text: str) -> Automaton:
    data = json.loads(text)
    k = sum(1 for name in data["alphabet"] if name.startswith("b"))
    spec = GroupSpec((0,) * max(k, 1))

    def letter(name: str) -> Letter:
        return parse_word(spec, name)[0]

    return Automaton(
        alphabet=tuple(letter(n) for n in data["alphabet"]),
        states=tuple(data["states"]),
        initial=data["initial"],
        accepting=frozenset(data["accepting"]),
        transitions={(e["from"], letter(e["letter"])): e["to"] for e in data["transitions"]},
    )
