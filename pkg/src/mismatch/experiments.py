"""Experiment harnesses: the combing-constant sweep, the normal-form growth
table for ``Bi^k t^j`` and the iterated conjugation law."""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import asdict, dataclass, field

from .automata import Automaton, build_acceptor
from .cayley import BEYOND_RADIUS, BallBudgetExceeded, build_ball, element_distance
from .fellow import async_fellow_distance
from .presentation import A, T, GroupSpec, Letter, letter_name, power, spell_word
from .rewrite import headers, nf_length, normalize, spell_nf

__all__ = [
    "QuasiRow",
    "FellowReport",
    "combing_bound",
    "sample_l_word",
    "combing_report",
    "combing_sweep",
    "quasigeodesic_table",
    "quasi_rows_csv",
    "quasi_rows_json",
    "conjugation_check",
    "twist_check",
]

PUSH_LETTERS = (Letter(A, 1), Letter(A, -1), Letter(T, 1), Letter(T, -1))


def combing_bound(spec: GroupSpec) -> int:
    """The fellow-travel constant under test: max |ni| + 1."""
    return max(abs(n) for n in spec.exponents) + 1


def sample_l_word(aut: Automaton, maxlen: int, rng: random.Random) -> tuple:
    """Random walk on the acceptor; each step picks uniformly among the legal
    letters and stopping.  The walk is forced to stop at ``maxlen``."""
    w = []
    state = aut.initial
    while len(w) < maxlen:
        options = aut.successors(state)
        pick = rng.randrange(len(options) + 1)
        if pick == len(options):
            break
        x, state = options[pick]
        w.append(x)
    return tuple(w)


@dataclass
class FellowReport:
    exponents: list
    bound: int
    cap: int
    samples: int
    maxlen: int
    seed: int
    per_generator: dict
    witnesses: dict
    violations: list = field(default_factory=list)
    parallel_checks: int = 0
    parallel_failures: list = field(default_factory=list)

    @property
    def maximum(self) -> int:
        return max(self.per_generator.values(), default=0)

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def combing_report(spec: GroupSpec, words, cap: int = None, *, maxlen: int = 0, seed: int = 0) -> FellowReport:
    """Compare each word w with the normal form of w*x for x in a, A, t, T."""
    bound = combing_bound(spec)
    if cap is None:
        # one above the bound is enough to tell a violation from a pass
        cap = bound + 1
    words = list(words)
    per_gen = {letter_name(x): 0 for x in PUSH_LETTERS}
    witnesses = {}
    violations = []
    parallel_failures = []
    checks = 0
    for index, w in enumerate(words):
        nf_w = normalize(spec, w)
        for x in PUSH_LETTERS:
            name = letter_name(x)
            nf_wx = normalize(spec, (x,), start=nf_w)
            u = spell_nf(nf_wx)
            checks += 1
            if headers(nf_w) != headers(nf_wx):
                parallel_failures.append({"sample": index, "generator": name, "lhs": spell_word(w)})
            result = async_fellow_distance(spec, w, u, cap)
            record = {"sample": index, "generator": name, "lhs": spell_word(w), "rhs": spell_word(u)}
            if not isinstance(result, tuple):
                violations.append(dict(record, value=None, alignment=None))
                continue
            value, alignment = result
            if value > bound:
                violations.append(dict(record, value=value, alignment=alignment.steps()))
            if name not in witnesses or value > per_gen[name]:
                per_gen[name] = value
                witnesses[name] = dict(record, value=value, alignment=alignment.steps())
    return FellowReport(
        exponents=list(spec.exponents),
        bound=bound,
        cap=cap,
        samples=len(words),
        maxlen=maxlen,
        seed=seed,
        per_generator=per_gen,
        witnesses=witnesses,
        violations=violations,
        parallel_checks=checks,
        parallel_failures=parallel_failures,
    )


def combing_sweep(spec: GroupSpec, samples: int, maxlen: int, seed: int = 0, cap: int = None) -> FellowReport:
    if samples < 1 or maxlen < 1:
        raise ValueError("samples and maxlen must be positive")
    aut = build_acceptor(spec)
    words = [sample_l_word(aut, maxlen, random.Random(f"{seed}/{i}")) for i in range(samples)]
    return combing_report(spec, words, cap, maxlen=maxlen, seed=seed)


@dataclass
class QuasiRow:
    k: int
    j: int
    geodesic_claimed: int
    geodesic_bfs: object  # int, or BEYOND_RADIUS
    normal_form_length: int
    paper_formula: int
    ratio: float

    def as_record(self) -> dict:
        rec = asdict(self)
        if rec["geodesic_bfs"] is BEYOND_RADIUS:
            rec["geodesic_bfs"] = BEYOND_RADIUS.value
        return rec


QUASI_FIELDS = ["k", "j", "geodesic_claimed", "geodesic_bfs", "normal_form_length", "paper_formula", "ratio"]


def quasigeodesic_table(
    spec: GroupSpec,
    stable_index: int,
    kmax: int,
    jmax: int,
    verify_radius: int,
    max_entries: int = 5_000_000,
) -> list:
    """Normal-form length of ``Bi^k t^j`` against its word length k + j."""
    if not 1 <= stable_index <= spec.k:
        raise ValueError(f"stable index must lie in 1..{spec.k}")
    n = spec.exponent(stable_index)
    try:
        ball = build_ball(spec, verify_radius, max_entries) if verify_radius > 0 else None
    except BallBudgetExceeded as exc:
        ball = exc.partial
    rows = []
    for k in range(1, kmax + 1):
        for j in range(1, jmax + 1):
            nf = normalize(spec, power(stable_index, -k) + power(T, j))
            length = nf_length(nf)
            geo = BEYOND_RADIUS
            if ball is not None and k + j <= ball.radius:
                geo = element_distance(ball, nf)
            rows.append(
                QuasiRow(
                    k=k,
                    j=j,
                    geodesic_claimed=k + j,
                    geodesic_bfs=geo,
                    normal_form_length=length,
                    paper_formula=n * j + j + k * j + n * k * j + 1,
                    ratio=length / (k + j),
                )
            )
    return rows


def quasi_rows_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=QUASI_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_record())
    return buf.getvalue()


def quasi_rows_json(rows) -> str:
    return json.dumps([row.as_record() for row in rows], indent=2)


def conjugation_check(spec: GroupSpec, pmax: int) -> list:
    """Check ``Bi^p t bi^p = a^(p ni) t`` for every stable letter and p <= pmax."""
    if pmax < 1:
        raise ValueError("pmax must be at least 1")
    table = []
    for i, n in enumerate(spec.exponents, start=1):
        for p in range(pmax + 1):
            word = power(i, -p) + (Letter(T, 1),) + power(i, p)
            got = spell_nf(normalize(spec, word))
            expected = power(A, p * n) + (Letter(T, 1),)
            table.append(
                {
                    "index": i,
                    "p": p,
                    "expected": spell_word(expected),
                    "normal_form": spell_word(got),
                    "passed": got == expected,
                }
            )
    return table


def twist_check(spec: GroupSpec, pmax: int) -> list:
    """Check ``t^p bi t^-p = bi a^(p ni)`` for every stable letter and p <= pmax.

    Conjugating by powers of t acts on bi through the automorphism
    a -> a, bi -> bi a^ni of the free fibre, so this identity holds for all p.
    Conjugating t by powers of bi only agrees with it at p = 0, 1: already
    ``Bi^2 t bi^2 = Bi a bi a t``.
    """
    if pmax < 1:
        raise ValueError("pmax must be at least 1")
    table = []
    for i, n in enumerate(spec.exponents, start=1):
        for p in range(pmax + 1):
            word = power(T, p) + (Letter(i, 1),) + power(T, -p)
            got = spell_nf(normalize(spec, word))
            expected = (Letter(i, 1),) + power(A, p * n)
            table.append(
                {
                    "index": i,
                    "p": p,
                    "expected": spell_word(expected),
                    "normal_form": spell_word(got),
                    "passed": got == expected,
                }
            )
    return table
