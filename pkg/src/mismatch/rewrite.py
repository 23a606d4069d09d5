"""Normal forms and the word problem.

A normal form is ``a^alpha t^beta (r1 a^g1) ... (rl a^gl)`` where each ri is a
stable letter bi or Bi and the tails a^gi are the coset representatives of
the associated cyclic subgroups.  Appending a letter to a normal form is done
by pushing it right to left through the blocks:

* ``bi t^e = t^e bi a^(-e ni)``  (a positive block absorbs a shift of its tail)
* ``Bi t^e = (a^ni t)^e Bi``     (a negative block deposits a^(e ni) to its left)

A stable letter cancels against a trailing block of opposite sign with an
empty tail; no other pinch can arise because the only a-power in either
associated subgroup is the identity.
"""

from __future__ import annotations

import json
from typing import Iterable, NamedTuple

from .presentation import A, T, GroupSpec, Letter, Word, power, spell_word

__all__ = [
    "Block",
    "NormalForm",
    "IDENTITY",
    "Step",
    "append_letter",
    "normalize",
    "spell_nf",
    "word_problem",
    "equal_elements",
    "rewrite_trace",
    "is_valid_nf",
    "nf_length",
    "nf_to_dict",
    "nf_from_dict",
    "headers",
]


class Block(NamedTuple):
    index: int
    sign: int
    tail: int


class NormalForm(NamedTuple):
    head_a: int
    head_t: int
    blocks: tuple = ()


IDENTITY = NormalForm(0, 0, ())


def append_letter(spec: GroupSpec, nf: NormalForm, x: Letter) -> NormalForm:
    """Return the normal form of ``nf * x``."""
    gen, sign = x
    blocks = nf.blocks
    if gen == A:
        if blocks:
            last = blocks[-1]
            return NormalForm(
                nf.head_a, nf.head_t, blocks[:-1] + (Block(last.index, last.sign, last.tail + sign),)
            )
        return NormalForm(nf.head_a + sign, nf.head_t, blocks)
    if gen == T:
        return _push_t(spec, nf, sign)
    if blocks:
        last = blocks[-1]
        if last.index == gen and last.sign == -sign and last.tail == 0:
            return NormalForm(nf.head_a, nf.head_t, blocks[:-1])
    return NormalForm(nf.head_a, nf.head_t, blocks + (Block(gen, sign, 0),))


def _push_t(spec: GroupSpec, nf: NormalForm, eps: int) -> NormalForm:
    exps = spec.exponents
    out = list(nf.blocks)
    deposit = 0
    for j in range(len(out) - 1, -1, -1):
        index, sign, tail = out[j]
        shift = eps * exps[index - 1]
        if sign > 0:
            out[j] = Block(index, sign, tail - shift + deposit)
            deposit = 0
        else:
            if deposit:
                out[j] = Block(index, sign, tail + deposit)
            deposit = shift
    return NormalForm(nf.head_a + deposit, nf.head_t + eps, tuple(out))


def normalize(spec: GroupSpec, w: Iterable[Letter], start: NormalForm = IDENTITY) -> NormalForm:
    nf = start
    for x in w:
        nf = append_letter(spec, nf, x)
    return nf


def spell_nf(nf: NormalForm) -> Word:
    letters = list(power(A, nf.head_a) + power(T, nf.head_t))
    for b in nf.blocks:
        letters.append(Letter(b.index, b.sign))
        letters.extend(power(A, b.tail))
    return tuple(letters)


def nf_length(nf: NormalForm) -> int:
    return abs(nf.head_a) + abs(nf.head_t) + sum(1 + abs(b.tail) for b in nf.blocks)


def headers(nf: NormalForm) -> tuple:
    """The (index, sign) sequence of stable letters."""
    return tuple((b.index, b.sign) for b in nf.blocks)


def word_problem(spec: GroupSpec, w: Iterable[Letter]) -> bool:
    return normalize(spec, w) == IDENTITY


def equal_elements(spec: GroupSpec, w1: Iterable[Letter], w2: Iterable[Letter]) -> bool:
    return normalize(spec, w1) == normalize(spec, w2)


def is_valid_nf(spec: GroupSpec, nf: NormalForm) -> bool:
    prev = None
    for b in nf.blocks:
        if not 1 <= b.index <= spec.k or b.sign not in (1, -1):
            return False
        if prev is not None and prev.index == b.index and prev.sign == -b.sign and prev.tail == 0:
            return False
        prev = b
    return True


def nf_to_dict(nf: NormalForm) -> dict:
    return {
        "head_a": nf.head_a,
        "head_t": nf.head_t,
        "blocks": [{"index": b.index, "sign": b.sign, "tail": b.tail} for b in nf.blocks],
        "spelled": spell_word(spell_nf(nf)),
    }


def nf_from_dict(data: dict) -> NormalForm:
    blocks = tuple(Block(int(b["index"]), int(b["sign"]), int(b["tail"])) for b in data["blocks"])
    return NormalForm(int(data["head_a"]), int(data["head_t"]), blocks)


def nf_to_json(nf: NormalForm) -> str:
    return json.dumps(nf_to_dict(nf))


# -- rewrite traces ---------------------------------------------------------


class Step(NamedTuple):
    """One elementary move: ``before`` at ``position`` is replaced by ``after``.

    ``kind`` is one of free_cancel, free_insert, commute, relator, pinch.
    """

    kind: str
    position: int
    before: tuple
    after: tuple


def _sgn(n: int) -> int:
    return (n > 0) - (n < 0)


class _Tracer:
    def __init__(self, spec: GroupSpec):
        self.spec = spec
        self.word: list = []
        self.steps: list = []

    def _apply(self, kind, pos, before, after):
        assert tuple(self.word[pos:pos + len(before)]) == before, (kind, pos)
        self.word[pos:pos + len(before)] = after
        self.steps.append(Step(kind, pos, before, after))

    def commute(self, pos):
        x, y = self.word[pos], self.word[pos + 1]
        self._apply("commute", pos, (x, y), (y, x))

    def cancel(self, pos):
        x, y = self.word[pos], self.word[pos + 1]
        self._apply("pinch" if x.is_stable else "free_cancel", pos, (x, y), ())

    def merge(self, junction) -> int:
        """Cancel inverse a-letters across ``junction``; return the count."""
        w = self.word
        count = 0
        while 0 < junction < len(w):
            x, y = w[junction - 1], w[junction]
            if x.gen != A or y.gen != A or x.sign == y.sign:
                break
            self.cancel(junction - 1)
            junction -= 1
            count += 1
        return count

    def absorb(self, nf: NormalForm, x: Letter) -> None:
        """Rewrite ``spell_nf(nf) + [x]`` (already in self.word) into canonical form."""
        p = len(self.word) - 1
        if x.gen == A:
            if nf.blocks:
                self.merge(p)
            else:
                for q in range(p, abs(nf.head_a), -1):
                    self.commute(q - 1)
                self.merge(abs(nf.head_a))
        elif x.gen == T:
            self._push_t(nf, x.sign, p)
        else:
            if nf.blocks:
                last = nf.blocks[-1]
                if last.index == x.gen and last.sign == -x.sign and last.tail == 0:
                    self.cancel(p - 1)

    def _push_t(self, nf: NormalForm, eps: int, pos: int) -> None:
        w = self.word
        t_letter = Letter(T, eps)
        deposit = 0
        nblocks = len(nf.blocks)
        for j in range(nblocks):
            while w[pos - 1].gen == A:
                self.commute(pos - 1)
                pos -= 1
            s = w[pos - 1]
            n = self.spec.exponent(s.gen)
            c = Letter(A, _sgn(n) or 1)
            m = abs(n)
            if s.sign > 0:
                if eps < 0:
                    # b T -> T b a^n
                    self._apply("relator", pos - 1, (s, t_letter), (t_letter, s) + power(A, n))
                else:
                    # b t -> b a^n a^-n t -> b a^n t a^-n -> t b a^-n
                    for r in range(m):
                        self._apply("free_insert", pos + r, (), (c, c.inverse()))
                    for r in range(m):
                        self.commute(pos + 2 * m - 1 - r)
                    self._apply(
                        "relator", pos - 1, (s,) + power(A, n) + (t_letter,), (t_letter, s)
                    )
                pos -= 1
                self.merge(pos + 2 + m)
                deposit = 0
            else:
                if eps > 0:
                    # B t -> a^n t B
                    self._apply("relator", pos - 1, (s, t_letter), power(A, n) + (t_letter, s))
                else:
                    # B T -> T a^-n B -> a^-n T B
                    self._apply("relator", pos - 1, (s, t_letter), (t_letter,) + power(A, -n) + (s,))
                    for r in range(m):
                        self.commute(pos - 1 + r)
                pos = pos - 1 + m
                deposit = m
                if j < nblocks - 1:
                    pos -= 2 * self.merge(pos - m)
                    deposit = 0
        # head stage: a^alpha t^beta d^deposit t^eps
        ha, ht = abs(nf.head_a), abs(nf.head_t)
        if deposit:
            for r in range(deposit):
                for q in range(ha + ht + r, ha + r, -1):
                    self.commute(q - 1)
            pos -= 2 * self.merge(ha)
        if ht and w[pos - 1].sign != eps:
            self.cancel(pos - 1)


def rewrite_trace(spec: GroupSpec, w: Iterable[Letter]) -> list:
    """Elementary steps taking ``w`` to ``spell_nf(normalize(spec, w))``.

    Letters are absorbed left to right; positions refer to the whole word, so
    the unprocessed suffix is never touched.
    """
    w = tuple(w)
    tracer = _Tracer(spec)
    nf = IDENTITY
    for x in w:
        tracer.word.append(x)
        tracer.absorb(nf, x)
        nf = append_letter(spec, nf, x)
        assert tuple(tracer.word) == spell_nf(nf)
    return tracer.steps
