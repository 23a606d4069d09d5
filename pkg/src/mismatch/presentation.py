"""Group presentations, letters and the textual word syntax.

The groups handled here are

    G = < a, t, b1, ..., bk | at = ta, Bi t bi = a^ni t >

for an ordered list of integer exponents n1, ..., nk.  Letters are written
``a``, ``t``, ``b1`` ... ``bk``; an uppercase base denotes the inverse letter.
For k = 2 the usual names b, c correspond to b1, b2.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "A",
    "T",
    "GroupSpec",
    "Letter",
    "Word",
    "WordParseError",
    "parse_word",
    "spell_word",
    "invert",
    "power",
    "letter_name",
]

# Generator codes: 0 is a, -1 is t, i >= 1 is the stable letter bi.
A = 0
T = -1


class Letter(NamedTuple):
    gen: int
    sign: int

    @property
    def is_stable(self) -> bool:
        return self.gen >= 1

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)


Word = tuple  # tuple[Letter, ...]


class WordParseError(ValueError):
    """Raised for text that does not follow the word grammar."""

    def __init__(self, message: str, token: str, position: int):
        super().__init__(f"{message}: {token!r} at position {position}")
        self.token = token
        self.position = position


@dataclass(frozen=True)
class GroupSpec:
    exponents: tuple

    def __post_init__(self):
        exps = tuple(int(n) for n in self.exponents)
        if not exps:
            raise ValueError("at least one stable letter is required")
        object.__setattr__(self, "exponents", exps)

    @property
    def k(self) -> int:
        return len(self.exponents)

    def exponent(self, index: int) -> int:
        return self.exponents[index - 1]

    @property
    def alphabet(self) -> tuple:
        """All 2(k+2) letters in the canonical order a, A, t, T, b1, B1, ..."""
        gens = [A, T] + list(range(1, self.k + 1))
        return tuple(Letter(g, s) for g in gens for s in (1, -1))

    def is_valid_letter(self, x: Letter) -> bool:
        return x.sign in (1, -1) and (x.gen in (A, T) or 1 <= x.gen <= self.k)

    # Both associated subgroups <t> and <a^ni t> of Z^2 meet <a> trivially,
    # so a coset representative a^g lies in either subgroup iff g == 0.
    def in_stable_subgroup(self, index: int, a_exponent: int) -> bool:
        return a_exponent == 0

    def in_twisted_subgroup(self, index: int, a_exponent: int) -> bool:
        return a_exponent == 0

    def relators(self) -> list:
        """Defining relators: [a, t] followed by Bi t bi T a^-ni."""
        rels = [(Letter(A, 1), Letter(T, 1), Letter(A, -1), Letter(T, -1))]
        for i, n in enumerate(self.exponents, start=1):
            rels.append(
                (Letter(i, -1), Letter(T, 1), Letter(i, 1), Letter(T, -1)) + power(A, -n)
            )
        return rels

    def to_json(self) -> str:
        return json.dumps({"exponents": list(self.exponents)})

    @classmethod
    def from_json(cls, text: str) -> "GroupSpec":
        data = json.loads(text)
        return cls(tuple(data["exponents"]))

    @classmethod
    def from_flag(cls, text: str) -> "GroupSpec":
        """Parse the ``n1,n2,...,nk`` form used on the command line."""
        try:
            exps = tuple(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"bad exponent list {text!r}") from None
        return cls(exps)


def power(gen: int, exponent: int) -> Word:
    sign = 1 if exponent > 0 else -1
    return (Letter(gen, sign),) * abs(exponent)


def letter_name(x: Letter) -> str:
    if x.gen == A:
        base = "a"
    elif x.gen == T:
        base = "t"
    else:
        base = f"b{x.gen}"
    return base if x.sign > 0 else base.upper()


_TOKEN = re.compile(r"([aAtT]|[bB](\d+))(?:\^([+-]?\d+))?\Z")


def parse_word(spec: GroupSpec, text: str) -> Word:
    """Parse whitespace separated tokens such as ``a^3 B2 t^-2``.

    An uppercase base inverts the letter and composes with the exponent,
    so ``B2^-1`` is b2.  Exponents expand into repeated letters.
    """
    letters = []
    for m in re.finditer(r"\S+", text):
        token = m.group()
        tm = _TOKEN.match(token)
        if tm is None:
            if token[:1] in "aAtTbB" and "^" in token:
                raise WordParseError("malformed exponent", token, m.start())
            raise WordParseError("unknown base", token, m.start())
        base, index, exp = tm.groups()
        if base in "aA":
            gen = A
        elif base in "tT":
            gen = T
        else:
            gen = int(index)
            if not 1 <= gen <= spec.k:
                raise WordParseError(
                    f"stable index out of range 1..{spec.k}", token, m.start()
                )
        e = int(exp) if exp is not None else 1
        if base.isupper():
            e = -e
        letters.extend(power(gen, e))
    return tuple(letters)


def spell_word(w: Iterable[Letter]) -> str:
    """Canonical text for a word: equal adjacent letters collapse to powers."""
    tokens = []
    run = None
    count = 0
    for x in w:
        if x == run:
            count += 1
            continue
        if run is not None:
            tokens.append(_token(run, count))
        run, count = x, 1
    if run is not None:
        tokens.append(_token(run, count))
    return " ".join(tokens)


def _token(x: Letter, count: int) -> str:
    name = letter_name(x)
    return name if count == 1 else f"{name}^{count}"


def invert(w: Iterable[Letter]) -> Word:
    return tuple(x.inverse() for x in reversed(tuple(w)))
