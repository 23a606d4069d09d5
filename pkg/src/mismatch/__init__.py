"""Normal forms, automata and fellow-traveller experiments for the
linearly mismatched free-by-cyclic groups < a, t, b1..bk | at=ta, Bi t bi = a^ni t >."""

from .presentation import A, T, GroupSpec, Letter, WordParseError, invert, parse_word, spell_word
from .rewrite import (
    IDENTITY,
    Block,
    NormalForm,
    append_letter,
    equal_elements,
    normalize,
    rewrite_trace,
    spell_nf,
    word_problem,
)

__version__ = "0.1.0"
