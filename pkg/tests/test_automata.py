import itertools
import json

import pytest

from mismatch.automata import (
    Automaton,
    EnumerationLimitExceeded,
    accepts,
    automaton_from_json,
    build_acceptor,
    enumerate_accepted,
    export_automaton,
)
from mismatch.presentation import GroupSpec, Letter, parse_word, spell_word
from mismatch.rewrite import normalize, spell_nf

SPEC = GroupSpec((1, 2))
AUT = build_acceptor(SPEC)


def acc(text):
    return accepts(AUT, parse_word(SPEC, text))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("a a t t", True),
        ("b1 B1", False),
        ("t a", False),
        ("a t B2 a^5 b1", True),
        ("", True),
        ("a A", False),
        ("a^2 t B2", True),
        ("t T", False),
        ("B1 a^0 b1", False),
        ("B1 a b1", True),
        ("b1 b1 B2 A^3 b2", True),
    ],
)
def test_membership(text, expected):
    assert acc(text) is expected


def test_accepted_example_is_a_normalize_fixed_point():
    w = parse_word(SPEC, "a t B2 a^5 b1")
    assert spell_nf(normalize(SPEC, w)) == w


@pytest.mark.parametrize("exps", [(1, 2), (0,), (-3, 0, 2)])
def test_characterization_small(exps):
    spec = GroupSpec(exps)
    aut = build_acceptor(spec)
    for n in range(4):
        for w in itertools.product(spec.alphabet, repeat=n):
            assert accepts(aut, w) == (spell_nf(normalize(spec, w)) == w)


def test_enumerate_examples():
    assert enumerate_accepted(AUT, 0) == [()]
    assert [spell_word(w) for w in enumerate_accepted(AUT, 1)] == [
        "", "a", "A", "t", "T", "b1", "B1", "b2", "B2"
    ]
    brute = [w for n in range(3) for w in itertools.product(SPEC.alphabet, repeat=n) if accepts(AUT, w)]
    assert len(enumerate_accepted(AUT, 2)) == len(brute) == 53


def test_enumeration_is_length_lex_and_injective():
    words = enumerate_accepted(AUT, 4)
    order = {x: i for i, x in enumerate(SPEC.alphabet)}
    keys = [(len(w), [order[x] for x in w]) for w in words]
    assert keys == sorted(keys)
    nfs = {normalize(SPEC, w) for w in words}
    assert len(nfs) == len(words)


def test_enumeration_cap():
    with pytest.raises(EnumerationLimitExceeded) as info:
        enumerate_accepted(AUT, 6, limit=1000)
    assert info.value.limit == 1000


def test_json_export_state_count_matches_construction():
    data = json.loads(export_automaton(AUT, "json"))
    # start, 2 head-a, 2 head-t, 2k after-stable, 2 tail states
    assert len(data["states"]) == 5 + 2 * SPEC.k + 2 == len(AUT.states)
    assert data["initial"] == "start"
    assert export_automaton(AUT, "json") == export_automaton(build_acceptor(SPEC), "json")


def test_json_round_trip():
    assert automaton_from_json(export_automaton(AUT, "json")) == AUT
    assert automaton_from_json(export_automaton(AUT, "json")).transitions == AUT.transitions


def test_dot_one_state():
    x = Letter(0, 1)
    aut = Automaton((x,), ("q",), "q", frozenset({"q"}), {("q", x): "q"})
    dot = export_automaton(aut, "dot")
    assert dot.startswith("digraph")
    assert dot.count("[shape=") == 1
    assert '"q" -> "q" [label="a"];' in dot


def test_dot_lists_every_transition():
    dot = export_automaton(AUT, "dot")
    assert dot.count("->") == len(AUT.transitions)
