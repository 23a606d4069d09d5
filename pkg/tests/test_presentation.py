import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mismatch.presentation import (
    A,
    T,
    GroupSpec,
    Letter,
    WordParseError,
    invert,
    parse_word,
    spell_word,
)
from mismatch.rewrite import word_problem

SPEC = GroupSpec((1, 2))
a, A_, t, T_ = Letter(A, 1), Letter(A, -1), Letter(T, 1), Letter(T, -1)
b1, B1, b2, B2 = Letter(1, 1), Letter(1, -1), Letter(2, 1), Letter(2, -1)

words = st.lists(st.sampled_from(SPEC.alphabet), max_size=30).map(tuple)


def test_parse_examples():
    assert parse_word(SPEC, "a^3 B2 t^-2") == (a, a, a, B2, T_, T_)
    assert parse_word(SPEC, "") == ()
    assert parse_word(SPEC, "b1^-1 t b1") == (B1, t, b1)


def test_uppercase_composes_with_exponent():
    assert parse_word(SPEC, "B2^-1") == (b2,)
    assert parse_word(SPEC, "A^2") == (A_, A_)
    assert parse_word(SPEC, "T^-1 a^0") == (t,)


@pytest.mark.parametrize(
    "text, token, position",
    [("a c", "c", 2), ("b3", "b3", 0), ("t a^x", "a^x", 2), ("a^", "a^", 0), ("b", "b", 0)],
)
def test_parse_errors_name_token_and_position(text, token, position):
    with pytest.raises(WordParseError) as info:
        parse_word(SPEC, text)
    assert info.value.token == token
    assert info.value.position == position


def test_spell_examples():
    assert spell_word((a, a, a)) == "a^3"
    assert spell_word(()) == ""
    assert spell_word((B2, t)) == "B2 t"


def test_invert_examples():
    assert invert((a, t)) == (T_, A_)
    assert invert(()) == ()
    assert invert((B1,)) == (b1,)


def test_alphabet_size():
    for exps in [(1,), (1, 2), (0, 0, -3)]:
        spec = GroupSpec(exps)
        assert len(spec.alphabet) == 2 * (spec.k + 2)
        assert len(set(spec.alphabet)) == len(spec.alphabet)


def test_groupspec_serialization():
    spec = GroupSpec((-2, 0, 5, 5))
    assert json.loads(spec.to_json()) == {"exponents": [-2, 0, 5, 5]}
    assert GroupSpec.from_json(spec.to_json()) == spec
    assert GroupSpec.from_flag("-2,0,5,5") == spec
    with pytest.raises(ValueError):
        GroupSpec(())
    with pytest.raises(ValueError):
        GroupSpec.from_flag("1,x")


def test_subgroup_membership_is_trivial_on_a_powers():
    assert SPEC.in_stable_subgroup(1, 0) and SPEC.in_twisted_subgroup(2, 0)
    assert not SPEC.in_stable_subgroup(1, 3) and not SPEC.in_twisted_subgroup(2, -1)


@given(words)
def test_parse_spell_round_trip(w):
    text = spell_word(w)
    assert parse_word(SPEC, text) == w
    assert spell_word(parse_word(SPEC, text)) == text


@given(words)
def test_invert_is_involution_and_inverse(w):
    assert invert(invert(w)) == w
    assert word_problem(SPEC, w + invert(w))
