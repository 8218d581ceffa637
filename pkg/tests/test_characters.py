"""Dirichlet characters: construction, validation, enumeration, JSON."""

import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from genocchi import characters as ch
from genocchi.characters import RootOfUnity
from genocchi.errors import (
    CharacterError,
    NonRealCharacterInExactBackend,
    NotMultiplicative,
    SupportViolation,
    WrongLength,
)

odd = st.integers(min_value=0, max_value=40).map(lambda k: 2 * k + 1)


def test_principal_and_quadratic_tables():
    assert ch.principal(3).table() == [0, 1, 1]
    assert ch.quadratic(3).table() == [0, 1, -1]
    assert ch.quadratic(5).table()[1:] == [1, -1, -1, 1]
    assert ch.principal(1).table() == [1]


def test_from_table():
    assert ch.from_table(3, [0, 1, -1]) == ch.quadratic(3)
    assert ch.from_table(3, [0, 1, 1]) == ch.principal(3)


def test_non_multiplicative_table():
    with pytest.raises(NotMultiplicative) as info:
        ch.from_table(3, [0, 1, 2])
    assert info.value.residues == (2, 2)


def test_support_violation_names_residue():
    with pytest.raises(SupportViolation) as info:
        ch.from_table(3, [1, 1, -1])
    assert info.value.residues == (0,)


def test_wrong_length():
    with pytest.raises(WrongLength):
        ch.from_table(5, [0, 1, -1])


@pytest.mark.parametrize("d", [0, -3, 4, 2.0])
def test_bad_modulus(d):
    with pytest.raises(CharacterError):
        ch.principal(d)


def test_enumeration_counts():
    assert len(ch.enumerate_characters(1)) == 1
    assert len(ch.enumerate_characters(3)) == 2
    chars = ch.enumerate_characters(5)
    assert len(chars) == 4
    assert sorted(c.turn(2) for c in chars) == [0, Fraction(1, 4), Fraction(1, 2),
                                               Fraction(3, 4)]


def test_values_and_backends():
    assert ch.value(ch.principal(1), 7, "exact") == 1
    assert ch.value(ch.quadratic(3), -1, "exact") == -1
    order4 = next(c for c in ch.enumerate_characters(5) if c.turn(2) == Fraction(1, 4))
    assert ch.value(order4, 2, "float") == 1j
    with pytest.raises(NonRealCharacterInExactBackend):
        ch.value(order4, 2, "exact")


def test_json_round_trip(tmp_path):
    for chi in ch.enumerate_characters(7):
        path = tmp_path / "chi.json"
        path.write_text(json.dumps(chi.to_json()))
        assert ch.load(path) == chi


def test_json_kind_shortcuts():
    assert ch.from_json({"modulus": 5, "kind": "quadratic"}) == ch.quadratic(5)
    with pytest.raises(CharacterError):
        ch.from_json({"modulus": 3, "kind": "quadratic", "values": [0, 1, 1]})
    with pytest.raises(CharacterError):
        ch.from_json({"kind": "table"})


def test_malformed_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(CharacterError):
        ch.load(path)


def test_root_of_unity_reduces():
    assert RootOfUnity(6, 8) == RootOfUnity(3, 4)
    assert complex(RootOfUnity(1, 2)) == -1


@given(odd)
def test_enumeration_is_a_group(d):
    chars = ch.enumerate_characters(d)
    assert len(chars) == ch.euler_phi(d)
    assert len(set(chars)) == len(chars)
    assert sum(c.is_principal for c in chars) == 1


@given(odd, st.data())
def test_enumerated_characters_are_valid(d, data):
    chi = data.draw(st.sampled_from(ch.enumerate_characters(d)))
    for a in range(d):
        assert (chi.turn(a) is None) == (math.gcd(a, d) != 1)
    for a in range(d):
        for b in range(d):
            ta, tb, tc = chi.turn(a), chi.turn(b), chi.turn(a * b)
            if ta is not None and tb is not None:
                assert (ta + tb - tc) % 1 == 0
    assert ch.from_table(d, chi.table()) == chi


@given(odd)
def test_orthogonality(d):
    for chi in ch.enumerate_characters(d):
        expected = ch.euler_phi(d) if chi.is_principal else 0
        assert abs(ch.character_sum(chi) - expected) < 1e-9


@given(odd.filter(lambda d: d > 1), st.integers(-200, 200))
def test_quadratic_is_jacobi(d, a):
    assert ch.quadratic(d).exact(a) == ch.jacobi(a, d)
