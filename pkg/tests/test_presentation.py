import json

import pytest
from hypothesis import given

from conftest import presentations
from heegperm.presentation import (Letter, Presentation, PresentationError,
                                   PresentationSyntaxError, equal_up_to_rotation,
                                   is_trivially_reduced, parse_presentation,
                                   render_presentation, trivially_reduce,
                                   validate_for_encoding)

P, N = 1, -1


def word(*pairs):
    return tuple(Letter(g, s) for g, s in pairs)


def test_parse_single_generator():
    p = parse_presentation("< x | x >")
    assert p.generator_count == 1
    assert p.relators == (word((1, P)),)


def test_parse_commutator():
    p = parse_presentation("< x, y | x y x^-1 y^-1 >")
    assert p.generator_count == 2
    assert len(p.relators) == 1
    assert [l.sign for l in p.relators[0]] == [P, P, N, N]
    assert [l.gen for l in p.relators[0]] == [1, 2, 1, 2]
    assert p.names == ("x", "y")


def test_exponents_expand_to_runs():
    p = parse_presentation("<a,b|a^3 b^-2,b>")
    assert p.relators[0] == word((1, P), (1, P), (1, P), (2, N), (2, N))
    assert p.occurrence_counts == (3, 3)
    assert p.degree == 6


def test_empty_relator_list_and_identity_relator():
    assert parse_presentation("< x | >").relators == ()
    assert parse_presentation("< x | 1, x >").relators == ((), word((1, P)))


@pytest.mark.parametrize("text, fragment", [
    ("< x | y >", "undeclared generator 'y'"),
    ("< x, x | x >", "duplicate generator"),
    ("< x | x ^ >", "expected 'int'"),
    ("< x | x > junk", "expected 'end'"),
    ("< x | x $ >", "unexpected character"),
    ("x | x", "expected '<'"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation(text)
    assert fragment in str(info.value)
    assert info.value.position >= 0


def test_syntax_error_position():
    with pytest.raises(PresentationSyntaxError) as info:
        parse_presentation("< x | y >")
    assert info.value.position == 6


def test_relator_generator_out_of_range():
    with pytest.raises(PresentationError):
        Presentation(1, [[Letter(2, 1)]])


def test_bad_sign():
    with pytest.raises(PresentationError):
        Letter(1, 2)


@pytest.mark.parametrize("before, after", [
    (word((1, P), (1, N), (2, P)), word((2, P))),
    (word((1, P), (2, P)), word((1, P), (2, P))),
    (word((1, P), (2, P), (2, N), (1, N)), ()),
    (word((1, N), (2, P), (1, P)), word((1, N), (2, P), (1, P))),  # no cyclic reduction
])
def test_trivially_reduce(before, after):
    p = Presentation(2, [before])
    assert trivially_reduce(p).relators == (after,)


def test_reduction_keeps_empty_relators():
    p = trivially_reduce(Presentation(1, [word((1, P), (1, N)), word((1, P))]))
    assert p.relators == ((), word((1, P)))


def test_validate_for_encoding():
    assert validate_for_encoding(parse_presentation("< x, y | x >")) == [
        "generator y unused (k_2 = 0)"]
    assert validate_for_encoding(parse_presentation("< x | x >")) == []
    assert validate_for_encoding(Presentation(1, [[]])) == [
        "generator x1 unused (k_1 = 0)", "empty relator 1"]
    assert validate_for_encoding(parse_presentation("< x | x, 1 >")) == ["empty relator 2"]


def test_json_form():
    p = parse_presentation("< x, y | x y x^-1 y^-1 >")
    obj = p.to_json()
    assert obj == {"generators": ["x", "y"], "relators": [[[1, 1], [2, 1], [1, -1], [2, -1]]]}
    assert Presentation.from_json(json.loads(json.dumps(obj))) == p


def test_render():
    p = parse_presentation("<x,y|x^2 y^-1>")
    assert render_presentation(p) == "< x, y | x x y^-1 >"
    assert str(Presentation(2, [])) == "< x1, x2 | >"


@given(presentations())
def test_parse_render_round_trip(p):
    assert parse_presentation(render_presentation(p)) == p


@given(presentations(max_len=8))
def test_reduce_idempotent_and_shape_preserving(p):
    # presentations() already reduces; re-reduce an unreduced variant too
    noisy = Presentation(p.generator_count,
                         [r + (Letter(1, 1), Letter(1, -1)) for r in p.relators])
    once = trivially_reduce(noisy)
    assert trivially_reduce(once) == once
    assert once.generator_count == noisy.generator_count
    assert len(once.relators) == len(noisy.relators)
    assert is_trivially_reduced(once)
    for rel in once.relators:
        for a, b in zip(rel, rel[1:]):
            assert not (a.gen == b.gen and a.sign == -b.sign)


def test_equal_up_to_rotation():
    p = Presentation(2, [word((1, P), (2, P), (2, N))])
    q = Presentation(2, [word((2, N), (1, P), (2, P))])
    r = Presentation(2, [word((2, P), (1, P), (2, N))])
    assert equal_up_to_rotation(p, q)
    assert not equal_up_to_rotation(p, r)
