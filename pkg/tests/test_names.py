import pytest
from hypothesis import given, strategies as st

from bandpath.errors import MalformedName
from bandpath.names import LinkName, Term, parse_name


def test_mirror_postfix():
    t = parse_name("3_1!").term
    assert (t.crossing_number, t.components, t.index) == (3, None, 1)
    assert t.mirror and not t.prime


def test_prime_postfix():
    t = parse_name("2^2_1'").term
    assert (t.crossing_number, t.components, t.index) == (2, 2, 1)
    assert t.prime and not t.mirror


def test_connected_sum():
    n = parse_name("3_1#2^2_1")
    assert [t.render() for t in n.terms()] == ["3_1", "2^2_1"]
    assert n.mu == 2


def test_postfix_binds_tighter_than_sum():
    n = parse_name("3_1!#2^2_1'")
    a, b = n.terms()
    assert a.mirror and not a.prime
    assert b.prime and not b.mirror


def test_split_union_and_synonyms():
    n = parse_name("0_1U2^2_1")
    assert len(n.groups) == 2 and n.mu == 3
    assert parse_name("0_1⊔2^2_1") == n
    assert parse_name("3_1♯2^2_1") == parse_name("3_1#2^2_1")


def test_parenthesised_mirror_distributes():
    assert parse_name("(3_1#2^2_1')!").render() == "3_1!#2^2_1'!"


@pytest.mark.parametrize("text", ["", "3_", "3_1''x", "3_1#", "(3_1", "3_1'", "2^1_1", "3_0",
                                  "(0_1U2^2_1)!"])
def test_malformed_names(text):
    with pytest.raises(MalformedName):
        parse_name(text)


def test_atlas_names_round_trip(atlas):
    for name in atlas.names():
        n = parse_name(name)
        assert parse_name(n.render()) == n
        assert n.mu == atlas.records[name].pd.mu


terms = st.builds(
    lambda n, c, i, p, m: Term(n, c, i, bool(p and c), m),
    st.integers(0, 9), st.sampled_from([None, 2, 3]), st.integers(1, 9), st.booleans(), st.booleans())


@given(st.lists(st.lists(terms, min_size=1, max_size=3), min_size=1, max_size=3))
def test_render_round_trip(groups):
    n = LinkName(tuple(tuple(g) for g in groups))
    assert parse_name(n.render()) == n
    assert n.mirrored().mirrored() == n
