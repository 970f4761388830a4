import pytest
from hypothesis import given, settings, strategies as st

from bandpath.codec import (connected_sum, from_braid, linking_matrix, linking_number, mirror,
                            parse_pd, reverse_component, split_union, total_linking, unknot, unlink)
from bandpath.errors import (BadArc, BadComponentIndex, InconsistentArcs, MalformedPd,
                             SameComponent)

from conftest import HOPF_NEG, TREFOIL_RH


def test_unknot_from_loop_count():
    d = parse_pd("PD[]; loops=1")
    assert d.mu == 1
    assert len(d) == 0
    assert parse_pd("PD[; loops=1]").mu == 1


def test_negative_hopf_signs():
    d = parse_pd(HOPF_NEG)
    assert d.mu == 2
    assert d.signs() == [-1, -1]
    assert linking_number(d, 0, 1) == -1


def test_arc_used_once_is_rejected():
    with pytest.raises(InconsistentArcs):
        parse_pd("PD[X[1,2,3,4], X[4,1,2,5]]")


@pytest.mark.parametrize("text", ["", "PD[X[1,2,3]]", "PD[X[0,1,1,0]]", "PD[X[1,2,2,1] junk]",
                                  "PD[X[1,1,2,2]; loopz=1]", "PD[]"])
def test_malformed_pd(text):
    with pytest.raises(MalformedPd):
        parse_pd(text)


def test_mirror_examples():
    u = unknot()
    assert mirror(u) == u
    h = parse_pd(HOPF_NEG)
    assert mirror(h).signs() == [1, 1]
    assert mirror(mirror(h)) == h


def test_reverse_component_examples():
    h = parse_pd(HOPF_NEG)
    r = reverse_component(h, 1)
    assert linking_number(r, 0, 1) == 1
    t = parse_pd(TREFOIL_RH)
    assert reverse_component(t, 0).signs() == t.signs()
    assert reverse_component(reverse_component(h, 0), 0).canonical() == h.canonical()
    with pytest.raises(BadComponentIndex):
        reverse_component(h, 2)


def test_sums_and_unions():
    s = connected_sum(unknot(), unknot())
    assert s.mu == 1 and len(s) == 0
    t = parse_pd(TREFOIL_RH)
    tt = connected_sum(t, t)
    assert tt.mu == 1 and len(tt) == 6
    u = split_union(unknot(), parse_pd(HOPF_NEG))
    assert u.mu == 3
    with pytest.raises(BadArc):
        connected_sum(t, t, arc_a=99)


def test_linking_examples(atlas):
    assert total_linking(atlas.record("2^2_1").pd) == -1
    assert total_linking(unlink(2)) == 0
    assert total_linking(atlas.record("4^2_1'").pd) == 2
    with pytest.raises(SameComponent):
        linking_number(parse_pd(HOPF_NEG), 0, 0)


def test_shipped_pd_round_trip(atlas):
    for name in atlas.names():
        rec = atlas.records[name]
        for d in (rec.pd,) + rec.alternates:
            again = parse_pd(d.to_pd())
            assert again.canonical() == d.canonical(), name
            assert again.signs() == d.signs(), name


def test_operations_preserve_mu_and_flip_linking(atlas):
    for name in atlas.names():
        d = atlas.records[name].pd
        m = mirror(d)
        assert m.mu == d.mu
        assert m.writhe() == -d.writhe()
        assert total_linking(m) == -total_linking(d)
        for c in range(d.mu):
            assert reverse_component(d, c).mu == d.mu
        if d.mu == 2 and len(d.components) == 2:
            assert total_linking(reverse_component(d, 1)) == -total_linking(d)


words = st.lists(st.integers(1, 3).flatmap(lambda g: st.sampled_from([g, -g])), min_size=1, max_size=8)


@settings(max_examples=60, deadline=None)
@given(words)
def test_braid_closures_round_trip(word):
    d = from_braid(word, 4)
    again = parse_pd(d.to_pd())
    assert again.mu == d.mu
    assert sorted(again.signs()) == sorted(d.signs())
    assert total_linking(again) == total_linking(d)
    assert mirror(mirror(d)) == d


def test_linking_matrix_matches_spherogram(atlas):
    spherogram = pytest.importorskip("spherogram")
    for name in atlas.names():
        d = atlas.records[name].pd
        if d.loops or d.mu < 2:
            continue
        quads = [[s - 1 for s in x.strands] for x in d.crossings]
        L = spherogram.Link(quads)
        theirs = L.linking_matrix()
        ours = linking_matrix(d)
        flat = lambda M: sorted(M[i][j] for i in range(len(M)) for j in range(len(M)) if i < j)
        assert flat(ours) == flat(theirs), name
