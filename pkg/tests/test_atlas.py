import shutil

import pytest

from bandpath.atlas import DATA_DIR, load_atlas
from bandpath.errors import ConventionViolation, MalformedAtlas, ParityViolation, UnknownName
from bandpath.pathways import build_graph


def _copy(tmp_path):
    root = tmp_path / "atlas"
    shutil.copytree(DATA_DIR, root)
    return root


def _table_names(atlas):
    for t in (1, 2, 3):
        for e in atlas.expected_table(t):
            yield from (e.a, e.b) + e.intermediate


def test_atlas_covers_every_table_name(atlas):
    assert len(atlas.names()) >= 60
    for name in set(_table_names(atlas)):
        rec = atlas.record(name)
        assert rec.pd.mu == atlas.mu(name), name


def test_linking_anchors(atlas):
    assert atlas.bundle("2^2_1").total_lk == -1
    assert atlas.bundle("2^2_1'").total_lk == 1
    assert atlas.bundle("4^2_1'").total_lk == 2
    assert atlas.bundle("5^2_1").total_lk == 0


def test_aliases_resolve(atlas):
    assert atlas.canonical("2^2_1!") == "2^2_1'"
    assert atlas.canonical("4_1!") == "4_1"
    assert atlas.canonical("0_1#3_1") == "3_1"
    assert atlas.canonical("2^2_1#3_1") == "3_1#2^2_1"
    assert "3_1!#2^2_1'" in atlas
    assert "8_19" not in atlas
    with pytest.raises(UnknownName):
        atlas.record("8_19")


def test_literature_intermediate_is_flagged(atlas):
    assert "literature" in atlas.records["9_5"].convention_notes


def _has(atlas, a, b):
    ca, cb = atlas.canonical(a), atlas.canonical(b)
    return any({c.a, c.b} == {ca, cb} for c in atlas.certificates())


def test_certificate_examples(atlas):
    assert _has(atlas, "3_1", "5^2_1")
    assert _has(atlas, "7_5", "6^2_1")
    assert _has(atlas, "0_1", "2^2_1")


def test_certificates_change_mu_by_one(atlas):
    for c in atlas.certificates():
        assert abs(atlas.mu(c.a) - atlas.mu(c.b)) == 1, c
        assert c.source.split("(")[0] in ("Figure5", "Figure6", "TableIntermediate", "Literature")


def test_expected_table_examples(atlas):
    t1 = {(e.a, e.b): e for e in atlas.expected_table(1)}
    e = t1["3_1", "6_1"]
    assert (e.value, e.corrected, e.intermediate) == (4, "†", ("0_1",))
    t2 = {(e.a, e.b): e for e in atlas.expected_table(2)}
    e = t2["6^2_2", "5_1"]
    assert (e.value, e.corrected) == (1, "†††")
    t3 = {(e.a, e.b): e for e in atlas.expected_table(3)}
    e = t3["0^2_1", "2^2_1"]
    assert (e.value, e.intermediate) == (2, ("0_1",))
    with pytest.raises(ValueError):
        atlas.expected_table(4)


def test_set_entries_keep_smallest_value(atlas):
    sets = [e for t in (1, 2, 3) for e in atlas.expected_table(t) if e.is_set]
    assert sets
    for e in sets:
        assert e.value == min(e.distance) < max(e.distance)


def test_star_entries_have_only_link_intermediates(atlas, graph):
    stars = [e for e in atlas.expected_table(3) if e.star == "*"]
    assert len(stars) >= 4
    for e in stars:
        a, b = atlas.canonical(e.a), atlas.canonical(e.b)
        for mid in e.intermediate:
            m = atlas.canonical(mid)
            assert atlas.mu(m) == 3
            assert graph.has_edge(a, m) and graph.has_edge(m, b), e
        knots = [k for k in graph.neighbours(a) if atlas.mu(k) == 1 and graph.has_edge(k, b)]
        assert knots == [], e


def test_mu_mismatch_is_a_convention_violation(tmp_path):
    root = _copy(tmp_path)
    path = root / "atlas.txt"
    lines = path.read_text().splitlines()
    hopf = next(l for l in lines if l.startswith("2^2_1 |"))
    knot = next(l for l in lines if l.startswith("3_1 |"))
    lines[lines.index(hopf)] = "2^2_1 |" + knot.split("|", 1)[1]
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ConventionViolation):
        load_atlas(root, cache_path=tmp_path / "c.json")


def test_anchor_violation_is_reported(tmp_path):
    root = _copy(tmp_path)
    path = root / "atlas.txt"
    lines = path.read_text().splitlines()
    i = next(i for i, l in enumerate(lines) if l.startswith("2^2_1' |"))
    j = next(i for i, l in enumerate(lines) if l.startswith("2^2_1 |"))
    lines[i], lines[j] = "2^2_1' |" + lines[j].split("|", 1)[1], "2^2_1 |" + lines[i].split("|", 1)[1]
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(ConventionViolation):
        load_atlas(root, cache_path=tmp_path / "c.json")


@pytest.mark.parametrize("line", ["3_1 | PD[X[1,2,3]]", "3_1 | PD[X[1,5,2,4]] | notes | extra",
                                  "3 1 | PD[] ; loops=1 | x"])
def test_malformed_atlas_lines(tmp_path, line):
    root = _copy(tmp_path)
    with open(root / "atlas.txt", "a") as fh:
        fh.write(line + "\n")
    with pytest.raises(MalformedAtlas):
        load_atlas(root, cache_path=tmp_path / "c.json")


def test_unknown_certificate_source(tmp_path):
    root = _copy(tmp_path)
    with open(root / "certificates.txt", "a") as fh:
        fh.write("0_1 | 2^2_1 | Rumour\n")
    with pytest.raises(MalformedAtlas):
        load_atlas(root, cache_path=tmp_path / "c.json")


def test_fabricated_knot_edge_is_rejected(tmp_path):
    root = _copy(tmp_path)
    with open(root / "certificates.txt", "a") as fh:
        fh.write("3_1 | 4_1 | Literature(test)\n")
    with pytest.raises(ParityViolation):
        load_atlas(root, cache_path=tmp_path / "c.json")
    at = load_atlas(root, cache_path=tmp_path / "c.json", validate=False)
    with pytest.raises(ParityViolation):
        build_graph(at)


def test_missing_directory(tmp_path):
    with pytest.raises(MalformedAtlas):
        load_atlas(tmp_path)
