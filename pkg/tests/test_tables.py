import csv
import io

from bandpath.pathways import EXACT
from bandpath.tables import (COLUMNS, curated_entries, curated_keys, reproduce_entry,
                             reproduce_table, rows_to_csv, through_intermediate)


def _entry(atlas, table, a, b):
    return next(e for e in atlas.expected_table(table) if (e.a, e.b) == (a, b))


def test_reproduce_entry_examples(atlas, graph):
    r = reproduce_entry(_entry(atlas, 1, "3_1!", "3_1"), atlas, graph)
    assert (r.lower, r.annotated_bound, r.upper, r.status) == (4, 4, 4, EXACT)
    assert r.sound and r.matches
    r = reproduce_entry(_entry(atlas, 2, "0^2_1", "7_7"), atlas, graph)
    assert r.annotated_bound == 3 and r.sound


def test_through_intermediate(atlas, graph):
    assert through_intermediate(_entry(atlas, 1, "0_1", "3_1"), graph) == 2
    assert through_intermediate(_entry(atlas, 3, "0^2_1", "2^2_1"), graph) == 2


def test_csv_output(atlas, graph):
    rows = reproduce_table(atlas, 3, graph)
    text = rows_to_csv(rows)
    parsed = list(csv.DictReader(io.StringIO(text)))
    assert list(parsed[0]) == COLUMNS
    assert len(parsed) == len(atlas.expected_table(3))
    assert rows_to_csv(rows) == text


def test_set_entries_compare_against_smallest_value(atlas, graph):
    rows = [r for t in (1, 2, 3) for r in reproduce_table(atlas, t, graph) if r.entry.is_set]
    assert rows
    for r in rows:
        assert r.sound == (r.lower <= min(r.entry.distance))
        assert ";" in r.as_dict()["expected"]


def test_curated_subset_rule(atlas, graph):
    keys = curated_keys(atlas)
    assert len(keys) >= 100 and len(set(keys)) == len(keys)
    entries = curated_entries(atlas)
    assert len(entries) == len(keys)
    for e in entries:
        assert not e.is_set and e.intermediate
        assert e.method_annotation or e.value <= 2
        assert through_intermediate(e, graph) == e.value, (e.a, e.b)
