import json
import shutil

import pytest

from optcurves.catalog import (
    CatalogError,
    appendix_entries,
    catalog_path,
    exceptional_rows,
    factored_to_int,
    fixture_rows,
    load_catalog,
    prose_orders,
    special_form,
    t_sets,
    table_orders,
)


def test_loads_and_verifies_checksum():
    cat = load_catalog()
    assert cat["version"] == 1


def test_checksum_mismatch_detected(tmp_path):
    src = catalog_path()
    bad = tmp_path / "catalog.json"
    text = src.read_text().replace('"version": 1', '"version": 1 ')
    bad.write_text(text)
    shutil.copy(src.with_suffix(".sha256"), tmp_path / "catalog.sha256")
    with pytest.raises(CatalogError, match="checksum"):
        load_catalog(bad)


def test_missing_catalog(tmp_path):
    with pytest.raises(CatalogError, match="not found"):
        load_catalog(tmp_path / "nope.json")


def test_env_override(tmp_path, monkeypatch):
    target = tmp_path / "cat.json"
    shutil.copy(catalog_path(), target)
    # no sidecar: checksum step is skipped
    monkeypatch.setenv("OPTCURVES_CATALOG", str(target))
    assert catalog_path() == target
    cat = load_catalog()
    assert cat["version"] == 1


def test_fixture_rows_shape():
    rows = fixture_rows(-11)
    assert len(rows) == 11
    assert [r["q"] for r in rows] == [23, 59, 113, 383, 509, 563, 1193,
                                      1409, 3083, 4973, 6323]
    for r in rows:
        assert len(r["maximal"]) == 2
        assert len(r["minimal"]) == 2
        assert len(r["glue"]) == 4
        assert len(r["genus2"]) == 4
        assert r["m"] ** 2 - 4 * r["q"] == r["d"]
    assert fixture_rows(-11)[5]["d"] == -43  # the q=563 oddity
    errata_qs = {r["q"] for r in rows if r.get("errata")}
    assert errata_qs == {1193, 6323}


def test_appendix_shape():
    ents = appendix_entries()
    assert len(ents) == 22
    assert sum(1 for e in ents if e["dim"] == 4) == 6
    assert sum(1 for e in ents if e["dim"] == 5) == 16
    for e in ents:
        assert e["discriminant"] == -19
        assert len(e["gram_lower"]) == e["dim"]
        assert e["generators"]
        assert e["relations"]
        for g in e["generators"].values():
            assert len(g) == e["dim"]
            assert all(len(row) == e["dim"] for row in g)


def test_table_orders():
    assert table_orders(-3, 6) == [2**9 * 3**7 * 5 * 7]
    assert table_orders(-3, 7) == []  # printed dash
    assert table_orders(-3, 11) is None  # outside the table
    assert len(table_orders(-4, 10)) == 11
    assert 2**4 * 3 * 7 in table_orders(-7, 3)
    assert table_orders(-8, 2) == [2**4 * 3]


def test_prose_orders_and_t_sets():
    assert prose_orders(-11, 4) == [2**5 * 3**2, 2**4 * 3 * 5, 2**4 * 3**2]
    assert prose_orders(-11, 5)[0] == 2**3 * 3 * 5 * 11
    ts = t_sets()
    assert len(ts["T1"]) == 7
    assert len(ts["T2"]) == 4
    assert ts["T3"] == [[[2, 5], [3, 3]]]
    assert ts["notes"]


def test_exceptional_rows():
    rows = exceptional_rows()
    assert [r["p"] for r in rows] == [7, 11, 13, 17, 19]
    assert [r["g"] for r in rows] == [3, 5, 6, 8, 9]
    assert factored_to_int(rows[0]["printed_order"]) == 672
    assert factored_to_int(rows[1]["printed_order"]) == 1980


def test_special_forms_present():
    for name in ("genus2_d-11", "genus3_d-19"):
        sf = special_form(name)
        assert "gram_lower" in sf
    with pytest.raises(CatalogError):
        special_form("no-such-form")


def test_factored_to_int():
    assert factored_to_int([[2, 4], [3, 1]]) == 48
    assert factored_to_int([]) == 1
