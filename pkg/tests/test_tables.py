import json

import pytest

from wsuper.algebra import build_osp, export_table, import_table
from wsuper.errors import TableError, ValidationError


def canonical(doc):
    return json.dumps(doc, sort_keys=True)


def test_round_trip_is_identity():
    alg = build_osp(1, 2)
    doc = export_table(alg)
    again = export_table(import_table(doc))
    assert canonical(doc) == canonical(again)


def test_import_matches_builtin_constructor():
    alg = build_osp(1, 2)
    back = import_table(export_table(alg))
    assert back.dim == alg.dim
    assert back.parity == alg.parity
    assert back.brackets == alg.brackets
    assert back.form == alg.form


def test_import_missing_form_is_an_error():
    doc = export_table(build_osp(1, 2))
    doc["form"] = []
    with pytest.raises(TableError, match="form"):
        import_table(doc)


def test_import_reports_location_of_malformed_entry():
    doc = export_table(build_osp(1, 2))
    doc["brackets"][2]["terms"][0]["den"] = "0"
    with pytest.raises(TableError, match=r"brackets\[2\]"):
        import_table(doc)


def test_import_rejects_out_of_range_index():
    doc = export_table(build_osp(1, 2))
    doc["form"].append({"i": 99, "j": 0, "num": "1", "den": "1"})
    with pytest.raises(TableError, match=r"form\["):
        import_table(doc)


def test_import_validates_axioms_and_names_the_first_violation():
    doc = export_table(build_osp(1, 2))
    # corrupt one structure constant so super-antisymmetry breaks
    doc["brackets"][0]["terms"][0]["num"] = str(
        int(doc["brackets"][0]["terms"][0]["num"]) + 1)
    with pytest.raises(ValidationError, match="antisymmetry|jacobi|invariant"):
        import_table(doc)


def test_arbitrary_precision_integers_survive():
    alg = build_osp(1, 2)
    doc = export_table(alg)
    big = 10 ** 40
    doc["form"] = [{"i": e["i"], "j": e["j"],
                    "num": str(int(e["num"]) * big), "den": str(big)}
                   for e in doc["form"]]
    back = import_table(doc)
    assert back.form == alg.form
