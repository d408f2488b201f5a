"""Algebra-definition files: loose loading, canonical saving, exact round-trips."""

import json
from importlib import resources

import pytest

from jordanlab import algfile
from jordanlab.algfile import DuplicateProduct, IndexOutOfRange, ParseError
from jordanlab.corpus import algebra_keys, build_algebra
from jordanlab.fields import BadCoefficient


def e2_doc():
    return {
        "name": "e2",
        "field": {"kind": "Q"},
        "dim": 2,
        "basis": ["one", "n"],
        "unit": ["1/1", "0/1"],
        "products": [
            {"i": 0, "j": 0, "v": [["1/1", 0]]},
            {"i": 0, "j": 1, "v": [["1/1", 1]]},
        ],
    }


def test_documented_example_loads_with_unit():
    A = algfile.loads(json.dumps(e2_doc()))
    assert A.dim == 2 and A.field.kind == "Q"
    assert A.is_unital and A.unit.coords_str() == ["1/1", "0/1"]
    assert A.labels == ("one", "n")
    assert A.basis_element(1).square().is_zero()
    assert A.provenance["name"] == "e2"


def test_loose_coefficients_are_canonicalized():
    doc = e2_doc()
    doc["field"] = {"kind": "Fp", "p": 5}
    del doc["unit"]
    doc["products"] = [
        {"i": 0, "j": 0, "v": [["7", 0]]},      # 7 -> 2 mod 5
        {"i": 0, "j": 1, "v": [[6, 1]]},        # plain int accepted
    ]
    A = algfile.loads(json.dumps(doc))
    assert A.mul(A.basis_element(0), A.basis_element(0)).coords == (2, 0)
    assert A.mul(A.basis_element(0), A.basis_element(1)).coords == (0, 1)
    # saving canonicalizes
    text = algfile.dumps(A, name="canon")
    doc2 = json.loads(text)
    assert doc2["products"][0]["v"] == [["2", 0]]


def test_duplicate_terms_for_same_k_are_summed():
    doc = e2_doc()
    doc["products"] = [{"i": 0, "j": 0, "v": [["1/2", 0], ["1/2", 0]]}]
    del doc["unit"]
    A = algfile.loads(json.dumps(doc))
    assert A.basis_element(0).square().coords_str() == ["1/1", "0/1"]


def test_absent_pairs_multiply_to_zero():
    doc = e2_doc()
    doc["products"] = [{"i": 0, "j": 0, "v": [["1/1", 0]]}]
    del doc["unit"]
    A = algfile.loads(json.dumps(doc))
    assert A.mul(A.basis_element(0), A.basis_element(1)).is_zero()
    assert A.mul(A.basis_element(1), A.basis_element(1)).is_zero()


def test_error_i_greater_than_j():
    doc = e2_doc()
    doc["products"].append({"i": 1, "j": 0, "v": [["1/1", 0]]})
    with pytest.raises(ParseError, match="i <= j"):
        algfile.loads(json.dumps(doc))


def test_error_duplicate_product_record():
    doc = e2_doc()
    doc["products"].append({"i": 0, "j": 0, "v": [["2/1", 0]]})
    with pytest.raises(DuplicateProduct):
        algfile.loads(json.dumps(doc))


def test_error_index_out_of_range():
    doc = e2_doc()
    doc["products"][0]["v"] = [["1/1", 5]]
    with pytest.raises(IndexOutOfRange):
        algfile.loads(json.dumps(doc))
    doc = e2_doc()
    doc["products"][0]["i"] = 7
    with pytest.raises(IndexOutOfRange):
        algfile.loads(json.dumps(doc))


def test_error_bad_coefficient():
    doc = e2_doc()
    doc["products"][0]["v"] = [["1/0", 0]]
    with pytest.raises(BadCoefficient):
        algfile.loads(json.dumps(doc))
    doc = e2_doc()
    doc["products"][0]["v"] = [[True, 0]]
    with pytest.raises(BadCoefficient):
        algfile.loads(json.dumps(doc))


def test_error_wrong_unit():
    doc = e2_doc()
    doc["unit"] = ["0/1", "1/1"]     # n is no unit
    with pytest.raises(ParseError, match="unit"):
        algfile.loads(json.dumps(doc))
    doc = e2_doc()
    doc["unit"] = ["1/1"]
    with pytest.raises(ParseError, match="unit"):
        algfile.loads(json.dumps(doc))


def test_error_field_and_shape():
    doc = e2_doc()
    doc["field"] = {"kind": "R"}
    with pytest.raises(ParseError):
        algfile.loads(json.dumps(doc))
    doc = e2_doc()
    doc["field"] = {"kind": "Fp", "p": 4}
    with pytest.raises(ParseError):
        algfile.loads(json.dumps(doc))
    doc = e2_doc()
    doc["basis"] = ["one"]
    with pytest.raises(ParseError):
        algfile.loads(json.dumps(doc))
    doc = e2_doc()
    doc["extra"] = 1
    with pytest.raises(ParseError):
        algfile.loads(json.dumps(doc))
    with pytest.raises(ParseError):
        algfile.loads("{not json")
    with pytest.raises(ParseError):
        algfile.loads(json.dumps([1, 2]))


def test_save_load_round_trip_through_file(tmp_path):
    A = build_algebra("h2_f3")
    path = tmp_path / "h2.json"
    algfile.save(A, path, name="h2_f3")
    B = algfile.load(path)
    assert B.dim == A.dim and B.field == A.field
    assert B._prod == A._prod
    assert B.unit_coords == A.unit_coords
    assert B.labels == A.labels
    # byte identity of a second save
    text1 = path.read_text(encoding="utf-8")
    assert algfile.dumps(B, name="h2_f3") == text1


@pytest.mark.parametrize("key", algebra_keys())
def test_packaged_data_files_match_builders(key):
    ref = resources.files("jordanlab.data") / f"{key}.json"
    text = ref.read_text(encoding="utf-8")
    A = algfile.loads(text)
    B = build_algebra(key)
    assert A.dim == B.dim and A.field == B.field
    assert A._prod == B._prod
    assert A.unit_coords == B.unit_coords
    assert A.labels == B.labels
    # canonical files are fixed points of load -> save
    assert algfile.dumps(A, name=key) == text


def test_dumps_is_compact_one_record_per_line():
    A = build_algebra("e2_f3")
    text = algfile.dumps(A, name="e2_f3")
    lines = text.splitlines()
    assert lines[0] == "{"
    assert text.endswith("}\n")
    product_lines = [ln for ln in lines if '"i":' in ln]
    assert len(product_lines) == 2     # (0,0) and (0,1); zero rows dropped


def test_dumps_drops_zero_products():
    A = build_algebra("nu_2_f3")       # zero multiplication
    doc = json.loads(algfile.dumps(A, name="nu"))
    assert doc["products"] == []
