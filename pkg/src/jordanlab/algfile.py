"""Algebra definition files: JSON carrying a structure-constant table.

The format is small and explicit so that every algebra a report mentions can
be reproduced from a file alone::

    {
      "name": "e2_f3",
      "field": {"kind": "Fp", "p": 3},        // or {"kind": "Q"}
      "dim": 2,
      "basis": ["one", "n"],
      "unit": ["1", "0"],                      // optional
      "products": [
        {"i": 0, "j": 0, "v": [["1", 0]]},
        {"i": 0, "j": 1, "v": [["1", 1]]}
      ]
    }

Products are stored once per unordered basis pair (``i <= j``); absent pairs
multiply to zero.  Coefficients are strings: ``"n/d"`` over Q (any
representative, canonicalized on load) and a decimal residue over F_p
(canonicalized mod p, so ``"7"`` over F_5 loads as 2).  Plain JSON integers
are accepted on load anywhere a coefficient string is.  ``save`` always
writes the canonical form — products sorted by (i, j), terms sorted by basis
index, zero terms dropped, canonical coefficient strings — and ``load``
followed by ``save`` reproduces a canonical file byte for byte.
"""

from __future__ import annotations

import json

from .core import JordanAlgebra, NotUnital
from .fields import BadCoefficient, Field

__all__ = [
    "ParseError",
    "IndexOutOfRange",
    "DuplicateProduct",
    "BadCoefficient",
    "load",
    "loads",
    "save",
    "dumps",
]


class ParseError(ValueError):
    """The file is not a well-formed algebra definition."""


class IndexOutOfRange(ParseError):
    """A basis index lies outside ``range(dim)``."""


class DuplicateProduct(ParseError):
    """The same unordered basis pair has two product records."""


_TOP_KEYS = ("name", "field", "dim", "basis", "unit", "products")


def _parse_field(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("field: expected an object with a \"kind\" key")
    kind = obj["kind"]
    if kind == "Q":
        extra = set(obj) - {"kind"}
        if extra:
            raise ParseError(f"field: unexpected keys {sorted(extra)} for kind Q")
        return Field(None)
    if kind == "Fp":
        extra = set(obj) - {"kind", "p"}
        if extra:
            raise ParseError(f"field: unexpected keys {sorted(extra)} for kind Fp")
        p = obj.get("p")
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParseError("field: kind Fp needs an integer \"p\"")
        try:
            return Field(p)
        except ValueError as exc:
            raise ParseError(f"field: {exc}") from None
    raise ParseError(f"field: unknown kind {kind!r} (expected \"Q\" or \"Fp\")")


def _coeff(F: Field, raw, where: str):
    """Parse one coefficient (string or int) with location context."""
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise BadCoefficient(f"{where}: coefficient must be a string or an "
                             f"integer, got {type(raw).__name__}")
    try:
        return F.coerce(raw)
    except BadCoefficient as exc:
        raise BadCoefficient(f"{where}: {exc}") from None


def _index(dim: int, raw, where: str) -> int:
    if not isinstance(raw, int) or isinstance(raw, bool):
        raise ParseError(f"{where}: index must be an integer, got {raw!r}")
    if not 0 <= raw < dim:
        raise IndexOutOfRange(f"{where}: index {raw} outside range(0, {dim})")
    return raw


def _parse_products(F: Field, dim: int, raw) -> dict:
    if not isinstance(raw, list):
        raise ParseError("products: expected a list of records")
    products: dict = {}
    for pos, rec in enumerate(raw):
        where = f"products[{pos}]"
        if not isinstance(rec, dict):
            raise ParseError(f"{where}: expected an object")
        extra = set(rec) - {"i", "j", "v"}
        if extra:
            raise ParseError(f"{where}: unexpected keys {sorted(extra)}")
        if set(rec) != {"i", "j", "v"}:
            missing = {"i", "j", "v"} - set(rec)
            raise ParseError(f"{where}: missing keys {sorted(missing)}")
        i = _index(dim, rec["i"], f"{where}.i")
        j = _index(dim, rec["j"], f"{where}.j")
        if i > j:
            raise ParseError(f"{where}: i={i} > j={j}; store each pair once "
                             "with i <= j")
        if (i, j) in products:
            raise DuplicateProduct(f"{where}: pair ({i}, {j}) already defined")
        terms = rec["v"]
        if not isinstance(terms, list):
            raise ParseError(f"{where}.v: expected a list of [coeff, k] pairs")
        vec = [F.zero] * dim
        for tpos, term in enumerate(terms):
            twhere = f"{where}.v[{tpos}]"
            if not isinstance(term, list) or len(term) != 2:
                raise ParseError(f"{twhere}: expected a [coeff, k] pair")
            c = _coeff(F, term[0], twhere)
            k = _index(dim, term[1], f"{twhere}.k")
            vec[k] = F.add(vec[k], c)
        products[(i, j)] = tuple(vec)
    return products


def _from_dict(doc) -> JordanAlgebra:
    if not isinstance(doc, dict):
        raise ParseError("top level: expected a JSON object")
    extra = set(doc) - set(_TOP_KEYS)
    if extra:
        raise ParseError(f"top level: unexpected keys {sorted(extra)}")
    for key in ("name", "field", "dim", "basis", "products"):
        if key not in doc:
            raise ParseError(f"top level: missing key {key!r}")
    name = doc["name"]
    if not isinstance(name, str):
        raise ParseError("name: expected a string")
    F = _parse_field(doc["field"])
    dim = doc["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise ParseError(f"dim: expected an integer >= 1, got {dim!r}")
    basis = doc["basis"]
    if (not isinstance(basis, list)
            or not all(isinstance(b, str) for b in basis)):
        raise ParseError("basis: expected a list of strings")
    if len(basis) != dim:
        raise ParseError(f"basis: {len(basis)} labels for dim {dim}")
    unit = None
    if "unit" in doc:
        raw = doc["unit"]
        if not isinstance(raw, list):
            raise ParseError("unit: expected a coordinate list")
        if len(raw) != dim:
            raise ParseError(f"unit: {len(raw)} coordinates for dim {dim}")
        unit = tuple(_coeff(F, c, f"unit[{k}]") for k, c in enumerate(raw))
    products = _parse_products(F, dim, doc["products"])
    try:
        A = JordanAlgebra(F, dim, products, unit=unit, labels=tuple(basis))
    except NotUnital as exc:
        raise ParseError(f"unit: {exc}") from None
    A.provenance["name"] = name
    return A


def _to_dict(A: JordanAlgebra, name: str | None = None) -> dict:
    F = A.field
    doc: dict = {"name": name or A.provenance.get("name", "algebra")}
    doc["field"] = {"kind": "Q"} if F.p is None else {"kind": "Fp", "p": F.p}
    doc["dim"] = A.dim
    doc["basis"] = list(A.labels)
    if A.unit_coords is not None:
        doc["unit"] = [F.fmt(c) for c in A.unit_coords]
    products = []
    for i in range(A.dim):
        bi = A.basis_element(i)
        for j in range(i, A.dim):
            vec = A.mul(bi, A.basis_element(j)).coords
            terms = [[F.fmt(c), k] for k, c in enumerate(vec)
                     if not F.is_zero(c)]
            if terms:
                products.append({"i": i, "j": j, "v": terms})
    doc["products"] = products
    return doc


def loads(text: str) -> JordanAlgebra:
    """Parse an algebra definition from a JSON string."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    return _from_dict(doc)


def load(path) -> JordanAlgebra:
    """Load an algebra definition file (UTF-8 JSON)."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return loads(text)


def dumps(A: JordanAlgebra, name: str | None = None) -> str:
    """Serialize to the canonical file text (ends with a newline).

    One product record per line keeps the files readable and diff-friendly;
    the output is plain JSON either way.
    """
    doc = _to_dict(A, name)

    def flat(v):
        return json.dumps(v, ensure_ascii=False)

    parts = [f'  "name": {flat(doc["name"])}',
             f'  "field": {flat(doc["field"])}',
             f'  "dim": {doc["dim"]}',
             f'  "basis": {flat(doc["basis"])}']
    if "unit" in doc:
        parts.append(f'  "unit": {flat(doc["unit"])}')
    if doc["products"]:
        recs = ",\n".join("    " + flat(rec) for rec in doc["products"])
        parts.append(f'  "products": [\n{recs}\n  ]')
    else:
        parts.append('  "products": []')
    return "{\n" + ",\n".join(parts) + "\n}\n"


def save(A: JordanAlgebra, path, name: str | None = None) -> None:
    """Write the canonical definition file for ``A``."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(A, name))
