"""Command-line front end.

Subcommands: ``validate``, ``info``, ``check``, ``annihilator``, ``radical``,
``lattice``, ``peirce``, ``corpus``.  Algebras come from definition files
(see :mod:`jordanlab.algfile`).  Exit codes: 0 for Holds/success, 1 for
Fails, 2 for Unknown, 3 for usage or parse errors.

``--json`` reports are byte-stable for fixed inputs and flags: they contain
no timing, no thread counts, and no filesystem paths.  ``check
--verify-witness REPORT FILE`` re-verifies a previously emitted report
against the algebra file: verdict witnesses are re-checked from their
definitions, and computational reports (radical, lattice, annihilator,
peirce) are recomputed and compared.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import algfile
from .annihilators import (
    BAER,
    BJ,
    FAILS,
    HOLDS,
    NILROOT,
    NONDEG,
    QUAD_NONDEG,
    RICKART,
    RJ,
    UNKNOWN,
    _certify_fails_for_x,
    _u_identically_zero,
    baer_check,
    bj_check,
    element_table,
    idempotents,
    left_annihilator,
    nilroot_check,
    nondeg_check,
    quad_nondeg_check,
    rickart_check,
    right_annihilator,
    rj_check,
)
from .budget import DEFAULT_BUDGET, CharThreeNeedsExhaustive, TooLarge
from .core import JordanAlgebra, validate_jordan
from .corpus import fuzz_sweep, run_corpus
from .fields import BadCoefficient
from .radlat import (
    NotIdempotent,
    deg_radical,
    idempotent_lattice,
    jacobson_radical,
    nil_radical,
    peirce,
)

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 3

_OUTCOME_EXIT = {HOLDS: EXIT_HOLDS, FAILS: EXIT_FAILS, UNKNOWN: EXIT_UNKNOWN}

_PROPERTIES = {
    "rj": RJ,
    "bj": BJ,
    "rickart": RICKART,
    "baer": BAER,
    "nondeg": NONDEG,
    "quad-nondeg": QUAD_NONDEG,
    "nilroot": NILROOT,
}

_SET_LIST_CAP = 64      # set-side annihilator elements listed in reports
_LATTICE_TABLE_CAP = 32  # sup/inf tables included when n <= cap
_LATTICE_ELEMENT_CAP = 256


# -- small helpers -------------------------------------------------------------

def _fail_usage(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_USAGE


def _load_algebra(path) -> JordanAlgebra:
    return algfile.load(path)


def _alg_dict(A: JordanAlgebra) -> dict:
    F = A.field
    return {
        "name": A.provenance.get("name", "algebra"),
        "field": {"kind": "Q"} if F.p is None else {"kind": "Fp", "p": F.p},
        "dim": A.dim,
    }


def _field_str(A: JordanAlgebra) -> str:
    return "Q" if A.field.p is None else f"F_{A.field.p}"


def _json_default(obj):
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    raise TypeError(f"not JSON-serializable: {type(obj).__name__}")


def _emit_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2, ensure_ascii=False, default=_json_default))


def _parse_element(A: JordanAlgebra, text: str):
    """Comma-separated coordinates in file coefficient syntax."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != A.dim:
        raise BadCoefficient(
            f"element {text!r} has {len(parts)} coordinates, need {A.dim}")
    return A.element([A.field.parse(p) for p in parts])


def _el_text(A: JordanAlgebra, coord_strs) -> str:
    zero = A.field.fmt(A.field.zero)
    terms = [f"{c}*{A.labels[i]}" for i, c in enumerate(coord_strs)
             if c != zero]
    vec = "(" + ", ".join(coord_strs) + ")"
    return f"{vec} = {' + '.join(terms)}" if terms else f"{vec} = 0"


def _print_witness(A: JordanAlgebra, witness: dict, indent: str = "  ") -> None:
    for key, val in witness.items():
        if isinstance(val, dict) and "coords" in val:
            print(f"{indent}{key}: {_el_text(A, val['coords'])}")
        elif (isinstance(val, list) and val
              and all(isinstance(v, dict) and "coords" in v for v in val)):
            print(f"{indent}{key}:")
            for v in val:
                print(f"{indent}  {_el_text(A, v['coords'])}")
        else:
            print(f"{indent}{key}: {val}")


def _print_subspace(name: str, dim: int, basis_rows, indent: str = "  ") -> None:
    print(f"{indent}{name}: dim {dim}")
    for row in basis_rows:
        print(f"{indent}  ({', '.join(row)})")


# -- validate -------------------------------------------------------------------

def cmd_validate(args) -> int:
    A = _load_algebra(args.file)
    try:
        rep = validate_jordan(A, budget=args.budget)
    except CharThreeNeedsExhaustive as exc:
        if args.json:
            _emit_json({"command": "validate", "algebra": _alg_dict(A),
                        "budget": args.budget,
                        "report": {"ok": None, "method": "none",
                                   "reason": str(exc) or
                                   "characteristic 3 beyond the exhaustive "
                                   "budget has no sound linearized check"}})
        else:
            print(f"algebra {_alg_dict(A)['name']} ({_field_str(A)}, "
                  f"dim {A.dim})")
            print("jordan identity: Unknown — characteristic 3 beyond the "
                  "exhaustive budget has no sound linearized check")
        return EXIT_UNKNOWN
    if args.json:
        _emit_json({"command": "validate", "algebra": _alg_dict(A),
                    "budget": args.budget, "report": rep.to_dict()})
    else:
        print(f"algebra {_alg_dict(A)['name']} ({_field_str(A)}, dim {A.dim})")
        verdict = "holds" if rep.ok else "FAILS"
        print(f"jordan identity: {verdict}  [method {rep.method}]")
        for f in rep.failures:
            print(f"  counterexample: {f}")
    return EXIT_HOLDS if rep.ok else EXIT_FAILS


# -- info ------------------------------------------------------------------------

def cmd_info(args) -> int:
    A = _load_algebra(args.file)
    F = A.field
    nonzero = sum(
        1
        for i in range(A.dim)
        for j in range(i, A.dim)
        if any(not F.is_zero(c) for c in A._prod[i][j])
    )
    doc = {
        "command": "info",
        "algebra": _alg_dict(A),
        "unital": A.is_unital,
        "unit": [F.fmt(c) for c in A.unit_coords] if A.is_unital else None,
        "labels": list(A.labels),
        "nonzero_products": nonzero,
        "squares_span_dim": A.squares_span().dim,
    }
    if args.json:
        _emit_json(doc)
    else:
        print(f"algebra {doc['algebra']['name']}")
        print(f"  field: {_field_str(A)}")
        print(f"  dim: {A.dim}")
        print(f"  basis: {', '.join(A.labels)}")
        if A.is_unital:
            print(f"  unit: ({', '.join(doc['unit'])})")
        else:
            print("  unit: none")
        print(f"  nonzero basis products: {nonzero}")
        print(f"  span of squares: dim {doc['squares_span_dim']}")
    return EXIT_HOLDS


# -- check -----------------------------------------------------------------------

def _run_decider(A: JordanAlgebra, prop: str, budget: int, threads: int,
                 mode: str):
    """Returns a ClassReport-shaped dict; capability limits become Unknown."""
    prop_name = _PROPERTIES[prop]
    try:
        if prop == "rj":
            rep = rj_check(A, budget=budget, threads=threads, mode=mode)
        elif prop == "bj":
            rep = bj_check(A, budget=budget, threads=threads, mode=mode)
        elif prop == "rickart":
            rep = rickart_check(A, budget=budget, threads=threads)
        elif prop == "baer":
            rep = baer_check(A, budget=budget, threads=threads)
        elif prop == "nondeg":
            rep = nondeg_check(A, budget=budget, threads=threads)
        elif prop == "quad-nondeg":
            rep = quad_nondeg_check(A, budget=budget, threads=threads)
        else:
            rep = nilroot_check(A, budget=budget, threads=threads)
        return rep.to_dict()
    except TooLarge as exc:
        return {"property": prop_name, "method": "none",
                "verdict": {"outcome": UNKNOWN, "reason": str(exc)},
                "details": {}}
    except ValueError as exc:
        # decider capability limits (set-side annihilators and nilpotency
        # scans are exhaustive-only)
        return {"property": prop_name, "method": "none",
                "verdict": {"outcome": UNKNOWN, "reason": str(exc)},
                "details": {}}


def cmd_check(args) -> int:
    A = _load_algebra(args.file)
    if args.verify_witness is not None:
        return _cmd_verify(args, A)
    if args.property is None:
        return _fail_usage("check needs --property (or --verify-witness)")
    if args.mode == "symbolic" and A.field.p is not None:
        return _fail_usage("symbolic mode applies to rational-field algebras; "
                           f"this file is over {_field_str(A)}")
    if args.mode == "exhaustive" and A.field.p is None:
        rep_dict = {"property": _PROPERTIES[args.property], "method": "none",
                    "verdict": {"outcome": UNKNOWN,
                                "reason": "exhaustive enumeration is "
                                          "impossible over the rationals"},
                    "details": {}}
    else:
        rep_dict = _run_decider(A, args.property, args.budget, args.threads,
                                args.mode)
    if args.json:
        _emit_json({"command": "check", "algebra": _alg_dict(A),
                    "budget": args.budget, "mode": args.mode,
                    "report": rep_dict})
    else:
        v = rep_dict["verdict"]
        print(f"algebra {_alg_dict(A)['name']} ({_field_str(A)}, dim {A.dim})")
        print(f"{rep_dict['property']}: {v['outcome']}  "
              f"[method {rep_dict['method']}]")
        if v.get("reason"):
            print(f"  reason: {v['reason']}")
        if v.get("witness"):
            _print_witness(A, v["witness"])
        details = {k: v for k, v in rep_dict.get("details", {}).items()
                   if k != "element_to_idempotent"}
        if details:
            parts = ", ".join(f"{k}={v}" for k, v in details.items())
            print(f"  details: {parts}")
    return _OUTCOME_EXIT[rep_dict["verdict"]["outcome"]]


# -- annihilator -------------------------------------------------------------------

def cmd_annihilator(args) -> int:
    A = _load_algebra(args.file)
    try:
        S = [_parse_element(A, e) for e in args.elements]
    except BadCoefficient as exc:
        return _fail_usage(str(exc))
    ker = left_annihilator(A, S)
    set_doc = None
    note = None
    if A.field.p is None:
        note = ("set-side annihilator is not enumerable over the rationals; "
                "kernel side is exact")
    else:
        try:
            els = right_annihilator(A, S, budget=args.budget,
                                    threads=args.threads)
            listed = els[:_SET_LIST_CAP]
            set_doc = {"size": len(els),
                       "elements": [e.coords_str() for e in listed],
                       "truncated": len(els) > _SET_LIST_CAP}
        except TooLarge as exc:
            note = str(exc)
    doc = {
        "command": "annihilator",
        "algebra": _alg_dict(A),
        "budget": args.budget,
        "elements": [e.coords_str() for e in S],
        "kernel_annihilator": {"dim": ker.dim, "basis": ker.to_strings()},
        "set_annihilator": set_doc,
    }
    if note:
        doc["note"] = note
    if args.json:
        _emit_json(doc)
    else:
        print(f"algebra {doc['algebra']['name']} ({_field_str(A)}, dim {A.dim})")
        print("input elements:")
        for e in S:
            print(f"  {_el_text(A, e.coords_str())}")
        _print_subspace("kernel-side annihilator (subspace)", ker.dim,
                        ker.to_strings())
        if set_doc is not None:
            print(f"  set-side annihilator: {set_doc['size']} elements")
            for row in set_doc["elements"]:
                print(f"    ({', '.join(row)})")
            if set_doc["truncated"]:
                print(f"    ... ({set_doc['size'] - _SET_LIST_CAP} more)")
        if note:
            print(f"  note: {note}")
    return EXIT_HOLDS


# -- radical ----------------------------------------------------------------------

def cmd_radical(args) -> int:
    A = _load_algebra(args.file)
    fn = {"deg": deg_radical, "nil": nil_radical, "rad": jacobson_radical}
    try:
        rep = fn[args.kind](A, budget=args.budget, threads=args.threads)
    except TooLarge as exc:
        if args.json:
            _emit_json({"command": "radical", "algebra": _alg_dict(A),
                        "budget": args.budget, "kind": args.kind,
                        "report": {"kind": args.kind, "method": "none",
                                   "verification": {"outcome": UNKNOWN,
                                                    "reason": str(exc)}}})
        else:
            print(f"radical {args.kind}: Unknown — {exc}")
        return EXIT_UNKNOWN
    doc = rep.to_dict(A)
    if args.json:
        _emit_json({"command": "radical", "algebra": _alg_dict(A),
                    "budget": args.budget, "kind": args.kind, "report": doc})
    else:
        print(f"algebra {_alg_dict(A)['name']} ({_field_str(A)}, dim {A.dim})")
        _print_subspace(f"{doc['kind']} radical [method {doc['method']}]",
                        doc["dim"], doc["basis"], indent="")
        if doc["chain"]:
            print(f"  chain: {len(doc['chain'])} step(s)")
            for step in doc["chain"]:
                parts = ", ".join(f"{k}={v}" for k, v in step.items())
                print(f"    {parts}")
        v = doc["verification"]
        print(f"  verification: {v['outcome']}"
              + (f" — {v['reason']}" if v.get("reason") else ""))
    return _OUTCOME_EXIT[doc["verification"]["outcome"]]


# -- lattice ----------------------------------------------------------------------

def cmd_lattice(args) -> int:
    A = _load_algebra(args.file)
    try:
        lat = idempotent_lattice(A, budget=args.budget, threads=args.threads)
    except TooLarge as exc:
        if args.json:
            _emit_json({"command": "lattice", "algebra": _alg_dict(A),
                        "budget": args.budget,
                        "lattice": {"complete": None, "reason": str(exc)}})
        else:
            print(f"lattice: Unknown — {exc}")
        return EXIT_UNKNOWN
    n = len(lat.elements)
    lat_doc: dict = {"n_idempotents": n}
    if n <= _LATTICE_ELEMENT_CAP:
        lat_doc["elements"] = [e.coords_str() for e in lat.elements]
    else:
        lat_doc["elements_omitted"] = n
    lat_doc["top"] = lat.top
    lat_doc["bottom"] = lat.bottom
    if n <= _LATTICE_TABLE_CAP:
        lat_doc["leq"] = [[bool(x) for x in row] for row in lat.leq]
        lat_doc["sup"] = [list(row) for row in lat.sup_table]
        lat_doc["inf"] = [list(row) for row in lat.inf_table]
    else:
        lat_doc["tables_omitted"] = n
    lat_doc["complete"] = lat.complete
    if lat.incompleteness_witness is not None:
        lat_doc["incompleteness_witness"] = lat.incompleteness_witness
    if args.json:
        _emit_json({"command": "lattice", "algebra": _alg_dict(A),
                    "budget": args.budget, "lattice": lat_doc})
    else:
        print(f"algebra {_alg_dict(A)['name']} ({_field_str(A)}, dim {A.dim})")
        print(f"idempotents: {n}")
        if n <= _LATTICE_TABLE_CAP:
            for el in lat.elements:
                print(f"  {_el_text(A, el.coords_str())}")
        for label, idx in (("top", lat.top), ("bottom", lat.bottom)):
            if idx is None:
                print(f"  {label}: none")
            else:
                print(f"  {label}: "
                      f"{_el_text(A, lat.elements[idx].coords_str())}")
        state = {True: "complete lattice", False: "NOT a complete lattice",
                 None: "completeness undecided (idempotent list not "
                       "certified finite)"}[lat.complete]
        print(f"  order: {state}")
        wit = lat.incompleteness_witness
        if wit:
            if "pair" in wit:
                pair = ", ".join(_el_text(A, d["coords"]) for d in wit["pair"])
                print(f"  witness: no {wit['missing']} for {pair}")
            else:
                print(f"  witness: no {wit['missing']} element")
    return {True: EXIT_HOLDS, False: EXIT_FAILS, None: EXIT_UNKNOWN}[lat.complete]


# -- peirce -----------------------------------------------------------------------

def cmd_peirce(args) -> int:
    A = _load_algebra(args.file)
    try:
        e = _parse_element(A, args.element)
    except BadCoefficient as exc:
        return _fail_usage(str(exc))
    try:
        p1, p0, ph = peirce(A, e)
    except NotIdempotent as exc:
        return _fail_usage(f"peirce needs an idempotent: {exc}")
    spaces = {"one": p1, "zero": p0, "half": ph}
    doc = {
        "command": "peirce",
        "algebra": _alg_dict(A),
        "idempotent": e.coords_str(),
        "spaces": {k: {"dim": v.dim, "basis": v.to_strings()}
                   for k, v in spaces.items()},
    }
    if args.json:
        _emit_json(doc)
    else:
        print(f"algebra {doc['algebra']['name']} ({_field_str(A)}, dim {A.dim})")
        print(f"idempotent: {_el_text(A, e.coords_str())}")
        for k, label in (("one", "eigenvalue 1"), ("half", "eigenvalue 1/2"),
                         ("zero", "eigenvalue 0")):
            v = spaces[k]
            _print_subspace(f"component {k} ({label})", v.dim, v.to_strings())
    return EXIT_HOLDS


# -- corpus -----------------------------------------------------------------------

def cmd_corpus(args) -> int:
    if args.fuzz:
        rep = fuzz_sweep(n_seeds=args.fuzz, start_seed=args.seed,
                         budget=args.budget, threads=args.threads)
        if args.json:
            _emit_json({"command": "corpus", "fuzz": rep})
        else:
            print(f"fuzz sweep: {rep['n_seeds']} seeds from "
                  f"{rep['start_seed']} over {rep['field']}, "
                  f"dim <= {rep['dim_bound']}")
            for name, c in rep["implications"].items():
                print(f"  {name}: {c['confirmed']}/{c['antecedent_holds']} "
                      "confirmed")
            print(f"  associative-oracle pairs: {rep['oracle_pairs']}")
            print(f"  violations: {len(rep['violations'])}")
            for v in rep["violations"]:
                print(f"    seed {v['seed']}: {v['kind']} — {v['detail']}")
        return EXIT_HOLDS if not rep["violations"] else EXIT_FAILS
    rep = run_corpus(filter_substr=args.filter, threads=args.threads,
                     budget=args.budget)
    doc = rep.to_dict()
    if args.json:
        _emit_json({"command": "corpus", "filter": args.filter,
                    "report": doc})
    else:
        for c in doc["claims"]:
            status = "pass" if c["passed"] else "FAIL"
            line = (f"{status}  {c['id']}  [{c['basis']}]  "
                    f"{c['subject']}: {c['property']} -> {c['actual']}")
            if not c["passed"]:
                line += f" (expected {c['expected']})"
            print(line)
        if doc["findings"]:
            print("findings:")
            for f in doc["findings"]:
                print(f"  {f['claim']} ({f['subject']}): predicted "
                      f"{f.get('predicted')}, engine says {f.get('actual')}"
                      + (f" — {f['note']}" if f.get("note") else ""))
        s = doc["summary"]
        print(f"claims: {s['total']}  passed: {s['passed']}  "
              f"failed: {s['failed']}  findings: {s['findings']}")
    return EXIT_HOLDS if rep.all_passed else EXIT_FAILS


# -- witness re-verification --------------------------------------------------------

class _Malformed(Exception):
    pass


def _coords_from(A: JordanAlgebra, el) -> tuple:
    if not isinstance(el, dict) or "coords" not in el:
        raise _Malformed(f"witness element is not {{'coords': ...}}: {el!r}")
    raw = el["coords"]
    if not isinstance(raw, list) or len(raw) != A.dim:
        raise _Malformed(f"witness coords must be a list of {A.dim} entries")
    try:
        return tuple(A.field.coerce(c) for c in raw)
    except BadCoefficient as exc:
        raise _Malformed(str(exc)) from None


def _is_zero_matrix(A: JordanAlgebra, M) -> bool:
    F = A.field
    return all(F.is_zero(x) for row in M for x in row)


def _verify_trivial(A: JordanAlgebra, coords) -> str | None:
    """None when coords is a nonzero trivial element, else the objection."""
    F = A.field
    if all(F.is_zero(c) for c in coords):
        return "claimed trivial element is zero"
    if not _is_zero_matrix(A, A.u_matrix(coords)):
        return "claimed trivial element has a nonzero quadratic operator"
    if any(not F.is_zero(c) for c in A.mul_coords(coords, coords)):
        return "claimed trivial element has a nonzero square"
    return None


def _verify_nilpotent(A: JordanAlgebra, el) -> bool:
    """Powers within the one-generated subalgebra: nilpotent iff some power
    up to dim+1 vanishes."""
    cur = el
    for _ in range(A.dim + 1):
        if cur.is_zero():
            return True
        cur = A.mul(cur, el)
    return cur.is_zero()


def _killed_mask(t, idx: int):
    return t.killed_square_masks(t.coords_block_of(np.array([idx])))[0]


def _require_fp(A: JordanAlgebra, what: str):
    if A.field.p is None:
        raise _Malformed(f"{what} is an exhaustive-mode witness, but the "
                         "algebra file is over the rationals")


def _verify_check_witness(A: JordanAlgebra, prop: str, outcome: str,
                          witness, details: dict, budget: int,
                          threads: int, mode: str) -> tuple[bool, str]:
    """Definitional re-check of a property report's certificate.

    Returns (verified, message).  Raises _Malformed for reports this
    function cannot interpret.
    """
    F = A.field

    # certificates on the Holds side --------------------------------------
    if outcome == HOLDS and isinstance(details, dict) \
            and details.get("certificate") == "zero-u-operator":
        ok = _u_identically_zero(A) and A.squares_span().dim == 0
        return (ok, "zero-U certificate re-checked: every quadratic operator "
                    "vanishes and the squares span is zero"
                if ok else "zero-U certificate refuted")

    if outcome == HOLDS and prop == RJ and isinstance(details, dict) \
            and "element_to_idempotent" in details:
        _require_fp(A, "the element-to-idempotent map")
        t = element_table(A, budget, threads)
        mapping = details["element_to_idempotent"]
        if len(mapping) != t.n:
            return (False, f"map covers {len(mapping)} of {t.n} elements")
        idem = set(int(i) for i in t.idempotent_indices)
        by_e: dict = {}
        for pair in mapping:
            if not isinstance(pair, list) or len(pair) != 2:
                raise _Malformed("map entries must be [element, idempotent] "
                                 "index pairs")
            x, e = int(pair[0]), int(pair[1])
            if e not in idem:
                return (False, f"map sends element {x} to non-idempotent {e}")
            by_e.setdefault(e, []).append(x)
        seen = set()
        for e, xs in by_e.items():
            target = t.u_image_fixed_mask(e, t.square_coords())
            rows = t.killed_square_masks(
                t.coords_block_of(np.array(sorted(xs), dtype=np.int64)))
            if not bool((rows == target[None, :]).all()):
                return (False, f"killed squares of some element mapped to "
                               f"idempotent {e} differ from its inner-ideal "
                               "squares")
            seen.update(xs)
        if len(seen) != t.n:
            return (False, "map is not a function on all elements")
        return (True, f"element-to-idempotent map re-checked on all {t.n} "
                      "elements")

    if witness is None:
        # nothing to re-check definitionally: recompute and compare
        rep = _run_decider(A, _PROP_KEYS[prop], budget, threads, mode)
        same = rep["verdict"]["outcome"] == outcome
        return (same, f"no witness in report; decider re-run returned "
                      f"{rep['verdict']['outcome']} (report said {outcome})")

    if not isinstance(witness, dict):
        raise _Malformed("witness must be an object")

    # failure witnesses -----------------------------------------------------
    if outcome != FAILS:
        raise _Malformed(f"witness present but outcome is {outcome}")

    if prop in (RJ, BJ) and "separations" in witness:
        # symbolic certificate: re-derive the per-idempotent separation
        x = A.element(_coords_from(A, witness.get("x")))
        idem = idempotents(A)
        seps = _certify_fails_for_x(A, x, idem)
        ok = seps is not None
        return (ok, "per-idempotent separating squares re-derived"
                if ok else "no complete separation found on re-derivation")

    if prop in (RJ, BJ) and ("x" in witness or "subset" in witness):
        _require_fp(A, f"a {prop} counterexample")
        t = element_table(A, budget, threads)
        if "x" in witness:
            idxs = [t.index_of(_coords_from(A, witness["x"]))]
            claimed = witness.get("killed_square_count")
        else:
            idxs = [t.index_of(_coords_from(A, el))
                    for el in witness.get("subset", [])]
            claimed = witness.get("set_size")
            if not idxs:
                raise _Malformed("empty subset in witness")
        mask = np.ones(t.n_squares, dtype=bool)
        for i in idxs:
            mask &= _killed_mask(t, i)
        if claimed is not None and int(mask.sum()) != int(claimed):
            return (False, f"killed-squares count is {int(mask.sum())}, "
                           f"report claimed {claimed}")
        key = np.packbits(mask).tobytes()
        hit = t.idempotent_square_masks().get(key)
        if hit is not None:
            return (False, f"idempotent at index {hit} matches the killed "
                           "squares; counterexample refuted")
        return (True, "no idempotent's inner-ideal squares equal the killed "
                      f"squares ({int(mask.sum())} of {t.n_squares})")

    if prop in (RICKART, BAER):
        _require_fp(A, f"a {prop} counterexample")
        t = element_table(A, budget, threads)
        sq = set(int(i) for i in t.square_indices)
        if prop == RICKART:
            if "x" not in witness:
                raise _Malformed("Rickart witness needs an element x")
            idxs = [t.index_of(_coords_from(A, witness["x"]))]
        else:
            idxs = [t.index_of(_coords_from(A, el))
                    for el in witness.get("subset", [])]
            if not idxs:
                raise _Malformed("empty subset in witness")
        for i in idxs:
            if i not in sq:
                return (False, f"witness element at index {i} is not a "
                               "square")
        mask = np.ones(t.n, dtype=bool)
        for i in idxs:
            mask &= t.annihilator_mask(i)
        claimed = witness.get("annihilator_size")
        if claimed is not None and int(mask.sum()) != int(claimed):
            return (False, f"annihilator size is {int(mask.sum())}, report "
                           f"claimed {claimed}")
        key = np.packbits(mask).tobytes()
        hit = t.idempotent_full_masks().get(key)
        if hit is not None:
            return (False, f"annihilator equals the inner ideal of the "
                           f"idempotent at index {hit}; refuted")
        return (True, "annihilator equals no idempotent's inner ideal "
                      f"({int(mask.sum())} of {t.n} elements)")

    if prop == NONDEG:
        if "trivial" not in witness:
            raise _Malformed("nondegeneracy witness needs a trivial element")
        bad = _verify_trivial(A, _coords_from(A, witness["trivial"]))
        return (bad is None,
                "nonzero trivial element re-checked: U_z = 0 and z² = 0"
                if bad is None else bad)

    if prop in (QUAD_NONDEG, NILROOT):
        if "root" not in witness or "square" not in witness:
            raise _Malformed(f"{prop} witness needs a root and its square")
        r = A.element(_coords_from(A, witness["root"]))
        s = A.element(_coords_from(A, witness["square"]))
        if r.square() != s:
            return (False, "root² differs from the claimed square")
        if s.is_zero():
            return (False, "claimed square is zero")
        if prop == QUAD_NONDEG:
            bad = _verify_trivial(A, s.coords)
            return (bad is None,
                    "square root of a nonzero trivial element re-checked"
                    if bad is None else bad)
        ok = _verify_nilpotent(A, s)
        return (ok, "square root of a nonzero nilpotent element re-checked"
                if ok else "claimed square is not nilpotent")

    raise _Malformed(f"unrecognized witness shape for {prop}: "
                     f"{sorted(witness)}")


_PROP_KEYS = {v: k for k, v in _PROPERTIES.items()}


def _verify_recompute(args, A: JordanAlgebra, doc: dict) -> tuple[bool, str]:
    """Recompute-and-compare for computational reports."""
    command = doc.get("command")
    if command == "radical":
        kind = doc.get("kind")
        fn = {"deg": deg_radical, "nil": nil_radical, "rad": jacobson_radical}
        if kind not in fn:
            raise _Malformed(f"unknown radical kind {kind!r}")
        fresh = fn[kind](A, budget=args.budget,
                         threads=args.threads).to_dict(A)
        same = fresh == doc.get("report")
        return (same, "radical report recomputed "
                + ("and identical" if same else "but differs"))
    if command == "lattice":
        lat = idempotent_lattice(A, budget=args.budget, threads=args.threads)
        rep = doc.get("lattice")
        if not isinstance(rep, dict):
            raise _Malformed("lattice report missing")
        same = (rep.get("n_idempotents") == len(lat.elements)
                and rep.get("complete") == lat.complete
                and rep.get("top") == lat.top
                and rep.get("bottom") == lat.bottom)
        return (same, "lattice summary recomputed "
                + ("and identical" if same else "but differs"))
    if command == "annihilator":
        rep = doc.get("kernel_annihilator")
        if not isinstance(rep, dict):
            raise _Malformed("annihilator report missing")
        try:
            S = [A.element([A.field.parse(c) for c in row])
                 for row in doc.get("elements", [])]
        except (BadCoefficient, ValueError) as exc:
            raise _Malformed(str(exc)) from None
        ker = left_annihilator(A, S)
        same = (rep.get("dim") == ker.dim
                and rep.get("basis") == ker.to_strings())
        if same and doc.get("set_annihilator") and A.field.p is not None:
            els = right_annihilator(A, S, budget=args.budget,
                                    threads=args.threads)
            same = doc["set_annihilator"].get("size") == len(els)
        return (same, "annihilators recomputed "
                + ("and identical" if same else "but differ"))
    if command == "peirce":
        try:
            e = A.element([A.field.parse(c)
                           for c in doc.get("idempotent", [])])
        except (BadCoefficient, ValueError) as exc:
            raise _Malformed(str(exc)) from None
        p1, p0, ph = peirce(A, e)
        spaces = {"one": p1, "zero": p0, "half": ph}
        rep = doc.get("spaces")
        if not isinstance(rep, dict):
            raise _Malformed("peirce report missing spaces")
        same = all(
            rep.get(k, {}).get("dim") == v.dim
            and rep.get(k, {}).get("basis") == v.to_strings()
            for k, v in spaces.items())
        return (same, "peirce components recomputed "
                + ("and identical" if same else "but differ"))
    raise _Malformed(f"cannot verify reports from command {command!r}")


def _cmd_verify(args, A: JordanAlgebra) -> int:
    try:
        with open(args.verify_witness, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail_usage(f"cannot read report file: {exc}")
    if not isinstance(doc, dict):
        return _fail_usage("report file is not a JSON object")

    try:
        command = doc.get("command", "check")
        if command == "check" or "property" in doc:
            rep = doc.get("report", doc)
            if not isinstance(rep, dict) or "property" not in rep \
                    or "verdict" not in rep:
                raise _Malformed("no property report in file")
            prop = rep["property"]
            if prop not in _PROP_KEYS:
                raise _Malformed(f"unknown property {prop!r}")
            if args.property is not None \
                    and _PROPERTIES[args.property] != prop:
                raise _Malformed(
                    f"report is about {prop}, --property says "
                    f"{_PROPERTIES[args.property]}")
            verdict = rep["verdict"]
            if not isinstance(verdict, dict) or "outcome" not in verdict:
                raise _Malformed("report verdict has no outcome")
            ok, msg = _verify_check_witness(
                A, prop, verdict["outcome"], verdict.get("witness"),
                rep.get("details", {}), args.budget, args.threads, args.mode)
        else:
            ok, msg = _verify_recompute(args, A, doc)
    except _Malformed as exc:
        return _fail_usage(f"cannot interpret report: {exc}")
    except TooLarge as exc:
        return _fail_usage(f"cannot re-verify within budget: {exc}")

    if ok:
        print(f"witness verified: {msg}")
        return EXIT_HOLDS
    print(f"witness REFUTED: {msg}")
    return EXIT_FAILS


# -- argument parsing -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="max p^dim for exhaustive enumeration "
                             "(default %(default)s; the JORDANLAB_BUDGET "
                             "environment variable overrides the default)")
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads inside deciders; never changes "
                             "output (default 1)")
    common.add_argument("--json", action="store_true",
                        help="machine-readable report on stdout (byte-stable "
                             "for fixed inputs and flags)")

    p = _Parser(prog="jordanlab",
                description="Exact deciders and calculators for "
                            "finite-dimensional Jordan algebras given by "
                            "structure constants.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", parents=[common],
                        help="check the Jordan identity")
    sp.add_argument("file", help="algebra definition file")
    sp.set_defaults(fn=cmd_validate)

    sp = sub.add_parser("info", parents=[common],
                        help="summarize an algebra file")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_info)

    sp = sub.add_parser("check", parents=[common],
                        help="decide a property (exit 0 Holds / 1 Fails / "
                             "2 Unknown)")
    sp.add_argument("file")
    sp.add_argument("--property", choices=sorted(_PROPERTIES),
                    help="property to decide")
    sp.add_argument("--mode", choices=("auto", "exhaustive", "symbolic"),
                    default="auto",
                    help="decision strategy (default auto: exhaustive over "
                         "F_p, symbolic three-valued over Q)")
    sp.add_argument("--verify-witness", metavar="REPORT",
                    help="re-verify a previously emitted JSON report "
                         "against this algebra file")
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("annihilator", parents=[common],
                        help="kernel-side and set-side annihilators of "
                             "elements")
    sp.add_argument("file")
    sp.add_argument("elements", nargs="+", metavar="ELEM",
                    help="element as comma-separated coordinates, e.g. "
                         "'1,0,2' or '1/2,0,0'")
    sp.set_defaults(fn=cmd_annihilator)

    sp = sub.add_parser("radical", parents=[common],
                        help="degeneracy, nil, or Jacobson radical")
    sp.add_argument("file")
    sp.add_argument("--kind", choices=("deg", "nil", "rad"), default="deg")
    sp.set_defaults(fn=cmd_radical)

    sp = sub.add_parser("lattice", parents=[common],
                        help="idempotent partial order and completeness "
                             "(exit 0 complete / 1 not / 2 undecided)")
    sp.add_argument("file")
    sp.set_defaults(fn=cmd_lattice)

    sp = sub.add_parser("peirce", parents=[common],
                        help="eigencomponents of an idempotent")
    sp.add_argument("file")
    sp.add_argument("element", metavar="ELEM",
                    help="idempotent as comma-separated coordinates")
    sp.set_defaults(fn=cmd_peirce)

    sp = sub.add_parser("corpus", parents=[common],
                        help="run the regression claim table, or a "
                             "randomized sweep with --fuzz")
    sp.add_argument("--filter", metavar="SUBSTR",
                    help="run only claims whose id, group, or subject "
                         "contains this substring")
    sp.add_argument("--fuzz", type=int, metavar="N",
                    help="instead of the claim table, sweep N random "
                         "special algebras")
    sp.add_argument("--seed", type=int, default=0,
                    help="first seed for --fuzz (default 0); fixed seeds "
                         "give identical reports")
    sp.set_defaults(fn=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except (algfile.ParseError, BadCoefficient) as exc:
        return _fail_usage(str(exc))
    except OSError as exc:
        return _fail_usage(str(exc))


if __name__ == "__main__":
    sys.exit(main())
