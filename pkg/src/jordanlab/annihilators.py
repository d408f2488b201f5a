"""Annihilator calculus and the four class deciders.

Over a finite field every decision is exhaustive: the element table
enumerates A, the squares set is listed outright, and each verdict either
holds after checking everything or fails with the lexicographically first
counterexample.  Over the rationals the squares set is the image of a
quadratic map and is not enumerable, so deciders return three-valued
reports: Holds and Fails always carry a certificate that can be re-checked
independently, everything else is Unknown with a reason.
"""

import weakref
from dataclasses import dataclass, field as dc_field

import numpy as np

from .budget import DEFAULT_BUDGET
from .core import Element, JordanAlgebra, unital_hull, hull_embed
from .exhaustive import ElementTable
from .linalg import Subspace
from .quadsolve import make_eq, solve_quadratic_system

HOLDS = "Holds"
FAILS = "Fails"
UNKNOWN = "Unknown"

RJ = "RJ"
BJ = "BJ"
RICKART = "RickartJordan"
BAER = "BaerJordan"
NONDEG = "Nondegenerate"
QUAD_NONDEG = "QuadraticNondegenerate"
NILROOT = "NoNilpotentWithRoot"


@dataclass(frozen=True)
class Verdict:
    outcome: str
    witness: dict | None = None
    reason: str | None = None

    @property
    def holds(self) -> bool:
        return self.outcome == HOLDS

    def to_dict(self) -> dict:
        out = {"outcome": self.outcome}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class ClassReport:
    property: str
    verdict: Verdict
    method: str
    details: dict = dc_field(default_factory=dict)

    @property
    def outcome(self) -> str:
        return self.verdict.outcome

    def to_dict(self) -> dict:
        return {"property": self.property, "method": self.method,
                "verdict": self.verdict.to_dict(), "details": self.details}


@dataclass(frozen=True)
class SquaresSet:
    mode: str                       # "exhaustive" | "symbolic"
    span: Subspace
    elements: tuple = ()            # exhaustive only, index order
    indices: tuple = ()

    @property
    def size(self):
        return len(self.elements) if self.mode == "exhaustive" else None


@dataclass(frozen=True)
class IdempotentList:
    elements: tuple                 # canonically ordered points
    complete: bool                  # the description covers all idempotents
    finite: bool                    # the listed points are all of them
    method: str
    components: tuple = ()          # positive-dimensional families, if any


_TABLES: "weakref.WeakKeyDictionary[JordanAlgebra, ElementTable]" = \
    weakref.WeakKeyDictionary()


def element_table(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                  threads: int = 1) -> ElementTable:
    t = _TABLES.get(A)
    if t is None or t.n > budget:
        t = ElementTable(A, budget=budget, threads=threads)
        _TABLES[A] = t
    t.threads = max(1, threads)
    return t


def _el_dict(A: JordanAlgebra, coords, index: int | None = None) -> dict:
    out = {"coords": [A.field.fmt(A.field.coerce(c)) for c in coords]}
    if index is not None:
        out["index"] = int(index)
    return out


# -- element sets -----------------------------------------------------------

def enumerate_elements(A: JordanAlgebra, budget: int = DEFAULT_BUDGET) -> list:
    """All p^dim elements in lexicographic coordinate order."""
    t = element_table(A, budget)
    return [t.element(i) for i in range(t.n)]


def squares_set(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                threads: int = 1) -> SquaresSet:
    if A.field.p is not None:
        t = element_table(A, budget, threads)
        idx = [int(i) for i in t.square_indices]
        return SquaresSet("exhaustive", A.squares_span(),
                          tuple(t.element(i) for i in idx), tuple(idx))
    return SquaresSet("symbolic", A.squares_span())


def _square_equations(A: JordanAlgebra, target) -> list:
    """x^2 = target as one quadratic equation per coordinate."""
    F = A.field
    n = A.dim
    eqs = []
    for k in range(n):
        Q = [[A.mul_coords(A._basis_vec(i), A._basis_vec(j))[k]
              for j in range(n)] for i in range(n)]
        eqs.append(make_eq(F, Q, [F.zero] * n, F.neg(F.coerce(target[k]))))
    return eqs


def _idempotent_equations(A: JordanAlgebra) -> list:
    F = A.field
    n = A.dim
    eqs = []
    for k in range(n):
        Q = [[A.mul_coords(A._basis_vec(i), A._basis_vec(j))[k]
              for j in range(n)] for i in range(n)]
        L = [F.neg(F.one) if i == k else F.zero for i in range(n)]
        eqs.append(make_eq(F, Q, L, F.zero))
    return eqs


def u_zero_equations(A: JordanAlgebra) -> list:
    """U_z = 0 and z^2 = 0, quadratic in the coordinates of z."""
    F = A.field
    n = A.dim
    eqs = _square_equations(A, [F.zero] * n)
    basis = [A._basis_vec(i) for i in range(n)]
    for j in range(n):
        # U_z b_j = 2 z(z b_j) - z^2 b_j, coordinate k
        M1 = [[A.mul_coords(basis[i], A.mul_coords(basis[m], basis[j]))
               for m in range(n)] for i in range(n)]
        M2 = [[A.mul_coords(A.mul_coords(basis[i], basis[m]), basis[j])
               for m in range(n)] for i in range(n)]
        for k in range(n):
            Q = [[F.sub(F.mul(F.coerce(2), M1[i][m][k]), M2[i][m][k])
                  for m in range(n)] for i in range(n)]
            eqs.append(make_eq(F, Q, [F.zero] * n, F.zero))
    return eqs


def has_square_root(A: JordanAlgebra, v: Element,
                    budget: int = DEFAULT_BUDGET) -> Verdict:
    if A.field.p is not None:
        t = element_table(A, budget)
        i = t.index_of(v.coords)
        r = t.square_root_of(i)
        if r is None:
            return Verdict(FAILS, reason="exhaustive scan found no root")
        return Verdict(HOLDS, witness={"root": _el_dict(A, t.coords(r), r)})
    if not A.squares_span().contains(list(v.coords)):
        return Verdict(FAILS, reason="outside the span of all squares")
    res = solve_quadratic_system(A.field, A.dim, _square_equations(A, v.coords))
    if res.components:
        comp = res.components[0]
        root = comp.base
        return Verdict(HOLDS, witness={"root": _el_dict(A, root)})
    if res.complete:
        return Verdict(FAILS, reason="quadratic system has no solution")
    return Verdict(UNKNOWN, reason="quadratic solver left branches unresolved")


def left_annihilator(A: JordanAlgebra, S: list) -> Subspace:
    """The subspace of x with U_a x = 0 for every a in S."""
    out = Subspace.full(A.field, A.dim)
    for a in S:
        out = out.intersect(A.u_op(a).kernel())
    return out


def right_annihilator(A: JordanAlgebra, S: list,
                      budget: int = DEFAULT_BUDGET,
                      threads: int = 1) -> list:
    """All a with U_a x = 0 for every x in S; quadratic in a, so exhaustive."""
    if A.field.p is None:
        raise ValueError("right annihilators need exhaustive mode (finite field)")
    t = element_table(A, budget, threads)
    mask = np.ones(t.n, dtype=bool)
    for x in S:
        mask &= t.annihilator_mask(t.index_of(x.coords))
    return [t.element(int(i)) for i in np.nonzero(mask)[0]]


def inner_ideal(A: JordanAlgebra, e: Element) -> Subspace:
    return A.u_op(e).image()


def idempotents(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                threads: int = 1) -> IdempotentList:
    if A.field.p is not None:
        t = element_table(A, budget, threads)
        els = tuple(t.element(int(i)) for i in t.idempotent_indices)
        return IdempotentList(els, complete=True, finite=True,
                              method="exhaustive")
    res = solve_quadratic_system(A.field, A.dim, _idempotent_equations(A))
    pts = {A.element(p) for p in res.points()}
    pts.add(A.zero())
    if A.is_unital:
        pts.add(A.unit)
    els = tuple(sorted(pts, key=lambda e: e.sort_key()))
    pos = tuple(c for c in res.components if c.dirs)
    return IdempotentList(els, complete=res.complete,
                          finite=res.complete and not pos,
                          method="symbolic", components=pos)


# -- finite-field deciders ---------------------------------------------------

def _idempotent_square_map(t: ElementTable):
    return t.idempotent_square_masks()


def rj_check(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
             threads: int = 1, mode: str = "auto",
             probes: list | None = None,
             keep_map_up_to: int = 10000) -> ClassReport:
    if mode not in ("auto", "exhaustive", "symbolic"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "symbolic" or (A.field.p is None and mode == "auto"):
        return _rj_symbolic(A, probes or [])
    t = element_table(A, budget, threads)
    by_set = _idempotent_square_map(t)
    mapping = []
    pos = 0
    ranges = t._chunk_ranges(t.n)

    def one(rng):
        lo, hi = rng
        return t.killed_square_masks(t.coords_block(lo, hi))

    for block in t._ordered_chunks(one, ranges):
        for row in block:
            key = np.packbits(row).tobytes()
            e = by_set.get(key)
            if e is None:
                w = {"x": _el_dict(A, t.coords(pos), pos),
                     "killed_square_count": int(row.sum())}
                v = Verdict(FAILS, witness=w,
                            reason="no idempotent matches the killed squares")
                return ClassReport(RJ, v, "exhaustive", _counts(t))
            mapping.append((pos, e))
            pos += 1
    details = _counts(t)
    if t.n <= keep_map_up_to:
        details["element_to_idempotent"] = mapping
    return ClassReport(RJ, Verdict(HOLDS), "exhaustive", details)


def _counts(t: ElementTable) -> dict:
    return {"n_elements": int(t.n), "n_squares": int(t.n_squares),
            "n_idempotents": int(len(t.idempotent_indices))}


def bj_check_direct(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                    threads: int = 1,
                    closure_budget: int = 100000) -> ClassReport:
    """Closure of the kernel square-sets under intersection; every member
    must equal some U_e(A) ∩ A² as a set."""
    if A.field.p is None:
        raise ValueError("direct subset check needs exhaustive mode (finite field)")
    t = element_table(A, budget, threads)
    by_set = _idempotent_square_map(t)
    masks, wits = t.distinct_kernel_square_sets()
    items = []                      # (mask, generator index tuple)
    seen = set()
    for m, x in zip(masks, wits):
        key = np.packbits(m).tobytes()
        seen.add(key)
        items.append((m, (x,)))
        if key not in by_set:
            w = {"subset": [_el_dict(A, t.coords(x), x)],
                 "set_size": int(m.sum())}
            v = Verdict(FAILS, witness=w,
                        reason="no idempotent matches the annihilated squares")
            d = _counts(t)
            d["n_kernel_sets"] = len(masks)
            return ClassReport(BJ, v, "exhaustive", d)
    base = list(items)
    i = 0
    while i < len(items):
        cur_mask, cur_gen = items[i]
        for bm, bg in base:
            nm = cur_mask & bm
            key = np.packbits(nm).tobytes()
            if key in seen:
                continue
            seen.add(key)
            gen = tuple(sorted(set(cur_gen) | set(bg)))
            items.append((nm, gen))
            if key not in by_set:
                w = {"subset": [_el_dict(A, t.coords(x), x) for x in gen],
                     "set_size": int(nm.sum())}
                v = Verdict(FAILS, witness=w,
                            reason="no idempotent matches the annihilated squares")
                d = _counts(t)
                d["n_kernel_sets"] = len(masks)
                d["n_closure"] = len(items)
                return ClassReport(BJ, v, "exhaustive", d)
            if len(items) > closure_budget:
                v = Verdict(UNKNOWN,
                            reason="intersection closure exceeded budget")
                return ClassReport(BJ, v, "exhaustive", _counts(t))
        i += 1
    d = _counts(t)
    d["n_kernel_sets"] = len(masks)
    d["n_closure"] = len(items)
    return ClassReport(BJ, Verdict(HOLDS), "exhaustive", d)


def bj_check_via_t25(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                     threads: int = 1) -> ClassReport:
    """BJ as: RJ plus a complete idempotent lattice."""
    from .radlat import idempotent_lattice
    rj = rj_check(A, budget, threads)
    if rj.outcome == FAILS:
        v = Verdict(FAILS, witness=rj.verdict.witness,
                    reason="not RJ: " + (rj.verdict.reason or ""))
        return ClassReport(BJ, v, rj.method + "+lattice", dict(rj.details))
    if rj.outcome == UNKNOWN:
        return ClassReport(BJ, Verdict(UNKNOWN, reason=rj.verdict.reason),
                           rj.method + "+lattice", dict(rj.details))
    lat = idempotent_lattice(A, budget=budget, threads=threads)
    details = {"n_idempotents": len(lat.elements),
               "lattice_complete": lat.complete}
    if lat.complete is True:
        return ClassReport(BJ, Verdict(HOLDS), rj.method + "+lattice", details)
    if lat.complete is False:
        w = lat.incompleteness_witness or {}
        return ClassReport(BJ, Verdict(FAILS, witness=w,
                                       reason="idempotent lattice not complete"),
                           rj.method + "+lattice", details)
    return ClassReport(BJ, Verdict(UNKNOWN,
                                   reason="lattice completeness undecided"),
                       rj.method + "+lattice", details)


def bj_check(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
             threads: int = 1, mode: str = "auto") -> ClassReport:
    """Runs the direct subset check and the lattice route; exhaustive mode
    cross-checks that they agree."""
    if A.field.p is None or mode == "symbolic":
        return _bj_symbolic(A)
    direct = bj_check_direct(A, budget, threads)
    via = bj_check_via_t25(A, budget, threads)
    if direct.outcome != via.outcome:
        raise AssertionError(
            f"subset check and lattice route disagree: "
            f"{direct.outcome} vs {via.outcome}")
    details = dict(direct.details)
    details["lattice_route"] = via.verdict.outcome
    details["routes_agree"] = True
    return ClassReport(BJ, direct.verdict, "exhaustive", details)


def rickart_check(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                  threads: int = 1) -> ClassReport:
    """For every square x, the set {a : U_a x = 0} must be U_e(A) exactly."""
    if A.field.p is None:
        raise ValueError("right annihilators need exhaustive mode (finite field)")
    t = element_table(A, budget, threads)
    full = t.idempotent_full_masks()
    for s in t.square_indices:
        ann = t.annihilator_mask(int(s))
        if np.packbits(ann).tobytes() not in full:
            w = {"x": _el_dict(A, t.coords(int(s)), int(s)),
                 "annihilator_size": int(ann.sum())}
            v = Verdict(FAILS, witness=w,
                        reason="annihilator is not an inner ideal of an idempotent")
            return ClassReport(RICKART, v, "exhaustive", _counts(t))
    return ClassReport(RICKART, Verdict(HOLDS), "exhaustive", _counts(t))


def baer_check(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
               threads: int = 1,
               closure_budget: int = 100000) -> ClassReport:
    """Every subset of squares: its annihilator set must be some U_e(A).

    S^⊥ = ⋂_{x∈S} {x}^⊥, so the closure of the singleton annihilators under
    intersection covers every nonempty S; the empty subset contributes the
    whole algebra.
    """
    if A.field.p is None:
        raise ValueError("right annihilators need exhaustive mode (finite field)")
    t = element_table(A, budget, threads)
    full = t.idempotent_full_masks()

    def check(mask, gens):
        if np.packbits(mask).tobytes() in full:
            return None
        w = {"subset": [_el_dict(A, t.coords(x), x) for x in gens],
             "annihilator_size": int(mask.sum())}
        v = Verdict(FAILS, witness=w,
                    reason="annihilator is not an inner ideal of an idempotent")
        return ClassReport(BAER, v, "exhaustive", _counts(t))

    items = []
    seen = set()
    everything = np.ones(t.n, dtype=bool)
    bad = check(everything, ())     # S = ∅ has annihilator A
    if bad is not None:
        return bad
    seen.add(np.packbits(everything).tobytes())
    for s in t.square_indices:
        ann = t.annihilator_mask(int(s))
        key = np.packbits(ann).tobytes()
        if key in seen:
            continue
        seen.add(key)
        items.append((ann, (int(s),)))
        bad = check(ann, (int(s),))
        if bad is not None:
            return bad
    base = list(items)
    i = 0
    while i < len(items):
        cur_mask, cur_gen = items[i]
        for bm, bg in base:
            nm = cur_mask & bm
            key = np.packbits(nm).tobytes()
            if key in seen:
                continue
            seen.add(key)
            gen = tuple(sorted(set(cur_gen) | set(bg)))
            items.append((nm, gen))
            bad = check(nm, gen)
            if bad is not None:
                return bad
            if len(items) > closure_budget:
                v = Verdict(UNKNOWN, reason="intersection closure exceeded budget")
                return ClassReport(BAER, v, "exhaustive", _counts(t))
        i += 1
    d = _counts(t)
    d["n_closure"] = len(items)
    return ClassReport(BAER, Verdict(HOLDS), "exhaustive", d)


# -- degeneracy --------------------------------------------------------------

def trivial_elements(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                     threads: int = 1):
    """Elements z with U_z = 0 and z² = 0.

    Finite field: exhaustive list (complete).  Rationals: exact solution of
    the quadratic system; returns (points, components, complete).
    """
    if A.field.p is not None:
        t = element_table(A, budget, threads)
        els = [t.element(int(i)) for i in t.trivial_indices()]
        return els, (), True
    res = solve_quadratic_system(A.field, A.dim, u_zero_equations(A))
    pts = sorted({A.element(p) for p in res.points()},
                 key=lambda e: e.sort_key())
    pos = tuple(c for c in res.components if c.dirs)
    return pts, pos, res.complete


def nondeg_check(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                 threads: int = 1) -> ClassReport:
    pts, comps, complete = trivial_elements(A, budget, threads)
    nonzero = [z for z in pts if not z.is_zero()]
    method = "exhaustive" if A.field.p is not None else "symbolic"
    if nonzero:
        w = {"trivial": _el_dict(A, nonzero[0].coords)}
        return ClassReport(NONDEG, Verdict(FAILS, witness=w,
                                           reason="nonzero trivial element"),
                           method, {})
    for c in comps:
        # a positive-dimensional family always contains a nonzero point
        F = A.field
        z = c.base if any(not F.is_zero(v) for v in c.base) else \
            tuple(F.add(a, b) for a, b in zip(c.base, c.dirs[0]))
        w = {"trivial": _el_dict(A, z)}
        return ClassReport(NONDEG, Verdict(FAILS, witness=w,
                                           reason="family of trivial elements"),
                           method, {})
    if complete:
        return ClassReport(NONDEG, Verdict(HOLDS), method, {})
    return ClassReport(NONDEG, Verdict(UNKNOWN,
                                       reason="trivial-element search incomplete"),
                       method, {})


def quad_nondeg_check(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                      threads: int = 1) -> ClassReport:
    """Fails iff some nonzero trivial element has a square root."""
    method = "exhaustive" if A.field.p is not None else "symbolic"
    if A.field.p is not None:
        t = element_table(A, budget, threads)
        triv = set(int(i) for i in t.trivial_indices())
        triv.discard(0)
        sq = t._sq_idx
        bad_mask = np.isin(sq, np.array(sorted(triv), dtype=np.int64)) \
            if triv else np.zeros(t.n, dtype=bool)
        hits = np.nonzero(bad_mask)[0]
        if hits.size:
            a = int(hits[0])
            w = {"root": _el_dict(A, t.coords(a), a),
                 "square": _el_dict(A, t.coords(int(sq[a])), int(sq[a]))}
            return ClassReport(QUAD_NONDEG,
                               Verdict(FAILS, witness=w,
                                       reason="trivial element with a square root"),
                               method, {"n_trivial": len(triv) + 1})
        return ClassReport(QUAD_NONDEG, Verdict(HOLDS), method,
                           {"n_trivial": len(triv) + 1})
    pts, comps, complete = trivial_elements(A, budget, threads)
    for z in pts:
        if z.is_zero():
            continue
        has = has_square_root(A, z, budget)
        if has.holds:
            w = {"square": _el_dict(A, z.coords),
                 "root": has.witness.get("root")}
            return ClassReport(QUAD_NONDEG,
                               Verdict(FAILS, witness=w,
                                       reason="trivial element with a square root"),
                               method, {})
        if has.outcome == UNKNOWN:
            return ClassReport(QUAD_NONDEG,
                               Verdict(UNKNOWN, reason="root search incomplete"),
                               method, {})
    if comps:
        return ClassReport(QUAD_NONDEG,
                           Verdict(UNKNOWN,
                                   reason="trivial family not scanned for roots"),
                           method, {})
    if complete:
        return ClassReport(QUAD_NONDEG, Verdict(HOLDS), method, {})
    return ClassReport(QUAD_NONDEG,
                       Verdict(UNKNOWN, reason="trivial-element search incomplete"),
                       method, {})


def nilroot_check(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                  threads: int = 1) -> ClassReport:
    """Holds when no nonzero nilpotent element has a square root."""
    if A.field.p is None:
        raise ValueError("nilpotency scan needs exhaustive mode (finite field)")
    t = element_table(A, budget, threads)
    w = t.nilroot_witness()
    if w is None:
        return ClassReport(NILROOT, Verdict(HOLDS), "exhaustive", _counts(t))
    root, sq = w
    wd = {"root": _el_dict(A, t.coords(root), root),
          "square": _el_dict(A, t.coords(sq), sq)}
    return ClassReport(NILROOT,
                       Verdict(FAILS, witness=wd,
                               reason="nonzero nilpotent square"),
                       "exhaustive", _counts(t))


def quasi_unit(A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
               threads: int = 1):
    """The idempotent whose inner ideal meets A² in all of A², if any.

    This is the idempotent the RJ condition assigns to x = 0; it acts as a
    unit on every square.
    """
    if A.field.p is None:
        raise ValueError("needs exhaustive mode (finite field)")
    t = element_table(A, budget, threads)
    for e in t.idempotent_indices:
        mask = t.u_image_fixed_mask(int(e), t.square_coords())
        if bool(mask.all()):
            return t.element(int(e))
    return None


def idempotent_kernel_identity(A: JordanAlgebra, e: Element,
                               budget: int = DEFAULT_BUDGET,
                               threads: int = 1) -> dict:
    """Exhaustive set comparison of (ker U_e ∩ A²) with (U_{1-e}(A) ∩ A²).

    Non-unital algebras read 1-e inside the unital hull and intersect the
    image back with A.
    """
    if A.field.p is None:
        raise ValueError("needs exhaustive mode (finite field)")
    t = element_table(A, budget, threads)
    i = t.index_of(e.coords)
    if t._sq_idx[i] != i:
        raise ValueError("element is not an idempotent")
    lhs = t.killed_square_masks(t.coords_block_of(np.array([i])))[0]
    if A.is_unital:
        comp = A.unit - e
        rhs = t.u_image_fixed_mask(t.index_of(comp.coords), t.square_coords())
    else:
        H = unital_hull(A)
        eh = hull_embed(H, e)
        comp = H.unit - eh
        img = H.u_op(comp).image()
        SQ = t.square_coords()
        F = A.field
        rhs = np.zeros(t.n_squares, dtype=bool)
        for m in range(t.n_squares):
            vec = [F.zero] + [F.coerce(int(v)) for v in SQ[m]]
            rhs[m] = img.contains(vec)
    same = bool((lhs == rhs).all())
    return {"equal": same,
            "lhs_squares": [int(v) for v in t.squares_of_mask(lhs)],
            "rhs_squares": [int(v) for v in t.squares_of_mask(rhs)]}


# -- symbolic (rationals) ----------------------------------------------------

def _u_identically_zero(A: JordanAlgebra) -> bool:
    """U_x = 0 for every x, certified on basis elements and pair sums."""
    zero = [[A.field.zero] * A.dim for _ in range(A.dim)]

    def is_zero_u(coords):
        return A.u_matrix(coords) == tuple(tuple(r) for r in zero)

    n = A.dim
    basis = [A._basis_vec(i) for i in range(n)]
    for i in range(n):
        if not is_zero_u(basis[i]):
            return False
    for i in range(n):
        for j in range(i + 1, n):
            s = tuple(A.field.add(a, b) for a, b in zip(basis[i], basis[j]))
            if not is_zero_u(s):
                return False
    return True


def _certify_holds_for_x(A: JordanAlgebra, x: Element, idem: IdempotentList):
    """Idempotent e with a sound certificate for the x-level set equality:
    im U_e inside ker U_x, and ker U_x ∩ span(A²) inside im U_e."""
    ker = A.u_op(x).kernel()
    span = A.squares_span()
    cut = ker.intersect(span)
    for e in idem.elements:
        im = A.u_op(e).image()
        if im.is_subspace_of(ker) and cut.is_subspace_of(im):
            return e
    return None


def _known_squares(A: JordanAlgebra, idem: IdempotentList) -> list:
    """Elements certified to be squares: basis squares, pair-sum squares,
    idempotents (their own squares), the unit."""
    out = {}
    n = A.dim
    basis = [A.basis_element(i) for i in range(n)]
    for b in basis:
        s = b.square()
        out.setdefault(s.coords, s)
    for i in range(n):
        for j in range(i + 1, n):
            s = (basis[i] + basis[j]).square()
            out.setdefault(s.coords, s)
    for e in idem.elements:
        out.setdefault(e.coords, e)
    if A.is_unital:
        out.setdefault(A.unit.coords, A.unit)
    return list(out.values())


def _certify_fails_for_x(A: JordanAlgebra, x: Element, idem: IdempotentList):
    """Certified failure needs the complete finite idempotent list and a
    separating certified square for each candidate."""
    if not (idem.complete and idem.finite):
        return None
    ker = A.u_op(x).kernel()
    squares = _known_squares(A, idem)
    separations = []
    for e in idem.elements:
        im = A.u_op(e).image()
        sep = None
        for s in squares:
            in_ker = ker.contains(list(s.coords))
            in_im = im.contains(list(s.coords))
            if in_ker and not in_im:
                sep = {"square": _el_dict(A, s.coords), "side": "killed-not-inner"}
                break
            if in_im and not in_ker:
                sep = {"square": _el_dict(A, s.coords), "side": "inner-not-killed"}
                break
        if sep is None:
            return None
        separations.append(sep)
    return separations


def _rj_symbolic(A: JordanAlgebra, probes: list) -> ClassReport:
    if A.field.p is not None:
        raise ValueError("symbolic mode is for the rational field")
    idem = idempotents(A)
    span = A.squares_span()
    if _u_identically_zero(A):
        if span.dim == 0:
            d = {"certificate": "zero-u-operator",
                 "squares_span_dim": 0}
            return ClassReport(RJ, Verdict(HOLDS), "symbolic", d)
        # every kernel is A, but no inner ideal can reach a nonzero square
        if idem.complete and idem.finite:
            seps = _certify_fails_for_x(A, A.zero(), idem)
            if seps is not None:
                w = {"x": _el_dict(A, A.zero().coords), "separations": seps}
                return ClassReport(RJ, Verdict(FAILS, witness=w,
                                               reason="no idempotent matches"),
                                   "symbolic", {})
        return ClassReport(RJ, Verdict(UNKNOWN,
                                       reason="zero U with nonzero squares span"),
                           "symbolic", {})
    cands = [A.zero()] + [A.basis_element(i) for i in range(A.dim)]
    if A.is_unital:
        cands.append(A.unit)
    cands.extend(probes)
    checked = []
    for x in cands:
        e = _certify_holds_for_x(A, x, idem)
        if e is not None:
            checked.append({"x": _el_dict(A, x.coords),
                            "e": _el_dict(A, e.coords)})
            continue
        seps = _certify_fails_for_x(A, x, idem)
        if seps is not None:
            w = {"x": _el_dict(A, x.coords), "separations": seps}
            return ClassReport(RJ, Verdict(FAILS, witness=w,
                                           reason="every idempotent separated"),
                               "symbolic", {"probes_checked": checked})
        return ClassReport(RJ,
                           Verdict(UNKNOWN,
                                   reason="probe element not certified either way"),
                           "symbolic",
                           {"probes_checked": checked,
                            "stuck_at": _el_dict(A, x.coords)})
    return ClassReport(RJ,
                       Verdict(UNKNOWN,
                               reason="all probes certified, but the element "
                                      "quantifier is over an infinite field"),
                       "symbolic", {"probes_checked": checked})


def _bj_symbolic(A: JordanAlgebra) -> ClassReport:
    if _u_identically_zero(A) and A.squares_span().dim == 0:
        # every annihilator is A, A² = {0}, e = 0 always works
        d = {"certificate": "zero-u-operator"}
        return ClassReport(BJ, Verdict(HOLDS), "symbolic", d)
    rj = _rj_symbolic(A, [])
    if rj.outcome == FAILS:
        return ClassReport(BJ, Verdict(FAILS, witness=rj.verdict.witness,
                                       reason="not RJ"),
                           "symbolic", {})
    return ClassReport(BJ, Verdict(UNKNOWN,
                                   reason="subset quantifier not certified "
                                          "over the rationals"),
                       "symbolic", {})
