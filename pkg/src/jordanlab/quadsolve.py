"""Exact solver for small systems of quadratic equations over a field.

Equations are x^T Q x + L.x + c = 0 with symmetric Q.  The solver keeps an
affine parameterization of the candidate set and repeatedly eliminates:
identically-zero equations are dropped, linear ones eliminate a parameter,
univariate or rank-one quadratics branch on exact square roots.  Systems
that stay coupled after these moves are reported as stuck rather than
guessed at, so a COMPLETE answer is a certificate.
"""

from dataclasses import dataclass

from .fields import Field
from .linalg import rref

BRANCH_BUDGET = 256

COMPLETE = "COMPLETE"
PARTIAL = "PARTIAL"


@dataclass(frozen=True)
class QuadEq:
    """x^T Q x + L.x + c = 0; Q row-major symmetric."""
    Q: tuple
    L: tuple
    c: object


def make_eq(F: Field, Q, L, c) -> QuadEq:
    n = len(L)
    half = F.inv(F.coerce(2))
    sym = tuple(tuple(F.mul(F.add(Q[i][j], Q[j][i]), half) for j in range(n))
                for i in range(n))
    return QuadEq(sym, tuple(F.coerce(v) for v in L), F.coerce(c))


@dataclass(frozen=True)
class AffineComponent:
    """base + span(dirs); a single point when dirs is empty."""
    base: tuple
    dirs: tuple

    @property
    def dim(self) -> int:
        return len(self.dirs)


@dataclass(frozen=True)
class SolveResult:
    status: str
    components: tuple

    @property
    def complete(self) -> bool:
        return self.status == COMPLETE

    def points(self) -> list:
        return [c.base for c in self.components if not c.dirs]

    def has_positive_dim(self) -> bool:
        return any(c.dirs for c in self.components)


def _dot(F: Field, u, v):
    acc = F.zero
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


def _substitute(F: Field, eq: QuadEq, base, dirs):
    """Rewrite an ambient equation in the parameters t of x = base + t.dirs."""
    n = len(base)
    Qb = [_dot(F, eq.Q[i], base) for i in range(n)]
    c = F.add(_dot(F, base, Qb), F.add(_dot(F, eq.L, base), eq.c))
    L = tuple(F.add(F.mul(F.coerce(2), _dot(F, d, Qb)), _dot(F, eq.L, d))
              for d in dirs)
    Q = []
    for da in dirs:
        Qda = [_dot(F, eq.Q[i], da) for i in range(n)]
        Q.append(tuple(_dot(F, db, Qda) for db in dirs))
    return tuple(Q), L, c


def _is_zero_mat(F, Q):
    return all(F.is_zero(v) for row in Q for v in row)


def _rank_one_factor(F, Q):
    """Q = q * v v^T if it has rank one; returns (q, v) or None."""
    rows, _ = rref(F, [list(r) for r in Q])
    nz = [r for r in rows if any(not F.is_zero(v) for v in r)]
    if len(nz) != 1:
        return None
    v = tuple(nz[0])
    piv = next(i for i, x in enumerate(v) if not F.is_zero(x))
    q = F.div(Q[piv][piv], F.mul(v[piv], v[piv]))
    n = len(v)
    for i in range(n):
        for j in range(n):
            if Q[i][j] != F.mul(q, F.mul(v[i], v[j])):
                return None
    if F.is_zero(q):
        return None
    return q, v


def _quadratic_roots(F, q, l, c):
    """Roots of q t^2 + l t + c in the field, q != 0; [] when irreducible."""
    disc = F.sub(F.mul(l, l), F.mul(F.coerce(4), F.mul(q, c)))
    r = F.sqrt(disc)
    if r is None:
        return []
    inv2q = F.inv(F.mul(F.coerce(2), q))
    roots = {F.mul(F.sub(r, l), inv2q), F.mul(F.sub(F.neg(r), l), inv2q)}
    return sorted(roots, key=F.sort_key)

def _pin_parameter(F, base, dirs, coeffs, value):
    """Fold the linear relation coeffs.t = value into the parameterization."""
    piv = max(range(len(coeffs)), key=lambda i: not F.is_zero(coeffs[i]))
    inv = F.inv(coeffs[piv])
    dp = dirs[piv]
    shift = F.mul(value, inv)
    nbase = tuple(F.add(base[i], F.mul(shift, dp[i])) for i in range(len(base)))
    ndirs = []
    for m, d in enumerate(dirs):
        if m == piv:
            continue
        f = F.mul(coeffs[m], inv)
        ndirs.append(tuple(F.sub(d[i], F.mul(f, dp[i])) for i in range(len(base))))
    return nbase, tuple(ndirs)


def _canonical(F, base, dirs):
    rows, pivots = rref(F, [list(d) for d in dirs])
    clean = [tuple(r) for r in rows if any(not F.is_zero(v) for v in r)]
    b = list(base)
    for r, p in zip(clean, pivots):
        f = b[p]
        if not F.is_zero(f):
            b = [F.sub(b[i], F.mul(f, r[i])) for i in range(len(b))]
    return AffineComponent(tuple(b), tuple(clean))


def solve_quadratic_system(F: Field, dim: int, eqs: list,
                           branch_budget: int = BRANCH_BUDGET) -> SolveResult:
    ident = tuple(tuple(F.one if i == j else F.zero for j in range(dim))
                  for i in range(dim))
    start = (tuple(F.zero for _ in range(dim)), ident)
    stack = [start]
    components = {}
    stuck = False
    spent = 0

    while stack:
        spent += 1
        if spent > branch_budget:
            stuck = True
            break
        base, dirs = stack.pop()
        progressed = True
        dead = False
        while progressed and not dead:
            progressed = False
            reduced = [_substitute(F, eq, base, dirs) for eq in eqs]
            reduced = [(Q, L, c) for (Q, L, c) in reduced
                       if not (_is_zero_mat(F, Q)
                               and all(F.is_zero(v) for v in L)
                               and F.is_zero(c))]
            if not reduced:
                comp = _canonical(F, base, dirs)
                components[comp] = None
                dead = True
                continue
            # contradictions first, then linear elimination
            for Q, L, c in reduced:
                if _is_zero_mat(F, Q) and all(F.is_zero(v) for v in L):
                    dead = True
                    break
            if dead:
                continue
            for Q, L, c in reduced:
                if _is_zero_mat(F, Q):
                    base, dirs = _pin_parameter(F, base, dirs, L, F.neg(c))
                    progressed = True
                    break
            if progressed:
                continue
            # branch on a decoupled quadratic
            branched = False
            for Q, L, c in reduced:
                fac = _rank_one_factor(F, Q)
                if fac is None:
                    continue
                q, v = fac
                lam = None
                ok = True
                for i, vi in enumerate(v):
                    if F.is_zero(vi):
                        if not F.is_zero(L[i]):
                            ok = False
                            break
                    else:
                        r = F.div(L[i], vi)
                        if lam is None:
                            lam = r
                        elif lam != r:
                            ok = False
                            break
                if not ok:
                    continue
                if lam is None:
                    lam = F.zero
                for u in _quadratic_roots(F, q, lam, c):
                    stack.append(_pin_parameter(F, base, dirs, v, u))
                branched = True
                dead = True
                break
            if not branched:
                stuck = True
                dead = True
    status = PARTIAL if stuck else COMPLETE
    return SolveResult(status, tuple(components.keys()))
