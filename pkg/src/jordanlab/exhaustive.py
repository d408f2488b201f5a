"""Vectorized exhaustive enumeration of a finite-field algebra.

Enumerates all p^dim elements in lexicographic coordinate order (first
coordinate most significant) and exposes the batch tables the decision
procedures consume: squares, idempotents, trivial and nilpotent elements,
per-element kernel masks and per-idempotent image masks.  All arithmetic
is integer numpy mod p; merges happen in index order so results do not
depend on the thread count.
"""

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .budget import DEFAULT_BUDGET, check_budget
from .core import Element, JordanAlgebra

# x-chunk times square-block int64 intermediates stay < ~100 MB
CHUNK = 1024
SQUARE_BLOCK = 4096


class NotProjection(RuntimeError):
    """U_e failed U_e^2 = U_e for an idempotent e; the product table is
    not a Jordan algebra."""


class ElementTable:
    def __init__(self, A: JordanAlgebra, budget: int = DEFAULT_BUDGET,
                 threads: int = 1):
        if A.field.p is None:
            raise ValueError("exhaustive enumeration needs a finite field")
        self.A = A
        self.p = A.field.p
        self.dim = A.dim
        self.n = check_budget(self.p, self.dim, budget)
        self.threads = max(1, threads)
        self.powers = self.p ** np.arange(self.dim - 1, -1, -1, dtype=np.int64)
        self._sc = A.np_structure_fp()
        # lb[j] is the matrix of L_{b_j}: row k, column i
        self._lb = np.ascontiguousarray(np.transpose(self._sc, (0, 2, 1)))
        self._sq_idx = self._compute_square_indices()
        self._squares = np.unique(self._sq_idx)
        self._square_pos = {int(s): m for m, s in enumerate(self._squares)}
        self._SQ = self.coords_block_of(self._squares)
        self._idempotents = np.nonzero(
            self._sq_idx == np.arange(self.n, dtype=np.int64))[0]

    # -- indexing ---------------------------------------------------------

    def coords_block(self, lo: int, hi: int) -> np.ndarray:
        idx = np.arange(lo, hi, dtype=np.int64)
        return (idx[:, None] // self.powers[None, :]) % self.p

    def coords_block_of(self, idx: np.ndarray) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[:, None] // self.powers[None, :]) % self.p

    def coords(self, i: int) -> tuple:
        return tuple(int(c) for c in (i // self.powers) % self.p)

    def index_of(self, coords) -> int:
        vec = [int(c) % self.p for c in coords]
        return int(np.dot(np.array(vec, dtype=np.int64), self.powers))

    def element(self, i: int) -> Element:
        return self.A.element(self.coords(i))

    def index_of_element(self, a: Element) -> int:
        return self.index_of(a.coords)

    # -- batch products ---------------------------------------------------

    def _l_batch(self, coords: np.ndarray) -> np.ndarray:
        """L-operator matrices of a coordinate block, shape (c, dim, dim)."""
        return np.tensordot(coords, self._lb, axes=(1, 0)) % self.p

    def u_batch(self, coords: np.ndarray) -> np.ndarray:
        """U-operator matrices of a coordinate block: 2 L_a L_a - L_{a^2}."""
        LX = self._l_batch(coords)
        sq = np.einsum('cij,cj->ci', LX, coords) % self.p
        Lsq = self._l_batch(sq)
        return (2 * np.matmul(LX, LX) - Lsq) % self.p

    def u_matrix(self, i: int) -> np.ndarray:
        return self.u_batch(self.coords_block(i, i + 1))[0]

    def _chunk_ranges(self, n: int, chunk: int = CHUNK):
        return [(lo, min(lo + chunk, n)) for lo in range(0, n, chunk)]

    def _ordered_chunks(self, fn, ranges):
        """Run fn over chunk ranges, yielding results in range order."""
        if self.threads == 1 or len(ranges) <= 1:
            for r in ranges:
                yield fn(r)
            return
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            yield from pool.map(fn, ranges)

    def _compute_square_indices(self) -> np.ndarray:
        def one(rng):
            lo, hi = rng
            X = self.coords_block(lo, hi)
            LX = self._l_batch(X)
            sq = np.einsum('cij,cj->ci', LX, X) % self.p
            return sq @ self.powers

        parts = list(self._ordered_chunks(one, self._chunk_ranges(self.n)))
        return np.concatenate(parts)

    # -- element classes --------------------------------------------------

    @property
    def square_indices(self) -> np.ndarray:
        """Sorted element indices of the set {a^2 : a in A}."""
        return self._squares

    @property
    def n_squares(self) -> int:
        return len(self._squares)

    @property
    def idempotent_indices(self) -> np.ndarray:
        return self._idempotents

    def square_root_of(self, i: int):
        """Lex-first a with a^2 = element i, or None."""
        hits = np.nonzero(self._sq_idx == i)[0]
        return int(hits[0]) if hits.size else None

    def nilpotent_mask(self) -> np.ndarray:
        """Boolean mask over all elements: x^(2^k) = 0 for some k.

        Power-associativity bounds the nilpotency index by dim + 1, so
        ceil(log2(dim + 1)) squarings decide it.
        """
        cur = np.arange(self.n, dtype=np.int64)
        steps = max(1, int(np.ceil(np.log2(self.dim + 1))) + 1)
        for _ in range(steps):
            cur = self._sq_idx[cur]
        return cur == 0

    def trivial_indices(self) -> np.ndarray:
        """Elements z with U_z = 0 and z^2 = 0, in index order."""
        out = []

        def one(rng):
            lo, hi = rng
            U = self.u_batch(self.coords_block(lo, hi))
            flat = U.reshape(hi - lo, -1)
            zero_u = ~flat.any(axis=1)
            zero_sq = self._sq_idx[lo:hi] == 0
            return np.nonzero(zero_u & zero_sq)[0] + lo

        for part in self._ordered_chunks(one, self._chunk_ranges(self.n)):
            out.append(part)
        return np.concatenate(out) if out else np.zeros(0, dtype=np.int64)

    def nilroot_witness(self):
        """Lex-first nonzero nilpotent square, as (root index, square index).

        Returns None when no nilpotent element has a square root.
        """
        nilp = self.nilpotent_mask()
        bad = (self._sq_idx != 0) & nilp[self._sq_idx]
        hits = np.nonzero(bad)[0]
        if not hits.size:
            return None
        squares_hit = self._sq_idx[hits]
        m = int(np.argmin(squares_hit))
        s = int(squares_hit[m])
        return self.square_root_of(s), s

    # -- kernel and image masks -------------------------------------------

    def killed_square_masks(self, coords: np.ndarray) -> np.ndarray:
        """For a block of elements x: boolean (c, n_squares) mask of the
        squares s with U_x s = 0."""
        U = self.u_batch(coords)
        c = len(coords)
        out = np.empty((c, self.n_squares), dtype=bool)
        SQt = self._SQ.T
        for lo in range(0, self.n_squares, SQUARE_BLOCK):
            hi = min(lo + SQUARE_BLOCK, self.n_squares)
            img = np.matmul(U, SQt[:, lo:hi]) % self.p
            out[:, lo:hi] = ~img.any(axis=1)
        return out

    def kernel_mask_full(self, i: int) -> np.ndarray:
        """Boolean (n,) mask over all elements y with U_x y = 0, x = element i."""
        U = self.u_matrix(i)
        out = np.empty(self.n, dtype=bool)
        for lo, hi in self._chunk_ranges(self.n, SQUARE_BLOCK):
            img = (self.coords_block(lo, hi) @ U.T) % self.p
            out[lo:hi] = ~img.any(axis=1)
        return out

    def annihilator_mask(self, i: int) -> np.ndarray:
        """Boolean (n,) mask of the elements a with U_a x = 0, x = element i.

        This is the quadratic side: the subscript runs over a, not x.
        """
        xv = self.coords_block(i, i + 1)[0]
        out = np.empty(self.n, dtype=bool)

        def one(rng):
            lo, hi = rng
            U = self.u_batch(self.coords_block(lo, hi))
            img = np.einsum('cij,j->ci', U, xv) % self.p
            return ~img.any(axis=1)

        pos = 0
        for part in self._ordered_chunks(one, self._chunk_ranges(self.n)):
            out[pos:pos + len(part)] = part
            pos += len(part)
        return out

    def u_image_fixed_mask(self, e_idx: int, coords: np.ndarray) -> np.ndarray:
        """Membership of a coordinate block in U_e(A) for an idempotent e,
        tested as the fixed-point set of the projection U_e."""
        U = self.u_matrix(e_idx)
        U2 = np.matmul(U, U) % self.p
        if not np.array_equal(U2, U):
            raise NotProjection(
                f"U_e is not idempotent at element {e_idx}; not a Jordan algebra")
        img = np.matmul(coords, U.T) % self.p
        return ~((img - coords) % self.p).any(axis=1)

    def idempotent_square_masks(self) -> dict:
        """bytes(mask over squares of U_e(A) membership) -> first idempotent
        index, in idempotent order."""
        out = {}
        for e in self._idempotents:
            mask = self.u_image_fixed_mask(int(e), self._SQ)
            out.setdefault(np.packbits(mask).tobytes(), int(e))
        return out

    def idempotent_full_masks(self) -> dict:
        """bytes(mask over all elements of U_e(A) membership) -> first
        idempotent index."""
        out = {}
        for e in self._idempotents:
            parts = [self.u_image_fixed_mask(int(e), self.coords_block(lo, hi))
                     for lo, hi in self._chunk_ranges(self.n, SQUARE_BLOCK)]
            mask = np.concatenate(parts)
            out.setdefault(np.packbits(mask).tobytes(), int(e))
        return out

    def distinct_kernel_square_sets(self):
        """All distinct sets ker U_x ∩ A² as square masks, with the lex-first
        x producing each: returns (masks list, witness list) in first-seen
        order, scanning x in index order."""
        masks = []
        witnesses = []
        seen = {}
        pos = 0
        ranges = self._chunk_ranges(self.n)

        def one(rng):
            lo, hi = rng
            return self.killed_square_masks(self.coords_block(lo, hi))

        for block in self._ordered_chunks(one, ranges):
            for row in block:
                key = np.packbits(row).tobytes()
                if key not in seen:
                    seen[key] = pos
                    masks.append(row.copy())
                    witnesses.append(pos)
                pos += 1
        return masks, witnesses

    def squares_of_mask(self, mask: np.ndarray) -> np.ndarray:
        """Element indices selected by a mask over the squares list."""
        return self._squares[mask]

    def square_coords(self) -> np.ndarray:
        return self._SQ
