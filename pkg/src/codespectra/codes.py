"""Linear [n,k]_q codes: generator matrices, named families, dual-distance checks.

A code is held as an integer-encoded generator matrix (see :mod:`.gf` for the
encoding).  The dual-distance machinery comes in two flavours:

* :func:`dual_distance_at_least` -- a fast certificate for thresholds up to 5,
  built on meet-in-the-middle hashing of generator columns and column-pair
  sums (weight-w dual codewords are exactly w-column linear dependencies);
* :func:`dual_distance_exact` -- a small-instance oracle that enumerates the
  dual code outright, falling back to the exact MacWilliams transform of the
  primal weight distribution when the dual is too large to enumerate but the
  code itself is small.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .gf import FieldSpec, get_field

_DUAL_ENUM_CAP = 1 << 22
_PAIR_BYTES_CAP = 3_200_000_000  # certificate pair-sum array, bytes


class RankDeficiencyError(ValueError):
    """Generator matrix rows are linearly dependent."""


class DualTooLargeError(ValueError):
    """Both the code and its dual are too large for exact enumeration."""


@dataclass(frozen=True)
class Witness:
    """A nonzero dual codeword, as sorted support indices plus coefficients."""

    support: Tuple[int, ...]
    coeffs: Tuple[int, ...]

    @property
    def weight(self) -> int:
        return len(self.support)

    def as_vector(self, n: int) -> np.ndarray:
        v = np.zeros(n, dtype=np.int64)
        for j, c in zip(self.support, self.coeffs):
            v[j] = c
        return v


@dataclass(frozen=True)
class DualDistanceCertificate:
    threshold: int
    holds: bool
    witness: Optional[Witness]


class LinearCode:
    """An [n,k]_q linear code given by a full-rank generator matrix.

    The constructor row-reduces the matrix; a dependent row raises
    :class:`RankDeficiencyError` naming the offending (0-based) row.
    Instances are immutable and safe to share.
    """

    def __init__(self, spec: FieldSpec, gen, name: str = ""):
        gen = np.array(gen, dtype=np.int64)
        if gen.ndim != 2 or gen.size == 0:
            raise ValueError("generator matrix must be a nonempty 2-D array")
        if gen.min() < 0 or gen.max() >= spec.q:
            raise ValueError(f"generator entries must encode GF({spec.q}) elements")
        self.spec = spec
        self.gen = gen
        self.k, self.n = gen.shape
        self.name = name or f"[{self.n},{self.k}]_{spec.q}"
        self._rref, self._pivots = self._row_reduce()
        self.gen.setflags(write=False)

    # -- row reduction -------------------------------------------------------

    def _row_reduce(self):
        if self.spec.q == 2:
            rows = [_pack_bits(r) for r in self.gen]
            rref, pivots, dep = _rref_binary(rows, self.n)
        else:
            rows = [list(map(int, r)) for r in self.gen]
            rref, pivots, dep = _rref_generic(rows, self.spec)
        if dep is not None:
            raise RankDeficiencyError(
                f"row {dep} of the generator matrix depends on earlier rows"
            )
        return rref, pivots

    def contains(self, vector: Sequence[int]) -> bool:
        """Membership test by reduction against the cached row echelon form."""
        if self.spec.q == 2:
            cur = _pack_bits(np.asarray(vector, dtype=np.int64))
            for pcol, prow in zip(self._pivots, self._rref):
                if (cur >> pcol) & 1:
                    cur ^= prow
            return cur == 0
        spec = self.spec
        cur = list(map(int, vector))
        for pcol, prow in zip(self._pivots, self._rref):
            c = cur[pcol]
            if c:
                for j in range(self.n):
                    cur[j] = spec.sub_int(cur[j], spec.mul_int(c, prow[j]))
        return not any(cur)

    def parity_check_matrix(self) -> np.ndarray:
        """An (n-k) x n matrix H with H G^T = 0, from the reduced echelon form."""
        n, k, spec = self.n, self.k, self.spec
        pivots = list(self._pivots)
        nonpivots = [c for c in range(n) if c not in set(pivots)]
        h = np.zeros((n - k, n), dtype=np.int64)
        if spec.q == 2:
            for r, c in enumerate(nonpivots):
                h[r, c] = 1
                for ridx, pcol in enumerate(pivots):
                    h[r, pcol] = (self._rref[ridx] >> c) & 1
        else:
            for r, c in enumerate(nonpivots):
                h[r, c] = 1
                for ridx, pcol in enumerate(pivots):
                    h[r, pcol] = spec.neg_int(self._rref[ridx][c])
        for r in range(n - k):
            if any(_dot(spec, h[r], self.gen[i]) for i in range(k)):
                raise AssertionError("parity-check construction failed")
        return h

    def __repr__(self) -> str:
        return f"LinearCode({self.name}: [{self.n},{self.k}]_{self.spec.q})"


def _pack_bits(row) -> int:
    out = 0
    for j, v in enumerate(row):
        if v:
            out |= 1 << j
    return out


def _rref_binary(rows: List[int], n: int):
    rref: List[int] = []
    pivots: List[int] = []
    for idx, row in enumerate(rows):
        cur = row
        for pcol, prow in zip(pivots, rref):
            if (cur >> pcol) & 1:
                cur ^= prow
        if cur == 0:
            return rref, pivots, idx
        lead = (cur & -cur).bit_length() - 1
        for t in range(len(rref)):
            if (rref[t] >> lead) & 1:
                rref[t] ^= cur
        rref.append(cur)
        pivots.append(lead)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [rref[i] for i in order], [pivots[i] for i in order], None


def _rref_generic(rows: List[List[int]], spec: FieldSpec):
    rref: List[List[int]] = []
    pivots: List[int] = []
    n = len(rows[0])
    for idx, row in enumerate(rows):
        cur = list(row)
        for pcol, prow in zip(pivots, rref):
            c = cur[pcol]
            if c:
                for j in range(n):
                    cur[j] = spec.sub_int(cur[j], spec.mul_int(c, prow[j]))
        lead = next((j for j, v in enumerate(cur) if v), None)
        if lead is None:
            return rref, pivots, idx
        inv = spec.inv_int(cur[lead])
        cur = [spec.mul_int(inv, v) for v in cur]
        for t in range(len(rref)):
            c = rref[t][lead]
            if c:
                rref[t] = [
                    spec.sub_int(rref[t][j], spec.mul_int(c, cur[j])) for j in range(n)
                ]
        rref.append(cur)
        pivots.append(lead)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [rref[i] for i in order], [pivots[i] for i in order], None


def _dot(spec: FieldSpec, a, b) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = spec.add_int(acc, spec.mul_int(int(x), int(y)))
    return acc


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def code_from_generator(spec: FieldSpec, rows, name: str = "") -> LinearCode:
    """Wrap a generator matrix, rejecting rank-deficient input."""
    return LinearCode(spec, rows, name)


@lru_cache(maxsize=None)
def gold_code(m: int, decimation_k: int = 1,
              modulus: Optional[Tuple[int, ...]] = None) -> LinearCode:
    """Binary Gold code of length 2^m - 1 and dimension 2m (m odd, >= 3).

    Codewords are the sequences t -> Tr(a g^t) + Tr(b g^(d t)) over GF(2^m)
    with d = 2^decimation_k + 1 and g the designated field generator; the
    generator matrix holds the 2m basis codewords (a = g^i, b = 0) and
    (a = 0, b = g^i).
    """
    if m < 3 or m % 2 == 0:
        raise ValueError(f"Gold codes need odd m >= 3, got m={m}")
    if math.gcd(decimation_k, m) != 1:
        raise ValueError(
            f"decimation exponent k={decimation_k} must be coprime to m={m}"
        )
    field = get_field(2, m, modulus)
    n = (1 << m) - 1
    g = field.generator

    seq = np.empty(n, dtype=np.int64)
    x = 1
    for t in range(n):
        seq[t] = field.trace_int(x)
        x = field.mul_int(x, g)

    d = (1 << decimation_k) + 1
    rows = [np.roll(seq, -i) for i in range(m)]
    dec_base = (d * np.arange(n, dtype=np.int64)) % n
    rows += [seq[(dec_base + i) % n] for i in range(m)]

    name = f"gold:m={m}" if decimation_k == 1 else f"gold:m={m},k={decimation_k}"
    return LinearCode(get_field(2, 1), np.vstack(rows), name)


def augment_all_ones(code: LinearCode) -> LinearCode:
    """Extend a code by the all-ones row; errors if it is already a codeword."""
    ones = np.ones(code.n, dtype=np.int64)
    if code.contains(ones):
        raise ValueError(f"{code.name} already contains the all-ones vector")
    gen = np.vstack([code.gen, ones])
    if code.name.startswith("gold:"):
        name = "gold+1:" + code.name.split(":", 1)[1]
    else:
        name = code.name + "+1"
    return LinearCode(code.spec, gen, name)


def reed_muller_1(m: int) -> LinearCode:
    """First-order binary Reed-Muller code [2^m, m+1] (dual distance 4)."""
    if m < 2:
        raise ValueError(f"RM(1,m) needs m >= 2, got m={m}")
    n = 1 << m
    t = np.arange(n, dtype=np.int64)
    rows = [np.ones(n, dtype=np.int64)]
    rows += [(t >> j) & 1 for j in range(m)]
    return LinearCode(get_field(2, 1), np.vstack(rows), f"rm1:m={m}")


# ---------------------------------------------------------------------------
# dual-distance certificate (meet in the middle, thresholds <= 5)
# ---------------------------------------------------------------------------

def dual_distance_at_least(code: LinearCode, t: int) -> DualDistanceCertificate:
    """Certify that no nonzero dual codeword has weight below ``t`` (t <= 5).

    Equivalently: every set of fewer than ``t`` generator columns is linearly
    independent.  On failure the certificate carries a minimum-weight witness
    with lexicographically smallest support, re-verified before emission.
    """
    if t > 5:
        raise ValueError("thresholds above 5 are unsupported (complexity guard)")
    if t < 1:
        raise ValueError("threshold must be at least 1")
    if t == 1:
        return DualDistanceCertificate(t, True, None)

    if code.spec.q == 2 and code.k <= 62:
        found = _search_dependency_binary(code, t)
    else:
        found = _search_dependency_generic(code, t)

    if found is None:
        return DualDistanceCertificate(t, True, None)
    witness = Witness(*found)
    _verify_witness(code, witness, t)
    return DualDistanceCertificate(t, False, witness)


def _verify_witness(code: LinearCode, w: Witness, t: int) -> None:
    if not (0 < w.weight < t):
        raise AssertionError(f"witness weight {w.weight} outside (0, {t})")
    if list(w.support) != sorted(set(w.support)):
        raise AssertionError("witness support must be strictly increasing")
    vec = w.as_vector(code.n)
    spec = code.spec
    for i in range(code.k):
        if _dot(spec, vec, code.gen[i]):
            raise AssertionError("witness is not orthogonal to the code")


def _search_dependency_binary(code: LinearCode, t: int):
    """Minimum-weight column dependency (< t) for q = 2, via pair-sum hashing."""
    gen = code.gen
    k, n = code.k, code.n
    weights = (np.uint64(1) << np.arange(k, dtype=np.uint64))
    packed = (gen.T.astype(np.uint64) * weights).sum(axis=1)

    zero = np.nonzero(packed == 0)[0]
    if zero.size:
        return (int(zero[0]),), (1,)
    if t == 2:
        return None

    order = np.argsort(packed, kind="stable")
    sv = packed[order]
    dup = np.nonzero(sv[1:] == sv[:-1])[0]
    if dup.size:
        best = None
        for d in dup:
            pair = tuple(sorted((int(order[d]), int(order[d + 1]))))
            if best is None or pair < best:
                best = pair
        return best, (1, 1)
    if t == 3 or n < 2:
        return None

    dtype = np.uint32 if k <= 32 else np.uint64
    total = n * (n - 1) // 2
    if total * np.dtype(dtype).itemsize > _PAIR_BYTES_CAP:
        raise ValueError(
            f"column-pair search needs {total} sums; too large for this build"
        )
    cols = packed.astype(dtype)
    sums = np.empty(total, dtype=dtype)
    offsets = np.zeros(max(n - 1, 1), dtype=np.int64)
    ofs = 0
    for i in range(n - 1):
        offsets[i] = ofs
        cnt = n - 1 - i
        sums[ofs:ofs + cnt] = cols[i] ^ cols[i + 1:]
        ofs += cnt

    def pair_of(pos: int) -> Tuple[int, int]:
        i = int(np.searchsorted(offsets, pos, side="right")) - 1
        return i, i + 1 + int(pos - offsets[i])

    # weight 3: a pair sum that equals a third column
    singles_sorted = np.sort(cols)
    col_index = {int(v): j for j, v in reversed(list(enumerate(packed)))}
    cands3 = []
    chunk = 1 << 24
    for a in range(0, total, chunk):
        ch = sums[a:a + chunk]
        loc = np.searchsorted(singles_sorted, ch)
        loc[loc == n] = n - 1
        hits = np.nonzero(singles_sorted[loc] == ch)[0]
        for pos in hits:
            i, j = pair_of(a + int(pos))
            kk = col_index[int(ch[pos])]
            if kk != i and kk != j:
                cands3.append(tuple(sorted((i, j, kk))))
    if cands3:
        return min(cands3), (1, 1, 1)
    if t == 4:
        return None

    # weight 4: two disjoint pairs with equal sums
    sums.sort()
    dup_vals = []
    for a in range(0, total - 1, chunk):
        b = min(a + chunk, total - 1)
        eq = np.nonzero(sums[a:b] == sums[a + 1:b + 1])[0]
        if eq.size:
            dup_vals.append(np.unique(sums[a:b][eq]))
    if not dup_vals:
        return None
    dup_vals = np.unique(np.concatenate(dup_vals))
    by_value: dict = {}
    for i in range(n - 1):
        row_sums = cols[i] ^ cols[i + 1:]
        loc = np.searchsorted(dup_vals, row_sums)
        loc[loc == dup_vals.size] = dup_vals.size - 1
        hits = np.nonzero(dup_vals[loc] == row_sums)[0]
        for off in hits:
            by_value.setdefault(int(row_sums[off]), []).append((i, i + 1 + int(off)))
    cands4 = []
    for pairs in by_value.values():
        for (i, j), (s, u) in combinations(pairs, 2):
            if len({i, j, s, u}) == 4:
                cands4.append(tuple(sorted((i, j, s, u))))
    if cands4:
        return min(cands4), (1, 1, 1, 1)
    return None


def _search_dependency_generic(code: LinearCode, t: int):
    """Dependency search over any GF(q), with projective column normalization."""
    spec = code.spec
    n, k = code.n, code.k
    cols = [tuple(int(code.gen[i, j]) for i in range(k)) for j in range(n)]

    def normalize(vec):
        lead = next((v for v in vec if v), None)
        if lead is None:
            return None, None
        inv = spec.inv_int(lead)
        return tuple(spec.mul_int(inv, v) for v in vec), lead

    for j, col in enumerate(cols):
        if not any(col):
            return (j,), (1,)
    if t == 2:
        return None

    canon = {}
    cands2 = []
    for j, col in enumerate(cols):
        key, lead = normalize(col)
        if key in canon:
            i, lead_i = canon[key]
            ci = spec.inv_int(lead_i)
            cj = spec.neg_int(spec.inv_int(lead))
            cands2.append(((i, j), (ci, cj)))
        else:
            canon[key] = (j, lead)
    if cands2:
        return min(cands2, key=lambda c: c[0])
    if t == 3:
        return None

    def combine(ca, cb, lam):
        return tuple(spec.add_int(a, spec.mul_int(lam, b)) for a, b in zip(ca, cb))

    single_of = {normalize(col)[0]: (j, normalize(col)[1]) for j, col in reversed(list(enumerate(cols)))}

    cands3 = []
    pair_map = {}
    cands4 = []
    for i in range(n - 1):
        for j in range(i + 1, n):
            for lam in range(1, spec.q):
                v = combine(cols[i], cols[j], lam)
                key, lead = normalize(v)
                if key is None:
                    continue  # weight-2 dependency, caught above
                hit = single_of.get(key)
                if hit is not None:
                    kk, lead_k = hit
                    if kk != i and kk != j:
                        # cols[i] + lam*cols[j] + c*cols[kk] = 0
                        c = spec.neg_int(spec.mul_int(lead, spec.inv_int(lead_k)))
                        support = sorted(((i, 1), (j, lam), (kk, c)))
                        cands3.append((tuple(s for s, _ in support),
                                       tuple(c for _, c in support)))
                if t >= 5:
                    for pi, pj, plam, plead in pair_map.get(key, ()):
                        if len({i, j, pi, pj}) == 4:
                            inv_a = spec.inv_int(plead)
                            inv_b = spec.neg_int(spec.inv_int(lead))
                            support = sorted((
                                (pi, inv_a),
                                (pj, spec.mul_int(plam, inv_a)),
                                (i, inv_b),
                                (j, spec.mul_int(lam, inv_b)),
                            ))
                            cands4.append((tuple(s for s, _ in support),
                                           tuple(c for _, c in support)))
                    pair_map.setdefault(key, []).append((i, j, lam, lead))
    if cands3:
        return min(cands3, key=lambda c: c[0])
    if t == 4 or not cands4:
        return None
    return min(cands4, key=lambda c: c[0])


# ---------------------------------------------------------------------------
# exact dual distance (small-instance oracle)
# ---------------------------------------------------------------------------

def dual_distance_exact(code: LinearCode) -> int:
    """Minimum Hamming weight over all nonzero dual codewords.

    Enumerates the dual code directly when q^(n-k) <= 2^22; otherwise falls
    back to enumerating the code itself and applying the exact (integer)
    MacWilliams transform.  For k = n the dual is trivial and n+1 is
    returned as the "no nonzero dual word" sentinel.
    """
    spec, n, k = code.spec, code.n, code.k
    q = spec.q
    if k == n:
        return n + 1
    dual_size = q ** (n - k)
    primal_size = q ** k
    if dual_size <= _DUAL_ENUM_CAP:
        counts = _span_weight_counts(code.parity_check_matrix(), spec, n)
    elif primal_size <= _DUAL_ENUM_CAP:
        primal_counts = _span_weight_counts(code.gen, spec, n)
        counts = _macwilliams(primal_counts, n, q, primal_size)
    else:
        raise DualTooLargeError(
            f"dual has {dual_size} words and code has {primal_size}; "
            f"both exceed the {_DUAL_ENUM_CAP} enumeration cap"
        )
    for w in range(1, n + 1):
        if counts[w]:
            return w
    return n + 1


def _span_weight_counts(rows: np.ndarray, spec: FieldSpec, n: int) -> List[int]:
    """Hamming-weight distribution of the row span (exact integer counts)."""
    r = len(rows)
    size = spec.q ** r
    if size > _DUAL_ENUM_CAP:
        raise DualTooLargeError(f"span of {size} words exceeds enumeration cap")
    counts = [0] * (n + 1)
    if spec.q == 2:
        ints = [_pack_bits(row) for row in rows]
        word = 0
        counts[0] = 1
        for i in range(1, size):
            word ^= ints[(i & -i).bit_length() - 1]
            counts[word.bit_count()] += 1
        return counts
    # generic: span via digit tensors, addition is digit-wise mod p
    p, m = spec.p, spec.m
    if size * n * m > (1 << 27):
        raise DualTooLargeError("span enumeration would exceed the memory cap")

    def digits_of(vec) -> np.ndarray:
        out = np.empty((n, m), dtype=np.int16)
        for j, v in enumerate(vec):
            out[j] = spec._digits(int(v))
        return out

    arr = np.zeros((1, n, m), dtype=np.int16)
    for row in rows:
        multiples = np.stack([
            digits_of([spec.mul_int(lam, int(v)) for v in row])
            for lam in range(spec.q)
        ])
        arr = (arr[None, :, :, :] + multiples[:, None, :, :]) % p
        arr = arr.reshape(-1, n, m)
    weights = (arr != 0).any(axis=2).sum(axis=1)
    binc = np.bincount(weights, minlength=n + 1)
    return [int(c) for c in binc]


def _macwilliams(counts: Sequence[int], n: int, q: int, code_size: int) -> List[int]:
    """Weight distribution of the dual code, by the MacWilliams identity.

    Uses exact integer Krawtchouk values, so the result is rounding-free.
    """
    nonzero = [(i, c) for i, c in enumerate(counts) if c]

    def kraw(j: int, i: int) -> int:
        acc = 0
        for ell in range(0, j + 1):
            term = (q - 1) ** (j - ell) * math.comb(i, ell) * math.comb(n - i, j - ell)
            acc += -term if ell & 1 else term
        return acc

    out = []
    for j in range(n + 1):
        b = sum(c * kraw(j, i) for i, c in nonzero)
        if b % code_size:
            raise AssertionError("MacWilliams transform did not divide evenly")
        out.append(b // code_size)
    return out


# ---------------------------------------------------------------------------
# codeword indexing
# ---------------------------------------------------------------------------

def codeword_by_index(code: LinearCode, u: int) -> np.ndarray:
    """The codeword whose message is the base-q digit expansion of ``u``.

    The least significant digit multiplies the first generator row.
    """
    q = code.spec.q
    if not 0 <= u < q ** code.k:
        raise ValueError(f"index {u} outside [0, {q ** code.k})")
    return codewords_for_indices(code, [u])[0]


def codewords_for_indices(code: LinearCode, indices) -> np.ndarray:
    """Batch form of :func:`codeword_by_index` (rows in input order)."""
    spec, k, n = code.spec, code.k, code.n
    q = spec.q
    cap = q ** k
    idx = [int(u) for u in indices]
    for u in idx:
        if not 0 <= u < cap:
            raise ValueError(f"index {u} outside [0, {cap})")
    if spec.q == 2:
        u = np.asarray(idx, dtype=np.int64)
        bits = (u[:, None] >> np.arange(k, dtype=np.int64)) & 1
        return (bits @ code.gen) % 2
    if spec.m == 1:
        rem = np.asarray(idx, dtype=np.int64)
        digits = np.empty((len(idx), k), dtype=np.int64)
        for i in range(k):
            rem, digits[:, i] = np.divmod(rem, q)
        return (digits @ code.gen) % spec.p
    out = np.zeros((len(idx), n), dtype=np.int64)
    for r, u in enumerate(idx):
        word = [0] * n
        for i in range(k):
            u, d = divmod(u, q)
            if d:
                for j in range(n):
                    word[j] = spec.add_int(
                        word[j], spec.mul_int(d, int(code.gen[i, j]))
                    )
        out[r] = word
    return out


def sphere_packing_ratio(code: LinearCode) -> float:
    """n^2 / q^k; bounded for any certified d-dual >= 5 family."""
    return code.n * code.n / code.spec.q ** code.k


# ---------------------------------------------------------------------------
# text format and named constructions
# ---------------------------------------------------------------------------

def write_generator(code: LinearCode, path: str) -> None:
    """Plain text: first line ``q n k``, then k rows of n digit values."""
    with open(path, "w") as fh:
        fh.write(f"{code.spec.q} {code.n} {code.k}\n")
        for row in code.gen:
            fh.write(" ".join(str(int(v)) for v in row) + "\n")


def read_generator(path: str, modulus: Optional[Tuple[int, ...]] = None,
                   name: str = "") -> LinearCode:
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 3:
            raise ValueError(f"{path}: first line must be 'q n k'")
        q, n, k = (int(x) for x in header)
        p, m = _prime_power(q)
        rows = []
        for _ in range(k):
            row = [int(x) for x in fh.readline().split()]
            if len(row) != n:
                raise ValueError(f"{path}: expected {n} entries per row")
            rows.append(row)
    spec = get_field(p, m, modulus)
    return LinearCode(spec, np.array(rows, dtype=np.int64),
                      name or os.path.basename(path))


def _prime_power(q: int) -> Tuple[int, int]:
    if q < 2:
        raise ValueError(f"q={q} is not a prime power")
    p = 2
    while q % p:
        p += 1
    m = 0
    v = q
    while v > 1:
        if v % p:
            raise ValueError(f"q={q} is not a prime power")
        v //= p
        m += 1
    return p, m


_NAMED_CACHE: dict = {}


def build_named(name: str, modulus: Optional[Tuple[int, ...]] = None) -> LinearCode:
    """Resolve a construction label like ``gold:m=5``, ``gold+1:m=5``,
    ``rm1:m=4``, or a path to a generator-matrix file."""
    key = (name, modulus)
    if key in _NAMED_CACHE:
        return _NAMED_CACHE[key]
    code = _build_named(name, modulus)
    _NAMED_CACHE[key] = code
    return code


def _build_named(name: str, modulus) -> LinearCode:
    if ":" in name:
        family, _, params_text = name.partition(":")
        params = {}
        for item in params_text.split(","):
            if not item:
                continue
            kk, _, vv = item.partition("=")
            try:
                params[kk.strip()] = int(vv)
            except ValueError:
                raise ValueError(f"bad parameter {item!r} in {name!r}") from None
        if family == "gold":
            return gold_code(params["m"], params.get("k", 1), modulus)
        if family == "gold+1":
            return augment_all_ones(gold_code(params["m"], params.get("k", 1), modulus))
        if family == "rm1":
            return reed_muller_1(params["m"])
        raise ValueError(f"unknown code family {family!r}")
    if os.path.exists(name):
        return read_generator(name, modulus)
    raise ValueError(f"{name!r} is neither a known construction nor a file")
