"""Character images of sampled codewords and the centered Gram matrix.

The additive character sends a field element to zeta^Tr(a) with zeta a
primitive p-th root of unity (p the characteristic), so every matrix entry
is a root of unity.  Entries are carried as small integer exponents next to
their materialized complex values: the exponents are exact, which is what
makes the unit diagonal and the zero diagonal of the centered matrix exact
rather than approximate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from ._rng import DEFAULT_SEED, SplitMix64, trial_seed
from .codes import LinearCode, codewords_for_indices
from .gf import FieldElement, FieldMismatchError, FieldSpec


class CharacterMap:
    """The standard additive character psi(a) = zeta^Tr(a) of GF(q)."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        p = spec.p
        self.zeta = complex(math.cos(2 * math.pi / p), math.sin(2 * math.pi / p))
        if p == 2:
            self.roots = np.array([1.0 + 0.0j, -1.0 + 0.0j])
        else:
            angles = 2.0 * np.pi * np.arange(p) / p
            self.roots = np.cos(angles) + 1j * np.sin(angles)
        if spec.q <= (1 << 16):
            self._exp_table = np.array(
                [spec.trace_int(a) for a in range(spec.q)], dtype=np.int8
            )
        else:
            self._exp_table = None

    def exponent(self, a: int) -> int:
        """Tr(a) as an integer exponent in [0, p)."""
        if self._exp_table is not None:
            return int(self._exp_table[a])
        return self.spec.trace_int(a)

    def value(self, a: int) -> complex:
        return complex(self.roots[self.exponent(a)])

    def exponents(self, words: np.ndarray) -> np.ndarray:
        if self._exp_table is not None:
            return self._exp_table[words]
        flat = np.array([self.spec.trace_int(int(a)) for a in words.ravel()],
                        dtype=np.int8)
        return flat.reshape(words.shape)


@lru_cache(maxsize=None)
def character_map(spec: FieldSpec) -> CharacterMap:
    return CharacterMap(spec)


def psi_apply(cmap: CharacterMap, word) -> np.ndarray:
    """Component-wise character image of a codeword.

    Accepts encoded integer symbols or a sequence of FieldElement.
    """
    if isinstance(word, (list, tuple)) and word and isinstance(word[0], FieldElement):
        for el in word:
            if el.spec != cmap.spec:
                raise FieldMismatchError(
                    f"word over {el.spec} fed to a character for {cmap.spec}"
                )
        word = [el.val for el in word]
    word = np.asarray(word, dtype=np.int64)
    if word.size and (word.min() < 0 or word.max() >= cmap.spec.q):
        raise FieldMismatchError(
            f"symbols outside GF({cmap.spec.q}); wrong field for this word"
        )
    return cmap.roots[cmap.exponents(word)]


@dataclass(frozen=True)
class CodewordMatrix:
    """p x n matrix of character values plus the sampling metadata."""

    code: LinearCode
    exponents: np.ndarray        # p x n integer exponents of zeta (exact)
    phi: np.ndarray              # p x n complex values
    indices: Tuple[int, ...]     # sampled codeword indices, draw order
    mode: str                    # "distinct" | "iid"
    seed: int                    # master seed
    trial_id: int

    @property
    def p_rows(self) -> int:
        return self.phi.shape[0]

    @property
    def n(self) -> int:
        return self.phi.shape[1]


@dataclass(frozen=True)
class CenteredMatrix:
    """The Hermitian, zero-diagonal matrix sqrt(n/p) (Gram - I)."""

    m: np.ndarray
    p_rows: int
    n: int
    source: CodewordMatrix = field(repr=False)


def sample_codewords(code: LinearCode, p: int, mode: str = "distinct",
                     seed: int = DEFAULT_SEED, trial_id: int = 0) -> CodewordMatrix:
    """Draw p codeword indices uniformly and map them through the character.

    ``distinct`` rejects repeated indices (requires p <= q^k); ``iid`` draws
    with replacement.  (seed, trial_id) fully determines the draw.
    """
    if mode not in ("distinct", "iid"):
        raise ValueError(f"mode must be 'distinct' or 'iid', got {mode!r}")
    if p < 1:
        raise ValueError("p must be at least 1")
    capacity = code.spec.q ** code.k
    if mode == "distinct" and p > capacity:
        raise ValueError(
            f"cannot draw {p} distinct codewords from a code with {capacity}"
        )
    rng = SplitMix64(trial_seed(seed, trial_id))
    indices = []
    if mode == "iid":
        indices = [rng.below(capacity) for _ in range(p)]
    else:
        seen = set()
        while len(indices) < p:
            u = rng.below(capacity)
            if u not in seen:
                seen.add(u)
                indices.append(u)
    words = codewords_for_indices(code, indices)
    cmap = character_map(code.spec)
    exponents = cmap.exponents(words)
    phi = cmap.roots[exponents]
    exponents.setflags(write=False)
    phi.setflags(write=False)
    return CodewordMatrix(code, exponents, phi, tuple(indices), mode, seed, trial_id)


def gram_matrix(cw: CodewordMatrix, chunk: int = 1024) -> np.ndarray:
    """(1/n) Phi Phi*, with a pairwise tree over column chunks.

    The tree keeps the summation error at O(log n) ulp for n up to ~3*10^4.
    The diagonal is set to exactly 1 (rows have squared norm exactly n) and
    the lower triangle mirrors the upper, so the result is exactly Hermitian.
    """
    phi = cw.phi
    p, n = phi.shape
    parts = [
        phi[:, a:a + chunk] @ phi[:, a:a + chunk].conj().T
        for a in range(0, n, chunk)
    ]
    while len(parts) > 1:
        merged = []
        for i in range(0, len(parts) - 1, 2):
            merged.append(parts[i] + parts[i + 1])
        if len(parts) % 2:
            merged.append(parts[-1])
        parts = merged
    g = parts[0] / n
    iu, ju = np.triu_indices(p, 1)
    g[ju, iu] = np.conj(g[iu, ju])
    np.fill_diagonal(g, 1.0)
    return g


def centered_matrix(cw: CodewordMatrix) -> CenteredMatrix:
    """sqrt(n/p) (Gram - I); the zero diagonal is enforced exactly."""
    p, n = cw.phi.shape
    m = gram_matrix(cw)
    np.fill_diagonal(m, 0.0)
    m *= math.sqrt(n / p)
    m.setflags(write=False)
    return CenteredMatrix(m, p, n, cw)


def coherence_statistic(cw: CodewordMatrix) -> float:
    """max over row pairs of |<v, v'>| / sqrt(n) (diagnostic only)."""
    p, n = cw.phi.shape
    if p < 2:
        raise ValueError("coherence needs at least two rows")
    g = gram_matrix(cw)
    np.fill_diagonal(g, 0.0)
    return float(np.abs(g).max() * math.sqrt(n))


def dump_codeword_matrix(cw: CodewordMatrix, path: str) -> None:
    """Debug dump: header ``p n q seed mode``, then p lines of n exponents."""
    with open(path, "w") as fh:
        fh.write(f"{cw.p_rows} {cw.n} {cw.code.spec.q} {cw.seed} {cw.mode}\n")
        for row in cw.exponents:
            fh.write(" ".join(str(int(e)) for e in row) + "\n")


def load_exponent_dump(path: str):
    """Parse a dump back into (header dict, exponent matrix)."""
    with open(path) as fh:
        p, n, q, seed, mode = fh.readline().split()
        header = {"p": int(p), "n": int(n), "q": int(q),
                  "seed": int(seed), "mode": mode}
        rows = [[int(x) for x in fh.readline().split()] for _ in range(header["p"])]
    return header, np.array(rows, dtype=np.int8)
