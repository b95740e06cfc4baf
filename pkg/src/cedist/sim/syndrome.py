"""Syndrome differences for a convolutional stabilizer over a finite window of frames.

Generator ``j`` shifted by ``s`` frames occupies frames ``s .. s + nu`` of the
window. Shift ``s`` is measured only when that whole support fits, so a window
of ``F`` frames carries shifts ``0 .. F - 1 - nu``. Entry ``[s, j]`` of the
syndrome stream is the coefficient at ``D**s`` of the shifted symplectic
product between generator ``j`` and the error.
"""

from __future__ import annotations

from dataclasses import dataclass
import numpy as np

from ..builder import GeneratorSet
from .channel import ErrorFrameSeq

__all__ = ["SyndromeModel", "SyndromeStream", "syndromes", "syndrome_column", "StabilizerSpan"]


@dataclass
class SyndromeStream:
    bits: np.ndarray  # shape (shifts, m)

    def __post_init__(self) -> None:
        self.bits = np.asarray(self.bits, dtype=np.uint8)

    @property
    def shifts(self) -> int:
        return self.bits.shape[0]

    @property
    def vectors(self) -> list[tuple[int, ...]]:
        return [tuple(int(b) for b in row) for row in self.bits]

    def is_zero(self) -> bool:
        return not self.bits.any()

    def __xor__(self, other: SyndromeStream) -> SyndromeStream:
        return SyndromeStream(self.bits ^ other.bits)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SyndromeStream):
            return NotImplemented
        return self.bits.shape == other.bits.shape and bool((self.bits == other.bits).all())


class SyndromeModel:
    """Generator tensor of a delay-normalized stabilizer, ready for syndrome arithmetic.

    ``gz[j, r, q]`` and ``gx[j, r, q]`` are the Z and X bits of generator ``j``
    at frame ``r`` on qubit ``q``.
    """

    def __init__(self, g: GeneratorSet):
        self.gset = g.normalized()
        self.m = g.m
        self.nu = g.constraint_len
        self.n_noisy = g.n_noisy
        self.n_total = g.frame_size
        self._spans: dict[int, StabilizerSpan] = {}
        shape = (self.m, self.nu + 1, self.n_total)
        self.gz = np.zeros(shape, np.uint8)
        self.gx = np.zeros(shape, np.uint8)
        for j, u in enumerate(self.gset.gens):
            for q in range(self.n_total):
                for e in u.z[q].exponents():
                    self.gz[j, e, q] = 1
                for e in u.x[q].exponents():
                    self.gx[j, e, q] = 1

    def shifts(self, frames: int) -> int:
        return frames - self.nu

    def syndromes(self, err: ErrorFrameSeq) -> SyndromeStream:
        F = err.frames
        if err.n_total != self.n_total:
            raise ValueError(f"error has {err.n_total} columns, code frame has {self.n_total}")
        S = self.shifts(F)
        if S < 1:
            raise ValueError(f"window of {F} frames is shorter than the generator span {self.nu + 1}")
        acc = np.zeros((S, self.m), np.int64)
        ex = err.x.astype(np.int64)
        ez = err.z.astype(np.int64)
        for r in range(self.nu + 1):
            acc += ex[r : r + S] @ self.gz[:, r, :].T.astype(np.int64)
            acc += ez[r : r + S] @ self.gx[:, r, :].T.astype(np.int64)
        return SyndromeStream((acc & 1).astype(np.uint8))

    def frame_contribution(self, z: np.ndarray, x: np.ndarray) -> tuple[int, ...]:
        """Syndrome contribution of a one-frame pattern, packed as ``m``-bit ints.

        Entry ``r`` is what the pattern at frame ``t`` adds to shift ``t - r``;
        bit ``j`` belongs to generator ``j``.
        """
        z = np.asarray(z, np.int64)
        x = np.asarray(x, np.int64)
        out = []
        for r in range(self.nu + 1):
            bits = (self.gz[:, r, :] @ x + self.gx[:, r, :] @ z) & 1
            out.append(sum(int(b) << j for j, b in enumerate(bits)))
        return tuple(out)

    def single_qubit_patterns(self, max_weight: int = 1) -> list[tuple[np.ndarray, np.ndarray]]:
        """One-frame patterns on noisy columns, identity first, then by weight.

        Within a weight, patterns are ordered by (qubit, letter) with X < Y < Z.
        """
        from itertools import combinations, product

        n, N = self.n_noisy, self.n_total
        letters = ((0, 1), (1, 1), (1, 0))  # X, Y, Z as (z, x)
        out = [(np.zeros(N, np.uint8), np.zeros(N, np.uint8))]
        for w in range(1, max_weight + 1):
            for qs in combinations(range(n), w):
                for ls in product(letters, repeat=w):
                    z = np.zeros(N, np.uint8)
                    x = np.zeros(N, np.uint8)
                    for q, (zb, xb) in zip(qs, ls):
                        z[q], x[q] = zb, xb
                    out.append((z, x))
        return out

    def span(self, frames: int) -> StabilizerSpan:
        if frames not in self._spans:
            self._spans[frames] = StabilizerSpan(self, frames)
        return self._spans[frames]


def syndromes(err: ErrorFrameSeq, g: GeneratorSet | SyndromeModel) -> SyndromeStream:
    model = g if isinstance(g, SyndromeModel) else SyndromeModel(g)
    return model.syndromes(err)


def syndrome_column(g: GeneratorSet | SyndromeModel, qubit: int, letter: str) -> tuple[int, ...]:
    """Bits of generator 0 seen by a single-qubit error, one per generator frame.

    Entry ``r`` is the commutation bit between frame ``r`` of the generator
    and the error, i.e. the syndrome on shift ``t - r`` for an error at frame ``t``.
    """
    model = g if isinstance(g, SyndromeModel) else SyndromeModel(g)
    if letter not in ("X", "Y", "Z"):
        raise ValueError(f"bad letter {letter!r}")
    z = np.zeros(model.n_total, np.uint8)
    x = np.zeros(model.n_total, np.uint8)
    z[qubit] = letter in "ZY"
    x[qubit] = letter in "XY"
    return tuple(c & 1 for c in model.frame_contribution(z, x))


class StabilizerSpan:
    """GF(2) row space of all generator shifts that fit inside a window.

    Vectors are Python ints: bit ``2*(t*N + q)`` is Z and ``2*(t*N + q) + 1``
    is X of qubit ``q`` at frame ``t``.
    """

    def __init__(self, model: SyndromeModel, frames: int):
        self.frames = frames
        self.n_total = model.n_total
        self._basis: dict[int, int] = {}  # leading bit -> reduced vector
        for s in range(model.shifts(frames)):
            for j in range(model.m):
                z = np.zeros((frames, self.n_total), np.uint8)
                x = np.zeros((frames, self.n_total), np.uint8)
                z[s : s + model.nu + 1] = model.gz[j]
                x[s : s + model.nu + 1] = model.gx[j]
                self._insert(self.pack(ErrorFrameSeq(z, x)))

    def pack(self, err: ErrorFrameSeq) -> int:
        inter = np.stack([err.z, err.x], axis=-1).reshape(-1)
        idx = np.flatnonzero(inter)
        return sum(1 << int(i) for i in idx)

    def _reduce(self, v: int) -> int:
        while v:
            top = v.bit_length() - 1
            b = self._basis.get(top)
            if b is None:
                return v
            v ^= b
        return 0

    def _insert(self, v: int) -> None:
        v = self._reduce(v)
        if v:
            self._basis[v.bit_length() - 1] = v

    @property
    def dimension(self) -> int:
        return len(self._basis)

    def contains(self, err: ErrorFrameSeq) -> bool:
        if err.frames != self.frames or err.n_total != self.n_total:
            raise ValueError("error shape does not match the window")
        return self._reduce(self.pack(err)) == 0
