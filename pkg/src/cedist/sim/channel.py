"""Pauli channels acting on Bob's halves of the noisy ebits."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal, Mapping

import numpy as np

from ..builder import GeneratorSet
from ..pauli import PauliVec, PauliWindow, from_pauli_window

__all__ = ["ChannelModel", "ErrorFrameSeq", "sample_errors", "interior_frames", "trial_rng"]

ChannelKind = Literal["depolarizing", "independent-XZ", "custom-table", "periodic"]
KINDS = ("depolarizing", "independent-XZ", "custom-table", "periodic")

_LETTER = np.array([["I", "X"], ["Z", "Y"]])


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """PCG64 stream for one trial, keyed on ``(seed, trial)``."""
    return np.random.default_rng([seed, trial])


@dataclass(frozen=True)
class ChannelModel:
    """Error model for the noisy columns.

    ``depolarizing``: X, Y, Z each with probability ``p/3`` per qubit.
    ``independent-XZ``: X and Z flips, each independently with probability ``p``.
    ``custom-table``: per-qubit probabilities given in ``table`` (keys X, Y, Z).
    ``periodic``: exactly one uniformly random single-qubit error every
    ``spacing`` frames, starting at the first interior frame; ``p`` is unused.
    """

    kind: ChannelKind = "depolarizing"
    p: float = 0.0
    seed: int = 0
    table: Mapping[str, float] = field(default_factory=dict)
    spacing: int = 1

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown channel kind {self.kind!r}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p={self.p} outside [0, 1]")
        if self.spacing < 1:
            raise ValueError("spacing must be positive")
        if self.kind == "custom-table":
            if set(self.table) - {"X", "Y", "Z"}:
                raise ValueError("custom table keys must be X, Y, Z")
            probs = [self.table.get(k, 0.0) for k in "XYZ"]
            if min(probs) < 0 or sum(probs) > 1 + 1e-12:
                raise ValueError("custom table probabilities must be non-negative and sum to at most 1")


@dataclass
class ErrorFrameSeq:
    """Bob-side Pauli error on ``frames`` frames of ``n_total`` qubits."""

    z: np.ndarray
    x: np.ndarray

    def __post_init__(self) -> None:
        self.z = np.asarray(self.z, dtype=np.uint8)
        self.x = np.asarray(self.x, dtype=np.uint8)
        if self.z.shape != self.x.shape or self.z.ndim != 2:
            raise ValueError("z and x must be equal-shape (frames, n_total) arrays")

    @classmethod
    def identity(cls, frames: int, n_total: int) -> ErrorFrameSeq:
        return cls(np.zeros((frames, n_total), np.uint8), np.zeros((frames, n_total), np.uint8))

    @classmethod
    def from_window(cls, w: PauliWindow, frames: int | None = None) -> ErrorFrameSeq:
        frames = w.start_frame + len(w.frames) if frames is None else frames
        out = cls.identity(frames, w.n)
        for i, f in enumerate(w.frames):
            t = w.start_frame + i
            for q, c in enumerate(f):
                out.z[t, q] = c in "ZY"
                out.x[t, q] = c in "XY"
        return out

    @property
    def frames(self) -> int:
        return self.z.shape[0]

    @property
    def n_total(self) -> int:
        return self.z.shape[1]

    @property
    def weight(self) -> int:
        return int((self.z | self.x).sum())

    def window(self) -> PauliWindow:
        return PauliWindow(tuple("".join(_LETTER[zr, xr]) for zr, xr in zip(self.z, self.x)), 0)

    def paulivec(self) -> PauliVec:
        return from_pauli_window(self.window())

    def __xor__(self, other: ErrorFrameSeq) -> ErrorFrameSeq:
        return ErrorFrameSeq(self.z ^ other.z, self.x ^ other.x)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ErrorFrameSeq):
            return NotImplemented
        return (
            self.z.shape == other.z.shape
            and bool((self.z == other.z).all())
            and bool((self.x == other.x).all())
        )

    def __str__(self) -> str:
        return str(self.window())


def interior_frames(frames: int, nu: int) -> range:
    """Frames whose every overlapping generator shift lies inside the window."""
    return range(nu, frames - nu)


def sample_errors(
    ch: ChannelModel,
    frames: int,
    g: GeneratorSet,
    rng: np.random.Generator | None = None,
) -> ErrorFrameSeq:
    """Draw one error sequence; margins of ``nu`` frames and catalytic columns stay clean."""
    if frames < 1:
        raise ValueError("frames must be at least 1")
    rng = np.random.default_rng(ch.seed) if rng is None else rng
    n, total, nu = g.n_noisy, g.frame_size, g.constraint_len
    err = ErrorFrameSeq.identity(frames, total)
    inner = interior_frames(frames, nu)
    if len(inner) == 0 or n == 0:
        return err
    lo, hi = inner.start, inner.stop
    if ch.kind == "periodic":
        for t in range(lo, hi, ch.spacing):
            q = int(rng.integers(n))
            letter = int(rng.integers(1, 4))  # 1=X, 2=Y, 3=Z
            err.x[t, q] = letter in (1, 2)
            err.z[t, q] = letter in (2, 3)
        return err
    shape = (hi - lo, n)
    if ch.kind == "independent-XZ":
        ex = rng.random(shape) < ch.p
        ez = rng.random(shape) < ch.p
    else:
        if ch.kind == "depolarizing":
            px = py = pz = ch.p / 3
        else:
            px, py, pz = (ch.table.get(k, 0.0) for k in "XYZ")
        u = rng.random(shape)
        is_x = u < px
        is_y = (u >= px) & (u < px + py)
        is_z = (u >= px + py) & (u < px + py + pz)
        ex = is_x | is_y
        ez = is_z | is_y
    err.x[lo:hi, :n] = ex
    err.z[lo:hi, :n] = ez
    return err
