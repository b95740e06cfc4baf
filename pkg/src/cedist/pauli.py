"""Polynomial vectors <-> phase-free Pauli sequences, and the shifted symplectic product.

A :class:`PauliVec` holds ``n`` z-polynomials and ``n`` x-polynomials. Frame
``t`` of the Pauli sequence it represents carries, on qubit ``q``, the letter
determined by the coefficients of ``D**t`` in ``z[q]`` and ``x[q]``.

Shift convention: coefficient ``i`` of ``shifted_symplectic(u, v)`` is 1
exactly when ``u`` anticommutes with ``v`` moved ``i`` frames toward earlier
times (equivalently, ``u`` moved ``i`` frames later).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .laurent import ZERO, LaurentPoly, add, mul, parse_poly, time_reverse

__all__ = [
    "PauliVec",
    "PauliWindow",
    "to_pauli_window",
    "from_pauli_window",
    "shifted_symplectic",
    "commutes_at_shift",
    "letter_product",
]

_LETTER = {(0, 0): "I", (0, 1): "X", (1, 0): "Z", (1, 1): "Y"}
_BITS = {v: k for k, v in _LETTER.items()}


@dataclass(frozen=True)
class PauliVec:
    z: tuple[LaurentPoly, ...]
    x: tuple[LaurentPoly, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", tuple(self.z))
        object.__setattr__(self, "x", tuple(self.x))
        if len(self.z) != len(self.x):
            raise ValueError(f"z has {len(self.z)} entries but x has {len(self.x)}")

    @property
    def n(self) -> int:
        return len(self.z)

    @classmethod
    def zeros(cls, n: int) -> PauliVec:
        return cls((ZERO,) * n, (ZERO,) * n)

    @classmethod
    def parse(cls, text: str) -> PauliVec:
        """Parse ``"1+D^3, 1+D^2 | D^2, D"`` (z entries, bar, x entries)."""
        if text.count("|") != 1:
            raise ValueError(f"expected exactly one '|' in {text!r}")
        zs, xs = text.split("|")
        z = [parse_poly(t) for t in zs.split(",")]
        x = [parse_poly(t) for t in xs.split(",")]
        return cls(tuple(z), tuple(x))

    def __str__(self) -> str:
        return ", ".join(map(str, self.z)) + " | " + ", ".join(map(str, self.x))

    def entries(self) -> tuple[LaurentPoly, ...]:
        return self.z + self.x

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.entries())

    def is_pure_z(self) -> bool:
        return all(p.is_zero() for p in self.x) and not self.is_zero()

    def is_pure_x(self) -> bool:
        return all(p.is_zero() for p in self.z) and not self.is_zero()

    @property
    def delay(self) -> int:
        return min(p.delay for p in self.entries() if p)

    @property
    def degree(self) -> int:
        return max(p.degree for p in self.entries() if p)

    def __add__(self, other: PauliVec) -> PauliVec:
        _check_same_n(self, other)
        return PauliVec(
            tuple(add(a, b) for a, b in zip(self.z, other.z)),
            tuple(add(a, b) for a, b in zip(self.x, other.x)),
        )

    def scale(self, f: LaurentPoly) -> PauliVec:
        """Scalar multiple ``f(D) * u(D)``."""
        return PauliVec(tuple(mul(f, p) for p in self.z), tuple(mul(f, p) for p in self.x))

    def shift(self, k: int) -> PauliVec:
        return PauliVec(tuple(p.shift(k) for p in self.z), tuple(p.shift(k) for p in self.x))

    def normalized(self) -> PauliVec:
        """Shift so the earliest non-identity frame is frame 0."""
        if self.is_zero():
            return self
        return self.shift(-self.delay)

    def extend(self, z_extra: Sequence[LaurentPoly], x_extra: Sequence[LaurentPoly]) -> PauliVec:
        """Append columns to the frame."""
        if len(z_extra) != len(x_extra):
            raise ValueError("extra z and x columns differ in length")
        return PauliVec(self.z + tuple(z_extra), self.x + tuple(x_extra))

    def window(self, first: int | None = None, last: int | None = None) -> PauliWindow:
        if first is None or last is None:
            if self.is_zero():
                first = last = 0
            else:
                first = self.delay if first is None else first
                last = self.degree if last is None else last
        return to_pauli_window(self, first, last)


@dataclass(frozen=True)
class PauliWindow:
    """Finite slice of a phase-free Pauli sequence: one string per frame."""

    frames: tuple[str, ...]
    start_frame: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "frames", tuple(self.frames))
        widths = {len(f) for f in self.frames}
        if len(widths) > 1:
            raise ValueError("frames have different widths")
        for f in self.frames:
            if set(f) - set("IXYZ"):
                raise ValueError(f"bad Pauli letters in frame {f!r}")

    @property
    def n(self) -> int:
        return len(self.frames[0]) if self.frames else 0

    @classmethod
    def parse(cls, text: str, start_frame: int = 0) -> PauliWindow:
        """Parse bar notation such as ``ZZX|IXZ|XZZ|ZII``."""
        frames = tuple(f.strip() for f in text.strip().strip("|").split("|"))
        return cls(frames, start_frame)

    def __str__(self) -> str:
        return "|".join(self.frames)

    def letter(self, t: int, q: int) -> str:
        i = t - self.start_frame
        if 0 <= i < len(self.frames):
            return self.frames[i][q]
        return "I"


def to_pauli_window(u: PauliVec, first_frame: int, last_frame: int) -> PauliWindow:
    if first_frame > last_frame:
        raise ValueError("first_frame must not exceed last_frame")
    frames = []
    for t in range(first_frame, last_frame + 1):
        frames.append("".join(_LETTER[(zq.coeff(t), xq.coeff(t))] for zq, xq in zip(u.z, u.x)))
    return PauliWindow(tuple(frames), first_frame)


def from_pauli_window(w: PauliWindow) -> PauliVec:
    """Inverse of :func:`to_pauli_window` (identity outside the window)."""
    z_exps: list[list[int]] = [[] for _ in range(w.n)]
    x_exps: list[list[int]] = [[] for _ in range(w.n)]
    for i, frame in enumerate(w.frames):
        t = w.start_frame + i
        for q, letter in enumerate(frame):
            zb, xb = _BITS[letter]
            if zb:
                z_exps[q].append(t)
            if xb:
                x_exps[q].append(t)
    return PauliVec(
        tuple(LaurentPoly.from_exponents(e) for e in z_exps),
        tuple(LaurentPoly.from_exponents(e) for e in x_exps),
    )


def letter_product(a: str, b: str) -> str:
    """Phase-free product of two equal-length Pauli strings."""
    if len(a) != len(b):
        raise ValueError("length mismatch")
    out = []
    for p, q in zip(a, b):
        zp, xp = _BITS[p]
        zq, xq = _BITS[q]
        out.append(_LETTER[(zp ^ zq, xp ^ xq)])
    return "".join(out)


def _check_same_n(u: PauliVec, v: PauliVec) -> None:
    if u.n != v.n:
        raise ValueError(f"frame size mismatch: {u.n} vs {v.n}")


def shifted_symplectic(u: PauliVec, v: PauliVec) -> LaurentPoly:
    """``sum_q z_q(D^-1) x'_q(D) + x_q(D^-1) z'_q(D)`` over Z2."""
    _check_same_n(u, v)
    out = ZERO
    for zq, xq, zq2, xq2 in zip(u.z, u.x, v.z, v.x):
        if zq and xq2:
            out = add(out, mul(time_reverse(zq), xq2))
        if xq and zq2:
            out = add(out, mul(time_reverse(xq), zq2))
    return out


def commutes_at_shift(u: PauliVec, v: PauliVec, i: int) -> bool:
    return shifted_symplectic(u, v).coeff(i) == 0


def stack_windows(vecs: Iterable[PauliVec], first: int, last: int) -> list[str]:
    return [str(to_pauli_window(v, first, last)) for v in vecs]
