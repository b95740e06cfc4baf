"""Turn arbitrary (non-commuting) convolutional generators into commuting stabilizers.

Three augmentation constructions are provided:

* :func:`augment_single` for one generator (yield ``(n-1)/n``),
* :func:`augment_multi` for ``m`` generators (yield ``(n-m)/n``),
* :func:`css_gram_schmidt` + :func:`css_augment` for a pair of binary codes,
  which only spends a catalytic column per symplectic pair.

Catalytic (noiseless) ebit columns are always appended after the ``n`` noisy
columns of each frame.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

from .laurent import ONE, ZERO, LaurentPoly, exact_div, gcd_all, positive_part, time_reverse
from .pauli import PauliVec, shifted_symplectic

log = logging.getLogger(__name__)

__all__ = [
    "GeneratorSet",
    "GF4Generator",
    "CSSPair",
    "YieldInfo",
    "check_commuting",
    "augment_single",
    "augment_multi",
    "import_gf4",
    "css_gram_schmidt",
    "css_augment",
    "noncatastrophic_check",
    "protocol_yield",
]

Construction = Literal["plain", "single", "multi", "css"]


@dataclass(frozen=True)
class GeneratorSet:
    """Basic generator set of a convolutional stabilizer.

    ``n_noisy`` columns of every frame are noisy ebits; the remaining
    ``frame_size - n_noisy`` columns are catalytic ebits.
    """

    gens: tuple[PauliVec, ...]
    n_noisy: int
    construction: Construction = "plain"

    def __post_init__(self) -> None:
        object.__setattr__(self, "gens", tuple(self.gens))
        sizes = {g.n for g in self.gens}
        if len(sizes) > 1:
            raise ValueError(f"generators have different frame sizes: {sorted(sizes)}")
        if self.gens and self.n_noisy > self.frame_size:
            raise ValueError("n_noisy exceeds the frame size")
        for i, g in enumerate(self.gens):
            if g.is_zero():
                raise ValueError(f"generator {i} is the identity sequence")

    @classmethod
    def plain(cls, gens: Sequence[PauliVec]) -> GeneratorSet:
        gens = tuple(gens)
        return cls(gens, gens[0].n if gens else 0, "plain")

    @property
    def n(self) -> int:
        return self.n_noisy

    @property
    def m(self) -> int:
        return len(self.gens)

    @property
    def frame_size(self) -> int:
        return self.gens[0].n if self.gens else self.n_noisy

    @property
    def ebit_columns(self) -> tuple[int, ...]:
        return tuple(range(self.n_noisy, self.frame_size))

    @property
    def constraint_len(self) -> int:
        if not self.gens:
            return 0
        return max(g.normalized().degree for g in self.gens)

    def normalized(self) -> GeneratorSet:
        """Shift every generator so its earliest frame is frame 0."""
        return GeneratorSet(tuple(g.normalized() for g in self.gens), self.n_noisy, self.construction)

    def windows(self) -> list[str]:
        return [str(g.window()) for g in self.gens]


def check_commuting(g: GeneratorSet | Sequence[PauliVec]) -> bool:
    gens = g.gens if isinstance(g, GeneratorSet) else tuple(g)
    for i, u in enumerate(gens):
        for v in gens[i:]:
            if shifted_symplectic(u, v):
                return False
    return True


def augment_single(u: PauliVec) -> GeneratorSet:
    """Append one catalytic column ``((u.u)^+ | 1)`` so ``u`` commutes with all its shifts."""
    a_z = positive_part(shifted_symplectic(u, u))
    return GeneratorSet((u.extend([a_z], [ONE]),), u.n, "single")


def augment_multi(
    gens: Sequence[PauliVec], variant: Literal["upper", "lower"] = "lower"
) -> GeneratorSet:
    """Append ``m`` catalytic columns to ``m`` generators.

    The X part of the new columns is the identity. In the Z part, the diagonal
    holds ``(u_i.u_i)^+``; off-diagonal entries hold ``u_j.u_i`` above the
    diagonal (``"upper"``) or ``u_i.u_j`` placed at row ``j``, column ``i``
    below it (``"lower"``).
    """
    gens = tuple(gens)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("all generators must share the frame size")
    if variant not in ("upper", "lower"):
        raise ValueError(f"unknown variant {variant!r}")
    m = len(gens)
    prod = [[shifted_symplectic(gens[i], gens[j]) for j in range(m)] for i in range(m)]
    out = []
    for i in range(m):
        z_extra = [ZERO] * m
        x_extra = [ZERO] * m
        x_extra[i] = ONE
        z_extra[i] = positive_part(prod[i][i])
        for j in range(m):
            if variant == "upper" and j > i:
                z_extra[j] = prod[j][i]
            elif variant == "lower" and j < i:
                z_extra[j] = prod[j][i]
        out.append(gens[i].extend(z_extra, x_extra))
    return GeneratorSet(tuple(out), n, "single" if m == 1 else "multi")


# -- GF(4) import ------------------------------------------------------------

_F4_SYMBOLS = {"0": (0, 0), "1": (1, 1), "w": (1, 0), "W": (0, 1)}


@dataclass(frozen=True)
class GF4Generator:
    """Convolutional F4 vector, one F4 polynomial per position.

    Each F4 polynomial is stored in the basis {w, W} (W = w-bar): ``a = a_w * w +
    a_W * W`` with ``a_w`` and ``a_W`` binary Laurent polynomials. Note that
    ``1 = w + W``.
    """

    omega: tuple[LaurentPoly, ...]
    omega_bar: tuple[LaurentPoly, ...]

    @property
    def n(self) -> int:
        return len(self.omega)

    @classmethod
    def from_frames(cls, frames: Sequence[Sequence[str]], start: int = 0) -> GF4Generator:
        """Build from per-frame symbol lists, symbols in ``{0, 1, w, W}``."""
        if not frames:
            raise ValueError("no frames")
        n = len(frames[0])
        om: list[list[int]] = [[] for _ in range(n)]
        ob: list[list[int]] = [[] for _ in range(n)]
        for t, frame in enumerate(frames, start):
            if len(frame) != n:
                raise ValueError("frames have different widths")
            for q, sym in enumerate(frame):
                if sym not in _F4_SYMBOLS:
                    raise ValueError(f"F4 symbol {sym!r} not in {{0, 1, w, W}}")
                a, b = _F4_SYMBOLS[sym]
                if a:
                    om[q].append(t)
                if b:
                    ob[q].append(t)
        return cls(
            tuple(LaurentPoly.from_exponents(e) for e in om),
            tuple(LaurentPoly.from_exponents(e) for e in ob),
        )


def import_gf4(g: GF4Generator) -> list[PauliVec]:
    """Map ``W*g`` and ``w*g`` to Pauli generators via 0->I, w->X, 1->Y, W->Z.

    With ``a = x*w + z*W``: ``W*a = (x+z)*w + x*W`` and ``w*a = z*w + (x+z)*W``.
    """
    xs, zs = g.omega, g.omega_bar
    xz = tuple(a + b for a, b in zip(xs, zs))
    by_wbar = PauliVec(z=xs, x=xz)
    by_w = PauliVec(z=xz, x=zs)
    return [by_wbar, by_w]


# -- CSS-like construction ---------------------------------------------------


@dataclass(frozen=True)
class CSSPair:
    u: PauliVec
    v: PauliVec
    f: LaurentPoly  # shifted symplectic product u.v


def _kind(w: PauliVec) -> str:
    if w.is_pure_z():
        return "z"
    if w.is_pure_x():
        return "x"
    raise ValueError(f"row {w} is neither purely z nor purely x")


def _divide_out_gcf(w: PauliVec) -> PauliVec:
    g = gcd_all(w.entries())
    if g == ONE:
        return w
    return PauliVec(tuple(exact_div(p, g) for p in w.z), tuple(exact_div(p, g) for p in w.x))


def css_gram_schmidt(ws: Sequence[PauliVec]) -> tuple[list[CSSPair], list[PauliVec]]:
    """Split CSS rows into symplectic pairs and isotropic rows under the shifted product.

    Rows are scanned in order. For the current row, the first later row with
    a nonzero product becomes its partner (swapped into the next slot); every
    row after the pair is then cleared against both members, using the z rule
    or x rule according to its type, and divided by the gcd of its entries.
    A row with no partner is isotropic.
    """
    w = list(ws)
    for row in w:
        _kind(row)
    pairs: list[CSSPair] = []
    isotropic: list[PauliVec] = []
    a = 0
    while a < len(w):
        cur = w[a]
        j = next((k for k in range(a + 1, len(w)) if shifted_symplectic(cur, w[k])), None)
        if j is None:
            isotropic.append(cur)
            a += 1
            continue
        b = a + 1
        w[b], w[j] = w[j], w[b]
        first, partner = w[a], w[b]
        zp, xp = (first, partner) if _kind(first) == "z" else (partner, first)
        if _kind(zp) != "z" or _kind(xp) != "x":
            raise ValueError("paired rows must be one purely-z and one purely-x row")
        zx = shifted_symplectic(zp, xp)
        xz = time_reverse(zx)
        survivors = w[: b + 1]
        for r in range(b + 1, len(w)):
            row = w[r]
            if _kind(row) == "z":
                coef = time_reverse(shifted_symplectic(row, xp))
                new = row.scale(xz) + zp.scale(coef)
            else:
                coef = time_reverse(shifted_symplectic(row, zp))
                new = row.scale(zx) + xp.scale(coef)
            if new.is_zero():
                log.info("row %d vanished during orthogonalization; dropped", r)
                continue
            survivors.append(_divide_out_gcf(new))
        w = survivors
        pairs.append(CSSPair(first, partner, shifted_symplectic(first, partner)))
        a += 2
    return pairs, isotropic


def css_augment(pairs: Sequence[CSSPair], isotropic: Sequence[PauliVec]) -> GeneratorSet:
    """Stack ``u_1..u_c, v_1..v_c, isotropic`` and append ``c`` catalytic columns."""
    rows = [p.u for p in pairs] + [p.v for p in pairs] + list(isotropic)
    if not rows:
        raise ValueError("nothing to augment")
    n = rows[0].n
    c = len(pairs)
    if c == 0:
        return GeneratorSet(tuple(rows), n, "plain")
    out = []
    for i, p in enumerate(pairs):
        z_extra = [ZERO] * c
        z_extra[i] = time_reverse(p.f)
        out.append(p.u.extend(z_extra, [ZERO] * c))
    for i, p in enumerate(pairs):
        x_extra = [ZERO] * c
        x_extra[i] = ONE
        out.append(p.v.extend([ZERO] * c, x_extra))
    for r in isotropic:
        out.append(r.extend([ZERO] * c, [ZERO] * c))
    return GeneratorSet(tuple(out), n, "css")


def noncatastrophic_check(g: GeneratorSet | Sequence[PauliVec]) -> bool:
    """True iff each generator's entries share no factor other than a power of D."""
    gens = g.gens if isinstance(g, GeneratorSet) else tuple(g)
    for u in gens:
        _, core = gcd_all(u.entries()).split_delay()
        if core != ONE:
            return False
    return True


@dataclass(frozen=True)
class YieldInfo:
    value: Fraction
    catalytic_ebits: int
    notes: str = field(default="", compare=False)

    def __str__(self) -> str:
        return f"{self.value}"


def protocol_yield(g: GeneratorSet) -> YieldInfo:
    """Net yield ``(n - m)/n`` and the number of noiseless ebits needed to start."""
    n, m = g.n_noisy, g.m
    if n == 0:
        raise ValueError("no noisy columns")
    nu = g.constraint_len
    if g.construction == "single":
        cat = n * nu
    elif g.construction == "plain":
        cat = 0
    else:
        cat = g.frame_size * nu
    return YieldInfo(Fraction(n - m, n), cat)
