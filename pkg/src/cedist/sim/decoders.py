"""Syndrome decoders: slot-wise table lookup and a syndrome-trellis Viterbi search."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..builder import GeneratorSet
from .channel import ErrorFrameSeq, interior_frames
from .syndrome import SyndromeModel, SyndromeStream

__all__ = [
    "UncorrectableSyndrome",
    "AmbiguousTableError",
    "SyndromeTable",
    "decode_table",
    "decode_viterbi",
    "slot_mask",
]


class UncorrectableSyndrome(Exception):
    """The decoder found no error pattern consistent with the syndrome."""


class AmbiguousTableError(ValueError):
    """Two tabled error patterns share one syndrome key."""


def _pack_key(bits: np.ndarray) -> int:
    flat = bits.reshape(-1)
    if flat.size < 63:
        return int(flat.astype(np.int64) @ (1 << np.arange(flat.size, dtype=np.int64)))
    return sum(1 << int(i) for i in np.flatnonzero(flat))


@dataclass
class SyndromeTable:
    """Lookup from a syndrome key to a one-frame error pattern.

    The decoder assumes errors sit only in "slot" frames ``nu, nu + window, ...``.
    The key for the slot at frame ``t`` is the residual syndrome on the first
    ``min(window, nu + 1)`` shifts the slot touches, ``t - nu`` onwards; later
    slots cannot reach those shifts, and earlier slots are already peeled off.
    """

    model: SyndromeModel
    window: int
    max_weight: int = 1
    entries: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = field(default_factory=dict)

    @property
    def key_len(self) -> int:
        return min(self.window, self.model.nu + 1)

    @classmethod
    def build(cls, g: GeneratorSet | SyndromeModel, window: int, max_weight: int = 1) -> SyndromeTable:
        if window < 1:
            raise ValueError("window must be positive")
        model = g if isinstance(g, SyndromeModel) else SyndromeModel(g)
        table = cls(model, window, max_weight)
        seen: dict[int, str] = {}
        nu = model.nu
        for z, x in model.single_qubit_patterns(max_weight):
            contrib = model.frame_contribution(z, x)
            # shift t - nu + i receives contribution index nu - i
            key = 0
            for i in range(table.key_len):
                key |= contrib[nu - i] << (i * model.m)
            label = _pattern_label(z, x)
            if key in seen:
                raise AmbiguousTableError(f"patterns {seen[key]} and {label} share syndrome key {key:#x}")
            seen[key] = label
            rows = np.array([[(c >> j) & 1 for j in range(model.m)] for c in contrib], np.uint8)
            table.entries[key] = (z, x, rows)
        return table

    def slots(self, frames: int) -> range:
        inner = interior_frames(frames, self.model.nu)
        return range(inner.start, inner.stop, self.window)


def _pattern_label(z: np.ndarray, x: np.ndarray) -> str:
    parts = []
    for q, (zb, xb) in enumerate(zip(z, x)):
        if zb or xb:
            parts.append("IXZY"[int(zb) * 2 + int(xb)] + str(q + 1))
    return "".join(parts) or "I"


def decode_table(
    s: SyndromeStream,
    g: GeneratorSet | SyndromeModel | SyndromeTable,
    window: int | None = None,
) -> ErrorFrameSeq:
    """Peel errors slot by slot, earliest first, using the lookup table."""
    if isinstance(g, SyndromeTable):
        table = g
    else:
        if window is None:
            raise ValueError("window is required when no table is given")
        table = SyndromeTable.build(g, window)
    model = table.model
    nu = model.nu
    frames = s.shifts + nu
    resid = s.bits.copy()
    out = ErrorFrameSeq.identity(frames, model.n_total)
    for t in table.slots(frames):
        lo = t - nu
        key = _pack_key(resid[lo : lo + table.key_len])
        hit = table.entries.get(key)
        if hit is None:
            raise UncorrectableSyndrome(f"no tabled error matches the syndrome at frame {t}")
        z, x, rows = hit
        if not rows.any() and not (z.any() or x.any()):
            continue
        out.z[t] ^= z
        out.x[t] ^= x
        # contribution r lands on shift t - r; every such shift exists for a slot frame
        resid[t - nu : t + 1] ^= rows[::-1]
    if resid.any():
        raise UncorrectableSyndrome("syndrome left over after peeling every slot")
    return out


def slot_mask(frames: int, nu: int, window: int = 1) -> np.ndarray:
    """Boolean mask of the frames ``nu, nu + window, ...`` inside the interior."""
    mask = np.zeros(frames, bool)
    inner = interior_frames(frames, nu)
    mask[inner.start : inner.stop : window] = True
    return mask


def decode_viterbi(
    s: SyndromeStream,
    g: GeneratorSet | SyndromeModel,
    w_max: int = 1,
    allowed_frames: np.ndarray | None = None,
) -> ErrorFrameSeq:
    """Minimum-weight error whose syndrome stream equals ``s``.

    The trellis runs over frames. Its state after frame ``t`` packs the
    syndrome still pending on shifts ``t - nu + 1 .. t``, ``m`` bits per shift.
    A branch is a one-frame pattern of weight at most ``w_max`` on the noisy
    columns; its metric is the pattern weight. Shift ``t - nu`` is final once
    frame ``t`` is chosen and must agree with ``s``. ``allowed_frames`` (boolean,
    one per frame) restricts which frames may carry errors; by default these
    are the interior frames. Ties go to the smaller (predecessor state, branch
    index) pair, with branches ordered identity first, then by weight and
    (qubit, letter).
    """
    if w_max not in (1, 2):
        raise ValueError("w_max must be 1 or 2")
    model = g if isinstance(g, SyndromeModel) else SyndromeModel(g)
    nu, m = model.nu, model.m
    S = s.shifts
    frames = S + nu
    if allowed_frames is None:
        allowed = slot_mask(frames, nu)
    else:
        allowed = np.asarray(allowed_frames, bool)
        if allowed.shape != (frames,):
            raise ValueError(f"allowed_frames needs {frames} entries")
    patterns = model.single_qubit_patterns(w_max)
    weights = [int((z | x).sum()) for z, x in patterns]
    contribs = [model.frame_contribution(z, x) for z, x in patterns]
    target = [_pack_key(row) for row in s.bits]
    mask = (1 << m) - 1

    # state: pending[i] for shift t - nu + 1 + i, packed as bits [i*m, (i+1)*m)
    layer: dict[int, int] = {0: 0}
    history: list[dict[int, tuple[int, int]]] = []
    for t in range(frames):
        nxt: dict[int, int] = {}
        back: dict[int, tuple[int, int]] = {}
        branch_ids = range(len(patterns)) if allowed[t] else range(1)
        for st in sorted(layer):
            metric = layer[st]
            for b in branch_ids:
                c = contribs[b]
                done_shift = t - nu
                low = st & mask if nu else 0
                if 0 <= done_shift < S:
                    if (low ^ c[nu]) != target[done_shift]:
                        continue
                new = 0
                for i in range(nu):
                    # new slot i holds shift t - nu + 1 + i
                    prev = (st >> ((i + 1) * m)) & mask if i + 1 < nu else 0
                    new |= (prev ^ c[nu - 1 - i]) << (i * m)
                cand = metric + weights[b]
                if new not in nxt or cand < nxt[new]:
                    nxt[new] = cand
                    back[new] = (st, b)
        if not nxt:
            raise UncorrectableSyndrome(f"no error path is consistent with the syndrome at frame {t}")
        history.append(back)
        layer = nxt
    best = min(layer, key=lambda k: (layer[k], k))
    out = ErrorFrameSeq.identity(frames, model.n_total)
    st = best
    for t in range(frames - 1, -1, -1):
        prev, b = history[t][st]
        z, x = patterns[b]
        out.z[t] = z
        out.x[t] = x
        st = prev
    return out
