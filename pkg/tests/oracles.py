"""Independent reference computations used to cross-check the package.

Nothing here imports the arithmetic under test: polynomials are plain
exponent sets and Pauli sequences are dictionaries of letters.
"""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

ANTI = {(a, b) for a in "XYZ" for b in "XYZ" if a != b}


def set_mul(a: set[int], b: set[int]) -> set[int]:
    out: set[int] = set()
    for i in a:
        for j in b:
            out ^= {i + j}
    return out


def letters(u) -> dict[tuple[int, int], str]:
    """Map (frame, qubit) -> letter for a PauliVec, read coefficient by coefficient."""
    out = {}
    for q in range(u.n):
        zs = set(u.z[q].exponents())
        xs = set(u.x[q].exponents())
        for t in zs | xs:
            out[(t, q)] = {(1, 0): "Z", (0, 1): "X", (1, 1): "Y"}[(t in zs, t in xs)]
    return out


def anticommute_letters(a: dict, b: dict) -> int:
    """Parity of anticommuting positions between two finite Pauli sequences."""
    return sum((a[k], b[k]) in ANTI for k in a.keys() & b.keys()) % 2


def shifted_product_bruteforce(u, v, span: int = 12) -> set[int]:
    """Exponents i where u anticommutes with v moved i frames earlier."""
    lu, lv = letters(u), letters(v)
    out = set()
    for i in range(-span, span + 1):
        moved = {(t - i, q): c for (t, q), c in lv.items()}
        if anticommute_letters(lu, moved):
            out.add(i)
    return out


def rank_gf2(rows: list[list[int]]) -> int:
    a = [int("".join(map(str, r)) or "0", 2) for r in rows]
    rank = 0
    while a:
        piv = max(a)
        a.remove(piv)
        if piv == 0:
            continue
        rank += 1
        top = piv.bit_length() - 1
        a = [r ^ piv if (r >> top) & 1 else r for r in a]
    return rank


def gram_rank(z: np.ndarray, x: np.ndarray) -> int:
    p = z.shape[0]
    g = [[int((z[i] @ x[j] + x[i] @ z[j]) % 2) for j in range(p)] for i in range(p)]
    return rank_gf2(g)


def min_weight_bruteforce(model, target, allowed, max_total: int = 4):
    """Smallest total weight of a weight-1-per-frame error reproducing ``target``.

    Enumerates frame subsets in order of size, then all single-qubit letters.
    Returns ``None`` if nothing of weight up to ``max_total`` matches.
    """
    from cedist.sim import ErrorFrameSeq

    frames = target.shifts + model.nu
    slots = [t for t in range(frames) if allowed[t]]
    singles = [(q, zb, xb) for q in range(model.n_noisy) for zb, xb in ((0, 1), (1, 1), (1, 0))]
    for w in range(0, max_total + 1):
        for ts in combinations(slots, w):
            for choice in product(singles, repeat=w):
                e = ErrorFrameSeq.identity(frames, model.n_total)
                for t, (q, zb, xb) in zip(ts, choice):
                    e.z[t, q], e.x[t, q] = zb, xb
                if model.syndromes(e) == target:
                    return w
    return None
