#!/usr/bin/env python3
"""Print the single-qubit syndrome columns of the augmented one-generator protocol
and check that every single-qubit error in every fourth frame is decoded exactly."""

from __future__ import annotations

from cedist.builder import augment_single
from cedist.pauli import PauliVec
from cedist.sim import ErrorFrameSeq, SyndromeModel, decode_table, syndrome_column, syndromes


def main() -> None:
    g = augment_single(PauliVec.parse("1+D^3, 1+D^2 | D^2, D"))
    print("generator:", g.windows()[0])
    names = [f"{L}{q + 1}" for q in range(g.n_noisy) for L in "XZY"]
    cols = {f"{L}{q + 1}": syndrome_column(g, q, L) for q in range(g.n_noisy) for L in "XZY"}
    print("frame " + " ".join(f"{n:>3}" for n in names))
    for r in range(g.constraint_len + 1):
        print(f"{r:<5} " + " ".join(f"{cols[n][r]:>3}" for n in names))
    model = SyndromeModel(g)
    frames, checked = 40, 0
    for t in range(3, frames - 3, 4):
        for q in range(g.n_noisy):
            for L in "XYZ":
                e = ErrorFrameSeq.identity(frames, g.frame_size)
                e.z[t, q], e.x[t, q] = L in "ZY", L in "XY"
                assert decode_table(syndromes(e, model), model, 4) == e
                checked += 1
    print(f"distinct columns: {len(set(cols.values())) == len(cols)}; exact decodes: {checked}")


if __name__ == "__main__":
    main()
