#!/usr/bin/env python3
"""Trace the block encoder on the four-generator example, printing the matrix
after every gate and row addition."""

from __future__ import annotations

import sys

from cedist.block import SymplecticMatrix, decompose, encoded_stabilizer


def main(rows: list[str]) -> None:
    m = SymplecticMatrix.from_paulis(rows)
    d = decompose(m)
    print(f"c={d.c} s={d.s} k={d.k}")
    print("start   ", " ".join(m.paulis()))
    for step, mat in d.circuit.replay(m):
        print(f"{str(step):<12}", " ".join(mat.paulis()))
    print("encoded stabilizer:", " ".join(encoded_stabilizer(d).paulis()))


if __name__ == "__main__":
    main(sys.argv[1:] or ["ZXZI", "ZZIZ", "XYXI", "XXIX"])
