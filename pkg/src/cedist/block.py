"""Encoding circuits and ebit counts for entanglement-assisted block codes.

Generators are rows of a binary ``(Z | X)`` matrix. Clifford gates act on
columns, row additions act on rows; phases are not tracked. :func:`decompose`
drives a matrix to canonical form: ``c`` symplectic pairs, each occupying
one qubit as a ``Z`` row followed by an ``X`` row, then ``s`` single ``Z`` rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

__all__ = [
    "SymplecticMatrix",
    "Gate",
    "RowOp",
    "CliffordCircuit",
    "EADecomposition",
    "DependentRowsError",
    "symplectic_product",
    "gram_matrix",
    "gf2_rank",
    "apply_cnot",
    "apply_hadamard",
    "apply_phase",
    "apply_swap",
    "decompose",
    "encoded_stabilizer",
]

_LETTER = {(0, 0): "I", (0, 1): "X", (1, 0): "Z", (1, 1): "Y"}


class DependentRowsError(ValueError):
    def __init__(self, row: int):
        super().__init__(f"generator {row} is a product of the others (rows are dependent)")
        self.row = row


@dataclass
class SymplecticMatrix:
    z: np.ndarray
    x: np.ndarray

    def __post_init__(self) -> None:
        self.z = np.array(self.z, dtype=np.uint8) % 2
        self.x = np.array(self.x, dtype=np.uint8) % 2
        if self.z.ndim != 2 or self.z.shape != self.x.shape:
            raise ValueError(f"Z and X shapes differ: {self.z.shape} vs {self.x.shape}")

    @property
    def rows(self) -> int:
        return self.z.shape[0]

    @property
    def qubits(self) -> int:
        return self.z.shape[1]

    @classmethod
    def from_paulis(cls, rows: Sequence[str]) -> SymplecticMatrix:
        rows = [r.strip() for r in rows]
        if not rows or len({len(r) for r in rows}) != 1:
            raise ValueError("need equal-length Pauli strings")
        bad = [r for r in rows if set(r) - set("IXYZ")]
        if bad:
            raise ValueError(f"bad Pauli letters in {bad[0]!r}")
        z = [[c in "ZY" for c in r] for r in rows]
        x = [[c in "XY" for c in r] for r in rows]
        return cls(np.array(z), np.array(x))

    @classmethod
    def parse(cls, text: str) -> SymplecticMatrix:
        """Rows of Pauli letters, or ``[zbits|xbits]`` rows such as ``[1010|0100]``."""
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("#")]
        if not lines:
            raise ValueError("empty matrix")
        if lines[0].startswith("["):
            z, x = [], []
            for ln in lines:
                body = ln.strip("[]").replace(" ", "")
                zs, xs = body.split("|")
                z.append([int(c) for c in zs])
                x.append([int(c) for c in xs])
            return cls(np.array(z), np.array(x))
        return cls.from_paulis(lines)

    def paulis(self) -> list[str]:
        return [
            "".join(_LETTER[(int(a), int(b))] for a, b in zip(zr, xr)) for zr, xr in zip(self.z, self.x)
        ]

    def row(self, i: int) -> np.ndarray:
        return np.concatenate([self.z[i], self.x[i]])

    def copy(self) -> SymplecticMatrix:
        return SymplecticMatrix(self.z.copy(), self.x.copy())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymplecticMatrix):
            return NotImplemented
        return self.z.shape == other.z.shape and bool((self.z == other.z).all() and (self.x == other.x).all())

    def __str__(self) -> str:
        return "\n".join(
            "".join(map(str, zr)) + "|" + "".join(map(str, xr)) for zr, xr in zip(self.z, self.x)
        )


def symplectic_product(a: np.ndarray, b: np.ndarray) -> int:
    """Standard symplectic product of two ``(z|x)`` rows."""
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    if a.shape != b.shape or a.shape[0] % 2:
        raise ValueError("rows must have equal, even length")
    q = a.shape[0] // 2
    return int((a[:q] @ b[q:] + a[q:] @ b[:q]) % 2)


def gram_matrix(m: SymplecticMatrix) -> np.ndarray:
    z = m.z.astype(np.int64)
    x = m.x.astype(np.int64)
    return ((z @ x.T + x @ z.T) % 2).astype(np.uint8)


def gf2_rank(a: np.ndarray) -> int:
    a = np.array(a, dtype=np.uint8) % 2
    rank = 0
    rows, cols = a.shape
    for c in range(cols):
        piv = next((r for r in range(rank, rows) if a[r, c]), None)
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        for r in range(rows):
            if r != rank and a[r, c]:
                a[r] ^= a[rank]
        rank += 1
    return rank


# -- gates -------------------------------------------------------------------


@dataclass(frozen=True)
class Gate:
    name: str  # CNOT, H, P, SWAP
    qubits: tuple[int, ...]

    def __str__(self) -> str:
        return " ".join([self.name, *map(str, self.qubits)])


@dataclass(frozen=True)
class RowOp:
    kind: str  # "add": row dst += row src; "swap": exchange rows
    src: int
    dst: int
    position: int  # number of gates applied before this row operation

    def __str__(self) -> str:
        tag = "ROWADD" if self.kind == "add" else "ROWSWAP"
        return f"# {tag} {self.src} {self.dst}"


def _check(m: SymplecticMatrix, *qs: int) -> None:
    for q in qs:
        if not 0 <= q < m.qubits:
            raise IndexError(f"qubit {q} out of range for {m.qubits} qubits")
    if len(qs) == 2 and qs[0] == qs[1]:
        raise ValueError("two-qubit gate needs distinct qubits")


def _cnot(m: SymplecticMatrix, i: int, j: int) -> None:
    m.x[:, j] ^= m.x[:, i]
    m.z[:, i] ^= m.z[:, j]


def _hadamard(m: SymplecticMatrix, i: int) -> None:
    m.z[:, i], m.x[:, i] = m.x[:, i].copy(), m.z[:, i].copy()


def _phase(m: SymplecticMatrix, i: int) -> None:
    m.z[:, i] ^= m.x[:, i]


def _swap(m: SymplecticMatrix, i: int, j: int) -> None:
    m.z[:, [i, j]] = m.z[:, [j, i]]
    m.x[:, [i, j]] = m.x[:, [j, i]]


def _apply_gate(m: SymplecticMatrix, g: Gate) -> None:
    _check(m, *g.qubits)
    if g.name == "CNOT":
        _cnot(m, *g.qubits)
    elif g.name == "H":
        _hadamard(m, *g.qubits)
    elif g.name == "P":
        _phase(m, *g.qubits)
    elif g.name == "SWAP":
        _swap(m, *g.qubits)
    else:
        raise ValueError(f"unknown gate {g.name!r}")


def _apply_rowop(m: SymplecticMatrix, op: RowOp) -> None:
    if op.kind == "add":
        m.z[op.dst] ^= m.z[op.src]
        m.x[op.dst] ^= m.x[op.src]
    else:
        m.z[[op.src, op.dst]] = m.z[[op.dst, op.src]]
        m.x[[op.src, op.dst]] = m.x[[op.dst, op.src]]


def apply_cnot(m: SymplecticMatrix, i: int, j: int) -> SymplecticMatrix:
    """CNOT from ``i`` to ``j``: X column ``i`` added to ``j``, Z column ``j`` added to ``i``."""
    out = m.copy()
    _apply_gate(out, Gate("CNOT", (i, j)))
    return out


def apply_hadamard(m: SymplecticMatrix, i: int) -> SymplecticMatrix:
    out = m.copy()
    _apply_gate(out, Gate("H", (i,)))
    return out


def apply_phase(m: SymplecticMatrix, i: int) -> SymplecticMatrix:
    out = m.copy()
    _apply_gate(out, Gate("P", (i,)))
    return out


def apply_swap(m: SymplecticMatrix, i: int, j: int) -> SymplecticMatrix:
    out = m.copy()
    _apply_gate(out, Gate("SWAP", (i, j)))
    return out


@dataclass
class CliffordCircuit:
    qubits: int
    gates: list[Gate] = field(default_factory=list)
    row_ops: list[RowOp] = field(default_factory=list)

    def steps(self) -> Iterator[Gate | RowOp]:
        """Gates and row operations in the order they were performed."""
        ops = sorted(self.row_ops, key=lambda r: r.position)
        k = 0
        for pos, g in enumerate(self.gates):
            while k < len(ops) and ops[k].position == pos:
                yield ops[k]
                k += 1
            yield g
        yield from ops[k:]

    def replay(self, m: SymplecticMatrix) -> Iterator[tuple[Gate | RowOp, SymplecticMatrix]]:
        """Apply every step to a copy of ``m``, yielding the matrix after each."""
        cur = m.copy()
        for step in self.steps():
            if isinstance(step, Gate):
                _apply_gate(cur, step)
            else:
                _apply_rowop(cur, step)
            yield step, cur.copy()

    def apply(self, m: SymplecticMatrix, row_ops: bool = True) -> SymplecticMatrix:
        cur = m.copy()
        for step in self.steps():
            if isinstance(step, Gate):
                _apply_gate(cur, step)
            elif row_ops:
                _apply_rowop(cur, step)
        return cur

    def unapply(self, m: SymplecticMatrix, row_ops: bool = True) -> SymplecticMatrix:
        """Undo the steps in reverse order (every gate here is its own inverse)."""
        cur = m.copy()
        for step in reversed(list(self.steps())):
            if isinstance(step, Gate):
                _apply_gate(cur, step)
            elif row_ops:
                _apply_rowop(cur, step)
        return cur

    def to_script(self) -> str:
        return "\n".join(str(s) for s in self.steps()) + "\n"

    @classmethod
    def from_script(cls, text: str, qubits: int) -> CliffordCircuit:
        circ = cls(qubits)
        for ln in text.splitlines():
            toks = ln.split()
            if not toks:
                continue
            if toks[0] == "#":
                if len(toks) == 4 and toks[1] in ("ROWADD", "ROWSWAP"):
                    kind = "add" if toks[1] == "ROWADD" else "swap"
                    circ.row_ops.append(RowOp(kind, int(toks[2]), int(toks[3]), len(circ.gates)))
                continue
            circ.gates.append(Gate(toks[0], tuple(int(t) for t in toks[1:])))
        return circ


@dataclass
class EADecomposition:
    c: int
    s: int
    k: int
    circuit: CliffordCircuit
    canonical: SymplecticMatrix
    source: SymplecticMatrix
    labels: list[int]  # input row index of each canonical row


class _Work:
    """Mutable working copy that logs every operation into a circuit."""

    def __init__(self, m: SymplecticMatrix):
        self.m = m.copy()
        self.circ = CliffordCircuit(m.qubits)
        self.labels = list(range(m.rows))

    def gate(self, name: str, *qs: int) -> None:
        g = Gate(name, qs)
        _apply_gate(self.m, g)
        self.circ.gates.append(g)

    def add_row(self, src: int, dst: int) -> None:
        op = RowOp("add", src, dst, len(self.circ.gates))
        _apply_rowop(self.m, op)
        self.circ.row_ops.append(op)

    def swap_rows(self, a: int, b: int) -> None:
        if a == b:
            return
        op = RowOp("swap", a, b, len(self.circ.gates))
        _apply_rowop(self.m, op)
        self.circ.row_ops.append(op)
        self.labels[a], self.labels[b] = self.labels[b], self.labels[a]

    def sp(self, a: int, b: int) -> int:
        return symplectic_product(self.m.row(a), self.m.row(b))

    def nonzero_from(self, r: int, q: int) -> bool:
        return bool(self.m.z[r, q:].any() or self.m.x[r, q:].any())

    # -- single-row reduction to X on the pivot qubit ------------------------
    def pivot_x(self, r: int, q: int) -> None:
        """Make the X entry of row ``r`` at pivot ``q`` equal to one."""
        z, x = self.m.z[r], self.m.x[r]
        if x[q]:
            return
        nq = self.m.qubits
        first_x = next((j for j in range(q + 1, nq) if x[j]), None)
        if first_x is not None and not z[first_x]:
            self.gate("SWAP", q, first_x)
        elif z[q]:
            self.gate("H", q)
        elif first_x is not None:
            self.gate("SWAP", q, first_x)
        else:
            first_z = next(j for j in range(q + 1, nq) if z[j])
            self.gate("SWAP", q, first_z)
            self.gate("H", q)

    def reduce_to_x(self, r: int, q: int) -> None:
        """Reduce row ``r`` to ``X_q`` with gates touching only qubits ``>= q``."""
        nq = self.m.qubits
        self.pivot_x(r, q)
        for j in range(q + 1, nq):
            if self.m.x[r, j]:
                self.gate("CNOT", q, j)
        if self.m.z[r, q]:
            self.gate("P", q)
        targets = [j for j in range(q + 1, nq) if self.m.z[r, j]]
        for j in targets:
            self.gate("H", j)
        for j in targets:
            self.gate("CNOT", q, j)

    def reduce_partner(self, r: int, a: int, q: int) -> None:
        """Reduce partner row ``r`` (anticommuting with ``X_q`` in row ``a``) to ``X_q``.

        Afterwards row ``a`` has become ``Z_q``.
        """
        nq = self.m.qubits
        if self.m.x[r, q]:
            self.add_row(a, r)
        for j in range(q + 1, nq):
            if self.m.z[r, j] and self.m.x[r, j]:
                self.gate("P", j)
        hs = [q] + [j for j in range(q + 1, nq) if self.m.z[r, j]]
        for j in hs:
            self.gate("H", j)
        for j in range(q + 1, nq):
            if self.m.x[r, j]:
                self.gate("CNOT", q, j)

    def reduce_z_only(self, r: int, q: int) -> None:
        """Row with no X entries: bring it to ``Z_q`` with SWAP/CNOT only."""
        nq = self.m.qubits
        if not self.m.z[r, q]:
            j = next(j for j in range(q + 1, nq) if self.m.z[r, j])
            self.gate("SWAP", q, j)
        for j in range(q + 1, nq):
            if self.m.z[r, j]:
                self.gate("CNOT", j, q)


def decompose(m: SymplecticMatrix) -> EADecomposition:
    """Find a Clifford encoder and the minimal ebit count for generator matrix ``m``.

    Rows are processed in order. A row with a symplectic partner among the
    remaining rows is reduced together with it to a ``(Z_q, X_q)`` pair on a
    fresh qubit ``q``; the other rows are then cleared on ``q`` by row
    additions. Once every remaining row commutes with every other, each is
    reduced to a single ``Z_q``.
    """
    if m.rows == 0:
        raise ValueError("empty matrix")
    w = _Work(m)
    p, nq = m.rows, m.qubits
    for r in range(p):
        if not (m.z[r].any() or m.x[r].any()):
            raise DependentRowsError(r)
    q = 0
    a = 0
    c = 0
    # symplectic pairs first
    while a < p:
        owner = next(
            (r for r in range(a, p) if any(w.sp(r, k) for k in range(a, p) if k != r)),
            None,
        )
        if owner is None:
            break
        w.swap_rows(a, owner)
        if not w.sp(a, a + 1):
            j = next(k for k in range(a + 2, p) if w.sp(a, k))
            w.swap_rows(a + 1, j)
        if q >= nq:
            raise DependentRowsError(w.labels[a])
        w.reduce_to_x(a, q)
        w.reduce_partner(a + 1, a, q)
        others = [r for r in range(p) if r not in (a, a + 1)]
        for r in others:
            if w.m.z[r, q]:
                w.add_row(a, r)
        for r in others:
            if w.m.x[r, q]:
                w.add_row(a + 1, r)
        a += 2
        q += 1
        c += 1
    # isotropic rows
    while a < p:
        if q >= nq or not w.nonzero_from(a, q):
            raise DependentRowsError(w.labels[a])
        if not w.m.x[a, q:].any():
            w.reduce_z_only(a, q)
            for r in range(a + 1, p):
                if w.m.z[r, q]:
                    w.add_row(a, r)
        else:
            w.reduce_to_x(a, q)
            for r in range(p):
                if r != a and w.m.x[r, q]:
                    w.add_row(a, r)
            w.gate("H", q)
        a += 1
        q += 1
    s = p - 2 * c
    return EADecomposition(c, s, nq - s - c, w.circ, w.m, m.copy(), w.labels)


def encoded_stabilizer(d: EADecomposition) -> SymplecticMatrix:
    """Canonical stabilizer with ``c`` receiver columns, rotated back by the encoder.

    Pair ``i`` of the canonical form gets receiver-side ``X`` on its first row and
    ``Z`` on its second. The rows returned are the generators after the
    decomposition's row additions, which span the same group as the input.
    """
    p, nq, c = d.canonical.rows, d.canonical.qubits, d.c
    ext_z = np.zeros((p, c), dtype=np.uint8)
    ext_x = np.zeros((p, c), dtype=np.uint8)
    for i in range(c):
        ext_x[2 * i, i] = 1
        ext_z[2 * i + 1, i] = 1
    alice = d.circuit.unapply(d.canonical, row_ops=False)
    return SymplecticMatrix(np.hstack([alice.z, ext_z]), np.hstack([alice.x, ext_x]))


def is_abelian(m: SymplecticMatrix) -> bool:
    return not gram_matrix(m).any()
