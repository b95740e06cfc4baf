"""Plain-text code-spec files.

Header line: ``n=<int> fmt=<paulivec|gf4|binary>``, optionally followed by
``ebits=<int>`` (catalytic columns at the end of each frame, paulivec only)
and ``construction=<plain|single|multi|css>``. Lines starting with ``#`` are
comments. Body lines, one generator each:

* paulivec: ``1+D^3, 1+D^2, D+D^2 | D^2, D, 1``
* gf4: frames separated by ``;``, symbols ``0 1 w W`` (``W`` is w-bar),
  e.g. ``1 W 1 0 ; 1 1 0 1``
* binary: one parity row of polynomials, e.g. ``1+D, D, 1``; a ``z:`` or
  ``x:`` prefix pins the row to one error type.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .builder import GeneratorSet, GF4Generator, import_gf4
from .laurent import ZERO, parse_poly
from .pauli import PauliVec

__all__ = [
    "CodeSpecError",
    "CodeSpec",
    "parse_code_spec",
    "read_code_spec",
    "write_generator_set",
    "format_generator_set",
    "gf4_import",
]

FORMATS = ("paulivec", "gf4", "binary")


class CodeSpecError(ValueError):
    """Parse error with 1-based line and column."""

    def __init__(self, msg: str, line: int, col: int = 1):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass
class CodeSpec:
    n: int
    fmt: str
    ebits: int = 0
    construction: str = "plain"
    lines: list[tuple[int, str]] = field(default_factory=list)

    def paulivecs(self) -> list[PauliVec]:
        if self.fmt != "paulivec":
            raise ValueError(f"not a paulivec file (fmt={self.fmt})")
        out = []
        for lineno, text in self.lines:
            try:
                v = PauliVec.parse(text)
            except ValueError as exc:
                raise CodeSpecError(str(exc), lineno) from None
            if v.n != self.n:
                raise CodeSpecError(f"generator has {v.n} columns, header says n={self.n}", lineno)
            out.append(v)
        return out

    def generator_set(self) -> GeneratorSet:
        gens = self.paulivecs()
        if not gens:
            raise CodeSpecError("no generators", 1)
        if self.ebits > self.n:
            raise CodeSpecError("ebits exceeds n", 1)
        return GeneratorSet(tuple(gens), self.n - self.ebits, self.construction)

    def gf4_generators(self) -> list[GF4Generator]:
        if self.fmt != "gf4":
            raise ValueError(f"not a gf4 file (fmt={self.fmt})")
        out = []
        for lineno, text in self.lines:
            frames = []
            col = 1
            for chunk in text.split(";"):
                syms = chunk.split()
                for s in syms:
                    if s not in ("0", "1", "w", "W"):
                        c = col + chunk.find(s)
                        raise CodeSpecError(f"F4 symbol {s!r} not in {{0, 1, w, W}}", lineno, c)
                if len(syms) != self.n:
                    lead = len(chunk) - len(chunk.lstrip())
                    raise CodeSpecError(f"frame has {len(syms)} symbols, header says n={self.n}", lineno, col + lead)
                frames.append(syms)
                col += len(chunk) + 1
            out.append(GF4Generator.from_frames(frames))
        return out

    def binary_rows(self, css: bool) -> list[PauliVec]:
        """Pre-augmentation CSS rows: all z-type rows first, then all x-type rows."""
        if self.fmt != "binary":
            raise ValueError(f"not a binary file (fmt={self.fmt})")
        z_rows, x_rows = [], []
        for lineno, text in self.lines:
            target = None
            body = text
            if text[:2] in ("z:", "x:"):
                target, body = text[0], text[2:]
            try:
                h = tuple(parse_poly(t) for t in body.split(","))
            except ValueError as exc:
                raise CodeSpecError(str(exc), lineno) from None
            if len(h) != self.n:
                raise CodeSpecError(f"row has {len(h)} entries, header says n={self.n}", lineno)
            zeros = (ZERO,) * self.n
            if target in (None, "z"):
                z_rows.append(PauliVec(h, zeros))
            if target == "x" or (target is None and css):
                x_rows.append(PauliVec(zeros, h))
        return z_rows + x_rows


def parse_code_spec(text: str) -> CodeSpec:
    header = None
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            header = _parse_header(line, lineno)
            continue
        body.append((lineno, line))
    if header is None:
        raise CodeSpecError("no generators", 1)
    spec = CodeSpec(lines=body, **header)
    if not body:
        raise CodeSpecError("no generators", 1)
    return spec


def _parse_header(line: str, lineno: int) -> dict:
    fields = {}
    for tok in line.split():
        if "=" not in tok:
            raise CodeSpecError(f"bad header token {tok!r}", lineno, line.find(tok) + 1)
        k, v = tok.split("=", 1)
        fields[k] = v
    if "n" not in fields or "fmt" not in fields:
        raise CodeSpecError("header needs n=<int> and fmt=<...>", lineno)
    if fields["fmt"] not in FORMATS:
        raise CodeSpecError(f"unknown fmt {fields['fmt']!r}", lineno, line.find("fmt=") + 5)
    unknown = set(fields) - {"n", "fmt", "ebits", "construction"}
    if unknown:
        raise CodeSpecError(f"unknown header keys {sorted(unknown)}", lineno)
    try:
        return {
            "n": int(fields["n"]),
            "fmt": fields["fmt"],
            "ebits": int(fields.get("ebits", 0)),
            "construction": fields.get("construction", "plain"),
        }
    except ValueError:
        raise CodeSpecError("n and ebits must be integers", lineno) from None


def read_code_spec(path: str | Path) -> CodeSpec:
    return parse_code_spec(Path(path).read_text(encoding="utf-8"))


def format_generator_set(g: GeneratorSet) -> str:
    head = f"n={g.frame_size} fmt=paulivec"
    if g.frame_size != g.n_noisy:
        head += f" ebits={g.frame_size - g.n_noisy}"
    if g.construction != "plain":
        head += f" construction={g.construction}"
    lines = [head] + [str(u) for u in g.gens]
    return "\n".join(lines) + "\n"


def write_generator_set(g: GeneratorSet, path: str | Path) -> None:
    Path(path).write_text(format_generator_set(g), encoding="utf-8")


def gf4_import(spec: CodeSpec) -> GeneratorSet:
    gens = []
    for g in spec.gf4_generators():
        gens.extend(import_gf4(g))
    return GeneratorSet.plain(gens)
