"""Command-line entry point ``cedist``.

Exit status: 0 on success, 1 when the input is well formed but fails a domain
check (non-commuting or catastrophic generators, uncorrectable table), 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from .block import DependentRowsError, SymplecticMatrix, decompose, encoded_stabilizer
from .builder import (
    GeneratorSet,
    augment_multi,
    augment_single,
    check_commuting,
    css_augment,
    css_gram_schmidt,
    noncatastrophic_check,
    protocol_yield,
)
from .formats import CodeSpec, CodeSpecError, format_generator_set, gf4_import, read_code_spec
from .sim import AmbiguousTableError, ChannelModel, SimConfig, SyndromeModel, run_distillation

log = logging.getLogger("cedist")


class DomainError(Exception):
    """Valid input that fails a structural requirement."""


def _load_rows(spec: CodeSpec, css: bool = False) -> GeneratorSet:
    if spec.fmt == "paulivec":
        return spec.generator_set()
    if spec.fmt == "gf4":
        return gf4_import(spec)
    rows = spec.binary_rows(css)
    return GeneratorSet.plain(rows)


def _emit(g: GeneratorSet, out: str | None) -> None:
    text = format_generator_set(g)
    if out:
        Path(out).write_text(text, encoding="utf-8")
        for w in g.windows():
            print(w)
    else:
        sys.stdout.write(text)
        for w in g.windows():
            print(f"# {w}")


def cmd_import(args: argparse.Namespace) -> int:
    spec = read_code_spec(args.path)
    _emit(_load_rows(spec, args.css), args.output)
    return 0


def cmd_augment(args: argparse.Namespace) -> int:
    spec = read_code_spec(args.path)
    if args.css:
        rows = spec.binary_rows(True) if spec.fmt == "binary" else list(_load_rows(spec).gens)
        pairs, iso = css_gram_schmidt(rows)
        out = css_augment(pairs, iso)
    else:
        gens = list(_load_rows(spec).gens)
        if args.single:
            if len(gens) != 1:
                raise DomainError(f"--single needs exactly one generator, file has {len(gens)}")
            out = augment_single(gens[0])
        else:
            out = augment_multi(gens, args.variant)
    if not check_commuting(out):
        raise DomainError("augmented generators do not commute")
    _emit(out, args.output)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    g = _load_rows(read_code_spec(args.path))
    commuting = check_commuting(g)
    noncat = noncatastrophic_check(g)
    print(f"commuting={'yes' if commuting else 'no'}")
    print(f"noncatastrophic={'yes' if noncat else 'no'}")
    print(f"n={g.n_noisy} m={g.m} frame={g.frame_size} nu={g.constraint_len}")
    return 0 if commuting and noncat else 1


def cmd_syndromes(args: argparse.Namespace) -> int:
    g = _load_rows(read_code_spec(args.path))
    model = SyndromeModel(g)
    cols = []
    for q in range(g.n_noisy):
        for letter in "XZY":
            z = [0] * g.frame_size
            x = [0] * g.frame_size
            z[q] = int(letter in "ZY")
            x[q] = int(letter in "XY")
            contrib = model.frame_contribution(z, x)
            cols.append((f"{letter}{q + 1}", contrib))
    width = max(g.m, max(len(name) for name, _ in cols))
    print("frame " + " ".join(name.rjust(width) for name, _ in cols))
    for r in range(model.nu + 1):
        cells = []
        for _, contrib in cols:
            cells.append("".join(str((contrib[r] >> j) & 1) for j in range(g.m)).rjust(width))
        print(f"{r:<5} " + " ".join(cells))
    distinct = len({c for _, c in cols}) == len(cols) and all(any(c) for _, c in cols)
    print(f"distinct={'yes' if distinct else 'no'}")
    return 0


def cmd_encode_block(args: argparse.Namespace) -> int:
    m = SymplecticMatrix.parse(Path(args.path).read_text(encoding="utf-8"))
    try:
        d = decompose(m)
    except DependentRowsError as exc:
        raise DomainError(str(exc)) from None
    print(f"# c={d.c} s={d.s} k={d.k}")
    sys.stdout.write(d.circuit.to_script())
    if args.stabilizer:
        print("# encoded stabilizer (sender | receiver)")
        st = encoded_stabilizer(d)
        q = m.qubits
        for row in st.paulis():
            print(f"# {row[:q]}|{row[q:]}" if d.c else f"# {row}")
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    g = _load_rows(read_code_spec(args.path))
    if not check_commuting(g):
        raise DomainError("generators do not commute; augment them first")
    ch = ChannelModel(args.channel, args.p, args.seed, spacing=args.spacing)
    window = args.window if args.window is not None else args.spacing
    cfg = SimConfig(args.frames, args.trials, args.decoder, window, args.wmax)
    try:
        report = run_distillation(g, ch, cfg)
    except AmbiguousTableError as exc:
        raise DomainError(str(exc)) from None
    sys.stdout.write(report.to_text())
    if args.json:
        Path(args.json).write_text(report.to_json(), encoding="utf-8")
    return 0


def cmd_yield(args: argparse.Namespace) -> int:
    g = _load_rows(read_code_spec(args.path))
    y = protocol_yield(g)
    print(f"yield={y.value}")
    print(f"catalytic_ebits={y.catalytic_ebits}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cedist", description="Convolutional entanglement distillation tools")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("import", help="convert a gf4/binary/paulivec file to paulivec form")
    s.add_argument("path")
    s.add_argument("-o", "--output")
    s.add_argument("--css", action="store_true", help="binary rows become both a Z row and an X row")
    s.set_defaults(func=cmd_import)

    s = sub.add_parser("augment", help="add catalytic ebit columns so the generators commute")
    s.add_argument("path")
    s.add_argument("-o", "--output")
    how = s.add_mutually_exclusive_group(required=True)
    how.add_argument("--single", action="store_true")
    how.add_argument("--multi", action="store_true")
    how.add_argument("--css", action="store_true")
    s.add_argument("--variant", choices=("lower", "upper"), default="lower")
    s.set_defaults(func=cmd_augment)

    s = sub.add_parser("check", help="commutation and noncatastrophic checks")
    s.add_argument("path")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("syndromes", help="syndrome column of every single-qubit error")
    s.add_argument("path")
    s.set_defaults(func=cmd_syndromes)

    s = sub.add_parser("encode-block", help="encoding circuit for a block generator matrix")
    s.add_argument("path")
    s.add_argument("--stabilizer", action="store_true", help="also print the encoded stabilizer")
    s.set_defaults(func=cmd_encode_block)

    s = sub.add_parser("simulate", help="Monte-Carlo distillation run")
    s.add_argument("path")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--frames", type=int, default=20)
    s.add_argument("--p", type=float, default=0.0)
    s.add_argument("--channel", choices=("depolarizing", "independent-XZ", "periodic"), default="depolarizing")
    s.add_argument("--spacing", type=int, default=1, help="frames between errors for the periodic channel")
    s.add_argument("--window", type=int, default=None, help="decoder slot stride (defaults to --spacing)")
    s.add_argument("--decoder", choices=("table", "viterbi"), default="table")
    s.add_argument("--wmax", type=int, choices=(1, 2), default=1)
    s.add_argument("--json", help="also write the report as JSON to this path")
    s.set_defaults(func=cmd_simulate)

    s = sub.add_parser("yield", help="net yield and catalytic ebit count")
    s.add_argument("path")
    s.set_defaults(func=cmd_yield)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CodeSpecError, ValueError, OSError) as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
