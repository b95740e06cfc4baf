#!/usr/bin/env python3
"""Success rate and measured yield versus depolarizing strength, Viterbi decoding.

Writes a CSV to stdout: code, p, trials, success_rate, measured_yield.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field

from cedist.builder import augment_multi, augment_single, import_gf4, GF4Generator
from cedist.pauli import PauliVec
from cedist.sim import ChannelModel, SimConfig, run_distillation

from rate_third_montecarlo import rate_third_code


@dataclass
class Sweep:
    ps: list[float] = field(default_factory=lambda: [0.0, 0.005, 0.01, 0.02, 0.05])
    trials: int = 300
    frames: int = 16
    seed: int = 1
    w_max: int = 1


def codes():
    yield "rate-1/3", rate_third_code()
    yield "single", augment_single(PauliVec.parse("1+D^3, 1+D^2 | D^2, D"))
    gens = import_gf4(GF4Generator.from_frames([["1", "W", "1", "0"], ["1", "1", "0", "1"]]))
    yield "gf4-multi", augment_multi(gens)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=Sweep.trials)
    ap.add_argument("--frames", type=int, default=Sweep.frames)
    ap.add_argument("--seed", type=int, default=Sweep.seed)
    ap.add_argument("--wmax", type=int, default=Sweep.w_max, choices=(1, 2))
    a = ap.parse_args()
    sweep = Sweep(trials=a.trials, frames=a.frames, seed=a.seed, w_max=a.wmax)
    out = csv.writer(sys.stdout)
    out.writerow(["code", "p", "trials", "success_rate", "measured_yield"])
    for name, g in codes():
        for p in sweep.ps:
            cfg = SimConfig(frames=sweep.frames, trials=sweep.trials, decoder="viterbi", w_max=sweep.w_max)
            r = run_distillation(g, ChannelModel("depolarizing", p, sweep.seed), cfg)
            out.writerow([name, p, r.trials, f"{r.success_rate:.4f}", f"{float(r.measured_yield):.4f}"])


if __name__ == "__main__":
    main()
