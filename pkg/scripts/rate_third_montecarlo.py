#!/usr/bin/env python3
"""Monte-Carlo run of the rate-1/3 stabilizer with one random single-qubit error
every other frame."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from cedist.builder import GeneratorSet, check_commuting
from cedist.pauli import PauliWindow, from_pauli_window
from cedist.sim import ChannelModel, SimConfig, run_distillation


@dataclass
class Experiment:
    trials: int = 10_000
    frames: int = 20
    seed: int = 2007
    decoder: str = "table"


def rate_third_code() -> GeneratorSet:
    return GeneratorSet.plain([from_pauli_window(PauliWindow.parse(w)) for w in ("XXX|XZY", "ZZZ|ZYX")])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=Experiment.trials)
    ap.add_argument("--frames", type=int, default=Experiment.frames)
    ap.add_argument("--seed", type=int, default=Experiment.seed)
    ap.add_argument("--decoder", choices=("table", "viterbi"), default=Experiment.decoder)
    exp = Experiment(**vars(ap.parse_args()))

    g = rate_third_code()
    print("commuting:", check_commuting(g))
    t0 = time.perf_counter()
    report = run_distillation(
        g,
        ChannelModel("periodic", seed=exp.seed, spacing=2),
        SimConfig(frames=exp.frames, trials=exp.trials, decoder=exp.decoder, window=2),
    )
    print(report.to_text(), end="")
    print(f"elapsed_s={time.perf_counter() - t0:.2f}")


if __name__ == "__main__":
    main()
