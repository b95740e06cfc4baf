"""Monte-Carlo driver: sample, take syndrome differences, decode, score."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Literal

from ..builder import GeneratorSet
from .channel import ChannelModel, sample_errors, trial_rng
from .decoders import SyndromeTable, UncorrectableSyndrome, decode_table, decode_viterbi, slot_mask
from .syndrome import SyndromeModel

__all__ = ["SimConfig", "SimReport", "run_distillation", "run_trial"]


@dataclass(frozen=True)
class SimConfig:
    frames: int = 20
    trials: int = 1000
    decoder: Literal["table", "viterbi"] = "table"
    window: int = 1  # stride between frames that may carry errors
    w_max: int = 1
    table_weight: int = 1

    def __post_init__(self) -> None:
        if self.decoder not in ("table", "viterbi"):
            raise ValueError(f"unknown decoder {self.decoder!r}")
        if self.trials < 0 or self.frames < 1 or self.window < 1:
            raise ValueError("trials must be non-negative; frames and window positive")


@dataclass
class SimReport:
    trials: int
    successes: int
    logical_failures: int
    detected: int
    residual_undetected: int
    measured_yield: Fraction
    frames: int
    window: int
    seed: int
    decoder: str
    channel: str
    p: float
    extra: dict = field(default_factory=dict)

    @property
    def success_rate(self) -> float:
        return self.successes / self.trials if self.trials else 1.0

    def as_dict(self) -> dict:
        d = asdict(self)
        d["measured_yield"] = str(self.measured_yield)
        d["success_rate"] = self.success_rate
        return d

    def to_text(self) -> str:
        d = self.as_dict()
        extra = d.pop("extra")
        d.update(extra)
        return "\n".join(f"{k}={v}" for k, v in d.items()) + "\n"

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


def run_trial(
    model: SyndromeModel,
    ch: ChannelModel,
    cfg: SimConfig,
    trial: int,
    table: SyndromeTable | None = None,
) -> str:
    """One trial; returns ``"ok"``, ``"detected"`` or ``"undetected"``."""
    err = sample_errors(ch, cfg.frames, model.gset, trial_rng(ch.seed, trial))
    synd = model.syndromes(err)
    try:
        if cfg.decoder == "table":
            guess = decode_table(synd, table if table is not None else SyndromeTable.build(model, cfg.window, cfg.table_weight))
        else:
            mask = slot_mask(cfg.frames, model.nu, cfg.window)
            guess = decode_viterbi(synd, model, cfg.w_max, allowed_frames=mask)
    except UncorrectableSyndrome:
        return "detected"
    resid = guess ^ err
    if resid.weight == 0 or model.span(cfg.frames).contains(resid):
        return "ok"
    return "undetected"


def run_distillation(g: GeneratorSet, ch: ChannelModel, cfg: SimConfig) -> SimReport:
    """Run ``cfg.trials`` independent trials.

    Trial ``i`` draws from ``numpy.random.default_rng([seed, i])`` (PCG64), so the
    report does not depend on how trials are scheduled. Measured yield per
    noisy ebit counts ``N - m`` distilled ebits per frame for each successful
    trial and charges every trial the ``N - n`` catalytic columns it consumes,
    where ``N`` is the frame size and ``n`` the number of noisy columns.
    """
    if not g.gens:
        raise ValueError("empty generator set")
    model = SyndromeModel(g)
    table = SyndromeTable.build(model, cfg.window, cfg.table_weight) if cfg.decoder == "table" else None
    counts = {"ok": 0, "detected": 0, "undetected": 0}
    for i in range(cfg.trials):
        counts[run_trial(model, ch, cfg, i, table)] += 1
    N, n, m = g.frame_size, g.n_noisy, g.m
    trials = cfg.trials
    if trials:
        measured = Fraction(counts["ok"] * (N - m) - trials * (N - n), trials * n)
    else:
        measured = Fraction(0)
    return SimReport(
        trials=trials,
        successes=counts["ok"],
        logical_failures=counts["detected"] + counts["undetected"],
        detected=counts["detected"],
        residual_undetected=counts["undetected"],
        measured_yield=measured,
        frames=cfg.frames,
        window=cfg.window,
        seed=ch.seed,
        decoder=cfg.decoder,
        channel=ch.kind,
        p=ch.p,
    )
