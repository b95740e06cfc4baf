"""Pauli-frame Monte-Carlo simulation of convolutional entanglement distillation."""

from .channel import ChannelModel, ErrorFrameSeq, interior_frames, sample_errors, trial_rng
from .decoders import (
    AmbiguousTableError,
    SyndromeTable,
    UncorrectableSyndrome,
    decode_table,
    decode_viterbi,
    slot_mask,
)
from .runner import SimConfig, SimReport, run_distillation, run_trial
from .syndrome import StabilizerSpan, SyndromeModel, SyndromeStream, syndrome_column, syndromes

__all__ = [
    "ChannelModel",
    "ErrorFrameSeq",
    "interior_frames",
    "sample_errors",
    "trial_rng",
    "AmbiguousTableError",
    "SyndromeTable",
    "UncorrectableSyndrome",
    "decode_table",
    "decode_viterbi",
    "slot_mask",
    "SimConfig",
    "SimReport",
    "run_distillation",
    "run_trial",
    "StabilizerSpan",
    "SyndromeModel",
    "SyndromeStream",
    "syndrome_column",
    "syndromes",
]
