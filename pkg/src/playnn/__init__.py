"""playnn: a deterministic mini neural-network playground engine.

Train tiny dense networks on synthetic 2-D datasets, watch every unit's
response as a heatmap, mutate hyperparameters live, and bookmark the whole
experiment as a single shareable state string.  The engine is pure Python,
bit-deterministic from a seed, and drivable through a command/frame
protocol by the CLI, the HTTP server, or an embedding host.
"""

from .config import Config, DEFAULT_CONFIG
from .datasets import Dataset, Point, generate, split
from .features import FEATURE_IDS, feature_vector
from .heatmap import HeatmapGrid, colorize, sample_all_units, sample_unit, to_ppm
from .nn import Activation, Link, Network, Node, build_network
from .presets import PRESETS
from .rng import Rng
from .session import Command, Frame, Session, parse_command, parse_frame, serialize_frame
from .statecodec import StateDecodeError, decode, encode
from .trainer import (TrainerState, accuracy, apply_config_change, init_state,
                      loss, loss_series_csv, run_epoch)

__version__ = "0.1.0"

__all__ = [
    "Activation", "Command", "Config", "DEFAULT_CONFIG", "Dataset",
    "FEATURE_IDS", "Frame", "HeatmapGrid", "Link", "Network", "Node",
    "PRESETS", "Point", "Rng", "Session", "StateDecodeError", "TrainerState",
    "accuracy", "apply_config_change", "build_network", "colorize", "decode",
    "encode", "feature_vector", "generate", "init_state", "loss",
    "loss_series_csv", "parse_command", "parse_frame", "run_epoch",
    "sample_all_units", "sample_unit", "serialize_frame", "split", "to_ppm",
]
