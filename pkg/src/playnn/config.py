"""The complete bookmarkable experiment state.

A :class:`Config` captures everything needed to reproduce a run: problem
type, dataset and noise, split, optimizer hyperparameters, architecture,
enabled features, and the seed.  It is exactly what the state codec
serializes, and its field ranges double as the clamping bounds for shared
state strings.
"""

from dataclasses import dataclass, replace

from . import datasets, features
from .nn import ACTIVATION_KINDS, MAX_HIDDEN_LAYERS, MAX_LAYER_UNITS

PROBLEM_KINDS = ("classification", "regression")
REGULARIZATION_KINDS = ("none", "l1", "l2")

NOISE_RANGE = (0, 50)
TRAIN_PERCENT_RANGE = (10, 90)
BATCH_SIZE_RANGE = (1, 30)
LEARNING_RATE_RANGE = (1e-5, 10.0)
REG_RATE_RANGE = (0.0, 10.0)
SEED_RANGE = (0, 2**32 - 1)

# Keys whose change applies in place, without touching weights or history.
HOT_KEYS = frozenset({"learning_rate", "batch_size", "regularization", "reg_rate"})
# Keys whose change forces a full reset (they alter the parameter vector
# shape, the data distribution, or the stream of random draws).
COLD_KEYS = frozenset({
    "problem", "dataset", "noise", "train_percent",
    "hidden_layer_sizes", "enabled_features", "hidden_activation", "seed",
})


@dataclass(frozen=True)
class Config:
    problem: str = "classification"
    dataset: str = "gauss"
    noise: int = 0
    train_percent: int = 50
    batch_size: int = 10
    learning_rate: float = 0.03
    hidden_activation: str = "tanh"
    regularization: str = "none"
    reg_rate: float = 0.0
    hidden_layer_sizes: tuple[int, ...] = (4, 2)
    enabled_features: tuple[str, ...] = ("x1", "x2")
    seed: int = 42

    def with_changes(self, **changes) -> "Config":
        return replace(self, **changes)


DEFAULT_CONFIG = Config()


def validation_errors(config: Config) -> list[str]:
    """All range violations in a config; empty when valid."""
    errors = []
    if config.problem not in PROBLEM_KINDS:
        errors.append(f"problem must be one of {PROBLEM_KINDS}, got {config.problem!r}")
    if config.dataset not in datasets.KINDS:
        errors.append(f"dataset must be one of {datasets.KINDS}, got {config.dataset!r}")
    if not NOISE_RANGE[0] <= config.noise <= NOISE_RANGE[1]:
        errors.append(f"noise {config.noise} outside {NOISE_RANGE}")
    if not TRAIN_PERCENT_RANGE[0] <= config.train_percent <= TRAIN_PERCENT_RANGE[1]:
        errors.append(f"train_percent {config.train_percent} outside {TRAIN_PERCENT_RANGE}")
    if not BATCH_SIZE_RANGE[0] <= config.batch_size <= BATCH_SIZE_RANGE[1]:
        errors.append(f"batch_size {config.batch_size} outside {BATCH_SIZE_RANGE}")
    if not LEARNING_RATE_RANGE[0] <= config.learning_rate <= LEARNING_RATE_RANGE[1]:
        errors.append(f"learning_rate {config.learning_rate} outside {LEARNING_RATE_RANGE}")
    if config.hidden_activation not in ACTIVATION_KINDS:
        errors.append(
            f"activation must be one of {ACTIVATION_KINDS}, got {config.hidden_activation!r}")
    if config.regularization not in REGULARIZATION_KINDS:
        errors.append(
            f"regularization must be one of {REGULARIZATION_KINDS}, got {config.regularization!r}")
    if not REG_RATE_RANGE[0] <= config.reg_rate <= REG_RATE_RANGE[1]:
        errors.append(f"reg_rate {config.reg_rate} outside {REG_RATE_RANGE}")
    if len(config.hidden_layer_sizes) > MAX_HIDDEN_LAYERS:
        errors.append(f"at most {MAX_HIDDEN_LAYERS} hidden layers")
    for size in config.hidden_layer_sizes:
        if not 1 <= size <= MAX_LAYER_UNITS:
            errors.append(f"hidden layer size {size} outside [1, {MAX_LAYER_UNITS}]")
    if not config.enabled_features:
        errors.append("at least one feature must be enabled")
    elif tuple(config.enabled_features) != features.canonical_order(config.enabled_features):
        errors.append("enabled_features must be known ids in canonical order")
    if not SEED_RANGE[0] <= config.seed <= SEED_RANGE[1]:
        errors.append(f"seed {config.seed} outside {SEED_RANGE}")
    return errors


def validate(config: Config) -> None:
    """Raise ValueError listing every violation; no-op when valid."""
    errors = validation_errors(config)
    if errors:
        raise ValueError("invalid config: " + "; ".join(errors))
