"""Training loop: epoch scheduling, loss bookkeeping, live config mutation.

One :class:`TrainerState` bundles the network, the dataset, the epoch
counter, the loss history, and the session's random stream.  Everything in
it derives deterministically from a :class:`~playnn.config.Config`: the
stream is seeded from the config, the split draws come first, then the
weight-initialization draws, then one shuffle per epoch -- so two sessions
with equal configs replay bit-identically.

Hyperparameter changes follow a hot/cold split.  Hot keys (learning rate,
batch size, regularization) apply on the next batch without touching
weights or history.  Cold keys (anything that changes the parameter-vector
shape, the data, or the draw stream) rebuild the state from scratch.
"""

from dataclasses import dataclass, field

from . import datasets, features
from .config import COLD_KEYS, Config, validate
from .datasets import DEFAULT_N, Dataset, Point
from .floatfmt import format_float
from .nn import Activation, Network, build_network
from .rng import Rng

LOSS_CSV_HEADER = "epoch,train_loss,test_loss"


@dataclass
class TrainerState:
    net: Network
    dataset: Dataset
    rng: Rng
    epoch: int = 0
    loss_series: list[tuple[int, float, float]] = field(default_factory=list)
    running: bool = False


def init_state(config: Config, running: bool = False) -> TrainerState:
    """Build a fresh state from a config.

    Stream layout is fixed: the dataset generator runs on its own stream
    seeded from config.seed; the session stream (also seeded from
    config.seed) feeds the split, then weight init, then epoch shuffles.
    """
    validate(config)
    rng = Rng(config.seed)
    points = datasets.generate(config.dataset, DEFAULT_N, config.noise, config.seed)
    train_idx, test_idx = datasets.split(points, config.train_percent, rng)
    net = build_network(config.hidden_layer_sizes, config.enabled_features,
                        Activation(config.hidden_activation), config.problem, rng)
    dataset = Dataset(config.dataset, points, train_idx, test_idx)
    return TrainerState(net=net, dataset=dataset, rng=rng, running=running)


def _feature_vec(net: Network, point: Point) -> list[float]:
    return [features.feature_value(fid, point.x1, point.x2)
            for fid in net.feature_ids]


def loss(net: Network, points) -> float:
    """Mean squared-error loss 0.5*(prediction - label)^2 over the points."""
    if not points:
        raise ValueError("loss over an empty point set")
    total = 0.0
    for p in points:
        residual = net.forward(_feature_vec(net, p)) - p.label
        total += 0.5 * residual * residual
    return total / len(points)


def accuracy(net: Network, points) -> float:
    """Fraction of points whose prediction sign matches the label sign.

    sign(0) counts as +1 on both sides.  Classification networks only.
    """
    if net.problem != "classification":
        raise ValueError("accuracy is defined for classification networks only")
    if not points:
        raise ValueError("accuracy over an empty point set")
    hits = 0
    for p in points:
        prediction = net.forward(_feature_vec(net, p))
        if (prediction >= 0.0) == (p.label >= 0.0):
            hits += 1
    return hits / len(points)


def run_epoch(state: TrainerState, config: Config) -> TrainerState:
    """One full pass over the shuffled training set in mini-batches.

    Shuffles a working copy of the train indices (Fisher-Yates on the
    session stream), walks it in consecutive batches of config.batch_size
    (final partial batch allowed), applies one weight update per batch, then
    appends (epoch, train loss, test loss) measured after the epoch.  The
    dataset's own index lists are never reordered, so loss evaluation always
    reduces in the same fixed order.
    """
    if not state.dataset.train_indices:
        raise ValueError("training set is empty; adjust the split")
    order = list(state.dataset.train_indices)
    rng = state.rng
    for i in range(len(order) - 1, 0, -1):
        j = int(rng.next_float() * (i + 1))
        order[i], order[j] = order[j], order[i]

    net = state.net
    points = state.dataset.points
    for start in range(0, len(order), config.batch_size):
        for index in order[start:start + config.batch_size]:
            point = points[index]
            net.forward(_feature_vec(net, point))
            net.backward(point.label)
        net.apply_update(config.learning_rate, config.regularization, config.reg_rate)

    state.epoch += 1
    train_loss = loss(net, state.dataset.train_points())
    test_points = state.dataset.test_points()
    test_loss = loss(net, test_points) if test_points else 0.0
    state.loss_series.append((state.epoch, train_loss, test_loss))
    return state


def apply_config_change(state: TrainerState, old: Config, new: Config) -> TrainerState:
    """Route a config diff through the hot/cold mutation rules.

    Hot-only diffs return the state untouched (the next run_epoch reads the
    new values from the config).  Any cold-key diff rebuilds from scratch,
    preserving only the running flag.  An invalid new config raises before
    anything is touched.
    """
    validate(new)
    cold_changed = any(
        getattr(old, key) != getattr(new, key) for key in COLD_KEYS)
    if cold_changed:
        return init_state(new, running=state.running)
    return state


def loss_series_csv(series) -> str:
    """Render the loss history as CSV, floats in shortest-roundtrip form."""
    lines = [LOSS_CSV_HEADER]
    for epoch, train_loss, test_loss in series:
        lines.append(f"{epoch},{format_float(train_loss)},{format_float(test_loss)}")
    return "\n".join(lines) + "\n"
