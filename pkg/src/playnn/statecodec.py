"""Bit-exact serialization of a Config to and from a URL-fragment string.

The state string is the engine's universal config format: the browser URL
fragment, the CLI ``--state`` flag, and the protocol ``set_config`` payload
all carry it verbatim.  Encoding is canonical (fixed key order, shortest
float rendering), so equal configs always produce equal strings.

Decoding is forgiving by design: shared links should keep working even when
hand-edited or produced by a newer version.  Missing keys fall back to
defaults, unknown keys are ignored, and out-of-range values are clamped to
the nearest legal value -- each with a diagnostic.  The only hard error is a
pair with no '=' in it.
"""

import math
from dataclasses import dataclass, field

from . import config as config_mod
from . import datasets, features
from .config import Config
from .floatfmt import format_float
from .nn import ACTIVATION_KINDS, MAX_HIDDEN_LAYERS, MAX_LAYER_UNITS

KEY_ORDER = ("problem", "ds", "noise", "split", "bs", "lr", "act", "reg",
             "rr", "layers", "feat", "seed", "ui")

_PROBLEM_TO_TOKEN = {"classification": "class", "regression": "reg"}
_TOKEN_TO_PROBLEM = {v: k for k, v in _PROBLEM_TO_TOKEN.items()}


class StateDecodeError(ValueError):
    """Malformed pair syntax (a fragment segment with no '=')."""


@dataclass
class DecodeResult:
    config: Config
    ui_hidden: tuple[str, ...]
    diagnostics: list[str] = field(default_factory=list)


def encode(config: Config, ui_hidden=()) -> str:
    """Render the canonical state string for a valid config."""
    pairs = [
        ("problem", _PROBLEM_TO_TOKEN[config.problem]),
        ("ds", config.dataset),
        ("noise", str(config.noise)),
        ("split", str(config.train_percent)),
        ("bs", str(config.batch_size)),
        ("lr", format_float(config.learning_rate)),
        ("act", config.hidden_activation),
        ("reg", config.regularization),
        ("rr", format_float(config.reg_rate)),
        ("layers", ",".join(str(s) for s in config.hidden_layer_sizes)),
        ("feat", ",".join(config.enabled_features)),
        ("seed", str(config.seed)),
        ("ui", ",".join(ui_hidden)),
    ]
    return "#" + "&".join(f"{key}={value}" for key, value in pairs)


def decode(text: str) -> DecodeResult:
    """Parse any state string into a valid config plus hidden-panel ids.

    Total over arbitrary input except for '='-less pairs, which raise
    :class:`StateDecodeError` naming the offending pair.
    """
    body = text[1:] if text.startswith("#") else text
    raw: dict[str, str] = {}
    diagnostics: list[str] = []
    for segment in body.split("&"):
        if segment == "":
            continue
        if "=" not in segment:
            raise StateDecodeError(
                f"malformed pair {segment!r}: expected key=value")
        key, value = segment.split("=", 1)
        if key not in KEY_ORDER:
            diagnostics.append(f"ignoring unknown key {key!r}")
            continue
        raw[key] = value  # repeated keys: last one wins
    cfg, ui_hidden = _merge(raw, config_mod.DEFAULT_CONFIG, (), diagnostics)
    return DecodeResult(cfg, ui_hidden, diagnostics)


def parse_param(key: str, value: str, base: Config,
                ui_hidden=()) -> tuple[Config, tuple[str, ...], list[str]]:
    """Apply one key=value assignment on top of an existing config.

    Backs the protocol's set_param command; shares every clamping rule with
    :func:`decode`.  Raises KeyError for keys outside the grammar.
    """
    if key not in KEY_ORDER:
        raise KeyError(f"unknown state key {key!r}")
    diagnostics: list[str] = []
    cfg, hidden = _merge({key: value}, base, tuple(ui_hidden), diagnostics)
    return cfg, hidden, diagnostics


def _merge(raw: dict, base: Config, base_ui: tuple,
           diagnostics: list) -> tuple[Config, tuple[str, ...]]:
    """Overlay parsed raw pairs onto a base config, clamping into range."""
    cfg = Config(
        problem=_parse_choice(raw, "problem", _TOKEN_TO_PROBLEM,
                              base.problem, diagnostics),
        dataset=_parse_choice(raw, "ds", {k: k for k in datasets.KINDS},
                              base.dataset, diagnostics),
        noise=_parse_int(raw, "noise", config_mod.NOISE_RANGE, base.noise, diagnostics),
        train_percent=_parse_int(raw, "split", config_mod.TRAIN_PERCENT_RANGE,
                                 base.train_percent, diagnostics),
        batch_size=_parse_int(raw, "bs", config_mod.BATCH_SIZE_RANGE,
                              base.batch_size, diagnostics),
        learning_rate=_parse_float(raw, "lr", config_mod.LEARNING_RATE_RANGE,
                                   base.learning_rate, diagnostics),
        hidden_activation=_parse_choice(raw, "act", {k: k for k in ACTIVATION_KINDS},
                                        base.hidden_activation, diagnostics),
        regularization=_parse_choice(raw, "reg",
                                     {k: k for k in config_mod.REGULARIZATION_KINDS},
                                     base.regularization, diagnostics),
        reg_rate=_parse_float(raw, "rr", config_mod.REG_RATE_RANGE,
                              base.reg_rate, diagnostics),
        hidden_layer_sizes=_parse_layers(raw, base.hidden_layer_sizes, diagnostics),
        enabled_features=_parse_features(raw, base.enabled_features, diagnostics),
        seed=_parse_int(raw, "seed", config_mod.SEED_RANGE, base.seed, diagnostics),
    )
    if "ui" in raw:
        ui_hidden = tuple(tok for tok in raw["ui"].split(",") if tok != "")
    else:
        ui_hidden = base_ui
    return cfg, ui_hidden


def _parse_choice(raw, key, mapping, default, diagnostics):
    if key not in raw:
        return default
    value = raw[key]
    if value in mapping:
        return mapping[value]
    diagnostics.append(f"{key}: unknown value {value!r}, using {default!r}")
    return default


def _parse_int(raw, key, bounds, default, diagnostics):
    if key not in raw:
        return default
    text = raw[key]
    try:
        value = int(text)
    except ValueError:
        diagnostics.append(f"{key}: unreadable integer {text!r}, using {default}")
        return default
    lo, hi = bounds
    if value < lo or value > hi:
        clamped = min(max(value, lo), hi)
        diagnostics.append(f"{key}: {value} outside [{lo}, {hi}], clamped to {clamped}")
        return clamped
    return value


def _parse_float(raw, key, bounds, default, diagnostics):
    if key not in raw:
        return default
    text = raw[key]
    try:
        value = float(text)
    except ValueError:
        diagnostics.append(f"{key}: unreadable number {text!r}, using {format_float(default)}")
        return default
    if math.isnan(value):
        diagnostics.append(f"{key}: nan is not a value, using {format_float(default)}")
        return default
    lo, hi = bounds
    if value < lo or value > hi:
        clamped = min(max(value, lo), hi)
        diagnostics.append(
            f"{key}: {format_float(value)} outside [{format_float(lo)}, {format_float(hi)}], "
            f"clamped to {format_float(clamped)}")
        return clamped
    return value


def _parse_layers(raw, default, diagnostics):
    if "layers" not in raw:
        return default
    sizes = []
    for token in raw["layers"].split(","):
        if token == "":
            continue
        try:
            size = int(token)
        except ValueError:
            diagnostics.append(f"layers: dropping unreadable size {token!r}")
            continue
        if size < 1 or size > MAX_LAYER_UNITS:
            clamped = min(max(size, 1), MAX_LAYER_UNITS)
            diagnostics.append(f"layers: size {size} clamped to {clamped}")
            size = clamped
        sizes.append(size)
    if len(sizes) > MAX_HIDDEN_LAYERS:
        diagnostics.append(
            f"layers: keeping first {MAX_HIDDEN_LAYERS} of {len(sizes)} layers")
        sizes = sizes[:MAX_HIDDEN_LAYERS]
    return tuple(sizes)


def _parse_features(raw, default, diagnostics):
    if "feat" not in raw:
        return default
    tokens = [tok for tok in raw["feat"].split(",") if tok != ""]
    for tok in tokens:
        if not features.is_feature_id(tok):
            diagnostics.append(f"feat: ignoring unknown feature {tok!r}")
    ordered = features.canonical_order(tokens)
    if not ordered:
        diagnostics.append(
            f"feat: no usable features in {raw['feat']!r}, using defaults")
        return default
    if list(ordered) != [tok for tok in tokens if features.is_feature_id(tok)]:
        diagnostics.append("feat: reordered to canonical palette order")
    return ordered
