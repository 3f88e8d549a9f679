"""Command/frame boundary around one trainer.

A :class:`Session` owns exactly one trainer state and processes commands
strictly in arrival order: play/pause toggle the epoch scheduler, step runs
one epoch, reset rebuilds from the current config, set_config/set_param
route through the hot/cold mutation rules.  Every command returns a fresh
:class:`Frame` describing post-command state; transports serialize frames
with :func:`serialize_frame`.

The wire format is line-oriented JSON.  Commands look like
``{"cmd": "step"}``, ``{"cmd": "set_param", "key": "lr", "value": 0.1}``,
``{"cmd": "get_frame", "heatmap_resolution": 10}``.  Frames carry the fields
epoch, running, state, weights, biases, loss, heatmaps, data -- in that
order, numbers rendered shortest-roundtrip (non-finite values as null) --
plus a trailing "error" field on command failures, in which case session
state is unchanged.

While playing, a host with a clock calls :meth:`Session.tick` once per tick
(default 50 ms) to advance one epoch and obtain the periodic frame; command
handling and ticking serialize on one lock.
"""

import json
import threading
from dataclasses import dataclass, field

from . import statecodec, trainer
from .config import Config
from .floatfmt import format_float
from .heatmap import sample_all_units
from .statecodec import StateDecodeError

COMMAND_KINDS = ("play", "pause", "step", "reset", "set_config", "set_param", "get_frame")

DEFAULT_TICK_SECONDS = 0.05
LOSS_TAIL_LIMIT = 200


@dataclass
class Command:
    kind: str
    state: str | None = None          # set_config
    key: str | None = None            # set_param
    value: object = None              # set_param
    heatmap_resolution: int | None = None  # get_frame


@dataclass
class Frame:
    epoch: int
    running: bool
    state: str
    weights: list[float]
    biases: list[float]
    loss: list[tuple[int, float, float]]
    heatmaps: dict[str, list[float]] = field(default_factory=dict)
    data: list[tuple[float, float, float, bool]] = field(default_factory=list)
    error: str | None = None


def parse_command(text: str) -> Command:
    """Parse one command document; raises ValueError on anything unusable."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"unreadable command document: {exc}") from None
    if not isinstance(doc, dict) or "cmd" not in doc:
        raise ValueError('command document must be an object with a "cmd" field')
    kind = doc["cmd"]
    if kind not in COMMAND_KINDS:
        raise ValueError(f"unknown command {kind!r}")
    command = Command(kind=kind)
    if kind == "set_config":
        if not isinstance(doc.get("state"), str):
            raise ValueError('set_config needs a string "state" field')
        command.state = doc["state"]
    elif kind == "set_param":
        if "key" not in doc or "value" not in doc:
            raise ValueError('set_param needs "key" and "value" fields')
        command.key = str(doc["key"])
        command.value = doc["value"]
    elif kind == "get_frame":
        if "heatmap_resolution" in doc and doc["heatmap_resolution"] is not None:
            try:
                command.heatmap_resolution = int(doc["heatmap_resolution"])
            except (TypeError, ValueError):
                raise ValueError("heatmap_resolution must be an integer") from None
    return command


class Session:
    """Single-owner engine session; all entry points serialize on a lock."""

    def __init__(self, state_string: str = "#",
                 tick_seconds: float = DEFAULT_TICK_SECONDS):
        decoded = statecodec.decode(state_string)  # may raise StateDecodeError
        self.config: Config = decoded.config
        self.ui_hidden = decoded.ui_hidden
        self.diagnostics = list(decoded.diagnostics)
        self.tick_seconds = tick_seconds
        self.state = trainer.init_state(self.config)
        self._lock = threading.Lock()

    # -- protocol ----------------------------------------------------------

    def handle(self, command: Command) -> Frame:
        with self._lock:
            return self._dispatch(command)

    def handle_json(self, text: str) -> str:
        """Transport entry point: command document in, frame document out."""
        try:
            command = parse_command(text)
        except ValueError as exc:
            with self._lock:
                return serialize_frame(self._error_frame(str(exc)))
        return serialize_frame(self.handle(command))

    def tick(self) -> Frame | None:
        """Advance one epoch if playing; the periodic frame, else None."""
        with self._lock:
            if not self.state.running:
                return None
            trainer.run_epoch(self.state, self.config)
            return self._frame()

    # -- command handlers ----------------------------------------------------

    def _dispatch(self, command: Command) -> Frame:
        kind = command.kind
        if kind == "play":
            self.state.running = True
        elif kind == "pause":
            self.state.running = False
        elif kind == "step":
            trainer.run_epoch(self.state, self.config)
        elif kind == "reset":
            self.state = trainer.init_state(self.config, running=self.state.running)
        elif kind == "set_config":
            try:
                decoded = statecodec.decode(command.state)
            except StateDecodeError as exc:
                return self._error_frame(str(exc))
            self.state = trainer.apply_config_change(
                self.state, self.config, decoded.config)
            self.config = decoded.config
            self.ui_hidden = decoded.ui_hidden
            self.diagnostics = list(decoded.diagnostics)
        elif kind == "set_param":
            try:
                new_config, ui_hidden, diagnostics = statecodec.parse_param(
                    str(command.key), _param_text(command.value),
                    self.config, self.ui_hidden)
            except KeyError as exc:
                return self._error_frame(str(exc.args[0]))
            self.state = trainer.apply_config_change(self.state, self.config, new_config)
            self.config = new_config
            self.ui_hidden = ui_hidden
            self.diagnostics = diagnostics
        elif kind == "get_frame":
            resolution = command.heatmap_resolution
            if resolution is not None and resolution < 2:
                return self._error_frame(
                    f"heatmap resolution must be >= 2, got {resolution}")
            return self._frame(heatmap_resolution=resolution)
        return self._frame()

    # -- frame construction --------------------------------------------------

    def _frame(self, heatmap_resolution: int | None = None) -> Frame:
        net = self.state.net
        heatmaps: dict[str, list[float]] = {}
        if heatmap_resolution is not None:
            grids = sample_all_units(net, heatmap_resolution)
            for uid in net.unit_ids():
                grid = grids[uid]
                heatmaps[uid] = [v for row in grid.values for v in row]
        train = set(self.state.dataset.train_indices)
        data = [(p.x1, p.x2, p.label, i in train)
                for i, p in enumerate(self.state.dataset.points)]
        return Frame(
            epoch=self.state.epoch,
            running=self.state.running,
            state=statecodec.encode(self.config, self.ui_hidden),
            weights=net.weights(),
            biases=net.biases(),
            loss=list(self.state.loss_series[-LOSS_TAIL_LIMIT:]),
            heatmaps=heatmaps,
            data=data,
        )

    def _error_frame(self, message: str) -> Frame:
        frame = self._frame()
        frame.error = message
        return frame


def _param_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    return str(value)


# -- frame serialization -------------------------------------------------


def _number(value: float) -> str:
    # JSON has no tokens for nan/inf; diverged runs serialize them as null.
    if value != value or value in (float("inf"), float("-inf")):
        return "null"
    return format_float(value)


def serialize_frame(frame: Frame) -> str:
    """Render a frame as one JSON document with a fixed field order."""
    weights = "[" + ",".join(_number(w) for w in frame.weights) + "]"
    biases = "[" + ",".join(_number(b) for b in frame.biases) + "]"
    loss = "[" + ",".join(
        f"[{epoch},{_number(train)},{_number(test)}]"
        for epoch, train, test in frame.loss) + "]"
    heatmaps = "{" + ",".join(
        json.dumps(uid) + ":[" + ",".join(_number(v) for v in values) + "]"
        for uid, values in frame.heatmaps.items()) + "}"
    data = "[" + ",".join(
        f"[{_number(x1)},{_number(x2)},{_number(label)},"
        f"{'true' if is_train else 'false'}]"
        for x1, x2, label, is_train in frame.data) + "]"
    parts = [
        f'"epoch":{frame.epoch}',
        f'"running":{"true" if frame.running else "false"}',
        f'"state":{json.dumps(frame.state)}',
        f'"weights":{weights}',
        f'"biases":{biases}',
        f'"loss":{loss}',
        f'"heatmaps":{heatmaps}',
        f'"data":{data}',
    ]
    if frame.error is not None:
        parts.append(f'"error":{json.dumps(frame.error)}')
    return "{" + ",".join(parts) + "}"


def parse_frame(text: str) -> dict:
    """Parse a frame document back into plain Python data."""
    return json.loads(text)


def run_pipe(session: Session, in_stream, out_stream) -> None:
    """Lockstep transport: one command document per line in, one frame
    document per line out.  Playing sessions still advance only on step
    commands here; real-time ticking belongs to hosts with a clock."""
    for line in in_stream:
        line = line.strip()
        if not line:
            continue
        out_stream.write(session.handle_json(line) + "\n")
        out_stream.flush()
