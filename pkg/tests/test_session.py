"""Session command handling, frame serialization, protocol transports."""

import io
import json

import pytest

from playnn.session import (Command, Session, parse_command, parse_frame,
                            run_pipe, serialize_frame)


def step(session):
    return session.handle(Command("step"))


class TestCommands:
    def test_step_on_fresh_session(self):
        session = Session("#")
        frame = step(session)
        assert frame.epoch == 1
        assert len(frame.loss) == 1
        assert frame.error is None

    def test_pause_is_idempotent(self):
        session = Session("#")
        first = session.handle(Command("pause"))
        second = session.handle(Command("pause"))
        assert first.running is False and second.running is False
        assert serialize_frame(first) == serialize_frame(second)

    def test_play_sets_running_and_tick_advances(self):
        session = Session("#")
        assert session.tick() is None  # paused: no scheduled epochs
        frame = session.handle(Command("play"))
        assert frame.running is True
        ticked = session.tick()
        assert ticked is not None and ticked.epoch == 1
        session.handle(Command("pause"))
        assert session.tick() is None

    def test_reset_rebuilds_and_preserves_running(self):
        session = Session("#")
        session.handle(Command("play"))
        step(session)
        frame = session.handle(Command("reset"))
        assert frame.epoch == 0
        assert frame.loss == []
        assert frame.running is True

    def test_set_param_hot_key_keeps_weights(self):
        session = Session("#")
        step(session)
        before = session.state.net.weights()
        frame = session.handle(Command("set_param", key="lr", value=0.1))
        assert frame.weights == before
        assert "lr=0.1" in frame.state
        assert frame.epoch == 1

    def test_set_param_cold_key_resets(self):
        session = Session("#")
        step(session)
        frame = session.handle(Command("set_param", key="seed", value=7))
        assert frame.epoch == 0
        assert "seed=7" in frame.state

    def test_set_param_unknown_key_is_an_error_frame(self):
        session = Session("#")
        step(session)
        frame = session.handle(Command("set_param", key="momentum", value=0.9))
        assert frame.error is not None
        assert frame.epoch == 1  # state untouched

    def test_set_config_cold_change(self):
        session = Session("#")
        step(session)
        frame = session.handle(Command("set_config", state="#ds=spiral"))
        assert frame.epoch == 0
        assert "ds=spiral" in frame.state

    def test_set_config_malformed_keeps_state(self):
        session = Session("#")
        step(session)
        before = serialize_frame(session.handle(Command("get_frame")))
        frame = session.handle(Command("set_config", state="#oops"))
        assert frame.error is not None and "oops" in frame.error
        after = serialize_frame(session.handle(Command("get_frame")))
        assert after == before

    def test_get_frame_heatmaps_opt_in(self):
        session = Session("#")
        plain = session.handle(Command("get_frame"))
        assert plain.heatmaps == {}
        rich = session.handle(Command("get_frame", heatmap_resolution=5))
        assert set(rich.heatmaps) == set(session.state.net.unit_ids())
        assert all(len(v) == 25 for v in rich.heatmaps.values())

    def test_get_frame_bad_resolution_is_an_error_frame(self):
        session = Session("#")
        frame = session.handle(Command("get_frame", heatmap_resolution=1))
        assert frame.error is not None

    def test_frame_weight_order_matches_build_order(self):
        session = Session("#")
        frame = session.handle(Command("get_frame"))
        assert frame.weights == session.state.net.weights()
        assert len(frame.weights) == 18
        assert len(frame.biases) == 7

    def test_data_rows_tag_train_membership(self):
        session = Session("#")
        frame = session.handle(Command("get_frame"))
        assert len(frame.data) == 500
        train = sum(1 for row in frame.data if row[3])
        assert train == 250

    def test_loss_tail_capped_at_200(self):
        session = Session("#layers=&feat=x1")
        for _ in range(205):
            step(session)
        frame = session.handle(Command("get_frame"))
        assert len(frame.loss) == 200
        assert frame.loss[-1][0] == 205

    def test_initial_decode_errors_propagate(self):
        from playnn.statecodec import StateDecodeError
        with pytest.raises(StateDecodeError):
            Session("#bad")


class TestSerializeFrame:
    def test_field_order_and_parse_roundtrip(self):
        session = Session("#")
        step(session)
        frame = session.handle(Command("get_frame", heatmap_resolution=3))
        text = serialize_frame(frame)
        assert text.startswith('{"epoch":1,"running":false,"state":"#problem=class')
        doc = parse_frame(text)
        assert list(doc) == ["epoch", "running", "state", "weights", "biases",
                             "loss", "heatmaps", "data"]
        assert doc["epoch"] == frame.epoch
        assert doc["running"] == frame.running
        assert doc["state"] == frame.state
        assert doc["weights"] == frame.weights
        assert doc["biases"] == frame.biases
        assert doc["loss"] == [list(entry) for entry in frame.loss]
        assert doc["heatmaps"] == frame.heatmaps
        assert doc["data"] == [[x1, x2, label, tag] for x1, x2, label, tag in frame.data]

    def test_numbers_rendered_shortest_roundtrip(self):
        session = Session("#")
        frame = session.handle(Command("get_frame"))
        frame.weights = [0.1 + 0.2, 1.0, -0.25]
        frame.biases = []
        frame.data = []
        text = serialize_frame(frame)
        assert '"weights":[0.30000000000000004,1,-0.25]' in text

    def test_nonfinite_numbers_serialize_as_null(self):
        session = Session("#")
        frame = session.handle(Command("get_frame"))
        frame.weights = [float("nan"), float("inf")]
        doc = parse_frame(serialize_frame(frame))
        assert doc["weights"] == [None, None]

    def test_error_field_appended_when_set(self):
        session = Session("#")
        frame = session.handle(Command("set_config", state="#nope"))
        doc = parse_frame(serialize_frame(frame))
        assert list(doc)[-1] == "error"


class TestParseCommand:
    def test_simple_commands(self):
        assert parse_command('{"cmd": "play"}').kind == "play"
        assert parse_command('{"cmd": "step"}').kind == "step"

    def test_set_param_fields(self):
        cmd = parse_command('{"cmd": "set_param", "key": "lr", "value": 0.1}')
        assert (cmd.key, cmd.value) == ("lr", 0.1)

    def test_get_frame_resolution(self):
        cmd = parse_command('{"cmd": "get_frame", "heatmap_resolution": 10}')
        assert cmd.heatmap_resolution == 10

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_command("not json")
        with pytest.raises(ValueError):
            parse_command('{"cmd": "explode"}')
        with pytest.raises(ValueError):
            parse_command('{"cmd": "set_param", "key": "lr"}')
        with pytest.raises(ValueError):
            parse_command('[1, 2]')


class TestDeterminism:
    def test_identical_command_sequences_give_identical_frames(self):
        commands = ['{"cmd": "step"}'] * 10 + [
            '{"cmd": "set_param", "key": "lr", "value": 0.1}',
        ] + ['{"cmd": "step"}'] * 10 + ['{"cmd": "get_frame", "heatmap_resolution": 6}']
        a = Session("#layers=4&seed=7")
        b = Session("#layers=4&seed=7")
        frames_a = [a.handle_json(c) for c in commands]
        frames_b = [b.handle_json(c) for c in commands]
        assert frames_a == frames_b


class TestPipeTransport:
    def test_line_in_frame_out(self):
        session = Session("#")
        inp = io.StringIO('{"cmd": "step"}\n\n{"cmd": "get_frame"}\nnot json\n')
        out = io.StringIO()
        run_pipe(session, inp, out)
        lines = out.getvalue().strip().splitlines()
        assert len(lines) == 3
        first = json.loads(lines[0])
        assert first["epoch"] == 1
        last = json.loads(lines[2])
        assert "error" in last
