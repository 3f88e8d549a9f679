"""Headless CLI runner: artifacts, determinism, exit codes, presets."""

import filecmp
import json

from playnn.cli import main
from playnn.presets import PRESETS
from playnn.statecodec import decode


def run(args):
    return main(list(args))


class TestRun:
    def test_zero_epochs_writes_header_only_csv(self, tmp_path):
        out = tmp_path / "out"
        assert run(["run", "--epochs", "0", "--out", str(out)]) == 0
        assert (out / "losses.csv").read_text() == "epoch,train_loss,test_loss\n"

    def test_default_emit_is_losses_and_final_state(self, tmp_path):
        out = tmp_path / "out"
        run(["--epochs", "1", "--out", str(out)])  # bare-flag invocation
        names = sorted(p.name for p in out.iterdir())
        assert names == ["final_state.txt", "losses.csv"]

    def test_losses_csv_row_per_epoch(self, tmp_path):
        out = tmp_path / "out"
        run(["run", "--epochs", "5", "--out", str(out)])
        lines = (out / "losses.csv").read_text().strip().splitlines()
        assert len(lines) == 6
        assert lines[1].startswith("1,")

    def test_double_run_is_byte_identical(self, tmp_path):
        args = ["run", "--state", "#ds=circle&layers=3,2", "--epochs", "4",
                "--heatmap-res", "6", "--emit", "losses,heatmaps,final_state,frames"]
        a, b = tmp_path / "a", tmp_path / "b"
        assert run(args + ["--out", str(a)]) == 0
        assert run(args + ["--out", str(b)]) == 0
        names = sorted(p.name for p in a.iterdir())
        assert names == sorted(p.name for p in b.iterdir())
        match, mismatch, errors = filecmp.cmpfiles(a, b, names, shallow=False)
        assert mismatch == [] and errors == []

    def test_heatmap_file_per_unit(self, tmp_path):
        out = tmp_path / "out"
        run(["run", "--state", "#layers=3", "--epochs", "1",
             "--emit", "heatmaps", "--heatmap-res", "4", "--out", str(out)])
        names = sorted(p.name for p in out.iterdir())
        assert names == ["unit_h1_1.ppm", "unit_h1_2.ppm", "unit_h1_3.ppm",
                         "unit_out.ppm", "unit_x1.ppm", "unit_x2.ppm"]
        first = (out / "unit_out.ppm").read_text().splitlines()
        assert first[:3] == ["P3", "4 4", "255"]

    def test_frames_jsonl_one_line_per_epoch(self, tmp_path):
        out = tmp_path / "out"
        run(["run", "--epochs", "3", "--emit", "frames", "--out", str(out)])
        lines = (out / "frames.jsonl").read_text().strip().splitlines()
        assert [json.loads(line)["epoch"] for line in lines] == [1, 2, 3]

    def test_final_state_roundtrips_as_input(self, tmp_path):
        out1 = tmp_path / "one"
        run(["run", "--state", "#ds=xor&seed=9&lr=0.1", "--epochs", "2",
             "--out", str(out1)])
        final = (out1 / "final_state.txt").read_text().strip()
        out2 = tmp_path / "two"
        run(["run", "--state", final, "--epochs", "0", "--out", str(out2)])
        assert (out2 / "final_state.txt").read_text().strip() == final

    def test_state_diagnostics_go_to_stderr(self, tmp_path, capsys):
        run(["run", "--state", "#bs=999", "--epochs", "0",
             "--out", str(tmp_path / "out")])
        assert "bs" in capsys.readouterr().err


class TestExitCodes:
    def test_malformed_state_exits_2(self, tmp_path, capsys):
        code = run(["run", "--state", "#garbage", "--out", str(tmp_path / "o")])
        assert code == 2
        assert "garbage" in capsys.readouterr().err

    def test_epochs_out_of_bounds_exits_2(self, tmp_path):
        assert run(["run", "--epochs", "-1", "--out", str(tmp_path / "o")]) == 2
        assert run(["run", "--epochs", "100001", "--out", str(tmp_path / "o")]) == 2

    def test_unknown_emit_exits_2(self, tmp_path):
        assert run(["run", "--emit", "charts", "--out", str(tmp_path / "o")]) == 2

    def test_filesystem_failure_exits_3(self, tmp_path):
        blocker = tmp_path / "blocker"
        blocker.write_text("a file, not a directory")
        assert run(["run", "--epochs", "0", "--out", str(blocker)]) == 3


class TestPresets:
    def test_all_presets_decode_cleanly(self):
        for name, state in PRESETS.items():
            result = decode(state)
            assert result.diagnostics == [], name

    def test_preset_scenarios(self):
        assert decode(PRESETS["fig1"]).config.dataset == "circle"
        assert len(decode(PRESETS["fig1"]).config.hidden_layer_sizes) == 1
        assert decode(PRESETS["fig2"]).config.dataset == "spiral"
        assert len(decode(PRESETS["fig2"]).config.enabled_features) == 7
        assert len(decode(PRESETS["fig3"]).config.hidden_layer_sizes) >= 3
        assert decode(PRESETS["fig4"]).config.learning_rate == 10.0

    def test_preset_flag_selects_state(self, tmp_path, capsys):
        out = tmp_path / "out"
        assert run(["run", "--preset", "fig1", "--epochs", "0", "--out", str(out)]) == 0
        assert "ds=circle" in (out / "final_state.txt").read_text()
