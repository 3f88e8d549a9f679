"""Headless runner: execute a state string for N epochs and emit artifacts.

The default invocation runs a session non-interactively and writes any of:

  losses.csv       epoch,train_loss,test_loss per completed epoch
  unit_<id>.ppm    one plain-PPM heatmap per unit at --heatmap-res
  final_state.txt  the canonical state string after the run
  frames.jsonl     one frame document per epoch (without heatmaps)

Outputs are byte-deterministic: the same invocation always produces the
same files.  Exit codes: 0 success, 2 unreadable state string, 3
filesystem failure.

Two extra subcommands expose the protocol transports: ``pipe`` speaks one
command document per stdin line, and ``serve`` runs the HTTP transport for
browser clients (see playnn.server).
"""

import argparse
import sys
from pathlib import Path

from . import __version__
from .heatmap import colorize, sample_all_units, to_ppm
from .presets import PRESETS
from .session import Command, Session, run_pipe, serialize_frame
from .statecodec import StateDecodeError
from .trainer import loss_series_csv

EXIT_OK = 0
EXIT_BAD_STATE = 2
EXIT_FS_FAILURE = 3

MAX_EPOCHS = 100_000

EMIT_CHOICES = ("losses", "heatmaps", "final_state", "frames")
DEFAULT_EMIT = "losses,final_state"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="playnn",
        description="Deterministic playground engine for tiny neural nets on 2-D data.")
    parser.add_argument("--version", action="version", version=f"playnn {__version__}")
    sub = parser.add_subparsers(dest="subcommand")

    run = sub.add_parser("run", help="run a session headlessly and emit artifacts")
    run.add_argument("--state", default="#", help="state string (URL-fragment format)")
    run.add_argument("--preset", choices=sorted(PRESETS),
                     help="use a shipped scenario instead of --state")
    run.add_argument("--epochs", type=int, default=100, metavar="N",
                     help="number of epochs to run (default 100)")
    run.add_argument("--out", default="out", metavar="DIR",
                     help="output directory (default ./out)")
    run.add_argument("--heatmap-res", type=int, default=10, metavar="N",
                     help="heatmap sampling resolution (default 10)")
    run.add_argument("--emit", default=DEFAULT_EMIT, metavar="LIST",
                     help=f"comma list from {{{','.join(EMIT_CHOICES)}}} "
                          f"(default {DEFAULT_EMIT})")

    pipe = sub.add_parser("pipe", help="speak the command/frame protocol on stdio")
    pipe.add_argument("--state", default="#", help="initial state string")

    serve = sub.add_parser("serve", help="serve the HTTP transport (and the UI)")
    serve.add_argument("--state", default="#", help="initial state string")
    serve.add_argument("--port", type=int, default=8040)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--static-dir", default=None,
                       help="directory of UI files to serve at /")
    return parser


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # Bare flag usage (`playnn --state ... --epochs ...`) means `run`.
    if not argv or argv[0] not in ("run", "pipe", "serve", "-h", "--help", "--version"):
        argv = ["run"] + argv
    args = build_parser().parse_args(argv)

    if args.subcommand == "pipe":
        return _cmd_pipe(args)
    if args.subcommand == "serve":
        from .server import serve_forever
        return serve_forever(args.state, args.host, args.port, args.static_dir)
    return _cmd_run(args)


def _cmd_pipe(args) -> int:
    try:
        session = Session(args.state)
    except StateDecodeError as exc:
        print(f"playnn: {exc}", file=sys.stderr)
        return EXIT_BAD_STATE
    run_pipe(session, sys.stdin, sys.stdout)
    return EXIT_OK


def _cmd_run(args) -> int:
    state_string = PRESETS[args.preset] if args.preset else args.state
    if args.epochs < 0 or args.epochs > MAX_EPOCHS:
        print(f"playnn: --epochs must be in [0, {MAX_EPOCHS}]", file=sys.stderr)
        return EXIT_BAD_STATE

    emit = [part for part in args.emit.split(",") if part != ""]
    unknown = [part for part in emit if part not in EMIT_CHOICES]
    if unknown:
        print(f"playnn: unknown --emit entries {unknown}", file=sys.stderr)
        return EXIT_BAD_STATE

    try:
        session = Session(state_string)
    except StateDecodeError as exc:
        print(f"playnn: {exc}", file=sys.stderr)
        return EXIT_BAD_STATE
    for note in session.diagnostics:
        print(f"playnn: state: {note}", file=sys.stderr)

    try:
        out_dir = Path(args.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        frames_path = out_dir / "frames.jsonl"
        frames_file = frames_path.open("w") if "frames" in emit else None
        try:
            for _ in range(args.epochs):
                frame = session.handle(Command("step"))
                if frames_file is not None:
                    frames_file.write(serialize_frame(frame) + "\n")
        finally:
            if frames_file is not None:
                frames_file.close()

        if "losses" in emit:
            (out_dir / "losses.csv").write_text(
                loss_series_csv(session.state.loss_series))
        if "heatmaps" in emit:
            grids = sample_all_units(session.state.net, args.heatmap_res)
            for uid in session.state.net.unit_ids():
                path = out_dir / f"unit_{uid}.ppm"
                path.write_text(to_ppm(colorize(grids[uid])))
        if "final_state" in emit:
            (out_dir / "final_state.txt").write_text(
                serialize_state(session) + "\n")
    except OSError as exc:
        print(f"playnn: filesystem failure: {exc}", file=sys.stderr)
        return EXIT_FS_FAILURE
    return EXIT_OK


def serialize_state(session: Session) -> str:
    from .statecodec import encode
    return encode(session.config, session.ui_hidden)


if __name__ == "__main__":
    raise SystemExit(main())
