"""HTTP transport for the command/frame protocol.

POST /command with a command document in the body returns one frame
document.  While the session is playing, a background thread advances one
epoch per tick (default 50 ms); browser clients poll get_frame to observe
progress.  GET paths serve static UI files when --static-dir is given.

One process hosts one session; commands and ticks serialize on the
session's internal lock.
"""

import json
import threading
import time
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .session import Session

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".json": "application/json",
    ".map": "application/json",
}


class _Handler(BaseHTTPRequestHandler):
    server_version = "playnn"

    def do_POST(self):
        if self.path.rstrip("/") != "/command":
            self._send(404, "text/plain; charset=utf-8", b"unknown endpoint\n")
            return
        length = int(self.headers.get("Content-Length", "0"))
        body = self.rfile.read(length).decode("utf-8", errors="replace")
        reply = self.server.session.handle_json(body)
        self._send(200, "application/json", reply.encode("utf-8"))

    def do_GET(self):
        static_dir = self.server.static_dir
        if static_dir is None:
            self._send(404, "text/plain; charset=utf-8", b"no static dir configured\n")
            return
        rel = self.path.split("?", 1)[0].lstrip("/") or "index.html"
        path = (static_dir / rel).resolve()
        if not str(path).startswith(str(static_dir.resolve())) or not path.is_file():
            self._send(404, "text/plain; charset=utf-8", b"not found\n")
            return
        ctype = _CONTENT_TYPES.get(path.suffix, "application/octet-stream")
        self._send(200, ctype, path.read_bytes())

    def _send(self, status: int, content_type: str, body: bytes):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def log_message(self, format, *args):  # quiet by default
        pass


class PlaygroundServer(ThreadingHTTPServer):
    def __init__(self, address, session: Session, static_dir=None):
        super().__init__(address, _Handler)
        self.session = session
        self.static_dir = Path(static_dir) if static_dir else None
        self._ticker = threading.Thread(target=self._tick_loop, daemon=True)
        self._stopping = threading.Event()
        self._ticker.start()

    def _tick_loop(self):
        while not self._stopping.is_set():
            self.session.tick()
            time.sleep(self.session.tick_seconds)

    def shutdown(self):
        self._stopping.set()
        super().shutdown()


def serve_forever(state: str, host: str, port: int, static_dir=None) -> int:
    session = Session(state)
    server = PlaygroundServer((host, port), session, static_dir)
    print(json.dumps({"serving": f"http://{host}:{port}", "state": state}))
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        server.shutdown()
    return 0
