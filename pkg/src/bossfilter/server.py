"""Line-oriented TCP front for a shared store + model.

One request per line, one response per line, UTF-8:

    CHECK <subject>          -> OK label=<spam|ham> boss=<0|1> cos=<c> euc=<e> score=<s>
    LABEL <spam|ham> <subject>  same, and the perceptron trains on that label
    STATS                    -> OK total=... flagged=... spam=... ham=... unknown=... msgs_per_sec=...
    QUIT                     -> OK bye, then the connection closes

cos/euc print with six decimals, or "-" when the subject matched nothing.
Anything else gets "ERR <reason>" and the connection stays open. Connections
share one service; a lock serializes store and model mutation.
"""

from __future__ import annotations

import socketserver
import threading

from .classifier import PerceptronModel
from .hashstore import StoreConfig, SubjectStore
from .labels import Label
from .pipeline import Decision, format_summary, process_subject


class FilterService:
    """Protocol logic and shared state, independent of the socket layer."""

    def __init__(self, store: SubjectStore | None = None, model: PerceptronModel | None = None):
        self.store = store if store is not None else SubjectStore()
        self.model = model if model is not None else PerceptronModel()
        self.lock = threading.Lock()
        self._total = 0
        self._flagged = 0
        self._spam = 0
        self._ham = 0
        self._unknown = 0
        self._busy_us = 0.0

    def check(self, subject: str, label: Label = Label.UNKNOWN) -> Decision:
        decision = process_subject(subject, self.store, self.model, label, lock=self.lock)
        with self.lock:
            self._total += 1
            self._flagged += decision.boss_flag
            if label is Label.SPAM:
                self._spam += 1
            elif label is Label.HAM:
                self._ham += 1
            else:
                self._unknown += 1
            self._busy_us += decision.elapsed_us
        return decision

    def stats_line(self) -> str:
        with self.lock:
            rate = self._total / (self._busy_us / 1e6) if self._busy_us > 0 else 0.0
            return format_summary(
                self._total, self._flagged, self._spam, self._ham, self._unknown, rate
            )

    def handle_line(self, line: str) -> tuple[str, bool]:
        """One request in, (response, close_connection) out. Never raises."""
        line = line.rstrip("\r\n")
        if not line.strip():
            return "ERR empty request", False
        command, _, rest = line.partition(" ")
        if command == "CHECK":
            return _format_decision(self.check(rest)), False
        if command == "LABEL":
            token, _, subject = rest.partition(" ")
            label = Label.parse(token)
            if label is None or label is Label.UNKNOWN:
                return f"ERR bad label {token!r}", False
            return _format_decision(self.check(subject, label)), False
        if command == "STATS":
            if rest:
                return "ERR STATS takes no arguments", False
            return "OK " + self.stats_line(), False
        if command == "QUIT":
            if rest:
                return "ERR QUIT takes no arguments", False
            return "OK bye", True
        return "ERR unknown command", False


def _format_decision(decision: Decision) -> str:
    cos = f"{decision.cosine:.6f}" if decision.cosine is not None else "-"
    euc = f"{decision.euclidean:.6f}" if decision.euclidean is not None else "-"
    return (
        f"OK label={decision.label.value} boss={decision.boss_flag} "
        f"cos={cos} euc={euc} score={decision.score:.6f}"
    )


class _Handler(socketserver.StreamRequestHandler):
    def handle(self) -> None:
        for raw in self.rfile:
            try:
                text = raw.decode("utf-8", errors="replace")
                response, close = self.server.service.handle_line(text)
            except Exception as exc:  # a bad request must not kill the connection
                response, close = f"ERR internal {type(exc).__name__}", False
            self.wfile.write(response.encode("utf-8") + b"\n")
            self.wfile.flush()
            if close:
                break


class FilterServer(socketserver.ThreadingTCPServer):
    """Threaded TCP wrapper; all connections share self.service."""

    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, address: tuple[str, int], service: FilterService | None = None):
        super().__init__(address, _Handler)
        self.service = service if service is not None else FilterService()


def serve(host: str, port: int, config: StoreConfig | None = None) -> None:
    """Run a filter service until interrupted (the CLI entry point)."""
    service = FilterService(store=SubjectStore(config))
    with FilterServer((host, port), service) as server:
        bound_host, bound_port = server.server_address[:2]
        print(f"listening on {bound_host}:{bound_port}", flush=True)
        server.serve_forever()
