"""External black-box objectives served by a child process.

Wire format: newline-delimited JSON over the child's stdin/stdout, one
request in flight at a time. The child announces itself with
``{"protocol": "nawoa-extobj", "version": 1}`` on its first line, then
answers ``{"id": n, "x": [...]}`` requests with ``{"id": n, "fitness": f}``
or ``{"id": n, "error": "..."}``. Floats ride on JSON's shortest
round-trip decimal form, so values cross the pipe bit-exactly.
"""

from __future__ import annotations

import json
import queue
import subprocess
import threading
from dataclasses import dataclass, field

import numpy as np

from .core import EvaluationError, Objective, SearchSpace

PROTOCOL_NAME = "nawoa-extobj"
PROTOCOL_VERSION = 1


class ExternalEvaluatorError(RuntimeError):
    """Base class for evaluator-session failures."""


class SpawnError(ExternalEvaluatorError):
    """The evaluator command could not be started."""


class HandshakeError(ExternalEvaluatorError):
    """The child's first line was missing, late, or not a valid handshake."""


class VersionMismatchError(HandshakeError):
    """The child speaks a different protocol version."""


class EvaluationTimeoutError(ExternalEvaluatorError):
    """No response to a request within the configured timeout."""

    def __init__(self, request_id: int, timeout: float):
        super().__init__(f"request {request_id} timed out after {timeout}s")
        self.request_id = request_id


class SessionDeadError(ExternalEvaluatorError):
    """The child exited and the restart budget is exhausted."""


@dataclass
class ExternalObjectiveDescriptor:
    """How to launch and talk to an external evaluator."""

    command: list[str]
    space: SearchSpace
    timeout: float = 30.0
    max_restarts: int = 1

    def __post_init__(self):
        if not self.command:
            raise ValueError("command must not be empty")
        if self.timeout <= 0:
            raise ValueError("timeout must be positive")
        if self.max_restarts < 0:
            raise ValueError("max_restarts must be >= 0")


class _ChildProcess:
    """One running evaluator with a background line reader."""

    def __init__(self, command: list[str]):
        try:
            self.proc = subprocess.Popen(
                command,
                stdin=subprocess.PIPE,
                stdout=subprocess.PIPE,
                text=True,
                bufsize=1,
            )
        except OSError as exc:
            raise SpawnError(f"cannot start evaluator {command!r}: {exc}") from exc
        self._lines: queue.Queue = queue.Queue()
        self._reader = threading.Thread(target=self._pump, daemon=True)
        self._reader.start()

    def _pump(self):
        for line in self.proc.stdout:
            self._lines.put(line)
        self._lines.put(None)  # EOF marker

    def read_line(self, timeout: float) -> str | None:
        """Next stdout line, or None on EOF; raises queue.Empty on timeout."""
        return self._lines.get(timeout=timeout)

    def write_line(self, line: str) -> None:
        self.proc.stdin.write(line + "\n")
        self.proc.stdin.flush()

    def alive(self) -> bool:
        return self.proc.poll() is None

    def kill(self):
        if self.alive():
            self.proc.kill()
        try:
            self.proc.wait(timeout=5)
        except subprocess.TimeoutExpired:
            pass


class EvaluatorSession:
    """A live protocol session; create via :func:`spawn_evaluator`.

    Request ids increase monotonically for the lifetime of the session,
    across restarts. One request is in flight at a time; a response must
    echo the pending request's id.
    """

    def __init__(self, descriptor: ExternalObjectiveDescriptor):
        self.descriptor = descriptor
        self._next_id = 0
        self._restarts_left = descriptor.max_restarts
        self._child = self._start()

    # -- lifecycle -----------------------------------------------------

    def _start(self) -> _ChildProcess:
        child = _ChildProcess(self.descriptor.command)
        try:
            line = child.read_line(timeout=self.descriptor.timeout)
        except queue.Empty:
            child.kill()
            raise HandshakeError(
                f"no handshake within {self.descriptor.timeout}s from {self.descriptor.command!r}"
            ) from None
        if line is None:
            child.kill()
            raise HandshakeError("evaluator exited before sending a handshake")
        try:
            header = json.loads(line)
        except json.JSONDecodeError:
            child.kill()
            raise HandshakeError(f"first line is not valid JSON: {line!r}") from None
        if not isinstance(header, dict) or header.get("protocol") != PROTOCOL_NAME:
            child.kill()
            raise HandshakeError(f"unexpected handshake {header!r}")
        if header.get("version") != PROTOCOL_VERSION:
            child.kill()
            raise VersionMismatchError(
                f"protocol version {header.get('version')!r}, expected {PROTOCOL_VERSION}"
            )
        return child

    def close(self):
        if self._child is not None:
            self._child.kill()
            self._child = None

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()

    # -- evaluation ----------------------------------------------------

    def evaluate(self, x) -> float:
        """Send one request and wait for its response.

        A child that died is respawned (up to max_restarts over the
        session) and the pending request replayed once per death.
        """
        if self._child is None:
            raise SessionDeadError("session is closed")
        x = np.asarray(x, dtype=float)
        request_id = self._next_id
        self._next_id += 1
        payload = json.dumps({"id": request_id, "x": [float(v) for v in x]})

        while True:
            try:
                return self._roundtrip(request_id, payload)
            except _ChildDied:
                if self._restarts_left <= 0:
                    raise SessionDeadError(
                        f"evaluator exited on request {request_id}; restart budget exhausted"
                    ) from None
                self._restarts_left -= 1
                self._child.kill()
                self._child = self._start()

    def _roundtrip(self, request_id: int, payload: str) -> float:
        try:
            self._child.write_line(payload)
        except (BrokenPipeError, OSError):
            raise _ChildDied() from None
        try:
            line = self._child.read_line(timeout=self.descriptor.timeout)
        except queue.Empty:
            self._child.kill()
            raise EvaluationTimeoutError(request_id, self.descriptor.timeout) from None
        if line is None:
            raise _ChildDied()
        try:
            response = json.loads(line)
        except json.JSONDecodeError:
            raise EvaluationError(f"evaluator sent invalid JSON: {line!r}") from None
        if response.get("id") != request_id:
            raise EvaluationError(
                f"response id {response.get('id')!r} does not match pending request {request_id}"
            )
        if "error" in response:
            raise EvaluationError(f"evaluator error for request {request_id}: {response['error']}")
        fitness = response.get("fitness")
        if not isinstance(fitness, (int, float)):
            raise EvaluationError(f"response lacks a numeric fitness: {line!r}")
        return float(fitness)


class _ChildDied(Exception):
    """Internal: the child process went away mid-request."""


def spawn_evaluator(descriptor: ExternalObjectiveDescriptor) -> EvaluatorSession:
    """Start the child process and complete the handshake."""
    return EvaluatorSession(descriptor)


def external_objective(session: EvaluatorSession, name: str = "external", budget: int | None = None) -> Objective:
    """Adapt a live session to the in-process objective interface."""
    return Objective(session.descriptor.space, session.evaluate, name=name, budget=budget)
