"""nawoa-extobj protocol server: stdin/stdout JSON lines.

First line out is the handshake; every request {"id": n, "x": [...]}
gets exactly one response, either {"id": n, "fitness": f} or
{"id": n, "error": "..."}. Malformed requests and training failures
produce error responses; the process stays alive for the next request.
"""

from __future__ import annotations

import json
import sys

from .box import BoxError
from .model import evaluate_vector

PROTOCOL_NAME = "nawoa-extobj"
PROTOCOL_VERSION = 1


def serve(stdin=None, stdout=None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout

    def emit(payload: dict) -> None:
        stdout.write(json.dumps(payload) + "\n")
        stdout.flush()

    emit({"protocol": PROTOCOL_NAME, "version": PROTOCOL_VERSION})
    for line in stdin:
        line = line.strip()
        if not line:
            continue
        try:
            request = json.loads(line)
            request_id = request["id"]
        except (json.JSONDecodeError, KeyError, TypeError):
            # no usable id: report on id -1 rather than dying silently
            emit({"id": -1, "error": f"malformed request line: {line[:200]}"})
            continue
        try:
            fitness, _ = evaluate_vector(request["x"])
            emit({"id": request_id, "fitness": fitness})
        except BoxError as exc:
            emit({"id": request_id, "error": str(exc)})
        except Exception as exc:
            emit({"id": request_id, "error": f"training failed: {exc!r}"})
    return 0
