"""Reference external evaluator: serves the sphere function over the
nawoa-extobj line protocol. Run with ``python -m whaleopt.sphere_eval``.

Kept dependency-free on purpose; it doubles as the template for writing
evaluators in any language.
"""

import json
import sys


def main() -> int:
    out = sys.stdout
    out.write(json.dumps({"protocol": "nawoa-extobj", "version": 1}) + "\n")
    out.flush()
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        try:
            request = json.loads(line)
            request_id = request["id"]
        except (json.JSONDecodeError, KeyError, TypeError):
            continue
        try:
            x = [float(v) for v in request["x"]]
            total = 0.0
            for v in x:
                total += v * v
            response = {"id": request_id, "fitness": total}
        except Exception as exc:
            response = {"id": request_id, "error": str(exc)}
        out.write(json.dumps(response) + "\n")
        out.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
