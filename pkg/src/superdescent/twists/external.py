"""Client side of the line-oriented external-solver protocol.

One subprocess per request. The request is a single JSON line on stdin; the
adapter answers with one JSON line ``{"points": [[x, y], ...], "complete": bool}``
on stdout. Integers may be JSON numbers or decimal strings.
"""

from __future__ import annotations

import json
import os
import shlex
import subprocess
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from ..errors import AdapterProtocolError, AdapterTimeout, AdapterUnavailable
from .equations import ELLIPTIC_CUBIC, TwistEquation, TwistOutcome

ADAPTER_ENV = "SUPERDESCENT_ADAPTER"


@dataclass(frozen=True)
class ExternalAdapterConfig:
    command: tuple[str, ...]
    timeout: Optional[float] = None

    @classmethod
    def from_string(cls, command: Union[str, Sequence[str]], timeout: Optional[float] = None):
        if isinstance(command, str):
            command = shlex.split(command)
        return cls(tuple(command), timeout)

    @classmethod
    def from_env(cls, timeout: Optional[float] = None) -> Optional["ExternalAdapterConfig"]:
        value = os.environ.get(ADAPTER_ENV)
        return cls.from_string(value, timeout) if value else None

    @property
    def ident(self) -> str:
        return " ".join(self.command)


def _as_int(v) -> int:
    if isinstance(v, bool):
        raise AdapterProtocolError(f"expected an integer, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v, 10)
        except ValueError:
            pass
    raise AdapterProtocolError(f"expected an integer, got {v!r}")


def parse_response(line: str) -> tuple[list[tuple[int, int]], bool]:
    try:
        data = json.loads(line)
    except json.JSONDecodeError as exc:
        raise AdapterProtocolError(f"malformed adapter response {line!r}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("points"), list):
        raise AdapterProtocolError(f"adapter response lacks a points list: {line!r}")
    points = []
    for item in data["points"]:
        if not isinstance(item, list) or len(item) != 2:
            raise AdapterProtocolError(f"bad point {item!r}")
        points.append((_as_int(item[0]), _as_int(item[1])))
    complete = data.get("complete", False)
    if not isinstance(complete, bool):
        raise AdapterProtocolError(f"complete must be a boolean, got {complete!r}")
    return points, complete


def call_adapter(adapter: ExternalAdapterConfig, request_line: str) -> str:
    try:
        proc = subprocess.run(
            adapter.command,
            input=request_line + "\n",
            capture_output=True,
            text=True,
            timeout=adapter.timeout,
        )
    except FileNotFoundError as exc:
        raise AdapterUnavailable(f"adapter not found: {adapter.ident}") from exc
    except PermissionError as exc:
        raise AdapterUnavailable(f"adapter not executable: {adapter.ident}") from exc
    except subprocess.TimeoutExpired as exc:
        raise AdapterTimeout(f"adapter exceeded {adapter.timeout}s") from exc
    if proc.returncode != 0:
        raise AdapterUnavailable(
            f"adapter exited with status {proc.returncode}: {proc.stderr.strip()[:200]}"
        )
    lines = [ln for ln in proc.stdout.splitlines() if ln.strip()]
    if not lines:
        raise AdapterProtocolError("adapter produced no response line")
    return lines[0]


def solve_twist_external(t: TwistEquation, adapter: ExternalAdapterConfig) -> TwistOutcome:
    """Ask the adapter for the integer points of the twist.

    Elliptic twists are sent in Weierstrass form; a returned point (a, b) on
    E_d contributes a/d (when d | a) as a verified candidate and a itself as
    an unverified extra candidate.
    """
    points, complete = parse_response(call_adapter(adapter, t.request_line()))
    xs: set[int] = set()
    extras: set[int] = set()
    for a, _ in points:
        if t.kind == ELLIPTIC_CUBIC:
            extras.add(a)
            if a % t.d == 0 and t.direct_y(a // t.d) is not None:
                xs.add(a // t.d)
        elif t.direct_y(a) is not None:
            xs.add(a)
        else:
            raise AdapterProtocolError(f"adapter point x={a} is not on {t.describe()}")
    return TwistOutcome(
        t,
        tuple(sorted(xs)),
        complete=complete,
        backend="external",
        diagnostics=(f"adapter: {adapter.ident}",),
        extra_candidates=tuple(sorted(extras - xs)),
    )
