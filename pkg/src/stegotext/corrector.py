"""Client for an external text corrector spoken to over stdin/stdout.

One request, one response, newline-delimited JSON, UTF-8.  The request
carries the decoded text and the character spans the recovery layer is
unsure about; the corrector may rewrite anything.  Every failure mode
(missing binary, crash, timeout, malformed reply) is non-fatal: the input
text comes back unchanged and a diagnostic is recorded.
"""

from __future__ import annotations

import json
import logging
import shlex
import subprocess

from .errors import CorrectorProtocolError, CorrectorTimeout, CorrectorUnavailable

logger = logging.getLogger(__name__)


def _record(diagnostics: list | None, error: Exception) -> None:
    logger.warning("corrector failed: %s", error)
    if diagnostics is not None:
        diagnostics.append(error)


def correct_external(text: str, uncertain: list[tuple[int, int]], command: str | list[str],
                     timeout: float = 30.0, request_id: int = 1,
                     diagnostics: list | None = None) -> str:
    """Send ``text`` to the corrector process; return its rewrite.

    ``uncertain`` holds [start, end) character offsets (Unicode scalar
    values, not bytes).  On any failure the original text is returned and
    the error is appended to ``diagnostics`` when given.
    """
    argv = shlex.split(command) if isinstance(command, str) else list(command)
    request = {
        "id": request_id,
        "op": "correct",
        "text": text,
        "uncertain": [[int(s), int(e)] for s, e in uncertain],
    }
    payload = (json.dumps(request, ensure_ascii=False) + "\n").encode("utf-8")

    try:
        proc = subprocess.Popen(
            argv,
            stdin=subprocess.PIPE,
            stdout=subprocess.PIPE,
            stderr=subprocess.PIPE,
        )
    except OSError as exc:
        _record(diagnostics, CorrectorUnavailable(f"cannot start {argv[0]!r}: {exc}"))
        return text

    try:
        stdout, stderr = proc.communicate(payload, timeout=timeout)
    except subprocess.TimeoutExpired:
        proc.kill()
        proc.communicate()
        _record(diagnostics, CorrectorTimeout(f"no response within {timeout}s"))
        return text

    if stderr:
        logger.debug("corrector stderr: %s", stderr.decode("utf-8", "replace").strip())

    lines = [ln for ln in stdout.decode("utf-8", "replace").split("\n") if ln.strip()]
    if not lines:
        _record(diagnostics, CorrectorUnavailable(
            f"corrector produced no output (exit status {proc.returncode})"))
        return text
    if len(lines) > 1:
        _record(diagnostics, CorrectorProtocolError(
            f"expected one response line, got {len(lines)}"))
        return text

    try:
        response = json.loads(lines[0])
    except json.JSONDecodeError as exc:
        _record(diagnostics, CorrectorProtocolError(f"response is not JSON: {exc}"))
        return text
    if not isinstance(response, dict) or response.get("id") != request_id:
        _record(diagnostics, CorrectorProtocolError(
            f"response id mismatch (want {request_id}, got {response.get('id') if isinstance(response, dict) else response!r})"))
        return text
    corrected = response.get("text")
    if not isinstance(corrected, str):
        _record(diagnostics, CorrectorProtocolError("response lacks a string 'text' field"))
        return text
    return corrected
