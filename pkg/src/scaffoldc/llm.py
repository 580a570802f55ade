"""Chat-completion transports: a live HTTP client and a recorded-fixture replay.

Fixture files are keyed by the first 16 hex characters of the SHA-256 of the
rendered prompt text, so editing a template invalidates stale recordings
loudly (a FixtureMiss) instead of silently replaying an old answer. Replay
mode performs no network activity at all.
"""

import hashlib
import json
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Protocol

from .prompts import RenderedPrompt

#: Environment variable holding the live-endpoint credential.
API_KEY_ENV = "SCAFFOLD_LLM_API_KEY"


class TransportError(RuntimeError):
    """Network or HTTP failure; carries the HTTP status when one exists."""

    def __init__(self, message: str, status: int | None = None):
        super().__init__(message)
        self.status = status


class FixtureMiss(LookupError):
    """No recorded response exists for a rendered prompt."""

    def __init__(self, prompt_hash: str, directory: str):
        super().__init__(f"no recorded response {prompt_hash} in {directory}")
        self.prompt_hash = prompt_hash


class EmptyResponse(RuntimeError):
    """The endpoint or fixture produced an empty response body."""


def prompt_fingerprint(text: str) -> str:
    """Stable fixture key for a rendered prompt: sha256 hex, first 16 chars."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class LlmTranscript:
    rendered: RenderedPrompt
    response: str
    model_tag: str
    timestamp: str


class LlmTransport(Protocol):
    """The one effectful boundary of the pipeline; must be safe for concurrent calls."""

    model_tag: str

    def send(self, text: str) -> str: ...


@dataclass(frozen=True)
class FixtureTransport:
    """Replays recorded responses from a directory, one file per prompt hash."""

    directory: Path
    model_tag: str = "fixture"

    def send(self, text: str) -> str:
        key = prompt_fingerprint(text)
        path = Path(self.directory) / key
        if not path.is_file():
            raise FixtureMiss(key, str(self.directory))
        return path.read_text(encoding="utf-8")


def record_fixture(directory: Path, text: str, response: str) -> Path:
    """Store a response under the rendered text's fingerprint; returns the file path."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / prompt_fingerprint(text)
    path.write_text(response, encoding="utf-8", newline="\n")
    return path


@dataclass(frozen=True)
class HttpTransport:
    """POSTs a chat-completion request to a configured base URL.

    ``params`` is merged into the request body untouched (sampling settings
    and the like are configuration, not code).
    """

    base_url: str
    model_tag: str
    api_key: str
    params: dict = field(default_factory=dict)
    timeout: float = 60.0

    def send(self, text: str) -> str:
        body = {
            "model": self.model_tag,
            "messages": [{"role": "user", "content": text}],
        }
        body.update(self.params)
        request = urllib.request.Request(
            self.base_url,
            data=json.dumps(body).encode("utf-8"),
            headers={
                "Content-Type": "application/json",
                "Authorization": f"Bearer {self.api_key}",
            },
            method="POST",
        )
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as reply:
                payload = reply.read().decode("utf-8")
        except urllib.error.HTTPError as exc:
            raise TransportError(
                f"endpoint returned HTTP {exc.code}", status=exc.code
            ) from None
        except urllib.error.URLError as exc:
            raise TransportError(f"endpoint unreachable: {exc.reason}") from None
        try:
            data = json.loads(payload)
            content = data["choices"][0]["message"]["content"]
        except (json.JSONDecodeError, KeyError, IndexError, TypeError):
            raise TransportError("endpoint reply is not a chat completion") from None
        if not isinstance(content, str):
            raise TransportError("endpoint reply content is not text")
        return content


def complete(rendered: RenderedPrompt, transport: LlmTransport) -> LlmTranscript:
    """Send one rendered prompt through the transport and wrap the reply."""
    response = transport.send(rendered.text)
    if not response.strip():
        raise EmptyResponse(
            f"empty response for prompt {prompt_fingerprint(rendered.text)}"
        )
    return LlmTranscript(
        rendered=rendered,
        response=response,
        model_tag=transport.model_tag,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )
