"""Transports: fixture replay, hashing, and the live HTTP client against a stub server."""

import json
import threading
from concurrent.futures import ThreadPoolExecutor
from http.server import BaseHTTPRequestHandler, HTTPServer

import pytest

from scaffoldc import (
    EmptyResponse,
    FixtureMiss,
    FixtureTransport,
    HttpTransport,
    TemplateId,
    TransportError,
    complete,
    get_template,
    prompt_fingerprint,
    record_fixture,
    render,
)


def rendered_example():
    return render(
        get_template(TemplateId.WORKFLOW_ANALYSIS),
        {"USER TASK DESCRIPTION": "UV unwrap a cube"},
    )


def test_fingerprint_is_16_hex_chars_and_content_sensitive():
    a = prompt_fingerprint("one")
    b = prompt_fingerprint("two")
    assert len(a) == 16 and int(a, 16) >= 0
    assert a != b
    assert prompt_fingerprint("one") == a


def test_replay_returns_recorded_response_verbatim(tmp_path):
    rendered = rendered_example()
    record_fixture(tmp_path, rendered.text, "recorded answer\nwith two lines")
    transport = FixtureTransport(directory=tmp_path)
    assert transport.send(rendered.text) == "recorded answer\nwith two lines"


def test_replay_miss_names_the_hash(tmp_path):
    rendered = rendered_example()
    transport = FixtureTransport(directory=tmp_path)
    with pytest.raises(FixtureMiss) as excinfo:
        transport.send(rendered.text)
    assert excinfo.value.prompt_hash == prompt_fingerprint(rendered.text)


def test_editing_the_prompt_invalidates_the_recording(tmp_path):
    rendered = rendered_example()
    record_fixture(tmp_path, rendered.text, "answer")
    transport = FixtureTransport(directory=tmp_path)
    with pytest.raises(FixtureMiss):
        transport.send(rendered.text + " edited")


def test_complete_wraps_transcript(tmp_path):
    rendered = rendered_example()
    record_fixture(tmp_path, rendered.text, "three stages here")
    transcript = complete(rendered, FixtureTransport(directory=tmp_path, model_tag="replay"))
    assert transcript.response == "three stages here"
    assert transcript.model_tag == "replay"
    assert transcript.rendered is rendered
    assert transcript.timestamp  # present, format is the transport's business


def test_blank_recording_raises_empty_response(tmp_path):
    rendered = rendered_example()
    record_fixture(tmp_path, rendered.text, "   \n")
    with pytest.raises(EmptyResponse):
        complete(rendered, FixtureTransport(directory=tmp_path))


def test_fixture_transport_is_safe_for_concurrent_sends(tmp_path):
    rendered = rendered_example()
    record_fixture(tmp_path, rendered.text, "same answer")
    transport = FixtureTransport(directory=tmp_path)
    with ThreadPoolExecutor(max_workers=8) as pool:
        results = list(pool.map(lambda _: transport.send(rendered.text), range(16)))
    assert results == ["same answer"] * 16


# --- live endpoint against a local stub ----------------------------------------


class _StubHandler(BaseHTTPRequestHandler):
    behavior = "ok"
    last_request: dict = {}

    def do_POST(self):
        length = int(self.headers.get("Content-Length", "0"))
        _StubHandler.last_request = {
            "body": json.loads(self.rfile.read(length).decode("utf-8")),
            "auth": self.headers.get("Authorization", ""),
        }
        if _StubHandler.behavior == "http500":
            self.send_response(500)
            self.end_headers()
            self.wfile.write(b"boom")
            return
        if _StubHandler.behavior == "junk":
            payload = b"not json"
        else:
            payload = json.dumps(
                {"choices": [{"message": {"content": "stubbed completion"}}]}
            ).encode("utf-8")
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.end_headers()
        self.wfile.write(payload)

    def log_message(self, *args):
        pass


@pytest.fixture()
def stub_server():
    server = HTTPServer(("127.0.0.1", 0), _StubHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_port}/v1/chat/completions"
    server.shutdown()
    thread.join()


def test_live_transport_round_trip(stub_server):
    _StubHandler.behavior = "ok"
    transport = HttpTransport(
        base_url=stub_server, model_tag="gpt-4o", api_key="sk-test",
        params={"temperature": 0.2},
    )
    assert transport.send("hello") == "stubbed completion"
    body = _StubHandler.last_request["body"]
    assert body["model"] == "gpt-4o"
    assert body["messages"] == [{"role": "user", "content": "hello"}]
    assert body["temperature"] == 0.2
    assert _StubHandler.last_request["auth"] == "Bearer sk-test"


def test_live_transport_surfaces_http_500(stub_server):
    _StubHandler.behavior = "http500"
    transport = HttpTransport(base_url=stub_server, model_tag="gpt-4o", api_key="sk-test")
    with pytest.raises(TransportError) as excinfo:
        transport.send("hello")
    assert excinfo.value.status == 500


def test_live_transport_rejects_non_completion_reply(stub_server):
    _StubHandler.behavior = "junk"
    transport = HttpTransport(base_url=stub_server, model_tag="gpt-4o", api_key="sk-test")
    with pytest.raises(TransportError):
        transport.send("hello")


def test_unreachable_endpoint_is_a_transport_error():
    transport = HttpTransport(
        base_url="http://127.0.0.1:9/nothing", model_tag="gpt-4o",
        api_key="sk-test", timeout=0.5,
    )
    with pytest.raises(TransportError):
        transport.send("hello")
