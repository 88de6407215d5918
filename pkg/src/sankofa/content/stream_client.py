"""Client for a local completion-stream service.

Wire format, one frame per line over a stream socket:

    T <utf8-token>      one generated token (text after the first space,
                        verbatim)
    DONE <finish_reason>

The request is sent as a single JSON line before reading frames.
Endpoint syntax: ``tcp:<host>:<port>`` or ``unix:<path>``.  Named model
backends (inkubalm, lugha-llama, ...) are configurations of this client,
not bundled weights.
"""

import json
import socket

from sankofa.content.backends import BackendUnavailable, ModelBackendDescriptor


class ProtocolError(Exception):
    pass


def _parse_endpoint(endpoint: str):
    kind, _, rest = endpoint.partition(":")
    if kind == "tcp":
        host, _, port = rest.rpartition(":")
        return socket.AF_INET, (host, int(port))
    if kind == "unix":
        return socket.AF_UNIX, rest
    raise ValueError(f"unsupported endpoint {endpoint!r}")


class SocketBackend:
    """Streams tokens from a line-frame completion service."""

    def __init__(self, descriptor: ModelBackendDescriptor, connect_timeout_s: float = 5.0):
        if not descriptor.endpoint:
            raise ValueError(f"backend {descriptor.name!r} needs an endpoint")
        self.descriptor = descriptor
        self.connect_timeout_s = connect_timeout_s

    def stream_tokens(self, request):
        family, address = _parse_endpoint(self.descriptor.endpoint)
        try:
            sock = socket.socket(family, socket.SOCK_STREAM)
            sock.settimeout(self.connect_timeout_s)
            sock.connect(address)
        except OSError as exc:
            raise BackendUnavailable(
                f"cannot reach {self.descriptor.name!r} at {self.descriptor.endpoint}: {exc}"
            ) from exc
        try:
            sock.settimeout(None)
            header = {
                "template_id": request.template_id,
                "language": request.language,
                "subject": request.subject,
                "grade": request.grade,
                "max_tokens": request.max_tokens,
                "seed": request.seed,
            }
            sock.sendall((json.dumps(header) + "\n").encode("utf-8"))
            reader = sock.makefile("r", encoding="utf-8", newline="\n")
            for line in reader:
                line = line.rstrip("\n")
                tag, _, rest = line.partition(" ")
                if tag == "T":
                    yield rest
                elif tag == "DONE":
                    return
                else:
                    raise ProtocolError(f"unexpected frame {line!r}")
            raise ProtocolError("connection closed without DONE frame")
        finally:
            sock.close()
