"""Command-line client for the service.

By default each command runs the HTTP app in-process (no network, no
server to start); ``--server URL`` points the same client at a running
instance instead.  Reports are re-serialized with one canonical renderer
so identical invocations emit identical bytes either way.

Exit codes: 0 ok, 1 verification failure, 2 invalid input,
3 no-maximal-minors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

import httpx

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_NO_MAXIMAL_MINORS = 3

_CODE_TO_EXIT = {
    "no_maximal_minors": EXIT_NO_MAXIMAL_MINORS,
    "self_check_failed": EXIT_VERIFICATION_FAILED,
}


def canonical_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _emit_error(code: str, message: str) -> None:
    sys.stderr.write(canonical_json({"error": {"code": code, "message": message}}))


class _JsonArgumentParser(argparse.ArgumentParser):
    """Argparse that reports usage problems as the standard error JSON."""

    def error(self, message):
        _emit_error("usage", message)
        raise SystemExit(EXIT_INVALID_INPUT)


class _InProcessClient:
    """Drives the ASGI app directly, one event loop per request."""

    def __init__(self):
        from .api import app

        self._app = app

    def request(self, method: str, path: str, params=None, json=None) -> httpx.Response:
        import anyio

        async def go():
            transport = httpx.ASGITransport(app=self._app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://minor-spread.local", timeout=600.0
            ) as client:
                return await client.request(method, path, params=params, json=json)

        return anyio.run(go)

    def get(self, path: str, params=None) -> httpx.Response:
        return self.request("GET", path, params=params)

    def post(self, path: str, json=None) -> httpx.Response:
        return self.request("POST", path, json=json)

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def _client(server: Optional[str]):
    if server:
        return httpx.Client(base_url=server, timeout=600.0)
    return _InProcessClient()


def _load_spec_doc(args) -> dict:
    if args.spec is not None:
        try:
            with open(args.spec, encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            _emit_error("invalid_spec", f"cannot read spec file {args.spec}: {exc}")
            raise SystemExit(EXIT_INVALID_INPUT)
    inline = {"m": args.m, "n": args.n, "r": args.r, "u": args.u}
    if any(v is None for v in inline.values()) or args.a is None or args.b is None:
        _emit_error(
            "usage", "provide --spec FILE or all of --m --n --r --a --b --u"
        )
        raise SystemExit(EXIT_INVALID_INPUT)
    inline["a"] = args.a
    inline["b"] = args.b
    return inline


def _int_list(text: str) -> list:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_spec_arguments(parser) -> None:
    parser.add_argument("--spec", metavar="FILE", help="spec document (JSON file)")
    parser.add_argument("--m", type=int, help="number of rows")
    parser.add_argument("--n", type=int, help="number of columns")
    parser.add_argument("--r", type=int, help="length of the bound sequences")
    parser.add_argument("--a", type=_int_list, metavar="A1,A2,...", help="row bounds")
    parser.add_argument("--b", type=_int_list, metavar="B1,B2,...", help="column bounds")
    parser.add_argument("--u", type=int, help="row cutoff")


def _add_common_arguments(parser) -> None:
    parser.add_argument("--server", metavar="URL", help="use a running service instead of in-process")
    parser.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = _JsonArgumentParser(prog="minor-spread", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="closed-form invariants for one spec")
    _add_spec_arguments(compute)
    compute.add_argument(
        "--with-oracle", action="store_true", help="also run the rank oracles and agreement flags"
    )
    _add_common_arguments(compute)

    example = sub.add_parser("example", help="reproduce the bundled reference case")
    _add_common_arguments(example)

    hasse = sub.add_parser("hasse", help="emit a Hasse diagram as DOT")
    _add_spec_arguments(hasse)
    hasse.add_argument(
        "--which",
        choices=["theta", "d1", "d2", "p", "p1", "p2"],
        default="theta",
        help="which poset to render",
    )
    hasse.add_argument("--out", metavar="PATH", help="write the DOT file here (otherwise stdout)")
    hasse.add_argument("--max-nodes", type=int, default=500, help="rendering size cap")
    _add_common_arguments(hasse)

    verify = sub.add_parser("verify", help="run the oracle battery on one spec")
    _add_spec_arguments(verify)
    verify.add_argument("--d-max", type=int, default=4, help="degrees for the Hilbert checks")
    verify.add_argument(
        "--mutate",
        metavar="TARGET",
        help="negative control: corrupt a closed form (spread_formula or reduction_formula)",
    )
    _add_common_arguments(verify)

    sweep = sub.add_parser("sweep", help="exhaustively check every spec in a box")
    sweep.add_argument("--max-m", type=int, default=5)
    sweep.add_argument("--max-n", type=int, default=5)
    sweep.add_argument("--jobs", type=int, default=1, help="parallel workers")
    _add_common_arguments(sweep)

    return parser


def _handle_error_response(response: httpx.Response) -> int:
    try:
        doc = response.json()
        code = doc["error"]["code"]
    except Exception:
        _emit_error("transport", f"unexpected response (HTTP {response.status_code})")
        return EXIT_INVALID_INPUT
    sys.stderr.write(canonical_json(doc))
    return _CODE_TO_EXIT.get(code, EXIT_INVALID_INPUT)


def _request(client: httpx.Client, method: str, path: str, payload=None) -> httpx.Response:
    if method == "GET":
        return client.get(path, params=payload)
    return client.post(path, json=payload)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with _client(args.server) as client:
            return _dispatch(args, client)
    except httpx.RequestError as exc:
        _emit_error("transport", str(exc))
        return EXIT_INVALID_INPUT


def _dispatch(args, client: httpx.Client) -> int:
    if args.command == "compute":
        payload = {
            "spec": _load_spec_doc(args),
            "with_oracle": args.with_oracle,
            "timing": args.timing,
        }
        response = _request(client, "POST", "/compute", payload)
        if response.status_code != 200:
            return _handle_error_response(response)
        sys.stdout.write(canonical_json(response.json()))
        return EXIT_OK

    if args.command == "example":
        response = _request(client, "GET", "/example", {"timing": args.timing})
        if response.status_code != 200:
            return _handle_error_response(response)
        sys.stdout.write(canonical_json(response.json()))
        return EXIT_OK

    if args.command == "hasse":
        payload = {
            "spec": _load_spec_doc(args),
            "which": args.which,
            "max_nodes": args.max_nodes,
        }
        response = _request(client, "POST", "/hasse", payload)
        if response.status_code != 200:
            return _handle_error_response(response)
        doc = response.json()
        if args.out:
            try:
                with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                    fh.write(doc["dot"])
            except OSError as exc:
                _emit_error("io_error", f"cannot write {args.out}: {exc}")
                return EXIT_INVALID_INPUT
            summary = {key: doc[key] for key in doc if key != "dot"}
            summary["out"] = args.out
            sys.stdout.write(canonical_json(summary))
        else:
            sys.stdout.write(doc["dot"])
        return EXIT_OK

    if args.command == "verify":
        payload = {
            "spec": _load_spec_doc(args),
            "d_max": args.d_max,
            "mutate": args.mutate,
            "timing": args.timing,
        }
        response = _request(client, "POST", "/verify", payload)
        if response.status_code != 200:
            return _handle_error_response(response)
        doc = response.json()
        sys.stdout.write(canonical_json(doc))
        return EXIT_OK if doc["passed"] else EXIT_VERIFICATION_FAILED

    if args.command == "sweep":
        payload = {
            "max_m": args.max_m,
            "max_n": args.max_n,
            "jobs": args.jobs,
            "timing": args.timing,
        }
        response = _request(client, "POST", "/sweep", payload)
        if response.status_code != 200:
            return _handle_error_response(response)
        doc = response.json()
        sys.stdout.write(canonical_json(doc))
        return EXIT_OK if doc["passed"] else EXIT_VERIFICATION_FAILED

    raise AssertionError(f"unhandled command {args.command!r}")


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
