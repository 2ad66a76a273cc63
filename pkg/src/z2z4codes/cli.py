"""Command-line client for the analysis service.

Every subcommand builds one HTTP request.  By default it is dispatched
to the service in-process through an ASGI transport, so no server needs
to be running; --server sends the same request to a remote instance.

Exit codes: 0 success, 2 parse error, 3 precondition violation,
4 guard exceeded, 1 anything else.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

import httpx

EXIT_CODES = {"parse": 2, "precondition": 3, "guard": 4, "internal": 1}


def _post(server: str | None, path: str, payload: dict) -> httpx.Response:
    async def go() -> httpx.Response:
        if server is None:
            from .service import app

            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://service", timeout=None
            ) as client:
                return await client.post(path, json=payload)
        async with httpx.AsyncClient(base_url=server, timeout=None) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(1) from None


def _finish(response: httpx.Response, *, field: str = "text") -> int:
    """Print the response text (or an error diagnostic) and return the exit code."""
    try:
        body = response.json()
    except json.JSONDecodeError:
        print(f"error: malformed response ({response.status_code})", file=sys.stderr)
        return 1
    if response.status_code == 200:
        print(body[field])
        return 0
    detail = body.get("detail")
    if isinstance(detail, dict) and "type" in detail:
        print(f"error: {detail['message']}", file=sys.stderr)
        return EXIT_CODES.get(detail["type"], 1)
    print(f"error: {detail}", file=sys.stderr)
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z2z4",
        description="Exact analysis of self-dual additive codes over Z2 x Z4",
    )
    parser.add_argument("--server", help="URL of a running service (default: in-process)")
    parser.add_argument("--guard", type=int, help="override the ambient enumeration guard")
    sub = parser.add_subparsers(dest="command", required=True)

    def code_command(name: str, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="code file ('alpha beta' header plus generator rows)")
        return p

    code_command("info", "full analysis report")
    p = code_command("dual", "dual code as a code file")
    p.add_argument("--oracle", action="store_true", help="use the ambient-scan oracle")
    code_command("classify", "self-dual class, separability, antipodality")
    p = code_command("we", "weight enumerator")
    p.add_argument("--variant", choices=("plain", "even", "shadow"), default="plain")
    p.add_argument("--format", choices=("text", "coeffs"), default="text")
    code_command("gleason", "invariant-ring decomposition of the enumerator")
    code_command("shadow", "shadow set and enumerator")
    p = code_command("neighbor", "neighbor through a self-orthogonal vector")
    p.add_argument("vector", help="vector literal, e.g. '11|22'")
    p = sub.add_parser("glue", help="join two Type 0 codes along their coset structure")
    p.add_argument("file_c")
    p.add_argument("file_d")
    p = sub.add_parser("construct", help="catalog code or ladder construction")
    p.add_argument("--name", help="catalog name (C1..C6, Gprime, Gdoubleprime, Hamming8, D4, Eq7)")
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--type", dest="cls", help="Type0, TypeI or TypeII")
    sep = p.add_mutually_exclusive_group()
    sep.add_argument("--separable", dest="separable", action="store_true", default=None)
    sep.add_argument("--non-separable", dest="separable", action="store_false")
    p = sub.add_parser("search", help="census of self-dual codes for a small shape")
    p.add_argument("alpha", type=int)
    p.add_argument("beta", type=int)
    p.add_argument("--type", dest="cls", help="restrict to one class")
    p.add_argument(
        "--dedup-equivalence",
        action="store_true",
        help="collapse codes equal up to column permutations within X and within Y",
    )
    sub.add_parser("verify", help="run the built-in reference-code verification suite")
    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    guard = args.guard

    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0

    if args.command in ("info", "classify", "gleason", "shadow"):
        payload = {"text": _read_file(args.file), "guard": guard}
        return _finish(_post(args.server, f"/{args.command}", payload))
    if args.command == "dual":
        payload = {"text": _read_file(args.file), "guard": guard, "oracle": args.oracle}
        return _finish(_post(args.server, "/dual", payload))
    if args.command == "we":
        payload = {
            "text": _read_file(args.file),
            "guard": guard,
            "variant": args.variant,
            "format": args.format,
        }
        return _finish(_post(args.server, "/weight-enumerator", payload))
    if args.command == "neighbor":
        payload = {"text": _read_file(args.file), "guard": guard, "vector": args.vector}
        return _finish(_post(args.server, "/neighbor", payload))
    if args.command == "glue":
        payload = {
            "text_c": _read_file(args.file_c),
            "text_d": _read_file(args.file_d),
            "guard": guard,
        }
        return _finish(_post(args.server, "/glue", payload))
    if args.command == "construct":
        payload = {
            "name": args.name,
            "alpha": args.alpha,
            "beta": args.beta,
            "cls": args.cls,
            "separable": args.separable,
            "guard": guard,
        }
        return _finish(_post(args.server, "/construct", payload))
    if args.command == "search":
        payload = {
            "alpha": args.alpha,
            "beta": args.beta,
            "cls": args.cls,
            "guard": guard,
            "dedup_equivalence": args.dedup_equivalence,
        }
        return _finish(_post(args.server, "/search", payload))
    if args.command == "verify":
        response = _post(args.server, "/verify", {})
        exit_code = _finish(response)
        if exit_code == 0 and response.json()["failed"] > 0:
            return 1
        return exit_code
    raise AssertionError(f"unhandled command {args.command}")  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())
