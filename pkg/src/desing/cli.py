"""Command line front end, a thin client of the HTTP service.

Each subcommand reads an ideal file, posts it to the in-process service
application and renders the response, as text by default or verbatim
JSON under ``--json``. Exit codes: 0 on success, 2 for unreadable or
unparsable input, 3 for domain errors, 64 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import InputError
from .fixtures import EXAMPLE_NAMES

OK, INPUT_FAIL, DOMAIN_FAIL, USAGE_FAIL = 0, 2, 3, 64


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the documented usage code is 64
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_FAIL)


def _build_parser() -> _Parser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--json", action="store_true",
                        help="emit the service response as JSON")
    shared.add_argument("--quiet", action="store_true",
                        help="suppress normal output")

    parser = _Parser(prog="desing", description="local resolution toolbox",
                     parents=[shared])
    sub = parser.add_subparsers(dest="command", metavar="command")

    def command(name, help_text, with_file=True):
        p = sub.add_parser(name, help=help_text, parents=[shared])
        if with_file:
            p.add_argument("file", help="ideal file")
        return p

    command("order", "order of vanishing at the origin")
    command("sb", "reduced standard basis")

    p = command("delta", "derivative ideal")
    p.add_argument("--iterate", type=int, default=1, metavar="c",
                   help="number of derivative passes (default 1)")

    p = command("hs", "dimensions of the graded local slices")
    p.add_argument("--max-degree", type=int, default=3, metavar="D")
    p.add_argument("--point", metavar="a,b,...",
                   help="evaluation point, rational coordinates")
    p.add_argument("--cumulative", action="store_true")

    p = command("coeff", "coefficient ideal with respect to a variable")
    p.add_argument("--var", required=True, metavar="v")
    p.add_argument("--order", type=int, default=None, metavar="b",
                   help="reference order (default: order of the ideal)")

    p = command("hybrid", "staged construction and suggested center")
    p.add_argument("--center-only", action="store_true")

    p = command("blowup", "transform under the blowup of a center")
    p.add_argument("--center", required=True, metavar="v1,v2,...")
    p.add_argument("--chart", default=None, metavar="v")
    p.add_argument("--transform", required=True,
                   choices=["total", "weak", "strict"])
    p.add_argument("--via-sb", action="store_true",
                   help="strict transform element by element on the basis")

    p = command("invariant", "resolution invariant of the staged descent")
    p.add_argument("--max-depth", type=int, default=8, metavar="d")

    p = command("demo", "run a built-in worked example", with_file=False)
    p.add_argument("name", choices=EXAMPLE_NAMES)

    p = command("serve", "run the HTTP service", with_file=False)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _read_file(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _request(args) -> tuple[str, str, dict | None]:
    """Method, endpoint and JSON body for the parsed arguments."""
    if args.command == "demo":
        return "GET", f"/demo/{args.name}", None
    body = {"source": _read_file(args.file)}
    if args.command == "delta":
        body["iterate"] = args.iterate
    elif args.command == "hs":
        body["max_degree"] = args.max_degree
        body["cumulative"] = args.cumulative
        if args.point is not None:
            body["point"] = [c.strip() for c in args.point.split(",")]
    elif args.command == "coeff":
        body["var"] = args.var
        if args.order is not None:
            body["order"] = args.order
    elif args.command == "hybrid":
        body["center_only"] = args.center_only
    elif args.command == "blowup":
        body["center"] = [c.strip() for c in args.center.split(",") if c.strip()]
        body["transform"] = args.transform
        body["via_sb"] = args.via_sb
        if args.chart is not None:
            body["chart"] = args.chart
    elif args.command == "invariant":
        body["max_depth"] = args.max_depth
    return "POST", f"/{args.command}", body


def _indented(lines: list[str], indent: str = "  ") -> list[str]:
    return [indent + line for line in lines]


def _render_chart(chart: dict, with_header: bool) -> list[str]:
    lines = []
    if with_header:
        lines.append(f"chart {chart['chart']} ({chart['kind']}):")
        lines.extend(_indented(chart["generators"]))
        lines.append(f"  order at chart origin: {chart['order']}")
    else:
        lines.extend(chart["generators"])
    return lines


def _render(command: str, data: dict) -> str:
    if command == "order":
        return str(data["order"])
    if command in ("sb", "delta"):
        return "\n".join(data[command])
    if command == "hs":
        return " ".join(str(v) for v in data["hs"])
    if command == "coeff":
        payload = data["coeff"]
        lines = [f"weighted order: {payload['weighted_order']}"]
        for comp in payload["components"]:
            lines.append(f"level {comp['level']} exponent {comp['exponent']}:")
            lines.extend(_indented(comp["generators"]))
        return "\n".join(lines)
    if command == "hybrid":
        payload = data["hybrid"]
        center = "V(" + ",".join(payload["center"]) + ")"
        if "degrees" not in payload:
            return center
        lines = ["stage degrees: " + " ".join(str(d) for d in payload["degrees"])]
        lines.append("contact frame: " + " ".join(payload["frame"]))
        lines.append(f"working ideal at final degree {payload['final_degree']}:")
        lines.extend(_indented(payload["working"]))
        lines.append(f"order of working ideal: {payload['working_order']}")
        lines.append("suggested center: " + center)
        return "\n".join(lines)
    if command == "blowup":
        charts = data["charts"]
        lines = []
        for chart in charts:
            lines.extend(_render_chart(chart, with_header=len(charts) > 1))
        return "\n".join(lines)
    if command == "invariant":
        payload = data["invariant"]
        entries = " ".join(f"({e['order']}, {e['ambient']})"
                           for e in payload["entries"])
        descent = " ".join(payload["descent"]) if payload["descent"] else "-"
        return f"entries: {entries}\ndescent: {descent}"
    if command == "demo":
        return data["report"].rstrip("\n")
    return json.dumps(data, indent=2, sort_keys=True)


def _fail(detail: str, code: int) -> int:
    print(f"desing: {detail}", file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return USAGE_FAIL
    if args.command == "serve":
        import uvicorn

        from .service import app
        uvicorn.run(app, host=args.host, port=args.port)
        return OK

    import warnings

    from .service import app
    try:
        method, endpoint, body = _request(args)
    except InputError as exc:
        return _fail(str(exc), INPUT_FAIL)
    with warnings.catch_warnings():
        # the bundled starlette test client grumbles about its httpx backend
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient
        with TestClient(app, raise_server_exceptions=False) as client:
            if method == "GET":
                response = client.get(endpoint)
            else:
                response = client.post(endpoint, json=body)
    data = response.json()
    if response.status_code != 200:
        detail = data.get("detail", "request failed")
        if isinstance(detail, list):  # request body rejected by validation
            return _fail("invalid request", USAGE_FAIL)
        kind = data.get("error", "internal")
        codes = {"parse": INPUT_FAIL, "domain": DOMAIN_FAIL, "usage": USAGE_FAIL}
        return _fail(detail, codes.get(kind, 1))
    if args.quiet:
        return OK
    if args.json:
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(_render(args.command, data))
    return OK


if __name__ == "__main__":
    raise SystemExit(main())
