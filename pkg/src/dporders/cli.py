'''Command line front end.

Exit status: 0 on success, 1 on invalid input (a JSON error record goes to
stderr), 2 when ``--expect TAG`` is not among the classification tags.
'''
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import classify, report
from .errors import DPOrdersError, ParseError
from .fixtures import get
from .order import OrderData, blowup_order, fresh_point
from .serialize import dumps, order_dumps, order_loads, parse_point_spec

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2
BASES = {"p2": None, "f0": 0, "f1": 1, "f2": 2}


def _load(path: str) -> tuple[OrderData, str | None]:
    '''Read an order from a file, ``-`` for stdin, or ``fixture:<id>``.'''
    if path.startswith("fixture:"):
        fid = path.split(":", 1)[1]
        return get(fid).order, fid
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    o = order_loads(text)
    try:
        fid = json.loads(text).get("id")
    except AttributeError:
        fid = None
    return o, fid if isinstance(fid, str) else None


def _emit(r: dict, fmt: str) -> None:
    sys.stdout.write(report.render_md(r) if fmt == "md" else dumps(r))


def _expect(tag: str | None, got: Sequence[str]) -> int:
    if tag is None or tag in got:
        return EXIT_OK
    sys.stderr.write(dumps({"error": "classification-mismatch", "expected": tag, "got": list(got)}))
    return EXIT_MISMATCH


def cmd_check(a) -> int:
    o, fid = _load(a.file)
    r = report.check_report(o, fid)
    _emit(r, a.format)
    return _expect(a.expect, r["tags"])


def cmd_blowup(a) -> int:
    o, _ = _load(a.file)
    for spec in a.at:
        pid, parent, inc = parse_point_spec(spec)
        o = blowup_order(o, fresh_point(o, pid, parent, inc))
    if a.format == "json":
        sys.stdout.write(order_dumps(o))
        got = classify.tags(classify.classify_blowup(o)) if a.expect else []
    else:
        r = report.check_report(o)
        _emit(r, "md")
        got = r["tags"]
    return _expect(a.expect, got)


def cmd_mmp(a) -> int:
    o, fid = _load(a.file)
    _emit(report.mmp_report(o, fid), a.format)
    return EXIT_OK


def cmd_kzero(a) -> int:
    o, fid = _load(a.file)
    r = report.kzero_report(o, fid)
    _emit(r, a.format)
    return _expect(a.expect, r["tags"])


def cmd_enumerate(a) -> int:
    n = BASES[a.base]
    recs = classify.enumerate_minimal_tdpo_p2() if n is None else classify.enumerate_minimal_tadpo_ruled(n)
    r = report.enumerate_report(a.base, recs)
    _emit(r, a.format)
    return _expect(a.expect, r["tags"])


def cmd_fixtures(a) -> int:
    if a.action == "list":
        _emit(report.fixtures_report(), a.format)
        return EXIT_OK
    if not a.id:
        raise ParseError("fixtures dump needs a fixture id")
    sys.stdout.write(order_dumps(get(a.id).order, a.id))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "md"), default="md")
    common.add_argument("--expect", metavar="TAG", help="exit 2 unless TAG is among the classification tags")
    p = argparse.ArgumentParser(prog="dporders", description="Intersection theory and classification of del Pezzo orders.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("check", parents=[common], help="validate an order and report its predicates")
    s.add_argument("file", help="order JSON, '-' for stdin, or fixture:<id>")
    s.set_defaults(fn=cmd_check)
    s = sub.add_parser("blowup", parents=[common], help="blow up points and emit the new order")
    s.add_argument("file")
    s.add_argument("--at", action="append", required=True, metavar="POINT",
                   help="id[@parent][:curve=m,...] or a JSON object; repeatable")
    s.set_defaults(fn=cmd_blowup)
    s = sub.add_parser("mmp", parents=[common], help="run the contraction loop")
    s.add_argument("file")
    s.set_defaults(fn=cmd_mmp)
    s = sub.add_parser("kzero", parents=[common], help="list curves with K.C = 0")
    s.add_argument("file")
    s.set_defaults(fn=cmd_kzero)
    s = sub.add_parser("enumerate", parents=[common], help="reproduce a minimal classification")
    s.add_argument("--base", choices=sorted(BASES), required=True)
    s.set_defaults(fn=cmd_enumerate)
    s = sub.add_parser("fixtures", parents=[common], help="list or dump catalog entries")
    s.add_argument("action", choices=("list", "dump"))
    s.add_argument("id", nargs="?")
    s.set_defaults(fn=cmd_fixtures)
    return p




def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; usage errors are invalid input here
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return a.fn(a)
    except DPOrdersError as exc:
        sys.stderr.write(dumps({"error": exc.kind, "message": str(exc)}))
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
