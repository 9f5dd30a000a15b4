"""
Command line front end.

    heegperm encode h3.pres
    heegperm decode fig3.json
    heegperm analyze fig3.json [--text] [--detail]
    heegperm search h3.pres [--full] [--max-members N] [--jobs N] [--first-witness]
    heegperm enumerate h3.pres [--full] [--max-members N]
    heegperm export-dot fig3.json [-o ribbon.dot]

Inputs ending in ``.pres`` are presentations in text form, ``.json`` files are
permutation data sets; ``--as`` overrides the guess.  Results go to stdout as
JSON (JSON lines for ``enumerate``), logs go to stderr.

Exit status: 0 ok, 1 usage error, 2 invalid input, 3 search stopped at the limit.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .boundary import analyze
from .decode import decode
from .encode import EncodingClass, class_size, encode_canonical
from .permdata import (DataSetError, PermutationDataSet, is_transitive,
                       split_connected_sum)
from .presentation import (Presentation, PresentationError, parse_presentation,
                           trivially_reduce)
from .search import ABORTED, DEFAULT_MAX_MEMBERS, analyze_one, search_closed
from .surface import orbit_partition, to_dot

log = logging.getLogger("heegperm")

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_ABORTED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=False)


def _kind(path: str, forced: str | None) -> str:
    if forced:
        return forced
    if path.endswith(".pres"):
        return "pres"
    if path.endswith(".json"):
        return "perm"
    raise UsageError(f"cannot tell the input type of {path!r}; pass --as pres or --as perm")


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise PresentationError(f"cannot read {path}: {exc}") from exc


def load_presentation(path: str) -> Presentation:
    text = _read(path)
    if text.lstrip().startswith("{"):
        return Presentation.from_json(json.loads(text))
    return parse_presentation(text)


def load_data_set(path: str) -> PermutationDataSet:
    return PermutationDataSet.from_json(json.loads(_read(path)))


def _load_input(args):
    """A data set, or the canonical encoding when handed a presentation."""
    if _kind(args.input, args.as_) == "perm":
        return load_data_set(args.input)
    return encode_canonical(_reduced_presentation(args.input))


def _reduced_presentation(path: str) -> Presentation:
    p = load_presentation(path)
    q = trivially_reduce(p)
    if q != p:
        log.warning("presentation was not trivially reduced; using %s", q)
    return q


def cmd_encode(args, out):
    if _kind(args.input, args.as_) != "pres":
        raise UsageError("encode expects a presentation")
    ds = encode_canonical(_reduced_presentation(args.input))
    if args.text:
        print(ds, file=out)
    else:
        print(_dump(ds.to_json()), file=out)
    return EXIT_OK


def cmd_decode(args, out):
    if _kind(args.input, args.as_) != "perm":
        raise UsageError("decode expects a permutation data set")
    p = decode(load_data_set(args.input))
    if args.text:
        print(p.to_text(), file=out)
    else:
        print(_dump(p.to_json()), file=out)
    return EXIT_OK


def cmd_analyze(args, out):
    ds = _load_input(args)
    if is_transitive(ds):
        report = analyze(ds)
        if args.text:
            print(report.summary_text(), file=out)
            return EXIT_OK
        obj = report.to_json(detail=args.detail)
        if args.detail:
            obj["orbits"] = orbit_partition(ds).to_json()
        print(_dump(obj), file=out)
        return EXIT_OK

    reports = analyze_one(ds)
    pieces = split_connected_sum(ds)
    if args.text:
        print(f"connected sum of {len(pieces)} pieces", file=out)
        for k, (piece, rep) in enumerate(zip(pieces, reports), 1):
            print(f"-- piece {k}: {piece}", file=out)
            print(rep.summary_text(), file=out)
        return EXIT_OK
    obj = {
        "connectedSum": True,
        "closed": all(r.closed for r in reports),
        "constituents": [{"dataSet": piece.to_json(), "report": rep.to_json(args.detail)}
                         for piece, rep in zip(pieces, reports)],
    }
    print(_dump(obj), file=out)
    return EXIT_OK


def cmd_search(args, out):
    if _kind(args.input, args.as_) != "pres":
        raise UsageError("search expects a presentation")
    p = _reduced_presentation(args.input)
    result = search_closed(p, reduced=args.reduced, max_members=args.max_members,
                           jobs=args.jobs, first_witness_only=args.first_witness)
    log.info("search took %.3fs", result.elapsed)
    if args.text:
        print(f"presentation: {p}", file=out)
        print(f"degree d = {p.degree}; class size {result.class_size_full} "
              f"(full), {result.class_size_reduced} (reduced)", file=out)
        print(f"examined {result.examined}; verdict: {result.verdict}", file=out)
        for w in result.witnesses[:10]:
            print(f"  witness #{w.index}: {w.data_set}", file=out)
        if len(result.witnesses) > 10:
            print(f"  ... {len(result.witnesses) - 10} more", file=out)
    else:
        print(_dump(result.to_json()), file=out)
    return EXIT_ABORTED if result.verdict == ABORTED else EXIT_OK


def cmd_enumerate(args, out):
    if _kind(args.input, args.as_) != "pres":
        raise UsageError("enumerate expects a presentation")
    p = _reduced_presentation(args.input)
    cls = EncodingClass(p, args.reduced)
    limit = min(cls.size, args.max_members)
    for ds in cls.iter_range(0, limit):
        print(str(ds) if args.text else _dump(ds.to_json()), file=out)
    if limit < cls.size:
        log.warning("stopped after %d of %d members", limit, cls.size)
        return EXIT_ABORTED
    log.info("%d members (full class %d)", cls.size, class_size(p, reduced=False))
    return EXIT_OK


def cmd_export_dot(args, out):
    ds = _load_input(args)
    dot = to_dot(ds)
    if args.output:
        Path(args.output).write_text(dot, encoding="utf-8")
        log.info("wrote %s", args.output)
    else:
        out.write(dot)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="heegperm",
                     description="Heegaard diagrams as signed permutation pairs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("input", help="input file (.pres or .json), or - for stdin")
        p.add_argument("--as", dest="as_", choices=("pres", "perm"),
                       help="input type, overriding the file extension")
        p.add_argument("--text", action="store_true", help="human readable output")
        p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
        p.set_defaults(func=func)
        return p

    command("encode", cmd_encode, "canonical data set of a presentation")
    command("decode", cmd_decode, "presentation of a data set")
    p = command("analyze", cmd_analyze, "genus, boundary and closedness of a data set")
    p.add_argument("--detail", action="store_true", help="include component classes and orbits")

    for name, func, help in (("search", cmd_search, "look for a closed diagram in the class"),
                             ("enumerate", cmd_enumerate, "stream the class as JSON lines")):
        p = command(name, func, help)
        g = p.add_mutually_exclusive_group()
        g.add_argument("--reduced", dest="reduced", action="store_true", default=True,
                       help="pin each generator's first occurrence (default)")
        g.add_argument("--full", dest="reduced", action="store_false",
                       help="every label assignment")
        p.add_argument("--max-members", type=int, default=DEFAULT_MAX_MEMBERS)
        if name == "search":
            p.add_argument("--jobs", type=int, default=1)
            p.add_argument("--first-witness", action="store_true",
                           help="stop at the first closed member")

    p = command("export-dot", cmd_export_dot, "write the crossing graph in DOT")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    return parser


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (PresentationError, DataSetError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run())
