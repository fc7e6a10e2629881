"""Command line entry point.

Exit codes: 0 success / magic, 1 verification negative, 2 input error,
3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import verifier, symmetry
from .formats import FormatError, TourRecord, emit_json, emit_layers, fixtures, parse_record

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}") from None


def _load(path: str) -> TourRecord:
    return parse_record(_read(path), default_id=os.path.basename(path))


def parse_prefix(text: str) -> tuple:
    """Cell indexes in visiting order, as whitespace/comma separated integers or a JSON list."""
    s = text.strip()
    if s.startswith("["):
        try:
            cells = json.loads(s)
        except json.JSONDecodeError as e:
            raise FormatError(f"bad JSON: {e.msg}", e.lineno, e.colno) from None
    else:
        cells = []
        for no, raw in enumerate(s.splitlines(), start=1):
            for tok in raw.replace(",", " ").split():
                try:
                    cells.append(int(tok))
                except ValueError:
                    raise FormatError(f"not a cell index: {tok!r}", no, raw.index(tok) + 1) from None
    for c in cells:
        if not isinstance(c, int) or not 0 <= c < 64:
            raise FormatError(f"cell index out of range: {c!r}")
    if len(set(cells)) != len(cells):
        raise FormatError("prefix visits a cell twice")
    return tuple(cells)


def cmd_verify(args) -> int:
    rec = _load(args.file)
    rep = verifier.verify(rec.arrangement)
    print(emit_json(rec, rep))
    return EXIT_OK if rep.is_tour and rep.ortho_magic else EXIT_NEGATIVE


def cmd_search(args) -> int:
    from .search import SearchConfig, enumerate_tours
    prefix = parse_prefix(_read(args.prefix)) if args.prefix else None
    cfg = SearchConfig(mode=args.mode, prefix=prefix, thread_count=args.threads,
                       split_depth=args.split_depth)
    tours = enumerate_tours(cfg)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    for i, v in enumerate(tours):
        rec = TourRecord(f"search-{i + 1}", "search", v.tolist())
        rep = verifier.verify(rec.arrangement)
        if not (rep.is_tour and rep.ortho_magic):
            print(f"internal error: emitted arrangement {i + 1} fails verification", file=sys.stderr)
            return EXIT_INTERNAL
        line = emit_json(rec, rep)
        if args.out:
            with open(os.path.join(args.out, f"{rec.id}.json"), "w", encoding="utf-8") as fh:
                fh.write(line + "\n")
        else:
            print(line)
    print(f"{len(tours)} tours", file=sys.stderr)
    return EXIT_OK


def cmd_census(args) -> int:
    from .census import run_census, load_census_tours
    t0 = time.time()
    if args.cached:
        tours, info = load_census_tours()
    else:
        tours, info = run_census(threads=args.threads, checkpoint=args.checkpoint)
    cen = symmetry.build_census(tours)
    out = {"census": cen.as_dict(), "run": info, "census_seconds": round(time.time() - t0, 1)}
    print(json.dumps(out, indent=2))
    if cen.frenicle_total != cen.frenicle_closed + cen.frenicle_open:
        return EXIT_INTERNAL
    return EXIT_OK


def cmd_canon(args) -> int:
    rec = _load(args.file)
    a = rec.arrangement
    out = {"frenicle": list(symmetry.frenicle_canonical(a)), "primary": None}
    code = EXIT_OK
    if verifier.check_tour(a)[0]:
        out["primary"] = list(symmetry.primary_canonical(a))
    else:
        code = EXIT_NEGATIVE
    print(json.dumps(out))
    return code


def cmd_emit(args) -> int:
    rec = _load(args.file)
    if args.format == "layers":
        sys.stdout.write(emit_layers(rec.arrangement))
    else:
        print(emit_json(rec))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    recs = fixtures()
    if args.dump:
        os.makedirs(args.dump, exist_ok=True)
        for r in recs:
            with open(os.path.join(args.dump, f"tour{int(r.id):03d}.txt"), "w", encoding="utf-8") as fh:
                fh.write(emit_layers(r.arrangement))
            with open(os.path.join(args.dump, f"tour{int(r.id):03d}.json"), "w", encoding="utf-8") as fh:
                fh.write(emit_json(r) + "\n")
        print(f"wrote {len(recs)} fixtures to {args.dump}")
        return EXIT_OK
    for r in recs:
        rep = verifier.verify(r.arrangement)
        kind = "closed" if rep.is_closed else "open"
        print(f"{r.id}\t{r.source}\t{kind}\tdiag={list(rep.diag_sums)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artifact", description="Magic knight tours of the 4x4x4 cube.")
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("verify", help="verify a tour (layer text or JSON)")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="enumerate magic tours, one JSON record per line")
    s.add_argument("--mode", choices=["all", "closed", "open"], default="all")
    s.add_argument("--prefix", help="file with the cell indexes of values 1, 2, ...")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--split-depth", type=int, default=4)
    s.add_argument("--out", help="directory for one JSON file per tour")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("census", help="full enumeration and class counts")
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--checkpoint", help="directory for resumable shard results")
    s.add_argument("--cached", action="store_true",
                   help="rebuild the census from the stored enumeration instead of rerunning it")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("canon", help="print Frenicle and primary canonical keys")
    s.add_argument("file")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("emit", help="re-emit a tour")
    s.add_argument("file")
    s.add_argument("--format", choices=["layers", "json"], required=True)
    s.set_defaults(func=cmd_emit)

    s = sub.add_parser("fixtures", help="list or dump the embedded tours")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--list", action="store_true")
    g.add_argument("--dump", metavar="DIR")
    s.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    try:
        return args.func(args)
    except FormatError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except (AssertionError, RuntimeError) as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
