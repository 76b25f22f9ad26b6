"""Command line entry point.

Exit status: 0 on success, 1 when input fails validation or a check
fails, 2 on usage errors. Errors go to stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import ctf
from .bitword import SplitScheme, parse_word, schemes_for, split_point, word_diff, word_inverse, word_product, word_sum
from .checks import closure_summary, run_checks
from .codemodel import CharacterSet, code_inverse, well_order
from .errors import CodeError
from .presentation import Presentation, equizone_partition, presentation
from .render import render_table

__all__ = ["main", "run", "presentation_json"]


class UsageError(Exception):
    pass


def load_code(path: str) -> CharacterSet:
    p = Path(path)
    if not p.exists():
        # allow "data/<name>.ctf" to resolve to the packaged copy
        if p.stem in ctf.BUNDLED and p.suffix in ("", ".ctf"):
            return ctf.bundled(p.stem)
        raise UsageError(f"no such file: {path}")
    return ctf.load(p)


def _schemes(c: CharacterSet, option: Optional[str]) -> list[SplitScheme]:
    if option in (None, "all"):
        return list(schemes_for(c.blocklength))
    scheme = SplitScheme.parse(option)
    split_point(c.blocklength, scheme)
    return [scheme]


def _zone_text(p: Presentation, zone) -> str:
    return f"{zone} ({zone.hex()})" if p.s == 4 else str(zone)


def presentation_json(c: CharacterSet, presentations: Sequence[Presentation]) -> dict:
    out = []
    for p in presentations:
        entries = []
        for e in p.entries:
            item = {"zone": str(e.zone), "decinumers": list(e.assigned_decinumers), "count": e.count}
            if p.s == 4:
                item["zone_hex"] = e.zone.hex()
            entries.append(item)
        out.append({"scheme": str(p.scheme), "s": p.s, "degree": p.degree, "entries": entries})
    return {
        "name": c.name,
        "blocklength": c.blocklength,
        "universe": str(c.universe),
        "order": c.order,
        "presentations": out,
    }


def _braces(values) -> str:
    return "{" + ",".join(map(str, values)) + "}"


def _cmd_present(args, out: TextIO) -> int:
    c = load_code(args.file)
    ps = [presentation(c, s) for s in _schemes(c, args.scheme)]
    if args.format == "json":
        json.dump(presentation_json(c, ps), out, indent=2)
        out.write("\n")
        return 0
    for k, p in enumerate(ps):
        if k:
            out.write("\n")
        out.write(f"scheme {p.scheme}  s={p.s}  degree={p.degree}  universe={c.universe}\n")
        for e in p.entries:
            out.write(f"{_zone_text(p, e.zone)}\t{_braces(e.assigned_decinumers)}\t{e.count}\n")
    return 0


def _cmd_partition(args, out: TextIO) -> int:
    c = load_code(args.file)
    scheme = _schemes(c, args.scheme)[0]
    zones = equizone_partition(c, scheme)
    if args.format == "json":
        data = [{"zone": str(e.zone), "members": [str(w) for w in e.members],
                 "decinumers": list(e.decinumers), "assigned": list(e.assigned_decinumers)}
                for e in zones]
        json.dump({"scheme": str(scheme), "equizones": data}, out, indent=2)
        out.write("\n")
        return 0
    for e in zones:
        out.write(f"{e.zone}\t{' '.join(map(str, e.members))}\n")
    return 0


def _cmd_table(args, out: TextIO) -> int:
    c = load_code(args.file)
    scheme = _schemes(c, args.scheme)[0]
    out.write(render_table(presentation(c, scheme)))
    return 0


def _cmd_info(args, out: TextIO) -> int:
    c = load_code(args.file)
    ps = [presentation(c, s) for s in schemes_for(c.blocklength)]
    if args.format == "json":
        json.dump(presentation_json(c, ps), out, indent=2)
        out.write("\n")
        return 0
    out.write(f"name\t{c.name}\norder\t{c.order}\nblocklength\t{c.blocklength}\nuniverse\t{c.universe}\n")
    for p in ps:
        counts = " ".join(f"{e.zone}:{e.count}" for e in p.entries)
        out.write(f"degree[{p.scheme}]\t{p.degree}\n")
        out.write(f"counts[{p.scheme}]\t{counts}\n")
    return 0


def _cmd_check(args, out: TextIO) -> int:
    c = load_code(args.file)
    results = run_checks(c)
    closure = closure_summary(c)
    if args.format == "json":
        json.dump({"name": c.name,
                   "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
                   "closure": closure}, out, indent=2)
        out.write("\n")
    else:
        for r in results:
            out.write(f"{'PASS' if r.ok else 'FAIL'}\t{r.name}\t{r.detail}\n")
        out.write(f"INFO\tclosure\t{closure}\n")
    return 0 if all(r.ok for r in results) else 1


_WORD_OPS = {"diff": word_diff, "sum": word_sum, "prod": word_product}


def _cmd_word(args, out: TextIO) -> int:
    w1 = parse_word(args.w1)
    if args.op == "invert":
        if args.w2 is not None:
            raise UsageError("invert takes one word")
        out.write(f"{word_inverse(w1)}\n")
        return 0
    if args.w2 is None:
        raise UsageError(f"{args.op} takes two words")
    out.write(f"{_WORD_OPS[args.op](w1, parse_word(args.w2))}\n")
    return 0


def _cmd_invert_code(args, out: TextIO) -> int:
    out.write(ctf.serialize(code_inverse(load_code(args.file))))
    return 0


def _cmd_sort(args, out: TextIO) -> int:
    out.write(ctf.serialize(well_order(load_code(args.file))))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="codepres", description="Code presentations of binary uniform codes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    schemes = ["even", "type1", "type2"]

    p = sub.add_parser("present", help="zone / decinumer-set presentation(s)")
    p.add_argument("file")
    p.add_argument("--scheme", choices=schemes + ["all"], default="all")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_present)

    p = sub.add_parser("partition", help="equizones with their member words")
    p.add_argument("file")
    p.add_argument("--scheme", choices=schemes, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("table", help="compact decinumer table")
    p.add_argument("file")
    p.add_argument("--scheme", choices=schemes)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("info", help="order, blocklength, degrees, per-zone counts")
    p.add_argument("file")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("check", help="run the property suite; nonzero exit on failure")
    p.add_argument("file")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("word", help="word arithmetic")
    p.add_argument("op", choices=["diff", "sum", "prod", "invert"])
    p.add_argument("w1")
    p.add_argument("w2", nargs="?")
    p.set_defaults(func=_cmd_word)

    p = sub.add_parser("invert-code", help="reverse the collating sequence (emits a code table)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_invert_code)

    p = sub.add_parser("sort", help="well-order by decimal value (emits a code table)")
    p.add_argument("file")
    p.set_defaults(func=_cmd_sort)
    return parser


def _report(err: TextIO, kind: str, message: str, **extra) -> None:
    json.dump({"error": kind, "message": message, **extra}, err)
    err.write("\n")


def run(argv: Sequence[str], out: TextIO = None, err: TextIO = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        return args.func(args, out)
    except UsageError as exc:
        _report(err, "usage", str(exc))
        return 2
    except SystemExit as exc:  # --help
        return exc.code or 0
    except CodeError as exc:
        extra = {"line": exc.line} if hasattr(exc, "line") else {}
        _report(err, exc.code, str(exc), **extra)
        return 1
    except OSError as exc:
        _report(err, "io", str(exc))
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
