"""``mccg`` command line: parse, realize and corpus regression runs.

Exit status is 0 on success, 1 when nothing was found (no parse, no
realization, or a failing corpus case) and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from .corpus import DEFAULT_CORPUS, DEFAULT_LEXICON, CorpusError, junit_report, load_corpus, run_corpus, summary_report
from .infostruct import INFERRABLE, Comment, DiscourseModel, ISNode, format_is
from .lexicon import LoadError, TokenUnknown, load_lexicon
from .notation import NotationError, parse_term
from .parser import ChartLimitExceeded, ParseResult, Parser
from .patterns import ISPattern, parse_ground_pattern, parse_value_pattern
from .realizer import BagTooLarge, RealizationRequest, realize


class UsageError(Exception):
    pass


# --- discourse files --------------------------------------------------------


def read_discourse(path: Optional[str], extra: Sequence[str] = ()) -> DiscourseModel:
    """One entity constant per line; ``#`` starts a comment."""
    names = list(extra)
    if path:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read discourse file {path}: {exc.strerror}") from None
        for line in text.splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                names.append(line)
    return DiscourseModel.of(names)


# --- JSON -------------------------------------------------------------------


def value_to_json(v):
    if v is INFERRABLE:
        return {"inferrable": True}
    if isinstance(v, ISNode):
        return {"is": is_to_json(v)}
    return {"term": str(v)}


def is_to_json(node: ISNode) -> dict:
    return {
        "topic": value_to_json(node.topic),
        "comment": {
            "focus": value_to_json(node.focus),
            "ground": [value_to_json(g) for g in node.ground],
        },
    }


def value_from_json(d: dict):
    if d.get("inferrable"):
        return INFERRABLE
    if "is" in d:
        return is_from_json(d["is"])
    return parse_term(d["term"], variables=False)


def is_from_json(d: dict) -> ISNode:
    comment = d["comment"]
    return ISNode(
        value_from_json(d["topic"]),
        Comment(value_from_json(comment["focus"]), tuple(value_from_json(g) for g in comment["ground"])),
    )


def result_to_json(r: ParseResult, trace: bool = False) -> dict:
    d = {"as": str(r.as_term), "is": is_to_json(r.is_node) if r.is_node is not None else None}
    if trace:
        d["derivation"] = r.derivation.to_dict()
    return d


def result_from_json(d: dict) -> tuple:
    """``(as, is)`` rebuilt from :func:`result_to_json` output."""
    node = is_from_json(d["is"]) if d.get("is") is not None else None
    return parse_term(d["as"], variables=False), node


# --- text -------------------------------------------------------------------


def render_is_tree(node: ISNode, indent: int = 0) -> str:
    """Indented Topic/Comment/Focus/Ground layout, one field per line."""
    pad = "  " * indent
    lines = []

    def field(label: str, value, depth: int):
        p = "  " * depth
        if isinstance(value, ISNode):
            lines.append(f"{p}{label}:")
            lines.append(render_is_tree(value, depth + 1))
        else:
            lines.append(f"{p}{label}: {format_is(value)}")

    field("Topic", node.topic, indent)
    lines.append(f"{pad}Comment:")
    field("Focus", node.focus, indent + 1)
    flat = [g for g in node.ground if not isinstance(g, ISNode)]
    nested = [g for g in node.ground if isinstance(g, ISNode)]
    inner = "  " * (indent + 1)
    lines.append(f"{inner}Ground: {', '.join(format_is(g) for g in flat)}".rstrip())
    for g in nested:
        lines.append(render_is_tree(g, indent + 2))
    return "\n".join(lines)


def _text_results(sentence: str, results: list, trace: bool) -> str:
    noun = "analysis" if len(results) == 1 else "analyses"
    out = [f"{len(results)} {noun} for {sentence!r}"]
    for i, r in enumerate(results, 1):
        out.append("")
        out.append(f"[{i}] AS: {r.as_term}")
        if r.is_node is not None:
            out.append(f"    IS: {format_is(r.is_node)}")
            out.append(render_is_tree(r.is_node, 2))
        if trace:
            out.append("    derivation:")
            out.append(r.derivation.render(3))
    return "\n".join(out)


# --- commands ---------------------------------------------------------------


def _lexicon(paths):
    return load_lexicon(*(paths or [DEFAULT_LEXICON]))


def cmd_parse(args) -> int:
    lex = _lexicon(args.lexicon)
    dm = read_discourse(args.discourse, args.dm or ())
    tokens = [t for chunk in (args.sentence, *args.rest) for t in chunk.split()]
    parser = Parser(lex, dm, max_items=args.max_items, ordering=not args.no_ordering)
    results = parser.parse(tokens)
    sentence = " ".join(tokens)
    if args.format == "json":
        doc = {
            "sentence": sentence,
            "results": [result_to_json(r, args.trace) for r in results],
            "items": parser.last_stats.items,
        }
        print(json.dumps(doc, ensure_ascii=False, indent=2))
    else:
        print(_text_results(sentence, results, args.trace))
    return 0 if results else 1


def cmd_realize(args) -> int:
    lex = _lexicon(args.lexicon)
    dm = read_discourse(args.discourse, args.dm or ())
    target_as = parse_value_pattern(args.as_term)
    target_is = ISPattern(
        parse_value_pattern(args.topic),
        parse_value_pattern(args.focus),
        parse_ground_pattern(args.ground),
    )
    bag = [t for chunk in args.bag for t in chunk.split()]
    out = realize(RealizationRequest(target_as, target_is, bag, dm), lex)
    for line in out:
        print(line)
    return 0 if out else 1


def cmd_corpus(args) -> int:
    cases = load_corpus(args.corpus or DEFAULT_CORPUS)
    outcomes = run_corpus(cases, [Path(p) for p in args.lexicon] if args.lexicon else [DEFAULT_LEXICON])
    if args.report == "junit":
        print(junit_report(outcomes))
    else:
        print(summary_report(outcomes))
    return 0 if all(o.passed for o in outcomes) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mccg", description="Multiset categorial grammar with information structure.")
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--lexicon", action="append", metavar="PATH",
                       help="lexicon file (repeatable; later files override); default: shipped Turkish lexicon")
        p.add_argument("--discourse", metavar="PATH", help="discourse model: one entity per line")
        p.add_argument("--dm", nargs="*", metavar="ENTITY", help="extra discourse entities")

    p = sub.add_parser("parse", help="print every AS/IS analysis of a sentence")
    p.add_argument("sentence", help="the sentence (quote it, or pass words separately)")
    p.add_argument("rest", nargs="*", help=argparse.SUPPRESS)
    common(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--trace", action="store_true", help="include the derivation")
    p.add_argument("--max-items", type=int, default=100_000)
    p.add_argument("--no-ordering", action="store_true", help="syntax only: skip the IS component")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("realize", help="word orders of a bag expressing a given AS and IS")
    p.add_argument("--as", dest="as_term", required=True, metavar="TERM")
    p.add_argument("--topic", default="*")
    p.add_argument("--focus", default="*")
    p.add_argument("--ground", default="*", help="'*' or a bracketed list, '...' allows extras")
    p.add_argument("--bag", nargs="+", required=True, metavar="FORM")
    common(p)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("corpus", help="run a regression corpus")
    p.add_argument("--corpus", metavar="PATH", help="default: shipped corpus")
    p.add_argument("--lexicon", action="append", metavar="PATH", help="base lexicon for cases without their own")
    p.add_argument("--report", choices=("summary", "junit"), default="summary")
    p.set_defaults(func=cmd_corpus)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except (LoadError, CorpusError, NotationError, UsageError, BagTooLarge, ChartLimitExceeded, TokenUnknown) as exc:
        print(f"mccg: error: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
