"""Regression corpora of accept/reject judgments.

A corpus is an INI-style file with one section per case::

    [ex2b]
    tokens = Fatma Ahmet'i gördü
    expect = accept
    as     = see(Fatma, Ahmet)
    topic  = Fatma
    focus  = Ahmet
    ground = *

Keys: ``tokens`` (required), ``expect`` (``accept`` or ``reject``), ``dm``
(entity constants separated by spaces or commas), ``as``, ``is`` or
``topic``/``focus``/``ground`` (patterns), ``min``/``max`` (bounds on the
number of analyses), ``never_focus`` (constants that must not fill any
focus slot), ``lexicon`` (files replacing the base lexicon) and ``overlay``
(files loaded over it).  Paths are relative to the corpus file.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence, Union
from xml.etree import ElementTree as ET

from .infostruct import DiscourseModel, format_is, is_nodes
from .lexicon import Lexicon, load_lexicon
from .notation import NotationError
from .parser import Parser, ParseResult
from .patterns import (
    WILDCARD,
    ISPattern,
    format_pattern,
    match_as,
    matches,
    parse_ground_pattern,
    parse_is_pattern,
    parse_value_pattern,
)
from .terms import Const

DATA_DIR = Path(__file__).parent / "data"
DEFAULT_LEXICON = DATA_DIR / "turkish.lex"
DEFAULT_CORPUS = DATA_DIR / "corpus.ini"

_KEYS = {"tokens", "expect", "dm", "as", "is", "topic", "focus", "ground", "min", "max",
         "never_focus", "lexicon", "overlay", "note"}


class CorpusError(ValueError):
    """Malformed corpus file."""


@dataclass
class CorpusCase:
    id: str
    tokens: tuple
    dm: DiscourseModel = field(default_factory=DiscourseModel)
    accept: bool = True
    as_pattern: object = WILDCARD
    is_pattern: object = WILDCARD
    min: int = 1
    max: Optional[int] = None
    never_focus: tuple = ()
    lexicon: tuple = ()
    overlay: tuple = ()
    note: str = ""

    @property
    def sentence(self) -> str:
        return " ".join(self.tokens)

    def expectation(self) -> str:
        if not self.accept:
            return "reject"
        bounds = f"{self.min}..{'' if self.max is None else self.max}"
        return f"accept [{bounds}] as={format_pattern(self.as_pattern)} is={format_pattern(self.is_pattern)}"


@dataclass
class CaseOutcome:
    case: CorpusCase
    passed: bool
    results: list
    message: str = ""


def _split(value: str) -> list[str]:
    return value.replace(",", " ").split()


def _case(name: str, sec, base: Path) -> CorpusCase:
    unknown = set(sec) - _KEYS
    if unknown:
        raise CorpusError(f"[{name}] unknown key(s): {', '.join(sorted(unknown))}")
    if not sec.get("tokens", "").strip():
        raise CorpusError(f"[{name}] needs tokens")
    expect = sec.get("expect", "accept").strip()
    if expect not in ("accept", "reject"):
        raise CorpusError(f"[{name}] expect must be accept or reject, not {expect!r}")
    try:
        as_pattern = parse_value_pattern(sec["as"]) if "as" in sec else WILDCARD
        if "is" in sec:
            is_pattern = parse_is_pattern(sec["is"])
        elif any(k in sec for k in ("topic", "focus", "ground")):
            is_pattern = ISPattern(
                parse_value_pattern(sec.get("topic", "*")),
                parse_value_pattern(sec.get("focus", "*")),
                parse_ground_pattern(sec.get("ground", "*")),
            )
        else:
            is_pattern = WILDCARD
        lo = int(sec.get("min", "1"))
        hi = int(sec["max"]) if sec.get("max", "").strip() else None
    except (NotationError, ValueError) as exc:
        raise CorpusError(f"[{name}] {exc}") from None
    return CorpusCase(
        id=name,
        tokens=tuple(sec["tokens"].split()),
        dm=DiscourseModel.of(_split(sec.get("dm", ""))),
        accept=expect == "accept",
        as_pattern=as_pattern,
        is_pattern=is_pattern,
        min=lo,
        max=hi,
        never_focus=tuple(_split(sec.get("never_focus", ""))),
        lexicon=tuple(base / p for p in _split(sec.get("lexicon", ""))),
        overlay=tuple(base / p for p in _split(sec.get("overlay", ""))),
        note=sec.get("note", ""),
    )


def parse_corpus(text: str, base: Union[str, Path] = ".", source: str = "<corpus>") -> list[CorpusCase]:
    cp = configparser.ConfigParser(interpolation=None, default_section="\0")
    cp.optionxform = str
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        raise CorpusError(str(exc)) from None
    return [_case(name, cp[name], Path(base)) for name in cp.sections()]


def load_corpus(path: Union[str, Path]) -> list[CorpusCase]:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read {path}: {exc}") from None
    return parse_corpus(text, path.parent, str(path))


def _focus_constants(results: Sequence[ParseResult]) -> set:
    out = set()
    for r in results:
        for node in is_nodes(r.is_node):
            if isinstance(node.focus, Const):
                out.add(node.focus.name)
    return out


def check(case: CorpusCase, results: list[ParseResult]) -> CaseOutcome:
    n = len(results)
    if not case.accept:
        if n:
            return CaseOutcome(case, False, results, f"expected reject, got {n} analyses")
        return CaseOutcome(case, True, results)
    if n < case.min or (case.max is not None and n > case.max):
        return CaseOutcome(case, False, results, f"got {n} analyses, expected {case.expectation()}")
    hits = [r for r in results if match_as(case.as_pattern, r.as_term) and matches(case.is_pattern, r.is_node)]
    if not hits:
        got = "; ".join(f"{r.as_term} {format_is(r.is_node)}" for r in results[:4])
        return CaseOutcome(case, False, results, f"no analysis matches {case.expectation()}; got {got}")
    bad = sorted(set(case.never_focus) & _focus_constants(results))
    if bad:
        return CaseOutcome(case, False, results, f"{', '.join(bad)} fills a focus slot")
    return CaseOutcome(case, True, results)


class LexiconCache:
    def __init__(self, base: Sequence[Path] = (DEFAULT_LEXICON,)):
        self.base = tuple(base)
        self._cache: dict = {}

    def for_case(self, case: CorpusCase) -> Lexicon:
        paths = (case.lexicon or self.base) + case.overlay
        if paths not in self._cache:
            self._cache[paths] = load_lexicon(*paths)
        return self._cache[paths]


def run_case(case: CorpusCase, lexicons: LexiconCache, **parser_kw) -> CaseOutcome:
    lex = lexicons.for_case(case)
    results = Parser(lex, case.dm, **parser_kw).parse(case.tokens)
    return check(case, results)


def run_corpus(cases: Sequence[CorpusCase], base_lexicon: Sequence[Path] = (DEFAULT_LEXICON,), **parser_kw) -> list[CaseOutcome]:
    lexicons = LexiconCache(base_lexicon)
    outcomes = [run_case(c, lexicons, **parser_kw) for c in cases]
    return sorted(outcomes, key=lambda o: o.case.id)


def summary_report(outcomes: Sequence[CaseOutcome]) -> str:
    lines = []
    for o in outcomes:
        status = "PASS" if o.passed else "FAIL"
        line = f"{status} {o.case.id}: {o.case.sentence!r} expected {o.case.expectation()}, got {len(o.results)} analyses"
        if o.message:
            line += f" ({o.message})"
        lines.append(line)
    failed = sum(not o.passed for o in outcomes)
    lines.append(f"{len(outcomes)} cases, {len(outcomes) - failed} passed, {failed} failed")
    return "\n".join(lines)


def junit_report(outcomes: Sequence[CaseOutcome], name: str = "corpus") -> str:
    failed = sum(not o.passed for o in outcomes)
    suite = ET.Element("testsuite", name=name, tests=str(len(outcomes)), failures=str(failed))
    for o in outcomes:
        tc = ET.SubElement(suite, "testcase", classname=name, name=o.case.id)
        ET.SubElement(tc, "system-out").text = o.case.sentence
        if not o.passed:
            ET.SubElement(tc, "failure", message=o.message).text = (
                f"expected {o.case.expectation()}, got {len(o.results)} analyses"
            )
    ET.indent(suite)
    return ET.tostring(suite, encoding="unicode")
