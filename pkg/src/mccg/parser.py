"""Chart parser deriving AS and IS in parallel.

Two adjacent constituents combine only if a syntactic rule combines their
syntax/semantics *and* an ordering rule combines their ordering
categories.  The chart is CKY-style over contiguous spans; cells are
memoized by their token sequence so re-parsing permutations of one bag
(as the realizer does) reuses sub-spans.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .categories import Atomic, Canon, Case, Direction
from .infostruct import (
    EMPTY_DM,
    DiscourseModel,
    GivennessViolation,
    IncompleteArgument,
    ISNode,
    OrderingCategory,
    OrderingFunction,
    complete,
    embed,
    format_is,
    ord_backward_apply,
    ord_forward_apply,
    ord_identity,
    ord_skip,
)
from .lexicon import Lexicon
from .rules import (
    DEFAULT_CONFIG,
    GrammarConfig,
    RestrictionViolation,
    SynSem,
    _apply,
    _compose,
    cleanup,
)
from .terms import Const, Substitution, Term, is_ground

log = logging.getLogger(__name__)


class ChartLimitExceeded(RuntimeError):
    """The chart grew past the configured item guard."""


@dataclass(frozen=True, slots=True)
class Constituent:
    synsem: SynSem
    ordering: Optional[OrderingCategory]

    def subst(self, s: Substitution) -> "Constituent":
        if not len(s):
            return self
        ordering = self.ordering.subst(s) if self.ordering is not None else None
        return Constituent(self.synsem.subst(s), ordering)

    def key(self) -> tuple:
        canon = Canon()
        syn = self.synsem.key(canon)
        return (syn, self.ordering.key(canon) if self.ordering is not None else None)

    def __str__(self) -> str:
        return f"{self.synsem}  ~  {self.ordering}" if self.ordering is not None else str(self.synsem)


@dataclass(frozen=True)
class Miss:
    """A syntactic combination that the ordering side (or a restriction) refused."""

    rule: str
    reason: str
    left: str
    right: str


@dataclass(eq=False)
class ChartItem:
    constituent: Constituent
    rule: str
    ord_steps: tuple = ()
    children: tuple = ()
    token: Optional[str] = None
    length: int = 1
    key: tuple = ()

    def __post_init__(self):
        if not self.key:
            self.key = self.constituent.key()


@dataclass
class Derivation:
    rule: str
    ord_steps: tuple
    span: tuple
    constituent: Constituent
    token: Optional[str] = None
    children: list = field(default_factory=list)

    def steps(self) -> list:
        """(rule, ord_steps) pairs in bottom-up, left-to-right order."""
        out = []
        for c in self.children:
            out.extend(c.steps())
        out.append((self.rule, self.ord_steps))
        return out

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        label = self.rule if not self.ord_steps else f"{self.rule} / {'+'.join(self.ord_steps)}"
        head = f"{pad}[{self.span[0]},{self.span[1]}) {label}"
        if self.token is not None:
            head += f" {self.token!r}"
        lines = [f"{head}: {self.constituent}"]
        lines.extend(c.render(indent + 1) for c in self.children)
        return "\n".join(lines)

    def to_dict(self) -> dict:
        d = {
            "rule": self.rule,
            "ordering": list(self.ord_steps),
            "span": list(self.span),
            "constituent": str(self.constituent),
        }
        if self.token is not None:
            d["token"] = self.token
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d


@dataclass
class ParseResult:
    as_term: Term
    is_node: Optional[ISNode]
    derivation: Derivation

    def sort_key(self) -> tuple:
        return (str(self.as_term), format_is(self.is_node) if self.is_node is not None else "")


@dataclass
class ParseStats:
    items: int = 0
    cells: int = 0
    misses: list = field(default_factory=list)


# --- combination ----------------------------------------------------------


def _syntactic_outcomes(left: SynSem, right: SynSem, config: GrammarConfig, misses=None):
    """(rule, result, substitution, subordinate side) for every syntactic rule."""
    out = []
    for res, s in _apply(left, right, Direction.RIGHT):
        out.append((">", res, s, None))
    for res, s in _apply(right, left, Direction.LEFT):
        out.append(("<", res, s, None))
    for rule, primary, secondary, side, sub in (
        (">B", left, right, Direction.RIGHT, "right"),
        ("<B", right, left, Direction.LEFT, "left"),
    ):
        try:
            for res, s in _compose(primary, secondary, side, config):
                out.append((rule, res, s, sub))
        except RestrictionViolation as exc:
            if misses is not None:
                misses.append(Miss(rule, f"restriction: {exc}", str(left), str(right)))
    return out


def _ordering_application(left: OrderingCategory, right: OrderingCategory, dm: DiscourseModel, misses=None):
    out = []
    for rule, fn in ((">", lambda: ord_forward_apply(left, right, dm)), ("<", lambda: ord_backward_apply(left, right, dm))):
        try:
            res = fn()
        except (GivennessViolation, IncompleteArgument) as exc:
            if misses is not None:
                misses.append(Miss(rule, f"{type(exc).__name__}: {exc}", str(left), str(right)))
            continue
        if res is not None:
            out.append(((rule,), res))
    return out


def combine(
    left: Constituent,
    right: Constituent,
    dm: DiscourseModel = EMPTY_DM,
    config: GrammarConfig = DEFAULT_CONFIG,
    ordering: bool = True,
    misses: Optional[list] = None,
) -> list:
    """All ``(constituent, syntactic rule, ordering steps)`` for adjacent
    ``left`` and ``right``."""
    syn = _syntactic_outcomes(left.synsem, right.synsem, config, misses)
    if not syn:
        return []
    if not ordering:
        return [(Constituent(cleanup(res), None), rule, ()) for rule, res, _, _ in syn]

    lo, ro = left.ordering, right.ordering
    both_verbal = isinstance(lo, OrderingFunction) and isinstance(ro, OrderingFunction)
    applied = None
    out = []
    for rule, res, s, sub in syn:
        if sub is not None and both_verbal:
            # Verb composition: the subordinate IS completes, then joins the matrix IS.
            matrix, subordinate = (lo, ro) if sub == "right" else (ro, lo)
            emb = embed(matrix, subordinate)
            if emb is None:
                if misses is not None:
                    misses.append(Miss(rule, "subordinate IS incomplete", str(left), str(right)))
                continue
            ords = [(("complete", "embed"), emb)]
        else:
            if applied is None:
                applied = _ordering_application(lo, ro, dm, misses)
            ords = list(applied)
            ident = ord_identity(lo, ro, phrase=res.sem)
            if ident is not None:
                ords.append((("=",), ident))
        if not ords and misses is not None:
            misses.append(Miss(rule, "no ordering rule applies", str(left), str(right)))
        for steps, o in ords:
            c = Constituent(cleanup(res), o.subst(s))
            out.append((c, rule, steps))
    return out


def unary_closure(items: Iterable[ChartItem]) -> list[ChartItem]:
    """Close a cell under clean-up and the ordering skip rule, deduplicated."""
    out: list[ChartItem] = []
    seen = set()
    agenda = list(items)
    while agenda:
        item = agenda.pop(0)
        syn = item.constituent.synsem
        tidy = cleanup(syn)
        if tidy is not syn:
            item = ChartItem(Constituent(tidy, item.constituent.ordering), "cleanup", (), (item,), length=item.length)
        if item.key in seen:
            continue
        seen.add(item.key)
        out.append(item)
        skipped = ord_skip(item.constituent.ordering) if item.constituent.ordering is not None else None
        if skipped is not None:
            agenda.append(
                ChartItem(Constituent(item.constituent.synsem, skipped), "skip", ("skip",), (item,), length=item.length)
            )
    return out


# --- parser ---------------------------------------------------------------


def _is_sentence(syn: SynSem) -> bool:
    cat = syn.category
    return isinstance(cat, Atomic) and cat.kind == "S" and not isinstance(cat.case, Case)


def _tags(tokens: Sequence[str]) -> tuple:
    seen: Counter = Counter()
    out = []
    for t in tokens:
        out.append((t, seen[t]))
        seen[t] += 1
    return tuple(out)


class Parser:
    """Exhaustive parser over one lexicon and discourse model.

    ``ordering=False`` runs the syntactic component alone (used to show
    that the IS side is what rejects a sentence).
    """

    def __init__(
        self,
        lexicon: Lexicon,
        dm: DiscourseModel = EMPTY_DM,
        config: GrammarConfig = DEFAULT_CONFIG,
        ordering: bool = True,
        max_items: int = 100_000,
        record_misses: bool = False,
    ):
        self.lexicon = lexicon
        self.dm = dm
        self.config = config
        self.ordering = ordering
        self.max_items = max_items
        self.record_misses = record_misses
        self._counter = itertools.count(1)
        self._cells: dict[tuple, list[ChartItem]] = {}
        self._budget = 0
        self._misses: Optional[list] = None
        self.last_stats = ParseStats()

    def _lexical(self, tag) -> list[ChartItem]:
        token = tag[0]
        items = []
        for entry in self.lexicon.lookup(token):
            for synsem, ordering in entry.instances(self._counter, self.dm):
                c = Constituent(synsem, ordering if self.ordering else None)
                items.append(ChartItem(c, "lex", (), (), token=token))
        return unary_closure(items)

    def cell(self, tags: tuple) -> list[ChartItem]:
        hit = self._cells.get(tags)
        if hit is not None:
            return hit
        if len(tags) == 1:
            items = self._lexical(tags[0])
        else:
            found: dict = {}
            for k in range(1, len(tags)):
                lefts, rights = self.cell(tags[:k]), self.cell(tags[k:])
                for a in lefts:
                    for b in rights:
                        for c, rule, steps in combine(
                            a.constituent, b.constituent, self.dm, self.config, self.ordering, self._misses
                        ):
                            item = ChartItem(c, rule, steps, (a, b), length=len(tags))
                            if item.key not in found:
                                found[item.key] = item
            items = unary_closure(found.values())
        self._budget += len(items)
        if self._budget > self.max_items:
            raise ChartLimitExceeded(f"chart exceeded {self.max_items} items")
        self._cells[tags] = items
        return items

    def chart(self, tokens: Sequence[str]) -> dict:
        """Map ``(start, end)`` → items for every span of ``tokens``."""
        tags = _tags(tokens)
        self._budget = 0
        self._misses = [] if self.record_misses else None
        for t in tags:
            self.lexicon.lookup(t[0])
        full = self.cell(tags)
        spans = {}
        n = len(tags)
        for i in range(n):
            for j in range(i + 1, n + 1):
                spans[(i, j)] = full if (i, j) == (0, n) else self.cell(tags[i:j])
        self.last_stats = ParseStats(
            items=sum(len(v) for v in spans.values()), cells=len(spans), misses=self._misses or []
        )
        return spans

    def parse(self, tokens: Sequence[str]) -> list[ParseResult]:
        tokens = list(tokens)
        if not tokens:
            return []
        spans = self.chart(tokens)
        results: dict = {}
        for item in spans[(0, len(tokens))]:
            c = item.constituent
            if not _is_sentence(c.synsem) or not is_ground(c.synsem.sem):
                continue
            node = None
            if self.ordering:
                node = complete(c.ordering)
                if node is None:
                    continue
            k = (c.synsem.sem, node)
            if k not in results:
                results[k] = ParseResult(c.synsem.sem, node, _derivation(item, 0))
        out = sorted(results.values(), key=ParseResult.sort_key)
        log.debug("parsed %r: %d result(s), %d items", tokens, len(out), self.last_stats.items)
        return out


def _derivation(item: ChartItem, start: int) -> Derivation:
    span = (start, start + item.length)
    children = []
    offset = start
    for ch in item.children:
        children.append(_derivation(ch, offset))
        if item.rule not in ("skip", "cleanup"):
            offset += ch.length
    return Derivation(item.rule, item.ord_steps, span, item.constituent, item.token, children)


def parse(
    tokens: Sequence[str],
    lexicon: Lexicon,
    dm: DiscourseModel = EMPTY_DM,
    **kwargs,
) -> list[ParseResult]:
    """Parse whitespace-separated ``tokens`` (a list or a string)."""
    if isinstance(tokens, str):
        tokens = tokens.split()
    return Parser(lexicon, dm, **kwargs).parse(tokens)
