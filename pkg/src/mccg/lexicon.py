"""Lexicon files, entry validation and category schemas.

A lexicon file holds one entry per line::

    form = category-expression ; ordering [; flag ...]

``ordering`` is ``template9`` (optionally ``template9(pred)``) for verbal
heads, or ``value``, ``value(term)`` or ``var`` for everything else.  The
only flag is ``given`` (inherently discourse-old, e.g. deictic temporals).
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Optional, Union

from .categories import Canon, Case, Function, result_kind
from .infostruct import (
    VARIANTS,
    DiscourseModel,
    OrderingCategory,
    OrderingFunction,
    OrderingValue,
    lexical_value,
    template9,
)
from .categories import fresh_substitution
from .notation import NotationError, parse_category, parse_term
from .rules import SynSem
from .terms import Compound, Const, Term, Var, term_vars


class LoadError(Exception):
    def __init__(self, message: str, line: Optional[int] = None, field: Optional[str] = None, source: str = ""):
        self.line = line
        self.field = field
        self.source = source
        loc = ""
        if source:
            loc += f"{source}:"
        if line is not None:
            loc += f"{line}:"
        if field:
            loc += f" [{field}]"
        super().__init__(f"{loc} {message}".strip())


class ArityMismatch(ValueError):
    pass


class TokenUnknown(KeyError):
    def __init__(self, token: str):
        self.token = token
        super().__init__(token)

    def __str__(self) -> str:
        return f"no lexicon entry for token {self.token!r}"


_ORDERING = re.compile(r"^(template9|value|var)\s*(?:\((.*)\))?$")


@dataclass(frozen=True)
class OrderingSpec:
    kind: str  # "template9" | "value" | "var"
    term: Optional[Term] = None

    @classmethod
    def parse(cls, text: str) -> "OrderingSpec":
        m = _ORDERING.match(text.strip())
        if not m:
            raise ValueError(f"unknown ordering spec {text.strip()!r}")
        kind, arg = m.groups()
        if kind == "var" and arg is not None:
            raise ValueError("'var' takes no argument")
        term = parse_term(arg, variables=False) if arg else None
        return cls(kind, term)

    def __str__(self) -> str:
        return f"{self.kind}({self.term})" if self.term is not None else self.kind


def _predicate(sem: Term) -> Term:
    if isinstance(sem, Compound):
        return Const(sem.functor)
    return sem


@dataclass
class LexEntry:
    form: str
    synsem: SynSem
    ordering: OrderingSpec
    inherent_given: bool = False
    ordering_variants: list = field(default_factory=list)

    def __post_init__(self):
        if not self.ordering_variants:
            self.ordering_variants = self._variants()

    @property
    def is_verbal(self) -> bool:
        return self.ordering.kind == "template9"

    def _variants(self) -> list:
        spec = self.ordering
        if spec.kind == "template9":
            verb = spec.term if spec.term is not None else _predicate(self.synsem.sem)
            return [template9(verb, v) for v in VARIANTS]
        if spec.kind == "value":
            return [OrderingValue(spec.term if spec.term is not None else self.synsem.sem)]
        return [OrderingValue(Var(0, "_o"))]

    def validate(self) -> None:
        cat = self.synsem.category
        if self.is_verbal:
            if not (isinstance(cat, Function) and result_kind(cat) == "S"):
                raise ValueError("template9 ordering needs a function category resulting in S")
            if not all(isinstance(v, OrderingFunction) for v in self.ordering_variants):
                raise ValueError("verbal entry without ordering function")
        elif len(self.ordering_variants) != 1 or not isinstance(self.ordering_variants[0], OrderingValue):
            raise ValueError("nonverbal entry needs exactly one value ordering")
        sem_vars = set(term_vars(self.synsem.sem))
        for v in _slot_vars(cat):
            missing = [x for x in term_vars(v) if x not in sem_vars]
            if missing:
                raise ValueError(f"argument variable {missing[0]} does not occur in the semantics")

    def instances(self, counter: Iterator[int], dm: DiscourseModel) -> list:
        """Fresh (SynSem, ordering) pairs, one per ordering variant."""
        out = []
        for variant in self.ordering_variants:
            if isinstance(variant, OrderingValue):
                variant = lexical_value(variant.value, dm, self.inherent_given)
            variables = itertools.chain(self.synsem.variables(), variant.variables())
            s = fresh_substitution(variables, counter)
            out.append((self.synsem.subst(s), variant.subst(s)))
        return out

    def key(self) -> tuple:
        return (self.form, self.synsem.key(Canon()), str(self.ordering), self.inherent_given)

    def to_line(self) -> str:
        parts = [f"{self.form} = {self.synsem}", str(self.ordering)]
        if self.inherent_given:
            parts.append("given")
        return " ; ".join(parts)


def _slot_vars(cat) -> Iterator[Term]:
    while isinstance(cat, Function):
        for a in cat.args:
            yield a.var
            yield from _slot_vars(a.category)
        cat = cat.result


def make_entry(form: str, category: str, ordering: str = "value", given: bool = False) -> LexEntry:
    """Build and validate an entry from notation strings."""
    expr = parse_category(category)
    names = [n for n, _ in expr.slot_vars]
    dup = {n for n in names if names.count(n) > 1}
    if dup:
        raise ValueError(f"duplicate argument variable {sorted(dup)[0]}")
    entry = LexEntry(form, SynSem(expr.category, expr.sem), OrderingSpec.parse(ordering), given)
    entry.validate()
    return entry


class Lexicon:
    def __init__(self, entries: Iterable[LexEntry] = ()):
        self._by_form: dict[str, list[LexEntry]] = {}
        for e in entries:
            self.add(e)

    def add(self, entry: LexEntry) -> None:
        self._by_form.setdefault(entry.form, []).append(entry)

    def replace(self, entry: LexEntry) -> "Lexicon":
        """A copy with every entry for ``entry.form`` replaced by ``entry``."""
        new = Lexicon(self)
        new._by_form[entry.form] = [entry]
        return new

    def merged(self, other: "Lexicon") -> "Lexicon":
        """A copy where forms defined in ``other`` override ours."""
        new = Lexicon(self)
        for form in other.forms():
            new._by_form[form] = list(other._by_form[form])
        return new

    def __iter__(self) -> Iterator[LexEntry]:
        for form in self._by_form:
            yield from self._by_form[form]

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_form.values())

    def __contains__(self, token: str) -> bool:
        return self._resolve(token) is not None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return sorted(e.key() for e in self) == sorted(e.key() for e in other)

    def forms(self) -> list[str]:
        return list(self._by_form)

    def _resolve(self, token: str) -> Optional[str]:
        if token in self._by_form:
            return token
        # Sentence-initial capitalization: "Dün" finds "dün".
        lowered = token[:1].lower() + token[1:]
        if lowered in self._by_form:
            return lowered
        return None

    def lookup(self, token: str) -> list[LexEntry]:
        form = self._resolve(token)
        if form is None:
            raise TokenUnknown(token)
        return self._by_form[form]

    def serialize(self) -> str:
        return "\n".join(e.to_line() for e in self) + "\n"

    @classmethod
    def parse(cls, text: str, source: str = "") -> "Lexicon":
        lex = cls()
        for lineno, line in enumerate(text.splitlines(), 1):
            body = line.split("#", 1)[0].strip()
            if not body:
                continue
            lex.add(_parse_line(body, lineno, source))
        return lex


def _parse_line(body: str, lineno: int, source: str) -> LexEntry:
    form, eq, rest = body.partition("=")
    form = form.strip()
    if not eq or not form or " " in form:
        raise LoadError("expected 'form = category ; ordering [; flags]'", lineno, "form", source)
    fields = [f.strip() for f in rest.split(";")]
    if len(fields) < 2:
        raise LoadError("missing ordering field", lineno, "ordering", source)
    category, ordering, flags = fields[0], fields[1], fields[2:]
    unknown = [f for f in flags if f and f != "given"]
    if unknown:
        raise LoadError(f"unknown flag {unknown[0]!r}", lineno, "flags", source)
    try:
        expr = parse_category(category)
    except NotationError as exc:
        raise LoadError(str(exc), lineno, "category", source) from None
    names = [n for n, _ in expr.slot_vars]
    for n in names:
        if names.count(n) > 1:
            raise LoadError(f"duplicate argument variable {n!r}", lineno, "category", source)
    try:
        spec = OrderingSpec.parse(ordering)
    except (ValueError, NotationError) as exc:
        raise LoadError(str(exc), lineno, "ordering", source) from None
    entry = LexEntry(form, SynSem(expr.category, expr.sem), spec, "given" in flags)
    try:
        entry.validate()
    except ValueError as exc:
        raise LoadError(str(exc), lineno, "category", source) from None
    return entry


def load_lexicon(*paths: Union[str, Path]) -> Lexicon:
    """Load one or more lexicon files; later files override earlier forms."""
    if not paths:
        raise ValueError("at least one lexicon path is required")
    result: Optional[Lexicon] = None
    for p in paths:
        p = Path(p)
        try:
            text = p.read_text(encoding="utf-8")
        except OSError as exc:
            raise LoadError(f"cannot read lexicon: {exc.strerror}", source=str(p)) from None
        lex = Lexicon.parse(text, str(p))
        result = lex if result is None else result.merged(lex)
    return result


# --- schemas --------------------------------------------------------------

SCHEMAS = (
    "intransitive",
    "transitive",
    "ditransitive",
    "gerund-verb",
    "sentential-adjunct",
    "adjective",
    "noun",
    "island-clause-head",
    "nonisland-clause-head",
)

_ARITY = {
    "intransitive": (1, 1),
    "transitive": (2, 2),
    "ditransitive": (3, 3),
    "gerund-verb": (1, None),
    "sentential-adjunct": (0, 0),
    "adjective": (0, 0),
    "noun": (1, 1),
    "island-clause-head": (1, None),
    "nonisland-clause-head": (1, None),
}

_NP_ATOM = {
    Case.NOM: "Nn",
    Case.ACC: "Na",
    Case.GEN: "Ng",
    Case.DAT: "Nd",
    Case.ABL: "Nabl",
    Case.LOC: "Nloc",
    Case.BARE: "N",
}


def _case(c) -> Case:
    return c if isinstance(c, Case) else Case(c)


def instantiate(
    schema: str,
    form: str,
    predicate: str,
    cases: Iterable = (),
    result_case=Case.ACC,
    given: bool = False,
) -> LexEntry:
    """Build an entry from a named category schema.

    ``instantiate("transitive", "gördü", "see", ["nom", "acc"])`` gives
    ``S: see(X1, X2)|{Nn:X1, Na:X2}`` with the verbal IS template.
    """
    if schema not in _ARITY:
        raise ValueError(f"unknown schema {schema!r}")
    cases = [_case(c) for c in cases]
    lo, hi = _ARITY[schema]
    if len(cases) < lo or (hi is not None and len(cases) > hi):
        raise ArityMismatch(f"{schema} takes {lo}{'+' if hi is None else ''} case(s), got {len(cases)}")
    xs = [f"X{i}" for i in range(1, len(cases) + 1)]
    slots = ", ".join(f"{_NP_ATOM[c]}:{x}" for c, x in zip(cases, xs))
    args = ", ".join(xs)

    if schema in ("intransitive", "transitive", "ditransitive"):
        return make_entry(form, f"S: {predicate}({args}) | {{{slots}}}", "template9", given)
    if schema == "gerund-verb":
        res = "S_" + _NP_ATOM[_case(result_case)]
        return make_entry(form, f"{res}: {predicate}({args}) | {{{slots}}}", "template9", given)
    if schema == "sentential-adjunct":
        return make_entry(form, f"S: {predicate}(P) | {{S:P}}", f"value({predicate})", given)
    if schema == "adjective":
        return make_entry(form, f"NP: {predicate}(X) | {{>NP:X}}", "var", given)
    if schema == "noun":
        return make_entry(form, f"{_NP_ATOM[cases[0]]}: {predicate}", "value", given)
    if schema == "island-clause-head":
        return make_entry(form, f"S: {predicate}({args}, P) | {{S:P}} | {{{slots}}}", "template9", given)
    return make_entry(form, f"S: {predicate}({args}, P) | {{S:P, {slots}}}", "template9", given)
