"""Text notation for semantic terms and category expressions.

Category expressions follow the usual categorial shorthand::

    S: see(X, Y) | {Nn:X, Na:Y}
    S: when(finish(X, Y), P) | {S:P} | {Nn:X, Na:Y}
    NP: little(X) | {>NP:X}

The grammar is documented in ``docs/lexicon-format.md``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .categories import ArgSlot, Atomic, Case, Category, Direction, Function
from .terms import CaseVar, Compound, Const, Term, Var

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<ellipsis>\.\.\.)
  | (?P<ident>[^\W\d][\w']*)
  | (?P<num>\d+)
  | (?P<punct>[(){}\[\],:;|<>*=])
    """,
    re.VERBOSE,
)


class NotationError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = -1):
        self.text = text
        self.pos = pos
        where = f" at column {pos + 1}" if pos >= 0 else ""
        super().__init__(f"{message}{where}" + (f": {text!r}" if text else ""))


@dataclass
class Token:
    kind: str
    value: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            raise NotationError(f"unexpected character {text[i]!r}", text, i)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind, m.group(), i))
        i = m.end()
    out.append(Token("end", "", len(text)))
    return out


class TokenStream:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, value: str) -> bool:
        return self.peek.value == value and self.peek.kind != "end"

    def accept(self, value: str) -> bool:
        if self.at(value):
            self.i += 1
            return True
        return False

    def expect(self, value: str) -> Token:
        if not self.at(value):
            self.error(f"expected {value!r}")
        return self.next()

    def ident(self) -> str:
        tok = self.peek
        if tok.kind != "ident":
            self.error("expected a name")
        self.i += 1
        return tok.value

    def error(self, message: str):
        raise NotationError(message, self.text, self.peek.pos)

    def done(self):
        if self.peek.kind != "end":
            self.error("unexpected trailing input")


# --- terms ----------------------------------------------------------------

_AUTO_VAR = re.compile(r"^(?:[A-Za-z][0-9']*|_\w*)$")


def is_variable_name(name: str) -> bool:
    """Single letters (optionally numbered) and ``_``-prefixed names."""
    return bool(_AUTO_VAR.match(name))


def _raw_term(ts: TokenStream):
    name = ts.ident()
    if ts.accept("("):
        args = [_raw_term(ts)]
        while ts.accept(","):
            args.append(_raw_term(ts))
        ts.expect(")")
        return (name, args)
    return (name, None)


class _Scope:
    """Name → variable mapping for one expression."""

    def __init__(self, var_names=(), auto: bool = True, start: int = 1):
        self.var_names = set(var_names)
        self.auto = auto
        self.vars: dict[str, Var] = {}
        self.case_vars: dict[str, CaseVar] = {}
        self.next_id = start

    def is_var(self, name: str) -> bool:
        return name in self.var_names or (self.auto and is_variable_name(name))

    def var(self, name: str) -> Var:
        if name not in self.vars:
            self.vars[name] = Var(self.next_id, name)
            self.next_id += 1
        return self.vars[name]

    def case_var(self, kind: str) -> CaseVar:
        if kind not in self.case_vars:
            self.case_vars[kind] = CaseVar(self.next_id, kind)
            self.next_id += 1
        return self.case_vars[kind]

    def build(self, raw) -> Term:
        name, args = raw
        if args is None:
            return self.var(name) if self.is_var(name) else Const(name)
        return Compound(name, tuple(self.build(a) for a in args))


def parse_term(text: str, variables: bool = True) -> Term:
    """Parse ``see(Fatma, Ahmet)``.  With ``variables=False`` every name is
    a constant."""
    ts = TokenStream(text)
    raw = _raw_term(ts)
    ts.done()
    return _Scope(auto=variables).build(raw)


# --- categories -----------------------------------------------------------

_CASE_ABBREV = {
    "Nn": Case.NOM,
    "Na": Case.ACC,
    "Ng": Case.GEN,
    "Nd": Case.DAT,
    "Nabl": Case.ABL,
    "Nloc": Case.LOC,
}


def _atom(ts: TokenStream, scope: _Scope) -> Atomic:
    tok = ts.peek
    name = ts.ident()
    if name in ("S", "NP", "N"):
        if ts.accept("["):
            case_name = ts.ident()
            ts.expect("]")
            try:
                case = Case(case_name)
            except ValueError:
                raise NotationError(f"unknown case {case_name!r}", ts.text, tok.pos) from None
            return Atomic(name, case)
        if name == "N":
            return Atomic("N", Case.BARE)
        return Atomic(name, scope.case_var(name))
    if name in _CASE_ABBREV:
        return Atomic("NP", _CASE_ABBREV[name])
    if name.startswith("S_") and name[2:] in _CASE_ABBREV:
        return Atomic("S", _CASE_ABBREV[name[2:]])
    raise NotationError(f"unknown category {name!r}", ts.text, tok.pos)


def _slot(ts: TokenStream, scope: _Scope, slot_vars: list):
    direction = Direction.ANY
    if ts.accept(">"):
        direction = Direction.RIGHT
    elif ts.accept("<"):
        direction = Direction.LEFT
    if ts.accept("("):
        cat = _cat_tail(ts, scope, _atom(ts, scope), slot_vars)
        ts.expect(")")
    else:
        cat = _atom(ts, scope)
    if not ts.accept(":"):
        ts.error("argument needs a semantic variable, e.g. Nn:X")
    tok = ts.peek
    name = ts.ident()
    slot_vars.append((name, tok.pos))
    return (cat, direction, name)


def _argset(ts: TokenStream, scope: _Scope, slot_vars: list) -> list:
    if ts.accept("{"):
        if ts.accept("}"):
            return []
        slots = [_slot(ts, scope, slot_vars)]
        while ts.accept(","):
            slots.append(_slot(ts, scope, slot_vars))
        ts.expect("}")
        return slots
    return [_slot(ts, scope, slot_vars)]


def _cat_tail(ts: TokenStream, scope: _Scope, head, slot_vars: list):
    layers = []
    while ts.accept("|"):
        layers.append(_argset(ts, scope, slot_vars))
    return ("cat", head, layers)


def _build_cat(raw, scope: _Scope) -> Category:
    if isinstance(raw, Atomic):
        return raw
    _, head, layers = raw
    cat: Category = head
    for layer in layers:
        cat = Function(
            cat,
            tuple(ArgSlot(_build_cat(c, scope), d, scope.var(n)) for c, d, n in layer),
        )
    return cat


@dataclass
class CategoryExpr:
    category: Category
    sem: Term
    slot_vars: list  # (name, column) per slot, in written order


def parse_category(text: str, start: int = 1) -> CategoryExpr:
    """Parse a lexical category expression with its semantics."""
    ts = TokenStream(text)
    scope = _Scope(start=start)
    head = _atom(ts, scope)
    if not ts.accept(":"):
        ts.error("expected ':' and a semantic term after the result category")
    raw_sem = _raw_term(ts)
    slot_vars: list = []
    raw_cat = _cat_tail(ts, scope, head, slot_vars)
    ts.done()
    scope.var_names = {n for n, _ in slot_vars}
    sem = scope.build(raw_sem)
    cat = _build_cat(raw_cat, scope)
    return CategoryExpr(cat, sem, slot_vars)


def parse_bare_category(text: str) -> Category:
    """A category without semantics, e.g. ``S|{Nn:X}`` (used in tests and flags)."""
    ts = TokenStream(text)
    scope = _Scope()
    slot_vars: list = []
    raw = _cat_tail(ts, scope, _atom(ts, scope), slot_vars)
    ts.done()
    return _build_cat(raw, scope)


def format_term(t: Term) -> str:
    return str(t)


def format_category_expr(category: Category, sem: Term) -> str:
    from .rules import SynSem

    return str(SynSem(category, sem))


__all__ = [
    "CategoryExpr",
    "NotationError",
    "TokenStream",
    "format_category_expr",
    "format_term",
    "is_variable_name",
    "parse_bare_category",
    "parse_category",
    "parse_term",
    "tokenize",
]
