"""Patterns over AS terms and IS trees, with ``*`` wildcards.

Syntax (also used in corpus files and on the command line)::

    value   := '*' | 'inferrable' | isnode | term
    isnode  := '{' field (',' field)* '}'
    field   := ('topic' | 'focus') ':' value | 'ground' ':' ground
    ground  := '*' | '[' [ value (',' value)* ] [ ',' '...' ] ']'

Ground lists match as multisets; a trailing ``...`` allows extra members.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .infostruct import INFERRABLE, Comment, ISNode, ISValue, _Inferrable
from .notation import NotationError, TokenStream, _raw_term, _Scope
from .terms import Term


class _Wildcard:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "WILDCARD"

    def __str__(self) -> str:
        return "*"


WILDCARD = _Wildcard()


@dataclass(frozen=True)
class GroundPattern:
    items: tuple
    open: bool = False

    def __str__(self) -> str:
        parts = [format_pattern(i) for i in self.items]
        if self.open:
            parts.append("...")
        return "[" + ", ".join(parts) + "]"


@dataclass(frozen=True)
class ISPattern:
    topic: object = WILDCARD
    focus: object = WILDCARD
    ground: Union[GroundPattern, _Wildcard] = WILDCARD

    def __str__(self) -> str:
        return (
            f"{{topic: {format_pattern(self.topic)}, focus: {format_pattern(self.focus)}, "
            f"ground: {format_pattern(self.ground)}}}"
        )


Pattern = Union[_Wildcard, Term, _Inferrable, ISNode, ISPattern]


def format_pattern(p) -> str:
    if isinstance(p, ISNode):
        from .infostruct import format_is

        return format_is(p)
    return str(p)


# --- parsing --------------------------------------------------------------


def _value(ts: TokenStream):
    if ts.accept("*"):
        return WILDCARD
    if ts.at("{"):
        return _isnode(ts)
    if ts.peek.value == "inferrable" and ts.peek.kind == "ident":
        ts.next()
        return INFERRABLE
    return _Scope(auto=False).build(_raw_term(ts))


def _ground(ts: TokenStream):
    if ts.accept("*"):
        return WILDCARD
    ts.expect("[")
    items = []
    is_open = False
    if not ts.at("]"):
        while True:
            if ts.accept("..."):
                is_open = True
                break
            items.append(_value(ts))
            if not ts.accept(","):
                break
    ts.expect("]")
    return GroundPattern(tuple(items), is_open)


def _isnode(ts: TokenStream) -> ISPattern:
    ts.expect("{")
    fields = {}
    while True:
        name = ts.ident()
        if name not in ("topic", "focus", "ground") or name in fields:
            ts.error(f"bad or repeated IS field {name!r}")
        ts.expect(":")
        fields[name] = _ground(ts) if name == "ground" else _value(ts)
        if not (ts.accept(",") or ts.accept(";")):
            break
    ts.expect("}")
    return ISPattern(**fields)


def parse_value_pattern(text: str):
    ts = TokenStream(text)
    v = _value(ts)
    ts.done()
    return v


def parse_ground_pattern(text: str):
    text = text.strip()
    if text and text not in ("*",) and not text.startswith("["):
        text = f"[{text}]"
    ts = TokenStream(text)
    g = _ground(ts)
    ts.done()
    return g


def parse_is_pattern(text: str) -> ISPattern:
    ts = TokenStream(text)
    p = _isnode(ts)
    ts.done()
    return p


def parse_is(text: str) -> ISNode:
    """Parse a fully specified IS tree (no wildcards)."""
    p = parse_is_pattern(text)
    node = pattern_to_node(p)
    if node is None:
        raise NotationError("IS contains wildcards or an open ground list", text)
    return node


def pattern_to_node(p):
    if isinstance(p, ISPattern):
        if not isinstance(p.ground, GroundPattern) or p.ground.open:
            return None
        parts = [pattern_to_node(x) for x in (p.topic, p.focus, *p.ground.items)]
        if any(x is None for x in parts):
            return None
        return ISNode(parts[0], Comment(parts[1], tuple(parts[2:])))
    if isinstance(p, _Wildcard):
        return None
    return p


# --- matching -------------------------------------------------------------


def matches(pattern, value: ISValue) -> bool:
    """Structural match with wildcards; ground lists ignore order."""
    if isinstance(pattern, _Wildcard):
        return True
    if isinstance(pattern, ISNode):
        pattern = ISPattern(pattern.topic, pattern.focus, GroundPattern(pattern.ground))
    if isinstance(pattern, ISPattern):
        if not isinstance(value, ISNode):
            return False
        return (
            matches(pattern.topic, value.topic)
            and matches(pattern.focus, value.focus)
            and _match_ground(pattern.ground, value.ground)
        )
    return pattern == value


def _match_ground(pattern, ground: tuple) -> bool:
    if isinstance(pattern, _Wildcard):
        return True
    if len(pattern.items) > len(ground) or (not pattern.open and len(pattern.items) != len(ground)):
        return False
    return _assign(list(pattern.items), list(ground))


def _assign(items: list, pool: list) -> bool:
    if not items:
        return True
    first, rest = items[0], items[1:]
    for i, g in enumerate(pool):
        if matches(first, g) and _assign(rest, pool[:i] + pool[i + 1:]):
            return True
    return False


def match_as(pattern, term: Term) -> bool:
    return isinstance(pattern, _Wildcard) or pattern == term
