"""Syntactic categories over multisets of direction-annotated arguments."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Union

from .terms import CaseVar, Const, Renaming, Substitution, Term, Var, term_vars, unify_sem


class Case(Enum):
    NOM = "nom"
    ACC = "acc"
    GEN = "gen"
    DAT = "dat"
    ABL = "abl"
    LOC = "loc"
    BARE = "bare"


class Direction(Enum):
    LEFT = "<"
    RIGHT = ">"
    ANY = ""

    def allows(self, side: "Direction") -> bool:
        return self is Direction.ANY or self is side


CaseValue = Union[Case, CaseVar, None]

KINDS = ("S", "NP", "N")


@dataclass(frozen=True, slots=True)
class Atomic:
    kind: str
    case: CaseValue = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown category kind {self.kind!r}")
        if self.kind == "N" and self.case is not Case.BARE:
            if isinstance(self.case, Case):
                raise ValueError(f"bare noun category N cannot carry case {self.case.value}")
            object.__setattr__(self, "case", Case.BARE)


@dataclass(frozen=True, slots=True)
class ArgSlot:
    category: "Category"
    direction: Direction
    var: Term


@dataclass(frozen=True, slots=True)
class Function:
    """``result | {args}``; the argument multiset is kept in canonical order."""

    result: "Category"
    args: tuple

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(sorted(self.args, key=slot_sort_key)))


Category = Union[Atomic, Function]


def _case_key(c: CaseValue) -> str:
    if isinstance(c, Case):
        return c.value
    return "?"


def cat_sort_key(c: Category) -> tuple:
    if isinstance(c, Atomic):
        return (0, c.kind, _case_key(c.case))
    return (1, cat_sort_key(c.result), tuple(slot_sort_key(a) for a in c.args))


def slot_sort_key(a: ArgSlot) -> tuple:
    return (cat_sort_key(a.category), a.direction.value)


def result_kind(c: Category) -> str:
    while isinstance(c, Function):
        c = c.result
    return c.kind


# --- substitution / variables -------------------------------------------


def subst_cat(c: Category, s: Substitution) -> Category:
    if not len(s):
        return c
    if isinstance(c, Atomic):
        if isinstance(c.case, CaseVar):
            return Atomic(c.kind, s.walk(c.case))
        return c
    return Function(
        subst_cat(c.result, s),
        tuple(ArgSlot(subst_cat(a.category, s), a.direction, s.apply(a.var)) for a in c.args),
    )


def cat_vars(c: Category) -> Iterator[Union[Var, CaseVar]]:
    if isinstance(c, Atomic):
        if isinstance(c.case, CaseVar):
            yield c.case
        return
    yield from cat_vars(c.result)
    for a in c.args:
        yield from cat_vars(a.category)
        yield from term_vars(a.var)


# --- unification ----------------------------------------------------------


def unify_case(x: CaseValue, y: CaseValue, s: Substitution) -> Optional[Substitution]:
    x, y = s.walk(x), s.walk(y)
    if x is None or y is None or x == y:
        return s
    if isinstance(x, CaseVar):
        return s.bind(x, y)
    if isinstance(y, CaseVar):
        return s.bind(y, x)
    return None


def unify_cat(a: Category, b: Category, s: Optional[Substitution] = None) -> Optional[Substitution]:
    """Unify two categories; argument multisets are matched up to a bijection."""
    s = Substitution() if s is None else s
    if isinstance(a, Atomic) and isinstance(b, Atomic):
        if a.kind != b.kind:
            return None
        return unify_case(a.case, b.case, s)
    if isinstance(a, Function) and isinstance(b, Function):
        if len(a.args) != len(b.args):
            return None
        s = unify_cat(a.result, b.result, s)
        if s is None:
            return None
        return _match_args(a.args, list(b.args), s)
    return None


def _match_args(left: tuple, right: list, s: Substitution) -> Optional[Substitution]:
    if not left:
        return s
    first, rest = left[0], left[1:]
    for i, cand in enumerate(right):
        if cand.direction is not first.direction:
            continue
        s1 = unify_cat(first.category, cand.category, s)
        if s1 is not None:
            s1 = unify_sem(first.var, cand.var, s1)
        if s1 is not None:
            s2 = _match_args(rest, right[:i] + right[i + 1:], s1)
            if s2 is not None:
                return s2
    return None


# --- canonical forms and renaming ----------------------------------------


class Canon:
    """Builds hashable, alpha-normalized keys.

    Variables are numbered by first occurrence, so two structures that
    differ only in variable names produce the same key.
    """

    def __init__(self):
        self.seen: dict = {}

    def var(self, v) -> tuple:
        if v not in self.seen:
            self.seen[v] = len(self.seen)
        return ("$", self.seen[v])

    def term(self, t: Term) -> tuple:
        if isinstance(t, Var):
            return self.var(t)
        if isinstance(t, Const):
            return ("c", t.name)
        return ("f", t.functor, tuple(self.term(a) for a in t.args))

    def case(self, c: CaseValue):
        if isinstance(c, CaseVar):
            return self.var(c)
        return c.value if c is not None else None

    def cat(self, c: Category) -> tuple:
        if isinstance(c, Atomic):
            return (c.kind, self.case(c.case))
        return (
            "|",
            self.cat(c.result),
            tuple((self.cat(a.category), a.direction.value, self.term(a.var)) for a in c.args),
        )


def fresh_substitution(variables, counter: Iterator[int]) -> Renaming:
    """Map each variable to a fresh one drawn from ``counter``."""
    m = {}
    for v in variables:
        if v in m:
            continue
        n = next(counter)
        if isinstance(v, CaseVar):
            m[v] = CaseVar(n, v.name)
        else:
            # Keep the letter for traces, number it so two copies stay distinct.
            m[v] = Var(n, f"{v.name.rstrip('0123456789') or '_G'}{n}")
    return Renaming(m)


def standardize_cat(c: Category, counter: Optional[Iterator[int]] = None) -> Category:
    counter = counter if counter is not None else itertools.count(1)
    return subst_cat(c, fresh_substitution(cat_vars(c), counter))


def format_case(c: CaseValue) -> str:
    if isinstance(c, Case):
        return c.value
    if isinstance(c, CaseVar):
        return str(c)
    return ""


_NP_ABBREV = {
    Case.NOM: "Nn",
    Case.ACC: "Na",
    Case.GEN: "Ng",
    Case.DAT: "Nd",
    Case.ABL: "Nabl",
    Case.LOC: "Nloc",
}


def format_atomic(a: Atomic) -> str:
    if a.kind == "N":
        return "N"
    if isinstance(a.case, Case):
        abbrev = _NP_ABBREV[a.case]
        return abbrev if a.kind == "NP" else f"S_{abbrev}"
    return a.kind


def format_cat(c: Category, with_vars: bool = True) -> str:
    if isinstance(c, Atomic):
        return format_atomic(c)
    res = format_cat(c.result, with_vars)
    slots = []
    for a in c.args:
        inner = format_cat(a.category, with_vars)
        if isinstance(a.category, Function):
            inner = f"({inner})"
        txt = a.direction.value + inner
        if with_vars:
            txt += f":{a.var}"
        slots.append(txt)
    return f"{res}|{{{', '.join(slots)}}}"
