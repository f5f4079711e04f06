"""Application, composition and clean-up over syntax/semantics pairs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .categories import (
    ArgSlot,
    Atomic,
    Canon,
    Category,
    Direction,
    Function,
    cat_vars,
    format_cat,
    result_kind,
    subst_cat,
    unify_cat,
)
from .terms import Substitution, Term, term_vars, unify_sem


class RestrictionViolation(Exception):
    """Composition blocked only because the shared category is nominal."""


@dataclass(frozen=True)
class GrammarConfig:
    # Turkish: NPs are continuous and head-final, so nominal categories never compose.
    restrict_np_composition: bool = True
    composition: bool = True


DEFAULT_CONFIG = GrammarConfig()


@dataclass(frozen=True, slots=True)
class SynSem:
    category: Category
    sem: Term

    @property
    def head_is_noun_class(self) -> bool:
        return result_kind(self.category) in ("N", "NP")

    def subst(self, s: Substitution) -> "SynSem":
        return SynSem(subst_cat(self.category, s), s.apply(self.sem))

    def variables(self) -> Iterator:
        yield from cat_vars(self.category)
        yield from term_vars(self.sem)

    def key(self, canon: Optional[Canon] = None) -> tuple:
        canon = canon or Canon()
        return (canon.cat(self.category), canon.term(self.sem))

    def __str__(self) -> str:
        # Semantics sits next to the innermost result: "S: see(X, Y)|{...}".
        inner = self.category
        while isinstance(inner, Function):
            inner = inner.result
        text = format_cat(self.category)
        prefix = format_cat(inner)
        return f"{prefix}: {self.sem}{text[len(prefix):]}"


def _without(args: tuple, i: int) -> tuple:
    return args[:i] + args[i + 1:]


def _apply(fn: SynSem, arg: SynSem, side: Direction) -> list[tuple[SynSem, Substitution]]:
    cat = fn.category
    if not isinstance(cat, Function):
        return []
    out = []
    seen = set()
    for i, slot in enumerate(cat.args):
        if not slot.direction.allows(side):
            continue
        s = unify_cat(slot.category, arg.category)
        if s is None:
            continue
        s = unify_sem(slot.var, arg.sem, s)
        if s is None:
            continue
        res = SynSem(Function(cat.result, _without(cat.args, i)), fn.sem).subst(s)
        k = res.key()
        if k not in seen:
            seen.add(k)
            out.append((res, s))
    return out


def forward_apply(fn: SynSem, arg: SynSem) -> list[SynSem]:
    """``X|(Args ∪ {Y}) Y ⇒ X|Args`` with the function on the left."""
    return [r for r, _ in _apply(fn, arg, Direction.RIGHT)]


def backward_apply(arg: SynSem, fn: SynSem) -> list[SynSem]:
    """``Y X|(Args ∪ {Y}) ⇒ X|Args`` with the function on the right."""
    return [r for r, _ in _apply(fn, arg, Direction.LEFT)]


def cleanup(c: SynSem) -> SynSem:
    """Rewrite ``X|∅`` to ``X`` until no empty argument set remains."""
    cat = c.category
    while isinstance(cat, Function) and not cat.args:
        cat = cat.result
    return c if cat is c.category else SynSem(cat, c.sem)


def _compose(
    primary: SynSem, secondary: SynSem, side: Direction, config: GrammarConfig
) -> list[tuple[SynSem, Substitution]]:
    x, y = primary.category, secondary.category
    if not (isinstance(x, Function) and isinstance(y, Function)) or not config.composition:
        return []
    out = []
    seen = set()
    blocked = False
    for i, slot in enumerate(x.args):
        if not slot.direction.allows(side):
            continue
        s = unify_cat(slot.category, y.result)
        if s is None:
            continue
        if config.restrict_np_composition and result_kind(slot.category) in ("NP", "N"):
            blocked = True
            continue
        s = unify_sem(slot.var, secondary.sem, s)
        if s is None:
            continue
        res = SynSem(Function(x.result, _without(x.args, i) + y.args), primary.sem).subst(s)
        k = res.key()
        if k not in seen:
            seen.add(k)
            out.append((res, s))
    if not out and blocked:
        raise RestrictionViolation(f"shared category is nominal: {x} / {y}")
    return out


def forward_compose(x: SynSem, y: SynSem, config: GrammarConfig = DEFAULT_CONFIG) -> list[SynSem]:
    """``X|(Ax ∪ {Y}) Y|Ay ⇒ X|(Ax ∪ Ay)`` with X on the left.

    Raises :class:`RestrictionViolation` when the nominal restriction is
    the only thing preventing a result.
    """
    return [r for r, _ in _compose(x, y, Direction.RIGHT, config)]


def backward_compose(y: SynSem, x: SynSem, config: GrammarConfig = DEFAULT_CONFIG) -> list[SynSem]:
    """``Y|Ay X|(Ax ∪ {Y}) ⇒ X|(Ax ∪ Ay)`` with X on the right."""
    return [r for r, _ in _compose(x, y, Direction.LEFT, config)]


__all__ = [
    "ArgSlot",
    "Atomic",
    "DEFAULT_CONFIG",
    "GrammarConfig",
    "RestrictionViolation",
    "SynSem",
    "backward_apply",
    "backward_compose",
    "cleanup",
    "forward_apply",
    "forward_compose",
]
