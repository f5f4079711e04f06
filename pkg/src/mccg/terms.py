"""Semantic terms and first-order unification.

Terms are immutable.  A :class:`Substitution` maps variables (semantic
:class:`Var` and case-feature :class:`CaseVar`) to values and is applied
with :meth:`Substitution.apply`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional, Union


@dataclass(frozen=True, slots=True)
class Var:
    id: int
    name: str = field(default="", compare=False)

    def __str__(self) -> str:
        return self.name or f"_G{self.id}"


@dataclass(frozen=True, slots=True)
class Const:
    name: str

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True, slots=True)
class Compound:
    functor: str
    args: tuple

    def __str__(self) -> str:
        return f"{self.functor}({', '.join(map(str, self.args))})"


Term = Union[Var, Const, Compound]


@dataclass(frozen=True, slots=True)
class CaseVar:
    """A case feature left open in the lexicon; bound during unification."""

    id: int
    name: str = field(default="", compare=False)

    def __str__(self) -> str:
        return "?" + (self.name or str(self.id))


def term_vars(t: Term) -> Iterator[Var]:
    if isinstance(t, Var):
        yield t
    elif isinstance(t, Compound):
        for a in t.args:
            yield from term_vars(a)


def term_constants(t: Term) -> Iterator[str]:
    """Entity constants occurring as leaves of ``t`` (functors excluded)."""
    if isinstance(t, Const):
        yield t.name
    elif isinstance(t, Compound):
        for a in t.args:
            yield from term_constants(a)


def is_ground(t: Term) -> bool:
    return next(term_vars(t), None) is None


class Substitution:
    """Finite map from variables to terms (or cases, for :class:`CaseVar`).

    Bindings are stored in triangular form; :meth:`apply` resolves fully,
    so applying a substitution twice gives the same result as once.
    """

    __slots__ = ("_map",)

    def __init__(self, bindings: Optional[dict] = None):
        self._map = dict(bindings) if bindings else {}

    def __contains__(self, v) -> bool:
        return v in self._map

    def __len__(self) -> int:
        return len(self._map)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}↦{self.apply(v)}" for k, v in self._map.items())
        return "{" + inner + "}"

    def __eq__(self, other) -> bool:
        return isinstance(other, Substitution) and self.resolved() == other.resolved()

    def bind(self, v, value) -> "Substitution":
        new = Substitution(self._map)
        new._map[v] = value
        return new

    def walk(self, t):
        while (isinstance(t, (Var, CaseVar))) and t in self._map:
            t = self._map[t]
        return t

    def apply(self, t):
        """Apply to a term or a case value."""
        if not self._map:
            return t
        t = self.walk(t)
        if isinstance(t, Compound):
            return Compound(t.functor, tuple(self.apply(a) for a in t.args))
        return t

    def resolved(self) -> dict:
        """Idempotent mapping: every value fully resolved."""
        return {k: self.apply(k) for k in self._map}


class Renaming(Substitution):
    """Simultaneous variable renaming: values are never looked up again, so
    fresh ids may coincide with ids of renamed variables."""

    __slots__ = ()

    def walk(self, t):
        if isinstance(t, (Var, CaseVar)):
            return self._map.get(t, t)
        return t


def occurs(v: Var, t: Term, s: Substitution) -> bool:
    t = s.walk(t)
    if t == v:
        return True
    if isinstance(t, Compound):
        return any(occurs(v, a, s) for a in t.args)
    return False


def unify_sem(a: Term, b: Term, s: Optional[Substitution] = None) -> Optional[Substitution]:
    """Most general unifier of ``a`` and ``b`` extending ``s``, or None."""
    s = Substitution() if s is None else s
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        x, y = s.walk(x), s.walk(y)
        if x == y:
            continue
        if isinstance(x, Var):
            if occurs(x, y, s):
                return None
            s = s.bind(x, y)
        elif isinstance(y, Var):
            if occurs(y, x, s):
                return None
            s = s.bind(y, x)
        elif isinstance(x, Compound) and isinstance(y, Compound):
            if x.functor != y.functor or len(x.args) != len(y.args):
                return None
            stack.extend(zip(x.args, y.args))
        else:
            return None
    return s
