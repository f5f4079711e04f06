"""Ordering categories and the information-structure (IS) rules.

A verb's ordering category is a curried template that collects a focus,
optional preverbal ground, a topic and optional postverbal ground, in that
order.  Nonverbal constituents carry an :class:`OrderingValue`.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum
from typing import Iterable, Iterator, Optional, Union

from .categories import Canon, Direction
from .terms import Compound, Const, Substitution, Term, Var, term_constants, term_vars, unify_sem


class Role(Enum):
    TOPIC = "topic"
    FOCUS = "focus"
    GROUND = "ground"


class _Inferrable(Enum):
    INFERRABLE = "inferrable"

    def __str__(self) -> str:
        return "inferrable"

    def __repr__(self) -> str:
        return "INFERRABLE"


INFERRABLE = _Inferrable.INFERRABLE


class Given(Enum):
    GIVEN = "given"
    NEW = "new"
    UNKNOWN = "unknown"


class GivennessViolation(Exception):
    """A postverbal filler is not discourse-old."""


class IncompleteArgument(Exception):
    """An ordering argument still has obligatory components to find."""


@dataclass(frozen=True, slots=True)
class Comment:
    focus: "ISValue"
    ground: tuple


@dataclass(frozen=True, slots=True)
class ISNode:
    topic: "ISValue"
    comment: Comment

    @property
    def focus(self) -> "ISValue":
        return self.comment.focus

    @property
    def ground(self) -> tuple:
        return self.comment.ground

    def __str__(self) -> str:
        return format_is(self)


ISValue = Union[Var, Const, Compound, _Inferrable, ISNode]


def format_is(v: ISValue) -> str:
    if isinstance(v, ISNode):
        ground = ", ".join(format_is(g) for g in v.ground)
        return f"{{topic: {format_is(v.topic)}, focus: {format_is(v.focus)}, ground: [{ground}]}}"
    return str(v)


def is_nodes(v: ISValue) -> Iterator[ISNode]:
    """Every ISNode in ``v``, outermost first."""
    if isinstance(v, ISNode):
        yield v
        for part in (v.topic, v.focus, *v.ground):
            yield from is_nodes(part)


def _subst_value(v: ISValue, s: Substitution) -> ISValue:
    if isinstance(v, ISNode):
        return ISNode(
            _subst_value(v.topic, s),
            Comment(_subst_value(v.focus, s), tuple(_subst_value(g, s) for g in v.ground)),
        )
    if isinstance(v, _Inferrable):
        return v
    return s.apply(v)


def _value_vars(v: ISValue) -> Iterator[Var]:
    if isinstance(v, ISNode):
        for part in (v.topic, v.focus, *v.ground):
            yield from _value_vars(part)
    elif not isinstance(v, _Inferrable):
        yield from term_vars(v)


def _value_key(v: ISValue, canon: Canon):
    if isinstance(v, ISNode):
        return (
            "IS",
            _value_key(v.topic, canon),
            _value_key(v.focus, canon),
            tuple(_value_key(g, canon) for g in v.ground),
        )
    if isinstance(v, _Inferrable):
        return "inferrable"
    return canon.term(v)


@dataclass(frozen=True)
class DiscourseModel:
    entities: frozenset = frozenset()

    def __contains__(self, name: str) -> bool:
        return name in self.entities

    @classmethod
    def of(cls, names: Iterable[str]) -> "DiscourseModel":
        return cls(frozenset(names))


EMPTY_DM = DiscourseModel()


# --- ordering categories --------------------------------------------------


@dataclass(frozen=True, slots=True)
class OrderingSlot:
    role: Role
    direction: Direction
    optional: bool = False
    repeatable: bool = False
    requires_given: bool = False

    def __str__(self) -> str:
        slash = "/" if self.direction is Direction.RIGHT else "\\"
        body = self.role.value.capitalize()
        if self.optional:
            body = f"({body}{'*' if self.repeatable else ''})"
        return slash + body


@dataclass(frozen=True, slots=True)
class OrderingValue:
    value: ISValue
    given: Given = Given.UNKNOWN
    inherent_given: bool = False

    def subst(self, s: Substitution) -> "OrderingValue":
        return replace(self, value=_subst_value(self.value, s))

    def variables(self) -> Iterator[Var]:
        yield from _value_vars(self.value)

    def key(self, canon: Canon) -> tuple:
        return ("V", _value_key(self.value, canon), self.given.value, self.inherent_given)

    def __str__(self) -> str:
        return format_is(self.value)


FOCUS_SLOT = OrderingSlot(Role.FOCUS, Direction.LEFT)
LEFT_GROUND_SLOT = OrderingSlot(Role.GROUND, Direction.LEFT, optional=True, repeatable=True)
TOPIC_SLOT = OrderingSlot(Role.TOPIC, Direction.LEFT)
RIGHT_GROUND_SLOT = OrderingSlot(
    Role.GROUND, Direction.RIGHT, optional=True, repeatable=True, requires_given=True
)

VARIANTS = ("standard", "inferrable", "verb-focus")


@dataclass(frozen=True, slots=True)
class OrderingFunction:
    """A verb's IS template part-way through the derivation.

    ``pending`` is consumed front to back.  Preverbal ground fillers are
    kept in surface order, as are postverbal ones.
    """

    verb: Term
    variant: str
    pending: tuple
    topic: Union[OrderingValue, _Inferrable, None] = None
    focus: Optional[OrderingValue] = None
    left_ground: tuple = ()
    right_ground: tuple = ()
    embedded: tuple = ()

    def _fillers(self) -> Iterator[OrderingValue]:
        if isinstance(self.topic, OrderingValue):
            yield self.topic
        if self.focus is not None:
            yield self.focus
        yield from self.embedded
        yield from self.left_ground
        yield from self.right_ground

    def subst(self, s: Substitution) -> "OrderingFunction":
        if not len(s):
            return self
        sub = lambda v: v.subst(s) if isinstance(v, OrderingValue) else v  # noqa: E731
        return replace(
            self,
            verb=s.apply(self.verb),
            topic=sub(self.topic),
            focus=sub(self.focus),
            left_ground=tuple(map(sub, self.left_ground)),
            right_ground=tuple(map(sub, self.right_ground)),
            embedded=tuple(map(sub, self.embedded)),
        )

    def variables(self) -> Iterator[Var]:
        yield from term_vars(self.verb)
        for v in self._fillers():
            yield from v.variables()

    def key(self, canon: Canon) -> tuple:
        k = lambda v: v.key(canon) if isinstance(v, OrderingValue) else v  # noqa: E731
        return (
            "F",
            canon.term(self.verb),
            self.variant,
            self.pending,
            k(self.topic),
            k(self.focus),
            tuple(map(k, self.left_ground)),
            tuple(map(k, self.right_ground)),
            tuple(map(k, self.embedded)),
        )

    def __str__(self) -> str:
        def show(v):
            if v is None:
                return "_"
            return format_is(v.value) if isinstance(v, OrderingValue) else str(v)

        ground = [format_is(self.verb)] + [show(g) for g in self.embedded + self.left_ground + self.right_ground]
        pend = "".join(map(str, self.pending))
        return f"[T:{show(self.topic)} F:{show(self.focus)} G:{', '.join(ground)}]{pend}"


OrderingCategory = Union[OrderingValue, OrderingFunction]


def template9(verb: Term, variant: str = "standard") -> OrderingFunction:
    """The verbal IS template, in one of three variants.

    ``standard`` finds a focus, preverbal ground, a topic and postverbal
    ground.  ``inferrable`` has no topic slot and presets the topic to
    :data:`INFERRABLE`.  ``verb-focus`` serves clauses with nothing before
    the verb: the topic is inferrable and the verb itself is the focus.
    """
    if variant == "standard":
        return OrderingFunction(verb, variant, (FOCUS_SLOT, LEFT_GROUND_SLOT, TOPIC_SLOT, RIGHT_GROUND_SLOT))
    if variant == "inferrable":
        return OrderingFunction(verb, variant, (FOCUS_SLOT, LEFT_GROUND_SLOT, RIGHT_GROUND_SLOT), topic=INFERRABLE)
    if variant == "verb-focus":
        return OrderingFunction(
            verb,
            variant,
            (RIGHT_GROUND_SLOT,),
            topic=INFERRABLE,
            focus=OrderingValue(verb, Given.UNKNOWN),
        )
    raise ValueError(f"unknown template variant {variant!r}")


# --- givenness ------------------------------------------------------------


def value_status(value: ISValue, dm: DiscourseModel, inherent: bool = False) -> Given:
    if inherent or isinstance(value, _Inferrable):
        return Given.GIVEN
    if isinstance(value, ISNode):
        raise TypeError("status of a nested IS is computed at completion")
    names = list(term_constants(value))
    if not names:
        return Given.UNKNOWN
    return Given.GIVEN if all(n in dm for n in names) else Given.NEW


def lexical_value(value: ISValue, dm: DiscourseModel, inherent: bool = False) -> OrderingValue:
    return OrderingValue(value, value_status(value, dm, inherent), inherent)


def givenness_check(v: OrderingValue, dm: DiscourseModel) -> bool:
    """True iff ``v`` is discourse-old: inherently, or every entity is in ``dm``."""
    if v.inherent_given or isinstance(v.value, _Inferrable):
        return True
    if isinstance(v.value, ISNode):
        return v.given is Given.GIVEN
    return all(n in dm for n in term_constants(v.value))


def meet(a: Given, b: Given) -> Optional[Given]:
    if a is Given.UNKNOWN:
        return b
    if b is Given.UNKNOWN or a is b:
        return a
    return None


# --- rules ----------------------------------------------------------------


def complete(fn: OrderingCategory) -> Optional[ISNode]:
    """The finished IS, skipping any optional slots; None if something
    obligatory is missing."""
    if not isinstance(fn, OrderingFunction):
        return None
    if any(not slot.optional for slot in fn.pending):
        return None
    if fn.topic is None or fn.focus is None:
        return None
    topic = fn.topic.value if isinstance(fn.topic, OrderingValue) else fn.topic
    ground = (fn.verb,) + tuple(v.value for v in fn.embedded + fn.left_ground + fn.right_ground)
    return ISNode(topic, Comment(fn.focus.value, ground))


def _nested_status(fn: OrderingFunction) -> Given:
    fillers = list(fn._fillers())
    if fn.variant == "verb-focus":
        fillers = fillers[1:]
    statuses = [f.given for f in fillers]
    if any(s is Given.NEW for s in statuses):
        return Given.NEW
    if all(s is Given.GIVEN for s in statuses):
        return Given.GIVEN
    return Given.UNKNOWN


def as_argument(arg: OrderingCategory) -> OrderingValue:
    """An ordering category in argument position, reduced to a value.

    A verbal template must already be complete; its IS becomes a nested
    value.
    """
    if isinstance(arg, OrderingValue):
        return arg
    node = complete(arg)
    if node is None:
        raise IncompleteArgument(str(arg))
    return OrderingValue(node, _nested_status(arg))


def _fill(fn: OrderingFunction, value: OrderingValue, dm: DiscourseModel) -> OrderingFunction:
    slot = fn.pending[0]
    if slot.requires_given and not givenness_check(value, dm):
        raise GivennessViolation(f"{value} is not discourse-old")
    pending = fn.pending if slot.repeatable else fn.pending[1:]
    if slot.role is Role.FOCUS:
        return replace(fn, focus=value, pending=pending)
    if slot.role is Role.TOPIC:
        return replace(fn, topic=value, pending=pending)
    if slot.direction is Direction.LEFT:
        # Inside-out consumption: each new preverbal filler sits further left.
        return replace(fn, left_ground=(value,) + fn.left_ground, pending=pending)
    return replace(fn, right_ground=fn.right_ground + (value,), pending=pending)


def ord_forward_apply(fn: OrderingCategory, arg: OrderingCategory, dm: DiscourseModel = EMPTY_DM):
    """``X/Y Y ⇒ X``.  Returns None when inapplicable.

    Raises :class:`IncompleteArgument` or :class:`GivennessViolation`.
    """
    if not isinstance(fn, OrderingFunction) or not fn.pending:
        return None
    if fn.pending[0].direction is not Direction.RIGHT:
        return None
    return _fill(fn, as_argument(arg), dm)


def ord_backward_apply(arg: OrderingCategory, fn: OrderingCategory, dm: DiscourseModel = EMPTY_DM):
    """``Y X\\Y ⇒ X``; mirror of :func:`ord_forward_apply`."""
    if not isinstance(fn, OrderingFunction) or not fn.pending:
        return None
    if fn.pending[0].direction is not Direction.LEFT:
        return None
    return _fill(fn, as_argument(arg), dm)


def ord_identity(a: OrderingCategory, b: OrderingCategory, phrase: Optional[Term] = None):
    """``X X ⇒ X`` for two values; the result denotes ``phrase`` when given."""
    if not (isinstance(a, OrderingValue) and isinstance(b, OrderingValue)):
        return None
    x, y = a.value, b.value
    if isinstance(x, (ISNode, _Inferrable)) or isinstance(y, (ISNode, _Inferrable)):
        if x != y:
            return None
        s = Substitution()
    else:
        s = unify_sem(x, y)
        if s is None:
            return None
    status = meet(a.given, b.given)
    if status is None:
        return None
    informative = [v for v in (a, b) if v.given is not Given.UNKNOWN]
    inherent = bool(informative) and all(v.inherent_given for v in informative)
    value = phrase if phrase is not None else _subst_value(x, s)
    return OrderingValue(value, status, inherent)


def ord_skip(fn: OrderingCategory) -> Optional[OrderingFunction]:
    """``X|(Y) ⇒ X``: drop an optional next slot."""
    if not isinstance(fn, OrderingFunction) or not fn.pending or not fn.pending[0].optional:
        return None
    return replace(fn, pending=fn.pending[1:])


def embed(matrix: OrderingFunction, sub: OrderingFunction) -> Optional[OrderingFunction]:
    """Verb composition: the completed subordinate IS joins the matrix ground."""
    node = complete(sub)
    if node is None:
        return None
    return replace(matrix, embedded=matrix.embedded + (OrderingValue(node, _nested_status(sub)),))
