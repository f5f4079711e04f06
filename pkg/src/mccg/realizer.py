"""Word-order generation by enumerating permutations and filtering with the parser."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from .infostruct import EMPTY_DM, DiscourseModel
from .lexicon import Lexicon, TokenUnknown
from .parser import Parser
from .patterns import WILDCARD, match_as, matches
from .rules import DEFAULT_CONFIG, GrammarConfig

MAX_BAG = 9


class BagTooLarge(ValueError):
    """More words than the permutation guard allows."""


@dataclass(frozen=True)
class RealizationRequest:
    target_as: object
    target_is: object = WILDCARD
    bag: tuple = ()
    dm: DiscourseModel = EMPTY_DM

    def __post_init__(self):
        object.__setattr__(self, "bag", tuple(self.bag))


def orders(bag: Iterable[str]) -> list[tuple]:
    """Distinct permutations of ``bag`` in lexicographic order."""
    return sorted(set(itertools.permutations(bag)))


def realize(
    req: RealizationRequest,
    lexicon: Lexicon,
    config: GrammarConfig = DEFAULT_CONFIG,
    parser: Optional[Parser] = None,
) -> list[str]:
    """Every order of ``req.bag`` that parses to the target AS with a matching IS."""
    if len(req.bag) > MAX_BAG:
        raise BagTooLarge(f"{len(req.bag)} words; at most {MAX_BAG} are permuted")
    for form in req.bag:
        lexicon.lookup(form)  # raises TokenUnknown early
    # One parser for all permutations: cells are shared between them.
    parser = parser or Parser(lexicon, req.dm, config)
    out = []
    for order in orders(req.bag):
        for r in parser.parse(order):
            if match_as(req.target_as, r.as_term) and matches(req.target_is, r.is_node):
                out.append(" ".join(order))
                break
    return sorted(set(out))


__all__ = ["BagTooLarge", "MAX_BAG", "RealizationRequest", "TokenUnknown", "orders", "realize"]
