"""Multiset-CCG: free word order syntax with parallel information structure."""

from .infostruct import INFERRABLE, DiscourseModel, ISNode
from .lexicon import Lexicon, load_lexicon
from .parser import Parser, ParseResult, parse
from .terms import Compound, Const, Var

__version__ = "0.1.0"

__all__ = [
    "INFERRABLE",
    "Compound",
    "Const",
    "DiscourseModel",
    "ISNode",
    "Lexicon",
    "ParseResult",
    "Parser",
    "Var",
    "load_lexicon",
    "parse",
]
