from pathlib import Path

import pytest

from mccg.corpus import DATA_DIR
from mccg.infostruct import DiscourseModel
from mccg.lexicon import load_lexicon
from mccg.parser import Parser


@pytest.fixture(scope="session")
def lex():
    return load_lexicon(DATA_DIR / "turkish.lex")


@pytest.fixture(scope="session")
def nonisland_lex():
    return load_lexicon(DATA_DIR / "turkish.lex", DATA_DIR / "bitirince_nonisland.lex")


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def parse(lex):
    def run(sentence, dm=(), lexicon=None, **kw):
        return Parser(lexicon or lex, DiscourseModel.of(dm), **kw).parse(sentence.split())

    return run
