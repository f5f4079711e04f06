import itertools

import pytest

from mccg.infostruct import INFERRABLE, DiscourseModel, ISNode, OrderingFunction, OrderingValue, is_nodes
from mccg.lexicon import TokenUnknown
from mccg.parser import ChartItem, ChartLimitExceeded, Constituent, Parser, combine, parse, unary_closure
from mccg.terms import Compound, Const


def lexical(lex, token, dm=DiscourseModel()):
    p = Parser(lex, dm)
    return [item.constituent for item in p.cell(((token, 0),))]


def test_object_before_verb_becomes_focus(lex):
    [ahmet] = lexical(lex, "Ahmet'i")
    verb = [c for c in lexical(lex, "gördü") if c.ordering.variant == "standard" and len(c.ordering.pending) == 4][0]
    out = combine(ahmet, verb)
    assert [(rule, steps) for _, rule, steps in out] == [("<", ("<",))]
    [(c, _, _)] = out
    assert c.ordering.focus.value == Const("Ahmet")
    assert str(c.synsem).startswith("S: see(")


def test_adjective_and_noun_identity(lex):
    [little] = lexical(lex, "küçük")
    [ahmet] = lexical(lex, "Ahmet'i")
    out = combine(little, ahmet)
    assert [(rule, steps) for _, rule, steps in out] == [(">", ("=",))]
    c = out[0][0]
    assert str(c.synsem) == "Na: little(Ahmet)"
    assert isinstance(c.ordering, OrderingValue) and c.ordering.value == c.synsem.sem


def test_verb_composition_embeds_completed_subordinate(lex):
    p = Parser(lex)
    tags = (("dün", 0), ("gittiğini", 0))
    clauses = [i.constituent for i in p.cell(tags)]
    know = [c for c in lexical(lex, "biliyor") if len(c.ordering.pending) == 4]
    found = []
    for sub in clauses:
        for matrix in know:
            for c, rule, steps in combine(sub, matrix):
                if rule == "<B":
                    found.append((c, steps))
    assert found
    for c, steps in found:
        assert steps == ("complete", "embed")
        [emb] = c.ordering.embedded
        assert isinstance(emb.value, ISNode) and emb.value.focus == Const("yesterday")


def test_unary_closure_adds_skip_states(lex):
    p = Parser(lex)
    [focused] = [
        ChartItem(c, "x")
        for c in (i.constituent for i in p.cell((("Ahmet'i", 0), ("gördü", 0))))
        if c.ordering.variant == "standard" and len(c.ordering.pending) == 3
    ]
    closed = unary_closure([focused])
    pendings = sorted(len(i.constituent.ordering.pending) for i in closed)
    assert pendings == [2, 3]
    [noun] = lexical(lex, "Fatma")
    assert [i.constituent for i in unary_closure([ChartItem(noun, "lex")])] == [noun]


def test_cells_are_deduplicated(lex):
    p = Parser(lex, DiscourseModel.of(["Fatma"]))
    spans = p.chart("Bugün küçük Ahmet'i görecek Fatma".split())
    for items in spans.values():
        keys = [i.key for i in items]
        assert len(keys) == len(set(keys))


def test_unknown_token(lex):
    with pytest.raises(TokenUnknown):
        parse("Fatma kimi gördü", lex)


def test_empty_input(lex):
    assert parse([], lex) == []


def test_item_guard(lex):
    with pytest.raises(ChartLimitExceeded):
        Parser(lex, max_items=20).parse("Dün Fatma'nın gittiğini Ayşe biliyor".split())


def test_results_are_sorted_and_ground(parse):
    results = parse("Dün Fatma'nın gittiğini Ayşe biliyor")
    keys = [r.sort_key() for r in results]
    assert keys == sorted(keys) and len(set(keys)) == len(keys)
    for r in results:
        assert "_" not in str(r.as_term)
        for node in is_nodes(r.is_node):
            assert node.focus is not None and node.focus is not INFERRABLE
            assert node.topic is not None


def test_verb_final_positions(parse):
    for sentence, topic, focus in [
        ("Fatma Ahmet'i gördü", "Fatma", "Ahmet"),
        ("Ahmet'i Fatma gördü", "Ahmet", "Fatma"),
        ("Fatma Ahmet'i dün gördü", "Fatma", "yesterday"),
        ("Dün Fatma Ahmet'i gördü", "yesterday", "Ahmet"),
    ]:
        realized = [r.is_node for r in parse(sentence) if r.is_node.topic is not INFERRABLE]
        assert [(str(n.topic), str(n.focus)) for n in realized] == [(topic, focus)]


def test_postverbal_must_be_given(parse):
    assert parse("Fatma gördü Ahmet'i", ["Ahmet"])
    assert not parse("Fatma gördü Ahmet'i", ["Fatma"])
    assert parse("Fatma Ahmet'i gördü dün")  # inherently given


def test_ordering_off_accepts_more(parse):
    s = "Gördü Fatma Ahmet'i"
    assert parse(s) == []
    [r] = parse(s, ordering=False)
    assert r.is_node is None and str(r.as_term) == "see(Fatma, Ahmet)"


def test_misses_are_recorded(lex):
    p = Parser(lex, record_misses=True)
    assert p.parse("Gördü Fatma Ahmet'i".split()) == []
    reasons = {m.reason.split(":")[0] for m in p.last_stats.misses}
    assert "GivennessViolation" in reasons


def _verb_compositions(d):
    if d.rule in (">B", "<B") and all(isinstance(c.constituent.ordering, OrderingFunction) for c in d.children):
        yield d
    for c in d.children:
        yield from _verb_compositions(c)


def test_embedded_complete_precedes_composition(parse):
    seen = 0
    for r in parse("Fatma'nın Ayşe dün gittiğini biliyor"):
        for d in _verb_compositions(r.derivation):
            seen += 1
            assert d.ord_steps == ("complete", "embed")
    assert seen


def test_derivation_render_and_dict(parse):
    [r, *_] = parse("Ahmet'i Fatma gördü")
    text = r.derivation.render()
    assert "lex 'gördü'" in text and text.startswith("[0,3)")
    d = r.derivation.to_dict()
    assert d["span"] == [0, 3] and d["children"]


def test_repeated_tokens_get_distinct_variables(lex):
    # Each occurrence of a form is instantiated separately.
    p = Parser(lex)
    a = p.cell((("gördü", 0),))[0].constituent
    b = p.cell((("gördü", 1),))[0].constituent
    assert not set(a.synsem.variables()) & set(b.synsem.variables())


def test_accepts_string_input(lex):
    assert parse("Fatma Ahmet'i gördü", lex)
