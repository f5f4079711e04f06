import itertools

import pytest

from mccg.categories import Canon, Function
from mccg.notation import parse_category
from mccg.rules import (
    GrammarConfig,
    RestrictionViolation,
    SynSem,
    backward_apply,
    backward_compose,
    cleanup,
    forward_apply,
    forward_compose,
)
from mccg.terms import term_vars

_ids = itertools.count(1000, 100)


def ss(text: str) -> SynSem:
    # Each constituent gets its own id range, i.e. standardized apart.
    e = parse_category(text, start=next(_ids))
    return SynSem(e.category, e.sem)


def same(a: SynSem, b: SynSem) -> bool:
    return a.key(Canon()) == b.key(Canon())


SEE = "S: see(X, Y) | {Nn:X, Na:Y}"


def test_forward_apply_fills_accusative():
    [r] = forward_apply(ss(SEE), ss("Na: Ahmet"))
    assert same(r, ss("S: see(X, Ahmet) | {Nn:X}"))


def test_forward_apply_gerund_takes_genitive():
    [r] = forward_apply(ss("S_Na: go(Y) | {Ng:Y}"), ss("Ng: Fatma"))
    assert str(cleanup(r)) == "S_Na: go(Fatma)"


def test_no_matching_slot():
    assert forward_apply(ss(SEE), ss("Ng: Fatma")) == []
    assert backward_apply(ss("Ng: Fatma"), ss(SEE)) == []


def test_backward_apply_chain():
    [r] = backward_apply(ss("Nn: Fatma"), ss(SEE))
    assert same(r, ss("S: see(Fatma, Y) | {Na:Y}"))
    [done] = backward_apply(ss("Na: Ahmet"), r)
    assert isinstance(done.category, Function) and not done.category.args
    assert str(cleanup(done)) == "S: see(Fatma, Ahmet)"


def test_direction_blocks_backward_use_of_rightward_slot():
    adj = ss("NP: little(X) | {>NP:X}")
    assert backward_apply(ss("Na: Ahmet"), adj) == []
    [r] = forward_apply(adj, ss("Na: Ahmet"))
    assert str(cleanup(r)) == "Na: little(Ahmet)"


def test_one_result_per_matching_slot():
    give = ss("S: give(X, Y, Z) | {Nd:X, Nd:Y, Nn:Z}")
    results = forward_apply(give, ss("Nd: Ali"))
    assert sorted(str(r.sem) for r in results) == ["give(Ali, Y, Z)", "give(X, Ali, Z)"]


def test_cleanup():
    assert str(cleanup(ss("S: f(a) | {}"))) == "S: f(a)"
    atom = ss("Nn: Fatma")
    assert cleanup(atom) is atom
    island = ss("S: when(X, P) | {S:P} | {Nn:X}")
    [r] = forward_apply(island, ss("Nn: Berna"))
    tidy = cleanup(r)
    assert isinstance(tidy.category, Function) and len(tidy.category.args) == 1
    assert tidy.category.args[0].category.kind == "S"


def test_adjunct_composes_into_gerund():
    [r] = forward_compose(ss("S: yesterday(P) | {S:P}"), ss("S_Na: go(Y) | {Ng:Y}"))
    assert same(r, ss("S_Na: yesterday(go(Y)) | {Ng:Y}"))


def test_adjunct_composes_into_verb():
    [r] = forward_compose(ss("S: yesterday(P) | {S:P}"), ss(SEE))
    assert same(r, ss("S: yesterday(see(X, Y)) | {Nn:X, Na:Y}"))


def test_gerund_composes_with_matrix_verb():
    gerund, know = ss("S_Na: go(Y) | {Ng:Y}"), ss("S: know(X, P) | {Nn:X, S_Na:P}")
    [r] = backward_compose(gerund, know)
    assert same(r, ss("S: know(X, go(Y)) | {Nn:X, Ng:Y}"))
    # The subordinate term nests inside the matrix term.
    assert r.sem.functor == "know" and r.sem.args[1].functor == "go"


def test_argument_sets_collapse_disjointly():
    x, y = ss("S: know(X, P) | {Nn:X, S_Na:P}"), ss("S_Na: say(Y, Q) | {Ng:Y, S_Na:Q}")
    [r] = backward_compose(y, x)
    assert len(r.category.args) == (len(x.category.args) - 1) + len(y.category.args)
    sem_vars = set(term_vars(r.sem))
    assert all(a.var in sem_vars for a in r.category.args)


def test_composition_needs_two_functions():
    assert backward_compose(ss("Nn: Fatma"), ss(SEE)) == []
    assert forward_compose(ss(SEE), ss("Na: Ahmet")) == []


def test_adjective_cannot_compose_with_verb():
    adj, verb = ss("NP: little(X) | {>NP:X}"), ss(SEE)
    with pytest.raises(RestrictionViolation):
        backward_compose(adj, verb)


def test_restriction_is_configurable():
    free = GrammarConfig(restrict_np_composition=False)
    # The open-case NP can stand in for either the subject or the object.
    results = backward_compose(ss("NP: little(X) | {>NP:X}"), ss(SEE), free)
    positions = sorted(
        i for r in results for i, a in enumerate(r.sem.args) if getattr(a, "functor", None) == "little"
    )
    assert positions == [0, 1]
    assert backward_compose(ss("NP: little(X) | {>NP:X}"), ss(SEE), GrammarConfig(composition=False)) == []


def test_higher_order_slot_needs_function_match():
    # The island head's S slot cannot swallow a verb that still needs arguments.
    island = ss("S: when(X, P) | {S:P} | {Nn:X}")
    assert forward_apply(island, ss(SEE)) == []


def test_synsem_str_places_semantics_at_result():
    assert str(ss(SEE)) == "S: see(X, Y)|{Na:Y, Nn:X}"
    assert ss("Nn: Fatma").head_is_noun_class
    assert not ss(SEE).head_is_noun_class
