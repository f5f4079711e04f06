import pytest

from mccg.infostruct import (
    INFERRABLE,
    LEFT_GROUND_SLOT,
    RIGHT_GROUND_SLOT,
    TOPIC_SLOT,
    Comment,
    DiscourseModel,
    Given,
    GivennessViolation,
    IncompleteArgument,
    ISNode,
    OrderingValue,
    complete,
    embed,
    format_is,
    givenness_check,
    lexical_value,
    meet,
    ord_backward_apply,
    ord_forward_apply,
    ord_identity,
    ord_skip,
    template9,
)
from mccg.notation import parse_term
from mccg.terms import Const, Var


def c(name):
    return Const(name)


def val(name, dm=DiscourseModel(), inherent=False):
    return lexical_value(parse_term(name, variables=False), dm, inherent)


SEE = c("see")
DM_F = DiscourseModel.of(["Fatma"])


def postverbal_only(verb=SEE):
    fn = template9(verb)
    fn = ord_backward_apply(val("Ahmet"), fn)
    fn = ord_skip(fn)
    return ord_backward_apply(val("today"), fn)


def test_template_consumption_order():
    fn = template9(SEE)
    assert [s.role.value for s in fn.pending] == ["focus", "ground", "topic", "ground"]
    assert fn.pending[1] == LEFT_GROUND_SLOT and fn.pending[2] == TOPIC_SLOT
    assert fn.pending[3] == RIGHT_GROUND_SLOT and RIGHT_GROUND_SLOT.requires_given


def test_backward_apply_fills_focus_then_topic():
    fn = ord_backward_apply(val("Ahmet"), template9(SEE))
    assert fn.focus.value == c("Ahmet")
    fn = ord_skip(fn)
    fn = ord_backward_apply(val("Fatma"), fn)
    assert fn.topic.value == c("Fatma")
    assert complete(fn) == ISNode(c("Fatma"), Comment(c("Ahmet"), (SEE,)))


def test_forward_apply_postverbal_given():
    fn = ord_forward_apply(postverbal_only(), val("Fatma", DM_F), DM_F)
    assert complete(fn).ground == (SEE, c("Fatma"))


def test_forward_apply_postverbal_new_is_rejected():
    with pytest.raises(GivennessViolation):
        ord_forward_apply(postverbal_only(), val("Ahmet"), DiscourseModel())


def test_forward_apply_needs_rightward_slot():
    assert ord_forward_apply(template9(SEE), val("Fatma", DM_F), DM_F) is None
    assert ord_forward_apply(val("Fatma"), val("Ahmet")) is None


def test_right_ground_is_repeatable():
    dm = DiscourseModel.of(["Fatma", "Ahmet"])
    fn = ord_forward_apply(postverbal_only(), val("Fatma", dm), dm)
    fn = ord_forward_apply(fn, val("Ahmet", dm), dm)
    assert complete(fn).ground == (SEE, c("Fatma"), c("Ahmet"))


def test_nested_topic():
    go = template9(c("go"))
    go = ord_backward_apply(val("Fatma"), go)
    go = ord_skip(go)
    go = ord_backward_apply(val("yesterday", inherent=True), go)
    know = ord_backward_apply(val("Ayşe"), template9(c("know")))
    know = ord_skip(know)
    know = ord_backward_apply(go, know)
    node = complete(know)
    assert node.topic == ISNode(c("yesterday"), Comment(c("Fatma"), (c("go"),)))
    assert node.focus == c("Ayşe") and node.ground == (c("know"),)


def test_incomplete_argument():
    with pytest.raises(IncompleteArgument):
        ord_backward_apply(template9(c("go")), template9(c("know")))


def test_identity_merges_phrase():
    little = OrderingValue(Var(1, "_o"))
    r = ord_identity(little, val("Ahmet"), phrase=parse_term("little(Ahmet)", variables=False))
    assert r.value == parse_term("little(Ahmet)", variables=False)
    assert r.given is Given.NEW


def test_identity_of_variables():
    r = ord_identity(OrderingValue(Var(1)), OrderingValue(Var(2)))
    assert isinstance(r.value, Var)


def test_identity_rejects_given_with_new():
    assert ord_identity(val("Fatma", DM_F), val("Ahmet", DM_F)) is None
    assert meet(Given.GIVEN, Given.NEW) is None
    assert meet(Given.UNKNOWN, Given.NEW) is Given.NEW
    assert ord_identity(template9(SEE), val("Fatma")) is None


def test_skip():
    fn = ord_backward_apply(val("Ahmet"), template9(SEE))
    skipped = ord_skip(fn)
    assert [s.role.value for s in skipped.pending] == ["topic", "ground"]
    assert ord_skip(template9(SEE)) is None
    assert complete(ord_skip(postverbal_only())) == complete(postverbal_only())


def test_complete_figure_one():
    fn = template9(SEE)
    fn = ord_backward_apply(val("little(Ahmet)"), fn)
    fn = ord_skip(fn)
    fn = ord_backward_apply(val("today", inherent=True), fn)
    fn = ord_forward_apply(fn, val("Fatma", DM_F), DM_F)
    assert complete(fn) == ISNode(c("today"), Comment(parse_term("little(Ahmet)", variables=False), (SEE, c("Fatma"))))


def test_complete_inferrable_variant():
    fn = ord_backward_apply(val("yesterday", inherent=True), template9(c("go"), "inferrable"))
    assert complete(fn) == ISNode(INFERRABLE, Comment(c("yesterday"), (c("go"),)))


def test_complete_needs_focus():
    assert complete(template9(SEE)) is None
    assert complete(template9(SEE, "inferrable")) is None
    assert complete(val("Fatma")) is None


def test_verb_focus_variant():
    node = complete(template9(SEE, "verb-focus"))
    assert node.topic is INFERRABLE and node.focus == SEE
    with pytest.raises(ValueError):
        template9(SEE, "bogus")


def test_givenness():
    assert givenness_check(val("Fatma", DM_F), DM_F)
    assert not givenness_check(val("Ahmet"), DiscourseModel())
    assert givenness_check(val("yesterday", inherent=True), DiscourseModel())


def test_embed_requires_complete_subordinate():
    know = template9(c("know"))
    assert embed(know, template9(c("go"))) is None
    go = ord_backward_apply(val("yesterday", inherent=True), template9(c("go"), "inferrable"))
    out = embed(know, go)
    assert out.embedded[0].value == complete(go)
    assert out.pending == know.pending


def test_format_is():
    node = ISNode(INFERRABLE, Comment(c("yesterday"), (c("go"),)))
    assert format_is(node) == "{topic: inferrable, focus: yesterday, ground: [go]}"
