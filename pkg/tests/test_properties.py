import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from mccg.categories import ArgSlot, Atomic, Canon, Case, Direction, Function, format_cat, slot_sort_key, unify_cat
from mccg.terms import Compound, Const, Var, unify_sem

variables = st.integers(1, 4).map(lambda i: Var(i, f"V{i}"))
constants = st.sampled_from(["a", "b"]).map(Const)
terms = st.recursive(
    variables | constants,
    lambda sub: st.builds(Compound, st.sampled_from(["f", "g"]), st.lists(sub, min_size=1, max_size=2).map(tuple)),
    max_leaves=8,
)


@given(terms, terms)
def test_mgu_unifies(a, b):
    s = unify_sem(a, b)
    if s is not None:
        assert s.apply(a) == s.apply(b)


@given(terms, terms)
def test_substitution_idempotent(a, b):
    s = unify_sem(a, b)
    if s is not None:
        once = s.apply(a)
        assert s.apply(once) == once


@given(terms, terms)
def test_mgu_symmetric_up_to_renaming(a, b):
    ab, ba = unify_sem(a, b), unify_sem(b, a)
    assert (ab is None) == (ba is None)
    if ab is not None:
        assert Canon().term(ab.apply(a)) == Canon().term(ba.apply(a))


@given(terms)
def test_self_unification_is_trivial(a):
    s = unify_sem(a, a)
    assert s is not None and len(s) == 0


atoms = st.sampled_from(
    [Atomic("NP", c) for c in (Case.NOM, Case.ACC, Case.GEN, Case.DAT)] + [Atomic("S", Case.ACC), Atomic("N")]
)
slots = st.lists(st.tuples(atoms, st.sampled_from(list(Direction))), min_size=1, max_size=4)


@settings(max_examples=50)
@given(slots, st.randoms())
def test_permuted_multisets_normalize_equal(parts, rnd):
    def build(order):
        return Function(Atomic("S"), tuple(ArgSlot(c, d, Var(100 + i)) for i, (c, d) in enumerate(order)))

    shuffled = list(parts)
    rnd.shuffle(shuffled)
    a, b = build(parts), build(shuffled)
    assert a.args == tuple(sorted(a.args, key=slot_sort_key))
    assert format_cat(a, with_vars=False) == format_cat(b, with_vars=False)
    assert unify_cat(a, b) is not None


def test_all_orders_of_three_slots_unify():
    cats = [Atomic("NP", Case.NOM), Atomic("NP", Case.ACC), Atomic("NP", Case.DAT)]
    ref = Function(Atomic("S"), tuple(ArgSlot(c, Direction.ANY, Var(i)) for i, c in enumerate(cats)))
    for perm in itertools.permutations(cats):
        other = Function(Atomic("S"), tuple(ArgSlot(c, Direction.ANY, Var(10 + i)) for i, c in enumerate(perm)))
        assert unify_cat(ref, other) is not None
