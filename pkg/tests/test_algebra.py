import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from friendly_ioco import (Iolts, demonic_complete, hide, ioco_check, parallel_compose, selfloop_complete,
                           after, out_of, straces_upto, validate)
from friendly_ioco.algebra import compose_with_map
from friendly_ioco.errors import AlphabetError, ComposabilityError, PreconditionError, StructuralError
from friendly_ioco.lts import DELTA, TAU
from friendly_ioco.randgen import GenParams, random_composable_pair

from conftest import canon, gen_params, models


def test_uioco_ce_compositions(fx):
    S = parallel_compose(fx("uioco-ce/S1"), fx("uioco-ce/S2"))
    assert S.size() == (2, 1)
    assert S.transitions == {("(1,A)", "x", "(2,B)")}
    assert S.outputs == {"x"} and S.inputs == frozenset()
    I = parallel_compose(fx("uioco-ce/I1"), fx("uioco-ce/I2"))
    assert I.size() == (3, 2)
    assert all(a == "x" for _, a, _ in I.transitions)


def test_compose_with_neutral_model(fx):
    A = fx("vending/S1")
    unit = Iolts.build([], [], "u", [])
    C = parallel_compose(A, unit)
    assert C.size() == A.size()
    assert straces_upto(C, 5) == straces_upto(A, 5)


def test_composition_alphabet(fx):
    C = parallel_compose(fx("vending/S1"), fx("vending/S2"))
    assert C.inputs == {"coin", "utee", "ucoffee", "umilk"}
    assert C.outputs == {"mtee", "mcoffee", "mcoffeemilk", "msg", "coffee", "coffeemilk", "done"}


def test_compose_rejects_shared_outputs(fx):
    with pytest.raises(ComposabilityError):
        parallel_compose(fx("vending/S2"), fx("vending/I2"))


def test_compose_detects_id_collision():
    # ("x", "y,z") and ("x,y", "z") would both render as "(x,y,z)"
    A = Iolts.build([], ["a"], "x", [("x", "a", "x,y")])
    B = Iolts.build([], ["b"], "y,z", [("y,z", "b", "z")])
    with pytest.raises(StructuralError):
        compose_with_map(A, B)


def test_tau_never_synchronises():
    A = Iolts.build([], ["a"], "0", [("0", TAU, "1")])
    B = Iolts.build(["a"], [], "0", [("0", TAU, "1")])
    C = parallel_compose(A, B)
    assert C.size() == (4, 4)


def test_hide_examples(fx):
    H = hide(fx("hide-ce/S"), {"a"})
    assert H.transitions == {("1", TAU, "2"), ("2", "i", "3")}
    assert H.outputs == {"b"}
    S = fx("hide-ce/S")
    assert hide(S, set()) is S
    HI = hide(fx("hide-ce/I"), {"a"})
    assert ("D", "b", "E") in HI.transitions and ("A", TAU, "B") in HI.transitions
    with pytest.raises(AlphabetError):
        hide(S, {"i"})


def test_demonic_completion_sizes(fx):
    assert demonic_complete(fx("vending/S1")).size() == (10, 55)
    assert demonic_complete(fx("uioco-ce/S1")).size() == (5, 6)
    I1 = fx("vending/I1")
    assert demonic_complete(I1) is I1


def test_demonic_gadget_names_avoid_clashes():
    A = Iolts.build(["i"], [], "chi", [])
    D = demonic_complete(A)
    assert len(D.states) == 4
    assert validate(D).weakly_receptive


def test_selfloop_completion(fx):
    I = selfloop_complete(fx("uioco-ce/S1"))
    assert canon(I) == canon(fx("uioco-ce/I1"))
    R = fx("vending/I1")
    assert selfloop_complete(R) is R
    S2 = fx("vending/S2")
    completed = selfloop_complete(S2)
    assert ("A", "mtee", "A") in completed.transitions
    assert ioco_check(completed, S2).passed
    with pytest.raises(PreconditionError):
        selfloop_complete(hide(fx("hide-ce/S"), {"a"}))


@settings(max_examples=60, deadline=None)
@given(gen_params())
def test_composition_commutes_up_to_renaming(p):
    A, B = random_composable_pair(p)
    ab, pab = compose_with_map(A, B)
    ba, pba = compose_with_map(B, A)
    assert {v for v in pab.values()} == {(b, a) for a, b in pba.values()}
    swap = {k: f"({pab[k][0]},{pab[k][1]})" for k in pab}
    flip = {f"({b},{a})": f"({a},{b})" for a, b in pab.values()}
    assert {(swap[s], a, swap[d]) for s, a, d in ab.transitions} == \
           {(flip[s], a, flip[d]) for s, a, d in ba.transitions}
    assert ab.alphabet == ba.alphabet
    assert len(ab.states) <= len(A.states) * len(B.states)


@settings(max_examples=60, deadline=None)
@given(models(), st.data())
def test_hiding_composes(A, data):
    outs = sorted(A.outputs)
    s1 = data.draw(st.sets(st.sampled_from(outs))) if outs else set()
    rest = [o for o in outs if o not in s1]
    s2 = data.draw(st.sets(st.sampled_from(rest))) if rest else set()
    assert canon(hide(hide(A, s1), s2)) == canon(hide(A, s1 | s2))


@settings(max_examples=60, deadline=None)
@given(models())
def test_demonic_completion_makes_model_weakly_receptive(A):
    D = demonic_complete(A)
    r = validate(D)
    assert r.weakly_receptive and r.strongly_convergent
    # every original state is strongly receptive; only the gadget entry relies on tau
    assert all(D.enables(q, i) for q in A.states for i in A.inputs)


@settings(max_examples=80, deadline=None)
@given(models(deterministic=True))
def test_selfloop_completion_conforms(S):
    assert ioco_check(selfloop_complete(S), S).passed


def test_random_pairs_are_composable():
    for seed in range(50):
        A, B = random_composable_pair(GenParams(seed=seed))
        parallel_compose(A, B)


def test_demonic_gadget_allows_everything_after_entry(fx):
    S = fx("vending/S1")
    D = demonic_complete(S)
    full = frozenset(S.outputs) | {DELTA}
    # utee is unspecified in the initial state, so it enters the gadget
    for tail in [(), ("mcoffee",), ("coin", "mtee", DELTA, "utee")]:
        assert out_of(D, after(D, ("utee",) + tail)) == full
    # observed quiescence persists until the next input
    assert out_of(D, after(D, ("utee", DELTA))) == {DELTA}
    assert out_of(D, after(D, ("utee", DELTA, "coin"))) == full
