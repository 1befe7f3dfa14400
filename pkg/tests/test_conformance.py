import pytest
from hypothesis import given, settings

from friendly_ioco import (IOCO, UIOCO, after, brute_force_check, demonic_complete, failing_traces,
                           hide, ioco_check, is_utrace, out_of, parallel_compose, selfloop_complete,
                           straces_upto, trace_violation, uioco_check)
from friendly_ioco.errors import AlphabetError, PreconditionError
from friendly_ioco.lts import DELTA, trace_key
from friendly_ioco.randgen import GenParams, random_composable_pair, random_iolts

from conftest import gen_params, oracle_verdict


def test_vending_composition_fails_on_tee(fx):
    v = ioco_check(fx("vending/I1par2"), fx("vending/S1par2"))
    assert not v.passed
    assert v.witness.trace == ("coin", "utee")
    assert v.witness.offending == "mtee"
    assert v.witness.impl_out == {"mtee"} and v.witness.spec_out == {DELTA}


def test_reflexive_on_receptive_models(fx):
    for name in ("vending/I1", "vending/I2", "hide-ce/I"):
        assert ioco_check(fx(name), fx(name)).passed
        assert uioco_check(fx(name), fx(name)).passed


def test_hiding_counterexample(fx):
    I, S = fx("hide-ce/I"), fx("hide-ce/S")
    assert ioco_check(I, S).passed
    assert uioco_check(I, S).passed
    v = uioco_check(hide(I, {"a"}), hide(S, {"a"}))
    assert not v.passed
    assert v.witness.trace == ("i",)
    assert v.witness.impl_out == {DELTA, "b"} and v.witness.spec_out == {DELTA}
    assert v.witness.offending == "b"


def test_uioco_composition_counterexample(fx):
    v = uioco_check(parallel_compose(fx("uioco-ce/I1"), fx("uioco-ce/I2")),
                    parallel_compose(fx("uioco-ce/S1"), fx("uioco-ce/S2")))
    assert not v.passed
    assert v.witness.trace == ("x",)
    assert v.witness.impl_out == {"x"} and v.witness.spec_out == {DELTA}


def test_preconditions(fx):
    with pytest.raises(AlphabetError):
        ioco_check(fx("vending/I1"), fx("vending/S2"))
    with pytest.raises(PreconditionError):
        ioco_check(fx("vending/S1"), fx("vending/S1"))


def test_verdict_rendering(fx):
    v = ioco_check(fx("vending/I1par2"), fx("vending/S1par2"))
    text = v.describe()
    assert "witness: coin utee" in text and "offending: mtee" in text and "{δ}" in text
    doc = v.as_dict()
    assert doc["pass"] is False and doc["witness"]["trace"] == ["coin", "utee"]
    assert not bool(v)
    ok = ioco_check(fx("vending/I1"), fx("vending/S1"))
    assert bool(ok) and ok.describe() == "ioco: pass" and "witness" not in ok.as_dict()


def test_trace_violation(fx):
    I, S = fx("vending/I1par2"), fx("vending/S1par2")
    assert trace_violation(I, S, ("coin", "utee")).offending == "mtee"
    assert trace_violation(I, S, ("coin",)) is None
    assert trace_violation(I, S, ("coin", "coin")) is None  # not a trace of S


@pytest.mark.parametrize("impl,spec", [
    ("vending/I1", "vending/S1"), ("vending/I2", "vending/S2"), ("vending/I1par2", "vending/S1par2"),
    ("uioco-ce/I1", "uioco-ce/S1"), ("uioco-ce/I2", "uioco-ce/S2"), ("hide-ce/I", "hide-ce/S")])
def test_uioco_failure_implies_ioco_failure(fx, impl, spec):
    I, S = fx(impl), fx(spec)
    u = uioco_check(I, S)
    if not u.passed:
        assert u.witness.trace in straces_upto(S, len(u.witness.trace))
        assert not ioco_check(I, S).passed


def _check_witness(I, S, v, universal):
    w = v.witness
    assert w.trace in straces_upto(S, len(w.trace))
    if universal:
        assert is_utrace(S, w.trace)
    assert w.offending in w.impl_out - w.spec_out
    assert w.impl_out == out_of(I, after(I, w.trace)) and w.spec_out == out_of(S, after(S, w.trace))
    # nothing shorter fails, and among equal-length failures this one sorts first
    relation = UIOCO if universal else IOCO
    shorter = failing_traces(I, S, len(w.trace), relation)
    assert min(shorter, key=lambda x: trace_key(x.trace)).trace == w.trace


def _random_case(p):
    S = random_iolts(p, "S")
    I = demonic_complete(random_iolts(GenParams(p.seed + 1, p.max_states, p.n_inputs, p.n_outputs,
                                                p.transition_density, p.tau_probability), "I"))
    I = selfloop_complete(I, strict=False)  # the chaos entry state still needs its own inputs
    return I, S


@settings(max_examples=120, deadline=None)
@given(gen_params(max_states=4, max_labels=2))
def test_product_checker_matches_path_oracle(p):
    I, S = _random_case(p)
    for universal, check in ((False, ioco_check), (True, uioco_check)):
        v = check(I, S)
        assert v.passed == oracle_verdict(I, S, 6, universal) or (v.passed is False and len(v.witness.trace) > 6)
        if not v.passed:
            _check_witness(I, S, v, universal)


@settings(max_examples=60, deadline=None)
@given(gen_params(max_states=3, max_labels=2, deterministic=True))
def test_demonic_completion_preserves_composition(p):
    S1, S2 = random_composable_pair(p)
    I1, I2 = selfloop_complete(S1), selfloop_complete(S2)
    D1, D2 = demonic_complete(S1), demonic_complete(S2)
    assert ioco_check(I1, D1).passed and ioco_check(I2, D2).passed
    assert ioco_check(parallel_compose(I1, I2), parallel_compose(D1, D2)).passed


@pytest.mark.parametrize("impl,spec", [
    ("vending/I1", "vending/S1"), ("vending/I2", "vending/S2"), ("vending/I1par2", "vending/S1par2"),
    ("uioco-ce/I1", "uioco-ce/S1"), ("uioco-ce/I2", "uioco-ce/S2"), ("hide-ce/I", "hide-ce/S")])
def test_checker_matches_brute_force_on_fixtures(fx, impl, spec):
    I, S = fx(impl), fx(spec)
    for relation, check in ((IOCO, ioco_check), (UIOCO, uioco_check)):
        v = check(I, S)
        b = brute_force_check(I, S, 4, relation)
        assert v.passed == b.passed
        if not v.passed:
            assert v.witness == b.witness
