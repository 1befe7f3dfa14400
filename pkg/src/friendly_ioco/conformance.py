"""Deciding ioco and uioco between explicit models."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import AlphabetError, PreconditionError
from .lts import DELTA, Iolts, trace_key
from .suspension import (EXISTENTIAL, UNIVERSAL, WEAK, after, determinize, initial_set, out_of,
                         step, straces_upto)

IOCO = "ioco"
UIOCO = "uioco"


def format_action(a: str) -> str:
    return "δ" if a == DELTA else a


def format_set(actions) -> str:
    return "{" + ", ".join(format_action(a) for a in sorted(actions, key=lambda a: (a == DELTA, a))) + "}"


@dataclass(frozen=True)
class Witness:
    trace: tuple
    offending: str
    impl_out: frozenset
    spec_out: frozenset


@dataclass(frozen=True)
class Verdict:
    relation: str
    passed: bool
    witness: Witness | None = None

    def __bool__(self):
        return self.passed

    def describe(self) -> str:
        if self.passed:
            return f"{self.relation}: pass"
        w = self.witness
        trace = " ".join(format_action(a) for a in w.trace) or "ε"
        return (f"{self.relation}: fail\n  witness: {trace}\n  offending: {format_action(w.offending)}\n"
                f"  impl_out: {format_set(w.impl_out)}\n  spec_out: {format_set(w.spec_out)}")

    def as_dict(self) -> dict:
        doc = {"relation": self.relation, "pass": self.passed}
        if self.witness is not None:
            w = self.witness
            doc["witness"] = {
                "trace": list(w.trace),
                "offending": w.offending,
                "impl_out": sorted(w.impl_out),
                "spec_out": sorted(w.spec_out),
            }
        return doc


def _preconditions(I: Iolts, S: Iolts) -> None:
    if I.inputs != S.inputs or I.outputs != S.outputs:
        raise AlphabetError(
            f"alphabets differ: {I.name} has inputs {sorted(I.inputs)} outputs {sorted(I.outputs)}, "
            f"{S.name} has inputs {sorted(S.inputs)} outputs {sorted(S.outputs)}")
    for q in sorted(I.states):
        for i in sorted(I.inputs):
            if not I.enables(q, i):
                raise PreconditionError(f"implementation {I.name} is not receptive: {q} lacks {i}")


def _witness(trace, impl_out, spec_out) -> Witness:
    extra = sorted(impl_out - spec_out, key=lambda a: (a == DELTA, a))
    return Witness(tuple(trace), extra[0], impl_out, spec_out)


def _product_check(I: Iolts, S: Iolts, relation: str, mode: str, enabledness: str) -> Verdict:
    view = determinize(S, mode, enabledness)
    start = (view.init, initial_set(I))
    seen = {start}
    queue = deque([(start, ())])
    while queue:
        (PS, PI), trace = queue.popleft()
        impl_out = out_of(I, PI)
        spec_out = out_of(S, PS)
        if not impl_out <= spec_out:
            return Verdict(relation, False, _witness(trace, impl_out, spec_out))
        for a, TS in view.outgoing(PS):
            TI = step(I, PI, a) if PI else frozenset()
            pair = (TS, TI)
            if pair not in seen:
                seen.add(pair)
                queue.append((pair, trace + (a,)))
    return Verdict(relation, True)


def ioco_check(I: Iolts, S: Iolts) -> Verdict:
    """Decide ``I ioco S``; on failure the witness is the shortest, lexicographically least trace."""
    _preconditions(I, S)
    return _product_check(I, S, IOCO, EXISTENTIAL, WEAK)


def uioco_check(I: Iolts, S: Iolts, enabledness: str = WEAK) -> Verdict:
    """Like :func:`ioco_check` but quantifying over the Utraces of ``S``."""
    _preconditions(I, S)
    return _product_check(I, S, UIOCO, UNIVERSAL, enabledness)


def failing_traces(I: Iolts, S: Iolts, bound: int, relation: str = IOCO,
                   enabledness: str = WEAK) -> list:
    """Every trace of length <= ``bound`` violating out-set containment, by enumeration."""
    _preconditions(I, S)
    candidates = straces_upto(S, bound)
    if relation == UIOCO:
        uview = determinize(S, UNIVERSAL, enabledness)
        candidates = [t for t in candidates if uview.accepts(t)]
    found = []
    for trace in sorted(candidates, key=trace_key):
        impl_out = out_of(I, after(I, trace))
        spec_out = out_of(S, after(S, trace))
        if not impl_out <= spec_out:
            found.append(_witness(trace, impl_out, spec_out))
    return found


def brute_force_check(I: Iolts, S: Iolts, bound: int, relation: str = IOCO,
                      enabledness: str = WEAK) -> Verdict:
    """Bounded reference checker: enumerate traces, compare out-sets directly."""
    found = failing_traces(I, S, bound, relation, enabledness)
    if found:
        return Verdict(relation, False, found[0])
    return Verdict(relation, True)


def trace_violation(I: Iolts, S: Iolts, trace) -> Witness | None:
    """Out-set comparison after one given trace; ``None`` if containment holds or ``S`` lacks the trace."""
    PS = after(S, trace)
    if not PS:
        return None
    impl_out = out_of(I, after(I, trace))
    spec_out = out_of(S, PS)
    if impl_out <= spec_out:
        return None
    return _witness(trace, impl_out, spec_out)
