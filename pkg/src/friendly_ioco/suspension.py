"""Suspension automata, after/out, and subset-construction views.

A :class:`DetView` is the deterministic subset construction of a suspension
automaton.  In ``existential`` mode it accepts exactly the suspension traces.
In ``universal`` mode an input is only followed from a subset when every
member enables it, which yields the Utraces.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import AlphabetError
from .lts import DELTA, Iolts, action_key, tau_closure, weak_step

EXISTENTIAL = "existential"
UNIVERSAL = "universal"
MODES = (EXISTENTIAL, UNIVERSAL)
WEAK = "weak"
STRONG = "strong"
ENABLEDNESS = (WEAK, STRONG)


def set_name(states) -> str:
    """Canonical rendering of a subset of states, used as a state id."""
    return "{" + ",".join(sorted(states)) + "}"


@dataclass(frozen=True)
class SuspensionAutomaton:
    base: Iolts
    delta_states: frozenset

    @property
    def transitions(self) -> frozenset:
        return self.base.transitions | {(q, DELTA, q) for q in self.delta_states}


def suspend(A: Iolts) -> SuspensionAutomaton:
    return SuspensionAutomaton(A, frozenset(q for q in A.states if A.is_quiescent(q)))


def _check_trace(A: Iolts, trace) -> tuple:
    trace = tuple(trace)
    for a in trace:
        if a != DELTA and a not in A.labels:
            raise AlphabetError(f"label {a!r} is not in the alphabet of {A.name}")
    return trace


def step(A: Iolts, P: frozenset, action: str) -> frozenset:
    """One suspension step from a tau-closed set ``P``."""
    if action == DELTA:
        # quiescent states have no tau moves, so the result is already closed
        return frozenset(q for q in P if A.is_quiescent(q))
    return weak_step(A, P, action)


def initial_set(A: Iolts) -> frozenset:
    return tau_closure(A, {A.init})


def after(A: Iolts, trace: Iterable[str]) -> frozenset:
    """States reachable from the initial state via ``trace`` in the suspension automaton."""
    P = initial_set(A)
    for a in _check_trace(A, trace):
        if not P:
            break
        P = step(A, P, a)
    return P


def out_of(A: Iolts, P) -> frozenset:
    """Outputs enabled by some state of ``P`` plus DELTA if one of them is quiescent."""
    result = set()
    for q in P:
        result.update(a for a in A.actions_at(q) if a in A.outputs)
        if A.is_quiescent(q):
            result.add(DELTA)
    return frozenset(result)


def _universally_enabled(A: Iolts, P: frozenset, label: str, enabledness: str) -> bool:
    if enabledness == STRONG:
        return all(A.enables(q, label) for q in P)
    return all(weak_step(A, {q}, label) for q in P)


@dataclass
class DetView:
    """Deterministic subset-construction view of ``source``'s suspension automaton."""

    source: Iolts
    mode: str
    init: frozenset
    states: frozenset
    transitions: dict = field(repr=False)
    include_delta: bool = True
    enabledness: str = WEAK

    def step(self, P: frozenset, action: str):
        return self.transitions.get((P, action))

    def actions(self, P: frozenset) -> list:
        return [a for a, _ in self.outgoing(P)]

    @property
    def _outgoing(self) -> dict:
        out = self.__dict__.get("_out_cache")
        if out is None:
            out = {}
            for (S, a), T in self.transitions.items():
                out.setdefault(S, []).append((a, T))
            for S in out:
                out[S].sort(key=lambda x: action_key(x[0]))
            self.__dict__["_out_cache"] = out
        return out

    def outgoing(self, P: frozenset) -> list:
        return self._outgoing.get(P, [])

    def accepts(self, trace) -> bool:
        P = self.init
        for a in trace:
            P = self.step(P, a)
            if P is None:
                return False
        return True

    def traces_upto(self, k: int) -> frozenset:
        result = {()}
        frontier = [((), self.init)]
        for _ in range(k):
            nxt = []
            for trace, P in frontier:
                for a, T in self.outgoing(P):
                    t = trace + (a,)
                    result.add(t)
                    nxt.append((t, T))
            frontier = nxt
        return frozenset(result)


def determinize(A: Iolts, mode: str = EXISTENTIAL, enabledness: str = WEAK,
                include_delta: bool = True) -> DetView:
    """Subset construction over ``A``'s suspension automaton, reachable part only.

    Outputs and DELTA are followed existentially in both modes.  Inputs are
    followed existentially in ``existential`` mode; in ``universal`` mode only
    when every member of the subset enables the input (weakly or strongly,
    per ``enabledness``).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if enabledness not in ENABLEDNESS:
        raise ValueError(f"enabledness must be one of {ENABLEDNESS}")
    actions = sorted(A.labels, key=action_key) + ([DELTA] if include_delta else [])
    init = initial_set(A)
    seen = {init}
    queue = deque([init])
    transitions = {}
    while queue:
        P = queue.popleft()
        for a in actions:
            if mode == UNIVERSAL and a in A.inputs and not _universally_enabled(A, P, a, enabledness):
                continue
            T = step(A, P, a)
            if not T:
                continue
            transitions[(P, a)] = T
            if T not in seen:
                seen.add(T)
                queue.append(T)
    return DetView(A, mode, init, frozenset(seen), transitions, include_delta, enabledness)


def straces_upto(A: Iolts, k: int) -> frozenset:
    """All suspension traces of length at most ``k`` (tuples of actions)."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return determinize(A, EXISTENTIAL).traces_upto(k)


def utraces_upto(A: Iolts, k: int, enabledness: str = WEAK) -> frozenset:
    if k < 0:
        raise ValueError("k must be non-negative")
    return determinize(A, UNIVERSAL, enabledness).traces_upto(k)


def is_utrace(A: Iolts, trace, enabledness: str = WEAK) -> bool:
    trace = _check_trace(A, trace)
    return determinize(A, UNIVERSAL, enabledness).accepts(trace)


def _bounded_compare(X: DetView, Y: DetView, k: int, equal: bool) -> bool:
    seen = set()
    frontier = [(X.init, Y.init)]
    for depth in range(k + 1):
        nxt = []
        for P, R in frontier:
            if (P, R) in seen:
                continue
            seen.add((P, R))
            ax = {a for a, _ in X.outgoing(P)}
            ay = {a for a, _ in Y.outgoing(R)}
            if depth == k:
                continue
            if equal and ax != ay or not equal and not ax <= ay:
                return False
            for a, T in X.outgoing(P):
                nxt.append((T, Y.step(R, a)))
        frontier = nxt
    return True


def traces_equal_upto(A: Iolts, B: Iolts, k: int) -> bool:
    """``straces_upto(A, k) == straces_upto(B, k)`` without enumerating traces."""
    return _bounded_compare(determinize(A), determinize(B), k, equal=True)


def traces_included_upto(A: Iolts, B: Iolts, k: int) -> bool:
    """``straces_upto(A, k) <= straces_upto(B, k)`` without enumerating traces."""
    return _bounded_compare(determinize(A), determinize(B), k, equal=False)
