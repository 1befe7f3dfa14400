"""Parallel composition, hiding and input completion of IOLTS."""

from __future__ import annotations

from collections import deque

from .errors import AlphabetError, PreconditionError, StructuralError
from .lts import TAU, Alphabet, Iolts, require_composable


def pair_name(left: str, right: str) -> str:
    return f"({left},{right})"


def compose_with_map(A: Iolts, B: Iolts, name: str | None = None) -> tuple:
    """Reachable parallel composition plus the map from composite id to ``(qA, qB)``."""
    require_composable(A, B)
    shared = A.labels & B.labels
    alphabet = Alphabet((A.inputs - B.outputs) | (B.inputs - A.outputs), A.outputs | B.outputs)

    def moves(qa, qb):
        for action, dsts in A._succ[qa].items():
            if action not in shared:
                for d in dsts:
                    yield action, d, qb
            else:
                for d in dsts:
                    for e in B.successors(qb, action):
                        yield action, d, e
        for action, dsts in B._succ[qb].items():
            if action not in shared:
                for e in dsts:
                    yield action, qa, e

    start = (A.init, B.init)
    pairs = {pair_name(*start): start}
    transitions = set()
    queue = deque([start])
    while queue:
        qa, qb = queue.popleft()
        src = pair_name(qa, qb)
        for action, da, db in moves(qa, qb):
            dst = pair_name(da, db)
            if dst not in pairs:
                pairs[dst] = (da, db)
                queue.append((da, db))
            elif pairs[dst] != (da, db):
                raise StructuralError(f"composite id {dst!r} is ambiguous; rename states")
            transitions.add((src, action, dst))
    composite = Iolts(frozenset(pairs), alphabet, pair_name(*start), frozenset(transitions),
                      name or f"{A.name}||{B.name}")
    return composite, pairs


def parallel_compose(A: Iolts, B: Iolts) -> Iolts:
    """Synchronous product on shared labels, interleaving otherwise; reachable part only."""
    return compose_with_map(A, B)[0]


def hide(A: Iolts, sigma) -> Iolts:
    """Relabel the outputs in ``sigma`` as internal moves."""
    sigma = frozenset(sigma)
    bad = sigma - A.outputs
    if bad:
        raise AlphabetError(f"can only hide outputs of {A.name}; not outputs: {sorted(bad)}")
    if not sigma:
        return A
    transitions = frozenset((s, TAU if a in sigma else a, d) for s, a, d in A.transitions)
    return Iolts(A.states, Alphabet(A.inputs, A.outputs - sigma), A.init, transitions,
                 f"hide({A.name})")


def _fresh(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def demonic_complete(A: Iolts) -> Iolts:
    """Route every unspecified input to a chaos gadget.

    The gadget is ``chi --tau--> chi_omega`` and ``chi --tau--> chi_delta``.
    ``chi_omega`` returns to ``chi`` on every label, ``chi_delta`` on inputs
    only, so it is quiescent.  Every label leads back to the tau branch, hence
    after any trace through the gadget all outputs and quiescence stay
    allowed.  A receptive model is returned unchanged.
    """
    missing = [(q, i) for q in sorted(A.states) for i in sorted(A.inputs) if not A.enables(q, i)]
    if not missing:
        return A
    chi = _fresh("chi", A.states)
    omega = _fresh("chi_omega", A.states)
    quiet = _fresh("chi_delta", A.states)
    added = {(q, i, chi) for q, i in missing}
    added |= {(chi, TAU, omega), (chi, TAU, quiet)}
    added |= {(omega, a, chi) for a in A.labels}
    added |= {(quiet, i, chi) for i in A.inputs}
    return Iolts(A.states | {chi, omega, quiet}, A.alphabet, A.init, A.transitions | added,
                 f"d({A.name})")


def selfloop_complete(S: Iolts, strict: bool = True) -> Iolts:
    """Make ``S`` receptive by ignoring unspecified inputs (self-loops).

    With ``strict`` the model must be deterministic and tau-free; the result is
    then ioco-conformant to ``S``.
    """
    if strict and not S.is_deterministic():
        raise PreconditionError(f"{S.name} must be deterministic and tau-free")
    added = {(q, i, q) for q in S.states for i in S.inputs if not S.enables(q, i)}
    if not added:
        return S
    return Iolts(S.states, S.alphabet, S.init, S.transitions | added, f"loop({S.name})")
