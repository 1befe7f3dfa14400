"""Friendly composition and friendly hiding.

Both operations restrict a plain composition (or hiding) to the part that the
maximal deterministic friendly environment can drive it into.  The environment
is a subset construction over the system with inputs and outputs swapped: it
accepts a system output whenever some state of the current subset can emit it,
and offers a system input only when every state of the subset accepts it.

The ``enabledness`` switch selects single-step (``"strong"``, the default) or
weak (tau-closed) enabledness, both for the environment's input condition and
for the ambiguity test.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .algebra import compose_with_map, hide, pair_name
from .errors import AlphabetError, StructuralError
from .lts import Alphabet, Iolts, action_key, require_composable, weakly_enables
from .suspension import STRONG, UNIVERSAL, DetView, determinize, set_name

LEFT_EMITS = "left-emits"
RIGHT_EMITS = "right-emits"


@dataclass(frozen=True, order=True)
class AmbiguousPair:
    left: str
    right: str
    culprit: str
    direction: str

    @property
    def state(self) -> str:
        return pair_name(self.left, self.right)


def _enabled(A: Iolts, q: str, label: str, enabledness: str) -> bool:
    if enabledness == STRONG:
        return A.enables(q, label)
    return weakly_enables(A, q, label)


def _ambiguities(A: Iolts, B: Iolts, qa: str, qb: str, enabledness: str):
    for label in sorted(A.outputs & B.inputs):
        if _enabled(A, qa, label, enabledness) and not _enabled(B, qb, label, enabledness):
            yield AmbiguousPair(qa, qb, label, LEFT_EMITS)
    for label in sorted(B.outputs & A.inputs):
        if _enabled(B, qb, label, enabledness) and not _enabled(A, qa, label, enabledness):
            yield AmbiguousPair(qa, qb, label, RIGHT_EMITS)


def _ambiguous_in(A: Iolts, B: Iolts, pairs: dict, enabledness: str) -> frozenset:
    return frozenset(p for qa, qb in pairs.values() for p in _ambiguities(A, B, qa, qb, enabledness))


def ambiguous_pairs(A: Iolts, B: Iolts, enabledness: str = STRONG) -> frozenset:
    """Ambiguous states among the pairs reachable in ``A || B``."""
    _, pairs = compose_with_map(A, B)
    return _ambiguous_in(A, B, pairs, enabledness)


@dataclass
class EnvAutomaton:
    """Deterministic environment of ``det.source`` over the mirrored alphabet."""

    det: DetView

    @property
    def system(self) -> Iolts:
        return self.det.source

    @property
    def alphabet(self) -> Alphabet:
        return self.system.alphabet.mirrored()

    @property
    def inputs(self) -> frozenset:
        return self.system.outputs

    @property
    def outputs(self) -> frozenset:
        return self.system.inputs

    @property
    def init(self) -> frozenset:
        return self.det.init

    @property
    def states(self) -> frozenset:
        return self.det.states

    @property
    def transitions(self) -> dict:
        return self.det.transitions

    def step(self, S: frozenset, label: str):
        return self.det.step(S, label)

    def outgoing(self, S: frozenset) -> list:
        return self.det.outgoing(S)

    def restricted(self, keep) -> "EnvAutomaton":
        """Drop states outside ``keep`` and everything no longer reachable from the initial state."""
        keep = frozenset(keep)
        if self.init not in keep:
            raise ValueError("cannot remove the initial environment state")
        seen = {self.init}
        queue = deque([self.init])
        transitions = {}
        while queue:
            S = queue.popleft()
            for a, T in self.outgoing(S):
                if T in keep:
                    transitions[(S, a)] = T
                    if T not in seen:
                        seen.add(T)
                        queue.append(T)
        d = self.det
        return EnvAutomaton(DetView(d.source, d.mode, d.init, frozenset(seen), transitions,
                                    d.include_delta, d.enabledness))

    def shortest_traces(self) -> dict:
        """Shortest, lexicographically least trace reaching each state."""
        traces = {self.init: ()}
        queue = deque([self.init])
        while queue:
            S = queue.popleft()
            for a, T in self.outgoing(S):
                if T not in traces:
                    traces[T] = traces[S] + (a,)
                    queue.append(T)
        return traces

    def to_iolts(self, name: str | None = None) -> Iolts:
        if len({set_name(S) for S in self.states}) != len(self.states):
            raise StructuralError("state names collide when rendering environment subsets")
        return Iolts(frozenset(set_name(S) for S in self.states), self.alphabet, set_name(self.init),
                     frozenset((set_name(S), a, set_name(T)) for (S, a), T in self.transitions.items()),
                     name or f"env({self.system.name})")


def envdet(A: Iolts, enabledness: str = STRONG) -> EnvAutomaton:
    """Maximal deterministic friendly environment of ``A`` (reachable part, no quiescence moves)."""
    return EnvAutomaton(determinize(A, UNIVERSAL, enabledness, include_delta=False))


def _env_iolts(E) -> Iolts:
    return E.to_iolts() if isinstance(E, EnvAutomaton) else E


def _fragment(A: Iolts, E, name: str | None = None) -> tuple:
    env = _env_iolts(E)
    if env.inputs != A.outputs or env.outputs != A.inputs:
        raise AlphabetError(f"environment alphabet does not mirror the alphabet of {A.name}")
    product, pairs = compose_with_map(A, env)
    fragment = Iolts(product.states, A.alphabet, product.init, product.transitions,
                     name or f"frag({A.name})")
    return fragment, pairs


def e_reachable_fragment(A: Iolts, E, name: str | None = None) -> Iolts:
    """``A || E`` keeping ``A``'s own input/output polarity.

    ``E`` is an :class:`EnvAutomaton` or any IOLTS over the mirrored alphabet.
    """
    return _fragment(A, E, name)[0]


@dataclass
class PruneReport:
    ambiguous_pairs: frozenset = frozenset()
    removed_env_states: frozenset = frozenset()
    pruned_inputs: tuple = ()
    pruned_states: frozenset = frozenset()
    pruned_transitions: frozenset = frozenset()
    kept_counts: tuple = (0, 0)
    pruned_counts: tuple = (0, 0)

    @property
    def empty(self) -> bool:
        return not (self.ambiguous_pairs or self.removed_env_states or self.pruned_inputs
                    or self.pruned_states or self.pruned_transitions)


@dataclass
class FriendlyOutcome:
    compatible: bool
    fragment: Iolts | None
    environment: EnvAutomaton | None
    report: PruneReport
    system: Iolts = field(repr=False, default=None)
    operation: str = "compose"


def _diff(system: Iolts, E: EnvAutomaton | None, fragment: Iolts | None, pairs: dict) -> dict:
    plain = system.reachable_part()
    if fragment is None:
        return {"pruned_states": plain.states, "pruned_transitions": plain.transitions,
                "kept_counts": (0, 0), "pruned_counts": (len(plain.states), len(plain.transitions))}
    used_states = {q for q, _ in pairs.values()}
    used_transitions = {(pairs[s][0], a, pairs[d][0]) for s, a, d in fragment.transitions}
    pruned_states = plain.states - used_states
    pruned_transitions = plain.transitions - used_transitions
    entries = []
    for S, trace in E.shortest_traces().items():
        for i in sorted(system.inputs):
            if E.step(S, i) is None and any(system.enables(q, i) for q in S):
                entries.append((trace, i))
    entries.sort(key=lambda e: (len(e[0]), [action_key(a) for a in e[0]], e[1]))
    return {"pruned_states": pruned_states, "pruned_transitions": pruned_transitions,
            "pruned_inputs": tuple(entries),
            "kept_counts": (len(fragment.states), len(fragment.transitions)),
            "pruned_counts": (len(pruned_states), len(pruned_transitions))}


def _backward_output_closure(E: EnvAutomaton, targets, outputs) -> frozenset:
    preds: dict = {}
    for (S, a), T in E.transitions.items():
        if a in outputs:
            preds.setdefault(T, set()).add(S)
    seen = set(targets)
    stack = list(targets)
    while stack:
        T = stack.pop()
        for S in preds.get(T, ()):
            if S not in seen:
                seen.add(S)
                stack.append(S)
    return frozenset(seen)


def friendly_compose(A: Iolts, B: Iolts, enabledness: str = STRONG) -> FriendlyOutcome:
    """Friendly composition: prune the environment away from ambiguous states.

    Returns an outcome with ``compatible=False`` and no fragment when the
    initial environment state is pruned.
    """
    require_composable(A, B)
    system, pairs = compose_with_map(A, B)
    amb = _ambiguous_in(A, B, pairs, enabledness)
    amb_ids = {p.state for p in amb}
    E = envdet(system, enabledness)
    marked = [S for S in E.states if S & amb_ids]
    prune = _backward_output_closure(E, marked, system.outputs)
    name = f"fcomp({A.name},{B.name})"
    if E.init in prune:
        report = PruneReport(amb, prune, **_diff(system, None, None, {}))
        return FriendlyOutcome(False, None, None, report, system, "compose")
    env = E.restricted(E.states - prune) if prune else E
    fragment, fpairs = _fragment(system, env, name)
    report = PruneReport(amb, prune, **_diff(system, env, fragment, fpairs))
    return FriendlyOutcome(True, fragment, env, report, system, "compose")


def friendly_hide(A: Iolts, sigma, enabledness: str = STRONG) -> FriendlyOutcome:
    """Friendly hiding: the environment-reachable fragment of ``hide(A, sigma)``."""
    system = hide(A, sigma)
    env = envdet(system, enabledness)
    fragment, fpairs = _fragment(system, env, f"fhide({A.name})")
    report = PruneReport(frozenset(), frozenset(), **_diff(system, env, fragment, fpairs))
    return FriendlyOutcome(True, fragment, env, report, system, "hide")


def is_friendly_environment(A: Iolts, E, enabledness: str = STRONG) -> bool:
    """No reachable state of ``A || E`` is ambiguous between ``A`` and ``E``."""
    env = _env_iolts(E)
    return not ambiguous_pairs(A, env, enabledness)


def is_composition_friendly(A: Iolts, B: Iolts, E, enabledness: str = STRONG) -> bool:
    """``E`` is friendly for ``A || B`` and never lets the pair reach an ambiguous state."""
    system, pairs = compose_with_map(A, B)
    amb_ids = {p.state for p in _ambiguous_in(A, B, pairs, enabledness)}
    env = _env_iolts(E)
    if not is_friendly_environment(system, env, enabledness):
        return False
    _, product = compose_with_map(system, env)
    return not any(q in amb_ids for q, _ in product.values())


def size_bound(A: Iolts, B: Iolts) -> int:
    n = len(A.states) * len(B.states)
    return n * 2 ** n
