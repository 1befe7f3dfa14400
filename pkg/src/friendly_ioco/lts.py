"""Input/output labeled transition systems and weak-step machinery.

Labels are plain strings.  Two tokens are reserved: ``TAU`` for the internal
action and ``DELTA`` for quiescence.  ``DELTA`` never appears on an authored
transition; it only shows up in suspension traces and out-sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .errors import AlphabetError, ComposabilityError, StructuralError

TAU = "tau"
DELTA = "delta"
RESERVED = frozenset({TAU, DELTA})


def check_label(name: str) -> str:
    if not isinstance(name, str) or not name or not name.isprintable() or any(c.isspace() for c in name):
        raise AlphabetError(f"invalid label {name!r}")
    if name in RESERVED:
        raise AlphabetError(f"label {name!r} is reserved")
    return name


def action_key(action: str):
    """Sort key for actions: visible labels by name, quiescence last."""
    return (1, "") if action == DELTA else (0, action)


def trace_key(trace):
    return (len(trace), [action_key(a) for a in trace])


@dataclass(frozen=True)
class Alphabet:
    inputs: frozenset = frozenset()
    outputs: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "inputs", frozenset(self.inputs))
        object.__setattr__(self, "outputs", frozenset(self.outputs))
        for name in self.inputs | self.outputs:
            check_label(name)
        common = self.inputs & self.outputs
        if common:
            raise AlphabetError(f"labels both input and output: {sorted(common)}")

    @property
    def labels(self) -> frozenset:
        return self.inputs | self.outputs

    def mirrored(self) -> "Alphabet":
        return Alphabet(self.outputs, self.inputs)


@dataclass(frozen=True)
class Iolts:
    """A finite IOLTS.  Instances are immutable and hashable.

    ``transitions`` holds ``(src, action, dst)`` triples where ``action`` is a
    label of the alphabet or ``TAU``.
    """

    states: frozenset
    alphabet: Alphabet
    init: str
    transitions: frozenset
    name: str = field(default="A", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "states", frozenset(self.states))
        object.__setattr__(self, "transitions", frozenset(tuple(t) for t in self.transitions))
        if self.init not in self.states:
            raise StructuralError(f"initial state {self.init!r} is not a state")
        labels = self.alphabet.labels
        for src, action, dst in self.transitions:
            if src not in self.states or dst not in self.states:
                raise StructuralError(f"transition {(src, action, dst)} uses an unknown state")
            if action == DELTA:
                raise AlphabetError("delta transitions cannot be authored")
            if action != TAU and action not in labels:
                raise AlphabetError(f"transition label {action!r} is not in the alphabet")

    @classmethod
    def build(cls, inputs: Iterable[str], outputs: Iterable[str], init: str,
              transitions: Iterable[tuple], states: Iterable[str] = (), name: str = "A") -> "Iolts":
        """Convenience constructor; states default to init plus transition endpoints."""
        transitions = [tuple(t) for t in transitions]
        all_states = {init, *states}
        for src, _, dst in transitions:
            all_states.update((src, dst))
        return cls(frozenset(all_states), Alphabet(frozenset(inputs), frozenset(outputs)), init,
                   frozenset(transitions), name)

    @property
    def inputs(self) -> frozenset:
        return self.alphabet.inputs

    @property
    def outputs(self) -> frozenset:
        return self.alphabet.outputs

    @property
    def labels(self) -> frozenset:
        return self.alphabet.labels

    @cached_property
    def _succ(self) -> Mapping[str, Mapping[str, frozenset]]:
        succ: dict = {q: {} for q in self.states}
        for src, action, dst in self.transitions:
            succ[src].setdefault(action, set()).add(dst)
        return {q: {a: frozenset(d) for a, d in m.items()} for q, m in succ.items()}

    def successors(self, q: str, action: str) -> frozenset:
        return self._succ[q].get(action, frozenset())

    def actions_at(self, q: str) -> frozenset:
        return frozenset(self._succ[q])

    def enables(self, q: str, action: str) -> bool:
        return action in self._succ[q]

    def is_quiescent(self, q: str) -> bool:
        return not any(a == TAU or a in self.outputs for a in self._succ[q])

    def is_deterministic(self) -> bool:
        return all(TAU not in m and all(len(d) == 1 for d in m.values()) for m in self._succ.values())

    def reachable_states(self) -> frozenset:
        seen = {self.init}
        queue = deque([self.init])
        while queue:
            q = queue.popleft()
            for dsts in self._succ[q].values():
                for d in dsts:
                    if d not in seen:
                        seen.add(d)
                        queue.append(d)
        return frozenset(seen)

    def reachable_part(self) -> "Iolts":
        keep = self.reachable_states()
        if keep == self.states:
            return self
        return Iolts(keep, self.alphabet, self.init,
                     frozenset(t for t in self.transitions if t[0] in keep), self.name)

    def renamed(self, name: str) -> "Iolts":
        return Iolts(self.states, self.alphabet, self.init, self.transitions, name)

    def size(self) -> tuple:
        """``(states, transitions)`` of the reachable part."""
        part = self.reachable_part()
        return len(part.states), len(part.transitions)

    def __repr__(self):
        return (f"Iolts({self.name!r}, states={len(self.states)}, transitions={len(self.transitions)}, "
                f"inputs={sorted(self.inputs)}, outputs={sorted(self.outputs)})")


def _check_states(A: Iolts, src) -> frozenset:
    src = frozenset(src)
    unknown = src - A.states
    if unknown:
        raise StructuralError(f"unknown states {sorted(unknown)}")
    return src


def tau_closure(A: Iolts, src) -> frozenset:
    """Smallest superset of ``src`` closed under internal transitions."""
    src = _check_states(A, src)
    seen = set(src)
    stack = list(src)
    while stack:
        q = stack.pop()
        for d in A.successors(q, TAU):
            if d not in seen:
                seen.add(d)
                stack.append(d)
    return frozenset(seen)


def weak_step(A: Iolts, src, label: str) -> frozenset:
    """States reachable from ``src`` by ``tau* label tau*``."""
    if label not in A.labels:
        raise AlphabetError(f"label {label!r} is not in the alphabet of {A.name}")
    start = tau_closure(A, src)
    return tau_closure(A, {d for q in start for d in A.successors(q, label)})


def weakly_enables(A: Iolts, q: str, label: str) -> bool:
    return bool(weak_step(A, {q}, label))


def is_composable(A: Iolts, B: Iolts) -> bool:
    return not (A.inputs & B.inputs) and not (A.outputs & B.outputs)


def require_composable(A: Iolts, B: Iolts) -> None:
    if not is_composable(A, B):
        shared_in = sorted(A.inputs & B.inputs)
        shared_out = sorted(A.outputs & B.outputs)
        raise ComposabilityError(
            f"{A.name} and {B.name} are not composable (shared inputs {shared_in}, shared outputs {shared_out})")


@dataclass(frozen=True)
class ValidationReport:
    receptive: bool
    strongly_convergent: bool
    quiescent_states: frozenset
    unreachable_states: frozenset
    weakly_receptive: bool = False
    deterministic: bool = False
    missing_inputs: frozenset = frozenset()

    def as_dict(self) -> dict:
        return {
            "receptive": self.receptive,
            "weakly_receptive": self.weakly_receptive,
            "strongly_convergent": self.strongly_convergent,
            "deterministic": self.deterministic,
            "quiescent_states": sorted(self.quiescent_states),
            "unreachable_states": sorted(self.unreachable_states),
            "missing_inputs": sorted([list(p) for p in self.missing_inputs]),
        }


def _has_tau_cycle(A: Iolts) -> bool:
    # iterative three-colour DFS over the tau graph
    colour = dict.fromkeys(A.states, 0)
    for root in sorted(A.states):
        if colour[root]:
            continue
        stack = [(root, iter(sorted(A.successors(root, TAU))))]
        colour[root] = 1
        while stack:
            q, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                colour[q] = 2
                stack.pop()
            elif colour[nxt] == 1:
                return True
            elif colour[nxt] == 0:
                colour[nxt] = 1
                stack.append((nxt, iter(sorted(A.successors(nxt, TAU)))))
    return False


def validate(A: Iolts) -> ValidationReport:
    """Report receptiveness, convergence, quiescence and reachability of ``A``."""
    missing = frozenset((q, i) for q in A.states for i in A.inputs if not A.enables(q, i))
    weak_missing = [(q, i) for q, i in missing if not weakly_enables(A, q, i)]
    return ValidationReport(
        receptive=not missing,
        strongly_convergent=not _has_tau_cycle(A),
        quiescent_states=frozenset(q for q in A.states if A.is_quiescent(q)),
        unreachable_states=A.states - A.reachable_states(),
        weakly_receptive=not weak_missing,
        deterministic=A.is_deterministic(),
        missing_inputs=missing,
    )
