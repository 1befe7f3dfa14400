"""Seeded random models for property testing.

Generation uses :class:`random.Random` seeded with ``GenParams.seed``, so the
same parameters always give the same model.  Every generated model is
reachable from its initial state (a random spanning tree is laid first) and
strongly convergent (tau moves only go to higher-numbered states).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace

from .errors import ParameterError
from .lts import TAU, Alphabet, Iolts


@dataclass(frozen=True)
class GenParams:
    seed: int = 0
    max_states: int = 4
    n_inputs: int = 2
    n_outputs: int = 2
    transition_density: float = 0.3
    tau_probability: float = 0.1
    deterministic: bool = False

    def check(self) -> None:
        if self.max_states < 1:
            raise ParameterError("max_states must be at least 1")
        if self.n_inputs < 0 or self.n_outputs < 0 or self.n_inputs + self.n_outputs < 1:
            raise ParameterError("need at least one input or output label")
        for field in ("transition_density", "tau_probability"):
            value = getattr(self, field)
            if not 0.0 <= value <= 1.0:
                raise ParameterError(f"{field} must lie in [0, 1], got {value}")


def _labels(prefix: str, n: int, start: int = 0) -> list:
    return [f"{prefix}{k}" for k in range(start, start + n)]


def _generate(rng: random.Random, p: GenParams, inputs, outputs, name: str) -> Iolts:
    n = rng.randint(1, p.max_states)
    states = [f"s{k}" for k in range(n)]
    labels = sorted(inputs) + sorted(outputs)
    transitions = set()
    used = set()

    # spanning tree: every state k > 0 gets a parent among 0..k-1
    for k in range(1, n):
        parent = rng.randrange(k)
        if labels and (p.deterministic or rng.random() >= p.tau_probability):
            free = [a for a in labels if (parent, a) not in used] if p.deterministic else labels
            if not free:
                # parent saturated; fall back to any earlier state with a free label
                options = [(q, a) for q in range(k) for a in labels if (q, a) not in used]
                parent, label = rng.choice(options)
            else:
                label = rng.choice(free)
        else:
            label = TAU
        used.add((parent, label))
        transitions.add((states[parent], label, states[k]))

    for q in range(n):
        for a in labels:
            if p.deterministic and (q, a) in used:
                continue
            if rng.random() < p.transition_density:
                used.add((q, a))
                transitions.add((states[q], a, states[rng.randrange(n)]))
        if not p.deterministic and q < n - 1 and rng.random() < p.tau_probability:
            transitions.add((states[q], TAU, states[rng.randrange(q + 1, n)]))
    return Iolts(frozenset(states), Alphabet(frozenset(inputs), frozenset(outputs)), states[0],
                 frozenset(transitions), name)


def random_iolts(p: GenParams, name: str = "R") -> Iolts:
    """Random model within the bounds of ``p``."""
    p.check()
    rng = random.Random(p.seed)
    return _generate(rng, p, _labels("i", p.n_inputs), _labels("o", p.n_outputs), name)


def random_composable_pair(p: GenParams) -> tuple:
    """Two composable models whose shared labels are outputs of one side and inputs of the other.

    Label pools: ``A`` owns ``i*``/``o*``; ``B`` reads some of ``A``'s outputs,
    may send some of ``A``'s inputs and adds private ``j*``/``p*`` labels.
    """
    p.check()
    rng = random.Random(p.seed)
    a_in = _labels("i", p.n_inputs)
    a_out = _labels("o", p.n_outputs)
    share = max(p.transition_density, 0.5)
    b_in = [o for o in a_out if rng.random() < share] + ["j0"]
    b_out = [i for i in a_in if rng.random() < share] + ["p0"]
    # keep B within the same label bounds as A
    b_in = b_in[:max(p.n_inputs, 1)] if p.n_inputs else b_in[:-1]
    b_out = b_out[:max(p.n_outputs, 1)] if p.n_outputs else b_out[:-1]
    if not b_in and not b_out:
        b_out = ["p0"]
    A = _generate(rng, p, a_in, a_out, "A")
    B = _generate(rng, p, b_in, b_out, "B")
    return A, B


def shrink_candidates(p: GenParams):
    """Smaller parameter sets to retry a failing property with, smallest first."""
    seen = set()
    for states in range(1, p.max_states + 1):
        for ni in range(0, p.n_inputs + 1):
            for no in range(0, p.n_outputs + 1):
                if ni + no < 1 or (states, ni, no) == (p.max_states, p.n_inputs, p.n_outputs):
                    continue
                q = replace(p, max_states=states, n_inputs=ni, n_outputs=no)
                if q not in seen:
                    seen.add(q)
                    yield q


def shrink(p: GenParams, fails, seeds=range(20)) -> GenParams:
    """Smallest parameters (over ``seeds``) for which ``fails(params)`` still holds."""
    for q in shrink_candidates(p):
        for s in seeds:
            candidate = replace(q, seed=s)
            if fails(candidate):
                return candidate
    return p
