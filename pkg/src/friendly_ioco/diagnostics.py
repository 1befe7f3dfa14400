"""Human and machine readable reports for friendly operations and verdicts.

The scenario hints are advisory heuristics:

* A: constrain the environment (inputs the friendly environment withholds
  are exactly the ones a tester should not send there),
* B: keep an action observable (pruning caused by hiding internal outputs),
* C: strengthen the specification (ambiguity means one component may emit
  something its partner leaves unspecified).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .conformance import Verdict, format_action
from .friendly import FriendlyOutcome
from .lts import Iolts

SCHEMA = "friendly-ioco/report/v1"
VERDICT_SCHEMA = "friendly-ioco/verdict/v1"
EMPTY_MESSAGE = "no pruning; unit testing suffices on covered traces"


@dataclass(frozen=True)
class SizeRow:
    name: str
    transitions: int
    states: int


def size_table(models) -> list:
    """Rows ``(name, transitions, states)`` on reachable parts, in the given order.

    ``models`` is a sequence of models or of ``(name, model)`` pairs.
    """
    rows = []
    for item in models:
        name, model = item if isinstance(item, tuple) else (item.name, item)
        states, transitions = model.size()
        rows.append(SizeRow(name, transitions, states))
    return rows


def format_size_table(rows) -> str:
    if not rows:
        return ""
    width = max(len("model"), *(len(r.name) for r in rows))
    lines = [f"{'model':<{width}}  transitions  states"]
    lines += [f"{r.name:<{width}}  {r.transitions:>11}  {r.states:>6}" for r in rows]
    return "\n".join(lines) + "\n"


def _trace_text(trace) -> str:
    return " ".join(format_action(a) for a in trace) or "ε"


def _hints(outcome: FriendlyOutcome) -> list:
    report = outcome.report
    hints = []
    if report.ambiguous_pairs:
        hints.append("C: strengthen the specification so every shared output is accepted where it can be emitted")
    if report.pruned_inputs:
        if outcome.operation == "hide":
            hints.append("B: keep one of the hidden actions observable to tell the confused states apart")
        hints.append("A: constrain the environment; do not send the withheld inputs after the listed traces")
    if not outcome.compatible:
        hints.append("no friendly environment exists; test the components in isolation")
    return hints


def _sizes(outcome: FriendlyOutcome) -> list:
    rows = [outcome.system] if outcome.system is not None else []
    if outcome.fragment is not None:
        rows.append(outcome.fragment)
    return [{"name": r.name, "transitions": r.transitions, "states": r.states} for r in size_table(rows)]


def explain_dict(outcome: FriendlyOutcome) -> dict:
    report = outcome.report
    return {
        "schema": SCHEMA,
        "operation": outcome.operation,
        "compatible": outcome.compatible,
        "ambiguous": [{"state": p.state, "culprit": p.culprit, "direction": p.direction}
                      for p in sorted(report.ambiguous_pairs)],
        "pruned": [{"trace": list(t), "label": label} for t, label in report.pruned_inputs],
        "sizes": _sizes(outcome),
        "hints": _hints(outcome),
    }


def explain_text(outcome: FriendlyOutcome) -> str:
    report = outcome.report
    lines = [f"{outcome.operation}: {'compatible' if outcome.compatible else 'not compatible'}"]
    for p in sorted(report.ambiguous_pairs):
        side = "left" if p.direction == "left-emits" else "right"
        lines.append(f"  ambiguous {p.state}: {side} side emits {p.culprit}, partner cannot accept it")
    for trace, label in report.pruned_inputs:
        lines.append(f"  pruned input {label} after {_trace_text(trace)}")
    if outcome.compatible and not report.ambiguous_pairs and not report.pruned_inputs:
        lines.append(f"  {EMPTY_MESSAGE}")
    for row in _sizes(outcome):
        lines.append(f"  size {row['name']}: {row['states']} states, {row['transitions']} transitions")
    for hint in _hints(outcome):
        lines.append(f"  hint {hint}")
    return "\n".join(lines) + "\n"


def explain(outcome: FriendlyOutcome) -> tuple:
    """``(text, structured)`` report for a friendly composition or hiding."""
    return explain_text(outcome), explain_dict(outcome)


def verdict_dict(verdict: Verdict, impl: Iolts | None = None, spec: Iolts | None = None) -> dict:
    doc = {"schema": VERDICT_SCHEMA, **verdict.as_dict()}
    if impl is not None:
        doc["implementation"] = impl.name
    if spec is not None:
        doc["specification"] = spec.name
    return doc


def to_json(doc: dict) -> str:
    """Deterministic serialization used for every report file."""
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
