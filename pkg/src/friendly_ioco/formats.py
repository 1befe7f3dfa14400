"""Reading and writing models.

The native text format::

    iolts <Name>
    inputs <l1> <l2> ...
    outputs <l1> <l2> ...
    init <state>
    <src> <label>? <dst>
    <src> <label>! <dst>
    <src> tau <dst>

``#`` starts a comment; blank lines are ignored.  A ``state <id>`` line after
``init`` declares a state without incident transitions; the writer only emits
it for such states.
"""

from __future__ import annotations

import re
import warnings

from .errors import FormatError
from .lts import DELTA, RESERVED, TAU, Alphabet, Iolts, check_label
from .errors import AlphabetError

_HEADERS = ("iolts", "inputs", "outputs", "init")


def _tokens(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def _label(token: str, lineno: int) -> str:
    try:
        return check_label(token)
    except AlphabetError as exc:
        raise FormatError(str(exc), lineno) from None


def parse_iolts(text: str) -> Iolts:
    lines = list(_tokens(text))
    header = {}
    for expected, (lineno, toks) in zip(_HEADERS, lines):
        if toks[0] != expected:
            raise FormatError(f"expected '{expected} ...', got {toks[0]!r}", lineno)
        header[expected] = (lineno, toks[1:])
    if len(header) < len(_HEADERS):
        missing = _HEADERS[len(header)]
        raise FormatError(f"missing '{missing}' line", lines[-1][0] if lines else None)
    lineno, name = header["iolts"]
    if len(name) != 1:
        raise FormatError("expected 'iolts <Name>'", lineno)
    lineno, init = header["init"]
    if len(init) != 1:
        raise FormatError("expected 'init <state>'", lineno)
    inputs = [_label(t, header["inputs"][0]) for t in header["inputs"][1]]
    outputs = [_label(t, header["outputs"][0]) for t in header["outputs"][1]]
    try:
        alphabet = Alphabet(frozenset(inputs), frozenset(outputs))
    except AlphabetError as exc:
        raise FormatError(str(exc), header["outputs"][0]) from None

    states = {init[0]}
    transitions = []
    seen = set()
    for lineno, toks in lines[len(_HEADERS):]:
        if toks[0] == "init":
            raise FormatError("duplicate init declaration", lineno)
        if toks[0] == "state":
            if len(toks) != 2:
                raise FormatError("expected 'state <id>'", lineno)
            states.add(toks[1])
            continue
        if len(toks) != 3:
            raise FormatError(f"expected '<src> <label> <dst>', got {' '.join(toks)!r}", lineno)
        src, label, dst = toks
        if label == TAU:
            action = TAU
        elif label == DELTA:
            raise FormatError("delta cannot be authored; quiescence is computed", lineno)
        elif label[-1:] in ("?", "!") and len(label) > 1:
            action = _label(label[:-1], lineno)
            if label[-1] == "?" and action not in alphabet.inputs:
                raise FormatError(f"{label!r}: {action!r} is not a declared input", lineno)
            if label[-1] == "!" and action not in alphabet.outputs:
                raise FormatError(f"{label!r}: {action!r} is not a declared output", lineno)
        else:
            raise FormatError(f"label {label!r} needs a '?' or '!' suffix (or is 'tau')", lineno)
        t = (src, action, dst)
        if t in seen:
            warnings.warn(f"line {lineno}: duplicate transition {src} {label} {dst} ignored", stacklevel=2)
            continue
        seen.add(t)
        states.update((src, dst))
        transitions.append(t)
    return Iolts(frozenset(states), alphabet, init[0], frozenset(transitions), name[0])


def _render_label(A: Iolts, action: str) -> str:
    if action == TAU:
        return TAU
    return action + ("?" if action in A.inputs else "!")


def write_iolts(A: Iolts) -> str:
    """Canonical text: labels sorted, transitions sorted by source, label, target."""
    lines = [f"iolts {A.name}",
             " ".join(["inputs", *sorted(A.inputs)]),
             " ".join(["outputs", *sorted(A.outputs)]),
             f"init {A.init}"]
    touched = {A.init}
    for s, _, d in A.transitions:
        touched.update((s, d))
    lines += [f"state {q}" for q in sorted(A.states - touched)]
    for s, a, d in sorted(A.transitions):
        lines.append(f"{s} {_render_label(A, a)} {d}")
    return "\n".join(lines) + "\n"


# Aldebaran (.aut) --------------------------------------------------------

_DES = re.compile(r"^\s*des\s*\(\s*([^,\s]+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")
_EDGE = re.compile(r'^\s*\(\s*([^,\s]+)\s*,\s*"?([^"]*?)"?\s*,\s*([^,\s)]+)\s*\)\s*$')


def parse_alphabet_manifest(text: str) -> Alphabet:
    """Sidecar manifest with ``inputs: ...`` and ``outputs: ...`` lines."""
    inputs, outputs = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(":")
        key = key.strip()
        if key == "inputs":
            inputs += [_label(t, lineno) for t in rest.split()]
        elif key == "outputs":
            outputs += [_label(t, lineno) for t in rest.split()]
        else:
            raise FormatError(f"unknown manifest key {key!r}", lineno)
    return Alphabet(frozenset(inputs), frozenset(outputs))


def parse_aut(text: str, alphabet: Alphabet | None = None, name: str = "A") -> Iolts:
    """Read an Aldebaran file.

    Labels carry a ``?``/``!`` suffix or are resolved through ``alphabet``;
    ``i`` and ``tau`` denote the internal action.
    """
    lines = [(n, l) for n, l in enumerate(text.splitlines(), start=1) if l.strip()]
    if not lines:
        raise FormatError("empty Aldebaran file")
    lineno, first = lines[0]
    m = _DES.match(first)
    if not m:
        raise FormatError("expected 'des (<init>, <ntrans>, <nstates>)'", lineno)
    init, ntrans, nstates = m.group(1), int(m.group(2)), int(m.group(3))
    inputs = set(alphabet.inputs) if alphabet else set()
    outputs = set(alphabet.outputs) if alphabet else set()
    transitions = []
    for lineno, line in lines[1:]:
        e = _EDGE.match(line)
        if not e:
            raise FormatError(f"malformed transition {line.strip()!r}", lineno)
        src, label, dst = e.group(1), e.group(2).strip(), e.group(3)
        if label in ("i", TAU):
            action = TAU
        elif label[-1:] in ("?", "!") and len(label) > 1:
            action = _label(label[:-1], lineno)
            side, other = (inputs, outputs) if label[-1] == "?" else (outputs, inputs)
            if alphabet is not None and action not in side:
                raise FormatError(f"{label!r} disagrees with the alphabet manifest", lineno)
            if action in other:
                raise FormatError(f"{action!r} used both as input and output", lineno)
            side.add(action)
        elif alphabet is not None and label in alphabet.labels:
            action = label
        else:
            raise FormatError(f"cannot resolve label {label!r}: add a suffix or an alphabet manifest", lineno)
        transitions.append((src, action, dst))
    if len(transitions) != ntrans:
        raise FormatError(f"header announces {ntrans} transitions, found {len(transitions)}")
    states = {init} | {s for s, _, _ in transitions} | {d for _, _, d in transitions}
    if len(states) > nstates:
        raise FormatError(f"header announces {nstates} states, found {len(states)}")
    return Iolts(frozenset(states), Alphabet(frozenset(inputs), frozenset(outputs)), init,
                 frozenset(transitions), name)


def write_aut(A: Iolts) -> str:
    """Aldebaran text with states renumbered (initial state is 0) and suffixed labels."""
    order = [A.init] + sorted(A.states - {A.init})
    index = {q: n for n, q in enumerate(order)}
    lines = [f"des (0, {len(A.transitions)}, {len(A.states)})"]
    for s, a, d in sorted(A.transitions, key=lambda t: (index[t[0]], t[1], index[t[2]])):
        label = "i" if a == TAU else _render_label(A, a)
        lines.append(f'({index[s]}, "{label}", {index[d]})')
    return "\n".join(lines) + "\n"


# DOT ---------------------------------------------------------------------

def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(A: Iolts, highlight=None, suspension: bool = False) -> str:
    """Graphviz digraph; pruned states and transitions from ``highlight`` are dashed red."""
    pruned_states = highlight.pruned_states if highlight is not None else frozenset()
    pruned_transitions = highlight.pruned_transitions if highlight is not None else frozenset()
    out = [f"digraph {_q(A.name)} {{", "  rankdir=LR;", '  "__start" [shape=point];']
    for q in sorted(A.states):
        attrs = ["shape=circle"]
        if q in pruned_states:
            attrs += ["style=dashed", "color=red"]
        out.append(f"  {_q(q)} [{', '.join(attrs)}];")
    out.append(f'  "__start" -> {_q(A.init)};')
    for s, a, d in sorted(A.transitions):
        attrs = [f"label={_q(_render_label(A, a))}"]
        if (s, a, d) in pruned_transitions:
            attrs += ["style=dashed", "color=red"]
        out.append(f"  {_q(s)} -> {_q(d)} [{', '.join(attrs)}];")
    if suspension:
        for q in sorted(A.states):
            if A.is_quiescent(q):
                out.append(f'  {_q(q)} -> {_q(q)} [label="δ", color=darkgreen];')
    out.append("}")
    return "\n".join(out) + "\n"


__all__ = ["parse_iolts", "write_iolts", "parse_aut", "write_aut", "parse_alphabet_manifest",
           "export_dot", "RESERVED"]
