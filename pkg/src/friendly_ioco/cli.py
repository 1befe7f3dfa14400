"""Command-line front end.

Exit status: 0 on success, pass or compatible; 1 on a conformance failure or
incompatibility; 2 on usage, parse or model errors.  Wherever a model is
expected, ``-`` reads stdin and ``fixture:<name>`` loads a built-in model.
Files ending in ``.aut`` are read as Aldebaran, with an optional
``<file>.alphabet`` manifest next to them.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import algebra, conformance, diagnostics, formats, friendly, randgen
from .errors import IoltsError
from .fixtures import fixture_names, load_fixture
from .lts import Iolts, trace_key, validate
from .suspension import STRONG, UNIVERSAL, WEAK, determinize, straces_upto


class _Fail(Exception):
    """Result status 1 with a message already printed."""


def read_model(spec: str) -> Iolts:
    if spec.startswith("fixture:"):
        return load_fixture(spec[len("fixture:"):])
    if spec == "-":
        return formats.parse_iolts(sys.stdin.read())
    path = Path(spec)
    text = path.read_text(encoding="utf-8")
    if path.suffix == ".aut":
        manifest = path.with_name(path.name + ".alphabet")
        alphabet = formats.parse_alphabet_manifest(manifest.read_text(encoding="utf-8")) if manifest.exists() else None
        return formats.parse_aut(text, alphabet, name=path.stem)
    return formats.parse_iolts(text)


def _write(text: str, target: str | None) -> None:
    if target is None or target == "-":
        sys.stdout.write(text)
    else:
        Path(target).write_text(text, encoding="utf-8")


def _emit_model(A: Iolts, args) -> None:
    _write(formats.write_iolts(A), args.output)


def _labels(value: str | None) -> list:
    return [l for l in (value or "").split(",") if l]


def _cmd_compose(args):
    _emit_model(algebra.parallel_compose(read_model(args.left), read_model(args.right)), args)


def _cmd_hide(args):
    _emit_model(algebra.hide(read_model(args.model), _labels(args.hide)), args)


def _cmd_complete(args):
    A = read_model(args.model)
    _emit_model(algebra.selfloop_complete(A) if args.selfloop else algebra.demonic_complete(A), args)


def _friendly_result(outcome, args):
    text, doc = diagnostics.explain(outcome)
    if args.report:
        _write(diagnostics.to_json(doc), args.report)
    if args.dot:
        _write(formats.export_dot(outcome.system, highlight=outcome.report), args.dot)
    if not outcome.compatible:
        sys.stdout.write(text)
        raise _Fail()
    if args.output:
        _write(formats.write_iolts(outcome.fragment), args.output)
        sys.stdout.write(text)
    else:
        sys.stdout.write(formats.write_iolts(outcome.fragment))


def _cmd_fcompose(args):
    outcome = friendly.friendly_compose(read_model(args.left), read_model(args.right), args.enabledness)
    _friendly_result(outcome, args)


def _cmd_fhide(args):
    outcome = friendly.friendly_hide(read_model(args.model), _labels(args.hide), args.enabledness)
    _friendly_result(outcome, args)


def _cmd_check(args):
    I, S = read_model(args.impl), read_model(args.spec)
    if args.relation == "ioco":
        verdict = conformance.ioco_check(I, S)
    else:
        verdict = conformance.uioco_check(I, S, args.enabledness)
    sys.stdout.write(verdict.describe() + "\n")
    if args.report:
        _write(diagnostics.to_json(diagnostics.verdict_dict(verdict, I, S)), args.report)
    if not verdict.passed:
        raise _Fail()


def _cmd_validate(args):
    A = read_model(args.model)
    r = validate(A)
    lines = [f"model {A.name}: {len(A.states)} states, {len(A.transitions)} transitions"]
    for key, value in r.as_dict().items():
        if isinstance(value, (list, tuple)):
            value = " ".join(v if isinstance(v, str) else "/".join(v) for v in value) if value else "-"
        lines.append(f"  {key}: {value}")
    sys.stdout.write("\n".join(lines) + "\n")


def _cmd_stats(args):
    rows = diagnostics.size_table([read_model(m) for m in args.models])
    if args.demonic:
        rows += diagnostics.size_table([algebra.demonic_complete(read_model(m)) for m in args.models])
    sys.stdout.write(diagnostics.format_size_table(rows))


def _cmd_dot(args):
    _write(formats.export_dot(read_model(args.model), suspension=args.suspension), args.output)


def _cmd_traces(args):
    A = read_model(args.model)
    if args.universal:
        traces = determinize(A, UNIVERSAL, args.enabledness).traces_upto(args.bound)
    else:
        traces = straces_upto(A, args.bound)
    for t in sorted(traces, key=trace_key):
        sys.stdout.write((" ".join(conformance.format_action(a) for a in t) or "ε") + "\n")


def _cmd_gen(args):
    p = randgen.GenParams(seed=args.seed, max_states=args.states, n_inputs=args.inputs,
                          n_outputs=args.outputs, transition_density=args.density,
                          tau_probability=args.tau, deterministic=args.deterministic)
    _emit_model(randgen.random_iolts(p, name=f"R{args.seed}"), args)


_SIGMA = ["mtee", "mcoffee", "mcoffeemilk", "done"]


def _demo_vending(out, enabledness):
    f = load_fixture
    S1, S2, I1, I2 = f("vending/S1"), f("vending/S2"), f("vending/I1"), f("vending/I2")
    S12, I12 = f("vending/S1par2"), f("vending/I1par2")
    out(diagnostics.format_size_table(diagnostics.size_table(
        [S1, S2, S12, ("d(S1)", algebra.demonic_complete(S1))])))
    out(conformance.ioco_check(I1, S1).describe().replace("ioco", "I1 ioco S1", 1))
    out(conformance.ioco_check(I2, S2).describe().replace("ioco", "I2 ioco S2", 1))
    out(conformance.ioco_check(I12, S12).describe().replace("ioco", "I1||I2 ioco S1||S2", 1))
    hidden = conformance.ioco_check(algebra.hide(I12, _SIGMA), algebra.hide(S12, _SIGMA))
    out(hidden.describe().replace("ioco", "hide(I1||I2) ioco hide(S1||S2)", 1))
    fs = friendly.friendly_compose(S1, S2, enabledness)
    fi = friendly.friendly_compose(I1, I2, enabledness)
    out(diagnostics.explain_text(fs).rstrip("\n"))
    out(conformance.ioco_check(fi.fragment, fs.fragment).describe().replace("ioco", "I1(x)I2 ioco S1(x)S2", 1))
    hs = friendly.friendly_hide(fs.fragment, _SIGMA, enabledness)
    hi = friendly.friendly_hide(fi.fragment, _SIGMA, enabledness)
    out(diagnostics.explain_text(hs).rstrip("\n"))
    out(conformance.ioco_check(hi.fragment, hs.fragment).describe().replace("ioco", "fhide(I) ioco fhide(S)", 1))


def _demo_altbit(out, enabledness):
    A, B = load_fixture("altbit/A"), load_fixture("altbit/B")
    drawn = load_fixture("altbit/composite-drawn")
    out(diagnostics.format_size_table(diagnostics.size_table(
        [A, B, ("d(A)", algebra.demonic_complete(A)), ("d(B)", algebra.demonic_complete(B)), drawn])).rstrip("\n"))
    out(diagnostics.explain_text(friendly.friendly_compose(A, B, enabledness)).rstrip("\n"))


def _demo_uioco(out, enabledness):
    f = load_fixture
    S1, S2, I1, I2 = f("uioco-ce/S1"), f("uioco-ce/S2"), f("uioco-ce/I1"), f("uioco-ce/I2")
    out(conformance.uioco_check(I1, S1).describe().replace("uioco", "I1 uioco S1", 1))
    out(conformance.uioco_check(I2, S2).describe().replace("uioco", "I2 uioco S2", 1))
    v = conformance.uioco_check(algebra.parallel_compose(I1, I2), algebra.parallel_compose(S1, S2))
    out(v.describe().replace("uioco", "I1||I2 uioco S1||S2", 1))
    out(diagnostics.explain_text(friendly.friendly_compose(S1, S2, enabledness)).rstrip("\n"))


def _demo_hide(out, enabledness):
    S, I = load_fixture("hide-ce/S"), load_fixture("hide-ce/I")
    out(conformance.uioco_check(I, S).describe().replace("uioco", "I uioco S", 1))
    v = conformance.uioco_check(algebra.hide(I, ["a"]), algebra.hide(S, ["a"]))
    out(v.describe().replace("uioco", "hide(I) uioco hide(S)", 1))
    hs = friendly.friendly_hide(S, ["a"], enabledness)
    hi = friendly.friendly_hide(I, ["a"], enabledness)
    out(diagnostics.explain_text(hs).rstrip("\n"))
    out(conformance.uioco_check(hi.fragment, hs.fragment).describe().replace("uioco", "fhide(I) uioco fhide(S)", 1))


_DEMOS = {"vending": _demo_vending, "altbit": _demo_altbit, "uioco-ce": _demo_uioco, "hide-ce": _demo_hide}


def _cmd_demo(args):
    _DEMOS[args.name](lambda text: sys.stdout.write(text.rstrip("\n") + "\n"), args.enabledness)


def _cmd_fixtures(args):
    if args.write:
        from .fixtures import write_models
        for path in write_models(args.write):
            sys.stdout.write(f"{path}\n")
    else:
        sys.stdout.write("\n".join(fixture_names()) + "\n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="friendly-ioco",
                                     description="ioco testing with friendly composition and hiding")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    def output(p):
        p.add_argument("-o", "--output", help="write the resulting model here (default: stdout)")

    def enabledness(p, default=STRONG):
        p.add_argument("--enabledness", choices=[WEAK, STRONG], default=default,
                       help=f"single-step or tau-closed enabledness (default: {default})")

    p = cmd("compose", _cmd_compose, "parallel composition")
    p.add_argument("left"); p.add_argument("right"); output(p)
    p = cmd("hide", _cmd_hide, "hide outputs")
    p.add_argument("model"); p.add_argument("--hide", required=True, help="comma separated outputs"); output(p)
    for name, func, help_text in (("fcompose", _cmd_fcompose, "friendly composition"),
                                  ("fhide", _cmd_fhide, "friendly hiding")):
        p = cmd(name, func, help_text)
        if name == "fcompose":
            p.add_argument("left"); p.add_argument("right")
        else:
            p.add_argument("model"); p.add_argument("--hide", required=True, help="comma separated outputs")
        output(p)
        p.add_argument("--report", help="write the JSON pruning report here")
        p.add_argument("--dot", help="write the plain result with pruned parts highlighted")
        enabledness(p)
    p = cmd("complete", _cmd_complete, "demonic completion (or --selfloop)")
    p.add_argument("model"); p.add_argument("--selfloop", action="store_true"); output(p)
    p = cmd("check", _cmd_check, "decide ioco or uioco")
    p.add_argument("relation", choices=["ioco", "uioco"]); p.add_argument("impl"); p.add_argument("spec")
    p.add_argument("--report", help="write the JSON verdict here")
    enabledness(p, WEAK)
    p = cmd("validate", _cmd_validate, "structural checks")
    p.add_argument("model")
    p = cmd("stats", _cmd_stats, "size table")
    p.add_argument("models", nargs="+"); p.add_argument("--demonic", action="store_true",
                                                         help="also list demonic completions")
    p = cmd("dot", _cmd_dot, "Graphviz export")
    p.add_argument("model"); p.add_argument("--suspension", action="store_true", help="draw quiescence loops")
    output(p)
    p = cmd("traces", _cmd_traces, "list suspension traces up to a bound")
    p.add_argument("model"); p.add_argument("--bound", type=int, default=3)
    p.add_argument("--universal", action="store_true", help="list Utraces instead")
    enabledness(p, WEAK)
    p = cmd("demo", _cmd_demo, "run a built-in scenario")
    p.add_argument("name", choices=sorted(_DEMOS)); enabledness(p)
    p = cmd("gen", _cmd_gen, "random model")
    p.add_argument("--seed", type=int, default=0); p.add_argument("--states", type=int, default=4)
    p.add_argument("--inputs", type=int, default=2); p.add_argument("--outputs", type=int, default=2)
    p.add_argument("--density", type=float, default=0.3); p.add_argument("--tau", type=float, default=0.1)
    p.add_argument("--deterministic", action="store_true"); output(p)
    p = cmd("fixtures", _cmd_fixtures, "list built-in models or write them as files")
    p.add_argument("--write", metavar="DIR")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        args.func(args)
    except _Fail:
        return 1
    except (IoltsError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
