"""Command line: ``garnier verify | act | apply | atlas``.

Exit codes: 0 all checks pass, 1 a check failed (or a polar hit), 2 bad configuration.
"""
from __future__ import annotations

import argparse
import json
import subprocess
import sys
from pathlib import Path

from . import __version__
from .exact import PolarError, rational, to_str


class ConfigError(ValueError):
    pass


def version_string() -> str:
    try:
        desc = subprocess.run(
            ["git", "describe", "--always", "--dirty", "--tags"],
            cwd=Path(__file__).resolve().parent, capture_output=True, text=True, timeout=5,
        ).stdout.strip()
    except (OSError, subprocess.SubprocessError):
        desc = ""
    return f"{__version__}+g{desc}" if desc else __version__


def _emit(report: dict, output: str, lines) -> None:
    if output == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    else:
        for line in lines:
            print(line)


def _config(args):
    from .lattice import CONVENTIONS
    from .verify import RunConfig

    if args.convention not in CONVENTIONS:
        raise ConfigError(f"unknown convention {args.convention!r}")
    if args.trials is not None and args.trials < 1:
        raise ConfigError("--trials must be positive")
    if args.truncation < 1:
        raise ConfigError("--truncation must be positive")
    model = getattr(args, "model", None)
    return RunConfig(seed=args.seed, trials=args.trials, truncation=args.truncation,
                     convention=args.convention, output=args.output, model=model)


def cmd_verify(args) -> int:
    from .verify import SUITES, run

    if args.suite != "all" and args.suite not in SUITES:
        raise ConfigError(f"unknown suite {args.suite!r}")
    if args.model not in (None, "X10", "X21"):
        raise ConfigError("--model must be X10 or X21")
    cfg = _config(args)
    checks = run(args.suite, cfg)
    ok = all(c["passed"] for c in checks)
    report = {
        "version": version_string(),
        "command": "verify",
        "suite": args.suite,
        "config": cfg.to_json(),
        "passed": ok,
        "summary": {"checks": len(checks), "failed": sum(not c["passed"] for c in checks)},
        "checks": checks,
    }
    lines = [f"{'PASS' if c['passed'] else 'FAIL'}  [{c['suite']}] {c['name']}"
             + (f"  -- {c['detail']}" if c["detail"] and not c["passed"] else "") for c in checks]
    lines.append(f"{len(checks) - report['summary']['failed']}/{len(checks)} checks passed")
    _emit(report, args.output, lines)
    return 0 if ok else 1


def cmd_act(args) -> int:
    from .lattice import get_model, parse_word, root_datum, word_action, X10, degree_sequence

    if not args.word:
        raise ConfigError("--word is required")
    try:
        model = get_model(args.model or "X10")
        names = parse_word(args.word)
        m = word_action(names, model, args.convention)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    report = {
        "version": version_string(),
        "command": "act",
        "word": names,
        "config": _config(args).to_json(),
        "map": m.to_json(),
        "images": m.describe(),
    }
    lines = [f"{model.name} {','.join(names)} ({args.convention})"] + (m.describe() or ["identity"])
    if model == X10:
        roots = [str(m(a)) for a in root_datum().roots]
        report["roots"] = roots
        lines += [f"alpha{i} -> {r}" for i, r in enumerate(roots)]
    if args.degrees:
        seq = [to_str(x) for x in degree_sequence(m, args.degrees)]
        report["degree_sequence"] = seq
        lines.append("degrees <M^n Hq, hq>: " + " ".join(seq))
    _emit(report, args.output, lines)
    return 0


def _parse_values(text: str, n: int, what: str) -> list:
    text = text.strip()
    try:
        if text.startswith("["):
            vals = json.loads(text)
        else:
            vals = [v for v in text.replace("(", "").replace(")", "").split(",") if v.strip()]
        vals = [rational(str(v).strip()) for v in vals]
    except (ValueError, TypeError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot parse {what}: {text!r}") from exc
    if len(vals) != n:
        raise ConfigError(f"{what} needs {n} values, got {len(vals)}")
    return vals


def cmd_apply(args) -> int:
    from .bmap import PARAM_NAMES, ParamVector, WordPolarError, apply_word
    from .lattice import parse_word

    if not args.word or args.point is None or args.params is None:
        raise ConfigError("--word, --point and --params are required")
    try:
        names = parse_word(args.word)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    point = _parse_values(args.point, 4, "point")
    text = args.params.strip()
    if text.startswith("{"):
        try:
            a = ParamVector.from_dict(json.loads(text))
        except (ValueError, json.JSONDecodeError) as exc:
            raise ConfigError(str(exc)) from exc
    else:
        a = ParamVector(*_parse_values(text, 8, "params"))
    if not a.is_generic():
        raise ConfigError("parameters are not generic (a base quantity or an image vanishes)")
    report = {"version": version_string(), "command": "apply", "word": names,
              "config": _config(args).to_json(), "coords": args.coords,
              "point_in": [to_str(v) for v in point], "params_in": a.to_json()}
    try:
        x, b = apply_word(names, point, a, args.convention, args.coords)
    except WordPolarError as exc:
        report["error"] = {"type": "polar", "step": exc.step, "generator": exc.generator, "message": str(exc)}
        _emit(report, args.output, [f"polar hit: {exc}"])
        return 1
    report["point_out"] = [to_str(v) for v in x]
    report["params_out"] = b.to_json()
    lines = ["(" + ", ".join(report["point_out"]) + ")",
             ", ".join(f"{k}={v}" for k, v in b.to_json().items())]
    _emit(report, args.output, lines)
    return 0


def cmd_atlas(args) -> int:
    from .geom import atlas_dump

    charts = atlas_dump()
    report = {"version": version_string(), "command": "atlas", "charts": charts}
    lines = []
    for c in charts:
        lines.append(f"U{c['index']} ({', '.join(c['coords'])}), exceptional {c['exceptional']}: {c['center']}")
        lines += [f"    {k} = {v}" for k, v in c["to_base"].items()]
    _emit(report, args.output, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="garnier", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=version_string())
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=None)
    common.add_argument("--truncation", type=int, default=8)
    common.add_argument("--convention", default="right_first")
    common.add_argument("--output", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", default="all")
    v.add_argument("--model", default=None)
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("act", parents=[common], help="lattice action of a word")
    a.add_argument("--word", required=False)
    a.add_argument("--model", default="X10")
    a.add_argument("--degrees", type=int, default=0, help="report <M^n Hq, hq> for n = 1..N")
    a.set_defaults(func=cmd_act)

    ap = sub.add_parser("apply", parents=[common], help="apply a word to a point")
    ap.add_argument("--word")
    ap.add_argument("--point")
    ap.add_argument("--params")
    ap.add_argument("--coords", choices=("qr", "qp"), default="qr")
    ap.set_defaults(func=cmd_apply)

    at = sub.add_parser("atlas", parents=[common], help="dump the chart atlas")
    at.set_defaults(func=cmd_atlas)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
