"""Command line front end: ``rdet {indec,ar,det,verify,sweep}``.

Exit codes: 0 success, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from .arquiver import ar_quiver, export_dot
from .determiner import det_set
from .intervals import labels
from .quiver import QuiverError, QuiverSpec, all_quivers, load_quiver, random_quiver
from .verify import CHECKS, run_checks

N_MAX_CAP = 12
FORMATS = {
    "indec": ("text", "json"),
    "ar": ("text", "json", "dot"),
    "det": ("text", "json"),
    "verify": ("text",),
    "sweep": ("text",),
}


class InputError(Exception):
    pass


@dataclass
class CliConfig:
    command: str
    input: str | None = None
    format: str = "text"
    seed: int = 0
    n_max: int = 8
    trials: int = 0
    relations: str = "none"
    mod_reflection: bool = False
    full: bool = False
    oracle: bool = True
    out: str | None = None

    def validate(self):
        if self.command not in FORMATS:
            raise InputError(f"unknown command {self.command!r}")
        if self.format not in FORMATS[self.command]:
            raise InputError(f"format {self.format!r} not available for {self.command!r}")
        if self.command == "sweep":
            if not 1 <= self.n_max <= N_MAX_CAP:
                raise InputError(f"--n-max must be in 1..{N_MAX_CAP}")
            if self.trials < 0:
                raise InputError("--trials must be non-negative")
        elif self.input is None:
            raise InputError(f"{self.command!r} needs a quiver (file path, '-' or inline spec)")


def read_spec(arg: str) -> QuiverSpec:
    """Load a quiver from a path, ``-`` (stdin) or an inline spec (``;`` separates lines)."""
    if arg == "-":
        text = sys.stdin.read()
    else:
        path = Path(arg)
        text = path.read_text(encoding="utf-8") if path.is_file() else arg.replace(";", "\n")
    return load_quiver(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def render_indec(q: QuiverSpec, fmt: str) -> str:
    mods = ar_quiver(q).modules
    if fmt == "json":
        return _dump({"n": q.n, "modules": [{"interval": m.as_list(), "labels": labels(m, q)} for m in mods]})
    lines = [f"{len(mods)} indecomposables"]
    lines += [f"{str(m):<9} {' '.join(labels(m, q))}".rstrip() for m in mods]
    return "\n".join(lines) + "\n"


def render_ar(q: QuiverSpec, fmt: str) -> str:
    ar = ar_quiver(q)
    if fmt == "dot":
        return export_dot(q)
    if fmt == "json":
        return _dump({
            "irreducibles": [
                {"from": f.source.as_list(), "to": f.target.as_list(), "kind": f.kind}
                for f in ar.irreducibles
            ],
            "sequences": [s.to_dict() for s in ar.sequences],
        })
    lines = [f"{len(ar.irreducibles)} irreducible morphisms"]
    lines += [f"  {f}" for f in ar.irreducibles]
    lines.append(f"{len(ar.sequences)} almost split sequences")
    lines += [f"  {s}" for s in ar.sequences]
    return "\n".join(lines) + "\n"


def render_det(q: QuiverSpec, fmt: str) -> str:
    rep = det_set(q)
    if fmt == "json":
        return _dump(rep.to_dict())
    lines = [
        f"quiver: {q}",
        f"p = {rep.p}, q = {rep.q}, r = {rep.r}",
        f"|Det| = {rep.det_count}, predicted = {rep.predicted} ({rep.branch})",
        "Det:",
    ]
    for m in rep.det_set:
        lines.append(f"  {str(m):<9} {' '.join(labels(m, q))}".rstrip())
    lines.append("records:")
    for r in rep.records:
        lines.append(f"  {r.morphism}  C = {r.determiner}  [{r.classification}]")
    return "\n".join(lines) + "\n"


def run_verify(q: QuiverSpec, out, oracle: bool = True) -> int:
    names = [n for n in CHECKS if oracle or n != "oracle_agrees"]
    results = run_checks(q, names)
    for res in results:
        out.write(res.line() + "\n")
    failed = [r for r in results if not r.ok]
    if failed:
        out.write(f"first counterexample: {failed[0].name}: {failed[0].detail}\n")
        return 1
    out.write(f"all {len(results)} checks passed\n")
    return 0


def sweep_cases(cfg: CliConfig) -> list[QuiverSpec]:
    cases = list(all_quivers(cfg.n_max, 2, cfg.mod_reflection))
    if cfg.relations == "random" and cfg.n_max >= 3:
        rng = random.Random(cfg.seed)
        for _ in range(cfg.trials):
            q = random_quiver(rng.randint(3, cfg.n_max), rng)
            while not q.relations:
                q = random_quiver(rng.randint(3, cfg.n_max), rng)
            cases.append(q)
    return cases


def check_case(q: QuiverSpec, full: bool) -> str | None:
    if full:
        bad = [r for r in run_checks(q, stop_first=True) if not r.ok]
        return None if not bad else f"{bad[0].name}: {bad[0].detail}"
    rep = det_set(q)
    if rep.det_count != rep.predicted:
        return f"|Det| = {rep.det_count} but {rep.branch} predicts {rep.predicted}"
    single = sum(1 for s in ar_quiver(q).sequences if len(s.middle) == 1)
    if single != q.n - 1:
        return f"{single} one-middle-term sequences, expected {q.n - 1}"
    return None


def run_sweep(cfg: CliConfig, out) -> int:
    cases = sweep_cases(cfg)
    failures = []
    for q in cases:
        try:
            problem = check_case(q, cfg.full)
        except Exception as exc:
            problem = f"{type(exc).__name__}: {exc}"
        if problem is not None:
            failures.append((q, problem))
    n_orient = sum(1 for q in cases if q.is_path_algebra)
    out.write(
        f"checked {len(cases)} cases: {n_orient} path algebras (n = 2..{cfg.n_max}), "
        f"{len(cases) - n_orient} bound quiver algebras\n"
    )
    for q, problem in failures:
        out.write(f"FAIL {q}: {problem}\n")
    if failures:
        out.write(f"first counterexample: {failures[0][0]}: {failures[0][1]}\n")
        return 1
    out.write("all cases agree with the counting formulas\n")
    return 0


def run(cfg: CliConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        cfg.validate()
        if cfg.command == "sweep":
            return run_sweep(cfg, out)
        q = read_spec(cfg.input)
    except (InputError, QuiverError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    if cfg.command == "verify":
        return run_verify(q, out, cfg.oracle)
    text = {"indec": render_indec, "ar": render_ar, "det": render_det}[cfg.command](q, cfg.format)
    if cfg.out:
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rdet",
        description="Minimal right determiners of irreducible morphisms over type A_n algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("indec", "list indecomposable modules"),
        ("ar", "irreducible morphisms and almost split sequences"),
        ("det", "minimal right determiners and |Det|"),
        ("verify", "run the invariant suite on one quiver"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", help="quiver file, '-' for stdin, or an inline spec such as '1 > 2 < 3'")
        p.add_argument("--format", default="text", choices=FORMATS[name])
        if name in ("indec", "ar", "det"):
            p.add_argument("--out", help="write output to this path instead of stdout")
        if name == "verify":
            p.add_argument("--no-oracle", dest="oracle", action="store_false",
                           help="skip the brute-force determiner cross-check")
    p = sub.add_parser("sweep", help="check the counting formulas over many quivers")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--relations", choices=("none", "random"), default="none")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--mod-reflection", action="store_true",
                   help="skip orientations that mirror an earlier one")
    p.add_argument("--full", action="store_true", help="run the whole invariant suite per case")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) if exc.code in (0, None) else 2
    cfg = CliConfig(
        command=args.command,
        input=getattr(args, "input", None),
        format=getattr(args, "format", "text"),
        seed=getattr(args, "seed", 0),
        n_max=getattr(args, "n_max", 8),
        trials=getattr(args, "trials", 0),
        relations=getattr(args, "relations", "none"),
        mod_reflection=getattr(args, "mod_reflection", False),
        full=getattr(args, "full", False),
        oracle=getattr(args, "oracle", True),
        out=getattr(args, "out", None),
    )
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
