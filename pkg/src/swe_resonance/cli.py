"""Command line runner: ``swe run|test|table|classify``.

Every run writes three files next to each other: a CSV profile, a JSON
summary and a gnuplot script that plots the CSV.
"""
from __future__ import annotations

import argparse
import configparser
import csv
import json
import logging
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .core import G, State
from .errors import ConvergenceFailure, LengthMismatch, NoSolution, SWEError
from .fixtures import L1_COMPOSITION, L1_WEIGHTED, TABLES, TESTS
from .godunov import (DEFAULT_PREFERENCE, RiemannData, SchemeConfig, evolve, exact_profile,
                      init_cell_averages)
from .riemann import (ClassificationReport, ConstructionTag, RiemannSolution, classify,
                      regime_a_markers, regime_b_markers, solve)

EXIT_OK, EXIT_NO_SOLUTION, EXIT_CONVERGENCE = 0, 2, 3
COMPOSITIONS = ("h+u", "h", "h+hu")


@dataclass
class Profile:
    x: np.ndarray
    h: np.ndarray
    u: np.ndarray
    a: np.ndarray


@dataclass
class ProblemConfig:
    left: Optional[State] = None
    right: Optional[State] = None
    profile: Optional[Path] = None
    x_jump: float = 0.0
    x0: float = -1.0
    x1: float = 1.0
    n: int = 500
    t_end: float = 0.1
    cfl: float = 0.75
    g: float = G
    preference: tuple = DEFAULT_PREFERENCE
    composition: str = L1_COMPOSITION
    weighted: bool = L1_WEIGHTED
    out_dir: Optional[Path] = None
    stem: str = "run"

    def validate(self):
        if not self.t_end > 0.0:
            raise ValueError("t_end must be positive")
        if self.n < 2:
            raise ValueError("need at least two cells")
        if (self.left is None) != (self.right is None):
            raise ValueError("Riemann data need both a left and a right state")
        if self.left is None and self.profile is None:
            raise ValueError("give either Riemann data or an initial profile")
        if self.composition not in COMPOSITIONS:
            raise ValueError(f"unknown norm composition {self.composition!r}")


@dataclass
class RunReport:
    numeric: Profile
    exact: Optional[Profile]
    l1_error: Optional[float]
    classification: Optional[ClassificationReport]
    solution: Optional[RiemannSolution]
    wall_time: float
    config: ProblemConfig
    files: dict = field(default_factory=dict)


def l1_error(numeric: Profile, exact: Profile, dx: float, composition: str = L1_COMPOSITION,
             weighted: bool = L1_WEIGHTED) -> float:
    """Discrete L1 distance between two profiles on the same points.

    ``composition`` picks the components: ``h+u`` (default), ``h`` or
    ``h+hu``.  Discharges are formed from ``h`` and ``u`` on both sides so
    that the value can be recomputed from a written CSV.
    """
    if len(numeric.h) != len(exact.h) or len(numeric.u) != len(exact.u):
        raise LengthMismatch(f"profiles of length {len(numeric.h)} and {len(exact.h)}")
    dh = np.abs(np.asarray(numeric.h) - np.asarray(exact.h))
    if composition == "h+u":
        d = dh + np.abs(np.asarray(numeric.u) - np.asarray(exact.u))
    elif composition == "h":
        d = dh
    elif composition == "h+hu":
        d = dh + np.abs(np.asarray(numeric.h) * np.asarray(numeric.u)
                        - np.asarray(exact.h) * np.asarray(exact.u))
    else:
        raise ValueError(f"unknown norm composition {composition!r}")
    total = float(np.sum(d))
    return total * dx if weighted else total


def _read_profile(path: Path):
    """Piecewise-constant profile from a CSV with columns ``x,h,u,a``.

    Row ``k`` holds on ``[x_k, x_{k+1})``; the last row extends to the right.
    """
    xs, states = [], []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            xs.append(float(row["x"]))
            states.append(State(float(row["h"]), float(row["u"]), float(row["a"])))
    if not xs:
        raise ValueError(f"{path}: empty profile")
    order = np.argsort(xs)
    xs = [xs[i] for i in order]
    states = [states[i] for i in order]

    def f(x):
        k = int(np.searchsorted(xs, x, side="right")) - 1
        return states[max(k, 0)]

    return f


def run(config: ProblemConfig) -> RunReport:
    config.validate()
    cfg = SchemeConfig(cfl=config.cfl, preference=config.preference, g=config.g)
    if config.left is not None:
        initial = RiemannData(config.left, config.right, config.x_jump)
    else:
        initial = _read_profile(config.profile)
    grid = init_cell_averages(initial, config.x0, config.x1, config.n, config.g)
    t0 = time.perf_counter()
    out = evolve(grid, config.t_end, cfg)
    wall = time.perf_counter() - t0
    x = out.centers
    numeric = Profile(x, out.h.copy(), out.u, out.a.copy())
    exact = err = report = sol = None
    if config.left is not None:
        report = classify(config.left, config.right, config.g)
        sol = solve(config.left, config.right, config.g, config.preference)
        he, ue, ae = exact_profile(sol, x, config.t_end, config.x_jump, config.g)
        exact = Profile(x, he, ue, ae)
        err = l1_error(numeric, exact, out.dx, config.composition, config.weighted)
    rep = RunReport(numeric, exact, err, report, sol, wall, config)
    if config.out_dir is not None:
        rep.files = write_outputs(rep, Path(config.out_dir), config.stem)
    return rep


# ----------------------------------------------------------------- output

def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def write_csv(report: RunReport, path: Path):
    num, ex = report.numeric, report.exact
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x", "h", "u", "a", "h_exact", "u_exact", "a_exact"])
        for k in range(len(num.x)):
            exv = ([ex.h[k], ex.u[k], ex.a[k]] if ex is not None else [math.nan] * 3)
            w.writerow([_fmt(v) for v in (num.x[k], num.h[k], num.u[k], num.a[k], *exv)])


def read_csv(path: Path) -> tuple[Profile, Profile]:
    cols = {k: [] for k in ("x", "h", "u", "a", "h_exact", "u_exact", "a_exact")}
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            for k in cols:
                cols[k].append(float(row[k]))
    c = {k: np.array(v) for k, v in cols.items()}
    return (Profile(c["x"], c["h"], c["u"], c["a"]),
            Profile(c["x"], c["h_exact"], c["u_exact"], c["a_exact"]))


def _gnuplot(csv_name: str, title: str) -> str:
    return f"""set datafile separator ','
set terminal pngcairo size 900,700
set output '{csv_name[:-4]}.png'
set multiplot layout 2,1 title '{title}'
set key top right
set ylabel 'h'
plot '{csv_name}' using 1:5 with lines lw 2 title 'exact', \\
     '{csv_name}' using 1:2 with points pt 7 ps 0.4 title 'Godunov'
set ylabel 'u'
set xlabel 'x'
plot '{csv_name}' using 1:6 with lines lw 2 title 'exact', \\
     '{csv_name}' using 1:3 with points pt 7 ps 0.4 title 'Godunov'
unset multiplot
"""


def summary(report: RunReport) -> dict:
    cfg = report.config
    out = {
        "n": cfg.n, "t_end": cfg.t_end, "cfl": cfg.cfl, "g": cfg.g,
        "preference": [t.value for t in cfg.preference],
        "l1_error": report.l1_error, "norm": cfg.composition, "dx_weighted": cfg.weighted,
        "wall_time": report.wall_time,
    }
    if report.classification is not None:
        c = report.classification
        out["classification"] = {"exists": c.exists, "uniqueness": c.uniqueness.value,
                                 "solutions": [t.value if t else None for t in c.tags]}
    if report.solution is not None:
        out["solution_tag"] = report.solution.tag.value if report.solution.tag else None
    return out


def write_outputs(report: RunReport, out_dir: Path, stem: str) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    csv_path = out_dir / f"{stem}.csv"
    json_path = out_dir / f"{stem}.json"
    gp_path = out_dir / f"{stem}.gp"
    write_csv(report, csv_path)
    json_path.write_text(json.dumps(summary(report), indent=2) + "\n")
    gp_path.write_text(_gnuplot(csv_path.name, stem))
    return {"csv": csv_path, "json": json_path, "gnuplot": gp_path}


# ------------------------------------------------------------ formatting

def _state_str(s: Optional[State]) -> str:
    if s is None:
        return "undefined"
    return f"({_fmt(s.h)}, {_fmt(s.u)}, {_fmt(s.a)})"


def format_solution(sol: RiemannSolution) -> str:
    lines = [f"  tag {sol.tag.value if sol.tag else 'classical'}"
             + (" (mirrored frame)" if sol.mirrored else "")]
    for name, s in sol.named.items():
        lines.append(f"    {name:8s} {_state_str(s)}")
    for w in sol.waves:
        sp = _fmt(w.lo) if w.lo == w.hi else f"[{_fmt(w.lo)}, {_fmt(w.hi)}]"
        lines.append(f"    {w.kind.value:11s} fam {w.family}  speed {sp}")
    if not sol.waves:
        lines.append("    (no waves: constant state)")
    return "\n".join(lines)


def format_report(rep: ClassificationReport) -> str:
    lines = [f"exists: {rep.exists}", f"uniqueness: {rep.uniqueness.value}", "evidence:"]
    for k, v in rep.evidence.items():
        if isinstance(v, State) or v is None and k.startswith("U"):
            v = _state_str(v)
        elif isinstance(v, float):
            v = _fmt(v)
        lines.append(f"  {k}: {v}")
    for tag, sol in rep.solutions:
        lines.append(format_solution(sol))
    return "\n".join(lines)


# ------------------------------------------------------------------ parser

def _parse_state(text: str) -> State:
    parts = [float(p) for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected h,u,a but got {text!r}")
    return State(*parts)


def _parse_prefs(text: str) -> tuple:
    return tuple(ConstructionTag.parse(p) for p in text.replace(" ", "").split(",") if p)


def load_config(path: Path) -> ProblemConfig:
    """Read a ``key = value`` config with sections problem/grid/run/output."""
    cp = configparser.ConfigParser()
    if not cp.read(path):
        raise FileNotFoundError(path)
    c = ProblemConfig()
    p = cp["problem"] if cp.has_section("problem") else {}
    if "left" in p:
        c.left = _parse_state(p["left"])
    if "right" in p:
        c.right = _parse_state(p["right"])
    if "profile" in p:
        c.profile = (Path(path).parent / p["profile"]).resolve()
    c.x_jump = float(p.get("x_jump", c.x_jump))
    if cp.has_section("grid"):
        gsec = cp["grid"]
        c.x0 = gsec.getfloat("x0", c.x0)
        c.x1 = gsec.getfloat("x1", c.x1)
        c.n = gsec.getint("n", c.n)
    if cp.has_section("run"):
        r = cp["run"]
        c.t_end = r.getfloat("t_end", c.t_end)
        c.cfl = r.getfloat("cfl", c.cfl)
        c.g = r.getfloat("g", c.g)
        if "prefer" in r:
            c.preference = _parse_prefs(r["prefer"])
        c.composition = r.get("norm", c.composition)
        c.weighted = r.getboolean("dx_weighted", c.weighted)
    if cp.has_section("output"):
        o = cp["output"]
        c.out_dir = (Path(path).parent / o.get("dir", ".")).resolve()
        c.stem = o.get("stem", c.stem)
    return c


def _apply_overrides(c: ProblemConfig, args) -> ProblemConfig:
    if getattr(args, "n", None):
        c.n = args.n
    if getattr(args, "cfl", None):
        c.cfl = args.cfl
    if getattr(args, "t_end", None):
        c.t_end = args.t_end
    if getattr(args, "prefer", None):
        c.preference = _parse_prefs(args.prefer)
    if getattr(args, "norm", None):
        c.composition = args.norm
    if getattr(args, "out", None):
        c.out_dir = Path(args.out)
    return c


def _print_run(rep: RunReport):
    print(f"n={rep.config.n} t_end={rep.config.t_end} cfl={rep.config.cfl}")
    if rep.solution is not None:
        print(format_solution(rep.solution))
    if rep.l1_error is not None:
        print(f"l1_error ({rep.config.composition}) = {_fmt(rep.l1_error)}")
    print(f"wall time {rep.wall_time:.3f} s")
    for k, p in rep.files.items():
        print(f"wrote {k}: {p}")


def cmd_run(args) -> int:
    c = _apply_overrides(load_config(Path(args.config)), args)
    _print_run(run(c))
    return EXIT_OK


def cmd_test(args) -> int:
    fx = TESTS[args.number]
    c = ProblemConfig(left=fx.left, right=fx.right, x0=fx.x0, x1=fx.x1, n=fx.n,
                      t_end=fx.t_end, stem=f"test{fx.number}", out_dir=Path("swe-out"))
    c = _apply_overrides(c, args)
    _print_run(run(c))
    return EXIT_OK


def cmd_table(args) -> int:
    t = TABLES[args.id.lower()]
    mk = regime_a_markers if t.regime == "A" else regime_b_markers
    print(f"table {t.name}: U_L = {_state_str(t.left)}, a_R = {_fmt(t.a_R)}")
    inputs = [("as printed", t.left)]
    if t.corrected_left is not None:
        inputs.append(("corrected input", t.corrected_left))
    for label, L in inputs:
        m = mk(L, t.a_R)
        print(f"  {label}: U_L = {_state_str(L)}")
        for name, (h, u) in t.printed.items():
            s = m[name]
            err = max(abs(s.h - h), abs(s.u - u)) if s is not None else math.inf
            verdict = "ok" if err <= t.tol else "MISMATCH"
            print(f"    {name:7s} computed {_state_str(s)}  printed ({h}, {u})  |diff| {err:.3g} {verdict}")
    return EXIT_OK


def cmd_classify(args) -> int:
    print(format_report(classify(args.left, args.right, args.g)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="swe", description="Exact Riemann solver and Godunov "
                                 "scheme for shallow water over a bottom step.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def overrides(p):
        p.add_argument("--n", type=int)
        p.add_argument("--cfl", type=float)
        p.add_argument("--t-end", type=float, dest="t_end")
        p.add_argument("--prefer", help="comma list of a1,a2,a3,b1,b2,b3")
        p.add_argument("--norm", choices=COMPOSITIONS)
        p.add_argument("--out", help="output directory")

    p = sub.add_parser("run", help="run a problem described by a config file")
    p.add_argument("config")
    overrides(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("test", help="run a built-in test problem")
    p.add_argument("number", type=int, choices=sorted(TESTS))
    overrides(p)
    p.set_defaults(func=cmd_test)

    p = sub.add_parser("table", help="recompute a marker table")
    p.add_argument("id", type=str.lower, choices=sorted(TABLES))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("classify", help="existence and multiplicity of a Riemann problem")
    p.add_argument("--left", type=_parse_state, required=True, help="h,u,a")
    p.add_argument("--right", type=_parse_state, required=True, help="h,u,a")
    p.add_argument("--g", type=float, default=G)
    p.set_defaults(func=cmd_classify)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except NoSolution as exc:
        where = f" (interface {exc.interface})" if exc.interface is not None else ""
        print(f"no solution{where}: {exc}", file=sys.stderr)
        return EXIT_NO_SOLUTION
    except ConvergenceFailure as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except (SWEError, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
