"""Batch runner: ``verify --config run.json [--suite all] ...``.

Exit codes: 0 when nothing failed (inconclusive reports only warn), 1 when any
check failed, 2 on a configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from pathlib import Path
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import __version__
from .errors import ConfigError, InvalidParam
from .modules import Family, ModuleSpec
from .suites import GLOBAL, PER_SPEC, SUITES, Settings
from .verify import FAIL, INCONCLUSIVE, PASS, CheckReport

DEFAULT_GRID: Dict[str, Any] = {
    "families": [f.value for f in Family],
    "lambda": ["1", "2", "-1", "3/2"],
    "alpha": ["0", "1", "-2", "1/3"],
    "beta": ["0", "1", "5"],
    "xi": [[], ["1"], ["0", "1"], ["2", "-1", "1/2"]],
}

_CONFIG_FIELDS = {"suites", "specs", "grid", "m_max", "degree_cap", "step_budget", "iterations",
                  "seed", "seed_degree", "output", "format"}
_POSITIVE = ("m_max", "degree_cap", "step_budget", "iterations", "seed_degree")


@dataclass
class RunConfig:
    suites: List[str] = field(default_factory=lambda: ["all"])
    specs: List[ModuleSpec] = field(default_factory=list)
    grid: Optional[Dict[str, Any]] = None
    m_max: int = 6
    degree_cap: int = 8
    step_budget: int = 10_000
    iterations: int = 20
    seed: int = 0
    seed_degree: int = 2
    output: Optional[str] = None
    format: str = "json"

    def settings(self) -> Settings:
        return Settings(self.m_max, self.degree_cap, self.step_budget, self.iterations,
                        self.seed, self.seed_degree)

    def selected_suites(self) -> List[str]:
        if "all" in self.suites:
            return list(SUITES)
        return [s for s in SUITES if s in self.suites]

    def all_specs(self) -> List[ModuleSpec]:
        """Explicit specs, then the grid; the acceptance grid when neither is given."""
        grid = self.grid
        if grid is None and not self.specs:
            grid = DEFAULT_GRID
        out = list(self.specs)
        if grid is not None:
            out += expand_grid(grid)
        seen, unique = set(), []
        for s in out:
            if s not in seen:
                seen.add(s)
                unique.append(s)
        return unique

    def echo(self) -> Dict[str, Any]:
        d = {k: v for k, v in asdict(self).items() if k not in ("specs", "output")}
        d["specs"] = [s.to_json() for s in self.specs]
        return d


def expand_grid(grid: Mapping[str, Any]) -> List[ModuleSpec]:
    families = [Family(f) for f in grid.get("families", DEFAULT_GRID["families"])]
    lams = grid.get("lambda", ["1"])
    alphas = grid.get("alpha", ["0"])
    out = []
    for fam in families:
        betas = grid.get("beta", ["0"]) if fam is Family.OMEGA_HV else ["0"]
        xis = grid.get("xi", [[]]) if fam is Family.OMEGA_BIG else [[]]
        for lam, alpha, beta, xi in product(lams, alphas, betas, xis):
            obj: Dict[str, Any] = {"family": fam.value, "lambda": lam, "alpha": alpha}
            if fam is Family.OMEGA_HV:
                obj["beta"] = beta
            if fam is Family.OMEGA_BIG:
                obj["xi"] = xi
            out.append(ModuleSpec.from_json(obj))
    return out


def parse_config(text: Union[bytes, str]) -> RunConfig:
    """Validate a JSON run configuration; raise :class:`ConfigError` with a field path."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ConfigError(f"config is not UTF-8: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise ConfigError("config must be a JSON object")
    extra = sorted(set(obj) - _CONFIG_FIELDS)
    if extra:
        raise ConfigError(f"unknown field(s): {', '.join(extra)}")

    cfg = RunConfig()
    if "suites" in obj:
        suites = obj["suites"]
        if not isinstance(suites, list) or not all(isinstance(s, str) for s in suites):
            raise ConfigError("suites: must be a list of strings")
        for i, s in enumerate(suites):
            if s != "all" and s not in SUITES:
                raise ConfigError(f"suites[{i}]: unknown suite {s!r}")
        cfg.suites = suites
    if "specs" in obj:
        if not isinstance(obj["specs"], list):
            raise ConfigError("specs: must be a list")
        for i, s in enumerate(obj["specs"]):
            if not isinstance(s, dict):
                raise ConfigError(f"specs[{i}]: must be an object")
            try:
                cfg.specs.append(ModuleSpec.from_json(s))
            except InvalidParam as exc:
                raise ConfigError(f"specs[{i}]: {exc}") from exc
    if "grid" in obj:
        cfg.grid = _check_grid(obj["grid"])
    for name in _POSITIVE:
        if name in obj:
            setattr(cfg, name, _positive(name, obj[name]))
    if "seed" in obj:
        seed = obj["seed"]
        if isinstance(seed, bool) or not isinstance(seed, int) or not -2 ** 63 <= seed < 2 ** 64:
            raise ConfigError("seed: must be a 64-bit integer")
        cfg.seed = seed
    if "format" in obj:
        cfg.format = _format(obj["format"])
    if "output" in obj:
        if not isinstance(obj["output"], str):
            raise ConfigError("output: must be a path string")
        cfg.output = obj["output"]
    return cfg


def _positive(name: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ConfigError(f"{name}: must be a positive integer, got {value!r}")
    return value


def _format(value: Any) -> str:
    if value not in ("json", "text"):
        raise ConfigError(f"format: must be 'json' or 'text', got {value!r}")
    return value


def _check_grid(grid: Any) -> Dict[str, Any]:
    if not isinstance(grid, dict):
        raise ConfigError("grid: must be an object")
    extra = sorted(set(grid) - set(DEFAULT_GRID))
    if extra:
        raise ConfigError(f"grid: unknown field(s): {', '.join(extra)}")
    for key, values in grid.items():
        if not isinstance(values, list):
            raise ConfigError(f"grid.{key}: must be a list")
    for i, f in enumerate(grid.get("families", [])):
        if f not in DEFAULT_GRID["families"]:
            raise ConfigError(f"grid.families[{i}]: unknown family {f!r}")
    try:
        expand_grid(grid)
    except InvalidParam as exc:
        raise ConfigError(f"grid: {exc}") from exc
    return grid


# --- execution --------------------------------------------------------------------

Task = Tuple[str, Optional[ModuleSpec], Settings]


def _run_task(task: Task) -> List[CheckReport]:
    suite, spec, settings = task
    if spec is None:
        return GLOBAL[suite](settings)
    return PER_SPEC[suite](spec, settings)


def _workers() -> int:
    """Worker processes: ``CARTANFREE_THREADS`` if set, else the CPU count."""
    raw = os.environ.get("CARTANFREE_THREADS")
    if not raw:
        return os.cpu_count() or 1
    try:
        return max(1, int(raw))
    except ValueError:
        raise ConfigError(f"CARTANFREE_THREADS must be an integer, got {raw!r}") from None


def run(config: RunConfig) -> Dict[str, Any]:
    """Execute the selected suites and return the run summary (a JSON-ready dict)."""
    settings = config.settings()
    suites = config.selected_suites()
    specs = config.all_specs() if suites else []
    tasks: List[Task] = []
    for suite in suites:
        tasks.append((suite, None, settings))
        tasks.extend((suite, spec, settings) for spec in specs)
    workers = min(_workers(), len(tasks)) if tasks else 1
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_run_task, tasks))
    else:
        chunks = [_run_task(t) for t in tasks]
    reports = sorted((r for chunk in chunks for r in chunk),
                     key=lambda r: (r.key(), json.dumps(r.to_json(), sort_keys=True)))
    totals = {PASS: 0, FAIL: 0, INCONCLUSIVE: 0}
    for r in reports:
        totals[r.status] += 1
    summary: Dict[str, Any] = {
        "version": __version__,
        "config": config.echo(),
        "suites": suites,
        "spec_count": len(specs),
        "totals": {**totals, "reports": len(reports), "assertions": sum(r.assertions for r in reports)},
        "reports": [r.to_json() for r in reports],
        "notes": [],
    }
    if not suites:
        summary["notes"].append("no suites selected: nothing to do")
    if totals[INCONCLUSIVE]:
        summary["notes"].append(f"{totals[INCONCLUSIVE]} inconclusive report(s): bounded search, not a failure")
    return summary


def exit_code(summary: Mapping[str, Any]) -> int:
    return 1 if summary["totals"][FAIL] else 0


def render(summary: Mapping[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(summary, sort_keys=True, indent=2) + "\n"
    lines = [f"cartanfree {summary['version']}: suites {', '.join(summary['suites']) or '(none)'}"
             f" over {summary['spec_count']} module(s)"]
    for r in summary["reports"]:
        lines.append(_text_line(r))
        if r["counterexample"] is not None:
            lines.append("    counterexample: " + json.dumps(r["counterexample"], sort_keys=True))
    t = summary["totals"]
    lines.append(f"totals: {t[PASS]} pass, {t[FAIL]} fail, {t[INCONCLUSIVE]} inconclusive, "
                 f"{t['assertions']} assertions")
    lines.extend(f"note: {n}" for n in summary["notes"])
    return "\n".join(lines) + "\n"


def _text_line(r: Mapping[str, Any]) -> str:
    spec = r["spec"]
    where = ""
    if spec is not None:
        where = " " + " ".join(f"{k}={json.dumps(v) if isinstance(v, list) else v}"
                               for k, v in sorted(spec.items()))
    args = ", ".join(f"{k}={json.dumps(v) if not isinstance(v, str) else v}"
                     for k, v in sorted(r["inputs"].items()))
    args = f" [{args}]" if args else ""
    return f"{r['status'].upper():12s} {r['check']}{where}{args} ({r['assertions']} assertions)"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="verify", description="Exact verification of rank-one free modules.")
    p.add_argument("--config", type=Path, help="JSON run configuration")
    p.add_argument("--suite", action="append", choices=list(SUITES) + ["all"],
                   help="suite to run (repeatable); overrides the config")
    p.add_argument("--m-max", type=int)
    p.add_argument("--deg-max", type=int, dest="degree_cap")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", choices=["json", "text"])
    p.add_argument("--out", type=Path, help="write the summary here instead of stdout")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = parse_config(args.config.read_bytes()) if args.config else RunConfig()
        if args.suite:
            config.suites = args.suite
        for name in ("m_max", "degree_cap"):
            value = getattr(args, name)
            if value is not None:
                setattr(config, name, _positive(name, value))
        if args.seed is not None:
            config.seed = args.seed
        if args.format:
            config.format = args.format
        summary = run(config)
    except (ConfigError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    text = render(summary, config.format)
    out = args.out or (Path(config.output) if config.output else None)
    if out:
        out.write_text(text)
    else:
        sys.stdout.write(text)
    code = exit_code(summary)
    t = summary["totals"]
    print(f"{t[PASS]} pass, {t[FAIL]} fail, {t[INCONCLUSIVE]} inconclusive", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
