"""The commands behind the CLI: count, solve, verify, batch, render, fixtures.

Every command returns plain data (dicts, bytes) so the output is
deterministic and easy to test; :mod:`apollonius.cli` only formats it.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import classify, oracle
from .classify import INFINITE, Special, TopoSignature, table_cell
from .config import ConfigFile, load_config
from .count import CountResult, apollonius_count
from .errors import ApolloniusError, NumericalInstability
from .fixtures import all_fixtures
from .inversion import TransformRecord, normalize_lines, pull_back
from .objects import object_to_dict
from .randomgen import random_configs
from .render import render_svg


@dataclass
class Report:
    config: ConfigFile
    normalized: tuple
    record: TransformRecord
    signature: TopoSignature
    expected: object
    computed: CountResult
    oracle_count: object = None
    oracle_mode: str | None = None
    solutions: list = field(default_factory=list)

    @property
    def agreement(self) -> bool | None:
        if self.oracle_count is None:
            return None
        return self.expected == self.computed.total == self.oracle_count

    def to_dict(self) -> dict:
        sig = self.signature
        table, cell = table_cell(sig)
        out = {
            "mode": self.config.mode,
            "objects": [object_to_dict(o) for o in self.config.objects],
            "normalized": {
                "objects": [object_to_dict(o) for o in self.normalized],
                "inversions": [
                    {"center": [_num(c) for c in inv.center], "power": _num(inv.power_k2)}
                    for inv in self.record.steps
                ],
            },
            "signature": {
                "object_kinds": list(sig.object_kinds),
                "distinct_intersections": sig.distinct_intersections,
                "tangency_points": sig.tangency_points,
                "double_points": sig.double_points,
                "separator": str(sig.separator),
                "triple_tangent_at_common_point": sig.triple_tangent_at_common_point,
                "table": table,
                "cell": list(cell),
            },
            "expected": _count(self.expected),
            "computed": {
                "total": _count(self.computed.total),
                "z": self.computed.z,
                "k": self.computed.k,
                "per_class": [
                    {
                        "reversed": [i + 2 for i, f in enumerate(c.flips) if f],
                        "discriminant_sign": c.sign,
                        "n": _count(c.n),
                    }
                    for c in self.computed.per_class
                ],
            },
        }
        if self.oracle_count is not None:
            out["oracle"] = {"count": _count(self.oracle_count), "mode": self.oracle_mode}
            out["agreement"] = self.agreement
        if self.solutions:
            out["solutions"] = [_round_obj(object_to_dict(s)) for s in self.solutions]
        return out


def _num(v):
    if isinstance(v, (Fraction, int)):
        v = Fraction(v)
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return _round(v)


def _round(v: float) -> float:
    r = round(float(v), 10)
    return 0.0 if r == 0 else r


def _round_obj(d: dict) -> dict:
    return {k: (_round(v) if isinstance(v, float) else v) for k, v in d.items()}


def _count(c):
    if isinstance(c, Special):
        return c.value
    return c


def _solution_key(s) -> tuple:
    d = object_to_dict(s)
    order = {"circle": 0, "line": 1, "degenerate_point": 2, "point_at_infinity": 3}
    vals = [d.get(k) for k in ("cx", "cy", "r", "nx", "ny", "d", "x", "y")]
    return (order[d["type"]],) + tuple(_round(v) if v is not None else 0.0 for v in vals)


def analyze(cfg: ConfigFile, with_oracle: bool = False) -> Report:
    normalized, record = normalize_lines(cfg.objects)
    sig = classify.topo_signature(normalized)
    report = Report(
        config=cfg,
        normalized=tuple(normalized),
        record=record,
        signature=sig,
        expected=classify.expected_count(sig),
        computed=apollonius_count(normalized),
    )
    if with_oracle:
        try:
            sols = oracle.solve(normalized, cfg.mode)
            report.oracle_mode = cfg.mode
        except NumericalInstability:
            # ties are never decided in floats
            sols = oracle.solve(normalized, "exact")
            report.oracle_mode = "exact (float oracle refused a near-tie)"
        report.oracle_count = sols.count
        report.solutions = sorted((pull_back(record, s) for s in sols.solutions), key=_solution_key)
    return report


def run_classify(cfg: ConfigFile) -> dict:
    d = analyze(cfg).to_dict()
    return {k: d[k] for k in ("mode", "objects", "normalized", "signature", "expected")}


def run_count(cfg: ConfigFile) -> dict:
    return analyze(cfg).to_dict()


def run_solve(cfg: ConfigFile) -> dict:
    return analyze(cfg, with_oracle=True).to_dict()


def run_verify(cfg: ConfigFile) -> tuple[dict, int]:
    """The report and its exit code (0 agree, 1 disagree)."""
    report = analyze(cfg, with_oracle=True)
    return report.to_dict(), 0 if report.agreement else 1


def run_render(cfg: ConfigFile, out: str | os.PathLike | None = None) -> bytes:
    report = analyze(cfg, with_oracle=True)
    svg = render_svg(cfg.objects, report.solutions)
    if out is not None:
        Path(out).write_bytes(svg)
    return svg


def _cell_label(report: Report) -> str:
    table, cell = table_cell(report.signature)
    return "/".join([table] + [str(c) for c in cell])


def run_batch(
    directory: str | os.PathLike | None = None,
    seed: int = 1,
    n: int = 1000,
    allow_degenerate: bool = False,
    n_points: int = 0,
    mode: str | None = None,
) -> tuple[dict, int]:
    """Verify many configurations; exit code 1 on any disagreement or error."""
    items = []
    if directory is not None:
        for path in sorted(Path(directory).glob("*.json")):
            if path.name == "catalog.json":
                continue
            items.append((path.name, lambda p=path: load_config(p, mode)))
    else:
        cfgs = random_configs(seed, n, n_points=n_points, allow_degenerate=allow_degenerate)
        for i, objs in enumerate(cfgs):
            items.append((f"#{i}", lambda o=objs: ConfigFile(tuple(o), mode or "exact")))
    coverage: dict[str, int] = {}
    counts: dict[str, int] = {}
    disagreements, errors = [], []
    agree = 0
    for name, make in items:
        try:
            report = analyze(make(), with_oracle=True)
        except ApolloniusError as e:
            errors.append({"item": name, "error": f"{type(e).__name__}: {e}"})
            continue
        label = _cell_label(report)
        coverage[label] = coverage.get(label, 0) + 1
        key = str(_count(report.computed.total))
        counts[key] = counts.get(key, 0) + 1
        if report.agreement:
            agree += 1
        else:
            disagreements.append({
                "item": name,
                "cell": label,
                "expected": _count(report.expected),
                "computed": _count(report.computed.total),
                "oracle": _count(report.oracle_count),
            })
    summary = {
        "source": str(directory) if directory is not None else {"seed": seed, "n": n},
        "total": len(items),
        "agreements": agree,
        "disagreements": sorted(disagreements, key=lambda d: d["item"]),
        "errors": sorted(errors, key=lambda d: d["item"]),
        "coverage": dict(sorted(coverage.items())),
        "count_histogram": dict(sorted(counts.items())),
    }
    return summary, 0 if agree == len(items) else 1


def run_fixtures(out_dir: str | os.PathLike) -> list[str]:
    """Write every fixture as a config file plus a ``catalog.json`` index."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    index = []
    for fx in all_fixtures():
        cfg = ConfigFile(fx.objects, "exact")
        (out / f"{fx.name}.json").write_text(cfg.dumps(), encoding="utf-8")
        index.append({
            "name": fx.name,
            "table": fx.table,
            "cell": list(fx.cell),
            "expected": _count(fx.expected),
            "note": fx.note,
        })
    (out / "catalog.json").write_text(json.dumps(index, indent=2) + "\n", encoding="utf-8")
    return [f"{fx.name}.json" for fx in all_fixtures()] + ["catalog.json"]


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


__all__ = [
    "INFINITE",
    "Report",
    "analyze",
    "dumps",
    "run_batch",
    "run_classify",
    "run_count",
    "run_fixtures",
    "run_render",
    "run_solve",
    "run_verify",
]
