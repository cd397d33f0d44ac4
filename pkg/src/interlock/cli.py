"""Command-line interface: ``interlock <command> [options]``.

Commands: project, analyze, slices, components, concord, convert, validate,
generate.  Reports are UTF-8 with LF line endings and dot decimals.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .centrality import (
    CentralityReport,
    betweenness_centrality,
    centrality_report,
    centralization,
)
from .cohesion import census, component_members, components, m_slice, slice_census
from .concordance import centrality_concordance
from .core import AffiliationNetwork, JournalGraph
from .errors import InterlockError
from .ingest import (
    read_affiliation_csv,
    read_fixture_a1,
    read_pajek_net,
    realize_affiliation,
    write_affiliation_csv,
    write_component_blocks,
    write_distribution_csv,
    write_dot,
    write_fixture_a1,
    write_pajek_clu,
    write_pajek_net,
    write_slices_csv,
)
from .project import degree_distribution, line_value_distribution, project, summarize
from .validate import report_from_fixture, run_checks

log = logging.getLogger("interlock")

FORMATS = ("affiliation-csv", "pajek-net")


@dataclass
class RunConfig:
    input: Path | None = None
    format: str | None = None
    out: Path = Path(".")
    closeness: str = "corrected"
    m: list[int] = field(default_factory=lambda: [2, 3, 6])
    min_size: int = 2
    report: str = "csv"
    workers: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("--workers must be >= 1")
        if not self.m or any(k < 1 for k in self.m):
            raise ValueError("--m thresholds must all be >= 1")
        if any(b <= a for a, b in zip(self.m, self.m[1:])):
            raise ValueError("--m thresholds must be strictly increasing")
        if self.min_size < 2:
            raise ValueError("--min-size must be >= 2")


def _m_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad threshold list {text!r}") from None


def _guess_format(path: Path) -> str:
    return "pajek-net" if path.suffix.lower() == ".net" else "affiliation-csv"


def load_input(cfg: RunConfig) -> tuple[AffiliationNetwork | None, JournalGraph]:
    if cfg.input is None:
        raise InterlockError("--input is required")
    fmt = cfg.format or _guess_format(cfg.input)
    with open(cfg.input, "rb") as fh:
        if fmt == "pajek-net":
            return None, read_pajek_net(fh)
        a = read_affiliation_csv(fh)
    if a.duplicates:
        log.warning("%s: %d duplicate rows", cfg.input, a.duplicates)
    return a, project(a)


def _write(cfg: RunConfig, name: str, data: bytes) -> Path:
    cfg.out.mkdir(parents=True, exist_ok=True)
    path = cfg.out / name
    path.write_bytes(data)
    log.info("wrote %s", path)
    return path


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return f"{x:.3f}"
    return str(x)


def _table(header: list[str], rows: list[list]) -> bytes:
    out = io.StringIO()
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(x) for x in row])
    return out.getvalue().encode("utf-8")


def _json(obj) -> bytes:
    return (json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=True) + "\n").encode("utf-8")


def _rounded(d: dict) -> dict:
    return {k: round(v, 6) if isinstance(v, float) else v for k, v in d.items()}


# ------------------------------------------------------------------ commands


def cmd_project(cfg: RunConfig) -> int:
    a, g = load_input(cfg)
    _write(cfg, "network.net", write_pajek_net(g))
    s = summarize(a, g).as_dict()
    if cfg.report == "json":
        _write(cfg, "summary.json", _json(_rounded(s)))
    else:
        _write(cfg, "summary.csv", _table(list(s), [list(s.values())]))
    _write(cfg, "degree_distribution.csv", write_distribution_csv(degree_distribution(g), "degree", 1))
    _write(cfg, "line_values.csv", write_distribution_csv(line_value_distribution(g), "line_value", 2))
    print(f"{g.n} journals, {g.n_edges} lines, density {s['density']:.4f}")
    return 0


def cmd_analyze(cfg: RunConfig) -> int:
    _, g = load_input(cfg)
    report = centrality_report(g, cfg.closeness, cfg.workers)
    _write(cfg, "centrality.csv", write_fixture_a1(report.rows()))
    idx = centralization(g, report.betweenness, cfg.workers)
    row = {
        "degree": idx.degree_centralization,
        "closeness": idx.closeness_centralization,
        "betweenness": idx.betweenness_centralization,
        "closeness_subnetwork_size": idx.closeness_subnetwork_size,
    }
    if cfg.report == "json":
        _write(cfg, "centralization.json", _json(_rounded(row)))
    else:
        _write(cfg, "centralization.csv", _table(list(row), [list(row.values())]))
    _write_concordance(cfg, report)
    print(
        f"centralization: degree {idx.degree_centralization:.3f}, closeness "
        f"{idx.closeness_centralization:.3f} (n'={idx.closeness_subnetwork_size}), "
        f"betweenness {idx.betweenness_centralization:.3f}"
    )
    return 0


def _write_concordance(cfg: RunConfig, report: CentralityReport) -> None:
    try:
        result = centrality_concordance(report).as_dict()
    except InterlockError as exc:
        result = {"n": report.n, "error": str(exc)}
    _write(cfg, "concordance.json", _json(result))
    if "kendall_w" in result:
        print(f"Kendall W {result['kendall_w']:.4f}")


def _is_centrality_csv(path: Path) -> bool:
    with open(path, "rb") as fh:
        head = fh.readline().decode("utf-8-sig", errors="replace")
    return head.strip().startswith("journal,degree")


def cmd_concord(cfg: RunConfig) -> int:
    """Concordance from a centrality CSV in the journal-table layout, or from a network."""
    if cfg.input is not None and cfg.format is None and _is_centrality_csv(cfg.input):
        with open(cfg.input, "rb") as fh:
            report = report_from_fixture(read_fixture_a1(fh))
    else:
        _, g = load_input(cfg)
        report = centrality_report(g, cfg.closeness, cfg.workers)
    _write_concordance(cfg, report)
    return 0


def cmd_components(cfg: RunConfig) -> int:
    _, g = load_input(cfg)
    p = components(g)
    _write(cfg, "components.clu", write_pajek_clu(p))
    c = census(p)
    print(
        f"{len(p)} components: giant {c.giant_size}, {c.component_count_nontrivial} with >= 2 "
        f"journals, {c.isolated} isolated"
    )
    return 0


def cmd_slices(cfg: RunConfig) -> int:
    _, g = load_input(cfg)
    rows = [slice_census(g, m) for m in cfg.m]
    _write(cfg, "slices.csv", write_slices_csv(rows))
    b = betweenness_centrality(g, cfg.workers) if g.n >= 3 else np.zeros(g.n)
    for m in cfg.m:
        listing = component_members(g, m, cfg.min_size, betweenness=b)
        _write(cfg, f"components_m{m}.txt", write_component_blocks(listing, m))
        _write(cfg, f"components_m{m}.clu", write_pajek_clu(components(m_slice(g, m))))
    for c in rows:
        print(
            f"m={c.m}: giant {c.giant_size}, {c.component_count_nontrivial} components "
            f"({c.journals_in_nontrivial} journals), {c.isolated} isolated"
        )
    return 0


def cmd_convert(cfg: RunConfig, to: str) -> int:
    a, g = load_input(cfg)
    if to == "pajek-net":
        _write(cfg, "network.net", write_pajek_net(g))
    elif to == "affiliation-csv":
        _write(cfg, "affiliations.csv", write_affiliation_csv(a or realize_affiliation(g)))
    elif to == "dot":
        _write(cfg, "network.dot", write_dot(g))
    return 0


def cmd_validate(fixture_dir: Path | None) -> int:
    checks = run_checks(fixture_dir)
    for c in checks:
        print(c.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return 1 if failed else 0


def random_graph(n: int, p: float, max_value: int, seed: int) -> JournalGraph:
    """Seeded G(n, p) with uniform integer line values in 1..max_value."""
    rng = np.random.default_rng(seed)
    g = JournalGraph()
    for v in range(n):
        g.add_vertex(f"J{v + 1}")
    iu, ju = np.triu_indices(n, k=1)
    keep = rng.random(len(iu)) < p
    values = rng.integers(1, max_value + 1, size=int(keep.sum()))
    for u, v, value in zip(iu[keep], ju[keep], values):
        g.add_edge(int(u), int(v), int(value))
    return g


def cmd_generate(cfg: RunConfig, n: int, p: float, max_value: int) -> int:
    g = random_graph(n, p, max_value, cfg.seed)
    _write(cfg, "network.net", write_pajek_net(g))
    print(f"{g.n} vertices, {g.n_edges} edges (seed {cfg.seed})")
    return 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="interlock", description="Interlocking-editorship journal network analysis."
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, m=False):
        p.add_argument("--input", "-i", type=Path, required=True)
        p.add_argument("--format", choices=FORMATS, help="default: from file extension")
        p.add_argument("--out", "-o", type=Path, default=Path("."))
        p.add_argument("--report", choices=("csv", "json"), default="csv")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--closeness", choices=("verbal", "corrected"), default="corrected")
        if m:
            p.add_argument("--m", type=_m_list, default=[2, 3, 6], help="e.g. 2,3,6")
            p.add_argument("--min-size", type=int, default=2)

    common(sub.add_parser("project", help="project affiliations to the journal network"))
    common(sub.add_parser("analyze", help="centrality, centralization and concordance"))
    common(sub.add_parser("slices", help="m-slice component census"), m=True)
    common(sub.add_parser("components", help="connected components as a Pajek partition"))
    common(sub.add_parser("concord", help="Kendall W / tau-b of the centrality rankings"))
    p = sub.add_parser("convert", help="convert between input formats")
    common(p)
    p.add_argument("--to", choices=("pajek-net", "affiliation-csv", "dot"), required=True)
    p = sub.add_parser("validate", help="replay the published tables")
    p.add_argument("fixtures", nargs="?", type=Path, help="fixture directory (default: bundled)")
    p = sub.add_parser("generate", help="seeded random valued graph (.net)")
    p.add_argument("--out", "-o", type=Path, default=Path("."))
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--p", type=float, default=0.05)
    p.add_argument("--max-value", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        if args.command == "validate":
            return cmd_validate(args.fixtures)
        if args.command == "generate":
            cfg = RunConfig(out=args.out, seed=args.seed)
            return cmd_generate(cfg, args.n, args.p, args.max_value)
        cfg = RunConfig(
            input=args.input,
            format=args.format,
            out=args.out,
            closeness=args.closeness,
            m=getattr(args, "m", [2, 3, 6]),
            min_size=getattr(args, "min_size", 2),
            report=args.report,
            workers=args.workers,
        )
        commands = {
            "project": cmd_project,
            "analyze": cmd_analyze,
            "slices": cmd_slices,
            "components": cmd_components,
            "concord": cmd_concord,
        }
        if args.command == "convert":
            return cmd_convert(cfg, args.to)
        return commands[args.command](cfg)
    except (InterlockError, OSError, ValueError) as exc:
        print(f"interlock: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
