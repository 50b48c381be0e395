"""Command-line interface.

Subcommands:

* ``discover``  -- run discovery on an edge list, export cover + stats + figures
* ``update``    -- discover on a base graph, then stream delta batches into it
* ``eval``      -- score an exported cover against node attributes (cohesion)
* ``synth``     -- generate seeded synthetic graphs (and attribute files)
* ``benchmark`` -- time the core phase across graph sizes and fit a scaling exponent

Exit codes: 0 success, 1 usage error, 2 data/input error.  Diagnostics go
to stderr; all artifacts are files under ``--out-dir``.
"""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path

from . import bench, plots, synth
from .core import (
    CommunityCover,
    cover_lines,
    demon,
    read_cover,
    write_cover,
    write_cover_json,
)
from .errors import DemonError
from .graph import Graph, load_attributes, load_edge_list, save_attributes
from .incremental import demon_incremental, load_delta
from .labelprop import LpConfig
from .metrics import (
    community_quality,
    community_quality_subsampled,
    cover_stats,
    size_distribution,
    size_distribution_export,
)

logger = logging.getLogger("demon")

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit code 2 by default; we want 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _write_kv(path: Path, pairs) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for key, value in pairs:
            handle.write(f"{key} {value}\n")


def _eps_tag(epsilon: float) -> str:
    return f"{epsilon:g}"


def _filtered(cover: CommunityCover, min_size: int) -> CommunityCover:
    out = CommunityCover((), cover.epsilon, cover.rank)
    out.communities = {c for c in cover.communities if len(c) >= min_size}
    return out


def _export_run(
    cover: CommunityCover,
    g: Graph,
    cfg: LpConfig,
    out_dir: Path,
    min_size: int,
    suffix: str = "",
    figures: bool = True,
) -> dict:
    """Write the cover, stats, size distribution and figure for one run."""
    exported = _filtered(cover, min_size)
    write_cover(cover, g, out_dir / f"communities{suffix}.txt", min_size)
    write_cover_json(cover, g, cfg, out_dir / f"cover{suffix}.json", min_size)
    size_distribution_export(exported, out_dir / f"size_distribution{suffix}.txt")
    stats = cover_stats(exported, g)
    _write_kv(out_dir / f"stats{suffix}.kv", stats.as_pairs())
    if figures:
        plots.plot_size_distribution(
            size_distribution(exported), out_dir / f"size_distribution{suffix}.png"
        )
    return {
        "community_count": stats.community_count,
        "mean_size": stats.mean_size,
        "node_coverage": stats.node_coverage,
        "overlap_rate": stats.overlap_rate,
    }


def _write_report(path: Path, title: str, sections: list[tuple[str, list[str]]]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(title + "\n")
        handle.write("=" * len(title) + "\n")
        for heading, lines in sections:
            handle.write(f"\n{heading}\n" + "-" * len(heading) + "\n")
            for line in lines:
                handle.write(line + "\n")


def cmd_discover(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    g = load_edge_list(args.input)
    if g.load_report:
        logger.info("loaded %s: %s", args.input, g.load_report.summary())
    cfg = LpConfig(t_max=args.t_max)

    if args.epsilon_sweep:
        epsilons = args.epsilon_sweep
        rows = []
        for eps in epsilons:
            cover = demon(g, eps, cfg, workers=args.workers)
            summary = _export_run(
                cover, g, cfg, out_dir, args.min_size,
                suffix=f"_eps{_eps_tag(eps)}", figures=not args.no_figures,
            )
            rows.append((eps, summary))
            logger.info(
                "epsilon=%g -> %d communities", eps, summary["community_count"]
            )
        with open(out_dir / "sweep_summary.txt", "w", encoding="utf-8") as handle:
            handle.write("epsilon community_count mean_size node_coverage overlap_rate\n")
            for eps, s in rows:
                handle.write(
                    f"{eps:g} {s['community_count']} {s['mean_size']!r} "
                    f"{s['node_coverage']!r} {s['overlap_rate']!r}\n"
                )
        if not args.no_figures:
            plots.plot_sweep(
                [eps for eps, _ in rows],
                [s["community_count"] for _, s in rows],
                out_dir / "sweep.png",
            )
        return 0

    cover = demon(g, args.epsilon, cfg, workers=args.workers)
    summary = _export_run(
        cover, g, cfg, out_dir, args.min_size, figures=not args.no_figures
    )
    _write_report(
        out_dir / "report.txt",
        "Community discovery report",
        [
            (
                "Input",
                [
                    f"edge list: {args.input}",
                    f"nodes: {g.node_count}",
                    f"edges: {g.edge_count}",
                ],
            ),
            (
                "Run",
                [
                    f"epsilon: {args.epsilon:g}",
                    f"t_max: {args.t_max}",
                    f"min_size: {args.min_size}",
                    f"workers: {args.workers}",
                ],
            ),
            (
                "Cover",
                [f"{key}: {value}" for key, value in sorted(summary.items())],
            ),
        ],
    )
    logger.info("wrote cover with %d communities to %s", summary["community_count"], out_dir)
    return 0


def cmd_update(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    g = load_edge_list(args.input)
    cfg = LpConfig(t_max=args.t_max)
    cover = demon(g, args.epsilon, cfg, workers=args.workers)

    batch_rows = []
    stats = cover_stats(cover, g)
    batch_rows.append(("base", g.node_count, g.edge_count, stats.community_count))
    for i, delta_path in enumerate(args.deltas, start=1):
        delta = load_delta(delta_path, g)
        g, cover = demon_incremental(g, delta, cover, args.epsilon, cfg)
        write_cover(cover, g, out_dir / f"communities_batch{i}.txt", args.min_size)
        stats = cover_stats(_filtered(cover, args.min_size), g)
        batch_rows.append((str(i), g.node_count, g.edge_count, stats.community_count))
        logger.info(
            "batch %d (%s): %d nodes, %d edges, %d communities",
            i, delta_path, g.node_count, g.edge_count, stats.community_count,
        )

    with open(out_dir / "update_summary.txt", "w", encoding="utf-8") as handle:
        handle.write("batch nodes edges community_count\n")
        for row in batch_rows:
            handle.write(" ".join(str(x) for x in row) + "\n")
    _export_run(cover, g, cfg, out_dir, args.min_size, figures=not args.no_figures)
    return 0


def cmd_eval(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    g = load_edge_list(args.input)
    attrs = load_attributes(args.attrs, g)
    if attrs.unknown:
        logger.warning("%d attribute lines named unknown nodes", len(attrs.unknown))
    cover = read_cover(args.cover, g)

    report = community_quality(
        cover, g, attrs, sample_limit=args.sample_limit, seed=args.seed
    )
    pairs = report.as_pairs()
    sections = [
        (
            "Inputs",
            [
                f"edge list: {args.input}",
                f"attributes: {args.attrs}",
                f"cover: {args.cover}",
                f"communities: {len(cover.communities)}",
            ],
        ),
        ("Cohesion", [f"{key}: {value}" for key, value in pairs]),
    ]
    if args.cq_subsample:
        sub = community_quality_subsampled(
            cover, g, attrs,
            iterations=args.cq_subsample,
            seed=args.seed,
            sample_limit=args.sample_limit,
        )
        pairs += [
            ("subsampled_mean_cq", repr(sub.mean_cq)),
            ("subsample_iterations", str(sub.iterations)),
            ("subsample_selection", sub.selection_rule),
        ]
        sections.append(
            (
                "Subsampled cohesion",
                [
                    f"mean_cq: {sub.mean_cq!r}",
                    f"iterations: {sub.iterations}",
                    f"selection: {sub.selection_rule}",
                    f"skipped: {sub.skipped_iterations}",
                ],
            )
        )
    _write_kv(out_dir / "cq.kv", pairs)
    _write_report(out_dir / "cq_report.txt", "Cover cohesion report", sections)

    if args.export_bundle:
        _export_bundle(cover, g, attrs, out_dir)
        logger.info("wrote prediction bundle to %s", out_dir)
    return 0


def _export_bundle(cover: CommunityCover, g: Graph, attrs, out_dir: Path) -> None:
    """Sparse membership matrix + node labels, for the prediction harness."""
    lines = cover_lines(cover, g)
    membership = []
    for community_id, line in enumerate(lines):
        for label in line.split():
            membership.append((g.id_of(label), community_id))
    ranks = g.ranks()
    membership.sort(key=lambda item: (ranks[item[0]], item[1]))
    with open(out_dir / "membership.txt", "w", encoding="utf-8") as handle:
        for node, community_id in membership:
            handle.write(f"{g.label_of(node)} {community_id}\n")
    keep = AttributeView(attrs)
    save_attributes(keep, g, out_dir / "labels.txt")


class AttributeView:
    """Restriction of an attribute table to nodes that have attributes."""

    def __init__(self, table):
        self.attrs = {v: vals for v, vals in table.attrs.items() if vals}


def cmd_synth(args) -> int:
    if args.model == "er":
        g = synth.erdos_renyi(args.nodes, args.p, args.seed)
    elif args.model == "planted":
        g = synth.planted_partition(
            args.blocks, args.block_size, args.p_in, args.p_out, args.seed
        )
    elif args.model == "cliques":
        g = synth.interlinked_cliques(args.blocks, args.block_size)
    else:
        g = synth.scale_free(args.nodes, args.exponent, args.min_degree, args.seed)

    from .graph import save_edge_list

    save_edge_list(g, args.output)
    logger.info("wrote %s (%d nodes, %d edges)", args.output, g.node_count, g.edge_count)
    if args.attrs_out:
        if args.model in ("planted", "cliques"):
            table = synth.block_attributes(g, args.block_size)
        else:
            table = synth.random_attributes(g, seed=args.seed)
        save_attributes(table, g, args.attrs_out)
    return 0


def cmd_benchmark(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    cfg = LpConfig(t_max=args.t_max)
    points = bench.scaling_run(
        args.sizes, seed=args.seed, workers=args.workers, cfg=cfg
    )
    with open(out_dir / "scaling.csv", "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["nodes", "edges", "seconds", "local_communities", "workers"])
        for p in points:
            writer.writerow([p.nodes, p.edges, f"{p.seconds:.4f}", p.local_communities, p.workers])
    slope = bench.loglog_slope(points) if len(points) >= 2 else float("nan")
    _write_kv(
        out_dir / "bench.kv",
        [("loglog_slope", f"{slope:.4f}")]
        + [(f"seconds_n{p.nodes}", f"{p.seconds:.4f}") for p in points],
    )
    if not args.no_figures and len(points) >= 2:
        plots.plot_scaling(
            [p.nodes for p in points], [p.seconds for p in points], slope,
            out_dir / "scaling.png",
        )
    for p in points:
        logger.info("n=%d: %.2fs (%d edges)", p.nodes, p.seconds, p.edges)
    if len(points) >= 2:
        logger.info("log-log slope: %.3f", slope)
    return 0


def _float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="demon", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, attrs=False):
        p.add_argument("--input", required=True, help="edge list file")
        if attrs:
            p.add_argument("--attrs", required=True, help="node attribute file")
        p.add_argument("--epsilon", type=float, default=0.0,
                       help="merge threshold in [0,1] (default 0)")
        p.add_argument("--t-max", type=int, default=100,
                       help="propagation round cap (default 100)")
        p.add_argument("--min-size", type=int, default=1,
                       help="drop communities smaller than this at export")
        p.add_argument("--out-dir", required=True, help="output directory")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for sampled metrics")
        p.add_argument("--workers", type=int, default=1,
                       help="processes for the per-node phase")
        p.add_argument("--no-figures", action="store_true",
                       help="skip matplotlib figure rendering")

    p = sub.add_parser("discover", help="run community discovery")
    common(p)
    p.add_argument("--epsilon-sweep", type=_float_list, default=None,
                   help="comma-separated epsilon values; one run per value")
    p.set_defaults(func=cmd_discover)

    p = sub.add_parser("update", help="discover, then apply delta batches")
    common(p)
    p.add_argument("--deltas", nargs="+", required=True,
                   help="delta edge-list files, applied in order")
    p.set_defaults(func=cmd_update)

    p = sub.add_parser("eval", help="score a cover against node attributes")
    common(p, attrs=True)
    p.add_argument("--cover", required=True, help="cover file from discover")
    p.add_argument("--sample-limit", type=int, default=400_000,
                   help="max co-community pairs scored exactly (default 400000)")
    p.add_argument("--cq-subsample", type=int, default=0, metavar="ITERATIONS",
                   help="also report low-overlap subsampled cohesion")
    p.add_argument("--export-bundle", action="store_true",
                   help="write membership.txt + labels.txt for the prediction harness")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("synth", help="generate synthetic graphs")
    p.add_argument("--model", choices=["er", "planted", "cliques", "scale-free"],
                   required=True)
    p.add_argument("--nodes", type=int, default=100)
    p.add_argument("--p", type=float, default=0.1, help="er edge probability")
    p.add_argument("--blocks", type=int, default=4,
                   help="block count (planted and cliques models)")
    p.add_argument("--block-size", type=int, default=25)
    p.add_argument("--p-in", type=float, default=0.3)
    p.add_argument("--p-out", type=float, default=0.01)
    p.add_argument("--exponent", type=float, default=2.5)
    p.add_argument("--min-degree", type=float, default=4.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output", required=True, help="edge list to write")
    p.add_argument("--attrs-out", default=None,
                   help="also write an attribute file (block labels for planted)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("benchmark", help="time the core phase across sizes")
    p.add_argument("--sizes", type=_int_list, default=[10_000, 50_000],
                   help="comma-separated node counts")
    p.add_argument("--t-max", type=int, default=100)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out-dir", required=True)
    p.add_argument("--no-figures", action="store_true")
    p.set_defaults(func=cmd_benchmark)

    return parser


def main(argv=None) -> int:
    logging.basicConfig(
        stream=sys.stderr, level=logging.INFO, format="%(levelname)s %(message)s"
    )
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except DemonError as exc:
        print(f"demon: {exc}", file=sys.stderr)
        return DATA_ERROR
    except OSError as exc:
        print(f"demon: {exc}", file=sys.stderr)
        return DATA_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
