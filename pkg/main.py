"""Command-line entry point: classify, sweep, generate and eval."""

from __future__ import annotations

import argparse
import csv
import logging
import sys
from pathlib import Path

from config import settings
from evaluation.base import read_partition, write_partition, write_report_csv
from evaluation.scoring import score_against
from experiments.base import EvaluationSet, SweepSpec
from experiments.results import write_csv
from experiments.runner import SweepRunner, modularity_criterion
from graphs.io import read_edge_list, write_edge_list
from learning.base import LabelNormalization, MethodParams, alpha_from_mu
from learning.export import write_scores_csv
from learning.labels import build_label_matrix, read_labels
from learning.solver import NonConvergenceError, SolverMode, solve
from synth.planted import PlantedPartitionSpec, planted_partition
from walks.diagnostics import stationary_distribution
from walks.limits import limit_class_weights

logger = logging.getLogger(__name__)

LIMIT_SIGMAS = (0.0, 0.5, 1.0)


def _floats(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gssl", description="Graph-based semi-supervised classification toolkit"
    )
    parser.add_argument("--log-level", default=None, help=f"Logging level (default {settings.log_level})")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("--graph", required=True, type=Path, help="Edge list: 'u v [w]' lines")
        p.add_argument("--unweighted", action="store_true", help="Treat every listed pair as a unit link")

    # classify
    p = sub.add_parser("classify", help="Solve for the classification functions and write scores")
    graph_args(p)
    p.add_argument("--labels", required=True, type=Path, help="Labels file: 'node_id class_name' lines")
    p.add_argument("--sigma", required=True, type=float)
    reg = p.add_mutually_exclusive_group(required=True)
    reg.add_argument("--alpha", type=float)
    reg.add_argument("--mu", type=float)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--solver", choices=[m.value for m in SolverMode], default=None)
    p.add_argument("--normalize-labels", action="store_true", help="Divide Y columns by labeled class sizes")

    # sweep
    p = sub.add_parser("sweep", help="Score classifications over a (sigma, alpha) grid")
    graph_args(p)
    p.add_argument("--partition", required=True, type=Path, help="Reference partition: 'node_id class' lines")
    p.add_argument("--labels", type=Path, help="Fixed labels file (runs a single alpha sweep)")
    p.add_argument("--sigmas", type=_floats, default=None)
    grid = p.add_mutually_exclusive_group()
    grid.add_argument("--alphas", type=_floats, default=None)
    grid.add_argument("--mus", type=_floats, default=None)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument(
        "--labels-per-class", type=_ints, default=[1],
        help="Labeled nodes drawn per class; several values run a labeled-quantity sweep",
    )
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, type=Path)
    p.add_argument("--eval-set", choices=[e.value for e in EvaluationSet], default=EvaluationSet.UNLABELED.value)
    p.add_argument("--solver", choices=[m.value for m in SolverMode], default=None)
    p.add_argument("--normalize-labels", action="store_true")
    p.add_argument("--workers", type=int, default=None, help="Trials run concurrently")

    # generate
    p = sub.add_parser("generate", help="Sample a planted-partition graph")
    p.add_argument("--sizes", required=True, type=_ints)
    p.add_argument("--p-in", required=True, type=_floats, help="One probability, or one per class")
    p.add_argument("--p-out", required=True, type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-prefix", required=True, type=Path)

    # eval
    p = sub.add_parser("eval", help="Score a predicted partition against a reference one")
    graph_args(p)
    p.add_argument("--pred", required=True, type=Path, help="Partition file or scores CSV from classify")
    p.add_argument("--truth", required=True, type=Path)
    p.add_argument("--labels", type=Path, help="Labeled nodes to exclude from scoring")
    p.add_argument("--eval-set", choices=[e.value for e in EvaluationSet], default=None)
    p.add_argument("--precision", choices=["micro", "macro"], default="micro")
    p.add_argument("--out", type=Path, help="Report CSV (default: stdout)")
    p.add_argument("--diagnostics", type=Path, help="Write per-node degree and stationary probability")

    return parser


# ------------------------------------------------------------------
# Commands
# ------------------------------------------------------------------


def cmd_classify(args: argparse.Namespace) -> None:
    graph = read_edge_list(args.graph, ignore_weights=args.unweighted)
    normalization = LabelNormalization.PER_CLASS if args.normalize_labels else LabelNormalization.RAW
    labels = read_labels(args.labels, graph, normalization=normalization)
    if args.alpha is not None:
        params = MethodParams(sigma=args.sigma, alpha=args.alpha)
    else:
        params = MethodParams.from_mu(sigma=args.sigma, mu=args.mu)

    result = solve(graph, build_label_matrix(labels, graph.n), params, mode=args.solver)
    write_scores_csv(result, graph, args.out, class_names=labels.class_names)
    logger.info(
        "Classified %d nodes into %d classes (sigma=%g alpha=%g mu=%g, %s, %d iterations)",
        graph.n, labels.k, params.sigma, params.alpha, params.mu, result.mode, result.iterations,
    )


def cmd_sweep(args: argparse.Namespace) -> None:
    graph = read_edge_list(args.graph, ignore_weights=args.unweighted)
    truth = read_partition(args.partition, graph)

    kwargs = {}
    if args.sigmas is not None:
        kwargs["sigmas"] = args.sigmas
    if args.alphas is not None:
        kwargs["alphas"] = args.alphas
    elif args.mus is not None:
        kwargs["alphas"] = [alpha_from_mu(mu) for mu in args.mus]
    spec = SweepSpec(
        trials=args.trials,
        labels_per_class=args.labels_per_class[0],
        seed=args.seed,
        evaluation_set=args.eval_set,
        normalization=LabelNormalization.PER_CLASS if args.normalize_labels else LabelNormalization.RAW,
        **kwargs,
    )
    runner = SweepRunner(graph, truth, spec, solver_mode=args.solver, max_workers=args.workers)

    if args.labels is not None:
        labels = read_labels(args.labels, graph, class_names=list(truth.class_names))
        result = runner.alpha_sweep(labels)
    elif len(args.labels_per_class) > 1:
        result = runner.labeled_quantity_sweep(args.labels_per_class)
    else:
        result = runner.random_label_trials()
        modularity_criterion(result)

    write_csv(result, args.out)


def cmd_generate(args: argparse.Namespace) -> None:
    p_in = args.p_in[0] if len(args.p_in) == 1 else args.p_in
    spec = PlantedPartitionSpec(sizes=args.sizes, p_in=p_in, p_out=args.p_out, seed=args.seed)
    graph, truth = planted_partition(spec)

    prefix = args.out_prefix
    edges_path = prefix.with_name(prefix.name + ".edgelist")
    partition_path = prefix.with_name(prefix.name + ".partition")
    if graph.isolated_nodes().size:
        logger.warning(
            "%d isolated node(s) cannot be written to the edge list and will be absent when it is read back",
            graph.isolated_nodes().size,
        )
    write_edge_list(graph, edges_path)
    write_partition(truth, partition_path, graph.node_ids)
    logger.info("Wrote %s and %s", edges_path, partition_path)


def cmd_eval(args: argparse.Namespace) -> None:
    graph = read_edge_list(args.graph, ignore_weights=args.unweighted)
    truth = read_partition(args.truth, graph)
    pred = read_partition(args.pred, graph, class_names=list(truth.class_names))

    labeled = None
    if args.labels is not None:
        labels = read_labels(args.labels, graph, class_names=list(truth.class_names))
        labeled = labels.nodes
        if labels.missing_classes():
            logger.info("Limit class weights skipped: %d class(es) have no labeled node", len(labels.missing_classes()))
        for sigma in LIMIT_SIGMAS if not labels.missing_classes() else ():
            limit = limit_class_weights(graph, labels, sigma)
            logger.info(
                "Limit class weights sigma=%g: %s, dominating class: %s",
                sigma, [round(float(w), 6) for w in limit.weights],
                "none" if limit.dominating is None else labels.class_name(limit.dominating),
            )

    evaluated = range(graph.n) if args.eval_set == EvaluationSet.ALL.value else None
    report = score_against(
        pred, truth, evaluated, labeled=labeled, graph=graph, precision_mode=args.precision
    )
    if args.out is None:
        write_report_csv(report, stream=sys.stdout)
    else:
        write_report_csv(report, args.out)

    if args.diagnostics is not None:
        pi = stationary_distribution(graph)
        try:
            with args.diagnostics.open("w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(["node", "degree", "stationary"])
                for i, node_id in enumerate(graph.node_ids):
                    writer.writerow([node_id, repr(float(graph.degrees[i])), repr(float(pi[i]))])
        except OSError as e:
            raise OSError(f"Failed to write diagnostics {args.diagnostics}: {e}") from e


COMMANDS = {
    "classify": cmd_classify,
    "sweep": cmd_sweep,
    "generate": cmd_generate,
    "eval": cmd_eval,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = (args.log_level or settings.log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s %(levelname)-8s %(name)s — %(message)s",
        datefmt="%H:%M:%S",
    )
    try:
        COMMANDS[args.command](args)
    except (ValueError, OSError, NonConvergenceError) as e:
        logger.error("%s failed: %s", args.command, e)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
