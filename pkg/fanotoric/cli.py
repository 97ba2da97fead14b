"""The ``fano-toric`` command::

    fano-toric <task> --input <file> [--k N] [--budget-nodes N] [--threads N]
     [--format json|text]

The report goes to standard output and log messages to standard error. The
exit code is 0 on success, 2 for an invalid problem, 3 when the hypotheses a
demanded count needs are not satisfied and 4 when the budget is exceeded."""

import argparse
import logging
import sys
from .budget import Budget
from .problems import TASKS, MODES, EXIT_INVALID, ProblemError, parse_problem, run

logger = logging.getLogger(__name__)

def _positive(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("'%s' is not an integer" % value)
    if number < 1:
        raise argparse.ArgumentTypeError("%i is not positive" % number)
    return number


def _non_negative(value):
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError("'%s' is not an integer" % value)
    if number < 0:
        raise argparse.ArgumentTypeError("%i is negative" % number)
    return number


def build_parser():
    """Returns the command's argument parser.

    :rtype: ``argparse.ArgumentParser``"""

    parser = argparse.ArgumentParser(
     prog="fano-toric",
     description="Fano schemes of k-planes on complete intersections in projective toric varieties."
    )
    parser.add_argument("task", choices=TASKS, help="What to compute")
    parser.add_argument("--input", required=True, help="The JSON problem file")
    parser.add_argument("--k", type=_non_negative, default=None,
     help="The dimension of the planes (overrides the file)")
    parser.add_argument("--mode", choices=MODES, default=None,
     help="Check only this set of hypotheses (task 'check')")
    parser.add_argument("--budget-nodes", type=_positive, default=200000,
     help="The most Cayley structure search nodes")
    parser.add_argument("--budget-faces", type=_positive, default=20000,
     help="The most faces of a configuration")
    parser.add_argument("--budget-fixed-points", type=_positive, default=200000,
     help="The most fixed points of a localization sum")
    parser.add_argument("--budget-points", type=_positive, default=2000000,
     help="The most lattice points of a bounding box scan")
    parser.add_argument("--threads", type=_positive, default=1,
     help="The number of worker threads")
    parser.add_argument("--format", choices=("json", "text"), default="json",
     help="The report format")
    parser.add_argument("--verbose", "-v", action="store_true",
     help="Log progress to standard error")
    return parser


def main(argv=None):
    """Runs the command and returns its exit code.

    :param list argv: The arguments, defaulting to ``sys.argv[1:]``.
    :rtype: ``int``"""

    args = build_parser().parse_args(argv)
    logging.basicConfig(
     stream=sys.stderr, level=logging.DEBUG if args.verbose else logging.WARNING,
     format="%(levelname)s %(name)s: %(message)s"
    )
    budget = Budget(
     max_faces=args.budget_faces, max_nodes=args.budget_nodes,
     max_fixed_points=args.budget_fixed_points, max_points=args.budget_points,
     threads=args.threads
    )
    try:
        with open(args.input, "rb") as f:
            data = f.read()
    except OSError as e:
        sys.stderr.write("fano-toric: cannot read %s: %s\n" % (args.input, e.strerror))
        return EXIT_INVALID
    try:
        problem = parse_problem(
         data, task=args.task, k=args.k, mode=args.mode, budget=budget
        )
    except ProblemError as e:
        for error in e.errors:
            sys.stderr.write("fano-toric: %s\n" % error)
        return EXIT_INVALID
    logger.debug("Running %s" % repr(problem))
    report = run(problem, budget)
    sys.stdout.write(report.to_json() if args.format == "json" else report.to_text())
    return report.exit_code()
