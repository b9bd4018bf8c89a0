# Copyright (c) iasikit authors. All rights reserved.
import argparse

from ..config import LOG_LEVELS
from ..core import InvalidArgumentError


class ArgumentParser(argparse.ArgumentParser):
    r"""Raises instead of exiting on bad usage, so :func:`run` can map it to
    its own exit status."""
    def error(self, message):
        raise InvalidArgumentError(f"{self.prog}: {message}")


def _common_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config",
                        type=str,
                        default=None,
                        help="json/yaml file merged over the built-in defaults")
    common.add_argument("--log-level",
                        type=str.upper,
                        choices=LOG_LEVELS,
                        default=None,
                        help="diagnostics verbosity on stderr (default WARNING)")
    common.add_argument("--json",
                        action="store_true",
                        help="print machine-readable JSON instead of tables")
    return common


def default_argument_parser() -> ArgumentParser:
    r"""
    Create the parser of the ``iasikit`` command: one sub-command per verb,
    each accepting the common --config/--log-level/--json flags.
    Returns:
        ArgumentParser:
    """
    common = _common_arguments()
    parser = ArgumentParser(
        prog="iasikit",
        description="Construct, classify and audit integer additive "
        "set-indexers of graphs")
    verbs = parser.add_subparsers(dest="verb",
                                  metavar="VERB",
                                  parser_class=ArgumentParser)
    verbs.required = True

    classify = verbs.add_parser("classify",
                                parents=[common],
                                help="classify a labeled graph")
    classify.add_argument("--graph", required=True, help="edge-list file")
    classify.add_argument("--labels", required=True, help="labeling JSON file")

    construct = verbs.add_parser("construct",
                                 parents=[common],
                                 help="construct a labeling of a graph")
    construct.add_argument("--graph", required=True, help="edge-list file")
    construct.add_argument("--kind",
                           required=True,
                           choices=("first", "iso", "second"))
    construct.add_argument("--m", type=int, default=None,
                           help="label size on part X (first)")
    construct.add_argument("--n", type=int, default=None,
                           help="label size on part Y (first)")
    construct.add_argument("--d", type=int, default=None,
                           help="base common difference (first, iso)")
    construct.add_argument("--k", type=int, default=None,
                           help="multiplier, must exceed m (first)")
    construct.add_argument("--diffs",
                           type=str,
                           default=None,
                           help="pairwise coprime differences, e.g. 2,3,5 (second)")
    construct.add_argument("--size", type=int, default=None,
                           help="label size for every vertex (iso, second)")

    transform = verbs.add_parser("transform",
                                 parents=[common],
                                 help="transform a graph and carry its labeling")
    transform.add_argument("--graph", required=True, help="edge-list file")
    transform.add_argument("--labels", required=True, help="labeling JSON file")
    transform.add_argument("--op",
                           required=True,
                           choices=("line", "total", "subdivide", "contract",
                                    "reduce"))
    target = transform.add_mutually_exclusive_group()
    target.add_argument("--edge", type=str, default=None,
                        help="u,v for subdivide/contract")
    target.add_argument("--vertex", type=str, default=None,
                        help="degree-2 vertex for reduce")

    audit = verbs.add_parser("audit",
                             parents=[common],
                             help="run an exhaustive audit")
    audit.add_argument("--theorem",
                       type=str,
                       default=None,
                       help="audit id, or a short id such as T2.3")
    audit.add_argument("--bounds",
                       type=str,
                       default=None,
                       help="first_max,diff_max,len_min,len_max (default 3,6,3,5)")
    audit.add_argument("--nproc", type=int, default=None,
                       help="worker processes for pair audits")
    audit.add_argument("--progress", action="store_true", default=None,
                       help="progress bar on stderr")
    audit.add_argument("--list", action="store_true",
                       help="list the registered audit ids")

    sumset = verbs.add_parser("sumset",
                              parents=[common],
                              help="sum-set and compatibility classes")
    sumset.add_argument("--a", required=True, help='a set such as "{0,1,2}"')
    sumset.add_argument("--b", required=True, help='a set such as "{0,4,8}"')

    return parser
