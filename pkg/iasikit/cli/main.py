# Copyright (c) iasikit authors. All rights reserved.
import json
import logging
import sys
from argparse import Namespace
from typing import List, Optional

from ..harness import SearchBounds, audit, list_audits
from ..config import (Config, create_small_table, default_config, get_logger,
                      merge_cfg_and_args, table)
from ..core import (LABELERS, ConstructionImpossibleError, IasiError,
                    IasiViolationError, InvalidArgumentError, ParseError,
                    build_from_cfg, split_csv_ints)
from ..fileio import load
from ..graph import Graph
from ..labeling import (ClassificationReport, SetLabeling, classify,
                        dump_labeling, load_labeling, transport_labeling)
from ..sets import (compatibility_index, maximal_class_size,
                    parse_integer_set, sumset)
from .parser import default_argument_parser

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VIOLATION = 2
EXIT_IMPOSSIBLE = 3
EXIT_COUNTEREXAMPLES = 4
EXIT_IO = 5

logger = logging.getLogger(__name__)


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2)


def _setup_logging(level: str) -> logging.Logger:
    root = get_logger(name="iasikit")
    root.setLevel(level)
    for handler in root.handlers:
        handler.setLevel(level)
    return root


def _load_config(args) -> Config:
    cfg = default_config()
    if args.config is not None:
        cfg.merge_from_dict(Config.fromfile(args.config).to_dict())
    cfg.merge_from_dict({"log_level": args.log_level})
    return cfg


def _load_graph(path: str) -> Graph:
    return load(path, file_format="edges")


def _pair(text: str, what: str):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 2 or not all(parts):
        raise InvalidArgumentError(f"{what} must be given as u,v; got {text!r}")
    return tuple(parts)


def _render_report(report: ClassificationReport) -> str:
    flags = table([[k, v] for k, v in report.flags().items()],
                  headers=["property", "value"])
    rows = []
    for e, r in report.per_edge.items():
        kind = r.kind
        rows.append([e, kind.relation if kind else "-",
                     kind.k if kind and kind.k is not None else "-",
                     r.set_indexing_number, r.strong, r.ap])
    edges = table(rows, headers=["edge", "kind", "k", "index", "strong", "ap"])
    return flags + "\n" + edges


def cmd_classify(args, cfg: Config) -> int:
    G = _load_graph(args.graph)
    f = load_labeling(args.labels)
    report = classify(G, f)
    _emit(_dumps(report.to_dict()) if args.json else _render_report(report))
    return EXIT_OK


def cmd_construct(args, cfg: Config) -> int:
    G = _load_graph(args.graph)
    merge_cfg_and_args(
        cfg,
        Namespace(construct__m=args.m,
                  construct__n=args.n,
                  construct__d=args.d,
                  construct__k=args.k))
    options = dict(type=args.kind, graph=G)
    if args.kind == "first":
        options.update(cfg.construct.to_dict())
    elif args.kind == "iso":
        options.update(d=cfg.construct.d, size=args.size or 3)
    else:
        if args.diffs is not None:
            try:
                options["diffs"] = split_csv_ints(args.diffs)
            except ValueError:
                raise InvalidArgumentError(
                    f"--diffs must be comma-separated integers, got {args.diffs!r}")
        options["size"] = args.size or 3
    f: SetLabeling = build_from_cfg(options, LABELERS)
    _emit(dump_labeling(f))
    return EXIT_OK


def cmd_transform(args, cfg: Config) -> int:
    G = _load_graph(args.graph)
    f = load_labeling(args.labels)
    edge = _pair(args.edge, "--edge") if args.edge else None
    result = transport_labeling(args.op, G, f, edge=edge, vertex=args.vertex)
    H, g, correspondence, verdict = result
    report = classify(H, g) if verdict.ok else None
    if args.json:
        origin = {
            v: list(o) if isinstance(o, tuple) else o
            for v, o in correspondence.vertex_origin.items()
        }
        _emit(_dumps(dict(vertices=list(H.vertices),
                          edges=[list(e) for e in H.canonical_edges()],
                          labeling=g.to_dict(),
                          correspondence=origin,
                          verdict=verdict.to_dict(),
                          classification=None
                          if report is None else report.to_dict())))
    else:
        lines = ["# vertices: " + " ".join(H.vertices)]
        lines += [f"{u} {v}" for u, v in H.canonical_edges()]
        lines.append(dump_labeling(g))
        lines.append(_render_report(report) if report else verdict.message)
        _emit("\n".join(lines))
    return EXIT_OK if verdict.ok else EXIT_VIOLATION


def cmd_audit(args, cfg: Config) -> int:
    if args.list:
        rows = list_audits()
        _emit(_dumps(dict(rows)) if args.json else table(
            rows, headers=["audit", "description"]))
        return EXIT_OK
    if args.theorem is None:
        raise InvalidArgumentError("audit: --theorem or --list is required")
    if args.bounds is not None:
        cfg.merge_from_dict({"bounds": SearchBounds.from_string(args.bounds).to_dict()})
    cfg.merge_from_dict({"audit.nproc": args.nproc,
                         "audit.progress": args.progress})
    params = dict(cfg.construct.to_dict(),
                  max_vertices=cfg.family.max_vertices)
    report = audit(args.theorem,
                   bounds=SearchBounds(**cfg.bounds.to_dict()),
                   nproc=cfg.audit.nproc,
                   progress=cfg.audit.progress,
                   params=params)
    _emit(report.to_json() if args.json else report.summary())
    return EXIT_OK if report.consistent else EXIT_COUNTEREXAMPLES


def cmd_sumset(args, cfg: Config) -> int:
    A = parse_integer_set(args.a, source="--a")
    B = parse_integer_set(args.b, source="--b")
    result = dict(sumset=sumset(A, B).to_list(),
                  compatibility_index=compatibility_index(A, B),
                  maximal_class_size=maximal_class_size(A, B))
    if args.json:
        _emit(_dumps(result))
    else:
        _emit(
            create_small_table({
                "sumset": str(sumset(A, B)),
                "index": result["compatibility_index"],
                "max class": result["maximal_class_size"]
            }))
    return EXIT_OK


COMMANDS = dict(classify=cmd_classify,
                construct=cmd_construct,
                transform=cmd_transform,
                audit=cmd_audit,
                sumset=cmd_sumset)


def _fail(code: int, message: str) -> int:
    sys.stderr.write(f"iasikit: error: {message}\n")
    return code


def run(argv: Optional[List[str]] = None) -> int:
    r"""Parse `argv`, run the verb and return the exit status. Results go to
    stdout, diagnostics to stderr.

    Exit status: 0 ok, 1 usage or invalid input, 2 IASI violation,
    3 impossible construction, 4 counterexamples found, 5 I/O or parse
    error.
    """
    parser = default_argument_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # --help
        return e.code or EXIT_OK
    except InvalidArgumentError as e:
        parser.print_usage(sys.stderr)
        return _fail(EXIT_USAGE, e.message)

    try:
        cfg = _load_config(args)
        _setup_logging(cfg.log_level)
        logger.debug(f"running {args.verb} with {vars(args)}")
        return COMMANDS[args.verb](args, cfg)
    except IasiViolationError as e:
        return _fail(EXIT_VIOLATION, e.message)
    except ConstructionImpossibleError as e:
        return _fail(EXIT_IMPOSSIBLE, e.message)
    except ParseError as e:
        return _fail(EXIT_IO, e.message)
    except IasiError as e:
        return _fail(EXIT_USAGE, e.message)
    except OSError as e:
        return _fail(EXIT_IO, str(e))


def main():
    sys.exit(run())
