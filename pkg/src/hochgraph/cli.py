"""Command-line front end.

Exit codes: 0 success, 2 bad usage or unreadable input, 3 a digraph that must
be acyclic is not, 4 the simple-cycle cap was exceeded.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from pathlib import Path

from .connectivity import ConnSpec, n_path_digraph, q_digraph, q_graph
from .errors import CycleCapExceeded, NotAcyclic, ParseError
from .flag import directed_flag_complex
from .generators import NAMED, constant_weights, cycle_digraph, erdos_renyi_weighted, linear_digraph, named_digraph, necklace_weighted
from .hochschild import MODES, count_simple_cycles, hh_dimensions
from .io import read_diagram_csv, read_digraph, read_weighted, write_weighted
from .persistence import bottleneck_distance, characteristic_pipeline, format_real, persistence_diagram, persistent_betti
from .poset_homology import betti_f2, order_complex, reachability_poset
from .digraph import condensation
from .svg import curves_svg


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("HOCHGRAPH_THREADS")
    return int(env) if env else 1


def cmd_generate(args) -> int:
    if args.model == "er":
        if args.n is None or args.p is None:
            raise UsageError("er needs --n and --p")
        w = erdos_renyi_weighted(args.n, args.p, args.seed)
    elif args.model == "necklace":
        if args.n is None:
            raise UsageError("necklace needs --n")
        w = necklace_weighted(args.n, args.seed)
    elif args.model == "cycle":
        if args.n is None:
            raise UsageError("cycle needs --n")
        w = constant_weights(cycle_digraph(args.n))
    elif args.model == "linear":
        if args.n is None:
            raise UsageError("linear needs --n")
        w = constant_weights(linear_digraph(args.n))
    else:
        if args.name not in NAMED:
            raise UsageError(f"--name must be one of {', '.join(sorted(NAMED))}")
        w = constant_weights(named_digraph(args.name))
    _emit(write_weighted(w), args.out)
    return 0


def cmd_hh(args) -> int:
    g = read_digraph(_read(args.input))
    hh = hh_dimensions(g, args.mode)
    cycles = count_simple_cycles(g)  # zero: hh_dimensions already rejected cyclic input
    print(f"hh0={hh.dim_hh0} hh1={hh.dim_hh1} paths={hh.path_sum} cycles={cycles} chi={hh.characteristic}")
    return 0


def cmd_connectivity(args) -> int:
    g = read_digraph(_read(args.input))
    if args.kind == "npath":
        if args.n is None:
            raise UsageError("npath needs --n")
        cd = n_path_digraph(g, args.n, relaxed=args.relaxed)
        dump_dim = max(args.n + 1, 0)
    elif args.kind == "qdigraph":
        if args.q is None:
            raise UsageError("qdigraph needs --q")
        md = args.max_dim if args.max_dim is not None else args.q + 2
        cd = q_digraph(g, args.q, args.i, args.j, md)
        dump_dim = md
    else:
        if args.q is None:
            raise UsageError("qgraph needs --q")
        md = args.max_dim if args.max_dim is not None else args.q + 2
        cd = q_graph(g, args.q, md)
        dump_dim = md
    if args.dump_complex:
        cx = directed_flag_complex(g, dump_dim)
        Path(args.dump_complex).write_text("\n".join(cx.dump_lines()) + "\n")
    _emit("\n".join(cd.to_lines()) + "\n", args.out)
    return 0


def _conn_specs(values: list[str] | None) -> list[ConnSpec]:
    try:
        return [ConnSpec.parse(v) for v in (values or ["identity"])]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _suffixed(path: str, spec: ConnSpec) -> str:
    p = Path(path)
    tag = re.sub(r"[^A-Za-z0-9]+", "_", str(spec)).strip("_")
    return str(p.with_name(f"{p.stem}_{tag}{p.suffix}"))


def cmd_pipeline(args) -> int:
    w = read_weighted(_read(args.input))
    specs = _conn_specs(args.conn)
    curves = [
        characteristic_pipeline(w, spec, args.mode, args.cycles_cap, threads=_threads(args)) for spec in specs
    ]
    for spec, curve in zip(specs, curves):
        target = args.csv
        if target not in (None, "-") and len(specs) > 1:
            target = _suffixed(target, spec)
        _emit(curve.to_csv(), target)
    if args.svg:
        Path(args.svg).write_text(curves_svg(curves, title="Hochschild characteristic"))
    return 0


def cmd_diagram(args) -> int:
    w = read_weighted(_read(args.input))
    (spec,) = _conn_specs([args.conn] if args.conn else None)
    table = persistent_betti(w, spec, args.degree)
    _emit(persistence_diagram(table).to_csv(), args.csv)
    return 0


def cmd_bottleneck(args) -> int:
    d1 = read_diagram_csv(_read(args.d1))
    d2 = read_diagram_csv(_read(args.d2))
    print(format_real(bottleneck_distance(d1, d2)))
    return 0


def cmd_qhomotopy(args) -> int:
    g = read_digraph(_read(args.input))
    md = args.max_dim if args.max_dim is not None else args.q + 2
    cd = q_digraph(g, args.q, args.i, args.j, md)
    cg, _ = condensation(cd.graph)
    cx = order_complex(reachability_poset(cg))
    betti = betti_f2(cx)
    print(" ".join(f"beta{k}={b}" for k, b in enumerate(betti)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hochgraph", description=__doc__.splitlines()[0])
    ap.add_argument("--threads", type=int, default=None, help="worker threads (default: $HOCHGRAPH_THREADS or 1)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a weighted edge list")
    p.add_argument("model", choices=["er", "necklace", "cycle", "linear", "named"])
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--name")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("hh", help="Hochschild dimensions of an acyclic digraph")
    p.add_argument("input")
    p.add_argument("--mode", choices=MODES, default="per_component")
    p.set_defaults(func=cmd_hh)

    p = sub.add_parser("connectivity", help="build an n-path digraph, q-digraph or q-graph")
    p.add_argument("input")
    p.add_argument("--kind", choices=["npath", "qdigraph", "qgraph"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--relaxed", action="store_true", help="n-path with i <= j")
    p.add_argument("--q", type=int)
    p.add_argument("--i", type=int, default=0)
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--max-dim", type=int)
    p.add_argument("--dump-complex", metavar="PATH", help="also write the flag complex as 'dim v0 .. vk' lines")
    p.add_argument("--out")
    p.set_defaults(func=cmd_connectivity)

    p = sub.add_parser("pipeline", help="characteristic curve over the edge-weight filtration")
    p.add_argument("input")
    p.add_argument("--conn", action="append", help="identity | npath:N | npathr:N | qdigraph:Q,I,J[,MAXDIM] | qgraph:Q[,MAXDIM]")
    p.add_argument("--mode", choices=MODES, default="per_component")
    p.add_argument("--cycles-cap", type=int, help="count simple cycles before condensing, failing past this cap")
    p.add_argument("--csv")
    p.add_argument("--svg")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("diagram", help="persistence diagram of an acyclic filtration")
    p.add_argument("input")
    p.add_argument("--conn")
    p.add_argument("--degree", type=int, choices=[0, 1], default=1)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("bottleneck", help="bottleneck distance between two diagram CSV files")
    p.add_argument("d1")
    p.add_argument("d2")
    p.set_defaults(func=cmd_bottleneck)

    p = sub.add_parser("qhomotopy", help="mod-2 Betti numbers of the condensed q-digraph's order complex")
    p.add_argument("input")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--max-dim", type=int)
    p.set_defaults(func=cmd_qhomotopy)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotAcyclic as exc:
        print(f"NotAcyclic: {exc}", file=sys.stderr)
        return 3
    except CycleCapExceeded as exc:
        print(f"CycleCapExceeded: {exc}", file=sys.stderr)
        return 4
    except (UsageError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
