"""``mmvc`` command line: JSON report on stdout, one-line summary on stderr.

Vertex ids in reports are 1-indexed, matching the graph file format.
Exit codes: 0 success, 2 input error, 3 class violation, 4 instance too
large for an exact oracle, 5 a guaranteed property failed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from collections.abc import Callable, Sequence
from fractions import Fraction
from pathlib import Path
from typing import Any

from mmvc import __version__
from mmvc.bounds import eh_part_bound
from mmvc.cover import complete_and_minimalize, is_minimal_vc, mmvc_exact
from mmvc.eh import Extractor, eh_partition
from mmvc.errors import InputError, MmvcError, PreconditionError, TheoremContradictionError
from mmvc.exact import max_clique_exact
from mmvc.generators import CLASSES, GenSpec, fernau_counterexample, generate
from mmvc.graph import Graph, greedy_coloring, spanning_tree_levels
from mmvc.io import format_cnf, format_graph, parse_cnf, parse_graph
from mmvc.kernels import (
    ClassBound,
    DecidedNo,
    DecidedYes,
    KernelOutcome,
    MmvcInstance,
    Reduced,
    clique_neighborhood_diagnostic,
    kernel_colored,
    kernel_general,
    kernel_hfree,
    kernel_k1t,
    require_in_class,
)
from mmvc.lop import mis_ktfree_adapter, minvc_adapter, mmvc_adapter, value_approx
from mmvc.patterns import Pattern
from mmvc.reductions import monotone_to_mmvc, sat_to_monotone

SCHEMA_VERSION = 1
SOLVE_CAP = 20
VERIFY_CAP = 16
CAP_ENV = "MMVC_ORACLE_CAP"


def _cap(default: int, flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(CAP_ENV)
    if env is None:
        return default
    try:
        return int(env)
    except ValueError:
        raise PreconditionError(f"{CAP_ENV} must be an integer, got {env!r}") from None


def _ids(vs: Sequence[int] | None) -> list[int] | None:
    return None if vs is None else [v + 1 for v in vs]


class Report:
    def __init__(self, command: str, argv: Sequence[str]):
        self.data: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "tool_version": __version__,
            "command": {"name": command, "argv": list(argv)},
            "input": None,
            "outcome": None,
            "witness": None,
            "timings": {},
            "bounds": [],
        }
        self.summary = ""
        self._start = time.perf_counter()

    def read(self, path: str, parse: Callable[[str], Any]) -> Any:
        raw = Path(path).read_bytes() if path != "-" else sys.stdin.buffer.read()
        self.data["input"] = {"path": path, "sha256": hashlib.sha256(raw).hexdigest()}
        t0 = time.perf_counter()
        try:
            text = raw.decode()
        except UnicodeDecodeError:
            raise InputError(f"{path}: not valid UTF-8 text") from None
        out = parse(text)
        self.data["timings"]["parse_s"] = time.perf_counter() - t0
        return out

    def bound(self, name: str, formula: str, value: int, actual: int) -> bool:
        holds = actual <= value
        self.data["bounds"].append(
            {"name": name, "formula": formula, "value": value, "actual": actual, "holds": holds}
        )
        return holds

    def finish(self) -> dict[str, Any]:
        self.data["timings"]["total_s"] = time.perf_counter() - self._start
        return self.data


# -- commands -------------------------------------------------------------


def cmd_solve(args: argparse.Namespace, rep: Report) -> None:
    g = rep.read(args.graph, parse_graph)
    cap = _cap(SOLVE_CAP, args.cap)
    t0 = time.perf_counter()
    cover = mmvc_exact(g, cap=cap)
    rep.data["timings"]["solve_s"] = time.perf_counter() - t0
    rep.data["outcome"] = {"n": g.n, "m": g.m, "value": len(cover)}
    rep.data["witness"] = _ids(cover)
    rep.summary = f"mmvc = {len(cover)} (n={g.n}, m={g.m})"


def _outcome_json(out: KernelOutcome) -> dict[str, Any]:
    if isinstance(out, DecidedYes):
        return {"kind": "decided-yes", "fired_rules": list(out.fired_rules), "size": len(out.witness)}
    if isinstance(out, DecidedNo):
        return {"kind": "decided-no", "fired_rules": list(out.fired_rules)}
    return {
        "kind": "reduced",
        "fired_rules": list(out.fired_rules),
        "n": out.instance.graph.n,
        "m": out.instance.graph.m,
        "k": out.instance.k,
        "declared_bound": out.declared_bound,
        "formula": out.formula,
        "kept_vertices": _ids(out.old_ids),
        "forced": _ids(out.forced),
    }


def cmd_kernelize(args: argparse.Namespace, rep: Report) -> None:
    g = rep.read(args.graph, parse_graph)
    inst = MmvcInstance(g, args.k)
    cls = ClassBound.parse(args.cls)
    t0 = time.perf_counter()
    if cls.kind == "general":
        out = kernel_general(inst)
    elif cls.kind == "k1t":
        out = kernel_k1t(inst, cls.t, check=not args.no_check)
    elif cls.kind == "colored":
        coloring = greedy_coloring(g)
        if cls.t is not None and len(set(coloring)) > cls.t:
            raise PreconditionError(f"greedy colouring used {len(set(coloring))} > {cls.t} colours")
        out = kernel_colored(inst, coloring)
        rep.data["coloring"] = coloring
    elif cls.kind in ("bull", "kt", "tbull", "paw"):
        extractor = _extractor(args.extractor, cls) if args.extractor else None
        out = kernel_hfree(inst, cls, extractor, check=not args.no_check)
    else:
        raise PreconditionError(f"class {cls} has no MMVC kernel")
    rep.data["timings"]["kernel_s"] = time.perf_counter() - t0
    rep.data["outcome"] = _outcome_json(out)
    rep.data["outcome"]["class"] = str(cls)
    if isinstance(out, DecidedYes):
        rep.data["witness"] = _ids(out.witness)
        rep.summary = f"decided yes: minimal vertex cover of size {len(out.witness)} >= k={args.k}"
    elif isinstance(out, Reduced):
        rep.bound("kernel-size", out.formula, out.declared_bound, out.instance.graph.n)
        rep.summary = (f"reduced: {out.instance.graph.n} vertices <= bound {out.declared_bound}"
                       f" [{out.formula}] at k={args.k}")
    if args.verify:
        _verify_kernel(rep, g, args.k, out, _cap(VERIFY_CAP, args.cap))


def _verify_kernel(rep: Report, g: Graph, k: int, out: KernelOutcome, cap: int) -> None:
    if g.n > cap:
        rep.data["verify"] = {"ran": False, "reason": f"n={g.n} above oracle cap {cap}"}
        return
    opt = len(mmvc_exact(g, cap=None))
    verdict = {"ran": True, "mmvc": opt}
    if isinstance(out, DecidedYes):
        ok = len(out.witness) >= k and is_minimal_vc(g, out.witness) and opt >= k
    elif isinstance(out, Reduced):
        reduced_opt = len(mmvc_exact(out.instance.graph, cap=None))
        verdict["reduced_mmvc"] = reduced_opt
        ok = reduced_opt == opt and out.instance.graph.n <= out.declared_bound
    else:
        ok = opt < k
    verdict["agrees"] = ok
    rep.data["verify"] = verdict
    rep.summary += f"; oracle mmvc={opt} ({'agrees' if ok else 'DISAGREES'})"
    if not ok:
        raise TheoremContradictionError(f"kernel outcome disagrees with the exact optimum {opt}")


def _extractor(text: str, cls: ClassBound | None = None, delta: str | None = None) -> Extractor:
    key, _, arg = text.partition(":")
    if key == "ramsey":
        t = int(arg) if arg else (cls.t if cls is not None and cls.kind == "kt" else None)
        if t is None:
            raise PreconditionError("ramsey extractor needs t, e.g. ramsey:3")
        return Extractor.ramsey(t)
    if key == "olariu":
        return Extractor.olariu()
    if key == "brute":
        d = arg or delta or (str(cls.delta) if cls is not None and cls.delta else None)
        if d is None:
            raise PreconditionError("brute extractor needs --delta")
        try:
            return Extractor.brute(Fraction(d))
        except (ValueError, ZeroDivisionError):
            raise PreconditionError(f"bad delta {d!r}") from None
    raise PreconditionError(f"unknown extractor {text!r}")


def cmd_approx(args: argparse.Namespace, rep: Report) -> None:
    g = rep.read(args.graph, parse_graph)
    cap = _cap(VERIFY_CAP, args.cap)
    key, _, arg = args.problem.partition(":")
    if key == "mmvc":
        adapter = mmvc_adapter(cap=None)
    elif key == "minvc":
        adapter = minvc_adapter(cap=None)
    elif key == "mis-ktfree" and arg.isdigit():
        require_in_class(g, Pattern.complete(int(arg)))
        adapter = mis_ktfree_adapter(int(arg), cap=None)
    else:
        raise PreconditionError(f"unknown problem {args.problem!r}")
    oracle = not args.no_oracle and g.n <= cap
    t0 = time.perf_counter()
    rep_ = value_approx(adapter, g, oracle=oracle)
    rep.data["timings"]["approx_s"] = time.perf_counter() - t0
    pred = rep_.predicted
    rep.data["outcome"] = {
        "problem": rep_.problem,
        "orientation": rep_.orientation.value,
        "n": rep_.n,
        "k0": rep_.k0,
        "claimed_value": rep_.claimed_value,
        "exact_opt": rep_.exact_opt,
        "realized_ratio": str(rep_.realized_ratio) if rep_.realized_ratio is not None else None,
        "predicted_ratio": {"formula": pred.formula, "exponent": str(pred.exponent),
                            "value": pred.value},
        "dual_calls": rep_.dual_calls,
        "fallback": rep_.fallback,
    }
    rep.data["witness"] = _ids(rep_.witness)
    rep.summary = f"{rep_.problem}: k0={rep_.k0}, claimed {rep_.claimed_value}"
    if rep_.exact_opt is not None:
        rep.summary += f", exact {rep_.exact_opt}, ratio {rep_.realized_ratio}"


def cmd_reduce(args: argparse.Namespace, rep: Report) -> None:
    cnf = rep.read(args.cnf, parse_cnf)
    if args.to == "monotone":
        mono, var_map = sat_to_monotone(cnf)
        text = format_cnf(mono, comment="monotone image; x -> (2x-1, 2x) in 1-indexed ids")
        rep.data["outcome"] = {"to": "monotone", "n": mono.var_count, "m": mono.m,
                               "var_map": {str(x + 1): [p + 1, q + 1] for x, (p, q) in var_map.items()}}
        rep.summary = f"monotone formula: {mono.var_count} variables, {mono.m} clauses"
    else:
        art = monotone_to_mmvc(cnf)
        text = format_graph(art.graph, comment=f"gadget graph, k = 2n + m = {art.k}")
        rep.data["outcome"] = {
            "to": "mmvc", "n_vars": cnf.var_count, "m_clauses": cnf.m, "k": art.k,
            "graph_n": art.graph.n, "graph_m": art.graph.m,
            "gadgets": [[v + 1 for v in (g.left, g.plus, g.minus, g.right)] for g in art.variables],
            "clause_vertices": _ids(art.clause_ids),
        }
        rep.summary = f"gadget graph: {art.graph.n} vertices, {art.graph.m} edges, k={art.k}"
    _emit_file(args.out, text)


def _emit_file(out: str | None, text: str) -> None:
    if out is None:
        sys.stderr.write(text)
    else:
        Path(out).write_text(text)


def cmd_partition(args: argparse.Namespace, rep: Report) -> None:
    g = rep.read(args.graph, parse_graph)
    extractor = _extractor(args.extractor, delta=args.delta)
    t0 = time.perf_counter()
    part = eh_partition(g, extractor)
    rep.data["timings"]["partition_s"] = time.perf_counter() - t0
    rep.data["outcome"] = {
        "extractor": str(extractor),
        "delta": str(extractor.delta),
        "parts": len(part),
        "cliques": [_ids(p.vertices) for p in part.cliques],
        "independent_sets": [_ids(p.vertices) for p in part.indep_sets],
        "problems": part.verify(g),
    }
    rep.bound("part-count", "ceil(n^(1-delta) / (2^(1-delta) - 1))",
              eh_part_bound(g.n, extractor.delta), len(part))
    rep.summary = f"{len(part)} parts ({len(part.cliques)} cliques), bound {part.bound}"


def cmd_gen(args: argparse.Namespace, rep: Report) -> None:
    spec = GenSpec(args.cls, args.n, args.density, args.seed, args.t)
    g = generate(spec)
    comment = f"generated class={spec.cls} n={spec.n} density={spec.density} seed={spec.seed}"
    if spec.t is not None:
        comment += f" t={spec.t}"
    text = format_graph(g, comment=comment)
    rep.data["input"] = {"spec": {"class": spec.cls, "n": spec.n, "density": spec.density,
                                  "seed": spec.seed, "t": spec.t}}
    rep.data["outcome"] = {"n": g.n, "m": g.m,
                           "sha256": hashlib.sha256(text.encode()).hexdigest()}
    _emit_file(args.out, text)
    rep.summary = f"generated {spec.cls} graph: n={g.n}, m={g.m}"


def cmd_diagnose_clique(args: argparse.Namespace, rep: Report) -> None:
    g = rep.read(args.graph, parse_graph)
    cls = ClassBound.parse(args.cls)
    if args.clique:
        clique = tuple(_parse_ids(args.clique, g.n))
    else:
        clique = max_clique_exact(g)
    outside = tuple(_parse_ids(args.outside, g.n)) if args.outside else None
    report = clique_neighborhood_diagnostic(g, clique, cls, outside)
    rep.data["outcome"] = {
        "class": report.cls,
        "clique": _ids(report.clique),
        "outside": _ids(report.outside),
        "first": _ids(report.first),
        "second": _ids(report.second),
        "chain": _ids(report.chain),
        "common_neighbour": None if report.common is None else report.common + 1,
        "covering": _ids(report.covering),
        "violations": [{"kind": v.kind, "vertices": _ids(v.vertices)} for v in report.violations],
        "embedding": _ids(report.embedding),
        "found_by_search": _ids(report.found_by_search),
    }
    rep.data["witness"] = _ids(report.embedding)
    if report.ok:
        rep.summary = f"no violation around clique {_ids(clique)}"
    else:
        first = report.violations[0]
        rep.summary = f"{len(report.violations)} violation(s); {first.kind} at {_ids(first.vertices)}"
        if report.embedding:
            rep.summary += f"; induced copy at {_ids(report.embedding)}"


def _parse_ids(text: str, n: int) -> list[int]:
    try:
        ids = [int(x) - 1 for x in text.split(",") if x.strip()]
    except ValueError:
        raise PreconditionError(f"bad vertex list {text!r}") from None
    if any(not 0 <= v < n for v in ids):
        raise PreconditionError(f"vertex list {text!r} out of range 1..{n}")
    return ids


def fernau_demo(p: int) -> dict[str, Any]:
    fx = fernau_counterexample(p)
    g = fx.graph
    v0, v1 = spanning_tree_levels(g, fx.u)
    cover = complete_and_minimalize(g, v0)
    return {
        "p": p,
        "n": g.n,
        "m": g.m,
        "V0_size": len(v0),
        "V1_size": len(v1),
        "completion_size": len(cover),
        "completion": cover,
        "is_minimal_vc": is_minimal_vc(g, cover),
        "half_n": g.n / 2,
        "mmvc": len(mmvc_exact(g)) if g.n <= SOLVE_CAP else None,
    }


def cmd_diagnose_fernau(args: argparse.Namespace, rep: Report) -> None:
    demo = fernau_demo(args.p)
    cover = demo.pop("completion")
    rep.data["outcome"] = demo
    rep.data["witness"] = _ids(cover)
    rep.summary = (f"p={args.p}: |V0|={demo['V0_size']}, |V1|={demo['V1_size']}, "
                   f"completion size {demo['completion_size']} < n/2 = {demo['half_n']}")


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mmvc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--compact", action="store_true", help="single-line JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="exact maximum minimal vertex cover", parents=[common])
    p.add_argument("graph", help="graph file ('-' for stdin)")
    p.add_argument("--cap", type=int, help=f"vertex cap (default {SOLVE_CAP}, env {CAP_ENV})")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("kernelize", help="run an MMVC kernel", parents=[common])
    p.add_argument("graph")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--class", dest="cls", default="general",
                   help="general | bull | kt:T | tbull:T | paw | k1t:T | colored[:C]")
    p.add_argument("--extractor", help="ramsey[:T] | olariu | brute[:DELTA]")
    p.add_argument("--verify", action="store_true", help="compare with the exact optimum")
    p.add_argument("--cap", type=int, help=f"oracle cap for --verify (default {VERIFY_CAP})")
    p.add_argument("--no-check", action="store_true", help="skip the class membership test")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("approx", help="value approximation from a kernel", parents=[common])
    p.add_argument("graph")
    p.add_argument("--problem", default="mmvc", help="mmvc | mis-ktfree:T | minvc")
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--cap", type=int, help=f"oracle cap (default {VERIFY_CAP})")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("reduce", help="SAT -> Monotone SAT -> MMVC", parents=[common])
    p.add_argument("cnf", help="DIMACS cnf file")
    p.add_argument("--to", choices=("monotone", "mmvc"), required=True)
    p.add_argument("--out", help="output file (default: stderr)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("partition", help="partition into cliques and independent sets", parents=[common])
    p.add_argument("graph")
    p.add_argument("--extractor", required=True, help="ramsey:T | olariu | brute")
    p.add_argument("--delta", help="exponent for the brute extractor, e.g. 1/4")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("gen", help="random graph of a class", parents=[common])
    p.add_argument("--class", dest="cls", required=True, choices=CLASSES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("diagnose", help="structural diagnostics")
    dsub = p.add_subparsers(dest="what", required=True)
    q = dsub.add_parser("clique", help="clique-neighbourhood structure", parents=[common])
    q.add_argument("graph")
    q.add_argument("--class", dest="cls", required=True, help="bull | tbull:T | paw")
    q.add_argument("--clique", help="comma-separated vertices (default: a maximum clique)")
    q.add_argument("--outside", help="independent set S (default: greedy)")
    q.set_defaults(func=cmd_diagnose_clique)
    q = dsub.add_parser("fernau", help="completion of a BFS level on the pendant triangle", parents=[common])
    q.add_argument("--p", type=int, default=2)
    q.set_defaults(func=cmd_diagnose_fernau)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report(args.command, argv)
    code = 0
    try:
        args.func(args, rep)
    except MmvcError as err:
        code = err.exit_code
        rep.data["error"] = {"type": type(err).__name__, "message": str(err), "exit_code": code}
        embedding = getattr(err, "embedding", None)
        if embedding is not None:
            rep.data["error"]["embedding"] = _ids(embedding)
            rep.data["witness"] = _ids(embedding)
        rep.summary = f"error: {err}"
    except OSError as err:
        code = InputError.exit_code
        rep.data["error"] = {"type": "OSError", "message": str(err), "exit_code": code}
        rep.summary = f"error: {err}"
    if code == 0 and any(not b["holds"] for b in rep.data["bounds"]):
        code = TheoremContradictionError.exit_code
        rep.summary += " (bound violated)"
    rep.data["exit_code"] = code
    json.dump(rep.finish(), sys.stdout, indent=None if args.compact else 2, default=str)
    sys.stdout.write("\n")
    print(rep.summary, file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
