"""Command-line interface: ``clustertilt <command> ...``.

Exit codes: 0 success, 1 bad input, 2 resolution cap or trial budget
exhausted, 3 an asserted mathematical property failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .cluster import classify_pd_B, rigidity_report
from .errors import ComputationLimit, InputError, InvariantBreach
from .formats import load_algebra, load_modules, load_pair
from .homology import (
    DEFAULT_CAP,
    ext_dim,
    global_dimension,
    injective_dimension,
    injective_resolution,
    projective_dimension,
    projective_resolution,
)
from .linalg import DEFAULT_PRIME, is_prime
from .rep import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    Representation,
    _rng,
    decompose,
    direct_sum,
    injective,
    loewy_layers,
    projective,
    socle,
    top,
)
from .tilting import cotilting_report, tilting_report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def loewy_sketch(M: Representation) -> str:
    """Radical layers as ``top / ... / bottom`` with vertices repeated by multiplicity."""
    layers = []
    for dims in loewy_layers(M):
        layers.append(" ".join(str(v + 1) for v, d in enumerate(dims) for _ in range(d)))
    return " / ".join(layers) if layers else "0"


def _module_arg(A, name) -> Representation:
    mods = load_modules(A, name)
    return mods[0] if len(mods) == 1 else direct_sum(*mods)


def _doc(args, inputs: dict, results: dict, verdicts=None, certificates=None) -> dict:
    return {
        "command": args.command,
        "inputs": inputs,
        "prime": args.prime,
        "seed": args.seed,
        "cap": args.cap,
        "trials": args.trials,
        "results": results,
        "verdicts": verdicts or {},
        "certificates": certificates or {},
        "version": __version__,
    }


# ---------------------------------------------------------------- commands


def cmd_algebra(args) -> tuple[dict, int]:
    A = load_algebra(args.file, args.prime)
    n = A.vertex_count
    gd = global_dimension(A, args.cap)
    results = {
        "name": A.name,
        "vertices": n,
        "arrows": [[a.name, a.source + 1, a.target + 1] for a in A.arrows],
        "relations": [r.describe(A.quiver) for r in A.relations],
        "dimension": A.dim,
        "nilpotency": A.nilpotency,
        "paths_by_length": list(A.path_counts_by_length()),
        "basis": A.basis_names(),
        "projectives": [list(projective(A, i).dims) for i in range(1, n + 1)],
        "injectives": [list(injective(A, i).dims) for i in range(1, n + 1)],
        "global_dimension": gd.to_json(),
    }
    return _doc(args, {"file": args.file}, results, certificates={"global_dimension": gd.certificate}), 0


def cmd_module(args) -> tuple[dict, int]:
    A = load_algebra(args.algebra, args.prime)
    M = _module_arg(A, args.module)
    rng = _rng(args.seed)
    p, i = projective_dimension(M, args.cap), injective_dimension(M, args.cap)
    e1 = ext_dim(M, M, 1, args.cap)
    dec = decompose(M, args.trials, rng)
    results = {
        "dims": list(M.dims),
        "dimension": M.dim,
        "loewy": loewy_sketch(M),
        "top": list(top(M).dims),
        "socle": list(socle(M).dims),
        "pd": p.to_json(),
        "id": i.to_json(),
        "ext1_self": e1,
        "summands": [{"dims": list(S.dims), "multiplicity": k, "loewy": loewy_sketch(S)}
                     for S, k in dec.summands],
    }
    verdicts = {"rigid": e1 == 0}
    return _doc(args, {"algebra": args.algebra, "module": args.module}, results, verdicts,
                {"pd": p.certificate, "id": i.certificate}), 0


def cmd_resolve(args) -> tuple[dict, int]:
    A = load_algebra(args.algebra, args.prime)
    M = _module_arg(A, args.module)
    build = injective_resolution if args.injective else projective_resolution
    res = build(M, args.cap)
    results = {
        "direction": res.direction,
        "dims": list(M.dims),
        "terms": [list(d) for d in res.term_dims()],
        "summands": res.term_summands(),
        "loewy": [loewy_sketch(P) for P in res.terms],
        "terminated": res.terminated,
        "length": res.length,
    }
    verdicts = {"dimension": res.length if res.terminated else f"at-least({args.cap})"}
    return _doc(args, {"algebra": args.algebra, "module": args.module}, results, verdicts), 0


def _pair_and_module(args):
    pair = load_pair(args.pair, args.prime, trials=args.trials, seed=args.seed)
    M = _module_arg(pair.C, args.module)
    return pair, M


def cmd_classify(args) -> tuple[dict, int]:
    pair, M = _pair_and_module(args)
    cls = classify_pd_B(pair, M, args.cap, args.trials, _rng(args.seed))
    results = cls.as_dict()
    results["dims"] = list(M.dims)
    certificate = results.pop("certificate")
    return _doc(args, {"pair": args.pair, "module": args.module}, results,
                {"pd_B": cls.verdict}, {"pd_B": certificate}), 0


def cmd_rigidity(args) -> tuple[dict, int]:
    pair, M = _pair_and_module(args)
    rep = rigidity_report(pair, M, args.trials, _rng(args.seed))
    results = rep.as_dict()
    results["dims"] = list(M.dims)
    verdicts = {"rigid_C": rep.rigid_C, "rigid_B": rep.rigid_B}
    return _doc(args, {"pair": args.pair, "module": args.module}, results, verdicts), 0


def cmd_tilting(args) -> tuple[dict, int]:
    A = load_algebra(args.algebra, args.prime)
    mods = load_modules(A, args.modules)
    T = direct_sum(*mods)
    rng = _rng(args.seed)
    rep = tilting_report(T, args.trials, rng, args.cap)
    co = cotilting_report(T, args.trials, rng, args.cap)
    results = rep.as_dict()
    results["cotilting_verdict"] = co.verdict
    return _doc(args, {"algebra": args.algebra, "modules": args.modules}, results,
                {"tilting": rep.verdict, "cotilting": co.verdict}), 0


def cmd_verify(args) -> tuple[dict, int]:
    from .verify import run_reference_suite

    criteria = run_reference_suite(args.prime, args.cap, args.trials, args.seed)
    verdicts = {str(c["criterion"]): c["status"] for c in criteria}
    code = 3 if any(c["status"] == "fail" for c in criteria) else 0
    return _doc(args, {"suite": args.suite}, {"criteria": criteria}, verdicts), code


# ---------------------------------------------------------------- output


def _human_verify(doc: dict) -> str:
    lines = []
    for c in doc["results"]["criteria"]:
        lines.append(f"criterion {c['criterion']}: {c['status'].upper():8s} {c['title']}")
        for name in c["failed"]:
            lines.append(f"    failed check {name}: {_fmt(c['checks'][name])}")
        for name, m in c["reference_mismatches"].items():
            lines.append(f"    {name}: computed {_fmt(m['computed'])}, reference {_fmt(m['reference'])}")
            lines.append(f"    ({m['note']})")
    return "\n".join(lines)


def _human(doc: dict) -> str:
    if doc["command"] == "verify":
        return _human_verify(doc)
    lines = [f"{doc['command']}  (prime {doc['prime']}, seed {doc['seed']}, cap {doc['cap']}, "
             f"trials {doc['trials']})"]

    def walk(value, indent):
        pad = "  " * indent
        if isinstance(value, dict):
            for k, v in value.items():
                if isinstance(v, (dict, list)) and v and not _flat(v):
                    lines.append(f"{pad}{k}:")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}{k}: {_fmt(v)}")
        elif isinstance(value, list):
            for v in value:
                if isinstance(v, (dict, list)) and not _flat(v):
                    lines.append(f"{pad}-")
                    walk(v, indent + 1)
                else:
                    lines.append(f"{pad}- {_fmt(v)}")

    for section in ("results", "verdicts", "certificates"):
        if doc[section]:
            lines.append(f"{section}:")
            walk(doc[section], 1)
    return "\n".join(lines)


def _flat(v) -> bool:
    if isinstance(v, dict):
        return False
    return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)


def _fmt(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    return str(v)


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=DEFAULT_PRIME, help="prime field size (default %(default)s)")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="resolution cap (default %(default)s)")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                        help="random trials for isomorphism and splitting searches (default %(default)s)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed (default %(default)s)")
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    parser = _Parser(prog="clustertilt", description="Homological algebra for bound quiver algebras over GF(p).")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("algebra", parents=[common], help="describe an algebra")
    p.add_argument("action", choices=["info"])
    p.add_argument("file")
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("module", parents=[common], help="analyze a module")
    p.add_argument("action", choices=["analyze"])
    p.add_argument("algebra")
    p.add_argument("module")
    p.set_defaults(func=cmd_module)

    p = sub.add_parser("resolve", parents=[common], help="minimal projective (or injective) resolution")
    p.add_argument("algebra")
    p.add_argument("module")
    p.add_argument("--injective", action="store_true")
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("classify-pd", parents=[common], help="projective dimension over the extension")
    p.add_argument("pair")
    p.add_argument("module")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("rigidity-report", parents=[common], help="rigidity over C versus over B")
    p.add_argument("pair")
    p.add_argument("module")
    p.set_defaults(func=cmd_rigidity)

    p = sub.add_parser("tilting-report", parents=[common], help="tilting test for a direct sum of modules")
    p.add_argument("algebra")
    p.add_argument("modules")
    p.set_defaults(func=cmd_tilting)

    p = sub.add_parser("verify", parents=[common], help="run the worked-example suite")
    p.add_argument("--suite", choices=["paper"], default="paper")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    as_json = args.json
    try:
        if not is_prime(args.prime):
            raise InputError(f"--prime {args.prime} is not prime")
        if args.cap < 1 or args.trials < 0:
            raise InputError("--cap must be positive and --trials non-negative")
        doc, code = args.func(args)
    except (InputError, FileNotFoundError, ValueError) as exc:
        return _fail(args, as_json, exc, 1)
    except ComputationLimit as exc:
        return _fail(args, as_json, exc, 2)
    except (InvariantBreach, AssertionError) as exc:
        return _fail(args, as_json, exc, 3)
    if as_json:
        print(json.dumps(doc, indent=2))
    else:
        print(_human(doc))
    return code


def _fail(args, as_json: bool, exc: Exception, code: int) -> int:
    message = f"{type(exc).__name__}: {exc}"
    if as_json:
        print(json.dumps({"command": args.command, "error": {"type": type(exc).__name__,
                                                             "message": str(exc)},
                          "exit_code": code, "version": __version__}, indent=2))
    print(f"error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
