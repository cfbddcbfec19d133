"""Command-line front end.  Every command prints one JSON document (sorted keys).

Exit codes: 0 computed/verified, 1 violation or witness found, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import bounds, chains, hypercore, schrijver, solver, tucker
from .hypercore import SetSystem


class InputError(ValueError):
    pass


@dataclass
class InstanceSpec:
    family: str
    n: int | None
    k: int | None
    t: int
    r: int
    s: int | list[int]

    def system(self, path: str | None) -> SetSystem:
        if path:
            return SetSystem.from_json(_load(path, "system"))
        if self.n is None or self.k is None:
            raise InputError("need --n and --k (or --system)")
        if self.family == "k-subsets":
            return hypercore.gen_k_subsets(self.n, self.k)
        return hypercore.gen_t_stable(self.n, self.k, self.t)

    def scalar_s(self) -> int:
        if not isinstance(self.s, int):
            raise InputError("field 's' must be a single integer for this command")
        return self.s


def _load(path: str, what: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {what} file {path!r}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} file is not valid JSON: {exc.msg} at line {exc.lineno}") from None


def _parse_s(text: str) -> int | list[int]:
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"field 's' must be an integer or comma list, got {text!r}")
    return parts[0] if len(parts) == 1 else parts


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True, indent=2) + "\n")


def _instance(args) -> InstanceSpec:
    t = args.t if args.t is not None else (2 if args.family == "t-stable" else 1)
    return InstanceSpec(args.family, args.n, args.k, t, getattr(args, "r", 2), getattr(args, "s", 1))


def _coloring(args, S: SetSystem) -> solver.Coloring:
    c = solver.Coloring.from_json(_load(args.coloring, "coloring"))
    if len(c) != len(S.edges):
        raise InputError(f"field 'colors' has {len(c)} entries, the system has {len(S.edges)} edges")
    return c


# ---------------------------------------------------------------- commands


def cmd_gen(args, out) -> int:
    _emit(_instance(args).system(args.system).to_json(), out)
    return 0


def cmd_defect(args, out) -> int:
    spec = _instance(args)
    S = spec.system(args.system)
    exact = bounds.cd_exact(S, spec.r, spec.s, limit=args.limit)
    result = {"exact": exact, "r": spec.r, "s": spec.s, "n": S.n}
    status = 0
    if not args.system and isinstance(spec.s, int):
        formula = bounds.cd_formula_stable(spec.n, spec.k, spec.t, spec.r, spec.s)
        result.update(formula=formula, k=spec.k, t=spec.t, match=formula == exact)
        status = 0 if formula == exact else 1
    result["lower_bound"] = bounds.ceil_div(exact, spec.r - 1)
    _emit(result, out)
    return status


def cmd_bounds(args, out) -> int:
    spec = _instance(args)
    if spec.n is None or spec.k is None:
        raise InputError("need --n and --k")
    rep = solver.verify_sandwich(spec.n, spec.k, spec.r, spec.scalar_s(), spec.t, limit=args.limit)
    _emit(rep.to_json(), out)
    return 0


def cmd_chi(args, out) -> int:
    spec = _instance(args)
    S = spec.system(args.system)
    try:
        chi, c = solver.chi_exact(S, spec.r, spec.s, args.max_colors, limit=args.limit)
    except solver.Exceeded as exc:
        _emit({"error": str(exc), "exceeded": args.max_colors}, out)
        return 1
    _emit({"chi": chi, "coloring": c.to_json(), "vertices": len(S.edges), "r": spec.r, "s": spec.s}, out)
    return 0


def cmd_color(args, out) -> int:
    spec = _instance(args)
    if args.coloring:
        S = spec.system(args.system)
        c = _coloring(args, S)
        bad = solver.validate_coloring(S, spec.r, spec.s, c)
        _emit({"proper": bad is None, "witness": bad.to_json(S) if bad else None}, out)
        return 0 if bad is None else 1
    if spec.family != "k-subsets" or args.system:
        raise InputError("explicit colorings are emitted for --family k-subsets only")
    c = bounds.explicit_coloring(spec.n, spec.k, spec.r, spec.scalar_s())
    _emit({"coloring": c.to_json(), "colors": c.m}, out)
    return 0


def cmd_tucker(args, out) -> int:
    rng = random.Random(args.seed)
    if args.kind == "octahedral":
        if args.labeling:
            lam = tucker.OctahedralLabeling.from_json(_load(args.labeling, "labeling"))
        elif args.n:
            lam = tucker.random_antipodal_labeling(args.n, rng)
        else:
            raise InputError("need --labeling or --n")
        lam.check_antipodal()
        try:
            pair = tucker.octahedral_tucker_search(lam)
        except tucker.NoPairFound as exc:
            _emit({"pair": None, "error": str(exc)}, out)
            return 1
        _emit({"pair": pair.to_json(lam.n), "labeling": lam.to_json()}, out)
        return 0
    if args.labeling:
        lam = tucker.ZpLabeling.from_json(_load(args.labeling, "labeling"))
    elif args.n and args.p and args.m:
        index = tucker.FaceIndex(args.n, args.p, args.s)
        lam = tucker.random_equivariant_labeling(index, args.m, rng)
    else:
        raise InputError("need --labeling or --n, --p, --m")
    try:
        w = tucker.zp_tucker_search(lam)
    except tucker.NoWitness as exc:
        _emit({"witness": None, "error": str(exc)}, out)
        return 1
    _emit({"witness": w.to_json()}, out)
    return 0


def cmd_refute(args, out) -> int:
    if args.method == "schrijver":
        if args.n is None or args.k is None:
            raise InputError("need --n and --k")
        S = hypercore.gen_t_stable(args.n, args.k, 2)
        c = _coloring(args, S)
        w = schrijver.refute_witness(args.n, args.k, c)
        _emit({"witness": w.to_json(S), "members": list(w.family().members)}, out)
        return 1
    spec = _instance(args)
    S = spec.system(args.system)
    c = _coloring(args, S)
    if args.method == "dolnikov":
        fam = tucker.dolnikov_refute(S, c, limit=args.limit)
    else:
        fam = tucker.main_refute(S, c, args.p, spec.s, limit=args.limit)
    _emit({"witness": fam.to_json(S)}, out)
    return 1


def cmd_verify_chains(args, out) -> int:
    rng = random.Random(args.seed)
    checks = {}
    cone = chains.cone_over(chains.boundary_of_simplex(2), 9)
    checks["cone lemma"] = all(
        chains.verify_cone_lemma(cone, chains.random_affine_map(cone, rng)) == 1 for _ in range(args.trials)
    )
    for d, ell in [(2, 3), (2, 4), (3, 4), (3, 5)]:
        z = schrijver.zeta_chain_map(d, ell)
        checks[f"zeta d={d} l={ell}"] = z.is_equivariant() and z.is_augmentation_preserving()
    for d in (2, 3):
        x = schrijver.xi_chain_map(d)
        checks[f"xi d={d}"] = x.is_equivariant() and x.is_augmentation_preserving()
    tri = [schrijver.parse_signs(w) for w in ("+0-0", "+0-+", "++-+")]
    img = schrijver.zeta_image(tri, 2)
    signs = [c for _, c in sorted(img, key=lambda sc: _staircase_rank(sc[0]))]
    checks["figure triangle"] = len(img) == 3 and signs == [1, -1, 1]
    result = {"checks": checks, "seed": args.seed}
    if args.n and args.k:
        rep = schrijver.verify_pipeline(args.n, args.k, schrijver.proper_coloring(args.n, args.k))
        result["pipeline"] = rep.to_json()
        checks["pipeline"] = rep.ok
    ok = all(checks.values())
    result["ok"] = ok
    _emit(result, out)
    return 0 if ok else 1


def _staircase_rank(simplex) -> int:
    # order the prism terms by how many vertices end in 0
    return sum(1 for Y in simplex if Y[-1] == 0)


def cmd_scan(args, out) -> int:
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        for k in range(2, args.k_max + 1):
            for r in range(2, args.r_max + 1):
                if n < k * r:
                    continue
                S = hypercore.gen_t_stable(n, k, r)
                if len(S.edges) > args.limit:
                    continue
                rows.append(solver.scan_r_stable(n, k, r, limit=args.limit).to_json())
    _emit({"rows": rows}, out)
    return 0


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kneser", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    inst = argparse.ArgumentParser(add_help=False)
    inst.add_argument("--family", choices=["k-subsets", "t-stable"], default="k-subsets")
    inst.add_argument("--n", type=int)
    inst.add_argument("--k", type=int)
    inst.add_argument("--t", type=int, help="stability (default 1, or 2 for t-stable)")
    inst.add_argument("--system", help="SetSystem JSON file ('-' for stdin); overrides --family")

    hyper = argparse.ArgumentParser(add_help=False)
    hyper.add_argument("--r", type=int, default=2)
    hyper.add_argument("--s", type=_parse_s, default=1, help="multiplicity: integer or comma list")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--limit", type=int, default=None, help="size guard for exhaustive searches")

    sub.add_parser("gen", parents=[inst, common], help="emit a set system")
    sub.add_parser("defect", parents=[inst, hyper, common], help="exact and closed-form defect")
    sub.add_parser("bounds", parents=[inst, hyper, common], help="lower, upper and exact values")
    p = sub.add_parser("chi", parents=[inst, hyper, common], help="exact chromatic number")
    p.add_argument("--max-colors", type=int)
    p = sub.add_parser("color", parents=[inst, hyper, common], help="emit or validate a coloring")
    p.add_argument("--coloring", help="Coloring JSON to validate")

    p = sub.add_parser("tucker", parents=[common], help="Tucker certificate search")
    p.add_argument("kind", choices=["octahedral", "zp"])
    p.add_argument("--labeling", help="labeling JSON ('-' for stdin)")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--s", type=_parse_s, default=1)
    p.add_argument("--m", type=int)

    p = sub.add_parser("refute", parents=[inst, common], help="find a monochromatic family")
    p.add_argument("method", choices=["dolnikov", "main", "schrijver"])
    p.add_argument("--coloring", required=True)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--s", type=_parse_s, default=1)

    p = sub.add_parser("verify-chains", parents=[common], help="chain-level sweeps")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--n", type=int, help="also verify the full pipeline at (n, k)")
    p.add_argument("--k", type=int)

    p = sub.add_parser("scan", parents=[common], help="r-stable exploration grid")
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--r-max", type=int, default=3)
    return parser


COMMANDS = {
    "gen": cmd_gen,
    "defect": cmd_defect,
    "bounds": cmd_bounds,
    "chi": cmd_chi,
    "color": cmd_color,
    "tucker": cmd_tucker,
    "refute": cmd_refute,
    "verify-chains": cmd_verify_chains,
    "scan": cmd_scan,
}

DEFAULT_LIMITS = {"defect": bounds.CD_LIMIT, "refute": bounds.CD_LIMIT, "scan": 40}


def run(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.limit is None:
        args.limit = DEFAULT_LIMITS.get(args.command, solver.VERTEX_LIMIT)
    try:
        return COMMANDS[args.command](args, out)
    except (InputError, ValueError, KeyError, TypeError) as exc:
        print(f"kneser: error: {exc}", file=sys.stderr)
        return 2
    except tucker.DegenerateWitness as exc:
        _emit({"error": str(exc), "degenerate": exc.family.to_json()}, out)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
