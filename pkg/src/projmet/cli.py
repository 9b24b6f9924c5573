"""``projmet`` command-line front end.

Exit codes: 0 ok, 1 domain error, 2 budget exceeded, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import bounds, codes, embed, family as fam, isometry, matroid, parent, weight
from .budget import Budget, budget_scope
from .errors import BudgetExceeded, ProjmetError
from .field import FiniteField, gf

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class FamilySpec:
    """Parsed ``--family`` argument: ``name:params`` or ``@file.json``."""

    text: str

    def build(self, field: FiniteField) -> fam.SpanningFamily:
        t = self.text
        if t.startswith("@"):
            return fam.SpanningFamily.from_json(json.loads(Path(t[1:]).read_text()))
        name, _, params = t.partition(":")
        try:
            if name == "sum_rank":
                blocks = [tuple(int(x) for x in b.split("x")) for b in params.split(",")]
                return fam.named_family(name, field, blocks)
            if name == "tensor_rank":
                return fam.named_family(name, field, [int(x) for x in params.split(",")])
            if name == "combinatorial":
                head, *sets = params.split(";")
                return fam.named_family(name, field, int(head),
                                        [[int(x) for x in s.split(",") if x] for s in sets])
            args = [int(x) for x in params.split(",")] if params else []
        except ValueError as exc:
            raise UsageError(f"cannot parse family {t!r}: {exc}") from exc
        if name not in fam.NAMED:
            raise UsageError(f"unknown family {name!r}")
        return fam.named_family(name, field, *args)


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _families(args, count: int | None = None) -> list[fam.SpanningFamily]:
    specs = args.family or []
    if not specs or (count is not None and len(specs) != count):
        need = "one" if count in (None, 1) else str(count)
        raise UsageError(f"{args.command} needs {need} --family argument(s)")
    f = gf(args.q)
    return [FamilySpec(s).build(f) for s in specs]


def _matrix(M) -> list[list[int]]:
    return [list(r) for r in M.rows]


def _emit(args, data: dict, text: str) -> None:
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(text)


def _fmt_rows(rows) -> str:
    return "\n".join(" ".join(str(c) for c in r) for r in rows) or "(empty)"


# -- subcommands ---------------------------------------------------------------------

def cmd_spheres(args) -> None:
    (F,) = _families(args, 1)
    T = weight.weight_table(F)
    if args.export:
        Path(args.export).write_bytes(T.to_bytes())
    S, B = T.sphere_sizes, T.ball_sizes
    lines = ["t,sphere,ball"] + [f"{t},{s},{b}" for t, (s, b) in enumerate(zip(S, B))]
    _emit(args, {"spheres": S, "balls": B, "max_weight": T.max_weight}, "\n".join(lines))


def cmd_weight(args) -> None:
    (F,) = _families(args, 1)
    x = _ints(args.vector)
    if len(x) != F.N:
        raise UsageError(f"vector has length {len(x)}, family lives in dimension {F.N}")
    T = weight.weight_table(F)
    w = T[x]
    rep = weight.minimal_representation(F, x, T)
    _emit(args, {"weight": w, "representation": [[c, i] for c, i in rep]}, str(w))


def cmd_parent(args) -> None:
    (F,) = _families(args, 1)
    pf = parent.parent_function(F)
    C = parent.parent_code(pf)
    d = parent.min_hamming_distance(C)
    dist = parent.coset_leader_weight_distribution(C)
    data = {"parent": _matrix(pf.matrix), "code": C.to_json(), "distance": d, "coset_distribution": dist}
    text = "\n".join([
        "parent matrix:", _fmt_rows(pf.matrix.rows),
        "parent code basis:", _fmt_rows(C.basis),
        f"d_H: {d if d != parent.DIST_INF else 'inf'}",
        "coset distribution: " + ",".join(map(str, dist)),
    ])
    _emit(args, data, text)


def cmd_equiv(args) -> None:
    A, B = _families(args, 2)
    L = isometry.are_equivalent(A, B)
    if L is None:
        _emit(args, {"equivalent": False, "matrix": None}, "NONE")
    else:
        _emit(args, {"equivalent": True, "matrix": _matrix(L.matrix)}, _fmt_rows(L.matrix.rows))


def cmd_aut(args) -> None:
    (F,) = _families(args, 1)
    G = isometry.aut_group(F)
    mats = [_matrix(L.matrix) for L in G]
    text = f"order: {len(G)}\n" + "\n\n".join(_fmt_rows(m) for m in mats)
    _emit(args, {"order": len(G), "elements": mats}, text)


def cmd_matroid(args) -> None:
    (F,) = _families(args, 1)
    M = matroid.matroid_of(F)
    data: dict = {"size": M.size, "rank": M.full_rank,
                  "circuits": [list(c) for c in matroid.circuits(M, M.full_rank + 1)]}
    lines = [f"elements: {M.size}", f"rank: {M.full_rank}", f"circuits: {len(data['circuits'])}"]
    if args.extend:
        E = matroid.extended_family(F)
        closed = E.point_set() == F.point_set()
        data["extended"] = [list(p) for p in E.points]
        data["closed"] = closed
        lines += ["extended family:", _fmt_rows(E.points), f"closed: {closed}"]
    _emit(args, data, "\n".join(lines))


def cmd_bounds(args) -> None:
    (F,) = _families(args, 1)
    T = weight.weight_table(F)
    prof = bounds.mu_profile(F, T)
    sb = bounds.singleton_bound(F, args.d, T)
    data: dict = {"mu": list(prof.values), "d": args.d, "projective_singleton": sb.projective,
                  "classical_singleton": str(sb.classical)}
    lines = ["mu: " + ",".join(map(str, prof.values)),
             f"singleton (projective): {sb.projective}",
             f"singleton (classical): {sb.classical}"]
    if args.anticode is not None:
        res = bounds.exact_anticode_max(F, args.anticode, args.dim_cap, T)
        data["anticode"] = {"t": args.anticode, "dim": res.dim, "mu": res.mu, "gap": res.gap,
                            "capped": res.capped, "witness": [list(v) for v in res.witness]}
        lines += [f"anticode max (t={args.anticode}): {res.dim}{' (capped)' if res.capped else ''}",
                  f"gap: {res.gap}"]
    _emit(args, data, "\n".join(lines))


def cmd_perfect(args) -> None:
    (F,) = _families(args, 1)
    C = parent.LinearCode.from_json(json.loads(Path(args.code).read_text()))
    if C.field != F.field:
        raise UsageError("code and family are over different fields")
    data: dict = {}
    if C.n == F.N:
        mc = codes.MetricCode(C, F)
    elif C.n == len(F):
        pf = parent.parent_function(F)
        rep = codes.perfect_transfer(C, pf)
        data["transfer"] = {"hypothesis_holds": rep.hypothesis_holds, "agree": rep.agree,
                            "hamming_perfect": rep.hamming_perfect, "hamming_distance": rep.hamming_distance}
        mc = codes.image_code(C, pf)
    else:
        raise UsageError(f"code length {C.n} matches neither N={F.N} nor the family size {len(F)}")
    t = mc.is_perfect()
    d = mc.distance
    tab = mc.table
    radius = t if t is not None else max((d - 1) // 2, 0) if d != weight.INF else tab.max_weight
    ball = tab.ball_sizes[min(radius, len(tab.ball_sizes) - 1)]
    ratio = Fraction(mc.code.size * ball, tab.space.size)
    data.update({"perfect": t is not None, "t": t, "distance": d, "packing_ratio": str(ratio)})
    text = "\n".join([f"perfect: {t is not None}", f"t: {t if t is not None else '-'}",
                      f"d_F: {d if d != weight.INF else 'inf'}", f"packing ratio: {ratio}"])
    _emit(args, data, text)


def cmd_embed(args) -> None:
    w = json.loads(Path(args.weights).read_text())
    if not isinstance(w, list) or not w:
        raise UsageError("weights file must hold a non-empty JSON array")
    q, N = args.q, 0
    while q ** N < len(w):
        N += 1
    if q ** N != len(w):
        raise UsageError(f"{len(w)} weights is not a power of q={q}")
    V = embed.WeightedSpace(gf(q), N, w)
    rep = embed.embed_into_projective(V, verify=True)
    data = {"r": rep.r, "a": rep.a, "b": rep.b, "W_dim": rep.W_dim,
            "iota": _matrix(rep.iota), "verified": rep.verified}
    text = "\n".join([f"r: {rep.r}", f"a: {rep.a}", f"b: {rep.b}", "iota:", _fmt_rows(rep.iota.rows),
                      f"verified: {rep.verified}"])
    _emit(args, data, text)


def cmd_verify(args) -> int:
    from .goldens import run_goldens
    results = run_goldens(seed=args.seed)
    passed = sum(1 for _, ok, _ in results if ok)
    if args.json:
        print(json.dumps({"passed": passed, "total": len(results),
                          "results": [{"name": n, "ok": ok, "message": m} for n, ok, m in results]}))
    else:
        for name, ok, msg in results:
            print(f"{'PASS' if ok else 'FAIL'}  {name}{'  ' + msg if msg else ''}")
        print(f"{passed}/{len(results)} passed")
    return EXIT_OK if passed == len(results) else EXIT_DOMAIN


COMMANDS = {
    "spheres": cmd_spheres, "weight": cmd_weight, "parent": cmd_parent, "equiv": cmd_equiv,
    "aut": cmd_aut, "matroid": cmd_matroid, "bounds": cmd_bounds, "perfect": cmd_perfect,
    "embed": cmd_embed, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--q", type=int, default=2, help="field size (default 2)")
    common.add_argument("--family", action="append", help="name:params or @file.json; repeatable")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-states", type=int, default=Budget.max_states)
    common.add_argument("--max-search", type=int, default=Budget.max_search)
    common.add_argument("--seed", type=int, default=0)

    p = _Parser(prog="projmet", description="Projective metrics over finite fields.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    s = sub.add_parser("spheres", parents=[common], help="sphere and ball sizes as CSV")
    s.add_argument("--export", help="write the binary weight table here")
    s = sub.add_parser("weight", parents=[common], help="weight of one vector")
    s.add_argument("--vector", required=True)
    sub.add_parser("parent", parents=[common], help="parent matrix and parent code")
    sub.add_parser("equiv", parents=[common], help="linear isometry between two families")
    sub.add_parser("aut", parents=[common], help="isometry group of a family")
    s = sub.add_parser("matroid", parents=[common], help="matroid data and extended family")
    s.add_argument("--extend", action="store_true")
    s = sub.add_parser("bounds", parents=[common], help="mu profile and Singleton bounds")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--anticode", type=int, metavar="T")
    s.add_argument("--dim-cap", type=int, default=4)
    s = sub.add_parser("perfect", parents=[common], help="perfectness of a code")
    s.add_argument("--code", required=True, help="code JSON file")
    s = sub.add_parser("embed", parents=[common], help="embed a weight into a projective metric")
    s.add_argument("--weights", required=True, help="JSON array of q^N weights in rank-index order")
    sub.add_parser("verify", parents=[common], help="replay the reference examples")
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits on --help and on usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        with budget_scope(Budget(args.max_states, args.max_search)):
            rc = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"projmet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"projmet: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ProjmetError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"projmet: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK if rc is None else rc


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
