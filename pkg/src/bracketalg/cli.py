"""Command-line front end: ``bracketalg <subcommand> [flags]``.

Every subcommand builds one record; ``--json`` prints it as a single JSON
document, the default text mode prints the same data line by line.  Exit
codes: 0 on success, 1 when a verification check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import shlex
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .core import AlgebraError

PROFILE_ENV = "BRACKETALG_PROFILE"

ALGEBRAS = {
    "be-a": "bracket algebra BE(A_{n-1}) on n indices",
    "be-b": "bracket algebra BE(B_n)",
    "be-d": "bracket algebra BE(D_n)",
    "be-g2": "bracket algebra BE(G2)",
    "qbe-a": "quantum bracket algebra of type A",
    "qbe-b": "quantum bracket algebra of type B",
    "ab-a": "abelianization of BE(A_{n-1})",
    "nichols-a": "Nichols algebra of A_{n-1} (n indices)",
    "nichols-b": "Nichols algebra of B_n",
    "nichols-c": "Nichols algebra of C_n",
    "nichols-d": "Nichols algebra of D_n",
    "nichols-g2": "Nichols algebra of G2",
}


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# helpers


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _algebra(name: str, n: int, max_deg: int):
    from .nichols import NicholsAlgebra
    from .presentations import abelianize, get_presentation
    from .roots import RootSystem

    kind, _, fam = name.partition("-")
    fam = fam.upper()
    if kind == "nichols":
        return NicholsAlgebra(RootSystem(fam, n), max_deg)
    if kind == "ab":
        return abelianize(get_presentation("A", n)).algebra(max_deg)
    return get_presentation(fam, n, quantum=kind == "qbe").algebra(max_deg)


def _perm(text: str, n: int):
    from .grothendieck import parse_perm

    try:
        return parse_perm(text, n)
    except AlgebraError as exc:
        raise UsageError(str(exc)) from exc


def _one_line(w: Sequence[int]) -> str:
    return " ".join(str(v) for v in w)


def _poly_text(f) -> str:
    return f.to_text().replace("X", "x")


# ---------------------------------------------------------------------------
# subcommands; each returns (record, exit code)


def cmd_hilbert(args) -> tuple:
    alg = _algebra(args.algebra, args.n, args.max_deg)
    return {"coeffs": alg.hilbert_coefficients(args.max_deg)}, 0


def cmd_nichols(args) -> tuple:
    from .nichols import NicholsAlgebra
    from .roots import RootSystem

    alg = NicholsAlgebra(RootSystem(args.family, args.n), args.max_deg)
    kernel = [alg.derivation_kernel_rank(d) for d in range(1, alg.built_degree + 1)]
    record = {
        "system": alg.name,
        "coeffs": alg.hilbert_coefficients(args.max_deg),
        "complete": alg.complete,
        "dimension": sum(alg.dims()) if alg.complete else None,
        "derivation_kernel": kernel,
    }
    return record, 0


def cmd_element(args) -> tuple:
    from .elements import dunkl_elements, exp_dunkl, rsm_elements

    fam_name = args.family.upper()
    alg_name = {"A": "be-a", "B": "be-b", "C": "be-b", "D": "be-d", "G2": "be-g2"}[fam_name]
    ctx = _algebra(alg_name, args.n, args.max_deg)
    if args.kind == "dunkl":
        fam = dunkl_elements(ctx, fam_name, args.n)
    elif args.kind == "exp":
        fam = exp_dunkl(ctx, fam_name, args.n)
    else:
        params = {}
        if fam_name == "A":
            params["z"] = args.x
        elif fam_name in ("B", "C"):
            params.update(x=args.x, y=args.y)
        elif fam_name == "D":
            params["x"] = args.x
        fam = rsm_elements(ctx, fam_name, args.n, **params)
    size = len(fam)
    if not 1 <= args.index <= size:
        raise UsageError(f"--index must be in 1..{size}")
    e = fam[args.index - 1]
    if args.kind == "G":
        e = e - 1
    record = {
        "algebra": ctx.name,
        "kind": args.kind,
        "index": args.index,
        "element": e.to_text(),
        "exact_through": None if ctx.complete else ctx.built_degree,
    }
    return record, 0


def cmd_groth(args) -> tuple:
    from .grothendieck import GrothendieckSolver, grothendieck_oracle

    w = _perm(args.perm, args.n)
    if args.method == "oracle":
        poly = grothendieck_oracle(w)
    else:
        poly = GrothendieckSolver(args.n).grothendieck(w)
    return {"polynomial": _poly_text(poly)}, 0


def cmd_structure(args) -> tuple:
    from .grothendieck import GrothendieckSolver, structure_constants

    u, v = _perm(args.u, args.n), _perm(args.v, args.n)
    consts = structure_constants(u, v, GrothendieckSolver(args.n))["group_ring"]
    return {"constants": {_one_line(w): c for w, c in sorted(consts.items())}}, 0


def cmd_export(args) -> tuple:
    from .core import format_free
    from .presentations import abelianize, get_presentation

    kind, _, fam = args.algebra.partition("-")
    if kind == "nichols":
        alg = _algebra(args.algebra, args.n, args.max_deg)
        basis = [[".".join(g.name for g in w) for w in ws] for ws in alg.basis]
        return {"name": alg.name, "coeffs": alg.hilbert_coefficients(args.max_deg), "basis": basis}, 0
    if kind == "ab":
        pres = abelianize(get_presentation("A", args.n))
    else:
        pres = get_presentation(fam.upper(), args.n, quantum=kind == "qbe")
    record = {
        "name": pres.name,
        "generators": [g.name for g in pres.gens],
        "relations": [format_free(r) for r in pres.relations],
        "comments": list(pres.comments),
    }
    return record, 0


def cmd_verify(args) -> tuple:
    from . import checks

    if not args.all and not args.check:
        raise UsageError("verify needs --check ID or --all")
    unknown = [c for c in args.check or [] if c not in checks.REGISTRY]
    if unknown:
        raise UsageError(f"unknown check id(s): {', '.join(unknown)}; see 'bracketalg verify --list'")
    params = {"seed": args.seed, "max_deg": args.max_deg}
    if args.n:
        params["n"] = args.n if len(args.n) > 1 else args.n[0]
    ids = None if args.all else args.check
    report = checks.run_all(args.profile, ids=ids, jobs=args.jobs, params=params)
    record = checks.report_record(report)
    record["invocation"] = args.invocation
    return record, 1 if report["summary"]["failed"] else 0


def cmd_list(args) -> tuple:
    from . import checks

    return {"checks": {i: f"[{s.kind}] {s.statement}" for i, s in checks.REGISTRY.items()}}, 0


# ---------------------------------------------------------------------------
# output


def _scalar_text(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        return " ".join(_scalar_text(x) for x in v)
    return str(v)


def render_text(record: dict, command: str) -> str:
    """Text form of a record; single-field records print the bare value."""
    if command == "verify":
        lines = [f"# {record['invocation']}"]
        for r in record["results"]:
            verdict = r["verdict"]
            if verdict == "VERIFIED-THROUGH-DEGREE":
                verdict += f"({r['degreeVerified']})"
            lines.append(f"{r['checkId']:<36} {verdict:<30} {r['elapsedMs']:>8} ms")
        s = record["summary"]
        counts = ", ".join(f"{k}: {v}" for k, v in sorted(s["verdicts"].items()))
        lines.append(f"{s['checks']} checks ({counts}) in {s['elapsedMs']} ms")
        if s["failed"]:
            lines.append("failed: " + " ".join(s["failed"]))
        return "\n".join(lines)
    if len(record) == 1:
        (value,) = record.values()
        if isinstance(value, dict):
            return "\n".join(f"{k}: {_scalar_text(v)}" for k, v in value.items())
        if isinstance(value, list) and value and isinstance(value[0], list):
            return "\n".join(_scalar_text(x) for x in value)
        return _scalar_text(value)
    lines = []
    for k, v in record.items():
        if isinstance(v, list) and v and isinstance(v[0], (list, str)) and k != "coeffs":
            lines.append(f"{k}:")
            lines.extend(f"  {_scalar_text(x)}" for x in v)
        elif isinstance(v, dict):
            lines.append(f"{k}:")
            lines.extend(f"  {a}: {_scalar_text(b)}" for a, b in v.items())
        else:
            lines.append(f"{k}: {_scalar_text(v)}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bracketalg", description="Bracket algebras, Nichols algebras and multiplicative Dunkl elements.")
    sub = p.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def common(sp, n_default: Optional[int] = 3, max_deg: Optional[int] = 6):
        sp.add_argument("--json", action="store_true", help="emit a single JSON document")
        if n_default is not None:
            sp.add_argument("--n", type=int, default=n_default, help="number of indices / rank (default %(default)s)")
        sp.add_argument("--max-deg", type=int, default=max_deg, help="truncation degree (default %(default)s)")

    sp = sub.add_parser("hilbert", help="Hilbert series coefficients of an algebra")
    sp.add_argument("--algebra", required=True, choices=sorted(ALGEBRAS))
    common(sp)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("nichols", help="Nichols algebra of a root system: Hilbert series and derivation kernel")
    sp.add_argument("--family", required=True, choices=["A", "B", "C", "D", "G2"], type=str.upper)
    common(sp, n_default=2)
    sp.set_defaults(func=cmd_nichols)

    sp = sub.add_parser("element", help="a Dunkl-type element as a reduced algebra element")
    sp.add_argument("--family", required=True, choices=["A", "B", "C", "D", "G2"], type=str.upper)
    sp.add_argument("--index", type=int, required=True, help="1-based element index")
    sp.add_argument("--kind", choices=["rsm", "G", "dunkl", "exp"], default="rsm",
                    help="rsm: Theta_j; G: Theta_j - 1; dunkl: theta_j; exp: exp(theta_j)")
    sp.add_argument("--x", type=_rational, default=Fraction(1), help="pair parameter (type A: z)")
    sp.add_argument("--y", type=_rational, default=Fraction(1), help="short-root parameter (types B, C)")
    common(sp)
    sp.set_defaults(func=cmd_element)

    sp = sub.add_parser("groth", help="Grothendieck polynomial of a permutation")
    sp.add_argument("--perm", required=True, help='one-line notation, e.g. "3 2 1"')
    sp.add_argument("--method", choices=["bruhat", "oracle"], default="bruhat",
                    help="bruhat: solve in the Bruhat representation; oracle: isobaric divided differences")
    common(sp, max_deg=None)
    sp.set_defaults(func=cmd_groth)

    sp = sub.add_parser("structure", help="Grothendieck structure constants c_{u,v}^w")
    sp.add_argument("--u", required=True, help="one-line notation")
    sp.add_argument("--v", required=True, help="one-line notation")
    common(sp, max_deg=None)
    sp.set_defaults(func=cmd_structure)

    sp = sub.add_parser("export", help="presentation (or Nichols basis) of an algebra")
    sp.add_argument("--algebra", required=True, choices=sorted(ALGEBRAS))
    common(sp)
    sp.set_defaults(func=cmd_export)

    sp = sub.add_parser("verify", help="run registered verification checks")
    sp.add_argument("--check", action="append", metavar="ID", help="check id (repeatable)")
    sp.add_argument("--all", action="store_true", help="run every registered check")
    sp.add_argument("--list", action="store_true", help="list check ids and exit")
    sp.add_argument("--profile", choices=["quick", "full"], default=os.environ.get(PROFILE_ENV, "quick"),
                    help=f"parameter profile (default from ${PROFILE_ENV}, else quick)")
    sp.add_argument("--n", type=int, action="append", help="override the rank parameter (repeatable)")
    sp.add_argument("--seed", type=int, default=None, help="seed for sampled monomials (default 0)")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes")
    common(sp, n_default=None, max_deg=None)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    args.invocation = "bracketalg " + shlex.join(argv)
    if args.command == "verify" and args.list:
        args.func = cmd_list
    if getattr(args, "profile", None) not in (None, "quick", "full"):
        parser.error(f"bad profile {args.profile!r} in ${PROFILE_ENV}")
    try:
        record, code = args.func(args)
    except (UsageError, AlgebraError) as exc:
        print(f"bracketalg: error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(record, separators=(",", ":")))
    else:
        print(render_text(record, "verify" if args.func is cmd_verify else args.func.__name__[4:]))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
