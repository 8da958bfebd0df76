"""Command-line front end.

Exit codes: 0 success, 1 a certificate or invariant failed to re-verify,
2 usage error (bad arguments or parameters).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .errors import NotCoprimeBothSides, SkewCycError
from .fieldtower import Tower, tower

SCHEMA = "skewcyc/1"


class VerificationFailed(Exception):
    pass


def _emit(payload: dict) -> None:
    payload = {"schema": SCHEMA, **payload}
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _tower_args(p: argparse.ArgumentParser, defaults=(None, None, None, None)) -> None:
    q, m, r, n = defaults
    p.add_argument("--q", type=int, default=q, required=q is None, help="base field size")
    p.add_argument("--m", type=int, default=m, required=m is None, help="code alphabet is F_{q^m}")
    p.add_argument("--r", type=int, default=r, required=r is None, help="Frobenius step")
    p.add_argument("--n", type=int, default=n, required=n is None, help="code length")


def _code_args(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--gen", action="append", help="generator q^r-polynomial, e.g. 'X^[2]+a^4*X^[1]'")
    g.add_argument("--roots", help="comma separated elements spanning the root space")


def _tower_of(args) -> Tower:
    return tower(args.q, args.m, args.r, args.n)


def _elements(t: Tower, text: str) -> list[int]:
    return [t.parse_element(x) for x in text.split(",") if x.strip()]


def _code_of(t: Tower, args):
    from .linpoly import parse_linpoly
    from .rootspace import span
    from .skewcode import code_from_generator, rho_inverse

    if getattr(args, "gen", None):
        return code_from_generator(t, [parse_linpoly(t, g) for g in args.gen])
    return rho_inverse(span(t, _elements(t, args.roots)))


def _code_json(C) -> dict:
    from .skewcode import rho

    out = C.to_json()
    out["root_space"] = rho(C).to_json()
    return out


def _power_matrix(t: Tower, mat) -> list[list[str]]:
    return [[t.power_text(x) for x in row] for row in mat]


# ----------------------------------------------------------------------
# subcommands


def cmd_tower_info(args) -> int:
    t = _tower_of(args)
    _emit({"command": "tower info", "tower": t.header(), "zeta": t.element_json(t.zeta),
           "order": t.order})
    return 0


def cmd_code(args) -> int:
    from .bridge import classic_cyclic, hat_code
    from .gabidulin import gabidulin_as_skew, gabidulin_code, rank_bch_code
    from .linpoly import parse_linpoly
    from .rootspace import span
    from .skewcode import code_from_generator, rho_inverse

    t = _tower_of(args)
    kind = args.kind
    if kind == "from-gen":
        C = code_from_generator(t, [parse_linpoly(t, g) for g in args.gen])
    elif kind == "from-roots":
        C = rho_inverse(span(t, _elements(t, args.roots)))
    elif kind == "bch":
        alpha = t.parse_element(args.alpha) if args.alpha else t.find_normal_basis(1)
        C = rank_bch_code(t, alpha, args.delta)
    elif kind == "gabidulin":
        betas = _elements(t, args.betas) if args.betas else [
            t.frob(t.find_subfield_normal(1, t.m), i * t.r) for i in range(t.n)]
        L = gabidulin_code(t, betas, args.k)
        C = gabidulin_as_skew(t, L)
        if C is None:
            _emit({"command": "code gabidulin", "tower": t.header(), "k": L.k,
                   "generator_matrix": _power_matrix(t, L.rows), "skew_cyclic": False})
            return 0
    else:  # from-cyclic
        g = [int(x) for x in args.g.split(",")]
        C = hat_code(t, classic_cyclic(t.q, t.n, g))
    _emit({"command": f"code {kind}", "tower": t.header(), "code": _code_json(C)})
    return 0


def cmd_analyze(args) -> int:
    from .lattice import complement, idempotent_generator
    from .skewcode import check_orthogonal, dual, matrices

    t = _tower_of(args)
    C = _code_of(t, args)
    gen, par = matrices(C)
    if not check_orthogonal(C):
        raise VerificationFailed("generator and parity check matrices are not orthogonal")
    D = dual(C)
    out = {"command": "code analyze", "tower": t.header(), "code": _code_json(C),
           "generator_matrix": _power_matrix(t, gen), "parity_check_matrix": _power_matrix(t, par),
           "dual": D.to_json()}
    try:
        E = idempotent_generator(C)
        out["idempotent"] = {"E": E.to_linpoly().text(), "complement": complement(C).to_json()}
    except NotCoprimeBothSides as exc:
        out["idempotent"] = {"error": "NotCoprimeBothSides", "detail": str(exc)}
    _emit(out)
    return 0


def cmd_bounds(args) -> int:
    from .bounds import (
        HTCertificate,
        IndependentSequence,
        min_rank_distance,
        rank_bch_bound,
        rank_ht_bound,
        shift_bound,
        verify_bch_certificate,
        verify_ht_certificate,
        verify_independent_sequence,
    )
    from .skewcode import rho

    t = _tower_of(args)
    C = _code_of(t, args)
    T = rho(C)
    alphas = _elements(t, args.alpha) if args.alpha else []
    out = {"command": "bounds", "tower": t.header(), "k": C.k, "root_space_dim": T.dim}
    failures = []
    everything = not (args.bch or args.ht or args.shift)
    if args.bch or everything:
        res = rank_bch_bound(T, alphas=alphas)
        ok = res.certificate is None or bool(verify_bch_certificate(res.certificate.alpha, res.value, T))
        out["bch"] = {"value": res.value, "exhaustive": res.exhaustive, "verified": ok,
                      "certificate": res.certificate.to_json(t) if res.certificate else None}
        if not ok:
            failures.append("bch")
    if args.ht or everything:
        res = rank_ht_bound(T, alphas=alphas)
        ok = res.certificate is None or bool(verify_ht_certificate(res.certificate, T))
        out["ht"] = {"value": res.value, "exhaustive": res.exhaustive, "verified": ok,
                     "certificate": res.certificate.to_json(t) if res.certificate else None}
        if not ok:
            failures.append("ht")
    if args.shift or everything:
        res = shift_bound(T, budget=args.budget, alphas=alphas)
        ok = res.witness is None or bool(verify_independent_sequence(res.witness, T))
        out["shift"] = {"value": res.value, "exhaustive": res.exhaustive, "note": res.note,
                        "verified": ok, "witness": res.witness.to_json() if res.witness else None}
        if not ok:
            failures.append("shift")
    if args.verify_cert:
        with open(args.verify_cert) as fh:
            data = json.load(fh)
        checks = {}
        for key in ("bch", "ht"):
            cert = (data.get(key) or {}).get("certificate")
            if cert:
                c = HTCertificate.from_json(t, cert)
                checks[key] = bool(verify_ht_certificate(c, T)) if key == "ht" else bool(
                    verify_bch_certificate(c.alpha, c.delta, T))
        wit = (data.get("shift") or {}).get("witness")
        if wit:
            checks["shift"] = bool(verify_independent_sequence(IndependentSequence.from_json(t, wit), T))
        out["verify_cert"] = checks
        failures += [k for k, v in checks.items() if not v]
    if args.true_distance:
        out["true_distance"] = min_rank_distance(C, cap=args.cap, jobs=args.jobs)
    _emit(out)
    if failures:
        raise VerificationFailed(f"certificates failed: {', '.join(failures)}")
    return 0


def cmd_lattice(args) -> int:
    from .lattice import are_complementary, complement, enumerate_codes, join, meet
    from .skewcode import rho

    t = _tower_of(args)
    if args.op == "enumerate":
        codes = enumerate_codes(t, args.max_size)
        index = {C.G.coeffs: i for i, C in enumerate(codes)}
        table_meet = [[index[meet(a, b).G.coeffs] for b in codes] for a in codes]
        table_join = [[index[join(a, b).G.coeffs] for b in codes] for a in codes]
        _emit({"command": "lattice enumerate", "tower": t.header(),
               "codes": [{"index": i, "k": C.k, "G": C.G.text(), "root_dim": rho(C).dim}
                         for i, C in enumerate(codes)],
               "meet": table_meet, "join": table_join})
        return 0
    from .linpoly import parse_linpoly
    from .skewcode import code_from_generator

    A = code_from_generator(t, [parse_linpoly(t, g) for g in args.gen])
    if args.op == "complement":
        _emit({"command": "lattice complement", "tower": t.header(), "code": A.to_json(),
               "complement": complement(A).to_json()})
        return 0
    if not args.other:
        raise SkewCycError("--other is required for meet and join")
    B = code_from_generator(t, [parse_linpoly(t, g) for g in args.other])
    R = meet(A, B) if args.op == "meet" else join(A, B)
    _emit({"command": f"lattice {args.op}", "tower": t.header(), "result": _code_json(R),
           "complementary": are_complementary(A, B)})
    return 0


def cmd_reproduce(args) -> int:
    from . import examples

    result = examples.run(args.example)
    _emit({"command": f"reproduce {args.example}", **result})
    if not result["verified"]:
        raise VerificationFailed(f"{args.example} did not verify")
    return 0


# ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="skewcyc", description="Skew cyclic rank-metric codes.")
    p.add_argument("--version", action="version", version=f"skewcyc {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    tw = sub.add_parser("tower", help="field tower information")
    twsub = tw.add_subparsers(dest="op", required=True)
    info = twsub.add_parser("info", help="print the tower header")
    _tower_args(info)
    info.set_defaults(func=cmd_tower_info)

    code = sub.add_parser("code", help="construct or analyze a code")
    csub = code.add_subparsers(dest="kind", required=True)
    c = csub.add_parser("from-gen", help="code generated by q^r-polynomials")
    _tower_args(c)
    c.add_argument("--gen", action="append", required=True)
    c.set_defaults(func=cmd_code)
    c = csub.add_parser("from-roots", help="code with a given root space")
    _tower_args(c)
    c.add_argument("--roots", required=True)
    c.set_defaults(func=cmd_code)
    c = csub.add_parser("bch", help="rank-BCH code")
    _tower_args(c)
    c.add_argument("--alpha", help="defining element (default: first normal element)")
    c.add_argument("--delta", type=int, required=True)
    c.set_defaults(func=cmd_code)
    c = csub.add_parser("gabidulin", help="generalized Gabidulin code")
    _tower_args(c)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--betas", help="evaluation points (default: twisted normal basis)")
    c.set_defaults(func=cmd_code)
    c = csub.add_parser("from-cyclic", help="span of E(C) for a classical cyclic code")
    _tower_args(c)
    c.add_argument("--g", required=True, help="classical generator coefficients, low degree first")
    c.set_defaults(func=cmd_code)
    c = csub.add_parser("analyze", help="matrices, dual, idempotent and root space")
    _tower_args(c)
    _code_args(c)
    c.set_defaults(func=cmd_analyze)

    b = sub.add_parser("bounds", help="lower bounds on the minimum rank distance")
    _tower_args(b)
    _code_args(b)
    b.add_argument("--bch", action="store_true")
    b.add_argument("--ht", action="store_true")
    b.add_argument("--shift", action="store_true")
    b.add_argument("--alpha", help="extra certificate candidates (comma separated)")
    b.add_argument("--budget", type=int, default=10**5, help="shift-bound node budget")
    b.add_argument("--verify-cert", metavar="FILE", help="re-verify certificates from a previous run")
    b.add_argument("--true-distance", action="store_true", help="brute-force d_R")
    b.add_argument("--cap", type=int, default=1 << 20, help="max codewords for brute force")
    b.add_argument("--jobs", type=int, default=1, help="worker processes for brute force")
    b.set_defaults(func=cmd_bounds)

    lat = sub.add_parser("lattice", help="lattice operations")
    lat.add_argument("op", choices=["meet", "join", "complement", "enumerate"])
    _tower_args(lat)
    lat.add_argument("--gen", action="append", help="first code generator")
    lat.add_argument("--other", action="append", help="second code generator")
    lat.add_argument("--max-size", type=int, default=64)
    lat.set_defaults(func=cmd_lattice)

    rep = sub.add_parser("reproduce", help="run a worked example end to end")
    rep.add_argument("example", choices=["idempotent-example", "ht-example", "bridge-example"])
    rep.set_defaults(func=cmd_reproduce)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "lattice" and args.op != "enumerate" and not args.gen:
        parser.error("--gen is required for meet, join and complement")
    try:
        return args.func(args)
    except VerificationFailed as exc:
        print(f"skewcyc: verification failed: {exc}", file=sys.stderr)
        return 1
    except (SkewCycError, ValueError, ZeroDivisionError) as exc:
        print(f"skewcyc: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
