"""Command dispatch: ``run_command(session, argv)`` returns a ``Report``.

Exit codes: 0 computed (whatever the verdict), 1 input or contract error,
2 resource budget exceeded.
"""

import argparse
import shlex
import time

from .errors import ContractError, DimFilterError, ParseError, ResourceError
from .filtration import dk
from .modules import (
    GB, Presentation, PrimeIdeal, annihilator, dim_module, ext_module, ideal, is_zero,
)
from .properties import run_all
from .randomized import rng_for
from .report import Report, Result, canonical_strings, digest
from .serre import ambient_ring_of, check_hypotheses, is_sn
from .vanishing import HypothesisFailure, verify_theorem, witness_primes

COMMANDS = ("gb", "dim", "ext", "dk", "sn", "hypotheses", "verify", "props")


class _ArgError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgError(message)


def _command_parser():
    top = _Parser(prog="command", add_help=False)
    sub = top.add_subparsers(dest="cmd", required=True)
    p = sub.add_parser("gb", add_help=False)
    p.add_argument("--target", required=True)
    for name in ("dim", "hypotheses"):
        p = sub.add_parser(name, add_help=False)
        p.add_argument("--module", required=True)
    p = sub.add_parser("ext", add_help=False)
    p.add_argument("--module", required=True)
    p.add_argument("--j", type=int, required=True)
    p = sub.add_parser("dk", add_help=False)
    p.add_argument("--module", required=True)
    p.add_argument("--k", type=int, required=True)
    p = sub.add_parser("sn", add_help=False)
    p.add_argument("--module", required=True)
    p.add_argument("--n", type=int, required=True)
    p = sub.add_parser("verify", add_help=False)
    p.add_argument("--module", required=True)
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p = sub.add_parser("props", add_help=False)
    p.add_argument("--module", required=True)
    p.add_argument("--seed", type=int, default=0)
    return top


def _gb_result(name, obj):
    if isinstance(obj, Presentation):
        G, kind = obj.gb, "module"
    elif isinstance(obj, PrimeIdeal):
        G, kind = obj.gb, f"prime ({obj.certificate})"
    else:
        G, kind = ideal(obj[0].ring, obj) if obj else None, "ideal"
    gens = canonical_strings(G) if G is not None else []
    return Result(name, "computed", None, {"kind": kind, "gb": gens, "size": len(gens)})


def _verdict_str(v):
    return "true" if v else "false"


def _dispatch(session, args):
    if args.cmd == "gb":
        return [_gb_result(args.target, session.lookup(args.target))]
    M = session.module(args.module)
    name = args.module
    if args.cmd == "dim":
        d = dim_module(M)
        return [Result(name, "computed", None,
                       {"dim": d, "codim": M.ring.nvars - d, "rank": M.rank,
                        "annihilator": canonical_strings(annihilator(M))})]
    if args.cmd == "ext":
        E = ext_module(args.j, M)
        zero = is_zero(E)
        data = {"j": args.j, "generators": E.rank, "dim": dim_module(E),
                "annihilator": canonical_strings(annihilator(E))}
        if not zero:
            data["relations"] = canonical_strings(E.gb)
        return [Result(f"Ext^{args.j}({name})", "zero" if zero else "nonzero", None, data)]
    if args.cmd == "dk":
        r = dk(M, args.k)
        data = {"k": args.k, "generators": _sub_strings(r.submodule),
                "ext_indices": r.ext_indices}
        if r.ideal is not None:
            data["torsion_ideal"] = canonical_strings(r.ideal)
        return [Result(f"D_{args.k}({name})", "zero" if r.is_zero() else "nonzero", None, data)]
    if args.cmd == "sn":
        v = is_sn(M, args.n, witness_primes(M, session.declared_primes))
        return [Result(f"S_{args.n}({name})", _verdict_str(v), v.witness,
                       {"trail": v.trail, "provenance": v.data.get("provenance", "")})]
    if args.cmd == "hypotheses":
        A = ambient_ring_of(M)
        rep = check_hypotheses(A, M)
        data = {"finite_dim": rep.finite_dim, "catenary": rep.catenary,
                "equidimensional": rep.equidimensional,
                "height_condition": rep.height_condition,
                "module_equidimensional": rep.module_equidimensional,
                "notes": rep.notes}
        return [Result(name, "pass" if rep.ok else "reject", None, data)]
    if args.cmd == "verify":
        rep = verify_theorem(M, args.max_n, session.declared_primes)
        out = []
        for row in rep.rows:
            w = row.cond.witness.as_dict() if row.cond.witness else (row.sn.witness or None)
            verdict = "agree" if row.agree else ("inconclusive" if not row.decided else "disagree")
            out.append(Result(f"n={row.n}", verdict, w,
                              {"sn": row.sn.ok, "cond_ii": row.cond.status,
                               "provenance": row.cond.provenance,
                               "reason": row.cond.reason}))
        out.append(Result("theorem", "pass" if rep.ok else "fail", None,
                          {"rows": len(rep.rows)}))
        return out
    if args.cmd == "props":
        rng = rng_for(args.seed)
        out = []
        for v in run_all(M, rng, session.declared_primes):
            verdict = "skipped" if v.ok is None else ("pass" if v.ok else "fail")
            out.append(Result(v.name, verdict, v.witness, {"trail": v.trail}))
        return out
    raise _ArgError(f"unknown command {args.cmd}")


def _sub_strings(sub):
    """Canonical strings of a submodule: the reduced GB of its preimage in
    the free cover, minus the elements that are ambient relations."""
    amb = sub.ambient.gb
    vecs = [v for v in sub.gb.vecs if amb.normal_form_vec(v)]
    G = GB(sub.ring, sub.ambient.rank, vecs, sub.gb.order)
    return canonical_strings(G)


def run_command(session, command, timings=False):
    """Run one command (a string or argv list) on a parsed session."""
    argv = shlex.split(command) if isinstance(command, str) else list(command)
    text = " ".join(argv)
    report = Report(text, repr(session.ring), input_digest=digest(session.text))
    try:
        args = _command_parser().parse_args(argv)
        start = time.perf_counter()
        results = _dispatch(session, args)
        ms = int((time.perf_counter() - start) * 1000) if timings else 0
        for r in results:
            r.ms = ms
        report.results = results
    except _ArgError as exc:
        report.results = [error_result("usage", str(exc))]
        report.exit_code = 1
    except HypothesisFailure as exc:
        report.results = [error_result("hypotheses", str(exc), _entity(session, argv))]
        report.results[0].data["notes"] = exc.report.notes
        report.exit_code = 1
    except ResourceError as exc:
        report.results = [error_result("resource", str(exc), _entity(session, argv))]
        report.exit_code = 2
    except (ContractError, ParseError, DimFilterError) as exc:
        report.results = [error_result("contract", str(exc), _entity(session, argv))]
        report.exit_code = 1
    return report


def _entity(session, argv):
    for flag in ("--module", "--target"):
        if flag in argv:
            i = argv.index(flag)
            if i + 1 < len(argv):
                return session.where(argv[i + 1])
    return None


def error_result(kind, message, entity=None):
    data = {"kind": kind, "message": message}
    if entity:
        data["entity"] = entity
    return Result("error", "error", None, data)
