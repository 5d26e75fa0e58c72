"""Command-line entry point.

Exit codes: 0 everything verified, 1 something falsified, 2 usage error,
3 some check left unverified because the factoring budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Callable

from . import catalog, constructions, primegraph, spectra
from . import numtheory as nt
from .report import Check, Status, overall, run_check

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE, EXIT_UNVERIFIED = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- argument helpers ------------------------------------------------------


def _add_group_args(p: argparse.ArgumentParser, product: bool = True) -> None:
    p.add_argument("--family", choices=catalog.FAMILIES)
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int, help="Dihedral: the group D_2n")
    p.add_argument("--spec", help='group spec as JSON, e.g. \'{"family": "Ree", "q": 27}\'')
    if product:
        p.add_argument("--product", help="JSON list of group specs; their direct product is used")
        p.add_argument("--power", type=int, default=1, help="direct power of the resulting group")


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"cannot parse {what}: {exc}") from exc


def _groups(args) -> list[catalog.GroupSpec]:
    try:
        if getattr(args, "product", None):
            data = _load_json(args.product, "--product")
            if not isinstance(data, list) or not data:
                raise UsageError("--product needs a nonempty JSON list")
            return [catalog.GroupSpec.from_json(d) for d in data]
        if args.spec:
            return [catalog.GroupSpec.from_json(_load_json(args.spec, "--spec"))]
        if not args.family:
            raise UsageError("give --family, --spec or --product")
        return [catalog.GroupSpec(args.family, args.q, args.n)]
    except (catalog.InvalidGroupSpec, TypeError, AttributeError) as exc:
        raise UsageError(str(exc)) from exc


def _spectrum(args) -> spectra.Spectrum:
    s = spectra.product_of(catalog.mu(g) for g in _groups(args))
    k = getattr(args, "power", 1)
    if k < 1:
        raise UsageError("--power must be positive")
    return spectra.power(s, k)


# -- subcommands -----------------------------------------------------------
# each returns (payload, checks); checks is None for plain queries


def cmd_mu(args):
    return _spectrum(args).to_json(), None


def cmd_order(args):
    groups = _groups(args)
    out = []
    for g in groups:
        entry = {"group": g.to_json(), "name": g.name, "order": catalog.order(g), "pi": sorted(catalog.pi(g, args.effort))}
        if g.family == "Ree":
            entry["out_order"] = catalog.out_order(g)
        if g.family == "L2":
            entry["abelian_sylow2"] = catalog.has_abelian_sylow2(g)
        out.append(entry)
    return {"groups": out}, None


def cmd_graph(args):
    return primegraph.build(_spectrum(args), args.effort).to_json(), None


def cmd_coclique(args):
    g = primegraph.build(_spectrum(args), args.effort)
    t, witness = primegraph.max_coclique(g)
    check = Check("witness-is-coclique", Status.VERIFIED if g.is_coclique(witness) else Status.FALSIFIED)
    return {"t": t, "witness": list(witness)}, [check]


def cmd_sigma(args):
    if args.q is None:
        raise UsageError("sigma needs --q")
    try:
        sig = primegraph.coclique_sigma(args.q, args.effort)
    except catalog.InvalidGroupSpec as exc:
        raise UsageError(str(exc)) from exc
    return {"q": args.q, "sigma": list(sig)}, None


def _parse_m_range(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split(".."))
            return [m for m in range(lo, hi + 1) if m % 2 == 1 and m > 3]
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"bad --m-range {text!r}") from exc


def cmd_sequence(args):
    if args.count < 1:
        raise UsageError("--count must be positive")
    cert = constructions.sequence(args.count)
    payload = cert.to_json()
    problems = constructions.check_certificate(cert)
    checks = [Check("certificate", Status.FALSIFIED if problems else Status.VERIFIED, {"problems": problems})]
    m_range = _parse_m_range(args.m_range)
    if args.verify_lemma or m_range:
        try:
            checks += constructions.verify_prime_lemma(cert, m_range, args.effort)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return payload, checks


def cmd_zsigmondy(args):
    if args.a is None or args.i is None or args.a < 2 or args.i < 2:
        raise UsageError("zsigmondy needs --a >= 2 and --i >= 2")
    ppd = sorted(nt.primitive_prime_divisors(args.a, args.i, args.effort))
    a, i = args.a, args.i
    exceptional = (a, i) == (2, 6) or (i == 2 and (a + 1) & a == 0)
    check = Check(
        "empty-exactly-in-exception-cases",
        Status.VERIFIED if (not ppd) == exceptional else Status.FALSIFIED,
    )
    return {"a": a, "i": i, "primitive_prime_divisors": ppd, "exceptional_case": exceptional}, [check]


def _matrix_checks(q: int, enum: str, samples: int, seed: int) -> tuple[list[tuple[str, Callable]], dict]:
    from . import ffverify
    from .ffverify.semidirect import sampled_coset_check

    ctx = ffverify.field_for_q(q)
    claimed = constructions.ree_witness_mu(q)
    shared: dict = {"field": ctx.to_json()}

    def construction():
        M = ffverify.build_M(ctx)
        d = {"order": M.order, "sl2_classes": len(M.sl2_reps), "minus_identity_in_phi_L": False}
        if enum == "exhaustive":
            d.update(M.verify_exhaustive())
            return d["order"] == d["expected"] and not d["minus_identity_in_image"], d
        return True, d

    def mu_m():
        got = ffverify.m_mu(ctx)
        want = spectra.from_orders([6, q - 1, (q + 1) // 2])
        return spectra.equals(got, want), {"mu_M": list(got.mu), "expected": list(want.mu)}

    def mu_semidirect():
        got = ffverify.semidirect_mu(ctx, enum)
        return spectra.equals(got, claimed), {"mode": enum, "mu": list(got.mu), "expected": list(claimed.mu)}

    def sampled():
        d = sampled_coset_check(ctx, claimed, samples, seed)
        return not d["outside_closure"] and not d["criterion_mismatches"], d

    return [
        ("matrix:construction", construction),
        ("matrix:mu(M)", mu_m),
        ("matrix:mu(W x| M)", mu_semidirect),
        ("matrix:sampled-cosets", sampled),
    ], shared


def _theorem2_job(case: str, q: int | None = None) -> Callable:
    def job():
        r = constructions.check_theorem2(case, q)
        return r.ok, r.details

    return job


def cmd_verify(args):
    jobs: list[tuple[str, Callable]] = []
    payload: dict = {"theorem": args.theorem}
    if args.theorem == "2":
        if args.case is None:
            raise UsageError("--theorem 2 needs --case")
        payload["case"] = args.case
        if args.case == "j1":
            if args.mode == "matrix":
                raise UsageError("matrix mode exists only for the Ree case")
            jobs.append(("formula:j1", _theorem2_job("j1")))
        else:
            if args.q is None:
                raise UsageError("--case ree needs --q")
            try:
                catalog.Ree(args.q)
            except catalog.InvalidGroupSpec as exc:
                raise UsageError(str(exc)) from exc
            payload["q"] = args.q
            if args.mode in ("formula", "both"):
                jobs.append(("formula:ree", _theorem2_job("ree", args.q)))
            if args.mode in ("matrix", "both"):
                mjobs, shared = _matrix_checks(args.q, args.enum, args.sample_size, args.seed)
                jobs += mjobs
                payload["field"] = shared["field"]
    else:
        if args.k < 1:
            raise UsageError("--k must be positive")
        payload["k"] = args.k
        cert = constructions.sequence(args.k)
        payload["terms"] = cert.terms
        pre = constructions.theorem1_ingredients(args.k, args.effort)
        pre += constructions.verify_prime_lemma(cert, _parse_m_range(args.m_range), args.effort)
        return payload, pre

    def run(job):
        name, fn = job
        return run_check(name, fn)

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            checks = list(pool.map(run, jobs))
    else:
        checks = [run(j) for j in jobs]
    return payload, checks


def cmd_ffdump(args):
    from . import ffverify

    if args.q is None:
        raise UsageError("ffdump needs --q")
    try:
        ctx = ffverify.field_for_q(args.q)
        M = ffverify.build_M(ctx)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    reps = []
    for r in M.sl2_reps:
        image = ffverify.phi(r.matrix)
        entry = {"label": r.label, "sl2": r.matrix.to_json(), "centralizer": r.centralizer}
        for sign, g in (("+", image), ("-", -image)):
            k = ffverify.element_order(g)
            entry[sign] = {
                "order": k,
                "unipotent_blocks": ffverify.unipotent_block_sizes(g),
                "coset_has_order_3k": ffverify.coset_has_order_pk(g, k),
            }
        reps.append(entry)
    return {"field": ctx.to_json(), "generator": ctx.generator, "class_reps": reps}, None


# -- output ----------------------------------------------------------------


def _flat(v, depth: int = 2) -> bool:
    """Scalars and lists of scalars (nested at most ``depth`` deep) print on one line."""
    if isinstance(v, dict):
        return False
    if isinstance(v, list):
        return depth > 0 and all(_flat(x, depth - 1) for x in v)
    return True


def _text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if not _flat(v) and v:
                lines.append(f"{pad}{k}:")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, sort_keys=True)}")
    elif isinstance(obj, list):
        for v in obj:
            if not _flat(v):
                lines.append(f"{pad}-")
                lines += _text(v, indent + 1)
            else:
                lines.append(f"{pad}- {json.dumps(v)}")
    else:
        lines.append(f"{pad}{json.dumps(obj)}")
    return lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isospec", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit JSON (default is text)")
    parser.add_argument("--effort", type=int, default=nt.DEFAULT_EFFORT, help="rho iteration budget per cofactor")
    parser.add_argument("--seed", type=int, default=nt.DEFAULT_SEED)
    parser.add_argument("--threads", type=int, default=1)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", help="maximal element orders of a group or direct product")
    _add_group_args(p)
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("order", help="group order, prime divisors, |Out| for Ree")
    _add_group_args(p, product=False)
    p.set_defaults(func=cmd_order)

    for name, func, text in (
        ("graph", cmd_graph, "prime graph"),
        ("coclique", cmd_coclique, "maximum coclique of the prime graph"),
    ):
        p = sub.add_parser(name, help=text)
        _add_group_args(p)
        p.set_defaults(func=func)

    p = sub.add_parser("sigma", help="four-prime coclique of GK(2G2(q))")
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("sequence", help="the recognizable Ree exponent sequence")
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--verify-lemma", action="store_true")
    p.add_argument("--m-range", help="odd m > 3 to test, e.g. 7,9,11 or 7..21")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("zsigmondy", help="primitive prime divisors of a^i - 1")
    p.add_argument("--a", type=int)
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_zsigmondy)

    p = sub.add_parser("verify", help="run theorem checks")
    p.add_argument("--theorem", choices=("1-ingredients", "2"), required=True)
    p.add_argument("--case", choices=("ree", "j1"))
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--mode", choices=("formula", "matrix", "both"), default="formula")
    p.add_argument("--enum", choices=("exhaustive", "class_reps"), default="class_reps")
    p.add_argument("--sample-size", type=int, default=10_000)
    p.add_argument("--m-range", help="odd m > 3 for the new-prime check (theorem 1)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ffdump", help="field modulus, class representatives and Jordan data")
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_ffdump)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        payload, checks = args.func(args)
    except UsageError as exc:
        print(f"isospec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except nt.FactoringEffortExceeded as exc:
        payload, checks = {"error": str(exc)}, [Check(args.command, Status.UNVERIFIED, {"reason": str(exc)})]
    if checks is None:
        out, status = payload, Status.VERIFIED
    else:
        status = overall(checks)
        out = {
            "command": args.command,
            "inputs": {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "json", "command")},
            "results": payload,
            "checks": [c.to_json() for c in checks],
            "status": status.value,
            "seed": args.seed,
            "wall_time": round(time.perf_counter() - started, 3),
        }
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        print("\n".join(_text(out)))
    return {Status.VERIFIED: EXIT_OK, Status.FALSIFIED: EXIT_FALSIFIED, Status.UNVERIFIED: EXIT_UNVERIFIED}[status]


if __name__ == "__main__":
    sys.exit(main())
