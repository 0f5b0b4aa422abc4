"""
Command line: compute polynomials and scalars, apply operators, verify
identities, calibrate the convention ledger.

Every command except ``calibrate`` loads a convention ledger first (the
shipped one unless ``--ledger`` is given).  Verification streams one JSON
report per line; the exit status is 0 iff every report is ``equal``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import combinat as cb
from . import ctengine as ct
from . import macdonald as mac
from .conventions import LedgerError, default_ledger_path, load_ledger, parse_ledger
from .hecke import OperatorParams, apply_D1, apply_OIJ, apply_Ti, apply_Ti_inv, apply_U, apply_Yi
from .laurent import DEFAULT_TERM_CAP, LaurentPoly, TermCapExceeded, poly_to_json, term_cap
from .qtfield import render

EXIT_OK, EXIT_DIFFER, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(ValueError):
    pass


# -- argument parsing helpers ----------------------------------------------------------------

def _ints(text, what):
    if text is None:
        raise UsageError("%s is required" % what)
    try:
        return cb.parse_composition(text)
    except ValueError:
        raise UsageError("%s must be comma-separated integers, got %r" % (what, text)) from None


def _index_set(text):
    return frozenset(_ints(text, "index set")) if text else frozenset()


def _spec(args, n):
    try:
        return cb.SymmetrySpec(n, _index_set(args.I), _index_set(args.J))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _shape(text):
    if text is None:
        raise UsageError("--shape is required")
    try:
        return cb.parse_shape(text)
    except ValueError as exc:
        raise UsageError("bad shape %r: %s" % (text, exc)) from None


def _poly(token, args, conv):
    """'1', 'E:eta', 'P:kappa', 'S:label' (antisymmetric) or 'SIJ:eta*' (uses --I/--J)."""
    kind, _, rest = token.partition(":")
    if kind == "1" and not rest:
        if not args.n:
            raise UsageError("the constant 1 needs --n")
        return LaurentPoly.one(args.n)
    label = _ints(rest, "label")
    if kind == "E":
        return mac.compute_E(label, conv).body
    if kind == "P":
        return mac.compute_P(label, args.n or len(label), conv).body
    if kind == "S":
        return mac.compute_S_antisym(label, conv).body
    if kind == "SIJ":
        return mac.compute_S_IJ(label, _spec(args, len(label)), conv=conv).body
    raise UsageError("unknown polynomial %r (use 1, E:, P:, S: or SIJ:)" % token)


# -- tasks (module level so worker processes can run them) ------------------------------------

def _random_pair(seed, j, n):
    rng = random.Random("pair:%s:%d" % (seed, j))
    return ct.random_laurent(n, rng), ct.random_laurent(n, rng), rng.randint(1, n - 1)


def _adjoint_task(seed, j, n, k, conv):
    f, g, i = _random_pair(seed, j, n)
    rep = ct.adjointness_check(f, g, i, ct.WeightSpec(n, k), conv.operator_order)
    rep.params["sample"] = j
    return rep


def _hermitian_task(seed, j, n, k, conv):
    f, g, _ = _random_pair(seed, j, n)
    rep = ct.hermitian_check(f, g, ct.WeightSpec(n, k))
    rep.params["sample"] = j
    return rep


def _kadell_task(seed, name, j, k, index, conv):
    n, blocks = ct.KADELL_CONFIGS[name]
    h = ct.random_antisymmetric(n, blocks, "%s:%s:%d" % (seed, name, j))
    rep = ct.kadell_blocks_check(n, blocks, ct.Q ** (k + 1), h, index)
    rep.params.update(config=name, sample=j, seed=seed)
    return rep


def _opid_task(n, r, conv):
    return mac.operator_identity_check(cb.elementary(n, r), conv)


def _commutation_task(shape, which, conv):
    f = LaurentPoly.one(shape.n) if which == "1" else cb.elementary(shape.n0, 1).embed(shape.n)
    rep = mac.commutation_check(shape, f, conv)
    rep.params["f"] = "1" if which == "1" else "e1(z1..z%d)" % shape.n0
    return rep


def _tien_task(eta, i, variant, conv):
    if variant == "plain":
        return mac.ti_action_check(eta, i, conv)
    return mac.ti_bar_action_check(eta, i, conv)


def _eval_task(family, label, n, I, conv):
    from .report import compare
    if family == "E":
        f = mac.compute_E(label, conv).body
        closed = mac.evaluate_E_closed(label, conv)
    elif family == "P":
        f = mac.compute_P(label, n, conv).body
        closed = mac.evaluate_P_product(label, n, conv)
    else:
        spec = cb.SymmetrySpec(len(label), I, frozenset())
        f = mac.compute_S_IJ(label, spec, conv=conv).body
        closed = mac.evaluate_S_sym_closed(label, spec, conv)
    return compare("evaluation-" + family, {"label": list(label), "n": n},
                   mac.evaluate_at_tdelta(f, conv), closed)


TASKS = {
    "orthogonality": lambda eta, nu, k, conv: ct.orthogonality_check(eta, nu, k, conv),
    "tien": _tien_task,
    "adjoint": _adjoint_task,
    "hermitian": _hermitian_task,
    "expansion": lambda eta, spec, direction, conv: mac.expansion_check(eta, spec, direction, conv),
    "proportionality": lambda eta, spec, conv: mac.proportionality_check(eta, spec, conv),
    "special-eta": lambda shape, conv: mac.special_eta_check(shape, conv),
    "thm34": lambda kappa, n, conv: mac.thm34_check(kappa, n, conv),
    "opid": _opid_task,
    "conjecture1": lambda kappa, shape, conv: mac.conjecture1_check(kappa, shape, conv),
    "commutation": _commutation_task,
    "presym-inner": lambda eta, spec, k, conv: ct.presym_inner_check(eta, spec, k, conv=conv),
    "dp-inner": lambda shape, k, form, conv: ct.dp_inner_check(shape, k, form, conv),
    "d1": lambda n0, n1, a, b, k, conv: ct.d1_check(n0, n1, a, b, k),
    "d1-marks": lambda n0, n1, k, conv: ct.d1_mark_check(n0, n1, k),
    "dp": lambda shape, k, conv: ct.dp_check(shape, k),
    "dp-ratio": lambda shape, k, form, conv: ct.dp_ratio_check(shape, k, form),
    "kadell": _kadell_task,
    "evaluation": _eval_task,
}


def _run(task):
    name, args, conv, cap = task
    token = term_cap.set(cap)
    try:
        return TASKS[name](*args, conv).to_dict()
    finally:
        term_cap.reset(token)


def run_tasks(tasks, workers=1):
    """Report dicts in task order."""
    if workers <= 1 or len(tasks) < 2:
        return [_run(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # workers look tasks up by name, so only plain data crosses the process boundary
        return list(pool.map(_run, tasks, chunksize=max(1, len(tasks) // (4 * workers))))


# -- verification grids -----------------------------------------------------------------------

DESK_SHAPES_SPECIAL = ("n0=0;Np=2", "n0=0;Np=3", "n0=1;Np=2", "n0=1;Np=2,2")
DESK_CONJECTURE = (("n0=2;Np=2", (1,)), ("n0=1;Np=2,2", (1,)))
DESK_DP_INNER = (("n0=0;Np=2", 1), ("n0=1;Np=2", 1), ("n0=1;Np=1,2", 1), ("n0=0;Np=3", 1))
DESK_D1 = ((0, 2, 0), (0, 2, 1), (1, 2, 1), (2, 2, 1))
DESK_DP = (("n0=1;Np=1,2", 1), ("n0=0;Np=2,2", 1))
DESK_RATIO = (("n0=1;Np=1,2", 1),)


def grid_orthogonality(n, k, max_deg):
    out = []
    for d in range(max_deg + 1):
        comps = cb.compositions(n, d)
        out += [("orthogonality", (e, v, k)) for e in comps for v in comps]
    return out


def grid_hecke(n, max_deg):
    return [("tien", (eta, i, variant))
            for variant in ("plain", "bar")
            for eta in cb.compositions_upto(n, max_deg) for i in range(1, n)]


def grid_adjoint(seed, count, n=3, ks=(1, 2)):
    per = -(-count // len(ks))
    return [("adjoint", (seed, j, n, k)) for k in ks for j in range(per)][:count]


def grid_prescribed(max_n, max_deg):
    out = []
    for eta, spec in mac.prescribed_suite(max_n, max_deg):
        out.append(("expansion", (eta, spec, "plain")))
        out.append(("expansion", (eta, spec, "bar")))
        for mu in cb.orbit(eta, spec):
            out.append(("proportionality", (mu, spec)))
    return out


def grid_thm34(ns=(2, 3), max_size=2):
    out = []
    for n in ns:
        for d in range(max_size + 1):
            for kappa in cb.partitions(d, n):
                out.append(("thm34", (tuple(kappa), n)))
    return out


def grid_kadell(seed, count, k=1, index="variables"):
    return [("kadell", (seed, name, j, k, index)) for name in ct.KADELL_CONFIGS for j in range(count)]


def grid_evaluation(max_n=3, max_deg=3):
    out = []
    for n in range(1, max_n + 1):
        for eta in cb.compositions_upto(n, max_deg):
            out.append(("evaluation", ("E", eta, n, frozenset())))
        for d in range(max_deg + 1):
            for kappa in cb.partitions(d, n):
                kappa = tuple(kappa) + (0,) * (n - len(kappa))
                out.append(("evaluation", ("P", kappa, n, frozenset())))
    for eta, spec in mac.prescribed_suite(max_n, max_deg, pairs=[(frozenset({1}), frozenset())]):
        out.append(("evaluation", ("S_I", eta, spec.n, spec.I)))
    return out


def grid_desk(seed):
    shp = cb.parse_shape
    g = []
    g += grid_orthogonality(3, 1, 3)
    g += grid_hecke(3, 3)
    g += grid_adjoint(seed, 20)
    g += grid_prescribed(4, 4)
    g += [("special-eta", (shp(s),)) for s in DESK_SHAPES_SPECIAL]
    g += grid_thm34()
    g += [("opid", (3, r)) for r in (0, 1, 2)]
    for s, kappa in DESK_CONJECTURE:
        g.append(("conjecture1", (kappa, shp(s))))
        g += [("commutation", (shp(s), which)) for which in ("1", "e1")]
    g += [("presym-inner", (eta, spec, 1)) for eta, spec in mac.prescribed_suite(4, 4)]
    for s, k in DESK_DP_INNER:
        g.append(("dp-inner", (shp(s), k, "dp")))
        if shp(s).p == 1:
            g.append(("dp-inner", (shp(s), k, "simple")))
    g += [("d1", (n0, n1, 0, 0, k)) for n0, n1, k in DESK_D1]
    g += [("dp", (shp(s), k)) for s, k in DESK_DP]
    g += [("dp-ratio", (shp(s), k, "closed")) for s, k in DESK_RATIO]
    g += grid_kadell(seed, 25)
    g += grid_evaluation()
    g += [("hermitian", (seed, j, 3, k)) for k in (1, 2) for j in range(5)]
    return g


def _verify_grid(args):
    w = args.what
    if w == "orthogonality":
        return grid_orthogonality(args.n or 3, args.k, args.max_deg)
    if w == "hecke":
        return grid_hecke(args.n or 3, args.max_deg)
    if w == "adjoint":
        return grid_adjoint(args.seed, args.count, args.n or 3, (args.k,))
    if w == "hermitian":
        return [("hermitian", (args.seed, j, args.n or 3, args.k)) for j in range(args.count)]
    if w == "prescribed":
        return grid_prescribed(args.max_n, args.max_deg)
    if w == "presym-inner":
        return [("presym-inner", (eta, spec, args.k))
                for eta, spec in mac.prescribed_suite(args.max_n, args.max_deg)]
    if w == "special-eta":
        return [("special-eta", (_shape(args.shape),))]
    if w == "thm34":
        if not args.n:
            raise UsageError("thm34 needs --n")
        kappa = _ints(args.kappa or "", "kappa")
        return [("thm34", (kappa, args.n))]
    if w == "opid":
        n = args.n or 3
        return [("opid", (n, r)) for r in range(n)]
    if w == "conjecture1":
        return [("conjecture1", (_ints(args.kappa or "", "kappa"), _shape(args.shape)))]
    if w == "commutation":
        return [("commutation", (_shape(args.shape), args.f or "1"))]
    if w == "dp-inner":
        return [("dp-inner", (_shape(args.shape), args.k, args.form or "dp"))]
    if w == "d1":
        return [("d1", (args.n0, args.n1, args.a, args.b, args.k))]
    if w == "d1-marks":
        return [("d1-marks", (args.n0, args.n1, args.k))]
    if w == "dp":
        return [("dp", (_shape(args.shape), args.k))]
    if w == "dp-ratio":
        return [("dp-ratio", (_shape(args.shape), args.k, args.form or "closed"))]
    if w == "kadell":
        return grid_kadell(args.seed, args.count, args.k, args.index)
    if w == "evaluation":
        return grid_evaluation(args.max_n, args.max_deg)
    if w == "all":
        if args.suite != "desk":
            raise UsageError("unknown suite %r" % args.suite)
        return grid_desk(args.seed)
    raise UsageError("unknown identity %r" % w)


VERIFY_CHOICES = ("orthogonality", "hecke", "adjoint", "hermitian", "prescribed", "presym-inner",
                  "special-eta", "thm34", "opid", "conjecture1", "commutation", "dp-inner", "d1",
                  "d1-marks", "dp", "dp-ratio", "kadell", "evaluation", "all")


# -- output -------------------------------------------------------------------------------------

def _emit_report(d, args, out):
    if not args.timing:
        d = {k: v for k, v in d.items() if k != "timing"}
    if args.format == "json":
        out.write(json.dumps(d) + "\n")
    else:
        extra = ""
        if d["status"] != "equal":
            extra = " difference=%s" % json.dumps(d["difference"])
        elif "detail" in d and "value" in d["detail"]:
            extra = " value=%s" % d["detail"]["value"]
        out.write("%s %s %s [%s]%s\n" % (d["status"], d["id"], json.dumps(d["params"]),
                                         d["label"], extra))


def _emit_value(kind, label, value, args, out):
    if isinstance(value, LaurentPoly):
        text = str(value)
        payload = {"object": kind, "label": label, "value": text, "poly": poly_to_json(value)}
    else:
        text = render(value)
        payload = {"object": kind, "label": label, "value": text}
    out.write((json.dumps(payload) if args.format == "json" else text) + "\n")


# -- commands -----------------------------------------------------------------------------------

def _load_conventions(args):
    path = Path(args.ledger) if args.ledger else default_ledger_path()
    try:
        return load_ledger(path)
    except LedgerError as exc:
        raise LedgerError("%s (ledger: %s)" % (exc, path)) from None


def cmd_compute(args, conv, out):
    what = args.what
    if what == "E":
        eta = _ints(args.eta, "eta")
        if args.n and args.n != len(eta):
            raise UsageError("--n %d does not match eta with %d parts" % (args.n, len(eta)))
        value, label = mac.compute_E(eta, conv).body, list(eta)
    elif what == "P":
        kappa = _ints(args.kappa, "kappa")
        value, label = mac.compute_P(kappa, args.n or len(kappa), conv).body, list(kappa)
    elif what == "S":
        lab = _ints(args.eta, "label")
        value, label = mac.compute_S_antisym(lab, conv).body, list(lab)
    elif what == "SIJ":
        eta = _ints(args.eta_star, "eta*")
        via = _ints(args.via, "via") if args.via else None
        value = mac.compute_S_IJ(eta, _spec(args, len(eta)), via, conv).body
        label = list(eta)
    elif what == "inner":
        if not (args.f and args.g):
            raise UsageError("inner needs --f and --g")
        f, g = _poly(args.f, args, conv), _poly(args.g, args, conv)
        if f.n != g.n:
            raise UsageError("--f and --g live in different numbers of variables")
        value = ct.inner_product(f, g, ct.WeightSpec(f.n, args.k, args.a, args.b))
        label = [args.f, args.g]
    elif what == "norm":
        eta = _ints(args.eta, "eta")
        value, label = ct.norm_closed(eta, len(eta), args.k, conv), list(eta)
    elif what == "weight":
        if not args.n:
            raise UsageError("weight needs --n")
        spec = ct.WeightSpec(args.n, args.k, args.a, args.b)
        if args.shape:
            value = ct.build_weight_antiblocks(spec, _shape(args.shape), args.mark)
        else:
            value = ct.build_weight(spec)
        label = [args.n, args.k, args.a, args.b]
    elif what == "d1":
        value = ct.d1(args.n0, args.n1, args.a, args.b, args.k, args.mode)
        label = [args.n0, args.n1, args.a, args.b, args.k]
    elif what == "dp":
        value = ct.dp(_shape(args.shape), args.a, args.b, args.k, args.mode)
        label = [args.shape, args.k]
    elif what == "eval":
        label = _ints(args.eta, "label")
        family = args.family
        spec = cb.SymmetrySpec(len(label), _index_set(args.I), frozenset()) if family == "S_I" else None
        value = mac.evaluate_principal(family, label, spec, args.n or len(label), conv)
        label = list(label)
    else:
        raise UsageError("unknown object %r" % what)
    _emit_value(what, label, value, args, out)
    return EXIT_OK


def cmd_apply(args, conv, out):
    f = _poly(args.f, args, conv)
    params = OperatorParams.plain(conv.operator_order)
    op = args.op
    if op in ("Ti", "Tinv", "Yi") and not args.i:
        raise UsageError("--op %s needs --i" % op)
    if op == "Ti":
        value = apply_Ti(f, args.i, params)
    elif op == "Tinv":
        value = apply_Ti_inv(f, args.i, params)
    elif op == "Yi":
        value = apply_Yi(f, args.i, params)
    elif op in ("U+", "U-"):
        value = apply_U(f, op[1], params)
    elif op == "OIJ":
        value = apply_OIJ(f, _spec(args, f.n), params)
    elif op == "D1":
        value = apply_D1(f, params)
    else:
        raise UsageError("unknown operator %r" % op)
    _emit_value(op, [args.f], value, args, out)
    return EXIT_OK


def cmd_verify(args, conv, out):
    grid = _verify_grid(args)
    tasks = [(name, params, conv, args.term_cap) for name, params in grid]
    status = EXIT_OK
    for d in run_tasks(tasks, args.workers):
        _emit_report(d, args, out)
        if d["status"] != "equal":
            status = EXIT_DIFFER
    return status


def cmd_calibrate(args, out):
    from .calibrate import CalibrationError, calibrate, check_conventions
    path = Path(args.ledger) if args.ledger else default_ledger_path()
    if args.check:
        try:
            conv = parse_ledger(path.read_text(encoding="utf-8"))
        except (OSError, LedgerError) as exc:
            raise LedgerError("%s (ledger: %s)" % (exc, path)) from None
        status = EXIT_OK
        for suite, (bad, total) in check_conventions(conv):
            out.write("%s failures=%d/%d\n" % (suite, bad, total))
            if bad:
                status = EXIT_DIFFER
        return status
    try:
        conv, text = calibrate()
    except CalibrationError as exc:
        sys.stderr.write("calibration failed: %s\n" % exc)
        return EXIT_DIFFER
    target = Path(args.output) if args.output else path
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    out.write(text)
    return EXIT_OK


# -- parser -----------------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="macpresym", description=__doc__.strip().splitlines()[0])
    p.add_argument("--ledger", help="convention ledger file (default: the shipped one)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--term-cap", type=int, default=DEFAULT_TERM_CAP,
                   help="maximum number of terms in any intermediate polynomial")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="include timings in reports")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--n", type=int)
        sp.add_argument("--k", type=int, default=1)
        sp.add_argument("--a", type=int, default=0)
        sp.add_argument("--b", type=int, default=0)
        sp.add_argument("--I", default="")
        sp.add_argument("--J", default="")
        sp.add_argument("--shape")
        sp.add_argument("--kappa")
        sp.add_argument("--f")
        sp.add_argument("--g")
        # global options are also accepted after the subcommand
        sp.add_argument("--seed", type=int, default=argparse.SUPPRESS)
        sp.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        sp.add_argument("--workers", type=int, default=argparse.SUPPRESS)
        sp.add_argument("--ledger", default=argparse.SUPPRESS)
        sp.add_argument("--term-cap", type=int, default=argparse.SUPPRESS)
        sp.add_argument("--timing", action="store_true", default=argparse.SUPPRESS)

    c = sub.add_parser("compute", help="compute a polynomial or scalar")
    c.add_argument("what", choices=("E", "P", "S", "SIJ", "inner", "norm", "weight", "d1", "dp", "eval"))
    common(c)
    c.add_argument("--eta")
    c.add_argument("--eta-star", dest="eta_star")
    c.add_argument("--via")
    c.add_argument("--n0", type=int, default=0)
    c.add_argument("--n1", type=int, default=0)
    c.add_argument("--mode", choices=("direct_ct", "closed_form"), default="direct_ct")
    c.add_argument("--mark", choices=ct.MARKS, default="q^(k+1)")
    c.add_argument("--family", choices=("E", "P", "S_I"), default="E")

    a = sub.add_parser("apply", help="apply an operator to a polynomial")
    a.add_argument("--op", required=True, choices=("Ti", "Tinv", "Yi", "U+", "U-", "OIJ", "D1"))
    a.add_argument("--i", type=int)
    common(a)

    v = sub.add_parser("verify", help="verify identities, one JSON report per line")
    v.add_argument("what", choices=VERIFY_CHOICES)
    common(v)
    v.add_argument("--n0", type=int, default=0)
    v.add_argument("--n1", type=int, default=0)
    v.add_argument("--max-deg", type=int, default=3)
    v.add_argument("--max-n", type=int, default=3)
    v.add_argument("--count", type=int, default=25)
    v.add_argument("--index", choices=("variables", "literal"), default="variables")
    v.add_argument("--form")
    v.add_argument("--suite", default="desk")

    cal = sub.add_parser("calibrate", help="run the discriminating suites and write the ledger")
    cal.add_argument("--output", help="where to write the ledger (default: --ledger or the shipped path)")
    cal.add_argument("--check", action="store_true", help="only report failure counts for the ledger")
    cal.add_argument("--ledger", default=argparse.SUPPRESS)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "calibrate":
            return cmd_calibrate(args, out)
        if args.term_cap < 1 or args.workers < 1:
            raise UsageError("--term-cap and --workers must be positive")
        conv = _load_conventions(args)
        token = term_cap.set(args.term_cap)
        try:
            if args.command == "compute":
                return cmd_compute(args, conv, out)
            if args.command == "apply":
                return cmd_apply(args, conv, out)
            return cmd_verify(args, conv, out)
        finally:
            term_cap.reset(token)
    except LedgerError as exc:
        sys.stderr.write("error: %s; run 'macpresym calibrate'\n" % exc)
        return EXIT_USAGE
    except TermCapExceeded as exc:
        sys.stderr.write("resource error: %s\n" % exc)
        return EXIT_RESOURCE
    except (UsageError, ValueError, IndexError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
