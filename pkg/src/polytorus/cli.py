"""Command-line front end: experiment subcommands, CSV/SVG emission.

Every experiment is deterministic in its flags: Monte Carlo goes through the
counter-based streams (``--seed``), CSV cells are written with ``repr`` so
reruns are byte-identical, and ``--budget`` caps the evaluation points of
each subcommand so an oversized request fails cleanly instead of thrashing.

Exit codes: 0 success, 1 numeric check failed or budget exceeded, 2 usage.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import bohr, budget as budget_mod, compare, dirichlet, lift, polytope, \
    randomseries, serialize, torus, transference


# --- small output helpers -----------------------------------------------------

def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if hasattr(v, "item"):  # numpy scalar
        v = v.item()
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _emit(header, rows, out=None, extra=()):
    """Print a table to stdout and optionally write it as CSV."""
    print(",".join(header))
    for row in rows:
        print(",".join(_cell(v) for v in row))
    for line in extra:
        print(line)
    if out:
        with open(out, "w") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_cell(v) for v in row) + "\n")


def _svg_plot(path, series, xlabel, ylabel, loglog=False):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    fig, ax = plt.subplots(figsize=(5.0, 3.5))
    for xs, ys, label in series:
        ax.plot(xs, ys, marker="o", label=label)
    if loglog:
        ax.set_xscale("log")
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if len(series) > 1:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, format="svg")
    plt.close(fig)


def _ints(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _floats(text: str) -> list[float]:
    return [float(part) for part in text.split(",") if part.strip()]


def _common(sub, trials=None, resolution=None):
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--budget", type=int, default=budget_mod.DEFAULT_POINT_BUDGET)
    sub.add_argument("--out", help="write the result table as CSV")
    sub.add_argument("--svg", help="write a plot of the result")
    if trials is not None:
        sub.add_argument("--trials", type=int, default=trials)
    if resolution is not None:
        sub.add_argument("--resolution", type=int, default=resolution)


def _dirichlet_input(sub, default_family="log-reciprocal", default_n=1000):
    sub.add_argument("--file", help="load a Dirichlet polynomial from structured text")
    sub.add_argument("--family", default=None,
                     help=f"built-in coefficient family {sorted(dirichlet.FAMILIES)}")
    sub.add_argument("--N", type=int, default=default_n,
                     help="family length (ignored with --file)")
    sub.add_argument("--J", type=int, default=3,
                     help="window count for the bloch-not-bmoa family")
    sub.set_defaults(_default_family=default_family)


def _load_dirichlet(args) -> dirichlet.DirichletPolynomial:
    if args.file:
        return serialize.load_dirichlet(args.file)
    name = args.family or args._default_family
    if name == "bloch-not-bmoa":
        return dirichlet.family(name, args.J)
    return dirichlet.family(name, args.N)


# --- subcommands --------------------------------------------------------------

def _cmd_kernel_scaling(args) -> int:
    radii = _ints(args.radii) if args.radii else ([4, 8, 16, 32] if args.n == 2 else [4, 8, 16])
    rows, slope = torus.kernel_scaling_experiment(args.n, radii,
                                                  grid_factor=args.grid_factor,
                                                  budget=args.budget)
    table = [(int(r), t, v) for r, t, v in rows]
    _emit(("radius", "terms", "l1_norm"), table + [("slope", "", slope)], args.out)
    print(f"fitted l1 growth exponent: {slope:.4f} (expected about {(args.n - 1) / 2})")
    if args.svg:
        _svg_plot(args.svg, [([r for r, _, _ in rows], [v for _, _, v in rows], "l1")],
                  "radius", "l1 norm", loglog=True)
    return 0


def _cmd_refor(args) -> int:
    radii = _ints(args.radii)
    rows, q_exp, ratio_exp = torus.refor_experiment(args.q, args.n, radii,
                                                    budget=args.budget)
    _emit(("radius", "full_q_norm", "ball_l1", "ratio"),
          [(int(r), a, b, c) for r, a, b, c in rows], args.out,
          extra=[f"q-norm growth exponent: {q_exp!r}",
                 f"ratio growth exponent: {ratio_exp!r}",
                 f"expected q exponent: {args.n * (1 - 1 / args.q)!r}"])
    if args.svg:
        _svg_plot(args.svg, [([r for r, *_ in rows], [c for *_, c in rows], "ratio")],
                  "radius", "ball l1 / product q-norm", loglog=True)
    return 0


def _cmd_lift_verify(args) -> int:
    if args.torus:
        f = serialize.load_torus(args.torus)
        if args.polytope:
            poly = serialize.load_polytope(args.polytope)
        else:
            pts = [tuple(row) for row in f.exponents.tolist()]
            poly = polytope.hull_of_points(pts)
    else:
        f = torus.TorusPolynomial(1, {(0,): 1.0, (1,): 1.0})
        poly = polytope.hull_of_points([(0,), (1,)])
    lifted, shifted_poly, shift = lift.lift_from_polytope(f, poly)
    rows = []
    failed = False
    for p in _floats(args.p):
        if p in (2.0, 4.0, 6.0):
            method = "even-exact"
        elif lifted.dims <= 3:
            method = "grid"
        else:
            method = "monte-carlo"
        rep = lift.verify_isometry(f, lifted, p, method=method,
                                   samples=args.samples, seed=args.seed,
                                   budget=args.budget)
        rows.append((p, method, rep.norm_f.value, rep.norm_g.value,
                     rep.difference, rep.tolerance, rep.ok))
        failed = failed or not rep.ok
    _emit(("p", "method", "norm_f", "norm_lift", "difference", "tolerance", "ok"),
          rows, args.out,
          extra=[f"lift adds {len(poly.facets)} coordinates; shift {shift}"])
    return 1 if failed else 0


def _cmd_projection_search(args) -> int:
    ratio, witness = torus.projection_ratio_search(
        args.p, dims=args.n, degree=args.degree, starts=args.starts,
        iterations=args.iterations, seed=args.seed, budget=args.budget)
    bound = (1.0 / math.sin(math.pi / args.p)) ** args.n if args.p > 1 else math.inf
    _emit(("p", "dims", "degree", "best_ratio", "projection_bound"),
          [(args.p, args.n, args.degree, ratio, bound)], args.out)
    if args.witness:
        serialize.save_torus(witness, args.witness)
        print(f"witness written to {args.witness}")
    return 0


def _cmd_dirichlet_norms(args) -> int:
    f = _load_dirichlet(args)
    rows = []
    for token in args.p.split(","):
        token = token.strip()
        if not token:
            continue
        if token == "inf":
            est = dirichlet.hinf_norm(f, resolution=args.resolution,
                                      budget=args.budget)
            rows.append(est)
            if est.upper is not None:
                print(f"sup-norm certified upper bound: {est.upper!r}")
        else:
            rows.append(dirichlet.hq_norm(f, float(token), samples=args.samples,
                                          seed=args.seed, budget=args.budget))
    if args.bloch:
        rows.append(dirichlet.bloch_norm(f))
    print("method,p,value,stderr,resolution")
    for est in rows:
        print(est.csv_row())
    if args.bmoa:
        print(f"carleson,bmoa,{dirichlet.bmoa_carleson_norm(f)!r},0.0,0")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("method,p,value,stderr,resolution\n")
            for est in rows:
                fh.write(est.csv_row() + "\n")
    return 0


def _cmd_criteria(args) -> int:
    f = _load_dirichlet(args)
    rows = []
    feff = dirichlet.fefferman_S(f)
    rows.append(("fefferman_S", feff.value, feff.argmax, feff.candidates))
    blo = dirichlet.bloch_criterion(f)
    rows.append(("bloch_criterion", blo.value, blo.argmax, blo.candidates))
    if all(bohr.big_omega(n) == 1 for n in f.coeffs if n >= 2):
        pr = dirichlet.prime_bmoa_criterion(f)
        rows.append(("prime_bmoa", pr.value, pr.argmax, pr.candidates))
    _emit(("criterion", "value", "argmax", "candidates"), rows, args.out)
    return 0


def _cmd_littlewood_paley(args) -> int:
    f = _load_dirichlet(args)
    rep = dirichlet.littlewood_paley_check(f, samples=args.samples,
                                           seed=args.seed, budget=args.budget)
    ok = rep.within()
    _emit(("estimate", "stderr", "tail", "exact", "samples", "within_5pct"),
          [(rep.estimate, rep.stderr, rep.tail, rep.exact, rep.samples, ok)],
          args.out)
    return 0 if ok else 1


def _cmd_helson(args) -> int:
    f = _load_dirichlet(args)
    rep = dirichlet.helson_check(f, samples=args.samples, seed=args.seed,
                                 budget=args.budget)
    _emit(("l1_estimate", "l1_stderr", "weighted_l2", "ok"),
          [(rep.lhs.value, rep.lhs.stderr, rep.rhs, rep.ok)], args.out)
    return 0 if rep.ok else 1


def _cmd_transference(args) -> int:
    if args.plan_in:
        plan = serialize.load_plan(args.plan_in)
    else:
        bound = args.g_bound or int(args.x)
        if args.g_power == 1.0:
            g = transference.CompletelyMultiplicative.identity(bound)
        else:
            g = transference.CompletelyMultiplicative.power(bound, args.g_power)
        plan = transference.choose_Q(g, args.x)
    violations = transference.verify_separation(plan, args.verify_max)
    cert = plan.certificate
    _emit(("x", "Q", "support_size", "max_beta_below", "margin", "violations"),
          [(plan.x, plan.Q, len(plan.g.support), cert.max_beta_below,
            cert.margin, len(violations))], args.out,
          extra=[f"tail lower bound {cert.tail_lower_bound!r}, "
                 f"next value above x: {cert.x_next!r}"])
    if args.plan_out:
        serialize.save_plan(plan, args.plan_out)
        print(f"plan written to {args.plan_out}")
    if violations:
        print(f"separation violated at n = {violations[:10]}", file=sys.stderr)
        return 1
    return 0


def _cmd_smooth_partial(args) -> int:
    prime_set = bohr.PrimeSet(tuple(sorted(_ints(args.primes))))
    report = transference.smooth_partial_ratio(
        prime_set, args.cut, length=args.length, trials=args.trials,
        seed=args.seed, resolution=args.resolution)
    _emit(("trial", "truncated_sup", "full_sup_upper", "ratio"),
          report.rows, args.out,
          extra=[f"max ratio {report.max_ratio!r} against scale "
                 f"{report.reference!r}: constant {report.constant!r}"])
    return 0


def _cmd_random_bmoa(args) -> int:
    prime_set = bohr.PrimeSet(tuple(sorted(_ints(args.primes))))
    report = randomseries.bmoa_random_experiment(
        prime_set, truncations=_ints(args.truncations), trials=args.trials,
        seed=args.seed)
    _emit(("truncation", "mean_energy_lower", "mean_energy_upper"),
          report.rows, args.out,
          extra=[f"weighted coefficient sum {report.weighted_sum!r} "
                 f"(tail {report.weighted_tail!r}, "
                 f"converged {'yes' if report.converged else 'no'})"])
    if args.svg:
        _svg_plot(args.svg,
                  [([r[0] for r in report.rows], [r[2] for r in report.rows],
                    "mean upper")],
                  "truncation length", "derivative energy", loglog=True)
    return 0


def _cmd_kahane(args) -> int:
    rows = randomseries.kahane_experiment(
        _ints(args.K), trials=args.trials, seed=args.seed,
        t_window=args.t_window, resolution=args.resolution)
    table = [(r.prime_count, r.largest_prime, r.mean_sup, r.bound, r.ratio)
             for r in rows]
    _emit(("primes", "largest_prime", "mean_sup", "bound", "ratio"),
          table, args.out)
    if args.svg:
        _svg_plot(args.svg, [([r.prime_count for r in rows],
                              [r.mean_sup for r in rows], "mean sup")],
                  "number of primes", "mean sup", loglog=True)
    ok = all(r.ratio < 10.0 for r in rows)
    return 0 if ok else 1


def _cmd_compare_norms(args) -> int:
    lengths = _ints(args.lengths)
    rows = compare.ratio_table(args.family or "log-reciprocal", lengths,
                               bmoa_cap=args.bmoa_cap)
    table = [(r.length, r.terms, r.sup, r.bloch, r.bmoa, r.sup_over_bloch,
              r.loglog, r.normalized) for r in rows]
    extra = []
    if len(rows) >= 2:
        slope, _ = compare.ratio_growth(rows)
        extra.append(f"sup/Bloch growth exponent in log log N: {slope!r}")
    _emit(("length", "terms", "sup", "bloch", "bmoa", "sup_over_bloch",
           "loglog", "normalized"), table, args.out, extra=extra)
    if args.svg:
        _svg_plot(args.svg, [([r.length for r in rows],
                              [r.sup_over_bloch for r in rows], "sup/Bloch"),
                             ([r.length for r in rows],
                              [r.loglog for r in rows], "log log N")],
                  "length", "ratio", loglog=False)
    return 0


# --- parser -------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polytorus",
        description="experiments on torus polynomials and Dirichlet series")
    subs = parser.add_subparsers(dest="command")

    sub = subs.add_parser("kernel-scaling",
                          help="L1 growth of circular kernels")
    sub.add_argument("--n", type=int, default=2, help="dimension")
    sub.add_argument("--radii", default=None, help="comma-separated radii")
    sub.add_argument("--grid-factor", type=int, default=8)
    _common(sub)
    sub.set_defaults(run=_cmd_kernel_scaling)

    sub = subs.add_parser("refor",
                          help="ball truncation against product q-norms")
    sub.add_argument("--q", type=float, default=1.5)
    sub.add_argument("--n", type=int, default=4, help="dimension")
    sub.add_argument("--radii", default="4,8,16")
    _common(sub)
    sub.set_defaults(run=_cmd_refor)

    sub = subs.add_parser("lift-verify",
                          help="check that a polytope lift preserves norms")
    sub.add_argument("--torus", help="torus polynomial file (default: 1 + z)")
    sub.add_argument("--polytope",
                     help="polytope file (default: hull of the exponents)")
    sub.add_argument("--p", default="2", help="comma-separated exponents, inf allowed")
    sub.add_argument("--samples", type=int, default=200_000)
    _common(sub)
    sub.set_defaults(run=_cmd_lift_verify)

    sub = subs.add_parser("projection-search",
                          help="hill-climb the projection-to-sup ratio")
    sub.add_argument("--p", type=float, default=4.0)
    sub.add_argument("--n", type=int, default=1, help="dimension")
    sub.add_argument("--degree", type=int, default=3)
    sub.add_argument("--starts", type=int, default=8)
    sub.add_argument("--iterations", type=int, default=300)
    sub.add_argument("--witness", help="write the best polynomial found")
    _common(sub)
    sub.set_defaults(run=_cmd_projection_search)

    sub = subs.add_parser("dirichlet-norms",
                          help="norms of a Dirichlet polynomial")
    _dirichlet_input(sub)
    sub.add_argument("--p", default="2,4,inf", help="comma-separated exponents")
    sub.add_argument("--samples", type=int, default=100_000)
    sub.add_argument("--bloch", action="store_true")
    sub.add_argument("--bmoa", action="store_true")
    _common(sub, resolution=1 << 14)
    sub.set_defaults(run=_cmd_dirichlet_norms)

    sub = subs.add_parser("criteria",
                          help="block-sum membership criteria")
    _dirichlet_input(sub)
    _common(sub)
    sub.set_defaults(run=_cmd_criteria)

    sub = subs.add_parser("littlewood-paley",
                          help="square-function identity at p = 2")
    _dirichlet_input(sub, default_n=20)
    sub.add_argument("--samples", type=int, default=100_000)
    _common(sub)
    sub.set_defaults(run=_cmd_littlewood_paley)

    sub = subs.add_parser("helson",
                          help="divisor-weighted lower bound for the L1 norm")
    _dirichlet_input(sub, default_n=30)
    sub.add_argument("--samples", type=int, default=100_000)
    _common(sub)
    sub.set_defaults(run=_cmd_helson)

    sub = subs.add_parser("transference",
                          help="certified frequency-separation plans")
    sub.add_argument("--x", type=float, default=100.0,
                     help="partial-sum threshold")
    sub.add_argument("--g-bound", type=int, default=None,
                     help="prime support bound (default: x)")
    sub.add_argument("--g-power", type=float, default=1.0,
                     help="g(p) = p^power")
    sub.add_argument("--verify-max", type=int, default=100_000)
    sub.add_argument("--plan-in", help="load a stored plan instead of searching")
    sub.add_argument("--plan-out", help="write the plan as structured text")
    _common(sub)
    sub.set_defaults(run=_cmd_transference)

    sub = subs.add_parser("smooth-partial",
                          help="partial-sum ratios on smooth polynomials")
    sub.add_argument("--primes", default="2,3")
    sub.add_argument("--cut", type=int, default=64)
    sub.add_argument("--length", type=int, default=None)
    _common(sub, trials=20, resolution=1 << 12)
    sub.set_defaults(run=_cmd_smooth_partial)

    sub = subs.add_parser("random-bmoa",
                          help="signed thin series: derivative energy growth")
    sub.add_argument("--primes", default="2,3")
    sub.add_argument("--truncations", default="32,64,128,256,512")
    _common(sub, trials=50)
    sub.set_defaults(run=_cmd_random_bmoa)

    sub = subs.add_parser("kahane",
                          help="expected sup of random prime sums")
    sub.add_argument("--K", default="50,200", help="comma-separated prime counts")
    sub.add_argument("--t-window", type=float, default=100.0)
    _common(sub, trials=50, resolution=1 << 12)
    sub.set_defaults(run=_cmd_kahane)

    sub = subs.add_parser("compare-norms",
                          help="sup, Bloch, and Carleson norms across lengths")
    sub.add_argument("--family", default="log-reciprocal")
    sub.add_argument("--lengths", default="1000,10000,100000,1000000,10000000")
    sub.add_argument("--bmoa-cap", type=int, default=20_000)
    _common(sub)
    sub.set_defaults(run=_cmd_compare_norms)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if not getattr(args, "run", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.run(args)
    except budget_mod.BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 1
    except serialize.FormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
