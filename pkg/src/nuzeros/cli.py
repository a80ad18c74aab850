"""Command-line front end: zero tables, method comparisons, spectra.

CSV schema (fixed): header ``n,z,nu_exact,<method>,<method>_relerr,...``
with the requested methods in the order of the Method enumeration; values
carry 15 significant digits, relative errors are printed in scientific
notation; a cell is empty exactly when the method is undefined at that n
(DomainError). Lines end with LF. Files are written to a temporary path
and atomically renamed, so a failed run leaves nothing behind.

Exit codes: 0 success, 2 argument error, 3 solver failure.
"""

import argparse
import math
import os
import sys
import tempfile
from dataclasses import dataclass

from . import besselk
from .errors import DomainError, NuzerosError
from .estimators import (
    Method,
    PotentialParams,
    nu_asymp_series,
    nu_asymp_w,
    nu_bk,
    nu_cochran,
    nu_exact_wkb,
    nu_mk,
)
from .lambertw import w0
from .slprufer import PhaseSolverConfig, batch_zeros, nu_zero

_ALL_METHODS = list(Method)


@dataclass(frozen=True)
class ZeroRecord:
    """One comparison-table row: index, argument, exact zero, and the
    surviving estimates (None where the method is undefined)."""

    n: int
    z: float
    nu_exact: float
    estimates: dict

    def rel_err(self, method):
        est = self.estimates.get(method)
        if est is None:
            return None
        return abs(est / self.nu_exact - 1.0)


def estimate(method, n, z):
    """Dispatch a single estimator; raises DomainError where undefined."""
    if method is Method.LAMBERT_W:
        return nu_asymp_w(n, z).value
    if method is Method.SERIES_1:
        return nu_asymp_series(n, z, 1).value
    if method is Method.SERIES_2:
        return nu_asymp_series(n, z, 2).value
    if method is Method.SERIES_3:
        return nu_asymp_series(n, z, 3).value
    if method is Method.MAGNUS_KOTIN:
        return nu_mk(n, z).value
    if method is Method.COCHRAN:
        return nu_cochran(n, z).value
    if method is Method.BAGIROVA_KHANMAMEDOV:
        return nu_bk(n, z).value
    if method is Method.EXACT_WKB_V:
        return nu_exact_wkb(n, z).value
    raise DomainError(f"unknown method {method}")


def _record(n, z, nu_exact, methods):
    ests = {}
    for m in methods:
        try:
            ests[m] = estimate(m, n, z)
        except DomainError:
            ests[m] = None
    return ZeroRecord(n=n, z=z, nu_exact=nu_exact, estimates=ests)


def zero_table(z, count, methods, cfg=None):
    """ZeroRecords for n = 1..count with exact zeros from the phase solver."""
    cfg = cfg or PhaseSolverConfig()
    exact = batch_zeros(count, z, cfg)
    return [_record(n, z, exact[n - 1].nu, methods) for n in range(1, count + 1)]


def compare_grid(n_max):
    """Dense n = 1..20, then 25 log-spaced points per decade up to n_max."""
    ns = set(range(1, min(20, n_max) + 1))
    if n_max > 20:
        k = 0
        while True:
            n = round(10 ** (k / 25.0))
            k += 1
            if n > n_max:
                break
            if n > 20:
                ns.add(n)
        ns.add(n_max)
    return sorted(ns)


def render_csv(records, methods):
    cols = [m for m in _ALL_METHODS if m in methods]
    header = "n,z,nu_exact"
    for m in cols:
        header += f",{m.value},{m.value}_relerr"
    lines = [header]
    for r in records:
        row = f"{r.n},{r.z:.15g},{r.nu_exact:.15g}"
        for m in cols:
            est = r.estimates.get(m)
            if est is None:
                row += ",,"
            else:
                row += f",{est:.15g},{r.rel_err(m):.14e}"
        lines.append(row)
    return "\n".join(lines) + "\n"


def _write_out(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    d = os.path.dirname(os.path.abspath(out)) or "."
    fd, tmp = tempfile.mkstemp(prefix=".nuzeros-", dir=d)
    try:
        with os.fdopen(fd, "w", newline="\n") as f:
            f.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _parse_methods(spec_str):
    if not spec_str:
        return list(_ALL_METHODS)
    by_value = {m.value: m for m in Method}
    methods = []
    for tok in spec_str.split(","):
        tok = tok.strip().lower()
        if tok == "exact":
            continue  # the exact column is always present
        if tok not in by_value:
            raise DomainError(
                f"unknown method '{tok}'; choose from exact,"
                + ",".join(by_value)
            )
        methods.append(by_value[tok])
    return methods


def cmd_zeros(args):
    cfg = _phase_cfg(args)
    methods = _parse_methods(args.methods)
    records = zero_table(args.z, args.count, methods, cfg)
    if args.check_oracle:
        _cross_check(records, args)
    _write_out(render_csv(records, methods), args.out)
    return 0


def _cross_check(records, args):
    """Verify small-n rows against the independent Bessel quadrature."""
    qcfg = besselk.QuadratureConfig(rel_tol=args.quad_tol)
    cap = besselk.nu_cap(args.z, qcfg)
    for r in records[:10]:
        if r.nu_exact > 0.9 * cap:
            break
        width = 0.35 * math.pi / max(math.log(r.nu_exact + 2.0), 1.0)
        root = besselk.refine_zero(
            r.nu_exact, args.z, (r.nu_exact - width, r.nu_exact + width), qcfg
        )
        if abs(root / r.nu_exact - 1.0) > 1e-7:
            raise NuzerosError(
                f"oracle disagreement at n={r.n}: phase {r.nu_exact} vs "
                f"quadrature {root}"
            )


def cmd_compare(args):
    cfg = _phase_cfg(args)
    if args.n_max < 2:
        raise DomainError("--n-max must be >= 2")
    methods = list(_ALL_METHODS)
    records = []
    for n in compare_grid(args.n_max):
        exact = nu_zero(n, args.z, cfg).nu
        records.append(_record(n, args.z, exact, methods))
    _write_out(render_csv(records, methods), args.out)
    return 0


def cmd_spectrum(args):
    cfg = _phase_cfg(args)
    if args.u <= 0:
        raise DomainError("--u must be positive")
    if args.levels < 1:
        raise DomainError("--levels must be >= 1")
    params = None
    if args.U0 is not None or args.a is not None or args.m is not None:
        if None in (args.U0, args.a, args.m):
            raise DomainError("--U0, --a and --m must be given together")
        params = PotentialParams(U0=args.U0, a=args.a, m=args.m, hbar=args.hbar)
        u_p = params.u
        if abs(u_p / args.u - 1.0) > 1e-9:
            raise DomainError(
                f"--u {args.u} inconsistent with parameters (u = {u_p:.12g})"
            )
    zz = math.sqrt(args.u)
    exact = batch_zeros(args.levels, zz, cfg)
    rows = []
    for lvl in range(args.levels):
        eps_exact = exact[lvl].epsilon
        eps_wkb = nu_asymp_w(lvl + 1, zz).value ** 2
        row = {
            "n": lvl,
            "eps_exact": eps_exact,
            "eps_wkb": eps_wkb,
            "rel_gap": abs(eps_wkb / eps_exact - 1.0),
        }
        if params is not None:
            scale = params.hbar**2 / (2.0 * params.m * params.a**2)
            row["E_exact"] = eps_exact * scale
        rows.append(row)
    if args.csv:
        head = "n,eps_exact,eps_wkb,rel_gap" + (",E_exact" if params else "")
        lines = [head]
        for r in rows:
            line = f"{r['n']},{r['eps_exact']:.15g},{r['eps_wkb']:.15g},{r['rel_gap']:.14e}"
            if params is not None:
                line += f",{r['E_exact']:.15g}"
            lines.append(line)
        _write_out("\n".join(lines) + "\n", args.out)
    else:
        cols = ["n", "eps_exact", "eps_wkb", "rel_gap"] + (
            ["E_exact"] if params else []
        )
        widths = {c: max(len(c), 22) for c in cols}
        widths["n"] = max(len(str(args.levels)), 3)
        head = "  ".join(c.rjust(widths[c]) for c in cols)
        lines = [head]
        for r in rows:
            cells = [str(r["n"]).rjust(widths["n"])]
            for c in cols[1:]:
                fmt = f"{r[c]:.14e}" if c == "rel_gap" else f"{r[c]:.15g}"
                cells.append(fmt.rjust(widths[c]))
            lines.append("  ".join(cells))
        _write_out("\n".join(lines) + "\n", args.out)
    return 0


def cmd_w(args):
    val = w0(args.x)
    print(repr(val))
    return 0


def _phase_cfg(args):
    tol = getattr(args, "ode_tol", None)
    if tol is None:
        return PhaseSolverConfig()
    return PhaseSolverConfig(ode_rel_tol=tol, ode_abs_tol=tol * 1e-2)


def _build_parser():
    p = argparse.ArgumentParser(
        prog="nuzeros",
        description="nu-zeros of K_inu(z) and exponential-well spectra",
    )
    sub = p.add_subparsers(dest="command", required=True)

    pz = sub.add_parser("zeros", help="table of zeros with estimates (CSV)")
    pz.add_argument("--z", type=float, required=True)
    pz.add_argument("--count", type=int, required=True)
    pz.add_argument("--methods", type=str, default="")
    pz.add_argument("--out", type=str, default=None)
    pz.add_argument("--ode-tol", dest="ode_tol", type=float, default=None)
    pz.add_argument("--quad-tol", dest="quad_tol", type=float, default=1e-12)
    pz.add_argument(
        "--check-oracle",
        action="store_true",
        help="cross-verify small-n rows against the Bessel quadrature oracle",
    )
    pz.set_defaults(func=cmd_zeros)

    pc = sub.add_parser("compare", help="all methods' errors on a log n-grid")
    pc.add_argument("--z", type=float, required=True)
    pc.add_argument("--n-max", dest="n_max", type=int, required=True)
    pc.add_argument("--out", type=str, default=None)
    pc.add_argument("--ode-tol", dest="ode_tol", type=float, default=None)
    pc.set_defaults(func=cmd_compare)

    ps = sub.add_parser("spectrum", help="exponential-well eigenvalues")
    ps.add_argument("--u", type=float, required=True)
    ps.add_argument("--levels", type=int, required=True)
    ps.add_argument("--U0", type=float, default=None)
    ps.add_argument("--a", type=float, default=None)
    ps.add_argument("--m", type=float, default=None)
    ps.add_argument("--hbar", type=float, default=1.0)
    ps.add_argument("--csv", action="store_true")
    ps.add_argument("--out", type=str, default=None)
    ps.add_argument("--ode-tol", dest="ode_tol", type=float, default=None)
    ps.set_defaults(func=cmd_spectrum)

    pw = sub.add_parser("w", help="principal-branch Lambert W value")
    pw.add_argument("--x", type=float, required=True)
    pw.set_defaults(func=cmd_w)
    return p


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NuzerosError as exc:
        print(f"nuzeros: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
