"""Command-line front end.

Subcommands
-----------
verify       hermetic self-check: recompute every named coefficient and
             derived constant against its closed form, print a pass/fail
             table (exit 1 on any failure).  --perturb NAME injects a small
             offset into matching rows as a negative control.
coeffs       emit the jet coefficients, derived constants and the full
             intermediate-term ledger.
isola        for each --eps: closed-form eigenvalue curve across the
             unstable band, the truncated-eigenproblem trace over a mu
             window, and summary rows comparing the two.
spectrum     full truncated spectrum at one (mu, eps), tracked pair marked.
convergence  tracked pair under truncation refinement (repeat --trunc).

Exit codes: 0 success, 1 verification mismatch, 2 usage/config error,
3 numerical failure (tracking loss, unresolved isola).

Output is CSV (default) or JSON via --format, to stdout or --out; floats are
printed with 17 significant digits so files round-trip exactly.  Options are
resolved as flags > --config JSON file > built-in defaults.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass, fields
from typing import Optional, Sequence, TextIO

import numpy as np

from . import floquet, instability, jets
from .basis import Mode
from .entanglement import (
    JetIndex,
    chain_apply,
    chain_bracket,
    ent_coeff,
    op_bracket_right,
    residue,
    residue_contour,
)
from .stokes import omega

_S3 = math.sqrt(3.0)
_S5 = math.sqrt(5.0)


# ----------------------------------------------------------- configuration


@dataclass
class SweepConfig:
    """Resolved options shared by the computing subcommands."""

    eps: tuple[float, ...] = (0.06,)
    mu: float = 0.25
    mu_center: Optional[float] = None
    mu_width: Optional[float] = None
    samples: int = 25
    trunc: tuple[int, ...] = (32,)
    stokes_order: int = 4
    format: str = "csv"
    out: Optional[str] = None
    tol: float = 1e-12

    def validate(self) -> None:
        if self.samples < 2:
            raise ValueError(f"samples must be >= 2, got {self.samples}")
        for e in self.eps:
            if e < 0:
                raise ValueError(f"eps must be nonnegative, got {e}")
        for n in self.trunc:
            if n < 8:
                raise ValueError(f"trunc must be >= 8, got {n}")
        if not 0 <= self.stokes_order <= 4:
            raise ValueError(f"stokes-order must be in 0..4, got {self.stokes_order}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.format!r}")
        if self.tol <= 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if self.mu_width is not None and self.mu_width <= 0:
            raise ValueError(f"mu-width must be positive, got {self.mu_width}")

    def echo(self) -> dict:
        return {
            "eps": list(self.eps),
            "mu": self.mu,
            "mu_center": self.mu_center,
            "mu_width": self.mu_width,
            "samples": self.samples,
            "trunc": list(self.trunc),
            "stokes_order": self.stokes_order,
            "format": self.format,
            "out": self.out,
            "tol": self.tol,
        }


_LIST_FIELDS = {"eps": float, "trunc": int}


def resolve_config(args: argparse.Namespace) -> SweepConfig:
    """Defaults, overlaid by the --config file, overlaid by explicit flags."""
    values = {f.name: getattr(SweepConfig, f.name) for f in fields(SweepConfig)}
    path = getattr(args, "config", None)
    if path:
        with open(path) as fh:
            raw = json.load(fh)
        if not isinstance(raw, dict):
            raise ValueError(f"config file {path} must hold a JSON object")
        known = {f.name for f in fields(SweepConfig)}
        for key, val in raw.items():
            if key not in known:
                raise ValueError(f"unknown config key {key!r} in {path}")
            if key in _LIST_FIELDS:
                cast = _LIST_FIELDS[key]
                seq = val if isinstance(val, (list, tuple)) else [val]
                values[key] = tuple(cast(v) for v in seq)
            else:
                values[key] = val
    for f in fields(SweepConfig):
        flag = getattr(args, f.name, None)
        if flag is not None:
            if f.name in _LIST_FIELDS:
                values[f.name] = tuple(flag)
            else:
                values[f.name] = flag
    cfg = SweepConfig(**values)
    cfg.validate()
    return cfg


# ----------------------------------------------------------------- writers


def _g17(x: float) -> str:
    return "%.17g" % x


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return _g17(value)
    return str(value)


def _emit(cfg: SweepConfig, header: Sequence[str], rows: Sequence[Sequence], payload_key: str) -> None:
    """Write rows as CSV (header + data) or JSON (config echo + row dicts)."""

    def write(stream: TextIO) -> None:
        if cfg.format == "csv":
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_cell(v) for v in row])
        else:
            doc = {
                "config": cfg.echo(),
                payload_key: [dict(zip(header, row)) for row in rows],
            }
            json.dump(doc, stream, indent=2, allow_nan=True)
            stream.write("\n")

    if cfg.out:
        with open(cfg.out, "w") as fh:
            write(fh)
    else:
        write(sys.stdout)


# ------------------------------------------------------------------ verify


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return _g17(z.real)
    return f"{_g17(z.real)}{'+' if z.imag >= 0 else '-'}{_g17(abs(z.imag))}j"


def _verify_rows() -> list[tuple[str, complex, complex]]:
    """(name, expected, computed) for every check in the self-test table."""
    ledger = jets.term_ledger()
    jet = jets.assemble_reduced_jet()

    expected_terms: dict[str, complex] = {
        "alpha2.a": -15 / 8,
        "alpha2.b": -15 / 8,
        "alpha2.c": 39 / 8,
        "beta1.a": 0.0,
        "beta1.b": 0.0,
        "gamma2.a": 7 / 8,
        "gamma2.b": -3 / 16,
        "gamma2.c": -5 / 8,
        "beta2.theta": -1j * _S3 / 3,
        "beta2.i": 1j * _S3 / 12,
        "beta2.ii": 1j * _S3 / 4,
        "beta2.iiia": 1j * _S3 / 4,
        "beta2.iiib": 1j * _S3 / 2,
        "beta2.iiic": -5j * _S3 / 16,
        "beta2.iiid": -15j * _S3 / 16,
        "beta2.iva": -1j * _S3 / 12,
        "beta2.ivb": -5j * _S3 / 48,
        "beta2.ivc": -5j * _S3 / 16,
        "beta3.theta": 0.0,
        "beta3.i": 5j * _S3 / 32,
        "beta3.ii": -9j * _S3 / 32,
        "beta3.iiia": 3j * _S3 / 8,
        "beta3.iiib": 15j * _S3 / 32,
        "beta3.iiib_dual": -15j * _S3 / 128,
        "beta3.iva": -1j * _S3 / 8,
        "beta3.ivb": 3j * _S3 / 64,
        "beta3.ivb_dual": 3j * _S3 / 64,
        "beta3.ivc": 5j * _S3 / 64,
        "beta3.ivc_dual": 5j * _S3 / 64,
        "beta3.va": -5j * _S3 / 32,
        "beta3.vb": -25j * _S3 / 128,
        "beta3.vc": 5j * _S3 / 32,
        "beta3.vc_dual": -15j * _S3 / 128,
        "beta3.vd": 15j * _S3 / 64,
        "beta3.ve": 15j * _S3 / 64,
        "beta3.ve_dual": 15j * _S3 / 64,
        "beta3.vf": -75j * _S3 / 256,
        "beta3.vg": 25j * _S3 / 256,
        "beta3.vh": 0.0,
        "beta3.via": 0.0,
        "beta3.vib": 0.0,
        "beta3.vic": -39j * _S3 / 64,
        "beta3.vic_dual": -39j * _S3 / 64,
        "beta3.vid": 195j * _S3 / 256,
        "beta3.loop_up": 5j * _S3 / 16,
        "beta3.loop_down": 5j * _S3 / 16,
        "beta3.loopback": -305j * _S3 / 512,
    }
    rows: list[tuple[str, complex, complex]] = []
    for name in ledger:
        rows.append((f"term.{name}", expected_terms[name], ledger[name]))

    rows += [
        ("coeff.alpha2=9/8", 9 / 8, jet.alpha2),
        ("coeff.beta1=0", 0.0, jet.beta1),
        ("coeff.gamma2=1/16", 1 / 16, jet.gamma2),
        ("coeff.beta2=-sqrt(3)/6", -_S3 / 6, jet.beta2),
        ("coeff.beta3=-39*sqrt(3)/512", -39 * _S3 / 512, jet.beta3),
        ("coeff.beta3.projector-route", -39 * _S3 / 512, jets.beta3_projector_route()),
        ("const.T1=4/3", 4 / 3, jet.T1),
        ("const.T2=19/16", 19 / 16, jet.T2),
        ("beta3_eff=beta3-beta2*T2/T1=37*sqrt(3)/512", 37 * _S3 / 512, jet.beta3_eff),
    ]

    curves = instability.critical_curves(jet)
    growth = instability.max_growth_rate(jet, 1.0)
    ell = instability.ellipse(jet, 1.0)
    disc_eps8 = float(instability.discriminant(jet, 0.0, 1.0))
    disc_nu2 = float(
        instability.discriminant(jet, 1.0, 0.0) - instability.discriminant(jet, 0.0, 0.0)
    )
    disc_cross = float(
        instability.discriminant(jet, 1.0, 1.0)
        - disc_eps8
        - disc_nu2
    )
    rows += [
        ("const.mu0-eps2-coeff=-57/64", -57 / 64, float(curves.mu0.coef[2])),
        (
            "const.nu_plus-eps4-coeff=-111*sqrt(3)/1024",
            -111 * _S3 / 1024,
            float(curves.nu_plus.coef[4]),
        ),
        (
            "const.nu_minus-eps4-coeff=111*sqrt(3)/1024",
            111 * _S3 / 1024,
            float(curves.nu_minus.coef[4]),
        ),
        ("const.D-eps8-coeff=4107/65536", 4107 / 65536, disc_eps8),
        ("const.D-nu2-coeff=-16/9", -16 / 9, disc_nu2),
        ("const.D-nu-eps6-coeff=-37/128", -37 / 128, disc_cross),
        (
            "const.im-center-eps2-coeff=-55/32",
            -55 / 32,
            ell.center_im - jet.omega_star,
        ),
        ("const.re-max-coeff=37*sqrt(3)/512", 37 * _S3 / 512, growth.re_max),
        ("const.nu_re-coeff=-333/4096", -333 / 4096, growth.nu_re),
        ("const.axis-ratio=2", 2.0, ell.axis_ratio),
    ]

    # structural spot-checks, all with closed expected values or exact zeros
    b01 = JetIndex(0, 1)
    b02 = JetIndex(0, 2)
    low, high = Mode(0, -1), Mode(2, +1)
    rows.append(
        (
            "ent[(0,1),+1]((0,-)->(1,+))=i*5^(1/4)*(sqrt(5)-3)/8",
            1j * _S5**0.5 * (_S5 - 3) / 8,
            ent_coeff(b01, +1, low, +1),
        )
    )
    rows.append(
        (
            "conjugation[(0,2),+2]((0,-)->(2,+))",
            0.0,
            ent_coeff(b02, +2, low, +1).conjugate()
            - ent_coeff(b02, -2, high, -1),
        )
    )
    path = [Mode(0, -1), Mode(1, +1), Mode(2, +1)]
    rows.append(
        (
            "residue.permutation[(0,-),(1,+),(2,+)]",
            0.0,
            residue(path) - residue(list(reversed(path))),
        )
    )
    rows.append(
        (
            "residue.contour[(0,-),(1,-)]",
            0.0,
            residue([Mode(0, -1), Mode(1, -1)])
            - residue_contour([Mode(0, -1), Mode(1, -1)]),
        )
    )
    left = chain_bracket([(b01, +1), (b01, +1)], low, high)
    right = op_bracket_right((b01, +1), low, chain_apply([(b01, -1)], high))
    rows.append(("dual-bracket[(0,1)+1;(0,1)+1]", 0.0, left - right))

    op = floquet.build(0.3, 0.0, N=16)
    eigs = np.linalg.eigvals(op.matrix)
    dev = 0.0
    for j in range(-16, 17):
        for sg in (+1, -1):
            target = 1j * omega(j, sg, 0.3)
            dev = max(dev, float(np.min(np.abs(eigs - target))))
    rows.append(("oracle.flat-exactness[N=16,mu=0.3]", 0.0, dev))

    op = floquet.build(0.27, 0.08, N=16)
    dim = op.matrix.shape[0] // 2
    s = np.concatenate([np.ones(dim), -np.ones(dim)])
    resid = s[:, None] * op.matrix * s[None, :] + np.conj(op.matrix)
    rows.append(("oracle.reversibility[N=16,eps=0.08]", 0.0, float(np.max(np.abs(resid)))))
    return rows


def cmd_verify(cfg: SweepConfig, perturb: Optional[str]) -> int:
    rows = _verify_rows()
    if perturb is not None:
        hit = False
        bumped = []
        for name, exp, got in rows:
            if perturb in name:
                got = got + (1e-6 + 1e-6 * abs(exp))
                hit = True
            bumped.append((name, exp, got))
        rows = bumped
        if not hit:
            print(f"error: --perturb {perturb!r} matches no check name", file=sys.stderr)
            return 2
    failures = 0
    table = []
    for name, exp, got in rows:
        err = abs(complex(got) - complex(exp))
        ok = err <= cfg.tol
        failures += 0 if ok else 1
        table.append((name, exp, got, err, "pass" if ok else "FAIL"))
        print(
            f"{'pass' if ok else 'FAIL'}  {name:<52s} expected={_fmt_complex(complex(exp)):<26s} "
            f"computed={_fmt_complex(complex(got)):<26s} |err|={err:.3e}"
        )
    print(
        f"{len(rows) - failures}/{len(rows)} checks passed"
        + (f", {failures} FAILED" if failures else "")
    )
    if cfg.out:
        header = ["name", "expected_re", "expected_im", "computed_re", "computed_im", "abs_err", "status"]
        out_rows = [
            [n, complex(e).real, complex(e).imag, complex(g).real, complex(g).imag, err, st]
            for n, e, g, err, st in table
        ]
        _emit(cfg, header, out_rows, "checks")
    return 1 if failures else 0


# ------------------------------------------------------------------ coeffs


def cmd_coeffs(cfg: SweepConfig) -> int:
    jet = jets.assemble_reduced_jet()
    curves = instability.critical_curves(jet)
    rows: list[list] = []
    for name, value in [
        ("alpha1", jet.alpha1),
        ("gamma1", jet.gamma1),
        ("alpha2", jet.alpha2),
        ("gamma2", jet.gamma2),
        ("beta1", jet.beta1),
        ("beta2", jet.beta2),
        ("beta3", jet.beta3),
        ("T1", jet.T1),
        ("T2", jet.T2),
        ("beta3_eff", jet.beta3_eff),
        ("mu_star", jet.mu_star),
        ("omega_star", jet.omega_star),
        ("mu0_eps2_coeff", float(curves.mu0.coef[2])),
        ("nu_plus_eps4_coeff", float(curves.nu_plus.coef[4])),
        ("nu_minus_eps4_coeff", float(curves.nu_minus.coef[4])),
    ]:
        rows.append([name, value, 0.0])
    for name, value in jets.term_ledger().items():
        rows.append([f"term.{name}", value.real, value.imag])
    _emit(cfg, ["name", "re", "im"], rows, "coefficients")
    return 0


# ------------------------------------------------------------------- isola


def _theory_rows(jet, curves, eps: float, samples: int) -> list[list]:
    nu_lo = float(curves.nu_plus(eps))
    nu_hi = float(curves.nu_minus(eps))
    mu0 = float(curves.mu0(eps))
    rows = []
    for nu in np.linspace(nu_lo, nu_hi, samples):
        mu = mu0 + float(nu)
        pair = instability.eigenvalues(jet, mu, eps)
        rows.append(
            [
                eps,
                mu,
                pair.lambda_plus.real,
                pair.lambda_plus.imag,
                pair.lambda_minus.real,
                pair.lambda_minus.imag,
                "theory",
                pair.regime,
            ]
        )
    return rows


def _oracle_rows(cfg: SweepConfig, eps: float, meas) -> list[list]:
    # default window: centered on the *measured* isola — the closed-form
    # center is itself only accurate to the isola's own width
    center = cfg.mu_center if cfg.mu_center is not None else meas.mu_at_max
    width = cfg.mu_width if cfg.mu_width is not None else 3.0 * meas.mu_width
    if width <= 0:
        width = 1e-9
    grid = np.linspace(center - width / 2, center + width / 2, cfg.samples)
    rows = []
    for pt in floquet.trace_isola(
        eps, grid, N=cfg.trunc[-1], stokes_order=cfg.stokes_order
    ):
        if pt.error is None:
            rows.append(
                [
                    eps,
                    pt.mu,
                    pt.lambda_plus.real,
                    pt.lambda_plus.imag,
                    pt.lambda_minus.real,
                    pt.lambda_minus.imag,
                    "oracle",
                    "ok",
                ]
            )
        else:
            rows.append(
                [eps, pt.mu, None, None, None, None, "oracle", f"tracking-failed: {pt.error}"]
            )
    return rows


def cmd_isola(cfg: SweepConfig) -> int:
    jet = jets.assemble_reduced_jet()
    curves = instability.critical_curves(jet)
    header = ["eps", "mu", "re_plus", "im_plus", "re_minus", "im_minus", "source", "status"]
    rows: list[list] = []
    for eps in cfg.eps:
        rows += _theory_rows(jet, curves, eps, cfg.samples)
        meas = floquet.measure_isola(eps, N=cfg.trunc[-1], stokes_order=cfg.stokes_order)
        rows += _oracle_rows(cfg, eps, meas)

        growth = instability.max_growth_rate(jet, eps)
        ell = instability.ellipse(jet, eps)
        th_center = float(curves.mu0(eps)) + growth.nu_re
        th_width = curves.width(eps)
        rows.append(
            [
                eps,
                th_center,
                growth.re_max,
                ell.center_im,
                -growth.re_max,
                ell.center_im,
                "summary-theory",
                f"width={_g17(th_width)}",
            ]
        )
        re_dev = abs(meas.re_max - growth.re_max) / abs(growth.re_max)
        im_dev = abs(meas.im_center - ell.center_im)
        width_dev = abs(meas.mu_width - th_width) / abs(th_width)
        rows.append(
            [
                eps,
                meas.mu_at_max,
                meas.re_max,
                meas.im_center,
                -meas.re_max,
                meas.im_center,
                "summary-oracle",
                f"width={_g17(meas.mu_width)};re_dev={re_dev:.3e};"
                f"im_dev={im_dev:.3e};width_dev={width_dev:.3e}",
            ]
        )
    _emit(cfg, header, rows, "curves")
    return 0


# ---------------------------------------------------------------- spectrum


def cmd_spectrum(cfg: SweepConfig) -> int:
    if cfg.mu >= 0.5:
        print(
            f"warning: mu={cfg.mu} lies outside the fundamental Floquet window "
            "[0, 0.5); computing anyway",
            file=sys.stderr,
        )
    eps = cfg.eps[-1]
    op = floquet.build(cfg.mu, eps, N=cfg.trunc[-1], stokes_order=cfg.stokes_order)
    try:
        sample = floquet.spectrum(op)
        tracked = set()
        if sample.tracked_pair is not None:
            tracked = {complex(z) for z in sample.tracked_pair}
        eigs = sample.eigenvalues
    except floquet.TrackingFailure as exc:
        print(f"warning: {exc}", file=sys.stderr)
        tracked = set()
        eigs = np.linalg.eigvals(op.matrix)
    order = np.lexsort((eigs.real, eigs.imag))
    rows = [
        [float(z.real), float(z.imag), 1 if complex(z) in tracked else 0]
        for z in eigs[order]
    ]
    _emit(cfg, ["re", "im", "tracked"], rows, "eigenvalues")
    return 0


# ------------------------------------------------------------- convergence


def cmd_convergence(cfg: SweepConfig) -> int:
    n_list = cfg.trunc if len(cfg.trunc) > 1 else (16, 24, 32, 48)
    eps = cfg.eps[-1]
    rows = []
    for row in floquet.convergence_check(cfg.mu, eps, n_list, cfg.stokes_order):
        rows.append(
            [
                row.N,
                row.lambda_plus.real,
                row.lambda_plus.imag,
                row.lambda_minus.real,
                row.lambda_minus.imag,
                row.delta,
            ]
        )
    _emit(
        cfg,
        ["N", "re_plus", "im_plus", "re_minus", "im_minus", "delta_prev"],
        rows,
        "refinement",
    )
    return 0


# -------------------------------------------------------------------- main


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON file with option defaults")
    p.add_argument("--eps", action="append", type=float, help="wave amplitude (repeatable)")
    p.add_argument("--mu", type=float, help="Floquet exponent")
    p.add_argument("--mu-center", dest="mu_center", type=float, help="center of the mu window")
    p.add_argument("--mu-width", dest="mu_width", type=float, help="full width of the mu window")
    p.add_argument("--samples", type=int, help="points per curve (>= 2)")
    p.add_argument(
        "--trunc",
        action="append",
        type=int,
        help="harmonic truncation N (repeatable; convergence uses the whole list)",
    )
    p.add_argument("--stokes-order", dest="stokes_order", type=int, help="profile expansion order (0..4)")
    p.add_argument("--format", choices=("csv", "json"), help="output format")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--tol", type=float, help="comparison tolerance for verify")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stokes-isola",
        description="High-frequency instability isola of small-amplitude deep-water waves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run the hermetic self-check table")
    _add_common(p_verify)
    p_verify.add_argument(
        "--perturb",
        help="inject an offset into checks whose name contains this string (negative control)",
    )

    for name, help_text in [
        ("coeffs", "emit jet coefficients and the intermediate-term ledger"),
        ("isola", "closed-form curve vs truncated-eigenproblem trace"),
        ("spectrum", "full truncated spectrum at one (mu, eps)"),
        ("convergence", "tracked pair under truncation refinement"),
    ]:
        _add_common(sub.add_parser(name, help=help_text))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "verify":
            return cmd_verify(cfg, args.perturb)
        if args.command == "coeffs":
            return cmd_coeffs(cfg)
        if args.command == "isola":
            return cmd_isola(cfg)
        if args.command == "spectrum":
            return cmd_spectrum(cfg)
        if args.command == "convergence":
            return cmd_convergence(cfg)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (floquet.TrackingFailure, ValueError, ArithmeticError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
