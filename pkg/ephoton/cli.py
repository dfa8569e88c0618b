#   ephoton -- Photon-electron entanglement in a highly excited radiation mode
#   Copyright (C) 2019  The ephoton developers
#
#   This program is free software: you can redistribute it and/or modify
#   it under the terms of the GNU General Public License as published by
#   the Free Software Foundation, either version 3 of the License, or
#   (at your option) any later version.
#
#   This program is distributed in the hope that it will be useful,
#   but WITHOUT ANY WARRANTY; without even the implied warranty of
#   MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#   GNU General Public License for more details.
#
#   You should have received a copy of the GNU General Public License
#   along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""
Command line interface writing the figure datasets, the laser table, the
consistency matrix report and Jackiw states. Every invocation leaves a
manifest.json in the output directory listing the files it wrote.
"""

import argparse
import os
import sys
import warnings

import numpy as np

from nengo.exceptions import ValidationError

from . import density, entangled, params, phase, verify
from . import version
from .common import NoRootError, TruncationError
from .internal.io import FORMATS, RunManifest, write_json, write_table
from .internal.parallel import default_threads

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2

FIG1_KS = (0, 1, 5, 25)
FIG1_DRIVE = 2.0
FIG1_GRID = np.linspace(0.0, 8.0, 161)

FIG2_DRIVE = 4.0
FIG2_X = 10.0
FIG2_SLOPES = (0.3, 0.6, 1.0, 1.5)

FIG3_DRIVE = 4.0
FIG3_X_GRID = np.linspace(0.0, 20.0, 81)
FIG3_THETA_GRID = np.linspace(0.0, 40.0, 81)

FIG4_QS = (2.5, 5.0, 25.0, 50.0)

FIG5_INTENSITIES = np.concatenate(((0.0,), np.logspace(10.0, 13.5, 71)))
FIG6_INTENSITIES = np.concatenate(((0.0,), np.logspace(10.0, 15.0, 101)))


def _figure_1(args, cfg, out):
    drive = FIG1_DRIVE if args.drive is None else args.drive
    rows = []
    for k in FIG1_KS:
        grid = entangled.joint_probability_grid(k, FIG1_GRID, FIG1_GRID, drive,
                                                n_threads=args.threads)
        for i, theta in enumerate(FIG1_GRID):
            for j, x in enumerate(FIG1_GRID):
                rows.append((x, theta, k, grid[i, j]))
    return [write_table(os.path.join(out, "fig1"),
                        ("x[w]", "theta[tau]", "k", "prob[1/w^2]"), rows,
                        args.format)]


def _figure_2(args, cfg, out):
    drive = FIG2_DRIVE if args.drive is None else args.drive
    rows = []
    for s in FIG2_SLOPES:
        point = entangled.DetectionPoint(FIG2_X, 0.0, s * FIG2_X)
        profile = entangled.k_profile(point, drive)
        shape = entangled.classify_shape(profile).name
        for k, p in enumerate(profile):
            rows.append((s, k, p, shape))
    return [write_table(os.path.join(out, "fig2"),
                        ("slope", "k", "prob[1/w^2]", "shape"), rows,
                        args.format)]


def _figure_3(args, cfg, out):
    drive = FIG3_DRIVE if args.drive is None else args.drive
    regions = entangled.shape_region_map(FIG3_X_GRID, FIG3_THETA_GRID, drive,
                                         n_threads=args.threads)
    rows = []
    for i, theta in enumerate(FIG3_THETA_GRID):
        for j, x in enumerate(FIG3_X_GRID):
            rows.append((x, theta, int(regions[i, j])))
    lower, upper = entangled.boundary_slopes(FIG2_X, drive)
    return [
        write_table(os.path.join(out, "fig3"),
                    ("x[w]", "theta[tau]", "oscillatory"), rows, args.format),
        write_table(os.path.join(out, "fig3_slopes"),
                    ("x[w]", "lower_slope", "upper_slope"),
                    [(FIG2_X, lower, upper)], args.format),
    ]


def _figure_4(args, cfg, out):
    rows = []
    for q in FIG4_QS:
        dist = density.photon_dist_asymptotic(q)
        rows += [(q, k, w) for k, w in zip(dist.ks, dist.weights)]
    return [write_table(os.path.join(out, "fig4"), ("q", "k", "p_k"), rows,
                        args.format)]


def _entropy_rows(cfg, intensities, with_linear):
    q = params.q_for_intensity(intensities, cfg.photon_energy_eV,
                               cfg.lambda_over_w)
    rows = []
    for intensity, qi in zip(intensities, q):
        row = [intensity, qi, density.von_neumann_photon(qi)]
        if with_linear:
            row.append(density.linear_entropy_photon(qi))
        rows.append(row)
    return rows


def _figure_5(args, cfg, out):
    return [write_table(os.path.join(out, "fig5"),
                        ("intensity[W/cm^2]", "q", "S[nat]"),
                        _entropy_rows(cfg, FIG5_INTENSITIES, False),
                        args.format)]


def _figure_6(args, cfg, out):
    return [write_table(os.path.join(out, "fig6"),
                        ("intensity[W/cm^2]", "q", "S[nat]", "H"),
                        _entropy_rows(cfg, FIG6_INTENSITIES, True),
                        args.format)]


FIGURES = {
    1: _figure_1,
    2: _figure_2,
    3: _figure_3,
    4: _figure_4,
    5: _figure_5,
    6: _figure_6,
}


def cmd_figure(args, cfg, manifest):
    for path in FIGURES[args.n](args, cfg, args.out):
        manifest.add_output(path)
    return EXIT_OK


def cmd_table_b1(args, cfg, manifest):
    rows = []
    for laser in params.laser_table():
        rows.append((laser.name, laser.photon_energy_eV, laser.bandwidth_ratio,
                     laser.coefficient, laser.tabulated,
                     laser.coefficient / laser.tabulated))
    if args.photon_energy is not None or args.bandwidth_ratio is not None:
        custom = cfg.replace(intensity_W_cm2=1.0)
        rows.append(("custom", custom.photon_energy_eV, custom.bandwidth_ratio,
                     params.mean_occupation(custom), None, None))
    manifest.add_output(write_table(
        os.path.join(args.out, "table_b1"),
        ("laser", "photon_energy[eV]", "omega/delta_omega",
         "mean_occupation[1/(W/cm^2)]", "tabulated", "ratio"), rows,
        args.format))
    return EXIT_OK


def _parse_tolerances(items):
    tolerances = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep:
            raise ValueError(
                "Tolerance override {!r} must have the form NAME=VALUE"
                .format(item))
        tolerances[name] = float(value)
    return tolerances


def cmd_verify(args, cfg, manifest):
    results = verify.run_checks(args.level, _parse_tolerances(args.tolerance))
    failed = [r for r in results if not r.passed]
    for r in failed:
        print("FAILED {}: deviation {:.3g} > {:.3g} (oracle: {}) {}".format(
            r.name, r.deviation, r.tolerance, r.oracle, r.message).rstrip())
    manifest.add_output(write_json(
        os.path.join(args.out, "verify.json"), {
            "level": args.level,
            "passed": not failed,
            "checks": [r.to_dict() for r in results],
        }))
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_jackiw(args, cfg, manifest):
    state, prm = phase.jackiw_state(args.gamma, args.branch, args.dim,
                                    args.root)
    ops = phase.build_operators(state.dim)
    c = state.coefficients
    manifest.add_output(write_table(
        os.path.join(args.out, "jackiw_state"),
        ("n", "re", "im", "prob"),
        [(n, a.real, a.imag, abs(a)**2) for n, a in enumerate(c)],
        args.format))
    manifest.add_output(write_table(
        os.path.join(args.out, "jackiw"),
        ("gamma", "branch", "nu", "N_mean", "C_mean", "S_mean", "u1",
         "recursion_residual"),
        [(prm.gamma, prm.branch, prm.nu,
          phase.expectation(ops.N, state).real,
          phase.expectation(ops.C, state).real,
          phase.expectation(ops.S, state).real,
          phase.uncertainty_u1(state),
          phase.recursion_residual(state, prm))],
        args.format))
    return EXIT_OK


def _config(args):
    if args.config is not None:
        cfg = params.PhysicalConfig.from_json(args.config)
    else:
        cfg = params.PhysicalConfig()
    overrides = {
        "intensity_W_cm2": args.intensity,
        "photon_energy_eV": args.photon_energy,
        "lambda_over_w": args.lambda_over_w,
        "n0": args.n0,
        "plasma_ratio": args.plasma_ratio,
        "bandwidth_ratio": args.bandwidth_ratio,
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    return cfg.replace(**overrides) if overrides else cfg


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with a PhysicalConfig")
    common.add_argument("--intensity", type=float, help="W/cm^2")
    common.add_argument("--photon-energy", type=float, help="eV")
    common.add_argument("--lambda-over-w", type=float)
    common.add_argument("--n0", type=int)
    common.add_argument("--plasma-ratio", type=float)
    common.add_argument("--bandwidth-ratio", type=float)
    common.add_argument("--out", default=".", help="Output directory")
    common.add_argument("--format", choices=FORMATS, default="csv")
    common.add_argument("--threads", type=int, default=None,
                        help="Worker processes for grid maps")

    parser = argparse.ArgumentParser(
        prog="ephoton",
        description="Photon-electron entanglement in a highly excited "
                    "radiation mode")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("figure", parents=[common],
                       help="Write the dataset of a figure")
    p.add_argument("n", type=int, choices=sorted(FIGURES))
    p.add_argument("--drive", type=float, default=None,
                   help="Override the figure's mu Lambda / w")
    p.set_defaults(fn=cmd_figure)

    p = sub.add_parser("table-b1", parents=[common],
                       help="Mean occupation coefficients of three lasers")
    p.set_defaults(fn=cmd_table_b1)

    p = sub.add_parser("verify", parents=[common],
                       help="Run the consistency matrix")
    p.add_argument("--level", choices=verify.LEVELS, default=verify.QUICK)
    p.add_argument("--tolerance", action="append", metavar="NAME=VALUE")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("jackiw", parents=[common],
                       help="Write a number-phase minimum uncertainty state")
    p.add_argument("--gamma", type=float, default=1.0)
    p.add_argument("--branch", type=int, default=0)
    p.add_argument("--root", type=int, default=0)
    p.add_argument("--dim", type=int, default=None)
    p.set_defaults(fn=cmd_jackiw)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.threads is None:
        args.threads = default_threads()

    manifest = RunManifest(args.command, version)
    status = EXIT_BAD_INPUT
    try:
        os.makedirs(args.out, exist_ok=True)
        cfg = _config(args)
        manifest.config = cfg.to_dict()
        manifest.derived = params.derive(cfg).to_dict()
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            status = args.fn(args, cfg, manifest)
        for w in caught:
            manifest.messages.append(str(w.message))
            print('Warning: {}'.format(w.message))
    except (ValueError, ValidationError, NoRootError, TruncationError,
            OSError) as e:
        manifest.messages.append("{}: {}".format(type(e).__name__, e))
        print("Error: {}".format(e), file=sys.stderr)
        status = EXIT_BAD_INPUT
    finally:
        manifest.status = {EXIT_OK: "ok", EXIT_CHECK_FAILED: "failed"}.get(
            status, "error")
        try:
            manifest.write(args.out)
        except OSError as e:
            print("Error: cannot write manifest: {}".format(e), file=sys.stderr)
            status = EXIT_BAD_INPUT
    for path in manifest.outputs:
        print(path)
    return status


if __name__ == "__main__":
    sys.exit(main())
