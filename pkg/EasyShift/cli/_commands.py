# Copyright (C) 2026 The EasyShift developers.
# This file is part of the EasyShift project.
# EasyShift is distributed under the terms of the GNU General Public License v3 or later, see LICENSE.txt and CREDITS.md for more information.

"""Batch commands: analyze, shadow, report and list."""

import argparse
import json
from typing import Optional

import numpy as np
import pandas as pd

# utilities
from ..utilities import Display, Folder, Tic, Load_json, Save_json, To_builtin
# linalg
from ..linalg import (EasyShiftError, ConfigError, DimensionError, ZeroVectorError,
                      RefusalError, VerificationError)
# spaces
from ..spaces import SeqPoint, Random_point, Seq_norm
# classify
from ..classify import Certification, ClassificationVerdict, Classify, Build_conjugacy, Projection_bound
# shadow
from ..shadow import (ShadowingCertificate, Shadowing_verdict, Hyperbolicity_verdict, Factor_property_check,
                      Defects_from_pseudo_orbit, Defect_suite, Solve_shadowing, Shadow_pseudo_orbit,
                      Orbit_residual, Realized_K, Window_oracle, Oracle_agreement)
# scenarios
from ..scenarios import (Scenario, Builtin_names, Catalog_document, Frames_in_cones,
                         Jordan_iterate_residual, Jordan_skew_residual)
from ._config import RunConfig, Merge_config
from ._report import Report, Aggregate_reports, Save_csv, REPORT_EXTENSION

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CONFIG = 2
EXIT_REFUSAL = 3
EXIT_VERIFICATION = 4
EXIT_IO = 5

ORACLE_TOL = 1e-8
"""agreement expected between the series solver and the window oracle"""
PROJECTION_TOL = 0.05
"""relative gap allowed between measured and predicted projection bounds"""
JORDAN_WINDOWS = (10, 50, 100)

def Exit_code(error: BaseException) -> int:
    """Exit code of an error raised by a command."""
    if isinstance(error, (ConfigError, DimensionError, ZeroVectorError)):
        return EXIT_CONFIG
    if isinstance(error, RefusalError):
        return EXIT_REFUSAL
    if isinstance(error, VerificationError):
        return EXIT_VERIFICATION
    if isinstance(error, (OSError, json.JSONDecodeError)):
        return EXIT_IO
    return EXIT_ERROR

# ----------------------------------------------
# Pipeline
# ----------------------------------------------

def _Resolved(config: RunConfig, scenario: Scenario) -> tuple[tuple[int, int], int, int]:
    window = scenario.window if config.window is None else config.window
    nMax = scenario.nMax if config.n_max is None else config.n_max
    kMax = scenario.kMax if config.k_max is None else config.k_max
    if not 1 <= nMax <= 2*kMax + 1:
        raise ConfigError(f"n_max = {nMax} must be in [1, 2 k_max + 1] with k_max = {kMax}")
    return window, nMax, kMax

def _Weight_range(scenario: Scenario, basis: np.ndarray, window: tuple[int, int]) -> list[dict]:
    """min and max of the frame weights of each seed over the window, n = 0 excluded."""
    a, b = window
    n = np.arange(a, b+1)
    ranges = []
    for x in basis:
        weights = scenario.S.Frame(x).Weights(a, b)[n != 0]
        ranges.append({"min": float(weights.min()), "max": float(weights.max())})
    return ranges

def _Scenario_checks(report: Report, scenario: Scenario, verdict: ClassificationVerdict,
                     window: tuple[int, int], config: RunConfig) -> None:
    """Scenario specific diagnostics (informative, they do not change the exit code)."""

    S = scenario.S
    params = scenario.params

    if "predicted_projection_bound" in params:
        measured = Projection_bound(S, scenario.bases[0], window)
        predicted = params["predicted_projection_bound"]
        gap = abs(measured - predicted) / predicted
        report.checks["projection_bound"] = {"measured": measured, "predicted": predicted,
                                             "relative_gap": gap, "within_tolerance": bool(gap <= PROJECTION_TOL),
                                             "printed": params["printed_bound"]}
        report.disclosures["projection_bound"] = (f"1/(4 delta) = {params['printed_bound']:.6g} is not attained, "
                                                  f"the Gram matrix predicts {predicted:.6g}")

    if scenario.name == "jordan_skew":
        rng = np.random.default_rng(config.seed)
        pts = [Random_point(rng, (a, a+5), 2, config.p) for a in rng.integers(-10, 10, size=5)]
        report.residuals["jordan_iterate"] = Jordan_iterate_residual(S, pts[0])
        report.residuals["jordan_skew"] = Jordan_skew_residual(S, pts)
        report.checks["jordan_projection_bounds"] = {str(N): Projection_bound(S, scenario.bases[0], (-N, N))
                                                     for N in JORDAN_WINDOWS}

    if "v_plus" in params and "C+" in scenario.cones:
        inside, worst = Frames_in_cones(S, params["v_plus"], scenario.cones["C+"], window)
        report.checks["frames_in_cone_plus"] = {"inside": inside, "largest_angle": worst}
        inside, worst = Frames_in_cones(S, params["v_minus"], scenario.cones["C-"], window)
        report.checks["frames_in_cone_minus"] = {"inside": inside, "largest_angle": worst}

    if verdict.basis is not None:
        report.checks["weights"] = _Weight_range(scenario, verdict.basis, window)

    if "zeta_caveat" in params:
        report.disclosures["precision"] = params["zeta_caveat"]

def _Condition_checks(report: Report, scenario: Scenario, certificate: ShadowingCertificate) -> None:
    """Compares the conditions fired seed by seed with the recorded ones.

    A printed condition that no seed fires is disclosed and appended to the certificate notes.
    """

    fired = [seed.fired for seed in certificate.perSeed]
    expected = scenario.expected
    if expected is not None and expected.conditions is not None:
        report.checks["conditions"] = {"fired": fired, "expected": list(expected.conditions),
                                       "match": expected.Match_conditions(fired)}

    printed = scenario.params.get("printed_condition")
    if printed is not None and printed not in fired:
        note = (f"condition ({printed}) pairs the contraction of one seed with the expansion of the other, "
                f"seed by seed the fired conditions are {', '.join(str(f) for f in fired)}")
        certificate.notes.append(note)
        report.disclosures["conditions"] = note

def _Run_pipeline(report: Report, scenario: Scenario, config: RunConfig,
                  window: tuple[int, int], nMax: int, kMax: int, verbosity: bool) -> None:

    S = scenario.S

    verdict = Classify(S, scenario.bases, window, config.tol, verbosity)
    report.classification = To_builtin(verdict.To_dict())
    if verdict.certification == Certification.window:
        report.disclosures["window_certified"] = f"statements for all n are checked on [{window[0]}, {window[1]}] only"

    _Scenario_checks(report, scenario, verdict, window, config)

    if not verdict.isCertified:
        raise RefusalError(f"{S.name}: no criterion certifies bounded projections on [{window[0]}, {window[1]}]")

    bundle = Build_conjugacy(S, verdict=verdict, verbosity=verbosity)
    residuals = bundle.Verify(config.n_probes, config.seed)
    conjugacy = bundle.To_dict()
    conjugacy.update({"p": config.p, "K_p": bundle.Kp(config.p), "K_p_printed": bundle.Kp_printed(config.p),
                      "norm_ratio_I": residuals["normI"], "norm_ratio_I_inverse": residuals["normInverse"]})
    report.conjugacy = To_builtin(conjugacy)
    for name in ["factor", "conjugacy", "roundtrip", "surjectivity"]:
        report.residuals[f"conjugacy_{name}"] = residuals[name]

    if verdict.diagonalization is not None:
        rng = np.random.default_rng(config.seed)
        probes = [Random_point(rng, (a, a+5), S.dim, config.p) for a in rng.integers(-10, 10, size=5)]
        report.residuals["diagonal_conjugacy"] = verdict.diagonalization.Conjugacy_residual(probes)

    bundle.Assert_verified(residuals, config.tol)

    report.hyperbolicity = [str(Hyperbolicity_verdict(w, nMax, kMax)) for w in bundle.weights]

    certificate = Shadowing_verdict(S, nMax=nMax, kMax=kMax, bundle=bundle, verbosity=verbosity)
    report.checks["factor_property"] = Factor_property_check(certificate)
    for i, note in enumerate(certificate.notes):
        report.disclosures[f"ladder_{i}"] = note
    _Condition_checks(report, scenario, certificate)
    report.shadowing = To_builtin(certificate.To_dict())

    if not certificate.verdict:
        return

    half = config.suite_half_window
    suite = Defect_suite(S.dim, config.suite_steps, (-half, half), config.suite_instances, config.seed, config.p)
    Realized_K(certificate, suite, config.tol)

    defects = suite[min(1, len(suite)-1)]
    orbit, _ = Solve_shadowing(certificate, defects, config.tol)
    report.residuals["orbit"] = Orbit_residual(S, orbit, defects)
    oracle = Window_oracle(certificate, defects)
    gap = Oracle_agreement(orbit, oracle)
    report.checks["oracle_agreement"] = gap
    if gap > ORACLE_TOL:
        report.disclosures["oracle"] = f"series and window solvers differ by {gap:.3e} on interior times"

    report.checks["realized_within_K"] = bool(certificate.realizedK <= certificate.K)
    report.shadowing = To_builtin(certificate.To_dict())

def Analyze(config: RunConfig, verbosity=False) -> Report:
    """Builds the scenario, classifies, conjugates, decides shadowing and runs the residual suite.

    Refusals and tolerance violations are recorded in the report with their exit code.

    Raises
    ------
    ConfigError
        unknown scenario or malformed configuration
    """

    total = Tic()

    scenario = config.Build_scenario()
    window, nMax, kMax = _Resolved(config, scenario)

    effective = config.To_dict()
    effective.update({"window": list(window), "n_max": nMax, "k_max": kMax})
    report = Report(effective, To_builtin(scenario.To_dict()))
    report.disclosures["periodic"] = scenario.S.isPeriodic

    try:
        _Run_pipeline(report, scenario, config, window, nMax, kMax, verbosity)
    except RefusalError as error:
        report.errors.append(f"refusal: {error}")
        report.exitCode = EXIT_REFUSAL
    except VerificationError as error:
        report.errors.append(f"verification: {error}")
        report.exitCode = EXIT_VERIFICATION

    if scenario.expected is not None and report.classification is not None:
        expected = scenario.expected
        report.checks["expected_match"] = bool(expected.Match_criterion(report.criterion)
                                               and bool(report.shadowingVerdict) == expected.shadowing)

    report.wallClock = total.Tac("Cli", f"Analyze {scenario.name}")

    return report

def Certify(config: RunConfig, verbosity=False) -> tuple[Scenario, ShadowingCertificate]:
    """Scenario and its shadowing certificate.

    Raises
    ------
    RefusalError
        without classification or when the certificate is false
    """

    scenario = config.Build_scenario()
    window, nMax, kMax = _Resolved(config, scenario)
    verdict = Classify(scenario.S, scenario.bases, window, config.tol, verbosity)
    certificate = Shadowing_verdict(scenario.S, nMax=nMax, kMax=kMax, verdict=verdict, verbosity=verbosity)
    if not certificate.verdict:
        raise RefusalError(f"{scenario.name}: the shadowing certificate is false, no orbit is computed")
    return scenario, certificate

# ----------------------------------------------
# Points files
# ----------------------------------------------

def Read_points(dct, dim: int) -> tuple[str, list[SeqPoint]]:
    """Reads {"kind": "defects" | "pseudo_orbit", "points": [SeqPoint dicts]} (a bare list holds defects).

    Raises
    ------
    ConfigError
        malformed document
    """

    if isinstance(dct, list):
        dct = {"kind": "defects", "points": dct}
    if not isinstance(dct, dict):
        raise ConfigError("a points file holds a list or a {kind, points} object")

    kind = dct.get("kind", "defects")
    if kind not in ("defects", "pseudo_orbit"):
        raise ConfigError(f"kind must be 'defects' or 'pseudo_orbit' (got {kind})")

    try:
        points = [SeqPoint.From_dict(pt, dim) for pt in dct["points"]]
    except (KeyError, TypeError, ValueError) as error:
        raise ConfigError(f"malformed points: {error}")

    if len(points) < (2 if kind == "pseudo_orbit" else 1):
        raise ConfigError(f"not enough points for {kind}")
    if any(pt.dim != dim for pt in points):
        raise DimensionError(f"points must have fiber dimension {dim}")

    return kind, points

def Write_points(points: list[SeqPoint], folder: str, filename: str, kind="defects", verbosity=True) -> str:
    return Save_json({"kind": kind, "points": [pt.To_dict() for pt in points]}, folder, filename, verbosity)

# ----------------------------------------------
# Commands
# ----------------------------------------------

def _Emit(report: Report, config: RunConfig, verbosity: bool) -> None:
    report.Save(config.output, verbosity and config.format != "json")
    if config.format == "json":
        print(report.Dumps())
    elif config.format == "csv":
        Save_csv(pd.DataFrame([report.Row()]), Folder.Join(config.output, f"{report.name}.csv"), verbosity)
    else:
        report.Summary(verbosity)

def Cmd_analyze(config: RunConfig, verbosity=True) -> int:
    """Runs the analysis of one scenario (or of every built-in scenario with "all")."""

    if config.scenario == "all":
        codes = [Cmd_analyze(config.With_scenario(name), verbosity) for name in Builtin_names()]
        return max(codes)

    report = Analyze(config, verbosity and config.format == "text")
    _Emit(report, config, verbosity)

    if verbosity and config.format == "text":
        Tic.Resume()

    return report.exitCode

def Cmd_shadow(config: RunConfig, file: str, verbosity=True) -> int:
    """Solves the defect equation for the defects (or the pseudo-orbit) of file and writes the orbit."""

    tic = Tic()

    dct = Load_json(file, verbosity)
    scenario, certificate = Certify(config)
    S = scenario.S
    kind, points = Read_points(dct, S.dim)

    if kind == "pseudo_orbit":
        defects = Defects_from_pseudo_orbit(S, points)
        orbit, realized = Shadow_pseudo_orbit(certificate, points, config.tol)
        residual = Orbit_residual(S, orbit, [0.0 * z for z in defects])
    else:
        defects = points
        orbit, realized = Solve_shadowing(certificate, defects, config.tol)
        residual = Orbit_residual(S, orbit, defects)

    supDefect = max(Seq_norm(z, S.norm) for z in defects)
    dct = {"kind": kind, "scenario": scenario.name, "input": file, "config": config.To_dict(),
           "points": [pt.To_dict() for pt in orbit],
           "realized_K": realized, "K": certificate.K, "residual": residual, "sup_defect": supDefect}
    Save_json(dct, config.output, f"{scenario.name}.orbit.json", verbosity)

    tic.Tac("Cli", f"Cmd_shadow {scenario.name}")

    items = {"scenario": scenario.name, "input": kind, "steps": len(defects),
             "sup defect": supDefect, "realized K": realized, "K": certificate.K, "residual": residual}
    Display.Print_summary("EasyShift: shadow", items, verbosity)

    return EXIT_OK

def Cmd_report(folder: str, output: Optional[str]=None, verbosity=True) -> int:
    """Aggregates the reports of folder in a CSV file (folder/summary.csv by default)."""

    if not Folder.Exists(folder):
        raise FileNotFoundError(f"{folder} does not exist")

    df, skipped = Aggregate_reports(folder, verbosity)
    file = Folder.Join(folder, "summary.csv") if output is None else output
    Save_csv(df, file, verbosity)

    if verbosity:
        Display.MyPrint(f"{len(df)} reports aggregated, {len(skipped)} skipped", "cyan")

    return EXIT_OK

def Cmd_list(verbosity=True) -> int:
    """Prints the built-in scenarios and their expected verdicts."""
    document = Catalog_document()
    items = {name: f"{', '.join(dct['criteria'])} / shadowing {'yes' if dct['shadowing'] else 'no'} ({dct['location']})"
             for name, dct in document.items()}
    Display.Print_summary("EasyShift: built-in scenarios", items, verbosity)
    return EXIT_OK

# ----------------------------------------------
# main
# ----------------------------------------------

def _Add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--scenario", help=f"built-in name ({', '.join(Builtin_names())}) or 'all'")
    parser.add_argument("--config", help="JSON run configuration, overridden by the flags")
    parser.add_argument("--window", type=int, help="half-width N of the certification window [-N, N]")
    parser.add_argument("--nmax", dest="n_max", type=int, help="largest ladder length n")
    parser.add_argument("--kmax", dest="k_max", type=int, help="ladder sup/inf range [1, k_max]")
    parser.add_argument("--p", help="sequence exponent (>= 1 or inf)")
    parser.add_argument("--tol", type=float, help="residual tolerance")
    parser.add_argument("--seed", type=int, help="probe and defect suite seed")
    parser.add_argument("--output", help=f"output folder, by default {Folder.Short_name(Folder.RESULTS_DIR)}")
    parser.add_argument("--format", choices=["json", "csv", "text"])

def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="easyshift",
        description="Classification, conjugacy and shadowing of shift operators generated by matrix sequences.",
    )
    parser.add_argument("--quiet", action="store_true", help="no terminal output besides json documents")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="full pipeline on a scenario, writes a JSON report")
    _Add_run_flags(analyze)

    shadow = commands.add_parser("shadow", help="shadows a pseudo-orbit (or solves a defect sequence)")
    _Add_run_flags(shadow)
    shadow.add_argument("--input", required=True, help="JSON points file")

    report = commands.add_parser("report", help=f"aggregates the *{REPORT_EXTENSION} files of a folder in a CSV file")
    report.add_argument("folder")
    report.add_argument("--output", help="CSV file, by default folder/summary.csv")

    commands.add_parser("list", help="built-in scenarios")

    return parser.parse_args(argv)

def main(argv: list[str] | None = None) -> int:
    args = _parse_args(argv)
    verbosity = not args.quiet

    try:
        if args.command == "list":
            return Cmd_list(verbosity)
        if args.command == "report":
            return Cmd_report(args.folder, args.output, verbosity)

        flags = {key: getattr(args, key) for key in ["scenario", "window", "n_max", "k_max", "p",
                                                     "tol", "seed", "output", "format"]}
        config = Merge_config(args.config, flags, verbosity)
        if args.command == "analyze":
            return Cmd_analyze(config, verbosity)
        return Cmd_shadow(config, args.input, verbosity)

    except Exception as error:
        code = Exit_code(error)
        if code == EXIT_ERROR and not isinstance(error, EasyShiftError):
            raise
        Display.MyPrintError(f"{type(error).__name__}: {error}")
        return code

if __name__ == "__main__":
    raise SystemExit(main())
