"""Command-line front end.

Subcommands:
    compute     threshold pair of an arrangement (central or affine)
    localize    affine localization report, forced even for central input
    volume-fit  Monte Carlo volume curve plus asymptotic fit
    parse       normalize the input and echo it back as JSON

Exit codes: 0 on success, 1 when --verify finds a mismatch between the
production path and the brute-force oracles (a bug signal), 2 on user or
input errors. All rationals in output are exact "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .arrangement import (
    NormalizedArrangement,
    arrangement_from_csv,
    arrangement_from_json,
    arrangement_to_json_dict,
    normalize,
)
from .errors import RlctError, SizeLimitError
from .oracle import lattice_bruteforce, longest_chain_bruteforce
from .parser import parse_factored_product
from .ratlinalg import as_rational, format_rational
from .threshold import LocalizationReport, RlctResult, rlct_affine, rlct_central
from .volume import estimate_volume, fit_asymptotics, synthetic_samples

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USER_ERROR = 2


def build_arg_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="rlct", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def add_input_flags(p: argparse.ArgumentParser) -> None:
        source = p.add_mutually_exclusive_group(required=True)
        source.add_argument("--input", metavar="FILE", help="JSON or CSV arrangement file")
        source.add_argument("--poly", metavar="STRING", help="inline factored polynomial")
        p.add_argument("--dim", type=int, default=None, help="ambient dimension (CSV files with offsets)")
        p.add_argument(
            "--format", choices=("json", "csv", "human"), default="json", help="output format"
        )

    compute = sub.add_parser("compute", help="compute the threshold pair")
    add_input_flags(compute)
    compute.add_argument("--verify", action="store_true", help="cross-check against brute-force oracles")
    compute.set_defaults(func=cmd_compute)

    localize = sub.add_parser("localize", help="report all maximal central localizations")
    add_input_flags(localize)
    localize.add_argument("--verify", action="store_true", help="cross-check against brute-force oracles")
    localize.set_defaults(func=cmd_localize)

    volume = sub.add_parser("volume-fit", help="Monte Carlo volume curve and asymptotic fit")
    add_input_flags(volume)
    volume.add_argument("--seed", type=int, default=0, help="Philox stream key")
    volume.add_argument("--samples", type=int, default=1_000_000, help="samples per grid point")
    volume.add_argument("--eps-min", type=float, default=1e-6)
    volume.add_argument("--eps-max", type=float, default=1e-2)
    volume.add_argument("--eps-points", type=int, default=9)
    volume.add_argument("--box", metavar="SPEC", default=None, help='bounds "lo,hi;lo,hi;..."')
    volume.add_argument("--gnuplot", metavar="FILE", default=None, help="write plot-ready data file")
    volume.add_argument(
        "--selftest",
        action="store_true",
        help="fit noise-free synthetic data for the exact pair instead of sampling",
    )
    volume.set_defaults(func=cmd_volume_fit)

    parse = sub.add_parser("parse", help="parse and normalize the input arrangement")
    add_input_flags(parse)
    parse.set_defaults(func=cmd_parse)
    return top


def load_arrangement(args: argparse.Namespace) -> NormalizedArrangement:
    if args.poly is not None:
        return normalize(parse_factored_product(args.poly))
    path = Path(args.input)
    text = path.read_text()
    if path.suffix.lower() == ".csv":
        return normalize(arrangement_from_csv(text, dim=args.dim))
    return normalize(arrangement_from_json(text))


def parse_box(spec: str | None, dim: int):
    if spec is None:
        return None
    intervals = []
    for part in spec.split(";"):
        pieces = part.split(",")
        if len(pieces) != 2:
            raise RlctError(f"box interval {part!r} is not of the form lo,hi")
        intervals.append((as_rational(pieces[0].strip()), as_rational(pieces[1].strip())))
    if len(intervals) == 1 and dim > 1:
        intervals = intervals * dim
    return intervals


def epsilon_grid(args: argparse.Namespace) -> list[float]:
    if args.eps_points < 1:
        raise RlctError("--eps-points must be at least 1")
    if not 0 < args.eps_min <= args.eps_max:
        raise RlctError("need 0 < eps-min <= eps-max")
    if args.eps_points == 1:
        return [args.eps_max]
    lo, hi = math.log(args.eps_min), math.log(args.eps_max)
    step = (hi - lo) / (args.eps_points - 1)
    return [math.exp(hi - k * step) for k in range(args.eps_points)]


def run_verification(arr: NormalizedArrangement, result: RlctResult) -> dict:
    """Compare the production lattice and chain length against the oracles."""
    reference = lattice_bruteforce(arr)
    produced = result.lattice
    lattice_match = [f.to_json_dict() for f in produced.flats] == [
        f.to_json_dict() for f in reference.flats
    ]
    chain_match = longest_chain_bruteforce(result.minimizer_flats) == result.pair.multiplicity
    return {"lattice_match": lattice_match, "chain_match": chain_match}


def _emit_result(arr: NormalizedArrangement, doc: dict, pair, args) -> None:
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    elif args.format == "csv":
        print("lambda,m")
        print(f"{format_rational(pair.threshold)},{pair.multiplicity}")
    else:
        print(f"arrangement: {arr.n} hyperplanes in dimension {arr.dim}"
              f" ({'central' if arr.is_central else 'affine'})")
        print(f"lambda = {format_rational(pair.threshold)}")
        print(f"m = {pair.multiplicity}")
        if "localizations" in doc:
            for loc in doc["localizations"]:
                point = ", ".join(loc["point"])
                print(f"  at ({point}): lambda = {loc['lambda']}, m = {loc['m']}")


def cmd_compute(args: argparse.Namespace) -> int:
    arr = load_arrangement(args)
    verification: dict | None = None
    if arr.is_central:
        result = rlct_central(arr)
        doc = {"input": arrangement_to_json_dict(arr)}
        doc.update(result.to_json_dict())
        pair = result.pair
        if args.verify:
            verification = run_verification(arr, result)
    else:
        report = rlct_affine(arr)
        doc = {"input": arrangement_to_json_dict(arr)}
        doc.update(report.to_json_dict())
        pair = report.global_pair
        if args.verify:
            verification = _verify_report(report)
    if verification is not None:
        doc["verify"] = verification
    _emit_result(arr, doc, pair, args)
    if verification is not None and not all(verification.values()):
        print("verification mismatch between production and oracle paths", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _verify_report(report: LocalizationReport) -> dict:
    checks = [run_verification(loc.arrangement, loc.result) for loc in report.localizations]
    return {
        "lattice_match": all(c["lattice_match"] for c in checks),
        "chain_match": all(c["chain_match"] for c in checks),
    }


def cmd_localize(args: argparse.Namespace) -> int:
    arr = load_arrangement(args)
    report = rlct_affine(arr)
    doc = {"input": arrangement_to_json_dict(arr)}
    doc.update(report.to_json_dict())
    verification = _verify_report(report) if args.verify else None
    if verification is not None:
        doc["verify"] = verification
    _emit_result(arr, doc, report.global_pair, args)
    if verification is not None and not all(verification.values()):
        print("verification mismatch between production and oracle paths", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_volume_fit(args: argparse.Namespace) -> int:
    arr = load_arrangement(args)
    exact = rlct_central(arr) if arr.is_central else rlct_affine(arr).global_result
    grid = epsilon_grid(args)
    box = parse_box(args.box, arr.dim)

    if args.selftest:
        samples = synthetic_samples(
            float(exact.pair.threshold), exact.pair.multiplicity, 1.0, grid
        )
    else:
        samples = [
            estimate_volume(arr, box, eps, samples=args.samples, seed=args.seed) for eps in grid
        ]
    fit = fit_asymptotics(samples)
    fit_fixed_m = fit_asymptotics(samples, fixed_multiplicity=exact.pair.multiplicity)
    doc = {
        "input": arrangement_to_json_dict(arr),
        "exact": {
            "lambda": format_rational(exact.pair.threshold),
            "m": exact.pair.multiplicity,
        },
        "samples": [
            {
                "epsilon": s.epsilon,
                "volume": s.volume_estimate,
                "std_error": s.std_error,
                "sample_count": s.sample_count,
            }
            for s in samples
        ],
        "fit": {
            "lambda_hat": fit.lambda_hat,
            "m_hat": fit.m_hat,
            "log_C_hat": fit.log_C_hat,
            "residual_norm": fit.residual_norm,
        },
        "fit_fixed_m": {
            "lambda_hat": fit_fixed_m.lambda_hat,
            "m_hat": fit_fixed_m.m_hat,
            "log_C_hat": fit_fixed_m.log_C_hat,
            "residual_norm": fit_fixed_m.residual_norm,
        },
    }
    if args.gnuplot:
        lines = ["# epsilon volume std_error"]
        lines += [f"{s.epsilon:.12g} {s.volume_estimate:.12g} {s.std_error:.12g}" for s in samples]
        Path(args.gnuplot).write_text("\n".join(lines) + "\n")
    if args.format == "csv":
        print("epsilon,volume,std_error")
        for s in samples:
            print(f"{s.epsilon:.12g},{s.volume_estimate:.12g},{s.std_error:.12g}")
        print(json.dumps({"exact": doc["exact"], "fit": doc["fit"]}), file=sys.stderr)
    elif args.format == "human":
        print(f"exact pair: lambda = {doc['exact']['lambda']}, m = {doc['exact']['m']}")
        print(f"fitted:     lambda_hat = {fit.lambda_hat:.4f}, m_hat = {fit.m_hat:.4f}")
        for s in samples:
            print(f"  eps = {s.epsilon:.3e}  V = {s.volume_estimate:.6e}  +- {s.std_error:.2e}")
    else:
        print(json.dumps(doc, indent=2))
    if args.selftest:
        close = abs(fit.lambda_hat - float(exact.pair.threshold)) < 1e-6 and (
            abs(fit.m_hat - exact.pair.multiplicity) < 1e-6
        )
        if not close:
            print("synthetic self-test failed to recover the exact pair", file=sys.stderr)
            return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_parse(args: argparse.Namespace) -> int:
    arr = load_arrangement(args)
    doc = arrangement_to_json_dict(arr)
    if args.format == "human":
        names = arr.var_names()
        for j in range(arr.n):
            normal, offset, mult = arr.hyperplane(j)
            form = " + ".join(
                f"{format_rational(c)}*{names[i]}" for i, c in enumerate(normal) if c != 0
            )
            if offset != 0:
                form += f" + {format_rational(offset)}"
            print(f"[{mult}] {form} = 0")
    elif args.format == "csv":
        for j in range(arr.n):
            normal, offset, mult = arr.hyperplane(j)
            fields = [format_rational(c) for c in normal] + [str(mult)]
            if not arr.is_central:
                fields.append(format_rational(offset))
            print(",".join(fields))
    else:
        print(json.dumps(doc, indent=2))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_arg_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"error: {exc} (drop --verify or shrink the input)", file=sys.stderr)
        return EXIT_USER_ERROR
    except (ValueError, OSError) as exc:
        # RlctError and json.JSONDecodeError are ValueErrors; stray ones
        # (bad seeds, malformed numbers) are user errors at this boundary too.
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER_ERROR


if __name__ == "__main__":
    sys.exit(main())
