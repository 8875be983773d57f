"""Command-line front-end.

Commands: eval, mobius, check, independence-suite, random-capacity, and the
ad-hoc oracle subcommand.  Values go to stdout, diagnostics to stderr, and
every invocation is deterministic given its full flag set (seed included).

Exit codes:
    0  success / axiom satisfied / matrix as expected
    1  axiom falsified / independence matrix deviates
    2  unparseable input, unknown name, or invalid parameter
    3  point length does not match the ground set
    4  the capacity file is not a game (empty set value nonzero)
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import axioms, io, oracle
from .errors import (
    ChoquetError,
    DimensionMismatch,
    EmptyT,
    FileFormatError,
    GroundSetTooLarge,
    NotAGame,
    NotMonotone,
    UnsupportedGroundSet,
)
from .generate import random_capacity, random_normalized_capacity, random_signed_capacity
from .integral import choquet, lovasz_extension
from .setfunction import (
    MAX_GROUND_SET,
    mask_from_elements,
    mobius_transform,
    validate_signed_capacity,
    zeta_transform,
)

DEFAULT_TRIALS = 1000
DEFAULT_SEED = 0

KIND_SIGNED = "signed"
KIND_MONOTONE = "monotone"
KIND_NORMALIZED = "normalized-monotone"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _emit(doc: dict, out: Optional[str]) -> None:
    text = io.format_document(doc)
    if out:
        with open(out, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _parse_subset_flag(text: str) -> int:
    elements = []
    for part in text.split(","):
        try:
            elements.append(int(part))
        except ValueError:
            raise FileFormatError(f"--subset {text!r}: {part!r} is not an integer") from None
    try:
        return mask_from_elements(elements)
    except ValueError as exc:
        raise FileFormatError(f"--subset {text!r}: {exc}") from None


def cmd_eval(args) -> int:
    f = io.load_set_function(args.capacity)
    point = io.parse_point(args.point)
    if args.lovasz:
        result = lovasz_extension(f, point)
    else:
        result = choquet(validate_signed_capacity(f), point)
    permutation = list(result.permutation_used.order)
    if args.format == "json":
        _emit({"value": result.value, "permutation": permutation}, None)
    else:
        print(repr(result.value))
        print("permutation: " + ",".join(str(p) for p in permutation))
    return 0


def cmd_mobius(args) -> int:
    if args.invert:
        m = io.load_mobius(args.capacity)
        doc = io.set_function_to_document(zeta_transform(m))
    else:
        f = io.load_set_function(args.capacity)
        doc = io.mobius_to_document(mobius_transform(f))
    _emit(doc, args.out)
    return 0


def _resolve_check_n(args, capacity, subset_mask) -> int:
    if capacity is not None:
        return capacity.n
    if args.n is not None:
        return args.n
    if subset_mask is not None and subset_mask > 0:
        return subset_mask.bit_length()
    raise FileFormatError("one of --capacity, --n or --subset is required to fix the ground set")


def cmd_check(args) -> int:
    capacity = None
    if args.capacity:
        capacity = validate_signed_capacity(io.load_set_function(args.capacity))
        if args.n is not None and args.n != capacity.n:
            raise FileFormatError(
                f"--n {args.n} conflicts with the capacity file (n = {capacity.n})"
            )
    subset_mask = _parse_subset_flag(args.subset) if args.subset else None
    n = _resolve_check_n(args, capacity, subset_mask)
    agg = axioms.Aggregator(args.family, n)
    tolerance = args.tolerance if args.tolerance is not None else axioms.FALSIFY_TOLERANCE

    needs_subset = args.axiom in (axioms.AXIOM_INTERVAL_SCALE, axioms.AXIOM_ZERO_ON_BASIS)
    if needs_subset:
        if subset_mask is None:
            raise FileFormatError(f"axiom {args.axiom} requires --subset")
        if args.axiom == axioms.AXIOM_INTERVAL_SCALE:
            report = axioms.check_interval_scale_covariance(
                agg, subset_mask, args.trials, args.seed, tolerance
            )
        else:
            report = axioms.check_zero_on_basis(agg, subset_mask, args.trials, args.seed, tolerance)
    elif args.axiom == axioms.AXIOM_LINEARITY_IN_CAPACITY:
        report = axioms.check_linearity_in_capacity(agg, args.trials, args.seed, tolerance)
    else:
        v = capacity if capacity is not None else random_signed_capacity(n, args.seed)
        checker = {
            axioms.AXIOM_COMONOTONIC_ADDITIVITY: axioms.check_comonotonic_additivity,
            axioms.AXIOM_POSITIVE_HOMOGENEITY: axioms.check_positive_homogeneity,
            axioms.AXIOM_COMONOTONIC_AFFINITY: axioms.check_comonotonic_affinity,
        }[args.axiom]
        report = checker(agg, v, args.trials, args.seed, tolerance)

    if args.format == "json":
        _emit(report.to_dict(), None)
    else:
        print(f"axiom: {report.axiom}")
        print(f"verdict: {report.verdict}")
        print(f"samples_run: {report.samples_run}")
        print(f"seed: {report.seed}")
        print(f"tolerance: {report.tolerance!r}")
        if report.witness is None:
            print("witness: none")
        else:
            print("witness:")
            print(f"  lhs: {report.witness.lhs!r}")
            print(f"  rhs: {report.witness.rhs!r}")
            print(f"  discrepancy: {report.witness.discrepancy!r}")
            print(f"  inputs: {json.dumps(report.witness.inputs)}")
    return 1 if report.falsified else 0


def cmd_independence_suite(args) -> int:
    summary = axioms.independence_suite(args.trials, args.seed, args.paper_witnesses_only)
    if args.format == "json":
        _emit(summary.to_dict(), None)
    else:
        print(summary.format_text())
    if summary.matches_expected:
        return 0
    for cell in summary.deviations():
        print(
            f"deviation: family {cell.family}, condition {cell.condition}, "
            f"falsified={cell.falsified}",
            file=sys.stderr,
        )
    return 1


def cmd_random_capacity(args) -> int:
    if args.n > MAX_GROUND_SET:
        print(f"error: --n {args.n} exceeds the bound {MAX_GROUND_SET}", file=sys.stderr)
        return 2
    if args.kind == KIND_SIGNED:
        f = random_signed_capacity(args.n, args.seed)
    elif args.kind == KIND_MONOTONE:
        f = random_capacity(args.n, args.seed)
    else:
        f = random_normalized_capacity(args.n, args.seed)
    _emit(io.set_function_to_document(f), args.out)
    return 0


def cmd_oracle(args) -> int:
    if args.oracle_command == "mobius":
        f = io.load_set_function(args.capacity)
        _emit(io.mobius_to_document(oracle.mobius_naive(f)), args.out)
        return 0
    if args.oracle_command == "choquet-perms":
        v = validate_signed_capacity(io.load_set_function(args.capacity))
        values = sorted(oracle.choquet_all_permutations(v, io.parse_point(args.point)))
        if args.format == "json":
            _emit({"values": values, "count": len(values)}, None)
        else:
            for value in values:
                print(repr(value))
            print(f"distinct: {len(values)}")
        return 0
    # affine-check
    f = io.load_set_function(args.capacity)
    order = [int(p) for p in args.order.split(",")]
    ok = oracle.lovasz_affine_check(f, order, args.trials, args.seed)
    print("affine: " + ("true" if ok else "false"))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="choquet",
        description="Signed Choquet integrals, Lovasz extensions, Mobius transforms "
        "and axiom checks for set functions on finite ground sets.",
    )
    # metavar hides the ad-hoc oracle subcommand from the listing
    sub = parser.add_subparsers(
        dest="command",
        required=True,
        metavar="{eval,mobius,check,independence-suite,random-capacity}",
    )

    def add_common(p, trials=True):
        if trials:
            p.add_argument("--trials", type=_positive_int, default=DEFAULT_TRIALS,
                           help="number of sampled trials (default 1000)")
        p.add_argument("--seed", type=int, default=DEFAULT_SEED,
                       help="RNG seed; all sampling is deterministic given it (default 0)")
        p.add_argument("--format", choices=("text", "json"), default="text",
                       help="output format (default text)")

    p = sub.add_parser("eval", help="evaluate the integral of a point")
    p.add_argument("--capacity", required=True, help="set-function JSON file")
    p.add_argument("--point", required=True, help="comma-separated coordinates, e.g. 4,0,2")
    p.add_argument("--lovasz", action="store_true",
                   help="evaluate the Lovasz extension (allows a nonzero empty-set value)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("mobius", help="write the Mobius transform of a set-function file")
    p.add_argument("--capacity", required=True, help="set-function JSON file")
    p.add_argument("--invert", action="store_true",
                   help="apply the inverse (zeta) transform instead")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("check", help="run one axiom checker")
    p.add_argument("--axiom", required=True, choices=axioms.AXIOMS)
    p.add_argument("--capacity", help="game to check (random if omitted; see --n)")
    p.add_argument("--n", type=_positive_int, help="ground-set size when no capacity file is given")
    p.add_argument("--subset", help="basis subset for interval-scale / zero-on-basis, e.g. 1,2")
    p.add_argument("--family", choices=axioms.FAMILIES, default=axioms.FAMILY_CHOQUET,
                   help="aggregation family to check (default choquet)")
    p.add_argument("--tolerance", type=float,
                   help="falsification threshold override (default 1e-6)")
    add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("independence-suite",
                       help="run the 3x3 family/condition independence matrix")
    p.add_argument("--paper-witnesses-only", action="store_true",
                   help="replay only the fixed witnesses, no random sampling")
    add_common(p)
    p.set_defaults(func=cmd_independence_suite)

    p = sub.add_parser("random-capacity", help="generate a random set-function file")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--kind", required=True, choices=(KIND_SIGNED, KIND_MONOTONE, KIND_NORMALIZED))
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_random_capacity)

    p = sub.add_parser("oracle")  # ad-hoc brute-force reference runs
    osub = p.add_subparsers(dest="oracle_command", required=True)
    q = osub.add_parser("mobius", help="naive double-loop Mobius transform")
    q.add_argument("--capacity", required=True)
    q.add_argument("--out")
    q = osub.add_parser("choquet-perms", help="integral under every valid sorting permutation")
    q.add_argument("--capacity", required=True)
    q.add_argument("--point", required=True)
    q.add_argument("--format", choices=("text", "json"), default="text")
    q = osub.add_parser("affine-check", help="sampled affineness of the extension on one cone")
    q.add_argument("--capacity", required=True)
    q.add_argument("--order", required=True, help="permutation as comma-separated elements")
    q.add_argument("--trials", type=_positive_int, default=100)
    q.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the diagnostic
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DimensionMismatch as exc:
        print(f"error: point dimension: {exc}", file=sys.stderr)
        return 3
    except NotAGame as exc:
        print(f"error: {exc} (use --lovasz for general set functions)", file=sys.stderr)
        return 4
    except (EmptyT, UnsupportedGroundSet, GroundSetTooLarge, NotMonotone) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ChoquetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
