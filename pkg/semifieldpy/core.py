"""
Command-line front end.

Every subcommand except ``gen-field`` prints a JSON report to standard output.
``-o FILE`` writes the command's artifact (map, witness or group spec file)
instead of, or in addition to, the report. Input paths may be ``-`` for
standard input.

Exit codes: 0 check passed, 1 check failed, 2 invalid input, 3 budget exceeded.
"""
import argparse
import dataclasses
import json
import logging
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from semifieldpy import __version__
from semifieldpy.bilinear.constructors import field_quotient_map
from semifieldpy.bilinear.textio import format_map, parse_map
from semifieldpy.complements.phi import (abelian_complement_report, coset_representatives,
                                         phi_alpha_matrix, symmetric_isotope_search)
from semifieldpy.config import settings, use_settings
from semifieldpy.embed.class_two import embed_class_two, pad, verify_embedding
from semifieldpy.exceptions import BudgetExceededError, SemifieldError
from semifieldpy.formats import (format_group_spec, format_witness, parse_class2,
                                 read_alpha_beta)
from semifieldpy.group.checkmode import ExhaustiveCheck
from semifieldpy.group.spec import GroupSpec
from semifieldpy.isotopy.extraction import ExtractionBasis, extract_maps
from semifieldpy.isotopy.isotopism import IsotopismKind, check_isotopism
from semifieldpy.isotopy.search import search_isotopism
from semifieldpy.linalg.field import FieldParams
from semifieldpy.oracle.census import abelian_complement_census
from semifieldpy.oracle.table import (build_table, compare_closed_forms, compute_center,
                                      compute_derived, compute_exponent,
                                      extraspecial_quotient_check, verify_axioms)
from semifieldpy.outcome import SearchStatus

_logger = logging.getLogger(__name__)

SCHEMA = "semifieldpy.report/1"

EXIT_PASSED = 0
EXIT_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_BUDGET = 3


@dataclasses.dataclass
class CommandOutcome:
    """
    What a subcommand hands back to :func:`main`.

    :ivar exit_code: Process exit code.
    :type exit_code: int
    :ivar results: Command-specific report payload.
    :type results: dict
    :ivar artifact: File content written by ``-o`` (or printed for ``gen-field``).
    :type artifact: str | None
    """
    exit_code: int
    results: dict
    artifact: str | None = None


def read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _load_spec(args: argparse.Namespace) -> GroupSpec:
    alpha, beta = read_alpha_beta(read_input(args.alpha))
    if args.beta is not None:
        beta, _ = read_alpha_beta(read_input(args.beta))
    return GroupSpec(alpha, beta)


def _status_exit(status: SearchStatus) -> int:
    return {SearchStatus.FOUND: EXIT_PASSED, SearchStatus.NONE: EXIT_FAILED,
            SearchStatus.INCONCLUSIVE: EXIT_BUDGET}[status]


def run_gen_field(args: argparse.Namespace) -> CommandOutcome:
    alpha = field_quotient_map(FieldParams(args.p), args.n, args.m)
    return CommandOutcome(EXIT_PASSED, {"dims": list(alpha.dims)}, format_map(alpha))


def run_check(args: argparse.Namespace) -> CommandOutcome:
    alpha = parse_map(read_input(args.map))
    nonsingular = alpha.is_nonsingular()
    results = {"nonsingular": nonsingular, "symmetric": alpha.is_symmetric(),
               "alternating": alpha.is_alternating(), "dims": list(alpha.dims)}
    return CommandOutcome(EXIT_PASSED if nonsingular else EXIT_FAILED, results)


def run_group_verify(args: argparse.Namespace) -> CommandOutcome:
    spec = _load_spec(args)
    report = spec.verify_ses()
    results = {"semi_extraspecial": report.holds,
               "witness_of_failure": (None if report.witness_of_failure is None
                                      else [list(x) for x in report.witness_of_failure]),
               "lines_checked": report.checked, "ultraspecial": spec.is_ultraspecial(),
               "exponent": spec.exponent(), "order": spec.order}
    return CommandOutcome(EXIT_PASSED if report.holds else EXIT_FAILED, results)


def run_complements(args: argparse.Namespace) -> CommandOutcome:
    spec = _load_spec(args)
    return CommandOutcome(EXIT_PASSED, abelian_complement_report(spec.alpha, spec.beta).to_dict())


def run_cosets(args: argparse.Namespace) -> CommandOutcome:
    alpha, _ = read_alpha_beta(read_input(args.alpha))
    phi = phi_alpha_matrix(alpha)
    results = {"coset_count": phi.coset_count, "image_dim": phi.image_dim,
               "kernel_dim": phi.kernel_dim, "codomain_dim": phi.codomain_dim}
    try:
        representatives = coset_representatives(alpha, args.limit, phi)
    except BudgetExceededError as exc:
        results["representatives"] = None
        results["refused"] = str(exc)
        return CommandOutcome(EXIT_BUDGET, results)
    results["representatives"] = [str(rep) for rep in representatives]
    return CommandOutcome(EXIT_PASSED, results)


def run_isotopic(args: argparse.Namespace) -> CommandOutcome:
    alpha1, _ = read_alpha_beta(read_input(args.a1))
    alpha2, _ = read_alpha_beta(read_input(args.a2))
    kind = IsotopismKind.ANTI_ISOTOPISM if args.anti else IsotopismKind.ISOTOPISM
    outcome = search_isotopism(alpha1, alpha2, kind, args.budget)
    witness = None if outcome.witness is None else format_witness(outcome.witness)
    results = {"status": outcome.status.value, "kind": kind.value,
               "pairs_examined": outcome.examined, "witness": witness}
    return CommandOutcome(_status_exit(outcome.status), results, witness)


def run_extract(args: argparse.Namespace) -> CommandOutcome:
    spec = _load_spec(args)
    basis = ExtractionBasis.random(spec.fp, spec.n, spec.m, args.seed)
    alpha, beta, witness = extract_maps(spec, basis, include_beta=spec.p != 2)
    verified = check_isotopism(alpha, spec.alpha, witness)
    before, after = phi_alpha_matrix(spec.alpha), phi_alpha_matrix(alpha)
    invariants = [before.kernel_dim, before.image_dim, before.coset_count] == \
                 [after.kernel_dim, after.image_dim, after.coset_count]
    extracted = GroupSpec.unchecked(alpha, beta)
    results = {"alpha": format_map(alpha), "beta": None if beta is None else format_map(beta),
               "witness": format_witness(witness), "witness_verified": verified,
               "invariants_match": invariants}
    passed = verified and invariants
    return CommandOutcome(EXIT_PASSED if passed else EXIT_FAILED, results,
                          format_group_spec(extracted))


def run_embed(args: argparse.Namespace) -> CommandOutcome:
    data = pad(parse_class2(read_input(args.gamma)))
    alpha = None
    if args.alpha is not None:
        alpha, _ = read_alpha_beta(read_input(args.alpha))
    spec = embed_class_two(data, alpha)
    verified = verify_embedding(spec, data)
    results = {"verified": verified, "ultraspecial": spec.is_ultraspecial(),
               "exponent": spec.exponent(), "dims": [spec.p, spec.n, spec.m],
               "spec": format_group_spec(spec)}
    return CommandOutcome(EXIT_PASSED if verified else EXIT_FAILED, results,
                          format_group_spec(spec))


def run_oracle(args: argparse.Namespace) -> CommandOutcome:
    spec = _load_spec(args)
    table = build_table(spec)
    axioms = verify_axioms(table, ExhaustiveCheck() if args.exhaustive else None)
    center = compute_center(table)
    derived = compute_derived(table)
    expected_center = {int(label) for label in range(spec.p ** spec.m)}
    exponent = compute_exponent(table)
    closed = compare_closed_forms(spec, table)
    results = {
        "order": table.order,
        "axioms": axioms.holds,
        "axioms_exhaustive": axioms.exhaustive,
        "axioms_witness": None if axioms.witness is None else list(axioms.witness),
        "center_size": len(center),
        "center_matches_formula": center == expected_center,
        "derived_equals_center": derived == center,
        "exponent": exponent,
        "exponent_matches_formula": exponent == spec.exponent(),
        "extraspecial_quotients": extraspecial_quotient_check(spec, table),
        "closed_forms_match": closed.holds,
        "closed_forms": {"inverses": closed.inverses, "commutators": closed.commutators,
                         "powers": closed.powers,
                         "witness": None if closed.witness is None else list(closed.witness)},
    }
    checks = ["axioms", "center_matches_formula", "derived_equals_center",
              "exponent_matches_formula", "extraspecial_quotients", "closed_forms_match"]
    if table.order <= settings().exhaustive_axiom_cap:
        census = len(abelian_complement_census(spec, table))
        formula = abelian_complement_report(spec.alpha, spec.beta).count
        results["abelian_complements_census"] = census
        results["abelian_complements_formula"] = formula
        results["complements_match"] = census == formula
        checks.append("complements_match")
    passed = all(results[key] for key in checks)
    return CommandOutcome(EXIT_PASSED if passed else EXIT_FAILED, results)


def run_sym_isotope(args: argparse.Namespace) -> CommandOutcome:
    alpha, _ = read_alpha_beta(read_input(args.alpha))
    outcome = symmetric_isotope_search(alpha, args.budget)
    results = {"status": outcome.status.value, "examined": outcome.examined,
               "f": None if outcome.witness is None else outcome.witness.tolist()}
    return CommandOutcome(_status_exit(outcome.status), results)


def _spec_inputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha", default="-", help="Alpha map or group spec file.")
    parser.add_argument("--beta", help="Beta map file (overrides a beta in --alpha).")


def build_parser() -> argparse.ArgumentParser:
    """
    The argument parser with one subparser per command.
    """
    parser = argparse.ArgumentParser(prog="semifieldpy",
                                     description="Generalized semifield groups over GF(p).")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    parser.add_argument("--jobs", type=int, default=None, help="Worker count.")
    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("-o", "--output", help="Write the command's artifact to FILE.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    commands: dict[str, tuple[Callable[[argparse.Namespace], CommandOutcome], str]] = {
        "gen-field": (run_gen_field, "Write the field quotient map."),
        "check": (run_check, "Report nonsingular, symmetric and alternating flags."),
        "group-verify": (run_group_verify, "Check the semi-extraspecial property."),
        "complements": (run_complements, "Report abelian complements of A."),
        "cosets": (run_cosets, "Count and list cosets of the image of phi_alpha."),
        "isotopic": (run_isotopic, "Search for an isotopism or anti-isotopism."),
        "extract": (run_extract, "Extract maps through a random basis."),
        "embed": (run_embed, "Embed class-two data into an ultraspecial group."),
        "oracle": (run_oracle, "Cross-validate against the multiplication table."),
        "sym-isotope": (run_sym_isotope, "Search for a symmetric isotope."),
    }
    sub = {}
    for name, (handler, text) in commands.items():
        sub[name] = subparsers.add_parser(name, help=text, parents=[output])
        sub[name].set_defaults(handler=handler)

    sub["gen-field"].add_argument("--p", type=int, required=True)
    sub["gen-field"].add_argument("--n", type=int, required=True)
    sub["gen-field"].add_argument("--m", type=int, required=True)
    sub["check"].add_argument("--map", default="-", help="Map file.")
    for name in ("group-verify", "complements", "extract", "oracle"):
        _spec_inputs(sub[name])
    sub["cosets"].add_argument("--alpha", default="-", help="Alpha map file.")
    sub["cosets"].add_argument("--limit", type=int, default=None,
                               help="Refuse (exit 3) when there are more cosets than this.")
    sub["isotopic"].add_argument("--a1", required=True, help="Source map file.")
    sub["isotopic"].add_argument("--a2", required=True, help="Target map file.")
    sub["isotopic"].add_argument("--anti", action="store_true", help="Search anti-isotopisms.")
    sub["isotopic"].add_argument("--budget", type=int, default=None, help="Maximum (a, c) pairs.")
    sub["extract"].add_argument("--seed", type=int, required=True)
    sub["embed"].add_argument("--gamma", required=True, help="Class-two data file.")
    sub["embed"].add_argument("--alpha", help="Alpha map on the padded dimensions.")
    sub["oracle"].add_argument("--exhaustive", action="store_true",
                               help="Check associativity on every triple.")
    sub["sym-isotope"].add_argument("--alpha", default="-", help="Alpha map file.")
    sub["sym-isotope"].add_argument("--budget", type=int, default=None,
                                    help="Largest kernel searched exhaustively.")
    return parser


def _inputs(args: argparse.Namespace) -> dict:
    skipped = {"handler", "command", "verbose", "output"}
    return {key: value for key, value in sorted(vars(args).items()) if key not in skipped}


def _emit(args: argparse.Namespace, outcome: CommandOutcome, elapsed_ms: float) -> None:
    if args.output is not None and outcome.artifact is not None:
        Path(args.output).write_text(outcome.artifact, encoding="utf-8")
    if args.command == "gen-field":
        if args.output is None:
            sys.stdout.write(outcome.artifact)
        return
    report = {"schema": SCHEMA, "command": args.command, "inputs": _inputs(args),
              "results": outcome.results, "timing_ms": round(elapsed_ms, 3),
              "version": __version__}
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def main(argv: Sequence[str] | None = None) -> int:
    """
    Runs one subcommand and returns its exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    started = time.perf_counter()
    try:
        with use_settings(settings().replace(jobs=args.jobs)):
            outcome = args.handler(args)
    except BudgetExceededError as exc:
        _logger.error("%s", exc)
        outcome = CommandOutcome(EXIT_BUDGET, {"refused": str(exc), "required": exc.required,
                                               "budget": exc.budget})
    except (SemifieldError, ValueError, OSError) as exc:
        _logger.error("%s", exc)
        print(f"semifieldpy: error: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    _emit(args, outcome, (time.perf_counter() - started) * 1000)
    return outcome.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
