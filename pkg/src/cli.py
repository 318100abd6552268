#!/usr/bin/env python3
"""
Variable-inclusion workbench CLI.

Evaluates formulas in catalog or file matrices, checks and searches Hilbert
proofs, compares restricted-rule systems with left variable inclusion
companions, probes paraconsistency and deduction theorems, enumerates small
algebras and runs the reproduction suite.

Exit codes: 0 success or the property holds, 1 the property fails (or no proof
was found within limits), 2 usage or input error.

Usage examples:
- varincl eval M3 "p -> q" --assign p=1,q=1/2
- varincl consequence B2 B2+w "p ; ~p |- q"
- varincl plonka --adjoin-omega B2
- varincl check-proof minimal-re corpus/derivations/minimal_separation.proof
- varincl search-proof minimal "p & q |- p | q" --depth 4
- varincl companion compare minimal --instances corpus/instances/minimal.txt
- varincl probe classify prerough3+w
- varincl enumerate heyting --max-size 4
- varincl repro --quick
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

from src.catalog.probes import (
    classify_paraconsistency,
    deduction_instance,
    enumerate_deduction_instances,
    probe_deduction,
    probe_ecq,
    probe_land_ecq,
    probe_lnc,
)
from src.catalog.registry import (
    CatalogError,
    CatalogKind,
    catalog_get,
    catalog_ids,
    resolve_matrix,
    resolve_system,
)
from src.catalog.repro import ReproSettings, run_repro
from src.companions.instances import load_instances, parse_instance
from src.companions.oracles import Outcome, compare_oracles, hilbert_oracle, left_companion
from src.proofs.checker import check_proof
from src.proofs.scripts import format_proof, load_proof
from src.proofs.search import ProofSearch
from src.semantics.algebra import evaluate, find_countermodel, truth_table
from src.semantics.classes import enumerate_algebras
from src.semantics.plonka import (
    DirectedSystemOfMatrices,
    adjoin_contaminating,
    plonka_sum_algebras,
    plonka_sum_matrices,
    validate_directed_system,
)
from src.semantics.storage import (
    algebra_to_document,
    dump_document,
    load_directed_system,
    matrix_to_bytes,
)
from src.syntax.parser import parse_formula
from src.utils.config import SearchLimits, WorkbenchConfig, load_config

LOG = logging.getLogger("varincl")

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2

PROBES = ("ecq", "land-ecq", "lnc", "dt", "classify")


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="varincl",
        description="Variable-inclusion logic workbench",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        help="Log level (default: configured level)",
    )
    parser.add_argument("--config", type=Path, help="JSON configuration file")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("eval", help="Evaluate a formula in a matrix or algebra")
    p.add_argument("matrix", help="Catalog id or matrix document path")
    p.add_argument("formula")
    p.add_argument("--assign", help="Comma-separated valuation, e.g. p=1,q=1/2")

    p = commands.add_parser("consequence", help="Decide Σ |- φ over a class of matrices")
    p.add_argument("matrices", nargs="+", help="Catalog ids or matrix document paths")
    p.add_argument("instance", help='Instance "<premise> ; <premise> |- <conclusion>"')

    p = commands.add_parser("plonka", help="Płonka sum of a directed system document")
    p.add_argument("source", help="Directed-system document, or a matrix with --adjoin-omega")
    p.add_argument("--adjoin-omega", action="store_true", help="Adjoin a contaminating element")
    p.add_argument("--output", type=Path, help="Write the sum here instead of stdout")

    p = commands.add_parser("check-proof", help="Check a proof script")
    p.add_argument("system", help="Catalog system id or system document path")
    p.add_argument("proof", type=Path)

    p = commands.add_parser("search-proof", help="Bounded proof search")
    p.add_argument("system", help="Catalog system id or system document path")
    p.add_argument("instance", help='Instance "<premise> ; <premise> |- <conclusion>"')
    p.add_argument("--depth", type=int, help="Rule-application rounds (default: configured)")
    p.add_argument("--max-size", type=int, help="Formula node cap (default: configured)")
    p.add_argument("--restricted", action="store_true", help="Search the restricted system")

    p = commands.add_parser("companion", help="Compare a restricted system with its left companion")
    companion = p.add_subparsers(dest="companion_command", required=True)
    c = companion.add_parser("compare", help="Run both oracles over an instance batch")
    c.add_argument("system", help="Catalog system id or system document path")
    c.add_argument("--instances", type=Path, required=True, help="Instance batch file")
    c.add_argument("--depth", type=int, help="Search depth for both oracles")
    c.add_argument("--max-size", type=int, help="Formula node cap for both oracles")

    p = commands.add_parser("probe", help="Paraconsistency and deduction-theorem probes")
    p.add_argument("probe", choices=PROBES)
    p.add_argument("matrix", help="Catalog id or matrix document path")
    p.add_argument("--premises", default="", help="dt: premises separated by ';'")
    p.add_argument("--alpha", help="dt: antecedent")
    p.add_argument("--beta", help="dt: consequent")

    p = commands.add_parser("enumerate", help="Enumerate small algebras of a class")
    p.add_argument("algebra_class", metavar="class")
    p.add_argument("--max-size", type=int, default=3)
    p.add_argument("--output-dir", type=Path, help="Write one algebra document per member")

    p = commands.add_parser("catalog", help="List catalog entries")
    p.add_argument("--kind", choices=[k.value for k in CatalogKind])

    p = commands.add_parser("repro", help="Run the reproduction suite")
    p.add_argument("--quick", action="store_true", help="Shrink sampled sweeps")

    return parser.parse_args(argv)


def _parse_assignment(text: str) -> Dict[str, str]:
    valuation: Dict[str, str] = {}
    for part in text.split(","):
        if not part.strip():
            continue
        name, sep, value = part.partition("=")
        if not sep:
            raise ValueError(f"Bad assignment {part.strip()!r}, expected name=value")
        valuation[name.strip()] = value.strip()
    return valuation


def _limits(config: WorkbenchConfig, depth: Optional[int], max_size: Optional[int]) -> SearchLimits:
    return SearchLimits(
        depth if depth is not None else config.search_depth,
        max_size if max_size is not None else config.max_formula_size,
    )


def cmd_eval(args: argparse.Namespace, config: WorkbenchConfig) -> int:
    matrix = resolve_matrix(args.matrix)
    formula = parse_formula(args.formula, matrix.language)
    if args.assign:
        print(evaluate(formula, _parse_assignment(args.assign), matrix.algebra))
        return EXIT_OK
    for valuation, value in truth_table(formula, matrix.algebra):
        assigned = ", ".join(f"{k}={v}" for k, v in sorted(valuation.items()))
        marker = "*" if value in matrix.designated else " "
        print(f"{assigned or '-'} : {value} {marker}".rstrip())
    return EXIT_OK


def cmd_consequence(args: argparse.Namespace, config: WorkbenchConfig) -> int:
    matrices = [resolve_matrix(ref) for ref in args.matrices]
    instance = parse_instance(args.instance)
    witness = find_countermodel(instance.premises, instance.conclusion, matrices)
    if witness is None:
        print("holds")
        return EXIT_OK
    print(f"fails: countermodel {witness.describe()}")
    return EXIT_FAILS


def cmd_plonka(args: argparse.Namespace, config: WorkbenchConfig) -> int:
    if args.adjoin_omega:
        result = adjoin_contaminating(resolve_matrix(args.source))
        payload = matrix_to_bytes(result)
    else:
        system = load_directed_system(Path(args.source))
        violations = validate_directed_system(system)
        if violations:
            for violation in violations:
                print(violation)
            LOG.error(f"{args.source} is not a valid directed system")
            return EXIT_FAILS
        if isinstance(system, DirectedSystemOfMatrices):
            payload = matrix_to_bytes(plonka_sum_matrices(system))
        else:
            payload = dump_document(algebra_to_document(plonka_sum_algebras(system)))
    if args.output:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        args.output.write_bytes(payload)
        LOG.info(f"Wrote {args.output}")
    else:
        sys.stdout.write(payload.decode("utf-8"))
    return EXIT_OK


def cmd_check_proof(args: argparse.Namespace, config: WorkbenchConfig) -> int:
    system = resolve_system(args.system)
    result = check_proof(load_proof(args.proof), system)
    print(result.describe())
    if result.missing_variables:
        print(f"lost variables: {', '.join(sorted(result.missing_variables))}")
    return EXIT_OK if result.is_valid else EXIT_FAILS


def cmd_search_proof(args: argparse.Namespace, config: WorkbenchConfig) -> int:
    system = resolve_system(args.system)
    if args.restricted:
        system = system.restricted()
    instance = parse_instance(args.instance, system.language)
    limits = _limits(config, args.depth, args.max_size)
    search = ProofSearch(system, limits)
    proof = search.derive(instance.premises, instance.conclusion)
    if proof is None:
        suffix = " (formula-size cap reached)" if search.capped else ""
        print(f"not found within depth {limits.depth}{suffix}")
        return EXIT_FAILS
    sys.stdout.write(format_proof(proof))
    return EXIT_OK


def cmd_companion(args: argparse.Namespace, config: WorkbenchConfig) -> int:
    system = resolve_system(args.system)
    limits = _limits(config, args.depth, args.max_size)
    companion = left_companion(hilbert_oracle(system, limits))
    restricted = hilbert_oracle(system.restricted(), limits)
    report = compare_oracles(companion, restricted, load_instances(args.instances, system.language))
    for line in report.lines():
        print(line)
    print(report.summary())
    # A restricted success the companion misses breaks containment.
    return EXIT_FAILS if report.counts()[Outcome.B_ONLY] else EXIT_OK


def cmd_probe(args: argparse.Namespace, config: WorkbenchConfig) -> int:
    matrix = resolve_matrix(args.matrix)
    if args.probe == "classify":
        print(classify_paraconsistency(matrix).value)
        return EXIT_OK
    if args.probe == "dt":
        if args.alpha and args.beta:
            premises = [p for p in args.premises.split(";") if p.strip()]
            instances = [deduction_instance(premises, args.alpha, args.beta)]
        elif args.alpha or args.beta:
            raise ValueError("--alpha and --beta must be given together")
        else:
            instances = list(enumerate_deduction_instances(matrix.language, max_premises=0))
        report = probe_deduction(matrix, instances)
        for row in report.rows:
            if len(report.rows) == 1 or not (row.dt_holds and row.converse_holds):
                print(row.describe())
        print(
            f"{len(report.rows)} instance(s): DT {'holds' if report.dt_holds else 'fails'}, "
            f"converse {'holds' if report.converse_holds else 'fails'}"
        )
        return EXIT_OK if report.dt_holds and report.converse_holds else EXIT_FAILS
    probes = {"ecq": (probe_ecq, "ECQ"), "land-ecq": (probe_land_ecq, "∧-ECQ"), "lnc": (probe_lnc, "LNC")}
    check, label = probes[args.probe]
    holds = check(matrix)
    print(f"{label} {'holds' if holds else 'fails'} in {matrix.name}")
    return EXIT_OK if holds else EXIT_FAILS


def cmd_enumerate(args: argparse.Namespace, config: WorkbenchConfig) -> int:
    if args.max_size > config.enumeration_max_size:
        raise ValueError(
            f"--max-size {args.max_size} exceeds the configured limit {config.enumeration_max_size}"
        )
    count = 0
    for algebra in enumerate_algebras(args.algebra_class, max_size=args.max_size):
        count += 1
        print(f"{count}. size {algebra.size}: {algebra}")
        if args.output_dir:
            args.output_dir.mkdir(parents=True, exist_ok=True)
            document = algebra_to_document(algebra, name=f"{args.algebra_class}-{count}")
            (args.output_dir / f"{args.algebra_class}-{count}.json").write_bytes(dump_document(document))
    print(f"{count} algebra(s) up to isomorphism")
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace, config: WorkbenchConfig) -> int:
    kind = CatalogKind(args.kind) if args.kind else None
    for entry_id in catalog_ids(kind):
        entry = catalog_get(entry_id)
        print(f"{entry_id:<16} {entry.kind.value:<8} {entry.citation}")
    return EXIT_OK


def cmd_repro(args: argparse.Namespace, config: WorkbenchConfig) -> int:
    report = run_repro(ReproSettings.from_config(config, quick=args.quick))
    for check in report.checks:
        print(check.describe())
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_FAILS


COMMANDS = {
    "eval": cmd_eval,
    "consequence": cmd_consequence,
    "plonka": cmd_plonka,
    "check-proof": cmd_check_proof,
    "search-proof": cmd_search_proof,
    "companion": cmd_companion,
    "probe": cmd_probe,
    "enumerate": cmd_enumerate,
    "catalog": cmd_catalog,
    "repro": cmd_repro,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args(argv)
    config = load_config(args.config)
    level = args.log_level or config.log_level
    logging.basicConfig(level=getattr(logging, level), format="%(levelname)s: %(message)s")

    try:
        return COMMANDS[args.command](args, config)
    except (ValueError, CatalogError, OSError) as e:
        LOG.error(f"{args.command}: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
