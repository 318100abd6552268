"""
Reproduction suite: named checks of the catalog's stated facts.

Each check returns a ReproCheck with a pass flag and a one-line detail. Quick
mode shrinks every sampled sweep so the whole suite runs in seconds.
"""

import logging
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..companions.instances import (
    Instance,
    enumerate_instances,
    format_instance,
    sample_instances,
)
from ..companions.oracles import (
    compare_oracles,
    hilbert_oracle,
    left_companion,
    matrix_oracle,
    semantic_left_companion,
)
from ..companions.properties import companion_violations, consequence_violations
from ..proofs.checker import check_proof
from ..proofs.scripts import load_proof
from ..proofs.search import derive_bounded
from ..proofs.soundness import soundness_violations
from ..proofs.transforms import (
    TranslationError,
    extract_delta,
    prune_derivation,
    translate_theorem_proof,
)
from ..semantics.algebra import evaluate
from ..semantics.classes import CLASS_PREDICATES, is_pre_rough
from ..syntax.formula import HEYTING, MINIMAL
from ..syntax.generate import enumerate_formulas
from ..syntax.parser import parse_formula
from ..utils.config import SearchLimits, WorkbenchConfig
from .algebras import DECLARED_CLASSES
from .probes import (
    Paraconsistency,
    classify_paraconsistency,
    deduction_instance,
    deduction_transfer_violations,
    enumerate_deduction_instances,
    predict_companion_class,
    probe_deduction,
    probe_ecq,
    probe_land_ecq,
    probe_lnc,
    rm3_non_companion_witness,
)
from .registry import get_algebra, get_matrix, get_system
from .systems import SOUNDNESS_FACTS

logger = logging.getLogger(__name__)

# Printed tables, rows indexed by the first argument in the listed order.
PRINTED_TABLES: Dict[str, Tuple[Tuple[str, ...], Dict[str, List[str]]]] = {
    "M3": (
        ("1", "1/2", "0"),
        {
            "&": ["1 1/2 0", "1/2 1/2 0", "0 0 0"],
            "|": ["1 1 1", "1 1/2 1/2", "1 1/2 0"],
            "->": ["1 0 0", "1 1/2 0", "1 1 1"],
            "~": ["0 1/2 1"],
        },
    ),
    "PS3": (
        ("1", "1/2", "0"),
        {
            "&": ["1 1/2 0", "1/2 1/2 0", "0 0 0"],
            "|": ["1 1 1", "1 1/2 1/2", "1 1/2 0"],
            "->": ["1 1 0", "1 1 0", "1 1 1"],
            "~": ["0 1/2 1"],
        },
    ),
    "prerough3": (
        ("0", "a", "1"),
        {
            "&": ["0 0 0", "0 a a", "0 a 1"],
            "|": ["0 a 1", "a a 1", "1 1 1"],
            "->": ["1 1 1", "a a 1", "0 a 1"],
            "~": ["1 a 0"],
            "I": ["0 a 1"],
            "C": ["0 a 1"],
        },
    ),
}

PLONKA_MATRICES = ("B2", "H3", "prerough3", "M3", "PS3")
PROPERTY_MATRICES = ("B2", "H3", "M3", "PS3", "prerough3", "prerough3-std")
PARACONSISTENCY_MATRICES = ("B2", "H3", "M3", "PS3", "prerough3", "prerough3-std")
MIN_CORPUS_PROOFS = 10


@dataclass(frozen=True)
class ReproCheck:
    """Outcome of one named check."""

    name: str
    passed: bool
    detail: str = ""

    def describe(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


@dataclass
class ReproReport:
    checks: List[ReproCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failures(self) -> List[ReproCheck]:
        return [check for check in self.checks if not check.passed]

    def summary(self) -> str:
        failed = len(self.failures())
        return f"{len(self.checks) - failed}/{len(self.checks)} check(s) passed"


@dataclass(frozen=True)
class ReproSettings:
    """
    Sweep sizes for the suite.

    Attributes:
        plonka_instances: Sampled instances per matrix for the companion equivalence
        plonka_depth: Formula depth of the exhaustive two-variable companion slice
        property_instances: Sampled instances per matrix for the consequence conditions
        containment_instances: Sampled instances per Hilbert system
        dt_premises: Largest premise set in the deduction-transfer sweep
        seed: Seed for every sampled sweep
        corpus_path: Directory holding proofs/ and derivations/
    """

    plonka_instances: int = 2000
    plonka_depth: int = 1
    property_instances: int = 5000
    containment_instances: int = 200
    dt_premises: int = 1
    seed: int = 20210607
    corpus_path: Path = Path("corpus")

    @classmethod
    def from_config(cls, config: Optional[WorkbenchConfig] = None, quick: bool = False) -> "ReproSettings":
        config = config or WorkbenchConfig()
        if quick:
            return cls(
                plonka_instances=50,
                plonka_depth=0,
                property_instances=200,
                containment_instances=20,
                dt_premises=0,
                seed=config.random_seed,
                corpus_path=config.corpus_path,
            )
        per_matrix = max(1, config.property_instances // len(PLONKA_MATRICES))
        return cls(
            plonka_instances=per_matrix,
            property_instances=max(1, config.property_instances // 2),
            seed=config.random_seed,
            corpus_path=config.corpus_path,
        )


def _result(name: str, failures: Sequence[str], passed_detail: str) -> ReproCheck:
    if failures:
        shown = "; ".join(failures[:3])
        more = f" (+{len(failures) - 3} more)" if len(failures) > 3 else ""
        return ReproCheck(name, False, f"{len(failures)} failure(s): {shown}{more}")
    return ReproCheck(name, True, passed_detail)


def check_table_fidelity(settings: ReproSettings) -> ReproCheck:
    """Evaluate each operator on every argument tuple and compare with the printed tables."""
    mismatches: List[str] = []
    entries = 0
    for matrix_id, (order, tables) in PRINTED_TABLES.items():
        algebra = get_algebra(matrix_id)
        for symbol, rows in tables.items():
            if len(rows) == 1:
                formula = parse_formula(f"{symbol} p")
                cells = [({"p": a}, value) for a, value in zip(order, rows[0].split())]
            else:
                formula = parse_formula(f"p {symbol} q")
                cells = [
                    ({"p": a, "q": b}, value)
                    for a, row in zip(order, rows)
                    for b, value in zip(order, row.split())
                ]
            for valuation, expected in cells:
                entries += 1
                actual = evaluate(formula, valuation, algebra)
                if actual != expected:
                    mismatches.append(f"{matrix_id} {formula.text} at {valuation}: {actual} != {expected}")
    return _result("table fidelity", mismatches, f"{entries} printed entries reproduced")


def check_minimal_separation(settings: ReproSettings) -> ReproCheck:
    """p∧q ⊢ p∨q in the minimal system and its companion, but not with restricted rules."""
    minimal = get_system("minimal")
    restricted = get_system("minimal-re")
    premise, goal = parse_formula("p & q"), parse_formula("p | q")
    failures: List[str] = []

    shallow = SearchLimits(depth=4, max_formula_size=12)
    if derive_bounded([premise], goal, minimal, shallow) is None:
        failures.append("no proof of p & q |- p | q within depth 4")
    if not left_companion(hilbert_oracle(minimal, shallow))([premise], goal):
        failures.append("left companion rejects p & q |- p | q")
    if derive_bounded([premise], goal, restricted, SearchLimits(depth=8, max_formula_size=12)) is not None:
        failures.append("restricted system derives p | q from p & q")

    script = settings.corpus_path / "derivations" / "minimal_separation.proof"
    if not script.is_file():
        failures.append(f"missing derivation {script}")
    else:
        derivation = load_proof(script)
        if not check_proof(derivation, minimal).is_valid:
            failures.append(f"{script.name} is not a minimal derivation")
        check = check_proof(derivation, restricted)
        if check.is_valid or check.line != 2 or check.missing_variables != frozenset({"q"}):
            failures.append(f"restricted derivation check gave '{check.describe()}'")
    return _result(
        "minimal separation",
        failures,
        "found at depth <= 4, companion holds, restricted not found at depth 8, R1' fails at line 2",
    )


def check_paraconsistency(settings: ReproSettings) -> ReproCheck:
    expectations: List[Tuple[str, object, object]] = [
        ("ECQ in B2", probe_ecq(get_matrix("B2")), True),
        ("ECQ in B2+w", probe_ecq(get_matrix("B2+w")), False),
        ("LNC in B2+w", probe_lnc(get_matrix("B2+w")), True),
        ("ECQ in M3", probe_ecq(get_matrix("M3")), False),
        ("ECQ in PS3", probe_ecq(get_matrix("PS3")), False),
        ("∧-ECQ in M3", probe_land_ecq(get_matrix("M3")), False),
        ("∧-ECQ in prerough3", probe_land_ecq(get_matrix("prerough3")), True),
        ("LNC in M3", probe_lnc(get_matrix("M3")), True),
        ("LNC in prerough3", probe_lnc(get_matrix("prerough3")), False),
        ("class of B2", classify_paraconsistency(get_matrix("B2")), Paraconsistency.NOT),
        ("class of B2+w", classify_paraconsistency(get_matrix("B2+w")), Paraconsistency.WEAK),
        (
            "class of prerough3+w",
            classify_paraconsistency(get_matrix("prerough3+w")),
            Paraconsistency.STRONG,
        ),
    ]
    for matrix_id in PARACONSISTENCY_MATRICES:
        expectations.append(
            (
                f"predicted class of {matrix_id}+w",
                predict_companion_class(get_matrix(matrix_id)),
                classify_paraconsistency(get_matrix(f"{matrix_id}+w")),
            )
        )
    failures = [
        f"{label} is {actual}, expected {expected}"
        for label, actual, expected in expectations
        if actual != expected
    ]
    return _result("ECQ/LNC facts", failures, f"{len(expectations)} facts hold")


def check_rm3_deduction(settings: ReproSettings) -> ReproCheck:
    """Premise side true, implication side false, first witness p=1, q=1/2 with value 0."""
    m3 = get_matrix("M3")
    instance = deduction_instance([], "p | ~p", "q | ~q")
    row = probe_deduction(m3, [instance]).rows[0]
    failures: List[str] = []
    if not row.premise_side or row.implication_side:
        failures.append(row.describe())
    elif row.witness is None or row.witness.valuation != {"p": "1", "q": "1/2"}:
        failures.append(f"unexpected witness {row.witness.describe() if row.witness else None}")
    else:
        value = evaluate(instance.implication, row.witness.valuation, m3.algebra)
        if value != "0":
            failures.append(f"implication takes {value} at the witness, expected 0")

    witness = rm3_non_companion_witness(m3)
    if not witness.is_witness:
        failures.append(f"non-companion witness fails: {witness.describe()}")

    ps3 = probe_deduction(get_matrix("PS3"), [instance])
    if not (ps3.dt_holds and ps3.converse_holds):
        failures.append(f"PS3 deduction theorem fails: {ps3.rows[0].describe()}")
    return _result(
        "RM3 deduction theorem",
        failures,
        "DT fails in M3 at p=1, q=1/2 (value 0), holds in PS3; {p, p -> q} |= q witnesses non-companionhood",
    )


def check_plonka_equivalence(settings: ReproSettings) -> ReproCheck:
    """
    left_companion(⊨ over {m}) against ⊨ over {m, m ⊕ 1}.

    Every two-variable instance of depth ≤ plonka_depth with at most one premise
    is compared, then a seeded sample of deeper instances.
    """
    failures: List[str] = []
    total = 0
    for offset, matrix_id in enumerate(PLONKA_MATRICES):
        m = get_matrix(matrix_id)
        instances = list(
            enumerate_instances(m.language, ("p", "q"), settings.plonka_depth, max_premises=1)
        )
        instances += sample_instances(
            m.language, settings.plonka_instances, settings.seed + offset, max_premises=2, max_depth=3
        )
        report = compare_oracles(left_companion(matrix_oracle([m])), semantic_left_companion([m]), instances)
        total += len(report.rows)
        failures.extend(f"{matrix_id}: {format_instance(row.instance)}" for row in report.disagreements())
    return _result("companion equivalence", failures, f"{total} instance(s) agree")


def _containment_failures(
    system_id: str, instances: Sequence[Instance], limits: SearchLimits, sound_matrix: str
) -> Tuple[int, List[str]]:
    base = get_system(system_id)
    restricted = base.restricted()
    semantic = semantic_left_companion([get_matrix(sound_matrix)])
    successes = 0
    failures: List[str] = []
    for instance in instances:
        proof = derive_bounded(instance.premises, instance.conclusion, restricted, limits)
        if proof is None:
            continue
        successes += 1
        shown = f"{system_id}: {format_instance(instance)}"
        pruned = prune_derivation(proof, restricted)
        delta = extract_delta(instance.premises, instance.conclusion)
        if not check_proof(pruned, base).is_valid:
            failures.append(f"{shown} restricted proof is no {system_id} proof")
        elif not pruned.hypotheses_used <= delta:
            failures.append(f"{shown} uses premises outside var(conclusion)")
        elif not semantic(instance.premises, instance.conclusion):
            failures.append(f"{shown} rejected by the {sound_matrix} left companion")
    return successes, failures


def check_containment(settings: ReproSettings) -> ReproCheck:
    """Every restricted-system proof found is a base proof from var-included premises."""
    minimal = sample_instances(
        MINIMAL, settings.containment_instances, settings.seed, max_premises=2, max_depth=2
    )
    heyting = sample_instances(
        HEYTING,
        settings.containment_instances,
        settings.seed,
        variables=("p", "q"),
        max_premises=1,
        max_depth=1,
    )
    found_minimal, failures = _containment_failures(
        "minimal", minimal, SearchLimits(depth=3, max_formula_size=8), "B2"
    )
    found_ipc, ipc_failures = _containment_failures(
        "IPC", heyting, SearchLimits(depth=2, max_formula_size=7), "B2"
    )
    failures.extend(ipc_failures)
    return _result(
        "restricted-in-companion containment",
        failures,
        f"{found_minimal} minimal-re and {found_ipc} IPC-re derivation(s) land in the left companion",
    )


def check_translation(settings: ReproSettings) -> ReproCheck:
    """Translate every checked-in theorem proof and check it in the restricted system."""
    root = settings.corpus_path / "proofs"
    failures: List[str] = []
    count = 0
    for directory in sorted(p for p in root.glob("*") if p.is_dir()):
        system = get_system(directory.name)
        restricted = system.restricted()
        for path in sorted(directory.glob("*.proof")):
            count += 1
            try:
                translated = translate_theorem_proof(load_proof(path), system)
            except TranslationError as e:
                failures.append(f"{path.name}: {e}")
                continue
            check = check_proof(translated, restricted)
            if not check.is_valid:
                failures.append(f"{path.name}: {check.describe()}")
    if count < MIN_CORPUS_PROOFS:
        failures.append(f"only {count} corpus proof(s) under {root}, expected at least {MIN_CORPUS_PROOFS}")
    return _result("theorem-proof translation", failures, f"{count} proof(s) translated and checked")


def check_consequence_properties(settings: ReproSettings) -> ReproCheck:
    """Consequence conditions for every matrix oracle and its left companion."""
    failures: List[str] = []
    for offset, matrix_id in enumerate(PROPERTY_MATRICES):
        m = get_matrix(matrix_id)
        base = matrix_oracle([m])
        companion = left_companion(base)
        rng = random.Random(settings.seed + offset)
        instances = sample_instances(
            m.language, settings.property_instances, settings.seed + offset, max_premises=2, max_depth=3
        )
        theorems = list(enumerate_formulas(m.language, ("p", "q"), 1))
        for oracle in (base, companion):
            failures.extend(str(v) for v in consequence_violations(oracle, m.language, instances, rng))
        failures.extend(str(v) for v in companion_violations(companion, base, instances, theorems))
    return _result(
        "consequence conditions",
        failures,
        f"{settings.property_instances} instance(s) per matrix over {len(PROPERTY_MATRICES)} matrices",
    )


def check_deduction_transfer(settings: ReproSettings) -> ReproCheck:
    instances = enumerate_deduction_instances(
        HEYTING, ("p", "q"), max_depth=1, max_premises=settings.dt_premises, premise_depth=0
    )
    violations = deduction_transfer_violations(get_matrix("H3"), instances)
    return _result(
        "deduction-theorem transfer",
        [str(v) for v in violations],
        "H3 companion behaves as expected",
    )


def check_soundness(settings: ReproSettings) -> ReproCheck:
    failures: List[str] = []
    for system_id, matrix_ids in SOUNDNESS_FACTS.items():
        system = get_system(system_id)
        for matrix_id in matrix_ids:
            violations = soundness_violations(get_matrix(matrix_id), system)
            failures.extend(f"{system_id}/{matrix_id}: {v}" for v in violations)
    pairs = sum(len(ids) for ids in SOUNDNESS_FACTS.values())
    return _result("soundness", failures, f"{pairs} system/matrix pair(s) sound")


def check_declared_classes(settings: ReproSettings) -> ReproCheck:
    failures: List[str] = []
    for entry_id, (class_name, symbols) in DECLARED_CLASSES.items():
        algebra = get_algebra(entry_id).reduct(symbols)
        if not CLASS_PREDICATES[class_name](algebra):
            failures.append(f"{entry_id} is not {class_name}")
    if is_pre_rough(get_algebra("prerough3")):
        failures.append("printed prerough3 tables unexpectedly satisfy every pre-rough condition")
    return _result("declared classes", failures, f"{len(DECLARED_CLASSES)} algebra(s) in their classes")


CHECKS: Tuple[Callable[[ReproSettings], ReproCheck], ...] = (
    check_table_fidelity,
    check_minimal_separation,
    check_paraconsistency,
    check_rm3_deduction,
    check_plonka_equivalence,
    check_containment,
    check_translation,
    check_consequence_properties,
    check_deduction_transfer,
    check_soundness,
    check_declared_classes,
)


def run_repro(settings: Optional[ReproSettings] = None) -> ReproReport:
    """Run every check in order; a check that raises is recorded as a failure."""
    settings = settings or ReproSettings.from_config()
    report = ReproReport()
    for check in CHECKS:
        try:
            result = check(settings)
        except Exception as e:
            logger.exception(f"{check.__name__} raised")
            result = ReproCheck(check.__name__, False, f"raised {type(e).__name__}: {e}")
        logger.info(result.describe())
        report.checks.append(result)
    return report
