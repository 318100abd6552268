"""
Built-in Hilbert systems.

Schemas use the metavariables alpha, beta, gamma and delta. In LPS3 the
falsum ⊥ is written out as ~(p0 -> p0); p0 is one more metavariable there, and
every instance of it denotes the same value in PS3.
"""

import logging
from typing import Any, Dict, List, Sequence, Tuple

from ..proofs.system import HilbertSystem, Rule, VariableInclusion
from ..syntax.formula import HEYTING, MINIMAL, PRE_ROUGH, RM3_LANGUAGE, Formula, Language
from ..syntax.parser import parse_formula

logger = logging.getLogger(__name__)

FALSUM = "~(p0 -> p0)"


def _schemas(lang: Language, axioms: Sequence[Tuple[str, str]]) -> List[Tuple[str, Formula]]:
    return [(name, parse_formula(text, lang)) for name, text in axioms]


def _rule(lang: Language, name: str, premises: Sequence[str], conclusion: str, **kwargs: Any) -> Rule:
    return Rule(
        name,
        tuple(parse_formula(p, lang) for p in premises),
        parse_formula(conclusion, lang),
        **kwargs,
    )


def _modus_ponens(lang: Language) -> Rule:
    return _rule(lang, "MP", ["alpha", "alpha -> beta"], "beta")


def _adjunction(lang: Language) -> Rule:
    return _rule(lang, "&I", ["alpha", "beta"], "alpha & beta")


def minimal_system() -> HilbertSystem:
    """Two rules over {∧, ∨}: α∧β / α and α / α∨β."""
    return HilbertSystem.build(
        "minimal",
        MINIMAL,
        [],
        [
            _rule(MINIMAL, "R1", ["alpha & beta"], "alpha"),
            _rule(MINIMAL, "R2", ["alpha"], "alpha | beta"),
        ],
    )


IPC_AXIOMS = [
    ("A1", "alpha -> (beta -> alpha)"),
    ("A2", "(alpha -> (beta -> gamma)) -> ((alpha -> beta) -> (alpha -> gamma))"),
    ("A3", "alpha -> (beta -> (alpha & beta))"),
    ("A4", "(alpha & beta) -> alpha"),
    ("A5", "(alpha & beta) -> beta"),
    ("A6", "alpha -> (alpha | beta)"),
    ("A7", "beta -> (alpha | beta)"),
    ("A8", "(alpha -> gamma) -> ((beta -> gamma) -> ((alpha | beta) -> gamma))"),
    ("A9", "(alpha -> beta) -> ((alpha -> ~beta) -> ~alpha)"),
    ("A10", "0 -> alpha"),
]


def ipc_system() -> HilbertSystem:
    """Intuitionistic propositional calculus: A1-A10 and modus ponens."""
    return HilbertSystem.build("IPC", HEYTING, _schemas(HEYTING, IPC_AXIOMS), [_modus_ponens(HEYTING)])


def hipwk_system() -> HilbertSystem:
    """A1-A10 with restricted modus ponens."""
    return ipc_system().restricted("HIPWK")


HPRL_AXIOMS = [
    ("A1", "alpha -> ~~alpha"),
    ("A2", "~~alpha -> alpha"),
    ("A3", "(alpha & beta) -> beta"),
    ("A4", "(alpha & beta) -> (beta & alpha)"),
    ("A5", "(alpha & (beta | gamma)) -> ((alpha & beta) | (alpha & gamma))"),
    ("A6", "((alpha & beta) | (alpha & gamma)) -> (alpha & (beta | gamma))"),
    ("A7", "(alpha | beta) -> ~(~alpha & ~beta)"),
    ("A8", "~(~alpha & ~beta) -> (alpha | beta)"),
    ("A9", "C alpha -> ~I ~alpha"),
    ("A10", "~I ~alpha -> C alpha"),
    ("A11", "I alpha -> alpha"),
    ("A12", "(I alpha & I beta) -> I (alpha & beta)"),
    ("A13", "(alpha -> beta) -> ((~I alpha | I beta) & (~C alpha | C beta))"),
    ("A14", "((~I alpha | I beta) & (~C alpha | C beta)) -> (alpha -> beta)"),
]


def hprl_system() -> HilbertSystem:
    """Pre-rough logic: A1-A14 and rules R1-R9 (R1 is MP, R2 is HS)."""
    lang = PRE_ROUGH
    beta = parse_formula("beta")
    alpha_gamma = (parse_formula("alpha"), parse_formula("gamma"))
    rules = [
        _rule(lang, "MP", ["alpha", "alpha -> beta"], "beta"),
        _rule(
            lang,
            "HS",
            ["alpha -> beta", "beta -> gamma"],
            "alpha -> gamma",
            restricted_name="RHS",
            restricted_condition=VariableInclusion((beta,), alpha_gamma),
        ),
        _rule(lang, "R3", ["alpha"], "beta -> alpha"),
        _rule(lang, "R4", ["alpha -> beta"], "~beta -> ~alpha"),
        _rule(lang, "R5", ["alpha -> beta", "alpha -> gamma"], "alpha -> (beta & gamma)"),
        _rule(
            lang,
            "R6",
            ["alpha -> beta", "beta -> alpha", "gamma -> delta", "delta -> gamma"],
            "(alpha -> gamma) -> (beta -> delta)",
        ),
        _rule(lang, "R7", ["alpha -> beta"], "I alpha -> I beta"),
        _rule(lang, "R8", ["alpha"], "I alpha"),
        _rule(lang, "R9", ["I alpha -> I beta", "C alpha -> C beta"], "alpha -> beta"),
    ]
    return HilbertSystem.build("HPRL", lang, _schemas(lang, HPRL_AXIOMS), rules)


RM3_AXIOMS = [
    ("A1", "alpha -> alpha"),
    ("A2", "(alpha -> beta) -> ((beta -> gamma) -> (alpha -> gamma))"),
    ("A3", "alpha -> ((alpha -> beta) -> beta)"),
    ("A4", "(alpha -> (alpha -> beta)) -> (alpha -> beta)"),
    ("A5", "(alpha & beta) -> alpha"),
    ("A6", "(alpha & beta) -> beta"),
    ("A7", "((alpha -> beta) & (alpha -> gamma)) -> (alpha -> (beta & gamma))"),
    ("A8", "alpha -> (alpha | beta)"),
    ("A9", "beta -> (alpha | beta)"),
    ("A10", "((alpha -> gamma) & (beta -> gamma)) -> ((alpha | beta) -> gamma)"),
    ("A11", "(alpha & (beta | gamma)) -> ((alpha & beta) | (alpha & gamma))"),
    ("A12", "~~alpha -> alpha"),
    ("A13", "(alpha -> ~beta) -> (beta -> ~alpha)"),
    ("A14", "alpha -> (alpha -> alpha)"),
    ("A15", "alpha | (alpha -> beta)"),
]


def rm3_system() -> HilbertSystem:
    lang = RM3_LANGUAGE
    return HilbertSystem.build(
        "RM3", lang, _schemas(lang, RM3_AXIOMS), [_adjunction(lang), _modus_ponens(lang)]
    )


LPS3_AXIOMS = [
    ("A1", "alpha -> (beta -> alpha)"),
    ("A2", "(alpha -> (beta -> gamma)) -> ((alpha -> beta) -> (alpha -> gamma))"),
    ("A3", "(alpha & beta) -> alpha"),
    ("A4", "(alpha & beta) -> beta"),
    ("A5", "alpha -> (alpha | beta)"),
    ("A6", "((alpha -> gamma) & (beta -> gamma)) -> ((alpha | beta) -> gamma)"),
    ("A7", "((alpha -> beta) & (alpha -> gamma)) -> (alpha -> (beta & gamma))"),
    ("A8", "(alpha -> ~~alpha) & (~~alpha -> alpha)"),
    ("A9", "(~(alpha & beta) -> (~alpha | ~beta)) & ((~alpha | ~beta) -> ~(alpha & beta))"),
    ("A10", "(alpha & ~alpha) -> (~(beta -> alpha) -> gamma)"),
    ("A11", "(alpha -> beta) -> (~(alpha -> gamma) -> beta)"),
    ("A12", "(~alpha -> beta) -> (~(gamma -> alpha) -> beta)"),
    ("A13", f"{FALSUM} -> alpha"),
    ("A14", f"(alpha & (beta -> {FALSUM})) -> ~(alpha -> beta)"),
    (
        "A15",
        f"((alpha & (~alpha -> {FALSUM})) | (alpha & ~alpha)) | (~alpha & (alpha -> {FALSUM}))",
    ),
]


def lps3_system() -> HilbertSystem:
    lang = RM3_LANGUAGE
    return HilbertSystem.build(
        "LPS3", lang, _schemas(lang, LPS3_AXIOMS), [_adjunction(lang), _modus_ponens(lang)]
    )


SYSTEM_BUILDERS = {
    "minimal": minimal_system,
    "minimal-re": lambda: minimal_system().restricted(),
    "IPC": ipc_system,
    "HIPWK": hipwk_system,
    "HPRL": hprl_system,
    "HPRL-re": lambda: hprl_system().restricted(),
    "RM3": rm3_system,
    "LPS3": lps3_system,
}

# Matrices each system is sound for.
SOUNDNESS_FACTS: Dict[str, Tuple[str, ...]] = {
    "IPC": ("B2", "H3"),
    "HIPWK": ("B2+w", "H3+w"),
    "HPRL": ("prerough3-std",),
    "HPRL-re": ("prerough3-std+w",),
    "RM3": ("M3",),
    "LPS3": ("PS3",),
    "minimal": ("B2",),
    "minimal-re": ("B2+w",),
}
