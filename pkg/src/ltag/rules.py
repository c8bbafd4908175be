"""
Lexical Rule Chains

Applies lexical rules by inheritance. Each rule ``r`` relates an
``<input r ...>`` description to an ``<output r ...>`` description inside the
entry's feature structure; applying a sequence of rules means linking them:

    Derived:
        <> == Word
        <input r1> == <>
        <input r2> == <output r1>
        <surface> == <output r2>.

Which rules apply is read from boolean ``<alt r>`` flags on the word.
Applicability constraints are checked while building the chain; a
violating word gets no surface links at all.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

import structlog

from config import settings
from datr.engine import InferenceEngine, UndefinedReason
from datr.errors import EvaluationError, UnknownNodeError
from datr.model import EMPTY_PATH, LocalNode, LocalPath, Path, Rvalue, Sentence, Theory
from ltag.errors import AltFlagError, UnknownRuleError
from ltag.features import extract_features
from ltag.models import UNDEF, FeatureStructure, LtagVocabulary, TagTree
from ltag.trees import reconstruct_tree

log = structlog.get_logger()

DATIVE = "dative"
PASSIVE = "passive"
AUXINV = "auxinv"
WHQ = "whq"
REL = "rel"
TOPIC = "topic"

ALT = "alt"
INPUT = "input"
OUTPUT = "output"
SURFACE = "surface"
TRUE = "true"
FALSE = "false"

# dative before passive ("passive of the dative"), extraction rules last
CANONICAL_ORDER: Tuple[str, ...] = (DATIVE, PASSIVE, AUXINV, WHQ, REL, TOPIC)


# ============================================================================
# Chain models
# ============================================================================

@dataclass(frozen=True)
class ConstraintTable:
    """Applicability constraints on rule combinations"""
    mutually_exclusive: Tuple[FrozenSet[str], ...] = (frozenset({WHQ, REL, TOPIC}),)
    requires: Tuple[Tuple[str, FrozenSet[str]], ...] = ()

    def clashes(self, flags: FrozenSet[str]) -> FrozenSet[str]:
        """Rules involved in any violated constraint"""
        clashing = set()
        for group in self.mutually_exclusive:
            present = group & flags
            if len(present) >= 2:
                clashing |= present
        for rule, needed in self.requires:
            if rule in flags and not needed <= flags:
                clashing |= {rule} | (needed - flags)
        return frozenset(clashing)


DEFAULT_CONSTRAINTS = ConstraintTable()


@dataclass(frozen=True)
class ChainSpec:
    """Rules to apply to a base node, in application order"""
    base: str
    applied: Tuple[str, ...]
    derived_name: str


@dataclass(frozen=True)
class ConstraintViolation:
    """A flag set rejected by the constraint table"""
    base: str
    flags: FrozenSet[str]
    clashing: Tuple[str, ...]
    derived_name: str

    def __str__(self) -> str:
        return f"constraint: {','.join(self.clashing)}"


Chain = Union[ChainSpec, ConstraintViolation]


def _ordered(rules: Iterable[str], order: Sequence[str]) -> Tuple[str, ...]:
    return tuple(sorted(rules, key=order.index))


def derived_node_name(base: str, applied: Sequence[str]) -> str:
    # '%' starts a comment in source text, so no parsed node can collide
    return f"{base}%{'+'.join(applied)}"


# ============================================================================
# Operations
# ============================================================================

def read_alt_flags(theory: Theory, word: str, known_rules: Iterable[str] = CANONICAL_ORDER,
                   engine: Optional[InferenceEngine] = None) -> FrozenSet[str]:
    """
    Rules whose ``<alt rule>`` flag is ``true`` at ``word``

    Raises:
        AltFlagError: a flag has a value other than true/false
        EvaluationError: a flag query hit a cycle or the depth bound
    """
    engine = engine or InferenceEngine(theory)
    rules = list(known_rules)
    outcomes = engine.evaluate_many(word, [Path.of(ALT, rule) for rule in rules])
    flags = set()
    for rule in rules:
        outcome = outcomes[Path.of(ALT, rule)]
        if not outcome.is_defined:
            if outcome.reason != UndefinedReason.NO_MATCHING_SENTENCE:
                raise EvaluationError(outcome)
            continue
        value = str(outcome.value)
        if value == TRUE:
            flags.add(rule)
        elif value not in (FALSE, UNDEF):
            raise AltFlagError(word, rule, value)
    return frozenset(flags)


def build_chain(word: str, flags: Iterable[str], order: Sequence[str] = CANONICAL_ORDER,
                constraints: ConstraintTable = DEFAULT_CONSTRAINTS) -> Chain:
    """
    Order the flagged rules and check them against the constraint table

    Raises:
        UnknownRuleError: a flag outside ``order``
    """
    flags = frozenset(flags)
    unknown = flags - set(order)
    if unknown:
        raise UnknownRuleError(unknown)

    applied = _ordered(flags, order)
    clashing = constraints.clashes(flags)
    if clashing:
        return ConstraintViolation(word, flags, _ordered(clashing, order),
                                   derived_node_name(word, applied))
    return ChainSpec(word, applied, derived_node_name(word, applied))


def synthesize_glue(chain: Chain) -> Tuple[Sentence, ...]:
    """Inheritance sentences linking base, rule stages and surface"""
    name = chain.derived_name

    def sentence(path: Path, descriptor) -> Sentence:
        return Sentence(name, path, Rvalue.single(descriptor))

    glue = [sentence(EMPTY_PATH, LocalNode(chain.base))]
    if isinstance(chain, ConstraintViolation):
        return tuple(glue)

    if not chain.applied:
        glue.append(sentence(Path.of(SURFACE), LocalPath(EMPTY_PATH)))
        return tuple(glue)

    previous: Path = EMPTY_PATH
    for rule in chain.applied:
        glue.append(sentence(Path.of(INPUT, rule), LocalPath(previous)))
        previous = Path.of(OUTPUT, rule)
    glue.append(sentence(Path.of(SURFACE), LocalPath(previous)))
    return tuple(glue)


@dataclass
class Derivation:
    """Outcome of applying a rule chain to one word"""
    word: str
    chain: Chain
    theory: Theory
    features: FeatureStructure
    surface: Optional[TagTree]

    @property
    def violation(self) -> Optional[ConstraintViolation]:
        return self.chain if isinstance(self.chain, ConstraintViolation) else None


def apply_chain(theory: Theory, chain: Chain, depth: Optional[int] = None,
                vocabulary: Optional[LtagVocabulary] = None) -> Derivation:
    """Inject the chain's glue into a copy of the theory and read the surface tree"""
    augmented = theory.with_node(chain.derived_name, synthesize_glue(chain))
    if isinstance(chain, ConstraintViolation):
        return Derivation(chain.base, chain, augmented, FeatureStructure(), None)

    features = extract_features(augmented, chain.derived_name, Path.of(SURFACE),
                                depth=depth, vocabulary=vocabulary)
    surface = None if features.is_empty or not features.labels else reconstruct_tree(features)
    return Derivation(chain.base, chain, augmented, features, surface)


def derive_word(theory: Theory, word: str, order: Sequence[str] = CANONICAL_ORDER,
                constraints: ConstraintTable = DEFAULT_CONSTRAINTS,
                depth: Optional[int] = None,
                vocabulary: Optional[LtagVocabulary] = None) -> Derivation:
    """
    Derive the surface tree of a word from its alt flags

    Raises:
        UnknownNodeError: the word is not defined
    """
    if word not in theory:
        raise UnknownNodeError(word)
    flags = read_alt_flags(theory, word, order)
    chain = build_chain(word, flags, order, constraints)
    derivation = apply_chain(theory, chain, depth, vocabulary)
    log.info("word_derived", word=word, chain=chain.derived_name,
             violation=str(derivation.violation) if derivation.violation else None,
             defined=derivation.surface is not None)
    return derivation


def family_subsets(rules: Iterable[str], order: Sequence[str] = CANONICAL_ORDER
                   ) -> List[Tuple[str, ...]]:
    """All subsets, by size then lexicographically by rule name; each in rule order"""
    names = sorted(set(rules))
    return [_ordered(subset, order) for size in range(len(names) + 1)
            for subset in combinations(names, size)]


def enumerate_family(theory: Theory, lexeme: str, rules: Iterable[str],
                     order: Sequence[str] = CANONICAL_ORDER,
                     constraints: ConstraintTable = DEFAULT_CONSTRAINTS,
                     depth: Optional[int] = None,
                     vocabulary: Optional[LtagVocabulary] = None,
                     workers: Optional[int] = None
                     ) -> Dict[FrozenSet[str], Optional[TagTree]]:
    """
    Surface trees for every admissible subset of ``rules`` applied to ``lexeme``

    Constraint-violating subsets are left out; subsets whose rule output is
    undefined at this lexeme map to ``None``.

    Raises:
        UnknownNodeError, UnknownRuleError
    """
    if lexeme not in theory:
        raise UnknownNodeError(lexeme)
    rules = frozenset(rules)
    unknown = rules - set(order)
    if unknown:
        raise UnknownRuleError(unknown)

    chains = [build_chain(lexeme, subset, order, constraints)
              for subset in family_subsets(rules, order)]
    chains = [c for c in chains if isinstance(c, ChainSpec)]

    with ThreadPoolExecutor(max_workers=workers or settings.FAMILY_WORKERS) as executor:
        derivations = list(executor.map(
            lambda chain: apply_chain(theory, chain, depth, vocabulary), chains))

    family = {frozenset(d.chain.applied): d.surface for d in derivations}
    log.info("family_enumerated", lexeme=lexeme, rules=sorted(rules), members=len(family))
    return family
