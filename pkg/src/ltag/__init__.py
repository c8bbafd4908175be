"""LTAG view over DATR theories: tree extraction, reconstruction and rule chains"""

from ltag.errors import (
    AltFlagError,
    EncodingError,
    ProbeError,
    ReconstructionError,
    UnknownRuleError,
)
from ltag.models import (
    FeatureStructure,
    LtagVocabulary,
    NodeType,
    TagTree,
)
from ltag.features import extract_features, flat_listing
from ltag.trees import encode_tree, reconstruct_tree
from ltag.render import RenderFormat, render
from ltag.rules import (
    CANONICAL_ORDER,
    DEFAULT_CONSTRAINTS,
    ChainSpec,
    ConstraintTable,
    ConstraintViolation,
    Derivation,
    build_chain,
    derive_word,
    enumerate_family,
    read_alt_flags,
    synthesize_glue,
)

__all__ = [
    # Errors
    'AltFlagError',
    'EncodingError',
    'ProbeError',
    'ReconstructionError',
    'UnknownRuleError',
    # Models
    'FeatureStructure',
    'LtagVocabulary',
    'NodeType',
    'TagTree',
    # Tree view
    'extract_features',
    'flat_listing',
    'encode_tree',
    'reconstruct_tree',
    'RenderFormat',
    'render',
    # Rule chains
    'CANONICAL_ORDER',
    'DEFAULT_CONSTRAINTS',
    'ChainSpec',
    'ConstraintTable',
    'ConstraintViolation',
    'Derivation',
    'build_chain',
    'derive_word',
    'enumerate_family',
    'read_alt_flags',
    'synthesize_glue',
]
