"""LTAG view and rule-chain errors"""

from typing import Iterable

from datr.errors import DatrError
from datr.model import Path


class ReconstructionError(DatrError):
    """Feature structure is not a well-formed bottom-up tree encoding"""

    def __init__(self, message: str, position: Path):
        super().__init__(f"{message} at position {position}")
        self.position = position


class EncodingError(DatrError):
    """A tree cannot be encoded from the requested leaf"""


class ProbeError(DatrError):
    """The engine failed (cycle or depth) while probing a position"""

    def __init__(self, node: str, position: Path, feature: str, outcome):
        super().__init__(
            f"probing {node}:{position + Path.of(feature)} failed: "
            f"{outcome.reason.value} at {outcome.at}:{outcome.path}"
        )
        self.node = node
        self.position = position
        self.feature = feature
        self.outcome = outcome


class UnknownRuleError(DatrError):
    """A rule name outside the configured rule order"""

    def __init__(self, names: Iterable[str]):
        names = sorted(names)
        super().__init__(f"unknown rule name(s): {','.join(names)}")
        self.names = names


class AltFlagError(DatrError):
    """An alt flag is defined with a value other than true/false"""

    def __init__(self, word: str, rule: str, value: str):
        super().__init__(f"{word}:<alt {rule}> has non-boolean value {value!r}")
        self.word = word
        self.rule = rule
        self.value = value
