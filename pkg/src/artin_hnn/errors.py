"""Exception hierarchy.

Each class carries a stable ``code`` string so callers (and the CLI) can
identify failures without matching on message text.
"""

from __future__ import annotations


class ArtinHNNError(Exception):
    code = "error"


class ValidationError(ArtinHNNError):
    code = "invalid-input"


class DuplicateGenerator(ValidationError):
    code = "duplicate-generator"


class BadGeneratorName(ValidationError):
    code = "bad-generator-name"


class UnknownGenerator(ValidationError):
    code = "unknown-generator"


class InvalidLabel(ValidationError):
    code = "invalid-label"


class SelfPairLabel(ValidationError):
    code = "self-pair-label"


class ContradictoryLabels(ValidationError):
    code = "contradictory-labels"


class RepeatedSource(ValidationError):
    code = "repeated-source"


class RepeatedTarget(ValidationError):
    code = "repeated-target"


class LabelMismatch(ValidationError):
    """Raised when a bijection does not preserve labels.

    ``pair`` and ``image`` are the offending unordered pairs, ``labels`` the
    two disagreeing labels.
    """

    code = "label-mismatch"

    def __init__(self, pair, image, labels):
        self.pair = pair
        self.image = image
        self.labels = labels
        super().__init__(
            f"phi does not preserve labels: m({pair[0]},{pair[1]})={_fmt(labels[0])} "
            f"but m({image[0]},{image[1]})={_fmt(labels[1])}"
        )


class InvalidCoverIndex(ValidationError):
    code = "invalid-k"


class LabelConflict(ArtinHNNError):
    """Two witnesses assign different labels to one pair of cover classes."""

    code = "label-conflict"

    def __init__(self, pair, witnesses):
        self.pair = pair
        self.witnesses = witnesses
        desc = "; ".join(f"i={i}: m({s},{t})={_fmt(lab)}" for i, s, t, lab in witnesses)
        super().__init__(f"conflicting labels for classes {pair[0]}, {pair[1]}: {desc}")


class ConstructionError(ArtinHNNError):
    """An internal invariant of the construction failed (a bug, not bad input)."""

    code = "construction-invariant"


class PresentationError(ArtinHNNError):
    code = "bad-presentation"


class HomomorphismError(ArtinHNNError):
    """A homomorphism failed its relator-respect check."""

    code = "relator-respect"


class BudgetExhausted(ArtinHNNError):
    """An oracle hit its budget; the answer is undecided."""

    code = "budget-exhausted"


class CosetOverflow(BudgetExhausted):
    code = "coset-overflow"


class UnsupportedOracle(ArtinHNNError):
    code = "unsupported-oracle"


class StageError(ArtinHNNError):
    """Wraps a failure inside the certificate pipeline with the stage name."""

    code = "stage-failure"

    def __init__(self, stage: str, cause: Exception):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage {stage!r} failed: {cause}")


def _fmt(label) -> str:
    return "inf" if label == float("inf") else str(label)


class InputParseError(ArtinHNNError):
    """Malformed input document; ``line``/``column`` are 1-based when known."""

    code = "parse-error"

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)
