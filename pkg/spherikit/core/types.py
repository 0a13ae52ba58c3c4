"""Type definitions, configuration and error hierarchy for spherikit."""

from enum import Enum
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, Field, model_validator

# Exact scalar used everywhere: always canonical, denominator > 0.
BigRational = Fraction

JsonValue = dict[str, Any] | list[Any] | str | int | float | bool | None
CheckName = Literal["alt-sign", "n01", "hook", "paper-tables", "recurrence", "lambda", "psi"]
OutputFormat = Literal["text", "json"]


class ParserMode(str, Enum):
    """Decoder strictness mode."""

    STRICT = "strict"
    PERMISSIVE = "permissive"


class RangeRule(str, Enum):
    """Lower bound rule for the linearization index range."""

    MAX = "max"
    MIN = "min"


class CodecConfig(BaseModel):
    """Configuration for reading and writing family and expansion files.

    Attributes:
        mode: Parser mode (strict rejects non-canonical rationals and unknown keys)
        indent: JSON indentation for written files (default: 2)
        sort_keys: Emit object keys in sorted order (default: True)
    """

    mode: ParserMode = Field(default=ParserMode.STRICT)
    indent: int = Field(default=2, ge=0, le=8)
    sort_keys: bool = Field(default=True)

    model_config = {"frozen": True}


class SweepConfig(BaseModel):
    """Configuration for a conjecture or identity sweep.

    Attributes:
        which: Check to run
        l: Matrix size parameter (matrix size is l + 1)
        n_values: Values of n to sweep
        i_values: Values of the left product index (or w values for recurrence/psi)
        j_values: Values of the right product index
        w_max: Largest w for recurrence, lambda and psi checks
        workers: Worker processes (1 runs in-process)
        output_format: text or json
        output_path: Optional report file
        enforce_hypotheses: Reject n <= 1 for the alternating-sign and hook checks
        family_file: External family file (required for l >= 2)
    """

    which: CheckName
    l: int = Field(default=0, ge=0)
    n_values: tuple[int, ...] = Field(default=(2,), min_length=1)
    i_values: tuple[int, ...] = Field(default=(1,), min_length=1)
    j_values: tuple[int, ...] = Field(default=(1,), min_length=1)
    w_max: int = Field(default=10, ge=0)
    workers: int = Field(default=1, ge=1, le=256)
    output_format: OutputFormat = Field(default="text")
    output_path: str | None = Field(default=None)
    enforce_hypotheses: bool = Field(default=True)
    family_file: str | None = Field(default=None)

    model_config = {"frozen": True}

    @model_validator(mode="after")
    def _check_hypotheses(self) -> "SweepConfig":
        if any(n < 0 for n in self.n_values):
            raise ValueError("n must be nonnegative")
        if any(i < 0 for i in self.i_values) or any(j < 0 for j in self.j_values):
            raise ValueError("indices must be nonnegative")
        if self.enforce_hypotheses and self.which in ("alt-sign", "hook"):
            small = [n for n in self.n_values if n <= 1]
            if small:
                raise ValueError(
                    f"check {self.which!r} is stated for n > 1; got n in {small} "
                    "(use --permissive to evaluate anyway)"
                )
        if self.which == "n01" and any(n not in (0, 1) for n in self.n_values):
            raise ValueError("check 'n01' only applies to n in {0, 1}")
        if self.which == "alt-sign" and self.l != 0:
            raise ValueError("check 'alt-sign' is the l = 0 conjecture")
        if self.which == "n01" and self.l != 0:
            raise ValueError("check 'n01' is stated for l = 0")
        if self.l > 1 and self.family_file is None:
            raise ValueError("closed-form families exist for l <= 1 only; pass a family file")
        return self


# Error hierarchy
class SpherikitError(Exception):
    """Base exception for all spherikit errors."""

    pass


class ExactDivisionByZero(SpherikitError, ZeroDivisionError):
    """Exact division by the zero rational."""

    pass


class ShapeMismatch(SpherikitError):
    """Matrix or range shapes do not line up."""

    pass


class NotDivisible(SpherikitError):
    """Polynomial division left a nonzero remainder."""

    def __init__(self, dividend: Any, divisor: Any, remainder: Any):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{dividend!s} is not divisible by {divisor!s} (remainder {remainder!s})")


class HypergeomError(SpherikitError):
    """Invalid terminating hypergeometric specification."""

    pass


class TerminatorError(HypergeomError):
    """Not exactly one nonpositive integer upper parameter."""

    pass


class LowerParamPole(HypergeomError):
    """A lower parameter Pochhammer symbol vanishes inside the series."""

    def __init__(self, lower: Fraction, j: int):
        self.lower = lower
        self.j = j
        super().__init__(f"lower parameter {lower} hits zero at term {j}")


class ZeroShift(HypergeomError):
    """A unit-shift pair with s = 0."""

    pass


class FamilyError(SpherikitError):
    """Errors while constructing or loading a family."""

    pass


class UnsupportedType(FamilyError):
    """Closed-form construction requested for an unsupported (n, l)."""

    pass


class NormalizationSingular(FamilyError):
    """An entry vanishes at t = 1 and cannot be normalized."""

    def __init__(self, w: int, row: int, col: int):
        self.w = w
        self.row = row
        self.col = col
        super().__init__(f"entry ({row}, {col}) of member w={w} vanishes at t = 1")


class NormalizationMismatch(FamilyError):
    """A family declared normalized is not all ones at t = 1."""

    def __init__(self, w: int, row: int, col: int, value: Fraction):
        self.w = w
        self.row = row
        self.col = col
        self.value = value
        super().__init__(f"entry ({row}, {col}) of member w={w} equals {value} at t = 1, not 1")


class FamilyParseError(FamilyError):
    """Family or expansion file is not valid JSON or has malformed scalars."""

    pass


class SchemaError(FamilyError):
    """Family or expansion payload does not match the schema."""

    pass


class MissingMember(FamilyError):
    """A member index needed by a computation is absent from the family."""

    def __init__(self, w: int):
        self.w = w
        super().__init__(f"family has no member w={w}")


class ExpansionError(SpherikitError):
    """Basis expansion failed."""

    def __init__(self, message: str, row: int, rank: int, unknowns: int):
        self.row = row
        self.rank = rank
        self.unknowns = unknowns
        super().__init__(f"{message} (target row {row}, rank {rank}, unknowns {unknowns})")


class BasisInsufficient(ExpansionError):
    """The index set cannot represent the target."""

    pass


class BasisDependent(ExpansionError):
    """The expansion is not unique over the index set."""

    pass


class RecurrenceDegenerate(ExpansionError):
    """The three-term recurrence is not uniquely determined."""

    pass


class SingularBase(SpherikitError):
    """det Phi(0, t) is identically zero."""

    pass


class EmptySweep(SpherikitError):
    """A sweep configuration plans no cells."""

    pass
