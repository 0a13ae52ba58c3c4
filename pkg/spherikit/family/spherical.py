"""Matrix-valued spherical functions Phi(w, t) of type (n, l) for l in {0, 1}."""

import json
import logging
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from types import MappingProxyType

from spherikit.core.decoder import decode_family_payload
from spherikit.core.exactnum import ONE, exact_div, factorial, pochhammer
from spherikit.core.hyper import HypergeomSpec, build_terminating
from spherikit.core.polyalg import PolyMatrix, poly_eval
from spherikit.core.types import (
    BigRational,
    CodecConfig,
    FamilyParseError,
    MissingMember,
    NormalizationMismatch,
    NormalizationSingular,
    SchemaError,
    UnsupportedType,
)

logger = logging.getLogger(__name__)

MAX_CLOSED_FORM_L = 1


@dataclass(frozen=True, order=True)
class SphericalType:
    """The pair (n, l); l + 1 is the matrix size."""

    n: int
    l: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise UnsupportedType(f"only n >= 0 is supported, got n={self.n}")
        if self.l < 0:
            raise UnsupportedType(f"l must be nonnegative, got l={self.l}")

    @property
    def size(self) -> int:
        return self.l + 1


@dataclass(frozen=True)
class SphericalFamily:
    """An indexed collection w -> Phi(w, t) of one type."""

    type: SphericalType
    normalized: bool
    members: Mapping[int, PolyMatrix] = field(default_factory=dict)
    swap_columns: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", MappingProxyType(dict(sorted(self.members.items()))))

    @property
    def n(self) -> int:
        return self.type.n

    @property
    def l(self) -> int:
        return self.type.l

    @property
    def size(self) -> int:
        return self.type.size

    @property
    def closed_form(self) -> bool:
        """True when members can be constructed on demand."""
        return self.type.l <= MAX_CLOSED_FORM_L

    def __getitem__(self, w: int) -> PolyMatrix:
        try:
            return self.members[w]
        except KeyError:
            raise MissingMember(w) from None

    def __contains__(self, w: object) -> bool:
        return w in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def require(self, indices: Iterable[int]) -> "SphericalFamily":
        """Return a family holding every index, constructing missing ones when possible."""
        missing = [w for w in indices if w not in self.members]
        if not missing:
            return self
        if not self.closed_form:
            raise MissingMember(min(missing))
        extra = {
            w: build_phi(self.n, self.l, w, self.normalized, self.swap_columns)
            for w in missing
        }
        members = {**self.members, **extra}
        return SphericalFamily(self.type, self.normalized, members, self.swap_columns)


@dataclass(frozen=True)
class EigenData:
    """Diagonals of the eigenvalue matrices Lambda and M at index w."""

    w: int
    Lambda: tuple[Fraction, ...]
    M: tuple[Fraction, ...]


def build_phi_l0(n: int, w: int) -> PolyMatrix:
    """
    Raw l = 0 member: the 1x1 matrix [2F1(-w, w+n+2; n+1; t)].

    Examples:
        >>> str(build_phi_l0(0, 1)[0, 0])
        '1 + (-3)t'
    """
    spec = HypergeomSpec.of([-w, w + n + 2], [n + 1])
    return PolyMatrix.from_rows([[build_terminating(spec)]])


def row_parameters_l1(n: int, w: int) -> tuple[int, int]:
    """The eigenvalue parameters of the two l = 1 rows."""
    return -w * (w + n + 3), -w * (w + n + 4) - n - 2


def build_phi_l1(n: int, w: int, swap_columns: bool = False) -> PolyMatrix:
    """
    Raw l = 1 member (2x2).

    Row 1:  (1 - lam1/(n+1)) 3F2(-w, w+n+3, lam1-n; n+2, lam1-n-1; t),  2F1(-w, w+n+3; n+1; t)
    Row 2:  2F1(-w, w+n+4; n+2; t),  -(n+1) 3F2(-w-1, w+n+3, lam2; n+1, lam2-1; t)

    with lam1 = -w(w+n+3) and lam2 = -w(w+n+4)-n-2. Each 3F2 is a 2F1 with one unit shift.

    Args:
        n: Type parameter n >= 0
        w: Index w >= 0
        swap_columns: Put the components in reverse order within each row
    """
    lam1, lam2 = row_parameters_l1(n, w)

    e11 = build_terminating(HypergeomSpec.of([-w, w + n + 3], [n + 2], [lam1 - n - 1]))
    e11 = e11 * (ONE - Fraction(lam1, n + 1))
    e12 = build_terminating(HypergeomSpec.of([-w, w + n + 3], [n + 1]))
    e21 = build_terminating(HypergeomSpec.of([-w, w + n + 4], [n + 2]))
    e22 = build_terminating(HypergeomSpec.of([-w - 1, w + n + 3], [n + 1], [lam2 - 1]))
    e22 = e22 * -(n + 1)

    rows = [[e11, e12], [e21, e22]]
    if swap_columns:
        rows = [list(reversed(r)) for r in rows]
    return PolyMatrix.from_rows(rows)


def normalize_member(w: int, raw: PolyMatrix) -> PolyMatrix:
    """Divide every entry by its own value at t = 1."""
    entries = []
    for r in range(raw.rows):
        for c in range(raw.cols):
            value = poly_eval(raw[r, c], 1)
            if value == 0:
                raise NormalizationSingular(w, r + 1, c + 1)
            entries.append(raw[r, c] * exact_div(1, value))
    return PolyMatrix(raw.rows, raw.cols, tuple(entries))


def normalize_family(
    stype: SphericalType, raw: Mapping[int, PolyMatrix], swap_columns: bool = False
) -> SphericalFamily:
    """
    Normalize raw members so that Phi(w, 1) is the all-ones matrix.

    Raises:
        NormalizationSingular: If an entry vanishes at t = 1
    """
    members = {w: normalize_member(w, m) for w, m in raw.items()}
    return SphericalFamily(stype, True, members, swap_columns)


@lru_cache(maxsize=4096)
def build_phi(
    n: int, l: int, w: int, normalized: bool = True, swap_columns: bool = False
) -> PolyMatrix:
    """Construct one member Phi(w, t) of type (n, l), l <= 1."""
    SphericalType(n, l)
    if w < 0:
        raise ValueError(f"w must be nonnegative, got {w}")
    if l == 0:
        raw = build_phi_l0(n, w)
    elif l == 1:
        raw = build_phi_l1(n, w, swap_columns)
    else:
        raise UnsupportedType(f"closed-form construction covers l <= 1, got l={l}")
    logger.debug("built Phi(%d, t) for (n, l) = (%d, %d)", w, n, l)
    return normalize_member(w, raw) if normalized else raw


def build_family(
    n: int, l: int, w_max: int, normalized: bool = True, swap_columns: bool = False
) -> SphericalFamily:
    """Family with members 0..w_max."""
    members = {w: build_phi(n, l, w, normalized, swap_columns) for w in range(w_max + 1)}
    return SphericalFamily(SphericalType(n, l), normalized, members, swap_columns)


def raw_value_at_one_l0(n: int, w: int) -> BigRational:
    """Value of the raw l = 0 member at t = 1: (-1)^w (w+1)! / (n+1)_w."""
    return (-1) ** w * factorial(w + 1) / pochhammer(n + 1, w)


def eigen_matrices(stype: SphericalType, w: int) -> EigenData:
    """
    Diagonal entries of Lambda and M, for 1 <= i <= l + 1:

        Lambda(i,i) = -w(w+n+i+l+1) - (i-1)(n+i)
        M(i,i)      = Lambda(i,i)(n-l+3i-3) - 3(i-1)(l-i+2)(n+i)
    """
    n, l = stype.n, stype.l
    lam: list[Fraction] = []
    mu: list[Fraction] = []
    for i in range(1, l + 2):
        value = -w * (w + n + i + l + 1) - (i - 1) * (n + i)
        lam.append(Fraction(value))
        mu.append(Fraction(value * (n - l + 3 * i - 3) - 3 * (i - 1) * (l - i + 2) * (n + i)))
    return EigenData(w=w, Lambda=tuple(lam), M=tuple(mu))


def check_lambda_consistency(n: int, w: int) -> bool:
    """The l = 1 row parameters equal Lambda(1,1) and Lambda(2,2)."""
    eigen = eigen_matrices(SphericalType(n, 1), w)
    lam1, lam2 = row_parameters_l1(n, w)
    return eigen.Lambda == (Fraction(lam1), Fraction(lam2))


def load_family_file(path: str | Path, config: CodecConfig | None = None) -> SphericalFamily:
    """
    Load and validate an externally supplied family.

    Raises:
        FamilyParseError: Malformed JSON or rational text
        SchemaError: Payload does not match the family schema
        NormalizationMismatch: Declared normalized but not all ones at t = 1
    """
    config = config or CodecConfig()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise FamilyParseError(f"{path}: not valid UTF-8: {e}") from e
    except OSError as e:
        raise FamilyParseError(f"{path}: cannot read: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise FamilyParseError(f"{path}: invalid JSON: {e}") from e

    l, n, normalized, members = decode_family_payload(data, config)
    if 0 not in members:
        raise SchemaError("family file must contain member w=0")
    for w, m in members.items():
        if m.shape != (l + 1, l + 1):
            raise SchemaError(f"member w={w} is {m.rows}x{m.cols}, expected {l + 1}x{l + 1}")
        if normalized:
            at_one = m.evaluate(1)
            for r in range(m.rows):
                for c in range(m.cols):
                    if at_one[r, c] != 1:
                        raise NormalizationMismatch(w, r + 1, c + 1, at_one[r, c])

    logger.info("loaded family (n, l) = (%d, %d) with %d members from %s", n, l, len(members), path)
    return SphericalFamily(SphericalType(n, l), normalized, members)
