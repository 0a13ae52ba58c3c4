"""JSON payload decoding for family and expansion files, with strict and permissive modes."""

import re
from collections.abc import Mapping
from fractions import Fraction
from typing import Any

from spherikit.core.exactnum import to_text
from spherikit.core.polyalg import Poly, PolyMatrix, RatMatrix
from spherikit.core.types import (
    BigRational,
    CodecConfig,
    FamilyParseError,
    JsonValue,
    ParserMode,
    RangeRule,
    SchemaError,
)

# Canonical rational text: "0", "-3", "7/2"; never "2/4", "3/1", "-0" or "+1".
_CANONICAL = re.compile(r"^(0|-?[1-9][0-9]*)(/[1-9][0-9]*)?$")
_LOOSE = re.compile(r"^\s*[+-]?[0-9]+(\s*/\s*[+-]?[0-9]+)?\s*$")

FAMILY_KEYS = frozenset({"l", "n", "normalized", "members"})
EXPANSION_KEYS = frozenset({"l", "n", "i", "j", "kmin", "kmax", "coeffs", "residual_zero"})
EXPANSION_OPTIONAL_KEYS = frozenset({"range_rule"})


def decode_rational(value: JsonValue, mode: ParserMode = ParserMode.STRICT) -> BigRational:
    """
    Parse one rational scalar.

    Strict mode accepts only canonical "p/q" strings. Permissive mode also accepts JSON
    integers, non-reduced fractions, explicit "+" signs and the Unicode minus sign.

    Raises:
        FamilyParseError: Malformed or non-canonical text

    Examples:
        >>> decode_rational("-1/2")
        Fraction(-1, 2)
        >>> decode_rational("2/4", ParserMode.PERMISSIVE)
        Fraction(1, 2)
    """
    if mode is ParserMode.PERMISSIVE:
        if isinstance(value, int) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, str):
            text = value.replace("−", "-")
            if _LOOSE.match(text):
                num, _, den = text.replace(" ", "").partition("/")
                if den and int(den) == 0:
                    raise FamilyParseError(f"zero denominator in {value!r}")
                return Fraction(int(num), int(den) if den else 1)
        raise FamilyParseError(f"not a rational: {value!r}")

    if not isinstance(value, str) or not _CANONICAL.match(value):
        raise FamilyParseError(f"not a canonical rational string: {value!r}")
    result = Fraction(value)
    if to_text(result) != value:
        raise FamilyParseError(f"rational {value!r} is not in lowest terms")
    return result


def decode_poly(value: JsonValue, mode: ParserMode = ParserMode.STRICT) -> Poly:
    """
    Parse a polynomial from its ascending coefficient list.

    Strict mode rejects trailing zero coefficients; the zero polynomial is [].
    """
    if not isinstance(value, list):
        raise SchemaError(f"polynomial must be a list of coefficients, got {type(value).__name__}")
    coeffs = [decode_rational(c, mode) for c in value]
    if mode is ParserMode.STRICT and coeffs and coeffs[-1] == 0:
        raise FamilyParseError(f"polynomial {value!r} has trailing zero coefficients")
    return Poly(tuple(coeffs))


def _rows(value: JsonValue, what: str) -> list[list[Any]]:
    if not isinstance(value, list) or not value or not all(isinstance(r, list) for r in value):
        raise SchemaError(f"{what} must be a nonempty list of rows")
    width = len(value[0])
    if width == 0 or any(len(r) != width for r in value):
        raise SchemaError(f"{what} rows must be nonempty and of equal length")
    return value


def decode_polymatrix(value: JsonValue, mode: ParserMode = ParserMode.STRICT) -> PolyMatrix:
    """Parse a matrix of polynomials: rows of coefficient lists."""
    return PolyMatrix.from_rows(
        [[decode_poly(e, mode) for e in row] for row in _rows(value, "polynomial matrix")]
    )


def decode_ratmatrix(value: JsonValue, mode: ParserMode = ParserMode.STRICT) -> RatMatrix:
    """Parse a matrix of rational scalars."""
    return RatMatrix.from_rows(
        [[decode_rational(e, mode) for e in row] for row in _rows(value, "rational matrix")]
    )


def _object(
    data: JsonValue,
    required: frozenset[str],
    optional: frozenset[str],
    mode: ParserMode,
    what: str,
) -> Mapping[str, Any]:
    if not isinstance(data, dict):
        raise SchemaError(f"{what} must be a JSON object")
    missing = required - data.keys()
    if missing:
        raise SchemaError(f"{what} is missing keys: {', '.join(sorted(missing))}")
    unknown = data.keys() - required - optional
    if unknown and mode is ParserMode.STRICT:
        raise SchemaError(f"{what} has unknown keys: {', '.join(sorted(unknown))}")
    return data


def _nonnegative_int(data: Mapping[str, Any], key: str) -> int:
    value = data[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise SchemaError(f"{key!r} must be a nonnegative integer, got {value!r}")
    return value


def _index_map(value: JsonValue, what: str) -> dict[int, Any]:
    if not isinstance(value, dict):
        raise SchemaError(f"{what} must be an object keyed by index")
    out: dict[int, Any] = {}
    for key, item in value.items():
        if not isinstance(key, str) or not key.isdigit() or (len(key) > 1 and key[0] == "0"):
            raise SchemaError(f"{what} key {key!r} is not a nonnegative integer")
        out[int(key)] = item
    return out


def decode_family_payload(
    data: JsonValue, config: CodecConfig | None = None
) -> tuple[int, int, bool, dict[int, PolyMatrix]]:
    """
    Decode a family payload into (l, n, normalized, members).

    Schema: {"l": int, "n": int, "normalized": bool, "members": {"<w>": [[[coeffs]]]}}

    Raises:
        SchemaError: Missing or mistyped keys
        FamilyParseError: Malformed rational text
    """
    config = config or CodecConfig()
    obj = _object(data, FAMILY_KEYS, frozenset(), config.mode, "family")
    l = _nonnegative_int(obj, "l")
    n = _nonnegative_int(obj, "n")
    normalized = obj["normalized"]
    if not isinstance(normalized, bool):
        raise SchemaError(f"'normalized' must be a boolean, got {normalized!r}")
    members = {
        w: decode_polymatrix(m, config.mode)
        for w, m in sorted(_index_map(obj["members"], "members").items())
    }
    return l, n, normalized, members


def decode_expansion_payload(data: JsonValue, config: CodecConfig | None = None) -> dict[str, Any]:
    """
    Decode an expansion payload.

    Returns a dict with l, n, i, j, kmin, kmax, residual_zero, rule (RangeRule) and
    coeffs (int -> RatMatrix). The coefficient keys must cover kmin..kmax exactly.
    """
    config = config or CodecConfig()
    obj = _object(data, EXPANSION_KEYS, EXPANSION_OPTIONAL_KEYS, config.mode, "expansion")
    ints = {key: _nonnegative_int(obj, key) for key in ("l", "n", "i", "j", "kmin", "kmax")}
    if not isinstance(obj["residual_zero"], bool):
        raise SchemaError("'residual_zero' must be a boolean")
    try:
        rule = RangeRule(obj.get("range_rule", RangeRule.MAX.value))
    except ValueError as e:
        raise SchemaError(f"unknown range_rule {obj.get('range_rule')!r}") from e

    coeffs = {
        k: decode_ratmatrix(m, config.mode)
        for k, m in sorted(_index_map(obj["coeffs"], "coeffs").items())
    }
    if sorted(coeffs) != list(range(ints["kmin"], ints["kmax"] + 1)):
        raise SchemaError(f"coeffs must cover k={ints['kmin']}..{ints['kmax']}")
    return {**ints, "residual_zero": obj["residual_zero"], "rule": rule, "coeffs": coeffs}
