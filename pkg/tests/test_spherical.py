"""Tests for the spherical function families."""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

import pytest

from spherikit.core.polyalg import Poly, PolyMatrix, RatMatrix
from spherikit.core.types import (
    CodecConfig,
    FamilyParseError,
    MissingMember,
    NormalizationMismatch,
    NormalizationSingular,
    ParserMode,
    SchemaError,
    UnsupportedType,
)
from spherikit.family.spherical import (
    SphericalFamily,
    SphericalType,
    build_family,
    build_phi,
    build_phi_l1,
    check_lambda_consistency,
    eigen_matrices,
    load_family_file,
    normalize_family,
    normalize_member,
    raw_value_at_one_l0,
)


def p(*coeffs: int | Fraction) -> Poly:
    return Poly(tuple(Fraction(c) for c in coeffs))


class TestScalarFamily:
    """l = 0 members."""

    def test_member_one(self) -> None:
        """Phi(1, t) at n = 0 normalizes to (3t - 1)/2."""
        assert str(build_phi(0, 0, 1)[0, 0]) == "(-1/2) + (3/2)t"

    def test_raw_member(self) -> None:
        assert build_phi(0, 0, 1, normalized=False)[0, 0] == p(1, -3)

    @pytest.mark.parametrize("n", [0, 1, 2, 5])
    @pytest.mark.parametrize("w", [0, 1, 2, 3, 6])
    def test_raw_value_at_one(self, n: int, w: int) -> None:
        """The raw member at t = 1 is (-1)^w (w+1)! / (n+1)_w."""
        raw = build_phi(n, 0, w, normalized=False)
        assert raw[0, 0](1) == raw_value_at_one_l0(n, w)

    def test_degree(self) -> None:
        assert build_phi(3, 0, 5).degree == 5


class TestMatrixFamily:
    """l = 1 members."""

    def test_member_zero(self) -> None:
        """Phi(0, t) = [[1, 1], [1, (n+2)t - (n+1)]]."""
        for n in range(5):
            expected = PolyMatrix.from_rows([[1, 1], [1, p(-(n + 1), n + 2)]])
            assert build_phi(n, 1, 0) == expected

    @pytest.mark.parametrize("n", [0, 2, 4])
    @pytest.mark.parametrize("w", [0, 1, 3, 6])
    def test_all_ones_at_one(self, n: int, w: int) -> None:
        assert build_phi(n, 1, w).evaluate(1) == RatMatrix.from_rows([[1, 1], [1, 1]])

    def test_degrees(self) -> None:
        """Row 2 column 2 carries one extra degree."""
        assert build_phi(2, 1, 4).degrees() == ((4, 4), (4, 5))

    def test_swap_columns(self) -> None:
        plain = build_phi_l1(2, 3)
        swapped = build_phi_l1(2, 3, swap_columns=True)
        assert swapped.to_rows() == [list(reversed(r)) for r in plain.to_rows()]

    def test_unsupported_l(self) -> None:
        with pytest.raises(UnsupportedType):
            build_phi(0, 2, 0)

    def test_negative_n(self) -> None:
        with pytest.raises(UnsupportedType):
            SphericalType(-1, 0)


class TestNormalization:
    """Division by the value at t = 1."""

    def test_singular(self) -> None:
        """An entry vanishing at t = 1 cannot be normalized."""
        with pytest.raises(NormalizationSingular) as exc:
            normalize_member(3, PolyMatrix.from_rows([[1, p(-1, 1)]]))
        assert (exc.value.w, exc.value.row, exc.value.col) == (3, 1, 2)

    @pytest.mark.parametrize("n", [0, 2])
    def test_family_matches_normalized_build(self, n: int) -> None:
        raw = {w: build_phi(n, 1, w, normalized=False) for w in range(4)}
        family = normalize_family(SphericalType(n, 1), raw)
        assert family.normalized
        assert all(family[w] == build_phi(n, 1, w) for w in range(4))
        assert all(family[w].evaluate(1) == RatMatrix.from_rows([[1, 1], [1, 1]]) for w in family)


class TestFamilyContainer:
    """Indexed families."""

    def test_missing_member(self) -> None:
        family = SphericalFamily(SphericalType(0, 2), True, {0: PolyMatrix.identity(3)})
        with pytest.raises(MissingMember) as exc:
            family.require([0, 1])
        assert exc.value.w == 1

    def test_require_builds_closed_form(self) -> None:
        family = SphericalFamily(SphericalType(1, 1), True).require([0, 4])
        assert sorted(family) == [0, 4]
        assert family[4] == build_phi(1, 1, 4)

    def test_build_family(self) -> None:
        family = build_family(2, 1, 3)
        assert len(family) == 4
        assert family.size == 2


class TestEigen:
    """Diagonal eigenvalue matrices."""

    def test_example(self) -> None:
        eigen = eigen_matrices(SphericalType(0, 1), 1)
        assert eigen.Lambda == (-4, -7)
        assert eigen.M == (4, -20)

    def test_scalar_case(self) -> None:
        """For l = 0, Lambda = -w(w+n+2)."""
        assert eigen_matrices(SphericalType(3, 0), 2).Lambda == (-14,)

    @pytest.mark.parametrize("n", [0, 1, 7, 20])
    @pytest.mark.parametrize("w", [0, 1, 9, 20])
    def test_lambda_consistency(self, n: int, w: int) -> None:
        assert check_lambda_consistency(n, w)


class TestFamilyFile:
    """Loading externally supplied families."""

    def test_load(self, small_family_file: Path) -> None:
        family = load_family_file(small_family_file)
        assert (family.n, family.l, len(family)) == (0, 0, 2)
        assert family[1] == build_phi(0, 0, 1)

    def test_empty_members(self, tmp_path: Path, small_family_payload: dict[str, Any]) -> None:
        """Member w = 0 is required."""
        path = tmp_path / "empty.json"
        path.write_text(json.dumps({**small_family_payload, "members": {}}), encoding="utf-8")
        with pytest.raises(SchemaError):
            load_family_file(path)

    def test_not_normalized(self, tmp_path: Path, small_family_payload: dict[str, Any]) -> None:
        path = tmp_path / "bad.json"
        payload = {**small_family_payload, "members": {"0": [[["2"]]]}}
        path.write_text(json.dumps(payload), encoding="utf-8")
        with pytest.raises(NormalizationMismatch) as exc:
            load_family_file(path)
        assert exc.value.value == 2

    def test_wrong_shape(self, tmp_path: Path, small_family_payload: dict[str, Any]) -> None:
        path = tmp_path / "shape.json"
        payload = {**small_family_payload, "members": {"0": [[["1"], ["1"]]]}}
        path.write_text(json.dumps(payload), encoding="utf-8")
        with pytest.raises(SchemaError):
            load_family_file(path)

    def test_invalid_json(self, tmp_path: Path) -> None:
        path = tmp_path / "broken.json"
        path.write_text("{", encoding="utf-8")
        with pytest.raises(FamilyParseError):
            load_family_file(path)

    def test_not_utf8(self, tmp_path: Path) -> None:
        path = tmp_path / "latin1.json"
        path.write_bytes(b'{"l": 0, "n": 0, "normalized": true, "members": {"0": [[["\xff"]]]}}')
        with pytest.raises(FamilyParseError, match="UTF-8"):
            load_family_file(path)

    def test_unreadable(self, tmp_path: Path) -> None:
        with pytest.raises(FamilyParseError, match="cannot read"):
            load_family_file(tmp_path)

    def test_permissive_integers(
        self, tmp_path: Path, small_family_payload: dict[str, Any], permissive_config: CodecConfig
    ) -> None:
        """Permissive mode accepts bare integers and unreduced fractions."""
        path = tmp_path / "loose.json"
        payload = {**small_family_payload, "members": {"0": [[[1]]], "1": [[["-2/4", "3/2"]]]}}
        path.write_text(json.dumps(payload), encoding="utf-8")
        with pytest.raises(FamilyParseError):
            load_family_file(path, CodecConfig(mode=ParserMode.STRICT))
        assert load_family_file(path, permissive_config)[1] == build_phi(0, 0, 1)
