"""Tests for sign grids, the hook pattern and the scalar sign checks."""

from fractions import Fraction

import pytest

from spherikit.analysis.conjectures import (
    Sign,
    Witness,
    check_alt_sign_l0,
    check_hook,
    check_n01_facts,
    hook_pattern,
    sign_grid,
)
from spherikit.core.polyalg import RatMatrix
from spherikit.core.types import FamilyError
from spherikit.family.spherical import SphericalFamily, SphericalType


def family(n: int, l: int) -> SphericalFamily:
    return SphericalFamily(SphericalType(n, l), True)


class TestSigns:
    """Sign helpers."""

    def test_of(self) -> None:
        assert Sign.of(Fraction(-1, 3)) is Sign.NEGATIVE
        assert Sign.of(0) is Sign.ZERO
        assert Sign.of(5) is Sign.POSITIVE

    def test_alternating(self) -> None:
        assert [Sign.alternating(m).value for m in range(4)] == ["+", "-", "+", "-"]

    def test_grid(self) -> None:
        grid = sign_grid(RatMatrix.from_rows([[1, -2], [0, Fraction(1, 7)]]))
        assert grid.to_rows() == [["+", "-"], ["0", "+"]]


class TestHookPattern:
    """Expected hook grids."""

    def test_three_by_three(self) -> None:
        assert hook_pattern(3, 0).to_rows() == [["+", "+", "+"], ["+", "-", "-"], ["+", "-", "+"]]

    def test_odd_parity_flips(self) -> None:
        assert hook_pattern(2, 1).to_rows() == [["-", "-"], ["-", "+"]]

    def test_scalar(self) -> None:
        assert hook_pattern(1, 1).to_rows() == [["-"]]

    def test_rejects_empty(self) -> None:
        with pytest.raises(ValueError):
            hook_pattern(0, 0)


class TestHookCheck:
    """Hook alternating check on the l = 1 family."""

    def test_counterexample_at_n2(self) -> None:
        """(i, j) = (2, 6) at n = 2 breaks the pattern at k = 5 and k = 7."""
        report = check_hook(family(2, 1), 2, 6)
        assert not report.holds
        assert report.witnesses == (
            Witness(5, 1, 2, Sign.POSITIVE, Sign.NEGATIVE, "sign"),
            Witness(7, 1, 2, Sign.POSITIVE, Sign.NEGATIVE, "sign"),
        )
        assert not report.outside_hypothesis

    def test_grids_at_n2(self) -> None:
        report = check_hook(family(2, 1), 2, 6)
        grids = {v.k: v.grid.to_rows() for v in report.verdicts}
        assert grids[4] == [["+", "+"], ["+", "-"]]
        assert grids[5] == [["-", "+"], ["-", "+"]]

    def test_k_outside_traditional_range_is_not_judged(self) -> None:
        report = check_hook(family(2, 1), 2, 6)
        below = next(v for v in report.verdicts if v.k == 3)
        assert not below.in_range
        assert below.holds is None

    @pytest.mark.parametrize("n", [3, 4, 5, 8])
    def test_holds_for_larger_n(self, n: int) -> None:
        assert check_hook(family(n, 1), 2, 6).holds

    def test_small_n_flagged(self) -> None:
        assert check_hook(family(1, 1), 1, 2).outside_hypothesis

    def test_requires_increasing_pair(self) -> None:
        with pytest.raises(ValueError):
            check_hook(family(3, 1), 2, 2)


class TestAltSign:
    """Alternating signs of scalar linearization coefficients."""

    @pytest.mark.parametrize("i,j", [(1, 1), (2, 3), (3, 4), (2, 6)])
    def test_holds_at_n2(self, i: int, j: int) -> None:
        verdict = check_alt_sign_l0(family(2, 0), i, j)
        assert verdict.holds
        assert not verdict.outside_hypothesis

    def test_zeros_at_n1(self) -> None:
        """At n = 1 the odd offsets vanish and are reported as zero witnesses."""
        verdict = check_alt_sign_l0(family(1, 0), 3, 4)
        assert not verdict.holds
        assert verdict.outside_hypothesis
        assert [(w.k, w.kind) for w in verdict.witnesses] == [(2, "zero"), (4, "zero"), (6, "zero")]

    def test_rejects_matrix_family(self) -> None:
        with pytest.raises(FamilyError):
            check_alt_sign_l0(family(2, 1), 1, 2)

    @pytest.mark.parametrize("n", [2, 3, 5])
    def test_agrees_with_hook_on_scalars(self, n: int) -> None:
        """On a 1x1 family the hook pattern reduces to plain alternation."""
        for i in range(1, 5):
            for j in range(i + 1, 6):
                hook = check_hook(family(n, 0), i, j)
                alt = check_alt_sign_l0(family(n, 0), i, j)
                assert hook.holds == alt.holds
                assert [w.k for w in hook.witnesses] == [w.k for w in alt.witnesses]


class TestN01Facts:
    """Positivity facts at n = 0 and n = 1."""

    @pytest.mark.parametrize("n", [0, 1])
    @pytest.mark.parametrize("i,j", [(1, 1), (2, 3), (3, 4)])
    def test_hold(self, n: int, i: int, j: int) -> None:
        verdict = check_n01_facts(family(n, 0), i, j)
        assert verdict.holds
        assert "criterion: met" in verdict.note

    def test_n0_all_positive(self) -> None:
        verdict = check_n01_facts(family(0, 0), 3, 4)
        assert all(a > 0 for a in verdict.coefficients.values())

    def test_rejects_other_n(self) -> None:
        with pytest.raises(ValueError):
            check_n01_facts(family(2, 0), 1, 2)
