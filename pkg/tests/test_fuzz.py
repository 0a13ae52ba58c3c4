"""Property-based tests for the exact arithmetic layer."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from spherikit.core.decoder import decode_poly, decode_rational
from spherikit.core.encoder import encode_poly, encode_rational
from spherikit.core.exactnum import pochhammer
from spherikit.core.hyper import HypergeomSpec, build_terminating, shift_factor_consistency
from spherikit.core.polyalg import (
    Poly,
    PolyMatrix,
    RatMatrix,
    Unique,
    adjugate_det,
    poly_divmod,
    poly_exact_div,
    solve_exact,
)

small_fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
positive_fractions = st.fractions(min_value=Fraction(1, 12), max_value=20, max_denominator=12)
polys = st.lists(small_fractions, max_size=6).map(lambda cs: Poly(tuple(cs)))


def square(size: int) -> st.SearchStrategy[list[list[Fraction]]]:
    return st.lists(
        st.lists(small_fractions, min_size=size, max_size=size), min_size=size, max_size=size
    )


@pytest.mark.fuzz
class TestFuzzExactArithmetic:
    """Identities that must hold for arbitrary rationals."""

    @given(a=small_fractions, j=st.integers(min_value=0, max_value=12))
    @settings(max_examples=1000, deadline=None)
    def test_pochhammer_step(self, a: Fraction, j: int) -> None:
        """(a)_{j+1} = (a)_j (a + j)."""
        assert pochhammer(a, j + 1) == pochhammer(a, j) * (a + j)

    @given(s=small_fractions, degree=st.integers(min_value=0, max_value=10))
    @settings(max_examples=1000, deadline=None)
    def test_shift_factor(self, s: Fraction, degree: int) -> None:
        assume(s != 0)
        assert shift_factor_consistency(s, degree)

    @given(
        w=st.integers(min_value=0, max_value=6),
        a=positive_fractions,
        c=positive_fractions,
        s=positive_fractions,
    )
    @settings(max_examples=1000, deadline=None)
    def test_shift_equals_parameter_pair(
        self, w: int, a: Fraction, c: Fraction, s: Fraction
    ) -> None:
        """A unit shift s is the pair (s + 1; s) of ordinary parameters."""
        shifted = build_terminating(HypergeomSpec.of([-w, a], [c], [s]))
        paired = build_terminating(HypergeomSpec.of([-w, a, s + 1], [c, s]))
        assert shifted == paired

    @given(rows=square(3), x=st.lists(small_fractions, min_size=3, max_size=3))
    @settings(max_examples=1000, deadline=None)
    def test_solve_recovers_solution(self, rows: list[list[Fraction]], x: list[Fraction]) -> None:
        m = RatMatrix.from_rows(rows)
        b = [sum((rows[r][c] * x[c] for c in range(3)), Fraction(0)) for r in range(3)]
        report = solve_exact(m, b)
        if isinstance(report, Unique):
            assert list(report.x) == x

    @given(size=st.integers(min_value=1, max_value=3), data=st.data())
    @settings(max_examples=1000, deadline=None)
    def test_adjugate(self, size: int, data: st.DataObject) -> None:
        """A adj(A) = det(A) I."""
        rows = data.draw(
            st.lists(st.lists(polys, min_size=size, max_size=size), min_size=size, max_size=size)
        )
        a = PolyMatrix.from_rows(rows)
        adj, det = adjugate_det(a)
        assert a @ adj == PolyMatrix.identity(size).scale(det)

    @given(p=polys, d=polys)
    @settings(max_examples=1000, deadline=None)
    def test_divmod(self, p: Poly, d: Poly) -> None:
        assume(not d.is_zero())
        q, r = poly_divmod(p, d)
        assert q * d + r == p
        assert r.degree < d.degree

    @given(p=polys, d=polys)
    @settings(max_examples=1000, deadline=None)
    def test_exact_division(self, p: Poly, d: Poly) -> None:
        assume(not d.is_zero())
        assert poly_exact_div(p * d, d) == p

    @given(p=polys)
    @settings(max_examples=1000, deadline=None)
    def test_poly_codec(self, p: Poly) -> None:
        assert decode_poly(encode_poly(p)) == p

    @given(x=st.fractions(max_denominator=10**6))
    @settings(max_examples=1000, deadline=None)
    def test_rational_text_is_canonical(self, x: Fraction) -> None:
        assert decode_rational(encode_rational(x)) == x
