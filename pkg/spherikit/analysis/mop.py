"""Matrix orthogonal polynomials Psi(j, t) = Phi(j, t) Phi(0, t)^-1."""

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from types import MappingProxyType

from spherikit.analysis.expand import RecurrenceTriple
from spherikit.core.polyalg import T_POLY, Poly, PolyMatrix, adjugate_det, linear_combination
from spherikit.core.types import MissingMember, SingularBase
from spherikit.family.spherical import SphericalFamily, SphericalType

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PsiFamily:
    """Members Psi(j, t) with their realized degrees."""

    type: SphericalType
    members: Mapping[int, PolyMatrix]

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", MappingProxyType(dict(sorted(self.members.items()))))

    def __getitem__(self, j: int) -> PolyMatrix:
        try:
            return self.members[j]
        except KeyError:
            raise MissingMember(j) from None

    @property
    def degrees(self) -> dict[int, int | float]:
        return {j: m.degree for j, m in self.members.items()}

    def degree_drops(self) -> list[int]:
        """Indices j where degree(Psi(j)) < degree(Psi(j-1))."""
        degs = self.degrees
        return [j for j in degs if j - 1 in degs and degs[j] < degs[j - 1]]


def _base_inverse(family: SphericalFamily) -> tuple[PolyMatrix, Poly]:
    family = family.require([0])
    adj, det = adjugate_det(family[0])
    if det.is_zero():
        raise SingularBase(
            f"det Phi(0, t) vanishes identically for (n, l) = ({family.n}, {family.l})"
        )
    return adj, det


def build_psi(family: SphericalFamily, j: int) -> PolyMatrix:
    """
    Psi(j, t) = Phi(j, t) adj(Phi(0, t)) / det Phi(0, t), divided entrywise and exactly.

    Raises:
        NotDivisible: The quotient is not a polynomial matrix
        SingularBase: det Phi(0, t) is identically zero
    """
    adj, det = _base_inverse(family)
    family = family.require([j])
    return (family[j] @ adj).exact_div(det)


def build_psi_family(family: SphericalFamily, j_max: int) -> PsiFamily:
    """Psi(0..j_max, t)."""
    adj, det = _base_inverse(family)
    family = family.require(range(j_max + 1))
    members = {j: (family[j] @ adj).exact_div(det) for j in range(j_max + 1)}
    logger.debug("built Psi(0..%d) for (n, l) = (%d, %d)", j_max, family.n, family.l)
    return PsiFamily(family.type, members)


def verify_psi_recurrence(psi: PsiFamily, triple: RecurrenceTriple) -> bool:
    """Check A_w Psi(w-1) + B_w Psi(w) + C_w Psi(w+1) = t Psi(w) bit-exactly."""
    w = triple.w
    terms = [(triple.B, psi[w]), (triple.C, psi[w + 1])]
    if w >= 1:
        terms.append((triple.A, psi[w - 1]))
    return (linear_combination(terms) - psi[w].scale(T_POLY)).is_zero()
