"""Hasse-Witt matrices of hyperelliptic curves and the p-rank classifier.

For y^2 = f(x) in odd characteristic the matrix of the p-power Frobenius
acting on H^1(X, O_X) with respect to the classes y/x^i (i = 1..g) has
(i, j) entry equal to the x^(p*i - j) coefficient of f(x)^((p-1)/2).
The p-rank is the rank of the g-fold semilinear product
A * A^(p) * ... * A^(p^(g-1)), where ^(p) raises entries to the p-th
power.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import HYPERELLIPTIC, SuperellipticCurve, UnsupportedModelError, count_points, genus
from .linalg import FieldMatrix
from .poly import poly_pow


class InseparableModelError(UnsupportedModelError):
    """y^2 = f(x) is not a separable model in characteristic 2.

    The coefficient recipe would return the zero matrix (every extracted
    monomial vanishes), which corresponds to the supersingular degenerate
    case; it is reported as an error rather than silently classified.
    """


@dataclass(frozen=True)
class HasseWittMatrix:
    matrix: FieldMatrix
    genus: int
    basis_labels: tuple

    def entry(self, i: int, j: int):
        """1-indexed (i, j) entry, matching the y/x^i basis labels."""
        return self.matrix[i - 1, j - 1]


@dataclass(frozen=True)
class PRankClass:
    stable_rank: int
    genus: int
    verdict: str  # ordinary / superspecial / intermediate


def hasse_witt(X: SuperellipticCurve) -> HasseWittMatrix:
    """The g x g Frobenius matrix of a hyperelliptic curve, p odd."""
    if X.kind != HYPERELLIPTIC:
        raise UnsupportedModelError("Hasse-Witt recipe implemented for y^2 = f(x)")
    if X.p == 2:
        raise InseparableModelError("y^2 = f(x) is inseparable in characteristic 2")
    g = genus(X)
    fpow = poly_pow(X.f, (X.p - 1) // 2)
    rows = []
    for i in range(1, g + 1):
        rows.append([fpow.coeff(X.p * i - j) for j in range(1, g + 1)])
    labels = tuple(f"y/x^{i}" for i in range(1, g + 1))
    return HasseWittMatrix(matrix=FieldMatrix(X.field, rows), genus=g, basis_labels=labels)


def semilinear_stable_matrix(M: FieldMatrix, g: int) -> FieldMatrix:
    """A * A^(p) * ... * A^(p^(g-1)) with entrywise Frobenius twists."""
    prod = M
    twisted = M
    for _ in range(1, g):
        twisted = twisted.frobenius_entrywise()
        prod = prod @ twisted
    return prod


def classify_p_rank(H: HasseWittMatrix) -> PRankClass:
    g = H.genus
    if g == 0:
        return PRankClass(stable_rank=0, genus=0, verdict="ordinary")
    M = H.matrix
    if M.is_zero():
        return PRankClass(stable_rank=0, genus=g, verdict="superspecial")
    rank = semilinear_stable_matrix(M, g).rank()
    verdict = "ordinary" if rank == g else "intermediate"
    return PRankClass(stable_rank=rank, genus=g, verdict=verdict)


@dataclass(frozen=True)
class CrosscheckReport:
    p_rank: PRankClass
    count_e2: object            # PointCount over F_{p^2}
    consistent: bool            # superspecial => maximal or minimal


def crosscheck_superspecial(X: SuperellipticCurve) -> CrosscheckReport:
    """Compare the Frobenius-matrix verdict with the F_{p^2} point count.

    A zero Cartier operator forces the curve to be a form of a maximal or
    minimal curve; the flag records whether the model's own count attains
    one of the two Weil bounds.  The twist choice is not asserted.
    """
    if X.field.k != 1:
        raise UnsupportedModelError("cross-check runs on curves defined over F_p")
    verdict = classify_p_rank(hasse_witt(X))
    pc = count_points(X, 2)
    consistent = verdict.verdict != "superspecial" or pc.status in ("maximal", "minimal")
    return CrosscheckReport(p_rank=verdict, count_e2=pc, consistent=consistent)
