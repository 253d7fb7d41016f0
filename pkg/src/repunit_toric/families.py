"""Named matrices, minor families, and toric ideals of one instance (a, b, n).

Variables x_1 .. x_n carry the semigroup weights; the two-row grading stacks
the repunit row (r_b(0), ..., r_b(n-1)) over the all-ones row.  The minor
families come from 2 x 2 minors of a pair of structured 2 x (n-1) and 2 x n
matrices of monomials, and the kernel-lattice matrices give small integer
relation bases whose saturations recover the toric ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import intlinalg
from .binomials import Binomial, Grading, Monomial, is_homogeneous
from .groebner import (
    GroebnerBasis,
    TraceFn,
    buchberger,
    reduce_gb,
    saturate_torus,
)
from .orders import MatrixOrder, build_order_i
from .semigroup import InstanceParams, generators, repunit


def scalar_grading(params: InstanceParams) -> Grading:
    """One-row grading by the semigroup generators."""
    return Grading.scalar(generators(params))


def projective_grading(params: InstanceParams) -> Grading:
    """Two-row grading: repunit row over the all-ones row.

    Column i is (r_b(i-1), 1); the semigroup weights are the combination
    a * row1 + r_b(n) * row2 of the two rows.
    """
    b, n = params.b, params.n
    return Grading((tuple(repunit(b, i) for i in range(n)), (1,) * n))


def _mono(n: int, *factors: tuple[int, int]) -> Monomial:
    """Monomial from (variable index, power) factors; repeats accumulate."""
    e = [0] * n
    for var, power in factors:
        e[var - 1] += power
    return tuple(e)


def _adjacent_minor(params: InstanceParams, j: int, k: int) -> Binomial:
    # columns j < k of the 2 x (n-1) matrix with column t = (x_t^b ; x_{t+1})
    n, b = params.n, params.b
    plus = [0] * n
    minus = [0] * n
    plus[j - 1] += b
    plus[k] += 1
    minus[j] += 1
    minus[k - 1] += b
    return Binomial(tuple(plus), tuple(minus)).canonical()


def _closing_minor(params: InstanceParams, j: int) -> Binomial:
    # column j against the extra column (x_n^b ; x_1^(a+1))
    n, b, a = params.n, params.b, params.a
    plus = [0] * n
    minus = [0] * n
    plus[j - 1] += b
    plus[0] += a + 1
    minus[j] += 1
    minus[n - 1] += b
    return Binomial(tuple(plus), tuple(minus)).canonical()


@dataclass(frozen=True)
class MinorFamily:
    """All 2 x 2 minors of one of the two structured monomial matrices."""

    source: str
    binomials: tuple[Binomial, ...]
    params: InstanceParams


def minors_open_chain(params: InstanceParams) -> MinorFamily:
    """Minors of the 2 x (n-1) matrix; empty when n == 2.

    Every minor is homogeneous for both gradings, and there are
    C(n-1, 2) of them.
    """
    n = params.n
    out = [
        _adjacent_minor(params, j, k)
        for j in range(1, n - 1)
        for k in range(j + 1, n)
    ]
    fam = MinorFamily("open-chain", tuple(out), params)
    _check_minor_family(fam, expected=comb(n - 1, 2), both_gradings=True)
    return fam


def minors_closed_chain(params: InstanceParams) -> MinorFamily:
    """Minors of the 2 x n matrix with the closing column appended.

    C(n, 2) minors, homogeneous for the weight grading.
    """
    n = params.n
    out = list(minors_open_chain(params).binomials)
    out.extend(_closing_minor(params, j) for j in range(1, n))
    fam = MinorFamily("closed-chain", tuple(out), params)
    _check_minor_family(fam, expected=comb(n, 2), both_gradings=False)
    return fam


def _check_minor_family(fam: MinorFamily, expected: int, both_gradings: bool) -> None:
    if len(fam.binomials) != expected:
        raise AssertionError(f"{fam.source}: {len(fam.binomials)} minors, expected {expected}")
    if len(set(fam.binomials)) != expected:
        raise AssertionError(f"{fam.source}: repeated minors")
    gradings = [scalar_grading(fam.params)]
    if both_gradings:
        gradings.append(projective_grading(fam.params))
    for grading in gradings:
        for g in fam.binomials:
            if not is_homogeneous(grading, g):
                raise AssertionError(f"{fam.source}: inhomogeneous minor {g}")


def structured_family(params: InstanceParams, i: int, part: int) -> tuple[Binomial, ...]:
    """One block of the structured generating family for the x_i-cheap order.

    The plus monomial of every element is its leading term under that order.
    Parts 1..3 rewrite the open-chain minors; part 4 holds the closing
    minors, split at column i.  Sizes: C(n-i, 2), C(i-1, 2), (i-1)(n-i)
    and n-1.
    """
    n, b, a = params.n, params.b, params.a
    if not 1 <= i <= n:
        raise ValueError(f"i must be in 1..{n}, got {i}")
    out: list[Binomial] = []
    if part == 1:
        for j in range(i, n - 1):
            for k in range(j + 1, n):
                plus = _mono(n, (j + 1, 1), (k, b))
                minus = _mono(n, (j, b), (k + 1, 1))
                out.append(Binomial(plus, minus))
    elif part == 2:
        for j in range(1, i - 1):
            for k in range(j + 1, i):
                plus = _mono(n, (j + 1, 1), (k, b))
                minus = _mono(n, (j, b), (k + 1, 1))
                out.append(Binomial(plus, minus))
    elif part == 3:
        for j in range(1, i):
            for k in range(i, n):
                plus = _mono(n, (j, b), (k + 1, 1))
                minus = _mono(n, (j + 1, 1), (k, b))
                out.append(Binomial(plus, minus))
    elif part == 4:
        for ell in range(1, i):
            plus = _mono(n, (1, a + 1), (ell, b))
            minus = _mono(n, (ell + 1, 1), (n, b))
            out.append(Binomial(plus, minus))
        for ell in range(i, n):
            plus = _mono(n, (ell + 1, 1), (n, b))
            minus = _mono(n, (1, a + 1), (ell, b))
            out.append(Binomial(plus, minus))
    else:
        raise ValueError(f"part must be 1..4, got {part}")
    return tuple(out)


def structured_open_family(params: InstanceParams, i: int) -> tuple[Binomial, ...]:
    """Parts 1+2+3: the open-chain minors oriented for the x_i-cheap order."""
    return (
        structured_family(params, i, 1)
        + structured_family(params, i, 2)
        + structured_family(params, i, 3)
    )


def structured_closed_family(params: InstanceParams, i: int) -> tuple[Binomial, ...]:
    """Parts 1+2+3+4: all closed-chain minors oriented for the x_i-cheap order."""
    return structured_open_family(params, i) + structured_family(params, i, 4)


@dataclass(frozen=True)
class LatticeMatrix:
    """Integer relation matrix whose rows span a kernel lattice."""

    kind: str
    rows: tuple[tuple[int, ...], ...]

    def binomials(self) -> tuple[Binomial, ...]:
        return tuple(
            Binomial.from_vector(r).canonical() for r in self.rows if any(r)
        )


def projective_relation_matrix(params: InstanceParams) -> LatticeMatrix:
    """(n-2) x n sliding-window relations for the two-row grading; n >= 4.

    Rows 1..n-3 slide (b, -1, -b, 1); the last row is (b, -(b+1), 1).  The
    rows are checked to annihilate the grading columns, and the last n-2
    columns form a determinant-one block, so the rows are a basis of the
    full kernel lattice.
    """
    n, b = params.n, params.b
    if n < 4:
        raise ValueError(f"the sliding-window pattern needs n >= 4, got {n}")
    rows = []
    for t in range(n - 3):
        row = [0] * n
        row[t] = b
        row[t + 1] = -1
        row[t + 2] = -b
        row[t + 3] = 1
        rows.append(tuple(row))
    last = [0] * n
    last[n - 3] = b
    last[n - 2] = -(b + 1)
    last[n - 1] = 1
    rows.append(tuple(last))
    mat = LatticeMatrix("projective-kernel", tuple(rows))
    grading = projective_grading(params)
    for row in mat.rows:
        if any(intlinalg.dot(grow, row) != 0 for grow in grading.rows):
            raise AssertionError(f"relation row {row} is not in the kernel")
    block = [row[2:] for row in mat.rows]
    if intlinalg.det(block) != 1:
        raise AssertionError("trailing block of the relation matrix must have det 1")
    return mat


def weight_relation_matrix(params: InstanceParams) -> LatticeMatrix:
    """(n-1) x n relations for the weight grading; n >= 3.

    Rows 1..n-2 slide (b, -(b+1), 1); the last row has a+1 in column 1 and
    (b, -(b+1)) in the last two columns.  Maximal minors reproduce the
    semigroup generators up to sign, so the row span sits inside the weight
    kernel with index gcd(a_1, ..., a_n); it is the full kernel lattice
    exactly when the generators are coprime.
    """
    n, b, a = params.n, params.b, params.a
    if n < 3:
        raise ValueError(f"the relation pattern needs n >= 3, got {n}")
    rows = []
    for t in range(n - 2):
        row = [0] * n
        row[t] = b
        row[t + 1] = -(b + 1)
        row[t + 2] = 1
        rows.append(tuple(row))
    last = [0] * n
    last[0] = a + 1
    last[n - 2] = b
    last[n - 1] = -(b + 1)
    rows.append(tuple(last))
    mat = LatticeMatrix("weight-kernel", tuple(rows))
    gens = generators(params)
    for row in mat.rows:
        if intlinalg.dot(gens, row) != 0:
            raise AssertionError(f"relation row {row} is not weight homogeneous")
    minors = {abs(m) for m in intlinalg.maximal_minors(mat.rows)}
    if minors != set(gens):
        raise AssertionError(f"maximal minors {minors} do not reproduce {set(gens)}")
    return mat


def kernel_lattice_basis(rows) -> tuple[tuple[int, ...], ...]:
    """Size-reduced basis of the full integer kernel of the given rows."""
    return intlinalg.kernel_basis(rows)


def toric_ideal(
    grading: Grading,
    order: MatrixOrder | None = None,
    trace: TraceFn | None = None,
) -> GroebnerBasis:
    """Reduced basis of the toric ideal of the grading's monomial map.

    Route: a kernel lattice basis gives a binomial ideal whose torus
    saturation is the full lattice ideal, which for a saturated kernel is
    the toric ideal itself.
    """
    basis_rows = kernel_lattice_basis(grading.rows)
    gens = [Binomial.from_vector(r) for r in basis_rows]
    sat = saturate_torus(gens, grading, trace)
    if order is None:
        order = build_order_i(grading.positive_row(), grading.nvars)
    return reduce_gb(buchberger(sat, order, trace))
