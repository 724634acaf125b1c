"""The divided-power comparison map, its rational section, and exact checks.

gamma sends the class of x in the degree-n augmentation algebra to the n-th
divided power x^[n]; epsilon sends a divided basis class e^[A] back to the
deviation class of A's expanded word divided by prod(a_i!).  All statements
verified here are exact integer or rational identities: the section identity
gamma @ epsilon == 1, the kernel description by scaling classes, the finite
cokernel of the truncation-plus-gamma stack, multiplicativity with respect to
the composition products, and the projector decomposition of epsilon's image.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import factorial
from typing import Optional

from .augmentation import AugAlgebra, AugElement
from .divided_powers import GammaElement, GammaModule, schur_product
from .intlinalg import (
    CokernelInvariants,
    Lattice,
    Matrix,
    cokernel_invariants,
    kernel_lattice,
    lattice_index,
    lattice_intersection,
    saturation,
    solve_int,
    vstack,
)


class VerificationError(ArithmeticError):
    """An exact identity that the construction relies on failed to hold."""


@dataclass(frozen=True)
class GammaEpsilonPair:
    rank: int
    degree: int
    gamma: Matrix
    epsilon: Matrix


def gamma_matrix(rank: int, degree: int) -> Matrix:
    """Integer matrix of gamma on the deviation basis: the basis class of X
    goes to the deviation of the divided power map at X's expanded word."""
    alg = AugAlgebra(rank, degree)
    space = GammaModule(rank, degree)
    cols = []
    for X in alg.basis:
        vectors = [space.module.basis_vector(i) for i in X.indices()]
        total = space.zero()
        for mask in range(1 << len(vectors)):
            coords = [0] * rank
            bits = 0
            for i, v in enumerate(vectors):
                if mask >> i & 1:
                    bits += 1
                    for t in range(rank):
                        coords[t] += v.coords[t]
            term = space.divided_power(coords)
            if (len(vectors) - bits) % 2:
                term = -term
            total = total + term
        cols.append(total.to_vector())
    return Matrix.from_cols(cols, space.dimension())


def epsilon_matrix(rank: int, degree: int) -> Matrix:
    """Rational matrix of the section: e^[A] -> (deviation class of A's
    expanded word) / prod(a_i!).  Fails loudly if gamma @ epsilon != 1."""
    alg = AugAlgebra(rank, degree)
    space = GammaModule(rank, degree)
    cols = []
    for A in space.basis:
        args = [alg.module.basis_vector(i) for i in A.indices()]
        elem = alg.class_of_deviation(args)
        denom = 1
        for _, m in A.pairs:
            denom *= factorial(m)
        cols.append(tuple(Fraction(c, denom) for c in elem.to_vector()))
    eps = Matrix.from_cols(cols, alg.dimension())
    gam = gamma_matrix(rank, degree)
    if not _is_section(gam, eps):
        raise VerificationError(
            f"section identity failed at rank={rank} degree={degree}: "
            f"gamma={gam.rows} epsilon={eps.rows}"
        )
    return eps


def _is_section(gam: Matrix, eps: Matrix) -> bool:
    # compare via a cleared denominator so the product stays integral
    d = eps.denominator_lcm()
    scaled = (gam @ eps.scale(d)) if d > 1 else (gam @ eps)
    return scaled == Matrix.identity(gam.nrows).scale(d if d > 1 else 1)


def gamma_epsilon_pair(rank: int, degree: int) -> GammaEpsilonPair:
    return GammaEpsilonPair(rank, degree, gamma_matrix(rank, degree), epsilon_matrix(rank, degree))


def verify_section(pair: GammaEpsilonPair) -> bool:
    return _is_section(pair.gamma, pair.epsilon)


def apply_gamma(pair: GammaEpsilonPair, u: AugElement) -> GammaElement:
    space = GammaModule(pair.rank, pair.degree)
    return space.from_vector(pair.gamma.matvec(u.to_vector()))


def apply_epsilon(pair: GammaEpsilonPair, g: GammaElement) -> AugElement:
    alg = AugAlgebra(pair.rank, pair.degree)
    return alg.from_vector(pair.epsilon.matvec(g.to_vector()))


@dataclass(frozen=True)
class KernelReport:
    kernel: Lattice
    generated: Lattice
    match: bool


def kernel_of_gamma(rank: int, degree: int) -> KernelReport:
    """Kernel lattice of gamma, compared against the saturated span of the
    scaling classes [r z] - r^degree [z] over 0/1 vectors z and small r."""
    gam = gamma_matrix(rank, degree)
    kernel = kernel_lattice(gam)
    alg = AugAlgebra(rank, degree)
    rows = []
    for z in product((0, 1), repeat=rank):
        base = alg.class_of(z).to_vector()
        for r in range(-(degree + 1), degree + 2):
            scaled = alg.class_of(tuple(r * c for c in z)).to_vector()
            rows.append(
                tuple(a - r**degree * b for a, b in zip(scaled, base))
            )
    generated = saturation(Lattice.from_rows(alg.dimension(), rows))
    return KernelReport(kernel, generated, kernel == generated)


def truncation_matrix(rank: int, degree: int) -> Matrix:
    """Matrix of the degree-lowering quotient map on deviation bases."""
    if degree < 1:
        raise ValueError("need degree >= 1 to truncate")
    source = AugAlgebra(rank, degree)
    target = AugAlgebra(rank, degree - 1)
    cols = []
    for X in source.basis:
        col = [0] * target.dimension()
        if X.size <= degree - 1:
            col[target.basis_index[X]] = 1
        cols.append(col)
    return Matrix.from_cols(cols, target.dimension())


def stacked_pi_gamma(rank: int, degree: int) -> Matrix:
    """The truncation map stacked over gamma; square by the dimension count."""
    return vstack(truncation_matrix(rank, degree), gamma_matrix(rank, degree))


def products_sublattice(rank: int, degree: int) -> Lattice:
    """Lattice in Gamma^degree spanned by products x_1 ... x_n of 0/1 vectors."""
    space = GammaModule(rank, degree)
    vectors = list(product((0, 1), repeat=rank))
    rows = []
    for combo in combinations_with_replacement(vectors, degree):
        rows.append(space.product_of_elements(combo).to_vector())
    return Lattice.from_rows(space.dimension(), rows)


def products_quotient_invariants(rank: int, degree: int) -> CokernelInvariants:
    """Invariant factors of Gamma^degree modulo the products sublattice."""
    lat = products_sublattice(rank, degree)
    return cokernel_invariants(lat.basis.transpose())


@dataclass(frozen=True)
class CokernelReport:
    injective: bool
    invariants: CokernelInvariants
    quotient_invariants: CokernelInvariants
    index: Optional[int]
    match: bool


def cokernel_of_pi_gamma(rank: int, degree: int) -> CokernelReport:
    """Check the stacked map is injective with finite cokernel isomorphic to
    Gamma^degree modulo the sublattice of products."""
    stacked = stacked_pi_gamma(rank, degree)
    injective = kernel_lattice(stacked).rank == 0
    invariants = cokernel_invariants(stacked)
    quotient = products_quotient_invariants(rank, degree)
    image = Lattice.from_rows(stacked.nrows, [tuple(c) for c in stacked.cols()])
    return CokernelReport(
        injective,
        invariants,
        quotient,
        lattice_index(image),
        injective and invariants == quotient,
    )


@dataclass(frozen=True)
class RingHomReport:
    pairs_checked: int
    gamma_multiplicative: bool
    epsilon_multiplicative: bool
    top_deviation_identity: bool
    witness: Optional[tuple] = None

    @property
    def passed(self) -> bool:
        return (
            self.gamma_multiplicative
            and self.epsilon_multiplicative
            and self.top_deviation_identity
        )


def ring_hom_checks(side: int, degree: int, pairs: int = 20, seed: int = 0, bound: int = 2) -> RingHomReport:
    """Composition-product multiplicativity of gamma and epsilon on random
    matrix pairs, plus the factorial identity for top deviation classes:

      gamma([a][b])        == gamma([a]) . gamma([b])   (Schur product)
      epsilon((ab)^[n])    == epsilon(a^[n]) [b-product] epsilon(b^[n])
      [del_n a][del_n b]   == n! [del_n ab]
    """
    rank = side * side
    alg = AugAlgebra(rank, degree)
    space = GammaModule(rank, degree)
    pair = gamma_epsilon_pair(rank, degree)
    rng = random.Random(seed)

    gamma_ok = epsilon_ok = deviation_ok = True
    witness = None
    for _ in range(pairs):
        a = [[rng.randint(-bound, bound) for _ in range(side)] for _ in range(side)]
        b = [[rng.randint(-bound, bound) for _ in range(side)] for _ in range(side)]
        ab = [
            [sum(a[i][t] * b[t][j] for t in range(side)) for j in range(side)]
            for i in range(side)
        ]
        fa = tuple(v for row in a for v in row)
        fb = tuple(v for row in b for v in row)
        fab = tuple(v for row in ab for v in row)

        ua, ub = alg.class_of(fa), alg.class_of(fb)
        lhs = apply_gamma(pair, alg.product_mul(ua, ub))
        rhs = schur_product(space.divided_power(fa), space.divided_power(fb))
        if lhs != rhs:
            gamma_ok, witness = False, ("gamma", a, b)

        ea = apply_epsilon(pair, space.divided_power(fa))
        eb = apply_epsilon(pair, space.divided_power(fb))
        eab = apply_epsilon(pair, space.divided_power(fab))
        if alg.product_mul(ea, eb) != eab:
            epsilon_ok, witness = False, ("epsilon", a, b)

        da = alg.class_of_deviation([fa] * degree)
        db = alg.class_of_deviation([fb] * degree)
        dab = alg.class_of_deviation([fab] * degree)
        if alg.product_mul(da, db) != dab.scale(factorial(degree)):
            deviation_ok, witness = False, ("top-deviation", a, b)

    return RingHomReport(pairs, gamma_ok, epsilon_ok, deviation_ok, witness)


@dataclass(frozen=True)
class DecompositionReport:
    projector_idempotent: bool
    image_rank: int
    gamma_side_rank: int
    kernel_part_rank_projector: int
    kernel_part_rank_lattice: int

    @property
    def consistent(self) -> bool:
        return (
            self.projector_idempotent
            and self.kernel_part_rank_projector == self.kernel_part_rank_lattice
            and self.image_rank == self.gamma_side_rank + self.kernel_part_rank_lattice
        )


def image_epsilon_decomposition(rank: int, degree: int) -> DecompositionReport:
    """Exact bookkeeping for the splitting of epsilon's image.

    p = epsilon @ gamma is checked to be idempotent over Q; the part of the
    image killed by gamma is measured twice, once as the rank of (1-p) on
    epsilon's columns and once as the rank of the lattice intersection of
    Ker(gamma) with the integral column lattice of epsilon.
    """
    pair = gamma_epsilon_pair(rank, degree)
    p = pair.epsilon @ pair.gamma
    idempotent = (p @ p) == p
    d = pair.epsilon.denominator_lcm()
    eps_int = pair.epsilon.scale(d)
    image_lattice = Lattice.from_rows(eps_int.nrows, [tuple(c) for c in eps_int.cols()])
    one_minus_p = Matrix.identity(p.nrows) - p
    ker_proj_rank = (one_minus_p @ eps_int).rank()
    ker_lat = kernel_lattice(pair.gamma)
    ker_lat_rank = lattice_intersection(ker_lat, image_lattice).rank
    return DecompositionReport(
        idempotent,
        image_lattice.rank,
        GammaModule(rank, degree).dimension(),
        ker_proj_rank,
        ker_lat_rank,
    )


@dataclass(frozen=True)
class QuadraticReport:
    surjective: bool
    epsilon_integral: bool
    integral_section: Optional[Matrix]

    @property
    def split_integrally(self) -> bool:
        return self.surjective and self.integral_section is not None


def quadratic_split(rank: int) -> QuadraticReport:
    """Degree-2 phenomena: gamma is onto the integral divided square lattice,
    so an integral section exists (constructed column by column); whether the
    canonical rational section is itself integral is reported, not assumed."""
    gam = gamma_matrix(rank, 2)
    eps = epsilon_matrix(rank, 2)
    surjective = cokernel_invariants(gam).trivial
    section = None
    if surjective:
        cols = []
        for j in range(gam.nrows):
            target = tuple(int(i == j) for i in range(gam.nrows))
            x = solve_int(gam, target)
            if x is None:
                raise VerificationError("trivial cokernel but no integral preimage")
            cols.append(x)
        section = Matrix.from_cols(cols, gam.ncols)
        if gam @ section != Matrix.identity(gam.nrows):
            raise VerificationError("constructed section does not invert gamma")
    return QuadraticReport(surjective, eps.is_integral, section)


def quasi_homogeneity_test(module, degree: int) -> bool:
    """Whether every kernel class of gamma acts as zero on the module.

    `module` needs: an `algebra` attribute (the degree-truncated augmentation
    algebra of the matrix module it is defined over), `act(elem) -> Matrix`,
    and `zero_action(matrix) -> bool`.
    """
    alg = module.algebra
    if alg.degree != degree:
        raise ValueError("module algebra degree differs from the requested degree")
    kernel = kernel_lattice(gamma_matrix(alg.rank, degree))
    for row in kernel.basis.rows:
        elem = alg.from_vector(row)
        if not module.zero_action(module.act(elem)):
            return False
    return True
