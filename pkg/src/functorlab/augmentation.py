"""Augmentation algebras of free modules, truncated at a fixed degree.

B(rank, degree) is spanned by classes [x] of module elements subject to the
degree-n relations; the deviation classes of basis vectors, indexed by
multisets of size <= degree, form an integral basis.  class_of writes any [x]
in that basis with multiset-binomial coefficients.

Two multiplications matter: the sum product [x][y] = [x + y] (always), and,
when the module is a matrix algebra, the composition product [s][t] = [st].
Left-multiplication matrices are memoized per algebra.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .combinatorics import (
    Multiset,
    binomial,
    format_multiset,
    format_rational,
    multiset_binomial,
    multisets_up_to,
    parse_multiset,
    parse_rational,
)
from .intlinalg import Matrix
from .modules import Element, FreeModule, Hom


def aug_dimension(rank: int, degree: int) -> int:
    """Closed form for the basis count: sum of C(rank + m - 1, m), m <= degree."""
    return sum(binomial(rank + m - 1, m) for m in range(degree + 1))


def _signed_subset_sums(vectors: list[tuple[int, ...]], width: int):
    """All (sign, subset-sum) pairs with sign (-1)^(m - |I|)."""
    m = len(vectors)
    out = []
    for mask in range(1 << m):
        coords = [0] * width
        bits = 0
        for i in range(m):
            if mask >> i & 1:
                bits += 1
                vi = vectors[i]
                for t in range(width):
                    coords[t] += vi[t]
        out.append(((-1) ** (m - bits), tuple(coords)))
    return out


class AugAlgebra:
    """Degree-truncated augmentation algebra of Z^rank."""

    def __init__(self, rank: int, degree: int):
        if rank < 0 or degree < 0:
            raise ValueError("rank and degree must be nonnegative")
        self.rank = rank
        self.degree = degree
        self.module = FreeModule(rank)
        self.basis: tuple[Multiset, ...] = multisets_up_to(rank, degree)
        self.basis_index = {X: i for i, X in enumerate(self.basis)}
        self._sum_tables: dict[Multiset, Matrix] = {}
        self._prod_tables: dict[Multiset, Matrix] = {}
        self._signed_sums: dict[Multiset, list] = {}

    def __eq__(self, other):
        return (
            isinstance(other, AugAlgebra)
            and (self.rank, self.degree) == (other.rank, other.degree)
        )

    def __hash__(self):
        return hash((self.rank, self.degree))

    def __repr__(self):
        return f"AugAlgebra(rank={self.rank}, degree={self.degree})"

    def dimension(self) -> int:
        return len(self.basis)

    # -- elements ------------------------------------------------------------

    def element(self, coeffs: dict) -> "AugElement":
        clean = {}
        for X, c in coeffs.items():
            if X not in self.basis_index:
                raise ValueError(f"{X} is not a basis multiset of {self!r}")
            if isinstance(c, Fraction) and c.denominator == 1:
                c = int(c)
            if c:
                clean[X] = c
        return AugElement(self, clean)

    def zero(self) -> "AugElement":
        return AugElement(self, {})

    def basis_element(self, X: Multiset) -> "AugElement":
        return self.element({X: 1})

    def one(self) -> "AugElement":
        """Unit of the sum product: the class of the zero element."""
        return self.basis_element(Multiset())

    def from_vector(self, vec) -> "AugElement":
        vec = tuple(vec)
        if len(vec) != len(self.basis):
            raise ValueError("vector length differs from dimension")
        return self.element({X: v for X, v in zip(self.basis, vec)})

    def _coords_of(self, x) -> tuple[int, ...]:
        if isinstance(x, Element):
            if x.module != self.module:
                raise ValueError("element lives in the wrong module")
            return x.coords
        coords = tuple(int(c) for c in x)
        if len(coords) != self.rank:
            raise ValueError("coordinate count differs from rank")
        return coords

    def class_of(self, x) -> "AugElement":
        """Normal form of [x]: multiset-binomial coefficients on the basis."""
        coords = self._coords_of(x)
        out = {}
        for X in self.basis:
            c = multiset_binomial(coords, X)
            if c:
                out[X] = c
        return AugElement(self, out)

    def class_of_deviation(self, xs) -> "AugElement":
        """Normal form of the deviation class at the given module elements."""
        vectors = [self._coords_of(x) for x in xs]
        total = self.zero()
        for sign, coords in _signed_subset_sums(vectors, self.rank):
            term = self.class_of(coords)
            total = total + (term if sign > 0 else -term)
        return total

    # -- multiplication -------------------------------------------------------

    def _basis_signed_sums(self, X: Multiset):
        if X not in self._signed_sums:
            vectors = [
                tuple(int(t == i) for t in range(self.rank)) for i in X.indices()
            ]
            self._signed_sums[X] = _signed_subset_sums(vectors, self.rank)
        return self._signed_sums[X]

    def _sum_table(self, X: Multiset) -> Matrix:
        """Matrix of left sum-multiplication by the basis class of X."""
        if X not in self._sum_tables:
            terms_x = self._basis_signed_sums(X)
            cols = []
            for Y in self.basis:
                acc = self.zero()
                for sx, vx in terms_x:
                    for sy, vy in self._basis_signed_sums(Y):
                        term = self.class_of(tuple(a + b for a, b in zip(vx, vy)))
                        acc = acc + (term if sx * sy > 0 else -term)
                cols.append(acc.to_vector())
            self._sum_tables[X] = Matrix.from_cols(cols, len(self.basis))
        return self._sum_tables[X]

    @property
    def matrix_side(self) -> int:
        side = isqrt(self.rank)
        if side * side != self.rank:
            raise ValueError(
                f"rank {self.rank} is not a square; no composition product here"
            )
        return side

    def _unit_matrix(self, flat_index: int, side: int) -> list[list[int]]:
        i, j = divmod(flat_index, side)
        m = [[0] * side for _ in range(side)]
        m[i][j] = 1
        return m

    def _prod_table(self, X: Multiset) -> Matrix:
        """Matrix of left composition-multiplication by the basis class of X."""
        if X not in self._prod_tables:
            side = self.matrix_side
            terms_x = self._matrix_signed_sums(X, side)
            cols = []
            for Y in self.basis:
                acc = self.zero()
                for sx, mx in terms_x:
                    for sy, my in self._matrix_signed_sums(Y, side):
                        prod = [
                            [
                                sum(mx[i][t] * my[t][j] for t in range(side))
                                for j in range(side)
                            ]
                            for i in range(side)
                        ]
                        flat = tuple(v for row in prod for v in row)
                        term = self.class_of(flat)
                        acc = acc + (term if sx * sy > 0 else -term)
                cols.append(acc.to_vector())
            self._prod_tables[X] = Matrix.from_cols(cols, len(self.basis))
        return self._prod_tables[X]

    def _matrix_signed_sums(self, X: Multiset, side: int):
        out = []
        for sign, flat in self._basis_signed_sums(X):
            out.append((sign, [list(flat[i * side : (i + 1) * side]) for i in range(side)]))
        return out

    def sum_mul(self, u: "AugElement", v: "AugElement") -> "AugElement":
        """Bilinear extension of [x][y] = [x + y]."""
        self._check_pair(u, v)
        vec = v.to_vector()
        out = [0] * len(self.basis)
        for X, c in u.coeffs.items():
            col = self._sum_table(X).matvec(vec)
            for i, w in enumerate(col):
                out[i] += c * w
        return self.from_vector(out)

    def product_mul(self, u: "AugElement", v: "AugElement") -> "AugElement":
        """Bilinear extension of [s][t] = [s composed with t] (square rank only)."""
        self._check_pair(u, v)
        vec = v.to_vector()
        out = [0] * len(self.basis)
        for X, c in u.coeffs.items():
            col = self._prod_table(X).matvec(vec)
            for i, w in enumerate(col):
                out[i] += c * w
        return self.from_vector(out)

    def _check_pair(self, u: "AugElement", v: "AugElement"):
        if u.algebra != self or v.algebra != self:
            raise ValueError("factors live in a different algebra")


@dataclass(frozen=True)
class AugElement:
    """Sparse element: coefficients (int or Fraction) on basis multisets."""

    algebra: AugAlgebra
    coeffs: dict

    def _check(self, other: "AugElement"):
        if self.algebra != other.algebra:
            raise ValueError("elements live in different algebras")

    def __add__(self, other: "AugElement") -> "AugElement":
        self._check(other)
        out = dict(self.coeffs)
        for X, c in other.coeffs.items():
            out[X] = out.get(X, 0) + c
        return self.algebra.element(out)

    def __sub__(self, other: "AugElement") -> "AugElement":
        return self + (-other)

    def __neg__(self) -> "AugElement":
        return AugElement(self.algebra, {X: -c for X, c in self.coeffs.items()})

    def scale(self, c) -> "AugElement":
        return self.algebra.element({X: c * v for X, v in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, AugElement):
            return NotImplemented
        return self.algebra == other.algebra and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.algebra, tuple(sorted(self.coeffs.items(), key=lambda p: p[0].sort_key()))))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs.values())

    def to_vector(self) -> tuple:
        return tuple(self.coeffs.get(X, 0) for X in self.algebra.basis)

    def sum_mul(self, other: "AugElement") -> "AugElement":
        return self.algebra.sum_mul(self, other)

    def product_mul(self, other: "AugElement") -> "AugElement":
        return self.algebra.product_mul(self, other)

    def to_json(self) -> dict:
        return {format_multiset(X): format_rational(c) for X, c in sorted(
            self.coeffs.items(), key=lambda p: p[0].sort_key()
        )}

    @classmethod
    def from_json(cls, algebra: AugAlgebra, data: dict) -> "AugElement":
        return algebra.element({parse_multiset(k): parse_rational(v) for k, v in data.items()})


def pushforward(chi: Hom, source_alg: AugAlgebra, target_alg: AugAlgebra) -> Matrix:
    """Matrix of the induced algebra map [x] -> [chi(x)] on deviation bases.

    Needs matching truncation degrees; the basis class of X goes to the
    deviation class of the images of its expanded word.
    """
    if source_alg.degree != target_alg.degree:
        raise ValueError("truncation degrees differ")
    if chi.source.rank != source_alg.rank or chi.target.rank != target_alg.rank:
        raise ValueError("map ranks do not match the algebras")
    cols = []
    for X in source_alg.basis:
        args = [chi(chi.source.basis_vector(i)) for i in X.indices()]
        cols.append(target_alg.class_of_deviation(args).to_vector())
    return Matrix.from_cols(cols, target_alg.dimension())
