"""Exact combinatorial scalars and canonical multisets.

Everything here is integer arithmetic: binomial coefficients with arbitrary
integer upper index, Stirling numbers of the second kind, and the finite
multisets that index the deviation and divided-power bases used elsewhere.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb


def binomial(r: int, k: int) -> int:
    """Binomial coefficient C(r, k) for any integer r and k >= 0.

    Defined by the falling factorial r(r-1)...(r-k+1)/k!, so negative upper
    indices are fine: binomial(-1, 2) == 1.
    """
    if k < 0:
        raise ValueError(f"lower index must be nonnegative, got {k}")
    if r >= 0:
        return comb(r, k)
    # reflection for negative upper index
    return (-1) ** k * comb(k - r - 1, k)


def multiset_binomial(coords, X: "Multiset") -> int:
    """Product of binomial(coords[i], m) over the (i, m) pairs of X.

    The empty multiset gives 1.  Indices of X must address coords.
    """
    coords = tuple(coords)
    result = 1
    for i, m in X.pairs:
        if i >= len(coords):
            raise IndexError(f"multiset index {i} out of range for {len(coords)} coordinates")
        result *= binomial(coords[i], m)
    return result


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind: set partitions of n into m blocks."""
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    if m > n:
        return 0
    # row-by-row recurrence S(n, m) = m S(n-1, m) + S(n-1, m-1)
    row = [1]
    for nn in range(1, n + 1):
        prev = row
        row = [
            (j * prev[j] if j < len(prev) else 0) + (prev[j - 1] if j > 0 else 0)
            for j in range(nn + 1)
        ]
    return row[m]


def stirling_sum_identity(n: int, m: int) -> int:
    """The alternating sum sum_{r=0}^{m} (-1)^(m-r) C(m, r) r^n.

    Equals m! * stirling2(n, m); note the r = 0 term uses 0^0 = 1.
    """
    if n < 0 or m < 0:
        raise ValueError("indices must be nonnegative")
    return sum((-1) ** (m - r) * comb(m, r) * r**n for r in range(m + 1))


@dataclass(frozen=True)
class Multiset:
    """Finite multiset of nonnegative indices.

    Canonical form: pairs (index, multiplicity) with strictly increasing
    indices and positive multiplicities.  Hashable, so usable as a sparse
    coefficient key.
    """

    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple((int(i), int(m)) for i, m in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        last = -1
        for i, m in pairs:
            if i < 0:
                raise ValueError("indices must be nonnegative")
            if i <= last:
                raise ValueError("indices must be strictly increasing")
            if m < 1:
                raise ValueError("multiplicities must be positive")
            last = i

    @classmethod
    def from_indices(cls, indices) -> "Multiset":
        counts = Counter(indices)
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_pairs(cls, pairs) -> "Multiset":
        counts: Counter = Counter()
        for i, m in pairs:
            counts[i] += m
        return cls(tuple(sorted((i, m) for i, m in counts.items() if m)))

    @property
    def size(self) -> int:
        """Total cardinality |X|, counting multiplicity."""
        return sum(m for _, m in self.pairs)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.pairs)

    def indices(self) -> tuple[int, ...]:
        """Expanded sorted word, each index repeated by its multiplicity."""
        return tuple(i for i, m in self.pairs for _ in range(m))

    def count(self, i: int) -> int:
        for j, m in self.pairs:
            if j == i:
                return m
        return 0

    def sort_key(self):
        return (self.size, self.indices())

    def __str__(self):
        return format_multiset(self)


EMPTY_MULTISET = Multiset()


def multisets_exactly(rank: int, size: int) -> tuple[Multiset, ...]:
    """All multisets over range(rank) of exactly the given size, in canonical
    (lex on expanded word) order."""
    return tuple(
        Multiset.from_indices(word) for word in combinations_with_replacement(range(rank), size)
    )


def multisets_up_to(rank: int, degree: int) -> tuple[Multiset, ...]:
    """All multisets over range(rank) of size <= degree, ordered by size then
    lex on the expanded word."""
    out = []
    for size in range(degree + 1):
        out.extend(multisets_exactly(rank, size))
    return tuple(out)


def format_multiset(X: Multiset) -> str:
    """Serialize with 1-based indices: {0: 2, 2: 1} -> "1^2,3"; empty -> ""."""
    return ",".join(f"{i + 1}^{m}" if m > 1 else f"{i + 1}" for i, m in X.pairs)


def parse_multiset(text: str) -> Multiset:
    if not text:
        return EMPTY_MULTISET
    pairs = []
    for chunk in text.split(","):
        if "^" in chunk:
            i, m = chunk.split("^")
            pairs.append((int(i) - 1, int(m)))
        else:
            pairs.append((int(chunk) - 1, 1))
    return Multiset.from_pairs(pairs)


def format_rational(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def parse_rational(text: str):
    f = Fraction(text)
    return int(f) if f.denominator == 1 else f
