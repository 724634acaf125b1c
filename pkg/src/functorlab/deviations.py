"""Deviation (finite-difference) calculus for maps between free modules.

The m-th deviation of phi at (x_1, ..., x_m) is the alternating sum of
phi over all subset sums; phi has degree <= n exactly when every (n+1)-st
deviation vanishes and the binomial scaling law holds.  Two equivalent
scaling conditions are implemented and cross-checked against each other.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Mapping, Optional, Sequence

from .combinatorics import Multiset, binomial
from .modules import Element, FreeModule, SetMap


def alternating_sum(fn, args: Sequence, zero):
    """Sum of (-1)^(m-|I|) fn(sum of args over I) over all subsets I of [m].

    `zero` is the additive unit of the argument side; values of fn must
    support + and unary -.  The empty argument list gives fn(zero).
    """
    m = len(args)
    total = None
    for mask in range(1 << m):
        s = zero
        bits = 0
        for i in range(m):
            if mask >> i & 1:
                s = s + args[i]
                bits += 1
        value = fn(s)
        if (m - bits) % 2:
            value = -value
        total = value if total is None else total + value
    return total


def deviation(phi: SetMap, args: Sequence[Element]) -> Element:
    """Deviation of phi at the given arguments; deviation(phi, []) is phi(0)."""
    for x in args:
        if x.module != phi.source:
            raise ValueError("argument lives in the wrong module")
    return alternating_sum(phi, list(args), phi.source.zero())


def repeated_deviation(phi: SetMap, x: Element, k: int) -> Element:
    """Deviation with x repeated k times; k = 0 gives phi(0)."""
    if k < 0:
        raise ValueError("repetition count must be nonnegative")
    return deviation(phi, [x] * k)


def multiset_deviation(phi: SetMap, xs: Sequence[Element], X: Multiset) -> Element:
    """Deviation at the arguments xs[i] repeated with the multiplicities of X."""
    xs = list(xs)
    for i in X.support:
        if i >= len(xs):
            raise IndexError(f"multiset index {i} exceeds the argument list")
    return deviation(phi, [xs[i] for i in X.indices()])


@dataclass(frozen=True)
class SampleSpec:
    """Sampling plan for numericality certification: generator coordinate
    vectors and an inclusive scalar window."""

    generators: tuple[tuple[int, ...], ...]
    scalar_window: tuple[int, int]

    @classmethod
    def from_json(cls, data: dict) -> "SampleSpec":
        lo, hi = data["scalar_window"]
        return cls(tuple(tuple(g) for g in data["generators"]), (lo, hi))

    def to_json(self) -> dict:
        return {
            "generators": [list(g) for g in self.generators],
            "scalar_window": list(self.scalar_window),
        }

    @classmethod
    def default_for(cls, module: FreeModule, n: int) -> "SampleSpec":
        gens = tuple(tuple(int(i == j) for j in range(module.rank)) for i in range(module.rank))
        return cls(gens, (-(n + 2), n + 2))

    def scalars(self):
        lo, hi = self.scalar_window
        return range(lo, hi + 1)


@dataclass(frozen=True)
class DeviationReport:
    degree_tested: int
    samples_used: int
    passed: bool
    witness: Optional[tuple] = None


def is_numerical_degree(phi: SetMap, n: int, sample: SampleSpec) -> DeviationReport:
    """Certify (by sampling) that phi is numerical of degree <= n.

    Checks every (n+1)-tuple drawn from the generators for vanishing
    deviation, and the scaling law phi(r x) = sum_k C(r, k) * (k-th repeated
    deviation at x) for each generator x and each r in the window.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    gens = [phi.source.element(g) for g in sample.generators]
    used = 0

    for combo in combinations_with_replacement(gens, n + 1):
        used += 1
        if not deviation(phi, combo).is_zero:
            witness = ("deviation", tuple(x.coords for x in combo))
            return DeviationReport(n, used, False, witness)

    for x in gens:
        devs = [repeated_deviation(phi, x, k) for k in range(n + 1)]
        for r in sample.scalars():
            used += 1
            rhs = phi.target.zero()
            for k in range(n + 1):
                rhs = rhs + devs[k].scale(binomial(r, k))
            if phi(x.scale(r)) != rhs:
                return DeviationReport(n, used, False, ("scaling", x.coords, r))

    return DeviationReport(n, used, True)


def condition_b_rhs(values: Mapping[int, object], r: int, n: int):
    """The degree-n interpolation combination of values[0..n] evaluated at r:

        sum_m (-1)^(n-m) C(r, m) C(r-m-1, n-m) values[m]

    Agrees with values[r] for r in 0..n regardless of the map.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    total = None
    for m in range(n + 1):
        if m not in values:
            raise ValueError(f"missing value at {m}; need all of 0..{n}")
        c = (-1) ** (n - m) * binomial(r, m) * binomial(r - m - 1, n - m)
        term = values[m].scale(c)
        total = term if total is None else total + term
    return total


def cross_check_conditions(
    f_on_scalars: Mapping[int, object], n: int, r_window: Sequence[int]
) -> DeviationReport:
    """Check the two scaling laws against tabulated values f(r * alpha).

    Law A rebuilds f(r alpha) from binomials times repeated deviations at
    alpha; law B is the interpolation form.  Both are computed from the
    values at 0..n only and compared with the table on the whole window.
    """
    for m in range(n + 1):
        if m not in f_on_scalars:
            raise ValueError(f"missing value at {m}; need all of 0..{n}")
    # k-th repeated deviation at alpha, out of the scalar table alone
    devs = []
    for k in range(n + 1):
        acc = None
        for j in range(k + 1):
            term = f_on_scalars[j].scale((-1) ** (k - j) * binomial(k, j))
            acc = term if acc is None else acc + term
        devs.append(acc)

    used = 0
    for r in r_window:
        if r not in f_on_scalars:
            raise ValueError(f"window point {r} missing from the table")
        used += 1
        lhs = f_on_scalars[r]
        rhs_a = None
        for k in range(n + 1):
            term = devs[k].scale(binomial(r, k))
            rhs_a = term if rhs_a is None else rhs_a + term
        if lhs != rhs_a:
            return DeviationReport(n, used, False, ("A", r))
        rhs_b = condition_b_rhs(f_on_scalars, r, n)
        if lhs != rhs_b:
            return DeviationReport(n, used, False, ("B", r))
    return DeviationReport(n, used, True)
