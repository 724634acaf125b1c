"""Finitely generated free abelian groups, their linear maps, and raw set maps.

A Hom is a matrix whose columns are the images of the source basis vectors.
A SetMap is an arbitrary (not necessarily additive) function between free
modules; the deviation calculus consumes those.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .intlinalg import Matrix


@dataclass(frozen=True)
class FreeModule:
    rank: int

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")

    def zero(self) -> "Element":
        return Element(self, (0,) * self.rank)

    def basis_vector(self, i: int) -> "Element":
        if not 0 <= i < self.rank:
            raise IndexError(f"basis index {i} out of range")
        return Element(self, tuple(int(j == i) for j in range(self.rank)))

    def element(self, coords) -> "Element":
        return Element(self, tuple(coords))

    def basis(self) -> tuple["Element", ...]:
        return tuple(self.basis_vector(i) for i in range(self.rank))


@dataclass(frozen=True)
class Element:
    """Vector with integer coordinates in a fixed free module."""

    module: FreeModule
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        if any(not isinstance(c, int) for c in self.coords):
            raise TypeError("coordinates must be integers")
        if len(coords) != self.module.rank:
            raise ValueError("coordinate count differs from rank")
        object.__setattr__(self, "coords", coords)

    def _check(self, other: "Element"):
        if self.module != other.module:
            raise ValueError("elements live in different modules")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.module, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.module, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Element":
        return Element(self.module, tuple(-a for a in self.coords))

    def scale(self, c: int) -> "Element":
        return Element(self.module, tuple(c * a for a in self.coords))

    def __rmul__(self, c: int) -> "Element":
        return self.scale(c)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class Hom:
    """Linear map, columns of `matrix` being images of source basis vectors."""

    source: FreeModule
    target: FreeModule
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.rank, self.source.rank):
            raise ValueError(
                f"matrix shape {self.matrix.shape} does not map "
                f"rank {self.source.rank} into rank {self.target.rank}"
            )
        if not self.matrix.is_integral:
            raise ValueError("linear maps need integer matrices")

    def __call__(self, x: Element) -> Element:
        if x.module != self.source:
            raise ValueError("argument lives in the wrong module")
        return Element(self.target, self.matrix.matvec(x.coords))


def hom(matrix: Matrix) -> Hom:
    """Wrap a matrix as a map between anonymous free modules of fitting ranks."""
    return Hom(FreeModule(matrix.ncols), FreeModule(matrix.nrows), matrix)


def identity_hom(module: FreeModule) -> Hom:
    return Hom(module, module, Matrix.identity(module.rank))


def compose(g: Hom, f: Hom) -> Hom:
    if f.target != g.source:
        raise ValueError("maps do not compose")
    return Hom(f.source, g.target, g.matrix @ f.matrix)


def apply(f: Hom, x: Element) -> Element:
    return f(x)


@dataclass(frozen=True)
class SetMap:
    """Arbitrary function between free modules, no additivity assumed."""

    source: FreeModule
    target: FreeModule
    evaluator: Callable[[Element], Element]

    def __call__(self, x: Element) -> Element:
        if x.module != self.source:
            raise ValueError("argument lives in the wrong module")
        y = self.evaluator(x)
        if not isinstance(y, Element) or y.module != self.target:
            raise ValueError("evaluator returned a value outside the target module")
        return y


def linear_as_setmap(f: Hom) -> SetMap:
    return SetMap(f.source, f.target, f)


def hom_to_json(f: Hom) -> dict:
    return {
        "source_rank": f.source.rank,
        "target_rank": f.target.rank,
        "rows": [list(r) for r in f.matrix.rows],
    }


def hom_from_json(data: dict) -> Hom:
    matrix = Matrix(data["rows"], data["source_rank"])
    if matrix.nrows != data["target_rank"]:
        raise ValueError("row count differs from declared target rank")
    return Hom(FreeModule(data["source_rank"]), FreeModule(data["target_rank"]), matrix)
