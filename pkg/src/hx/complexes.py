"""Finite chain complexes with integer boundary maps.

Chains are plain coefficient sequences (ints, or Fractions where a rational
value makes sense); the complex stores one boundary matrix per positive
dimension and treats out-of-range boundary maps as zero maps with the
appropriate empty shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError
from .intlinalg import (
    IntMatrix,
    kernel_basis,
    kernel_lattice_basis,
    mat_vec,
    rank,
    smith_normal_form,
    solve_exact,
    vstack,
)


@dataclass(frozen=True)
class ChainComplex:
    """Cell counts per dimension plus boundary maps d_1 .. d_d."""

    dims: tuple[int, ...]
    boundaries: tuple[IntMatrix, ...]

    @property
    def dimension(self) -> int:
        return len(self.dims) - 1

    def boundary(self, i: int) -> IntMatrix:
        """The i-th boundary map; zero maps of the right shape out of range."""
        if 1 <= i <= self.dimension:
            return self.boundaries[i - 1]
        if i <= 0:
            return IntMatrix.zero(0, self.dims[0])
        return IntMatrix.zero(self.dims[-1], 0)

    def check_dim(self, i: int) -> None:
        if not (0 <= i <= self.dimension):
            raise DimensionError(f"dimension {i} out of range 0..{self.dimension}")


@dataclass(frozen=True)
class HomologyGroup:
    """Free rank plus the invariant factors larger than one."""

    rank: int
    torsion: tuple[int, ...]


def new_complex(dims: Sequence[int], boundaries: Sequence[IntMatrix]) -> ChainComplex:
    """Validate shapes and the boundary-of-boundary condition."""
    dims = tuple(int(d) for d in dims)
    boundaries = tuple(boundaries)
    if not dims:
        raise DimensionError("a complex needs at least dimension 0")
    if any(d < 0 for d in dims):
        raise DimensionError("cell counts must be nonnegative")
    if len(boundaries) != len(dims) - 1:
        raise DimensionError(
            f"expected {len(dims) - 1} boundary maps for {len(dims)} dimensions, got {len(boundaries)}"
        )
    for i, b in enumerate(boundaries, start=1):
        if (b.rows, b.cols) != (dims[i - 1], dims[i]):
            raise DimensionError(
                f"boundary {i} has shape {b.rows}x{b.cols}, expected {dims[i - 1]}x{dims[i]}"
            )
    for i in range(1, len(boundaries)):
        if not (boundaries[i - 1] @ boundaries[i]).is_zero():
            raise DimensionError(f"boundary {i} composed with boundary {i + 1} is nonzero")
    return ChainComplex(dims=dims, boundaries=boundaries)


def complex_from_boundaries(*boundaries: IntMatrix) -> ChainComplex:
    """Convenience wrapper deriving the cell counts from the matrix shapes."""
    if not boundaries:
        raise DimensionError("need at least one boundary map")
    dims = [boundaries[0].rows] + [b.cols for b in boundaries]
    return new_complex(dims, boundaries)


def laplacian(x: ChainComplex, i: int) -> IntMatrix:
    """The combinatorial Laplacian at dimension i (a symmetric matrix)."""
    x.check_dim(i)
    down = x.boundary(i)
    up = x.boundary(i + 1)
    return down.transpose() @ down + up @ up.transpose()


def harmonic_basis(x: ChainComplex, i: int) -> list[tuple[int, ...]]:
    """Basis of the harmonic space at dimension i.

    Computed as the kernel of the i-th boundary stacked on the transposed
    (i+1)-st boundary, which is exact over Q; vectors come back primitive.
    """
    x.check_dim(i)
    stacked = vstack(x.boundary(i), x.boundary(i + 1).transpose())
    return kernel_basis(stacked)


def homology_group(x: ChainComplex, i: int) -> HomologyGroup:
    """Free rank and torsion of the i-th integral homology group.

    Torsion comes from the Smith normal form of the (i+1)-st boundary map
    re-expressed in a lattice basis of the i-cycles.
    """
    x.check_dim(i)
    down = x.boundary(i)
    up = x.boundary(i + 1)
    cycles = kernel_lattice_basis(down)
    coords = []
    for j in range(up.cols):
        solution = solve_exact(cycles, up.column(j))
        if solution is None:
            raise DimensionError("boundary image does not lie in the cycle lattice")
        coords.append([int(v) for v in solution])
    expressed = IntMatrix.from_columns(coords, rows=cycles.cols)
    diag = smith_normal_form(expressed).diag
    return HomologyGroup(
        rank=cycles.cols - rank(up),
        torsion=tuple(d for d in diag if d > 1),
    )


def energy(coeffs: Sequence) -> int | Fraction:
    """Squared norm of a chain under the standard cellwise inner product."""
    return sum(c * c for c in coeffs)


def check_mean_value(x: ChainComplex, coeffs: Sequence) -> bool:
    """Whether a 0-chain takes the mean of its neighbors at every vertex.

    Equivalent to lying in the kernel of d_1 d_1^t; loops drop out since
    their incidence columns vanish.
    """
    if x.dimension < 1:
        raise DimensionError("mean value check needs a complex of dimension >= 1")
    if len(coeffs) != x.dims[0]:
        raise DimensionError(f"chain length {len(coeffs)} != {x.dims[0]} vertices")
    down = x.boundary(1)
    return all(v == 0 for v in mat_vec(down, mat_vec(down.transpose(), coeffs)))
