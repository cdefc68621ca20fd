"""Z2 chain arithmetic: simplices, index-set chains, boundaries, weights.

A chain of dimension d is a set of indices into a fixed, lexicographically
sorted table of d-simplices. Addition is symmetric difference, so every
chain is its own inverse. Weights are exact fixed-point integers; the
decimal scale they were read with lives with the complex, not here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import UsageError


@dataclass(frozen=True, order=True)
class Simplex:
    """A simplex named by its strictly increasing tuple of vertex ids."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        vs = tuple(self.vertices)
        if vs != self.vertices:
            object.__setattr__(self, "vertices", vs)
        if not vs:
            raise UsageError("a simplex needs at least one vertex")
        if vs[0] < 0:
            raise UsageError(f"negative vertex id in {vs!r}")
        if any(a >= b for a, b in zip(vs, vs[1:])):
            raise UsageError(f"vertex ids must be strictly increasing: {vs!r}")

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def __str__(self) -> str:
        return "(" + " ".join(str(v) for v in self.vertices) + ")"


def boundary_simplex(simplex: Simplex) -> list[Simplex]:
    """All codimension-1 faces, obtained by dropping one vertex at a time.

    The list is ordered by the dropped position, e.g. (1,2,3) gives
    [(2,3), (1,3), (1,2)].
    """
    if simplex.dim < 1:
        raise UsageError("0-simplices have no codimension-1 faces")
    vs = simplex.vertices
    return [Simplex(vs[:i] + vs[i + 1:]) for i in range(len(vs))]


@dataclass(frozen=True)
class Chain:
    """A set of simplex indices in one dimension, stored sorted (canonical form)."""

    dim: int
    indices: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        ix = tuple(self.indices)
        if ix != self.indices:
            object.__setattr__(self, "indices", ix)
        if self.dim < 0:
            raise UsageError("chain dimension must be >= 0")
        if ix and ix[0] < 0:
            raise UsageError("negative simplex index in chain")
        if any(a >= b for a, b in zip(ix, ix[1:])):
            raise UsageError(f"chain indices must be strictly increasing: {ix!r}")

    @classmethod
    def from_indices(cls, dim: int, indices: Iterable[int]) -> "Chain":
        """Build a chain from any iterable of distinct indices."""
        ix = sorted(indices)
        if any(a == b for a, b in zip(ix, ix[1:])):
            raise UsageError("duplicate index in chain (Z2 chains are sets)")
        return cls(dim, tuple(ix))

    def as_set(self) -> frozenset[int]:
        return frozenset(self.indices)

    @property
    def is_empty(self) -> bool:
        return not self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, index: int) -> bool:
        return index in self.as_set()


def chain_add(a: Chain, b: Chain) -> Chain:
    """Symmetric difference of two chains of the same dimension."""
    if a.dim != b.dim:
        raise UsageError(f"cannot add chains of dimensions {a.dim} and {b.dim}")
    return Chain(a.dim, tuple(sorted(set(a.indices) ^ set(b.indices))))


def chain_weight(chain: Chain, weights: Sequence[int]) -> int:
    """Total weight of the chain's members. Exact integer arithmetic."""
    try:
        return sum(weights[i] for i in chain.indices)
    except IndexError:
        raise UsageError("chain index outside the weight vector") from None


def boundary_chain(chain: Chain, faces_of: Sequence[Sequence[int]]) -> Chain:
    """Boundary of a d-chain given the face-index table of its dimension.

    ``faces_of[j]`` lists the (d-1)-face indices of d-simplex j. A face
    survives iff it occurs in an odd number of members, so the boundary of
    a boundary is always empty.
    """
    if chain.dim < 1:
        raise UsageError("boundaries are defined for chains of dimension >= 1")
    acc: set[int] = set()
    for j in chain.indices:
        try:
            faces = faces_of[j]
        except IndexError:
            raise UsageError("chain index outside the incidence table") from None
        acc.symmetric_difference_update(faces)
    return Chain(chain.dim - 1, tuple(sorted(acc)))
