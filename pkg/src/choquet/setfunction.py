"""Set functions on a finite ground set [n] = {1, ..., n}.

Subsets are encoded as bitmasks: element i corresponds to bit i-1, so the
mask of {1, 3} is 0b101.  A set function stores one real value per subset in
an array of length 2**n indexed by mask.  The module provides the structural
classes (game / signed capacity, monotone capacity), the Mobius and zeta
transforms over the subset lattice, unanimity games and the expansion of a
game in the unanimity basis.

Monotonicity is validated on the n * 2**(n-1) covering pairs (S, S + {i})
only.  This is equivalent to full monotonicity: any inclusion S <= T
decomposes into a chain of covering steps, and the covering inequalities
compose by transitivity.

All values are immutable after construction and every operation is a pure
function of its inputs, so everything here is safe to use concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .errors import EmptyT, NotAGame, NotMonotone

# Storage bound: 2**20 doubles per set function is the largest array this
# package is willing to materialize.
MAX_GROUND_SET = 20

SubsetLike = Union[int, Iterable[int]]


def full_mask(n: int) -> int:
    """Bitmask of the full ground set [n]."""
    return (1 << n) - 1


def mask_from_elements(elements: Iterable[int], n: int | None = None) -> int:
    """Bitmask of a collection of 1-based elements.

    Duplicates are tolerated (set semantics).  Raises ValueError for
    elements outside 1..n.
    """
    mask = 0
    for e in elements:
        e = int(e)
        if e < 1 or (n is not None and e > n):
            bound = f"1..{n}" if n is not None else ">= 1"
            raise ValueError(f"element {e} outside the ground set ({bound})")
        mask |= 1 << (e - 1)
    return mask


def elements_from_mask(mask: int) -> tuple[int, ...]:
    """Ascending 1-based elements of a subset bitmask."""
    return tuple(i + 1 for i in range(mask.bit_length()) if (mask >> i) & 1)


def as_mask(subset: SubsetLike, n: int) -> int:
    """Coerce a subset given as a bitmask or an element iterable."""
    if isinstance(subset, (int, np.integer)):
        mask = int(subset)
        if mask < 0 or mask >= (1 << n):
            raise ValueError(f"mask {mask} out of range for ground set of size {n}")
        return mask
    return mask_from_elements(subset, n)


def _frozen_values(values, n: int) -> np.ndarray:
    arr = np.array(values, dtype=float, copy=True)
    size = 1 << n
    if arr.shape != (size,):
        raise ValueError(
            f"expected {size} values for a set function on [{n}], got shape {arr.shape}"
        )
    if not np.all(np.isfinite(arr)):
        bad = int(np.flatnonzero(~np.isfinite(arr))[0])
        raise ValueError(f"non-finite value {arr[bad]!r} at mask {bad}")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SetFunction:
    """A real-valued function on all 2**n subsets of [n].

    Attributes:
        n: ground-set size, 1 <= n <= 20.
        values: read-only float array of length 2**n; values[mask] is the
            value on the subset encoded by mask.
    """

    n: int
    values: np.ndarray

    def __post_init__(self):
        if not (1 <= self.n <= MAX_GROUND_SET):
            raise ValueError(f"ground set size must be in 1..{MAX_GROUND_SET}, got {self.n}")
        object.__setattr__(self, "values", _frozen_values(self.values, self.n))

    @property
    def size(self) -> int:
        """Number of subsets, 2**n."""
        return 1 << self.n

    def value(self, subset: SubsetLike) -> float:
        """Value on a subset given as a mask or an element iterable."""
        return float(self.values[as_mask(subset, self.n)])

    def __getitem__(self, mask: int) -> float:
        return float(self.values[mask])

    # Pointwise linear combinations stay in the space of set functions.
    # The game property v(empty) = 0 survives them; monotonicity does not,
    # so arithmetic always returns a plain SetFunction.
    def __add__(self, other: "SetFunction") -> "SetFunction":
        self._require_same_lattice(other)
        return SetFunction(self.n, self.values + other.values)

    def __sub__(self, other: "SetFunction") -> "SetFunction":
        self._require_same_lattice(other)
        return SetFunction(self.n, self.values - other.values)

    def __mul__(self, scalar: float) -> "SetFunction":
        return SetFunction(self.n, self.values * float(scalar))

    __rmul__ = __mul__

    def _require_same_lattice(self, other: "SetFunction") -> None:
        if not isinstance(other, SetFunction) or other.n != self.n:
            raise ValueError("set functions live on different ground sets")

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, values={self.values.tolist()})"


class SignedCapacity(SetFunction):
    """A game: a set function with value exactly 0 on the empty set."""

    def __post_init__(self):
        super().__post_init__()
        if self.values[0] != 0.0:
            raise NotAGame(self.values[0])


class Capacity(SignedCapacity):
    """A monotone game: v(S) <= v(T) whenever S is a subset of T."""

    def __post_init__(self):
        super().__post_init__()
        witness = _first_covering_violation(self.n, self.values)
        if witness is not None:
            raise NotMonotone(*witness)


def _first_covering_violation(n, values):
    """First covering pair with v(S) > v(S + {i}), scanning bits then masks."""
    for i in range(n):
        bit = 1 << i
        blocks = values.reshape(-1, 2 * bit)
        bad = blocks[:, :bit] > blocks[:, bit:]
        if bad.any():
            block, offset = np.argwhere(bad)[0]
            s_mask = int(block) * 2 * bit + int(offset)
            t_mask = s_mask | bit
            return s_mask, t_mask, float(values[s_mask]), float(values[t_mask])
    return None


def validate_signed_capacity(f: SetFunction) -> SignedCapacity:
    """Wrap f as a game.  Raises NotAGame unless f(empty) = 0 exactly."""
    return SignedCapacity(f.n, f.values)


def validate_capacity(v: SetFunction) -> Capacity:
    """Wrap v as a monotone capacity.

    Raises NotAGame if v(empty) != 0 and NotMonotone (with the first
    offending covering pair as witness) if any covering pair decreases.
    """
    return Capacity(v.n, v.values)


@dataclass(frozen=True, eq=False)
class MobiusRepresentation:
    """Mobius coefficients of a set function, on the same mask-indexed lattice.

    Satisfies the round trip zeta_transform(mobius_transform(f)) == f (exactly
    in exact arithmetic, within floating tolerance otherwise).  When derived
    from a game, the coefficient on the empty set is 0.
    """

    n: int
    coefficients: np.ndarray

    def __post_init__(self):
        if not (1 <= self.n <= MAX_GROUND_SET):
            raise ValueError(f"ground set size must be in 1..{MAX_GROUND_SET}, got {self.n}")
        object.__setattr__(self, "coefficients", _frozen_values(self.coefficients, self.n))

    @property
    def size(self) -> int:
        return 1 << self.n

    def coefficient(self, subset: SubsetLike) -> float:
        return float(self.coefficients[as_mask(subset, self.n)])

    def __getitem__(self, mask: int) -> float:
        return float(self.coefficients[mask])

    def __repr__(self) -> str:
        return f"MobiusRepresentation(n={self.n}, coefficients={self.coefficients.tolist()})"


# The two fast transforms below run the standard in-place subset-lattice
# recursion: bits in ascending order, and for each bit every mask containing
# it is updated from the mask with that bit cleared.  Within one bit pass the
# reads and writes touch disjoint halves of each block, so the vectorized
# form reproduces the scalar recursion bit-for-bit.

def mobius_transform(f: SetFunction) -> MobiusRepresentation:
    """Mobius transform m(S) = sum over T subset of S of (-1)^(|S|-|T|) f(T).

    O(n * 2**n) arithmetic; agrees with the direct double-loop summation.
    """
    coeffs = np.array(f.values, dtype=float)
    for i in range(f.n):
        bit = 1 << i
        blocks = coeffs.reshape(-1, 2 * bit)
        blocks[:, bit:] -= blocks[:, :bit]
    return MobiusRepresentation(f.n, coeffs)


def zeta_transform(m: MobiusRepresentation) -> SetFunction:
    """Zeta transform v(S) = sum over T subset of S of m(T); inverse of mobius_transform."""
    values = np.array(m.coefficients, dtype=float)
    for i in range(m.n):
        bit = 1 << i
        blocks = values.reshape(-1, 2 * bit)
        blocks[:, bit:] += blocks[:, :bit]
    return SetFunction(m.n, values)


def unanimity_game(n: int, subset: SubsetLike) -> SignedCapacity:
    """The game worth 1 on supersets of the given nonempty subset, else 0.

    These games form the standard basis of the space of games on [n]
    (mobius_transform maps each one to the matching delta vector).  Raises
    EmptyT for the empty subset: the constant-1 function it would require
    is not a game.  The basis expansion loses nothing by excluding it, since
    every game has Mobius coefficient 0 on the empty set.
    """
    t_mask = as_mask(subset, n)
    if t_mask == 0:
        raise EmptyT("unanimity games are defined for nonempty subsets only")
    masks = np.arange(1 << n)
    return SignedCapacity(n, ((masks & t_mask) == t_mask).astype(float))


def basis_decomposition(v: SignedCapacity) -> list[tuple[int, float]]:
    """Expansion of a game in the unanimity basis.

    Returns (mask, coefficient) pairs for the exactly-nonzero Mobius
    coefficients, in ascending mask order.  Rebuilding the weighted sum of
    unanimity games (equivalently, applying zeta_transform) reproduces v.
    """
    m = mobius_transform(v)
    return [(mask, float(c)) for mask, c in enumerate(m.coefficients) if c != 0.0]
