"""Symbolic data for generic representations of GL_n over a p-adic field.

A generic irreducible representation is carried by its ordered list of
essentially-square-integrable blocks (size, conductor). The fixed-vector
criteria for principal congruence subgroups, the depth, and the conductor
windows all reduce to exact integer and rational arithmetic on this data.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

# Depth values are exact nonnegative rationals, stored in lowest terms.
DepthValue = Fraction


class ImplausibleConductorWarning(UserWarning):
    """A square-integrable block of size >= 2 was given conductor 0."""


@dataclass(frozen=True)
class SquareIntegrableBlock:
    """One essentially square integrable block: a GL_n factor with its conductor."""

    n: int
    conductor: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"block size must be >= 1, got {self.n}")
        if self.conductor < 0:
            raise ValueError(f"conductor must be >= 0, got {self.conductor}")
        if self.n >= 2 and self.conductor == 0:
            warnings.warn(
                f"block GL_{self.n} with conductor 0 is implausible for a "
                "square-integrable factor; accepted anyway",
                ImplausibleConductorWarning,
                stacklevel=2,
            )


@dataclass(frozen=True)
class GenericRepresentation:
    """Ordered square-integrable blocks of a parabolically induced representation."""

    blocks: tuple[SquareIntegrableBlock, ...]

    def __post_init__(self):
        if len(self.blocks) == 0:
            raise ValueError("a representation needs at least one block")
        object.__setattr__(self, "blocks", tuple(self.blocks))

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, int]]) -> "GenericRepresentation":
        return cls(tuple(SquareIntegrableBlock(n, c) for n, c in pairs))

    @property
    def n(self) -> int:
        return sum(b.n for b in self.blocks)

    @property
    def partition(self) -> tuple[int, ...]:
        return tuple(b.n for b in self.blocks)


def conductor(rep: GenericRepresentation) -> int:
    """Conductor of the induced representation as the sum of block conductors
    (conductors are additive across parabolic induction)."""
    return sum(b.conductor for b in rep.blocks)


def depth_esi(n: int, c: int) -> DepthValue:
    """Depth of an essentially square integrable representation of GL_n with
    conductor c: max((c - n)/n, 0), exactly."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if c < 0:
        raise ValueError(f"conductor must be >= 0, got {c}")
    return max(Fraction(c - n, n), Fraction(0))


def has_fixed_vector_esi(n: int, c: int, m: int) -> bool:
    """Square-integrable fixed-vector criterion at level m: c <= m*n."""
    if n < 1 or c < 0 or m < 0:
        raise ValueError("need n >= 1, c >= 0, m >= 0")
    return c <= m * n


def has_fixed_vector_depth(depth: DepthValue, m: int) -> bool:
    """Depth criterion at positive level m: depth <= m - 1, compared exactly."""
    if m < 1:
        raise ValueError(f"the depth criterion needs level m >= 1, got {m}")
    return depth <= m - 1


def has_fixed_vector(rep: GenericRepresentation, m: int) -> bool:
    """Blockwise criterion: a fixed vector at level m exists iff every block
    satisfies conductor <= m * size."""
    if m < 0:
        raise ValueError(f"level must be >= 0, got {m}")
    return all(b.conductor <= m * b.n for b in rep.blocks)


def min_level(rep: GenericRepresentation) -> int:
    """Least level with a fixed vector: max over blocks of ceil(c_i / n_i)."""
    return max(-(-b.conductor // b.n) for b in rep.blocks)


@dataclass(frozen=True)
class ConductorWindow:
    """Integer window (lo, hi] containing the conductor, as stated by the
    closed-form criteria for a representation of minimal level m. The lower
    bound of the generic variant is reported as stated; the verification
    suite records the edge cases where its strict form fails as notes."""

    lo_exclusive: int
    hi_inclusive: int
    variant: str

    def contains(self, c: int) -> bool:
        return self.lo_exclusive < c <= self.hi_inclusive

    def __str__(self) -> str:
        if self.lo_exclusive == self.hi_inclusive - 1:
            return f"{{{self.hi_inclusive}}} [{self.variant}]"
        return f"({self.lo_exclusive}, {self.hi_inclusive}] [{self.variant}]"


def conductor_window(n: int, m: int, square_integrable: bool = False) -> ConductorWindow:
    """Window of possible conductors for a representation of GL_n whose least
    fixed-vector level is m: (m, m*n] generically, ((m-1)*n, m*n] in the
    square-integrable case, and {0} when m = 0."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if m < 0:
        raise ValueError(f"level must be >= 0, got {m}")
    if m == 0:
        return ConductorWindow(-1, 0, "level-zero")
    if square_integrable:
        return ConductorWindow((m - 1) * n, m * n, "square-integrable")
    return ConductorWindow(m, m * n, "generic")


def depth_supercuspidal_gl2(c: int) -> DepthValue:
    """Depth of a GL_2 supercuspidal from its conductor: (c - 2)/2.
    Such conductors are always >= 2."""
    if c < 2:
        raise ValueError(
            f"no GL_2 supercuspidal has conductor {c}; the conductor is >= 2"
        )
    return Fraction(c - 2, 2)
