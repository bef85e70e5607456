"""Fixed-vector dimensions for irreducible representations of GL_2.

Principal series and twisted Steinberg dimensions are single closed forms.
Supercuspidal dimensions are computed three independent ways that must
agree: the minimal-conductor closed form, the twist-class lattice sum, and
a literal enumeration of the Whittaker/Kirillov basis functions supported
on single valuation shells. Non-minimal supercuspidals reduce to the
minimal member of their twist orbit, whose conductor interacts with a
twisting character through c = max(s, 2*c_chi).
"""

from dataclasses import dataclass
from typing import Sequence, Union

from .characters import QuasiCharacterClass, num_classes_exact
from .cosets import index_m0, parabolic_index_closed


@dataclass(frozen=True)
class PrincipalSeries:
    """Irreducible principal series, carried by its two twist conductors."""

    c1: int
    c2: int

    def __post_init__(self):
        if self.c1 < 0 or self.c2 < 0:
            raise ValueError("conductors must be >= 0")


@dataclass(frozen=True)
class SteinbergTwist:
    """Steinberg twisted by a quasi-character of conductor c_chi."""

    c_chi: int

    def __post_init__(self):
        if self.c_chi < 0:
            raise ValueError("conductor must be >= 0")


@dataclass(frozen=True)
class Supercuspidal:
    """A supercuspidal given by the minimal conductor s among its twists
    (always >= 2) and the conductor of the twisting quasi-character."""

    s: int
    c_chi: int = 0

    def __post_init__(self):
        if self.s < 2:
            raise ValueError(
                f"minimal supercuspidal conductor must be >= 2, got {self.s}"
            )
        if self.c_chi < 0:
            raise ValueError("twist conductor must be >= 0")

    @property
    def effective_conductor(self) -> int:
        return twisted_conductor_minimal(self.s, self.c_chi)


GL2Representation = Union[PrincipalSeries, SteinbergTwist, Supercuspidal]


def delta_leq(cond: int, r: int) -> int:
    """Indicator of cond <= r."""
    return 1 if cond <= r else 0


def dim_principal_series(q: int, c1: int, c2: int, r: int) -> int:
    """dim of the level-r fixed space of an irreducible principal series:
    q**(r-1) * (q+1) when both twist conductors are <= r, else 0."""
    if r < 1:
        raise ValueError(f"level must be >= 1, got {r}")
    return q ** (r - 1) * (q + 1) * delta_leq(c1, r) * delta_leq(c2, r)


def dim_steinberg_twist(q: int, c_chi: int, r: int) -> int:
    """dim of the level-r fixed space of a twisted Steinberg:
    q**r + q**(r-1) - 1 when the twist conductor is <= r, else 0."""
    if r < 1:
        raise ValueError(f"level must be >= 1, got {r}")
    return (q**r + q ** (r - 1) - 1) * delta_leq(c_chi, r)


def twisted_conductor_minimal(s: int, c_chi: int) -> int:
    """Conductor of (minimal supercuspidal of conductor s) twisted by a
    quasi-character of conductor c_chi: s if 2*c_chi <= s, else 2*c_chi."""
    if s < 2:
        raise ValueError(f"minimal supercuspidal conductor must be >= 2, got {s}")
    if c_chi < 0:
        raise ValueError("twist conductor must be >= 0")
    return s if 2 * c_chi <= s else 2 * c_chi


def dim_supercuspidal_minimal(q: int, s: int, m: int) -> int:
    """Closed-form fixed-space dimension of a minimal supercuspidal of
    conductor s at level m, with r = floor(s/2):

        (2m - s + 1)(q-1)q**(r-1) + sum_{i=r+1}^{m} (2(m-i)+1)(q-1)**2 q**(i-2)

    and 0 whenever s > 2m.
    """
    if s < 2:
        raise ValueError(f"minimal supercuspidal conductor must be >= 2, got {s}")
    if m < 0:
        raise ValueError(f"level must be >= 0, got {m}")
    if s > 2 * m:
        return 0
    r = s // 2
    total = (2 * m - s + 1) * (q - 1) * q ** (r - 1)
    for i in range(r + 1, m + 1):
        total += (2 * (m - i) + 1) * (q - 1) ** 2 * q ** (i - 2)
    return total


def dim_supercuspidal_lattice(q: int, s: int, r: int) -> int:
    """Fixed-space dimension of a minimal supercuspidal at level r, summed
    over unramified-twist classes:

        sum_{i=0}^{r} |classes of conductor i| * (2r - c(twist by class) + 1)

    with the twisted conductor given by twisted_conductor_minimal. Returns 0
    when s > 2r. For s <= 2r every summand carrying a positive class count
    is >= 1; a nonpositive one would indicate an internal error.
    """
    if r < 1:
        raise ValueError(f"level must be >= 1, got {r}")
    if s < 2:
        raise ValueError(f"minimal supercuspidal conductor must be >= 2, got {s}")
    if s > 2 * r:
        return 0
    total = 0
    for i in range(r + 1):
        count = num_classes_exact(q, i)
        term = 2 * r - twisted_conductor_minimal(s, i) + 1
        if count > 0 and term <= 0:
            raise RuntimeError(
                f"internal check failed: nonpositive multiplicity term {term} "
                f"at twist conductor {i} for q={q}, s={s}, r={r}"
            )
        if count > 0:
            total += count * term
    return total


def dim_supercuspidal(q: int, s: int, c_chi: int, m: int) -> int:
    """Fixed-space dimension of a possibly non-minimal supercuspidal. The
    effective conductor is max(s, 2*c_chi); above level threshold the twist
    is invisible and the dimension equals the minimal one."""
    c = twisted_conductor_minimal(s, c_chi)
    if m < 0:
        raise ValueError(f"level must be >= 0, got {m}")
    if c > 2 * m:
        return 0
    return dim_supercuspidal_minimal(q, s, m)


@dataclass(frozen=True)
class KirillovBasisElement:
    """A basis function of the fixed space in the Kirillov realization: the
    twist class it transforms by, supported on the valuation shell -m_support."""

    character: QuasiCharacterClass
    m_support: int


def _check_kirillov_args(s: int, c_psi: int, r: int) -> None:
    if s < 2:
        raise ValueError(f"minimal supercuspidal conductor must be >= 2, got {s}")
    if r < -c_psi:
        raise ValueError(f"need level r >= -c_psi, got r={r}, c_psi={c_psi}")


def kirillov_support_interval(
    s: int, i: int, c_psi: int, r: int
) -> tuple[int, int]:
    """Inclusive range of support orders for the level-r fixed Kirillov
    functions transforming by a twist class of conductor i:
    [c(twist) + c_psi - r, c_psi + r]. Empty when the bounds cross."""
    return (twisted_conductor_minimal(s, i) + c_psi - r, c_psi + r)


def kirillov_basis(
    q: int, s: int, c_psi: int, r: int
) -> list[KirillovBasisElement]:
    """Enumerate the Kirillov-model basis of the level-r fixed space of a
    minimal supercuspidal of conductor s, for an additive character of
    conductor c_psi.

    One element per twist class of conductor i <= r and per integer support
    order in the class's support interval. Requires r >= -c_psi. For
    c_psi = 0 the count equals dim_supercuspidal_lattice(q, s, r).
    """
    _check_kirillov_args(s, c_psi, r)
    basis: list[KirillovBasisElement] = []
    for i in range(max(r + 1, 0)):
        lo, hi = kirillov_support_interval(s, i, c_psi, r)
        if lo > hi:
            continue
        for class_index in range(num_classes_exact(q, i)):
            lam = QuasiCharacterClass(i, class_index)
            for m in range(lo, hi + 1):
                basis.append(KirillovBasisElement(lam, m))
    return basis


def kirillov_basis_count(q: int, s: int, c_psi: int, r: int) -> int:
    """Size of kirillov_basis(q, s, c_psi, r) without materializing it:
    classes of a common conductor share their support interval, so each
    conductor contributes class count times interval length."""
    _check_kirillov_args(s, c_psi, r)
    total = 0
    for i in range(max(r + 1, 0)):
        lo, hi = kirillov_support_interval(s, i, c_psi, r)
        if lo <= hi:
            total += num_classes_exact(q, i) * (hi - lo + 1)
    return total


def dim_gl2(rep: GL2Representation, q: int, m: int) -> int:
    """Fixed-space dimension at level m >= 0 for any of the three GL_2 types.

    Level 0 reduces to the spherical-vector count: 1 for an unramified
    principal series, 0 for Steinberg twists and supercuspidals.
    """
    if m < 0:
        raise ValueError(f"level must be >= 0, got {m}")
    if isinstance(rep, PrincipalSeries):
        if m == 0:
            return delta_leq(rep.c1, 0) * delta_leq(rep.c2, 0)
        return dim_principal_series(q, rep.c1, rep.c2, m)
    if isinstance(rep, SteinbergTwist):
        if m == 0:
            return 0
        return dim_steinberg_twist(q, rep.c_chi, m)
    if isinstance(rep, Supercuspidal):
        if m == 0:
            return 0
        return dim_supercuspidal(q, rep.s, rep.c_chi, m)
    raise TypeError(f"not a GL_2 representation: {rep!r}")


def dim_induced_general(
    partition: Sequence[int], q: int, m: int, block_dims: Sequence[int]
) -> int:
    """Fixed-space dimension of a parabolically induced representation:
    (number of double cosets) * (product of the block fixed-space dims).

    The coset count is the closed-form parabolic index for m >= 1 and 1 at
    level 0. Block dimensions are the caller's data.
    """
    partition = tuple(partition)
    if len(block_dims) != len(partition):
        raise ValueError(
            f"{len(block_dims)} block dimensions for {len(partition)} blocks"
        )
    if m < 0:
        raise ValueError(f"level must be >= 0, got {m}")
    index = index_m0(partition) if m == 0 else parabolic_index_closed(partition, q, m)
    dim = index
    for d in block_dims:
        dim *= d
    return dim
