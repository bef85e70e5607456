"""Double-coset counts P \\ GL_n / K(m).

Reduction mod p^m turns the count into the index of the block-upper-
triangular subgroup P inside GL_n(Z/p^m), which we compute two ways:
in closed form from the order formulas, and by exhaustive coset
enumeration over the finite ring (the oracle, restricted to residue
degree 1).
"""

from typing import Iterator, Sequence

from .budget import BudgetExceededError, candidate_budget
from .finite_ring import (
    Rows,
    _enumerate_gl_rows,
    _enumerate_parabolic_rows,
    gl_order,
    mat_mul,
    parabolic_order,
)


def index_m0(partition: Sequence[int]) -> int:
    """At level 0 the full integral group absorbs everything: one double coset."""
    if len(partition) == 0:
        raise ValueError("partition must be nonempty")
    return 1


def parabolic_index_closed(partition: Sequence[int], q: int, m: int) -> int:
    """[GL_n : P] over the residue ring at level m >= 1, via the order formulas.

    The division is exact; a non-exact division means an internal error and
    raises RuntimeError.
    """
    if m < 1:
        raise ValueError(f"level m must be >= 1, got {m}")
    n = sum(partition)
    total = gl_order(n, q, m)
    sub = parabolic_order(partition, q, m)
    if total % sub != 0:
        raise RuntimeError(
            f"internal check failed: |GL| = {total} not divisible by |P| = {sub} "
            f"for partition {tuple(partition)}, q={q}, m={m}"
        )
    return total // sub


def _projective_line_keys(p: int, m: int, budget: int) -> Iterator[tuple[int, int]]:
    """Coset keys for the Borel in GL_2: the bottom row up to unit scaling.

    Left multiplication by an upper-triangular matrix scales the bottom row
    by a unit, so the coset of g is determined by its bottom row as a point
    of the projective line over Z/p^m. Canonical form: (c*d^-1, 1) when d is
    a unit, else (1, c^-1*d).
    """
    required = p ** (m * 4)
    if required > budget:
        raise BudgetExceededError(
            required, budget, f"enumerating GL_2(Z/{p}^{m}) bottom rows"
        )
    pm = p**m
    for rows in _enumerate_gl_rows(2, p, m, budget):
        c, d = rows[1]
        if d % p != 0:
            yield (c * pow(d, -1, pm) % pm, 1)
        else:
            yield (1, d * pow(c, -1, pm) % pm)


def parabolic_index_enumerated(
    partition: Sequence[int],
    p: int,
    m: int,
    budget: int | None = None,
    method: str = "auto",
) -> int:
    """Count the distinct left cosets P*g over g in GL_n(Z/p^m).

    Every enumerated g is assigned a canonical coset key, the
    lexicographically least matrix of its coset; the result is the number of
    distinct keys. Two methods:

    * "orbit": sweep GL in lexicographic order and expand the full coset
      P*g of each not-yet-seen g (the first-seen member of a coset in a
      lexicographic sweep is exactly its least element). Gated by
      |P| * |GL| <= budget, on top of the candidate budget.
    * "projective": Borel in GL_2 only; keys cosets by the bottom row up to
      unit scaling, which reaches instances such as p=5, m=2 that the
      generic gate rejects. Gated by the candidate budget alone.
    """
    if m < 1:
        raise ValueError(f"level m must be >= 1, got {m}")
    partition = tuple(partition)
    n = sum(partition)
    limit = candidate_budget(budget)

    if method == "auto":
        method = "projective" if partition == (1, 1) else "orbit"
    if method == "projective":
        if partition != (1, 1):
            raise ValueError("projective method applies only to the Borel in GL_2")
        return len(set(_projective_line_keys(p, m, limit)))
    if method != "orbit":
        raise ValueError(f"unknown method {method!r}")

    pair_cost = parabolic_order(partition, p, m) * gl_order(n, p, m)
    if pair_cost > limit:
        raise BudgetExceededError(
            pair_cost,
            limit,
            f"coset enumeration for partition {partition} over Z/{p}^{m}",
        )
    pm = p**m
    parabolic_elements: list[Rows] = list(
        _enumerate_parabolic_rows(partition, p, m, limit)
    )
    seen: set[Rows] = set()
    count = 0
    for g in _enumerate_gl_rows(n, p, m, limit):
        if g in seen:
            continue
        count += 1
        for u in parabolic_elements:
            seen.add(mat_mul(u, g, pm))
    return count
