"""Exact arithmetic over Z/p^m and exhaustive enumeration of GL_n(Z/p^m).

Everything here is plain Python integer arithmetic: orders of the finite
groups grow like q**(n*n*m) and would overflow any fixed-width type. The
enumeration routines are the ground-truth oracles that the closed-form
order and index formulas are checked against, so they deliberately stay
naive (filter all candidate matrices by determinant).
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .budget import BudgetExceededError, candidate_budget

Rows = tuple[tuple[int, ...], ...]


def is_prime(n: int) -> bool:
    """Primality by trial division; intended for the small primes used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_power_base(q: int) -> tuple[int, int] | None:
    """Return (p, f) with q = p**f, or None if q is not a prime power."""
    if q < 2:
        return None
    p = q
    for d in range(2, q + 1):
        if d * d > q:
            break
        if q % d == 0:
            p = d
            break
    f = 0
    rest = q
    while rest % p == 0:
        rest //= p
        f += 1
    if rest != 1 or not is_prime(p):
        return None
    return p, f


@dataclass(frozen=True)
class LocalFieldParams:
    """Residue data of a p-adic field: residue characteristic p, residue
    degree f, and the residue cardinality q = p**f."""

    p: int
    f: int = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.f < 1:
            raise ValueError(f"residue degree f must be >= 1, got {self.f}")

    @property
    def q(self) -> int:
        return self.p**self.f


@dataclass(frozen=True)
class MatrixModPM:
    """An n x n matrix over Z/p^m. Entries are reduced at construction, so
    equality is entrywise equality of reduced entries."""

    p: int
    m: int
    rows: Rows

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if self.m < 1:
            raise ValueError(f"exponent m must be >= 1, got {self.m}")
        n = len(self.rows)
        if n < 1 or any(len(row) != n for row in self.rows):
            raise ValueError("rows must form a nonempty square matrix")
        pm = self.p**self.m
        reduced = tuple(tuple(x % pm for x in row) for row in self.rows)
        object.__setattr__(self, "rows", reduced)

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def modulus(self) -> int:
        return self.p**self.m

    def __matmul__(self, other: "MatrixModPM") -> "MatrixModPM":
        if (self.p, self.m, self.n) != (other.p, other.m, other.n):
            raise ValueError("matrix product requires matching ring and size")
        return MatrixModPM(self.p, self.m, mat_mul(self.rows, other.rows, self.modulus))


def mat_mul(a: Rows, b: Rows, modulus: int) -> Rows:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % modulus for j in range(n))
        for i in range(n)
    )


def det_int(rows: Sequence[Sequence[int]]) -> int:
    """Determinant by exact integer cofactor expansion (n <= 3 unrolled)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    total = 0
    for j, pivot in enumerate(rows[0]):
        if pivot == 0:
            continue
        minor = [list(row[:j]) + list(row[j + 1 :]) for row in rows[1:]]
        total += (-1) ** j * pivot * det_int(minor)
    return total


def gl_order(n: int, q: int, m: int) -> int:
    """Order of GL_n over the residue ring at level m:
    q**(n*n*(m-1)) * prod_{i<n} (q**n - q**i), as an exact integer."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if m < 1:
        raise ValueError(f"level m must be >= 1, got {m}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    order = q ** (n * n * (m - 1))
    qn = q**n
    for i in range(n):
        order *= qn - q**i
    return order


def parabolic_order(partition: Sequence[int], q: int, m: int) -> int:
    """Order of the standard block-upper-triangular subgroup attached to the
    partition, over the residue ring at level m."""
    if len(partition) == 0:
        raise ValueError("partition must be nonempty")
    if any(part < 1 for part in partition):
        raise ValueError(f"all partition parts must be >= 1, got {tuple(partition)}")
    order = 1
    for part in partition:
        order *= gl_order(part, q, m)
    above = 0  # free entries above the block diagonal
    for i in range(len(partition)):
        for j in range(i + 1, len(partition)):
            above += partition[i] * partition[j]
    return order * q ** (m * above)


def is_invertible(a: MatrixModPM) -> bool:
    """Invertible over Z/p^m iff det is a unit, i.e. det != 0 mod p."""
    return det_int(a.rows) % a.p != 0


def _block_starts(partition: Sequence[int]) -> list[int]:
    starts, s = [], 0
    for part in partition:
        starts.append(s)
        s += part
    return starts


def in_parabolic(a: MatrixModPM, partition: Sequence[int]) -> bool:
    """True iff every entry strictly below the block diagonal is 0 in Z/p^m."""
    if sum(partition) != a.n:
        raise ValueError(
            f"partition {tuple(partition)} does not sum to matrix size {a.n}"
        )
    return _rows_in_parabolic(a.rows, partition)


def _rows_in_parabolic(rows: Rows, partition: Sequence[int]) -> bool:
    starts = _block_starts(partition)
    for bi, start in enumerate(starts):
        for i in range(start, start + partition[bi]):
            for j in range(start):
                if rows[i][j] != 0:
                    return False
    return True


def _enumerate_gl_rows(n: int, p: int, m: int, budget: int | None = None) -> Iterator[Rows]:
    """Raw row-tuples of the invertible matrices, in lexicographic order."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    limit = candidate_budget(budget)
    required = p ** (m * n * n)
    if required > limit:
        raise BudgetExceededError(required, limit, f"enumerating GL_{n}(Z/{p}^{m})")
    pm = p**m
    for flat in product(range(pm), repeat=n * n):
        rows = tuple(flat[i * n : (i + 1) * n] for i in range(n))
        if det_int(rows) % p != 0:
            yield rows


def enumerate_gl(n: int, p: int, m: int, budget: int | None = None) -> Iterator[MatrixModPM]:
    """Yield each invertible matrix over Z/p^m exactly once, in the
    lexicographic order of its (row-major) entries.

    Raises BudgetExceededError when p**(m*n*n) candidates exceed the budget;
    the message carries the required budget.
    """
    for rows in _enumerate_gl_rows(n, p, m, budget):
        yield MatrixModPM(p, m, rows)


def _enumerate_parabolic_rows(
    partition: Sequence[int], p: int, m: int, budget: int | None = None
) -> Iterator[Rows]:
    """Raw row-tuples of the invertible block-upper-triangular matrices.

    Structured enumeration: invertible diagonal blocks, free entries above.
    Exactly parabolic_order(partition, p, m) matrices are produced, far
    fewer candidates than filtering all of M_n.
    """
    n = sum(partition)
    starts = _block_starts(partition)
    pm = p**m
    block_lists = [
        list(_enumerate_gl_rows(part, p, m, budget)) for part in partition
    ]
    above_positions = [
        (i, j)
        for bi, start in enumerate(starts)
        for i in range(start, start + partition[bi])
        for j in range(start + partition[bi], n)
    ]
    for blocks in product(*block_lists):
        base = [[0] * n for _ in range(n)]
        for block, start in zip(blocks, starts):
            size = len(block)
            for i in range(size):
                for j in range(size):
                    base[start + i][start + j] = block[i][j]
        for values in product(range(pm), repeat=len(above_positions)):
            for (i, j), v in zip(above_positions, values):
                base[i][j] = v
            yield tuple(tuple(row) for row in base)
