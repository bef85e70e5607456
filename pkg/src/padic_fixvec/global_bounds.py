"""Conductor bounds for automorphic representations from a minimal level N.

A representation with fixed vectors at principal congruence level N (and at
no proper divisor of N) has conductor bounded below by max(rad(N), N/rad(N))
and above by N**n, the product over p | N of the local windows
[max(e_p - 1, 1), e_p * n]. Everything here is arithmetic over the ground
field of rational numbers; number-field generality is out of scope.
"""

from dataclasses import dataclass

import sympy

MAX_N = 10**18


@dataclass(frozen=True)
class GlobalLevel:
    """A positive integer level with its prime factorization, stored as
    (prime, exponent) pairs with primes strictly increasing."""

    N: int
    factorization: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.N < 1:
            raise ValueError(f"level must be >= 1, got {self.N}")
        object.__setattr__(self, "factorization", tuple(
            (int(p), int(e)) for p, e in self.factorization
        ))
        product = 1
        last_p = 1
        for p, e in self.factorization:
            if p <= last_p:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not sympy.isprime(p):
                raise ValueError(f"{p} is not prime")
            product *= p**e
            last_p = p
        if product != self.N:
            raise ValueError(
                f"factorization multiplies to {product}, not {self.N}"
            )

    @property
    def radical(self) -> int:
        """Product of the distinct primes dividing N (1 when N = 1)."""
        rad = 1
        for p, _ in self.factorization:
            rad *= p
        return rad


@dataclass(frozen=True)
class BoundsResult:
    """An inclusive conductor range."""

    lower: int
    upper: int

    def __post_init__(self):
        if not (1 <= self.lower <= self.upper):
            raise ValueError(
                f"need 1 <= lower <= upper, got ({self.lower}, {self.upper})"
            )


def factorize(N: int) -> GlobalLevel:
    """Complete prime factorization of 1 <= N <= 10**18."""
    if not (1 <= N <= MAX_N):
        raise ValueError(f"level must be in [1, 10^18], got {N}")
    pairs = tuple(sorted((p, e) for p, e in sympy.factorint(N).items()))
    return GlobalLevel(N, pairs)


def radical(N: int) -> int:
    """Product of the distinct primes dividing N (1 when N = 1)."""
    return factorize(N).radical


def conductor_bounds(n: int, N: int) -> BoundsResult:
    """Conductor range for a group size n and minimal level N:
    lower = max(rad(N), N // rad(N)), upper = N**n."""
    if n < 1:
        raise ValueError(f"group size must be >= 1, got {n}")
    level = factorize(N)
    rad = level.radical
    return BoundsResult(max(rad, N // rad), N**n)


def local_conductor_window(n: int, e_p: int) -> tuple[int, int]:
    """Inclusive conductor range at a prime dividing the level with
    exponent e_p: [max(e_p - 1, 1), e_p * n]."""
    if n < 1:
        raise ValueError(f"group size must be >= 1, got {n}")
    if e_p < 1:
        raise ValueError(f"exponent must be >= 1, got {e_p}")
    return (max(e_p - 1, 1), e_p * n)
