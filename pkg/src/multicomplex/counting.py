"""Exact counting formulas for automorphisms and involutions of MC(n).

Everything here is closed-form or recursive big-integer arithmetic; the
brute-force cross-checks live in the oracle module.  Throughout, N denotes
2^(n-1), the number of idempotent components of MC(n), so that automorphism
counts are counts of signed permutations on N symbols.
"""
from __future__ import annotations

import math
from typing import Iterator

import mpmath

from .automorphism import CycleType

__all__ = [
    "count_automorphisms",
    "count_involutions",
    "count_signed_involutions",
    "g_sequence",
    "count_p_involutions",
    "count_r_involutions",
    "count_signed_r_involutions",
    "count_preserving",
    "count_subspaces_containing_all_ones",
    "count_independent_image_tuples",
    "asymptotic_estimate",
    "cycle_types_with_parts_dividing",
]


def _require_order(n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return 1 << (n - 1)


def count_automorphisms(n: int) -> int:
    """Number of real-linear ring automorphisms of MC(n): 2^N * N!."""
    N = _require_order(n)
    return (1 << N) * math.factorial(N)


def count_signed_involutions(N: int) -> int:
    """Signed permutations on N symbols squaring to the identity.

    Closed form: N! * sum over k of 2^(N-2k) / (k! * (N-2k)!), where k runs
    over the number of 2-cycles.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    total = 0
    fact_n = math.factorial(N)
    for k in range(N // 2 + 1):
        num = fact_n * (1 << (N - 2 * k))
        den = math.factorial(k) * math.factorial(N - 2 * k)
        assert num % den == 0
        total += num // den
    return total


def count_involutions(n: int) -> int:
    """Number of involutions of MC(n), by the closed-form sum."""
    return count_signed_involutions(_require_order(n))


def g_sequence(m: int) -> int:
    """m-th term of the recursion g(1)=2, g(2)=6, g(m)=2g(m-1)+(2m-2)g(m-2).

    g(m) counts signed involutions on m symbols; computed by the recursion
    (deliberately a separate route from count_signed_involutions).
    """
    if m < 1:
        raise ValueError("m must be at least 1")
    a, b = 2, 6  # g(1), g(2)
    if m == 1:
        return a
    for i in range(3, m + 1):
        a, b = b, 2 * b + (2 * i - 2) * a
    return b


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def count_p_involutions(n: int, p: int) -> int:
    """Number of automorphisms f of MC(n) with f^p = identity, p an odd prime.

    Closed form: N! * sum over k of 2^((p-1)k) / (k! * p^k * (N-pk)!).
    """
    if not _is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    N = _require_order(n)
    fact_n = math.factorial(N)
    total = 0
    for k in range(N // p + 1):
        num = fact_n * (1 << ((p - 1) * k))
        den = math.factorial(k) * p ** k * math.factorial(N - p * k)
        assert num % den == 0
        total += num // den
    return total


def _divisors_up_to(r: int, cap: int) -> list[int]:
    return [d for d in range(1, min(r, cap) + 1) if r % d == 0]


def cycle_types_with_parts_dividing(N: int, r: int) -> Iterator[CycleType]:
    """All cycle types of S_N whose cycle lengths each divide r."""
    parts = _divisors_up_to(r, N)

    def rec(remaining: int, idx: int, current: dict[int, int]) -> Iterator[CycleType]:
        if remaining == 0:
            yield CycleType(dict(current))
            return
        if idx < 0:
            return
        k = parts[idx]
        for m in range(remaining // k, -1, -1):
            if m:
                current[k] = m
            yield from rec(remaining - k * m, idx - 1, current)
            current.pop(k, None)

    yield from rec(N, len(parts) - 1, {})


def count_signed_r_involutions(N: int, r: int) -> int:
    """Signed permutations pi on N symbols with pi^r = identity.

    Sums over cycle types with parts dividing r.  A cycle of length k admits
    all 2^k sign patterns when r/k is even, and only the 2^(k-1) patterns
    with positive sign product when r/k is odd (a negative product doubles
    the order to 2k).  The 2-power cancellation is asserted at runtime.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    if r < 1:
        raise ValueError("r must be at least 1")
    total = 0
    for ctype in cycle_types_with_parts_dividing(N, r):
        halved = sum(
            m for k, m in ctype.multiplicities.items() if (r // k) % 2 == 1
        )
        num = ctype.permutation_count() * (1 << N)
        den = 1 << halved
        assert num % den == 0, "2-power cancellation failed"
        total += num // den
    return total


def count_r_involutions(n: int, r: int) -> int:
    """Number of automorphisms f of MC(n) with f^r = identity."""
    return count_signed_r_involutions(_require_order(n), r)


def count_subspaces_containing_all_ones(k: int, n: int) -> int:
    """Number of k-dimensional subspaces of GF(2)^n containing (1,..,1).

    Product form: prod over j=1..k-1 of (2^n - 2^j)/(2^k - 2^j); equals 1
    for k = 0 or 1 by convention (the empty product).
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    num = 1
    den = 1
    for j in range(1, k):
        num *= (1 << n) - (1 << j)
        den *= (1 << k) - (1 << j)
    assert num % den == 0
    return num // den


def count_independent_image_tuples(k: int, n: int) -> int:
    """Number of ordered linearly independent (n-k)-tuples in GF(2)^k.

    Product form: prod over j=0..n-k-1 of (2^k - 2^j); empty product = 1.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    out = 1
    for j in range(n - k):
        out *= (1 << k) - (1 << j)
    return out


def count_preserving(n: int) -> int:
    """Number of involutions of MC(n) sending each unit i_k to a signed
    canonical unit.

    Sum over kernel dimensions k from ceil(n/2) to n of
    subspace_count * image_tuple_count * 2^k.
    """
    _require_order(n)
    total = 0
    for k in range((n + 1) // 2, n + 1):
        total += (
            count_subspaces_containing_all_ones(k, n)
            * count_independent_image_tuples(k, n)
            * (1 << k)
        )
    return total


def asymptotic_estimate(n: int, dps: int = 60) -> mpmath.mpf:
    """Log of the large-n estimate of count_involutions(n).

    The estimate is (2^n/e)^(2^(n-2)) * e^(2^(n/2)) / sqrt(2e); the value
    returned is its natural log, computed at `dps` decimal digits:
    2^(n-2) * (n ln 2 - 1) + 2^(n/2) - (ln 2 + 1)/2.
    """
    _require_order(n)
    with mpmath.workdps(dps):
        ln2 = mpmath.ln(2)
        lead = mpmath.mpf(2) ** (n - 2) * (n * ln2 - 1)
        middle = mpmath.mpf(2) ** (mpmath.mpf(n) / 2)
        return lead + middle - (ln2 + 1) / 2
