"""Binomial parity mod 2 and the diagonal-power vanishing check.

``binom_parity`` is the bitwise rule (C(k,i) is odd iff every set bit of i
is set in k); ``binom_big`` is the exact big-integer value via the
multiplicative recurrence and serves as the parity oracle.

``diagonal_power_vanishing`` decides whether the square of the canonical
degree-1 zero-divisor chain, i.e. (d + d)-bar raised to the k-th power in
the Z2 tensor square of the non-orientable ring, vanishes.  Two independent
routes must agree: the ring computation (the source of truth) and a parity
count over the surviving Kunneth window.
"""

from __future__ import annotations

from typing import List, Tuple


def binom_parity(k: int, i: int) -> int:
    """C(k, i) mod 2 by bitwise containment."""
    if i < 0 or i > k:
        raise ValueError(f"need 0 <= i <= k, got i={i}, k={k}")
    return 1 if (i & k) == i else 0


def odd_count_row(k: int) -> int:
    """Number of odd entries in row k of Pascal's triangle: 2**popcount(k)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return 1 << bin(k).count("1")


def binom_big(n: int, k: int) -> int:
    """Exact binomial coefficient via the multiplicative recurrence."""
    if k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    k = min(k, n - k)
    value = 1
    for j in range(1, k + 1):
        value = value * (n - k + j) // j
    return value


def lucas_window_vanishing(n: int, k: int) -> bool:
    """Parity-route computation of whether (d-bar)^k dies in the tensor square.

    (d-bar)^k = sum_i C(k,i) d^{k-i} (x) d^i; a summand survives iff C(k,i)
    is odd and both exponents are at most n.  Distinct i give distinct
    Kunneth basis elements, so the power vanishes iff no summand survives.
    """
    lo = max(0, k - n)
    hi = min(k, n)
    return all(binom_parity(k, i) == 0 for i in range(lo, hi + 1))


def diagonal_power_vanishing(n: int, g: int, k: int) -> bool:
    """Whether (e1-bar)^2 ... (ek-bar)^2 = (d-bar)^k vanishes in the square.

    Computed in the ring (tensor square of the genus-g, exponent-n
    non-orientable ring over Z2) and cross-checked against the parity route;
    the two must agree.
    """
    if not 1 <= k <= min(n, g):
        raise ValueError(f"need 1 <= k <= min(n, g) = {min(n, g)}")
    from .catalog import ks_ring
    from .tensor import tensor_power

    ring = ks_ring(n, g)
    T = tensor_power(ring, 2)
    acc = T.one()
    for i in range(1, k + 1):
        ei = ring.gen(f"e{i}")
        bar = T.pi(1, ei) + T.pi(2, ei)
        acc = T.cup(acc, T.cup(bar, bar))
    ring_zero = acc.is_zero()
    parity_zero = lucas_window_vanishing(n, k)
    if ring_zero != parity_zero:
        raise AssertionError(
            f"ring and parity routes disagree for (n={n}, g={g}, k={k})"
        )
    return ring_zero
