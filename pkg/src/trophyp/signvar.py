"""Exact sign-variation counts and pointwise membership tests for
positive and nonnegative linear subspaces.

``var(v)`` counts the sign changes of a real vector after discarding its
zeros; ``varbar(v)`` counts them after every zero is assigned the sign
that maximizes the number of changes.  Both quantities depend only on the
entrywise signs, so every function here accepts exact rationals, ints, or
an already-reduced sign pattern.  No floating point is allowed.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

Sign = int  # one of -1, 0, +1

_NEG_INF = None  # DP sentinel for "state unreachable"


def sign(x) -> Sign:
    """Exact sign of a rational number."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def sign_pattern(v: Sequence) -> tuple[Sign, ...]:
    """Entrywise sign word of a vector (idempotent on sign patterns)."""
    if len(v) == 0:
        raise ValueError("empty vector")
    return tuple(sign(x) for x in v)


def var(v: Sequence) -> int:
    """Number of sign changes after discarding zeros.

    The all-zero vector has var 0.
    """
    p = [s for s in sign_pattern(v) if s != 0]
    return sum(1 for a, b in zip(p, p[1:]) if a != b)


def varbar(v: Sequence) -> int:
    """Maximum of ``var`` over all +-1 completions of the zero entries.

    Computed by a linear-time DP whose state is the last assigned sign.
    The all-zero vector of length n has varbar n-1.
    """
    pattern = sign_pattern(v)
    best = {1: _NEG_INF, -1: _NEG_INF}
    first = True
    for s in pattern:
        choices = (1, -1) if s == 0 else (s,)
        if first:
            new = {1: _NEG_INF, -1: _NEG_INF}
            for t in choices:
                new[t] = 0
            first = False
        else:
            new = {1: _NEG_INF, -1: _NEG_INF}
            for t in choices:
                cands = []
                if best[t] is not _NEG_INF:
                    cands.append(best[t])
                if best[-t] is not _NEG_INF:
                    cands.append(best[-t] + 1)
                if cands:
                    new[t] = max(cands)
        best = new
    return max(x for x in best.values() if x is not _NEG_INF)


def varbar_exhaustive(v: Sequence) -> int:
    """Brute-force oracle for ``varbar``: try all 2^z zero completions."""
    pattern = sign_pattern(v)
    zeros = [i for i, s in enumerate(pattern) if s == 0]
    best = 0
    for fill in product((1, -1), repeat=len(zeros)):
        w = list(pattern)
        for i, s in zip(zeros, fill):
            w[i] = s
        best = max(best, var(w))
    return best


def _check_membership_args(v: Sequence, c: int) -> tuple[Sign, ...]:
    p = sign_pattern(v)
    if all(s == 0 for s in p):
        raise ValueError("the zero vector lies in no subspace of the Grassmannian criteria")
    if not 1 <= c <= len(p):
        raise ValueError(f"codimension c={c} out of range for length {len(p)}")
    return p


def exists_nonnegative_subspace_containing(v: Sequence, c: int) -> bool:
    """Is v contained in some c-dimensional nonnegative subspace?

    Holds exactly when var(v) < c.
    """
    p = _check_membership_args(v, c)
    return var(p) < c


def exists_positive_subspace_containing(v: Sequence, c: int) -> bool:
    """Is v contained in some c-dimensional positive subspace?

    Holds exactly when varbar(v) < c.
    """
    p = _check_membership_args(v, c)
    return varbar(p) < c


def sign_chooser(support: Sequence[int], n: int) -> tuple[Sign, ...]:
    """Signs on a strictly increasing support ``i_1 < ... < i_k`` of [1..n]
    such that any full vector matching them has varbar at most n-k.

    The first sign is +1; consecutive supported positions get opposite
    signs when their index gap is even and equal signs when it is odd.
    Support indices are 1-based.
    """
    idx = list(support)
    if not idx:
        raise ValueError("empty support")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError("support must be strictly increasing")
    if idx[0] < 1 or idx[-1] > n:
        raise ValueError("support out of range")
    sigma = [1]
    for a, b in zip(idx, idx[1:]):
        gap = b - a
        sigma.append(-sigma[-1] if gap % 2 == 0 else sigma[-1])
    return tuple(sigma)


def embed_on_support(sigma: Sequence[Sign], support: Sequence[int], n: int) -> tuple[Sign, ...]:
    """Spread a support-indexed sign word into a length-n pattern (zeros off support)."""
    full = [0] * n
    for s, i in zip(sigma, support):
        full[i - 1] = s
    return tuple(full)
