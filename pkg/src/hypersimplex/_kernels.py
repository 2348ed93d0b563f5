"""Compiled inner loops for running many walk chains.

Kernels never draw random numbers themselves. They consume pre-drawn uniform
integers from a buffer and return early when it runs dry, so the caller
refills from its numpy Generator and calls again. ``state`` holds
(chain, step, draw position, coin position, coin done) between calls.
Bits are stored with coordinate i at bit d - i, matching ``Vertex``.
"""

from __future__ import annotations

import numpy as np
from numba import njit

CHAIN, STEP, POS, COIN_POS, COIN_DONE = range(5)


def pair_masks(d: int) -> np.ndarray:
    """Table indexed by r * d + s: the two-bit mask for (r, s), or 0 when r == s."""
    r, s = np.divmod(np.arange(d * d, dtype=np.int64), d)
    masks = (np.int64(1) << r) | (np.int64(1) << s)
    masks[r == s] = 0
    return masks


@njit(cache=True)
def rejection_pair_chains(x, masks, steps, lazy, draws, coins, state):
    """Each draw indexes ``masks``; a pair is accepted iff exactly one of its bits is set."""
    n = x.shape[0]
    m = draws.shape[0]
    mc = coins.shape[0]
    i, j, pos, cpos, cdone = state[0], state[1], state[2], state[3], state[4]
    while i < n:
        v = x[i]
        while j < steps:
            if lazy and cdone == 0:
                if cpos >= mc:
                    x[i] = v
                    state[0], state[1], state[2], state[3], state[4] = i, j, pos, cpos, cdone
                    return False
                heads = coins[cpos] == 1
                cpos += 1
                if heads:
                    j += 1
                    continue
                cdone = 1
            if pos >= m:
                x[i] = v
                state[0], state[1], state[2], state[3], state[4] = i, j, pos, cpos, cdone
                return False
            mask = masks[draws[pos]]
            pos += 1
            w = v & mask
            # r == s has mask 0 and is always rejected
            ok = np.int64((w != 0) & (w != mask))
            v ^= mask * ok
            j += ok
            cdone *= 1 - ok
        x[i] = v
        i += 1
        j = 0
    state[0], state[1], state[2], state[3], state[4] = i, j, pos, cpos, cdone
    return True


@njit(cache=True)
def direct_swap_chains(x, d, k, steps, lazy, draws, coins, state):
    """Each draw q in [0, k(d-k)) picks the (q // (d-k))-th one and (q % (d-k))-th zero."""
    n = x.shape[0]
    m = draws.shape[0]
    mc = coins.shape[0]
    z = d - k
    i, j, pos, cpos = state[0], state[1], state[2], state[3]
    while i < n:
        v = x[i]
        while j < steps:
            if lazy:
                if cpos >= mc or pos >= m:
                    x[i] = v
                    state[0], state[1], state[2], state[3] = i, j, pos, cpos
                    return False
                heads = coins[cpos] == 1
                cpos += 1
                if heads:
                    j += 1
                    continue
            elif pos >= m:
                x[i] = v
                state[0], state[1], state[2], state[3] = i, j, pos, cpos
                return False
            q = draws[pos]
            pos += 1
            a = q // z
            b = q - a * z
            seen_one = 0
            seen_zero = 0
            one_bit = np.int64(0)
            zero_bit = np.int64(0)
            # scan from coordinate 1 (the top bit) downwards
            for t in range(d - 1, -1, -1):
                bit = np.int64(1) << t
                if v & bit:
                    if seen_one == a:
                        one_bit = bit
                    seen_one += 1
                else:
                    if seen_zero == b:
                        zero_bit = bit
                    seen_zero += 1
            v ^= one_bit | zero_bit
            j += 1
        x[i] = v
        i += 1
        j = 0
    state[0], state[1], state[2], state[3] = i, j, pos, cpos
    return True
