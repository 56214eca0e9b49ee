"""Lifting an adapted order from a full subposet Q to the whole diamond-free poset P."""

from __future__ import annotations

from .errors import PreconditionError
from .order import PartialOrder, close_masks
from .quiver import ReachPoset, bits, diamond_free, mask_of


def _closest(chain: int, p: ReachPoset, to_low_end: bool) -> int:
    # in a diamond-free poset intervals are chains; pick the element of `chain`
    # nearest to its low (or high) end
    for x in bits(chain):
        span = p.up[x] if to_low_end else p.down[x]
        if chain & ~span == 0:
            return x
    raise AssertionError("interval is not a chain")


def lift_order(p: ReachPoset, subset, o: PartialOrder) -> PartialOrder:
    """The lifted order on P.

    Outside the subset R the lift is the poset order itself; on the subset it
    is o; for r in R and q in Q with r, q comparable, r is put below q when the
    element q1 of Q nearest to r in the interval between them satisfies q1 = q
    or q1 < q in o. Nothing in Q is ever put below R.
    """
    if not diamond_free(p):
        raise PreconditionError("lifting needs a diamond-free poset")
    qmask = subset if isinstance(subset, int) else mask_of(subset)
    n = p.n
    below = [0] * n
    for j in range(n):
        if qmask >> j & 1:
            below[j] = o.below[j] & qmask
        else:
            below[j] = p.down[j] & ~qmask & ~(1 << j)
    for r in bits(p_all(n) & ~qmask):
        for q in bits(qmask):
            if p.up[r] >> q & 1:       # r <= q
                q1 = _closest(p.interval(r, q) & qmask, p, to_low_end=True)
            elif p.up[q] >> r & 1:     # q <= r
                q1 = _closest(p.interval(q, r) & qmask, p, to_low_end=False)
            else:
                continue
            if q1 == q or o.below[q] >> q1 & 1:
                below[q] |= 1 << r
    return close_masks(n, below)


def p_all(n: int) -> int:
    return (1 << n) - 1
