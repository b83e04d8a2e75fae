"""Pure-numpy best-split scan, the fallback for the compiled kernel.

Bit-compatibility contract with _split_cy: prefix sums are sequential
(np.cumsum accumulates left to right, exactly like the C running sums) and
the SSE expression tree is written identically, so both backends return the
same bits and therefore choose the same split under the same tie-break.
Inputs must be finite; NaN would poison the argmin.
"""

import numpy as np


def scan_feature(x_sorted, y_sorted, min_leaf):
    """Best split of one presorted feature.

    Candidate thresholds are midpoints between distinct neighbors; a
    candidate is valid when both sides keep at least min_leaf samples.
    Returns (threshold, total child SSE), or None if no candidate is valid.
    Ties go to the lowest threshold.
    """
    n = x_sorted.shape[0]
    if n < 2:
        return None
    run_sum = np.cumsum(y_sorted)
    run_sumsq = np.cumsum(y_sorted * y_sorted)
    total_sum = run_sum[-1]
    total_sumsq = run_sumsq[-1]

    n_left = np.arange(1, n, dtype=np.float64)
    n_right = np.float64(n) - n_left
    s = run_sum[:-1]
    ss = run_sumsq[:-1]
    right_sum = total_sum - s
    sse = (ss - s * s / n_left) + ((total_sumsq - ss) - right_sum * right_sum / n_right)

    valid = (x_sorted[:-1] != x_sorted[1:]) & (n_left >= min_leaf) & (n_right >= min_leaf)
    if not valid.any():
        return None
    masked = np.where(valid, sse, np.inf)
    best = int(np.argmin(masked))
    threshold = (x_sorted[best] + x_sorted[best + 1]) / 2.0
    return float(threshold), float(masked[best])
