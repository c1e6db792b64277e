"""Pure-numpy section-sum kernel (fallback when the extension is not built)."""

import math

import numpy as np


def section_sums(th, thp, t, logs, weights, compensated=False):
    """Weighted trigonometric sums over phases phi_k = th - logs[k] * t.

    Returns ``(C, S, SD, CDD)`` with

        C   = sum w_k cos(phi_k)
        S   = sum w_k sin(phi_k)
        SD  = sum w_k sin(phi_k) (thp - logs[k])
        CDD = sum w_k cos(phi_k) (thp - logs[k])^2

    ``compensated`` switches to exactly rounded summation (``math.fsum``).
    """
    logs = np.asarray(logs, dtype=np.float64)
    weights = np.asarray(weights, dtype=np.float64)
    if logs.shape != weights.shape:
        raise ValueError("logs and weights must have equal length")
    ph = th - logs * t
    wc = weights * np.cos(ph)
    ws = weights * np.sin(ph)
    d = thp - logs
    if compensated:
        return (
            math.fsum(wc),
            math.fsum(ws),
            math.fsum(ws * d),
            math.fsum(wc * d * d),
        )
    return (
        float(np.sum(wc)),
        float(np.sum(ws)),
        float(np.sum(ws * d)),
        float(np.sum(wc * d * d)),
    )
