# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled section-sum kernel; same contract as ``_pykernels.section_sums``."""

from libc.math cimport cos, sin


cdef inline void _neumaier(double x, double *s, double *c) noexcept nogil:
    cdef double tot = s[0] + x
    if (s[0] >= 0 and s[0] >= x) or (s[0] < 0 and -s[0] >= (x if x >= 0 else -x)):
        c[0] += (s[0] - tot) + x
    else:
        c[0] += (x - tot) + s[0]
    s[0] = tot


def section_sums(double th, double thp, double t,
                 const double[::1] logs, const double[::1] weights,
                 bint compensated=False):
    cdef Py_ssize_t n = logs.shape[0]
    cdef Py_ssize_t k
    cdef double ph, c, s, d, w, wc, ws
    cdef double sc = 0.0, ss = 0.0, ssd = 0.0, scdd = 0.0
    cdef double ec = 0.0, es = 0.0, esd = 0.0, ecdd = 0.0
    if weights.shape[0] != n:
        raise ValueError("logs and weights must have equal length")
    with nogil:
        if compensated:
            for k in range(n):
                ph = th - logs[k] * t
                c = cos(ph)
                s = sin(ph)
                d = thp - logs[k]
                w = weights[k]
                wc = w * c
                ws = w * s
                _neumaier(wc, &sc, &ec)
                _neumaier(ws, &ss, &es)
                _neumaier(ws * d, &ssd, &esd)
                _neumaier(wc * d * d, &scdd, &ecdd)
            sc += ec
            ss += es
            ssd += esd
            scdd += ecdd
        else:
            for k in range(n):
                ph = th - logs[k] * t
                c = cos(ph)
                s = sin(ph)
                d = thp - logs[k]
                w = weights[k]
                wc = w * c
                ws = w * s
                sc += wc
                ss += ws
                ssd += ws * d
                scdd += wc * d * d
    return sc, ss, ssd, scdd
