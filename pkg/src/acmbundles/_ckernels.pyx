# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_pykernels``; callers keep inputs inside int64 range."""


def chi12(long long r, long long k, long long c1, long long c2):
    return 2 * r * c1 * c1 * c1 - 6 * c1 * c2 + c1 * (12 * (k + 4) - 2 * r)


def scan_chern(long long r, long long k, long long c1_lo, long long c1_hi,
               long long c2_lo, long long c2_hi, twists, targets):
    cdef Py_ssize_t m = len(twists), i
    cdef long long c1, c2, a, b, n, lin = 12 * (k + 4) - 2 * r
    cdef long long[64] ns
    cdef long long[64] ts
    cdef bint ok
    if m > 64:
        raise ValueError("at most 64 samples")
    for i in range(m):
        ns[i] = twists[i]
        ts[i] = 12 * targets[i]
    found = []
    for c1 in range(c1_lo, c1_hi + 1):
        for c2 in range(c2_lo, c2_hi + 1):
            ok = True
            for i in range(m):
                n = ns[i]
                a = c1 + 2 * n
                b = c2 + r * n * c1 + r * n * n
                if 2 * r * a * a * a - 6 * a * b + a * lin != ts[i]:
                    ok = False
                    break
            if ok:
                found.append((c1, c2))
    return found
