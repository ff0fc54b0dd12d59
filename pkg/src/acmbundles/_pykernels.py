"""Pure-Python kernels; the compiled ``_ckernels`` module mirrors this API."""


def chi12(r, k, c1, c2):
    """Twelve times the rank-2 Euler characteristic on ``X_r``."""
    return 2 * r * c1 * c1 * c1 - 6 * c1 * c2 + c1 * (12 * (k + 4) - 2 * r)


def scan_chern(r, k, c1_lo, c1_hi, c2_lo, c2_hi, twists, targets):
    """All ``(c1, c2)`` in the closed box whose twisted Euler characteristics
    equal ``targets`` at ``twists``.  Matches come out in lexicographic order."""
    samples = [(n, 12 * t) for n, t in zip(twists, targets)]
    found = []
    for c1 in range(c1_lo, c1_hi + 1):
        for c2 in range(c2_lo, c2_hi + 1):
            for n, t12 in samples:
                a = c1 + 2 * n
                b = c2 + r * n * c1 + r * n * n
                if 2 * r * a * a * a - 6 * a * b + a * (12 * (k + 4) - 2 * r) != t12:
                    break
            else:
                found.append((c1, c2))
    return found
