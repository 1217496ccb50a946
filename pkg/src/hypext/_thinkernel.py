"""Optional numba kernel for batched triangle thinness.

Mirrors the numpy chunk evaluator in coarse.py exactly (same sampling grid,
same clipping, same refinement pass); coarse.py falls back to the numpy path
when numba is unavailable.  tests/test_coarse.py asserts agreement.
"""

import warnings

import numpy as np

# the bundled TBB may be too old; numba falls back to another threading layer
warnings.filterwarnings("ignore", message=".*TBB.*")

try:
    from numba import njit, prange

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap

    prange = range


@njit(cache=True, fastmath=False)
def _gap_at(t, lam, i, m, r0, s_lo, s_hi, n):
    # point of side i at arc-length parameter t, in ball coordinates
    radial = np.tanh(0.5 * lam * t)
    ax = 0.0
    a2 = 0.0
    x2 = radial * radial
    for d in range(n):
        ax += m[i, d] * radial * r0[i, d]
        a2 += m[i, d] * m[i, d]
    den = 1.0 + 2.0 * ax + a2 * x2
    p = np.empty(n)
    pn2 = 0.0
    for d in range(n):
        p[d] = ((1.0 + 2.0 * ax + x2) * m[i, d] + (1.0 - a2) * radial * r0[i, d]) / den
        pn2 += p[d] * p[d]
    if pn2 > (1.0 - 1e-12) ** 2:
        scale = (1.0 - 1e-12) * (1.0 - 4e-16) / np.sqrt(pn2)
        for d in range(n):
            p[d] *= scale
        pn2 = 0.0
        for d in range(n):
            pn2 += p[d] * p[d]

    gap = np.inf
    for o in range(3):
        if o == i:
            continue
        # w = mobius_add(-m_o, p)
        ax2 = 0.0
        b2 = 0.0
        for d in range(n):
            ax2 += -m[o, d] * p[d]
            b2 += m[o, d] * m[o, d]
        den2 = 1.0 + 2.0 * ax2 + b2 * pn2
        nw2 = 0.0
        z1 = 0.0
        w = np.empty(n)
        for d in range(n):
            w[d] = ((1.0 + 2.0 * ax2 + pn2) * (-m[o, d]) + (1.0 - b2) * p[d]) / den2
            nw2 += w[d] * w[d]
            z1 += w[d] * r0[o, d]
        rho2 = 0.0
        for d in range(n):
            pp = w[d] - z1 * r0[o, d]
            rho2 += pp * pp
        disc = ((1.0 - z1) ** 2 + rho2) * ((1.0 + z1) ** 2 + rho2)
        s = 2.0 * z1 / ((1.0 + nw2) + np.sqrt(disc))
        if s < s_lo[o]:
            s = s_lo[o]
        elif s > s_hi[o]:
            s = s_hi[o]
        d2 = (z1 - s) ** 2 + rho2
        conf = (1.0 - nw2) * (1.0 - s * s)
        if conf < 1e-300:
            conf = 1e-300
        dist = 2.0 * np.arcsinh(np.sqrt(d2 / conf)) / lam
        if dist < gap:
            gap = dist
    return gap


@njit(cache=True, parallel=True, fastmath=False)
def thinness_kernel(m_all, r0_all, lo_all, hi_all, s_lo_all, s_hi_all,
                    lam, samples):
    count = m_all.shape[0]
    n = m_all.shape[2]
    out = np.zeros(count)
    for b in prange(count):
        best = 0.0
        for i in range(3):
            lo = lo_all[b, i]
            hi = hi_all[b, i]
            step = (hi - lo) / (samples - 1)
            arg_t = lo
            side_best = -1.0
            for j in range(samples):
                t = lo + step * j
                g = _gap_at(t, lam, i, m_all[b], r0_all[b],
                            s_lo_all[b], s_hi_all[b], n)
                if g > side_best:
                    side_best = g
                    arg_t = t
            fine_lo = arg_t - step
            fine_hi = arg_t + step
            fstep = (fine_hi - fine_lo) / 32.0
            for j in range(33):
                t = fine_lo + fstep * j
                if t < lo:
                    t = lo
                elif t > hi:
                    t = hi
                g = _gap_at(t, lam, i, m_all[b], r0_all[b],
                            s_lo_all[b], s_hi_all[b], n)
                if g > side_best:
                    side_best = g
            if side_best > best:
                best = side_best
        out[b] = best
    return out
