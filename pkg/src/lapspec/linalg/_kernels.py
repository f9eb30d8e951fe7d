"""Compiled dense kernels: balancing, Hessenberg reduction, Francis QR,
complex inverse iteration and column-pivoted QR.

All kernels are plain loops over float64/complex128 arrays.  They are
compiled with numba when it is importable and run as ordinary Python
otherwise (same results, much slower).
"""
import math

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

RADIX = 2.0
EPS = 2.220446049250313e-16


@njit(cache=True, nogil=True)
def balance(a):
    """Diagonal similarity scaling by powers of two (in place)."""
    n = a.shape[0]
    sqrdx = RADIX * RADIX
    done = False
    while not done:
        done = True
        for i in range(n):
            r = 0.0
            c = 0.0
            for j in range(n):
                if j != i:
                    c += abs(a[j, i])
                    r += abs(a[i, j])
            if c != 0.0 and r != 0.0:
                g = r / RADIX
                f = 1.0
                s = c + r
                while c < g:
                    f *= RADIX
                    c *= sqrdx
                g = r * RADIX
                while c > g:
                    f /= RADIX
                    c /= sqrdx
                if (c + r) / f < 0.95 * s:
                    done = False
                    g = 1.0 / f
                    for j in range(n):
                        a[i, j] *= g
                    for j in range(n):
                        a[j, i] *= f


@njit(cache=True, nogil=True)
def hessenberg(a):
    """Householder reduction to upper Hessenberg form (in place)."""
    n = a.shape[0]
    v = np.zeros(n)
    for k in range(n - 2):
        alpha = 0.0
        for i in range(k + 1, n):
            alpha += a[i, k] * a[i, k]
        alpha = math.sqrt(alpha)
        if alpha == 0.0:
            continue
        if a[k + 1, k] > 0:
            alpha = -alpha
        vnorm2 = 0.0
        for i in range(k + 1, n):
            v[i] = a[i, k]
        v[k + 1] -= alpha
        for i in range(k + 1, n):
            vnorm2 += v[i] * v[i]
        if vnorm2 == 0.0:
            continue
        # A <- H A
        for j in range(k, n):
            s = 0.0
            for i in range(k + 1, n):
                s += v[i] * a[i, j]
            s = 2.0 * s / vnorm2
            for i in range(k + 1, n):
                a[i, j] -= s * v[i]
        # A <- A H
        for i in range(n):
            s = 0.0
            for j in range(k + 1, n):
                s += a[i, j] * v[j]
            s = 2.0 * s / vnorm2
            for j in range(k + 1, n):
                a[i, j] -= s * v[j]
        for i in range(k + 2, n):
            a[i, k] = 0.0


@njit(cache=True, nogil=True)
def hqr(a, wr, wi, max_sweeps):
    """Eigenvalues of an upper Hessenberg matrix by Francis double-shift QR.

    ``a`` is destroyed.  Returns the number of sweeps used, or -1 when the
    budget ``max_sweeps`` ran out.  An exceptional shift is applied after
    every 10 sweeps without deflation.
    """
    n = a.shape[0]
    anorm = 0.0
    for i in range(n):
        for j in range(max(i - 1, 0), n):
            anorm += abs(a[i, j])
    tiny = EPS * EPS * anorm
    nn = n - 1
    t = 0.0
    total = 0
    x = 0.0
    y = 0.0
    z = 0.0
    w = 0.0
    p = 0.0
    q = 0.0
    r = 0.0
    while nn >= 0:
        its = 0
        while True:
            l = nn
            while l >= 1:
                s = abs(a[l - 1, l - 1]) + abs(a[l, l])
                if s == 0.0:
                    s = anorm
                # the second test is global: subdiagonals below eps^2 ||H||
                # are dropped, which stops tiny blocks from underflowing
                if abs(a[l, l - 1]) + s == s or abs(a[l, l - 1]) <= tiny:
                    a[l, l - 1] = 0.0
                    break
                l -= 1
            x = a[nn, nn]
            if l == nn:
                wr[nn] = x + t
                wi[nn] = 0.0
                nn -= 1
                break
            y = a[nn - 1, nn - 1]
            w = a[nn, nn - 1] * a[nn - 1, nn]
            if l == nn - 1:
                p = 0.5 * (y - x)
                q = p * p + w
                z = math.sqrt(abs(q))
                x += t
                if q >= 0.0:
                    z = p + math.copysign(z, p)
                    wr[nn - 1] = x + z
                    wr[nn] = x + z
                    if z != 0.0:
                        wr[nn] = x - w / z
                    wi[nn - 1] = 0.0
                    wi[nn] = 0.0
                else:
                    wr[nn - 1] = x + p
                    wr[nn] = x + p
                    wi[nn - 1] = z
                    wi[nn] = -z
                nn -= 2
                break
            if total >= max_sweeps:
                return -1
            if its > 0 and its % 10 == 0:
                t += x
                for i in range(nn + 1):
                    a[i, i] -= x
                s = abs(a[nn, nn - 1]) + abs(a[nn - 1, nn - 2])
                x = 0.75 * s
                y = x
                w = -0.4375 * s * s
            its += 1
            total += 1
            m = nn - 2
            while m >= l:
                z = a[m, m]
                r = x - z
                s = y - z
                p = (r * s - w) / a[m + 1, m] + a[m, m + 1]
                q = a[m + 1, m + 1] - z - r - s
                r = a[m + 2, m + 1]
                s = abs(p) + abs(q) + abs(r)
                p /= s
                q /= s
                r /= s
                if m == l:
                    break
                u = abs(a[m, m - 1]) * (abs(q) + abs(r))
                v = abs(p) * (abs(a[m - 1, m - 1]) + abs(z) + abs(a[m + 1, m + 1]))
                if u + v == v:
                    break
                m -= 1
            for i in range(m + 2, nn + 1):
                a[i, i - 2] = 0.0
                if i != m + 2:
                    a[i, i - 3] = 0.0
            for k in range(m, nn):
                if k != m:
                    p = a[k, k - 1]
                    q = a[k + 1, k - 1]
                    r = 0.0
                    if k != nn - 1:
                        r = a[k + 2, k - 1]
                    x = abs(p) + abs(q) + abs(r)
                    if x != 0.0:
                        p /= x
                        q /= x
                        r /= x
                s = math.copysign(math.sqrt(p * p + q * q + r * r), p)
                if s != 0.0:
                    if k == m:
                        if l != m:
                            a[k, k - 1] = -a[k, k - 1]
                    else:
                        a[k, k - 1] = -s * x
                    p += s
                    x = p / s
                    y = q / s
                    z = r / s
                    q /= p
                    r /= p
                    for j in range(k, nn + 1):
                        p = a[k, j] + q * a[k + 1, j]
                        if k != nn - 1:
                            p += r * a[k + 2, j]
                            a[k + 2, j] -= p * z
                        a[k + 1, j] -= p * y
                        a[k, j] -= p * x
                    mmin = nn if nn < k + 3 else k + 3
                    for i in range(l, mmin + 1):
                        p = x * a[i, k] + y * a[i, k + 1]
                        if k != nn - 1:
                            p += z * a[i, k + 2]
                            a[i, k + 2] -= p * r
                        a[i, k + 1] -= p * q
                        a[i, k] -= p
    return total


@njit(cache=True, nogil=True)
def eigvals_dense(m, max_sweeps):
    """Balance, reduce and iterate; returns (eigenvalues, sweeps or -1)."""
    n = m.shape[0]
    a = m.copy()
    wr = np.zeros(n)
    wi = np.zeros(n)
    if n == 0:
        return np.zeros(0, dtype=np.complex128), 0
    # bring the largest entry near 1 by a power of two (exact), so that the
    # products formed inside hqr neither underflow nor overflow
    big = 0.0
    for i in range(n):
        for j in range(n):
            big = max(big, abs(a[i, j]))
    scale = 1.0
    if big > 0.0 and math.isfinite(big):
        scale = math.ldexp(1.0, math.frexp(big)[1])
        for i in range(n):
            for j in range(n):
                a[i, j] /= scale
    balance(a)
    hessenberg(a)
    status = hqr(a, wr, wi, max_sweeps)
    out = np.empty(n, dtype=np.complex128)
    for i in range(n):
        out[i] = complex(wr[i] * scale, wi[i] * scale)
    return out, status


@njit(cache=True, nogil=True)
def eigvals_batch(stack, max_sweeps):
    """Eigenvalues of every matrix in an (N, n, n) stack."""
    count = stack.shape[0]
    n = stack.shape[1]
    out = np.empty((count, n), dtype=np.complex128)
    status = np.empty(count, dtype=np.int64)
    for t in range(count):
        ev, st = eigvals_dense(stack[t], max_sweeps)
        out[t, :] = ev
        status[t] = st
    return out, status


@njit(cache=True, nogil=True)
def lu_solve_shifted(m, lam, rhs_list, floor):
    """Solve (m - lam I) x = rhs for each row of ``rhs_list`` via LU with
    partial pivoting; pivots smaller than ``floor`` are replaced by ``floor``."""
    n = m.shape[0]
    a = np.empty((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            a[i, j] = m[i, j]
        a[i, i] -= lam
    perm = np.arange(n)
    for k in range(n):
        piv = k
        best = abs(a[k, k])
        for i in range(k + 1, n):
            if abs(a[i, k]) > best:
                best = abs(a[i, k])
                piv = i
        if piv != k:
            for j in range(n):
                tmp = a[k, j]
                a[k, j] = a[piv, j]
                a[piv, j] = tmp
            tp = perm[k]
            perm[k] = perm[piv]
            perm[piv] = tp
        if abs(a[k, k]) < floor:
            a[k, k] = floor
        for i in range(k + 1, n):
            a[i, k] /= a[k, k]
            f = a[i, k]
            if f != 0:
                for j in range(k + 1, n):
                    a[i, j] -= f * a[k, j]
    out = np.empty_like(rhs_list)
    for r in range(rhs_list.shape[0]):
        x = np.empty(n, dtype=np.complex128)
        for i in range(n):
            x[i] = rhs_list[r, perm[i]]
        for i in range(n):
            s = x[i]
            for j in range(i):
                s -= a[i, j] * x[j]
            x[i] = s
        for i in range(n - 1, -1, -1):
            s = x[i]
            for j in range(i + 1, n):
                s -= a[i, j] * x[j]
            x[i] = s / a[i, i]
            # the caller normalizes, so rescale before the solve can overflow
            if abs(x[i]) > 1e100:
                x *= 1e-100
        out[r, :] = x
    return out


@njit(cache=True, nogil=True)
def inverse_iteration(m, lam, floor, iterations):
    """Approximate eigenvector for ``lam``; returns (unit vector, residual)."""
    n = m.shape[0]
    v = np.empty((1, n), dtype=np.complex128)
    for i in range(n):
        # fixed, non-symmetric start vector
        v[0, i] = 1.0 + 0.1 * ((i * 7919) % 13) / 13.0 + 0.05j * (i % 3)
    nrm = math.sqrt(np.sum(np.abs(v[0]) ** 2))
    v[0] /= nrm
    best = v[0].copy()
    best_res = np.inf
    for _ in range(iterations):
        x = lu_solve_shifted(m, lam, v, floor)
        nrm = math.sqrt(np.sum(np.abs(x[0]) ** 2))
        if nrm == 0.0 or not np.isfinite(nrm):
            break
        v[0] = x[0] / nrm
        res = 0.0
        for i in range(n):
            s = -lam * v[0, i]
            for j in range(n):
                s += m[i, j] * v[0, j]
            res += abs(s) ** 2
        res = math.sqrt(res)
        if res < best_res:
            best_res = res
            best = v[0].copy()
    return best, best_res


@njit(cache=True, nogil=True)
def pivoted_qr_diag(m):
    """|R_kk| of a column-pivoted Householder QR of a complex matrix."""
    a = m.copy()
    rows, cols = a.shape
    kmax = min(rows, cols)
    norms = np.zeros(cols)
    for j in range(cols):
        s = 0.0
        for i in range(rows):
            s += abs(a[i, j]) ** 2
        norms[j] = s
    diag = np.zeros(kmax)
    for k in range(kmax):
        # pivot on the largest remaining column norm (recomputed exactly)
        best = -1.0
        piv = k
        for j in range(k, cols):
            s = 0.0
            for i in range(k, rows):
                s += abs(a[i, j]) ** 2
            norms[j] = s
            if s > best:
                best = s
                piv = j
        if piv != k:
            for i in range(rows):
                tmp = a[i, k]
                a[i, k] = a[i, piv]
                a[i, piv] = tmp
        alpha = math.sqrt(norms[piv])
        diag[k] = alpha
        if alpha == 0.0:
            break
        x0 = a[k, k]
        if abs(x0) != 0.0:
            phase = x0 / abs(x0)
        else:
            phase = 1.0 + 0.0j
        v = a[k:, k].copy()
        v[0] += phase * alpha
        vn = 0.0
        for i in range(v.shape[0]):
            vn += abs(v[i]) ** 2
        if vn == 0.0:
            continue
        for j in range(k, cols):
            s = 0.0 + 0.0j
            for i in range(v.shape[0]):
                s += v[i].conjugate() * a[k + i, j]
            s = 2.0 * s / vn
            for i in range(v.shape[0]):
                a[k + i, j] -= s * v[i]
    return diag
