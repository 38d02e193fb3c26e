"""Pure-Python matrix kernels.

Entries are exact field elements (Fraction or FpElement) held in lists of
lists.  A compiled twin of this module lives in ``_kernel_c``; the two must
stay behaviourally identical, and ``matrix`` picks one at import time.
Dimensions are passed explicitly so zero-row / zero-column matrices work.
"""

from __future__ import annotations


def backend_name():
    return "python"


def mat_mul(a, b, m, n, p, zero):
    out = []
    for i in range(m):
        ai = a[i]
        row = [zero] * p
        for k in range(n):
            x = ai[k]
            if x:
                bk = b[k]
                for j in range(p):
                    y = bk[j]
                    if y:
                        row[j] = row[j] + x * y
        out.append(row)
    return out


def mat_kron(a, b, ma, na, mb, nb, zero):
    out = []
    for i in range(ma):
        ai = a[i]
        for r in range(mb):
            br = b[r]
            row = [zero] * (na * nb)
            for j in range(na):
                x = ai[j]
                if x:
                    base = j * nb
                    for s in range(nb):
                        y = br[s]
                        if y:
                            row[base + s] = x * y
            out.append(row)
    return out


def mat_sub(a, b, m, n):
    return [[a[i][j] - b[i][j] for j in range(n)] for i in range(m)]


def rref(rows, nrows, ncols):
    """Reduce `rows` in place to reduced row echelon form; return pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[pr], rows[r] = rows[r], rows[pr]
        lead = rows[r][c]
        if lead != 1:
            inv = 1 / lead
            rr = rows[r]
            for j in range(c, ncols):
                if rr[j]:
                    rr[j] = rr[j] * inv
        rr = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                ri = rows[i]
                for j in range(c, ncols):
                    if rr[j]:
                        ri[j] = ri[j] - f * rr[j]
        pivots.append(c)
        r += 1
    return pivots
