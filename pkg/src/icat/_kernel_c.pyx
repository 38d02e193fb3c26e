# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernel_py``.

Same entry points, same results.  Rational matrices additionally take a
fast path that works on raw numerator/denominator integers and rebuilds
normalized Fraction objects only once per output entry.
"""

from fractions import Fraction
from math import gcd

_Q_ZERO = Fraction(0)


def backend_name():
    return "c"


cdef object _make_fraction(object num, object den):
    # den > 0 and gcd(num, den) == 1 are the caller's responsibility
    f = Fraction.__new__(Fraction)
    f._numerator = num
    f._denominator = den
    return f


cdef object _reduced(object num, object den):
    if num == 0:
        return _Q_ZERO
    g = gcd(num, den)
    return _make_fraction(num // g, den // g)


def mat_mul(list a, list b, Py_ssize_t m, Py_ssize_t n, Py_ssize_t p, zero):
    if type(zero) is Fraction:
        return _mat_mul_q(a, b, m, n, p)
    return _mat_mul_obj(a, b, m, n, p, zero)


cdef list _mat_mul_q(list a, list b, Py_ssize_t m, Py_ssize_t n, Py_ssize_t p):
    cdef Py_ssize_t i, j, k
    cdef list out = [], ai, bk, nums, dens, row
    for i in range(m):
        ai = a[i]
        nums = [0] * p
        dens = [1] * p
        for k in range(n):
            x = ai[k]
            xn = x._numerator
            if xn == 0:
                continue
            xd = x._denominator
            bk = b[k]
            for j in range(p):
                y = bk[j]
                yn = y._numerator
                if yn == 0:
                    continue
                pn = xn * yn
                pd = xd * y._denominator
                an = nums[j]
                if an == 0:
                    nums[j] = pn
                    dens[j] = pd
                else:
                    ad = dens[j]
                    nums[j] = an * pd + pn * ad
                    dens[j] = ad * pd
        row = [None] * p
        for j in range(p):
            row[j] = _reduced(nums[j], dens[j])
        out.append(row)
    return out


cdef list _mat_mul_obj(list a, list b, Py_ssize_t m, Py_ssize_t n, Py_ssize_t p, zero):
    cdef Py_ssize_t i, j, k
    cdef list out = [], ai, bk, row
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


def mat_kron(list a, list b, Py_ssize_t ma, Py_ssize_t na, Py_ssize_t mb, Py_ssize_t nb, zero):
    if type(zero) is Fraction:
        return _mat_kron_q(a, b, ma, na, mb, nb, zero)
    return _mat_kron_obj(a, b, ma, na, mb, nb, zero)


cdef list _mat_kron_q(list a, list b, Py_ssize_t ma, Py_ssize_t na, Py_ssize_t mb, Py_ssize_t nb, zero):
    cdef Py_ssize_t i, j, r, s, base
    cdef list out = [], ai, br, row
    for i in range(ma):
        ai = a[i]
        for r in range(mb):
            br = b[r]
            row = [zero] * (na * nb)
            for j in range(na):
                x = ai[j]
                xn = x._numerator
                if xn != 0:
                    xd = x._denominator
                    base = j * nb
                    for s in range(nb):
                        y = br[s]
                        yn = y._numerator
                        if yn != 0:
                            row[base + s] = _reduced(xn * yn, xd * y._denominator)
            out.append(row)
    return out


cdef list _mat_kron_obj(list a, list b, Py_ssize_t ma, Py_ssize_t na, Py_ssize_t mb, Py_ssize_t nb, zero):
    cdef Py_ssize_t i, j, r, s, base
    cdef list out = [], ai, br, row
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


def mat_sub(list a, list b, Py_ssize_t m, Py_ssize_t n):
    cdef Py_ssize_t i, j
    cdef list out = [], ai, bi, row
    for i in range(m):
        ai = a[i]
        bi = b[i]
        row = [None] * n
        for j in range(n):
            row[j] = ai[j] - bi[j]
        out.append(row)
    return out


def rref(list rows, Py_ssize_t nrows, Py_ssize_t ncols):
    if nrows and rows[0] and type(rows[0][0]) is Fraction:
        return _rref_q(rows, nrows, ncols)
    return _rref_obj(rows, nrows, ncols)


cdef list _rref_q(list rows, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t r = 0, c, i, j
    cdef long pr
    cdef list pivots = [], rr, ri
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<object>rows[i])[c]._numerator != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[pr], rows[r] = rows[r], rows[pr]
        rr = rows[r]
        lead = rr[c]
        ln = lead._numerator
        ld = lead._denominator
        if ln != ld:
            # scale the row by den/num of the leading entry
            if ln < 0:
                ln, ld = -ln, -ld
            for j in range(c, ncols):
                y = rr[j]
                yn = y._numerator
                if yn != 0:
                    rr[j] = _reduced(yn * ld, y._denominator * ln)
        for i in range(nrows):
            if i == r:
                continue
            ri = rows[i]
            f = ri[c]
            fn = f._numerator
            if fn != 0:
                fd = f._denominator
                for j in range(c, ncols):
                    y = rr[j]
                    yn = y._numerator
                    if yn != 0:
                        x = ri[j]
                        pd = fd * y._denominator
                        ri[j] = _reduced(
                            x._numerator * pd - fn * yn * x._denominator,
                            x._denominator * pd,
                        )
        pivots.append(c)
        r += 1
    return pivots


cdef list _rref_obj(list rows, Py_ssize_t nrows, Py_ssize_t ncols):
    cdef Py_ssize_t r = 0, c, i, j
    cdef long pr
    cdef list pivots = [], rr, ri
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
        rr = rows[r]
        lead = rr[c]
        if lead != 1:
            inv = 1 / lead
            for j in range(c, ncols):
                if rr[j]:
                    rr[j] = rr[j] * inv
        for i in range(nrows):
            if i == r:
                continue
            ri = rows[i]
            f = ri[c]
            if f:
                for j in range(c, ncols):
                    if rr[j]:
                        ri[j] = ri[j] - f * rr[j]
        pivots.append(c)
        r += 1
    return pivots
