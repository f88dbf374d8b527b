# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels (double-double arithmetic).

Same functions and return conventions as ``_pykernels``.  Must be compiled
without ``-ffast-math``: the error-free transformations rely on strict IEEE
evaluation order.
"""
from libc.math cimport fma, hypot


cdef struct dd:
    double hi
    double lo

cdef struct cdd:
    dd re
    dd im


cdef inline dd _two_sum(double a, double b) noexcept nogil:
    cdef dd r
    cdef double bb
    r.hi = a + b
    bb = r.hi - a
    r.lo = (a - (r.hi - bb)) + (b - bb)
    return r

cdef inline dd _quick_two_sum(double a, double b) noexcept nogil:
    cdef dd r
    r.hi = a + b
    r.lo = b - (r.hi - a)
    return r

cdef inline dd _two_prod(double a, double b) noexcept nogil:
    cdef dd r
    r.hi = a * b
    r.lo = fma(a, b, -r.hi)
    return r

cdef inline dd _add(dd a, dd b) noexcept nogil:
    cdef dd s = _two_sum(a.hi, b.hi)
    cdef dd t = _two_sum(a.lo, b.lo)
    s.lo += t.hi
    s = _quick_two_sum(s.hi, s.lo)
    s.lo += t.lo
    return _quick_two_sum(s.hi, s.lo)

cdef inline dd _neg(dd a) noexcept nogil:
    a.hi = -a.hi
    a.lo = -a.lo
    return a

cdef inline dd _mul(dd a, dd b) noexcept nogil:
    cdef dd p = _two_prod(a.hi, b.hi)
    p.lo += a.hi * b.lo + a.lo * b.hi
    return _quick_two_sum(p.hi, p.lo)

cdef inline dd _div(dd a, dd b) noexcept nogil:
    cdef double q1 = a.hi / b.hi
    cdef dd p = _two_prod(q1, b.hi)
    p.lo += q1 * b.lo
    cdef dd s = _two_sum(a.hi, -p.hi)
    s.lo = s.lo - p.lo + a.lo
    cdef double q2 = (s.hi + s.lo) / b.hi
    return _quick_two_sum(q1, q2)

cdef inline dd _d(double x) noexcept nogil:
    cdef dd r
    r.hi = x
    r.lo = 0.0
    return r

cdef inline cdd _cmul(cdd a, cdd b) noexcept nogil:
    cdef cdd r
    r.re = _add(_mul(a.re, b.re), _neg(_mul(a.im, b.im)))
    r.im = _add(_mul(a.re, b.im), _mul(a.im, b.re))
    return r

cdef inline cdd _cdiv(cdd a, cdd b) noexcept nogil:
    cdef dd n = _add(_mul(b.re, b.re), _mul(b.im, b.im))
    cdef cdd conj
    conj.re = b.re
    conj.im = _neg(b.im)
    cdef cdd r = _cmul(a, conj)
    r.re = _div(r.re, n)
    r.im = _div(r.im, n)
    return r


def two_sum(double a, double b):
    cdef dd r = _two_sum(a, b)
    return r.hi, r.lo


def two_prod(double a, double b):
    cdef dd r = _two_prod(a, b)
    return r.hi, r.lo


def dd_add(double ah, double al, double bh, double bl):
    cdef dd r = _add(dd(ah, al), dd(bh, bl))
    return r.hi, r.lo


def dd_mul(double ah, double al, double bh, double bl):
    cdef dd r = _mul(dd(ah, al), dd(bh, bl))
    return r.hi, r.lo


def dd_div(double ah, double al, double bh, double bl):
    cdef dd r = _div(dd(ah, al), dd(bh, bl))
    return r.hi, r.lo


def csum(values):
    """Double-double summation of a sequence of complex numbers."""
    cdef dd re = _d(0.0), im = _d(0.0), e
    cdef double complex v
    for item in values:
        v = item
        e = _two_sum(re.hi, v.real)
        re.hi = e.hi
        re.lo += e.lo
        e = _two_sum(im.hi, v.imag)
        im.hi = e.hi
        im.lo += e.lo
    return complex(re.hi + re.lo, im.hi + im.lo)


cdef int _jv_core(dd nu, double wr, double wi, double rtol, int max_terms,
                  cdd *out) noexcept nogil:
    # returns number of terms, negative when not converged
    cdef dd a = _two_prod(wr, wr)
    cdef dd b = _two_prod(wi, wi)
    cdef cdd c, t, s
    c.re = _add(a, _neg(b))
    c.re.hi *= -0.25
    c.re.lo *= -0.25
    c.im = _two_prod(wr, wi)
    c.im.hi *= -0.5
    c.im.lo *= -0.5
    cdef bint real_c = c.im.hi == 0.0 and c.im.lo == 0.0
    s.re = _d(1.0)
    s.im = _d(0.0)
    t.re = _d(1.0)
    t.im = _d(0.0)
    cdef int k = 0
    cdef double kp1, tmag
    cdef dd den
    while k < max_terms:
        kp1 = k + 1.0
        den = _mul(_add(nu, _d(kp1)), _d(kp1))
        if real_c:
            t.re = _div(_mul(t.re, c.re), den)
        else:
            t = _cmul(t, c)
            t.re = _div(t.re, den)
            t.im = _div(t.im, den)
        s.re = _add(s.re, t.re)
        s.im = _add(s.im, t.im)
        k += 1
        tmag = hypot(t.re.hi, t.im.hi)
        if tmag == 0.0 or tmag < rtol * hypot(s.re.hi, s.im.hi):
            out[0] = s
            return k + 1
    out[0] = s
    return -(k + 1)


def jv_series(double nu, w, double rtol=1e-30, int max_terms=2000):
    """Sum ``sum_k (-w^2/4)^k / (k! (nu+1)_k)`` in double-double."""
    cdef double complex cw = w
    cdef cdd s
    cdef int n = _jv_core(_d(nu), cw.real, cw.imag, rtol, max_terms, &s)
    return (complex(s.re.hi + s.re.lo, s.im.hi + s.im.lo),
            n if n > 0 else -n, n > 0)


def jv_series_seq(double nu0, int n_max, w):
    """``jv_series`` for orders nu0, nu0+1, ..., nu0+n_max (sums only)."""
    cdef double complex cw = w
    cdef cdd s
    cdef int n, m
    out = []
    for n in range(n_max + 1):
        m = _jv_core(_d(nu0 + n), cw.real, cw.imag, 1e-30, 2000, &s)
        if m < 0:
            raise ArithmeticError("Bessel series did not converge")
        out.append(complex(s.re.hi + s.re.lo, s.im.hi + s.im.lo))
    return out


cdef int _iv_core(dd nu, double x, double rtol, int max_terms, dd *out) noexcept nogil:
    cdef dd c = _two_prod(x, x)
    c.hi *= 0.25
    c.lo *= 0.25
    cdef dd s = _d(1.0), t = _d(1.0), den
    cdef int k = 0
    cdef double kp1
    while k < max_terms:
        kp1 = k + 1.0
        den = _mul(_add(nu, _d(kp1)), _d(kp1))
        t = _div(_mul(t, c), den)
        s = _add(s, t)
        k += 1
        if t.hi == 0.0 or t.hi < rtol * s.hi:
            out[0] = s
            return k + 1
    out[0] = s
    return -(k + 1)


def iv_series(double nu, double x, double rtol=1e-30, int max_terms=2000):
    """Sum ``sum_k (x^2/4)^k / (k! (nu+1)_k)``; every term is positive."""
    cdef dd s
    cdef int n = _iv_core(_d(nu), x, rtol, max_terms, &s)
    return s.hi + s.lo, (n if n > 0 else -n), n > 0


cdef inline dd _c_plus(int n, double b) noexcept nogil:
    return _div(_mul(_two_sum(b, <double>n), _d(2.0 * (n + 1))),
                _two_sum(b, 2.0 * n + 1.0))

cdef inline dd _c_minus(int n, double b) noexcept nogil:
    return _div(_mul(_two_sum(b, n - 2.0), _d(2.0 * (n - 1))),
                _two_sum(b, 2.0 * n - 3.0))

cdef inline cdd _cscale(cdd a, dd s) noexcept nogil:
    a.re = _mul(a.re, s)
    a.im = _mul(a.im, s)
    return a

cdef inline cdd _cdivr(cdd a, dd s) noexcept nogil:
    a.re = _div(a.re, s)
    a.im = _div(a.im, s)
    return a


def bessel_series_sum(double b, y, w, int n_max):
    """``sum_{n<=n_max} P_n(y) (w/2)^n/(nu+1)_n s_n(w)`` with ``nu = (b-1)/2``."""
    cdef double complex cy = y, cw = w
    cdef double nu = 0.5 * (b - 1.0)
    cdef cdd p, prev, g, tot, s, t, yy, half, nxt
    cdef dd order
    cdef int n, m
    p.re = _d(1.0); p.im = _d(0.0)
    prev.re = _d(0.0); prev.im = _d(0.0)
    g = p
    tot = prev
    yy.re = _d(cy.real); yy.im = _d(cy.imag)
    half.re = _d(0.5 * cw.real); half.im = _d(0.5 * cw.imag)
    terms = []
    for n in range(n_max + 1):
        order = _two_sum(nu, <double>n)
        m = _jv_core(order, cw.real, cw.imag, 1e-30, 2000, &s)
        if m < 0:
            raise ArithmeticError("Bessel series did not converge")
        t = _cmul(_cmul(p, g), s)
        tot.re = _add(tot.re, t.re)
        tot.im = _add(tot.im, t.im)
        terms.append(complex(t.re.hi + t.re.lo, t.im.hi + t.im.lo))
        if n == n_max:
            break
        g = _cdivr(_cmul(g, half), _add(order, _d(1.0)))
        nxt = _cmul(yy, p)
        if n > 0:
            t = _cscale(prev, _c_minus(n, b))
            nxt.re = _add(nxt.re, _neg(t.re))
            nxt.im = _add(nxt.im, _neg(t.im))
        prev = p
        p = _cdivr(nxt, _c_plus(n, b))
    return complex(tot.re.hi + tot.re.lo, tot.im.hi + tot.im.lo), terms


def bessel_series_sum_real(double b, double t, double x, int n_max):
    """Real counterpart of ``bessel_series_sum`` for ``y = i t``, ``w = i x/2``."""
    cdef double nu = 0.5 * (b - 1.0)
    cdef dd q = _d(1.0), prev = _d(0.0), g = _d(1.0), tot = _d(0.0)
    cdef dd s, term, nxt, order
    cdef int n, m
    terms = []
    for n in range(n_max + 1):
        order = _two_sum(nu, <double>n)
        m = _iv_core(order, 0.5 * x, 1e-30, 2000, &s)
        if m < 0:
            raise ArithmeticError("Bessel series did not converge")
        term = _mul(_mul(q, g), s)
        tot = _add(tot, term)
        terms.append(term.hi + term.lo)
        if n == n_max:
            break
        g = _div(_mul(g, _d(-0.25 * x)), _add(order, _d(1.0)))
        nxt = _mul(_d(t), q)
        if n > 0:
            nxt = _add(nxt, _mul(_c_minus(n, b), prev))
        prev = q
        q = _div(nxt, _c_plus(n, b))
    return tot.hi + tot.lo, terms


def kummer_series(a, b, z, double tol, int max_terms):
    """Direct Kummer series ``sum_n (a)_n/(b)_n z^n/n!`` in double-double."""
    cdef double complex ca = a, cb = b, cz = z
    cdef cdd s, t, num, den, zz
    s.re = _d(1.0)
    s.im = _d(0.0)
    t.re = _d(1.0)
    t.im = _d(0.0)
    zz.re = _d(cz.real)
    zz.im = _d(cz.imag)
    cdef int quiet = 0, n = 0
    cdef double fn, tmag = 1.0
    with nogil:
        while n + 1 < max_terms:
            fn = <double>n
            num.re = _two_sum(ca.real, fn)
            num.im = _d(ca.imag)
            t = _cmul(t, _cmul(num, zz))
            den.re = _mul(_two_sum(cb.real, fn), _d(fn + 1.0))
            den.im = _two_prod(cb.imag, fn + 1.0)
            t = _cdiv(t, den)
            s.re = _add(s.re, t.re)
            s.im = _add(s.im, t.im)
            n += 1
            tmag = hypot(t.re.hi, t.im.hi)
            if tmag <= tol * hypot(s.re.hi, s.im.hi):
                quiet += 1
                if quiet >= 3:
                    break
            else:
                quiet = 0
    return (complex(s.re.hi + s.re.lo, s.im.hi + s.im.lo), n + 1, tmag,
            quiet >= 3)
