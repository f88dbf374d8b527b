"""Pure-Python hot kernels (double-double arithmetic).

This module mirrors ``_ckernels.pyx`` function for function.  It is used when
the compiled extension is unavailable or when ``KUMMERBESSEL_BACKEND=python``
is set in the environment.

Double-double numbers are carried as unevaluated pairs ``(hi, lo)`` with
``|lo| <= ulp(hi)/2``; complex double-double values as four floats.
"""
from __future__ import annotations

_SPLITTER = 134217729.0  # 2**27 + 1


def two_sum(a: float, b: float) -> tuple[float, float]:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def two_prod(a: float, b: float) -> tuple[float, float]:
    p = a * b
    c = _SPLITTER * a
    ah = c - (c - a)
    al = a - ah
    c = _SPLITTER * b
    bh = c - (c - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def dd_add(ah: float, al: float, bh: float, bl: float) -> tuple[float, float]:
    s, e = two_sum(ah, bh)
    t, f = two_sum(al, bl)
    e += t
    s, e = _quick_two_sum(s, e)
    e += f
    return _quick_two_sum(s, e)


def dd_mul(ah: float, al: float, bh: float, bl: float) -> tuple[float, float]:
    p, e = two_prod(ah, bh)
    e += ah * bl + al * bh
    return _quick_two_sum(p, e)


def dd_div(ah: float, al: float, bh: float, bl: float) -> tuple[float, float]:
    q1 = ah / bh
    p, e = two_prod(q1, bh)
    e += q1 * bl
    s, f = two_sum(ah, -p)
    f = f - e + al
    q2 = (s + f) / bh
    return _quick_two_sum(q1, q2)


def _cmul(ar, arl, ai, ail, br, brl, bi, bil):
    # naive 4-multiplication form; inputs never approach overflow here
    rh, rl = dd_mul(ar, arl, br, brl)
    th, tl = dd_mul(ai, ail, bi, bil)
    rh, rl = dd_add(rh, rl, -th, -tl)
    ih, il = dd_mul(ar, arl, bi, bil)
    th, tl = dd_mul(ai, ail, br, brl)
    ih, il = dd_add(ih, il, th, tl)
    return rh, rl, ih, il


def _cdiv(ar, arl, ai, ail, br, brl, bi, bil):
    # a / b = a * conj(b) / |b|^2
    nh, nl = dd_mul(br, brl, br, brl)
    th, tl = dd_mul(bi, bil, bi, bil)
    nh, nl = dd_add(nh, nl, th, tl)
    rh, rl, ih, il = _cmul(ar, arl, ai, ail, br, brl, -bi, -bil)
    rh, rl = dd_div(rh, rl, nh, nl)
    ih, il = dd_div(ih, il, nh, nl)
    return rh, rl, ih, il


def csum(values) -> complex:
    """Double-double summation of a sequence of complex numbers."""
    rh = rl = ih = il = 0.0
    for v in values:
        v = complex(v)
        rh, e = two_sum(rh, v.real)
        rl += e
        ih, e = two_sum(ih, v.imag)
        il += e
    return complex(rh + rl, ih + il)


def _jv_dd(nuh, nul, wr, wi, rtol, max_terms):
    # bare J series with a double-double order; returns dd parts, terms, ok
    ah, al = two_prod(wr, wr)
    bh, bl = two_prod(wi, wi)
    cr, crl = dd_add(ah, al, -bh, -bl)
    ci, cil = two_prod(wr, wi)
    # c = -w^2/4
    cr, crl = -0.25 * cr, -0.25 * crl
    ci, cil = -0.5 * ci, -0.5 * cil
    real_c = ci == 0.0 and cil == 0.0

    sr, srl, si, sil = 1.0, 0.0, 0.0, 0.0
    tr, trl, ti, til = 1.0, 0.0, 0.0, 0.0
    k = 0
    while k < max_terms:
        kp1 = k + 1.0
        dh, dl = dd_add(nuh, nul, kp1, 0.0)
        dh, dl = dd_mul(dh, dl, kp1, 0.0)
        if real_c:
            tr, trl = dd_mul(tr, trl, cr, crl)
            tr, trl = dd_div(tr, trl, dh, dl)
        else:
            tr, trl, ti, til = _cmul(tr, trl, ti, til, cr, crl, ci, cil)
            tr, trl = dd_div(tr, trl, dh, dl)
            ti, til = dd_div(ti, til, dh, dl)
        sr, srl = dd_add(sr, srl, tr, trl)
        si, sil = dd_add(si, sil, ti, til)
        k += 1
        tmag = abs(complex(tr, ti))
        if tmag == 0.0 or tmag < rtol * abs(complex(sr, si)):
            return (sr, srl, si, sil), k + 1, True
    return (sr, srl, si, sil), k + 1, False


def jv_series(nu: float, w: complex, rtol: float = 1e-30,
              max_terms: int = 2000) -> tuple[complex, int, bool]:
    """Sum ``sum_k (-w^2/4)^k / (k! (nu+1)_k)`` in double-double.

    Returns ``(sum, terms, converged)``; the caller applies the prefactor
    ``(w/2)^nu / Gamma(nu+1)``.
    """
    (sr, srl, si, sil), k, ok = _jv_dd(nu, 0.0, w.real, w.imag, rtol, max_terms)
    return complex(sr + srl, si + sil), k, ok


def jv_series_seq(nu0: float, n_max: int, w: complex) -> list[complex]:
    """``jv_series`` for orders nu0, nu0+1, ..., nu0+n_max (sums only)."""
    out = []
    for n in range(n_max + 1):
        s, _, ok = jv_series(nu0 + n, w)
        if not ok:
            raise ArithmeticError("Bessel series did not converge")
        out.append(s)
    return out


def _iv_dd(nuh, nul, x, rtol, max_terms):
    ch, cl = two_prod(x, x)
    ch, cl = 0.25 * ch, 0.25 * cl
    sh, sl = 1.0, 0.0
    th, tl = 1.0, 0.0
    k = 0
    while k < max_terms:
        kp1 = k + 1.0
        dh, dl = dd_add(nuh, nul, kp1, 0.0)
        dh, dl = dd_mul(dh, dl, kp1, 0.0)
        th, tl = dd_mul(th, tl, ch, cl)
        th, tl = dd_div(th, tl, dh, dl)
        sh, sl = dd_add(sh, sl, th, tl)
        k += 1
        if th == 0.0 or th < rtol * sh:
            return (sh, sl), k + 1, True
    return (sh, sl), k + 1, False


def iv_series(nu: float, x: float, rtol: float = 1e-30,
              max_terms: int = 2000) -> tuple[float, int, bool]:
    """Sum ``sum_k (x^2/4)^k / (k! (nu+1)_k)``; every term is positive."""
    (sh, sl), k, ok = _iv_dd(nu, 0.0, x, rtol, max_terms)
    return sh + sl, k, ok


def _c_plus_dd(n, b):
    # 2(n+1)(n+b) / (2n+b+1)
    nh, nl = two_sum(b, float(n))
    nh, nl = dd_mul(nh, nl, 2.0 * (n + 1), 0.0)
    dh, dl = two_sum(b, 2.0 * n + 1.0)
    return dd_div(nh, nl, dh, dl)


def _c_minus_dd(n, b):
    # 2(n-1)(n+b-2) / (2n+b-3), n >= 1
    nh, nl = two_sum(b, n - 2.0)
    nh, nl = dd_mul(nh, nl, 2.0 * (n - 1), 0.0)
    dh, dl = two_sum(b, 2.0 * n - 3.0)
    return dd_div(nh, nl, dh, dl)


def bessel_series_sum(b: float, y: complex, w: complex,
                      n_max: int) -> tuple[complex, list[complex]]:
    """``sum_{n<=n_max} P_n(y) (w/2)^n/(nu+1)_n s_n(w)`` with ``nu = (b-1)/2``.

    ``s_n`` is the bare J_{nu+n} series of ``jv_series``, so each term equals
    ``P_n J_{nu+n}(w)`` up to the common factor ``(w/2)^nu/Gamma(nu+1)``.
    Coefficients, scalings and series all stay in double-double, which
    keeps cancellation between large terms from eating the result.
    Returns the total and the individual terms.
    """
    nu = 0.5 * (b - 1.0)
    yr, yi = y.real, y.imag
    hr, hi = 0.5 * w.real, 0.5 * w.imag
    p = (1.0, 0.0, 0.0, 0.0)
    prev = (0.0, 0.0, 0.0, 0.0)
    g = (1.0, 0.0, 0.0, 0.0)
    tot = (0.0, 0.0, 0.0, 0.0)
    terms = []
    for n in range(n_max + 1):
        oh, ol = two_sum(nu, float(n))
        s, _, ok = _jv_dd(oh, ol, w.real, w.imag, 1e-30, 2000)
        if not ok:
            raise ArithmeticError("Bessel series did not converge")
        t = _cmul(*_cmul(*p, *g), *s)
        rh, rl = dd_add(tot[0], tot[1], t[0], t[1])
        ih, il = dd_add(tot[2], tot[3], t[2], t[3])
        tot = (rh, rl, ih, il)
        terms.append(complex(t[0] + t[1], t[2] + t[3]))
        if n == n_max:
            break
        dh, dl = dd_add(oh, ol, 1.0, 0.0)
        g = _cmul(*g, hr, 0.0, hi, 0.0)
        g = (*dd_div(g[0], g[1], dh, dl), *dd_div(g[2], g[3], dh, dl))
        nxt = _cmul(yr, 0.0, yi, 0.0, *p)
        if n > 0:
            ch, cl = _c_minus_dd(n, b)
            br_, brl = dd_mul(ch, cl, prev[0], prev[1])
            bi_, bil = dd_mul(ch, cl, prev[2], prev[3])
            nxt = (*dd_add(nxt[0], nxt[1], -br_, -brl),
                   *dd_add(nxt[2], nxt[3], -bi_, -bil))
        ch, cl = _c_plus_dd(n, b)
        prev, p = p, (*dd_div(nxt[0], nxt[1], ch, cl), *dd_div(nxt[2], nxt[3], ch, cl))
    return complex(tot[0] + tot[1], tot[2] + tot[3]), terms


def bessel_series_sum_real(b: float, t: float, x: float,
                           n_max: int) -> tuple[float, list[float]]:
    """Real counterpart of ``bessel_series_sum`` for ``y = i t``, ``w = i x/2``.

    Sums ``(-1)^n q_n (x/4)^n/(nu+1)_n i_n(x/2)`` where ``P_n = i^n q_n`` and
    ``i_n`` is the bare I_{nu+n} series of ``iv_series``.
    """
    nu = 0.5 * (b - 1.0)
    h = 0.25 * x
    q, qh_prev = (1.0, 0.0), (0.0, 0.0)
    g = (1.0, 0.0)
    tot = (0.0, 0.0)
    terms = []
    for n in range(n_max + 1):
        oh, ol = two_sum(nu, float(n))
        s, _, ok = _iv_dd(oh, ol, 0.5 * x, 1e-30, 2000)
        if not ok:
            raise ArithmeticError("Bessel series did not converge")
        th, tl = dd_mul(*q, *g)
        th, tl = dd_mul(th, tl, *s)
        tot = dd_add(*tot, th, tl)
        terms.append(th + tl)
        if n == n_max:
            break
        dh, dl = dd_add(oh, ol, 1.0, 0.0)
        g = dd_div(*dd_mul(*g, -h, 0.0), dh, dl)
        nh, nl = dd_mul(t, 0.0, *q)
        if n > 0:
            nh, nl = dd_add(nh, nl, *dd_mul(*_c_minus_dd(n, b), *qh_prev))
        qh_prev, q = q, dd_div(nh, nl, *_c_plus_dd(n, b))
    return tot[0] + tot[1], terms


def kummer_series(a: complex, b: complex, z: complex, tol: float,
                  max_terms: int) -> tuple[complex, int, float, bool]:
    """Direct Kummer series ``sum_n (a)_n/(b)_n z^n/n!`` in double-double.

    Converged once three consecutive terms satisfy ``|t| <= tol*|S|``.
    Returns ``(value, terms_used, last_term_magnitude, converged)``.
    """
    zr, zi = z.real, z.imag
    ar, ai, br, bi = a.real, a.imag, b.real, b.imag
    sr, srl, si, sil = 1.0, 0.0, 0.0, 0.0
    tr, trl, ti, til = 1.0, 0.0, 0.0, 0.0
    quiet = 0
    n = 0
    tmag = 1.0
    while n + 1 < max_terms:
        fn = float(n)
        # (a + n) z
        anr, anrl = two_sum(ar, fn)
        nr, nrl, ni, nil = _cmul(anr, anrl, ai, 0.0, zr, 0.0, zi, 0.0)
        tr, trl, ti, til = _cmul(tr, trl, ti, til, nr, nrl, ni, nil)
        # (b + n)(n + 1)
        bnr, bnrl = two_sum(br, fn)
        bnr, bnrl = dd_mul(bnr, bnrl, fn + 1.0, 0.0)
        bni, bnil = two_prod(bi, fn + 1.0)
        tr, trl, ti, til = _cdiv(tr, trl, ti, til, bnr, bnrl, bni, bnil)
        sr, srl = dd_add(sr, srl, tr, trl)
        si, sil = dd_add(si, sil, ti, til)
        n += 1
        tmag = abs(complex(tr, ti))
        if tmag <= tol * abs(complex(sr, si)):
            quiet += 1
            if quiet >= 3:
                return complex(sr + srl, si + sil), n + 1, tmag, True
        else:
            quiet = 0
    return complex(sr + srl, si + sil), n + 1, tmag, False
