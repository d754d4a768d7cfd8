# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for sparse multivariate polynomial arithmetic.

Same representation and contract as ``_poly_py``: dict from exponent tuple
to nonzero Fraction.  Coefficient arithmetic stays in exact Fractions; the
compilation removes the interpreter overhead of the term loops, which is
where the localization sums and basis expansions spend their time.
"""

from fractions import Fraction

BACKEND = "cython"

cdef object _ZERO = Fraction(0)


cdef inline tuple _add_exp(tuple ea, tuple eb):
    cdef Py_ssize_t i, n = len(ea)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = (<object>ea[i]) + (<object>eb[i])
    return tuple(out)


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, s
    for e, c in b.items():
        s = out.get(e, _ZERO) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object e, c, s
    for e, c in b.items():
        s = out.get(e, _ZERO) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def neg_terms(dict a):
    cdef dict out = {}
    cdef object e, c
    for e, c in a.items():
        out[e] = -c
    return out


def scale_terms(dict a, object c):
    cdef dict out = {}
    cdef object e, v
    if not c:
        return out
    for e, v in a.items():
        out[e] = c * v
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef object ea, eb, ca, cb, s
    cdef tuple e
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = _add_exp(<tuple>ea, <tuple>eb)
            s = out.get(e, _ZERO) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def mul_monomial(dict a, tuple exp, object c):
    cdef dict out = {}
    cdef object e, v
    if not c:
        return out
    for e, v in a.items():
        out[_add_exp(<tuple>e, exp)] = v * c
    return out


def sq_terms(dict a):
    cdef dict out = {}
    cdef object e, c
    cdef Py_ssize_t i, n
    cdef list d
    for e, c in a.items():
        n = len(<tuple>e)
        d = [0] * n
        for i in range(n):
            d[i] = 2 * <object>(<tuple>e)[i]
        out[tuple(d)] = c
    return out


def eval_terms(dict a, tuple point):
    cdef object total = _ZERO
    cdef object e, c, v, x
    cdef Py_ssize_t i, n
    cdef object p
    for e, c in a.items():
        v = c
        n = len(<tuple>e)
        for i in range(n):
            p = (<tuple>e)[i]
            if p:
                x = point[i]
                v = v * x**p
        total = total + v
    return total


def substitute_linear(dict a, tuple w):
    cdef Py_ssize_t v = 0, l, n = len(w)
    while not w[v]:
        v += 1
    cdef object cv = w[v]
    cdef dict repl = {}
    cdef list e
    for l in range(n):
        if l == v or not w[l]:
            continue
        e = [0] * n
        e[l] = 1
        repl[tuple(e)] = Fraction(-w[l], cv)
    cdef dict buckets = {}
    cdef dict bucket
    cdef object ee, c, s
    cdef tuple key
    cdef object ev
    for ee, c in a.items():
        ev = (<tuple>ee)[v]
        e = list(<tuple>ee)
        e[v] = 0
        key = tuple(e)
        bucket = buckets.setdefault(ev, {})
        s = bucket.get(key, _ZERO) + c
        if s:
            bucket[key] = s
        else:
            del bucket[key]
    if not buckets:
        return {}
    cdef dict out = {}
    cdef object bb
    cdef Py_ssize_t top = max(buckets), step
    for step in range(top, -1, -1):
        if out:
            out = mul_terms(out, repl)
        bb = buckets.get(step)
        if bb is not None:
            out = add_terms(out, <dict>bb)
    return out


def divmod_linear(dict a, tuple w):
    cdef Py_ssize_t v = 0, l, n = len(w)
    while not w[v]:
        v += 1
    cdef object cv = Fraction(w[v])
    if not a:
        return {}, {}
    cdef Py_ssize_t maxe = 0, m
    cdef object e, c
    for e in a:
        if (<tuple>e)[v] > maxe:
            maxe = (<tuple>e)[v]
    cdef list buckets = [dict() for _ in range(maxe + 1)]
    for e, c in a.items():
        (<dict>buckets[(<tuple>e)[v]])[e] = c
    cdef dict q = {}
    cdef dict tb
    cdef object qc, s, wl
    cdef list qel, tel
    cdef tuple qe, te
    for m in range(maxe, 0, -1):
        for e, c in list((<dict>buckets[m]).items()):
            qc = c / cv
            qel = list(<tuple>e)
            qel[v] = m - 1
            qe = tuple(qel)
            s = q.get(qe, _ZERO) + qc
            if s:
                q[qe] = s
            else:
                del q[qe]
            for l in range(n):
                wl = w[l]
                if not wl:
                    continue
                tel = list(qe)
                tel[l] = tel[l] + 1
                te = tuple(tel)
                tb = <dict>buckets[te[v]]
                s = tb.get(te, _ZERO) - qc * wl
                if s:
                    tb[te] = s
                else:
                    tb.pop(te, None)
    return q, <dict>buckets[0]


def _deglex_key(tuple e):
    return (sum(e), e)


def divmod_poly(dict a, dict b):
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    cdef tuple lead_b = max(b, key=_deglex_key)
    cdef object cb = b[lead_b]
    cdef dict q = {}, rem = {}, r = dict(a)
    cdef tuple lead, diff, te
    cdef object qc, s, e, c
    cdef Py_ssize_t i, n = len(lead_b)
    cdef list d
    cdef bint ok
    while r:
        lead = max(r, key=_deglex_key)
        d = [0] * n
        ok = True
        for i in range(n):
            d[i] = (<object>lead[i]) - (<object>lead_b[i])
            if d[i] < 0:
                ok = False
                break
        if not ok:
            rem[lead] = r.pop(lead)
            continue
        diff = tuple(d)
        qc = r[lead] / cb
        s = q.get(diff, _ZERO) + qc
        if s:
            q[diff] = s
        else:
            q.pop(diff, None)
        for e, c in b.items():
            te = _add_exp(<tuple>e, diff)
            s = r.get(te, _ZERO) - qc * c
            if s:
                r[te] = s
            else:
                r.pop(te, None)
    return q, rem
