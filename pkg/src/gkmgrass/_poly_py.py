"""Pure-Python kernels for sparse multivariate polynomial arithmetic.

A polynomial in n variables is stored as a dict mapping exponent tuples
(length n, non-negative ints) to nonzero Fraction coefficients; the zero
polynomial is the empty dict.  All functions here keep that invariant: no
zero coefficient is ever stored, and inputs are never mutated.

The same interface is implemented by the compiled module ``_poly_cy``;
``gkmgrass.kernels`` picks one of the two at import time.  Keep the two
implementations behaviourally identical.
"""

from __future__ import annotations

from fractions import Fraction

BACKEND = "python"

_ZERO = Fraction(0)


def add_terms(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, _ZERO) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def sub_terms(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, _ZERO) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def neg_terms(a):
    return {e: -c for e, c in a.items()}


def scale_terms(a, c):
    if not c:
        return {}
    return {e: c * v for e, v in a.items()}


def mul_terms(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(map(int.__add__, ea, eb))
            s = out.get(e, _ZERO) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def mul_monomial(a, exp, c):
    """Multiply by the single term c * alpha^exp."""
    if not c:
        return {}
    return {tuple(map(int.__add__, e, exp)): v * c for e, v in a.items()}


def sq_terms(a):
    """Double every exponent vector (the substitution alpha_i -> alpha_i^2)."""
    return {tuple(2 * x for x in e): c for e, c in a.items()}


def eval_terms(a, point):
    """Exact evaluation at a tuple of Fractions."""
    total = _ZERO
    for e, c in a.items():
        v = c
        for x, p in zip(point, e):
            if p:
                v *= x**p
        total += v
    return total


def substitute_linear(a, w):
    """Image of `a` after eliminating the pivot variable of the linear form w.

    w is a tuple of ints, not all zero.  With v the first index where
    w[v] != 0, substitutes alpha_v := -(sum_{l!=v} w[l] alpha_l) / w[v],
    which realizes reduction modulo w.  The result does not involve
    alpha_v (its exponent is always zero there).
    """
    v = 0
    while not w[v]:
        v += 1
    cv = w[v]
    # replacement polynomial R with alpha_v := R
    repl = {}
    for l, cl in enumerate(w):
        if l == v or not cl:
            continue
        e = [0] * len(w)
        e[l] = 1
        repl[tuple(e)] = Fraction(-cl, cv)
    # group terms of `a` by the exponent of alpha_v, apply Horner in R
    buckets = {}
    for e, c in a.items():
        ev = e[v]
        el = list(e)
        el[v] = 0
        key = tuple(el)
        bucket = buckets.setdefault(ev, {})
        s = bucket.get(key, _ZERO) + c
        if s:
            bucket[key] = s
        else:
            del bucket[key]
    if not buckets:
        return {}
    out = {}
    for ev in range(max(buckets), -1, -1):
        if out:
            out = mul_terms(out, repl)
        b = buckets.get(ev)
        if b:
            out = add_terms(out, b)
    return out


def divmod_linear(a, w):
    """Synthetic division of `a` by the linear form w.

    Returns (q, r) with a = q*w + r and r free of w's pivot variable.
    The form divides `a` exactly iff r is empty.
    """
    v = 0
    while not w[v]:
        v += 1
    cv = Fraction(w[v])
    if not a:
        return {}, {}
    maxe = max(e[v] for e in a)
    buckets = [dict() for _ in range(maxe + 1)]
    for e, c in a.items():
        buckets[e[v]][e] = c
    q = {}
    for m in range(maxe, 0, -1):
        for e, c in list(buckets[m].items()):
            qc = c / cv
            qe = list(e)
            qe[v] = m - 1
            qe = tuple(qe)
            s = q.get(qe, _ZERO) + qc
            if s:
                q[qe] = s
            else:
                del q[qe]
            # subtract qc * alpha^qe * w from the buckets
            for l, wl in enumerate(w):
                if not wl:
                    continue
                te = list(qe)
                te[l] += 1
                te = tuple(te)
                tb = buckets[te[v]]
                s = tb.get(te, _ZERO) - qc * wl
                if s:
                    tb[te] = s
                else:
                    tb.pop(te, None)
    return q, buckets[0]


def _deglex_key(e):
    return (sum(e), e)


def divmod_poly(a, b):
    """Division of `a` by a single nonzero divisor `b` in deglex order.

    Returns (q, r) with a = q*b + r; `b` divides `a` exactly iff r is
    empty (complete test for a single divisor).
    """
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    lead_b = max(b, key=_deglex_key)
    cb = b[lead_b]
    q = {}
    rem = {}
    r = dict(a)
    while r:
        lead = max(r, key=_deglex_key)
        diff = tuple(map(int.__sub__, lead, lead_b))
        if min(diff) < 0:
            rem[lead] = r.pop(lead)
            continue
        qc = r[lead] / cb
        s = q.get(diff, _ZERO) + qc
        if s:
            q[diff] = s
        else:
            q.pop(diff, None)
        for e, c in b.items():
            te = tuple(map(int.__add__, e, diff))
            s = r.get(te, _ZERO) - qc * c
            if s:
                r[te] = s
            else:
                r.pop(te, None)
    return q, rem
