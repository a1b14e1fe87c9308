# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for truncated sparse polynomial products.

Semantics must match redchern._mulcore_py exactly; see the docstrings there.
Coefficients stay generic Python objects (int or Fraction), so the speedup
comes from typed loop bookkeeping, not from native arithmetic.
"""


def mul_trunc(dict pa, dict pb, tuple wdegs, long cap):
    cdef dict out = {}
    cdef list bitems = []
    cdef tuple ea, eb, e
    cdef long wa, wb, i, nv
    cdef object ca, cb, prev

    if not pa or not pb:
        return out
    if len(pb) > len(pa):
        pa, pb = pb, pa
    nv = len(wdegs)
    for eb, cb in pb.items():
        wb = 0
        for i in range(nv):
            wb += <long> eb[i] * <long> wdegs[i]
        bitems.append((wb, eb, cb))
    if cap >= 0:
        bitems.sort()
    for ea, ca in pa.items():
        wa = 0
        for i in range(nv):
            wa += <long> ea[i] * <long> wdegs[i]
        for item in bitems:
            wb = <long> item[0]
            if cap >= 0 and wa + wb > cap:
                break
            eb = <tuple> item[1]
            cb = item[2]
            e = tuple([ea[i] + eb[i] for i in range(nv)])
            prev = out.get(e)
            if prev is None:
                out[e] = ca * cb
            else:
                out[e] = prev + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def expand_linear_chain(forms, long nvars, long cap):
    cdef dict acc = {(0,) * nvars: 1}
    cdef dict nxt
    cdef list nonzero
    cdef tuple form, e, e2
    cdef long i, deg
    cdef object c, m, cm, prev

    for form_obj in forms:
        form = tuple(form_obj)
        nonzero = [(i, form[i]) for i in range(nvars) if form[i]]
        if not nonzero:
            continue
        nxt = dict(acc)
        for e, c in acc.items():
            if cap >= 0:
                deg = 0
                for i in range(nvars):
                    deg += <long> e[i]
                if deg >= cap:
                    continue
            for i, m in nonzero:
                e2 = e[:i] + (e[i] + 1,) + e[i + 1:]
                cm = c * m
                prev = nxt.get(e2)
                if prev is None:
                    nxt[e2] = cm
                else:
                    nxt[e2] = prev + cm
        acc = nxt
    return {e: c for e, c in acc.items() if c != 0}
