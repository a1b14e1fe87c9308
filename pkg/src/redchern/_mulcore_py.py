"""Pure-Python kernels for truncated sparse polynomial products.

These two functions are the hot loops of the whole package: every class
computation ultimately expands a product of linear forms under a weighted
degree cap.  A compiled twin (redchern._mulcore, built from _mulcore.pyx)
implements the same functions with identical semantics; redchern.kernels
picks one at import time.  Keep the two implementations in lockstep: given
equal inputs they must return equal dicts.

Term dicts map exponent tuples to nonzero coefficients (Fraction or int).
A cap of -1 means no truncation.
"""


def mul_trunc(pa, pb, wdegs, cap):
    """Multiply two term dicts, dropping products of weighted degree > cap.

    wdegs gives the weighted degree of each variable, so the degree of an
    exponent tuple is the dot product with wdegs.
    """
    if not pa or not pb:
        return {}
    if len(pb) > len(pa):
        pa, pb = pb, pa
    bitems = []
    for eb, cb in pb.items():
        wb = 0
        for k, d in zip(eb, wdegs):
            wb += k * d
        bitems.append((wb, eb, cb))
    if cap >= 0:
        bitems.sort(key=lambda item: item[0])
    out = {}
    for ea, ca in pa.items():
        wa = 0
        for k, d in zip(ea, wdegs):
            wa += k * d
        for wb, eb, cb in bitems:
            if cap >= 0 and wa + wb > cap:
                break
            e = tuple(x + y for x, y in zip(ea, eb))
            prev = out.get(e)
            out[e] = ca * cb if prev is None else prev + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def expand_linear_chain(forms, nvars, cap):
    """Expand prod_j (1 + L_j) for linear forms L_j with integer coefficients.

    forms is an iterable of length-nvars coefficient tuples; every variable
    has weighted degree 1, so the degree of a term is the sum of exponents.
    Returns an exponent-tuple -> integer coefficient dict.
    """
    acc = {(0,) * nvars: 1}
    for form in forms:
        nonzero = [(i, m) for i, m in enumerate(form) if m]
        if not nonzero:
            continue
        nxt = dict(acc)
        for e, c in acc.items():
            if cap >= 0 and sum(e) >= cap:
                continue
            for i, m in nonzero:
                e2 = e[:i] + (e[i] + 1,) + e[i + 1:]
                cm = c * m
                prev = nxt.get(e2)
                nxt[e2] = cm if prev is None else prev + cm
        acc = nxt
    return {e: c for e, c in acc.items() if c != 0}
