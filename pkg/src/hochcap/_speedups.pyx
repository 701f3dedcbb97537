# cython: language_level=3
# cython: binding=True
"""Compiled row-reduction kernels.

Twin of `hochcap._elim_py`: same two entry points, same contract, and the
output must be bit-identical (the tests diff the lanes on random input).
The rational lane keeps Python integers because coefficients grow without
bound during elimination; the win there is compiled loop and call
overhead.  The mod-p lane does its arithmetic in C int64 whenever
(p-1)**2 fits, which covers every prime below 2**31; larger primes take
the reference implementation.
"""

from fractions import Fraction
from math import gcd

from . import _elim_py

# largest p whose elimination stays inside int64: (p-1)^2 + p < 2^63
_P_MACHINE_LIMIT = 1 << 31


cdef _content(vals):
    g = 0
    for v in vals:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g


cdef void _axpy_int(dict u, a, f, dict row):
    # u := a*u - f*row on integer dicts, dropping zeros
    if a != 1:
        for c in u:
            u[c] = u[c] * a
    for c, v in row.items():
        w = u.get(c, 0) - f * v
        if w:
            u[c] = w
        else:
            u.pop(c, None)


cdef void _primitive(dict u):
    g = _content(u.values())
    if g > 1:
        for c in u:
            u[c] = u[c] // g


def build_rref_rational(rows, ncols, pivot_limit=None, stop_on_defect=False):
    """Incremental rref over Q; see _elim_py.build_rref_rational."""
    if pivot_limit is None:
        pivot_limit = ncols
    cdef dict pivot_of = {}
    cdef list basis = []
    cdef dict col_rows = {}
    cdef list defects = []
    cdef dict u, b
    cdef set touched
    cdef Py_ssize_t new_idx

    for row in rows:
        u = {}
        den = 1
        for c, v in row.items():
            if not isinstance(v, Fraction):
                v = Fraction(v)
            if v:
                u[c] = v
        if not u:
            continue
        for v in u.values():
            den = den * v.denominator // gcd(den, v.denominator)
        u = {c: int(v * den) for c, v in u.items()}
        _primitive(u)

        for c in sorted(u):
            idx = pivot_of.get(c)
            if idx is None:
                continue
            f = u.get(c)
            if not f:
                continue
            b = basis[idx]
            _axpy_int(u, b[c], f, b)
            _primitive(u)
        if not u:
            continue
        lead = min(u)
        if lead >= pivot_limit:
            defects.append(dict(u))
            if stop_on_defect:
                break
            continue

        new_idx = len(basis)
        touched = col_rows.get(lead)
        if touched is not None:
            for idx in sorted(touched):
                b = basis[idx]
                f = b.get(lead)
                if not f:
                    continue
                for c in b:
                    col_rows[c].discard(idx)
                _axpy_int(b, u[lead], f, u)
                _primitive(b)
                for c in b:
                    col_rows.setdefault(c, set()).add(idx)
        basis.append(u)
        pivot_of[lead] = new_idx
        for c in u:
            col_rows.setdefault(c, set()).add(new_idx)

    pivots = sorted(pivot_of)
    out = []
    for p in pivots:
        b = basis[pivot_of[p]]
        lead = b[p]
        out.append({c: Fraction(v, lead) for c, v in sorted(b.items())})
    return pivots, out, defects


cdef void _axpy_mod(dict u, long long f, dict row, long long p):
    # u := u - f*row mod p; C % keeps the dividend's sign, so fix it up
    cdef long long w
    for c, v in row.items():
        w = (<long long> u.get(c, 0)) - f * (<long long> v)
        w = w % p
        if w < 0:
            w += p
        if w:
            u[c] = w
        else:
            u.pop(c, None)


def build_rref_mod_p(rows, ncols, p, pivot_limit=None, stop_on_defect=False):
    """Incremental rref over F_p; see _elim_py.build_rref_mod_p."""
    if p >= _P_MACHINE_LIMIT:
        return _elim_py.build_rref_mod_p(rows, ncols, p, pivot_limit, stop_on_defect)
    if pivot_limit is None:
        pivot_limit = ncols
    cdef long long cp = p
    cdef long long f, vv, inv
    cdef dict pivot_of = {}
    cdef list basis = []
    cdef dict col_rows = {}
    cdef list defects = []
    cdef dict u, b
    cdef set touched
    cdef Py_ssize_t new_idx

    for row in rows:
        u = {}
        for c, v in row.items():
            vv = (<long long> v) % cp
            if vv < 0:
                vv += cp
            if vv:
                u[c] = vv
        if not u:
            continue

        for c in sorted(u):
            idx = pivot_of.get(c)
            if idx is None:
                continue
            fo = u.get(c)
            if fo is None:
                continue
            f = fo
            if not f:
                continue
            _axpy_mod(u, f, basis[idx], cp)
        if not u:
            continue
        lead = min(u)
        if lead >= pivot_limit:
            defects.append(dict(u))
            if stop_on_defect:
                break
            continue

        inv = <long long> pow(u[lead], -1, p)
        if inv != 1:
            u = {c: (<long long> v) * inv % cp for c, v in u.items()}
        new_idx = len(basis)
        touched = col_rows.get(lead)
        if touched is not None:
            for idx in sorted(touched):
                b = basis[idx]
                fo = b.get(lead)
                if fo is None:
                    continue
                f = fo
                if not f:
                    continue
                for c in b:
                    col_rows[c].discard(idx)
                _axpy_mod(b, f, u, cp)
                for c in b:
                    col_rows.setdefault(c, set()).add(idx)
        basis.append(u)
        pivot_of[lead] = new_idx
        for c in u:
            col_rows.setdefault(c, set()).add(new_idx)

    pivots = sorted(pivot_of)
    out = []
    for q in pivots:
        b = basis[pivot_of[q]]
        out.append({c: v for c, v in sorted(b.items())})
    return pivots, out, defects
