"""Hochschild chains and cochains for a bimodule over a finite dimensional algebra.

Chains in degree n live in N (x) A^{(x)n}; the coordinate of the basis
element (x; a_1, ..., a_n) is x*d**n + sum(a_i * d**(n-i)), i.e. module
index major, tuple in lexicographic order.  Cochains in degree m are
maps A^{(x)m} -> M stored tuple major: the coordinate of the elementary
cochain sending the basis tuple w to basis vector j is rank(w)*r + j.

Boundary of (x; a_1..a_n):

    (x.a_1; a_2..a_n)
    + sum_{i=1}^{n-1} (-1)^i (x; a_1.. a_i a_{i+1} ..a_n)
    + (-1)^n (a_n.x; a_1..a_{n-1})

and the dual formula for the cochain differential.  Homology and
cohomology are presented as subquotients with canonical coordinates, so
equal classes get equal coordinate tuples no matter how they were found.
"""

from itertools import product

from . import config
from .bimodules import commutator_subspace, invariants_subspace, kron
from .errors import DegreeError, NotCentral, NotInvariant
from .linalg import SparseMat, coerce_vector, kernel_basis, subquotient


def tuples(d, n):
    """All basis tuples of length n, lexicographic."""
    return product(range(d), repeat=n)


def tuple_rank(d, w):
    k = 0
    for t in w:
        k = k * d + t
    return k


def tuple_digits(d, n, k):
    """Inverse of tuple_rank: the length n tuple with rank k."""
    out = [0] * n
    for i in range(n - 1, -1, -1):
        k, out[i] = divmod(k, d)
    return tuple(out)


def chain_pos(d, n, x, w):
    return x * d ** n + tuple_rank(d, w)


def cochain_pos(d, r, w, j):
    return tuple_rank(d, w) * r + j


def chain_dim(N, n):
    return N.dim * N.algebra.dim ** n


def cochain_dim(M, m):
    return M.algebra.dim ** m * M.dim


def _acc(col, idx, v, fld):
    if v == fld.zero:
        return
    s = fld.add(col.get(idx, fld.zero), v)
    if s == fld.zero:
        col.pop(idx, None)
    else:
        col[idx] = s


def boundary_matrix(N, n):
    """Matrix of b_n : C_n(A, N) -> C_{n-1}(A, N).  Requires n >= 1."""
    if n < 1:
        raise DegreeError("boundary starts in degree 1")
    key = ("boundary", n)
    cached = N._cache.get(key)
    if cached is not None:
        return cached

    A = N.algebra
    fld = N.field
    d, r = A.dim, N.dim
    src = r * d ** n
    tgt = r * d ** (n - 1)
    config.guard(max(src, tgt), "a chain space")

    sign_n = fld.one if n % 2 == 0 else fld.neg(fld.one)
    cols = []
    for x in range(r):
        for w in tuples(d, n):
            col = {}
            for y, v in N.right[w[0]].col(x).items():
                _acc(col, chain_pos(d, n - 1, y, w[1:]), v, fld)
            for i in range(1, n):
                sign = fld.one if i % 2 == 0 else fld.neg(fld.one)
                for l, v in A.mult[w[i - 1]][w[i]].items():
                    tup = w[: i - 1] + (l,) + w[i + 1 :]
                    _acc(col, chain_pos(d, n - 1, x, tup), fld.mul(sign, v), fld)
            for y, v in N.left[w[-1]].col(x).items():
                _acc(col, chain_pos(d, n - 1, y, w[:-1]), fld.mul(sign_n, v), fld)
            cols.append(col)

    mat = SparseMat(tgt, src, fld, cols)
    N._cache[key] = mat
    return mat


def coboundary_matrix(M, m):
    """Matrix of delta_m : C^m(A, M) -> C^{m+1}(A, M).  Requires m >= 0."""
    if m < 0:
        raise DegreeError("cochains start in degree 0")
    key = ("coboundary", m)
    cached = M._cache.get(key)
    if cached is not None:
        return cached

    A = M.algebra
    fld = M.field
    d, r = A.dim, M.dim
    src = d ** m * r
    tgt = d ** (m + 1) * r
    config.guard(max(src, tgt), "a cochain space")

    sign_last = fld.one if (m + 1) % 2 == 0 else fld.neg(fld.one)
    cols = [dict() for _ in range(src)]
    for u in tuples(d, m + 1):
        u_base = tuple_rank(d, u) * r
        # a_1 . T(a_2 .. a_{m+1})
        w_base = tuple_rank(d, u[1:]) * r
        for j in range(r):
            for y, v in M.left[u[0]].col(j).items():
                _acc(cols[w_base + j], u_base + y, v, fld)
        # interior contractions hit T diagonally in the module index
        for i in range(1, m + 1):
            sign = fld.one if i % 2 == 0 else fld.neg(fld.one)
            for l, v in A.mult[u[i - 1]][u[i]].items():
                w = u[: i - 1] + (l,) + u[i + 1 :]
                w_base = tuple_rank(d, w) * r
                sv = fld.mul(sign, v)
                for j in range(r):
                    _acc(cols[w_base + j], u_base + j, sv, fld)
        # (-1)^{m+1} T(a_1 .. a_m) . a_{m+1}
        w_base = tuple_rank(d, u[:m]) * r
        for j in range(r):
            for y, v in M.right[u[m]].col(j).items():
                _acc(cols[w_base + j], u_base + y, fld.mul(sign_last, v), fld)

    mat = SparseMat(tgt, src, fld, cols)
    M._cache[key] = mat
    return mat


class HomologySpace:
    """H_n(A, N) with canonical class coordinates."""

    __slots__ = ("module", "degree", "space")

    def __init__(self, module, degree):
        if degree < 0:
            raise DegreeError("homology degree must be nonnegative")
        self.module = module
        self.degree = degree
        fld = module.field
        if degree == 0:
            Z = SparseMat.identity(module.dim, fld)
        else:
            Z = kernel_basis(boundary_matrix(module, degree))
        B = boundary_matrix(module, degree + 1)
        self.space = subquotient(Z, B)

    @property
    def dim(self):
        return self.space.dim

    def class_of(self, chain):
        """Canonical coordinates of the class of a cycle (dense tuple)."""
        return self.space.coset_reduce(chain)

    def representative(self, k):
        return self.space.representative(k)

    def lift(self, coords):
        return self.space.lift(coords)

    def __repr__(self):
        return f"<H_{self.degree}({self.module!r}) dim={self.dim}>"


class CohomologySpace:
    """H^m(A, M) with canonical class coordinates."""

    __slots__ = ("module", "degree", "space")

    def __init__(self, module, degree):
        if degree < 0:
            raise DegreeError("cohomology degree must be nonnegative")
        self.module = module
        self.degree = degree
        fld = module.field
        Z = kernel_basis(coboundary_matrix(module, degree))
        if degree == 0:
            B = SparseMat.zero(module.dim, 0, fld)
        else:
            B = coboundary_matrix(module, degree - 1)
        self.space = subquotient(Z, B)

    @property
    def dim(self):
        return self.space.dim

    def class_of(self, cochain):
        return self.space.coset_reduce(cochain)

    def representative(self, k):
        return self.space.representative(k)

    def lift(self, coords):
        return self.space.lift(coords)

    def __repr__(self):
        return f"<H^{self.degree}({self.module!r}) dim={self.dim}>"


def homology(N, n):
    key = ("homology", n)
    hs = N._cache.get(key)
    if hs is None:
        hs = N._cache[key] = HomologySpace(N, n)
    return hs


def cohomology(M, m):
    key = ("cohomology", m)
    cs = M._cache.get(key)
    if cs is None:
        cs = M._cache[key] = CohomologySpace(M, m)
    return cs


def homology_dims(N, up_to):
    return [homology(N, n).dim for n in range(up_to + 1)]


def cohomology_dims(M, up_to):
    return [cohomology(M, m).dim for m in range(up_to + 1)]


# -- degree zero identifications ---------------------------------------

def coinvariants(N):
    """N / [N, A] with canonical coset coordinates.

    Degree 0 homology is exactly this quotient; the presentation here is
    built from the commutator subspace instead of a boundary matrix, so
    comparing the two is a real consistency check.
    """
    Z = SparseMat.identity(N.dim, N.field)
    return subquotient(Z, commutator_subspace(N))


def degree_zero_cocycle(M, vec):
    """The vector as a degree 0 cochain, after checking invariance.

    A degree 0 cochain is a single module element; it is a cocycle iff
    a.m = m.a for every a, i.e. iff m is an invariant.  Raises
    NotInvariant otherwise.
    """
    fld = M.field
    v = coerce_vector(fld, vec, M.dim)
    for s in range(M.algebra.dim):
        lhs = M.act_left({s: fld.one}, v)
        rhs = M.act_right(v, {s: fld.one})
        if lhs != rhs:
            raise NotInvariant(
                f"basis element {s} does not commute with the given vector"
            )
    return v


def invariants_dim(M):
    return invariants_subspace(M).ncols


# -- action of the center ----------------------------------------------

def center_action_chain_matrix(N, z, n):
    """z acting on C_n(A, N) through the module slot; z must be central."""
    if not N.algebra.is_central(z):
        raise NotCentral("chain action is only defined for central elements")
    L = N.left_action(z)
    if n == 0:
        return L
    return kron(L, SparseMat.identity(N.algebra.dim ** n, N.field))


def center_action_cochain_matrix(M, z, m):
    if not M.algebra.is_central(z):
        raise NotCentral("cochain action is only defined for central elements")
    L = M.left_action(z)
    if m == 0:
        return L
    return kron(SparseMat.identity(M.algebra.dim ** m, M.field), L)


def central_action_homology(hs, z):
    """Matrix of the action of central z on canonical H_n coordinates."""
    mat = center_action_chain_matrix(hs.module, z, hs.degree)
    cols = []
    for k in range(hs.dim):
        image = mat.matvec(hs.representative(k))
        coords = hs.class_of(image)
        cols.append({i: c for i, c in enumerate(coords) if c != hs.module.field.zero})
    return SparseMat(hs.dim, hs.dim, hs.module.field, cols)


def central_action_cohomology(cs, z):
    mat = center_action_cochain_matrix(cs.module, z, cs.degree)
    cols = []
    for k in range(cs.dim):
        image = mat.matvec(cs.representative(k))
        coords = cs.class_of(image)
        cols.append({i: c for i, c in enumerate(coords) if c != cs.module.field.zero})
    return SparseMat(cs.dim, cs.dim, cs.module.field, cols)


# -- two sided bar form --------------------------------------------------
#
# The same homology can be computed from N (x)_{A^e} A^{(x)(n+2)}: quotient
# N (x) A^{(x)(n+2)} by the relations moving the outer tensor factors across
# the module slot, with the simplicial differential that multiplies adjacent
# factors (all n+1 interior contractions, no wrap-around term).  Converting
# back and forth is a strong independent check on the small complex above.

class BarForm:
    __slots__ = ("module", "degree", "space", "proj", "sect", "ambient_dim")

    def __init__(self, module, degree, space, proj, sect, ambient_dim):
        self.module = module
        self.degree = degree
        self.space = space
        self.proj = proj
        self.sect = sect
        self.ambient_dim = ambient_dim

    @property
    def dim(self):
        return self.space.dim


def bar_form(N, n):
    """The degree n piece of N (x)_{A^e} A^{(x)(n+2)} as a quotient space."""
    A = N.algebra
    fld = N.field
    d, r = A.dim, N.dim
    amb = r * d ** (n + 2)
    config.guard(amb, "a bar form space")

    def pos(x, c):
        return x * d ** (n + 2) + tuple_rank(d, c)

    relations = []
    for x in range(r):
        for c in tuples(d, n + 2):
            for s in range(d):
                # (x.s; c)  -  (x; s c_0, c_1, ...)
                rel = {}
                for y, v in N.right[s].col(x).items():
                    _acc(rel, pos(y, c), v, fld)
                for l, v in A.mult[s][c[0]].items():
                    _acc(rel, pos(x, (l,) + c[1:]), fld.neg(v), fld)
                if rel:
                    relations.append(rel)
                # (s.x; c)  -  (x; c_0, ..., c_{n+1} s)
                rel = {}
                for y, v in N.left[s].col(x).items():
                    _acc(rel, pos(y, c), v, fld)
                for l, v in A.mult[c[-1]][s].items():
                    _acc(rel, pos(x, c[:-1] + (l,)), fld.neg(v), fld)
                if rel:
                    relations.append(rel)

    space = subquotient(
        SparseMat.identity(amb, fld),
        SparseMat.from_columns(amb, fld, relations),
    )
    proj_cols = []
    for j in range(amb):
        coords = space.coset_reduce({j: fld.one})
        proj_cols.append({i: c for i, c in enumerate(coords) if c != fld.zero})
    proj = SparseMat(space.dim, amb, fld, proj_cols)
    sect = SparseMat.from_columns(
        amb, fld, [space.representative(k) for k in range(space.dim)]
    )
    return BarForm(N, n, space, proj, sect, amb)


def bar_form_boundary(N, bf_n, bf_prev):
    """Induced differential bf_n.space -> bf_prev.space."""
    A = N.algebra
    fld = N.field
    d, r = A.dim, N.dim
    n = bf_n.degree
    if bf_prev.degree != n - 1:
        raise DegreeError("bar form boundary needs consecutive degrees")

    def pos(x, c):
        return x * d ** (n + 1) + tuple_rank(d, c)

    cols = []
    for x in range(r):
        for c in tuples(d, n + 2):
            col = {}
            for i in range(n + 1):
                sign = fld.one if i % 2 == 0 else fld.neg(fld.one)
                for l, v in A.mult[c[i]][c[i + 1]].items():
                    tup = c[:i] + (l,) + c[i + 2 :]
                    _acc(col, pos(x, tup), fld.mul(sign, v), fld)
            cols.append(col)
    ambient = SparseMat(r * d ** (n + 1), bf_n.ambient_dim, fld, cols)
    return bf_prev.proj @ ambient @ bf_n.sect


def bar_to_standard(N, bf):
    """Conversion bf.space -> C_n(A, N): (x; c) -> (c_last . x . c_0; c_1..c_n)."""
    A = N.algebra
    fld = N.field
    d, r = A.dim, N.dim
    n = bf.degree
    cols = []
    for x in range(r):
        for c in tuples(d, n + 2):
            col = {}
            mid = N.act_right(N.left[c[-1]].col(x), {c[0]: fld.one})
            for y, v in mid.items():
                _acc(col, chain_pos(d, n, y, c[1:-1]), v, fld)
            cols.append(col)
    conv = SparseMat(r * d ** n, bf.ambient_dim, fld, cols)
    return conv @ bf.sect


def standard_to_bar(N, bf):
    """Conversion C_n(A, N) -> bf.space: (x; a) -> [x; 1, a_1..a_n, 1]."""
    A = N.algebra
    fld = N.field
    d, r = A.dim, N.dim
    n = bf.degree

    def pos(x, c):
        return x * d ** (n + 2) + tuple_rank(d, c)

    cols = []
    for x in range(r):
        for w in tuples(d, n):
            col = {}
            for s, vs in A.unit.items():
                for t, vt in A.unit.items():
                    _acc(col, pos(x, (s,) + w + (t,)), fld.mul(vs, vt), fld)
            cols.append(col)
    amb = SparseMat(bf.ambient_dim, r * d ** n, fld, cols)
    return bf.proj @ amb
