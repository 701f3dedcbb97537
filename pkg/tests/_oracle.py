"""Independent brute-force reference for the test suite.

Everything in this file is deliberately naive: dense matrices as lists of
lists, textbook row reduction, differentials assembled entry by entry from
the defining formulas.  It shares no code with the installed package, so an
agreement between the two is meaningful evidence rather than a tautology.

Scalars are `Fraction` over the rationals, or plain ints reduced mod p.
"""

from fractions import Fraction
from itertools import product


# --- tiny dense linear algebra -------------------------------------------

def _inv_mod(a, p):
    return pow(a % p, p - 2, p)


def dense_rank(rows, p=None):
    """Rank of a dense matrix given as a list of row lists.

    Entries are Fractions (p is None) or ints taken mod p.  The input is
    copied; plain Gaussian elimination, nothing clever.
    """
    if not rows:
        return 0
    mat = [list(r) for r in rows]
    if p is not None:
        mat = [[x % p for x in r] for r in mat]
    nrows, ncols = len(mat), len(mat[0])
    rank = 0
    row = 0
    for col in range(ncols):
        piv = None
        for i in range(row, nrows):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        inv = _inv_mod(mat[row][col], p) if p is not None else Fraction(1) / mat[row][col]
        if p is not None:
            mat[row] = [(x * inv) % p for x in mat[row]]
        else:
            mat[row] = [x * inv for x in mat[row]]
        for i in range(nrows):
            if i != row and mat[i][col] != 0:
                f = mat[i][col]
                if p is not None:
                    mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[row])]
                else:
                    mat[i] = [x - f * y for x, y in zip(mat[i], mat[row])]
        row += 1
        rank += 1
        if row == nrows:
            break
    return rank


# --- raw algebra data (kept local on purpose) ----------------------------
#
# An algebra is a dict with keys:
#   d: dimension, p: None for Q or a prime,
#   c: structure constants, c[i][j][l] = coefficient of e_l in e_i * e_j,
#   unit: coefficients of 1 in the basis.
# Bimodule data for the regular bimodule is derived from c below.

def _c_zero(d):
    return [[[0] * d for _ in range(d)] for _ in range(d)]


def alg_rationals():
    c = _c_zero(1)
    c[0][0][0] = 1
    return {"d": 1, "p": None, "c": c, "unit": [1]}


def alg_dual_numbers():
    # basis e, x with x^2 = 0
    c = _c_zero(2)
    c[0][0][0] = 1
    c[0][1][1] = 1
    c[1][0][1] = 1
    return {"d": 2, "p": None, "c": c, "unit": [1, 0]}


def alg_truncated_cubic():
    # basis 1, x, x^2 with x^3 = 0
    c = _c_zero(3)
    for i in range(3):
        for j in range(3):
            if i + j < 3:
                c[i][j][i + j] = 1
    return {"d": 3, "p": None, "c": c, "unit": [1, 0, 0]}


def alg_product_qq():
    # Q x Q, orthogonal idempotents
    c = _c_zero(2)
    c[0][0][0] = 1
    c[1][1][1] = 1
    return {"d": 2, "p": None, "c": c, "unit": [1, 1]}


def alg_two_by_two():
    # matrix units E11, E12, E21, E22 in that order
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    c = _c_zero(4)
    for (a, b), i in idx.items():
        for (u, v), j in idx.items():
            if b == u:
                c[i][j][idx[(a, v)]] = 1
    return {"d": 4, "p": None, "c": c, "unit": [1, 0, 0, 1]}


def alg_upper_triangular():
    # e1 = E11, e2 = E22, a = E12
    c = _c_zero(3)
    c[0][0][0] = 1
    c[1][1][1] = 1
    c[0][2][2] = 1   # e1 * a = a
    c[2][1][2] = 1   # a * e2 = a
    return {"d": 3, "p": None, "c": c, "unit": [1, 1, 0]}


def alg_f2_c2():
    # group algebra of C2 over F2, basis 1, g
    c = _c_zero(2)
    c[0][0][0] = 1
    c[0][1][1] = 1
    c[1][0][1] = 1
    c[1][1][0] = 1
    return {"d": 2, "p": 2, "c": c, "unit": [1, 0]}


def alg_f2_dual():
    # F2[x]/(x^2) directly, for comparison with the group algebra above
    c = _c_zero(2)
    c[0][0][0] = 1
    c[0][1][1] = 1
    c[1][0][1] = 1
    return {"d": 2, "p": 2, "c": c, "unit": [1, 0]}


ALGEBRAS = {
    "rationals": alg_rationals,
    "dual_numbers": alg_dual_numbers,
    "truncated_cubic": alg_truncated_cubic,
    "product_qq": alg_product_qq,
    "two_by_two_matrices": alg_two_by_two,
    "upper_triangular": alg_upper_triangular,
    "f2_c2": alg_f2_c2,
}


# --- regular bimodule actions --------------------------------------------

def regular_actions(alg):
    """Left and right multiplication matrices of each basis element.

    left[i] is the matrix of y -> e_i * y, right[i] of y -> y * e_i,
    both acting on column vectors in the algebra's own basis.
    """
    d, c = alg["d"], alg["c"]
    left = [[[c[i][j][l] for j in range(d)] for l in range(d)] for i in range(d)]
    right = [[[c[j][i][l] for j in range(d)] for l in range(d)] for i in range(d)]
    return left, right


# --- the standard complex, assembled entry by entry ----------------------

def chain_boundary_dense(alg, left, right, r, n):
    """Dense matrix of b_n : N (x) A^{tensor n} -> N (x) A^{tensor n-1}.

    Coordinates are (module index major, then the tuple in lex order).
    left/right are the module's action matrices, r its dimension.
    """
    d = alg["d"]
    c = alg["c"]
    src = r * d ** n
    tgt = r * d ** (n - 1)
    mat = [[0] * src for _ in range(tgt)]

    def tgt_idx(x, tup):
        k = x
        for t in tup:
            k = k * d + t
        return k

    col = 0
    for x in range(r):
        for w in product(range(d), repeat=n):
            # (x . a1 ; a2 ... an)
            a1 = w[0]
            for l in range(r):
                v = right[a1][l][x]
                if v:
                    mat[tgt_idx(l, w[1:])][col] += v
            # interior contractions
            for i in range(1, n):
                sign = -1 if i % 2 else 1
                for l in range(d):
                    v = c[w[i - 1]][w[i]][l]
                    if v:
                        tup = w[: i - 1] + (l,) + w[i + 1:]
                        mat[tgt_idx(x, tup)][col] += sign * v
            # (an . x ; a1 ... a_{n-1})
            an = w[-1]
            sign = -1 if n % 2 else 1
            for l in range(r):
                v = left[an][l][x]
                if v:
                    mat[tgt_idx(l, w[:-1])][col] += sign * v
            col += 1
    return mat


def cochain_differential_dense(alg, left, right, r, m):
    """Dense matrix of the degree-m differential on maps A^{tensor m} -> M.

    Source coordinate (tuple w major, then module index j); same layout on
    the target one degree up.
    """
    d = alg["d"]
    c = alg["c"]
    src = r * d ** m
    tgt = r * d ** (m + 1)
    mat = [[0] * src for _ in range(tgt)]

    tuples_m = list(product(range(d), repeat=m))
    rank_m = {w: k for k, w in enumerate(tuples_m)}

    def src_idx(w, j):
        return rank_m[w] * r + j

    row_tuples = list(product(range(d), repeat=m + 1))
    for vk, v in enumerate(row_tuples):
        for j in range(r):
            # first factor acts on the value
            w = v[1:]
            for l in range(r):
                coeff = left[v[0]][l][j]
                if coeff:
                    mat[vk * r + l][src_idx(w, j)] += coeff
            # contractions
            for i in range(1, m + 1):
                sign = -1 if i % 2 else 1
                for l in range(d):
                    coeff = c[v[i - 1]][v[i]][l]
                    if coeff:
                        w = v[: i - 1] + (l,) + v[i + 1:]
                        mat[vk * r + j][src_idx(w, j)] += sign * coeff
            # last factor acts on the value
            w = v[:-1]
            sign = -1 if (m + 1) % 2 else 1
            for l in range(r):
                coeff = right[v[m]][l][j]
                if coeff:
                    mat[vk * r + l][src_idx(w, j)] += sign * coeff
    return mat


def homology_dims(alg, up_to):
    """dim H_n(A, A) for n = 0 .. up_to, by dense rank counting."""
    left, right = regular_actions(alg)
    r, p = alg["d"], alg["p"]
    dims = []
    ranks = {}
    for n in range(1, up_to + 2):
        ranks[n] = dense_rank(chain_boundary_dense(alg, left, right, r, n), p)
    for n in range(up_to + 1):
        space = r * alg["d"] ** n
        cycles = space - (ranks[n] if n >= 1 else 0)
        dims.append(cycles - ranks[n + 1])
    return dims


def cohomology_dims(alg, up_to):
    """dim H^m(A, A) for m = 0 .. up_to."""
    left, right = regular_actions(alg)
    r, p = alg["d"], alg["p"]
    dims = []
    ranks = {}
    for m in range(up_to + 1):
        ranks[m] = dense_rank(cochain_differential_dense(alg, left, right, r, m), p)
    for m in range(up_to + 1):
        space = r * alg["d"] ** m
        cocycles = space - ranks[m]
        dims.append(cocycles - (ranks[m - 1] if m >= 1 else 0))
    return dims
