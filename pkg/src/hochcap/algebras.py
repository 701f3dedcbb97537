"""Finite-dimensional associative unital algebras given by structure constants.

An algebra is described by a field, an ordered basis e_0 .. e_{d-1},
structure constants c[i][j][l] (the coefficient of e_l in e_i * e_j) and
the coordinates of the unit.  Structure constants are stored sparsely:
`mult[i][j]` is the dict {l: c} of the product e_i * e_j.
"""

from .errors import ValidationError
from .linalg import SparseMat, coerce_vector, kernel_basis


class AlgebraPresentation:
    __slots__ = ("field", "dim", "basis", "unit", "mult", "label", "_cache")

    def __init__(self, field, basis, structure, unit, label=None):
        """structure: iterable of (i, j, l, coeff); omitted entries are zero."""
        self.field = field
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        d = self.dim
        if d == 0:
            raise ValidationError("algebra must have positive dimension")
        self.label = label
        mult = [[{} for _ in range(d)] for _ in range(d)]
        for i, j, l, v in structure:
            if not (0 <= i < d and 0 <= j < d and 0 <= l < d):
                raise ValidationError(f"structure index ({i},{j},{l}) out of range")
            v = field.coerce(v)
            if v == field.zero:
                continue
            w = field.add(mult[i][j].get(l, field.zero), v)
            if w == field.zero:
                mult[i][j].pop(l, None)
            else:
                mult[i][j][l] = w
        self.mult = mult
        self.unit = coerce_vector(field, unit, d)
        self._cache = {}

    # -- multiplication ------------------------------------------------

    def multiply(self, a, b):
        """Product of two elements given as sparse coefficient dicts."""
        fld = self.field
        a = a if isinstance(a, dict) else coerce_vector(fld, a, self.dim)
        b = b if isinstance(b, dict) else coerce_vector(fld, b, self.dim)
        out = {}
        for i, va in a.items():
            for j, vb in b.items():
                coeff = fld.mul(va, vb)
                for l, c in self.mult[i][j].items():
                    s = fld.add(out.get(l, fld.zero), fld.mul(coeff, c))
                    if s == fld.zero:
                        out.pop(l, None)
                    else:
                        out[l] = s
        return out

    def left_matrix(self, i):
        """Matrix of y -> e_i * y on the algebra itself."""
        key = ("L", i)
        if key not in self._cache:
            m = SparseMat(self.dim, self.dim, self.field)
            for j in range(self.dim):
                for l, v in self.mult[i][j].items():
                    m.cols[j][l] = v
            self._cache[key] = m
        return self._cache[key]

    def right_matrix(self, i):
        """Matrix of y -> y * e_i."""
        key = ("R", i)
        if key not in self._cache:
            m = SparseMat(self.dim, self.dim, self.field)
            for j in range(self.dim):
                for l, v in self.mult[j][i].items():
                    m.cols[j][l] = v
            self._cache[key] = m
        return self._cache[key]

    # -- validation ------------------------------------------------------

    def validate(self):
        """Checks associativity and the two-sided unit; raises ValidationError."""
        fld = self.field
        d = self.dim
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    left = self.multiply(self.mult[i][j], {k: fld.one})
                    right = self.multiply({i: fld.one}, self.mult[j][k])
                    if left != right:
                        raise ValidationError(
                            f"associativity fails at (e_{i} e_{j}) e_{k}"
                        )
        for i in range(d):
            e = {i: fld.one}
            if self.multiply(self.unit, e) != e:
                raise ValidationError(f"unit fails on the left of e_{i}")
            if self.multiply(e, self.unit) != e:
                raise ValidationError(f"unit fails on the right of e_{i}")
        return self

    # -- center ------------------------------------------------------------

    def center(self):
        """Canonical basis of Z(A) as a list of sparse dicts.

        Kernel of the stacked system (left mult by e_i) - (right mult
        by e_i) over all i.
        """
        if "center" not in self._cache:
            d = self.dim
            stacked = SparseMat(d * d, d, self.field)
            for i in range(d):
                diff = self.left_matrix(i) - self.right_matrix(i)
                for j in range(d):
                    for l, v in diff.cols[j].items():
                        stacked.cols[j][i * d + l] = v
            k = kernel_basis(stacked)
            self._cache["center"] = [dict(k.cols[j]) for j in range(k.ncols)]
        return [dict(c) for c in self._cache["center"]]

    def is_central(self, z):
        z = coerce_vector(self.field, z, self.dim)
        for i in range(self.dim):
            e = {i: self.field.one}
            if self.multiply(z, e) != self.multiply(e, z):
                return False
        return True

    def regular(self):
        """The algebra as a bimodule over itself (cached singleton)."""
        if "regular" not in self._cache:
            from .bimodules import Bimodule

            left = tuple(self.left_matrix(i) for i in range(self.dim))
            right = tuple(self.right_matrix(i) for i in range(self.dim))
            bm = Bimodule(self, self.dim, left, right, label="regular")
            bm.validate()
            self._cache["regular"] = bm
        return self._cache["regular"]

    def __repr__(self):
        name = self.label or "algebra"
        return f"<{name}: dim {self.dim} over {self.field!r}>"
