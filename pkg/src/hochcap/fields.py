"""Ground fields: the rationals and prime fields.

Field elements are plain Python objects: `Fraction` for Q, ints in
[0, p) for F_p.  A field object only bundles the arithmetic, parsing and
formatting conventions; it never wraps the scalars themselves, so the
rest of the package can use native operators through these helpers
without boxing overhead.
"""

from fractions import Fraction

from .errors import ParseError


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Rationals:
    """The field Q.  Elements are `fractions.Fraction`."""

    kind = "Q"
    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            try:
                return Fraction(x.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise ParseError(f"bad rational literal {x!r}") from e
        raise ParseError(f"cannot coerce {x!r} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / a

    def div(self, a, b):
        return a / b

    def format(self, x):
        return str(x)

    def to_json(self):
        return {"kind": "Q"}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The field F_p for a prime p.  Elements are ints in [0, p)."""

    kind = "Fp"

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise ParseError(f"p must be prime, got {p!r}")
        self.p = p
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, str):
            try:
                return int(x.strip(), 10) % self.p
            except ValueError as e:
                raise ParseError(f"bad integer literal {x!r}") from e
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ParseError(f"denominator of {x} vanishes mod {self.p}")
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        raise ParseError(f"cannot coerce {x!r} into F_{self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def format(self, x):
        return str(x % self.p)

    def to_json(self):
        return {"kind": "Fp", "p": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()

_gf_cache = {}


def GF(p):
    if p not in _gf_cache:
        _gf_cache[p] = PrimeField(p)
    return _gf_cache[p]


def field_from_json(obj):
    """Builds a field from {"kind": "Q"} or {"kind": "Fp", "p": <prime>}."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError(f"bad field description {obj!r}")
    if obj["kind"] == "Q":
        return QQ
    if obj["kind"] == "Fp":
        if "p" not in obj:
            raise ParseError("field of kind Fp needs a prime p")
        return GF(obj["p"])
    raise ParseError(f"unknown field kind {obj['kind']!r}")
