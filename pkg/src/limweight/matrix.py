"""Immutable square matrices over the exact scalar ring."""

from fractions import Fraction

from .scalars import EPS, Poly, coeff, coerce, degree_range, eps_series, normalize

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Matrix:
    """Square matrix with ``Fraction`` or :class:`Poly` entries.

    Instances are immutable and hashable; equality is exact.
    """

    __slots__ = ("rows", "dim")

    def __init__(self, rows):
        rows = tuple(tuple(normalize(coerce(x)) for x in row) for row in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        self.rows = rows
        self.dim = n

    @classmethod
    def _raw(cls, rows):
        m = cls.__new__(cls)
        m.rows = rows
        m.dim = len(rows)
        return m

    @classmethod
    def identity(cls, n):
        return cls._raw(tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, n):
        return cls._raw(tuple((_ZERO,) * n for _ in range(n)))

    @classmethod
    def unit(cls, n, i, j, value=1):
        """Matrix unit with ``value`` at 1-based position (i, j)."""
        rows = [[_ZERO] * n for _ in range(n)]
        rows[i - 1][j - 1] = normalize(coerce(value))
        return cls._raw(tuple(tuple(r) for r in rows))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                yield i, j, x

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix._raw(tuple(
            tuple(normalize(a + b) for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)))

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix._raw(tuple(
            tuple(normalize(a - b) for a, b in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)))

    def __neg__(self):
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self.rows))

    def scale(self, c):
        c = normalize(coerce(c))
        if not c:
            return Matrix.zero(self.dim)
        return Matrix._raw(tuple(tuple(normalize(c * a) if a else _ZERO for a in r) for r in self.rows))

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self.matmul(other)
        if isinstance(other, (Poly, Fraction, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Poly, Fraction, int)):
            return self.scale(other)
        return NotImplemented

    def matmul(self, other):
        self._check(other)
        n = self.dim
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for j in range(n):
                col = cols[j]
                acc = _ZERO
                for k, a in nz:
                    b = col[k]
                    if b:
                        acc = acc + a * b
                row.append(normalize(acc))
            out.append(tuple(row))
        return Matrix._raw(tuple(out))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Matrix.identity(self.dim)
        for _ in range(k):
            out = out.matmul(self)
        return out

    def apply(self, vec):
        """Matrix times column vector (a tuple of scalars)."""
        if len(vec) != self.dim:
            raise ValueError("dimension mismatch")
        return tuple(normalize(sum((a * x for a, x in zip(r, vec) if a and x), _ZERO)) for r in self.rows)

    def transpose(self):
        return Matrix._raw(tuple(zip(*self.rows)))

    def map(self, f):
        return Matrix._raw(tuple(tuple(normalize(f(a)) for a in r) for r in self.rows))

    def _check(self, other):
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    # -- predicates -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self):
        return not any(a for r in self.rows for a in r)

    def is_identity(self):
        return self == Matrix.identity(self.dim)

    def is_strictly_upper(self):
        return all(not self.rows[i][j] for i in range(self.dim) for j in range(i + 1))

    def is_exact(self):
        """True when every entry is a plain rational."""
        return all(isinstance(a, Fraction) for r in self.rows for a in r)

    def variables(self):
        names = set()
        for r in self.rows:
            for a in r:
                if isinstance(a, Poly):
                    names.update(a.variables())
        return sorted(names)

    # -- coefficient views ------------------------------------------------

    def coeff(self, name, k):
        """Entrywise coefficient of ``name**k``."""
        return Matrix._raw(tuple(tuple(coeff(a, name, k) for a in r) for r in self.rows))

    def degree_range(self, name=EPS):
        lo, hi = 0, 0
        for r in self.rows:
            for a in r:
                if a:
                    d0, d1 = degree_range(a, name)
                    lo, hi = min(lo, d0), max(hi, d1)
        return lo, hi

    def subs(self, name, value):
        return self.map(lambda a: a.subs(name, value) if isinstance(a, Poly) else a)

    def __repr__(self):
        body = "; ".join(", ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix([{body}])"

    # -- JSON literal format ----------------------------------------------

    def to_json(self):
        """``{"dim", "entries"}``; eps-matrices use degree -> fraction maps.

        Entries involving variables other than ``eps`` are rendered as their
        string form under ``"symbolic"`` so witnesses stay printable.
        """
        names = self.variables()
        if not names:
            return {"dim": self.dim, "entries": [[_fmt(a) for a in r] for r in self.rows]}
        if names == [EPS]:
            entries = []
            for r in self.rows:
                row = []
                for a in r:
                    lo, hi = degree_range(a)
                    row.append({str(d): _fmt(coeff(a, EPS, d)) for d in range(lo, hi + 1) if coeff(a, EPS, d)})
                entries.append(row)
            return {"dim": self.dim, "degrees": True, "entries": entries}
        return {"dim": self.dim, "symbolic": True, "entries": [[str(a) for a in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj):
        n = int(obj["dim"])
        rows = obj["entries"]
        if len(rows) != n:
            raise ValueError("row count does not match dim")
        out = []
        for r in rows:
            row = []
            for a in r:
                if isinstance(a, dict):
                    row.append(eps_series(a))
                else:
                    row.append(coerce(a))
            out.append(row)
        return cls(out)


def _fmt(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def basis_unit(n, i, j):
    return Matrix.unit(n, i, j)


def commutator(x, y):
    return x.matmul(y) - y.matmul(x)
