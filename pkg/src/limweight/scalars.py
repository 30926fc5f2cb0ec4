"""Exact scalar ring for every computation in the package.

Scalars are either :class:`fractions.Fraction` or :class:`Poly`, a sparse
Laurent polynomial with rational coefficients.  One ring serves three jobs:

* the sequence parameter ``eps`` (standing for ``1/n``), which may carry
  negative exponents;
* the jet generators ``t`` and ``s``, which square to zero;
* free coordinate indeterminates used by the symbolic checking mode.

Arithmetic never rounds.  Results that collapse to a constant are returned
as plain ``Fraction`` by :func:`normalize`, which keeps the purely rational
fast path cheap.
"""

from fractions import Fraction
from numbers import Rational

EPS = "eps"
JET_VARS = frozenset({"t", "s"})


def _merge(m1, m2):
    """Multiply two monomials; return None when a jet generator squares."""
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for name, e in m2:
        e2 = d.get(name, 0) + e
        if name in JET_VARS and e2 > 1:
            return None
        if e2:
            d[name] = e2
        else:
            del d[name]
    return tuple(sorted(d.items()))


class Poly:
    """Sparse Laurent polynomial over the rationals.

    ``terms`` maps a monomial, a sorted tuple of ``(name, exponent)`` pairs,
    to a nonzero ``Fraction``.  The empty tuple is the constant monomial.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def var(cls, name, power=1):
        if power == 0:
            return cls.const(1)
        if name in JET_VARS and power > 1:
            return cls()
        return cls({((name, power),): Fraction(1)})

    @classmethod
    def const(cls, value):
        return cls({(): Fraction(value)})

    # -- arithmetic -------------------------------------------------------

    @staticmethod
    def _coerce(other):
        t = type(other)
        if t is Poly:
            return other
        if t is Fraction or t is int or isinstance(other, Rational):
            return Poly({(): Fraction(other)})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for mono, c in other.terms.items():
            v = out.get(mono, 0) + c
            if v:
                out[mono] = v
            else:
                out.pop(mono, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        t = type(other)
        if t is Fraction or t is int or (t is not Poly and isinstance(other, Rational)):
            if not other:
                return Poly()
            f = Fraction(other)
            return Poly._raw({m: c * f for m, c in self.terms.items()})
        if t is not Poly:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _merge(m1, m2)
                if m is None:
                    continue
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (Rational, int)):
            return self * (1 / Fraction(other))
        if isinstance(other, Poly) and len(other.terms) == 1:
            # division by a monomial stays inside the Laurent ring
            (mono, c), = other.terms.items()
            if any(name in JET_VARS for name, _ in mono):
                return NotImplemented
            inv = tuple((name, -e) for name, e in mono)
            return self * Poly._raw({inv: 1 / c})
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (Rational, int)):
            return Poly.const(other) / self
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return Poly.const(1) / (self ** -k)
        out = Poly.const(1)
        for _ in range(k):
            out = out * self
        return out

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (Rational, int)):
            if not other:
                return not self.terms
            return self.terms == {(): Fraction(other)}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -------------------------------------------------------

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_value(self):
        """Coefficient of the empty monomial."""
        return self.terms.get((), Fraction(0))

    def variables(self):
        return sorted({name for mono in self.terms for name, _ in mono})

    def degrees(self, name):
        """(min, max) exponent of ``name`` over all terms, or None if zero."""
        if not self.terms:
            return None
        exps = [dict(mono).get(name, 0) for mono in self.terms]
        return min(exps), max(exps)

    def coeff(self, name, k):
        """Coefficient of ``name**k`` as a polynomial in the other variables."""
        out = {}
        for mono, c in self.terms.items():
            d = dict(mono)
            if d.get(name, 0) != k:
                continue
            d.pop(name, None)
            out[tuple(sorted(d.items()))] = c
        return normalize(Poly._raw(out))

    def subs(self, name, value):
        """Substitute a rational value for one variable."""
        value = Fraction(value)
        out = Poly()
        for mono, c in self.terms.items():
            d = dict(mono)
            e = d.pop(name, 0)
            if e < 0 and value == 0:
                raise ZeroDivisionError(f"{name}={value} hits a pole")
            out = out + Poly._raw({tuple(sorted(d.items())): c * value ** e})
        return normalize(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono, c in sorted(self.terms.items(), key=lambda kv: kv[0]):
            factors = []
            for name, e in mono:
                factors.append(name if e == 1 else f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts)


def normalize(x):
    """Collapse constant polynomials to ``Fraction``; coerce ints."""
    t = type(x)
    if t is Fraction:
        return x
    if t is Poly:
        if x.is_constant():
            return x.constant_value()
        return x
    return Fraction(x)


def coerce(x):
    """Accept ints, fractions, ``"p/q"`` strings, or Poly."""
    if isinstance(x, Poly):
        return normalize(x)
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def var(name, power=1):
    return Poly.var(name, power)


eps = Poly.var(EPS)
inv_eps = Poly.var(EPS, -1)


def degree_range(x, name=EPS):
    """Exponent range of ``name`` in a scalar; constants give (0, 0)."""
    if isinstance(x, Poly):
        r = x.degrees(name)
        return r if r is not None else (0, 0)
    return (0, 0)


def coeff(x, name, k):
    if isinstance(x, Poly):
        return x.coeff(name, k)
    return Fraction(x) if k == 0 else Fraction(0)


def eps_series(coefficients):
    """Build ``sum c_d eps**d`` from a mapping degree -> coefficient."""
    out = Poly()
    for d, c in coefficients.items():
        out = out + Poly.var(EPS, int(d)) * coerce(c)
    return normalize(out)


def series_coefficients(x, name=EPS):
    """Inverse of :func:`eps_series` for scalars free of other variables."""
    lo, hi = degree_range(x, name)
    out = {}
    for d in range(lo, hi + 1):
        c = coeff(x, name, d)
        if c:
            out[d] = c
    return out
