"""Exact arithmetic for truncated Laurent series in one formal variable.

The coefficient domain is duck-typed: big rationals (gmpy2.mpq), Laurent
polynomials in x (XLaurent) or rational functions in x (XFrac) all work,
which is how the (x,q)-series of the knot matrices are represented.

Truncation bookkeeping: a series knows its coefficients for every exponent
e < trunc; exponents >= trunc are unknown.  trunc=None means the series is
an exactly known Laurent polynomial (finite support, nothing hidden).
"""

from __future__ import annotations

from gmpy2 import mpq

INSIDE = "inside"    # |q| < 1
OUTSIDE = "outside"  # |q| > 1, stored as a series in qbar = 1/q

__all__ = [
    "QSeries", "XLaurent", "XFrac", "INSIDE", "OUTSIDE",
    "poch", "poch_inf", "prod_factors", "ek_n", "e2_series",
    "series_div", "subst_q_exp", "specialize_x", "x_swap",
    "dumps_series", "loads_series", "qs", "xl",
]


def _min_trunc(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class QSeries:
    """Truncated Laurent series sum_e c_e * var^e with c_e known for e < trunc."""

    __slots__ = ("coeffs", "trunc", "var", "regime")

    def __init__(self, coeffs, trunc=None, var="q", regime=INSIDE, clean=True):
        if clean:
            if trunc is None:
                coeffs = {e: c for e, c in coeffs.items() if c}
            else:
                coeffs = {e: c for e, c in coeffs.items() if e < trunc and c}
        self.coeffs = coeffs
        self.trunc = trunc
        self.var = var
        self.regime = regime

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, trunc=None, var="q", regime=INSIDE):
        return cls({}, trunc, var, regime, clean=False)

    @classmethod
    def one(cls, trunc=None, var="q", regime=INSIDE):
        return cls({0: mpq(1)}, trunc, var, regime, clean=False)

    @classmethod
    def monomial(cls, e, c=mpq(1), trunc=None, var="q", regime=INSIDE):
        return cls({e: c}, trunc, var, regime)

    def _like(self, coeffs, trunc):
        return QSeries(coeffs, trunc, self.var, self.regime)

    # -- inspection --------------------------------------------------------

    def __bool__(self):
        return bool(self.coeffs)

    def coeff(self, e):
        if self.trunc is not None and e >= self.trunc:
            raise ValueError(f"coefficient of {self.var}^{e} beyond truncation {self.trunc}")
        return self.coeffs.get(e, mpq(0))

    def valuation(self, default=None):
        """Lowest exponent with nonzero coefficient; `default` if the series is 0."""
        if not self.coeffs:
            return self.trunc if default is None else default
        return min(self.coeffs)

    def support(self):
        return sorted(self.coeffs)

    def is_exact(self):
        return self.trunc is None

    def _check(self, other):
        if self.var != other.var or self.regime != other.regime:
            raise ValueError(f"incompatible series: {self.var}/{self.regime} vs {other.var}/{other.regime}")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            other = self._scalar(other)
        self._check(other)
        t = _min_trunc(self.trunc, other.trunc)
        c = dict(self.coeffs)
        for e, v in other.coeffs.items():
            w = c.get(e)
            if w is None:
                c[e] = v
            else:
                w = w + v
                if w:
                    c[e] = w
                else:
                    del c[e]
        return self._like(c, t)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return QSeries({e: -v for e, v in self.coeffs.items()}, self.trunc,
                       self.var, self.regime, clean=False)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            other = self._scalar(other)
        return self.__add__(other.__neg__())

    def __rsub__(self, other):
        return self.__neg__().__add__(self._scalar(other))

    def _scalar(self, c):
        if isinstance(c, int):
            c = mpq(c)
        return QSeries({0: c} if c else {}, None, self.var, self.regime, clean=False)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(other)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            if (not self.coeffs and self.trunc is None) or (not other.coeffs and other.trunc is None):
                return self._like({}, None)  # exact zero
            t = None
            if self.trunc is not None:
                t = _min_trunc(t, self.trunc + (other.valuation() if other.coeffs else other.trunc))
            if other.trunc is not None:
                t = _min_trunc(t, other.trunc + (self.valuation() if self.coeffs else self.trunc))
            return self._like({}, t)
        va, vb = self.valuation(), other.valuation()
        t = _min_trunc(None if self.trunc is None else self.trunc + vb,
                       None if other.trunc is None else other.trunc + va)
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        c = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                e = e1 + e2
                if t is not None and e >= t:
                    continue
                p = v1 * v2
                w = c.get(e)
                if w is None:
                    c[e] = p
                else:
                    c[e] = w + p
        return self._like({e: v for e, v in c.items() if v}, t)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        if isinstance(c, int):
            c = mpq(c)
        if not c:
            return self._like({}, self.trunc)
        return QSeries({e: c * v for e, v in self.coeffs.items()}, self.trunc,
                       self.var, self.regime, clean=False)

    def shift(self, k):
        """Multiply by var^k."""
        if k == 0:
            return self
        t = None if self.trunc is None else self.trunc + k
        return QSeries({e + k: v for e, v in self.coeffs.items()}, t,
                       self.var, self.regime, clean=False)

    def truncate(self, n):
        t = _min_trunc(self.trunc, n)
        return QSeries({e: v for e, v in self.coeffs.items() if e < t}, t,
                       self.var, self.regime, clean=False)

    def inverse(self, trunc=None):
        """Multiplicative inverse; the lowest coefficient must be invertible."""
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero series")
        v = self.valuation()
        c0 = self.coeffs[v]
        c0inv = _coeff_inverse(c0)
        if self.trunc is None:
            if trunc is None:
                if len(self.coeffs) == 1:
                    return QSeries({-v: c0inv}, None, self.var, self.regime, clean=False)
                raise ValueError("inverse of a non-monomial exact polynomial needs a truncation order")
            n = trunc + v  # u-part needed to order trunc + v
        else:
            n = self.trunc - v
            if trunc is not None:
                n = min(n, trunc + v)
        # unit part u = shift(-v)*c0inv, solve w*u = 1 to order n
        u = {e - v: c0inv * c for e, c in self.coeffs.items() if self.trunc is None or e - v < n}
        w = {0: _coeff_one(c0inv)}
        pos = sorted(e for e in u if 0 < e < n)
        for e in range(1, n):
            s = None
            for i in pos:
                if i > e:
                    break
                wv = w.get(e - i)
                if wv is not None:
                    p = u[i] * wv
                    s = p if s is None else s + p
            if s is not None and s:
                w[e] = -s
        res = {e - v: c0inv * c for e, c in w.items()}
        return QSeries(res, n - v, self.var, self.regime)

    def __truediv__(self, other):
        if not isinstance(other, QSeries):
            return self.scale(_coeff_inverse(other if not isinstance(other, int) else mpq(other)))
        self._check(other)
        if self.trunc is None and other.trunc is None:
            # exact polynomials: try exact division, fall back to a truncation
            if not self.coeffs:
                return self._like({}, None)
            da, va = max(self.support()), self.valuation()
            db, vb = max(other.support()), other.valuation()
            t_inv = max(da - db + 1 - va, 1 - vb)
            q = self * other.inverse(trunc=t_inv)
            cand = QSeries(dict(q.coeffs), None, self.var, self.regime)
            if cand * other == self:
                return cand
            return q
        inv = other.inverse(trunc=self.trunc if other.trunc is None else None)
        return self * inv

    def pow(self, n, trunc=None):
        if n < 0:
            return self.inverse(trunc=trunc).pow(-n, trunc=trunc)
        r = QSeries.one(trunc, self.var, self.regime)
        b = self if trunc is None else self.truncate(trunc)
        while n:
            if n & 1:
                r = r * b
                if trunc is not None:
                    r = r.truncate(trunc)
            n >>= 1
            if n:
                b = b * b
                if trunc is not None:
                    b = b.truncate(trunc)
        return r

    # -- comparisons -------------------------------------------------------

    def eq_to_order(self, other, order=None):
        """Coefficientwise equality for all exponents below min(truncs, order)."""
        if not isinstance(other, QSeries):
            other = self._scalar(other)
        t = _min_trunc(self.trunc, other.trunc)
        t = _min_trunc(t, order)
        for e in set(self.coeffs) | set(other.coeffs):
            if t is not None and e >= t:
                continue
            if self.coeffs.get(e, 0) != other.coeffs.get(e, 0):
                return False
        return True

    def __eq__(self, other):
        if isinstance(other, (int, mpq)):
            other = self._scalar(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        return (self.var == other.var and self.regime == other.regime
                and self.trunc == other.trunc and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.var, self.regime, self.trunc, tuple(sorted(self.coeffs.items(), key=lambda t: t[0]))))

    def __repr__(self):
        terms = []
        for e in self.support()[:12]:
            terms.append(f"{self.coeffs[e]}*{self.var}^{e}")
        s = " + ".join(terms) if terms else "0"
        if len(self.coeffs) > 12:
            s += " + ..."
        if self.trunc is not None:
            s += f" + O({self.var}^{self.trunc})"
        return s

    def map_coeffs(self, f):
        return QSeries({e: f(c) for e, c in self.coeffs.items()}, self.trunc,
                       self.var, self.regime)


def _coeff_one(c):
    if isinstance(c, (int, type(mpq(1)))):
        return mpq(1)
    return c.ring_one()


def _coeff_inverse(c):
    if isinstance(c, int):
        c = mpq(c)
    if isinstance(c, type(mpq(1))):
        if not c:
            raise ZeroDivisionError("leading coefficient is zero")
        return 1 / c
    return c.inverse()


# ---------------------------------------------------------------------------
# Laurent polynomials and rational functions in x
# ---------------------------------------------------------------------------

class XLaurent:
    """Laurent polynomial in x with big-rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None, clean=True):
        if coeffs is None:
            coeffs = {}
        if clean:
            coeffs = {d: mpq(c) if isinstance(c, int) else c for d, c in coeffs.items() if c}
        self.coeffs = coeffs

    @classmethod
    def const(cls, c):
        c = mpq(c)
        return cls({0: c} if c else {}, clean=False)

    @classmethod
    def mono(cls, d, c=1):
        c = mpq(c)
        return cls({d: c} if c else {}, clean=False)

    @classmethod
    def x(cls):
        return cls({1: mpq(1)}, clean=False)

    def ring_one(self):
        return XLaurent.const(1)

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        other = _as_xl(other)
        c = dict(self.coeffs)
        for d, v in other.coeffs.items():
            w = c.get(d)
            if w is None:
                c[d] = v
            else:
                w = w + v
                if w:
                    c[d] = w
                else:
                    del c[d]
        return XLaurent(c, clean=False)

    __radd__ = __add__

    def __neg__(self):
        return XLaurent({d: -v for d, v in self.coeffs.items()}, clean=False)

    def __sub__(self, other):
        return self + (-_as_xl(other))

    def __rsub__(self, other):
        return _as_xl(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, type(mpq(1)))):
            other = mpq(other)
            if not other:
                return XLaurent()
            return XLaurent({d: other * v for d, v in self.coeffs.items()}, clean=False)
        if isinstance(other, XFrac):
            return NotImplemented
        c = {}
        for d1, v1 in self.coeffs.items():
            for d2, v2 in other.coeffs.items():
                d = d1 + d2
                p = v1 * v2
                w = c.get(d)
                c[d] = p if w is None else w + p
        return XLaurent({d: v for d, v in c.items() if v}, clean=False)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, type(mpq(1)))):
            other = XLaurent.const(other)
        if not isinstance(other, XLaurent):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items(), key=lambda t: t[0])))

    def swap(self):
        """Substitute x -> 1/x."""
        return XLaurent({-d: v for d, v in self.coeffs.items()}, clean=False)

    def degree_range(self):
        if not self.coeffs:
            return (0, 0)
        return (min(self.coeffs), max(self.coeffs))

    def eval_at(self, v):
        """Evaluate at a numeric point (mpq, mpf or mpc)."""
        s = None
        for d, c in self.coeffs.items():
            t = c * v**d
            s = t if s is None else s + t
        return 0 if s is None else s

    def eval_rational(self, v):
        v = mpq(v)
        s = mpq(0)
        for d, c in self.coeffs.items():
            s += c * v**d
        return s

    def is_mono(self):
        return len(self.coeffs) == 1

    def inverse(self):
        if self.is_mono():
            (d, c), = self.coeffs.items()
            return XLaurent({-d: 1 / c}, clean=False)
        raise ValueError("non-monomial Laurent polynomial has no Laurent inverse; use XFrac")

    def _as_poly(self):
        """Return (shift, list) with self = x^shift * sum list[i] x^i, list[0] != 0."""
        if not self.coeffs:
            return 0, []
        lo, hi = self.degree_range()
        return lo, [self.coeffs.get(d, mpq(0)) for d in range(lo, hi + 1)]

    def divexact(self, other):
        """Exact division by another XLaurent; returns None when not divisible."""
        if not self.coeffs:
            return XLaurent()
        if not other.coeffs:
            raise ZeroDivisionError
        s1, p1 = self._as_poly()
        s2, p2 = other._as_poly()
        q, r = _poly_divmod(p1, p2)
        if r is not None and any(r):
            return None
        return XLaurent({s1 - s2 + i: c for i, c in enumerate(q) if c})

    def derivative(self):
        return XLaurent({d - 1: d * v for d, v in self.coeffs.items() if d != 0})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{v}*x^{d}" for d, v in sorted(self.coeffs.items()))


def _as_xl(c):
    if isinstance(c, XLaurent):
        return c
    return XLaurent.const(c)


def _poly_divmod(num, den):
    """Long division of coefficient lists (ascending).  Returns (quot, rem)."""
    num = list(num)
    dn = len(den) - 1
    while dn >= 0 and not den[dn]:
        dn -= 1
    if dn < 0:
        raise ZeroDivisionError
    lead = den[dn]
    q = [mpq(0)] * max(0, len(num) - dn)
    for i in range(len(num) - dn - 1, -1, -1):
        c = num[i + dn] / lead
        if c:
            q[i] = c
            for j in range(dn + 1):
                num[i + j] -= c * den[j]
    return q, num[:dn]


def _poly_gcd(a, b):
    """Monic gcd of ascending coefficient lists over the rationals."""
    def norm(p):
        while p and not p[-1]:
            p.pop()
        return p
    a, b = norm(list(a)), norm(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, norm(r)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


class XFrac:
    """Rational function in x: a pair of Laurent polynomials num/den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, reduce=True):
        num = _as_xl(num)
        den = XLaurent.const(1) if den is None else _as_xl(den)
        if not den:
            raise ZeroDivisionError("XFrac with zero denominator")
        if reduce and num:
            num, den = _xfrac_reduce(num, den)
        if not num:
            den = XLaurent.const(1)
        self.num = num
        self.den = den

    def ring_one(self):
        return XFrac(XLaurent.const(1), reduce=False)

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        other = _as_xf(other)
        return XFrac(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return XFrac(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-_as_xf(other))

    def __rsub__(self, other):
        return _as_xf(other) + (-self)

    def __mul__(self, other):
        other = _as_xf(other)
        return XFrac(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError
        return XFrac(self.den, self.num, reduce=False)

    def __truediv__(self, other):
        return self * _as_xf(other).inverse()

    def __eq__(self, other):
        other = _as_xf(other)
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_laurent(self):
        q = self.num.divexact(self.den)
        if q is None:
            raise ValueError(f"not a Laurent polynomial: ({self.num})/({self.den})")
        return q

    def eval_at(self, v):
        return self.num.eval_at(v) / self.den.eval_at(v)

    def __repr__(self):
        return f"({self.num})/({self.den})"


def _as_xf(c):
    if isinstance(c, XFrac):
        return c
    return XFrac(_as_xl(c), reduce=False)


def _xfrac_reduce(num, den):
    s1, p1 = num._as_poly()
    s2, p2 = den._as_poly()
    g = _poly_gcd(p1, p2)
    if len(g) > 1:
        q1, _ = _poly_divmod(p1, g)
        q2, _ = _poly_divmod(p2, g)
        p1, p2 = q1, q2
    lead = None
    for c in reversed(p2):
        if c:
            lead = c
            break
    num = XLaurent({s1 - s2 + i: c / lead for i, c in enumerate(p1) if c})
    den = XLaurent({i: c / lead for i, c in enumerate(p2) if c})
    return num, den


# ---------------------------------------------------------------------------
# q-functions
# ---------------------------------------------------------------------------

def qs(pairs, trunc=None, var="q", regime=INSIDE):
    """Convenience constructor from {exponent: coefficient}."""
    return QSeries({e: mpq(c) if isinstance(c, int) else c for e, c in pairs.items()},
                   trunc, var, regime)


def xl(pairs):
    return XLaurent({d: mpq(c) if isinstance(c, int) else c for d, c in pairs.items()})


def prod_factors(factors, trunc=None, var="q", regime=INSIDE, one=None):
    """Product of factors (1 - c * var^e), c a coefficient, e an integer."""
    r = QSeries({0: one if one is not None else mpq(1)}, trunc, var, regime, clean=False)
    for c, e in factors:
        f = QSeries({0: one if one is not None else mpq(1), e: -c if not isinstance(c, int) else mpq(-c)},
                    trunc, var, regime)
        r = r * f
        if trunc is not None:
            r = r.truncate(trunc)
    return r


def poch(n, trunc=None, shift=1, var="q", regime=INSIDE):
    """(shift*q; q)_n = prod_{j=1..n} (1 - shift*q^j), an exact polynomial by default."""
    if n < 0:
        raise ValueError("poch expects n >= 0")
    if isinstance(shift, int):
        shift = mpq(shift)
    return prod_factors([(shift, j) for j in range(1, n + 1)], trunc, var, regime,
                        one=shift.ring_one() if isinstance(shift, XLaurent) else None)


def poch_inf(trunc, shift=1, var="q", regime=INSIDE, qoffset=1):
    """(shift*q^qoffset; q)_infinity expanded to the given truncation order.

    Only meaningful in the |q| < 1 regime (the product does not converge
    outside), so OUTSIDE input is rejected.
    """
    if regime == OUTSIDE:
        raise ValueError("infinite Pochhammer products require the |q|<1 regime")
    if isinstance(shift, int):
        shift = mpq(shift)
    if not shift:
        return QSeries.one(trunc, var, regime)
    if qoffset < 1:
        raise ValueError("poch_inf needs factors with positive q-powers")
    return prod_factors([(shift, j) for j in range(qoffset, trunc)], trunc, var, regime,
                        one=shift.ring_one() if isinstance(shift, XLaurent) else None)


def geometric(j, trunc, var="q", regime=INSIDE, coeff=None):
    """1/(1 - c*q^j) = sum_t c^t q^(t j) for j >= 1."""
    if j < 1:
        raise ValueError("geometric expects a positive q-power")
    c = {}
    acc = mpq(1) if coeff is None else coeff.ring_one() if isinstance(coeff, XLaurent) else mpq(1)
    e = 0
    while e < trunc:
        c[e] = acc
        if coeff is not None:
            acc = acc * coeff
        e += j
    return QSeries(c, trunc, var, regime, clean=False)


def ek_n(k, n, trunc, var="q", regime=INSIDE):
    """The weighted divisor-type sums sum_{s>=1} s^(k-1) q^(s(n+1)) / (1-q^s)."""
    if k not in (1, 2):
        raise ValueError("only weights k=1,2 are used")
    if regime == OUTSIDE:
        raise ValueError("E-sums require the |q|<1 regime")
    c = {}
    s = 1
    while s * (n + 1) < trunc:
        w = mpq(s) ** (k - 1)
        e = s * (n + 1)
        while e < trunc:
            c[e] = c.get(e, mpq(0)) + w
            e += s
        s += 1
    return QSeries(c, trunc, var, regime)


def e2_series(trunc, var="q", regime=INSIDE):
    """The weight-2 Eisenstein combination 1 - 24 * sum_s s q^s/(1-q^s)."""
    return QSeries.one(trunc, var, regime) - ek_n(2, 0, trunc, var, regime).scale(24)


def series_div(a, b, trunc=None):
    """a/b; pass trunc to expand exact-polynomial quotients as series."""
    if trunc is not None:
        a = a.truncate(trunc)
    return a / b


def subst_q_exp(a, order, var="h"):
    """Substitute q = e^h into an exactly known Laurent polynomial.

    Returns the h-series to O(h^(order+1)) with exact rational coefficients.
    A truncated (non-exact) series is rejected: its hidden tail would touch
    every h-order.
    """
    if not a.is_exact():
        raise ValueError("q -> e^h substitution needs an exactly known polynomial")
    n = order + 1
    out = [mpq(0)] * n
    for e, c in a.coeffs.items():
        # e^(e*h) = sum_j (e*h)^j / j!
        term = mpq(1)
        fact = mpq(1)
        for j in range(n):
            if j:
                fact *= j
                term *= e
            out[j] += c * term / fact
    return QSeries({j: v for j, v in enumerate(out) if v}, n, var, INSIDE)


def specialize_x(a, v):
    """Specialize the x-variable of an XQSeries.

    v may be 1, a rational, or the string "swap" for x -> 1/x.
    Returns a QSeries over the rationals (or a new XQSeries for "swap").
    """
    if v == "swap":
        return a.map_coeffs(lambda c: c.swap())
    vv = mpq(v)
    return a.map_coeffs(lambda c: c.eval_rational(vv) if isinstance(c, XLaurent) else c)


def x_swap(a):
    return specialize_x(a, "swap")


# ---------------------------------------------------------------------------
# serialization: line-oriented text
# ---------------------------------------------------------------------------

def _fmt_q(c):
    return f"{c.numerator}/{c.denominator}"


def dumps_series(a):
    """Serialize a QSeries/XQSeries.

    Header '#var=<v> #regime=<r> #trunc=<N|none>'; one 'exponent<TAB>value'
    line per term.  For x-valued coefficients the value is replaced by a
    '#var=x' marker followed by indented 'x-exponent<TAB>num/den' lines.
    """
    lines = [f"#var={a.var} #regime={a.regime} #trunc={'none' if a.trunc is None else a.trunc}"]
    for e in a.support():
        c = a.coeffs[e]
        if isinstance(c, XLaurent):
            lines.append(f"{e}\t#var=x")
            for d in sorted(c.coeffs):
                lines.append(f"\t{d}\t{_fmt_q(c.coeffs[d])}")
        else:
            lines.append(f"{e}\t{_fmt_q(c)}")
    return "\n".join(lines) + "\n"


def loads_series(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0]
    fields = dict(kv.split("=", 1) for kv in head.replace("#", "").split())
    trunc = None if fields["trunc"] == "none" else int(fields["trunc"])
    coeffs = {}
    i = 1
    while i < len(lines):
        ln = lines[i]
        if ln.startswith("\t"):
            raise ValueError(f"unexpected indented line: {ln!r}")
        e_str, val = ln.split("\t", 1)
        e = int(e_str)
        if val == "#var=x":
            xc = {}
            i += 1
            while i < len(lines) and lines[i].startswith("\t"):
                d_str, c_str = lines[i].strip().split("\t")
                num, den = c_str.split("/")
                xc[int(d_str)] = mpq(int(num), int(den))
                i += 1
            coeffs[e] = XLaurent(xc)
        else:
            num, den = val.split("/")
            coeffs[e] = mpq(int(num), int(den))
            i += 1
    return QSeries(coeffs, trunc, fields["var"], fields["regime"])
