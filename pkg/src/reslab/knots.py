"""Exact knot-theoretic inputs for the two knots.

Cyclotomic-expansion coefficients, colored Jones polynomials, trivial-flat-
connection power series in h = 2*pi*i*tau (two independent routes), the loop
expansion in the meridian variable x, descendant Jones sums, and the
inverted twist-knot series.
"""

from __future__ import annotations

from functools import lru_cache

from gmpy2 import mpq

from .series import (QSeries, XLaurent, INSIDE, qs, xl, poch, subst_q_exp)

KNOTS = ("41", "52")


def _check_knot(knot):
    if knot not in KNOTS:
        raise ValueError(f"unknown knot {knot!r}; supported: {KNOTS}")


# ---------------------------------------------------------------------------
# cyclotomic (Habiro) coefficients
# ---------------------------------------------------------------------------

def qbinom(n, k):
    """Gaussian binomial as an exact polynomial."""
    if k < 0 or k > n:
        return QSeries.zero()
    return poch(n) / (poch(k) * poch(n - k))


@lru_cache(maxsize=None)
def habiro_52(n):
    """Cyclotomic coefficient of the 5_2 knot: an exact Laurent polynomial.

    (-1)^n q^(n(n+3)/2) sum_k q^(k(k+1)) binom(n,k)_q;  vanishes for n < 0.
    """
    if n < 0:
        return QSeries.zero()
    acc = QSeries.zero()
    for k in range(n + 1):
        acc = acc + QSeries.monomial(k * (k + 1)) * qbinom(n, k)
    return acc * QSeries.monomial(n * (n + 3) // 2, mpq(-1) ** n)


def habiro_52_recursion_residual(n):
    """H_(n+2) + q^(n+3)(1+q-q^(n+2)+q^(2n+4)) H_(n+1) + q^(2n+6)(1-q^(n+1)) H_n;
    vanishes for n >= 0."""
    co1 = (QSeries.monomial(n + 3) + QSeries.monomial(n + 4)
           - QSeries.monomial(2 * n + 5) + QSeries.monomial(3 * n + 7))
    co0 = QSeries.monomial(2 * n + 6) - QSeries.monomial(3 * n + 7)
    return habiro_52(n + 2) + co1 * habiro_52(n + 1) + co0 * habiro_52(n)


def habiro_41(n):
    """Cyclotomic coefficients of the figure-eight knot are all 1."""
    return QSeries.one() if n >= 0 else QSeries.zero()


# ---------------------------------------------------------------------------
# colored Jones and Kashaev invariants
# ---------------------------------------------------------------------------

def colored_jones(knot, N):
    """The N-colored Jones polynomial (unknot-normalized) as an exact
    Laurent polynomial:
    sum_k (-1)^k q^(-k(k+1)/2) (q^(1+N);q)_k (q^(1-N);q)_k [* H_k for 5_2]."""
    _check_knot(knot)
    if N < 1:
        raise ValueError("color N must be >= 1")
    acc = QSeries.zero()
    t = QSeries.one()
    for k in range(N):
        if k:
            t = t * (1 - QSeries.monomial(N + k)) * (1 - QSeries.monomial(k - N))
        term = QSeries.monomial(-k * (k + 1) // 2, mpq(-1) ** k) * t
        if knot == "52":
            term = term * habiro_52(k)
        acc = acc + term
    return acc


def eval_laurent_poly(a, q, ctx=None):
    """Numeric value of an exact Laurent polynomial at q (mpf/mpc)."""
    import mpmath as mp
    ctx = ctx or mp.mp
    val = ctx.mpc(0)
    for e, c in a.coeffs.items():
        val += ctx.mpf(int(c.numerator)) / int(c.denominator) * q ** e
    return val


def kashaev(knot, N, ctx=None):
    """Kashaev invariant: the colored Jones value at e^(2 pi i/N)."""
    import mpmath as mp
    ctx = ctx or mp.mp
    xi = ctx.expjpi(ctx.mpf(2) / N)
    return eval_laurent_poly(colored_jones(knot, N), xi, ctx)


def kashaev_41_sum(N, ctx=None):
    """Independent residue-sum formula
    sum_m (-1)^m xi^(-m(m+1)/2) prod_l (1-xi^l)^2, xi = e^(2 pi i/N)."""
    import mpmath as mp
    ctx = ctx or mp.mp
    xi = ctx.expjpi(ctx.mpf(2) / N)
    total = ctx.mpc(0)
    prod = ctx.mpc(1)
    for m in range(N):
        if m:
            prod *= (1 - xi ** m) ** 2
        total += (-1) ** m * xi ** (-m * (m + 1) / 2) * prod
    return total


# ---------------------------------------------------------------------------
# descendant Jones sums
# ---------------------------------------------------------------------------

def cyclotomic_weight(k, m=0):
    """c_k(x,q) q^(km) = (-1)^k q^(-k(k+1)/2+km) (qx;q)_k (q/x;q)_k,
    an exact (x,q)-Laurent polynomial."""
    t = QSeries.monomial(-k * (k + 1) // 2 + k * m, XLaurent.const(mpq(-1) ** k))
    for j in range(1, k + 1):
        f1 = QSeries({0: XLaurent.const(1), j: XLaurent.mono(1, -1)}, None)
        f2 = QSeries({0: XLaurent.const(1), j: XLaurent.mono(-1, -1)}, None)
        t = t * f1 * f2
    return t


def descendant_jones(knot, m, kmax):
    """Partial sum (k <= kmax) of the descendant cyclotomic expansion, an
    exact (x,q)-Laurent polynomial.

    At x = q^N (N <= kmax) the partial sum equals the full descendant sum,
    because the cyclotomic weights vanish for k >= N.  For 5_2 and m >= 0
    the summand q-valuation grows like k(m+1), so kmax acts as a series
    truncation; for m < 0 the partial sums are formal and only the x = q^N
    specializations are exact.
    """
    _check_knot(knot)
    acc = QSeries.zero()
    for k in range(kmax + 1):
        t = cyclotomic_weight(k, m)
        if knot == "52":
            t = t * habiro_52(k).map_coeffs(lambda c: XLaurent.const(c))
        acc = acc + t
    return acc


def specialize_x_to_qpow(a, N):
    """Substitute x -> q^N in an exact (x,q)-series."""
    out = {}
    for e, c in a.coeffs.items():
        for d, v in c.coeffs.items():
            ee = e + N * d
            out[ee] = out.get(ee, mpq(0)) + v
    return QSeries({e: v for e, v in out.items() if v}, a.trunc)


def _qx(e, d, c=1):
    return QSeries.monomial(e, XLaurent.mono(d, c))


def descendant_step_coeffs(m):
    """The six x-Laurent coefficient polynomials of the descendant recursion
    (order five, inhomogeneous): returns [A_0..A_5] with
    sum_j A_j(x, q) DJ^(m+j) = x^2."""
    A0 = ((QSeries.monomial(0, mpq(-1)) + QSeries.monomial(1 + m))
          * (QSeries.monomial(0, mpq(-1)) + QSeries.monomial(2 + m))
          ).map_coeffs(lambda c: XLaurent.mono(2) * c)
    # -(q^(2+m))(-1+q^(2+m)) * x * (1 + q + x + (1+q)x^2)
    inner1 = QSeries({0: xl({0: 1, 1: 1, 2: 1}), 1: xl({0: 1, 2: 1})}, None)
    A1 = (QSeries.monomial(2 + m, mpq(-1)) * (QSeries.monomial(0, mpq(-1)) + QSeries.monomial(2 + m))
          * inner1.map_coeffs(lambda c: XLaurent.mono(1) * c))
    inner2 = (QSeries({3 + m: xl({0: 1, 4: 1})}, None)
              + _qx(0, 1, -1) + _qx(2 + m, 1) + _qx(3 + m, 1)
              + _qx(0, 2, -2) + _qx(1, 2, -1) + _qx(2 + m, 2) + _qx(3 + m, 2, 2) + _qx(4 + m, 2)
              + _qx(0, 3, -1) + _qx(2 + m, 3) + _qx(3 + m, 3))
    A2 = QSeries.monomial(3 + m) * inner2
    inner3 = (QSeries({3 + m: xl({0: 1, 4: 1})}, None)
              + _qx(0, 1, -1) + _qx(3 + m, 1) + _qx(4 + m, 1)
              + _qx(0, 2, -1) + _qx(2 + m, 2) + _qx(3 + m, 2, 2) + _qx(4 + m, 2)
              + _qx(0, 3, -1) + _qx(3 + m, 3) + _qx(4 + m, 3))
    A3 = QSeries.monomial(4 + m, mpq(-1)) * inner3
    inner4 = (_qx(3 + m, 0) + _qx(4 + m, 0)
              + _qx(0, 1, -1) + _qx(4 + m, 1)
              + _qx(3 + m, 2) + _qx(4 + m, 2))
    A4 = QSeries.monomial(5 + m) * inner4.map_coeffs(lambda c: XLaurent.mono(1) * c)
    A5 = _qx(10 + 2 * m, 2, -1)
    return [A0, A1, A2, A3, A4, A5]


def descendant_rhs_raw(m):
    """The right side of the descendant recursion before simplification:
    x(q^(2+m)+q^(4+m) + (1-q^(1+m)-2q^(3+m)-q^(5+m))x + (q^(2+m)+q^(4+m))x^2) H_0
    + q^m x (1-x/q)(1-qx) H_1.  Simplifies to x^2 for the 5_2 coefficients."""
    h0 = habiro_52(0).map_coeffs(lambda c: XLaurent.const(c))
    h1 = habiro_52(1).map_coeffs(lambda c: XLaurent.const(c))
    p1 = (_qx(2 + m, 1) + _qx(4 + m, 1)
          + _qx(0, 2) + _qx(1 + m, 2, -1) + _qx(3 + m, 2, -2) + _qx(5 + m, 2, -1)
          + _qx(2 + m, 3) + _qx(4 + m, 3))
    p2 = (QSeries.monomial(m, XLaurent.mono(1))
          * (QSeries({0: XLaurent.const(1), -1: XLaurent.mono(1, -1)}, None))
          * (QSeries({0: XLaurent.const(1), 1: XLaurent.mono(1, -1)}, None)))
    return p1 * h0 + p2 * h1


def descendant_recursion_residual(m, kmax):
    """sum_j A_j DJ^(m+j) - x^2 on the k<=kmax partial sums (exact Laurent)."""
    co = descendant_step_coeffs(m)
    acc = QSeries.zero()
    for j in range(6):
        acc = acc + co[j] * descendant_jones("52", m + j, kmax)
    return acc - _qx(0, 2)


def kashaev_recursion_residual_52(m, kmax):
    """The x=1 specialization: the five convergent-member recursion with
    right side 1, applied to the x=1 partial sums.  Returns residual - 1."""
    co = descendant_step_coeffs(m)
    acc = QSeries.zero()
    for j in range(6):
        cj = QSeries({e: c.eval_rational(1) for e, c in co[j].coeffs.items()}, None)
        f = descendant_jones("52", m + j, kmax)
        fj = QSeries({e: c.eval_rational(1) for e, c in f.coeffs.items()}, None)
        acc = acc + cj * fj
    return acc - 1


# ---------------------------------------------------------------------------
# trivial-connection series
# ---------------------------------------------------------------------------

def phi0_series(knot, order, route="cyclotomic"):
    """Trivial-connection power series in h = 2*pi*i*tau, exact rationals.

    route="cyclotomic": image of the cyclotomic expansion under q -> e^h
    (the k-th summand has h-valuation 2k, so k <= order/2 terms suffice).
    route="interpolation": Vassiliev route via exact interpolation of the
    colored Jones coefficients in the color.
    """
    _check_knot(knot)
    if route == "interpolation":
        return _phi0_interpolation(knot, order)
    n = order + 1
    acc = QSeries.zero(n, var="h")
    ph = QSeries.one(n, var="h")
    ph_neg = QSeries.one(n, var="h")
    k = 0
    while 2 * k <= order:
        if k:
            f = subst_q_exp(1 - QSeries.monomial(k), n - 1)
            fneg = QSeries({e: c * mpq(-1) ** e for e, c in f.coeffs.items()}, f.trunc, "h")
            ph = (ph * f).truncate(n)
            ph_neg = (ph_neg * fneg).truncate(n)
        term = (ph * ph_neg).truncate(n)
        if knot == "52":
            term = (term * subst_q_exp(habiro_52(k), n - 1)).truncate(n)
        acc = acc + term
        k += 1
    return acc


def _phi0_interpolation(knot, order):
    hs = [subst_q_exp(colored_jones(knot, nn), order) for nn in range(1, order + 2)]
    out = {}
    for i in range(order + 1):
        vals = [h.coeffs.get(i, mpq(0)) for h in hs[: i + 1]]
        out[i] = _lagrange_at_zero(list(range(1, i + 2)), vals)
    return QSeries(out, order + 1, var="h")


def _lagrange_at_zero(xs, ys):
    total = mpq(0)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        w = mpq(1)
        for j, xj in enumerate(xs):
            if i != j:
                w *= mpq(-xj, xi - xj)
        total += yi * w
    return total


def vassiliev_table(knot, imax):
    """a_(i,j) for i <= imax, where J_n(e^h) = sum_(i,j) a_(i,j) n^j h^i."""
    hs = [subst_q_exp(colored_jones(knot, nn), imax) for nn in range(1, imax + 2)]
    table = {}
    for i in range(imax + 1):
        vals = [h.coeffs.get(i, mpq(0)) for h in hs[: i + 1]]
        coeffs = _newton_poly_coeffs(list(range(1, i + 2)), vals)
        for j, c in enumerate(coeffs):
            if c:
                table[(i, j)] = c
    return table


def _newton_poly_coeffs(xs, ys):
    """Exact coefficients (ascending) of the interpolating polynomial."""
    k = len(xs)
    dd = list(map(mpq, ys))
    for lvl in range(1, k):
        for i in range(k - 1, lvl - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl])
    coeffs = [mpq(0)] * k
    acc = [mpq(1)] + [mpq(0)] * (k - 1)
    for lvl in range(k):
        for idx in range(k):
            coeffs[idx] += dd[lvl] * acc[idx]
        if lvl + 1 < k:
            new = [mpq(0)] * k
            for idx in range(k - 1):
                new[idx + 1] += acc[idx]
                new[idx] -= xs[lvl] * acc[idx]
            acc = new
    return coeffs


ALEXANDER = {
    "41": xl({-1: -1, 0: 3, 1: -1}),
    "52": xl({-1: 2, 0: -3, 1: 2}),
}


def phi0_x_series(knot, loops, verify_extra=4):
    """Loop expansion of the trivial-connection series in (x, h).

    Returns a list of triples (P_l, Delta, 2l+1) with the l-th h-coefficient
    equal to P_l(x)/Delta(x)^(2l+1); Delta is the knot's normalized
    determinant polynomial (value 1 at x=1).  Solved exactly from the
    Vassiliev table via the diagonal resummation
    sum_k a_(l+k,k) h^k = P_l(e^h)/Delta(e^h)^(2l+1), with extra orders
    checked to confirm the polynomial ansatz.
    """
    _check_knot(knot)
    delta = ALEXANDER[knot]
    out = []
    for ell in range(loops + 1):
        pl = None
        for dmax in range(ell + 1, 3 * ell + 4):
            kmax = 2 * dmax + 1 + verify_extra
            table = vassiliev_table(knot, ell + kmax)
            diag = [table.get((ell + k, k), mpq(0)) for k in range(kmax + 1)]
            dh = subst_q_exp(QSeries(dict(delta.coeffs), None, "q"), kmax)
            dpow = dh.pow(2 * ell + 1, trunc=kmax + 1)
            rhs = (QSeries({k: v for k, v in enumerate(diag)}, kmax + 1, "h") * dpow).truncate(kmax + 1)
            try:
                pl = _solve_exp_poly(rhs, dmax)
                break
            except ValueError:
                continue
        if pl is None:
            raise ValueError(f"no Laurent numerator of width <= {3 * ell + 3} at loop order {ell}")
        out.append((pl, delta, 2 * ell + 1))
    return out


def _solve_exp_poly(rhs, dmax):
    """Find Laurent P with P(e^h) = rhs, exponents in [-dmax, dmax]."""
    n = 2 * dmax + 1
    rows = []
    vals = []
    fact = mpq(1)
    for i in range(n):
        if i:
            fact *= i
        rows.append([mpq(d) ** i / fact for d in range(-dmax, dmax + 1)])
        vals.append(rhs.coeffs.get(i, mpq(0)))
    sol = _solve_linear(rows, vals)
    p = XLaurent({d: c for d, c in zip(range(-dmax, dmax + 1), sol)})
    check = subst_q_exp(QSeries(dict(p.coeffs), None, "q"), rhs.trunc - 1)
    for i in range(rhs.trunc):
        if check.coeffs.get(i, mpq(0)) != rhs.coeffs.get(i, mpq(0)):
            raise ValueError("loop-coefficient ansatz failed verification")
    return p


def _solve_linear(rows, vals):
    n = len(rows)
    a = [row[:] + [v] for row, v in zip(rows, vals)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col])
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


# ---------------------------------------------------------------------------
# inverted twist-knot series
# ---------------------------------------------------------------------------

def inverted_habiro_twist(p, trunc):
    """Inverted cyclotomic series of the twist knot with p full twists,
    pole-cleared: the full series is  returned_value / ((1-x)(1-1/x)).

    The leading (x^(1/2)-x^(-1/2))^(-2) = -1/((1-x)(1-1/x)) supplies the
    overall minus sign.
    """
    if p < 2:
        raise ValueError("twist parameter p >= 2")
    from .wronskian41 import _inv_poch_mono
    work = trunc + 4
    acc = QSeries.zero(work)
    n = 0
    while n * (n + 1) // 2 < work:
        inner = QSeries.zero(work)
        k = n
        while True:
            e = (n * (n + 1) // 2 + (2 * p + 1) * k * (k + 1) // 2
                 - (n + k) * (n + k + 1) // 2 - n)
            if e - k - 1 >= work and k > n:
                break
            if k > 400:
                raise RuntimeError("summation failed to terminate")
            w = QSeries.monomial(k, trunc=work) - QSeries.monomial(-k - 1, trunc=work)
            t = (QSeries.monomial(e, trunc=work) * w
                 * (poch(n + k, trunc=work) / (poch(n, trunc=work) * poch(k - n, trunc=work))))
            inner = inner + t.truncate(work)
            k += 1
        pref = QSeries.monomial(n * (n + 1) // 2, XLaurent.const(1), trunc=work)
        t = pref * _inv_poch_mono(1, mpq(1), 0, n, work) * _inv_poch_mono(-1, mpq(1), 0, n, work)
        acc = acc + (t * inner.map_coeffs(lambda c: XLaurent.const(c))).truncate(work)
        n += 1
    return acc.scale(-1).truncate(trunc)
