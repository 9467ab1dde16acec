import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from reslab.series import (
    QSeries, XLaurent, XFrac, INSIDE, OUTSIDE,
    poch, poch_inf, prod_factors, geometric, ek_n, e2_series,
    series_div, subst_q_exp, specialize_x, dumps_series, loads_series, qs, xl,
)

# ---------------------------------------------------------------------------
# independent oracles (naive dense polynomial arithmetic, no reslab types)
# ---------------------------------------------------------------------------

def dense_mul(a, b, n):
    out = [mpq(0)] * n
    for i, x in enumerate(a):
        if i >= n or not x:
            continue
        for j, y in enumerate(b):
            if i + j >= n:
                break
            out[i + j] += x * y
    return out

def dense_poch(m, n):
    """(q;q)_m as a dense list of length n."""
    out = [mpq(0)] * n
    out[0] = mpq(1)
    for j in range(1, m + 1):
        f = [mpq(0)] * n
        f[0] = mpq(1)
        if j < n:
            f[j] = mpq(-1)
        out = dense_mul(out, f, n)
    return out

def pentagonal_euler(n):
    """(q;q)_inf via the pentagonal number series."""
    out = [mpq(0)] * n
    k = 0
    while True:
        done = True
        for kk in (k, -k) if k else (0,):
            e = kk * (3 * kk - 1) // 2
            if e < n:
                out[e] += mpq(-1) ** kk
                done = False
        if done and k > 0:
            break
        k += 1
    return out

def partition_counts(n):
    p = [0] * n
    p[0] = 1
    for part in range(1, n):
        for tot in range(part, n):
            p[tot] += p[tot - part]
    return p

# ---------------------------------------------------------------------------

N = 40

def test_poch_trivial():
    assert poch(0) == QSeries.one()
    p2 = poch(2)
    assert p2 == qs({0: 1, 1: -1, 2: -1, 3: 1})

def test_poch_against_naive_product():
    got = poch(5, trunc=N)
    want = dense_poch(5, N)
    for e in range(N):
        assert got.coeffs.get(e, 0) == want[e]

def test_poch_inf_pentagonal():
    got = poch_inf(60)
    want = pentagonal_euler(60)
    for e in range(60):
        assert got.coeffs.get(e, 0) == want[e]

def test_poch_inf_zero_shift():
    assert poch_inf(20, shift=0) == QSeries.one(20)

def test_poch_inf_outside_rejected():
    with pytest.raises(ValueError):
        poch_inf(10, regime=OUTSIDE)

def test_partition_generating_series():
    inv = series_div(QSeries.one(30), poch_inf(30))
    p = partition_counts(30)
    for e in range(30):
        assert inv.coeffs.get(e, 0) == p[e]

def test_theta_triple_product():
    # (q;q)_inf (qx;q)_inf (x^-1;q)_inf = sum_{n in Z} (-1)^n q^(n(n+1)/2) x^n
    n = 30
    a = poch_inf(n, shift=XLaurent.const(1))
    b = poch_inf(n, shift=XLaurent.mono(1))
    cc = poch_inf(n, shift=XLaurent.mono(-1)) * QSeries({0: xl({0: 1, -1: -1})}, None)
    prod = a * b * cc
    want = {}
    s = 0
    while s * (s + 1) // 2 < n:
        for k in {s, -s - 1}:
            e = k * (k + 1) // 2
            if e < n:
                want[e] = want.get(e, XLaurent()) + XLaurent.mono(k, mpq(-1) ** k)
        s += 1
    for e in range(n):
        assert prod.coeffs.get(e, XLaurent()) == want.get(e, XLaurent()), e

def test_ek_n_direct_sum():
    # E_1^(0) via the expanded double sum q^s/(1-q^s)
    n = 30
    want = [mpq(0)] * n
    for s in range(1, n):
        for t in range(s, n, s):
            want[t] += 1
    got = ek_n(1, 0, n)
    for e in range(n):
        assert got.coeffs.get(e, 0) == want[e]
    # first terms: q + 2q^2 + 2q^3 + 3q^4
    assert [got.coeffs.get(e, 0) for e in range(5)] == [0, 1, 2, 2, 3]

def test_ek_n_valuation():
    for nn in range(4):
        assert ek_n(1, nn, 25).valuation() == nn + 1

def test_e2_series():
    got = e2_series(10)
    assert [got.coeffs.get(e, 0) for e in range(4)] == [1, -24, -72, -96]

def test_series_div_roundtrip():
    a = qs({-1: 2, 0: 1, 3: -5})
    b = qs({0: 3, 1: 1, 2: 7})
    assert (a * b) / b == a

def test_geometric_inverse():
    g = geometric(1, 25)
    assert g * qs({0: 1, 1: -1}, 25) == QSeries.one(25)

def test_euler_identity():
    # sum_n q^(n^2) / (q;q)_n^2 = 1/(q;q)_inf
    n = 60
    acc = QSeries.zero(n)
    k = 0
    while k * k < n:
        term = series_div(QSeries.monomial(k * k, trunc=n), poch(k, trunc=n).pow(2, trunc=n))
        acc = acc + term
        k += 1
    rhs = series_div(QSeries.one(n), poch_inf(n))
    assert acc.eq_to_order(rhs)

def test_subst_q_exp_basics():
    h = subst_q_exp(qs({1: 1}), 4)
    assert [h.coeffs.get(e, 0) for e in range(5)] == [1, 1, mpq(1, 2), mpq(1, 6), mpq(1, 24)]
    p1 = subst_q_exp(poch(1), 4)
    assert [p1.coeffs.get(e, 0) for e in range(3)] == [0, -1, mpq(-1, 2)]

def test_subst_q_exp_poch_leading():
    # (q;q)_n = prod (1 - e^(jh)) has h-valuation n with leading (-1)^n n!
    fact = 1
    for n in range(1, 6):
        fact *= n
        h = subst_q_exp(poch(n), n + 1)
        for e in range(n):
            assert h.coeffs.get(e, 0) == 0
        assert h.coeffs[n] == mpq(-1) ** n * fact

def test_subst_q_exp_is_ring_hom():
    a = poch(3)
    b = qs({0: 2, 1: -1, 4: 3})
    k = 8
    lhs = subst_q_exp(a * b, k)
    rhs = (subst_q_exp(a, k) * subst_q_exp(b, k)).truncate(k + 1)
    assert lhs.eq_to_order(rhs)

def test_subst_q_exp_rejects_truncated():
    with pytest.raises(ValueError):
        subst_q_exp(poch_inf(10), 4)

def test_specialize_x():
    a = QSeries({0: xl({1: 1, -1: 1}), 2: xl({0: 3, 2: -1})}, 5)
    at1 = specialize_x(a, 1)
    assert at1.coeffs[0] == 2 and at1.coeffs[2] == 2
    swapped = specialize_x(a, "swap")
    assert swapped.coeffs[2] == xl({0: 3, -2: -1})
    assert specialize_x(swapped, "swap").coeffs[2] == a.coeffs[2]

def test_xlaurent_divexact():
    p = xl({0: 2, 1: -3, 2: 1})       # (1-x)(2-x)
    assert p.divexact(xl({0: 1, 1: -1})) == xl({0: 2, 1: -1})
    assert p.divexact(xl({0: 1, 1: 1})) is None

def test_xfrac_reduction_and_to_laurent():
    # (1-x^2)/(1-x) = 1+x
    f = XFrac(xl({0: 1, 2: -1}), xl({0: 1, 1: -1}))
    assert f.to_laurent() == xl({0: 1, 1: 1})
    g = XFrac(xl({0: 1}), xl({0: 1, 1: 1}))
    h = g + XFrac(xl({1: 1}), xl({0: 1, 1: 1}))
    assert h.to_laurent() == xl({0: 1})

def test_serialization_roundtrip():
    a = qs({-2: mpq(3, 7), 0: 1, 5: -4}, trunc=11)
    assert loads_series(dumps_series(a)) == a
    b = QSeries({0: xl({-1: 1, 2: mpq(5, 3)}), 3: xl({0: -2})}, 9)
    b2 = loads_series(dumps_series(b))
    assert b2.trunc == 9 and b2.coeffs[0] == b.coeffs[0] and b2.coeffs[3] == b.coeffs[3]

# -- property tests ---------------------------------------------------------

small_q = st.builds(mpq, st.integers(-9, 9), st.integers(1, 9))

@st.composite
def small_series(draw):
    n = draw(st.integers(0, 5))
    coeffs = {draw(st.integers(-4, 8)): draw(small_q) for _ in range(n)}
    return QSeries(coeffs, trunc=12)

@settings(max_examples=60, deadline=None)
@given(small_series(), small_series())
def test_add_sub_roundtrip(a, b):
    assert ((a + b) - b).eq_to_order(a)

@settings(max_examples=60, deadline=None)
@given(small_series(), small_series(), small_series())
def test_mul_distributes(a, b, c):
    assert (a * (b + c)).eq_to_order(a * b + a * c)

@settings(max_examples=40, deadline=None)
@given(small_series())
def test_mul_div_roundtrip(a):
    b = qs({0: 3, 1: -2, 2: 1}, trunc=12)
    assert ((a * b) / b).eq_to_order(a)
