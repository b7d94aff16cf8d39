"""Rational period ratios L(m,f) / ((2 pi i)^m c^{(-1)^m}) for Delta and f16.

c^{+-} = L(m_{+-}) / (2 pi i)^{m_{+-}} with m_+ = 2, m_- = 1. Rationals are read off by
Fraction.limit_denominator from the incomplete gamma series values.
"""
from fractions import Fraction

from mpmath import mp, mpf, pi

from hecke_values import L, delta_coeffs, eisenstein, mul

if __name__ == "__main__":
    mp.dps = 60
    N = 70
    delta = delta_coeffs(N)
    f16 = mul(delta, eisenstein(4, N), N)
    for c, k in ((delta, 12), (f16, 16)):
        vals = {m: L(c, k, mpf(m)) for m in range(1, k)}
        for m in range(1, k):
            base = 2 if m % 2 == 0 else 1
            # (2 pi i)^m / (2 pi i)^base is real: (-1)^((m - base)/2) (2 pi)^(m - base)
            scale = (-1) ** ((m - base) // 2) * (2 * pi) ** (m - base)
            r = vals[m] / (vals[base] * scale)
            q = Fraction(mp.nstr(r, 50, min_fixed=-100, max_fixed=100)).limit_denominator(10 ** 12)
            print(k, m, q, mp.nstr(abs(r - mpf(q.numerator) / q.denominator), 3))
