#pragma once

#include "qspt/truncated_series.hpp"

namespace qspt {

/* Standard q-series constructors over exact rationals. Convention used
 * throughout: (X; q)_n = prod_{k=0}^{n-1} (1 - X q^k), n factors, so
 * (X; q)_0 = 1; the infinite symbol drops factors beyond the truncation
 * order, which cannot affect retained coefficients. */

/* (q^m; q)_n truncated. */
QSeries finite_pochhammer(int m, int n, int order);

/* (q^m; q)_infinity truncated. */
QSeries infinite_pochhammer(int m, int order);

/* prod_{k=0}^{n-1} (1 - c q^{t+k}) for a rational constant c, t >= 0. */
QSeries pochhammer(const Rational& c, int t, int n, int order);

/* prod_{k>=0} (1 - c q^{t+k}) truncated; requires t >= 1. */
QSeries pochhammer_inf(const Rational& c, int t, int order);

/* P = 1/(q; q)_infinity: the coefficient of q^n is p(n). */
QSeries euler_p(int order);

/* Phi_i = sum_{n>=1} n^i q^n / (1 - q^n): coefficient of q^N is the
 * divisor power sum sum_{d | N} d^i. Requires i >= 1. */
QSeries lambert_phi(int i, int order);

/* q^j/(1-q^j)^2 = q^j + 2 q^{2j} + 3 q^{3j} + ...: the coefficient of
 * q^{jm} is m. Requires j >= 1. */
QSeries smallest_part_weight(int j, int order);

}
