#pragma once

#include "qspt/truncated_series.hpp"

namespace qspt {

/* Generating functions for the smallest-parts counting family. All
 * coefficients are non-negative integers; the Rational carrier is shared
 * with the rest of the series layer. */

/* q^j / ((1-q^j)^2 (q^{j+1}; q)_inf): coefficient of q^n counts total
 * appearances of the smallest part over partitions of n with smallest
 * part exactly j. */
QSeries spt_j_series(int j, int order);

/* sum_{s>=1} (q^s + 2q^{2s} + ...) / ((1-q^{s+1}) ... (1-q^{s+j})):
 * appearances of the smallest part over partitions whose parts all lie
 * within j of the smallest. */
QSeries spt_j_star_series(int j, int order);

/* Product of the two series above; equivalently the convolution
 * spt_j_plus(n) = sum_{k<=n} spt_j_star(k) spt_j(n-k). */
QSeries spt_j_plus_series(int j, int order);

/* SPT_plus = sum_{j>=1} spt_j_plus. Terms with j > order-1 start beyond
 * the truncation order and are omitted. */
QSeries spt_plus_series(int order);

/* sum_{j>=1} spt_j: the classic total smallest-parts count spt(n). */
QSeries spt_total_series(int order);

/* The same SPT_plus series as the coupled double sum
 *   (1/(q;q)_inf) sum_{n1,n2>=1} (q)_{n1-1}^2 (q)_{n2-1}^2 q^{n1+n2}
 *                                / ((q)_{n1} (q)_{n2} (q)_{n1+n2}),
 * cut off at n1 + n2 <= order (each term starts at q^{n1+n2}). Quadratic
 * in the number of index pairs; intended for moderate orders. */
QSeries spt_plus_double_sum_series(int order);

}
