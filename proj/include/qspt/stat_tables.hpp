#pragma once

#include <vector>

#include "qspt/laurent.hpp"
#include "qspt/truncated_series.hpp"

namespace qspt {

using BvSeries = Series<LaurentPoly>;

/* Per-n tables of a partition statistic: row n is a Laurent polynomial in z
 * whose coefficient at z^m counts the partitions of n with statistic m. */
struct StatTable {
	int upto = -1;
	std::vector<LaurentPoly> rows;

	const LaurentPoly& row(int n) const;
	mpz_class count(int m, int n) const { return row(n).coeff(m); }
};

/* Rank counts N(m, n) for n <= upto, from the bivariate generating function
 * sum_{k>=0} q^{k^2} / ((z q; q)_k (z^{-1} q; q)_k). */
StatTable rank_table(int upto);

/* Crank counts M(m, n) in the generating-function convention
 * (q; q)_inf / ((z q; q)_inf (z^{-1} q; q)_inf). Row n = 1 is the familiar
 * anomaly z - 1 + z^{-1}; every other row matches the combinatorial crank. */
StatTable crank_table(int upto);

/* N_k(n) = sum_m m^k N(m, n); same shape for the crank. Any k >= 0 is
 * accepted (odd moments vanish by row symmetry). Throws std::out_of_range
 * when n exceeds the table. */
Rational rank_moment(int k, int n, const StatTable& table);
Rational crank_moment(int k, int n, const StatTable& table);

/* Falling-factorial binomial x(x-1)...(x-k+1)/k!, defined for any integer
 * upper argument; always integer-valued. */
Rational generalized_binomial(long x, int k);

/* k-th symmetrized rank moment: sum_j binom(j + floor((k-1)/2), k) N(j, n).
 * mu_k is the crank analogue over M(j, n). */
Rational eta_k(int k, int n, const StatTable& rank);
Rational mu_k(int k, int n, const StatTable& crank);

enum class SignVariant { printed, corrected };

/* Generating function of the 2k-th symmetrized rank moment:
 *   (1/(q;q)_inf) sum_{n != 0} eps(n) q^{n(3n+1)/2 + kn} / (1 - q^n)^{2k},
 * with eps(n) = (-1)^n for the printed variant and (-1)^{n-1} for the
 * corrected one. The corrected variant matches eta_k(2k, n); the printed
 * one is its negation. Negative-n terms are folded to positive n via
 * (1 - q^{-n})^{2k} = q^{-2kn} (1 - q^n)^{2k}. */
QSeries eta2k_gf(int k, int order, SignVariant variant);

}
