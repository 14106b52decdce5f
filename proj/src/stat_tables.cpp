#include "qspt/stat_tables.hpp"

#include <stdexcept>

#include "qspt/parallel.hpp"
#include "qspt/qseries.hpp"

namespace qspt {

const LaurentPoly& StatTable::row(int n) const
{
	if (n < 0 || n > upto) throw std::out_of_range("StatTable: n out of range");
	return rows[static_cast<size_t>(n)];
}

namespace {

const LaurentPoly kZUp = LaurentPoly::monomial(1, 1);
const LaurentPoly kZDown = LaurentPoly::monomial(1, -1);

/* One term of the rank generating function at the given window:
 * 1 / ((z q; q)_k (z^{-1} q; q)_k) to the window order. */
BvSeries rank_term(int k, int window)
{
	BvSeries t = BvSeries::one(window);
	for (int i = 1; i <= std::min(k, window); ++i) {
		t.div_one_minus(kZUp, i);
		t.div_one_minus(kZDown, i);
	}
	return t;
}

StatTable from_series(BvSeries s)
{
	StatTable t;
	t.upto = s.order();
	t.rows.reserve(static_cast<size_t>(t.upto) + 1);
	for (int n = 0; n <= t.upto; ++n) t.rows.push_back(s[n]);
	return t;
}

}

StatTable rank_table(int upto)
{
	if (upto < 0) throw std::invalid_argument("rank_table: upto must be non-negative");
	BvSeries acc(upto);

	/* Terms k with k^2 <= upto contribute; each is independent. */
	int terms = 0;
	while (static_cast<long>(terms + 1) * (terms + 1) <= upto) ++terms;

	if (parallel::worthwhile(terms) && terms > 1) {
#pragma omp parallel
		{
			BvSeries local(upto);
#pragma omp for schedule(dynamic, 1) nowait
			for (int k = 1; k <= terms; ++k)
				local.add_shifted(rank_term(k, upto - k * k), k * k);
#pragma omp critical
			{
				acc = acc + local;
			}
		}
	} else {
		for (int k = 1; k <= terms; ++k)
			acc.add_shifted(rank_term(k, upto - k * k), k * k);
	}
	acc.set(0, LaurentPoly::one()); // k = 0 term
	return from_series(std::move(acc));
}

StatTable crank_table(int upto)
{
	if (upto < 0) throw std::invalid_argument("crank_table: upto must be non-negative");
	BvSeries s = BvSeries::one(upto);
	for (int k = 1; k <= upto; ++k) {
		s.mul_one_minus(LaurentPoly::one(), k);
		s.div_one_minus(kZUp, k);
		s.div_one_minus(kZDown, k);
	}
	return from_series(std::move(s));
}

Rational rank_moment(int k, int n, const StatTable& table)
{
	return Rational(table.row(n).power_moment(k));
}

Rational crank_moment(int k, int n, const StatTable& table)
{
	return Rational(table.row(n).power_moment(k));
}

Rational generalized_binomial(long x, int k)
{
	if (k < 0) throw std::invalid_argument("generalized_binomial: k must be non-negative");
	mpz_class num = 1;
	mpz_class fact = 1;
	for (int i = 0; i < k; ++i) {
		num *= mpz_class(x - i);
		fact *= i + 1;
	}
	mpz_class q;
	mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
	return Rational(q);
}

namespace {

Rational symmetrized_moment(int k, int n, const StatTable& table)
{
	if (k < 1) throw std::invalid_argument("symmetrized moment: k must be >= 1");
	const LaurentPoly& row = table.row(n);
	const long shift = (k - 1) / 2;
	Rational acc;
	if (row.is_zero()) return acc;
	for (long j = row.lo(); j <= row.hi(); ++j) {
		const mpz_class& c = row.coeff(j);
		if (sgn(c) == 0) continue;
		acc += generalized_binomial(j + shift, k) * Rational(c);
	}
	return acc;
}

}

Rational eta_k(int k, int n, const StatTable& rank) { return symmetrized_moment(k, n, rank); }

Rational mu_k(int k, int n, const StatTable& crank) { return symmetrized_moment(k, n, crank); }

QSeries eta2k_gf(int k, int order, SignVariant variant)
{
	if (k < 1) throw std::invalid_argument("eta2k_gf: k must be >= 1");
	QSeries inner(order);
	for (int n = 1;; ++n) {
		/* Positive branch exponent n(3n+1)/2 + kn; the folded negative
		 * branch has exponent n(3n-1)/2 + kn. Both carry the same sign. */
		const long e_neg = static_cast<long>(n) * (3L * n - 1) / 2 + static_cast<long>(k) * n;
		const long e_pos = e_neg + n;
		if (e_neg > order) break;
		const int sign = (variant == SignVariant::printed) ? (n % 2 ? -1 : 1)
								   : (n % 2 ? 1 : -1);
		for (const long e : {e_pos, e_neg}) {
			if (e > order) continue;
			QSeries term = QSeries::one(order - static_cast<int>(e));
			for (int rep = 0; rep < 2 * k; ++rep)
				term.div_one_minus(Rational::one(), n);
			inner.add_scaled_shifted(term, Rational(sign), static_cast<int>(e));
		}
	}
	return euler_p(order) * inner;
}

}
