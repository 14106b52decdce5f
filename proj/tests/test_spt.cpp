#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "qspt/oracle.hpp"
#include "qspt/qseries.hpp"
#include "qspt/spt_series.hpp"

using namespace qspt;

TEST_CASE("spt_j series against the oracle")
{
	const int upto = 35;
	for (int j = 1; j <= 6; ++j) {
		const QSeries s = spt_j_series(j, upto);
		for (int n = 0; n <= upto; ++n)
			CHECK(s[n] == Rational(oracle_spt_j(j, n)));
	}
	CHECK(test::int_prefix(spt_j_series(1, 10), 4) == std::vector<long>{0, 1, 2, 4});
	CHECK(spt_j_series(2, 10)[3] == Rational(0));
	for (int j = 1; j <= 8; ++j) CHECK(spt_j_series(j, 10)[j] == Rational(1));
}

TEST_CASE("spt_j_star series against the oracle")
{
	const int upto = 35;
	for (int j = 1; j <= 6; ++j) {
		const QSeries s = spt_j_star_series(j, upto);
		for (int n = 0; n <= upto; ++n)
			CHECK(s[n] == Rational(oracle_spt_j_star(j, n)));
	}
	CHECK(test::int_prefix(spt_j_star_series(1, 10), 4) == std::vector<long>{0, 1, 3, 5});
	CHECK(spt_j_star_series(2, 10)[2] == Rational(3));
	for (int j = 1; j <= 6; ++j) CHECK(spt_j_star_series(j, 10)[1] == Rational(1));
}

TEST_CASE("spt_j_plus is the convolution of star and plain")
{
	const int upto = 30;
	for (int j = 1; j <= 4; ++j) {
		const QSeries plus = spt_j_plus_series(j, upto);
		for (int n = 0; n <= upto; ++n) {
			long long conv = 0;
			for (int m = 0; m <= n; ++m)
				conv += oracle_spt_j_star(j, m) * oracle_spt_j(j, n - m);
			CHECK(plus[n] == Rational(conv));
		}
	}
	CHECK(spt_j_plus_series(1, 10)[3] == Rational(5));
	CHECK(spt_j_plus_series(2, 10)[4] == Rational(3));
	for (int j = 1; j <= 5; ++j) {
		const QSeries plus = spt_j_plus_series(j, 12);
		for (int n = 0; n <= std::min(j, 12); ++n) CHECK(plus[n] == Rational(0));
	}
}

TEST_CASE("spt_plus matches the literal sum of spt_j_plus terms")
{
	const int order = 60;
	const QSeries fast = spt_plus_series(order);
	QSeries sum(order);
	for (int j = 1; j <= order - 1; ++j) sum = sum + spt_j_plus_series(j, order);
	CHECK(fast == sum);
	CHECK(fast[0] == Rational(0));
	CHECK(fast[1] == Rational(0));
	CHECK(test::int_prefix(fast, 5) == std::vector<long>{0, 0, 1, 6, 19});
}

TEST_CASE("double-sum form agrees with the product form")
{
	const int order = 60;
	const QSeries ds = spt_plus_double_sum_series(order);
	CHECK(ds[1] == Rational(0));
	CHECK(ds[2] == Rational(1));
	CHECK(ds == spt_plus_series(order));
}

TEST_CASE("spt_total sums the spt_j family")
{
	const int upto = 35;
	const QSeries total = spt_total_series(upto);
	for (int n = 1; n <= upto; ++n) CHECK(total[n] == Rational(oracle_spt(n)));
}

TEST_CASE("raising the order never changes retained coefficients")
{
	const int lo = 50, hi = 67;
	CHECK(spt_plus_series(hi).truncated(lo) == spt_plus_series(lo));
	CHECK(spt_plus_double_sum_series(hi).truncated(lo) == spt_plus_double_sum_series(lo));
	CHECK(spt_j_star_series(3, hi).truncated(lo) == spt_j_star_series(3, lo));
	CHECK(spt_j_series(3, hi).truncated(lo) == spt_j_series(3, lo));
	CHECK(spt_total_series(hi).truncated(lo) == spt_total_series(lo));
}

TEST_CASE("all spt coefficients are non-negative integers")
{
	for (const QSeries& s : {spt_plus_series(50), spt_total_series(50),
				 spt_j_series(4, 50), spt_j_star_series(4, 50)}) {
		for (int n = 0; n <= s.order(); ++n) {
			CHECK(s[n].is_integer());
			CHECK(s[n].is_nonnegative());
		}
	}
}
