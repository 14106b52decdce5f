#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "qspt/oracle.hpp"
#include "qspt/qseries.hpp"

using namespace qspt;
using test::from_ints;

TEST_CASE("finite Pochhammer basics")
{
	CHECK(finite_pochhammer(1, 2, 10) == from_ints({1, -1, -1, 1, 0, 0, 0, 0, 0, 0, 0}));
	CHECK(finite_pochhammer(1, 0, 10) == QSeries::one(10)); // empty product
	// (q^2;q)_3 = (1-q^2)(1-q^3)(1-q^4)
	CHECK(finite_pochhammer(2, 3, 9) == from_ints({1, 0, -1, -1, -1, 1, 1, 1, 0, -1}));
}

TEST_CASE("finite Pochhammer recurrence")
{
	for (int m = 1; m <= 5; ++m) {
		for (int n = 0; n <= 20; ++n) {
			QSeries extended = finite_pochhammer(m, n, 30);
			extended.mul_one_minus(Rational::one(), m + n);
			CHECK(finite_pochhammer(m, n + 1, 30) == extended);
		}
	}
}

TEST_CASE("infinite Pochhammer: pentagonal pattern and truncation edge")
{
	CHECK(infinite_pochhammer(1, 7) == from_ints({1, -1, -1, 0, 0, 1, 0, 1}));
	CHECK(infinite_pochhammer(12, 11) == QSeries::one(11)); // all factors beyond order
	CHECK(infinite_pochhammer(2, 10)[1] == Rational::zero());
	CHECK(infinite_pochhammer(1, 25) == finite_pochhammer(1, 25, 25));
}

TEST_CASE("euler_p counts partitions")
{
	const QSeries p = euler_p(40);
	CHECK(p[0] == Rational(1));
	CHECK(p[10] == Rational(42));
	for (int n = 0; n <= 40; ++n) CHECK(p[n] == Rational(count_partitions(n)));
}

TEST_CASE("lambert_phi gives divisor power sums")
{
	const QSeries phi1 = lambert_phi(1, 200);
	const QSeries phi3 = lambert_phi(3, 200);
	CHECK(test::int_prefix(phi1, 5) == std::vector<long>{0, 1, 3, 4, 7});
	CHECK(phi3[2] == Rational(9));
	CHECK(lambert_phi(5, 30)[1] == Rational(1));
	for (int n = 1; n <= 200; ++n) {
		long s1 = 0, s3 = 0;
		for (int d = 1; d <= n; ++d) {
			if (n % d) continue;
			s1 += d;
			s3 += static_cast<long>(d) * d * d;
		}
		CHECK(phi1[n] == Rational(s1));
		CHECK(phi3[n] == Rational(s3));
	}
}

TEST_CASE("delta_q on P")
{
	const QSeries p = euler_p(50);
	CHECK(delta_q(p) == p * lambert_phi(1, 50));

	const QSeries c = QSeries::constant(Rational(5), 10);
	CHECK(delta_q(c).is_zero());

	const QSeries dd = delta_q(delta_q(p));
	CHECK(test::int_prefix(dd, 4) == std::vector<long>{0, 1, 8, 27}); // n^2 p(n)
}

TEST_CASE("smallest_part_weight")
{
	CHECK(smallest_part_weight(2, 8) == from_ints({0, 0, 1, 0, 2, 0, 3, 0, 4}));
	QSeries one_minus_q(20);
	one_minus_q.set(0, Rational(1));
	one_minus_q.set(1, Rational(-1));
	CHECK(smallest_part_weight(1, 20) == delta_q(one_minus_q.inverse()));
	CHECK(smallest_part_weight(9, 8).is_zero()); // j beyond the order
}
