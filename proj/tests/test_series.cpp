#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "helpers.hpp"
#include "qspt/qseries.hpp"

using namespace qspt;
using test::from_ints;
using test::random_series;

TEST_CASE("addition and cancellation")
{
	const QSeries a = from_ints({1, 1});  // 1 + q
	const QSeries b = from_ints({1, -1}); // 1 - q
	CHECK(a + b == from_ints({2, 0}));

	const QSeries zero(1);
	CHECK(a + zero == a);
}

TEST_CASE("binary operations take the minimum order")
{
	const QSeries a(10);
	const QSeries b(20);
	CHECK((a + b).order() == 10);
	CHECK((a * b).order() == 10);
	CHECK((a - b).order() == 10);
}

TEST_CASE("phi1 + phi1 doubles the divisor sums")
{
	const QSeries twice = lambert_phi(1, 50) + lambert_phi(1, 50);
	for (int n = 1; n <= 50; ++n) {
		long sigma = 0; // brute-force divisor sum
		for (int d = 1; d <= n; ++d)
			if (n % d == 0) sigma += d;
		CHECK(twice[n] == Rational(2 * sigma));
	}
}

TEST_CASE("geometric series inverts (1 - q)")
{
	QSeries geo(30);
	for (int n = 0; n <= 30; ++n) geo.set(n, Rational(1));
	CHECK(from_ints({1, -1}) * geo == QSeries::one(1));
	CHECK(from_ints({1, -1}).inverse().first_difference(geo) == std::nullopt);
}

TEST_CASE("P times (q;q)_inf is 1")
{
	const QSeries p = euler_p(50);
	const QSeries eulerprod = infinite_pochhammer(1, 50);
	CHECK(p * eulerprod == QSeries::one(50));
}

TEST_CASE("phi1 squared at q^4")
{
	const QSeries sq = lambert_phi(1, 10) * lambert_phi(1, 10);
	CHECK(sq[4] == Rational(17)); // (q + 3q^2 + 4q^3 + 7q^4)^2
}

TEST_CASE("inverse of the Euler product gives partition numbers")
{
	const QSeries p = infinite_pochhammer(1, 5).inverse();
	CHECK(test::int_prefix(p, 6) == std::vector<long>{1, 1, 2, 3, 5, 7});
}

TEST_CASE("non-unit series cannot be inverted")
{
	QSeries s(5);
	s.set(1, Rational(1));
	CHECK_THROWS_AS(s.inverse(), std::domain_error);
}

TEST_CASE("ring axiom spot checks on random series")
{
	std::mt19937 rng(12345);
	for (int rep = 0; rep < 40; ++rep) {
		const int order = 1 + static_cast<int>(rng() % 20);
		const QSeries a = random_series(rng, order, false);
		const QSeries b = random_series(rng, order, false);
		const QSeries c = random_series(rng, order, false);
		CHECK((a + b) + c == a + (b + c));
		CHECK(a + b == b + a);
		CHECK(a * b == b * a);
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
	}
}

TEST_CASE("random unit series: a * a^{-1} = 1")
{
	std::mt19937 rng(777);
	for (int rep = 0; rep < 25; ++rep) {
		const int order = 1 + static_cast<int>(rng() % 20);
		const QSeries a = random_series(rng, order, true);
		CHECK(a * a.inverse() == QSeries::one(order));
	}
}

TEST_CASE("delta_q satisfies the Leibniz rule")
{
	std::mt19937 rng(4242);
	for (int rep = 0; rep < 25; ++rep) {
		const int order = 1 + static_cast<int>(rng() % 20);
		const QSeries a = random_series(rng, order, false);
		const QSeries b = random_series(rng, order, false);
		CHECK(delta_q(a * b) == delta_q(a) * b + a * delta_q(b));
	}
}

TEST_CASE("mul_one_minus and div_one_minus are inverse operations")
{
	std::mt19937 rng(99);
	for (int rep = 0; rep < 20; ++rep) {
		const int order = 5 + static_cast<int>(rng() % 20);
		const QSeries a = random_series(rng, order, false);
		const int k = 1 + static_cast<int>(rng() % 5);
		const Rational c(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
		QSeries b = a;
		b.mul_one_minus(c, k);
		b.div_one_minus(c, k);
		CHECK(b == a);
	}
}

TEST_CASE("integer-built constructors stay integral")
{
	for (const QSeries& s :
	     {euler_p(40), infinite_pochhammer(1, 40), finite_pochhammer(2, 7, 40),
	      lambert_phi(3, 40), smallest_part_weight(3, 40)}) {
		for (int n = 0; n <= s.order(); ++n) CHECK(s[n].denominator() == 1);
	}
}
