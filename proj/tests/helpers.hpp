#pragma once

#include <random>
#include <vector>

#include "qspt/truncated_series.hpp"

namespace qspt::test {

inline QSeries from_ints(const std::vector<long>& coeffs)
{
	QSeries s(static_cast<int>(coeffs.size()) - 1);
	for (size_t i = 0; i < coeffs.size(); ++i) s.set(static_cast<int>(i), Rational(coeffs[i]));
	return s;
}

/* Integer prefix of a series; fails the calling test when a coefficient is
 * not an integer. */
inline std::vector<long> int_prefix(const QSeries& s, int count)
{
	std::vector<long> out;
	for (int n = 0; n < count && n <= s.order(); ++n) {
		REQUIRE(s[n].is_integer());
		out.push_back(s[n].numerator().get_si());
	}
	return out;
}

inline QSeries random_series(std::mt19937& rng, int order, bool unit)
{
	std::uniform_int_distribution<long> num(-9, 9);
	std::uniform_int_distribution<long> den(1, 4);
	QSeries s(order);
	for (int n = 0; n <= order; ++n) s.set(n, Rational(num(rng), den(rng)));
	if (unit) {
		long lead = num(rng);
		if (lead == 0) lead = 1;
		s.set(0, Rational(lead, den(rng)));
	}
	return s;
}

}
