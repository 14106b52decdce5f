#include "qspt/qseries.hpp"

#include <stdexcept>

namespace qspt {

QSeries pochhammer(const Rational& c, int t, int n, int order)
{
	if (t < 0) throw std::invalid_argument("pochhammer: shift must be non-negative");
	if (n < 0) throw std::invalid_argument("pochhammer: length must be non-negative");
	QSeries s = QSeries::one(order);
	for (int k = 0; k < n; ++k) {
		if (t + k > order) break; // (1 - c q^{t+k}) is 1 under truncation
		s.mul_one_minus(c, t + k);
	}
	return s;
}

QSeries pochhammer_inf(const Rational& c, int t, int order)
{
	if (t < 1) throw std::invalid_argument("pochhammer_inf: shift must be >= 1");
	QSeries s = QSeries::one(order);
	for (int k = t; k <= order; ++k) s.mul_one_minus(c, k);
	return s;
}

QSeries finite_pochhammer(int m, int n, int order)
{
	if (m < 1) throw std::invalid_argument("finite_pochhammer: base exponent must be >= 1");
	if (n < 0) throw std::invalid_argument("finite_pochhammer: length must be non-negative");
	return pochhammer(Rational::one(), m, n, order);
}

QSeries infinite_pochhammer(int m, int order)
{
	if (m < 1) throw std::invalid_argument("infinite_pochhammer: base exponent must be >= 1");
	return pochhammer_inf(Rational::one(), m, order);
}

QSeries euler_p(int order)
{
	QSeries s = QSeries::one(order);
	for (int k = 1; k <= order; ++k) s.div_one_minus(Rational::one(), k);
	return s;
}

QSeries lambert_phi(int i, int order)
{
	if (i < 1) throw std::invalid_argument("lambert_phi: power must be >= 1");
	QSeries s(order);
	for (int n = 1; n <= order; ++n) {
		mpz_class p;
		mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n),
			      static_cast<unsigned long>(i));
		const Rational term{p};
		for (int m = n; m <= order; m += n) {
			Rational v = s[m];
			v += term;
			s.set(m, std::move(v));
		}
	}
	return s;
}

QSeries smallest_part_weight(int j, int order)
{
	if (j < 1) throw std::invalid_argument("smallest_part_weight: part must be >= 1");
	QSeries s(order);
	for (int m = 1; static_cast<long>(m) * j <= order; ++m) s.set(m * j, Rational(m));
	return s;
}

}
