#include "qspt/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qspt {

namespace {

mpq_class canonical(const mpz_class& num, const mpz_class& den)
{
	if (sgn(den) == 0) throw std::invalid_argument("Rational: zero denominator");
	mpq_class q(num, den);
	q.canonicalize();
	return q;
}

}

Rational::Rational(long num, long den) : v_(canonical(mpz_class(num), mpz_class(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(canonical(num, den)) {}

Rational Rational::parse(std::string_view text)
{
	const auto slash = text.find('/');
	try {
		if (slash == std::string_view::npos)
			return Rational(mpz_class(std::string(text)));
		mpz_class num{std::string(text.substr(0, slash))};
		mpz_class den{std::string(text.substr(slash + 1))};
		return Rational(num, den);
	} catch (const std::invalid_argument&) {
		throw std::invalid_argument("Rational::parse: expected \"p\" or \"p/q\", got \"" +
					    std::string(text) + "\"");
	}
}

Rational Rational::inverse() const
{
	if (is_zero()) throw std::domain_error("Rational::inverse: division by zero");
	Rational r;
	r.v_ = 1 / v_;
	return r;
}

Rational& Rational::operator/=(const Rational& o)
{
	if (o.is_zero()) throw std::domain_error("Rational: division by zero");
	v_ /= o.v_;
	return *this;
}

Rational Rational::operator-() const
{
	Rational r;
	r.v_ = -v_;
	return r;
}

std::string Rational::to_string() const
{
	return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
	return os << r.v_;
}

long mod_reduce(const Rational& r, long modulus)
{
	if (modulus <= 1) throw std::invalid_argument("mod_reduce: modulus must be > 1");
	const mpz_class m(modulus);
	mpz_class den_inv;
	if (mpz_invert(den_inv.get_mpz_t(), r.denominator().get_mpz_t(), m.get_mpz_t()) == 0)
		throw std::invalid_argument("mod_reduce: denominator " + r.denominator().get_str() +
					    " not invertible mod " + std::to_string(modulus));
	mpz_class res = (r.numerator() * den_inv) % m;
	if (sgn(res) < 0) res += m;
	return res.get_si();
}

}
