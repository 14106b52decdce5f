#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qspt {

/* Exact rational scalar over arbitrary-precision integers. Always kept in
 * lowest terms with a positive denominator; every operation is exact. */
class Rational {
public:
	Rational() : v_(0) {}
	Rational(long n) : v_(n) {}
	Rational(long num, long den);
	explicit Rational(const mpz_class& n) : v_(n) {}
	Rational(const mpz_class& num, const mpz_class& den);

	static Rational zero() { return Rational(); }
	static Rational one() { return Rational(1); }

	/* Accepts "p" or "p/q" in decimal; canonicalizes. */
	static Rational parse(std::string_view text);

	const mpz_class& numerator() const { return v_.get_num(); }
	const mpz_class& denominator() const { return v_.get_den(); }

	bool is_zero() const { return sgn(v_) == 0; }
	bool is_one() const { return v_ == 1; }
	bool is_integer() const { return v_.get_den() == 1; }
	bool is_nonnegative() const { return sgn(v_) >= 0; }

	bool invertible() const { return !is_zero(); }
	Rational inverse() const;

	/* "p" when the denominator is 1, otherwise "p/q". */
	std::string to_string() const;

	Rational operator-() const;

	Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
	Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
	Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
	Rational& operator/=(const Rational& o);

	friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
	friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
	friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
	friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

	friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
	friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
	friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
	friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
	friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
	friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

	friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
	mpq_class v_; // canonical at all times
};

/* a/b reduced modulo a prime-to-the-denominator modulus: a * b^{-1} (mod m),
 * result in [0, m). Throws std::invalid_argument when gcd(b, m) > 1. */
long mod_reduce(const Rational& r, long modulus);

}
