#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qspt {

/* Polynomial in z with integer exponents of either sign and exact integer
 * coefficients, stored dense over its support [lo, hi]. Used as the q^n
 * coefficient of a bivariate series, where the z-exponent carries the rank
 * or crank value m. Inversion exists only for single-term +-1 monomials,
 * which is all the bivariate generating functions here ever need. */
class LaurentPoly {
public:
	LaurentPoly() = default;
	explicit LaurentPoly(long n);
	LaurentPoly(mpz_class coef, long exp);

	static LaurentPoly zero() { return LaurentPoly(); }
	static LaurentPoly one() { return LaurentPoly(1); }
	static LaurentPoly monomial(mpz_class coef, long exp) { return {std::move(coef), exp}; }

	bool is_zero() const { return c_.empty(); }
	bool is_one() const;

	/* Support bounds; only meaningful when not zero. */
	long lo() const { return lo_; }
	long hi() const { return lo_ + static_cast<long>(c_.size()) - 1; }

	/* Coefficient of z^m (zero outside the stored range). */
	const mpz_class& coeff(long m) const;

	void add_term(long m, const mpz_class& delta);

	LaurentPoly& operator+=(const LaurentPoly& o);
	LaurentPoly& operator-=(const LaurentPoly& o);
	LaurentPoly& operator*=(const LaurentPoly& o);
	LaurentPoly operator-() const;

	friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
	friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
	friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

	friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
	{
		return a.lo_ == b.lo_ && a.c_ == b.c_;
	}

	/* Invertible iff a single term with coefficient +-1. */
	bool invertible() const;
	LaurentPoly inverse() const;

	/* Value at z = 1: the sum of all coefficients. */
	mpz_class value_at_one() const;

	/* sum_m m^k coeff(m). */
	mpz_class power_moment(int k) const;

	/* True when coeff(m) == coeff(-m) for all m. */
	bool symmetric() const;

	/* Debug form, e.g. "z^-1 - 1 + z". */
	std::string to_string() const;

private:
	void normalize();

	long lo_ = 0;
	std::vector<mpz_class> c_; // empty <=> zero
};

}
