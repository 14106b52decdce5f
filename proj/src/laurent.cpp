#include "qspt/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qspt {

namespace {
const mpz_class kZero = 0;
}

LaurentPoly::LaurentPoly(long n)
{
	if (n != 0) {
		lo_ = 0;
		c_.push_back(mpz_class(n));
	}
}

LaurentPoly::LaurentPoly(mpz_class coef, long exp)
{
	if (sgn(coef) != 0) {
		lo_ = exp;
		c_.push_back(std::move(coef));
	}
}

bool LaurentPoly::is_one() const
{
	return c_.size() == 1 && lo_ == 0 && c_[0] == 1;
}

const mpz_class& LaurentPoly::coeff(long m) const
{
	if (c_.empty() || m < lo_ || m > hi()) return kZero;
	return c_[static_cast<size_t>(m - lo_)];
}

void LaurentPoly::normalize()
{
	size_t front = 0;
	while (front < c_.size() && sgn(c_[front]) == 0) ++front;
	if (front == c_.size()) {
		c_.clear();
		lo_ = 0;
		return;
	}
	size_t back = c_.size();
	while (sgn(c_[back - 1]) == 0) --back;
	if (front > 0) c_.erase(c_.begin(), c_.begin() + static_cast<long>(front));
	c_.resize(back - front);
	lo_ += static_cast<long>(front);
}

void LaurentPoly::add_term(long m, const mpz_class& delta)
{
	if (sgn(delta) == 0) return;
	if (c_.empty()) {
		lo_ = m;
		c_.push_back(delta);
		return;
	}
	if (m < lo_) {
		c_.insert(c_.begin(), static_cast<size_t>(lo_ - m), kZero);
		lo_ = m;
	} else if (m > hi()) {
		c_.resize(static_cast<size_t>(m - lo_) + 1);
	}
	c_[static_cast<size_t>(m - lo_)] += delta;
	normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
	if (o.c_.empty()) return *this;
	if (c_.empty()) return *this = o;
	const long new_lo = std::min(lo_, o.lo_);
	const long new_hi = std::max(hi(), o.hi());
	if (new_lo < lo_) {
		c_.insert(c_.begin(), static_cast<size_t>(lo_ - new_lo), kZero);
		lo_ = new_lo;
	}
	if (new_hi > hi()) c_.resize(static_cast<size_t>(new_hi - lo_) + 1);
	for (size_t i = 0; i < o.c_.size(); ++i)
		c_[static_cast<size_t>(o.lo_ - lo_) + i] += o.c_[i];
	normalize();
	return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
	*this += -o;
	return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
	LaurentPoly r = *this;
	for (mpz_class& v : r.c_) v = -v;
	return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
	if (a.c_.empty() || b.c_.empty()) return LaurentPoly();
	LaurentPoly out;
	out.lo_ = a.lo_ + b.lo_;
	out.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
	for (size_t i = 0; i < a.c_.size(); ++i) {
		if (sgn(a.c_[i]) == 0) continue;
		for (size_t j = 0; j < b.c_.size(); ++j) {
			if (sgn(b.c_[j]) == 0) continue;
			out.c_[i + j] += a.c_[i] * b.c_[j];
		}
	}
	out.normalize();
	return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
	*this = *this * o;
	return *this;
}

bool LaurentPoly::invertible() const
{
	return c_.size() == 1 && (c_[0] == 1 || c_[0] == -1);
}

LaurentPoly LaurentPoly::inverse() const
{
	if (!invertible())
		throw std::domain_error("LaurentPoly::inverse: only +-1 monomials are invertible");
	return LaurentPoly(c_[0], -lo_);
}

mpz_class LaurentPoly::value_at_one() const
{
	mpz_class s = 0;
	for (const mpz_class& v : c_) s += v;
	return s;
}

mpz_class LaurentPoly::power_moment(int k) const
{
	if (k < 0) throw std::invalid_argument("power_moment: negative power");
	mpz_class s = 0;
	for (size_t i = 0; i < c_.size(); ++i) {
		if (sgn(c_[i]) == 0) continue;
		const long m = lo_ + static_cast<long>(i);
		mpz_class p;
		mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m < 0 ? -m : m),
			      static_cast<unsigned long>(k));
		if (m < 0 && k % 2 == 1) p = -p;
		s += p * c_[i];
	}
	return s;
}

bool LaurentPoly::symmetric() const
{
	for (size_t i = 0; i < c_.size(); ++i) {
		const long m = lo_ + static_cast<long>(i);
		if (c_[i] != coeff(-m)) return false;
	}
	return true;
}

std::string LaurentPoly::to_string() const
{
	if (c_.empty()) return "0";
	std::ostringstream os;
	bool first = true;
	for (size_t i = 0; i < c_.size(); ++i) {
		if (sgn(c_[i]) == 0) continue;
		const long m = lo_ + static_cast<long>(i);
		mpz_class v = c_[i];
		if (first) {
			if (sgn(v) < 0) os << "-";
		} else {
			os << (sgn(v) < 0 ? " - " : " + ");
		}
		v = abs(v);
		if (v != 1 || m == 0) os << v.get_str();
		if (m != 0) {
			if (v != 1) os << "*";
			os << "z";
			if (m != 1) os << "^" << m;
		}
		first = false;
	}
	return os.str();
}

}
