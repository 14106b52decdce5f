#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qspt/parallel.hpp"
#include "qspt/rational.hpp"
#include "qspt/ring.hpp"

namespace qspt {

/* Formal power series in q over the ring R, stored dense up to a fixed
 * truncation order: coefficients are exact for exponents 0..order() and
 * unknown beyond. Binary operations on orders N1, N2 yield order
 * min(N1, N2); equality compares coefficient-wise up to the common order.
 *
 * Values are immutable as far as callers are concerned once built; the
 * mutating members exist so builders can assemble a series cheaply. */
template <CoefficientRing R>
class Series {
public:
	explicit Series(int order) : c_(checked(order) + 1) {}

	static Series one(int order)
	{
		Series s(order);
		s.c_[0] = R::one();
		return s;
	}

	static Series constant(const R& value, int order)
	{
		Series s(order);
		s.c_[0] = value;
		return s;
	}

	int order() const { return static_cast<int>(c_.size()) - 1; }

	const R& operator[](int n) const
	{
		if (n < 0 || n > order()) throw std::out_of_range("Series: coefficient index out of range");
		return c_[static_cast<size_t>(n)];
	}

	void set(int n, R value) { c_.at(static_cast<size_t>(n)) = std::move(value); }

	bool is_zero() const
	{
		for (const R& c : c_)
			if (!c.is_zero()) return false;
		return true;
	}

	Series truncated(int new_order) const
	{
		if (new_order > order())
			throw std::invalid_argument("Series::truncated: cannot extend a series");
		Series s(new_order);
		std::copy(c_.begin(), c_.begin() + new_order + 1, s.c_.begin());
		return s;
	}

	friend Series operator+(const Series& a, const Series& b)
	{
		const int n = std::min(a.order(), b.order());
		Series out(n);
		for (int i = 0; i <= n; ++i) {
			out.c_[i] = a.c_[i];
			out.c_[i] += b.c_[i];
		}
		return out;
	}

	friend Series operator-(const Series& a, const Series& b)
	{
		const int n = std::min(a.order(), b.order());
		Series out(n);
		for (int i = 0; i <= n; ++i) {
			out.c_[i] = a.c_[i];
			out.c_[i] -= b.c_[i];
		}
		return out;
	}

	Series operator-() const
	{
		Series out(order());
		for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
		return out;
	}

	/* Cauchy product truncated to the common order. Dispatches between the
	 * serial reference kernel and the OpenMP kernel. */
	friend Series operator*(const Series& a, const Series& b)
	{
		const int n = std::min(a.order(), b.order());
		if (parallel::worthwhile(n + 1)) return mul_parallel(a, b);
		return mul_serial(a, b);
	}

	/* Reference kernel: schoolbook O(N^2) coefficient products. */
	static Series mul_serial(const Series& a, const Series& b)
	{
		const int n = std::min(a.order(), b.order());
		Series out(n);
		for (int i = 0; i <= n; ++i) {
			if (a.c_[i].is_zero()) continue;
			for (int j = 0; j + i <= n; ++j) {
				if (b.c_[j].is_zero()) continue;
				out.c_[i + j] += a.c_[i] * b.c_[j];
			}
		}
		return out;
	}

	/* Same product with each output coefficient computed independently.
	 * Exact arithmetic makes the result identical to the serial kernel. */
	static Series mul_parallel(const Series& a, const Series& b)
	{
		const int n = std::min(a.order(), b.order());
		Series out(n);
#pragma omp parallel for schedule(dynamic, 16)
		for (int k = 0; k <= n; ++k) {
			R acc = R::zero();
			for (int i = 0; i <= k; ++i) {
				if (a.c_[i].is_zero() || b.c_[k - i].is_zero()) continue;
				acc += a.c_[i] * b.c_[k - i];
			}
			out.c_[k] = std::move(acc);
		}
		return out;
	}

	/* Multiplicative inverse: requires an invertible q^0 coefficient. With
	 * 1/(sum a_n q^n) = sum b_n q^n, the coefficients satisfy
	 * b_n = -a_0^{-1} sum_{k=1}^{n} a_k b_{n-k}. */
	Series inverse() const
	{
		if (!c_[0].invertible())
			throw std::domain_error("Series::inverse: q^0 coefficient is not invertible");
		const R lead = c_[0].inverse();
		Series out(order());
		out.c_[0] = lead;
		for (int n = 1; n <= order(); ++n) {
			R acc = R::zero();
			for (int k = 1; k <= n; ++k) {
				if (c_[k].is_zero()) continue;
				acc += c_[k] * out.c_[n - k];
			}
			acc *= lead;
			out.c_[n] = -acc;
		}
		return out;
	}

	/* In-place multiplication by (1 - c q^k); k = 0 scales by (1 - c). */
	Series& mul_one_minus(const R& c, int k)
	{
		if (k < 0) throw std::invalid_argument("mul_one_minus: negative exponent");
		if (k == 0) {
			R f = R::one();
			f -= c;
			return scale(f);
		}
		for (int i = order(); i >= k; --i) c_[i] -= c * c_[i - k];
		return *this;
	}

	/* In-place division by (1 - c q^k), exact under truncation:
	 * out_i = in_i + c * out_{i-k}. k = 0 scales by (1 - c)^{-1}. */
	Series& div_one_minus(const R& c, int k)
	{
		if (k < 0) throw std::invalid_argument("div_one_minus: negative exponent");
		if (k == 0) {
			R f = R::one();
			f -= c;
			if (!f.invertible()) throw std::domain_error("div_one_minus: 1 - c not invertible");
			return scale(f.inverse());
		}
		for (int i = k; i <= order(); ++i) c_[i] += c * c_[i - k];
		return *this;
	}

	Series& scale(const R& c)
	{
		for (R& v : c_) v *= c;
		return *this;
	}

	/* this += q^k * other. Refuses when other is too short to supply every
	 * retained coefficient; that situation is a bookkeeping bug upstream. */
	Series& add_shifted(const Series& other, int k)
	{
		return add_scaled_shifted(other, R::one(), k);
	}

	Series& add_scaled_shifted(const Series& other, const R& c, int k)
	{
		if (k < 0) throw std::invalid_argument("add_scaled_shifted: negative exponent");
		if (other.order() + k < order())
			throw std::invalid_argument("add_scaled_shifted: source series too short");
		const bool unit = c.is_one();
		for (int i = k; i <= order(); ++i) {
			const R& src = other.c_[i - k];
			if (src.is_zero()) continue;
			if (unit)
				c_[i] += src;
			else
				c_[i] += c * src;
		}
		return *this;
	}

	/* Index of the first coefficient differing from `other`, up to the
	 * common order. */
	std::optional<int> first_difference(const Series& other) const
	{
		const int n = std::min(order(), other.order());
		for (int i = 0; i <= n; ++i)
			if (!(c_[i] == other.c_[i])) return i;
		return std::nullopt;
	}

	friend bool operator==(const Series& a, const Series& b)
	{
		return !a.first_difference(b).has_value();
	}

private:
	static int checked(int order)
	{
		if (order < 0) throw std::invalid_argument("Series: order must be non-negative");
		return order;
	}

	std::vector<R> c_;
};

/* The operator q d/dq: multiplies the coefficient of q^n by n. */
template <CoefficientRing R>
Series<R> delta_q(const Series<R>& s)
{
	Series<R> out(s.order());
	for (int n = 1; n <= s.order(); ++n) {
		R v = s[n];
		v *= R(n);
		out.set(n, std::move(v));
	}
	return out;
}

using QSeries = Series<Rational>;

}
