#include "qspt/bailey.hpp"

#include <stdexcept>
#include <tuple>
#include <vector>

#include "qspt/parallel.hpp"
#include "qspt/qseries.hpp"
#include "qspt/spt_series.hpp"

namespace qspt {

namespace {

void check_indices(int n1, int n2)
{
	if (n1 < 0 || n2 < 0)
		throw std::invalid_argument("Bailey pair: indices must be non-negative");
}

long alpha_exponent(int n) { return static_cast<long>(n) * (3L * n - 1) / 2; }

/* 1/(q; q)_k for k = 0..count, all at the same order. */
std::vector<QSeries> pochhammer_inverses(int count, int order)
{
	std::vector<QSeries> inv;
	inv.reserve(static_cast<size_t>(count) + 1);
	inv.push_back(QSeries::one(order));
	for (int k = 1; k <= count; ++k) {
		QSeries v = inv.back();
		if (k <= order) v.div_one_minus(Rational::one(), k);
		inv.push_back(std::move(v));
	}
	return inv;
}

}

QSeries jv_alpha(int n1, int n2, int order)
{
	check_indices(n1, n2);
	QSeries s(order);
	if (n1 != n2) return s;
	const int n = n1;
	if (n == 0) return QSeries::one(order);
	const Rational sign(n % 2 ? -1 : 1);
	const long e = alpha_exponent(n);
	if (e <= order) s.set(static_cast<int>(e), sign);
	if (e + n <= order) s.set(static_cast<int>(e + n), sign);
	return s;
}

QSeries jv_beta(int n1, int n2, int order)
{
	check_indices(n1, n2);
	QSeries s = QSeries::one(order);
	for (const int len : {n1, n2, n1 + n2})
		for (int k = 1; k <= std::min(len, order); ++k)
			s.div_one_minus(Rational::one(), k);
	return s;
}

TwoFoldPair joshi_vyas_pair()
{
	return TwoFoldPair{jv_alpha, jv_beta};
}

VerificationReport verify_pair(int bound, int order)
{
	if (bound < 1 || order < 1)
		throw std::invalid_argument("verify_pair: bound and order must be >= 1");
	Stopwatch timer;
	VerificationReport rep;
	rep.identity = "eq1_pair";
	rep.order = order;

	const auto invq = pochhammer_inverses(2 * bound, order);

	/* kernel(n, r) = 1/((q)_{n+r} (q)_{n-r}); the cell sum needs the
	 * product kernel(n1, r) * kernel(n2, r). */
	std::vector<std::vector<QSeries>> kernel(static_cast<size_t>(bound) + 1);
	for (int n = 0; n <= bound; ++n)
		for (int r = 0; r <= n; ++r)
			kernel[static_cast<size_t>(n)].push_back(invq[static_cast<size_t>(n + r)] *
								 invq[static_cast<size_t>(n - r)]);

	struct CellFailure {
		int n1, n2, exp;
		Rational lhs, rhs;
	};
	std::optional<CellFailure> worst;

	const long cells = static_cast<long>(bound + 1) * (bound + 1);
#pragma omp parallel if (parallel::worthwhile(cells))
	{
		std::optional<CellFailure> local;
#pragma omp for schedule(dynamic, 4) nowait
		for (long cell = 0; cell < cells; ++cell) {
			const int n1 = static_cast<int>(cell / (bound + 1));
			const int n2 = static_cast<int>(cell % (bound + 1));

			QSeries rhs(order);
			for (int r = 0; r <= std::min(n1, n2); ++r) {
				const QSeries prod = kernel[static_cast<size_t>(n1)][static_cast<size_t>(r)] *
						     kernel[static_cast<size_t>(n2)][static_cast<size_t>(r)];
				if (r == 0) {
					rhs = rhs + prod;
					continue;
				}
				const Rational sign(r % 2 ? -1 : 1);
				const long e = alpha_exponent(r);
				if (e <= order) rhs.add_scaled_shifted(prod, sign, static_cast<int>(e));
				if (e + r <= order) rhs.add_scaled_shifted(prod, sign, static_cast<int>(e + r));
			}

			const QSeries lhs = invq[static_cast<size_t>(n1)] * invq[static_cast<size_t>(n2)] *
					    invq[static_cast<size_t>(n1 + n2)];
			if (const auto d = lhs.first_difference(rhs)) {
				const CellFailure f{n1, n2, *d, lhs[*d], rhs[*d]};
				if (!local || std::tie(f.n1, f.n2) < std::tie(local->n1, local->n2))
					local = f;
			}
		}
#pragma omp critical
		{
			if (local && (!worst || std::tie(local->n1, local->n2) <
						    std::tie(worst->n1, worst->n2)))
				worst = local;
		}
	}

	if (worst) {
		rep.record_failure(worst->exp, worst->lhs, worst->rhs);
		rep.note = "cell (" + std::to_string(worst->n1) + ", " +
			   std::to_string(worst->n2) + ")";
	} else {
		rep.note = "all cells up to (" + std::to_string(bound) + ", " +
			   std::to_string(bound) + ")";
	}
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport verify_eq2_specialized(const Rational& x, const Rational& y,
					  const Rational& z, const Rational& w, int order)
{
	const auto reject = [](const std::string& why) {
		throw std::invalid_argument("verify_eq2_specialized: " + why);
	};
	for (const Rational* v : {&x, &y, &z, &w}) {
		if (v->is_zero()) reject("parameters must be nonzero");
		if (v->is_one()) reject("parameters must differ from 1");
	}
	if ((x * y).is_one()) reject("xy = 1 degenerates the q/xy factors");
	if ((z * w).is_one()) reject("zw = 1 degenerates the q/zw factors");

	Stopwatch timer;
	const auto invq = pochhammer_inverses(order, order);
	const Rational rxy = (x * y).inverse();
	const Rational rzw = (z * w).inverse();

	/* side(n) = (x)_n (y)_n (q/xy)^n / (q)_n without the q^n, i.e. the
	 * n-indexed factor of the left double sum for one of the two slots. */
	const auto make_side = [&](const Rational& a, const Rational& b, const Rational& rab) {
		std::vector<QSeries> side;
		side.reserve(static_cast<size_t>(order) + 1);
		QSeries acc = QSeries::one(order); // (a)_n (b)_n, incremental
		Rational c = Rational::one();
		side.push_back(acc * invq[0]);
		for (int n = 1; n <= order; ++n) {
			acc.mul_one_minus(a, n - 1);
			acc.mul_one_minus(b, n - 1);
			c *= rab;
			QSeries s = acc * invq[static_cast<size_t>(n)];
			s.scale(c);
			side.push_back(std::move(s));
		}
		return side;
	};
	const auto side1 = make_side(x, y, rxy);
	const auto side2 = make_side(z, w, rzw);

	QSeries lhs(order);
	for (int n1 = 0; n1 <= order; ++n1) {
		for (int n2 = 0; n1 + n2 <= order; ++n2) {
			const int window = order - n1 - n2;
			/* beta has 1/((q)_{n1}(q)_{n2}(q)_{n1+n2}); the side
			 * factors carry the first two inverses already. */
			QSeries term = side1[static_cast<size_t>(n1)].truncated(window) *
				       side2[static_cast<size_t>(n2)].truncated(window);
			term = term * invq[static_cast<size_t>(n1 + n2)].truncated(window);
			lhs.add_shifted(term, n1 + n2);
		}
	}

	/* Prefactor (q/x)_inf (q/y)_inf (q/z)_inf (q/w)_inf
	 *           / ((q)_inf^2 (q/xy)_inf (q/zw)_inf). */
	QSeries prefactor = pochhammer_inf(x.inverse(), 1, order) *
			    pochhammer_inf(y.inverse(), 1, order) *
			    pochhammer_inf(z.inverse(), 1, order) *
			    pochhammer_inf(w.inverse(), 1, order);
	const QSeries p = euler_p(order);
	prefactor = prefactor * p * p;
	prefactor = prefactor * pochhammer_inf(rxy, 1, order).inverse();
	prefactor = prefactor * pochhammer_inf(rzw, 1, order).inverse();

	/* Diagonal alpha sum. numer(n) = (x)_n (y)_n (z)_n (w)_n and
	 * denom(n) = (q/x)_n (q/y)_n (q/z)_n (q/w)_n, both incremental. */
	QSeries inner = QSeries::one(order);
	QSeries numer = QSeries::one(order);
	QSeries denom_inv = QSeries::one(order);
	Rational c = Rational::one();
	for (int n = 1;; ++n) {
		const long e = alpha_exponent(n) + 2L * n;
		if (e > order) break;
		for (const Rational& v : {x, y, z, w}) numer.mul_one_minus(v, n - 1);
		for (const Rational& v : {x, y, z, w}) denom_inv.div_one_minus(v.inverse(), n);
		c *= rxy;
		c *= rzw;
		const QSeries prod = numer * denom_inv;
		const Rational sign = (n % 2) ? -c : c;
		inner.add_scaled_shifted(prod, sign, static_cast<int>(e));
		if (e + n <= order) inner.add_scaled_shifted(prod, sign, static_cast<int>(e + n));
	}

	VerificationReport rep = compare_series("eq2_specialized", Variant::none, order, lhs,
						prefactor * inner);
	rep.note = "x=" + x.to_string() + " y=" + y.to_string() + " z=" + z.to_string() +
		   " w=" + w.to_string();
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

namespace {

/* sum_{n>=1} alpha_{n,n} q^{2n} / (1-q^n)^4 truncated. */
QSeries eq5_alpha_sum(int order)
{
	QSeries s(order);
	for (int n = 1;; ++n) {
		const long e = alpha_exponent(n) + 2L * n;
		if (e > order) break;
		QSeries base = QSeries::one(order - static_cast<int>(e));
		for (int rep = 0; rep < 4; ++rep) base.div_one_minus(Rational::one(), n);
		const Rational sign(n % 2 ? -1 : 1);
		s.add_scaled_shifted(base, sign, static_cast<int>(e));
		if (e + n <= order) s.add_scaled_shifted(base, sign, static_cast<int>(e + n));
	}
	return s;
}

/* The coupled double sum of the differentiated identity (no P factor):
 * sum_{n1,n2>=1} (q)_{n1-1}^2 (q)_{n2-1}^2 beta_{n1,n2} q^{n1+n2}. */
QSeries eq5_lhs(int order)
{
	std::vector<QSeries> poch, invq;
	poch.push_back(QSeries::one(order));
	invq.push_back(QSeries::one(order));
	for (int k = 1; k <= order; ++k) {
		QSeries p = poch.back();
		p.mul_one_minus(Rational::one(), k);
		poch.push_back(std::move(p));
		QSeries v = invq.back();
		v.div_one_minus(Rational::one(), k);
		invq.push_back(std::move(v));
	}
	std::vector<QSeries> g;
	g.push_back(QSeries::one(0));
	for (int n = 1; n + 1 <= order; ++n) {
		const int window = order - n - 1;
		QSeries f = poch[static_cast<size_t>(n - 1)].truncated(window);
		f = f * f;
		g.push_back(f * invq[static_cast<size_t>(n)].truncated(window));
	}
	QSeries lhs(order);
	for (int n1 = 1; n1 + 1 <= order; ++n1) {
		for (int n2 = 1; n1 + n2 <= order; ++n2) {
			const int window = order - n1 - n2;
			QSeries term = g[static_cast<size_t>(n1)].truncated(window) *
				       g[static_cast<size_t>(n2)].truncated(window);
			term = term * invq[static_cast<size_t>(n1 + n2)].truncated(window);
			lhs.add_shifted(term, n1 + n2);
		}
	}
	return lhs;
}

}

VerificationReport verify_eq5(int order)
{
	if (order < 2) throw std::invalid_argument("verify_eq5: order must be >= 2");
	Stopwatch timer;
	const QSeries phi1 = lambert_phi(1, order);
	VerificationReport rep = compare_series("eq5", Variant::none, order, eq5_lhs(order),
						phi1 * phi1 + eq5_alpha_sum(order));
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

QSeries theorem1_tail_series(int order)
{
	/* Z-sum folded to n >= 1: the n and -n terms have exponents
	 * n(3n+3)/2 and n(3n+5)/2 and share the sign (-1)^n once the
	 * negative denominator is rewritten via
	 * (1 - q^{-n})^4 = q^{-4n} (1 - q^n)^4. */
	QSeries tail(order);
	for (int n = 1;; ++n) {
		const long e = static_cast<long>(n) * (3L * n + 3) / 2;
		if (e > order) break;
		QSeries base = QSeries::one(order - static_cast<int>(e));
		for (int rep = 0; rep < 4; ++rep) base.div_one_minus(Rational::one(), n);
		const Rational sign(n % 2 ? -1 : 1);
		tail.add_scaled_shifted(base, sign, static_cast<int>(e));
		if (e + n <= order) tail.add_scaled_shifted(base, sign, static_cast<int>(e + n));
	}
	return euler_p(order) * tail;
}

VerificationReport verify_theorem1(int order)
{
	if (order < 2) throw std::invalid_argument("verify_theorem1: order must be >= 2");
	Stopwatch timer;
	const QSeries products = spt_plus_series(order);
	const QSeries double_sum = spt_plus_double_sum_series(order);
	const QSeries p = euler_p(order);
	const QSeries phi1 = lambert_phi(1, order);
	const QSeries rhs = p * (phi1 * phi1) + theorem1_tail_series(order);

	VerificationReport rep = compare_series("thm1", Variant::none, order, products, rhs);
	if (!rep.passed()) {
		rep.note = "smallest-parts product form vs right-hand side";
	} else {
		rep = compare_series("thm1", Variant::none, order, double_sum, rhs);
		rep.note = rep.passed() ? "both left-hand forms match the right-hand side"
					: "coupled double sum vs right-hand side";
	}
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport verify_theorem1_forms_agree(int order)
{
	if (order < 2)
		throw std::invalid_argument("verify_theorem1_forms_agree: order must be >= 2");
	Stopwatch timer;
	VerificationReport rep =
	    compare_series("thm1_rearranged_equals_sptplus", Variant::none, order,
			   spt_plus_series(order), spt_plus_double_sum_series(order));
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

}
