#include "qspt/spt_series.hpp"

#include <stdexcept>

#include "qspt/qseries.hpp"

namespace qspt {

namespace {

void check_j(int j)
{
	if (j < 1) throw std::invalid_argument("spt series: j must be >= 1");
}

/* spt_j generating function divided by q^j, built at the given window:
 * 1/(1-q^j)^2 * 1/(q^{j+1}; q)_inf. */
QSeries spt_j_reduced(int j, int window)
{
	QSeries u = QSeries::one(window);
	if (j <= window) {
		u.div_one_minus(Rational::one(), j);
		u.div_one_minus(Rational::one(), j);
	}
	for (int k = j + 1; k <= window; ++k) u.div_one_minus(Rational::one(), k);
	return u;
}

/* (q^s + 2q^{2s} + ...) / q^s truncated to the window. */
QSeries weight_reduced(int s, int window)
{
	QSeries t(window);
	for (int m = 1; static_cast<long>(m - 1) * s <= window; ++m)
		t.set((m - 1) * s, Rational(m));
	return t;
}

}

QSeries spt_j_series(int j, int order)
{
	check_j(j);
	QSeries out(order);
	if (j > order) return out;
	out.add_shifted(spt_j_reduced(j, order - j), j);
	return out;
}

QSeries spt_j_star_series(int j, int order)
{
	check_j(j);
	QSeries out(order);
	for (int s = 1; s <= order; ++s) {
		QSeries t = weight_reduced(s, order - s);
		for (int i = 1; i <= j && s + i <= order - s; ++i)
			t.div_one_minus(Rational::one(), s + i);
		out.add_shifted(t, s);
	}
	return out;
}

QSeries spt_j_plus_series(int j, int order)
{
	check_j(j);
	return spt_j_series(j, order) * spt_j_star_series(j, order);
}

QSeries spt_plus_series(int order)
{
	if (order < 0) throw std::invalid_argument("spt_plus_series: negative order");
	QSeries out(order);
	if (order < 2) return out;

	/* Incremental sweep over j. For each smallest part s keep
	 *   h[s] = (q^s + 2q^{2s} + ...) / ((1-q^{s+1}) ... (1-q^{s+j})) / q^s
	 * at window order - s; step j extends every h[s] by one factor. The
	 * j-th star series is then sum_s q^s h[s], and the j-th contribution
	 * to SPT_plus is q^j * (spt_j / q^j) * star_j, all exact to order.
	 * The windowed products here are single-limb and allocation-bound;
	 * the serial kernel measures faster than the parallel one (see the
	 * benchmark), so it is pinned. */
	std::vector<QSeries> h;
	h.reserve(static_cast<size_t>(order));
	for (int s = 1; s <= order; ++s) h.push_back(weight_reduced(s, order - s));

	for (int j = 1; j <= order - 1; ++j) {
		const int window = order - j;

		for (int s = 1; s + j <= order - s; ++s)
			h[static_cast<size_t>(s - 1)].div_one_minus(Rational::one(), s + j);

		QSeries star(window);
		for (int s = 1; s <= window; ++s)
			star.add_shifted(h[static_cast<size_t>(s - 1)], s);

		out.add_shifted(QSeries::mul_serial(spt_j_reduced(j, window), star), j);
	}
	return out;
}

QSeries spt_total_series(int order)
{
	if (order < 0) throw std::invalid_argument("spt_total_series: negative order");
	QSeries out(order);
	for (int j = 1; j <= order; ++j)
		out.add_shifted(spt_j_reduced(j, order - j), j);
	return out;
}

QSeries spt_plus_double_sum_series(int order)
{
	if (order < 0) throw std::invalid_argument("spt_plus_double_sum_series: negative order");
	QSeries sum(order);
	if (order < 2) return sum;

	/* poch[k] = (q; q)_k and invq[k] = 1/(q; q)_k, both incremental. */
	std::vector<QSeries> poch, invq;
	poch.reserve(static_cast<size_t>(order) + 1);
	invq.reserve(static_cast<size_t>(order) + 1);
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

	/* g[n] = (q)_{n-1}^2 / (q)_n, windowed to what pairs can use. */
	std::vector<QSeries> g;
	g.push_back(QSeries::one(0)); // unused placeholder at n = 0
	for (int n = 1; n + 1 <= order; ++n) {
		const int window = order - n - 1;
		QSeries f = poch[static_cast<size_t>(n - 1)].truncated(window);
		f = f * f;
		g.push_back(f * invq[static_cast<size_t>(n)].truncated(window));
	}

	for (int n1 = 1; n1 + 1 <= order; ++n1) {
		for (int n2 = 1; n1 + n2 <= order; ++n2) {
			const int window = order - n1 - n2;
			QSeries term = g[static_cast<size_t>(n1)].truncated(window) *
				       g[static_cast<size_t>(n2)].truncated(window);
			term = term * invq[static_cast<size_t>(n1 + n2)].truncated(window);
			sum.add_shifted(term, n1 + n2);
		}
	}
	return euler_p(order) * sum;
}

}
