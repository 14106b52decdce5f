#pragma once

#include <functional>

#include "qspt/report.hpp"
#include "qspt/truncated_series.hpp"

namespace qspt {

/* A 2-fold Bailey pair presented as order-parameterized series maps. The
 * pair studied here (after Joshi and Vyas) has alpha supported on the
 * diagonal n1 = n2 and beta = 1/((q)_{n1} (q)_{n2} (q)_{n1+n2}). */
struct TwoFoldPair {
	std::function<QSeries(int n1, int n2, int order)> alpha;
	std::function<QSeries(int n1, int n2, int order)> beta;
};

/* Diagonal alpha: (-1)^n q^{n(3n-1)/2} (1 + q^n) at n1 = n2 = n >= 1, the
 * forced value 1 at (0, 0), and 0 off the diagonal. */
QSeries jv_alpha(int n1, int n2, int order);

/* 1/((q)_{n1} (q)_{n2} (q)_{n1+n2}) truncated. */
QSeries jv_beta(int n1, int n2, int order);

TwoFoldPair joshi_vyas_pair();

/* Defining relation of the pair with unit parameters: for every cell
 * n1, n2 <= bound checks
 *   beta_{n1,n2} = sum_{r<=min(n1,n2)} alpha_{r,r}
 *                  / ((q)_{n1+r} (q)_{n1-r} (q)_{n2+r} (q)_{n2-r})
 * as series to the given order. */
VerificationReport verify_pair(int bound, int order);

/* The 2-fold lemma with unit Bailey parameters and constant rational
 * specializations x, y, z, w. Requires x, y, z, w nonzero and != 1, and
 * xy != 1, zw != 1; violations throw std::invalid_argument. */
VerificationReport verify_eq2_specialized(const Rational& x, const Rational& y,
					  const Rational& z, const Rational& w, int order);

/* The differentiated identity for this pair:
 *   sum_{n1,n2>=1} (q)_{n1-1}^2 (q)_{n2-1}^2 beta_{n1,n2} q^{n1+n2}
 *     = Phi_1^2 + sum_{n>=1} alpha_{n,n} q^{2n} / (1-q^n)^4. */
VerificationReport verify_eq5(int order);

/* The q-series identity obtained by multiplying through by 1/(q)_inf:
 * three-way agreement between the smallest-parts double product form,
 * the coupled double sum, and P Phi_1^2 + the theorem tail series. */
VerificationReport verify_theorem1(int order);

/* Just the two left-hand forms against each other. */
VerificationReport verify_theorem1_forms_agree(int order);

/* P * sum_{n != 0} (-1)^n q^{3n(n+1)/2} / (1 - q^n)^4, the tail of the
 * identity above; equals the negation of the corrected eta_4 generating
 * function. */
QSeries theorem1_tail_series(int order);

}
