#include "qspt/verifier.hpp"

#include <algorithm>
#include <stdexcept>

#include "qspt/bailey.hpp"
#include "qspt/oracle.hpp"
#include "qspt/qseries.hpp"
#include "qspt/spt_series.hpp"

namespace qspt {

const QSeries& VerifierContext::euler(int order)
{
	if (euler_.size < order) {
		euler_.value = euler_p(order);
		euler_.size = order;
	}
	return *euler_.value;
}

const QSeries& VerifierContext::phi1(int order)
{
	if (phi1_.size < order) {
		phi1_.value = lambert_phi(1, order);
		phi1_.size = order;
	}
	return *phi1_.value;
}

const QSeries& VerifierContext::phi3(int order)
{
	if (phi3_.size < order) {
		phi3_.value = lambert_phi(3, order);
		phi3_.size = order;
	}
	return *phi3_.value;
}

const QSeries& VerifierContext::spt_plus(int order)
{
	if (spt_plus_.size < order) {
		spt_plus_.value = spt_plus_series(order);
		spt_plus_.size = order;
	}
	return *spt_plus_.value;
}

const QSeries& VerifierContext::spt_total(int order)
{
	if (spt_total_.size < order) {
		spt_total_.value = spt_total_series(order);
		spt_total_.size = order;
	}
	return *spt_total_.value;
}

const StatTable& VerifierContext::rank(int upto)
{
	if (rank_.size < upto) {
		rank_.value = rank_table(upto);
		rank_.size = upto;
	}
	return *rank_.value;
}

const StatTable& VerifierContext::crank(int upto)
{
	if (crank_.size < upto) {
		crank_.value = crank_table(upto);
		crank_.size = upto;
	}
	return *crank_.value;
}

CongruenceStat parse_congruence_stat(const std::string& name)
{
	if (name == "SPT_plus") return CongruenceStat::spt_plus;
	if (name == "M4") return CongruenceStat::m4;
	if (name == "eta4") return CongruenceStat::eta4;
	if (name == "M2") return CongruenceStat::m2;
	if (name == "spt_j") return CongruenceStat::spt_j;
	throw std::invalid_argument("unknown congruence stat \"" + name +
				    "\" (expected SPT_plus|M4|eta4|M2|spt_j)");
}

const char* to_string(CongruenceStat stat)
{
	switch (stat) {
	case CongruenceStat::spt_plus: return "SPT_plus";
	case CongruenceStat::m4: return "M4";
	case CongruenceStat::eta4: return "eta4";
	case CongruenceStat::m2: return "M2";
	case CongruenceStat::spt_j: return "spt_j";
	}
	return "?";
}

namespace {

/* C_k = sum_{n>=1} M_k(n) q^n from the crank table. */
QSeries crank_moment_series(VerifierContext& ctx, int k, int order)
{
	const StatTable& crank = ctx.crank(order);
	QSeries s(order);
	for (int n = 1; n <= order; ++n) s.set(n, crank_moment(k, n, crank));
	return s;
}

QSeries scaled(QSeries s, const Rational& c)
{
	s.scale(c);
	return s;
}

}

VerificationReport check_eq8(VerifierContext& ctx, int order)
{
	Stopwatch timer;
	const QSeries& p = ctx.euler(order);
	const QSeries& phi1 = ctx.phi1(order);
	const QSeries& phi3 = ctx.phi3(order);
	const QSeries lhs = delta_q(delta_q(p));
	QSeries combo = scaled(phi1 * phi1, Rational(6)) - scaled(phi3, Rational(5)) - phi1;
	const QSeries rhs = scaled(p * combo, Rational(-1, 6));
	VerificationReport rep = compare_series("eq8", Variant::none, order, lhs, rhs);
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport check_eq9(VerifierContext& ctx, int order)
{
	Stopwatch timer;
	const QSeries lhs = crank_moment_series(ctx, 4, order);
	const QSeries& p = ctx.euler(order);
	const QSeries& phi1 = ctx.phi1(order);
	const QSeries& phi3 = ctx.phi3(order);
	const QSeries rhs = scaled(p * (phi3 + scaled(phi1 * phi1, Rational(6))), Rational(2));
	VerificationReport rep = compare_series("eq9", Variant::none, order, lhs, rhs);
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport check_eq10(VerifierContext& ctx, int order, Variant variant)
{
	if (variant == Variant::none)
		throw std::invalid_argument("eq10 requires a printed or corrected variant");
	Stopwatch timer;
	const QSeries& p = ctx.euler(order);
	const QSeries& phi1 = ctx.phi1(order);
	const QSeries lhs = delta_q(delta_q(p));
	const Rational c = variant == Variant::printed ? Rational(-5, 6) : Rational(1, 6);
	QSeries rhs = scaled(crank_moment_series(ctx, 4, order), Rational(5, 12)) -
		      scaled(p * (phi1 * phi1), Rational(6)) + scaled(p * phi1, c);
	VerificationReport rep = compare_series("eq10", variant, order, lhs, rhs);
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport check_eq11(VerifierContext& ctx, int order, Variant variant)
{
	if (variant == Variant::none)
		throw std::invalid_argument("eq11 requires a printed or corrected variant");
	Stopwatch timer;
	const QSeries& p = ctx.euler(order);
	const QSeries& phi1 = ctx.phi1(order);
	const QSeries lhs = p * (phi1 * phi1);
	const Rational c = variant == Variant::printed ? Rational(-5, 36) : Rational(1, 36);
	QSeries rhs = scaled(crank_moment_series(ctx, 4, order), Rational(5, 72)) -
		      scaled(delta_q(delta_q(p)), Rational(1, 6)) + scaled(p * phi1, c);
	VerificationReport rep = compare_series("eq11", variant, order, lhs, rhs);
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport check_eq7(VerifierContext& ctx, int order, Variant variant)
{
	if (variant == Variant::none)
		throw std::invalid_argument("eq7_eta_gf requires a printed or corrected variant");
	Stopwatch timer;
	VerificationReport rep;
	rep.identity = "eq7_eta_gf";
	rep.variant = variant;
	rep.order = order;
	const StatTable& rank = ctx.rank(order);
	const SignVariant sign =
	    variant == Variant::printed ? SignVariant::printed : SignVariant::corrected;
	for (const int k : {1, 2}) {
		const QSeries gf = eta2k_gf(k, order, sign);
		for (int n = 0; n <= order; ++n) {
			const Rational expected = eta_k(2 * k, n, rank);
			if (!(gf[n] == expected)) {
				rep.record_failure(n, gf[n], expected);
				rep.note = "k = " + std::to_string(k) +
					   ": generating function vs binomial definition";
				rep.runtime_ms = timer.elapsed_ms();
				return rep;
			}
		}
	}
	rep.note = "k in {1, 2}";
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

namespace {

Rational thm2_rhs(VerifierContext& ctx, int n, Variant variant, const StatTable& rank,
		  const StatTable& crank)
{
	const Rational pn = ctx.p(n);
	const Rational np = Rational(n) * pn;
	Rational rhs = Rational(5, 72) * crank_moment(4, n, crank) -
		       Rational(1, 6) * Rational(n) * np;
	if (variant == Variant::printed)
		rhs += Rational(-5, 36) * np + eta_k(4, n, rank);
	else
		rhs += Rational(1, 36) * np - eta_k(4, n, rank);
	return rhs;
}

}

VerificationReport check_thm2(VerifierContext& ctx, int order, Variant variant)
{
	if (variant == Variant::none)
		throw std::invalid_argument("thm2 requires a printed or corrected variant");
	Stopwatch timer;
	VerificationReport rep;
	rep.identity = "thm2";
	rep.variant = variant;
	rep.order = order;
	const QSeries& sptp = ctx.spt_plus(order);
	const StatTable& rank = ctx.rank(order);
	const StatTable& crank = ctx.crank(order);
	for (int n = 0; n <= order; ++n) {
		const Rational rhs = thm2_rhs(ctx, n, variant, rank, crank);
		if (!(sptp[n] == rhs)) {
			rep.record_failure(n, sptp[n], rhs);
			break;
		}
	}
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport check_congruence(VerifierContext& ctx, CongruenceStat stat, long modulus,
				    long stride, int upto, int j)
{
	if (modulus < 2) throw std::invalid_argument("check_congruence: modulus must be >= 2");
	if (stride < 1) throw std::invalid_argument("check_congruence: stride must be >= 1");
	if (stat == CongruenceStat::spt_j && j < 1)
		throw std::invalid_argument("check_congruence: spt_j probe needs j >= 1");
	Stopwatch timer;
	VerificationReport rep;
	rep.identity = std::string("congruence_") + to_string(stat) + "_mod" +
		       std::to_string(modulus);
	rep.order = upto;

	std::optional<QSeries> probe;
	if (stat == CongruenceStat::spt_j) probe = spt_j_series(j, upto);

	for (long t = stride; t <= upto; t += stride) {
		Rational value;
		switch (stat) {
		case CongruenceStat::spt_plus: value = ctx.spt_plus(upto)[static_cast<int>(t)]; break;
		case CongruenceStat::m4: value = crank_moment(4, static_cast<int>(t), ctx.crank(upto)); break;
		case CongruenceStat::eta4: value = eta_k(4, static_cast<int>(t), ctx.rank(upto)); break;
		case CongruenceStat::m2: value = crank_moment(2, static_cast<int>(t), ctx.crank(upto)); break;
		case CongruenceStat::spt_j: value = (*probe)[static_cast<int>(t)]; break;
		}
		const long residue = mod_reduce(value, modulus);
		if (residue != 0) {
			rep.record_failure(t, Rational(residue), Rational::zero());
			rep.note = std::string(to_string(stat)) + "(" + std::to_string(t) +
				   ") = " + value.to_string();
			break;
		}
	}
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport check_thm3(VerifierContext& ctx, long modulus, int upto)
{
	Stopwatch timer;
	VerificationReport rep;
	rep.identity = modulus == 7 ? "thm3_mod7" : modulus == 11 ? "thm3_mod11"
			: "thm3_mod" + std::to_string(modulus);
	rep.order = upto;
	const QSeries& sptp = ctx.spt_plus(upto);
	const StatTable& rank = ctx.rank(upto);
	const StatTable& crank = ctx.crank(upto);
	for (long t = modulus; t <= upto; t += modulus) {
		const Rational series_route = sptp[static_cast<int>(t)];
		const Rational moment_route =
		    thm2_rhs(ctx, static_cast<int>(t), Variant::corrected, rank, crank);
		if (!(series_route == moment_route)) {
			rep.record_failure(t, series_route, moment_route);
			rep.note = "series route and corrected moment route disagree";
			break;
		}
		const long residue = mod_reduce(series_route, modulus);
		if (residue != 0) {
			rep.record_failure(t, Rational(residue), Rational::zero());
			rep.note = "SPT_plus(" + std::to_string(t) + ") = " +
				   series_route.to_string() + ", both routes";
			break;
		}
	}
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport check_eta4_relation(VerifierContext& ctx, int upto)
{
	Stopwatch timer;
	VerificationReport rep;
	rep.identity = "eta4_relation";
	rep.order = upto;
	const StatTable& rank = ctx.rank(upto);
	for (int n = 0; n <= upto; ++n) {
		const Rational lhs = eta_k(4, n, rank);
		const Rational rhs =
		    (rank_moment(4, n, rank) - rank_moment(2, n, rank)) * Rational(1, 24);
		if (!(lhs == rhs)) {
			rep.record_failure(n, lhs, rhs);
			break;
		}
	}
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport check_spt_relation(VerifierContext& ctx, int upto, int oracle_upto)
{
	Stopwatch timer;
	VerificationReport rep;
	rep.identity = "spt_relation";
	rep.order = upto;
	const QSeries& spt = ctx.spt_total(upto);
	const StatTable& rank = ctx.rank(upto);
	for (int n = 0; n <= upto; ++n) {
		const Rational moment_route =
		    Rational(n) * ctx.p(n) - Rational(1, 2) * rank_moment(2, n, rank);
		if (!(spt[n] == moment_route)) {
			rep.record_failure(n, spt[n], moment_route);
			rep.note = "series route vs moment route";
			break;
		}
		if (n <= oracle_upto && !(Rational(oracle_spt(n)) == moment_route)) {
			rep.record_failure(n, Rational(oracle_spt(n)), moment_route);
			rep.note = "oracle vs moment route";
			break;
		}
	}
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport check_sptj_sum(VerifierContext& ctx, int upto, int oracle_upto)
{
	Stopwatch timer;
	VerificationReport rep;
	rep.identity = "sptj_sum";
	rep.order = upto;

	QSeries sum(upto);
	for (int j = 1; j <= upto; ++j) sum = sum + spt_j_series(j, upto);

	const StatTable& rank = ctx.rank(upto);
	for (int n = 0; n <= upto; ++n) {
		const Rational expected =
		    n <= oracle_upto
			? Rational(oracle_spt(n))
			: Rational(n) * ctx.p(n) - Rational(1, 2) * rank_moment(2, n, rank);
		if (!(sum[n] == expected)) {
			rep.record_failure(n, sum[n], expected);
			rep.note = n <= oracle_upto ? "sum of spt_j vs oracle spt"
						    : "sum of spt_j vs moment route";
			break;
		}
	}
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

VerificationReport check_component_congruences(VerifierContext& ctx, int upto7, int upto11)
{
	Stopwatch timer;
	VerificationReport rep;
	rep.identity = "component_congruences";
	rep.order = upto7;
	const struct {
		CongruenceStat stat;
		long modulus;
		int upto;
	} scans[] = {
	    {CongruenceStat::m4, 7, upto7},   {CongruenceStat::eta4, 7, upto7},
	    {CongruenceStat::m2, 7, upto7},   {CongruenceStat::m4, 11, upto11},
	    {CongruenceStat::eta4, 11, upto11},
	};
	for (const auto& scan : scans) {
		VerificationReport sub =
		    check_congruence(ctx, scan.stat, scan.modulus, scan.modulus, scan.upto);
		if (!sub.passed()) {
			rep.status = CheckStatus::fail;
			rep.first_failure = sub.first_failure;
			rep.note = sub.identity + (sub.note.empty() ? "" : ": " + sub.note);
			break;
		}
	}
	if (rep.passed())
		rep.note = "M4, eta4, M2 mod 7 to " + std::to_string(upto7) +
			   "; M4, eta4 mod 11 to " + std::to_string(upto11);
	rep.runtime_ms = timer.elapsed_ms();
	return rep;
}

const std::vector<RegistryEntry>& identity_registry()
{
	static const std::vector<RegistryEntry> registry = {
	    {"eq1_pair", Variant::none, CheckStatus::pass, 80},
	    {"eq2_specialized", Variant::none, CheckStatus::pass, 60},
	    {"eq5", Variant::none, CheckStatus::pass, 60},
	    {"thm1", Variant::none, CheckStatus::pass, 60},
	    {"thm1_rearranged_equals_sptplus", Variant::none, CheckStatus::pass, 60},
	    {"eq7_eta_gf", Variant::printed, CheckStatus::fail, 60},
	    {"eq7_eta_gf", Variant::corrected, CheckStatus::pass, 60},
	    {"eq8", Variant::none, CheckStatus::pass, 200},
	    {"eq9", Variant::none, CheckStatus::pass, 200},
	    {"eq10", Variant::printed, CheckStatus::fail, 200},
	    {"eq10", Variant::corrected, CheckStatus::pass, 200},
	    {"eq11", Variant::printed, CheckStatus::fail, 200},
	    {"eq11", Variant::corrected, CheckStatus::pass, 200},
	    {"thm2", Variant::printed, CheckStatus::fail, 200},
	    {"thm2", Variant::corrected, CheckStatus::pass, 200},
	    {"thm3_mod7", Variant::none, CheckStatus::pass, 490},
	    {"thm3_mod11", Variant::none, CheckStatus::pass, 440},
	    {"eta4_relation", Variant::none, CheckStatus::pass, 300},
	    {"spt_relation", Variant::none, CheckStatus::pass, 300},
	    {"sptj_sum", Variant::none, CheckStatus::pass, 300},
	    {"component_congruences", Variant::none, CheckStatus::pass, 490},
	};
	return registry;
}

bool is_known_identity(const std::string& id)
{
	for (const RegistryEntry& e : identity_registry())
		if (e.id == id) return true;
	return false;
}

bool identity_takes_variant(const std::string& id)
{
	for (const RegistryEntry& e : identity_registry())
		if (e.id == id) return e.variant != Variant::none;
	return false;
}

CheckStatus expected_status(const std::string& id, Variant variant)
{
	for (const RegistryEntry& e : identity_registry())
		if (e.id == id && e.variant == variant) return e.expected;
	throw std::invalid_argument("unknown identity \"" + id + "\"");
}

namespace {

int default_order(const std::string& id)
{
	for (const RegistryEntry& e : identity_registry())
		if (e.id == id) return e.default_order;
	throw std::invalid_argument("unknown identity \"" + id + "\"");
}

int pair_bound_for(int order) { return std::min(25, std::max(1, order / 3)); }

}

VerificationReport run_identity(VerifierContext& ctx, const std::string& id, int order,
				std::optional<Variant> variant)
{
	if (!is_known_identity(id)) throw std::invalid_argument("unknown identity \"" + id + "\"");
	const bool takes_variant = identity_takes_variant(id);
	if (variant && !takes_variant)
		throw std::invalid_argument("identity \"" + id + "\" takes no variant");
	const Variant v = takes_variant ? variant.value_or(Variant::corrected) : Variant::none;
	if (order <= 0) order = default_order(id);

	if (id == "eq1_pair") return verify_pair(pair_bound_for(order), order);
	if (id == "eq2_specialized") {
		VerificationReport a = verify_eq2_specialized(Rational(2), Rational(3), Rational(5),
							      Rational(7), order);
		if (!a.passed()) return a;
		VerificationReport b =
		    verify_eq2_specialized(Rational(1, 2), Rational(1, 3), Rational(1, 5),
					   Rational(1, 7), order);
		b.note = "quadruples (2,3,5,7) and (1/2,1/3,1/5,1/7)";
		b.runtime_ms += a.runtime_ms;
		return b;
	}
	if (id == "eq5") return verify_eq5(order);
	if (id == "thm1") return verify_theorem1(order);
	if (id == "thm1_rearranged_equals_sptplus") return verify_theorem1_forms_agree(order);
	if (id == "eq7_eta_gf") return check_eq7(ctx, order, v);
	if (id == "eq8") return check_eq8(ctx, order);
	if (id == "eq9") return check_eq9(ctx, order);
	if (id == "eq10") return check_eq10(ctx, order, v);
	if (id == "eq11") return check_eq11(ctx, order, v);
	if (id == "thm2") return check_thm2(ctx, order, v);
	if (id == "thm3_mod7") return check_thm3(ctx, 7, order);
	if (id == "thm3_mod11") return check_thm3(ctx, 11, order);
	if (id == "eta4_relation") return check_eta4_relation(ctx, order);
	if (id == "spt_relation")
		return check_spt_relation(ctx, order, std::min(order, 35));
	if (id == "sptj_sum") return check_sptj_sum(ctx, order, std::min(order, 35));
	if (id == "component_congruences")
		return check_component_congruences(ctx, order, std::min(order, 440));
	throw std::invalid_argument("unknown identity \"" + id + "\"");
}

RunAllResult run_all(VerifierContext& ctx, int order)
{
	RunAllResult result;
	for (const RegistryEntry& e : identity_registry()) {
		std::optional<Variant> v;
		if (e.variant != Variant::none) v = e.variant;
		VerificationReport rep = run_identity(ctx, e.id, order, v);
		if ((rep.status == CheckStatus::pass) != (e.expected == CheckStatus::pass))
			result.expectations_met = false;
		result.reports.push_back(std::move(rep));
	}
	return result;
}

}
