#include "qspt/report.hpp"

#include <sstream>
#include <stdexcept>

namespace qspt {

const char* to_string(Variant v)
{
	switch (v) {
	case Variant::printed: return "printed";
	case Variant::corrected: return "corrected";
	case Variant::none: return "n/a";
	}
	return "n/a";
}

Variant parse_variant(const std::string& text)
{
	if (text == "printed") return Variant::printed;
	if (text == "corrected") return Variant::corrected;
	throw std::invalid_argument("unknown variant \"" + text + "\" (expected printed|corrected)");
}

void VerificationReport::record_failure(long n, Rational lhs, Rational rhs)
{
	status = CheckStatus::fail;
	FirstFailure f;
	f.n = n;
	f.diff = lhs - rhs;
	f.lhs = std::move(lhs);
	f.rhs = std::move(rhs);
	first_failure = std::move(f);
}

nlohmann::json to_json(const VerificationReport& r)
{
	nlohmann::json j{
	    {"identity", r.identity},
	    {"variant", to_string(r.variant)},
	    {"order", r.order},
	    {"status", r.status == CheckStatus::pass ? "pass" : "fail"},
	    {"first_failure", nullptr},
	    {"runtime_ms", r.runtime_ms},
	};
	if (r.first_failure) {
		j["first_failure"] = nlohmann::json{
		    {"n", r.first_failure->n},
		    {"lhs", r.first_failure->lhs.to_string()},
		    {"rhs", r.first_failure->rhs.to_string()},
		    {"diff", r.first_failure->diff.to_string()},
		};
	}
	return j;
}

std::string to_text(const VerificationReport& r)
{
	std::ostringstream os;
	os << (r.status == CheckStatus::pass ? "pass" : "FAIL") << "  " << r.identity;
	if (r.variant != Variant::none) os << " [" << to_string(r.variant) << "]";
	os << "  order=" << r.order;
	if (r.first_failure) {
		os << "  first failure at n=" << r.first_failure->n
		   << ": lhs=" << r.first_failure->lhs.to_string()
		   << " rhs=" << r.first_failure->rhs.to_string()
		   << " diff=" << r.first_failure->diff.to_string();
	}
	if (!r.note.empty()) os << "  (" << r.note << ")";
	os << "  [" << r.runtime_ms << " ms]";
	return os.str();
}

VerificationReport compare_series(std::string identity, Variant variant, int order,
				  const QSeries& lhs, const QSeries& rhs)
{
	if (lhs.order() < order || rhs.order() < order)
		throw std::invalid_argument("compare_series: series shorter than requested order");
	VerificationReport r;
	r.identity = std::move(identity);
	r.variant = variant;
	r.order = order;
	for (int n = 0; n <= order; ++n) {
		if (!(lhs[n] == rhs[n])) {
			r.record_failure(n, lhs[n], rhs[n]);
			break;
		}
	}
	return r;
}

}
