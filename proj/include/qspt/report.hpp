#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "qspt/rational.hpp"
#include "qspt/truncated_series.hpp"

#include "json.hpp"

namespace qspt {

enum class Variant { printed, corrected, none };

const char* to_string(Variant v);
Variant parse_variant(const std::string& text); // "printed" | "corrected"

enum class CheckStatus { pass, fail };

struct FirstFailure {
	long n = 0;
	Rational lhs;
	Rational rhs;
	Rational diff; // lhs - rhs
};

/* Outcome of one identity check. A fail always carries the first failing
 * coefficient; a pass never does. */
struct VerificationReport {
	std::string identity;
	Variant variant = Variant::none;
	int order = 0;
	CheckStatus status = CheckStatus::pass;
	std::optional<FirstFailure> first_failure;
	long runtime_ms = 0;
	std::string note; // extra context for human output; not serialized

	bool passed() const { return status == CheckStatus::pass; }

	void record_failure(long n, Rational lhs, Rational rhs);
};

/* {"identity", "variant", "order", "status", "first_failure", "runtime_ms"};
 * first_failure is null on pass, otherwise {"n", "lhs", "rhs", "diff"} with
 * the rationals rendered as "p" / "p/q" strings. */
nlohmann::json to_json(const VerificationReport& r);

std::string to_text(const VerificationReport& r);

/* Coefficient-wise comparison of two series up to `order`, reported under
 * the given identity name. Both series must extend at least that far. */
VerificationReport compare_series(std::string identity, Variant variant, int order,
				  const QSeries& lhs, const QSeries& rhs);

/* Wall-clock helper so every check can fill runtime_ms the same way. */
class Stopwatch {
public:
	Stopwatch() : start_(std::chrono::steady_clock::now()) {}
	long elapsed_ms() const
	{
		const auto d = std::chrono::steady_clock::now() - start_;
		return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
	}

private:
	std::chrono::steady_clock::time_point start_;
};

}
