#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qspt/oracle.hpp"
#include "qspt/parallel.hpp"
#include "qspt/qseries.hpp"
#include "qspt/spt_series.hpp"
#include "qspt/stat_tables.hpp"
#include "qspt/verifier.hpp"

namespace {

using namespace qspt;

enum class Format { csv, json, text };

Format parse_format(const std::string& f)
{
	if (f == "csv") return Format::csv;
	if (f == "json") return Format::json;
	if (f == "text") return Format::text;
	throw std::invalid_argument("unknown format \"" + f + "\"");
}

void emit_report(const VerificationReport& rep, Format format)
{
	if (format == Format::json)
		std::cout << to_json(rep).dump() << "\n";
	else
		std::cout << to_text(rep) << "\n";
}

int run_compute(const std::string& stat, int j, int k, int upto, Format format)
{
	VerifierContext ctx;
	std::vector<std::pair<int, Rational>> values;
	values.reserve(static_cast<size_t>(upto) + 1);

	const auto from_series = [&](const QSeries& s) {
		for (int n = 0; n <= upto; ++n) values.emplace_back(n, s[n]);
	};
	if (stat == "p") {
		from_series(euler_p(upto));
	} else if (stat == "spt") {
		from_series(spt_total_series(upto));
	} else if (stat == "spt_j") {
		from_series(spt_j_series(j, upto));
	} else if (stat == "spt_j_star") {
		from_series(spt_j_star_series(j, upto));
	} else if (stat == "SPT_plus") {
		from_series(spt_plus_series(upto));
	} else if (stat == "N_k" || stat == "eta_k") {
		const StatTable& rank = ctx.rank(upto);
		for (int n = 0; n <= upto; ++n)
			values.emplace_back(n, stat == "N_k" ? rank_moment(k, n, rank)
							     : eta_k(k, n, rank));
	} else if (stat == "M_k" || stat == "mu_k") {
		const StatTable& crank = ctx.crank(upto);
		for (int n = 0; n <= upto; ++n)
			values.emplace_back(n, stat == "M_k" ? crank_moment(k, n, crank)
							     : mu_k(k, n, crank));
	} else {
		throw std::invalid_argument("unknown stat \"" + stat + "\"");
	}

	if (format == Format::json) {
		nlohmann::json arr = nlohmann::json::array();
		for (const auto& [n, v] : values)
			arr.push_back({{"n", n}, {"value", v.to_string()}});
		std::cout << arr.dump() << "\n";
	} else {
		std::cout << "n,value\n";
		for (const auto& [n, v] : values) std::cout << n << "," << v.to_string() << "\n";
	}
	return 0;
}

int run_table(const std::string& which, int upto, Format format)
{
	StatTable table;
	if (which == "rank")
		table = rank_table(upto);
	else if (which == "crank")
		table = crank_table(upto);
	else
		throw std::invalid_argument("unknown table \"" + which + "\" (expected rank|crank)");

	if (format == Format::json) {
		nlohmann::json arr = nlohmann::json::array();
		for (int n = 0; n <= upto; ++n) {
			const LaurentPoly& row = table.row(n);
			if (row.is_zero()) continue;
			for (long m = row.lo(); m <= row.hi(); ++m)
				if (sgn(row.coeff(m)) != 0)
					arr.push_back({{"n", n}, {"m", m}, {"count", row.coeff(m).get_str()}});
		}
		std::cout << arr.dump() << "\n";
	} else {
		std::cout << "n,m,count\n";
		for (int n = 0; n <= upto; ++n) {
			const LaurentPoly& row = table.row(n);
			if (row.is_zero()) continue;
			for (long m = row.lo(); m <= row.hi(); ++m)
				if (sgn(row.coeff(m)) != 0)
					std::cout << n << "," << m << "," << row.coeff(m).get_str() << "\n";
		}
	}
	return 0;
}

}

int main(int argc, char** argv)
{
	CLI::App app{"Exact q-series verification of partition statistics and identities"};
	app.require_subcommand(1);

	int threads = 0;
	bool serial = false;
	app.add_option("--threads", threads, "OpenMP thread count (0 = library default)");
	app.add_flag("--serial", serial, "disable the parallel kernels");

	auto* compute = app.add_subcommand("compute", "tabulate a statistic as (n, value) rows");
	std::string stat, format_name = "csv";
	int j = 1, k = 2, upto = 0;
	compute->add_option("--stat", stat,
			    "one of p|spt|spt_j|spt_j_star|SPT_plus|N_k|M_k|eta_k|mu_k")
	    ->required();
	compute->add_option("--j", j, "part size for spt_j / spt_j_star");
	compute->add_option("--k", k, "moment order for N_k / M_k / eta_k / mu_k");
	compute->add_option("--upto", upto, "largest n")->required();
	compute->add_option("--format", format_name, "csv|json");

	auto* verify = app.add_subcommand("verify", "check one registered identity");
	std::string identity, variant_name, verify_format = "text";
	int order = 0;
	verify->add_option("--identity", identity, "registered identity id")->required();
	verify->add_option("--variant", variant_name, "printed|corrected");
	verify->add_option("--order", order, "truncation order (0 = identity default)");
	verify->add_option("--format", verify_format, "text|json");

	auto* verify_all = app.add_subcommand("verify-all", "run the whole identity registry");
	int all_order = 0;
	std::string all_format = "text";
	verify_all->add_option("--order", all_order, "truncation order (0 = per-identity defaults)");
	verify_all->add_option("--format", all_format, "text|json");

	auto* congruence = app.add_subcommand("congruence", "scan stat(stride*n) mod m");
	std::string cong_stat, cong_format = "text";
	long modulus = 0, stride = 0;
	int cong_upto = 0, cong_j = 0;
	congruence->add_option("--stat", cong_stat, "SPT_plus|M4|eta4|M2|spt_j")->required();
	congruence->add_option("--j", cong_j, "part size for the spt_j probe");
	congruence->add_option("--mod", modulus, "modulus")->required();
	congruence->add_option("--stride", stride, "stride")->required();
	congruence->add_option("--upto", cong_upto, "largest n scanned")->required();
	congruence->add_option("--format", cong_format, "text|json");

	auto* table = app.add_subcommand("table", "dump a full statistic table as (n, m, count)");
	std::string table_stat, table_format = "csv";
	int table_upto = 0;
	table->add_option("--stat", table_stat, "rank|crank")->required();
	table->add_option("--upto", table_upto, "largest n")->required();
	table->add_option("--format", table_format, "csv|json");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	if (threads > 0) omp_set_num_threads(threads);
	if (serial) parallel::set_enabled(false);

	try {
		if (*compute) return run_compute(stat, j, k, upto, parse_format(format_name));
		if (*table) return run_table(table_stat, table_upto, parse_format(table_format));
		if (*verify) {
			VerifierContext ctx;
			std::optional<Variant> variant;
			if (!variant_name.empty()) variant = parse_variant(variant_name);
			const VerificationReport rep = run_identity(ctx, identity, order, variant);
			emit_report(rep, parse_format(verify_format));
			const Variant effective =
			    identity_takes_variant(identity) ? variant.value_or(Variant::corrected)
							     : Variant::none;
			return rep.status == expected_status(identity, effective) ? 0 : 1;
		}
		if (*verify_all) {
			VerifierContext ctx;
			const RunAllResult result = run_all(ctx, all_order);
			const Format f = parse_format(all_format);
			if (f == Format::json) {
				nlohmann::json arr = nlohmann::json::array();
				for (const auto& rep : result.reports) arr.push_back(to_json(rep));
				std::cout << arr.dump() << "\n";
			} else {
				for (const auto& rep : result.reports)
					std::cout << to_text(rep) << "\n";
				std::cout << (result.expectations_met
						  ? "all expectations met\n"
						  : "EXPECTATION VIOLATED\n");
			}
			return result.expectations_met ? 0 : 1;
		}
		if (*congruence) {
			VerifierContext ctx;
			const VerificationReport rep =
			    check_congruence(ctx, parse_congruence_stat(cong_stat), modulus,
					     stride, cong_upto, cong_j);
			emit_report(rep, parse_format(cong_format));
			return rep.passed() ? 0 : 1;
		}
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 1;
	}
	return 2;
}
