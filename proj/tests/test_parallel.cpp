#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "qspt/bailey.hpp"
#include "qspt/oracle.hpp"
#include "qspt/parallel.hpp"
#include "qspt/qseries.hpp"
#include "qspt/spt_series.hpp"
#include "qspt/stat_tables.hpp"

using namespace qspt;

namespace {

/* Restores the kernel switch on scope exit. */
struct ParallelGuard {
	bool saved = parallel::enabled();
	~ParallelGuard() { parallel::set_enabled(saved); }
};

}

TEST_CASE("multiplication kernels agree on random input")
{
	std::mt19937 rng(2024);
	for (int rep = 0; rep < 10; ++rep) {
		const int order = 64 + static_cast<int>(rng() % 200);
		const QSeries a = test::random_series(rng, order, false);
		const QSeries b = test::random_series(rng, order, false);
		CHECK(QSeries::mul_serial(a, b) == QSeries::mul_parallel(a, b));
	}
}

TEST_CASE("dispatching operator* is kernel-independent")
{
	ParallelGuard guard;
	std::mt19937 rng(55);
	const QSeries a = test::random_series(rng, 150, false);
	const QSeries b = test::random_series(rng, 150, false);
	parallel::set_enabled(true);
	const QSeries fast = a * b;
	parallel::set_enabled(false);
	const QSeries slow = a * b;
	CHECK(fast == slow);
}

TEST_CASE("rank table is kernel-independent")
{
	ParallelGuard guard;
	parallel::set_enabled(true);
	const StatTable fast = rank_table(70);
	parallel::set_enabled(false);
	const StatTable slow = rank_table(70);
	REQUIRE(fast.upto == slow.upto);
	for (int n = 0; n <= fast.upto; ++n) CHECK(fast.row(n) == slow.row(n));
}

TEST_CASE("spt_plus is kernel-independent")
{
	ParallelGuard guard;
	parallel::set_enabled(true);
	const QSeries fast = spt_plus_series(120);
	parallel::set_enabled(false);
	const QSeries slow = spt_plus_series(120);
	CHECK(fast == slow);
}

TEST_CASE("pair verification is kernel-independent")
{
	ParallelGuard guard;
	parallel::set_enabled(true);
	const VerificationReport fast = verify_pair(8, 40);
	parallel::set_enabled(false);
	const VerificationReport slow = verify_pair(8, 40);
	CHECK(fast.passed());
	CHECK(slow.passed());
}

TEST_CASE("oracle tables are kernel-independent")
{
	ParallelGuard guard;
	parallel::set_enabled(true);
	const OracleTables fast = oracle_stat_tables(25);
	parallel::set_enabled(false);
	const OracleTables slow = oracle_stat_tables(25);
	for (int n = 0; n <= 25; ++n) {
		CHECK(fast.rank.row(n) == slow.rank.row(n));
		CHECK(fast.crank.row(n) == slow.crank.row(n));
	}
}
