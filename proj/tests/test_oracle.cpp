#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "qspt/oracle.hpp"

using namespace qspt;

TEST_CASE("enumeration counts match the classic table")
{
	const long long expected[] = {1,  1,  2,  3,  5,  7,  11, 15,  22,  30, 42,
				      56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
	for (int n = 0; n <= 20; ++n) CHECK(count_partitions(n) == expected[n]);
	CHECK(count_partitions(40) == 37338);
}

TEST_CASE("enumeration is descending lexicographic and duplicate-free")
{
	for (int n = 0; n <= 12; ++n) {
		std::vector<std::vector<int>> seen;
		enumerate_partitions(n, [&](const Partition& part) {
			const std::vector<int>& parts = part.parts;
			int sum = 0;
			for (size_t i = 0; i < parts.size(); ++i) {
				sum += parts[i];
				CHECK(parts[i] >= 1);
				if (i > 0) CHECK(parts[i - 1] >= parts[i]);
			}
			CHECK(sum == n);
			if (!seen.empty()) CHECK(seen.back() > parts); // strictly descending
			seen.push_back(parts);
		});
		CHECK(static_cast<long long>(seen.size()) == count_partitions(n));
	}
}

TEST_CASE("oracle bound is enforced")
{
	CHECK_THROWS_AS(count_partitions(41), std::out_of_range);
	CHECK_THROWS_AS(count_partitions(-1), std::out_of_range);
	CHECK(count_partitions(45, 50) == 89134); // raised bound
}

TEST_CASE("rank of a partition")
{
	CHECK(rank_of({3}) == 2);
	CHECK(rank_of({2, 1}) == 0);
	CHECK(rank_of({1, 1, 1}) == -2);
	CHECK(rank_of({}) == 0);
}

TEST_CASE("crank of a partition")
{
	CHECK(crank_of({4}) == 4);
	CHECK(crank_of({2, 1, 1}) == -2); // two ones, no part > 2
	CHECK(crank_of({3, 1}) == 0);     // one one, one part > 1
	CHECK(crank_of({1}) == -1);
	CHECK_THROWS_AS(crank_of({}), std::invalid_argument);
}

TEST_CASE("oracle stat tables")
{
	const OracleTables t = oracle_stat_tables(10);
	CHECK(t.rank.row(0).to_string() == "1");
	CHECK(t.rank.count(1, 2) == 1);
	CHECK(t.rank.count(-1, 2) == 1);
	CHECK(t.rank.count(0, 2) == 0);
	CHECK(t.crank.count(4, 4) == 1);
	CHECK(t.crank.count(2, 4) == 1);
	CHECK(t.crank.count(0, 4) == 1);
	CHECK(t.crank.count(-2, 4) == 1);
	CHECK(t.crank.count(-4, 4) == 1);
	CHECK(t.crank.row(1).to_string() == "z^-1"); // combinatorial crank of (1)
	for (int n = 0; n <= 10; ++n) {
		CHECK(t.rank.row(n).value_at_one().get_si() == count_partitions(n));
		CHECK(t.crank.row(n).value_at_one().get_si() == count_partitions(n));
		CHECK(t.rank.row(n).symmetric());
		if (n != 1) CHECK(t.crank.row(n).symmetric());
	}
}

TEST_CASE("smallest-part counters")
{
	CHECK(oracle_spt_j(1, 3) == 4); // (2,1) once, (1,1,1) three times
	CHECK(oracle_spt_j(2, 3) == 0);
	for (int n = 1; n <= 12; ++n) CHECK(oracle_spt_j(n, n) == 1);

	CHECK(oracle_spt_j_star(1, 3) == 5); // (3):1, (2,1):1, (1,1,1):3
	CHECK(oracle_spt_j_star(2, 2) == 3); // (2):1, (1,1):2
	for (int j = 1; j <= 6; ++j) CHECK(oracle_spt_j_star(j, 1) == 1);

	CHECK(oracle_spt(1) == 1);
	CHECK(oracle_spt(2) == 3);
	CHECK(oracle_spt(3) == 5);
	CHECK(oracle_spt(4) == 10);

	for (int n = 1; n <= 35; ++n) {
		CHECK(oracle_spt(n) >= count_partitions(n));
		long long sum = 0;
		for (int j = 1; j <= n; ++j) sum += oracle_spt_j(j, n);
		CHECK(sum == oracle_spt(n));
	}
}
