#include "qspt/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "qspt/parallel.hpp"

namespace qspt {

namespace {

void check_bound(int n, int bound)
{
	if (n < 0 || n > bound)
		throw std::out_of_range("partition oracle: n = " + std::to_string(n) +
					" outside oracle bound " + std::to_string(bound));
}

}

void enumerate_partitions(int n, const std::function<void(const Partition&)>& visit,
			  int bound)
{
	check_bound(n, bound);
	Partition scratch;
	std::vector<int>& parts = scratch.parts;
	if (n == 0) {
		visit(scratch);
		return;
	}
	parts.reserve(static_cast<size_t>(n));
	parts.push_back(n);
	for (;;) {
		visit(scratch);
		/* Strip trailing ones, decrement the last part > 1, then repack the
		 * freed weight greedily. Yields descending lexicographic order. */
		int freed = 0;
		while (!parts.empty() && parts.back() == 1) {
			++freed;
			parts.pop_back();
		}
		if (parts.empty()) return;
		parts.back() -= 1;
		++freed;
		const int cap = parts.back();
		while (freed > cap) {
			parts.push_back(cap);
			freed -= cap;
		}
		parts.push_back(freed);
	}
}

long long count_partitions(int n, int bound)
{
	long long c = 0;
	enumerate_partitions(n, [&](const Partition&) { ++c; }, bound);
	return c;
}

int rank_of(const std::vector<int>& parts)
{
	if (parts.empty()) return 0;
	return parts.front() - static_cast<int>(parts.size());
}

int crank_of(const std::vector<int>& parts)
{
	if (parts.empty()) throw std::invalid_argument("crank_of: empty partition");
	int ones = 0;
	for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++ones;
	if (ones == 0) return parts.front();
	int larger = 0;
	for (const int p : parts) {
		if (p > ones)
			++larger;
		else
			break;
	}
	return larger - ones;
}

OracleTables oracle_stat_tables(int upto, int bound)
{
	check_bound(upto, bound);
	OracleTables t;
	t.rank.upto = upto;
	t.crank.upto = upto;
	t.rank.rows.assign(static_cast<size_t>(upto) + 1, LaurentPoly());
	t.crank.rows.assign(static_cast<size_t>(upto) + 1, LaurentPoly());
	t.rank.rows[0] = LaurentPoly::one();
	t.crank.rows[0] = LaurentPoly::one();

#pragma omp parallel for schedule(dynamic, 1) if (parallel::enabled())
	for (int n = 1; n <= upto; ++n) {
		LaurentPoly rank_row, crank_row;
		enumerate_partitions(n, [&](const Partition& part) {
			rank_row.add_term(rank_of(part.parts), 1);
			crank_row.add_term(crank_of(part.parts), 1);
		}, bound);
		t.rank.rows[static_cast<size_t>(n)] = std::move(rank_row);
		t.crank.rows[static_cast<size_t>(n)] = std::move(crank_row);
	}
	return t;
}

long long oracle_spt_j(int j, int n, int bound)
{
	if (j < 1) throw std::invalid_argument("oracle_spt_j: j must be >= 1");
	long long total = 0;
	enumerate_partitions(n, [&](const Partition& part) {
		if (part.empty() || part.smallest() != j) return;
		total += std::count(part.parts.begin(), part.parts.end(), j);
	}, bound);
	return total;
}

long long oracle_spt_j_star(int j, int n, int bound)
{
	if (j < 1) throw std::invalid_argument("oracle_spt_j_star: j must be >= 1");
	long long total = 0;
	enumerate_partitions(n, [&](const Partition& part) {
		if (part.empty()) return;
		if (part.largest() > part.smallest() + j) return;
		total += std::count(part.parts.begin(), part.parts.end(), part.smallest());
	}, bound);
	return total;
}

long long oracle_spt(int n, int bound)
{
	long long total = 0;
	enumerate_partitions(n, [&](const Partition& part) {
		if (part.empty()) return;
		total += std::count(part.parts.begin(), part.parts.end(), part.smallest());
	}, bound);
	return total;
}

}
