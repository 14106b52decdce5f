#pragma once

#include <functional>
#include <vector>

#include "qspt/stat_tables.hpp"

namespace qspt {

/* Brute-force ground truth: every statistic in this header is computed by
 * walking the actual partitions, never through a generating function. The
 * bound is a resource guard, not a correctness limit; p(40) = 37338 keeps
 * the default instantaneous, and ~50 is still comfortable. */
inline constexpr int kDefaultOracleBound = 40;

/* A partition as its weakly decreasing list of positive parts. */
struct Partition {
	std::vector<int> parts;

	int smallest() const { return parts.back(); }
	int largest() const { return parts.front(); }
	bool empty() const { return parts.empty(); }
};

/* Calls visit once per partition of n, in descending lexicographic order;
 * n = 0 yields the empty partition. The visited object is reused between
 * calls. Throws std::out_of_range when n exceeds the bound or is negative. */
void enumerate_partitions(int n, const std::function<void(const Partition&)>& visit,
			  int bound = kDefaultOracleBound);

long long count_partitions(int n, int bound = kDefaultOracleBound);

/* Largest part minus number of parts; 0 for the empty partition. */
int rank_of(const std::vector<int>& parts);

/* Andrews-Garvan crank: with w ones, the largest part when w = 0, otherwise
 * (number of parts exceeding w) - w. Refuses the empty partition. */
int crank_of(const std::vector<int>& parts);

struct OracleTables {
	StatTable rank;
	StatTable crank;
};

/* Direct counts N(m, n) and combinatorial-crank counts for n <= upto.
 * The crank row at n = 0 is {0: 1} by convention; row n = 1 is {-1: 1},
 * which differs from the generating-function row z - 1 + z^{-1}. */
OracleTables oracle_stat_tables(int upto, int bound = kDefaultOracleBound);

/* Total appearances of the smallest part over partitions of n whose
 * smallest part equals j. */
long long oracle_spt_j(int j, int n, int bound = kDefaultOracleBound);

/* Same count over partitions of n whose parts all lie in [s, s+j], where
 * s is the smallest part. */
long long oracle_spt_j_star(int j, int n, int bound = kDefaultOracleBound);

/* Total appearances of the smallest part over all partitions of n. */
long long oracle_spt(int n, int bound = kDefaultOracleBound);

}
