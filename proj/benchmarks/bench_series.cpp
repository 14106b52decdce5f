/* Times the serial reference kernels against the OpenMP kernels on the
 * workloads that dominate the verification runs. Not part of ctest. */

#include <chrono>
#include <cstdio>
#include <random>

#include "qspt/bailey.hpp"
#include "qspt/oracle.hpp"
#include "qspt/parallel.hpp"
#include "qspt/qseries.hpp"
#include "qspt/stat_tables.hpp"
#include "qspt/truncated_series.hpp"

using namespace qspt;
using Clock = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f)
{
	const auto start = Clock::now();
	f();
	const auto stop = Clock::now();
	return std::chrono::duration<double, std::milli>(stop - start).count();
}

QSeries random_series(std::mt19937& rng, int order)
{
	std::uniform_int_distribution<long> num(-9, 9);
	std::uniform_int_distribution<long> den(1, 4);
	QSeries s(order);
	for (int n = 0; n <= order; ++n) s.set(n, Rational(num(rng), den(rng)));
	return s;
}

void report(const char* name, double serial_ms, double parallel_ms)
{
	std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %.2fx\n", name,
		    serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}

int main()
{
	std::printf("threads available: %d\n\n", omp_get_max_threads());
	std::mt19937 rng(31337);

	for (const int order : {256, 512, 1024}) {
		const QSeries a = random_series(rng, order);
		const QSeries b = random_series(rng, order);
		QSeries sink(0);
		const double serial = time_ms([&] { sink = QSeries::mul_serial(a, b); });
		const double par = time_ms([&] { sink = QSeries::mul_parallel(a, b); });
		if (!(QSeries::mul_serial(a, b) == QSeries::mul_parallel(a, b)))
			std::printf("KERNEL MISMATCH at order %d\n", order);
		char label[64];
		std::snprintf(label, sizeof label, "rational mul (order %d)", order);
		report(label, serial, par);
	}

	{
		/* Integer-valued series with single-limb coefficients: far less
		 * arithmetic per coefficient, so memory and allocator behavior
		 * decide whether the parallel kernel pays off. */
		const QSeries p = euler_p(512);
		QSeries sink(0);
		const double serial = time_ms([&] { sink = QSeries::mul_serial(p, p); });
		const double par = time_ms([&] { sink = QSeries::mul_parallel(p, p); });
		report("partition-series mul (512)", serial, par);
	}

	{
		parallel::set_enabled(false);
		const double serial = time_ms([] { rank_table(300); });
		parallel::set_enabled(true);
		const double par = time_ms([] { rank_table(300); });
		report("rank table (order 300)", serial, par);
	}

	{
		parallel::set_enabled(false);
		const double serial = time_ms([] { verify_pair(15, 60); });
		parallel::set_enabled(true);
		const double par = time_ms([] { verify_pair(15, 60); });
		report("pair relation (15, 60)", serial, par);
	}

	{
		parallel::set_enabled(false);
		const double serial = time_ms([] { oracle_stat_tables(38); });
		parallel::set_enabled(true);
		const double par = time_ms([] { oracle_stat_tables(38); });
		report("oracle tables (n <= 38)", serial, par);
	}

	return 0;
}
