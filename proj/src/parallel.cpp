#include "qspt/parallel.hpp"

#include <atomic>

namespace qspt::parallel {

namespace {
std::atomic<bool> g_enabled{true};
}

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

bool worthwhile(long work_items)
{
	return enabled() && omp_get_max_threads() > 1 && work_items >= 64;
}

}
