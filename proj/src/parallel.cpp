#include "condlab/parallel.hpp"

namespace condlab {

namespace {
int g_jobs = 0;
}

int default_jobs() {
    if (g_jobs > 0) return g_jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

void set_default_jobs(int jobs) { g_jobs = jobs; }

}  // namespace condlab
