#ifndef CONDLAB_ACCEPTANCE_HPP
#define CONDLAB_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace condlab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AcceptanceOptions {
    std::string cache_dir;
    int jobs = 0;
    unsigned long long seed = 20240101ULL;
    std::string outdir;  // when set, per-criterion CSV artifacts are written here
};

/// Runs every acceptance criterion at its pinned tolerance, printing one
/// pass/fail line per criterion to `log`. Returns the per-criterion results.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& log);

}  // namespace condlab

#endif
