#ifndef CONDLAB_CONFIG_HPP
#define CONDLAB_CONFIG_HPP

#include <map>
#include <string>

#include "condlab/systems.hpp"

namespace condlab {

/// Flat key=value experiment configuration; '#' starts a comment line.
/// Emission is sorted so that emit(parse(emit(c))) == emit(c).
class ExperimentConfig {
  public:
    ExperimentConfig() = default;

    static ExperimentConfig parse(const std::string& text);
    static ExperimentConfig load(const std::string& path);
    std::string emit() const;

    bool has(const std::string& key) const { return kv_.count(key) != 0; }
    void set(const std::string& key, const std::string& value) { kv_[key] = value; }
    std::string get(const std::string& key, const std::string& fallback = "") const;
    long get_long(const std::string& key, long fallback) const;
    double get_double(const std::string& key, double fallback) const;

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    std::map<std::string, std::string> kv_;
};

/// Cache directory for weight tables: CONDLAB_CACHE_DIR, else ./.condlab-cache.
std::string cache_directory();

/// Constructor-tree syntax for systems, e.g.
///   ortho(n=8)
///   trig(lambda=-0.5,n=64,arr=real)
///   unit(space=[lorentz:2,1],n=16)
///   rotate(SYS) | dsum(SYS,SYS[,p=2]) | diamond(SYS,SYS)
///   prefix(SYS,sizes=dyadic:6,p=2)
///   dkk(SYS,space=[lp:2],blocks=8)
/// Space specs appear bracketed so their commas do not split arguments.
SystemPtr parse_system(const std::string& text, const std::string& cache_dir = cache_directory());

}  // namespace condlab

#endif
