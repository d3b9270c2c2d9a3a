#include "condlab/conditionality.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numeric>
#include <random>

#include "condlab/errors.hpp"
#include "condlab/linalg.hpp"
#include "condlab/parallel.hpp"

namespace condlab {

std::string to_string(ValueKind k) {
    switch (k) {
        case ValueKind::Exact: return "exact";
        case ValueKind::LowerWitness: return "lower_witness";
        default: return "upper_envelope";
    }
}

ValueKind value_kind_from_string(const std::string& s) {
    if (s == "exact") return ValueKind::Exact;
    if (s == "lower_witness") return ValueKind::LowerWitness;
    if (s == "upper_envelope") return ValueKind::UpperEnvelope;
    throw InvalidParameter("unknown value kind '" + s + "'");
}

std::vector<double> GrowthSeries::values() const {
    std::vector<double> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(e.value);
    return v;
}

std::vector<double> GrowthSeries::indices() const {
    std::vector<double> v;
    v.reserve(entries.size());
    for (const auto& e : entries) v.push_back(double(e.m));
    return v;
}

namespace {

SymMatrix leading_gram(const SymMatrix& g, int m) {
    SymMatrix out(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out.at(i, j) = g.at(i, j);
    return out;
}

SymMatrix masked_gram(const SymMatrix& g, unsigned long long mask, int order) {
    SymMatrix out(order);
    for (int i = 0; i < order; ++i) {
        if (!(mask >> i & 1ULL)) continue;
        for (int j = 0; j < order; ++j)
            if (mask >> j & 1ULL) out.at(i, j) = g.at(i, j);
    }
    return out;
}

std::vector<int> mask_to_set(unsigned long long mask, int order) {
    std::vector<int> a;
    for (int i = 0; i < order; ++i)
        if (mask >> i & 1ULL) a.push_back(i);
    return a;
}

double pencil_sqrt_max(const SymMatrix& m, const SymMatrix& g) { return std::sqrt(std::max(gen_sym_eig_max(m, g), 0.0)); }

std::vector<double> mask_vector(const std::vector<double>& f, const std::vector<int>& a, bool keep) {
    std::vector<double> out = keep ? std::vector<double>(f.size(), 0.0) : f;
    for (int i : a) {
        if (i < int(f.size())) {
            if (keep)
                out[std::size_t(i)] = f[std::size_t(i)];
            else
                out[std::size_t(i)] = 0.0;
        }
    }
    return out;
}

// generic witness battery for one projection set
double projection_witness_search(const FiniteSystem& sys, const std::vector<int>& a, const MeasureOptions& opts,
                                 Witness* best_out) {
    const int n = sys.dim();
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double best = 0.0;
    std::vector<double> best_f;
    long evals = 0;

    auto consider = [&](const std::vector<double>& f) {
        const double den = sys.norm(f);
        if (den <= 0.0) return;
        const double num = sys.norm(mask_vector(f, a, true));
        ++evals;
        if (num / den > best) {
            best = num / den;
            best_f = f;
        }
    };

    // structural starts: indicator of A, ones, Dirichlet-style prefixes
    {
        std::vector<double> f(std::size_t(n), 0.0);
        for (int i : a) f[std::size_t(i)] = 1.0;
        consider(f);
        consider(std::vector<double>(std::size_t(n), 1.0));
        for (int len = 1; len <= n; len *= 2) consider(std::vector<double>(std::size_t(len), 1.0));
    }
    for (int r = 0; r < opts.restarts && evals < opts.budget; ++r) {
        std::vector<double> f(static_cast<std::size_t>(n));
        for (auto& v : f) v = gauss(rng);
        consider(f);
        // coordinate-descent refinement on the best vector so far
        std::vector<double> cur = best_f;
        if (cur.empty()) continue;
        for (int pass = 0; pass < 2 && evals < opts.budget; ++pass) {
            for (int i = 0; i < n && evals < opts.budget; ++i) {
                for (double step : {0.5, -0.5, 0.125, -0.125}) {
                    std::vector<double> t = cur;
                    t[std::size_t(i)] += step * (std::fabs(t[std::size_t(i)]) + 0.1);
                    consider(t);
                }
                cur = best_f;
            }
        }
    }
    if (best_out) {
        best_out->support = a;
        best_out->coeffs = best_f;
        best_out->ratio = best;
    }
    return best;
}

}  // namespace

double witness_ratio(const FiniteSystem& sys, const std::vector<int>& a, const std::vector<double>& f) {
    const double den = sys.norm(f);
    if (den <= 0.0) throw InvalidParameter("witness vector has zero norm");
    return sys.norm(mask_vector(f, a, true)) / den;
}

Measured projection_norm(const FiniteSystem& sys, const std::vector<int>& a, const MeasureOptions& opts) {
    Measured out;
    if (a.empty()) {
        out.value = 0.0;
        out.kind = ValueKind::Exact;
        return out;
    }
    for (int i : a)
        if (i < 0 || i >= sys.dim()) throw DimensionMismatch("projection set outside dimension");
    if (const SymMatrix* g = sys.gram()) {
        const int n = sys.dim();
        SymMatrix m(n);
        for (int i : a)
            for (int j : a) m.at(i, j) = g->at(i, j);
        out.value = pencil_sqrt_max(m, *g);
        out.kind = ValueKind::Exact;
        return out;
    }
    Witness w;
    out.value = projection_witness_search(sys, a, opts, &w);
    out.kind = ValueKind::LowerWitness;
    out.witness = std::move(w);
    return out;
}

namespace {

// exact ktilde over all subsets of [m] for a Gram system, parallel over masks
double ktilde_exact_gram(const SymMatrix& g, int m, const MeasureOptions& opts) {
    const SymMatrix gm = leading_gram(g, m);
    const unsigned long long total = 1ULL << m;
    const int shards = std::max(1, 8 * default_jobs());
    std::vector<double> best(std::size_t(shards), 1.0);
    parallel_for(0, shards,
                 [&](long shard) {
                     const unsigned long long lo = total * (unsigned long long)(shard) / (unsigned long long)(shards);
                     const unsigned long long hi =
                         total * (unsigned long long)(shard + 1) / (unsigned long long)(shards);
                     double b = 1.0;
                     for (unsigned long long mask = lo; mask < hi; ++mask) {
                         if (mask == 0 || mask == total - 1) continue;
                         const double v = gen_sym_eig_max(masked_gram(gm, mask, m), gm);
                         b = std::max(b, v);
                     }
                     best[std::size_t(shard)] = b;
                 },
                 opts.jobs);
    double v = 1.0;
    for (double b : best) v = std::max(v, b);
    return std::sqrt(v);
}

using ulong_t = unsigned long long;

// iterate over all subsets of {0..n-1} with exactly k elements
template <typename F>
void for_each_combination(int n, int k, const F& f) {
    if (k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[std::size_t(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[std::size_t(i)];
        for (int j = i + 1; j < k; ++j) idx[std::size_t(j)] = idx[std::size_t(j) - 1] + 1;
    }
}

double binomial_sum(int n, int m) {
    double total = 0.0;
    double c = 1.0;
    for (int j = 0; j <= m; ++j) {
        if (j > 0) c = c * double(n - j + 1) / double(j);
        total += c;
        if (total > 1e18) break;
    }
    return total;
}

// heuristic subset search for k / ktilde on arbitrary oracles:
// steepest-ascent add/remove/swap from random starts
double subset_search(const FiniteSystem& sys, int m, int universe, const MeasureOptions& opts, Witness* best_w) {
    std::mt19937_64 rng(opts.seed ^ 0xd1b54a32d192ed03ULL);
    const SymMatrix* g = sys.gram();
    double best = 1.0;
    std::vector<int> best_set;
    long evals = 0;

    auto evaluate = [&](const std::vector<int>& a) -> double {
        ++evals;
        if (g) {
            // restricted to the universe prefix for ktilde-style measures
            const SymMatrix gu = leading_gram(*g, universe);
            SymMatrix msk(universe);
            for (int i : a)
                for (int j : a) msk.at(i, j) = gu.at(i, j);
            return pencil_sqrt_max(msk, gu);
        }
        Witness w;
        return projection_witness_search(sys, a, opts, &w);
    };

    for (int r = 0; r < opts.restarts && evals < opts.budget; ++r) {
        std::vector<int> pool(static_cast<std::size_t>(universe));
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        const int take = 1 + int(rng() % ulong_t(std::min(m, universe)));
        std::vector<int> cur(pool.begin(), pool.begin() + take);
        std::sort(cur.begin(), cur.end());
        double cur_v = evaluate(cur);
        bool improved = true;
        while (improved && evals < opts.budget) {
            improved = false;
            // try swaps and single flips
            for (int out_pos = 0; out_pos < int(cur.size()) && evals < opts.budget; ++out_pos) {
                for (int cand = 0; cand < universe && evals < opts.budget; ++cand) {
                    if (std::find(cur.begin(), cur.end(), cand) != cur.end()) continue;
                    std::vector<int> t = cur;
                    t[std::size_t(out_pos)] = cand;
                    std::sort(t.begin(), t.end());
                    const double v = evaluate(t);
                    if (v > cur_v + 1e-12) {
                        cur = t;
                        cur_v = v;
                        improved = true;
                    }
                }
            }
            if (int(cur.size()) < std::min(m, universe) && evals < opts.budget) {
                for (int cand = 0; cand < universe && evals < opts.budget; ++cand) {
                    if (std::find(cur.begin(), cur.end(), cand) != cur.end()) continue;
                    std::vector<int> t = cur;
                    t.push_back(cand);
                    std::sort(t.begin(), t.end());
                    const double v = evaluate(t);
                    if (v > cur_v + 1e-12) {
                        cur = t;
                        cur_v = v;
                        improved = true;
                        break;
                    }
                }
            }
        }
        if (cur_v > best) {
            best = cur_v;
            best_set = cur;
        }
    }
    if (best_w) {
        best_w->support = best_set;
        best_w->ratio = best;
    }
    return best;
}

}  // namespace

Measured ktilde_measure(const FiniteSystem& sys, int m, bool exact, const MeasureOptions& opts) {
    if (m < 1 || m > sys.dim()) throw DimensionMismatch("ktilde index outside dimension");
    Measured out;
    if (exact) {
        if (!sys.gram()) throw BudgetExceeded("exact ktilde needs a Gram oracle");
        if (m > opts.ktilde_exact_cap) throw BudgetExceeded("ktilde exact cap " + std::to_string(opts.ktilde_exact_cap));
        out.value = ktilde_exact_gram(*sys.gram(), m, opts);
        out.kind = ValueKind::Exact;
        return out;
    }
    Witness w;
    out.value = std::max(1.0, subset_search(sys, m, m, opts, &w));
    out.kind = ValueKind::LowerWitness;
    out.witness = std::move(w);
    return out;
}

Measured k_measure(const FiniteSystem& sys, int m, bool exact, const MeasureOptions& opts) {
    if (m < 1) throw InvalidParameter("k index must be >= 1");
    const int n = sys.dim();
    Measured out;
    if (exact) {
        if (!sys.gram()) throw BudgetExceeded("exact k needs a Gram oracle");
        if (binomial_sum(n, std::min(m, n)) > double(opts.k_exact_mask_budget))
            throw BudgetExceeded("k exact mask budget");
        const SymMatrix& g = *sys.gram();
        double best = 1.0;
        // |A| = min(m, n) suffices: enlarging A only enlarges the supremum
        const int k = std::min(m, n);
        std::vector<std::vector<int>> sets;
        for_each_combination(n, k, [&](const std::vector<int>& a) { sets.push_back(a); });
        std::vector<double> vals(sets.size(), 1.0);
        parallel_for(0, long(sets.size()),
                     [&](long i) {
                         SymMatrix msk(n);
                         for (int a : sets[std::size_t(i)])
                             for (int b : sets[std::size_t(i)]) msk.at(a, b) = g.at(a, b);
                         vals[std::size_t(i)] = pencil_sqrt_max(msk, g);
                     },
                     opts.jobs);
        for (double v : vals) best = std::max(best, v);
        out.value = best;
        out.kind = ValueKind::Exact;
        return out;
    }
    Witness w;
    out.value = std::max(1.0, subset_search(sys, m, n, opts, &w));
    out.kind = ValueKind::LowerWitness;
    out.witness = std::move(w);
    return out;
}

Measured delta_between(const FiniteSystem& s1, const FiniteSystem& s2, int m, bool prefix, bool exact,
                       const MeasureOptions& opts) {
    if (s1.dim() != s2.dim()) throw DimensionMismatch("delta_between needs equal dimensions");
    if (m < 1 || m > s1.dim()) throw DimensionMismatch("delta index outside dimension");
    Measured out;
    const SymMatrix* g1 = s1.gram();
    const SymMatrix* g2 = s2.gram();

    if (prefix && g1 && g2) {
        // every A within [m] is dominated by A = [m]: coefficients supported on
        // a smaller set are a special case, so one pencil is the exact value
        out.value = pencil_sqrt_max(leading_gram(*g1, m), leading_gram(*g2, m));
        out.kind = ValueKind::Exact;
        return out;
    }
    if (!prefix && g1 && g2 && exact) {
        const int n = s1.dim();
        if (binomial_sum(n, std::min(m, n)) > double(opts.k_exact_mask_budget))
            throw BudgetExceeded("delta exact mask budget");
        double best = 0.0;
        for_each_combination(n, std::min(m, n), [&](const std::vector<int>& a) {
            SymMatrix m1(int(a.size())), m2(int(a.size()));
            for (int i = 0; i < int(a.size()); ++i)
                for (int j = 0; j < int(a.size()); ++j) {
                    m1.at(i, j) = g1->at(a[std::size_t(i)], a[std::size_t(j)]);
                    m2.at(i, j) = g2->at(a[std::size_t(i)], a[std::size_t(j)]);
                }
            best = std::max(best, pencil_sqrt_max(m1, m2));
        });
        out.value = best;
        out.kind = ValueKind::Exact;
        return out;
    }

    // witness mode: structural vectors + random, supports within [m] or sized m
    std::mt19937_64 rng(opts.seed ^ 0xabcdef1234567ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double best = 0.0;
    auto consider = [&](const std::vector<double>& f) {
        const double den = s2.norm(f);
        if (den <= 0.0) return;
        best = std::max(best, s1.norm(f) / den);
    };
    const int reach = prefix ? m : s1.dim();
    consider(std::vector<double>(std::size_t(reach), 1.0));
    for (int len = 1; len <= reach; len *= 2) consider(std::vector<double>(std::size_t(len), 1.0));
    for (int r = 0; r < opts.restarts; ++r) {
        std::vector<double> f(std::size_t(reach), 0.0);
        if (prefix) {
            for (auto& v : f) v = gauss(rng);
        } else {
            std::vector<int> pool(std::size_t(s1.dim()));
            std::iota(pool.begin(), pool.end(), 0);
            std::shuffle(pool.begin(), pool.end(), rng);
            f.assign(std::size_t(s1.dim()), 0.0);
            for (int i = 0; i < std::min(m, s1.dim()); ++i) f[std::size_t(pool[std::size_t(i)])] = gauss(rng);
        }
        consider(f);
    }
    out.value = best;
    out.kind = ValueKind::LowerWitness;
    return out;
}

Measured ccdom_lower(const FiniteSystem& s1, const FiniteSystem& s2, int m, const MeasureOptions& opts) {
    const Measured d12 = delta_between(s1, s2, m, /*prefix=*/true, /*exact=*/true, opts);
    const Measured d21 = delta_between(s2, s1, m, /*prefix=*/true, /*exact=*/true, opts);
    Measured out;
    out.value = 0.5 * std::max(d12.value, d21.value);
    out.kind = ValueKind::LowerWitness;  // it bounds the diamond's ktilde from below
    return out;
}

Measured phi_fundamental(const FiniteSystem& sys, int m, bool all_signs_exact, const MeasureOptions& opts) {
    if (m < 1 || m > sys.dim()) throw DimensionMismatch("phi index outside dimension");
    const int n = sys.dim();
    std::mt19937_64 rng(opts.seed ^ 0x5bf03635ULL);

    // structured support family: prefixes, shifted intervals, arithmetic
    // progressions, plus random subsets
    std::vector<std::vector<int>> supports;
    for (int len = 1; len <= m; len = std::max(len + 1, len * 2)) {
        std::vector<int> a(static_cast<std::size_t>(len));
        std::iota(a.begin(), a.end(), 0);
        supports.push_back(a);
    }
    {
        std::vector<int> a(static_cast<std::size_t>(m));
        std::iota(a.begin(), a.end(), 0);
        supports.push_back(a);
    }
    for (int shift : {1, 2, 4}) {
        if (shift + m <= n) {
            std::vector<int> a(static_cast<std::size_t>(m));
            std::iota(a.begin(), a.end(), shift);
            supports.push_back(a);
        }
    }
    for (int step : {2, 3}) {
        std::vector<int> a;
        for (int i = 0; i < n && int(a.size()) < m; i += step) a.push_back(i);
        supports.push_back(a);
    }
    for (int r = 0; r < 4; ++r) {
        std::vector<int> pool(static_cast<std::size_t>(n));
        std::iota(pool.begin(), pool.end(), 0);
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> a(pool.begin(), pool.begin() + std::min(m, n));
        std::sort(a.begin(), a.end());
        supports.push_back(a);
    }

    double best = 0.0;
    Witness w;
    auto consider = [&](const std::vector<int>& a, const std::vector<double>& signs) {
        std::vector<double> f(std::size_t(n), 0.0);
        for (std::size_t i = 0; i < a.size(); ++i) f[std::size_t(a[i])] = signs[i];
        const double v = sys.norm(f);
        if (v > best) {
            best = v;
            w.support = a;
            w.coeffs = f;
            w.ratio = v;
        }
    };
    bool fully_exact = all_signs_exact;
    for (const auto& a : supports) {
        const int k = int(a.size());
        if (all_signs_exact && k <= opts.sign_exact_cap) {
            for (unsigned long long mask = 0; mask < (1ULL << (k - 1)); ++mask) {
                std::vector<double> signs(std::size_t(k), 1.0);
                for (int i = 0; i + 1 < k; ++i)
                    if (mask >> i & 1ULL) signs[std::size_t(i) + 1] = -1.0;
                consider(a, signs);
            }
        } else {
            fully_exact = false;
            consider(a, std::vector<double>(std::size_t(k), 1.0));
            std::vector<double> alt(std::size_t(k), 1.0);
            for (int i = 1; i < k; i += 2) alt[std::size_t(i)] = -1.0;
            consider(a, alt);
            for (int r = 0; r < 8; ++r) {
                std::vector<double> signs(static_cast<std::size_t>(k));
                for (auto& s : signs) s = (rng() & 1ULL) ? 1.0 : -1.0;
                consider(a, signs);
            }
        }
    }
    Measured out;
    out.value = best;
    // exact only when the support battery is itself exhaustive, which happens
    // just for m = dimension = 1-interval cases; report witness otherwise
    out.kind = (fully_exact && m == n && n <= opts.sign_exact_cap) ? ValueKind::Exact : ValueKind::LowerWitness;
    out.witness = std::move(w);
    return out;
}

TransformReport transform_norms(const FiniteSystem& sys, const SpaceSpec& u, TransformDirection dir,
                                const std::vector<int>& scales, const std::vector<std::vector<double>>& extra,
                                const MeasureOptions& opts) {
    TransformReport rep;
    rep.per_scale.quantity = dir == TransformDirection::Hilbertian ? "hilbertian_ratio" : "besselian_ratio";
    rep.per_scale.system = sys.label() + " vs " + u.describe();

    std::mt19937_64 rng(opts.seed ^ 0x1665ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);

    for (int scale : scales) {
        const int reach = std::min(scale, sys.dim());
        double best = 0.0;
        auto consider = [&](const std::vector<double>& a) {
            if (int(a.size()) > reach) return;
            const double hn = sys.norm(a);
            const double un = space_norm(u, a);
            if (hn <= 0.0 || un <= 0.0) return;
            const double r = dir == TransformDirection::Hilbertian ? hn / un : un / hn;
            best = std::max(best, r);
        };
        // indicators (odd length hits the Dirichlet kernel in natural order)
        consider(std::vector<double>(std::size_t(reach), 1.0));
        if (reach >= 2) consider(std::vector<double>(std::size_t(reach - 1), 1.0));
        {
            std::vector<double> alt(std::size_t(reach), 1.0);
            for (int i = 1; i < reach; i += 2) alt[std::size_t(i)] = -1.0;
            consider(alt);
        }
        consider(std::vector<double>{1.0});
        // random dense and sparse
        for (int r = 0; r < 4; ++r) {
            std::vector<double> f(static_cast<std::size_t>(reach));
            for (auto& v : f) v = gauss(rng);
            consider(f);
            std::vector<double> s(std::size_t(reach), 0.0);
            for (int i = 0; i < reach; i += 8) s[std::size_t(i)] = gauss(rng);
            consider(s);
        }
        for (const auto& e : extra) consider(e);
        rep.per_scale.add(scale, best, ValueKind::LowerWitness);
        rep.constant = std::max(rep.constant, best);
    }
    return rep;
}

SeriesEntry bhcc_envelope(double c1, double c2, const SpaceSpec& u1, const SpaceSpec& u2, int m) {
    return SeriesEntry{m, c1 * c2 * delta_closed_form(u1, u2, m), ValueKind::UpperEnvelope};
}

GreedyResult greedy_ratio(const FiniteSystem& sys, const std::vector<double>& f, int m, const MeasureOptions& opts) {
    std::vector<int> support;
    for (int i = 0; i < int(f.size()); ++i)
        if (f[std::size_t(i)] != 0.0) support.push_back(i);
    if (m >= int(support.size())) throw InvalidParameter("greedy_ratio needs m below the support size");

    // greedy set: m largest |coefficients|, ties by lowest index
    std::vector<int> order = support;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::fabs(f[std::size_t(a)]) > std::fabs(f[std::size_t(b)]);
    });
    std::vector<int> greedy(order.begin(), order.begin() + m);

    auto error_for = [&](const std::vector<int>& a) {
        return sys.norm(mask_vector(f, a, false));  // f with A zeroed = f - S_A f
    };

    GreedyResult out;
    out.greedy_error = error_for(greedy);

    if (int(support.size()) <= 18) {
        double best = out.greedy_error;
        for_each_combination(int(support.size()), m, [&](const std::vector<int>& pick) {
            std::vector<int> a;
            a.reserve(pick.size());
            for (int p : pick) a.push_back(support[std::size_t(p)]);
            best = std::min(best, error_for(a));
        });
        out.best_error = best;
        out.best_exact = true;
    } else {
        // swap-improvement from the greedy set over a sampled neighborhood
        std::mt19937_64 rng(opts.seed ^ 0x2545F4914F6CDD1DULL);
        std::vector<int> cur = greedy;
        double cur_err = out.greedy_error;
        const long tries = std::min<long>(opts.budget, 4000);
        for (long t = 0; t < tries; ++t) {
            const int drop = int(rng() % ulong_t(cur.size()));
            std::vector<int> cand = cur;
            int add;
            do {
                add = support[rng() % ulong_t(support.size())];
            } while (std::find(cand.begin(), cand.end(), add) != cand.end());
            cand[std::size_t(drop)] = add;
            const double e = error_for(cand);
            if (e < cur_err) {
                cur = cand;
                cur_err = e;
            }
        }
        out.best_error = cur_err;
        out.best_exact = false;
    }
    out.ratio = out.best_error > 0.0 ? out.greedy_error / out.best_error : 1.0;
    return out;
}

}  // namespace condlab
