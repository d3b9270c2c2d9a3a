#include "condlab/systems.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "condlab/errors.hpp"

namespace condlab {

Partition::Partition(SpaceSpec space, std::vector<int> sizes) : space_(std::move(space)), sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw InvalidParameter("partition needs at least one block");
    offsets_.reserve(sizes_.size());
    lambdas_.reserve(sizes_.size());
    int off = 0;
    for (int len : sizes_) {
        if (len < 1) throw InvalidParameter("partition blocks must be nonempty");
        offsets_.push_back(off);
        off += len;
        lambdas_.push_back(space_norm(space_, std::vector<double>(std::size_t(len), 1.0)));
    }
    total_ = off;
}

double Partition::prefix_domination_constant() const {
    double d = 0.0;
    long acc = 0;
    for (int n = 0; n < blocks(); ++n) {
        if (n > 0) d = std::max(d, double(acc) / double(size(n)));
        acc += size(n);
    }
    return d;
}

std::vector<double> Partition::block_functionals(const std::vector<double>& f) const {
    std::vector<double> t(std::size_t(blocks()), 0.0);
    const int len = int(f.size());
    for (int n = 0; n < blocks(); ++n) {
        const int lo = offset(n);
        if (lo >= len) break;
        const int hi = std::min(lo + size(n), len);
        double s = 0.0;
        for (int j = lo; j < hi; ++j) s += f[std::size_t(j)];
        t[std::size_t(n)] = lambda(n) / double(size(n)) * s;
    }
    return t;
}

Partition::Split Partition::averaging_projection(const std::vector<double>& f) const {
    Split out;
    out.p.assign(f.size(), 0.0);
    out.q = f;
    const int len = int(f.size());
    for (int n = 0; n < blocks(); ++n) {
        const int lo = offset(n);
        if (lo >= len) break;
        const int hi = std::min(lo + size(n), len);
        double s = 0.0;
        for (int j = lo; j < hi; ++j) s += f[std::size_t(j)];
        const double mean = s / double(size(n));  // v_n*(f) v_n is the block mean
        for (int j = lo; j < hi; ++j) {
            out.p[std::size_t(j)] = mean;
            out.q[std::size_t(j)] -= mean;
        }
    }
    return out;
}

Partition dyadic_partition(const SpaceSpec& space, int nblocks) {
    if (nblocks < 1 || nblocks > 30) throw InvalidParameter("dyadic_partition block count out of range");
    std::vector<int> sizes(static_cast<std::size_t>(nblocks));
    for (int n = 1; n <= nblocks; ++n) sizes[std::size_t(n) - 1] = 1 << n;
    return Partition(space, std::move(sizes));
}

FiniteSystem::FiniteSystem(int dim, std::string label, NormOracle oracle)
    : dim_(dim), label_(std::move(label)), oracle_(std::move(oracle)) {
    if (dim_ < 1) throw InvalidParameter("system dimension must be >= 1");
}

const SymMatrix* FiniteSystem::gram() const {
    if (const auto* g = std::get_if<GramOracle>(&oracle_)) return &g->g;
    return nullptr;
}

namespace {

std::vector<double> padded(const std::vector<double>& v, int dim) {
    std::vector<double> out(v);
    out.resize(std::size_t(dim), 0.0);
    return out;
}

}  // namespace

std::vector<double> rotation_to_base(const std::vector<double>& b) {
    const double r = 1.0 / std::sqrt(2.0);
    std::vector<double> a(b.size(), 0.0);
    for (std::size_t n = 0; n + 1 < b.size(); n += 2) {
        a[n] = r * (b[n] + b[n + 1]);
        a[n + 1] = r * (b[n + 1] - b[n]);
    }
    return a;
}

double FiniteSystem::norm(const std::vector<double>& coeffs) const {
    if (int(coeffs.size()) > dim_) throw DimensionMismatch("coefficient vector longer than system");
    struct Visitor {
        const FiniteSystem* sys;
        const std::vector<double>& a;

        double operator()(const GramOracle& o) const {
            double s = 0.0;
            const int n = int(a.size());
            for (int i = 0; i < n; ++i) {
                if (a[std::size_t(i)] == 0.0) continue;
                double row = 0.0;
                for (int j = 0; j < n; ++j) row += o.g.at(i, j) * a[std::size_t(j)];
                s += a[std::size_t(i)] * row;
            }
            return std::sqrt(std::max(s, 0.0));
        }
        double operator()(const SeqOracle& o) const { return space_norm(o.spec, a); }
        double operator()(const PairSumOracle& o) const {
            std::vector<double> u, v;
            u.reserve((a.size() + 1) / 2);
            v.reserve(a.size() / 2);
            const int d1 = o.first->dim(), d2 = o.second->dim();
            for (int i = 0; i < int(a.size()); ++i) {
                // interleave while both streams run, then the longer tail
                int pos = i;
                if (pos < 2 * std::min(d1, d2)) {
                    (pos % 2 == 0 ? u : v).push_back(a[std::size_t(i)]);
                } else {
                    (d1 > d2 ? u : v).push_back(a[std::size_t(i)]);
                }
            }
            const double nu = o.first->norm(u);
            const double nv = o.second->norm(v);
            if (std::isinf(o.outer_p)) return std::max(nu, nv);
            return std::pow(std::pow(nu, o.outer_p) + std::pow(nv, o.outer_p), 1.0 / o.outer_p);
        }
        double operator()(const PrefixSumOracle& o) const {
            double s = 0.0;
            double mx = 0.0;
            std::size_t pos = 0;
            for (int len : o.sizes) {
                if (pos >= a.size()) break;
                const std::size_t hi = std::min(a.size(), pos + std::size_t(len));
                std::vector<double> block(a.begin() + long(pos), a.begin() + long(hi));
                const double nb = o.base->norm(block);
                if (std::isinf(o.outer_p))
                    mx = std::max(mx, nb);
                else
                    s += std::pow(nb, o.outer_p);
                pos = hi;
            }
            return std::isinf(o.outer_p) ? mx : std::pow(s, 1.0 / o.outer_p);
        }
        double operator()(const DkkOracle& o) const {
            const auto split = o.sigma->averaging_projection(a);
            const std::vector<double> t = o.sigma->block_functionals(a);
            std::vector<double> inner(t.begin(), t.begin() + std::min<long>(long(t.size()), o.inner->dim()));
            return space_norm(o.sigma->space(), split.q) + o.inner->norm(inner);
        }
        double operator()(const RotationOracle& o) const {
            return o.base->norm(rotation_to_base(padded(a, sys->dim())));
        }
    };
    return std::visit(Visitor{this, coeffs}, oracle_);
}

SystemPtr make_system(int dim, std::string label, NormOracle oracle) {
    return std::make_shared<FiniteSystem>(dim, std::move(label), std::move(oracle));
}

SystemPtr orthonormal_system(int dim) {
    return make_system(dim, "ortho(" + std::to_string(dim) + ")", GramOracle{SymMatrix::identity(dim)});
}

SystemPtr gram_system(SymMatrix g, std::string label) {
    const int n = g.order();
    return make_system(n, std::move(label), GramOracle{std::move(g)});
}

SystemPtr sequence_system(const SpaceSpec& spec, int dim) {
    return make_system(dim, "unit(" + spec.describe() + "," + std::to_string(dim) + ")", SeqOracle{spec});
}

SystemPtr trig_system(const WeightFourierTable& table, int dim, Arrangement arr, bool complex_field) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "trig(lambda=%g,n=%d,%s%s)", table.params().lambda, dim,
                  arr == Arrangement::RealNatural ? "real"
                  : arr == Arrangement::RawInteger ? "raw"
                                                   : "natural",
                  complex_field ? ",C" : "");
    return gram_system(gram_matrix(table, dim, arr), buf);
}

SystemPtr direct_sum(SystemPtr s1, SystemPtr s2, double outer_p) {
    if (!s1 || !s2) throw InvalidParameter("direct_sum of null system");
    const int d1 = s1->dim(), d2 = s2->dim();
    const std::string label = "dsum(" + s1->label() + "," + s2->label() + ")";
    if (outer_p == 2.0 && s1->gram() && s2->gram()) {
        // interleaved block Gram
        const int n = d1 + d2;
        std::vector<int> src(static_cast<std::size_t>(n));  // which system
        std::vector<int> idx(static_cast<std::size_t>(n));  // index within it
        int i1 = 0, i2 = 0;
        for (int i = 0; i < n; ++i) {
            const bool take_first = (i1 < d1) && (i % 2 == 0 || i2 >= d2);
            if (take_first) {
                src[std::size_t(i)] = 0;
                idx[std::size_t(i)] = i1++;
            } else {
                src[std::size_t(i)] = 1;
                idx[std::size_t(i)] = i2++;
            }
        }
        SymMatrix g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                double v = 0.0;
                if (src[std::size_t(i)] == src[std::size_t(j)]) {
                    const SymMatrix& gg = src[std::size_t(i)] == 0 ? *s1->gram() : *s2->gram();
                    v = gg.at(idx[std::size_t(i)], idx[std::size_t(j)]);
                }
                g.set_sym(i, j, v);
            }
        return make_system(n, label, GramOracle{std::move(g)});
    }
    if (!(outer_p > 0.0)) throw IncompatibleOracles("direct_sum outer rule must be positive");
    return make_system(d1 + d2, label, PairSumOracle{std::move(s1), std::move(s2), outer_p});
}

SystemPtr rotate(SystemPtr s) {
    if (!s) throw InvalidParameter("rotate of null system");
    if (s->dim() % 2 != 0) throw OddDimension();
    const std::string label = "rot(" + s->label() + ")";
    if (const SymMatrix* g = s->gram()) {
        const int n = s->dim();
        // R^T G R with the 2x2 rotation blocks
        const double r = 1.0 / std::sqrt(2.0);
        SymMatrix rg(n);  // G R
        for (int i = 0; i < n; ++i)
            for (int k = 0; k + 1 < n; k += 2) {
                rg.at(i, k) = r * (g->at(i, k) - g->at(i, k + 1));
                rg.at(i, k + 1) = r * (g->at(i, k) + g->at(i, k + 1));
            }
        SymMatrix out(n);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k + 1 < n; k += 2) {
                out.at(k, j) = r * (rg.at(k, j) - rg.at(k + 1, j));
                out.at(k + 1, j) = r * (rg.at(k, j) + rg.at(k + 1, j));
            }
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) out.set_sym(i, j, 0.5 * (out.at(i, j) + out.at(j, i)));
        return make_system(n, label, GramOracle{std::move(out)});
    }
    return make_system(s->dim(), label, RotationOracle{std::move(s)});
}

SystemPtr diamond(SystemPtr s1, SystemPtr s2) { return rotate(direct_sum(std::move(s1), std::move(s2), 2.0)); }

SystemPtr prefix_sum_system(SystemPtr base, const std::vector<int>& sizes, double outer_p) {
    if (!base) throw InvalidParameter("prefix_sum_system of null system");
    int total = 0;
    for (int m : sizes) {
        if (m < 1) throw InvalidParameter("prefix block sizes must be >= 1");
        if (m > base->dim()) throw BlockOverrun("prefix block exceeds base dimension");
        total += m;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "prefixsum(%zu blocks,p=%g)", sizes.size(), outer_p);
    return make_system(total, std::string(buf) + "[" + base->label() + "]",
                       PrefixSumOracle{std::move(base), sizes, outer_p});
}

SystemPtr dkk_system(SystemPtr inner, std::shared_ptr<const Partition> sigma) {
    if (!inner || !sigma) throw InvalidParameter("dkk_system of null parts");
    if (sigma->blocks() > inner->dim()) throw DimensionMismatch("partition has more blocks than inner dimension");
    char buf[64];
    std::snprintf(buf, sizeof buf, "dkk(%d blocks,S=%s)", sigma->blocks(), sigma->space().describe().c_str());
    return make_system(sigma->total(), std::string(buf) + "[" + inner->label() + "]",
                       DkkOracle{std::move(inner), std::move(sigma)});
}

PairingCheck dual_pairing_check(const Partition& sigma, int samples, unsigned long long seed) {
    PairingCheck out;
    const int n = sigma.total();
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
        return s;
    };

    for (int it = 0; it < samples; ++it) {
        std::vector<double> f(static_cast<std::size_t>(n)), g(static_cast<std::size_t>(n));
        for (auto& v : f) v = gauss(rng);
        for (auto& v : g) v = gauss(rng);
        const auto sf = sigma.averaging_projection(f);
        const auto sg = sigma.averaging_projection(g);
        out.max_p_defect = std::max(out.max_p_defect, std::fabs(dot(f, sg.p) - dot(sf.p, g)));
        out.max_q_defect = std::max(out.max_q_defect, std::fabs(dot(f, sg.q) - dot(sf.q, g)));
        const auto spp = sigma.averaging_projection(sf.p);
        double idem = 0.0;
        for (std::size_t i = 0; i < spp.p.size(); ++i) idem = std::max(idem, std::fabs(spp.p[i] - sf.p[i]));
        out.max_idempotence_defect = std::max(out.max_idempotence_defect, idem);
    }
    for (int a = 0; a < sigma.blocks(); ++a) {
        std::vector<double> va(std::size_t(n), 0.0);
        for (int j = sigma.offset(a); j < sigma.offset(a) + sigma.size(a); ++j)
            va[std::size_t(j)] = 1.0 / sigma.lambda(a);
        const std::vector<double> t = sigma.block_functionals(va);
        for (int b = 0; b < sigma.blocks(); ++b) {
            const double expect = (a == b) ? 1.0 : 0.0;
            out.max_biorthogonality_defect =
                std::max(out.max_biorthogonality_defect, std::fabs(t[std::size_t(b)] - expect));
        }
    }
    return out;
}

}  // namespace condlab
