#ifndef CONDLAB_SEQUENCE_SPACES_HPP
#define CONDLAB_SEQUENCE_SPACES_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace condlab {

/// Positive weight with its primitive sums s_n = w_1 + ... + w_n.
class WeightSeq {
  public:
    explicit WeightSeq(std::vector<double> w);

    int size() const { return int(w_.size()); }
    double w(int n) const { return w_[std::size_t(n) - 1]; }  // 1-based
    double s(int n) const { return n <= 0 ? 0.0 : s_[std::size_t(n) - 1]; }
    const std::vector<double>& weights() const { return w_; }

    /// max s_{2m}/s_m over the stored range.
    double doubling_constant() const;

  private:
    std::vector<double> w_;
    std::vector<double> s_;
};

enum class SpaceKind { Lp, Lorentz, WeightedLorentz };

/// Description of a sequence space: l_p, l_{p,q} (normalized so that
/// ||sum_{n<=m} n^{-1/p} e_n|| = H_m^{1/q} exactly, i.e. the quasi-norm
/// (sum (n^{1/p} a_n)^q / n)^{1/q} on the non-increasing rearrangement),
/// or d_{1,q}(w) with the defining quasi-norm (sum (s_n a_n)^q w_n/s_n)^{1/q}.
struct SpaceSpec {
    SpaceKind kind = SpaceKind::Lp;
    double p = 2.0;  // for Lp / Lorentz; may be +infinity for Lp
    double q = 2.0;  // secondary exponent; may be +infinity
    std::shared_ptr<const WeightSeq> weight;  // WeightedLorentz only

    static SpaceSpec lp(double p);
    static SpaceSpec lorentz(double p, double q);
    static SpaceSpec weighted_lorentz(std::shared_ptr<const WeightSeq> w, double q);

    std::string describe() const;
};

/// `lp:p`, `lorentz:p,q`, `wlorentz:<weightfile>,q`; weight files are n,w_n CSV.
SpaceSpec parse_space_spec(const std::string& text);
std::shared_ptr<const WeightSeq> load_weight_file(const std::string& path);

/// Norm of a finitely supported vector in the space.
double space_norm(const SpaceSpec& spec, const std::vector<double>& f);

/// Non-increasing rearrangement of |f| with zeros dropped.
std::vector<double> decreasing_rearrangement(const std::vector<double>& f);

struct NormVariants {
    double defining;   // sum (s_n a_n)^q w_n/s_n
    double lrp_form;   // sum (s_n a_n)^q / n
    double increment;  // sum a_n^q (s_n^q - s_{n-1}^q)
};

NormVariants norm_variants(const WeightSeq& w, double q, const std::vector<double>& f);

double harmonic(int m);
/// H_m[w] = sum_{n<=m} w_n/s_n.
double harmonic_weighted(const WeightSeq& w, int m);

/// Closed-form delta_m between two spaces of the same family:
/// (l_q, l_r) -> m^{1/q-1/r}; (l_{p,q}, l_{p,r}) -> H_m^{1/q-1/r};
/// (d_{1,q}(w), d_{1,r}(w)) -> H_m[w]^{1/q-1/r}. Requires q <= r.
double delta_closed_form(const SpaceSpec& s1, const SpaceSpec& s2, int m);

struct FundamentalRow {
    int m;
    double lambda;  // ||1_m||
    double gamma;   // dual-pairing supremum sup { sum_{j<=m} g_j : ||g|| <= 1 }
    double c;       // lambda * gamma / m
};

/// Lambda by direct norm evaluation; Gamma for l_p in closed form, otherwise
/// by the decreasing-step extreme-point search g = c 1_k, k <= m.
FundamentalRow fundamental(const SpaceSpec& spec, int m);

enum class RegularityKind { LRP, URP };

struct RegularityResult {
    bool found = false;
    int witness_r = 0;     // smallest r that works across the tested range
    int violating_m = 0;   // for the largest tried r when not found
};

/// Smallest integer r <= r_cap with s_{rm} >= 2 s_m (LRP) or
/// s_{rm} <= (r/2) s_m (URP) for every m with rm inside the sequence.
RegularityResult regularity_check(const std::vector<double>& s, RegularityKind kind, int r_cap);

/// sup over n > m of (phi_n^q/n) / (phi_m^q/m).
double essential_decrease_check(const std::vector<double>& phi, double q);

}  // namespace condlab

#endif
