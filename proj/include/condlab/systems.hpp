#ifndef CONDLAB_SYSTEMS_HPP
#define CONDLAB_SYSTEMS_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "condlab/linalg.hpp"
#include "condlab/sequence_spaces.hpp"
#include "condlab/weight_fourier.hpp"

namespace condlab {

class FiniteSystem;
using SystemPtr = std::shared_ptr<const FiniteSystem>;

/// Ordered partition of 1..total() into consecutive integer intervals,
/// carrying the averaging-projection data v_n, v_n* derived from the
/// fundamental function of the attached space.
class Partition {
  public:
    Partition(SpaceSpec space, std::vector<int> sizes);

    int blocks() const { return int(sizes_.size()); }
    int size(int n) const { return sizes_[std::size_t(n)]; }          // 0-based block
    int offset(int n) const { return offsets_[std::size_t(n)]; }      // first coordinate
    int total() const { return total_; }
    double lambda(int n) const { return lambdas_[std::size_t(n)]; }   // Lambda_{|sigma_n|}
    const SpaceSpec& space() const { return space_; }

    /// max over m of sum_{i<m} |sigma_i| / |sigma_m|.
    double prefix_domination_constant() const;

    /// <v_n*, f> for every block (f may be shorter than total()).
    std::vector<double> block_functionals(const std::vector<double>& f) const;

    /// P_sigma f and Q_sigma f = f - P_sigma f.
    struct Split {
        std::vector<double> p;
        std::vector<double> q;
    };
    Split averaging_projection(const std::vector<double>& f) const;

  private:
    SpaceSpec space_;
    std::vector<int> sizes_;
    std::vector<int> offsets_;
    std::vector<double> lambdas_;
    int total_ = 0;
};

/// |sigma_n| = 2^n for n = 1..nblocks.
Partition dyadic_partition(const SpaceSpec& space, int nblocks);

struct GramOracle {
    SymMatrix g;
};
struct SeqOracle {
    SpaceSpec spec;
};
/// Interleaved pair with outer l_p rule (odd slots from first, even from second).
struct PairSumOracle {
    SystemPtr first;
    SystemPtr second;
    double outer_p;
};
/// Finite direct sum of prefixes of one system with outer l_p rule.
struct PrefixSumOracle {
    SystemPtr base;
    std::vector<int> sizes;
    double outer_p;
};
/// DKK-method norm ||Q_sigma f||_S + ||sum_n v_n*(f) x_n||_X.
struct DkkOracle {
    SystemPtr inner;
    std::shared_ptr<const Partition> sigma;
};
/// Coefficient change of basis in front of another oracle (pairwise rotation).
struct RotationOracle {
    SystemPtr base;
};

using NormOracle = std::variant<GramOracle, SeqOracle, PairSumOracle, PrefixSumOracle, DkkOracle, RotationOracle>;

/// Finite biorthogonal system in coefficient coordinates with a norm oracle.
class FiniteSystem {
  public:
    FiniteSystem(int dim, std::string label, NormOracle oracle);

    int dim() const { return dim_; }
    const std::string& label() const { return label_; }
    const NormOracle& oracle() const { return oracle_; }

    /// Norm of sum_n coeffs[n] x_n; coeffs may be shorter than dim().
    double norm(const std::vector<double>& coeffs) const;

    /// Gram matrix when the oracle is Gram-backed, else nullptr.
    const SymMatrix* gram() const;

  private:
    int dim_;
    std::string label_;
    NormOracle oracle_;
};

SystemPtr make_system(int dim, std::string label, NormOracle oracle);

/// Orthonormal system of the given dimension (identity Gram).
SystemPtr orthonormal_system(int dim);

SystemPtr gram_system(SymMatrix g, std::string label);

/// Unit vector system of a sequence space, truncated to dim coordinates.
SystemPtr sequence_system(const SpaceSpec& spec, int dim);

/// Finite section of the trigonometric system in H_lambda. The Gram is real
/// in every arrangement; `field` only affects the label.
SystemPtr trig_system(const WeightFourierTable& table, int dim, Arrangement arr, bool complex_field = false);

/// Interleaved direct sum (odd slots from s1, even from s2). Two Gram oracles
/// with outer_p = 2 merge into one Gram; otherwise a PairSumOracle.
SystemPtr direct_sum(SystemPtr s1, SystemPtr s2, double outer_p = 2.0);

/// Pairwise rotation y_{2n-1} = (x_{2n-1} - x_{2n})/sqrt2, y_{2n} = (x_{2n-1} + x_{2n})/sqrt2.
SystemPtr rotate(SystemPtr s);

SystemPtr diamond(SystemPtr s1, SystemPtr s2);

/// Coefficient map of the rotation: from rotated coordinates b to base
/// coordinates a.
std::vector<double> rotation_to_base(const std::vector<double>& b);

/// bigoplus_j S^(m_j) with outer l_p rule.
SystemPtr prefix_sum_system(SystemPtr base, const std::vector<int>& sizes, double outer_p);

/// DKK space Y[X, S, sigma] over the first sigma.total() coordinates.
SystemPtr dkk_system(SystemPtr inner, std::shared_ptr<const Partition> sigma);

struct PairingCheck {
    double max_p_defect = 0.0;  // |<f, P g> - <P f, g>|
    double max_q_defect = 0.0;
    double max_idempotence_defect = 0.0;  // |P(Pf) - Pf|_inf
    double max_biorthogonality_defect = 0.0;  // |v_n*(v_k) - delta_nk|
};

/// Self-adjointness of P_sigma and Q_sigma on random pairs, plus exact
/// idempotence and v_n*(v_k) = delta_nk.
PairingCheck dual_pairing_check(const Partition& sigma, int samples, unsigned long long seed);

}  // namespace condlab

#endif
