#ifndef CONDLAB_CONDITIONALITY_HPP
#define CONDLAB_CONDITIONALITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "condlab/sequence_spaces.hpp"
#include "condlab/systems.hpp"

namespace condlab {

enum class ValueKind { Exact, LowerWitness, UpperEnvelope };

std::string to_string(ValueKind k);
ValueKind value_kind_from_string(const std::string& s);

struct SeriesEntry {
    long m;
    double value;
    ValueKind kind;
};

struct GrowthSeries {
    std::string quantity;
    std::string system;
    std::vector<SeriesEntry> entries;

    void add(long m, double value, ValueKind kind) { entries.push_back({m, value, kind}); }
    std::vector<double> values() const;
    std::vector<double> indices() const;
};

struct Witness {
    std::vector<int> support;    // the projection set A
    std::vector<double> coeffs;  // the test vector
    double ratio = 0.0;
};

struct Measured {
    double value = 0.0;
    ValueKind kind = ValueKind::LowerWitness;
    std::optional<Witness> witness;
};

struct MeasureOptions {
    int ktilde_exact_cap = 18;      // largest m for the 2^m subset enumeration
    long k_exact_mask_budget = 300000;  // cap on #subsets for exact k_m / delta_m
    int restarts = 32;
    long budget = 10000;            // heuristic norm evaluations per index
    int sign_exact_cap = 20;        // largest |A| for full sign enumeration
    unsigned long long seed = 12345;
    int jobs = 0;
};

/// ||S_A|| for the coordinate projection onto A. Exact (generalized
/// eigenvalue) for Gram oracles; witness-search lower bound otherwise.
Measured projection_norm(const FiniteSystem& sys, const std::vector<int>& a, const MeasureOptions& opts = {});

/// Ratio ||S_A f|| / ||f|| for a concrete witness.
double witness_ratio(const FiniteSystem& sys, const std::vector<int>& a, const std::vector<double>& f);

/// k_m = sup_{|A|<=m} ||S_A||.
Measured k_measure(const FiniteSystem& sys, int m, bool exact, const MeasureOptions& opts = {});

/// ktilde_m = sup { ||S_A f|| : ||f|| <= 1, supp f within [m] }.
Measured ktilde_measure(const FiniteSystem& sys, int m, bool exact, const MeasureOptions& opts = {});

/// delta between two same-dimension systems: sup over A (and coefficients on
/// A) of ||sum a x||_1 / ||sum a x||_2. With prefix=true the sets are
/// restricted to A within [m] (then A = [m] attains the sup and the value is
/// exact for Gram pairs); otherwise |A| <= m anywhere in the dimension.
Measured delta_between(const FiniteSystem& s1, const FiniteSystem& s2, int m, bool prefix, bool exact,
                       const MeasureOptions& opts = {});

/// Lower bound for ktilde_{2m} of diamond(s1,s2): half the larger one-sided
/// delta-tilde at m.
Measured ccdom_lower(const FiniteSystem& s1, const FiniteSystem& s2, int m, const MeasureOptions& opts = {});

/// Fundamental-function value phi_m: largest norm of a signed sum of at most
/// m basis vectors over a structured support/sign battery.
Measured phi_fundamental(const FiniteSystem& sys, int m, bool all_signs_exact, const MeasureOptions& opts = {});

enum class TransformDirection { Hilbertian, Besselian };

struct TransformReport {
    double constant = 0.0;          // max ratio over all scales
    GrowthSeries per_scale;         // max ratio per dyadic scale
};

/// Test-vector battery ratios between the system norm and a sequence-space
/// norm of the coefficients. Hilbertian: ||f||_X / ||a||_U; Besselian:
/// ||a||_U / ||f||_X. `extra` supplies caller witnesses per scale.
TransformReport transform_norms(const FiniteSystem& sys, const SpaceSpec& u, TransformDirection dir,
                                const std::vector<int>& scales,
                                const std::vector<std::vector<double>>& extra = {},
                                const MeasureOptions& opts = {});

/// c1 * c2 * delta_closed_form(u1, u2, m) attached as an upper envelope.
SeriesEntry bhcc_envelope(double c1, double c2, const SpaceSpec& u1, const SpaceSpec& u2, int m);

struct GreedyResult {
    double greedy_error = 0.0;
    double best_error = 0.0;
    double ratio = 0.0;
    bool best_exact = false;
};

/// Thresholding greedy error against the best m-term coordinate projection;
/// exact best-projection by enumeration when the support is small, otherwise
/// swap-improvement search seeded by the greedy set.
GreedyResult greedy_ratio(const FiniteSystem& sys, const std::vector<double>& f, int m,
                          const MeasureOptions& opts = {});

}  // namespace condlab

#endif
