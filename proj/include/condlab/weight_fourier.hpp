#ifndef CONDLAB_WEIGHT_FOURIER_HPP
#define CONDLAB_WEIGHT_FOURIER_HPP

#include <complex>
#include <string>
#include <vector>

#include "condlab/linalg.hpp"

namespace condlab {

/// Power weight |t|^lambda on [-1/2, 1/2], -1 < lambda < 1.
struct WeightParams {
    double lambda;

    explicit WeightParams(double lam);

    double alpha() const { return lambda < 0 ? -lambda : lambda; }
    /// 2/(1+alpha), the lower conjugate exponent attached to the weight.
    double q_alpha() const { return 2.0 / (1.0 + alpha()); }
    /// 2/(1-alpha), the upper conjugate exponent attached to the weight.
    double r_alpha() const { return 2.0 / (1.0 - alpha()); }
};

/// Index arrangements of the trigonometric system.
enum class Arrangement {
    RawInteger,      // tau_n for n = -m..m (order 2m+1)
    ComplexNatural,  // phi_0 = tau_0, phi_{2k} = tau_{-k}, phi_{2k+1} = tau_{k+1}
    RealNatural,     // 1, cos 2pi t, sin 2pi t, cos 4pi t, sin 4pi t, ...
};

/// Frequency carried by element `index` of a complex-exponential arrangement.
int arrangement_frequency(Arrangement arr, int index, int raw_half_width = 0);

/// Fourier coefficient hat w_lambda(n) = 2 int_0^{1/2} t^lambda cos(2 pi n t) dt
/// by oscillation-resolving composite Gauss panels; the endpoint singularity for
/// lambda < 0 is removed by the substitution t = s^{1/(1+lambda)}.
double weight_fourier_coeff(const WeightParams& params, int n, double tol = 1e-10);

/// Cached table of hat w_lambda(n), 0 <= n <= max_index (even extension implied).
class WeightFourierTable {
  public:
    WeightFourierTable() = default;

    /// Builds the table. For lambda < 0 the incremental cosine-tail route is
    /// used; for lambda >= 0 direct quadrature, parallelized over n.
    static WeightFourierTable build(const WeightParams& params, int max_index, double tol = 1e-10);

    /// Builds through the cache directory (CONDLAB_CACHE_DIR or fallback),
    /// storing a new table on miss. Empty dir disables caching.
    static WeightFourierTable build_cached(const WeightParams& params, int max_index, double tol,
                                           const std::string& cache_dir);

    static WeightFourierTable load(const std::string& path);
    void save(const std::string& path) const;

    const WeightParams& params() const { return params_; }
    int max_index() const { return int(coeffs_.size()) - 1; }
    double tol() const { return tol_; }
    double at(int n) const { return coeffs_[n < 0 ? -n : n]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

  private:
    WeightParams params_{0.0};
    double tol_ = 0.0;
    std::vector<double> coeffs_;
};

/// A_n = int_0^n cos(pi x) x^-alpha dx for n = 0..nmax (incremental quadrature,
/// singular first interval substituted x = s^{1/(1-alpha)}). Satisfies
/// hat w_{-alpha}(n) = 2^alpha n^{alpha-1} A_n.
std::vector<double> cosine_tail_table(double alpha, int nmax);

/// T_n = int_0^n x^{lambda-1} sin(pi x) dx for lambda in (0,1); independent
/// route hat w_lambda(n) = -lambda T_n / (2^lambda pi n^{1+lambda}).
std::vector<double> sine_tail_table(double lambda, int nmax);

/// The two tail quantities of the secondary-index estimate at a given n:
/// the cosine tail A_n above, the convolution sum
/// sum_{k<=n} k^{-(1+alpha)/2} (1+n-k)^{alpha-1}, its Beta-function bound
/// B_n = Beta((1-alpha)/2, alpha) n^{-(1-alpha)/2}, and the closed remainder
/// R_n with conv_sum <= B_n <= conv_sum + R_n for n >= 2.
struct AlternatingTail {
    double alpha = 0.0;
    int n = 0;
    double cos_tail = 0.0;
    double conv_sum = 0.0;
    double beta_bound = 0.0;
    double remainder = 0.0;
};

AlternatingTail alternating_tail(double alpha, int n);

/// Beta function via log-Gamma.
double beta_function(double a, double b);

/// Gram matrix of the first N elements of the arrangement in H_lambda;
/// entry (j,k) = <phi_j, phi_k>. Real symmetric in all three arrangements
/// (the weight is even). RawInteger requires N odd.
SymMatrix gram_matrix(const WeightFourierTable& table, int n, Arrangement arr);

/// sqrt(a^T G a) evaluated against the cached coefficients without
/// materializing the Gram matrix.
double h_norm(const WeightFourierTable& table, Arrangement arr, const std::vector<double>& coeffs);

/// ||D_m||_{H_lambda} through the closed Toeplitz sum
/// sum_{|j|<=2m} (2m+1-|j|) hat w(j); table must reach 2m.
double dirichlet_norm(const WeightFourierTable& table, int m);

/// ||f_m||_{H_{-alpha}} with f_m = sum_{n<=m} n^{-1/q_alpha} tau_n;
/// table must be for lambda = -alpha and reach m-1.
double fm_norm(const WeightFourierTable& table, int m);

/// Small dense complex matrix for the arrangement change of basis.
struct ComplexMatrix {
    int n = 0;
    std::vector<std::complex<double>> a;

    explicit ComplexMatrix(int order = 0) : n(order), a(std::size_t(order) * order) {}
    std::complex<double>& at(int i, int j) { return a[std::size_t(i) * n + j]; }
    std::complex<double> at(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

/// Change of basis C with phi^R_j = sum_i C(i,j) phi_i and its inverse,
/// N odd (constant plus cos/sin pairs).
struct RealComplexTransform {
    ComplexMatrix to_real;    // C
    ComplexMatrix from_real;  // C^-1
};

RealComplexTransform real_complex_transform(int n);

/// C^T G conj(C): the real-arrangement Gram obtained from a complex-natural
/// Gram; imaginary parts must cancel (asserted within tol).
SymMatrix conjugate_gram(const SymMatrix& gram_natural, const ComplexMatrix& c, double tol = 1e-9);

}  // namespace condlab

#endif
