#ifndef CONDLAB_LINALG_HPP
#define CONDLAB_LINALG_HPP

#include <cstddef>
#include <vector>

namespace condlab {

/// Dense real symmetric matrix, row-major. Complex Hermitian inputs are
/// handled through the real embedding of order 2n (see hermitian_embedding).
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int order, double fill = 0.0) : n_(order), a_(std::size_t(order) * order, fill) {}

    static SymMatrix identity(int order);

    int order() const { return n_; }
    double& at(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
    double at(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    void set_sym(int i, int j, double v) {
        at(i, j) = v;
        at(j, i) = v;
    }
    double frobenius() const;
    /// Largest |entry| mismatch against exact symmetry.
    double symmetry_defect() const;

  private:
    int n_ = 0;
    std::vector<double> a_;
};

struct EigenResult {
    std::vector<double> values;  // descending
    SymMatrix vectors;           // column k is the eigenvector of values[k]
};

struct JacobiOptions {
    int max_sweeps = 64;
    double tol = 1e-14;  // off-diagonal Frobenius relative to ||A||_F
};

/// Lower-triangular Cholesky factor L with L L^T = A.
/// Throws NotPositiveDefinite when a pivot falls at or below
/// 1e-13 * (largest diagonal entry).
SymMatrix cholesky(const SymMatrix& a);

/// Full spectrum by cyclic Jacobi with threshold sweeps. Throws NoConvergence
/// past opts.max_sweeps. Intended for orders up to a few thousand.
EigenResult sym_eig(SymMatrix a, const JacobiOptions& opts = {});

/// Eigenvalues only (no accumulation of rotations), same algorithm.
std::vector<double> sym_eig_values(SymMatrix a, const JacobiOptions& opts = {});

/// Largest lambda with M v = lambda G v, G positive definite, M positive
/// semidefinite, via Cholesky reduction G = L L^T and lambda_max(L^-1 M L^-T).
double gen_sym_eig_max(const SymMatrix& m, const SymMatrix& g, const JacobiOptions& opts = {});

/// Solve A x = b for positive definite A.
std::vector<double> solve_spd(const SymMatrix& a, const std::vector<double>& b);

/// Real symmetric embedding [[Re, -Im], [Im, Re]] of a Hermitian matrix given
/// by its real and imaginary parts (im must be antisymmetric).
SymMatrix hermitian_embedding(const SymMatrix& re, const SymMatrix& im);

/// a^T A a for a real quadratic form.
double quadratic_form(const SymMatrix& a, const std::vector<double>& x);

}  // namespace condlab

#endif
