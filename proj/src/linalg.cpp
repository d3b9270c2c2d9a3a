#include "condlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "condlab/errors.hpp"

namespace condlab {

SymMatrix SymMatrix::identity(int order) {
    SymMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = 1.0;
    return m;
}

double SymMatrix::frobenius() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

double SymMatrix::symmetry_defect() const {
    double d = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) d = std::max(d, std::fabs(at(i, j) - at(j, i)));
    return d;
}

SymMatrix cholesky(const SymMatrix& a) {
    const int n = a.order();
    double max_diag = 0.0;
    for (int i = 0; i < n; ++i) max_diag = std::max(max_diag, a.at(i, i));
    const double pivot_tol = 1e-13 * max_diag;

    SymMatrix l(n);
    for (int j = 0; j < n; ++j) {
        double d = a.at(j, j);
        for (int k = 0; k < j; ++k) d -= l.at(j, k) * l.at(j, k);
        if (!(d > pivot_tol)) throw NotPositiveDefinite(j);
        const double ljj = std::sqrt(d);
        l.at(j, j) = ljj;
        for (int i = j + 1; i < n; ++i) {
            double s = a.at(i, j);
            for (int k = 0; k < j; ++k) s -= l.at(i, k) * l.at(j, k);
            l.at(i, j) = s / ljj;
        }
    }
    return l;
}

namespace {

double off_diag_frobenius(const SymMatrix& a) {
    const int n = a.order();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += 2.0 * a.at(i, j) * a.at(i, j);
    return std::sqrt(s);
}

// One cyclic Jacobi pass; rotations below threshold are skipped.
// Returns the number of rotations applied.
long jacobi_sweep(SymMatrix& a, SymMatrix* v, double threshold) {
    const int n = a.order();
    long rotations = 0;
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const double apq = a.at(p, q);
            if (std::fabs(apq) <= threshold) continue;
            const double app = a.at(p, p);
            const double aqq = a.at(q, q);
            const double theta = (aqq - app) / (2.0 * apq);
            const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
            const double c = 1.0 / std::sqrt(t * t + 1.0);
            const double s = t * c;
            const double tau = s / (1.0 + c);

            a.at(p, p) = app - t * apq;
            a.at(q, q) = aqq + t * apq;
            a.at(p, q) = 0.0;
            a.at(q, p) = 0.0;
            for (int r = 0; r < n; ++r) {
                if (r != p && r != q) {
                    const double arp = a.at(r, p);
                    const double arq = a.at(r, q);
                    a.at(r, p) = arp - s * (arq + tau * arp);
                    a.at(p, r) = a.at(r, p);
                    a.at(r, q) = arq + s * (arp - tau * arq);
                    a.at(q, r) = a.at(r, q);
                }
                if (v) {
                    const double vrp = v->at(r, p);
                    const double vrq = v->at(r, q);
                    v->at(r, p) = vrp - s * (vrq + tau * vrp);
                    v->at(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
            ++rotations;
        }
    }
    return rotations;
}

void jacobi_run(SymMatrix& a, SymMatrix* v, const JacobiOptions& opts) {
    const int n = a.order();
    if (n <= 1) return;
    const double anorm = a.frobenius();
    if (anorm == 0.0) return;
    for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
        const double off = off_diag_frobenius(a);
        if (off <= opts.tol * anorm) return;
        // threshold sweeps: aggressive early, machine-level later
        const double threshold = (sweep < 3) ? 0.2 * off / (n * n) : 0.0;
        jacobi_sweep(a, v, threshold);
    }
    if (off_diag_frobenius(a) > opts.tol * anorm) throw NoConvergence(opts.max_sweeps);
}

}  // namespace

EigenResult sym_eig(SymMatrix a, const JacobiOptions& opts) {
    const int n = a.order();
    SymMatrix v = SymMatrix::identity(n);
    jacobi_run(a, &v, opts);

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int i, int j) { return a.at(i, i) > a.at(j, j); });

    EigenResult res;
    res.values.resize(n);
    res.vectors = SymMatrix(n);
    for (int k = 0; k < n; ++k) {
        res.values[k] = a.at(idx[k], idx[k]);
        for (int r = 0; r < n; ++r) res.vectors.at(r, k) = v.at(r, idx[k]);
    }
    return res;
}

std::vector<double> sym_eig_values(SymMatrix a, const JacobiOptions& opts) {
    jacobi_run(a, nullptr, opts);
    const int n = a.order();
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = a.at(i, i);
    std::sort(vals.begin(), vals.end(), std::greater<>());
    return vals;
}

double gen_sym_eig_max(const SymMatrix& m, const SymMatrix& g, const JacobiOptions& opts) {
    if (m.order() != g.order()) throw DimensionMismatch("gen_sym_eig_max operands");
    const int n = g.order();
    const SymMatrix l = cholesky(g);

    // Y = L^-1 M  (forward substitution on each column of M)
    SymMatrix y(n);
    for (int col = 0; col < n; ++col) {
        for (int i = 0; i < n; ++i) {
            double s = m.at(i, col);
            for (int k = 0; k < i; ++k) s -= l.at(i, k) * y.at(k, col);
            y.at(i, col) = s / l.at(i, i);
        }
    }
    // B = Y L^-T; row i of B solves L B(i,:)^T = Y(i,:)^T
    SymMatrix b(n);
    for (int row = 0; row < n; ++row) {
        for (int j = 0; j < n; ++j) {
            double s = y.at(row, j);
            for (int k = 0; k < j; ++k) s -= l.at(j, k) * b.at(row, k);
            b.at(row, j) = s / l.at(j, j);
        }
    }
    // symmetrize roundoff
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (b.at(i, j) + b.at(j, i));
            b.at(i, j) = v;
            b.at(j, i) = v;
        }
    const std::vector<double> vals = sym_eig_values(std::move(b), opts);
    return vals.empty() ? 0.0 : vals.front();
}

std::vector<double> solve_spd(const SymMatrix& a, const std::vector<double>& b) {
    if (int(b.size()) != a.order()) throw DimensionMismatch("solve_spd rhs");
    const int n = a.order();
    const SymMatrix l = cholesky(a);
    std::vector<double> x(b);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < i; ++k) x[i] -= l.at(i, k) * x[k];
        x[i] /= l.at(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int k = i + 1; k < n; ++k) x[i] -= l.at(k, i) * x[k];
        x[i] /= l.at(i, i);
    }
    return x;
}

SymMatrix hermitian_embedding(const SymMatrix& re, const SymMatrix& im) {
    if (re.order() != im.order()) throw DimensionMismatch("hermitian_embedding parts");
    const int n = re.order();
    SymMatrix e(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            e.at(i, j) = re.at(i, j);
            e.at(n + i, n + j) = re.at(i, j);
            e.at(i, n + j) = -im.at(i, j);
            e.at(n + i, j) = im.at(i, j);
        }
    return e;
}

double quadratic_form(const SymMatrix& a, const std::vector<double>& x) {
    const int n = a.order();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        const double* ai = a.data() + std::size_t(i) * n;
        for (int j = 0; j < n; ++j) row += ai[j] * x[j];
        total += x[i] * row;
    }
    return total;
}

}  // namespace condlab
