#include "vacdist/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vacdist/errors.hpp"

namespace vacdist {

DenseMatrix::DenseMatrix(std::size_t dim) : dim_{dim}, data_(dim * dim) {}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<Complex> &diag) {
    DenseMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseMatrix &DenseMatrix::operator+=(const DenseMatrix &rhs) {
    if (rhs.dim_ != dim_) {
        throw ConfigError("DenseMatrix: dimension mismatch in addition");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += rhs.data_[i];
    }
    return *this;
}

DenseMatrix &DenseMatrix::operator*=(Complex scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim_ != b.dim_) {
        throw ConfigError("DenseMatrix: dimension mismatch in product");
    }
    const std::size_t n = a.dim_;
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

std::vector<Complex> DenseMatrix::apply(const std::vector<Complex> &v) const {
    if (v.size() != dim_) {
        throw ConfigError("DenseMatrix::apply: vector length " +
                          std::to_string(v.size()) + " != dim " +
                          std::to_string(dim_));
    }
    std::vector<Complex> out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        Complex acc{};
        for (std::size_t c = 0; c < dim_; ++c) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.dim() != b.dim()) {
        throw ConfigError("max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

double frobenius_norm(const DenseMatrix &m) {
    double acc = 0.0;
    for (const auto &x : m.data()) {
        acc += std::norm(x);
    }
    return std::sqrt(acc);
}

double hermiticity_defect(const DenseMatrix &m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = r; c < m.dim(); ++c) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

double unitarity_defect(const DenseMatrix &m) {
    return max_abs_diff(m.adjoint() * m, DenseMatrix::identity(m.dim()));
}

std::vector<Complex> EigenSystem::vector(std::size_t k) const {
    std::vector<Complex> v(vectors.dim());
    for (std::size_t r = 0; r < v.size(); ++r) {
        v[r] = vectors(r, k);
    }
    return v;
}

namespace {

double off_diagonal_norm(const DenseMatrix &a) {
    double acc = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (r != c) {
                acc += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(acc);
}

// Zeroes a(p,q) with the unitary J = diag-phase * Givens acting on the
// (p,q) plane:
//   J_pp = c,  J_pq = s,  J_qp = -s e^{-i phi},  J_qq = c e^{-i phi}
// where phi = arg a(p,q). a <- J^dagger a J, v <- v J.
void rotate(DenseMatrix &a, DenseMatrix &v, std::size_t p, std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) {
        return;
    }
    const Complex phase = std::conj(apq) / mag; // e^{-i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex jpp = c;
    const Complex jpq = s;
    const Complex jqp = -s * phase;
    const Complex jqq = c * phase;

    const std::size_t n = a.dim();
    // Columns: a <- a J
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    // Rows: a <- J^dagger a
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

} // namespace

EigenSystem eig_hermitian(const DenseMatrix &m, const JacobiOptions &opts) {
    const std::size_t n = m.dim();
    if (n == 0) {
        throw ConfigError("eig_hermitian: empty matrix");
    }
    if (const double defect = hermiticity_defect(m);
        defect > opts.hermitian_tolerance) {
        throw ValidationError("eig_hermitian: matrix is not Hermitian (defect " +
                              std::to_string(defect) + ")");
    }

    DenseMatrix a = m;
    DenseMatrix v = DenseMatrix::identity(n);
    const double threshold = opts.tolerance * std::max(1.0, frobenius_norm(m));

    int sweep = 0;
    while (off_diagonal_norm(a) >= threshold) {
        if (sweep++ >= opts.max_sweeps) {
            throw NumericalError("eig_hermitian: no convergence after " +
                                 std::to_string(opts.max_sweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                rotate(a, v, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    EigenSystem es;
    es.values.resize(n);
    es.vectors = DenseMatrix(n);
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            es.vectors(r, k) = v(r, order[k]);
        }
    }
    return es;
}

DenseMatrix expm_from_eigensystem(const EigenSystem &es, double t) {
    const std::size_t n = es.vectors.dim();
    DenseMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const Complex phase = std::polar(1.0, -es.values[k] * t);
        for (std::size_t r = 0; r < n; ++r) {
            const Complex vr = es.vectors(r, k) * phase;
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += vr * std::conj(es.vectors(c, k));
            }
        }
    }
    return out;
}

DenseMatrix expm_hermitian(const DenseMatrix &m, double t) {
    return expm_from_eigensystem(eig_hermitian(m), t);
}

} // namespace vacdist
