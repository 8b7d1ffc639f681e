#pragma once

// Brute-force reference linear algebra for tests. Nothing here calls into
// the library's dense or statevector code: matrices are plain nested
// vectors built from explicit Kronecker products, and exponentials come
// from a scaled-and-squared Taylor series.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "vacdist/dense.hpp"
#include "vacdist/statevec.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;
using Vec = std::vector<C>;

inline Mat zeros(std::size_t n) { return Mat(n, std::vector<C>(n)); }

inline Mat eye(std::size_t n) {
    Mat m = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Mat pauli(char letter) {
    switch (letter) {
    case 'X':
        return {{0, 1}, {1, 0}};
    case 'Y':
        return {{0, C{0, -1}}, {C{0, 1}, 0}};
    case 'Z':
        return {{1, 0}, {0, -1}};
    default:
        return eye(2);
    }
}

inline Mat hadamard() {
    const double r = 1.0 / std::sqrt(2.0);
    return {{r, r}, {r, -r}};
}

/// a (x) b with b on the low-order index bits.
inline Mat kron(const Mat &a, const Mat &b) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    Mat out = zeros(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out[i * nb + k][j * nb + l] = a[i][j] * b[k][l];
    return out;
}

/// Matrix of a Pauli word where word[k] acts on qubit k (qubit 0 = LSB):
/// op_{n-1} (x) ... (x) op_0.
inline Mat pauli_word(const std::string &word) {
    Mat m = pauli(word[0]);
    for (std::size_t k = 1; k < word.size(); ++k) {
        m = kron(pauli(word[k]), m);
    }
    return m;
}

inline Mat add(const Mat &a, const Mat &b, C scale_b = 1.0) {
    Mat out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            out[i][j] += scale_b * b[i][j];
    return out;
}

inline Mat scale(const Mat &a, C s) {
    Mat out = a;
    for (auto &row : out)
        for (auto &x : row)
            x *= s;
    return out;
}

inline Mat mul(const Mat &a, const Mat &b) {
    const std::size_t n = a.size();
    Mat out = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                out[i][j] += a[i][k] * b[k][j];
    return out;
}

inline Mat adjoint(const Mat &a) {
    Mat out = zeros(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            out[j][i] = std::conj(a[i][j]);
    return out;
}

inline Vec apply(const Mat &a, const Vec &v) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            out[i] += a[i][j] * v[j];
    return out;
}

inline double norm_inf(const Mat &a) {
    double best = 0.0;
    for (const auto &row : a)
        for (const auto &x : row)
            best = std::max(best, std::abs(x));
    return best;
}

/// exp(-i t H) by scaling and squaring of a 30-term Taylor series.
inline Mat expm_taylor(const Mat &h, double t) {
    Mat a = scale(h, C{0.0, -t});
    int squarings = 0;
    while (norm_inf(a) * static_cast<double>(a.size()) > 0.5) {
        a = scale(a, 0.5);
        ++squarings;
    }
    Mat result = eye(a.size());
    Mat term = eye(a.size());
    for (int k = 1; k <= 30; ++k) {
        term = scale(mul(term, a), 1.0 / k);
        result = add(result, term);
    }
    for (int s = 0; s < squarings; ++s) {
        result = mul(result, result);
    }
    return result;
}

/// Full-register matrix of `u` (on `targets`, targets[0] = low block
/// bit) applied only where `control` is 1. control < 0 means always.
inline Mat controlled_full(std::size_t n_qubits, int control,
                           const std::vector<std::size_t> &targets, const Mat &u) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    Mat full = zeros(dim);
    for (std::size_t col = 0; col < dim; ++col) {
        if (control >= 0 && ((col >> control) & 1U) == 0) {
            full[col][col] = 1.0;
            continue;
        }
        std::size_t sub_col = 0;
        std::size_t rest = col;
        for (std::size_t b = 0; b < targets.size(); ++b) {
            if ((col >> targets[b]) & 1U) {
                sub_col |= std::size_t{1} << b;
                rest &= ~(std::size_t{1} << targets[b]);
            }
        }
        for (std::size_t sub_row = 0; sub_row < u.size(); ++sub_row) {
            std::size_t row = rest;
            for (std::size_t b = 0; b < targets.size(); ++b) {
                if ((sub_row >> b) & 1U) {
                    row |= std::size_t{1} << targets[b];
                }
            }
            full[row][col] += u[sub_row][sub_col];
        }
    }
    return full;
}

inline Mat from_dense(const vacdist::DenseMatrix &m) {
    Mat out = zeros(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            out[i][j] = m(i, j);
    return out;
}

inline vacdist::DenseMatrix to_dense_matrix(const Mat &m) {
    vacdist::DenseMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out(i, j) = m[i][j];
    return out;
}

inline double max_diff(const Mat &a, const Mat &b) {
    return norm_inf(add(a, b, -1.0));
}

inline Vec amplitudes(const vacdist::StateVector &s) {
    return Vec(s.amplitudes().begin(), s.amplitudes().end());
}

inline double max_diff(const Vec &a, const Vec &b) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        best = std::max(best, std::abs(a[i] - b[i]));
    return best;
}

inline double expect(const Mat &op, const Vec &v) {
    const Vec w = apply(op, v);
    C acc{};
    for (std::size_t i = 0; i < v.size(); ++i)
        acc += std::conj(v[i]) * w[i];
    return acc.real();
}

inline Vec random_state(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Vec v(dim);
    double n2 = 0.0;
    for (auto &x : v) {
        x = C{g(rng), g(rng)};
        n2 += std::norm(x);
    }
    for (auto &x : v)
        x /= std::sqrt(n2);
    return v;
}

inline Mat random_hermitian(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Mat m = zeros(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = g(rng);
        for (std::size_t j = i + 1; j < dim; ++j) {
            m[i][j] = C{g(rng), g(rng)};
            m[j][i] = std::conj(m[i][j]);
        }
    }
    return m;
}

/// One-qubit ground/excited eigenvectors of X + Z with the phase
/// convention (first component positive) used by the closed forms.
inline Vec e0_one_qubit() {
    const double n = std::sqrt(4.0 + 2.0 * std::sqrt(2.0));
    return {1.0 / n, -(std::sqrt(2.0) + 1.0) / n};
}
inline Vec e1_one_qubit() {
    const double n = std::sqrt(4.0 - 2.0 * std::sqrt(2.0));
    return {1.0 / n, (std::sqrt(2.0) - 1.0) / n};
}

} // namespace oracle
