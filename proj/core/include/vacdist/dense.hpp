#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace vacdist {

using Complex = std::complex<double>;

/**
 * @brief Square complex matrix stored row-major.
 *
 * Used both for Hermitian operators (the output of to_dense) and for the
 * unitaries produced by expm_exact. Dimensions here are small (at most
 * 2^12), so a flat std::vector is sufficient.
 */
class DenseMatrix {
  public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim);

    static DenseMatrix identity(std::size_t dim);
    static DenseMatrix diagonal(const std::vector<Complex> &diag);

    [[nodiscard]] std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) {
        return data_[row * dim_ + col];
    }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return data_[row * dim_ + col];
    }

    [[nodiscard]] const std::vector<Complex> &data() const { return data_; }

    [[nodiscard]] DenseMatrix adjoint() const;

    DenseMatrix &operator+=(const DenseMatrix &rhs);
    DenseMatrix &operator*=(Complex scale);

    friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b);
    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b) {
        a += b;
        return a;
    }
    friend DenseMatrix operator*(Complex s, DenseMatrix m) {
        m *= s;
        return m;
    }

    [[nodiscard]] std::vector<Complex>
    apply(const std::vector<Complex> &v) const;

  private:
    std::size_t dim_{0};
    std::vector<Complex> data_;
};

/// Largest elementwise |a - b|. Dimensions must agree.
double max_abs_diff(const DenseMatrix &a, const DenseMatrix &b);

/// Frobenius norm.
double frobenius_norm(const DenseMatrix &m);

/// Largest |m - m^dagger| entry.
double hermiticity_defect(const DenseMatrix &m);

/// Largest |m^dagger m - I| entry.
double unitarity_defect(const DenseMatrix &m);

/// Eigen-decomposition of a Hermitian matrix. values ascending, vectors
/// stored as columns of an orthonormal (unitary) matrix.
struct EigenSystem {
    std::vector<double> values;
    DenseMatrix vectors;

    /// Column `k` as a vector.
    [[nodiscard]] std::vector<Complex> vector(std::size_t k) const;
};

/// Tunables for the cyclic Jacobi sweep.
struct JacobiOptions {
    /// Stop once the off-diagonal Frobenius norm falls below
    /// tolerance * max(1, ||M||_F).
    double tolerance = 1e-13;
    int max_sweeps = 100;
    /// Required hermiticity of the input.
    double hermitian_tolerance = 1e-12;
};

/**
 * @brief Hermitian eigensolver using cyclic complex Jacobi rotations.
 *
 * Each rotation first removes the phase of the pivot element and then
 * applies a real Givens rotation, so the iteration stays in the complex
 * Hermitian form without a 2n x 2n real embedding.
 *
 * @throws ValidationError if the input is not Hermitian.
 * @throws NumericalError if the sweep limit is reached.
 */
EigenSystem eig_hermitian(const DenseMatrix &m, const JacobiOptions &opts = {});

/// exp(-i t M) for Hermitian M via V diag(exp(-i lambda t)) V^dagger.
DenseMatrix expm_hermitian(const DenseMatrix &m, double t);

/// Same as expm_hermitian but reuses an existing decomposition.
DenseMatrix expm_from_eigensystem(const EigenSystem &es, double t);

} // namespace vacdist
