#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "vacdist/dense.hpp"

namespace vacdist {

/// Largest register the dense layer will expand.
inline constexpr std::size_t kMaxDenseQubits = 12;

/// Coefficients below this magnitude are dropped when merging terms.
inline constexpr double kMergeThreshold = 1e-15;

/**
 * @brief A real-weighted Pauli word.
 *
 * `word[k]` is the letter acting on qubit k (one of I, X, Y, Z). With a
 * real coefficient the term is Hermitian.
 */
struct PauliString {
    double coeff{1.0};
    std::string word;

    /// Bit k set where the letter flips qubit k (X or Y).
    [[nodiscard]] std::uint64_t flip_mask() const;
    /// Bit k set where the letter contributes a (-1)^{bit} sign (Y or Z).
    [[nodiscard]] std::uint64_t sign_mask() const;
    [[nodiscard]] std::size_t y_count() const;
    /// Only I and Z letters.
    [[nodiscard]] bool is_diagonal() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;
};

/// True when the two words commute (even number of anticommuting sites).
bool commutes(std::string_view a, std::string_view b);

/**
 * @brief Hermitian operator as a sum of Pauli strings over a fixed
 * register width.
 *
 * Terms are kept in canonical form: one entry per distinct word, sorted
 * lexicographically by word, with near-zero coefficients removed.
 */
class PauliHamiltonian {
  public:
    PauliHamiltonian() = default;
    explicit PauliHamiltonian(std::size_t n_qubits);
    PauliHamiltonian(std::size_t n_qubits, std::vector<PauliString> terms);
    PauliHamiltonian(std::size_t n_qubits,
                     std::initializer_list<PauliString> terms);

    /// Single-letter term on one qubit, e.g. single(2, 'Z', 0, 0.5).
    static PauliHamiltonian single(std::size_t n_qubits, char letter,
                                   std::size_t qubit, double coeff = 1.0);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] const std::vector<PauliString> &terms() const {
        return terms_;
    }
    [[nodiscard]] bool empty() const { return terms_.empty(); }

    /// Coefficient of a word, 0 if absent.
    [[nodiscard]] double coeff(std::string_view word) const;

    /// All terms are I/Z only.
    [[nodiscard]] bool is_diagonal() const;

    /// Same operator on a wider register (identity on the new qubits).
    [[nodiscard]] PauliHamiltonian padded(std::size_t n_qubits) const;

    PauliHamiltonian &operator+=(const PauliHamiltonian &rhs);
    PauliHamiltonian &operator*=(double scale);

    friend PauliHamiltonian operator+(PauliHamiltonian a,
                                      const PauliHamiltonian &b) {
        a += b;
        return a;
    }
    friend PauliHamiltonian operator-(PauliHamiltonian a,
                                      const PauliHamiltonian &b) {
        a += b * -1.0;
        return a;
    }
    friend PauliHamiltonian operator*(PauliHamiltonian h, double s) {
        h *= s;
        return h;
    }
    friend PauliHamiltonian operator*(double s, PauliHamiltonian h) {
        h *= s;
        return h;
    }
    friend bool operator==(const PauliHamiltonian &,
                           const PauliHamiltonian &) = default;

    [[nodiscard]] std::string to_string() const;

  private:
    void canonicalize();

    std::size_t n_qubits_{0};
    std::vector<PauliString> terms_;
};

/// Kronecker expansion of every term, summed. Throws ConfigError above
/// kMaxDenseQubits.
DenseMatrix to_dense(const PauliHamiltonian &h);

/// exp(-i t H), unitary. The caller applies any extra global phase.
DenseMatrix expm_exact(const PauliHamiltonian &h, double t);

/// Diagonal of a Z-type Hamiltonian, without building the matrix.
std::vector<double> diagonal_values(const PauliHamiltonian &h);

} // namespace vacdist
