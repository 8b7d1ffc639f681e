#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vacdist/dense.hpp"
#include "vacdist/pauli.hpp"

namespace vacdist {

/// Norm drift accepted after any operation.
inline constexpr double kNormTolerance = 1e-10;

/// 2x2 gate in row-major order {u00, u01, u10, u11}.
using Matrix2 = std::array<Complex, 4>;

namespace gates {
Matrix2 hadamard();
Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
/// diag(1, e^{i phi})
Matrix2 phase(double phi);
} // namespace gates

/**
 * @brief Physical qubits at the bottom of the register, ancillas above.
 *
 * Physical qubit k has index k; ancilla j has index n_physical + j.
 */
struct RegisterLayout {
    std::size_t n_physical{1};
    std::size_t n_ancilla{0};

    [[nodiscard]] std::size_t n_qubits() const { return n_physical + n_ancilla; }
    [[nodiscard]] std::size_t ancilla_qubit(std::size_t j) const;
    /// Bits of a basis index that belong to ancillas.
    [[nodiscard]] std::uint64_t ancilla_mask() const;
    [[nodiscard]] std::uint64_t physical_mask() const;
};

/**
 * @brief Normalized amplitude vector over n qubits.
 *
 * Qubit 0 is the least-significant bit of the amplitude index. Gates act
 * in place; copies are cheap enough for the register sizes used here
 * (at most 12 qubits).
 */
class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(std::size_t n_qubits);

    /// Takes ownership of amplitudes; length must be a power of two and
    /// the vector normalized to kNormTolerance.
    static StateVector from_amplitudes(std::vector<Complex> amps);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const { return amps_; }
    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amps_[i];
    }

    [[nodiscard]] double norm_squared() const;

    /// Same state tensored with |0> on `extra` new high-order qubits.
    [[nodiscard]] StateVector with_ancillas(std::size_t extra) const;

    void apply_one_qubit(std::size_t q, const Matrix2 &u);

    /// k-qubit unitary on `targets` (targets[0] is the least-significant
    /// bit of the block index).
    void apply_block(std::span<const std::size_t> targets, const DenseMatrix &u);

    /// `u` on `targets`, only on the branch where `control` is 1.
    void apply_controlled_block(std::size_t control,
                                std::span<const std::size_t> targets,
                                const DenseMatrix &u);

    /// exp(-i t H) for a Z-type H as a diagonal phase on the low
    /// h.n_qubits() qubits. Skips building a dense matrix.
    void apply_diagonal_evolution(const PauliHamiltonian &h, double t);

    /// Rescale so the norm is exactly 1. Used after projections.
    void normalize();

  private:
    StateVector(std::size_t n_qubits, std::vector<Complex> amps);

    void check_qubit(std::size_t q, const char *what) const;
    void apply_block_impl(std::span<const std::size_t> targets,
                          const DenseMatrix &u, std::uint64_t required_mask);

    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

/// Basis state; bits[k] is the value of qubit k ('0' or '1').
StateVector basis_state(std::size_t n_qubits, std::string_view bits);

/// Inverse of basis_state's convention: character k is qubit k.
std::string index_to_bitstring(std::uint64_t index, std::size_t n_qubits);

/// <psi|O|psi>. O may act on fewer qubits than the state (identity is
/// implied on the rest, typically the ancillas).
double expectation(const StateVector &state, const PauliHamiltonian &obs);

/// <a|b>
Complex inner_product(const StateVector &a, const StateVector &b);

struct Projection {
    double active_prob;
    /// Renormalized all-ancillas-zero component on the physical register.
    StateVector projected;
};

/// Project onto all ancillas |0>. Throws DegenerateProtocolError when the
/// active probability is below `min_prob`.
Projection project_ancillas_zero(const StateVector &state,
                                 const RegisterLayout &layout,
                                 double min_prob = 0.0);

/// Probability mass with every ancilla reading 0 (no renormalization).
double active_probability(const StateVector &state, const RegisterLayout &layout);

/**
 * @brief Outcome counts from repeated computational-basis measurement.
 *
 * Counts are stored densely by basis index; counts() gives the bitstring
 * view.
 */
class ShotTally {
  public:
    ShotTally(std::size_t n_qubits, std::uint64_t seed);

    void add(std::uint64_t index, std::uint64_t count = 1);

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::uint64_t n_shots() const { return n_shots_; }
    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] std::uint64_t count_of(std::uint64_t index) const {
        return by_index_[index];
    }
    [[nodiscard]] std::span<const std::uint64_t> by_index() const {
        return by_index_;
    }
    /// Non-zero counts keyed by bitstring (character k = qubit k).
    [[nodiscard]] std::map<std::string, std::uint64_t> counts() const;

  private:
    std::size_t n_qubits_;
    std::uint64_t seed_;
    std::uint64_t n_shots_{0};
    std::vector<std::uint64_t> by_index_;
};

/// n_shots independent draws from |amp|^2, reproducible for a fixed seed.
ShotTally sample_shots(const StateVector &state, std::uint64_t n_shots,
                       std::uint64_t seed);

} // namespace vacdist
