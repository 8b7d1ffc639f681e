#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "support/oracles.hpp"
#include "vacdist/errors.hpp"
#include "vacdist/statevec.hpp"

using namespace vacdist;

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

StateVector plus_state() {
    return StateVector::from_amplitudes({kInvSqrt2, kInvSqrt2});
}

StateVector e0_state() {
    const auto v = oracle::e0_one_qubit();
    return StateVector::from_amplitudes({v[0], v[1]});
}

StateVector from_oracle(const oracle::Vec &v) {
    return StateVector::from_amplitudes(std::vector<Complex>(v.begin(), v.end()));
}

} // namespace

TEST(BasisState, OneQubit) {
    const auto s = basis_state(1, "1");
    EXPECT_EQ(s[0], Complex(0));
    EXPECT_EQ(s[1], Complex(1));
}

TEST(BasisState, CharacterKIsQubitK) {
    const auto s = basis_state(2, "10");
    EXPECT_EQ(s[0b01], Complex(1));
    EXPECT_DOUBLE_EQ(s.norm_squared(), 1.0);
    EXPECT_EQ(index_to_bitstring(0b01, 2), "10");
}

TEST(BasisState, AllZeros) {
    const auto s = basis_state(3, "000");
    ASSERT_EQ(s.dim(), 8u);
    EXPECT_EQ(s[0], Complex(1));
}

TEST(BasisState, LengthMismatchIsConfigError) {
    EXPECT_THROW(basis_state(2, "1"), ConfigError);
    EXPECT_THROW(basis_state(2, "1x"), ConfigError);
}

TEST(StateVector, RejectsUnnormalizedOrOddLength) {
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), ValidationError);
    EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), ConfigError);
}

TEST(ApplyOneQubit, HadamardOnZero) {
    auto s = basis_state(1, "0");
    s.apply_one_qubit(0, gates::hadamard());
    EXPECT_NEAR(s[0].real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(s[1].real(), kInvSqrt2, 1e-15);
}

TEST(ApplyOneQubit, ZOnPlus) {
    auto s = plus_state();
    s.apply_one_qubit(0, gates::pauli_z());
    EXPECT_NEAR(s[0].real(), kInvSqrt2, 1e-15);
    EXPECT_NEAR(s[1].real(), -kInvSqrt2, 1e-15);
}

TEST(ApplyOneQubit, XOnQubit1) {
    auto s = basis_state(2, "00");
    s.apply_one_qubit(1, gates::pauli_x());
    EXPECT_EQ(s[0b10], Complex(1));
}

TEST(ApplyOneQubit, RejectsNonUnitaryAndBadIndex) {
    auto s = basis_state(1, "0");
    EXPECT_THROW(s.apply_one_qubit(0, {Complex(1), Complex(1), Complex(0), Complex(1)}),
                 ValidationError);
    EXPECT_THROW(s.apply_one_qubit(1, gates::hadamard()), ConfigError);
}

TEST(ApplyControlledBlock, ControlOffLeavesState) {
    auto s = basis_state(2, "00");
    const std::vector<std::size_t> targets{0};
    s.apply_controlled_block(1, targets, oracle::to_dense_matrix(oracle::pauli('X')));
    EXPECT_EQ(s[0], Complex(1));
}

TEST(ApplyControlledBlock, CnotTruthTable) {
    auto s = basis_state(2, "01");
    const std::vector<std::size_t> targets{0};
    s.apply_controlled_block(1, targets, oracle::to_dense_matrix(oracle::pauli('X')));
    EXPECT_EQ(s[0b11], Complex(1));
}

TEST(ApplyControlledBlock, ControlledGlobalPhaseIsRelative) {
    // |0>_0 (|0> + |1>)_1 / sqrt2 with control 1, u = i I on qubit 0.
    auto s = StateVector::from_amplitudes({kInvSqrt2, 0.0, kInvSqrt2, 0.0});
    const std::vector<std::size_t> targets{0};
    s.apply_controlled_block(1, targets, DenseMatrix::diagonal({Complex(0, 1), Complex(0, 1)}));

    const auto full = oracle::controlled_full(2, 1, {0}, oracle::scale(oracle::eye(2), Complex(0, 1)));
    const auto ref = oracle::apply(full, {kInvSqrt2, 0.0, kInvSqrt2, 0.0});
    EXPECT_LT(oracle::max_diff(oracle::amplitudes(s), ref), 1e-15);
    EXPECT_NEAR(std::abs(s[0b10] - Complex(0, kInvSqrt2)), 0.0, 1e-15);
}

TEST(ApplyControlledBlock, OverlapIsConfigError) {
    auto s = basis_state(2, "00");
    const std::vector<std::size_t> targets{0};
    EXPECT_THROW(s.apply_controlled_block(0, targets, DenseMatrix::identity(2)), ConfigError);
    const std::vector<std::size_t> dup{0, 0};
    EXPECT_THROW(s.apply_block(dup, DenseMatrix::identity(4)), ConfigError);
}

TEST(ApplyControlledBlock, MatchesBruteForceOracle) {
    // Every control/target assignment on 2 and 3 qubits with u = exp(-i theta H).
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    for (std::size_t n : {2u, 3u}) {
        for (std::size_t control = 0; control < n; ++control) {
            std::vector<std::vector<std::size_t>> target_sets;
            for (std::size_t a = 0; a < n; ++a) {
                if (a == control) continue;
                target_sets.push_back({a});
                for (std::size_t b = 0; b < n; ++b) {
                    if (b != a && b != control) target_sets.push_back({a, b});
                }
            }
            for (const auto &targets : target_sets) {
                const std::size_t dim = std::size_t{1} << targets.size();
                const auto h = oracle::random_hermitian(dim, rng);
                const double theta = angle(rng);
                const auto u = expm_hermitian(oracle::to_dense_matrix(h), theta);
                const auto psi = oracle::random_state(std::size_t{1} << n, rng);

                auto s = from_oracle(psi);
                s.apply_controlled_block(control, targets, u);
                const auto full = oracle::controlled_full(
                    n, static_cast<int>(control), targets, oracle::expm_taylor(h, theta));
                EXPECT_LT(oracle::max_diff(oracle::amplitudes(s), oracle::apply(full, psi)), 1e-10);
                EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
            }
        }
    }
}

TEST(Expectation, ZOnOne) {
    EXPECT_DOUBLE_EQ(expectation(basis_state(1, "1"), PauliHamiltonian(1, {{1.0, "Z"}})), -1.0);
}

TEST(Expectation, ZOnGroundStateOfXPlusZ) {
    EXPECT_NEAR(expectation(e0_state(), PauliHamiltonian(1, {{1.0, "Z"}})),
                -std::numbers::sqrt2 / 2.0, 1e-14);
}

TEST(Expectation, XPlusZOnPlus) {
    // Oracle: <+|[[1,1],[1,-1]]|+> = (1 + 1 + 1 - 1) / 2.
    const double ref = oracle::expect(oracle::add(oracle::pauli('X'), oracle::pauli('Z')),
                                      {kInvSqrt2, kInvSqrt2});
    EXPECT_NEAR(ref, 1.0, 1e-15);
    EXPECT_NEAR(expectation(plus_state(), PauliHamiltonian(1, {{1.0, "X"}, {1.0, "Z"}})), ref, 1e-14);
}

TEST(Expectation, ObservablePaddedOntoAncillas) {
    auto s = basis_state(3, "100");
    EXPECT_DOUBLE_EQ(expectation(s, PauliHamiltonian(1, {{1.0, "Z"}})), -1.0);
    EXPECT_THROW(expectation(basis_state(1, "0"), PauliHamiltonian(2, {{1.0, "ZZ"}})),
                 ConfigError);
}

TEST(Expectation, LinearAndPhaseInvariant) {
    std::mt19937_64 rng(22);
    const PauliHamiltonian a(2, {{0.3, "XY"}, {-1.2, "ZI"}});
    const PauliHamiltonian b(2, {{0.8, "YY"}, {0.4, "IX"}});
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = oracle::random_state(4, rng);
        const auto s = from_oracle(v);
        EXPECT_NEAR(expectation(s, 2.0 * a + b),
                    2.0 * expectation(s, a) + expectation(s, b), 1e-12);
        oracle::Vec rotated = v;
        for (auto &x : rotated) x *= std::polar(1.0, 0.7 * trial);
        EXPECT_NEAR(expectation(from_oracle(rotated), a), expectation(s, a), 1e-12);
        // Dense oracle
        const auto dense = oracle::add(oracle::scale(oracle::pauli_word("XY"), 0.3),
                                       oracle::pauli_word("ZI"), -1.2);
        EXPECT_NEAR(expectation(s, a), oracle::expect(dense, v), 1e-12);
    }
}

TEST(ProjectAncillas, NoAncillasIsIdentity) {
    const auto p = project_ancillas_zero(e0_state(), {1, 0});
    EXPECT_DOUBLE_EQ(p.active_prob, 1.0);
    EXPECT_LT(std::abs(inner_product(p.projected, e0_state()) - Complex(1)), 1e-15);
}

TEST(ProjectAncillas, EqualSuperposition) {
    // (|0>|0> + |1>|1>)/sqrt2 : psi = |0>, phi = |1>.
    const auto s = StateVector::from_amplitudes({kInvSqrt2, 0.0, 0.0, kInvSqrt2});
    const auto p = project_ancillas_zero(s, {1, 1});
    EXPECT_NEAR(p.active_prob, 0.5, 1e-15);
    EXPECT_EQ(p.projected.n_qubits(), 1u);
    EXPECT_NEAR(std::abs(p.projected[0]), 1.0, 1e-15);
}

TEST(ProjectAncillas, BornRule) {
    const auto e0 = oracle::e0_one_qubit();
    const auto e1 = oracle::e1_one_qubit();
    const double a = std::sqrt(0.9);
    const double b = std::sqrt(0.1);
    const auto s = StateVector::from_amplitudes({a * e0[0], a * e0[1], b * e1[0], b * e1[1]});
    const auto p = project_ancillas_zero(s, {1, 1});
    EXPECT_NEAR(p.active_prob, 0.9, 1e-14);
    EXPECT_NEAR(std::abs(inner_product(p.projected, e0_state())), 1.0, 1e-14);
}

TEST(ProjectAncillas, IdempotentAndGuarded) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto s = from_oracle(oracle::random_state(8, rng));
        const auto once = project_ancillas_zero(s, {1, 2});
        const auto twice = project_ancillas_zero(once.projected, {1, 0});
        EXPECT_DOUBLE_EQ(twice.active_prob, 1.0);
        EXPECT_LT(oracle::max_diff(oracle::amplitudes(once.projected),
                                   oracle::amplitudes(twice.projected)),
                  1e-15);
    }
    EXPECT_THROW(project_ancillas_zero(basis_state(2, "01"), {1, 1}), DegenerateProtocolError);
    EXPECT_THROW(project_ancillas_zero(basis_state(2, "00"), {1, 2}), ConfigError);
}

TEST(SampleShots, DeterministicState) {
    const auto tally = sample_shots(basis_state(1, "1"), 1000, 5);
    EXPECT_EQ(tally.n_shots(), 1000u);
    EXPECT_EQ(tally.counts().size(), 1u);
    EXPECT_EQ(tally.counts().at("1"), 1000u);
    EXPECT_EQ(tally.seed(), 5u);
}

TEST(SampleShots, PlusStateIsFair) {
    const std::uint64_t n = 1'000'000;
    const auto tally = sample_shots(plus_state(), n, 42);
    // 4 sigma with sigma = sqrt(pq/n) = 5e-4.
    EXPECT_NEAR(static_cast<double>(tally.count_of(0)) / n, 0.5, 0.002);
}

TEST(SampleShots, GroundStateMeanZ) {
    const std::uint64_t n = 100'000'000;
    const auto tally = sample_shots(e0_state(), n, 7);
    const double mean =
        (static_cast<double>(tally.count_of(0)) - static_cast<double>(tally.count_of(1))) / n;
    // 4 sigma / sqrt(n) with sigma^2 = 1/2.
    EXPECT_NEAR(mean, -0.70711, 4.0 * std::sqrt(0.5 / n) + 5e-6);
}

TEST(SampleShots, ReproducibleAndSeedSensitive) {
    std::mt19937_64 rng(24);
    const auto s = from_oracle(oracle::random_state(8, rng));
    const auto a = sample_shots(s, 5000, 99);
    const auto b = sample_shots(s, 5000, 99);
    const auto c = sample_shots(s, 5000, 100);
    EXPECT_EQ(a.counts(), b.counts());
    EXPECT_NE(a.counts(), c.counts());
    std::uint64_t total = 0;
    for (const auto &[bits, count] : a.counts()) total += count;
    EXPECT_EQ(total, a.n_shots());
}

TEST(SampleShots, FrequenciesConvergeAcrossSeeds) {
    std::mt19937_64 rng(25);
    const auto s = from_oracle(oracle::random_state(8, rng));
    const std::uint64_t n = 10'000;
    int good = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto tally = sample_shots(s, n, seed);
        bool ok = true;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            const double p = std::norm(s[i]);
            const double f = static_cast<double>(tally.count_of(i)) / n;
            ok = ok && std::abs(f - p) <= 5.0 * std::sqrt(p * (1.0 - p) / n);
        }
        good += ok ? 1 : 0;
    }
    EXPECT_GE(good, 99);
}

TEST(StateVector, GatesPreserveNorm) {
    std::mt19937_64 rng(26);
    auto s = from_oracle(oracle::random_state(16, rng));
    std::uniform_int_distribution<std::size_t> q(0, 3);
    for (int step = 0; step < 200; ++step) {
        s.apply_one_qubit(q(rng), gates::hadamard());
        s.apply_one_qubit(q(rng), gates::phase(0.1 * step));
        const std::size_t c = q(rng);
        const std::size_t t = (c + 1 + q(rng) % 3) % 4;
        const std::vector<std::size_t> targets{t};
        s.apply_controlled_block(c, targets, oracle::to_dense_matrix(oracle::pauli('Y')));
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-10);
}

TEST(StateVector, DiagonalEvolutionMatchesExpm) {
    const PauliHamiltonian h(2, {{0.7, "ZI"}, {-0.3, "ZZ"}, {0.2, "IZ"}});
    std::mt19937_64 rng(27);
    const auto v = oracle::random_state(8, rng);
    auto s = from_oracle(v);
    s.apply_diagonal_evolution(h, 1.3);
    const auto u = oracle::kron(oracle::eye(2), oracle::expm_taylor(oracle::from_dense(to_dense(h)), 1.3));
    EXPECT_LT(oracle::max_diff(oracle::amplitudes(s), oracle::apply(u, v)), 1e-12);
}
