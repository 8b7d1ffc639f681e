#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vacdist/distill.hpp"
#include "vacdist/evolve.hpp"
#include "vacdist/models.hpp"

namespace vacdist {

enum class Experiment { fig1, table_1q, table_2q, distill };

std::string to_string(Experiment e);

/**
 * @brief Everything that determines an experiment's output.
 *
 * Defaults are the reference parameters (T = 36, dt = 1/24, 100 twirl
 * sub-steps) except for the shot count, which is 10^5 so the default
 * runs stay short; pass --shots 100000000 for the full-scale tables.
 */
struct ExperimentConfig {
    ModelSpec model{};
    double t_total{36.0};
    double dt{1.0 / 24.0};
    std::size_t rounds{5};
    std::uint64_t shots{100'000};
    std::size_t reps{1};
    std::uint64_t seed{20240607};
    UMode u_mode{UMode::trotterized};
    std::size_t twirl_steps{100};
    /// Propagation for the constant-H_T segment of fig1.
    Propagation const_mode{Propagation::exact};
    /// Basis string for the adiabatic start (character k = qubit k).
    /// Empty means the ground state of the initial Hamiltonian.
    std::string initial_bits;
    /// Empty means stdout.
    std::string out;
    /// Worker threads for reps; 0 = hardware concurrency.
    std::size_t threads{0};

    /// Defaults for one experiment: table_2q uses the two-site model and
    /// 6 rounds, the others the one-qubit model and 5 rounds.
    static ExperimentConfig defaults_for(Experiment e);

    void validate() const;
    [[nodiscard]] TwirlConfig twirl() const;
    [[nodiscard]] Schedule schedule() const;
    [[nodiscard]] StateVector start_state() const;
};

/// Upper bound on ancillas (= rounds) a table run may request.
inline constexpr std::size_t kMaxRounds = 8;

struct SummaryRow {
    std::size_t round;
    double mean;
    double std_error;
    std::uint64_t active_count;
    /// Total shots behind this row (shots x reps).
    std::uint64_t shots;
    /// Noiseless conditional expectation from the statevector.
    double exact_cond_expect;
};

struct Fig1Row {
    double t;
    double exact_z;
    double sampled_z;
};

struct Summary {
    double mean;
    double std_error;
};

/// Mean and standard error (sample standard deviation / sqrt(n)); the
/// error is 0 for a single sample. Throws UsageError on empty input.
Summary summarize(std::span<const double> samples);

/// Mean and per-shot variance of a diagonal observable over the shots
/// whose ancilla bits all read 0.
struct ActiveShotStats {
    std::uint64_t active_count;
    double mean;
    double variance;
};
ActiveShotStats active_shot_stats(const ShotTally &tally,
                                  const RegisterLayout &layout,
                                  const PauliHamiltonian &obs);

/// Adiabatic trace to T then constant-H_T evolution to 2T, one row per dt.
std::vector<Fig1Row> run_fig1(const ExperimentConfig &cfg);

/// One SummaryRow per round 0..cfg.rounds.
std::vector<SummaryRow> run_table(const ExperimentConfig &cfg);

/// Exact statevector records of a single distillation of the prepared state.
std::vector<TwirlRecord> run_distill_records(const ExperimentConfig &cfg);

/// Angular frequency from the mean spacing of zero crossings of
/// (value - mean). Needs at least two crossings.
double fit_angular_frequency(std::span<const double> t,
                             std::span<const double> value);

/// Trapezoidal time average over [t0, t1] on a uniform grid, with linear
/// interpolation at the ends.
double time_average(std::span<const double> t, std::span<const double> value,
                    double t0, double t1);

void write_fig1_csv(std::ostream &os, const ExperimentConfig &cfg,
                    const std::vector<Fig1Row> &rows);
void write_table_csv(std::ostream &os, Experiment e, const ExperimentConfig &cfg,
                     const std::vector<SummaryRow> &rows);
void write_distill_csv(std::ostream &os, const ExperimentConfig &cfg,
                       const std::vector<TwirlRecord> &records);

} // namespace vacdist
