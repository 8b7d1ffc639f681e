#include "vacdist/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "vacdist/errors.hpp"
#include "vacdist/rng.hpp"

namespace vacdist {

std::string to_string(Experiment e) {
    switch (e) {
    case Experiment::fig1:
        return "fig1";
    case Experiment::table_1q:
        return "table-1q";
    case Experiment::table_2q:
        return "table-2q";
    case Experiment::distill:
        return "distill";
    }
    return "unknown";
}

ExperimentConfig ExperimentConfig::defaults_for(Experiment e) {
    ExperimentConfig cfg;
    if (e == Experiment::table_2q) {
        cfg.model.kind = ModelKind::schwinger_two_site;
        cfg.rounds = 6;
    }
    return cfg;
}

void ExperimentConfig::validate() const {
    if (!std::isfinite(model.j)) {
        throw UsageError("--j must be finite");
    }
    if (!(t_total > 0.0) || !(dt > 0.0)) {
        throw UsageError("--t-total and --dt must be positive");
    }
    if (shots < 1) {
        throw UsageError("--shots must be >= 1");
    }
    if (reps < 1) {
        throw UsageError("--reps must be >= 1");
    }
    if (rounds > kMaxRounds) {
        throw UsageError("--rounds must be <= " + std::to_string(kMaxRounds));
    }
    if (twirl_steps < 1) {
        throw UsageError("--twirl-steps must be >= 1");
    }
    if (!initial_bits.empty()) {
        const bool well_formed =
            initial_bits.size() == n_physical(model) &&
            initial_bits.find_first_not_of("01") == std::string::npos;
        if (!well_formed) {
            throw UsageError("--initial must be " + std::to_string(n_physical(model)) +
                             " characters of 0/1 for model " + to_string(model.kind));
        }
    }
}

TwirlConfig ExperimentConfig::twirl() const {
    return TwirlConfig{rounds, u_mode, twirl_steps};
}

Schedule ExperimentConfig::schedule() const { return Schedule::make(t_total, dt); }

StateVector ExperimentConfig::start_state() const {
    if (initial_bits.empty()) {
        return initial_state(model);
    }
    return basis_state(n_physical(model), initial_bits);
}

Summary summarize(std::span<const double> samples) {
    if (samples.empty()) {
        throw UsageError("summarize: no samples");
    }
    const double n = static_cast<double>(samples.size());
    double mean = 0.0;
    for (double x : samples) {
        mean += x;
    }
    mean /= n;
    if (samples.size() == 1) {
        return {mean, 0.0};
    }
    double ss = 0.0;
    for (double x : samples) {
        ss += (x - mean) * (x - mean);
    }
    const double sample_std = std::sqrt(ss / (n - 1.0));
    return {mean, sample_std / std::sqrt(n)};
}

ActiveShotStats active_shot_stats(const ShotTally &tally,
                                  const RegisterLayout &layout,
                                  const PauliHamiltonian &obs) {
    if (tally.n_qubits() != layout.n_qubits()) {
        throw ConfigError("active_shot_stats: tally/layout width mismatch");
    }
    if (obs.n_qubits() > layout.n_physical) {
        throw ConfigError("active_shot_stats: observable wider than physical register");
    }
    const auto diag = diagonal_values(obs.padded(layout.n_physical));
    const auto counts = tally.by_index();
    // Active outcomes are exactly the low 2^n_physical indices.
    std::uint64_t active = 0;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        const auto c = static_cast<double>(counts[i]);
        active += counts[i];
        sum += c * diag[i];
        sum_sq += c * diag[i] * diag[i];
    }
    if (active == 0) {
        throw DegenerateProtocolError("no active shots recorded");
    }
    const double n = static_cast<double>(active);
    const double mean = sum / n;
    return {active, mean, std::max(0.0, sum_sq / n - mean * mean)};
}

std::vector<Fig1Row> run_fig1(const ExperimentConfig &cfg) {
    cfg.validate();
    if (cfg.model.kind != ModelKind::one_qubit) {
        throw UsageError("fig1 requires the one-qubit model");
    }
    const auto sched = cfg.schedule();
    const auto z = observable(cfg.model);
    const RegisterLayout layout{1, 0};

    std::vector<Fig1Row> rows;
    const auto record = [&](double t, const StateVector &s) {
        const auto seed = derive_seed(cfg.seed, rows.size());
        const auto stats = active_shot_stats(sample_shots(s, cfg.shots, seed), layout, z);
        rows.push_back({t, expectation(s, z), stats.mean});
    };

    const auto psi_t = run_adiabatic(cfg.model, sched, cfg.start_state(),
                                     Propagation::trotter2, record);
    const auto trace = evolve_constant(psi_t, target_hamiltonian(cfg.model),
                                       sched.t_total, sched.dt(), cfg.const_mode,
                                       sched.t_total);
    for (std::size_t k = 1; k < trace.size(); ++k) {
        record(trace[k].t, trace[k].state);
    }
    return rows;
}

namespace {

struct RoundSample {
    double mean;
    double variance;
    std::uint64_t active;
    double exact;
};

std::vector<RoundSample> run_single_rep(const ExperimentConfig &cfg,
                                        std::uint64_t rep_seed) {
    const auto psi0 =
        run_adiabatic(cfg.model, cfg.schedule(), cfg.start_state());
    const auto obs = observable(cfg.model);
    const RegisterLayout layout{n_physical(cfg.model), cfg.rounds};

    std::vector<RoundSample> out;
    run_distillation(psi0, cfg.model, cfg.twirl(), obs,
                     [&](const TwirlRecord &rec, const StateVector &state) {
                         const auto tally = sample_shots(
                             state, cfg.shots, derive_seed(rep_seed, rec.round));
                         const auto stats = active_shot_stats(tally, layout, obs);
                         out.push_back({stats.mean, stats.variance,
                                        stats.active_count, rec.cond_expect});
                     });
    return out;
}

/// Runs fn(i) for i in [0, n) on a small pool; results are placed by
/// index, so the output order never depends on scheduling.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t n, std::size_t threads, Fn fn) {
    std::vector<Result> results(n);
    if (threads == 0) {
        threads = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    }
    threads = std::min(threads, n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            results[i] = fn(i);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    results[i] = fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    pool.clear();
    if (error) {
        std::rethrow_exception(error);
    }
    return results;
}

} // namespace

std::vector<SummaryRow> run_table(const ExperimentConfig &cfg) {
    cfg.validate();
    const auto per_rep = parallel_map<std::vector<RoundSample>>(
        cfg.reps, cfg.threads, [&](std::size_t rep) {
            return run_single_rep(cfg, derive_seed(cfg.seed, rep));
        });

    std::vector<SummaryRow> rows;
    for (std::size_t round = 0; round <= cfg.rounds; ++round) {
        std::vector<double> means;
        std::uint64_t active = 0;
        for (const auto &rep : per_rep) {
            means.push_back(rep[round].mean);
            active += rep[round].active;
        }
        auto summary = summarize(means);
        if (cfg.reps == 1) {
            const auto &only = per_rep.front()[round];
            summary.std_error =
                std::sqrt(only.variance / static_cast<double>(only.active));
        }
        rows.push_back({round, summary.mean, summary.std_error, active,
                        cfg.shots * cfg.reps, per_rep.front()[round].exact});
    }
    return rows;
}

std::vector<TwirlRecord> run_distill_records(const ExperimentConfig &cfg) {
    cfg.validate();
    const auto psi0 =
        run_adiabatic(cfg.model, cfg.schedule(), cfg.start_state());
    return run_distillation(psi0, cfg.model, cfg.twirl(), observable(cfg.model));
}

double fit_angular_frequency(std::span<const double> t,
                             std::span<const double> value) {
    if (t.size() != value.size() || t.size() < 3) {
        throw UsageError("fit_angular_frequency: need matching series of >= 3 points");
    }
    double mean = 0.0;
    for (double v : value) {
        mean += v;
    }
    mean /= static_cast<double>(value.size());

    std::vector<double> crossings;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double a = value[i] - mean;
        const double b = value[i + 1] - mean;
        if ((a < 0.0 && b >= 0.0) || (a > 0.0 && b <= 0.0)) {
            crossings.push_back(t[i] + a / (a - b) * (t[i + 1] - t[i]));
        }
    }
    if (crossings.size() < 3) {
        throw UsageError("fit_angular_frequency: fewer than three zero crossings");
    }
    // Same-direction crossings only, so an offset mean cancels.
    std::size_t last = crossings.size() - 1;
    if (last % 2 == 1) {
        --last;
    }
    const double half_periods = static_cast<double>(last);
    return std::numbers::pi * half_periods / (crossings[last] - crossings.front());
}

double time_average(std::span<const double> t, std::span<const double> value,
                    double t0, double t1) {
    if (t.size() != value.size() || t.size() < 2 || !(t1 > t0) ||
        t0 < t.front() || t1 > t.back()) {
        throw UsageError("time_average: bad series or window");
    }
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double a = std::max(t0, t[i]);
        const double b = std::min(t1, t[i + 1]);
        if (b <= a) {
            continue;
        }
        const double slope = (value[i + 1] - value[i]) / (t[i + 1] - t[i]);
        const double va = value[i] + slope * (a - t[i]);
        const double vb = value[i] + slope * (b - t[i]);
        integral += 0.5 * (va + vb) * (b - a);
    }
    return integral / (t1 - t0);
}

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string to_string(UMode m) {
    return m == UMode::exact ? "exact" : "trotter";
}

std::string to_string(Propagation p) {
    return p == Propagation::exact ? "exact" : "trotter";
}

void write_header(std::ostream &os, std::string_view experiment,
                  const ExperimentConfig &cfg) {
    const auto sched = cfg.schedule();
    os << "# vacdist " << experiment << "\n"
       << "# model=" << to_string(cfg.model.kind) << "\n"
       << "# j=" << num(cfg.model.j) << "\n"
       << "# t_total=" << num(cfg.t_total) << "\n"
       << "# dt=" << num(cfg.dt) << "\n"
       << "# n_steps=" << sched.n_steps << "\n"
       << "# dt_effective=" << num(sched.dt()) << "\n"
       << "# s_convention=midpoint\n"
       << "# rounds=" << cfg.rounds << "\n"
       << "# shots=" << cfg.shots << "\n"
       << "# reps=" << cfg.reps << "\n"
       << "# seed=" << cfg.seed << "\n"
       << "# seed_derivation=splitmix64 stream split; rep r -> derive_seed(seed,r), "
          "sample k -> derive_seed(rep_seed,k)\n"
       << "# rng=mt19937_64\n"
       << "# u_mode=" << to_string(cfg.u_mode) << "\n"
       << "# twirl_steps=" << cfg.twirl_steps << "\n"
       << "# initial=" << (cfg.initial_bits.empty() ? "ground_of_h0" : cfg.initial_bits) << "\n"
       << "# prep_policy=re-prepared per rep (deterministic; only sampling varies)\n";
}

} // namespace

void write_fig1_csv(std::ostream &os, const ExperimentConfig &cfg,
                    const std::vector<Fig1Row> &rows) {
    write_header(os, "fig1", cfg);
    os << "# const_mode=" << to_string(cfg.const_mode) << "\n";
    os << "t,exact_z,sampled_z\n";
    for (const auto &r : rows) {
        os << num(r.t) << ',' << num(r.exact_z) << ',' << num(r.sampled_z) << '\n';
    }
}

void write_table_csv(std::ostream &os, Experiment e, const ExperimentConfig &cfg,
                     const std::vector<SummaryRow> &rows) {
    write_header(os, to_string(e), cfg);
    os << "round,mean,std_error,active_count,shots,exact_value\n";
    for (const auto &r : rows) {
        os << r.round << ',' << num(r.mean) << ',' << num(r.std_error) << ','
           << r.active_count << ',' << r.shots << ',' << num(r.exact_cond_expect)
           << '\n';
    }
}

void write_distill_csv(std::ostream &os, const ExperimentConfig &cfg,
                       const std::vector<TwirlRecord> &records) {
    write_header(os, "distill", cfg);
    os << "round,e0,theta,active_prob,cond_expect\n";
    for (const auto &r : records) {
        os << r.round << ',' << num(r.e0j) << ',' << num(r.theta_j) << ','
           << num(r.active_prob) << ',' << num(r.cond_expect) << '\n';
    }
}

} // namespace vacdist
