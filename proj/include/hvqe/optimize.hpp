// Derivative-free and stochastic-gradient minimizers driving the energy
// objective: Nelder-Mead simplex, Powell direction-set with bracketed
// line minimization, and SPSA. All three are deterministic given their
// configuration and seed, record a monotone best-so-far trace, and account
// for every objective evaluation.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hvqe {

class Objective {
public:
    using Fn = std::function<double(std::span<const double>)>;

    explicit Objective(Fn fn) : fn_(std::move(fn)) {}

    // Counts every call; a non-finite value is an error.
    double operator()(std::span<const double> x);

    std::uint64_t evaluation_count() const { return count_; }

private:
    Fn fn_;
    std::uint64_t count_ = 0;
};

enum class Method { nelder_mead, powell, spsa };

struct SimplexCoefficients {
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    double initial_step = 0.1;  // per-coordinate offset of the start simplex, radians
};

struct SpsaGains {
    double a = 0.2;
    double big_a = 10.0;
    double alpha = 0.602;
    double c = 0.1;
    double gamma = 0.101;

    // Fixed +-pi/2 perturbations instead of a decaying sequence.
    static SpsaGains fixed_half_pi_shift();
};

struct OptimizerConfig {
    Method method = Method::nelder_mead;
    int max_iterations = 2000;
    double f_tolerance = 1e-10;
    double x_tolerance = 1e-10;
    std::uint64_t seed = 0;  // SPSA perturbation draws
    SimplexCoefficients simplex;
    SpsaGains spsa;
};

enum class TerminalReason { converged_f, converged_x, max_iterations };

std::string to_string(TerminalReason reason);
std::string to_string(Method method);

struct TraceRecord {
    int iteration = 0;        // strictly increasing from 1
    double best_energy = 0.0;  // non-increasing
    std::vector<double> parameters;
};

struct OptimizerTrace {
    std::vector<TraceRecord> records;
    TerminalReason terminal_reason = TerminalReason::max_iterations;
    std::uint64_t evaluations = 0;

    double best_energy() const { return records.back().best_energy; }
    const std::vector<double>& best_parameters() const { return records.back().parameters; }
};

OptimizerTrace nelder_mead(Objective& objective, std::span<const double> x0,
                           const OptimizerConfig& config);
OptimizerTrace powell(Objective& objective, std::span<const double> x0,
                      const OptimizerConfig& config);
OptimizerTrace spsa(Objective& objective, std::span<const double> x0,
                    const OptimizerConfig& config);

OptimizerTrace minimize(Objective& objective, std::span<const double> x0,
                        const OptimizerConfig& config);

}  // namespace hvqe
