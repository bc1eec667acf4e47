#include "hvqe/experiment.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "hvqe/rng.hpp"

namespace hvqe {

namespace {

constexpr double kPi = std::numbers::pi;

int default_max_iterations(Method method) {
    switch (method) {
        case Method::nelder_mead: return 2000;
        case Method::powell: return 60;
        case Method::spsa: return 500;
    }
    return 1000;
}

OptimizerConfig optimizer_config_for(const ExperimentConfig& cfg, std::uint64_t run_seed) {
    OptimizerConfig oc;
    oc.method = cfg.optimizer;
    oc.max_iterations =
        cfg.max_iterations > 0 ? cfg.max_iterations : default_max_iterations(cfg.optimizer);
    oc.f_tolerance = cfg.f_tolerance;
    oc.x_tolerance = cfg.x_tolerance;
    oc.seed = derive_seed(run_seed, 0xa11ce);
    if (cfg.spsa_fixed_shift) oc.spsa = SpsaGains::fixed_half_pi_shift();
    oc.spsa.a = cfg.spsa_a;
    return oc;
}

// One energy evaluation per objective call. Shot mode draws a fresh seed per
// evaluation from (base seed, evaluation counter), so a run is reproducible
// while evaluations stay independent.
Objective make_objective(const PauliSum& h, const AnsatzConfig& ansatz, std::uint64_t shots,
                         std::uint64_t base_seed) {
    if (shots == 0) {
        return Objective([&h, ansatz](std::span<const double> angles) {
            return energy_exact(h, prepare_ansatz(ansatz, angles)).energy;
        });
    }
    auto counter = std::make_shared<std::uint64_t>(0);
    return Objective([&h, ansatz, shots, base_seed, counter](std::span<const double> angles) {
        const std::uint64_t eval_seed = derive_seed(base_seed, (*counter)++);
        return sampled_energy(h, ansatz, angles, shots, eval_seed).energy;
    });
}

RestartOutcome run_single_restart(const ExperimentConfig& cfg, const PauliSum& h,
                                  int restart_index) {
    const AnsatzConfig ansatz{2, cfg.depth};
    const std::uint64_t run_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(restart_index));

    Rng start_rng(derive_seed(run_seed, 0x0));
    std::vector<double> x0(static_cast<std::size_t>(ansatz.parameter_count()));
    for (double& a : x0) a = start_rng.uniform(0.0, 2.0 * kPi);

    Objective objective = make_objective(h, ansatz, cfg.shots, derive_seed(run_seed, 0x1));
    OptimizerTrace trace = minimize(objective, x0, optimizer_config_for(cfg, run_seed));
    return {restart_index, std::move(trace)};
}

}  // namespace

PauliSum hamiltonian_for(const ExperimentConfig& config) {
    return build_hamiltonian(
        {config.encoding, IntegralSet::from_convention(config.signs), config.two_body_sign});
}

VqeRun run_vqe(const ExperimentConfig& config) {
    if (config.restarts < 1) throw std::invalid_argument("restarts must be at least 1");
    if (config.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    if (config.depth < 1) throw std::invalid_argument("depth must be at least 1");

    const PauliSum h = hamiltonian_for(config);
    VqeRun run;
    run.exact_minimum = min_eigenvalue(h);
    run.restarts.resize(static_cast<std::size_t>(config.restarts));

    const int workers = std::min(config.jobs, config.restarts);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (int r = w; r < config.restarts; r += workers) {
                try {
                    run.restarts[static_cast<std::size_t>(r)] = run_single_restart(config, h, r);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    run.best_restart = 0;
    for (int r = 1; r < config.restarts; ++r)
        if (run.restarts[static_cast<std::size_t>(r)].trace.best_energy() <
            run.restarts[static_cast<std::size_t>(run.best_restart)].trace.best_energy())
            run.best_restart = r;

    const OptimizerTrace& best = run.best_trace();
    run.final_energy = best.best_energy();
    run.final_angles = canonicalize_angles(best.best_parameters());
    run.terminal_reason = best.terminal_reason;
    run.total_evaluations = 0;
    for (const auto& r : run.restarts) run.total_evaluations += r.trace.evaluations;
    run.gap = std::abs(run.final_energy - run.exact_minimum);
    return run;
}

const std::vector<PresetRun>& presets() {
    static const std::vector<PresetRun> table = {
        {"zeros", 0.0, 0.0, {}, {}},
        {"half-pi-then-zero", kPi / 2.0, 0.0, {{"ibmqx2", -0.381156}}, {}},
        {"pi-then-pi", kPi, kPi, {{"ibmqx2", -0.396531}}, {}},
        {"pi-then-zero", kPi, 0.0, {{"ibmqx2", -0.507891}, {"ibmqx4", -0.450297}}, 0.0870538},
    };
    return table;
}

const PresetRun* find_preset(std::string_view name) {
    for (const auto& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

PresetEvaluation run_preset(const PresetRun& preset, const ExperimentConfig& config) {
    if (config.depth != 1)
        throw std::invalid_argument("presets describe the depth-1 circuit; use --depth 1");
    const AnsatzConfig ansatz{2, 1};

    PresetEvaluation eval;
    eval.name = preset.name;
    eval.angles.assign(6, preset.initial_rotation);
    eval.angles.insert(eval.angles.end(), 6, preset.final_rotation);

    const PauliSum h = hamiltonian_for(config);
    const StateVector state = prepare_ansatz(ansatz, eval.angles);
    EnergyEstimate exact = energy_exact(h, state);
    exact.variance = variance(h, state);
    eval.exact_energy = exact.energy;
    eval.exact_variance = *exact.variance;
    eval.exact_minimum = min_eigenvalue(h);
    eval.shots = config.shots;
    eval.sampled_energy =
        config.shots == 0
            ? eval.exact_energy
            : energy_from_counts(h, sample(state, config.shots, derive_seed(config.seed, 0x9)))
                  .energy;
    return eval;
}

std::vector<MethodComparison> compare_optimizers(const ExperimentConfig& config,
                                                 const std::vector<Method>& methods) {
    if (methods.size() < 2)
        throw std::invalid_argument("optimizer comparison needs at least two methods");
    std::vector<MethodComparison> rows;
    for (const Method m : methods) {
        ExperimentConfig cfg = config;
        cfg.optimizer = m;
        const auto start = std::chrono::steady_clock::now();
        const VqeRun run = run_vqe(cfg);
        const auto stop = std::chrono::steady_clock::now();
        rows.push_back({m, run.final_energy, run.total_evaluations,
                        std::chrono::duration<double>(stop - start).count()});
    }
    return rows;
}

ConvergedAnnotations converged_annotations() { return {}; }

Encoding parse_encoding(std::string_view name) {
    if (name == "jw" || name == "jordan-wigner") return Encoding::jordan_wigner;
    if (name == "bk" || name == "bravyi-kitaev") return Encoding::bravyi_kitaev;
    if (name == "parity") return Encoding::parity;
    throw std::invalid_argument("unknown encoding (choose jw, bk, or parity)");
}

SignConvention parse_signs(std::string_view name) {
    if (name == "paper") return SignConvention::paper_literal;
    if (name == "physical") return SignConvention::physical;
    throw std::invalid_argument("unknown sign convention (choose paper or physical)");
}

TwoBodySign parse_two_body_sign(std::string_view name) {
    if (name == "eq16") return TwoBodySign::eq16_plus;
    if (name == "eq18") return TwoBodySign::eq18_minus;
    throw std::invalid_argument("unknown two-body sign (choose eq16 or eq18)");
}

Method parse_method(std::string_view name) {
    if (name == "nelder-mead") return Method::nelder_mead;
    if (name == "powell") return Method::powell;
    if (name == "spsa") return Method::spsa;
    if (name == "cobyla")
        throw std::invalid_argument(
            "cobyla is not implemented: the objective is unconstrained, so its "
            "constraint machinery adds nothing here; supported optimizers are "
            "nelder-mead, powell, spsa");
    throw std::invalid_argument(
        "unknown optimizer (supported: nelder-mead, powell, spsa)");
}

std::string to_string(Encoding encoding) {
    switch (encoding) {
        case Encoding::jordan_wigner: return "jw";
        case Encoding::bravyi_kitaev: return "bk";
        case Encoding::parity: return "parity";
    }
    return "unknown";
}

std::string to_string(SignConvention signs) {
    return signs == SignConvention::paper_literal ? "paper" : "physical";
}

std::string to_string(TwoBodySign sign) {
    return sign == TwoBodySign::eq16_plus ? "eq16" : "eq18";
}

}  // namespace hvqe
