// Command-line driver: configure encoding, sign convention, optimizer, and
// shot budget; run the VQE minimization of the hydride-ion Hamiltonian;
// evaluate fixed-angle presets; compare optimizers; dump the Hamiltonian in
// either representation.
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hvqe/experiment.hpp"
#include "hvqe/report.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

std::vector<std::string> split_csv(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void print_run(const hvqe::ExperimentConfig& cfg, const hvqe::VqeRun& run) {
    std::printf("optimizer        : %s\n", hvqe::to_string(cfg.optimizer).c_str());
    std::printf("encoding         : %s, signs %s, two-body %s\n",
                hvqe::to_string(cfg.encoding).c_str(), hvqe::to_string(cfg.signs).c_str(),
                hvqe::to_string(cfg.two_body_sign).c_str());
    if (cfg.shots == 0)
        std::printf("expectation      : exact\n");
    else
        std::printf("expectation      : sampled, %llu shots\n",
                    static_cast<unsigned long long>(cfg.shots));
    std::printf("restarts         : %d (best: #%d)\n", cfg.restarts, run.best_restart);
    std::printf("final energy     : %.12f Hartree\n", run.final_energy);
    std::printf("exact minimum    : %.12f Hartree\n", run.exact_minimum);
    std::printf("gap              : %.3e Hartree\n", run.gap);
    std::printf("terminal reason  : %s\n", hvqe::to_string(run.terminal_reason).c_str());
    std::printf("evaluations      : %llu\n", static_cast<unsigned long long>(run.total_evaluations));
}

void print_preset(const hvqe::PresetRun& preset, const hvqe::PresetEvaluation& eval) {
    std::printf("preset           : %s\n", eval.name.c_str());
    std::printf("exact energy     : %.12f Hartree\n", eval.exact_energy);
    if (eval.shots > 0)
        std::printf("sampled energy   : %.12f Hartree (%llu shots)\n", eval.sampled_energy,
                    static_cast<unsigned long long>(eval.shots));
    std::printf("exact variance   : %.12f Hartree^2\n", eval.exact_variance);
    std::printf("exact minimum    : %.12f Hartree\n", eval.exact_minimum);
    for (const auto& [device, energy] : preset.hardware_annotations)
        std::printf("note: %s hardware run reported %.6f Hartree at these angles "
                    "(annotation, not a target)\n",
                    device.c_str(), energy);
    if (preset.hardware_variance)
        std::printf("note: that run quoted Var(H) = %.7f Hartree^2 (annotation)\n",
                    *preset.hardware_variance);
}

int run(int argc, char** argv) {
    CLI::App app{"Ground-state energy of the hydride ion by VQE on a simulated "
                 "two-qubit register"};

    hvqe::ExperimentConfig cfg;
    std::string encoding = "jw", signs = "physical", two_body = "eq16", optimizer = "nelder-mead";
    std::string preset_name, compare_list, out_dir;
    bool dump_hamiltonian = false, dump_fermionic = false, list_presets = false;

    app.add_option("--encoding", encoding, "Fermion-to-qubit encoding: jw, bk, parity");
    app.add_option("--signs", signs, "Integral sign convention: paper, physical");
    app.add_option("--two-body-sign", two_body, "Two-body Z0.Z1 sign: eq16, eq18");
    app.add_option("--optimizer", optimizer, "Optimizer: nelder-mead, powell, spsa");
    app.add_option("--shots", cfg.shots, "Shots per energy evaluation; 0 = exact expectation");
    app.add_option("--depth", cfg.depth, "Entangling layers in the ansatz");
    app.add_option("--seed", cfg.seed, "Base seed for restarts, sampling, and SPSA");
    app.add_option("--restarts", cfg.restarts, "Independent optimizer restarts");
    app.add_option("--jobs", cfg.jobs, "Concurrent restart workers");
    app.add_option("--max-iterations", cfg.max_iterations,
                   "Iteration cap (0 = per-method default)");
    app.add_option("--f-tol", cfg.f_tolerance, "Energy-spread termination tolerance");
    app.add_option("--x-tol", cfg.x_tolerance, "Parameter-spread termination tolerance");
    app.add_option("--spsa-a", cfg.spsa_a, "SPSA step-size gain numerator");
    app.add_flag("--spsa-fixed-shift", cfg.spsa_fixed_shift,
                 "SPSA: fixed +-pi/2 perturbations instead of a decaying sequence");
    app.add_option("--preset", preset_name, "Evaluate a fixed-angle preset (see --list-presets)");
    app.add_option("--compare", compare_list,
                   "Comma-separated optimizers to compare (at least two)");
    app.add_flag("--dump-hamiltonian", dump_hamiltonian,
                 "Print the qubit Hamiltonian, one term per line, and exit");
    app.add_flag("--dump-fermionic", dump_fermionic,
                 "Print the second-quantized Hamiltonian and exit");
    app.add_flag("--list-presets", list_presets, "List preset names and exit");
    app.add_option("--out", out_dir, "Directory for trace CSV, summary JSON, SVG, references");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    cfg.encoding = hvqe::parse_encoding(encoding);
    cfg.signs = hvqe::parse_signs(signs);
    cfg.two_body_sign = hvqe::parse_two_body_sign(two_body);
    cfg.optimizer = hvqe::parse_method(optimizer);

    if (list_presets) {
        for (const auto& p : hvqe::presets())
            std::printf("%-20s initial %.6f rad, final %.6f rad\n", p.name.c_str(),
                        p.initial_rotation, p.final_rotation);
        return 0;
    }

    if (dump_hamiltonian) {
        std::fputs(hvqe::to_text(hvqe::hamiltonian_for(cfg)).c_str(), stdout);
        return 0;
    }
    if (dump_fermionic) {
        const auto op = hvqe::fermionic_hamiltonian(
            hvqe::IntegralSet::from_convention(cfg.signs), cfg.two_body_sign);
        std::fputs(hvqe::to_text(op).c_str(), stdout);
        return 0;
    }

    const std::optional<std::filesystem::path> out =
        out_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(out_dir);

    if (!preset_name.empty()) {
        const hvqe::PresetRun* preset = hvqe::find_preset(preset_name);
        if (!preset) {
            std::string names;
            for (const auto& p : hvqe::presets()) names += " " + p.name;
            throw std::invalid_argument("unknown preset '" + preset_name + "'; available:" + names);
        }
        const hvqe::PresetEvaluation eval = hvqe::run_preset(*preset, cfg);
        print_preset(*preset, eval);
        if (out) hvqe::write_text_file(*out / "preset_summary.json",
                                       hvqe::preset_json(cfg, *preset, eval));
        return 0;
    }

    if (!compare_list.empty()) {
        std::vector<hvqe::Method> methods;
        for (const auto& name : split_csv(compare_list))
            methods.push_back(hvqe::parse_method(name));
        const auto rows = hvqe::compare_optimizers(cfg, methods);
        const std::string csv = hvqe::compare_csv(rows);
        std::fputs(csv.c_str(), stdout);
        if (out) hvqe::write_text_file(*out / "compare.csv", csv);
        return 0;
    }

    const hvqe::VqeRun result = hvqe::run_vqe(cfg);
    print_run(cfg, result);
    if (out) {
        hvqe::write_text_file(*out / "trace.csv", hvqe::trace_csv(result.best_trace()));
        hvqe::write_text_file(*out / "summary.json", hvqe::summary_json(cfg, result));
        hvqe::write_text_file(*out / "convergence.svg", hvqe::convergence_svg(result.best_trace()));
        hvqe::write_reference_tables(*out);
        std::printf("wrote trace.csv, summary.json, convergence.svg, reference tables to %s\n",
                    out->string().c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
