#include "hvqe/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace hvqe {

std::string trace_csv(const OptimizerTrace& trace) {
    std::string out = "iteration,energy_hartree\n";
    for (const auto& rec : trace.records) {
        out += std::to_string(rec.iteration);
        out += ',';
        out += format_double(rec.best_energy);
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::json config_json(const ExperimentConfig& config) {
    return {
        {"encoding", to_string(config.encoding)},
        {"signs", to_string(config.signs)},
        {"two_body_sign", to_string(config.two_body_sign)},
        {"optimizer", to_string(config.optimizer)},
        {"shots", config.shots},
        {"depth", config.depth},
        {"seed", config.seed},
        {"restarts", config.restarts},
        {"jobs", config.jobs},
        {"max_iterations", config.max_iterations},
        {"f_tolerance", config.f_tolerance},
        {"x_tolerance", config.x_tolerance},
        {"spsa_fixed_shift", config.spsa_fixed_shift},
    };
}

}  // namespace

std::string summary_json(const ExperimentConfig& config, const VqeRun& run) {
    nlohmann::json restarts = nlohmann::json::array();
    for (const auto& r : run.restarts) {
        restarts.push_back({
            {"restart", r.restart_index},
            {"final_energy_hartree", r.trace.best_energy()},
            {"terminal_reason", to_string(r.trace.terminal_reason)},
            {"evaluations", r.trace.evaluations},
            {"iterations", r.trace.records.back().iteration},
        });
    }
    const ReferenceEnergies ref = reference_energies();
    const nlohmann::json j = {
        {"config", config_json(config)},
        {"final_energy_hartree", run.final_energy},
        {"exact_minimum_hartree", run.exact_minimum},
        {"gap_hartree", run.gap},
        {"terminal_reason", to_string(run.terminal_reason)},
        {"final_angles_rad", run.final_angles},
        {"best_restart", run.best_restart},
        {"total_evaluations", run.total_evaluations},
        {"restarts", restarts},
        {"reference_energies_hartree",
         {{"chandrasekhar_uncorrelated", ref.chandrasekhar_uncorrelated},
          {"chandrasekhar_correlated", ref.chandrasekhar_correlated},
          {"theoretical_line", ref.theoretical_line},
          {"hydrogen_atom", ref.hydrogen_atom},
          {"hartree_fock_no_correlation", ref.hartree_fock_no_correlation}}},
    };
    return j.dump(2) + "\n";
}

std::string preset_json(const ExperimentConfig& config, const PresetRun& preset,
                        const PresetEvaluation& eval) {
    nlohmann::json annotations = nlohmann::json::array();
    for (const auto& [device, energy] : preset.hardware_annotations)
        annotations.push_back({{"device", device}, {"energy_hartree", energy}});
    const nlohmann::json j = {
        {"config", config_json(config)},
        {"preset", eval.name},
        {"angles_rad", eval.angles},
        {"exact_energy_hartree", eval.exact_energy},
        {"sampled_energy_hartree", eval.sampled_energy},
        {"shots", eval.shots},
        {"exact_variance_hartree2", eval.exact_variance},
        {"exact_minimum_hartree", eval.exact_minimum},
        {"hardware_annotations", annotations},
    };
    return j.dump(2) + "\n";
}

std::string compare_csv(const std::vector<MethodComparison>& rows) {
    std::string out = "method,best_energy_hartree,evaluations,wall_seconds\n";
    for (const auto& row : rows) {
        out += to_string(row.method);
        out += ',';
        out += format_double(row.best_energy);
        out += ',';
        out += std::to_string(row.evaluations);
        out += ',';
        out += format_double(row.wall_seconds);
        out += '\n';
    }
    const ConvergedAnnotations notes = converged_annotations();
    out += "# reference converged energies (annotations, not targets):\n";
    out += "# cobyla simulator " + format_double(notes.cobyla_simulator) + "\n";
    out += "# cobyla hardware " + format_double(notes.cobyla_hardware) + "\n";
    out += "# powell simulator " + format_double(notes.powell_simulator) + "\n";
    out += "# nelder-mead simulator " + format_double(notes.nelder_mead_simulator) + "\n";
    return out;
}

std::string convergence_svg(const OptimizerTrace& trace) {
    const double width = 720.0, height = 440.0;
    const double left = 70.0, right = 20.0, top = 20.0, bottom = 50.0;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    const ReferenceEnergies ref = reference_energies();
    const std::vector<std::pair<std::string, double>> lines = {
        {"theory " + format_double(ref.theoretical_line), ref.theoretical_line},
        {"H atom " + format_double(ref.hydrogen_atom), ref.hydrogen_atom},
        {"no correlation " + format_double(ref.hartree_fock_no_correlation),
         ref.hartree_fock_no_correlation},
    };

    double y_min = lines[0].second, y_max = lines[0].second;
    for (const auto& [label, v] : lines) {
        y_min = std::min(y_min, v);
        y_max = std::max(y_max, v);
    }
    for (const auto& rec : trace.records) {
        y_min = std::min(y_min, rec.best_energy);
        y_max = std::max(y_max, rec.best_energy);
    }
    const double pad = std::max(0.05, 0.08 * (y_max - y_min));
    y_min -= pad;
    y_max += pad;

    const int last_iter = trace.records.back().iteration;
    const auto x_of = [&](double iter) {
        return left + plot_w * (iter - 1.0) / std::max(1.0, last_iter - 1.0);
    };
    const auto y_of = [&](double e) { return top + plot_h * (y_max - e) / (y_max - y_min); };

    std::string svg =
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"440\" "
        "viewBox=\"0 0 720 440\">\n"
        "<rect width=\"720\" height=\"440\" fill=\"white\"/>\n";
    svg += "<line x1=\"" + format_double(left) + "\" y1=\"" + format_double(top) + "\" x2=\"" +
           format_double(left) + "\" y2=\"" + format_double(top + plot_h) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + format_double(left) + "\" y1=\"" + format_double(top + plot_h) +
           "\" x2=\"" + format_double(left + plot_w) + "\" y2=\"" + format_double(top + plot_h) +
           "\" stroke=\"black\"/>\n";

    for (const auto& [label, v] : lines) {
        const double y = y_of(v);
        svg += "<line x1=\"" + format_double(left) + "\" y1=\"" + format_double(y) + "\" x2=\"" +
               format_double(left + plot_w) + "\" y2=\"" + format_double(y) +
               "\" stroke=\"crimson\" stroke-dasharray=\"6 4\"/>\n";
        svg += "<text x=\"" + format_double(left + 6.0) + "\" y=\"" + format_double(y - 4.0) +
               "\" font-size=\"12\" fill=\"crimson\">" + label + "</text>\n";
    }

    svg += "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
    for (const auto& rec : trace.records)
        svg += format_double(x_of(rec.iteration)) + "," + format_double(y_of(rec.best_energy)) + " ";
    svg += "\"/>\n";

    svg += "<text x=\"" + format_double(left + plot_w / 2.0 - 30.0) + "\" y=\"" +
           format_double(height - 14.0) + "\" font-size=\"13\">iteration</text>\n";
    svg += "<text x=\"14\" y=\"" + format_double(top + plot_h / 2.0) +
           "\" font-size=\"13\" transform=\"rotate(-90 14 " + format_double(top + plot_h / 2.0) +
           ")\">energy (Hartree)</text>\n";
    svg += "<text x=\"" + format_double(left) + "\" y=\"" + format_double(top + plot_h + 16.0) +
           "\" font-size=\"11\">1</text>\n";
    svg += "<text x=\"" + format_double(left + plot_w - 12.0) + "\" y=\"" +
           format_double(top + plot_h + 16.0) + "\" font-size=\"11\">" +
           std::to_string(last_iter) + "</text>\n";
    svg += "<text x=\"" + format_double(left - 64.0) + "\" y=\"" + format_double(y_of(y_max - pad)) +
           "\" font-size=\"11\">" + format_double(std::round((y_max - pad) * 1e4) / 1e4) +
           "</text>\n";
    svg += "<text x=\"" + format_double(left - 64.0) + "\" y=\"" + format_double(y_of(y_min + pad)) +
           "\" font-size=\"11\">" + format_double(std::round((y_min + pad) * 1e4) / 1e4) +
           "</text>\n";
    svg += "</svg>\n";
    return svg;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_reference_tables(const std::filesystem::path& directory) {
    write_text_file(directory / "reference_nelder_mead_simulator.csv",
                    reference_tables::nelder_mead_simulator);
    write_text_file(directory / "reference_cobyla_hardware.csv",
                    reference_tables::cobyla_hardware);
}

}  // namespace hvqe
