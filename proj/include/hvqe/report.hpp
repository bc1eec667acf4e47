// Output files for a run: the per-iteration trace CSV, the machine-readable
// summary JSON, a self-contained convergence SVG, the optimizer-comparison
// CSV, and the bundled reference convergence tables.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hvqe/experiment.hpp"

namespace hvqe {

// Header "iteration,energy_hartree"; the iteration column is strictly
// increasing.
std::string trace_csv(const OptimizerTrace& trace);

std::string summary_json(const ExperimentConfig& config, const VqeRun& run);
std::string preset_json(const ExperimentConfig& config, const PresetRun& preset,
                        const PresetEvaluation& eval);

// One row per method plus '#' footer lines with the reference converged
// energies. The wall-time column is the one non-deterministic output field.
std::string compare_csv(const std::vector<MethodComparison>& rows);

// Energy-versus-iteration polyline with horizontal reference lines.
std::string convergence_svg(const OptimizerTrace& trace);

void write_text_file(const std::filesystem::path& path, const std::string& content);

// Bundled reference convergence tables (a 126-step simulator run and a
// 109-step hardware run of this system), written as CSVs for plot overlays.
void write_reference_tables(const std::filesystem::path& directory);

namespace reference_tables {
extern const char* const nelder_mead_simulator;
extern const char* const cobyla_hardware;
}  // namespace reference_tables

}  // namespace hvqe
