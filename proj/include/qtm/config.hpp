#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qtm/machine.hpp"

namespace qtm {

enum class ModelKind { dots_fermionic, qubits_bosonic };
enum class TaskKind { steady, cycle, trajectory, sweep };

struct SolverBlock {
    double dt = 0.005;
    double t_end = 100.0;
    int n_grid = 128;
    std::uint64_t base_seed = 1;
    int n_trajectories = 2;
    int sample_every = 1;
};

struct SweepBlock {
    std::string parameter; // dotted path into the config document
    double from = 0.0;
    double to = 0.0;
    int points = 2;
};

// One fully described job. The system block is either static parameters or a
// drive protocol, never both; the model fixes the bath statistics and
// coupling density (dots_fermionic: flat fermionic, qubits_bosonic: ohmic
// bosonic).
struct RunConfig {
    TaskKind task = TaskKind::steady;
    ModelKind model = ModelKind::dots_fermionic;
    Mode mode = Mode::diagonal;
    BathSpec bath_L;
    BathSpec bath_R;
    bool has_drive = false;
    SystemParams system{};
    DriveProtocol drive{};
    double gamma_m = 0.0;
    std::optional<std::vector<double>> initial_state; // trajectory task
    SolverBlock solver;
    std::optional<SweepBlock> sweep;
    std::string output = "out.csv";

    Machine machine() const;
    // Cross-field invariants; throws config_error with the offending field.
    void validate() const;
};

// Strict parse: unknown keys anywhere throw config_error naming the key.
RunConfig parse_config(const nlohmann::json& doc);
nlohmann::json to_json(const RunConfig& cfg);

// Reads and parses a JSON file; I/O or syntax problems become config_error.
nlohmann::json load_config_file(const std::string& path);

const std::vector<std::string>& preset_names();
// Built-in figure configurations, embedded at build time from presets/.
nlohmann::json preset_config(const std::string& name);

struct CliOverrides {
    std::optional<std::uint64_t> seed; // solver.base_seed
    std::optional<std::string> out;    // output
    std::optional<int> grid;           // solver.n_grid
};

// Executes a config document end to end: computes the task, writes the CSV
// (17-significant-digit doubles, comma separator, header row) and prints one
// summary line on stdout. Returns the path written. Deterministic for a
// fixed document, including across thread counts.
std::string run_config(nlohmann::json doc, const CliOverrides& ov = {});

} // namespace qtm
