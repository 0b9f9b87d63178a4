#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qtm/config.hpp"
#include "qtm/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"simulator for measured, slowly driven quantum thermal machines"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> grid;
    std::string config_path, preset_name;
    bool emit = false;
    std::optional<std::string> sw_param;
    std::optional<double> sw_from, sw_to;
    std::optional<int> sw_points;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--seed", seed, "override solver.base_seed");
        c->add_option("--out", out, "override the output CSV path");
        c->add_option("--grid", grid, "override solver.n_grid");
    };

    CLI::App* cmd_run = app.add_subcommand("run", "execute a JSON config file");
    cmd_run->add_option("config", config_path, "path to the config")->required();
    add_common(cmd_run);

    CLI::App* cmd_preset =
        app.add_subcommand("preset", "run or print a built-in figure preset");
    cmd_preset->add_option("name", preset_name, "preset name")->required();
    cmd_preset->add_flag("--emit-config", emit,
                         "print the preset's config instead of running it");
    add_common(cmd_preset);

    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "run a 1-D sweep from a config file");
    cmd_sweep->add_option("config", config_path, "path to the config")->required();
    cmd_sweep->add_option("--param", sw_param, "dotted path of the swept field");
    cmd_sweep->add_option("--from", sw_from, "sweep start value");
    cmd_sweep->add_option("--to", sw_to, "sweep end value");
    cmd_sweep->add_option("--points", sw_points, "number of sweep points");
    add_common(cmd_sweep);

    CLI::App* cmd_traj = app.add_subcommand(
        "trajectory", "run seeded stochastic trajectories from a config file");
    cmd_traj->add_option("config", config_path, "path to the config")->required();
    add_common(cmd_traj);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        nlohmann::json doc;
        if (cmd_preset->parsed()) {
            doc = qtm::preset_config(preset_name);
            if (emit) {
                std::cout << doc.dump(2) << "\n";
                return 0;
            }
        } else {
            doc = qtm::load_config_file(config_path);
        }

        if (cmd_sweep->parsed()) {
            doc["task"] = "sweep";
            if (sw_param) doc["sweep"]["parameter"] = *sw_param;
            if (sw_from) doc["sweep"]["from"] = *sw_from;
            if (sw_to) doc["sweep"]["to"] = *sw_to;
            if (sw_points) doc["sweep"]["points"] = *sw_points;
        }
        if (cmd_traj->parsed()) doc["task"] = "trajectory";

        qtm::CliOverrides ov;
        ov.seed = seed;
        ov.out = out;
        ov.grid = grid;
        qtm::run_config(std::move(doc), ov);
        return 0;
    } catch (const qtm::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const qtm::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return 3;
    }
}
