#include "qtm/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "preset_data.hpp"
#include "qtm/errors.hpp"
#include "qtm/thermo.hpp"

namespace qtm {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw config_error(msg); }

void expect_object(const json& j, const std::string& where) {
    if (!j.is_object()) bad(where + " must be an object");
}

void expect_keys(const json& obj, const std::string& where,
                 std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok) bad("unknown key \"" + it.key() + "\" in " + where);
    }
}

double require_num(const json& obj, const std::string& where,
                   const char* key) {
    if (!obj.contains(key)) bad(where + " is missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number()) bad(where + "." + key + " must be a number");
    return v.get<double>();
}

double optional_num(const json& obj, const std::string& where, const char* key,
                    double def) {
    if (!obj.contains(key)) return def;
    const json& v = obj.at(key);
    if (!v.is_number()) bad(where + "." + key + " must be a number");
    return v.get<double>();
}

int optional_int(const json& obj, const std::string& where, const char* key,
                 int def) {
    if (!obj.contains(key)) return def;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) bad(where + "." + key + " must be an integer");
    return v.get<int>();
}

std::string require_str(const json& obj, const std::string& where,
                        const char* key) {
    if (!obj.contains(key)) bad(where + " is missing \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_string()) bad(where + "." + key + " must be a string");
    return v.get<std::string>();
}

TaskKind parse_task(const std::string& s) {
    if (s == "steady") return TaskKind::steady;
    if (s == "cycle") return TaskKind::cycle;
    if (s == "trajectory") return TaskKind::trajectory;
    if (s == "sweep") return TaskKind::sweep;
    bad("task must be one of steady, cycle, trajectory, sweep (got \"" + s +
        "\")");
}

const char* task_name(TaskKind t) {
    switch (t) {
        case TaskKind::steady: return "steady";
        case TaskKind::cycle: return "cycle";
        case TaskKind::trajectory: return "trajectory";
        case TaskKind::sweep: return "sweep";
    }
    return "?";
}

ModelKind parse_model(const std::string& s) {
    if (s == "dots_fermionic") return ModelKind::dots_fermionic;
    if (s == "qubits_bosonic") return ModelKind::qubits_bosonic;
    bad("model must be dots_fermionic or qubits_bosonic (got \"" + s + "\")");
}

const char* model_name(ModelKind m) {
    return m == ModelKind::dots_fermionic ? "dots_fermionic" : "qubits_bosonic";
}

Mode parse_mode(const std::string& s) {
    if (s == "diagonal") return Mode::diagonal;
    if (s == "coherent") return Mode::coherent;
    bad("mode must be diagonal or coherent (got \"" + s + "\")");
}

const char* mode_name(Mode m) {
    return m == Mode::diagonal ? "diagonal" : "coherent";
}

Nonlinearity parse_nonlinearity(const std::string& s,
                                const std::string& where) {
    if (s == "linear") return Nonlinearity::linear;
    if (s == "quadratic") return Nonlinearity::quadratic;
    bad(where + ".nonlinearity must be linear or quadratic (got \"" + s +
        "\")");
}

BathSpec parse_bath(const json& j, Side side, ModelKind model,
                    const std::string& where) {
    expect_object(j, where);
    expect_keys(j, where, {"temperature", "strength", "cutoff", "nonlinearity"});
    BathSpec b;
    b.side = side;
    if (model == ModelKind::dots_fermionic) {
        b.statistics = Statistics::fermionic;
        b.coupling_kind = CouplingKind::flat;
        if (j.contains("cutoff"))
            bad(where + ".cutoff applies to the qubits_bosonic model only");
    } else {
        b.statistics = Statistics::bosonic;
        b.coupling_kind = CouplingKind::ohmic;
        b.cutoff = require_num(j, where, "cutoff");
    }
    b.temperature = require_num(j, where, "temperature");
    b.strength = require_num(j, where, "strength");
    if (j.contains("nonlinearity"))
        b.nonlinearity = parse_nonlinearity(
            require_str(j, where, "nonlinearity"), where);
    return b;
}

HarmonicDrive parse_harmonic(const json& j, const std::string& where) {
    expect_object(j, where);
    expect_keys(j, where, {"offset", "amplitude", "phase"});
    HarmonicDrive h;
    h.offset = require_num(j, where, "offset");
    h.amplitude = require_num(j, where, "amplitude");
    h.phase = optional_num(j, where, "phase", 0.0);
    return h;
}

} // namespace

RunConfig parse_config(const json& doc) {
    expect_object(doc, "config");
    expect_keys(doc, "config",
                {"task", "model", "mode", "baths", "system", "measurement",
                 "initial_state", "solver", "sweep", "output"});

    RunConfig cfg;
    cfg.task = parse_task(require_str(doc, "config", "task"));
    cfg.model = parse_model(require_str(doc, "config", "model"));
    cfg.mode = parse_mode(require_str(doc, "config", "mode"));

    if (!doc.contains("baths")) bad("config is missing \"baths\"");
    const json& baths = doc.at("baths");
    expect_object(baths, "baths");
    expect_keys(baths, "baths", {"L", "R"});
    if (!baths.contains("L") || !baths.contains("R"))
        bad("baths needs both \"L\" and \"R\" blocks");
    cfg.bath_L = parse_bath(baths.at("L"), Side::L, cfg.model, "baths.L");
    cfg.bath_R = parse_bath(baths.at("R"), Side::R, cfg.model, "baths.R");

    if (!doc.contains("system")) bad("config is missing \"system\"");
    const json& sys = doc.at("system");
    expect_object(sys, "system");
    if (sys.contains("drive")) {
        expect_keys(sys, "system", {"drive"}); // static keys are not allowed here
        const json& d = sys.at("drive");
        expect_object(d, "system.drive");
        expect_keys(d, "system.drive", {"e_L", "e_R", "coupling", "omega"});
        if (!d.contains("e_L") || !d.contains("e_R"))
            bad("system.drive needs \"e_L\" and \"e_R\" blocks");
        cfg.drive.e_L = parse_harmonic(d.at("e_L"), "system.drive.e_L");
        cfg.drive.e_R = parse_harmonic(d.at("e_R"), "system.drive.e_R");
        cfg.drive.coupling = require_num(d, "system.drive", "coupling");
        cfg.drive.omega = require_num(d, "system.drive", "omega");
        cfg.has_drive = true;
    } else {
        expect_keys(sys, "system", {"e_L", "e_R", "coupling"});
        cfg.system.e_L = require_num(sys, "system", "e_L");
        cfg.system.e_R = require_num(sys, "system", "e_R");
        cfg.system.coupling = require_num(sys, "system", "coupling");
    }

    if (!doc.contains("measurement")) bad("config is missing \"measurement\"");
    const json& meas = doc.at("measurement");
    expect_object(meas, "measurement");
    expect_keys(meas, "measurement", {"gamma_m"});
    cfg.gamma_m = require_num(meas, "measurement", "gamma_m");

    if (doc.contains("initial_state")) {
        const json& init = doc.at("initial_state");
        if (!init.is_array())
            bad("initial_state must be an array of 3 or 5 numbers");
        std::vector<double> v;
        for (const json& x : init) {
            if (!x.is_number()) bad("initial_state entries must be numbers");
            v.push_back(x.get<double>());
        }
        cfg.initial_state = std::move(v);
    }

    if (doc.contains("solver")) {
        const json& s = doc.at("solver");
        expect_object(s, "solver");
        expect_keys(s, "solver",
                    {"dt", "t_end", "n_grid", "base_seed", "n_trajectories",
                     "sample_every"});
        cfg.solver.dt = optional_num(s, "solver", "dt", cfg.solver.dt);
        cfg.solver.t_end = optional_num(s, "solver", "t_end", cfg.solver.t_end);
        cfg.solver.n_grid = optional_int(s, "solver", "n_grid", cfg.solver.n_grid);
        if (s.contains("base_seed")) {
            const json& v = s.at("base_seed");
            const bool ok = v.is_number_unsigned() ||
                            (v.is_number_integer() && v.get<long long>() >= 0);
            if (!ok) bad("solver.base_seed must be a nonnegative integer");
            cfg.solver.base_seed = v.get<std::uint64_t>();
        }
        cfg.solver.n_trajectories =
            optional_int(s, "solver", "n_trajectories", cfg.solver.n_trajectories);
        cfg.solver.sample_every =
            optional_int(s, "solver", "sample_every", cfg.solver.sample_every);
    }

    if (doc.contains("sweep")) {
        const json& s = doc.at("sweep");
        expect_object(s, "sweep");
        expect_keys(s, "sweep", {"parameter", "from", "to", "points"});
        SweepBlock sw;
        sw.parameter = require_str(s, "sweep", "parameter");
        sw.from = require_num(s, "sweep", "from");
        sw.to = require_num(s, "sweep", "to");
        if (!s.contains("points")) bad("sweep is missing \"points\"");
        sw.points = optional_int(s, "sweep", "points", 0);
        cfg.sweep = sw;
    }

    if (doc.contains("output")) {
        const json& o = doc.at("output");
        if (!o.is_string()) bad("output must be a string path");
        cfg.output = o.get<std::string>();
    }
    return cfg;
}

void RunConfig::validate() const {
    try {
        bath_L.validate();
    } catch (const std::exception& e) {
        bad(std::string("baths.L: ") + e.what());
    }
    try {
        bath_R.validate();
    } catch (const std::exception& e) {
        bad(std::string("baths.R: ") + e.what());
    }
    if (bath_L.nonlinearity == Nonlinearity::quadratic)
        bad("baths.L: the quadratic contact is only supported on bath R");
    if (gamma_m < 0.0) bad("measurement.gamma_m must be >= 0");
    if (solver.dt <= 0.0) bad("solver.dt must be > 0");
    if (solver.t_end <= 0.0) bad("solver.t_end must be > 0");
    if (solver.n_grid < 16) bad("solver.n_grid must be >= 16");
    if (solver.sample_every < 1) bad("solver.sample_every must be >= 1");

    if (has_drive) {
        if (drive.omega <= 0.0) bad("system.drive.omega must be > 0");
        if (drive.coupling < 0.0) bad("system.drive.coupling must be >= 0");
    } else {
        if (system.coupling < 0.0) bad("system.coupling must be >= 0");
    }

    switch (task) {
        case TaskKind::steady:
            if (has_drive) bad("task \"steady\" needs a static system block");
            break;
        case TaskKind::cycle:
            if (!has_drive) bad("task \"cycle\" needs a system.drive block");
            break;
        case TaskKind::trajectory: {
            if (has_drive)
                bad("task \"trajectory\" needs a static system block");
            if (solver.n_trajectories < 1)
                bad("task \"trajectory\" needs solver.n_trajectories >= 1");
            if (!initial_state)
                bad("task \"trajectory\" needs an initial_state");
            break;
        }
        case TaskKind::sweep:
            if (!sweep) bad("task \"sweep\" needs a sweep block");
            break;
    }

    if (initial_state) {
        const std::size_t n = initial_state->size();
        const std::size_t dim = static_cast<std::size_t>(state_dim(mode));
        if (n != 3 && n != dim)
            bad("initial_state must have 3 entries (populations) or " +
                std::to_string(dim) + " for this mode");
        const std::vector<double>& v = *initial_state;
        const double tr = v[0] + v[1] + v[2];
        if (std::abs(tr - 1.0) > 1e-9)
            bad("initial_state populations must sum to 1");
        for (int i = 0; i < 3; ++i)
            if (v[i] < 0.0 || v[i] > 1.0)
                bad("initial_state populations must lie in [0, 1]");
    }

    if (sweep) {
        if (sweep->parameter.empty()) bad("sweep.parameter must not be empty");
        if (sweep->points < 1) bad("sweep.points must be >= 1");
        if (!std::isfinite(sweep->from) || !std::isfinite(sweep->to))
            bad("sweep range must be finite");
        if (sweep->points > 1 && sweep->from == sweep->to)
            bad("sweep range is empty (from == to with points > 1)");
    }
}

Machine RunConfig::machine() const {
    Machine m;
    m.mode = mode;
    m.bath_L = bath_L;
    m.bath_R = bath_R;
    m.gamma_m = gamma_m;
    return m;
}

json to_json(const RunConfig& cfg) {
    json j;
    j["task"] = task_name(cfg.task);
    j["model"] = model_name(cfg.model);
    j["mode"] = mode_name(cfg.mode);

    auto bath_json = [&](const BathSpec& b) {
        json x;
        x["temperature"] = b.temperature;
        x["strength"] = b.strength;
        if (b.coupling_kind == CouplingKind::ohmic) x["cutoff"] = b.cutoff;
        x["nonlinearity"] =
            b.nonlinearity == Nonlinearity::quadratic ? "quadratic" : "linear";
        return x;
    };
    j["baths"]["L"] = bath_json(cfg.bath_L);
    j["baths"]["R"] = bath_json(cfg.bath_R);

    if (cfg.has_drive) {
        auto harm = [](const HarmonicDrive& h) {
            json x;
            x["offset"] = h.offset;
            x["amplitude"] = h.amplitude;
            x["phase"] = h.phase;
            return x;
        };
        json d;
        d["e_L"] = harm(cfg.drive.e_L);
        d["e_R"] = harm(cfg.drive.e_R);
        d["coupling"] = cfg.drive.coupling;
        d["omega"] = cfg.drive.omega;
        j["system"]["drive"] = d;
    } else {
        j["system"]["e_L"] = cfg.system.e_L;
        j["system"]["e_R"] = cfg.system.e_R;
        j["system"]["coupling"] = cfg.system.coupling;
    }

    j["measurement"]["gamma_m"] = cfg.gamma_m;
    if (cfg.initial_state) j["initial_state"] = *cfg.initial_state;

    j["solver"]["dt"] = cfg.solver.dt;
    j["solver"]["t_end"] = cfg.solver.t_end;
    j["solver"]["n_grid"] = cfg.solver.n_grid;
    j["solver"]["base_seed"] = cfg.solver.base_seed;
    j["solver"]["n_trajectories"] = cfg.solver.n_trajectories;
    j["solver"]["sample_every"] = cfg.solver.sample_every;

    if (cfg.sweep) {
        j["sweep"]["parameter"] = cfg.sweep->parameter;
        j["sweep"]["from"] = cfg.sweep->from;
        j["sweep"]["to"] = cfg.sweep->to;
        j["sweep"]["points"] = cfg.sweep->points;
    }
    j["output"] = cfg.output;
    return j;
}

json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        bad("config file " + path + " is not valid JSON: " + e.what());
    }
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& e : detail::preset_table) v.push_back(e.name);
        return v;
    }();
    return names;
}

json preset_config(const std::string& name) {
    for (const auto& e : detail::preset_table)
        if (name == e.name) return json::parse(e.text);
    std::string valid;
    for (const auto& e : detail::preset_table) {
        if (!valid.empty()) valid += ", ";
        valid += e.name;
    }
    bad("unknown preset \"" + name + "\"; valid presets: " + valid);
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double opt_val(const std::optional<double>& v) {
    return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

// Dotted-path assignment into the document; every component must already
// exist so sweeps cannot silently invent fields.
void set_path(json& doc, const std::string& dotted, double value) {
    json* cur = &doc;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = dotted.find('.', start);
        const std::string part = dotted.substr(
            start, dot == std::string::npos ? std::string::npos : dot - start);
        if (part.empty())
            bad("sweep parameter \"" + dotted + "\" has an empty component");
        if (!cur->is_object() || !cur->contains(part))
            bad("sweep parameter does not name an existing config field: \"" +
                dotted + "\" (no \"" + part + "\")");
        if (dot == std::string::npos) {
            json& leaf = cur->at(part);
            if (!leaf.is_number())
                bad("sweep parameter \"" + dotted +
                    "\" does not point at a numeric field");
            leaf = value;
            return;
        }
        cur = &cur->at(part);
        start = dot + 1;
    }
}

// Characteristic bath-induced level width used by the validity flag:
// the flat density itself, or strength * temperature for the ohmic one.
double width_scale(const BathSpec& b) {
    return b.coupling_kind == CouplingKind::flat ? b.strength
                                                 : b.strength * b.temperature;
}

// The rate description in the coupled eigenbasis needs the inter-site
// coupling and the level splitting to exceed the bath-induced widths; the
// flag marks rows produced outside that window.
bool regime_violated(const RunConfig& cfg) {
    const double w =
        std::max(width_scale(cfg.bath_L), width_scale(cfg.bath_R));
    auto point_ok = [&](const SystemParams& p) {
        const EigenBasis e = diagonalize(p);
        return p.coupling > w && e.h > w;
    };
    if (!cfg.has_drive) return !point_ok(cfg.system);
    const double period = cfg.drive.period();
    for (int j = 0; j < cfg.solver.n_grid; ++j) {
        const DriveSample s = drive_at(cfg.drive, period * j / cfg.solver.n_grid);
        if (!point_ok(s.params)) return true;
    }
    return false;
}

const std::vector<std::string> kStaticCols = {
    "J_L", "J_R", "J_M", "rho00", "rho_pp", "rho_mm", "c_re", "c_im",
    "regime_warning"};

const std::vector<std::string> kCycleCols = {
    "J_L",   "J_R",   "J_M",    "P_D",   "J_L_i", "J_L_a",
    "J_R_i", "J_R_a", "J_M_i",  "J_M_a", "P_D_a", "W_M_a",
    "J_R_int", "kappa", "cop", "cop_inst", "regime_warning"};

std::vector<std::string> static_row(const RunConfig& cfg) {
    const Machine m = cfg.machine();
    const Machine::Built b = m.build(cfg.system);
    const StateVector rho = steady_state(b.total);
    const double j_L = energy_flow(b.gen_L, b.eigen, rho);
    const double j_R = energy_flow(b.gen_R, b.eigen, rho);
    const double j_M = energy_flow(b.gen_meas, b.eigen, rho);
    const bool coh = cfg.mode == Mode::coherent;
    return {fmt(j_L),
            fmt(j_R),
            fmt(j_M),
            fmt(rho[0]),
            fmt(rho[1]),
            fmt(rho[2]),
            fmt(coh ? rho[3] : 0.0),
            fmt(coh ? rho[4] : 0.0),
            fmt(regime_violated(cfg) ? 1.0 : 0.0)};
}

std::vector<std::string> cycle_row(const RunConfig& cfg) {
    const Machine m = cfg.machine();
    const CycleAnalysis a = analyze_cycle(m, cfg.drive, cfg.solver.n_grid);
    const CycleSummary& c = a.cycle;
    return {fmt(c.j_L()),  fmt(c.j_R()),  fmt(c.j_M()),  fmt(c.p_D),
            fmt(c.j_L_i),  fmt(c.j_L_a),  fmt(c.j_R_i),  fmt(c.j_R_a),
            fmt(c.j_M_i),  fmt(c.j_M_a),  fmt(c.p_D_a),  fmt(c.w_M_a),
            fmt(a.j_R_int), fmt(opt_val(a.kappa)), fmt(opt_val(a.cop_total)),
            fmt(opt_val(a.cop_inst)), fmt(regime_violated(cfg) ? 1.0 : 0.0)};
}

StateVector initial_vector(const RunConfig& cfg) {
    const int dim = state_dim(cfg.mode);
    StateVector s0 = StateVector::Zero(dim);
    const std::vector<double>& v = *cfg.initial_state;
    for (std::size_t i = 0; i < v.size() && i < static_cast<std::size_t>(dim);
         ++i)
        s0[static_cast<int>(i)] = v[i];
    return s0;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Table trajectory_table(const RunConfig& cfg) {
    const Machine m = cfg.machine();
    const Machine::Built b = m.build(cfg.system);
    const StateVector s0 = initial_vector(cfg);
    const bool warn = regime_violated(cfg);

    const Trajectory det =
        evolve_deterministic(b.total, s0, cfg.solver.t_end, cfg.solver.dt,
                             cfg.solver.sample_every);
    std::vector<Trajectory> trajs;
    trajs.reserve(cfg.solver.n_trajectories);
    for (int i = 0; i < cfg.solver.n_trajectories; ++i)
        trajs.push_back(evolve_stochastic(
            b.total, b.eigen, m.gamma_m, s0, cfg.solver.t_end, cfg.solver.dt,
            cfg.solver.base_seed + static_cast<std::uint64_t>(i),
            cfg.solver.sample_every));

    Table t;
    t.header = {"t", "J_R_avg"};
    for (int i = 0; i < cfg.solver.n_trajectories; ++i)
        t.header.push_back("J_R_traj_" + std::to_string(i + 1));
    t.header.push_back("regime_warning");

    for (std::size_t k = 0; k < det.times.size(); ++k) {
        std::vector<std::string> row;
        row.push_back(fmt(det.times[k]));
        row.push_back(fmt(energy_flow(b.gen_R, b.eigen, det.states[k])));
        for (const Trajectory& tr : trajs)
            row.push_back(fmt(energy_flow(b.gen_R, b.eigen, tr.states[k])));
        row.push_back(fmt(warn ? 1.0 : 0.0));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table sweep_table(const json& doc, const RunConfig& base) {
    const SweepBlock& sw = *base.sweep;
    Table t;
    t.header.push_back(sw.parameter);
    const std::vector<std::string>& cols =
        base.has_drive ? kCycleCols : kStaticCols;
    t.header.insert(t.header.end(), cols.begin(), cols.end());

    for (int i = 0; i < sw.points; ++i) {
        const double v =
            sw.points == 1
                ? sw.from
                : sw.from + (sw.to - sw.from) * i / (sw.points - 1);
        json pt = doc;
        set_path(pt, sw.parameter, v);
        RunConfig cfg = parse_config(pt);
        cfg.validate();
        std::vector<std::string> row;
        row.push_back(fmt(v));
        const std::vector<std::string> body =
            cfg.has_drive ? cycle_row(cfg) : static_row(cfg);
        row.insert(row.end(), body.begin(), body.end());
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_csv(const std::string& path, const Table& t) {
    std::ofstream out(path, std::ios::binary);
    if (!out) bad("cannot open output file for writing: " + path);
    for (std::size_t i = 0; i < t.header.size(); ++i)
        out << (i ? "," : "") << t.header[i];
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << "\n";
    }
    if (!out) bad("failed while writing: " + path);
}

} // namespace

std::string run_config(json doc, const CliOverrides& ov) {
    if (ov.seed) doc["solver"]["base_seed"] = *ov.seed;
    if (ov.grid) doc["solver"]["n_grid"] = *ov.grid;
    if (ov.out) doc["output"] = *ov.out;

    RunConfig cfg = parse_config(doc);
    cfg.validate();

    Table t;
    std::string detail;
    switch (cfg.task) {
        case TaskKind::steady:
            t.header = kStaticCols;
            t.rows.push_back(static_row(cfg));
            detail = "steady";
            break;
        case TaskKind::cycle:
            t.header = kCycleCols;
            t.rows.push_back(cycle_row(cfg));
            detail = "cycle";
            break;
        case TaskKind::trajectory:
            t = trajectory_table(cfg);
            detail = "trajectory";
            break;
        case TaskKind::sweep:
            t = sweep_table(doc, cfg);
            detail = "sweep over " + cfg.sweep->parameter;
            break;
    }

    write_csv(cfg.output, t);
    std::cout << "wrote " << cfg.output << " (" << detail << ", "
              << t.rows.size() << (t.rows.size() == 1 ? " row" : " rows")
              << ")\n";
    return cfg.output;
}

} // namespace qtm
