// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include "pinchsec/config.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pinchsec {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value)
{
    std::vector<std::string> items;
    std::stringstream in(value);
    std::string item;
    while (std::getline(in, item, ',')) {
        item = trim(item);
        if (!item.empty())
            items.push_back(item);
    }
    return items;
}

double to_double(const std::string& v)
{
    std::size_t used = 0;
    const double x = std::stod(v, &used);
    if (used != v.size())
        throw std::invalid_argument("not a number: '" + v + "'");
    return x;
}

long long to_integer(const std::string& v)
{
    std::size_t used = 0;
    const long long x = std::stoll(v, &used);
    if (used != v.size())
        throw std::invalid_argument("not an integer: '" + v + "'");
    return x;
}

std::uint64_t to_unsigned(const std::string& v)
{
    if (!v.empty() && v[0] == '-')
        throw std::invalid_argument("not an unsigned integer: '" + v + "'");
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used != v.size())
        throw std::invalid_argument("not an unsigned integer: '" + v + "'");
    return x;
}

bool to_bool(const std::string& v)
{
    if (v == "true" || v == "1" || v == "yes" || v == "on")
        return true;
    if (v == "false" || v == "0" || v == "no" || v == "off")
        return false;
    throw std::invalid_argument("not a boolean: '" + v + "'");
}

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class T, class Fmt>
std::string join(const std::vector<T>& items, Fmt fmt)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i)
            out += ", ";
        out += fmt(items[i]);
    }
    return out;
}

template <class T, class Parse>
std::vector<T> parse_list(const std::string& value, Parse parse)
{
    std::vector<T> out;
    for (const auto& item : split_list(value))
        out.push_back(parse(item));
    return out;
}

struct Key {
    const char* name;
    std::function<void(ExperimentConfig&, const std::string&)> set;
    std::function<std::string(const ExperimentConfig&)> get;
};

#define PINCHSEC_DOUBLE(key, field)                                                   \
    Key{key, [](ExperimentConfig& c, const std::string& v) { c.field = to_double(v); }, \
        [](const ExperimentConfig& c) { return num(c.field); }}
#define PINCHSEC_INT(key, field)                                                                          \
    Key{key, [](ExperimentConfig& c, const std::string& v) { c.field = static_cast<int>(to_integer(v)); }, \
        [](const ExperimentConfig& c) { return std::to_string(c.field); }}

const std::vector<Key>& keys()
{
    static const std::vector<Key> table = {
        {"experiment", [](ExperimentConfig& c, const std::string& v) { c.experiment = parse_experiment(v); },
         [](const ExperimentConfig& c) { return std::string(to_string(c.experiment)); }},
        PINCHSEC_INT("realizations", realizations),
        {"layouts",
         [](ExperimentConfig& c, const std::string& v) {
             c.layouts = parse_list<Layout>(v, [](const std::string& s) { return parse_layout(s); });
         },
         [](const ExperimentConfig& c) { return join(c.layouts, [](Layout l) { return std::string(to_string(l)); }); }},
        {"model", [](ExperimentConfig& c, const std::string& v) { c.model = parse_model(v); },
         [](const ExperimentConfig& c) { return std::string(to_string(c.model)); }},
        {"zetas", [](ExperimentConfig& c, const std::string& v) { c.zetas = parse_list<double>(v, to_double); },
         [](const ExperimentConfig& c) { return join(c.zetas, num); }},
        {"optimizers",
         [](ExperimentConfig& c, const std::string& v) {
             c.optimizers = parse_list<Optimizer>(v, [](const std::string& s) { return parse_optimizer(s); });
         },
         [](const ExperimentConfig& c) {
             return join(c.optimizers, [](Optimizer o) { return std::string(to_string(o)); });
         }},
        PINCHSEC_DOUBLE("es_spacing", es_spacing),
        {"objectives",
         [](ExperimentConfig& c, const std::string& v) {
             c.objectives = parse_list<Objective>(v, [](const std::string& s) { return parse_objective(s); });
         },
         [](const ExperimentConfig& c) {
             return join(c.objectives, [](Objective o) { return std::string(to_string(o)); });
         }},
        PINCHSEC_INT("pso_swarm_size", pso.swarm_size),
        PINCHSEC_DOUBLE("pso_inertia", pso.inertia),
        PINCHSEC_DOUBLE("pso_accel_personal", pso.accel_personal),
        PINCHSEC_DOUBLE("pso_accel_global", pso.accel_global),
        PINCHSEC_INT("pso_max_iters", pso.max_iters),
        PINCHSEC_INT("pso_stall_iters", pso.stall_iters),
        PINCHSEC_DOUBLE("pso_stall_tol", pso.stall_tol),
        PINCHSEC_DOUBLE("pso_init_spread", pso.init_spread),
        PINCHSEC_DOUBLE("pso_velocity_init_range", pso.velocity_init_range),
        {"pso_inject_baseline",
         [](ExperimentConfig& c, const std::string& v) { c.pso.inject_baseline = to_bool(v); },
         [](const ExperimentConfig& c) { return std::string(c.pso.inject_baseline ? "true" : "false"); }},
        {"pso_seed", [](ExperimentConfig& c, const std::string& v) { c.pso.seed = to_unsigned(v); },
         [](const ExperimentConfig& c) { return std::to_string(c.pso.seed); }},
        PINCHSEC_INT("sca_max_iters", sca.max_iters),
        PINCHSEC_DOUBLE("sca_rel_tol", sca.rel_tol),
        PINCHSEC_DOUBLE("sca_beta_floor", sca.beta_floor),
        PINCHSEC_DOUBLE("sca_an_init_fraction", sca.an_init_fraction),
        PINCHSEC_DOUBLE("sca_activation_margin", sca.activation_margin),
        PINCHSEC_DOUBLE("sca_solver_tol", sca.solver.tol),
        PINCHSEC_INT("sca_solver_max_iter", sca.solver.max_iter),
        PINCHSEC_INT("num_lus", params.num_lus),
        PINCHSEC_INT("pas_per_waveguide", params.pas_per_waveguide),
        PINCHSEC_DOUBLE("half_size", params.half_size),
        PINCHSEC_DOUBLE("height", params.height),
        PINCHSEC_DOUBLE("carrier_freq", params.carrier_freq),
        PINCHSEC_DOUBLE("refractive_index", params.refractive_index),
        {"guard_policy",
         [](ExperimentConfig& c, const std::string& v) {
             if (v == "half_wavelength")
                 c.params.guard_policy = GuardPolicy::HalfWavelength;
             else if (v == "explicit")
                 c.params.guard_policy = GuardPolicy::Explicit;
             else
                 throw std::invalid_argument("unknown guard_policy '" + v + "'");
         },
         [](const ExperimentConfig& c) {
             return std::string(c.params.guard_policy == GuardPolicy::Explicit ? "explicit" : "half_wavelength");
         }},
        PINCHSEC_DOUBLE("guard_distance", params.guard_distance),
        PINCHSEC_DOUBLE("noise_lu_dbm", params.noise_lu_dbm),
        PINCHSEC_DOUBLE("noise_eve_dbm", params.noise_eve_dbm),
        PINCHSEC_DOUBLE("pmax_dbm", params.pmax_dbm),
        PINCHSEC_DOUBLE("pc_dbm", params.pc_dbm),
        {"sweep_pmax",
         [](ExperimentConfig& c, const std::string& v) { c.sweep_pmax = parse_list<double>(v, to_double); },
         [](const ExperimentConfig& c) { return join(c.sweep_pmax, num); }},
        {"sweep_n",
         [](ExperimentConfig& c, const std::string& v) {
             c.sweep_n = parse_list<int>(v, [](const std::string& s) { return static_cast<int>(to_integer(s)); });
         },
         [](const ExperimentConfig& c) { return join(c.sweep_n, [](int n) { return std::to_string(n); }); }},
        {"sweep_zeta",
         [](ExperimentConfig& c, const std::string& v) { c.sweep_zeta = parse_list<double>(v, to_double); },
         [](const ExperimentConfig& c) { return join(c.sweep_zeta, num); }},
        {"seed_base", [](ExperimentConfig& c, const std::string& v) { c.seed_base = to_unsigned(v); },
         [](const ExperimentConfig& c) { return std::to_string(c.seed_base); }},
        {"out", [](ExperimentConfig& c, const std::string& v) { c.out = v; },
         [](const ExperimentConfig& c) { return c.out; }},
        PINCHSEC_INT("workers", workers),
        {"record_timing", [](ExperimentConfig& c, const std::string& v) { c.record_timing = to_bool(v); },
         [](const ExperimentConfig& c) { return std::string(c.record_timing ? "true" : "false"); }},
    };
    return table;
}

#undef PINCHSEC_DOUBLE
#undef PINCHSEC_INT

}  // namespace

ExperimentConfig default_config(Experiment experiment)
{
    ExperimentConfig cfg;
    cfg.experiment = experiment;
    switch (experiment) {
    case Experiment::SweepPmax:
        cfg.realizations = 100;
        cfg.optimizers = {Optimizer::FeaPSO, Optimizer::Fixed};
        break;
    case Experiment::SweepN:
    case Experiment::SweepZeta:
        cfg.realizations = 100;
        cfg.optimizers = {Optimizer::FeaPSO, Optimizer::Fixed};
        cfg.objectives = {Objective::SSR};
        break;
    case Experiment::Cdf:
        cfg.optimizers = {Optimizer::FeaPSO, Optimizer::Fixed};
        cfg.objectives = {Objective::SSR};
        break;
    case Experiment::Single:
        cfg.realizations = 1;
        break;
    default:
        break;
    }
    return cfg;
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value)
{
    if (key == "preset") {
        if (value == "paper") {
            cfg.realizations = 1000;
            cfg.pso.swarm_size = 5000;
        } else if (value == "desk") {
            cfg.realizations = 300;
            cfg.pso.swarm_size = 1000;
        } else {
            throw std::invalid_argument("unknown preset '" + value + "' (expected paper or desk)");
        }
        return;
    }
    for (const Key& k : keys()) {
        if (key == k.name) {
            try {
                k.set(cfg, value);
            } catch (const std::out_of_range&) {
                throw std::invalid_argument(key + ": value out of range");
            } catch (const std::invalid_argument& e) {
                const std::string what = e.what();
                throw std::invalid_argument(key + ": " + (what.rfind("sto", 0) == 0 ? "malformed value '" + value + "'" : what));
            }
            return;
        }
    }
    throw std::invalid_argument("unknown key '" + key + "'");
}

void apply_config(ExperimentConfig& cfg, std::istream& in, const std::string& source)
{
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(source + ":" + std::to_string(line_no) + ": expected 'key = value'");
        try {
            apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(source + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
}

void load_config(ExperimentConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config '" + path + "'");
    apply_config(cfg, in, path);
}

void write_config(const ExperimentConfig& cfg, std::ostream& out)
{
    for (const Key& k : keys())
        out << k.name << " = " << k.get(cfg) << '\n';
}

std::vector<std::string> config_keys()
{
    std::vector<std::string> names;
    for (const Key& k : keys())
        names.emplace_back(k.name);
    return names;
}

}  // namespace pinchsec
