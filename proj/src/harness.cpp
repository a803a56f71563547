// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors

#include "pinchsec/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "pinchsec/channel.hpp"
#include "pinchsec/parallel.hpp"

namespace pinchsec {

namespace {

template <class E, std::size_t M>
E parse_enum(const std::string& name, const char* const (&names)[M], const char* what)
{
    for (std::size_t i = 0; i < M; ++i)
        if (name == names[i])
            return static_cast<E>(i);
    throw std::invalid_argument(std::string("unknown ") + what + " '" + name + "'");
}

const char* const kExperimentNames[] = {"tables",   "cdf",         "sweep_pmax", "sweep_n",
                                        "sweep_zeta", "special_in_front", "single"};
const char* const kOptimizerNames[] = {"feapso", "es", "fixed"};
const char* const kModelNames[] = {"phase", "atten"};
const char* const kStageNames[] = {"stage1", "stage2"};

template <class T>
bool strictly_sorted(const std::vector<T>& v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i - 1] < v[i]))
            return false;
    return true;
}

std::uint64_t mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// One value of the swept axis (or the single default point).
struct Point {
    ModelKind model = ModelKind::Phase;
    double zeta = 0.0;
    int N = 0;
    double pmax_dbm = 0.0;
};

std::vector<Point> points_of(const ExperimentConfig& cfg)
{
    const Point base{cfg.model, 0.0, cfg.params.pas_per_waveguide, cfg.params.pmax_dbm};
    std::vector<Point> pts;
    auto add_models = [&](Point p) {
        if (cfg.model == ModelKind::Phase) {
            pts.push_back(p);
            return;
        }
        for (double z : cfg.zetas) {
            p.zeta = z;
            pts.push_back(p);
        }
    };
    switch (cfg.experiment) {
    case Experiment::SweepPmax:
        for (double pm : cfg.sweep_pmax) {
            Point p = base;
            p.pmax_dbm = pm;
            add_models(p);
        }
        break;
    case Experiment::SweepN:
        for (int n : cfg.sweep_n) {
            Point p = base;
            p.N = n;
            add_models(p);
        }
        break;
    case Experiment::SweepZeta:
        pts.push_back({ModelKind::Phase, 0.0, base.N, base.pmax_dbm});
        for (double z : cfg.sweep_zeta)
            pts.push_back({ModelKind::Atten, z, base.N, base.pmax_dbm});
        break;
    default:
        add_models(base);
        break;
    }
    return pts;
}

int realizations_of(const ExperimentConfig& cfg)
{
    return cfg.experiment == Experiment::Single ? 1 : cfg.realizations;
}

std::string sanitize(std::string s)
{
    for (char& ch : s)
        if (ch == ',' || ch == '\n' || ch == '\r' || ch == '"')
            ch = ';';
    return s;
}

double elapsed_ms(std::chrono::steady_clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

PlacementResult place(const ExperimentConfig& cfg, Optimizer optimizer, const Scenario& scenario,
                      const ChannelModel& model, int inner_workers)
{
    switch (optimizer) {
    case Optimizer::FeaPSO: {
        PsoConfig pso = cfg.pso;
        pso.seed = mix(cfg.pso.seed ^ mix(scenario.seed) ^ (static_cast<std::uint64_t>(scenario.layout) << 40));
        pso.workers = inner_workers;
        return feapso(scenario, model, pso);
    }
    case Optimizer::ES:
        return exhaustive_search(scenario, model, cfg.es_spacing);
    case Optimizer::Fixed:
        return evaluate_placement(scenario, model, fixed_baseline_placement(scenario.params));
    }
    throw std::logic_error("unhandled optimizer");
}

void fill_metrics(RunRecord& r, const EffectiveChannels& F, const BeamSet& beams, const SystemParams& params)
{
    const RateSummary s = summarize(F, beams, params);
    r.sum_rate = s.sum_rate;
    r.sum_leakage = s.sum_leakage;
    r.ssr = s.ssr;
    r.see = s.see;
    r.beam_power_w = s.beam_power;
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::vector<std::string> split(const std::string& line)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ','))
        out.push_back(field);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

}  // namespace

const char* to_string(Experiment experiment) { return kExperimentNames[static_cast<int>(experiment)]; }
Experiment parse_experiment(const std::string& name)
{
    return parse_enum<Experiment>(name, kExperimentNames, "experiment");
}

const char* to_string(Optimizer optimizer) { return kOptimizerNames[static_cast<int>(optimizer)]; }
Optimizer parse_optimizer(const std::string& name)
{
    return parse_enum<Optimizer>(name, kOptimizerNames, "optimizer");
}

const char* to_string(ModelKind kind) { return kModelNames[static_cast<int>(kind)]; }
ModelKind parse_model(const std::string& name) { return parse_enum<ModelKind>(name, kModelNames, "model"); }

const char* to_string(Stage stage) { return kStageNames[static_cast<int>(stage)]; }
Stage parse_stage(const std::string& name) { return parse_enum<Stage>(name, kStageNames, "stage"); }

void ExperimentConfig::validate() const
{
    auto fail = [](const std::string& what) { throw std::invalid_argument("config: " + what); };
    if (realizations < 1)
        fail("realizations must be >= 1");
    if (layouts.empty())
        fail("layouts must not be empty");
    if (optimizers.empty())
        fail("optimizers must not be empty");
    if (objectives.empty())
        fail("objectives must not be empty");
    if (workers < 1)
        fail("workers must be >= 1");
    if (!(es_spacing > 0.0))
        fail("es_spacing must be positive");
    if (model == ModelKind::Atten && zetas.empty())
        fail("zetas must not be empty for the attenuation model");
    for (double z : zetas)
        if (z < 0.0)
            fail("zetas must be nonnegative");
    if (sweep_pmax.empty() || !strictly_sorted(sweep_pmax))
        fail("sweep_pmax must be non-empty and sorted");
    if (sweep_n.empty() || !strictly_sorted(sweep_n) || sweep_n.front() < 1)
        fail("sweep_n must be non-empty, sorted and positive");
    if (sweep_zeta.empty() || !strictly_sorted(sweep_zeta) || sweep_zeta.front() < 0.0)
        fail("sweep_zeta must be non-empty, sorted and nonnegative");
    pso.validate();
    sca.validate();
    derive_params(params);
}

std::vector<RunRecord> run_realization(const ExperimentConfig& cfg, int index)
{
    const std::uint64_t seed = cfg.seed_base + static_cast<std::uint64_t>(index);
    const EveMode eve_mode = cfg.experiment == Experiment::SpecialInFront ? EveMode::InFront : EveMode::Uniform;
    const int inner_workers = realizations_of(cfg) == 1 ? cfg.workers : 1;
    const std::vector<Point> pts = points_of(cfg);

    std::vector<RunRecord> out;
    for (Layout layout : cfg.layouts) {
        for (const Point& pt : pts) {
            RawParams raw = cfg.params;
            raw.pas_per_waveguide = pt.N;
            raw.pmax_dbm = pt.pmax_dbm;
            const ChannelModel model = pt.model == ModelKind::Phase ? ChannelModel::phase_only()
                                                                    : ChannelModel::phase_and_attenuation(pt.zeta);
            for (Optimizer optimizer : cfg.optimizers) {
                RunRecord proto;
                proto.scenario_id = seed;
                proto.layout = layout;
                proto.model = pt.model;
                proto.zeta = pt.zeta;
                proto.K = raw.num_lus;
                proto.N = pt.N;
                proto.pmax_dbm = pt.pmax_dbm;
                proto.optimizer = optimizer;

                const std::size_t first = out.size();
                try {
                    const SystemParams params = derive_params(raw);
                    const Scenario scenario = sample_scenario(params, layout, seed, eve_mode);
                    auto t0 = std::chrono::steady_clock::now();
                    const PlacementResult placed = place(cfg, optimizer, scenario, model, inner_workers);
                    const double place_ms = cfg.record_timing ? elapsed_ms(t0) : 0.0;
                    const EffectiveChannels F = effective_channels(scenario, placed.placement, model);

                    for (Objective objective : cfg.objectives) {
                        RunRecord s1 = proto;
                        s1.stage = Stage::Stage1;
                        s1.objective = objective;
                        s1.wall_ms = place_ms;
                        fill_metrics(s1, F, placed.stage1_beams, params);
                        out.push_back(s1);

                        RunRecord s2 = proto;
                        s2.stage = Stage::Stage2;
                        s2.objective = objective;
                        t0 = std::chrono::steady_clock::now();
                        const ScaResult res = sca_optimize(objective, F, params, cfg.sca);
                        s2.wall_ms = cfg.record_timing ? elapsed_ms(t0) : 0.0;
                        s2.sca_iters = res.iterations;
                        fill_metrics(s2, F, res.beams, params);
                        if (res.status == ScaStatus::IterLimit || res.status == ScaStatus::NumericalFailure)
                            s2.status = std::string("sca_") + to_string(res.status);
                        out.push_back(s2);
                    }
                } catch (const std::exception& e) {
                    out.resize(first);
                    for (Objective objective : cfg.objectives) {
                        for (Stage stage : {Stage::Stage1, Stage::Stage2}) {
                            RunRecord r = proto;
                            r.stage = stage;
                            r.objective = objective;
                            r.status = "error: " + sanitize(e.what());
                            out.push_back(r);
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg)
{
    cfg.validate();
    const int B = realizations_of(cfg);
    std::vector<std::vector<RunRecord>> slots(B);
    parallel_for(static_cast<std::size_t>(B), cfg.workers, [&](std::size_t i) {
        slots[i] = run_realization(cfg, static_cast<int>(i));
    });
    std::vector<RunRecord> records;
    for (auto& s : slots)
        records.insert(records.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
    return records;
}

std::vector<std::pair<double, double>> empirical_cdf(std::vector<double> values)
{
    if (values.empty())
        throw std::invalid_argument("empirical_cdf: empty input");
    std::sort(values.begin(), values.end());
    const double n = static_cast<double>(values.size());
    std::vector<std::pair<double, double>> steps;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i + 1 < values.size() && values[i + 1] == values[i])
            continue;
        steps.emplace_back(values[i], static_cast<double>(i + 1) / n);
    }
    return steps;
}

std::vector<Aggregate> aggregate(const std::vector<RunRecord>& records)
{
    using Key = std::tuple<int, int, double, int, int, double, int, int, int>;
    std::map<Key, std::size_t> index;
    std::vector<Aggregate> groups;
    for (const RunRecord& r : records) {
        const Key key{static_cast<int>(r.layout), static_cast<int>(r.model), r.zeta, r.K, r.N, r.pmax_dbm,
                      static_cast<int>(r.optimizer), static_cast<int>(r.stage), static_cast<int>(r.objective)};
        auto [it, inserted] = index.try_emplace(key, groups.size());
        if (inserted) {
            Aggregate g;
            g.layout = r.layout;
            g.model = r.model;
            g.zeta = r.zeta;
            g.K = r.K;
            g.N = r.N;
            g.pmax_dbm = r.pmax_dbm;
            g.optimizer = r.optimizer;
            g.stage = r.stage;
            g.objective = r.objective;
            groups.push_back(g);
        }
        Aggregate& g = groups[it->second];
        if (!r.ok()) {
            ++g.failed;
            continue;
        }
        ++g.count;
        g.sum_rate += r.sum_rate;
        g.sum_leakage += r.sum_leakage;
        g.ssr += r.ssr;
        g.see += r.see;
        g.beam_power_w += r.beam_power_w;
    }
    for (Aggregate& g : groups) {
        if (g.count == 0)
            continue;
        const double n = g.count;
        g.sum_rate /= n;
        g.sum_leakage /= n;
        g.ssr /= n;
        g.see /= n;
        g.beam_power_w /= n;
    }
    return groups;
}

const Aggregate* find_aggregate(const std::vector<Aggregate>& aggregates, Layout layout, Optimizer optimizer,
                                Stage stage, Objective objective)
{
    for (const Aggregate& g : aggregates)
        if (g.layout == layout && g.optimizer == optimizer && g.stage == stage && g.objective == objective)
            return &g;
    return nullptr;
}

void write_csv(const std::vector<RunRecord>& records, std::ostream& out)
{
    out << kCsvHeader << '\n';
    for (const RunRecord& r : records) {
        out << r.scenario_id << ',' << to_string(r.layout) << ',' << to_string(r.model) << ',' << fmt(r.zeta) << ','
            << r.K << ',' << r.N << ',' << fmt(r.pmax_dbm) << ',' << to_string(r.optimizer) << ','
            << to_string(r.stage) << ',' << to_string(r.objective) << ',' << fmt(r.sum_rate) << ','
            << fmt(r.sum_leakage) << ',' << fmt(r.ssr) << ',' << fmt(r.see) << ',' << fmt(r.beam_power_w) << ','
            << r.sca_iters << ',' << fmt(r.wall_ms) << ',' << sanitize(r.status) << '\n';
    }
}

void write_csv(const std::vector<RunRecord>& records, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_csv(records, out);
    out.flush();
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<RunRecord> read_csv(std::istream& in)
{
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw std::runtime_error("read_csv: missing or unexpected header");
    std::vector<RunRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty())
            continue;
        const auto f = split(line);
        if (f.size() != 18)
            throw std::runtime_error("read_csv: line " + std::to_string(line_no) + " has " +
                                     std::to_string(f.size()) + " fields, expected 18");
        try {
            RunRecord r;
            r.scenario_id = std::stoull(f[0]);
            r.layout = parse_layout(f[1]);
            r.model = parse_model(f[2]);
            r.zeta = std::stod(f[3]);
            r.K = std::stoi(f[4]);
            r.N = std::stoi(f[5]);
            r.pmax_dbm = std::stod(f[6]);
            r.optimizer = parse_optimizer(f[7]);
            r.stage = parse_stage(f[8]);
            r.objective = parse_objective(f[9]);
            r.sum_rate = std::stod(f[10]);
            r.sum_leakage = std::stod(f[11]);
            r.ssr = std::stod(f[12]);
            r.see = std::stod(f[13]);
            r.beam_power_w = std::stod(f[14]);
            r.sca_iters = std::stoi(f[15]);
            r.wall_ms = std::stod(f[16]);
            r.status = f[17];
            records.push_back(std::move(r));
        } catch (const std::logic_error& e) {
            throw std::runtime_error("read_csv: line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

std::vector<RunRecord> read_csv(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "' for reading");
    try {
        return read_csv(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_cdf_csv(const std::vector<RunRecord>& records, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "layout,optimizer,stage,objective,ssr,probability\n";
    for (const Aggregate& g : aggregate(records)) {
        std::vector<double> values;
        for (const RunRecord& r : records)
            if (r.ok() && r.layout == g.layout && r.model == g.model && r.zeta == g.zeta && r.N == g.N &&
                r.pmax_dbm == g.pmax_dbm && r.optimizer == g.optimizer && r.stage == g.stage &&
                r.objective == g.objective)
                values.push_back(r.ssr);
        if (values.empty())
            continue;
        for (const auto& [v, p] : empirical_cdf(std::move(values)))
            out << to_string(g.layout) << ',' << to_string(g.optimizer) << ',' << to_string(g.stage) << ','
                << to_string(g.objective) << ',' << fmt(v) << ',' << fmt(p) << '\n';
    }
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

void print_summary(const std::vector<Aggregate>& aggregates, std::ostream& out)
{
    char line[256];
    std::snprintf(line, sizeof line, "%-10s %-5s %6s %2s %6s %-6s %-6s %-3s %5s %9s %9s %9s %9s %9s\n", "layout",
                  "model", "zeta", "N", "pmax", "opt", "stage", "obj", "runs", "sum_rate", "leakage", "ssr", "see",
                  "power_w");
    out << line;
    for (const Aggregate& g : aggregates) {
        std::snprintf(line, sizeof line, "%-10s %-5s %6.3g %2d %6.3g %-6s %-6s %-3s %5d %9.4f %9.4f %9.4f %9.4f %9.4g\n",
                      to_string(g.layout), to_string(g.model), g.zeta, g.N, g.pmax_dbm, to_string(g.optimizer),
                      to_string(g.stage), to_string(g.objective), g.count, g.sum_rate, g.sum_leakage, g.ssr, g.see,
                      g.beam_power_w);
        out << line;
    }
}

}  // namespace pinchsec
