// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 The pinchsec authors
//
// pinchsec: batch experiments for the dual-waveguide pinching-antenna
// secrecy system.
//
//   pinchsec tables --realizations 300 --out tables.csv
//   pinchsec sweep --axis pmax --layout parallel --out pmax.csv
//   pinchsec cdf --out cdf.csv          (also writes cdf.cdf.csv)

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pinchsec/config.hpp"
#include "pinchsec/harness.hpp"

using namespace pinchsec;

namespace {

struct Flags {
    std::string config;
    std::optional<std::string> layout;
    std::optional<std::string> model;
    std::optional<double> zeta;
    std::optional<int> realizations;
    std::optional<std::uint64_t> seed;
    std::optional<int> swarm;
    std::optional<double> es_spacing;
    std::optional<std::string> objective;
    std::optional<std::string> optimizers;
    std::optional<std::string> out;
    std::optional<int> workers;
    std::vector<std::string> settings;
    bool timing = false;
    bool print_config = false;
    std::string axis = "pmax";
};

void add_common(CLI::App* cmd, Flags& f)
{
    cmd->add_option("--config", f.config, "key = value config file")->check(CLI::ExistingFile);
    cmd->add_option("--layout", f.layout, "parallel|orthogonal|both")
        ->check(CLI::IsMember({"parallel", "orthogonal", "both"}));
    cmd->add_option("--model", f.model, "phase|atten")->check(CLI::IsMember({"phase", "atten"}));
    cmd->add_option("--zeta", f.zeta, "attenuation coefficient (1/m) for --model atten");
    cmd->add_option("--realizations", f.realizations, "number of random realizations B");
    cmd->add_option("--seed", f.seed, "seed of the first realization");
    cmd->add_option("--swarm", f.swarm, "FeaPSO swarm size");
    cmd->add_option("--es-spacing", f.es_spacing, "grid spacing of the exhaustive search (m)");
    cmd->add_option("--objective", f.objective, "ssr|see|both")->check(CLI::IsMember({"ssr", "see", "both"}));
    cmd->add_option("--optimizers", f.optimizers, "comma list of feapso,es,fixed");
    cmd->add_option("--out", f.out, "CSV output path");
    cmd->add_option("--workers", f.workers, "worker threads");
    cmd->add_option("--set", f.settings, "extra key=value setting (repeatable)");
    cmd->add_flag("--timing", f.timing, "record wall-clock milliseconds (breaks byte reproducibility)");
    cmd->add_flag("--print-config", f.print_config, "print the effective config and exit");
}

ExperimentConfig build_config(Experiment experiment, const Flags& f)
{
    ExperimentConfig cfg = default_config(experiment);
    if (!f.config.empty())
        load_config(cfg, f.config);
    cfg.experiment = experiment;
    if (f.layout)
        apply_setting(cfg, "layouts", *f.layout == "both" ? "parallel, orthogonal" : *f.layout);
    if (f.model)
        cfg.model = parse_model(*f.model);
    if (f.zeta) {
        cfg.zetas = {*f.zeta};
        if (!f.model)
            cfg.model = ModelKind::Atten;
    }
    if (f.realizations)
        cfg.realizations = *f.realizations;
    if (f.seed)
        cfg.seed_base = *f.seed;
    if (f.swarm)
        cfg.pso.swarm_size = *f.swarm;
    if (f.es_spacing)
        cfg.es_spacing = *f.es_spacing;
    if (f.objective)
        apply_setting(cfg, "objectives", *f.objective == "both" ? "ssr, see" : *f.objective);
    if (f.optimizers)
        apply_setting(cfg, "optimizers", *f.optimizers);
    if (f.out)
        cfg.out = *f.out;
    if (f.workers)
        cfg.workers = *f.workers;
    for (const std::string& s : f.settings) {
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("--set expects key=value, got '" + s + "'");
        apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
    }
    if (f.timing)
        cfg.record_timing = true;
    cfg.validate();
    return cfg;
}

std::string cdf_path(const std::string& out)
{
    const std::string ext = ".csv";
    if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
        return out.substr(0, out.size() - ext.size()) + ".cdf.csv";
    return out + ".cdf.csv";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Pinching-antenna physical-layer security experiments"};
    app.require_subcommand(1);
    Flags flags;

    struct Sub {
        const char* name;
        const char* help;
        Experiment experiment;
    };
    const Sub subs[] = {
        {"tables", "mean stage-1/stage-2 metrics for every optimizer", Experiment::Tables},
        {"cdf", "per-realization SSR and its empirical CDF", Experiment::Cdf},
        {"sweep", "vary one axis (--axis pmax|n|zeta)", Experiment::SweepPmax},
        {"special", "Eve placed in front of the LUs", Experiment::SpecialInFront},
        {"single", "one realization", Experiment::Single},
    };
    std::vector<CLI::App*> cmds;
    for (const Sub& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, flags);
        if (s.experiment == Experiment::SweepPmax)
            cmd->add_option("--axis", flags.axis, "swept axis")->check(CLI::IsMember({"pmax", "n", "zeta"}));
        cmds.push_back(cmd);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        Experiment experiment = Experiment::Tables;
        for (std::size_t i = 0; i < cmds.size(); ++i)
            if (cmds[i]->parsed())
                experiment = subs[i].experiment;
        if (experiment == Experiment::SweepPmax)
            experiment = flags.axis == "n" ? Experiment::SweepN
                         : flags.axis == "zeta" ? Experiment::SweepZeta
                                                : Experiment::SweepPmax;

        const ExperimentConfig cfg = build_config(experiment, flags);
        if (flags.print_config) {
            write_config(cfg, std::cout);
            return 0;
        }

        const std::vector<RunRecord> records = run_experiment(cfg);
        if (!cfg.out.empty()) {
            write_csv(records, cfg.out);
            if (experiment == Experiment::Cdf)
                write_cdf_csv(records, cdf_path(cfg.out));
        }
        print_summary(aggregate(records), std::cout);
        int failed = 0;
        for (const RunRecord& r : records)
            failed += r.ok() ? 0 : 1;
        if (failed > 0)
            std::cerr << failed << " of " << records.size() << " records failed and were left out of the means\n";
    } catch (const std::exception& e) {
        std::cerr << "pinchsec: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
