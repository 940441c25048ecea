// mergm: two-level socio-material network models from the command line.
//
//   mergm describe --nodes nodes.csv --edges edges.csv --out out/
//   mergm estimate --nodes ... --edges ... --model model.json --out out/
//   mergm gof      --nodes ... --edges ... --model model.json --fit out/fit.csv --out gof/
//
// See README.md for the file formats.

#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "mergm/workbench.hpp"

namespace {

void add_common_options(CLI::App* cmd, mergm::RunConfig& cfg, bool needs_model) {
    cmd->add_option("--nodes", cfg.nodes_path, "node CSV (id,level,group[,attrs...])")
        ->required();
    cmd->add_option("--edges", cfg.edges_path, "edge CSV (level,from,to,wave)")->required();
    cmd->add_option("--nodes2", cfg.nodes2_path, "second-wave node CSV");
    cmd->add_option("--edges2", cfg.edges2_path, "second-wave edge CSV (wave=2 rows)");
    auto* model = cmd->add_option("--model", cfg.model_path, "model spec JSON");
    if (needs_model) model->required();
    cmd->add_option("--chain", cfg.chain_path, "chain config JSON");
    cmd->add_option("--out", cfg.out_dir, "output directory (default $MERGM_OUT_DIR)");
    cmd->add_option("--seed", [&cfg](const CLI::results_t& res) {
            cfg.seed = std::stoull(res[0]);
            return true;
        }, "top-level RNG seed (overrides chain config)");
    cmd->add_option("--wave", cfg.wave, "analyse wave 1 or 2 (default 1)")
        ->check(CLI::Range(1, 2));
    cmd->add_flag("--lagged", cfg.lagged, "wave-1 A fixed, wave-2 X/B free");
    cmd->add_flag("--min-usage-filter", cfg.min_usage_filter,
                  "drop objects used by fewer than two actors");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multilevel ERGM toolkit for socio-material networks"};
    app.require_subcommand(1);

    mergm::RunConfig cfg;
    if (const char* env = std::getenv("MERGM_OUT_DIR")) cfg.out_dir = env;

    CLI::App* describe = app.add_subcommand("describe", "per-group descriptive statistics");
    add_common_options(describe, cfg, false);

    CLI::App* stats = app.add_subcommand("stats", "observed statistic vector for a model");
    add_common_options(stats, cfg, true);

    CLI::App* simulate = app.add_subcommand("simulate", "sample networks from a model");
    add_common_options(simulate, cfg, true);
    simulate->add_option("--fit", cfg.fit_path, "simulate at the parameters of this fit CSV");

    CLI::App* estimate = app.add_subcommand("estimate", "MCMC maximum-likelihood estimation");
    add_common_options(estimate, cfg, true);
    estimate->add_option("--estimation", cfg.estimation_path, "estimation settings JSON");

    CLI::App* gof = app.add_subcommand("gof", "goodness-of-fit t-ratio table");
    add_common_options(gof, cfg, true);
    gof->add_option("--fit", cfg.fit_path, "fit CSV from an estimate run")->required();

    CLI::App* correlate = app.add_subcommand("correlate", "parameter-estimate correlations");
    add_common_options(correlate, cfg, true);
    correlate->add_option("--fit", cfg.fit_path, "fit CSV from an estimate run")->required();
    correlate->add_option("--covariance", cfg.covariance_path,
                          "parameter covariance CSV (default: next to the fit)");
    correlate->add_flag("--insignificant-only", cfg.insignificant_only,
                        "restrict the table to starless estimates");

    CLI11_PARSE(app, argc, argv);

    if (describe->parsed()) cfg.mode = mergm::RunMode::Describe;
    else if (stats->parsed()) cfg.mode = mergm::RunMode::Stats;
    else if (simulate->parsed()) cfg.mode = mergm::RunMode::Simulate;
    else if (estimate->parsed()) cfg.mode = mergm::RunMode::Estimate;
    else if (gof->parsed()) cfg.mode = mergm::RunMode::Gof;
    else if (correlate->parsed()) cfg.mode = mergm::RunMode::Correlate;

    return mergm::run(cfg);
}
