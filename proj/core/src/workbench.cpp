#include "mergm/workbench.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "mergm/descriptives.hpp"
#include "mergm/estimator.hpp"
#include "mergm/gof.hpp"
#include "mergm/report.hpp"

namespace mergm {

namespace fs = std::filesystem;
using nlohmann::json;

std::optional<RunMode> parse_run_mode(const std::string& name) {
    if (name == "stats") return RunMode::Stats;
    if (name == "describe") return RunMode::Describe;
    if (name == "simulate") return RunMode::Simulate;
    if (name == "estimate") return RunMode::Estimate;
    if (name == "gof") return RunMode::Gof;
    if (name == "correlate") return RunMode::Correlate;
    return std::nullopt;
}

namespace {

const char* mode_name(RunMode mode) {
    switch (mode) {
        case RunMode::Stats: return "stats";
        case RunMode::Describe: return "describe";
        case RunMode::Simulate: return "simulate";
        case RunMode::Estimate: return "estimate";
        case RunMode::Gof: return "gof";
        case RunMode::Correlate: return "correlate";
    }
    return "?";
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
    return (fs::path(cfg.out_dir) / name).string();
}

void write_error_report(const RunConfig& cfg, const std::string& message) {
    if (cfg.out_dir.empty()) return;
    std::error_code ec;
    fs::create_directories(cfg.out_dir, ec);
    std::ofstream out(out_path(cfg, "error.json"));
    if (!out) return;
    json j;
    j["mode"] = mode_name(cfg.mode);
    j["error"] = message;
    out << j.dump(2) << "\n";
}

void write_ingest_summary(const RunConfig& cfg, const IngestionSummary& summary,
                          const char* name) {
    json j;
    j["actors"] = summary.n_actors;
    j["objects"] = summary.n_objects;
    j["edges"] = {{"A", summary.edges_a}, {"B", summary.edges_b}, {"X", summary.edges_x}};
    j["duplicate_edges"] = summary.duplicate_edges;
    j["filtered_objects"] = summary.filtered_objects;
    j["edge_rows_other_wave"] = summary.edge_rows_ignored;
    std::ofstream out(out_path(cfg, name));
    out << j.dump(2) << "\n";
}

struct Assembled {
    MultilevelNetwork network;          // analysis network
    std::optional<ModelSpec> model;     // present unless describe without --model
    ChainConfig chain;
    EstimationSettings estimation;
};

Assembled assemble(const RunConfig& cfg, bool need_model) {
    if (cfg.nodes_path.empty() || cfg.edges_path.empty())
        throw ValidationError("--nodes and --edges are required");

    Assembled out;
    LoadOptions opt1{1, cfg.min_usage_filter};
    LoadedWave wave1 = load_wave(cfg.nodes_path, cfg.edges_path, opt1);
    write_ingest_summary(cfg, wave1.summary, "ingest_wave1.json");

    const bool has_wave2 = !cfg.nodes2_path.empty() || !cfg.edges2_path.empty();
    if (cfg.lagged && !has_wave2)
        throw ValidationError("--lagged needs a second wave (--nodes2/--edges2)");
    if (cfg.wave == 2 && !has_wave2)
        throw ValidationError("--wave 2 needs a second wave (--nodes2/--edges2)");

    if (has_wave2) {
        LoadOptions opt2{2, cfg.min_usage_filter};
        const std::string nodes2 = cfg.nodes2_path.empty() ? cfg.nodes_path : cfg.nodes2_path;
        const std::string edges2 = cfg.edges2_path.empty() ? cfg.edges_path : cfg.edges2_path;
        LoadedWave wave2 = load_wave(nodes2, edges2, opt2);
        write_ingest_summary(cfg, wave2.summary, "ingest_wave2.json");
        auto [w1, w2] = conform_waves(wave1.network, wave2.network);
        if (cfg.lagged)
            out.network = make_lagged_network(w1, w2);
        else
            out.network = cfg.wave == 2 ? w2 : w1;
    } else {
        out.network = wave1.network;
    }

    if (!cfg.model_path.empty()) {
        ModelSpec model = load_model_spec(cfg.model_path);
        if (cfg.lagged) {
            std::set<TieLevel> free = model.free_levels();
            free.erase(TieLevel::A);
            if (free.empty()) free = {TieLevel::B, TieLevel::X};
            out.model.emplace(model.stats(), free);
        } else {
            out.model.emplace(std::move(model));
        }
    } else if (need_model) {
        throw ValidationError("--model is required for this mode");
    }

    if (!cfg.chain_path.empty()) out.chain = load_chain_config(cfg.chain_path);
    if (cfg.seed) out.chain.seed = *cfg.seed;
    if (!cfg.estimation_path.empty()) out.estimation = load_estimation_settings(cfg.estimation_path);
    return out;
}

int cmd_stats(const RunConfig& cfg, const Assembled& a) {
    StatVector z = statistic_vector(a.network, *a.model);
    std::ofstream out(out_path(cfg, "observed_stats.csv"));
    out << "statistic,value\n";
    char buf[64];
    for (int k = 0; k < a.model->size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.10g", z[k]);
        out << descriptor_name(a.model->stats()[k]) << "," << buf << "\n";
    }
    std::cout << "wrote " << out_path(cfg, "observed_stats.csv") << "\n";
    return kExitOk;
}

int cmd_describe(const RunConfig& cfg, const Assembled& a) {
    DescriptiveReport report = describe(split_groups(a.network));
    write_descriptives_csv(report, out_path(cfg, "descriptives.csv"));
    const std::string text = descriptives_text(report);
    std::ofstream(out_path(cfg, "descriptives.txt")) << text;
    std::cout << text;
    return kExitOk;
}

int cmd_simulate(const RunConfig& cfg, const Assembled& a) {
    Theta theta(a.model->size(), 0.0);
    if (!cfg.fit_path.empty()) theta = read_fit_csv(cfg.fit_path, *a.model).theta_hat;

    SampleSummary sample = simulate_sample(a.network, theta, *a.model, a.chain, true);

    char buf[64];
    std::ofstream draws(out_path(cfg, "sample_stats.csv"));
    draws << "draw";
    for (const StatDescriptor& d : a.model->stats()) draws << "," << descriptor_name(d);
    draws << "\n";
    for (std::size_t t = 0; t < sample.retained.size(); ++t) {
        draws << t;
        for (double v : sample.retained[t]) {
            std::snprintf(buf, sizeof(buf), "%.10g", v);
            draws << "," << buf;
        }
        draws << "\n";
    }

    std::ofstream summary(out_path(cfg, "sample_summary.csv"));
    summary << "statistic,mean,sd,mc_se\n";
    for (int k = 0; k < a.model->size(); ++k) {
        summary << descriptor_name(a.model->stats()[k]);
        for (double v : {sample.mean[k], sample.sd[k], sample.mc_se[k]}) {
            std::snprintf(buf, sizeof(buf), "%.10g", v);
            summary << "," << buf;
        }
        summary << "\n";
    }

    write_network_csv(sample.final_state, out_path(cfg, "final_nodes.csv"),
                      out_path(cfg, "final_edges.csv"));
    if (sample.degeneracy_flag) {
        std::cout << "warning: degeneracy flag raised (monotone statistic path:";
        for (int k : sample.degenerate_stats)
            std::cout << " " << descriptor_name(a.model->stats()[k]);
        std::cout << ")\n";
    }
    std::cout << "wrote " << out_path(cfg, "sample_stats.csv") << "\n";
    return kExitOk;
}

int cmd_estimate(const RunConfig& cfg, const Assembled& a) {
    FitResult fit = estimate(a.network, *a.model, a.estimation, a.chain);
    write_fit_csv(fit, out_path(cfg, "fit.csv"));
    write_covariance_csv(fit, out_path(cfg, "fit_covariance.csv"));
    FitReport report = render_fit_report(fit);
    write_fit_report_csv(report, out_path(cfg, "fit_report.csv"));
    const std::string text = fit_report_text(report);
    std::ofstream(out_path(cfg, "fit_report.txt")) << text;
    std::cout << text;
    if (!fit.converged) {
        std::cout << "estimation did not converge after " << fit.restarts_used
                  << " restart(s); partial fit written\n";
        return kExitNotConverged;
    }
    return kExitOk;
}

int cmd_gof(const RunConfig& cfg, const Assembled& a) {
    if (cfg.fit_path.empty()) throw ValidationError("--fit is required for gof");
    FitResult fit = read_fit_csv(cfg.fit_path, *a.model);
    fit.observed_stats = statistic_vector(a.network, *a.model);
    std::vector<StatDescriptor> aux = default_auxiliary_set(a.network, a.model->stats());
    GofTable table = run_gof(a.network, fit, *a.model, aux, a.chain);
    write_gof_csv(table, out_path(cfg, "gof.csv"));
    const std::string text = gof_table_text(table);
    std::ofstream(out_path(cfg, "gof.txt")) << text;
    std::cout << text;
    return kExitOk;
}

int cmd_correlate(const RunConfig& cfg, const Assembled& a) {
    if (cfg.fit_path.empty()) throw ValidationError("--fit is required for correlate");
    std::string cov_path = cfg.covariance_path;
    if (cov_path.empty()) {
        cov_path = (fs::path(cfg.fit_path).parent_path() / "fit_covariance.csv").string();
        if (!fs::exists(cov_path))
            throw ValidationError("--covariance is required (no fit_covariance.csv next to the fit)");
    }
    FitResult fit = read_fit_csv(cfg.fit_path, *a.model);
    fit.param_covariance = read_covariance_csv(cov_path);
    if (fit.param_covariance.size() != static_cast<std::size_t>(a.model->size()))
        throw ValidationError("covariance size does not match the model");

    std::vector<std::vector<double>> r = estimate_correlations(fit);
    std::vector<std::string> names;
    for (const StatDescriptor& d : fit.stats) names.push_back(descriptor_name(d));

    if (cfg.insignificant_only) {
        std::vector<int> keep;
        for (int k = 0; k < a.model->size(); ++k)
            if (significance_stars(fit.theta_hat[k], fit.std_errors[k]).empty()) keep.push_back(k);
        std::vector<std::vector<double>> rr;
        std::vector<std::string> nn;
        for (int k : keep) {
            std::vector<double> rowv;
            for (int l : keep) rowv.push_back(r[k][l]);
            rr.push_back(std::move(rowv));
            nn.push_back(names[k]);
        }
        r = std::move(rr);
        names = std::move(nn);
    }

    write_correlation_csv(r, names, out_path(cfg, "correlations.csv"));
    const std::string text = correlation_text(r, names);
    std::ofstream(out_path(cfg, "correlations.txt")) << text;
    std::cout << text;
    return kExitOk;
}

}  // namespace

int run(const RunConfig& cfg) {
    try {
        if (cfg.out_dir.empty()) throw ValidationError("no output directory (--out or MERGM_OUT_DIR)");
        fs::create_directories(cfg.out_dir);
        const bool need_model = cfg.mode != RunMode::Describe;
        Assembled a = assemble(cfg, need_model);
        switch (cfg.mode) {
            case RunMode::Stats: return cmd_stats(cfg, a);
            case RunMode::Describe: return cmd_describe(cfg, a);
            case RunMode::Simulate: return cmd_simulate(cfg, a);
            case RunMode::Estimate: return cmd_estimate(cfg, a);
            case RunMode::Gof: return cmd_gof(cfg, a);
            case RunMode::Correlate: return cmd_correlate(cfg, a);
        }
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        write_error_report(cfg, e.what());
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        write_error_report(cfg, e.what());
        return kExitError;
    }
}

}  // namespace mergm
