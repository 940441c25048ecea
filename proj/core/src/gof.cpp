#include "mergm/gof.hpp"

#include <algorithm>
#include <cmath>

namespace mergm {

double gof_t_ratio(double observed, double sim_mean, double sim_sd) {
    return sim_sd > 0.0 ? (observed - sim_mean) / sim_sd : 0.0;
}

std::vector<StatDescriptor> default_auxiliary_set(const MultilevelNetwork& net,
                                                  const std::vector<StatDescriptor>& modeled,
                                                  double lambda) {
    std::vector<StatDescriptor> out;
    for (const StatInfo& info : stat_catalog()) {
        if (info.uses_attribute) {
            for (const std::string& attr : net.attributes().names())
                out.push_back(StatDescriptor{info.id, lambda, attr});
        } else {
            out.push_back(StatDescriptor{info.id, lambda, ""});
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&modeled](const StatDescriptor& d) {
                                 return std::find(modeled.begin(), modeled.end(), d) !=
                                        modeled.end();
                             }),
              out.end());
    return out;
}

GofTable run_gof(const MultilevelNetwork& observed, const FitResult& fit, const ModelSpec& model,
                 const std::vector<StatDescriptor>& auxiliary, const ChainConfig& cfg) {
    if (fit.theta_hat.size() != static_cast<std::size_t>(model.size()))
        throw ValidationError("fit is not aligned with the model");
    if (cfg.sample_size < 1) throw ValidationError("empty sample requested");
    for (const StatDescriptor& d : auxiliary) stat_info(d.id);  // id must exist

    const int p = model.size();
    const int q = static_cast<int>(auxiliary.size());

    // Auxiliary statistics are evaluated inside the draw callback so the
    // chain's random stream is identical with or without them. Welford
    // accumulation keeps variances exact for large near-constant statistics.
    std::vector<double> aux_mean(q, 0.0), aux_m2(q, 0.0);
    long long seen = 0;
    DrawCallback on_draw = [&](const MultilevelNetwork& state, const StatVector&) {
        ++seen;
        for (int k = 0; k < q; ++k) {
            const double v = global_statistic(state, auxiliary[k]);
            const double d = v - aux_mean[k];
            aux_mean[k] += d / seen;
            aux_m2[k] += d * (v - aux_mean[k]);
        }
    };

    SampleSummary sample = simulate_sample(observed, fit.theta_hat, model, cfg, false, on_draw);

    GofTable table;
    for (int k = 0; k < p; ++k) {
        GofRow row;
        row.stat = model.stats()[k];
        row.name = descriptor_name(row.stat);
        row.observed = fit.observed_stats.empty() ? global_statistic(observed, row.stat)
                                                  : fit.observed_stats[k];
        row.sim_mean = sample.mean[k];
        row.sim_sd = sample.sd[k];
        row.zero_variance = !(sample.sd[k] > 0.0);
        row.t_ratio = gof_t_ratio(row.observed, row.sim_mean, row.sim_sd);
        row.modeled = true;
        row.pass = std::abs(row.t_ratio) <= table.modeled_threshold;
        table.rows.push_back(std::move(row));
    }
    const int n = cfg.sample_size;
    for (int k = 0; k < q; ++k) {
        GofRow row;
        row.stat = auxiliary[k];
        row.name = descriptor_name(row.stat);
        row.observed = global_statistic(observed, row.stat);
        row.sim_mean = aux_mean[k];
        const double var = n > 1 ? aux_m2[k] / (n - 1) : 0.0;
        row.sim_sd = var > 0.0 ? std::sqrt(var) : 0.0;
        row.zero_variance = !(row.sim_sd > 0.0);
        row.t_ratio = gof_t_ratio(row.observed, row.sim_mean, row.sim_sd);
        row.modeled = false;
        row.pass = std::abs(row.t_ratio) <= table.auxiliary_threshold;
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace mergm
