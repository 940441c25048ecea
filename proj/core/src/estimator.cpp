#include "mergm/estimator.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace mergm {

namespace {

Eigen::MatrixXd to_eigen(const std::vector<std::vector<double>>& m) {
    const int n = static_cast<int>(m.size());
    Eigen::MatrixXd out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = m[i][j];
    return out;
}

std::vector<std::vector<double>> from_eigen(const Eigen::MatrixXd& m) {
    std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

// Names the most collinear statistic pair for singular-covariance errors.
std::string worst_pair(const Eigen::MatrixXd& cov, const std::vector<StatDescriptor>& stats) {
    const int p = static_cast<int>(cov.rows());
    double worst = 0.0;
    int wk = 0, wl = p > 1 ? 1 : 0;
    for (int k = 0; k < p; ++k) {
        if (cov(k, k) <= 0.0) return descriptor_name(stats[k]) + " (zero variance)";
        for (int l = k + 1; l < p; ++l) {
            const double r = std::abs(cov(k, l)) / std::sqrt(cov(k, k) * cov(l, l));
            if (r > worst) {
                worst = r;
                wk = k;
                wl = l;
            }
        }
    }
    if (p == 1) return descriptor_name(stats[0]);
    return descriptor_name(stats[wk]) + " / " + descriptor_name(stats[wl]) +
           " (|r| = " + std::to_string(worst) + ")";
}

Eigen::MatrixXd invert_covariance(const Eigen::MatrixXd& cov,
                                  const std::vector<StatDescriptor>& stats) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(cov);
    lu.setThreshold(1e-10);
    if (!lu.isInvertible())
        throw EstimationError("singular phase-3 statistic covariance: " + worst_pair(cov, stats));
    return lu.inverse();
}

double logit(double p) { return std::log(p / (1.0 - p)); }

// Edge-type parameters start at the logit of the observed density
// (clamped away from the empty/complete boundary); everything else at 0.
Theta initial_theta(const MultilevelNetwork& observed, const ModelSpec& model) {
    Theta theta(model.size(), 0.0);
    for (int k = 0; k < model.size(); ++k) {
        const StatId id = model.stats()[k].id;
        TieLevel level;
        if (id == StatId::EdgeA) level = TieLevel::A;
        else if (id == StatId::EdgeB) level = TieLevel::B;
        else if (id == StatId::XEdge) level = TieLevel::X;
        else continue;
        const double dyads = static_cast<double>(observed.toggleable_dyad_count(level));
        if (dyads <= 0.0) continue;
        const double density = static_cast<double>(observed.tie_count(level)) / dyads;
        theta[k] = logit(std::clamp(density, 0.5 / dyads, 1.0 - 0.5 / dyads));
    }
    return theta;
}

struct Phase1Result {
    Eigen::MatrixXd scaling;  // D⁻¹ (diagonal) or full inverse covariance
};

Phase1Result run_phase1(const MultilevelNetwork& observed, const ModelSpec& model,
                        const Theta& theta, const EstimationSettings& settings,
                        const ChainConfig& cfg, std::uint64_t seed) {
    ChainConfig phase_cfg = cfg;
    phase_cfg.sample_size = settings.phase1_draws;
    phase_cfg.seed = seed;
    SampleSummary sample = simulate_sample(observed, theta, model, phase_cfg, true);

    const int p = model.size();
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(p, p);
    for (const StatVector& z : sample.retained)
        for (int k = 0; k < p; ++k)
            for (int l = 0; l < p; ++l)
                cov(k, l) += (z[k] - sample.mean[k]) * (z[l] - sample.mean[l]);
    cov /= std::max(1, settings.phase1_draws - 1);

    for (int k = 0; k < p; ++k)
        if (cov(k, k) <= 0.0)
            throw EstimationError("constant statistic " + descriptor_name(model.stats()[k]) +
                                  " (zero variance over the free dyads)");

    Phase1Result out;
    if (settings.full_matrix_scaling) {
        out.scaling = invert_covariance(cov, model.stats());
    } else {
        out.scaling = Eigen::MatrixXd::Zero(p, p);
        for (int k = 0; k < p; ++k) out.scaling(k, k) = 1.0 / cov(k, k);
    }
    return out;
}

// Robbins-Monro subphases; returns the Polyak average over the last subphase.
Theta run_phase2(const MultilevelNetwork& observed, const ModelSpec& model, Theta theta,
                 const StatVector& z_obs, const Eigen::MatrixXd& scaling,
                 const EstimationSettings& settings, const ChainConfig& cfg,
                 std::uint64_t seed) {
    const int p = model.size();
    MarkovChain chain(observed, model, theta, seed);
    chain.set_level_weights(cfg.level_choice);
    const long long steps_per_update = std::max<long long>(cfg.thinning, chain.free_dyad_count());
    constexpr double kMaxStep = 2.0;

    double gain = settings.initial_gain;
    Eigen::VectorXd theta_vec(p), avg(p);
    for (int k = 0; k < p; ++k) theta_vec(k) = theta[k];

    for (int sub = 0; sub < settings.subphase_count; ++sub) {
        const int n_iters = 100 << std::min(sub, 10);
        avg.setZero();
        for (int it = 0; it < n_iters; ++it) {
            for (long long t = 0; t < steps_per_update; ++t) chain.step();
            Eigen::VectorXd diff(p);
            const StatVector& z = chain.stats();
            for (int k = 0; k < p; ++k) diff(k) = z[k] - z_obs[k];
            Eigen::VectorXd step = gain * (scaling * diff);
            for (int k = 0; k < p; ++k) step(k) = std::clamp(step(k), -kMaxStep, kMaxStep);
            theta_vec -= step;
            Theta next(p);
            for (int k = 0; k < p; ++k) next[k] = theta_vec(k);
            chain.set_theta(next);
            avg += theta_vec;
        }
        theta_vec = avg / n_iters;  // Polyak average stabilizes the subphase
        Theta next(p);
        for (int k = 0; k < p; ++k) next[k] = theta_vec(k);
        chain.set_theta(next);
        gain *= 0.5;
    }
    Theta out(p);
    for (int k = 0; k < p; ++k) out[k] = theta_vec(k);
    return out;
}

struct Phase3Result {
    std::vector<double> t_ratios;
    std::vector<double> std_errors;
    std::vector<std::vector<double>> param_covariance;
    bool converged = false;
};

Phase3Result run_phase3(const MultilevelNetwork& observed, const ModelSpec& model,
                        const Theta& theta, const StatVector& z_obs,
                        const EstimationSettings& settings, const ChainConfig& cfg,
                        std::uint64_t seed) {
    ChainConfig phase_cfg = cfg;
    phase_cfg.sample_size = settings.phase3_draws;
    phase_cfg.seed = seed;
    SampleSummary sample = simulate_sample(observed, theta, model, phase_cfg, true);

    const int p = model.size();
    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(p, p);
    for (const StatVector& z : sample.retained)
        for (int k = 0; k < p; ++k)
            for (int l = 0; l < p; ++l)
                cov(k, l) += (z[k] - sample.mean[k]) * (z[l] - sample.mean[l]);
    cov /= std::max(1, settings.phase3_draws - 1);

    Phase3Result out;
    out.t_ratios.resize(p);
    out.std_errors.resize(p);
    for (int k = 0; k < p; ++k) {
        if (sample.sd[k] <= 0.0)
            throw EstimationError("constant statistic " + descriptor_name(model.stats()[k]) +
                                  " in the phase-3 sample");
        out.t_ratios[k] = (sample.mean[k] - z_obs[k]) / sample.sd[k];
    }

    // Fisher-information identity: cov(θ̂) ≈ [cov(z)]⁻¹ at the MLE.
    Eigen::MatrixXd inv = invert_covariance(cov, model.stats());
    out.param_covariance = from_eigen(inv);
    for (int k = 0; k < p; ++k) out.std_errors[k] = std::sqrt(std::max(0.0, inv(k, k)));

    out.converged = true;
    for (int k = 0; k < p; ++k)
        out.converged = out.converged && std::abs(out.t_ratios[k]) <= settings.convergence_threshold;
    return out;
}

}  // namespace

FitResult estimate(const MultilevelNetwork& observed, const ModelSpec& model,
                   const EstimationSettings& settings, const ChainConfig& cfg) {
    if (settings.phase1_draws < 1 || settings.subphase_count < 1 || settings.phase3_draws < 1)
        throw ValidationError("estimation settings counts must be >= 1");
    if (!(settings.initial_gain > 0.0 && settings.initial_gain <= 1.0))
        throw ValidationError("initial_gain must be in (0, 1]");
    if (!(settings.convergence_threshold > 0.0))
        throw ValidationError("convergence_threshold must be positive");

    FitResult fit;
    fit.stats = model.stats();
    fit.observed_stats = statistic_vector(observed, model);
    fit.theta0 = initial_theta(observed, model);

    Theta theta = fit.theta0;
    std::uint64_t stream = 0;
    for (int attempt = 0; attempt <= settings.max_restarts; ++attempt) {
        Phase1Result phase1 = run_phase1(observed, model, theta, settings, cfg,
                                         mix_seed(cfg.seed, stream++));
        theta = run_phase2(observed, model, theta, fit.observed_stats, phase1.scaling, settings,
                           cfg, mix_seed(cfg.seed, stream++));
        Phase3Result phase3 = run_phase3(observed, model, theta, fit.observed_stats, settings,
                                         cfg, mix_seed(cfg.seed, stream++));
        fit.theta_hat = theta;
        fit.std_errors = phase3.std_errors;
        fit.conv_t_ratios = phase3.t_ratios;
        fit.param_covariance = phase3.param_covariance;
        fit.converged = phase3.converged;
        fit.restarts_used = attempt;
        if (fit.converged) break;
    }
    return fit;
}

std::vector<std::vector<double>> estimate_correlations(const FitResult& fit) {
    const std::size_t p = fit.param_covariance.size();
    if (p == 0) throw EstimationError("fit has no parameter covariance");
    std::vector<std::vector<double>> r(p, std::vector<double>(p, 0.0));
    for (std::size_t k = 0; k < p; ++k) {
        if (fit.param_covariance[k][k] <= 0.0)
            throw EstimationError("zero variance for parameter " + descriptor_name(fit.stats[k]));
        r[k][k] = 1.0;
    }
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = k + 1; l < p; ++l) {
            const double denom =
                std::sqrt(fit.param_covariance[k][k] * fit.param_covariance[l][l]);
            r[k][l] = r[l][k] = fit.param_covariance[k][l] / denom;
        }
    return r;
}

MultilevelNetwork make_lagged_network(const MultilevelNetwork& wave1,
                                      const MultilevelNetwork& wave2) {
    if (wave1.n_actors() != wave2.n_actors() || wave1.n_objects() != wave2.n_objects() ||
        wave1.actor_labels() != wave2.actor_labels() ||
        wave1.object_labels() != wave2.object_labels())
        throw ValidationError("lagged design requires conformed waves (run conform_waves first)");
    MultilevelNetwork out = wave2;
    for (int i = 0; i < out.n_actors(); ++i)
        for (int j = i + 1; j < out.n_actors(); ++j) {
            const DyadRef dyad{TieLevel::A, i, j};
            if (out.within_group(dyad)) out.set_tie(dyad, wave1.tie_a(i, j));
            else if (wave1.tie_a(i, j))
                throw ValidationError("wave-1 tie crosses wave-2 groups");
        }
    return out;
}

}  // namespace mergm
