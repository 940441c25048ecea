#include "mergm/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mergm {

namespace {

double dot(const Theta& theta, const StatVector& z) {
    double s = 0.0;
    for (std::size_t k = 0; k < theta.size(); ++k) s += theta[k] * z[k];
    return s;
}

std::vector<TieLevel> sorted_free_levels(const ModelSpec& model) {
    std::vector<TieLevel> levels(model.free_levels().begin(), model.free_levels().end());
    std::sort(levels.begin(), levels.end());
    return levels;
}

}  // namespace

MarkovChain::MarkovChain(MultilevelNetwork start, const ModelSpec& model, Theta theta,
                         std::uint64_t seed)
    : state_(std::move(start)), model_(model), theta_(std::move(theta)), rng_(seed) {
    if (model_.free_levels().empty())
        throw ValidationError("sampler needs at least one free level");
    if (theta_.size() != static_cast<std::size_t>(model_.size()))
        throw ValidationError("theta length does not match the model");
    for (double t : theta_)
        if (!std::isfinite(t)) throw ValidationError("theta has a non-finite entry");

    for (TieLevel level : sorted_free_levels(model_)) {
        dyads_per_level_.push_back(state_.toggleable_dyads(level));
        level_weights_.push_back(static_cast<double>(dyads_per_level_.back().size()));
        total_free_dyads_ += static_cast<long long>(dyads_per_level_.back().size());
    }
    if (total_free_dyads_ == 0)
        throw ValidationError("no toggleable dyads on the free levels");
    stats_ = statistic_vector(state_, model_);
}

void MarkovChain::set_theta(Theta theta) {
    if (theta.size() != static_cast<std::size_t>(model_.size()))
        throw ValidationError("theta length does not match the model");
    theta_ = std::move(theta);
}

void MarkovChain::set_level_weights(const std::map<TieLevel, double>& weights) {
    if (weights.empty()) return;
    std::vector<TieLevel> levels = sorted_free_levels(model_);
    for (std::size_t k = 0; k < levels.size(); ++k) {
        auto it = weights.find(levels[k]);
        level_weights_[k] = it == weights.end() ? 0.0 : it->second;
    }
    double total = 0.0;
    for (std::size_t k = 0; k < levels.size(); ++k)
        total += level_weights_[k] * (dyads_per_level_[k].empty() ? 0.0 : 1.0);
    if (total <= 0.0) throw ValidationError("level_choice leaves no proposable level");
}

bool MarkovChain::step() {
    int level_idx = 0;
    if (dyads_per_level_.size() > 1) level_idx = rng_.next_weighted(level_weights_);
    const std::vector<DyadRef>& dyads = dyads_per_level_[level_idx];
    const DyadRef dyad = dyads[rng_.next_index(static_cast<int>(dyads.size()))];

    StatVector delta = change_statistics(state_, dyad, model_);
    const bool present = state_.tie(dyad);
    // Δz signed toward the proposed state: removal negates the
    // presence-minus-absence convention.
    double log_ratio = dot(theta_, delta);
    if (present) log_ratio = -log_ratio;

    if (log_ratio >= 0.0 || rng_.next_double() < std::exp(log_ratio)) {
        state_.toggle(dyad);
        const double sign = present ? -1.0 : 1.0;
        for (std::size_t k = 0; k < stats_.size(); ++k) stats_[k] += sign * delta[k];
        return true;
    }
    return false;
}

MultilevelNetwork mh_step(const MultilevelNetwork& state, const Theta& theta,
                          const ModelSpec& model, Rng& rng) {
    // Value-level variant: same proposal scheme, RNG supplied by the caller.
    std::vector<TieLevel> levels(model.free_levels().begin(), model.free_levels().end());
    std::sort(levels.begin(), levels.end());
    std::vector<double> weights;
    long long total = 0;
    for (TieLevel level : levels) {
        const long long count = state.toggleable_dyad_count(level);
        weights.push_back(static_cast<double>(count));
        total += count;
    }
    if (total == 0) throw ValidationError("no toggleable dyads on the free levels");
    const TieLevel level = levels[weights.size() > 1 ? rng.next_weighted(weights)
                                                     : 0];
    const std::vector<DyadRef> dyads = state.toggleable_dyads(level);
    const DyadRef dyad = dyads[rng.next_index(static_cast<int>(dyads.size()))];

    StatVector delta = change_statistics(state, dyad, model);
    double log_ratio = dot(theta, delta);
    if (state.tie(dyad)) log_ratio = -log_ratio;
    if (log_ratio >= 0.0 || rng.next_double() < std::exp(log_ratio)) {
        MultilevelNetwork next = state;
        next.toggle(dyad);
        return next;
    }
    return state;
}

namespace {

// Batch-means standard error of the mean; robust to chain autocorrelation.
double batch_means_se(const std::vector<double>& path) {
    const std::size_t n = path.size();
    if (n < 4) return 0.0;
    const std::size_t n_batches = std::max<std::size_t>(2, std::min<std::size_t>(30, n / 2));
    const std::size_t batch = n / n_batches;
    std::vector<double> means;
    for (std::size_t b = 0; b + 1 <= n_batches; ++b) {
        double m = 0.0;
        for (std::size_t t = b * batch; t < (b + 1) * batch; ++t) m += path[t];
        means.push_back(m / batch);
    }
    double grand = 0.0;
    for (double m : means) grand += m;
    grand /= means.size();
    double ss = 0.0;
    for (double m : means) ss += (m - grand) * (m - grand);
    return std::sqrt(ss / (means.size() - 1) / means.size());
}

// Monotone (and not constant) over the final half of the path.
bool monotone_tail(const std::vector<double>& path) {
    const std::size_t n = path.size();
    if (n < 10) return false;
    const std::size_t start = n / 2;
    bool non_decreasing = true, non_increasing = true, moved = false;
    for (std::size_t t = start + 1; t < n; ++t) {
        const double d = path[t] - path[t - 1];
        if (d > 0) non_increasing = false;
        if (d < 0) non_decreasing = false;
        if (d != 0) moved = true;
    }
    return moved && (non_decreasing || non_increasing);
}

}  // namespace

SampleSummary simulate_sample(const MultilevelNetwork& start, const Theta& theta,
                              const ModelSpec& model, const ChainConfig& cfg,
                              bool keep_draws, const DrawCallback& on_draw) {
    if (cfg.burn_in < 0 || cfg.thinning < 1 || cfg.sample_size < 1)
        throw ValidationError("invalid chain configuration");

    MarkovChain chain(start, model, theta, cfg.seed);
    chain.set_level_weights(cfg.level_choice);

    SampleSummary out;
    const int p = model.size();
    std::vector<std::vector<double>> paths(p);

    for (long long t = 0; t < cfg.burn_in; ++t) {
        out.accepted_steps += chain.step();
        ++out.total_steps;
    }
    for (int draw = 0; draw < cfg.sample_size; ++draw) {
        for (long long t = 0; t < cfg.thinning; ++t) {
            out.accepted_steps += chain.step();
            ++out.total_steps;
        }
        const StatVector& z = chain.stats();
        for (int k = 0; k < p; ++k) paths[k].push_back(z[k]);
        if (keep_draws) out.retained.push_back(z);
        if (on_draw) on_draw(chain.state(), z);
    }

    out.mean.resize(p);
    out.sd.resize(p);
    out.mc_se.resize(p);
    for (int k = 0; k < p; ++k) {
        double m = 0.0;
        for (double v : paths[k]) m += v;
        m /= cfg.sample_size;
        double ss = 0.0;
        for (double v : paths[k]) ss += (v - m) * (v - m);
        out.mean[k] = m;
        out.sd[k] = cfg.sample_size > 1 ? std::sqrt(ss / (cfg.sample_size - 1)) : 0.0;
        out.mc_se[k] = batch_means_se(paths[k]);
        if (monotone_tail(paths[k])) {
            out.degeneracy_flag = true;
            out.degenerate_stats.push_back(k);
        }
    }
    out.final_state = chain.state();
    return out;
}

std::vector<std::vector<double>> ExactDistribution::covariance() const {
    const std::size_t p = expectation.size();
    std::vector<std::vector<double>> cov(p, std::vector<double>(p, 0.0));
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < p; ++l)
            cov[k][l] = second_moment[k][l] - expectation[k] * expectation[l];
    return cov;
}

ExactDistribution exact_enumerate(const MultilevelNetwork& start, const ModelSpec& model,
                                  const Theta& theta) {
    if (theta.size() != static_cast<std::size_t>(model.size()))
        throw ValidationError("theta length does not match the model");

    std::vector<DyadRef> dyads;
    for (TieLevel level : sorted_free_levels(model)) {
        std::vector<DyadRef> d = start.toggleable_dyads(level);
        dyads.insert(dyads.end(), d.begin(), d.end());
    }
    const int n_dyads = static_cast<int>(dyads.size());
    if (n_dyads > 25)
        throw ValidationError("state space too large for exact enumeration (" +
                              std::to_string(n_dyads) + " dyads)");

    const int p = model.size();
    const long long n_states = 1LL << n_dyads;

    // Gray-code walk: exactly one toggle per visited state. Two passes keep
    // memory flat: the first finds max log-weight for a stable log-sum-exp.
    auto walk = [&](auto&& visit) {
        MultilevelNetwork net = start;
        for (const DyadRef& dyad : dyads) net.set_tie(dyad, false);
        StatVector z = statistic_vector(net, model);
        visit(z);
        for (long long s = 1; s < n_states; ++s) {
            int bit = 0;
            while (!((s >> bit) & 1)) ++bit;  // Gray code flips the lowest set bit position
            const DyadRef& dyad = dyads[bit];
            StatVector delta = change_statistics(net, dyad, model);
            const double sign = net.tie(dyad) ? -1.0 : 1.0;
            net.toggle(dyad);
            for (int k = 0; k < p; ++k) z[k] += sign * delta[k];
            visit(z);
        }
    };

    double max_logw = -std::numeric_limits<double>::infinity();
    walk([&](const StatVector& z) { max_logw = std::max(max_logw, dot(theta, z)); });

    ExactDistribution out;
    out.n_states = n_states;
    out.expectation.assign(p, 0.0);
    out.second_moment.assign(p, std::vector<double>(p, 0.0));
    double total = 0.0;
    walk([&](const StatVector& z) {
        const double w = std::exp(dot(theta, z) - max_logw);
        total += w;
        for (int k = 0; k < p; ++k) {
            out.expectation[k] += w * z[k];
            for (int l = k; l < p; ++l) out.second_moment[k][l] += w * z[k] * z[l];
        }
    });
    for (int k = 0; k < p; ++k) {
        out.expectation[k] /= total;
        for (int l = k; l < p; ++l) {
            out.second_moment[k][l] /= total;
            out.second_moment[l][k] = out.second_moment[k][l];
        }
    }
    out.log_z = max_logw + std::log(total);
    return out;
}

}  // namespace mergm
