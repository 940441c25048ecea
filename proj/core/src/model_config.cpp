#include "mergm/model_config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mergm {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ValidationError(std::string("invalid JSON in ") + what);
    return j;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

TieLevel parse_level(const std::string& token) {
    if (token == "A" || token == "a") return TieLevel::A;
    if (token == "B" || token == "b") return TieLevel::B;
    if (token == "X" || token == "x") return TieLevel::X;
    throw ValidationError("unknown level '" + token + "' (expected A, B or X)");
}

}  // namespace

ModelSpec parse_model_spec(const std::string& json_text) {
    json j = parse_or_throw(json_text, "model spec");
    if (!j.contains("stats") || !j["stats"].is_array())
        throw ValidationError("model spec needs a 'stats' array");

    std::vector<StatDescriptor> stats;
    for (const json& item : j["stats"]) {
        StatDescriptor desc;
        const std::string id = item.is_string() ? item.get<std::string>()
                                                : item.value("id", std::string());
        auto stat = find_stat(id);
        if (!stat) throw ValidationError("unknown statistic '" + id + "'");
        desc.id = *stat;
        if (item.is_object()) {
            desc.lambda = item.value("lambda", 2.0);
            desc.attribute = item.value("attribute", std::string());
        }
        stats.push_back(std::move(desc));
    }

    std::set<TieLevel> free_levels;
    if (j.contains("free_levels")) {
        for (const json& level : j["free_levels"]) free_levels.insert(parse_level(level.get<std::string>()));
    } else {
        free_levels = {TieLevel::A, TieLevel::B, TieLevel::X};
    }
    return ModelSpec(std::move(stats), std::move(free_levels));
}

ModelSpec load_model_spec(const std::string& path) { return parse_model_spec(slurp(path)); }

ChainConfig parse_chain_config(const std::string& json_text) {
    json j = parse_or_throw(json_text, "chain config");
    ChainConfig cfg;
    cfg.burn_in = j.value("burn_in", cfg.burn_in);
    cfg.thinning = j.value("thinning", cfg.thinning);
    cfg.sample_size = j.value("sample_size", cfg.sample_size);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("level_choice"))
        for (auto& [key, value] : j["level_choice"].items())
            cfg.level_choice[parse_level(key)] = value.get<double>();
    if (cfg.burn_in < 0 || cfg.thinning < 1 || cfg.sample_size < 1)
        throw ValidationError("chain config out of range");
    return cfg;
}

ChainConfig load_chain_config(const std::string& path) { return parse_chain_config(slurp(path)); }

EstimationSettings parse_estimation_settings(const std::string& json_text) {
    json j = parse_or_throw(json_text, "estimation settings");
    EstimationSettings s;
    s.phase1_draws = j.value("phase1_draws", s.phase1_draws);
    s.subphase_count = j.value("subphase_count", s.subphase_count);
    s.initial_gain = j.value("initial_gain", s.initial_gain);
    s.phase3_draws = j.value("phase3_draws", s.phase3_draws);
    s.max_restarts = j.value("max_restarts", s.max_restarts);
    s.convergence_threshold = j.value("convergence_threshold", s.convergence_threshold);
    s.full_matrix_scaling = j.value("full_matrix_scaling", s.full_matrix_scaling);
    return s;
}

EstimationSettings load_estimation_settings(const std::string& path) {
    return parse_estimation_settings(slurp(path));
}

}  // namespace mergm
