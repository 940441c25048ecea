#include "mergm/statistics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>

namespace mergm {

namespace {

double binom(int n, int k) {
    if (n < k || k < 0) return 0.0;
    double r = 1.0;
    for (int t = 0; t < k; ++t) r = r * (n - t) / (t + 1);
    return r;
}

// Node term of the alternating-star statistic: (1-1/λ)^d + d/λ - 1.
double alt_star_term(int degree, double lambda) {
    return std::pow(1.0 - 1.0 / lambda, degree) + degree / lambda - 1.0;
}

double damp(int count, double lambda) { return std::pow(1.0 - 1.0 / lambda, count); }

// Shared-partner term of alternating triangles/two-paths: λ(1-(1-1/λ)^s).
double alt_tri_term(int shared, double lambda) { return lambda * (1.0 - damp(shared, lambda)); }

// Alternating 4-cycle term over shared-object counts; zero until two shared.
double alt4_term(int shared, double lambda) {
    return shared < 1 ? 0.0 : lambda * (1.0 - damp(shared - 1, lambda));
}

double sample_stddev(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    if (n < 2) return 0.0;
    double mean = 0.0;
    for (int v : values) mean += v;
    mean /= n;
    double ss = 0.0;
    for (int v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / (n - 1));
}

// Adjusted Fisher-Pearson sample skewness; 0 for degenerate sequences.
double sample_skewness(const std::vector<int>& values) {
    const int n = static_cast<int>(values.size());
    if (n < 3) return 0.0;
    double mean = 0.0;
    for (int v : values) mean += v;
    mean /= n;
    double m2 = 0.0, m3 = 0.0;
    for (int v : values) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    if (m2 <= 0.0) return 0.0;
    const double g1 = m3 / std::pow(m2, 1.5);
    return g1 * std::sqrt(static_cast<double>(n) * (n - 1)) / (n - 2);
}

const StatInfo kCatalog[] = {
    // id, name, level, lambda, attribute, count, model_usable, touches A/B/X
    {StatId::EdgeA, "EdgeA", StatLevel::A, false, false, true, true, true, false, false},
    {StatId::Star2A, "Star2A", StatLevel::A, false, false, true, true, true, false, false},
    {StatId::Star3A, "Star3A", StatLevel::A, false, false, true, true, true, false, false},
    {StatId::Star4A, "Star4A", StatLevel::A, false, false, true, true, true, false, false},
    {StatId::Star5A, "Star5A", StatLevel::A, false, false, true, true, true, false, false},
    {StatId::TriangleA, "TriangleA", StatLevel::A, false, false, true, true, true, false, false},
    {StatId::Cycle4A, "Cycle4A", StatLevel::A, false, false, true, true, true, false, false},
    {StatId::IsolatesA, "IsolatesA", StatLevel::A, false, false, true, true, true, false, false},
    {StatId::IsolateEdgesA, "IsolateEdgesA", StatLevel::A, false, false, true, true, true, false, false},
    {StatId::ASA, "ASA", StatLevel::A, true, false, false, true, true, false, false},
    {StatId::ATA, "ATA", StatLevel::A, true, false, false, true, true, false, false},
    {StatId::A2PA, "A2PA", StatLevel::A, true, false, false, true, true, false, false},
    {StatId::MatchA, "MatchA", StatLevel::A, false, true, true, true, true, false, false},
    {StatId::MismatchA, "MismatchA", StatLevel::A, false, true, true, true, true, false, false},
    {StatId::EdgeB, "EdgeB", StatLevel::B, false, false, true, true, false, true, false},
    {StatId::Star2B, "Star2B", StatLevel::B, false, false, true, true, false, true, false},
    {StatId::Star3B, "Star3B", StatLevel::B, false, false, true, true, false, true, false},
    {StatId::Star4B, "Star4B", StatLevel::B, false, false, true, true, false, true, false},
    {StatId::Star5B, "Star5B", StatLevel::B, false, false, true, true, false, true, false},
    {StatId::TriangleB, "TriangleB", StatLevel::B, false, false, true, true, false, true, false},
    {StatId::Cycle4B, "Cycle4B", StatLevel::B, false, false, true, true, false, true, false},
    {StatId::IsolatesB, "IsolatesB", StatLevel::B, false, false, true, true, false, true, false},
    {StatId::IsolateEdgesB, "IsolateEdgesB", StatLevel::B, false, false, true, true, false, true, false},
    {StatId::ASB, "ASB", StatLevel::B, true, false, false, true, false, true, false},
    {StatId::ATB, "ATB", StatLevel::B, true, false, false, true, false, true, false},
    {StatId::A2PB, "A2PB", StatLevel::B, true, false, false, true, false, true, false},
    {StatId::XEdge, "XEdge", StatLevel::X, false, false, true, true, false, false, true},
    {StatId::XStar2A, "XStar2A", StatLevel::X, false, false, true, true, false, false, true},
    {StatId::XStar2B, "XStar2B", StatLevel::X, false, false, true, true, false, false, true},
    {StatId::XStar3A, "XStar3A", StatLevel::X, false, false, true, true, false, false, true},
    {StatId::XStar3B, "XStar3B", StatLevel::X, false, false, true, true, false, false, true},
    {StatId::X3Path, "X3Path", StatLevel::X, false, false, true, true, false, false, true},
    {StatId::X3PathNC, "X3PathNC", StatLevel::X, false, false, true, true, false, false, true},
    {StatId::X4Cycle, "X4Cycle", StatLevel::X, false, false, true, true, false, false, true},
    {StatId::XASA, "XASA", StatLevel::X, true, false, false, true, false, false, true},
    {StatId::XASB, "XASB", StatLevel::X, true, false, false, true, false, false, true},
    {StatId::Alt4CycleA, "ALT4CYC_A", StatLevel::X, true, false, false, true, false, false, true},
    {StatId::XMatchB, "XMatchB", StatLevel::X, false, true, true, true, false, false, true},
    {StatId::XMismatchB, "XMismatchB", StatLevel::X, false, true, true, true, false, false, true},
    {StatId::X4CycleMatch, "X4CycleMatch", StatLevel::X, false, true, true, true, false, false, true},
    {StatId::X4CycleMismatch, "X4CycleMismatch", StatLevel::X, false, true, true, true, false, false, true},
    {StatId::IsolatesXA, "IsolatesXA", StatLevel::X, false, false, true, true, false, false, true},
    {StatId::IsolatesXB, "IsolatesXB", StatLevel::X, false, false, true, true, false, false, true},
    {StatId::Star2AX, "Star2AX", StatLevel::Cross, false, false, true, true, true, false, true},
    {StatId::StarAXAA, "StarAXAA", StatLevel::Cross, false, false, true, true, true, false, true},
    {StatId::TriangleXAX, "TriangleXAX", StatLevel::Cross, false, false, true, true, true, false, true},
    {StatId::ATXAX, "ATXAX", StatLevel::Cross, true, false, false, true, true, false, true},
    {StatId::L3XAX, "L3XAX", StatLevel::Cross, false, false, true, true, true, false, true},
    {StatId::TXAXMatch, "TXAXMatch", StatLevel::Cross, false, true, true, true, true, false, true},
    {StatId::TXAXMismatch, "TXAXMismatch", StatLevel::Cross, false, true, true, true, true, false, true},
    {StatId::TriangleXBX, "TriangleXBX", StatLevel::Cross, false, false, true, true, false, true, true},
    {StatId::ATXBX, "ATXBX", StatLevel::Cross, true, false, false, true, false, true, true},
    {StatId::L3XBX, "L3XBX", StatLevel::Cross, false, false, true, true, false, true, true},
    {StatId::L3AXB, "L3AXB", StatLevel::Cross, false, false, true, true, true, true, true},
    {StatId::C4AXB, "C4AXB", StatLevel::Cross, false, false, true, true, true, true, true},
    {StatId::StddevDegreeA, "stddev_degreeA", StatLevel::A, false, false, false, false, true, false, false},
    {StatId::SkewDegreeA, "skew_degreeA", StatLevel::A, false, false, false, false, true, false, false},
    {StatId::StddevDegreeB, "stddev_degreeB", StatLevel::B, false, false, false, false, false, true, false},
    {StatId::SkewDegreeB, "skew_degreeB", StatLevel::B, false, false, false, false, false, true, false},
    {StatId::StddevDegreeXA, "stddev_degreeX_A", StatLevel::X, false, false, false, false, false, false, true},
    {StatId::SkewDegreeXA, "skew_degreeX_A", StatLevel::X, false, false, false, false, false, false, true},
    {StatId::StddevDegreeXB, "stddev_degreeX_B", StatLevel::X, false, false, false, false, false, false, true},
    {StatId::SkewDegreeXB, "skew_degreeX_B", StatLevel::X, false, false, false, false, false, false, true},
    {StatId::ClusteringA, "clusteringA", StatLevel::A, false, false, false, false, true, false, false},
    {StatId::ClusteringB, "clusteringB", StatLevel::B, false, false, false, false, false, true, false},
    {StatId::ClusteringX, "clusteringX", StatLevel::X, false, false, false, false, false, false, true},
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Accepted spellings beyond catalog ids: English pattern labels and a few
// legacy variants.
const std::unordered_map<std::string, StatId>& alias_table() {
    static const std::unordered_map<std::string, StatId> table = [] {
        std::unordered_map<std::string, StatId> t;
        for (const StatInfo& info : kCatalog) t.emplace(lower(info.name), info.id);
        auto add = [&t](const char* name, StatId id) { t.emplace(lower(name), id); };
        add("X2StarMatch", StatId::XMatchB);
        add("X2StarMismatch", StatId::XMismatchB);
        add("IsolatedEdgesA", StatId::IsolateEdgesA);
        add("IsolatedEdgesB", StatId::IsolateEdgesB);
        add("Edge (A)", StatId::EdgeA);
        add("Edge (B)", StatId::EdgeB);
        add("2-star (A)", StatId::Star2A);
        add("2-stars (A)", StatId::Star2A);
        add("2-star (B)", StatId::Star2B);
        add("Degree spread (A)", StatId::ASA);
        add("Degree distribution (A)", StatId::ASA);
        add("Degree spread (B)", StatId::ASB);
        add("Degree distribution (B)", StatId::ASB);
        add("Triadic closure (A)", StatId::ATA);
        add("Triadic closure (B)", StatId::ATB);
        add("Tie between actors with same attribute value", StatId::MatchA);
        add("Ties between actors with same attribute value", StatId::MatchA);
        add("Actor using object", StatId::XEdge);
        add("Actors using objects", StatId::XEdge);
        add("Object usage degree of actors", StatId::XASA);
        add("Usage degree of objects", StatId::XASB);
        add("Pair of actors sharing an object", StatId::XStar2B);
        add("Pairs of objects used by actors", StatId::XStar2A);
        add("Pair of actors sharing objects", StatId::Alt4CycleA);
        add("Pair of actors sharing multiple objects", StatId::Alt4CycleA);
        add("Actors with same attribute values sharing object", StatId::XMatchB);
        add("Usage of objects that are part of material contexts", StatId::TriangleXBX);
        add("Engagement with same materiality", StatId::L3XBX);
        add("Influence of social ties on usage of objects", StatId::Star2AX);
        add("Influence of dyadic social ties on usage of objects", StatId::StarAXAA);
        add("Influence of social ties on usage of objects in dyads", StatId::StarAXAA);
        add("Influence of dyadic social ties on object sharing", StatId::TriangleXAX);
        add("Influence of dyadic social ties between actors with same attribute values on object sharing",
            StatId::TXAXMatch);
        add("Influence of dyadic social ties on engagement with the same material context",
            StatId::C4AXB);
        return t;
    }();
    return table;
}

}  // namespace

const std::vector<StatInfo>& stat_catalog() {
    static const std::vector<StatInfo> catalog(std::begin(kCatalog), std::end(kCatalog));
    return catalog;
}

const StatInfo& stat_info(StatId id) {
    for (const StatInfo& info : kCatalog)
        if (info.id == id) return info;
    throw ValidationError("unknown catalog id");
}

const char* stat_name(StatId id) { return stat_info(id).name; }

std::optional<StatId> find_stat(const std::string& name) {
    const auto& table = alias_table();
    auto it = table.find(lower(name));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::string stat_label(StatId id) {
    switch (id) {
        case StatId::EdgeA: case StatId::EdgeB: return "Edge";
        case StatId::Star2A: case StatId::Star2B: return "2-star";
        case StatId::ASA: case StatId::ASB: return "Degree distribution";
        case StatId::ATA: case StatId::ATB: return "Triadic closure";
        case StatId::MatchA: return "Ties between actors with same attribute value";
        case StatId::MismatchA: return "Ties between actors with different attribute value";
        case StatId::XEdge: return "Actors using objects";
        case StatId::XASA: return "Object usage degree of actors";
        case StatId::XASB: return "Usage degree of objects";
        case StatId::XStar2A: return "Pairs of objects used by actors";
        case StatId::XStar2B: return "Pair of actors sharing an object";
        case StatId::Alt4CycleA: return "Pair of actors sharing multiple objects";
        case StatId::XMatchB: return "Objects shared by actors with same attribute value";
        case StatId::XMismatchB: return "Objects shared by actors with different attribute value";
        case StatId::TriangleXBX: return "Usage of objects that are part of material contexts";
        case StatId::L3XBX: return "Engagement with same materiality";
        case StatId::Star2AX: return "Influence of social ties on usage of objects";
        case StatId::StarAXAA: return "Influence of social ties on usage of objects in dyads";
        case StatId::TriangleXAX: return "Influence of dyadic social ties on object sharing";
        case StatId::TXAXMatch:
            return "Influence of dyadic social ties between actors with same attribute values on object sharing";
        case StatId::TXAXMismatch:
            return "Influence of dyadic social ties between actors with different attribute values on object sharing";
        case StatId::C4AXB:
            return "Influence of dyadic social ties on engagement with the same material context";
        default: return stat_name(id);
    }
}

std::string descriptor_name(const StatDescriptor& desc) {
    if (desc.attribute.empty()) return stat_name(desc.id);
    std::string attr = desc.attribute;
    attr[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(attr[0])));
    return attr + "_" + stat_name(desc.id);
}

ModelSpec::ModelSpec(std::vector<StatDescriptor> stats, std::set<TieLevel> free_levels)
    : stats_(std::move(stats)), free_levels_(std::move(free_levels)) {
    if (stats_.empty()) throw ValidationError("model needs at least one statistic");
    for (std::size_t k = 0; k < stats_.size(); ++k) {
        const StatInfo& info = stat_info(stats_[k].id);
        if (!info.model_usable)
            throw ValidationError(std::string(info.name) + " is a GOF summary, not a model statistic");
        if (info.uses_lambda && !(stats_[k].lambda > 1.0))
            throw ValidationError(std::string(info.name) + " requires lambda > 1");
        if (info.uses_attribute && stats_[k].attribute.empty())
            throw ValidationError(std::string(info.name) + " requires an attribute binding");
        if (!info.uses_attribute && !stats_[k].attribute.empty())
            throw ValidationError(std::string(info.name) + " does not take an attribute");
        for (std::size_t m = 0; m < k; ++m)
            if (stats_[m] == stats_[k])
                throw ValidationError("duplicate statistic descriptor " + descriptor_name(stats_[k]));
    }
    for (TieLevel level : free_levels_) {
        bool touched = false;
        for (const StatDescriptor& d : stats_) {
            const StatInfo& info = stat_info(d.id);
            touched = touched || (level == TieLevel::A && info.touches_a) ||
                      (level == TieLevel::B && info.touches_b) ||
                      (level == TieLevel::X && info.touches_x);
        }
        if (!touched)
            throw ValidationError(std::string("free level ") + to_string(level) +
                                  " has no statistic touching it");
    }
}

namespace {

int attribute_index(const MultilevelNetwork& net, const StatDescriptor& desc) {
    const int idx = net.attributes().find(desc.attribute);
    if (idx < 0) throw ValidationError("unknown attribute '" + desc.attribute + "'");
    return idx;
}

bool attr_match(const MultilevelNetwork& net, int attr, int i, int j) {
    return net.attributes().code(attr, i) == net.attributes().code(attr, j);
}

// ---------------------------------------------------------------------------
// global statistics

double global_one_mode(const MultilevelNetwork& net, const StatDescriptor& desc, bool level_a) {
    const int n = level_a ? net.n_actors() : net.n_objects();
    auto deg = [&](int i) { return level_a ? net.degree_a(i) : net.degree_b(i); };
    auto tie = [&](int i, int j) { return level_a ? net.tie_a(i, j) : net.tie_b(i, j); };
    auto shared = [&](int i, int j) {
        return level_a ? net.shared_a_partners(i, j) : net.shared_b_partners(i, j);
    };
    switch (desc.id) {
        case StatId::EdgeA: case StatId::EdgeB:
            return static_cast<double>(net.tie_count(level_a ? TieLevel::A : TieLevel::B));
        case StatId::Star2A: case StatId::Star2B: {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += binom(deg(i), 2);
            return s;
        }
        case StatId::Star3A: case StatId::Star3B: {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += binom(deg(i), 3);
            return s;
        }
        case StatId::Star4A: case StatId::Star4B: {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += binom(deg(i), 4);
            return s;
        }
        case StatId::Star5A: case StatId::Star5B: {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += binom(deg(i), 5);
            return s;
        }
        case StatId::TriangleA: case StatId::TriangleB: {
            long long t = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (tie(i, j)) t += shared(i, j);
            return static_cast<double>(t / 3);
        }
        case StatId::Cycle4A: case StatId::Cycle4B: {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) s += binom(shared(i, j), 2);
            return s / 2.0;
        }
        case StatId::IsolatesA: case StatId::IsolatesB: {
            int s = 0;
            for (int i = 0; i < n; ++i) s += deg(i) == 0;
            return s;
        }
        case StatId::IsolateEdgesA: case StatId::IsolateEdgesB: {
            int s = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) s += tie(i, j) && deg(i) == 1 && deg(j) == 1;
            return s;
        }
        case StatId::ASA: case StatId::ASB: {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += alt_star_term(deg(i), desc.lambda);
            return desc.lambda * desc.lambda * s;
        }
        case StatId::ATA: case StatId::ATB: {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (tie(i, j)) s += alt_tri_term(shared(i, j), desc.lambda);
            return s;
        }
        case StatId::A2PA: case StatId::A2PB: {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) s += alt_tri_term(shared(i, j), desc.lambda);
            return s;
        }
        default: break;
    }
    throw ValidationError("not a one-mode statistic");
}

std::vector<int> degree_sequence(const MultilevelNetwork& net, StatId id) {
    std::vector<int> d;
    switch (id) {
        case StatId::StddevDegreeA: case StatId::SkewDegreeA:
            d.resize(net.n_actors());
            for (int i = 0; i < net.n_actors(); ++i) d[i] = net.degree_a(i);
            break;
        case StatId::StddevDegreeB: case StatId::SkewDegreeB:
            d.resize(net.n_objects());
            for (int o = 0; o < net.n_objects(); ++o) d[o] = net.degree_b(o);
            break;
        case StatId::StddevDegreeXA: case StatId::SkewDegreeXA:
            d.resize(net.n_actors());
            for (int i = 0; i < net.n_actors(); ++i) d[i] = net.degree_x_actor(i);
            break;
        default:
            d.resize(net.n_objects());
            for (int o = 0; o < net.n_objects(); ++o) d[o] = net.degree_x_object(o);
            break;
    }
    return d;
}

}  // namespace

double global_statistic(const MultilevelNetwork& net, const StatDescriptor& desc) {
    const int na = net.n_actors(), no = net.n_objects();
    const double lambda = desc.lambda;

    switch (desc.id) {
        case StatId::EdgeA: case StatId::Star2A: case StatId::Star3A: case StatId::Star4A:
        case StatId::Star5A: case StatId::TriangleA: case StatId::Cycle4A: case StatId::IsolatesA:
        case StatId::IsolateEdgesA: case StatId::ASA: case StatId::ATA: case StatId::A2PA:
            return global_one_mode(net, desc, true);
        case StatId::EdgeB: case StatId::Star2B: case StatId::Star3B: case StatId::Star4B:
        case StatId::Star5B: case StatId::TriangleB: case StatId::Cycle4B: case StatId::IsolatesB:
        case StatId::IsolateEdgesB: case StatId::ASB: case StatId::ATB: case StatId::A2PB:
            return global_one_mode(net, desc, false);

        case StatId::MatchA: case StatId::MismatchA: {
            const int attr = attribute_index(net, desc);
            const bool want = desc.id == StatId::MatchA;
            long long s = 0;
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j)
                    s += net.tie_a(i, j) && attr_match(net, attr, i, j) == want;
            return static_cast<double>(s);
        }

        case StatId::XEdge:
            return static_cast<double>(net.tie_count(TieLevel::X));
        case StatId::XStar2A: {
            double s = 0.0;
            for (int i = 0; i < na; ++i) s += binom(net.degree_x_actor(i), 2);
            return s;
        }
        case StatId::XStar3A: {
            double s = 0.0;
            for (int i = 0; i < na; ++i) s += binom(net.degree_x_actor(i), 3);
            return s;
        }
        case StatId::XStar2B: {
            double s = 0.0;
            for (int o = 0; o < no; ++o) s += binom(net.degree_x_object(o), 2);
            return s;
        }
        case StatId::XStar3B: {
            double s = 0.0;
            for (int o = 0; o < no; ++o) s += binom(net.degree_x_object(o), 3);
            return s;
        }
        case StatId::X3Path: {
            double s = 0.0;
            for (int i = 0; i < na; ++i)
                for (int o = 0; o < no; ++o)
                    if (net.tie_x(i, o))
                        s += static_cast<double>(net.degree_x_actor(i) - 1) *
                             (net.degree_x_object(o) - 1);
            return s;
        }
        case StatId::X4Cycle: {
            double s = 0.0;
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j) s += binom(net.shared_objects(i, j), 2);
            return s;
        }
        case StatId::X3PathNC:
            // each closed endpoint pair is one K_{2,2}, hit once per its 4 edges
            return global_statistic(net, StatDescriptor{StatId::X3Path}) -
                   4.0 * global_statistic(net, StatDescriptor{StatId::X4Cycle});
        case StatId::XASA: {
            double s = 0.0;
            for (int i = 0; i < na; ++i) s += alt_star_term(net.degree_x_actor(i), lambda);
            return lambda * lambda * s;
        }
        case StatId::XASB: {
            double s = 0.0;
            for (int o = 0; o < no; ++o) s += alt_star_term(net.degree_x_object(o), lambda);
            return lambda * lambda * s;
        }
        case StatId::Alt4CycleA: {
            double s = 0.0;
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j) s += alt4_term(net.shared_objects(i, j), lambda);
            return s;
        }
        case StatId::XMatchB: case StatId::XMismatchB: {
            const int attr = attribute_index(net, desc);
            const bool want = desc.id == StatId::XMatchB;
            long long s = 0;
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j)
                    if (attr_match(net, attr, i, j) == want) s += net.shared_objects(i, j);
            return static_cast<double>(s);
        }
        case StatId::X4CycleMatch: case StatId::X4CycleMismatch: {
            const int attr = attribute_index(net, desc);
            const bool want = desc.id == StatId::X4CycleMatch;
            double s = 0.0;
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j)
                    if (attr_match(net, attr, i, j) == want) s += binom(net.shared_objects(i, j), 2);
            return s;
        }
        case StatId::IsolatesXA: {
            int s = 0;
            for (int i = 0; i < na; ++i) s += net.degree_x_actor(i) == 0;
            return s;
        }
        case StatId::IsolatesXB: {
            int s = 0;
            for (int o = 0; o < no; ++o) s += net.degree_x_object(o) == 0;
            return s;
        }

        case StatId::Star2AX: {
            double s = 0.0;
            for (int i = 0; i < na; ++i)
                s += static_cast<double>(net.degree_a(i)) * net.degree_x_actor(i);
            return s;
        }
        case StatId::StarAXAA: {
            double s = 0.0;
            for (int i = 0; i < na; ++i) s += net.degree_x_actor(i) * binom(net.degree_a(i), 2);
            return s;
        }
        case StatId::TriangleXAX: {
            long long s = 0;
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j)
                    if (net.tie_a(i, j)) s += net.shared_objects(i, j);
            return static_cast<double>(s);
        }
        case StatId::ATXAX: {
            double s = 0.0;
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j)
                    if (net.tie_a(i, j)) s += alt_tri_term(net.shared_objects(i, j), lambda);
            return s;
        }
        case StatId::L3XAX: {
            double s = 0.0;
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j)
                    if (net.tie_a(i, j))
                        s += static_cast<double>(net.degree_x_actor(i)) * net.degree_x_actor(j) -
                             net.shared_objects(i, j);
            return s;
        }
        case StatId::TXAXMatch: case StatId::TXAXMismatch: {
            const int attr = attribute_index(net, desc);
            const bool want = desc.id == StatId::TXAXMatch;
            long long s = 0;
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j)
                    if (net.tie_a(i, j) && attr_match(net, attr, i, j) == want)
                        s += net.shared_objects(i, j);
            return static_cast<double>(s);
        }
        case StatId::TriangleXBX: {
            long long s = 0;
            for (int o = 0; o < no; ++o)
                for (int p = o + 1; p < no; ++p)
                    if (net.tie_b(o, p)) s += net.shared_actors(o, p);
            return static_cast<double>(s);
        }
        case StatId::ATXBX: {
            double s = 0.0;
            for (int o = 0; o < no; ++o)
                for (int p = o + 1; p < no; ++p)
                    if (net.tie_b(o, p)) s += alt_tri_term(net.shared_actors(o, p), lambda);
            return s;
        }
        case StatId::L3XBX: {
            double s = 0.0;
            for (int o = 0; o < no; ++o)
                for (int p = o + 1; p < no; ++p)
                    if (net.tie_b(o, p))
                        s += static_cast<double>(net.degree_x_object(o)) * net.degree_x_object(p) -
                             net.shared_actors(o, p);
            return s;
        }
        case StatId::L3AXB: {
            double s = 0.0;
            for (int i = 0; i < na; ++i)
                for (int o = 0; o < no; ++o)
                    if (net.tie_x(i, o))
                        s += static_cast<double>(net.degree_a(i)) * net.degree_b(o);
            return s;
        }
        case StatId::C4AXB: {
            long long s = 0;
            for (int i = 0; i < na; ++i)
                for (int j = i + 1; j < na; ++j) {
                    if (!net.tie_a(i, j)) continue;
                    for (int o = 0; o < no; ++o)
                        for (int p = o + 1; p < no; ++p) {
                            if (!net.tie_b(o, p)) continue;
                            s += (net.tie_x(i, o) && net.tie_x(j, p)) +
                                 (net.tie_x(i, p) && net.tie_x(j, o));
                        }
                }
            return static_cast<double>(s);
        }

        case StatId::StddevDegreeA: case StatId::StddevDegreeB: case StatId::StddevDegreeXA:
        case StatId::StddevDegreeXB:
            return sample_stddev(degree_sequence(net, desc.id));
        case StatId::SkewDegreeA: case StatId::SkewDegreeB: case StatId::SkewDegreeXA:
        case StatId::SkewDegreeXB:
            return sample_skewness(degree_sequence(net, desc.id));
        case StatId::ClusteringA: case StatId::ClusteringB: {
            const bool is_a = desc.id == StatId::ClusteringA;
            const double tri = global_statistic(
                net, StatDescriptor{is_a ? StatId::TriangleA : StatId::TriangleB});
            const double star2 =
                global_statistic(net, StatDescriptor{is_a ? StatId::Star2A : StatId::Star2B});
            return star2 > 0.0 ? 3.0 * tri / star2 : 0.0;
        }
        case StatId::ClusteringX: {
            const double c4 = global_statistic(net, StatDescriptor{StatId::X4Cycle});
            const double p3 = global_statistic(net, StatDescriptor{StatId::X3Path});
            return p3 > 0.0 ? 4.0 * c4 / p3 : 0.0;
        }
    }
    throw ValidationError("unknown catalog id");
}

StatVector statistic_vector(const MultilevelNetwork& net, const ModelSpec& model) {
    StatVector out(model.size());
    for (int k = 0; k < model.size(); ++k) out[k] = global_statistic(net, model.stats()[k]);
    return out;
}

namespace {

// Adjacency view with the focal dyad forced absent; all change-statistic
// formulas are written against this view, so they never depend on the focal
// tie's current state.
struct FocalView {
    const MultilevelNetwork& g;
    DyadRef focal;

    bool a(int i, int j) const {
        if (focal.level == TieLevel::A &&
            ((focal.first == i && focal.second == j) || (focal.first == j && focal.second == i)))
            return false;
        return g.tie_a(i, j);
    }
    bool b(int o, int p) const {
        if (focal.level == TieLevel::B &&
            ((focal.first == o && focal.second == p) || (focal.first == p && focal.second == o)))
            return false;
        return g.tie_b(o, p);
    }
    bool x(int i, int o) const {
        if (focal.level == TieLevel::X && focal.first == i && focal.second == o) return false;
        return g.tie_x(i, o);
    }

    bool focal_present() const { return g.tie(focal); }
    bool focal_touches(TieLevel level, int idx, bool first_side) const {
        if (focal.level != level) return false;
        return first_side ? focal.first == idx : focal.second == idx;
    }

    int deg_a(int i) const {
        int d = g.degree_a(i);
        if (focal.level == TieLevel::A && (focal.first == i || focal.second == i) && focal_present())
            --d;
        return d;
    }
    int deg_b(int o) const {
        int d = g.degree_b(o);
        if (focal.level == TieLevel::B && (focal.first == o || focal.second == o) && focal_present())
            --d;
        return d;
    }
    int deg_x_actor(int i) const {
        int d = g.degree_x_actor(i);
        if (focal.level == TieLevel::X && focal.first == i && focal_present()) --d;
        return d;
    }
    int deg_x_object(int o) const {
        int d = g.degree_x_object(o);
        if (focal.level == TieLevel::X && focal.second == o && focal_present()) --d;
        return d;
    }

    int sp_a(int i, int j) const {
        int s = 0;
        for (int k = 0; k < g.n_actors(); ++k) s += a(i, k) && a(j, k);
        return s;
    }
    int sp_b(int o, int p) const {
        int s = 0;
        for (int k = 0; k < g.n_objects(); ++k) s += b(o, k) && b(p, k);
        return s;
    }
    int so(int i, int j) const {
        int s = 0;
        for (int o = 0; o < g.n_objects(); ++o) s += x(i, o) && x(j, o);
        return s;
    }
    int sa(int o, int p) const {
        int s = 0;
        for (int i = 0; i < g.n_actors(); ++i) s += x(i, o) && x(i, p);
        return s;
    }
};

// Change statistics of one-mode statistics for a dyad on their own level.
double change_one_mode(const FocalView& v, const StatDescriptor& desc, bool level_a) {
    const MultilevelNetwork& g = v.g;
    const int n = level_a ? g.n_actors() : g.n_objects();
    const int i = v.focal.first, j = v.focal.second;
    auto deg = [&](int u) { return level_a ? v.deg_a(u) : v.deg_b(u); };
    auto tie = [&](int u, int w) { return level_a ? v.a(u, w) : v.b(u, w); };
    auto shared = [&](int u, int w) { return level_a ? v.sp_a(u, w) : v.sp_b(u, w); };
    const double lambda = desc.lambda;

    switch (desc.id) {
        case StatId::EdgeA: case StatId::EdgeB:
            return 1.0;
        case StatId::Star2A: case StatId::Star2B:
            return binom(deg(i) + 1, 2) - binom(deg(i), 2) + binom(deg(j) + 1, 2) - binom(deg(j), 2);
        case StatId::Star3A: case StatId::Star3B:
            return binom(deg(i) + 1, 3) - binom(deg(i), 3) + binom(deg(j) + 1, 3) - binom(deg(j), 3);
        case StatId::Star4A: case StatId::Star4B:
            return binom(deg(i) + 1, 4) - binom(deg(i), 4) + binom(deg(j) + 1, 4) - binom(deg(j), 4);
        case StatId::Star5A: case StatId::Star5B:
            return binom(deg(i) + 1, 5) - binom(deg(i), 5) + binom(deg(j) + 1, 5) - binom(deg(j), 5);
        case StatId::TriangleA: case StatId::TriangleB:
            return shared(i, j);
        case StatId::Cycle4A: case StatId::Cycle4B: {
            // new 4-cycles through the focal dyad = 3-paths i-k-l-j
            long long s = 0;
            for (int k = 0; k < n; ++k) {
                if (!tie(i, k)) continue;
                for (int l = 0; l < n; ++l)
                    if (l != k && tie(k, l) && tie(l, j)) ++s;
            }
            return static_cast<double>(s);
        }
        case StatId::IsolatesA: case StatId::IsolatesB:
            return -(deg(i) == 0) - (deg(j) == 0);
        case StatId::IsolateEdgesA: case StatId::IsolateEdgesB: {
            double d = (deg(i) == 0 && deg(j) == 0) ? 1.0 : 0.0;
            for (int side = 0; side < 2; ++side) {
                const int u = side == 0 ? i : j;
                if (deg(u) != 1) continue;
                for (int k = 0; k < n; ++k)
                    if (tie(u, k)) {
                        if (deg(k) == 1) d -= 1.0;  // that edge stops being an isolated pair
                        break;
                    }
            }
            return d;
        }
        case StatId::ASA: case StatId::ASB:
            return lambda * lambda *
                   (alt_star_term(deg(i) + 1, lambda) - alt_star_term(deg(i), lambda) +
                    alt_star_term(deg(j) + 1, lambda) - alt_star_term(deg(j), lambda));
        case StatId::ATA: case StatId::ATB: {
            double d = alt_tri_term(shared(i, j), lambda);
            for (int k = 0; k < n; ++k)
                if (tie(i, k) && tie(j, k))
                    d += damp(shared(i, k), lambda) + damp(shared(j, k), lambda);
            return d;
        }
        case StatId::A2PA: case StatId::A2PB: {
            double d = 0.0;
            for (int k = 0; k < n; ++k) {
                if (k != i && tie(j, k)) d += damp(shared(i, k), lambda);
                if (k != j && tie(i, k)) d += damp(shared(j, k), lambda);
            }
            return d;
        }
        default: break;
    }
    throw ValidationError("not a one-mode statistic");
}

double change_for_a_dyad(const FocalView& v, const StatDescriptor& desc) {
    const MultilevelNetwork& g = v.g;
    const int i = v.focal.first, j = v.focal.second;
    switch (desc.id) {
        case StatId::EdgeA: case StatId::Star2A: case StatId::Star3A: case StatId::Star4A:
        case StatId::Star5A: case StatId::TriangleA: case StatId::Cycle4A: case StatId::IsolatesA:
        case StatId::IsolateEdgesA: case StatId::ASA: case StatId::ATA: case StatId::A2PA:
            return change_one_mode(v, desc, true);
        case StatId::MatchA:
            return attr_match(g, attribute_index(g, desc), i, j) ? 1.0 : 0.0;
        case StatId::MismatchA:
            return attr_match(g, attribute_index(g, desc), i, j) ? 0.0 : 1.0;
        case StatId::Star2AX:
            return v.deg_x_actor(i) + v.deg_x_actor(j);
        case StatId::StarAXAA:
            return static_cast<double>(v.deg_x_actor(i)) * v.deg_a(i) +
                   static_cast<double>(v.deg_x_actor(j)) * v.deg_a(j);
        case StatId::TriangleXAX:
            return v.so(i, j);
        case StatId::ATXAX:
            return alt_tri_term(v.so(i, j), desc.lambda);
        case StatId::L3XAX:
            return static_cast<double>(v.deg_x_actor(i)) * v.deg_x_actor(j) - v.so(i, j);
        case StatId::TXAXMatch:
            return attr_match(g, attribute_index(g, desc), i, j) ? v.so(i, j) : 0.0;
        case StatId::TXAXMismatch:
            return attr_match(g, attribute_index(g, desc), i, j) ? 0.0 : v.so(i, j);
        case StatId::L3AXB: {
            double d = 0.0;
            for (int o = 0; o < g.n_objects(); ++o) {
                if (v.x(i, o)) d += v.deg_b(o);
                if (v.x(j, o)) d += v.deg_b(o);
            }
            return d;
        }
        case StatId::C4AXB: {
            long long s = 0;
            for (int o = 0; o < g.n_objects(); ++o) {
                if (!v.x(i, o)) continue;
                for (int p = 0; p < g.n_objects(); ++p)
                    if (v.x(j, p) && v.b(o, p)) ++s;
            }
            return static_cast<double>(s);
        }
        default:
            return 0.0;
    }
}

double change_for_b_dyad(const FocalView& v, const StatDescriptor& desc) {
    const MultilevelNetwork& g = v.g;
    const int o = v.focal.first, p = v.focal.second;
    switch (desc.id) {
        case StatId::EdgeB: case StatId::Star2B: case StatId::Star3B: case StatId::Star4B:
        case StatId::Star5B: case StatId::TriangleB: case StatId::Cycle4B: case StatId::IsolatesB:
        case StatId::IsolateEdgesB: case StatId::ASB: case StatId::ATB: case StatId::A2PB:
            return change_one_mode(v, desc, false);
        case StatId::TriangleXBX:
            return v.sa(o, p);
        case StatId::ATXBX:
            return alt_tri_term(v.sa(o, p), desc.lambda);
        case StatId::L3XBX:
            return static_cast<double>(v.deg_x_object(o)) * v.deg_x_object(p) - v.sa(o, p);
        case StatId::L3AXB: {
            double d = 0.0;
            for (int i = 0; i < g.n_actors(); ++i) {
                if (v.x(i, o)) d += v.deg_a(i);
                if (v.x(i, p)) d += v.deg_a(i);
            }
            return d;
        }
        case StatId::C4AXB: {
            long long s = 0;
            for (int i = 0; i < g.n_actors(); ++i) {
                if (!v.x(i, o)) continue;
                for (int j = 0; j < g.n_actors(); ++j)
                    if (v.x(j, p) && v.a(i, j)) ++s;
            }
            return static_cast<double>(s);
        }
        default:
            return 0.0;
    }
}

double change_for_x_dyad(const FocalView& v, const StatDescriptor& desc) {
    const MultilevelNetwork& g = v.g;
    const int i = v.focal.first, o = v.focal.second;
    const double lambda = desc.lambda;
    switch (desc.id) {
        case StatId::XEdge:
            return 1.0;
        case StatId::XStar2A:
            return v.deg_x_actor(i);
        case StatId::XStar3A:
            return binom(v.deg_x_actor(i), 2);
        case StatId::XStar2B:
            return v.deg_x_object(o);
        case StatId::XStar3B:
            return binom(v.deg_x_object(o), 2);
        case StatId::X3Path: {
            double d = static_cast<double>(v.deg_x_actor(i)) * v.deg_x_object(o);
            for (int p = 0; p < g.n_objects(); ++p)
                if (v.x(i, p)) d += v.deg_x_object(p) - 1;
            for (int j = 0; j < g.n_actors(); ++j)
                if (v.x(j, o)) d += v.deg_x_actor(j) - 1;
            return d;
        }
        case StatId::X4Cycle: {
            double d = 0.0;
            for (int j = 0; j < g.n_actors(); ++j)
                if (j != i && v.x(j, o)) d += v.so(i, j);
            return d;
        }
        case StatId::X3PathNC:
            return change_for_x_dyad(v, StatDescriptor{StatId::X3Path, desc.lambda}) -
                   4.0 * change_for_x_dyad(v, StatDescriptor{StatId::X4Cycle, desc.lambda});
        case StatId::XASA:
            return lambda * lambda *
                   (alt_star_term(v.deg_x_actor(i) + 1, lambda) -
                    alt_star_term(v.deg_x_actor(i), lambda));
        case StatId::XASB:
            return lambda * lambda *
                   (alt_star_term(v.deg_x_object(o) + 1, lambda) -
                    alt_star_term(v.deg_x_object(o), lambda));
        case StatId::Alt4CycleA: {
            double d = 0.0;
            for (int j = 0; j < g.n_actors(); ++j)
                if (j != i && v.x(j, o)) {
                    const int s = v.so(i, j);
                    d += alt4_term(s + 1, lambda) - alt4_term(s, lambda);
                }
            return d;
        }
        case StatId::XMatchB: case StatId::XMismatchB: {
            const int attr = attribute_index(g, desc);
            const bool want = desc.id == StatId::XMatchB;
            double d = 0.0;
            for (int j = 0; j < g.n_actors(); ++j)
                if (j != i && v.x(j, o) && attr_match(g, attr, i, j) == want) d += 1.0;
            return d;
        }
        case StatId::X4CycleMatch: case StatId::X4CycleMismatch: {
            const int attr = attribute_index(g, desc);
            const bool want = desc.id == StatId::X4CycleMatch;
            double d = 0.0;
            for (int j = 0; j < g.n_actors(); ++j)
                if (j != i && v.x(j, o) && attr_match(g, attr, i, j) == want) d += v.so(i, j);
            return d;
        }
        case StatId::IsolatesXA:
            return v.deg_x_actor(i) == 0 ? -1.0 : 0.0;
        case StatId::IsolatesXB:
            return v.deg_x_object(o) == 0 ? -1.0 : 0.0;
        case StatId::Star2AX:
            return v.deg_a(i);
        case StatId::StarAXAA:
            return binom(v.deg_a(i), 2);
        case StatId::TriangleXAX: {
            double d = 0.0;
            for (int j = 0; j < g.n_actors(); ++j)
                if (j != i && v.x(j, o) && v.a(i, j)) d += 1.0;
            return d;
        }
        case StatId::ATXAX: {
            double d = 0.0;
            for (int j = 0; j < g.n_actors(); ++j)
                if (j != i && v.x(j, o) && v.a(i, j)) d += damp(v.so(i, j), lambda);
            return d;
        }
        case StatId::L3XAX: {
            double d = 0.0;
            for (int j = 0; j < g.n_actors(); ++j)
                if (v.a(i, j)) d += v.deg_x_actor(j) - (v.x(j, o) ? 1 : 0);
            return d;
        }
        case StatId::TXAXMatch: case StatId::TXAXMismatch: {
            const int attr = attribute_index(g, desc);
            const bool want = desc.id == StatId::TXAXMatch;
            double d = 0.0;
            for (int j = 0; j < g.n_actors(); ++j)
                if (j != i && v.x(j, o) && v.a(i, j) && attr_match(g, attr, i, j) == want) d += 1.0;
            return d;
        }
        case StatId::TriangleXBX: {
            double d = 0.0;
            for (int p = 0; p < g.n_objects(); ++p)
                if (v.b(o, p) && v.x(i, p)) d += 1.0;
            return d;
        }
        case StatId::ATXBX: {
            double d = 0.0;
            for (int p = 0; p < g.n_objects(); ++p)
                if (v.b(o, p) && v.x(i, p)) d += damp(v.sa(o, p), lambda);
            return d;
        }
        case StatId::L3XBX: {
            double d = 0.0;
            for (int p = 0; p < g.n_objects(); ++p)
                if (v.b(o, p)) d += v.deg_x_object(p) - (v.x(i, p) ? 1 : 0);
            return d;
        }
        case StatId::L3AXB:
            return static_cast<double>(v.deg_a(i)) * v.deg_b(o);
        case StatId::C4AXB: {
            long long s = 0;
            for (int j = 0; j < g.n_actors(); ++j) {
                if (!v.a(i, j)) continue;
                for (int p = 0; p < g.n_objects(); ++p)
                    if (v.b(o, p) && v.x(j, p)) ++s;
            }
            return static_cast<double>(s);
        }
        default:
            return 0.0;
    }
}

}  // namespace

double change_statistic(const MultilevelNetwork& net, const DyadRef& dyad,
                        const StatDescriptor& desc) {
    if (!net.within_group(dyad))
        throw ValidationError("change statistic on a cross-group dyad (structural zero)");
    const StatInfo& info = stat_info(desc.id);
    if (!info.model_usable)
        throw ValidationError(std::string(info.name) + " has no change statistic");
    const FocalView view{net, dyad};
    switch (dyad.level) {
        case TieLevel::A: return info.touches_a ? change_for_a_dyad(view, desc) : 0.0;
        case TieLevel::B: return info.touches_b ? change_for_b_dyad(view, desc) : 0.0;
        case TieLevel::X: return info.touches_x ? change_for_x_dyad(view, desc) : 0.0;
    }
    return 0.0;
}

StatVector change_statistics(const MultilevelNetwork& net, const DyadRef& dyad,
                             const ModelSpec& model) {
    StatVector out(model.size());
    for (int k = 0; k < model.size(); ++k) out[k] = change_statistic(net, dyad, model.stats()[k]);
    return out;
}

}  // namespace mergm
