#include "mergm/descriptives.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace mergm {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool positive_label(const std::string& value, std::initializer_list<const char*> accepted) {
    const std::string v = lower(value);
    for (const char* a : accepted)
        if (v == a) return true;
    return false;
}

// Share of actors whose attribute value is in the accepted set; 0 when the
// attribute is not declared.
double binary_share(const MultilevelNetwork& net, const std::string& attribute,
                    std::initializer_list<const char*> accepted) {
    const int attr = net.attributes().find(attribute);
    if (attr < 0 || net.n_actors() == 0) return 0.0;
    int count = 0;
    for (int i = 0; i < net.n_actors(); ++i)
        count += positive_label(net.attributes().value(attr, i), accepted);
    return static_cast<double>(count) / net.n_actors();
}

}  // namespace

double freeman_centralization(const std::vector<int>& degrees) {
    const int n = static_cast<int>(degrees.size());
    const int d_max = *std::max_element(degrees.begin(), degrees.end());
    double sum = 0.0;
    for (int d : degrees) sum += d_max - d;
    return sum / (static_cast<double>(n - 1) * (n - 2));
}

double blau_diversity(const std::vector<int>& codes, bool raw) {
    const int n = static_cast<int>(codes.size());
    if (n == 0) return 0.0;
    if (n == 1) return 0.0;
    std::vector<int> counts;
    for (int c : codes) {
        if (c >= static_cast<int>(counts.size())) counts.resize(c + 1, 0);
        ++counts[c];
    }
    double sum_p2 = 0.0;
    for (int c : counts) {
        const double p = static_cast<double>(c) / n;
        sum_p2 += p * p;
    }
    const double blau = 1.0 - sum_p2;
    return raw ? blau : blau * n / (n - 1);
}

DescriptiveReport describe(const std::vector<MultilevelNetwork>& group_networks,
                           const DescriptiveOptions& options) {
    if (group_networks.empty()) throw ValidationError("describe needs at least one group");

    DescriptiveReport report;
    for (const MultilevelNetwork& net : group_networks) {
        GroupDescriptives g;
        g.group = net.partition().group_names.size() == 1 ? net.partition().group_names[0] : "";
        const int na = net.n_actors(), no = net.n_objects();
        g.n_actors = na;
        g.n_objects = no;
        report.total_actors += na;
        report.total_objects += no;

        const double dyads_a = na * (na - 1) / 2.0;
        const double dyads_b = no * (no - 1) / 2.0;
        const double dyads_x = static_cast<double>(na) * no;
        g.density_a = dyads_a > 0 ? net.tie_count(TieLevel::A) / dyads_a : 0.0;
        g.density_b = dyads_b > 0 ? net.tie_count(TieLevel::B) / dyads_b : 0.0;
        g.density_x = dyads_x > 0 ? net.tie_count(TieLevel::X) / dyads_x : 0.0;

        g.avg_degree_a = na > 0 ? 2.0 * net.tie_count(TieLevel::A) / na : 0.0;
        g.avg_degree_b = no > 0 ? 2.0 * net.tie_count(TieLevel::B) / no : 0.0;
        g.avg_x_degree_actor = na > 0 ? static_cast<double>(net.tie_count(TieLevel::X)) / na : 0.0;
        g.avg_x_degree_object = no > 0 ? static_cast<double>(net.tie_count(TieLevel::X)) / no : 0.0;

        if (na >= 3) {
            std::vector<int> deg(na);
            for (int i = 0; i < na; ++i) deg[i] = net.degree_a(i);
            g.centralization_a = freeman_centralization(deg);
        }
        if (no >= 3) {
            std::vector<int> deg(no);
            for (int o = 0; o < no; ++o) deg[o] = net.degree_b(o);
            g.centralization_b = freeman_centralization(deg);
        }

        g.share_female =
            binary_share(net, options.gender_attribute, {"female", "f", "1", "true", "yes"});
        g.share_artistic_education =
            binary_share(net, options.education_attribute, {"yes", "y", "1", "true"});
        const int genre = net.attributes().find(options.genre_attribute);
        if (genre >= 0 && na > 0) {
            std::vector<int> codes(na);
            for (int i = 0; i < na; ++i) codes[i] = net.attributes().code(genre, i);
            g.genre_diversity = blau_diversity(codes, options.raw_blau);
        }
        report.groups.push_back(std::move(g));
    }

    // Unweighted aggregation; centralization aggregates over defined groups only.
    auto aggregate = [&report](auto member, GroupDescriptives& avg, GroupDescriptives& mn,
                               GroupDescriptives& mx) {
        double sum = 0.0, lo = 0.0, hi = 0.0;
        bool first = true;
        for (const GroupDescriptives& g : report.groups) {
            const double v = static_cast<double>(g.*member);
            sum += v;
            lo = first ? v : std::min(lo, v);
            hi = first ? v : std::max(hi, v);
            first = false;
        }
        avg.*member = static_cast<std::decay_t<decltype(avg.*member)>>(sum / report.groups.size());
        mn.*member = static_cast<std::decay_t<decltype(mn.*member)>>(lo);
        mx.*member = static_cast<std::decay_t<decltype(mx.*member)>>(hi);
    };
    GroupDescriptives& avg = report.average;
    GroupDescriptives& mn = report.minimum;
    GroupDescriptives& mx = report.maximum;
    avg.group = "Average";
    mn.group = "Min";
    mx.group = "Max";
    aggregate(&GroupDescriptives::n_actors, avg, mn, mx);
    aggregate(&GroupDescriptives::n_objects, avg, mn, mx);
    aggregate(&GroupDescriptives::density_a, avg, mn, mx);
    aggregate(&GroupDescriptives::density_b, avg, mn, mx);
    aggregate(&GroupDescriptives::density_x, avg, mn, mx);
    aggregate(&GroupDescriptives::avg_degree_a, avg, mn, mx);
    aggregate(&GroupDescriptives::avg_degree_b, avg, mn, mx);
    aggregate(&GroupDescriptives::avg_x_degree_actor, avg, mn, mx);
    aggregate(&GroupDescriptives::avg_x_degree_object, avg, mn, mx);
    aggregate(&GroupDescriptives::share_female, avg, mn, mx);
    aggregate(&GroupDescriptives::share_artistic_education, avg, mn, mx);
    aggregate(&GroupDescriptives::genre_diversity, avg, mn, mx);

    for (auto member : {&GroupDescriptives::centralization_a, &GroupDescriptives::centralization_b}) {
        double sum = 0.0;
        std::optional<double> lo, hi;
        int defined = 0;
        for (const GroupDescriptives& g : report.groups) {
            const std::optional<double>& v = g.*member;
            if (!v) continue;
            ++defined;
            sum += *v;
            lo = lo ? std::min(*lo, *v) : *v;
            hi = hi ? std::max(*hi, *v) : *v;
        }
        if (defined > 0) {
            avg.*member = sum / defined;
            mn.*member = lo;
            mx.*member = hi;
        }
    }
    return report;
}

}  // namespace mergm
