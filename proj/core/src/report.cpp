#include "mergm/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace mergm {

namespace {

std::string fmt(double v, int decimals = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open '" + path + "' for writing");
    return out;
}

}  // namespace

const char* to_string(ReportSection section) {
    switch (section) {
        case ReportSection::Social: return "Social";
        case ReportSection::Material: return "Material";
        case ReportSection::ObjectUsage: return "Object usage";
        case ReportSection::SocioMaterial: return "Socio-material";
    }
    return "?";
}

double two_tailed_p(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

std::string significance_stars(double parameter, double std_error) {
    if (!(std_error > 0.0)) return "";
    const double z = std::abs(parameter / std_error);
    if (z >= 2.576) return "***";
    if (z >= 1.960) return "**";
    if (z >= 1.645) return "*";
    return "";
}

ReportSection section_of(StatId id) {
    const StatInfo& info = stat_info(id);
    if (info.touches_a && !info.touches_b && !info.touches_x) return ReportSection::Social;
    if (info.touches_b && !info.touches_a && !info.touches_x) return ReportSection::Material;
    if (info.touches_x && !info.touches_a && !info.touches_b) return ReportSection::ObjectUsage;
    return ReportSection::SocioMaterial;
}

FitReport render_fit_report(const FitResult& fit) {
    FitReport report;
    report.converged = fit.converged;
    for (std::size_t k = 0; k < fit.stats.size(); ++k) {
        FitReportRow row;
        row.name = descriptor_name(fit.stats[k]);
        row.label = stat_label(fit.stats[k].id);
        if (!fit.stats[k].attribute.empty()) row.label += " (" + fit.stats[k].attribute + ")";
        row.section = section_of(fit.stats[k].id);
        row.parameter = fit.theta_hat[k];
        row.std_error = k < fit.std_errors.size() ? fit.std_errors[k] : 0.0;
        row.se_zero = !(row.std_error > 0.0);
        row.z = row.se_zero ? 0.0 : row.parameter / row.std_error;
        row.p_value = row.se_zero ? 1.0 : two_tailed_p(row.z);
        row.stars = significance_stars(row.parameter, row.std_error);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string fit_report_text(const FitReport& report) {
    std::size_t label_width = 24;
    for (const FitReportRow& row : report.rows)
        label_width = std::max(label_width, row.label.size() + 2);

    std::ostringstream out;
    out << "Results\n";
    for (ReportSection section :
         {ReportSection::Social, ReportSection::Material, ReportSection::ObjectUsage,
          ReportSection::SocioMaterial}) {
        bool any = false;
        for (const FitReportRow& row : report.rows) any = any || row.section == section;
        if (!any) continue;
        out << "\n" << to_string(section) << "\n";
        for (const FitReportRow& row : report.rows) {
            if (row.section != section) continue;
            out << "  " << std::left << std::setw(static_cast<int>(label_width)) << row.label
                << std::right << std::setw(10) << fmt(row.parameter) << std::left << std::setw(4)
                << row.stars << std::right << "  (" << fmt(row.std_error, 3) << ")";
            if (row.se_zero) out << "  [zero SE]";
            out << "\n";
        }
    }
    out << "\nTwo-tailed tests; *p<0.1; **p<0.05; ***p<0.01\n";
    out << (report.converged ? "Converged: yes\n" : "Converged: NO\n");
    return out.str();
}

void write_fit_report_csv(const FitReport& report, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "section,statistic,label,parameter,std_error,z,p_value,stars\n";
    for (const FitReportRow& row : report.rows)
        out << to_string(row.section) << "," << row.name << ",\"" << row.label << "\","
            << fmt_g(row.parameter) << "," << fmt_g(row.std_error) << "," << fmt_g(row.z) << ","
            << fmt_g(row.p_value) << "," << row.stars << "\n";
}

void write_fit_csv(const FitResult& fit, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "statistic,parameter,std_error,conv_t_ratio\n";
    for (std::size_t k = 0; k < fit.stats.size(); ++k)
        out << descriptor_name(fit.stats[k]) << "," << fmt_g(fit.theta_hat[k]) << ","
            << fmt_g(k < fit.std_errors.size() ? fit.std_errors[k] : 0.0) << ","
            << fmt_g(k < fit.conv_t_ratios.size() ? fit.conv_t_ratios[k] : 0.0) << "\n";
}

FitResult read_fit_csv(const std::string& path, const ModelSpec& model) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::string line;
    if (!std::getline(in, line) || line.rfind("statistic,parameter", 0) != 0)
        throw ParseError(path, 1, "not a fit CSV (header mismatch)");

    FitResult fit;
    fit.stats = model.stats();
    long line_no = 1;
    for (int k = 0; k < model.size(); ++k) {
        if (!std::getline(in, line))
            throw ParseError(path, line_no, "fit has fewer rows than the model has statistics");
        ++line_no;
        std::istringstream row(line);
        std::string name, parameter, std_error, t_ratio;
        std::getline(row, name, ',');
        std::getline(row, parameter, ',');
        std::getline(row, std_error, ',');
        std::getline(row, t_ratio, ',');
        if (name != descriptor_name(model.stats()[k]))
            throw ParseError(path, line_no,
                             "fit row '" + name + "' does not match model statistic '" +
                                 descriptor_name(model.stats()[k]) + "'");
        try {
            fit.theta_hat.push_back(std::stod(parameter));
            fit.std_errors.push_back(std::stod(std_error));
            fit.conv_t_ratios.push_back(std::stod(t_ratio));
        } catch (const std::exception&) {
            throw ParseError(path, line_no, "malformed numeric field");
        }
    }
    fit.converged = true;
    for (double t : fit.conv_t_ratios) fit.converged = fit.converged && std::abs(t) <= 0.1;
    return fit;
}

void write_covariance_csv(const FitResult& fit, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "statistic";
    for (const StatDescriptor& d : fit.stats) out << "," << descriptor_name(d);
    out << "\n";
    for (std::size_t k = 0; k < fit.param_covariance.size(); ++k) {
        out << descriptor_name(fit.stats[k]);
        for (double v : fit.param_covariance[k]) out << "," << fmt_g(v);
        out << "\n";
    }
}

std::vector<std::vector<double>> read_covariance_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::string line;
    if (!std::getline(in, line)) throw ParseError(path, 1, "missing header");
    std::vector<std::vector<double>> out;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::getline(row, field, ',');  // statistic name
        std::vector<double> values;
        while (std::getline(row, field, ',')) {
            try {
                values.push_back(std::stod(field));
            } catch (const std::exception&) {
                throw ParseError(path, line_no, "malformed numeric field");
            }
        }
        out.push_back(std::move(values));
    }
    return out;
}

void write_gof_csv(const GofTable& table, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "statistic,observed,mean,sd,t_ratio,modeled,verdict\n";
    for (const GofRow& row : table.rows)
        out << row.name << "," << fmt_g(row.observed) << "," << fmt_g(row.sim_mean) << ","
            << fmt_g(row.sim_sd) << "," << fmt_g(row.t_ratio) << ","
            << (row.modeled ? "yes" : "no") << "," << (row.pass ? "pass" : "FAIL") << "\n";
}

std::string gof_table_text(const GofTable& table) {
    std::size_t name_width = 10;
    for (const GofRow& row : table.rows) name_width = std::max(name_width, row.name.size() + 2);

    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(name_width)) << "Statistic" << std::right
        << std::setw(12) << "Observed" << std::setw(14) << "Mean" << std::setw(12) << "SD"
        << std::setw(10) << "t-ratio" << "  " << std::left << "Verdict\n";
    for (const GofRow& row : table.rows) {
        out << std::left << std::setw(static_cast<int>(name_width)) << row.name << std::right
            << std::setw(12) << fmt(row.observed, 2) << std::setw(14) << fmt(row.sim_mean, 4)
            << std::setw(12) << fmt(row.sim_sd, 3) << std::setw(10) << fmt(row.t_ratio, 3) << "  "
            << (row.pass ? "pass" : "FAIL") << (row.modeled ? " (modeled)" : "")
            << (row.zero_variance ? " [zero variance]" : "") << "\n";
    }
    out << "\nModeled statistics pass at |t| <= " << fmt(table.modeled_threshold, 1)
        << ", auxiliary at |t| <= " << fmt(table.auxiliary_threshold, 1) << "\n";
    return out.str();
}

namespace {

std::string opt_fmt(const std::optional<double>& v, int decimals, const char* undefined = "-") {
    return v ? fmt(*v, decimals) : undefined;
}

}  // namespace

void write_descriptives_csv(const DescriptiveReport& report, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "group,n_actors,n_objects,density_A,density_B,density_X,centralization_A,"
           "centralization_B,avg_degree_A,avg_degree_B,avg_actor_degree_X,avg_object_degree_X,"
           "share_female,share_artistic_education,genre_diversity\n";
    auto line = [&out](const GroupDescriptives& g) {
        out << g.group << "," << fmt_g(g.n_actors) << "," << fmt_g(g.n_objects) << ","
            << fmt_g(g.density_a) << "," << fmt_g(g.density_b) << "," << fmt_g(g.density_x) << ","
            << (g.centralization_a ? fmt_g(*g.centralization_a) : "") << ","
            << (g.centralization_b ? fmt_g(*g.centralization_b) : "") << ","
            << fmt_g(g.avg_degree_a) << "," << fmt_g(g.avg_degree_b) << ","
            << fmt_g(g.avg_x_degree_actor) << "," << fmt_g(g.avg_x_degree_object) << ","
            << fmt_g(g.share_female) << "," << fmt_g(g.share_artistic_education) << ","
            << fmt_g(g.genre_diversity) << "\n";
    };
    for (const GroupDescriptives& g : report.groups) line(g);
    line(report.average);
    line(report.minimum);
    line(report.maximum);
    out << "Total," << report.total_actors << "," << report.total_objects
        << ",,,,,,,,,,,,\n";
}

std::string descriptives_text(const DescriptiveReport& report) {
    std::ostringstream out;
    auto row = [&out](const std::string& section, const std::string& metric, auto value) {
        out << std::left << std::setw(22) << section << std::setw(30) << metric;
        value();
        out << "\n";
    };
    const GroupDescriptives &avg = report.average, &mn = report.minimum, &mx = report.maximum;
    out << std::left << std::setw(22) << "" << std::setw(30) << "" << std::right << std::setw(10)
        << "Average" << std::setw(10) << "Min" << std::setw(10) << "Max" << std::setw(10)
        << "Total" << "\n";
    auto cells = [&out](const std::string& a, const std::string& b, const std::string& c,
                        const std::string& d) {
        out << std::right << std::setw(10) << a << std::setw(10) << b << std::setw(10) << c
            << std::setw(10) << d;
    };
    row("", "Shared objects", [&] {
        cells(fmt(avg.n_objects, 1), fmt(mn.n_objects, 0), fmt(mx.n_objects, 0),
              std::to_string(report.total_objects));
    });
    row("", "Individuals", [&] {
        cells(fmt(avg.n_actors, 1), fmt(mn.n_actors, 0), fmt(mx.n_actors, 0),
              std::to_string(report.total_actors));
    });
    row("Social (A)", "Density", [&] {
        cells(fmt(100 * avg.density_a, 0) + "%", fmt(100 * mn.density_a, 0) + "%",
              fmt(100 * mx.density_a, 0) + "%", "");
    });
    row("", "Degree centralization", [&] {
        cells(avg.centralization_a ? fmt(100 * *avg.centralization_a, 0) + "%" : "-",
              mn.centralization_a ? fmt(100 * *mn.centralization_a, 0) + "%" : "-",
              mx.centralization_a ? fmt(100 * *mx.centralization_a, 0) + "%" : "-", "");
    });
    row("", "Average degree", [&] {
        cells(fmt(avg.avg_degree_a, 2), fmt(mn.avg_degree_a, 2), fmt(mx.avg_degree_a, 2), "");
    });
    row("Material (B)", "Density", [&] {
        cells(fmt(100 * avg.density_b, 0) + "%", fmt(100 * mn.density_b, 0) + "%",
              fmt(100 * mx.density_b, 0) + "%", "");
    });
    row("", "Degree centralization", [&] {
        cells(opt_fmt(avg.centralization_b ? std::optional<double>(100 * *avg.centralization_b)
                                           : std::nullopt, 0),
              opt_fmt(mn.centralization_b ? std::optional<double>(100 * *mn.centralization_b)
                                          : std::nullopt, 0),
              opt_fmt(mx.centralization_b ? std::optional<double>(100 * *mx.centralization_b)
                                          : std::nullopt, 0), "");
    });
    row("", "Average degree", [&] {
        cells(fmt(avg.avg_degree_b, 2), fmt(mn.avg_degree_b, 2), fmt(mx.avg_degree_b, 2), "");
    });
    row("Object usage (X)", "Density", [&] {
        cells(fmt(100 * avg.density_x, 0) + "%", fmt(100 * mn.density_x, 0) + "%",
              fmt(100 * mx.density_x, 0) + "%", "");
    });
    row("", "Average object degree", [&] {
        cells(fmt(avg.avg_x_degree_object, 2), fmt(mn.avg_x_degree_object, 2),
              fmt(mx.avg_x_degree_object, 2), "");
    });
    row("", "Average actor degree", [&] {
        cells(fmt(avg.avg_x_degree_actor, 2), fmt(mn.avg_x_degree_actor, 2),
              fmt(mx.avg_x_degree_actor, 2), "");
    });
    row("Member attributes", "Female group members", [&] {
        cells(fmt(100 * avg.share_female, 0) + "%", fmt(100 * mn.share_female, 0) + "%",
              fmt(100 * mx.share_female, 0) + "%", "");
    });
    row("", "With artistic education", [&] {
        cells(fmt(100 * avg.share_artistic_education, 0) + "%",
              fmt(100 * mn.share_artistic_education, 0) + "%",
              fmt(100 * mx.share_artistic_education, 0) + "%", "");
    });
    row("", "Diversity in genre", [&] {
        cells(fmt(avg.genre_diversity, 2), fmt(mn.genre_diversity, 2), fmt(mx.genre_diversity, 2),
              "");
    });
    out << "\nPer group:\n";
    for (const GroupDescriptives& g : report.groups) {
        out << "  " << std::left << std::setw(16) << g.group << "actors " << std::right
            << std::setw(3) << fmt(g.n_actors, 0) << "  objects " << std::setw(3)
            << fmt(g.n_objects, 0) << "  density A/B/X " << fmt(g.density_a, 2) << "/"
            << fmt(g.density_b, 2) << "/" << fmt(g.density_x, 2) << "  diversity "
            << fmt(g.genre_diversity, 2) << "\n";
    }
    return out.str();
}

std::string correlation_text(const std::vector<std::vector<double>>& r,
                             const std::vector<std::string>& names) {
    std::size_t name_width = 10;
    for (const std::string& n : names) name_width = std::max(name_width, n.size() + 2);
    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(name_width)) << "";
    for (std::size_t c = 0; c + 1 < names.size(); ++c)
        out << std::right << std::setw(12) << (names[c].size() > 11 ? names[c].substr(0, 11) : names[c]);
    out << "\n";
    for (std::size_t k = 0; k < names.size(); ++k) {
        out << std::left << std::setw(static_cast<int>(name_width)) << names[k];
        for (std::size_t l = 0; l < k; ++l) out << std::right << std::setw(12) << fmt(r[k][l], 4);
        out << "\n";
    }
    return out.str();
}

void write_correlation_csv(const std::vector<std::vector<double>>& r,
                           const std::vector<std::string>& names, const std::string& path) {
    std::ofstream out = open_out(path);
    out << "statistic";
    for (const std::string& n : names) out << "," << n;
    out << "\n";
    for (std::size_t k = 0; k < names.size(); ++k) {
        out << names[k];
        for (std::size_t l = 0; l < names.size(); ++l) out << "," << fmt_g(r[k][l]);
        out << "\n";
    }
}

}  // namespace mergm
