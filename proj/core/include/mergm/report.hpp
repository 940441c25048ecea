#pragma once

#include <string>
#include <vector>

#include "mergm/descriptives.hpp"
#include "mergm/estimator.hpp"
#include "mergm/gof.hpp"

namespace mergm {

enum class ReportSection { Social, Material, ObjectUsage, SocioMaterial };

const char* to_string(ReportSection section);

struct FitReportRow {
    std::string name;       // descriptor name (catalog id, attribute-prefixed)
    std::string label;      // English pattern label
    ReportSection section;
    double parameter = 0.0;
    double std_error = 0.0;
    double z = 0.0;
    double p_value = 1.0;
    std::string stars;      // "", "*", "**", "***"
    bool se_zero = false;   // stars omitted, flagged instead
};

struct FitReport {
    std::vector<FitReportRow> rows;  // model order, grouped by section when rendered
    bool converged = false;
};

// Two-tailed normal stars at |z| thresholds 1.645 / 1.960 / 2.576; a boundary
// value earns the more significant bucket.
std::string significance_stars(double parameter, double std_error);
double two_tailed_p(double z);
ReportSection section_of(StatId id);

FitReport render_fit_report(const FitResult& fit);
std::string fit_report_text(const FitReport& report);
void write_fit_report_csv(const FitReport& report, const std::string& path);

// statistic,parameter,std_error,conv_t_ratio
void write_fit_csv(const FitResult& fit, const std::string& path);
// Reads parameters back against the given model; statistic names must match
// in order. Covariance and observed statistics are not part of this file.
FitResult read_fit_csv(const std::string& path, const ModelSpec& model);

void write_covariance_csv(const FitResult& fit, const std::string& path);
std::vector<std::vector<double>> read_covariance_csv(const std::string& path);

// statistic,observed,mean,sd,t_ratio,modeled,verdict
void write_gof_csv(const GofTable& table, const std::string& path);
std::string gof_table_text(const GofTable& table);

void write_descriptives_csv(const DescriptiveReport& report, const std::string& path);
std::string descriptives_text(const DescriptiveReport& report);

// Lower-triangular correlation table (Appendix-style shape).
std::string correlation_text(const std::vector<std::vector<double>>& r,
                             const std::vector<std::string>& names);
void write_correlation_csv(const std::vector<std::vector<double>>& r,
                           const std::vector<std::string>& names, const std::string& path);

}  // namespace mergm
