#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtwist/charsum.hpp"
#include "qtwist/mainterm.hpp"

namespace qtwist {

enum class YRule { fixed, sqrt_of_x, power };
enum class C0Method { diagonal, contour, both };

struct ExperimentConfig {
    std::vector<double> x_values;
    YRule y_rule = YRule::sqrt_of_x;
    double y_param = 0.0;  // fixed Y, or exponent theta for power rule
    double phi_a = 0.5, phi_b = 1.0;
    double psi_a = 0.5, psi_b = 1.0;
    SumMethod method = SumMethod::sieved;
    C0Method c0_method = C0Method::contour;
    int workers = 1;
    std::string out_path;
    std::string format = "csv";
    double epsilon = 0.08;
    double diag_y = 16384.0;  // largest Y of the diagonal doubling ladder

    double y_for(double x) const;
    std::map<std::string, std::string> echo() const;
};

// Throws std::invalid_argument (message names the bad key) on malformed input.
ExperimentConfig parse_config_file(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

struct ExperimentRecord {
    double X = 0, Y = 0;
    double S_brute = 0;
    double C0 = 0;
    double C0_alt = 0;  // only for c0_method = both
    std::string C0_method;
    double predicted = 0;
    double ratio = 0;
    double abs_dev = 0;
    double seconds = 0;
};

struct ExperimentReport {
    std::vector<ExperimentRecord> records;
    double decay_slope = 0.0;  // log-log fit of |ratio-1| against X
    std::map<std::string, std::string> config_echo;
};

ExperimentReport run_verify(const ExperimentConfig& config, const EigenformCoefficients& coeffs,
                            const FactorTables& tables);

std::string report_to_csv(const ExperimentReport& report);
std::string report_to_json(const ExperimentReport& report);
void emit_report(const ExperimentReport& report, const std::string& format,
                 const std::string& path);
std::vector<ExperimentRecord> parse_report_csv(const std::string& text);

}  // namespace qtwist
