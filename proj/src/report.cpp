#include "qtwist/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qtwist {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

double ExperimentConfig::y_for(double x) const {
    switch (y_rule) {
        case YRule::fixed: return y_param;
        case YRule::sqrt_of_x: return std::ceil(std::sqrt(x));
        case YRule::power: return std::ceil(std::pow(x, y_param));
    }
    return 0.0;
}

std::map<std::string, std::string> ExperimentConfig::echo() const {
    std::map<std::string, std::string> m;
    std::string xs;
    for (std::size_t i = 0; i < x_values.size(); ++i)
        xs += (i ? "," : "") + fmt17(x_values[i]);
    m["x_values"] = xs;
    m["y_rule"] = y_rule == YRule::fixed    ? "fixed:" + fmt17(y_param)
                  : y_rule == YRule::power  ? "power:" + fmt17(y_param)
                                            : "sqrt";
    m["phi_support"] = fmt17(phi_a) + "," + fmt17(phi_b);
    m["psi_support"] = fmt17(psi_a) + "," + fmt17(psi_b);
    m["method"] = method == SumMethod::sieved ? "sieved" : "naive";
    m["c0_method"] = c0_method == C0Method::diagonal ? "diagonal"
                     : c0_method == C0Method::both   ? "both"
                                                     : "contour";
    m["workers"] = std::to_string(workers);
    m["epsilon"] = fmt17(epsilon);
    m["diag_y"] = fmt17(diag_y);
    m["format"] = format;
    return m;
}

ExperimentConfig parse_config_text(const std::string& text) {
    ExperimentConfig c;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: expected key=value, got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "x_values") {
                c.x_values.clear();
                for (const auto& tok : split(val, ',')) c.x_values.push_back(std::stod(tok));
            } else if (key == "y_rule") {
                if (val == "sqrt" || val == "sqrt_of_x") {
                    c.y_rule = YRule::sqrt_of_x;
                } else if (val.rfind("fixed:", 0) == 0) {
                    c.y_rule = YRule::fixed;
                    c.y_param = std::stod(val.substr(6));
                } else if (val.rfind("power:", 0) == 0) {
                    c.y_rule = YRule::power;
                    c.y_param = std::stod(val.substr(6));
                } else {
                    throw std::invalid_argument("bad y_rule");
                }
            } else if (key == "phi_support") {
                const auto parts = split(val, ',');
                if (parts.size() != 2) throw std::invalid_argument("bad support");
                c.phi_a = std::stod(parts[0]);
                c.phi_b = std::stod(parts[1]);
            } else if (key == "psi_support") {
                const auto parts = split(val, ',');
                if (parts.size() != 2) throw std::invalid_argument("bad support");
                c.psi_a = std::stod(parts[0]);
                c.psi_b = std::stod(parts[1]);
            } else if (key == "method") {
                if (val == "sieved") c.method = SumMethod::sieved;
                else if (val == "naive") c.method = SumMethod::naive;
                else throw std::invalid_argument("bad method");
            } else if (key == "c0_method") {
                if (val == "diagonal") c.c0_method = C0Method::diagonal;
                else if (val == "contour") c.c0_method = C0Method::contour;
                else if (val == "both") c.c0_method = C0Method::both;
                else throw std::invalid_argument("bad c0_method");
            } else if (key == "workers") {
                c.workers = std::stoi(val);
            } else if (key == "out") {
                c.out_path = val;
            } else if (key == "format") {
                if (val != "csv" && val != "json") throw std::invalid_argument("bad format");
                c.format = val;
            } else if (key == "epsilon") {
                c.epsilon = std::stod(val);
            } else if (key == "diag_y") {
                c.diag_y = std::stod(val);
            } else {
                throw std::invalid_argument("unknown key");
            }
        } catch (const std::exception& e) {
            throw std::invalid_argument("config: key '" + key + "': " + e.what());
        }
    }
    if (c.x_values.empty()) throw std::invalid_argument("config: x_values must be non-empty");
    for (double x : c.x_values)
        if (x < 4.0) throw std::invalid_argument("config: x_values must all be >= 4");
    for (double x : c.x_values)
        if (c.y_for(x) < 2.0) throw std::invalid_argument("config: y_rule must produce y >= 2");
    if (!(c.phi_a > 0 && c.phi_a < c.phi_b) || !(c.psi_a > 0 && c.psi_a < c.psi_b))
        throw std::invalid_argument("config: window supports must satisfy 0 < a < b");
    if (c.workers < 1) throw std::invalid_argument("config: workers must be >= 1");
    return c;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("config: cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

ExperimentReport run_verify(const ExperimentConfig& config, const EigenformCoefficients& coeffs,
                            const FactorTables& tables) {
    const SmoothWindow phi = SmoothWindow::bump(config.phi_a, config.phi_b);
    const SmoothWindow psi = SmoothWindow::bump(config.psi_a, config.psi_b);

    ExperimentReport rep;
    rep.config_echo = config.echo();

    double c0 = 0.0, c0_alt = 0.0;
    std::string c0_name;
    if (config.c0_method == C0Method::diagonal || config.c0_method == C0Method::both) {
        const double y3 = config.diag_y;
        const double d1 = diagonal_constant(y3 / 4.0, phi, psi, coeffs, tables);
        const double d2 = diagonal_constant(y3 / 2.0, phi, psi, coeffs, tables);
        const double d3 = diagonal_constant(y3, phi, psi, coeffs, tables);
        c0 = extrapolate_diagonal(d1, d2, d3);
        c0_name = "diagonal";
    }
    if (config.c0_method == C0Method::contour || config.c0_method == C0Method::both) {
        ContourSpec spec;
        spec.epsilon = config.epsilon;
        LSeriesAccessor acc(coeffs, std::min<std::size_t>(coeffs.limit, 20000));
        const double v = c0_contour(phi, psi, spec, acc, coeffs, tables).value;
        if (config.c0_method == C0Method::both) {
            c0_alt = v;
        } else {
            c0 = v;
            c0_name = "contour";
        }
    }

    std::vector<std::pair<double, double>> fitpts;
    for (const double X : config.x_values) {
        const double Y = config.y_for(X);
        const ExperimentPoint pt =
            mean_square(X, Y, phi, psi, coeffs, tables, config.method, config.workers);
        ExperimentRecord r;
        r.X = X;
        r.Y = Y;
        r.S_brute = pt.value_S;
        r.C0 = c0;
        r.C0_alt = c0_alt;
        r.C0_method = c0_name;
        r.predicted = c0 * X * Y;
        r.ratio = (r.predicted != 0.0) ? pt.value_S / r.predicted : 0.0;
        r.abs_dev = std::abs(r.ratio - 1.0);
        r.seconds = pt.wall_time;
        rep.records.push_back(r);
        if (r.abs_dev > 0.0) fitpts.emplace_back(std::log(X), std::log(r.abs_dev));
    }
    std::sort(rep.records.begin(), rep.records.end(),
              [](const auto& a, const auto& b) { return a.X < b.X; });

    if (fitpts.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (const auto& [x, y] : fitpts) {
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        const double n = static_cast<double>(fitpts.size());
        rep.decay_slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return rep;
}

std::string report_to_csv(const ExperimentReport& report) {
    std::string out = "X,Y,S_brute,C0,predicted,ratio,abs_dev,seconds\n";
    for (const auto& r : report.records) {
        out += fmt17(r.X) + "," + fmt17(r.Y) + "," + fmt17(r.S_brute) + "," + fmt17(r.C0) + "," +
               fmt17(r.predicted) + "," + fmt17(r.ratio) + "," + fmt17(r.abs_dev) + "," +
               fmt17(r.seconds) + "\n";
    }
    return out;
}

std::string report_to_json(const ExperimentReport& report) {
    nlohmann::json j;
    j["decay_slope"] = report.decay_slope;
    j["config"] = report.config_echo;
    j["records"] = nlohmann::json::array();
    for (const auto& r : report.records) {
        nlohmann::json rec;
        rec["X"] = r.X;
        rec["Y"] = r.Y;
        rec["S_brute"] = r.S_brute;
        rec["C0"] = r.C0;
        if (!r.C0_method.empty()) rec["C0_method"] = r.C0_method;
        if (r.C0_alt != 0.0) rec["C0_alt"] = r.C0_alt;
        rec["predicted"] = r.predicted;
        rec["ratio"] = r.ratio;
        rec["abs_dev"] = r.abs_dev;
        rec["seconds"] = r.seconds;
        j["records"].push_back(rec);
    }
    return j.dump(2);
}

void emit_report(const ExperimentReport& report, const std::string& format,
                 const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("emit_report: cannot open " + path);
    f << (format == "json" ? report_to_json(report) : report_to_csv(report));
    if (!f) throw std::runtime_error("emit_report: write failed");
}

std::vector<ExperimentRecord> parse_report_csv(const std::string& text) {
    std::vector<ExperimentRecord> out;
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line) || line != "X,Y,S_brute,C0,predicted,ratio,abs_dev,seconds")
        throw std::invalid_argument("parse_report_csv: bad header");
    while (std::getline(ss, line)) {
        if (trim(line).empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 8) throw std::invalid_argument("parse_report_csv: bad row");
        ExperimentRecord r;
        r.X = std::stod(f[0]);
        r.Y = std::stod(f[1]);
        r.S_brute = std::stod(f[2]);
        r.C0 = std::stod(f[3]);
        r.predicted = std::stod(f[4]);
        r.ratio = std::stod(f[5]);
        r.abs_dev = std::stod(f[6]);
        r.seconds = std::stod(f[7]);
        out.push_back(r);
    }
    return out;
}

}  // namespace qtwist
