#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtwist/charsum.hpp"
#include "qtwist/gauss.hpp"
#include "qtwist/mainterm.hpp"
#include "qtwist/poisson.hpp"
#include "qtwist/report.hpp"

using namespace qtwist;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

int cmd_verify_gauss(std::uint64_t m_max, long long k_max) {
    const FactorTables tables = build_factor_tables(std::max<std::uint64_t>(m_max, 2));
    double max_dev = 0.0, max_imag = 0.0;
    std::uint64_t failures = 0;
    for (std::uint64_t m = 1; m <= m_max; m += 2) {
        for (long long k = -k_max; k <= k_max; ++k) {
            const auto direct = gauss_direct(k, m);
            const double closed = gauss_closed(k, m, tables);
            const double dev = std::abs(direct - std::complex<double>(closed, 0.0));
            const double tol = 1e-6 * std::max(1.0, static_cast<double>(m));
            max_dev = std::max(max_dev, dev);
            max_imag = std::max(max_imag, std::abs(direct.imag()));
            if (dev > tol || std::abs(direct.imag()) > 1e-6 * static_cast<double>(m)) {
                ++failures;
                std::printf("FAIL,%llu,%lld,%.17g,%.17g,%.17g\n",
                            static_cast<unsigned long long>(m), k, direct.real(), direct.imag(),
                            closed);
            }
        }
    }
    std::printf("verify-gauss: %s  m<=%llu |k|<=%lld  max_dev=%.3e max_imag=%.3e\n",
                failures == 0 ? "PASS" : "FAIL", static_cast<unsigned long long>(m_max), k_max,
                max_dev, max_imag);
    return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_verify_poisson(std::uint64_t n, double x, double phi_a, double phi_b) {
    const FactorTables tables = build_factor_tables(std::max<std::uint64_t>(n, 2));
    const SmoothWindow F = SmoothWindow::bump(phi_a, phi_b);
    const PoissonCheck c = poisson_check(n, x, F, tables);
    std::printf("verify-poisson: n=%llu X=%g lhs=%.12g rhs=%.12g residual=%.3e k_max=%lld %s\n",
                static_cast<unsigned long long>(n), x, c.lhs, c.rhs, c.residual, c.k_max_used,
                c.residual <= 1e-6 ? "PASS" : "FAIL");
    return c.residual <= 1e-6 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mean squares of quadratic twists of modular-form coefficients"};
    app.require_subcommand(1);

    // verify-gauss
    auto* vg = app.add_subcommand("verify-gauss", "closed-form vs direct Gauss sums");
    std::uint64_t m_max = 2001;
    long long k_max = 60;
    vg->add_option("--m-max", m_max);
    vg->add_option("--k-max", k_max);

    // verify-poisson
    auto* vp = app.add_subcommand("verify-poisson", "Poisson summation identity check");
    std::uint64_t pn = 3;
    double px = 100.0;
    vp->add_option("--n", pn);
    vp->add_option("--x", px);

    // shared window / table options
    double phi_a = 0.5, phi_b = 1.0, psi_a = 0.5, psi_b = 1.0;
    for (auto* sc : {vp}) {
        sc->add_option("--phi-a", phi_a);
        sc->add_option("--phi-b", phi_b);
    }

    // brute
    auto* br = app.add_subcommand("brute", "brute-force mean square at one (X,Y)");
    double bx = 1024.0, by = 32.0;
    std::string bmethod = "sieved", bformat = "json", bout;
    int workers = 1;
    br->add_option("--x", bx)->required();
    br->add_option("--y", by)->required();
    br->add_option("--method", bmethod)->check(CLI::IsMember({"sieved", "naive"}));
    br->add_option("--workers", workers);
    br->add_option("--format", bformat)->check(CLI::IsMember({"csv", "json"}));
    br->add_option("--out", bout);
    br->add_option("--phi-a", phi_a);
    br->add_option("--phi-b", phi_b);
    br->add_option("--psi-a", psi_a);
    br->add_option("--psi-b", psi_b);

    // c0
    auto* c0 = app.add_subcommand("c0", "predicted constant C0");
    std::string c0method = "contour";
    double c0y = 16384.0, c0eps = 0.08;
    c0->add_option("--method", c0method)->check(CLI::IsMember({"diagonal", "contour"}));
    c0->add_option("--y", c0y);
    c0->add_option("--epsilon", c0eps);
    c0->add_option("--phi-a", phi_a);
    c0->add_option("--phi-b", phi_b);
    c0->add_option("--psi-a", psi_a);
    c0->add_option("--psi-b", psi_b);

    // verify / scaling
    auto* vf = app.add_subcommand("verify", "full pipeline from a config file");
    std::string config_path, vf_out, vf_format;
    int vf_workers = 0;
    vf->add_option("--config", config_path)->required();
    vf->add_option("--workers", vf_workers);
    vf->add_option("--out", vf_out);
    vf->add_option("--format", vf_format)->check(CLI::IsMember({"csv", "json"}));

    auto* sc = app.add_subcommand("scaling", "doubling study with Y = ceil(sqrt(X))");
    double sc_xmin = 16384.0;
    int sc_steps = 5, sc_workers = 8;
    std::string sc_out, sc_format = "csv";
    sc->add_option("--x-min", sc_xmin);
    sc->add_option("--steps", sc_steps);
    sc->add_option("--workers", sc_workers);
    sc->add_option("--out", sc_out);
    sc->add_option("--format", sc_format)->check(CLI::IsMember({"csv", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (vg->parsed()) return cmd_verify_gauss(m_max, k_max);
        if (vp->parsed()) return cmd_verify_poisson(pn, px, phi_a, phi_b);

        if (br->parsed()) {
            const auto Xl = static_cast<std::uint64_t>(std::ceil(bx * psi_b)) + 2;
            const auto Yl = static_cast<std::uint64_t>(std::ceil(by * phi_b)) + 2;
            const FactorTables tables = build_factor_tables(std::max(Xl, Yl));
            const EigenformCoefficients coeffs = lambda_table(Yl);
            const SmoothWindow phi = SmoothWindow::bump(phi_a, phi_b);
            const SmoothWindow psi = SmoothWindow::bump(psi_a, psi_b);
            const SumMethod method = bmethod == "naive" ? SumMethod::naive : SumMethod::sieved;
            const ExperimentPoint pt = mean_square(bx, by, phi, psi, coeffs, tables, method, workers);
            nlohmann::json j{{"X", pt.X},
                             {"Y", pt.Y},
                             {"value_S", pt.value_S},
                             {"n_d_terms", pt.n_d_terms},
                             {"wall_time", pt.wall_time},
                             {"method", bmethod}};
            std::string payload;
            if (bformat == "csv") {
                char buf[256];
                std::snprintf(buf, sizeof buf, "X,Y,value_S,n_d_terms,wall_time,method\n%.17g,%.17g,%.17g,%llu,%.6g,%s\n",
                              pt.X, pt.Y, pt.value_S,
                              static_cast<unsigned long long>(pt.n_d_terms), pt.wall_time,
                              bmethod.c_str());
                payload = buf;
            } else {
                payload = j.dump(2) + "\n";
            }
            if (bout.empty()) {
                std::cout << payload;
            } else {
                std::ofstream f(bout);
                f << payload;
            }
            return kExitOk;
        }

        if (c0->parsed()) {
            const SmoothWindow phi = SmoothWindow::bump(phi_a, phi_b);
            const SmoothWindow psi = SmoothWindow::bump(psi_a, psi_b);
            nlohmann::json j;
            if (c0method == "diagonal") {
                const auto lim = static_cast<std::uint64_t>(std::ceil(c0y * phi_b)) + 2;
                const FactorTables tables = build_factor_tables(lim);
                const EigenformCoefficients coeffs = lambda_table(lim);
                const double d1 = diagonal_constant(c0y / 4.0, phi, psi, coeffs, tables);
                const double d2 = diagonal_constant(c0y / 2.0, phi, psi, coeffs, tables);
                const double d3 = diagonal_constant(c0y, phi, psi, coeffs, tables);
                j["value"] = extrapolate_diagonal(d1, d2, d3);
                j["ladder"] = {d1, d2, d3};
                j["method"] = "diagonal";
                j["y"] = c0y;
            } else {
                ContourSpec defaults;
                const std::uint64_t lim = defaults.prime_cutoff + 1;
                const FactorTables tables = build_factor_tables(lim);
                const EigenformCoefficients coeffs = lambda_table(lim);
                ContourSpec spec;
                spec.epsilon = c0eps;
                LSeriesAccessor acc(coeffs, 20000);
                const C0Result res = c0_contour(phi, psi, spec, acc, coeffs, tables);
                j["value"] = res.value;
                j["error_estimate"] = res.error_estimate;
                j["T"] = res.T_used;
                j["epsilon"] = c0eps;
                j["method"] = "contour";
            }
            std::cout << j.dump(2) << "\n";
            return kExitOk;
        }

        if (vf->parsed() || sc->parsed()) {
            ExperimentConfig cfg;
            if (vf->parsed()) {
                cfg = parse_config_file(config_path);
                if (vf_workers > 0) cfg.workers = vf_workers;
                if (!vf_out.empty()) cfg.out_path = vf_out;
                if (!vf_format.empty()) cfg.format = vf_format;
            } else {
                cfg.x_values.clear();
                double x = sc_xmin;
                for (int i = 0; i < sc_steps; ++i, x *= 2.0) cfg.x_values.push_back(x);
                cfg.y_rule = YRule::sqrt_of_x;
                cfg.workers = sc_workers;
                cfg.out_path = sc_out;
                cfg.format = sc_format;
                cfg.c0_method = C0Method::contour;
            }
            double xmax = 4.0, ymax = 4.0;
            for (double x : cfg.x_values) {
                xmax = std::max(xmax, x * cfg.psi_b);
                ymax = std::max(ymax, cfg.y_for(x) * cfg.phi_b);
            }
            ymax = std::max(ymax, cfg.diag_y * cfg.phi_b);
            // the contour route needs primes up to the Euler-product cutoff
            const std::uint64_t contour_lim = ContourSpec{}.prime_cutoff + 1;
            const FactorTables tables = build_factor_tables(std::max(
                static_cast<std::uint64_t>(std::ceil(std::max(xmax, ymax))) + 2, contour_lim));
            const EigenformCoefficients coeffs = lambda_table(std::max<std::uint64_t>(
                static_cast<std::uint64_t>(std::ceil(ymax)) + 2, contour_lim));
            const ExperimentReport rep = run_verify(cfg, coeffs, tables);
            const std::string payload =
                cfg.format == "json" ? report_to_json(rep) : report_to_csv(rep);
            if (cfg.out_path.empty())
                std::cout << payload << "\n";
            else
                emit_report(rep, cfg.format, cfg.out_path);

            bool ok = true;
            for (const auto& r : rep.records)
                if (!(r.ratio > 0.5 && r.ratio < 1.5)) ok = false;
            std::fprintf(stderr, "decay_slope=%.4f checks=%s\n", rep.decay_slope,
                         ok ? "PASS" : "FAIL");
            return ok ? kExitOk : kExitCheckFailed;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCheckFailed;
    }
    return kExitConfigError;
}
