// Command-line front end: coefficient tables (expand), the positivity map
// of the (sigma, tau) plane (posmap), blow-up decompositions at the integer
// points (blowup), and the verification suite (verify).
//
// Exit codes: 0 ok, 1 verification failure, 2 domain error (pole locus,
// out-of-range parameters, usage errors).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ssk/blowup.hpp"
#include "ssk/checks.hpp"
#include "ssk/kernel.hpp"
#include "ssk/table_io.hpp"

namespace {

int run_expand(int n, double sr, double si, double tr, double ti, long mmax,
               const std::string& format) {
    ssk::kernel::KernelParams params{n, {sr, si}, {tr, ti}};
    auto table = ssk::kernel::build_coefficient_table(params, mmax);
    if (format == "json")
        std::cout << ssk::table_io::to_json(table) << "\n";
    else
        std::cout << ssk::table_io::to_tsv(table);
    return 0;
}

int run_posmap(const ssk::table_io::PosmapGrid& grid, const std::string& format) {
    if (format == "svg")
        std::cout << ssk::table_io::posmap_svg(grid);
    else
        std::cout << ssk::table_io::posmap_tsv(grid);
    return 0;
}

char piece_sign(const ssk::kernel::CoefficientTable& table) {
    for (const auto& [m, v] : table.entries) {
        if (v.real() > 0.0) return '+';
        if (v.real() < 0.0) return '-';
    }
    return '0';
}

int run_blowup(int n, int alpha, long mmax, const std::string& format) {
    auto tables = ssk::blowup::decompose_lj(n, alpha, mmax);
    if (format == "json") {
        nlohmann::json out;
        out["schema"] = 1;
        out["n"] = n;
        out["alpha"] = alpha;
        out["cutoff"] = mmax;
        out["pieces"] = nlohmann::json::array();
        for (size_t j = 0; j < tables.size(); ++j) {
            nlohmann::json piece =
                nlohmann::json::parse(ssk::table_io::blowup_to_json(tables[j], alpha));
            piece["j"] = j;
            piece["sign"] = std::string(1, piece_sign(tables[j]));
            out["pieces"].push_back(std::move(piece));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (size_t j = 0; j < tables.size(); ++j) {
        std::cout << "# piece j=" << j << " class Z(" << j << ") sign "
                  << piece_sign(tables[j]) << "\n";
        std::cout << ssk::table_io::blowup_to_tsv(tables[j], alpha);
    }
    std::cout << "# tail signatures (vanish in every directional limit)\n";
    std::cout << ssk::table_io::tail_report_tsv(n, alpha, mmax);
    return 0;
}

int run_verify(const std::string& suite, bool quick, int only_n) {
    ssk::checks::CheckOptions opt;
    opt.quick = quick;
    opt.only_n = only_n;
    auto results = ssk::checks::run_suite(suite, opt);
    nlohmann::json report;
    report["schema"] = 1;
    report["suite"] = suite;
    report["quick"] = quick;
    if (only_n != 0) report["n"] = only_n;
    report["checks"] = nlohmann::json::array();
    bool all_pass = true;
    double total = 0.0;
    for (const auto& r : results) {
        nlohmann::json c;
        c["name"] = r.name;
        if (std::isfinite(r.residual))
            c["residual"] = r.residual;
        else
            c["residual"] = nullptr;
        c["tolerance"] = r.tolerance;
        c["pass"] = r.pass;
        c["seconds"] = r.seconds;
        c["cases"] = r.cases;
        if (!r.detail.empty()) c["detail"] = r.detail;
        report["checks"].push_back(std::move(c));
        all_pass = all_pass && r.pass;
        total += r.seconds;
    }
    report["pass"] = all_pass;
    report["seconds"] = total;
    std::cout << report.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"character expansions of determinant-power kernels on U(n)"};
    app.require_subcommand(1);
    app.set_config("--config")->envname("SSKERNEL_CONFIG");

    // expand
    auto* expand = app.add_subcommand("expand", "coefficient table c_m over labels in [-M, M]");
    int ex_n = 1;
    double ex_sr = 0.0, ex_si = 0.0, ex_tr = 0.0, ex_ti = 0.0;
    long ex_m = 3;
    std::string ex_format = "tsv";
    expand->add_option("--n", ex_n, "matrix size")->required()->check(CLI::Range(1, 8));
    expand->add_option("--sigma", ex_sr, "Re sigma")->required();
    expand->add_option("--tau", ex_tr, "Re tau")->required();
    expand->add_option("--sigma-im", ex_si, "Im sigma");
    expand->add_option("--tau-im", ex_ti, "Im tau");
    expand->add_option("--mmax", ex_m, "label cutoff M")->check(CLI::PositiveNumber);
    expand->add_option("--format", ex_format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));

    // posmap
    auto* posmap = app.add_subcommand("posmap", "positivity classification of the (sigma, tau) plane");
    int pm_n = 1;
    double pm_smin = 0.0, pm_smax = 2.0, pm_tmin = -5.0, pm_tmax = 5.0, pm_step = 0.25;
    std::string pm_format = "tsv";
    posmap->add_option("--n", pm_n, "matrix size")->required()->check(CLI::Range(1, 8));
    auto* pm_smin_opt = posmap->add_option("--sigma-min", pm_smin, "default -n-3");
    posmap->add_option("--sigma-max", pm_smax, "default 2");
    posmap->add_option("--tau-min", pm_tmin, "default -5");
    posmap->add_option("--tau-max", pm_tmax, "default 5");
    posmap->add_option("--step", pm_step, "grid step; samples sit at half-step offsets")
        ->check(CLI::PositiveNumber);
    posmap->add_option("--format", pm_format, "tsv|svg")
        ->check(CLI::IsMember({"tsv", "svg"}));

    // blowup
    auto* blowup = app.add_subcommand("blowup", "decomposition of the limit at sigma = -n + alpha, tau = 0");
    int bl_n = 1, bl_alpha = 0;
    long bl_m = 3;
    std::string bl_format = "tsv";
    blowup->add_option("--n", bl_n, "matrix size")->required()->check(CLI::Range(1, 8));
    blowup->add_option("--alpha", bl_alpha, "integer point, 0 <= alpha <= n-1")->required();
    blowup->add_option("--mmax", bl_m, "label cutoff M")->check(CLI::PositiveNumber);
    blowup->add_option("--format", bl_format, "tsv|json")
        ->check(CLI::IsMember({"tsv", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run invariant suites, JSON report");
    std::string vf_suite = "all";
    bool vf_quick = false;
    int vf_n = 0;
    std::vector<std::string> suites = ssk::checks::suite_names();
    suites.insert(suites.begin(), "all");
    verify->add_option("--suite", vf_suite, "suite name or 'all'")
        ->check(CLI::IsMember(suites));
    verify->add_flag("--quick", vf_quick, "reduced case counts");
    verify->add_option("--n", vf_n, "restrict checks to one matrix size")
        ->check(CLI::Range(1, 8));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*expand) return run_expand(ex_n, ex_sr, ex_si, ex_tr, ex_ti, ex_m, ex_format);
        if (*posmap) {
            ssk::table_io::PosmapGrid grid;
            grid.n = pm_n;
            grid.sigma_min = pm_smin_opt->count() > 0 ? pm_smin : -pm_n - 3.0;
            grid.sigma_max = pm_smax;
            grid.tau_min = pm_tmin;
            grid.tau_max = pm_tmax;
            grid.step = pm_step;
            return run_posmap(grid, pm_format);
        }
        if (*blowup) return run_blowup(bl_n, bl_alpha, bl_m, bl_format);
        if (*verify) return run_verify(vf_suite, vf_quick, vf_n);
    } catch (const ssk::kernel::prefactor_pole_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
