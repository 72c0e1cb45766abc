// Acceptance gate: the twelve headline requirements, each mapped onto the
// named checks of the verification suite (full depth, fixed seeds) plus one
// end-to-end CLI run. Prints one line per criterion and exits nonzero if any
// fails or overruns its time budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "ssk/checks.hpp"

using ssk::checks::CheckOptions;
using ssk::checks::CheckResult;

namespace {

struct Criterion {
    int id;
    std::string label;
    bool pass = true;
    double seconds = 0.0;
    double budget = 0.0;   // wall-clock cap, 0 = none
    std::string detail;
};

using CheckFn = CheckResult (*)(const CheckOptions&);

Criterion run_checks(int id, const std::string& label,
                     std::vector<CheckFn> checks, double budget) {
    Criterion c{id, label};
    c.budget = budget;
    CheckOptions opt;
    for (CheckFn fn : checks) {
        CheckResult r = fn(opt);
        c.seconds += r.seconds;
        if (!r.pass) c.pass = false;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s%s %.2e/%.0e", c.detail.empty() ? "" : "; ",
                      r.name.c_str(), r.residual, r.tolerance);
        c.detail += buf;
    }
    if (budget > 0.0 && c.seconds > budget) {
        c.pass = false;
        c.detail += " [over budget]";
    }
    return c;
}

} // namespace

int main() {
    std::vector<Criterion> all;

    all.push_back(run_checks(1, "n=1 Fourier bridge", {ssk::checks::check_bridge_n1},
                             1.0));
    all.push_back(run_checks(
        2, "determinant reduction + full quadrature",
        {ssk::checks::check_det_reduction_n1, ssk::checks::check_det_reduction_n2,
         ssk::checks::check_det_reduction_n3, ssk::checks::check_full_quadrature},
        120.0));
    all.push_back(run_checks(3, "positivity map vs brute sign scan",
                             {ssk::checks::check_positivity_map}, 120.0));
    all.push_back(run_checks(4, "determinant shift identity, sign (-1)^n",
                             {ssk::checks::check_shift_identity}, 0.0));
    all.push_back(run_checks(5, "tau = 0 support and semi-definiteness",
                             {ssk::checks::check_tau0_berezin_wallach}, 0.0));
    all.push_back(run_checks(6, "blow-up limits and unipotent decomposition",
                             {ssk::checks::check_blowup_limits,
                              ssk::checks::check_blowup_decomposition,
                              ssk::checks::check_blowup_dd_route},
                             0.0));
    all.push_back(run_checks(7, "renormalized L2 diagonal ratios",
                             {ssk::checks::check_l2_diagonal}, 0.0));
    all.push_back(run_checks(
        8, "n=1 multiplier story",
        {ssk::checks::check_su11_intertwining, ssk::checks::check_su11_duality,
         ssk::checks::check_su11_form_invariance, ssk::checks::check_su11_positivity,
         ssk::checks::check_su11_classify, ssk::checks::check_su11_exponent,
         ssk::checks::check_su11_blowup},
        0.0));
    all.push_back(run_checks(9, "determinant identities",
                             {ssk::checks::check_det_identities}, 30.0));
    all.push_back(run_checks(
        10, "group geometry and covariance",
        {ssk::checks::check_group_action, ssk::checks::check_group_jacobian,
         ssk::checks::check_group_cartan, ssk::checks::check_group_cover,
         ssk::checks::check_group_covariance,
         ssk::checks::check_group_weight_unitarity,
         ssk::checks::check_group_stabilizer},
        60.0));
    all.push_back(run_checks(11, "character sanity",
                             {ssk::checks::check_characters_dimension,
                              ssk::checks::check_characters_orthogonality,
                              ssk::checks::check_characters_conjugation},
                             0.0));

    // criterion 12: the shipped binary verifies itself end to end
    {
        Criterion c{12, "sskernel verify --suite all --quick"};
        c.budget = 300.0;
        auto t0 = std::chrono::steady_clock::now();
        std::string cmd = std::string(SSKERNEL_BIN) + " verify --suite all --quick";
#ifdef _WIN32
        cmd += " > NUL";
#else
        cmd += " > /dev/null 2>&1";
#endif
        int status = std::system(cmd.c_str());
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
        int code = (status == -1) ? -1 : WEXITSTATUS(status);
        c.pass = code == 0 && c.seconds < c.budget;
        char buf[64];
        std::snprintf(buf, sizeof buf, "exit %d", code);
        c.detail = buf;
        all.push_back(c);
    }

    bool ok = true;
    for (const Criterion& c : all) {
        if (!c.pass) ok = false;
        std::string cap;
        if (c.budget > 0.0)
            cap = " / " + std::to_string(static_cast<int>(c.budget)) + "s cap";
        std::printf("criterion %2d %-44s %s  %6.2fs%s  (%s)\n", c.id, c.label.c_str(),
                    c.pass ? "PASS" : "FAIL", c.seconds, cap.c_str(),
                    c.detail.c_str());
    }
    std::printf("acceptance: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}
