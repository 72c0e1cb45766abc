#pragma once

// The verification suite: every invariant the library promises, packaged as
// named residual checks with fixed seeds and a quick mode. Each check is
// self-contained (draws its own deterministic inputs, runs the identity it
// names, reports the worst residual); run_suite groups them by module.
//
// Residual semantics: checks against an analytic tolerance report the worst
// relative error seen; structural checks (support equality, sign patterns,
// classification tables) report a violation count against tolerance 0.

#include <string>
#include <vector>

namespace ssk::checks {

struct CheckOptions {
    bool quick = false;   // trimmed case counts, same identities
    int only_n = 0;       // 0 = all sizes; otherwise restrict n-loops
};

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double seconds = 0.0;
    long cases = 0;        // individual comparisons exercised
    std::string detail;    // sub-residual breakdown or failure context
};

// kernel
CheckResult check_bridge_n1(const CheckOptions& opt);
CheckResult check_shift_identity(const CheckOptions& opt);
CheckResult check_conjugation_swap(const CheckOptions& opt);
CheckResult check_sin_form(const CheckOptions& opt);
CheckResult check_growth_exponent(const CheckOptions& opt);
CheckResult check_tau0_berezin_wallach(const CheckOptions& opt);
CheckResult check_positivity_map(const CheckOptions& opt);
CheckResult check_l2_diagonal(const CheckOptions& opt);
CheckResult check_hermitian_forms(const CheckOptions& opt);

// oracle
CheckResult check_lobachevsky(const CheckOptions& opt);
CheckResult check_det_reduction_n1(const CheckOptions& opt);
CheckResult check_det_reduction_n2(const CheckOptions& opt);
CheckResult check_det_reduction_n3(const CheckOptions& opt);
CheckResult check_full_quadrature(const CheckOptions& opt);
CheckResult check_gauss_2f1(const CheckOptions& opt);

// blowup
CheckResult check_blowup_limits(const CheckOptions& opt);
CheckResult check_blowup_decomposition(const CheckOptions& opt);
CheckResult check_blowup_dd_route(const CheckOptions& opt);

// su11
CheckResult check_su11_intertwining(const CheckOptions& opt);
CheckResult check_su11_duality(const CheckOptions& opt);
CheckResult check_su11_form_invariance(const CheckOptions& opt);
CheckResult check_su11_positivity(const CheckOptions& opt);
CheckResult check_su11_classify(const CheckOptions& opt);
CheckResult check_su11_exponent(const CheckOptions& opt);
CheckResult check_su11_blowup(const CheckOptions& opt);

// group
CheckResult check_group_action(const CheckOptions& opt);
CheckResult check_group_jacobian(const CheckOptions& opt);
CheckResult check_group_cartan(const CheckOptions& opt);
CheckResult check_group_cover(const CheckOptions& opt);
CheckResult check_group_covariance(const CheckOptions& opt);
CheckResult check_group_weight_unitarity(const CheckOptions& opt);
CheckResult check_group_stabilizer(const CheckOptions& opt);

// detid
CheckResult check_det_identities(const CheckOptions& opt);

// schur
CheckResult check_characters_dimension(const CheckOptions& opt);
CheckResult check_characters_orthogonality(const CheckOptions& opt);
CheckResult check_characters_conjugation(const CheckOptions& opt);

// Suite names accepted by run_suite, not including "all".
std::vector<std::string> suite_names();

// Runs one suite (or "all") in registration order. Checks pinned to a fixed
// n that conflicts with opt.only_n are skipped. Throws std::invalid_argument
// on an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& opt = {});

} // namespace ssk::checks
