#include "ssk/su11.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ssk/gamma_kit.hpp"

namespace ssk::su11 {

namespace {

bool nearly_real(cplx z) { return std::fabs(z.imag()) <= 1e-12; }

} // namespace

void FourierTruncation::set(long k, cplx v) {
    if (k < -window || k > window)
        throw std::out_of_range("FourierTruncation: mode outside the window");
    coefficients[k] = v;
}

cplx FourierTruncation::at(long k) const {
    auto it = coefficients.find(k);
    return it == coefficients.end() ? cplx(0.0, 0.0) : it->second;
}

cplx multiplier_c(long k, const Su11Params& params) {
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * gamma::reciprocal_gamma(params.p + static_cast<double>(k)) *
           gamma::reciprocal_gamma(params.q - static_cast<double>(k));
}

double complementary_inner(long k, const Su11Params& params) {
    if (!nearly_real(params.p) || !nearly_real(params.q))
        throw std::domain_error("complementary_inner: real p, q required");
    double p = params.p.real(), q = params.q.real();
    if (gamma::is_nonpositive_integer(p) || gamma::is_nonpositive_integer(q) ||
        p == std::floor(p) || q == std::floor(q))
        throw std::domain_error("complementary_inner: integer p or q");
    gamma::SignedLogValue h = gamma::pochhammer_slv(1.0 - q, k);
    h /= gamma::pochhammer_slv(p, k);
    h /= gamma::signed_log_gamma(p);
    h /= gamma::signed_log_gamma(q);
    return h.value();
}

FourierTruncation lie_apply(Lie which, const Su11Params& params,
                            const FourierTruncation& f) {
    FourierTruncation out(f.window);
    for (const auto& [k, v] : f.coefficients) {
        if (v == cplx(0.0, 0.0)) continue;
        double kk = static_cast<double>(k);
        cplx factor;
        long target = k;
        switch (which) {
            case Lie::L0: factor = kk + 0.5 * (params.p - params.q); break;
            case Lie::Lminus:
                factor = kk - params.q;
                target = k - 1;
                break;
            case Lie::Lplus:
                factor = kk + params.p;
                target = k + 1;
                break;
        }
        cplx contribution = factor * v;
        if (contribution == cplx(0.0, 0.0)) continue;
        if (target < -f.window || target > f.window)
            throw std::out_of_range("lie_apply: shifted mode leaves the window");
        out.coefficients[target] += contribution;
    }
    return out;
}

cplx pairing_pi(const FourierTruncation& f1, const FourierTruncation& f2) {
    cplx acc = 0.0;
    for (const auto& [k, v] : f1.coefficients) acc += v * f2.at(-k);
    return acc;
}

std::set<Su11Class> classify_su11(const Su11Params& params) {
    std::set<Su11Class> out;
    const cplx p = params.p, q = params.q;
    if (std::fabs(p.imag() - q.imag()) <= 1e-12 &&
        std::fabs(p.real() + q.real() - 1.0) <= 1e-12)
        out.insert(Su11Class::PrincipalUnitary);
    if (nearly_real(p) && nearly_real(q) && p.real() > 0.0 && p.real() < 1.0 &&
        q.real() > 0.0 && q.real() < 1.0)
        out.insert(Su11Class::Complementary);
    if (std::abs(q) <= 1e-12 && nearly_real(p) && p.real() > 0.0)
        out.insert(Su11Class::HighestWeight);
    if (std::abs(p) <= 1e-12 && nearly_real(q) && q.real() > 0.0)
        out.insert(Su11Class::LowestWeight);
    return out;
}

const char* to_string(Su11Class c) {
    switch (c) {
        case Su11Class::PrincipalUnitary: return "principal-unitary";
        case Su11Class::Complementary: return "complementary";
        case Su11Class::HighestWeight: return "highest-weight";
        case Su11Class::LowestWeight: return "lowest-weight";
    }
    return "?";
}

double blowup_multiplier_10(long k, double s, double t) {
    if (s + t == 0.0) throw std::domain_error("blowup_multiplier_10: s+t = 0");
    return k >= 0 ? t / (t + s) : -s / (t + s);
}

double asymptotic_exponent(const Su11Params& params, long k_lo, long k_hi) {
    if (k_lo >= k_hi) throw std::domain_error("asymptotic_exponent: empty window");
    std::vector<double> xs, ys;
    for (long k = k_lo; k <= k_hi; ++k) {
        if (k == 0) continue;
        cplx a1 = params.p + static_cast<double>(k);
        cplx a2 = params.q - static_cast<double>(k);
        if (gamma::is_nonpositive_integer(a1) || gamma::is_nonpositive_integer(a2))
            continue;   // exact zero of the multiplier
        // log|c_k| assembled in log scale; |c_k| itself underflows past
        // |k| ~ 170
        xs.push_back(std::log(std::fabs(static_cast<double>(k))));
        ys.push_back(-gamma::log_gamma(a1).real() - gamma::log_gamma(a2).real());
    }
    if (xs.size() < 2)
        throw std::domain_error("asymptotic_exponent: window degenerate after skips");
    double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw std::domain_error("asymptotic_exponent: collinear window");
    return (n * sxy - sx * sy) / denom;
}

} // namespace ssk::su11
