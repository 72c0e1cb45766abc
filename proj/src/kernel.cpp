#include "ssk/kernel.hpp"

#include <cmath>

#include "ssk/gamma_kit.hpp"

namespace ssk::kernel {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLog2 = 0.69314718055994530942;

using gamma::SignedLogValue;

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

// prod_{a<b} (m_a - m_b) as a sign-tracked log (always positive here, but
// kept general)
SignedLogValue vandermonde_slv(const sig::Signature& m) {
    SignedLogValue acc = SignedLogValue::one();
    for (int a = 0; a < m.n(); ++a)
        for (int b = a + 1; b < m.n(); ++b)
            acc *= SignedLogValue::from_value(static_cast<double>(m[a] - m[b]));
    return acc;
}

// m-dependent factor, real path: (-1)^{sum m} prod diffs / prod Gamma Gamma
SignedLogValue normalized_slv(const sig::Signature& m, double s, double t) {
    int n = m.n();
    SignedLogValue acc = vandermonde_slv(m);
    if (parity_sign(m.sum()) < 0) acc.sign = -acc.sign;
    for (int j = 0; j < n; ++j) {
        double a1 = s - static_cast<double>(m[j]) + n;
        double a2 = t + static_cast<double>(m[j]) + 1;
        if (gamma::is_nonpositive_integer(a1) || gamma::is_nonpositive_integer(a2))
            return SignedLogValue::zero();
        acc /= gamma::signed_log_gamma(a1);
        acc /= gamma::signed_log_gamma(a2);
    }
    return acc;
}

cplx normalized_cplx(const sig::Signature& m, cplx s, cplx t) {
    int n = m.n();
    cplx logsum = 0.0;
    for (int j = 0; j < n; ++j) {
        cplx a1 = s - static_cast<double>(m[j]) + static_cast<double>(n);
        cplx a2 = t + static_cast<double>(m[j]) + 1.0;
        if (gamma::is_nonpositive_integer(a1) || gamma::is_nonpositive_integer(a2))
            return 0.0;
        logsum -= gamma::log_gamma(a1);
        logsum -= gamma::log_gamma(a2);
    }
    double diffs = 1.0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) diffs *= static_cast<double>(m[a] - m[b]);
    return std::exp(logsum) * diffs * static_cast<double>(parity_sign(m.sum()));
}

void check_prefactor(int n, cplx st) {
    for (int j = 1; j <= n; ++j)
        if (gamma::is_nonpositive_integer(st + static_cast<double>(j)))
            throw prefactor_pole_error(j);
}

} // namespace

cplx coefficient_normalized(const sig::Signature& m, const KernelParams& params) {
    if (m.n() != params.n)
        throw std::invalid_argument("coefficient: signature size differs from params.n");
    if (params.real_parameters())
        return normalized_slv(m, params.sigma.real(), params.tau.real()).value();
    return normalized_cplx(m, params.sigma, params.tau);
}

cplx coefficient(const sig::Signature& m, const KernelParams& params) {
    if (m.n() != params.n)
        throw std::invalid_argument("coefficient: signature size differs from params.n");
    int n = params.n;
    cplx st = params.sigma + params.tau;
    check_prefactor(n, st);

    if (params.real_parameters()) {
        SignedLogValue acc = normalized_slv(m, params.sigma.real(), params.tau.real());
        if (acc.is_zero()) return 0.0;
        if (parity_sign(static_cast<long>(n) * (n - 1) / 2) < 0) acc.sign = -acc.sign;
        acc.logmag -= st.real() * n * kLog2;
        for (int j = 1; j <= n; ++j)
            acc *= gamma::signed_log_gamma(st.real() + j);
        return acc.value();
    }

    cplx norm = normalized_cplx(m, params.sigma, params.tau);
    if (norm == cplx(0.0, 0.0)) return 0.0;
    cplx logpre = -st * (static_cast<double>(n) * kLog2);
    for (int j = 1; j <= n; ++j)
        logpre += gamma::log_gamma(st + static_cast<double>(j));
    return static_cast<double>(parity_sign(static_cast<long>(n) * (n - 1) / 2)) *
           std::exp(logpre) * norm;
}

cplx coefficient_sin_form(const sig::Signature& m, const KernelParams& params) {
    // reflection of the reciprocal-Gamma form; only meaningful off the
    // integer loci (the sin prefactor and the Gamma poles trade zeros)
    int n = params.n;
    if (m.n() != n)
        throw std::invalid_argument("coefficient: signature size differs from params.n");
    cplx st = params.sigma + params.tau;
    check_prefactor(n, st);
    cplx logsum = -st * (static_cast<double>(n) * kLog2);
    for (int j = 1; j <= n; ++j)
        logsum += gamma::log_gamma(st + static_cast<double>(j));
    for (int j = 0; j < n; ++j) {
        logsum += gamma::log_gamma(-params.sigma + static_cast<double>(m[j]) -
                                   static_cast<double>(n) + 1.0);
        logsum -= gamma::log_gamma(params.tau + static_cast<double>(m[j]) + 1.0);
    }
    double diffs = 1.0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) diffs *= static_cast<double>(m[a] - m[b]);
    cplx sin_pref = std::pow(std::sin(-kPi * params.sigma) / kPi, n);
    return static_cast<double>(parity_sign(static_cast<long>(n) * (n - 1) / 2)) *
           sin_pref * std::exp(logsum) * diffs;
}

cplx kernel_pointwise(const schur::EigenAngles& angles, const KernelParams& params) {
    if (angles.n() != params.n)
        throw std::invalid_argument("kernel_pointwise: angle count differs from params.n");
    cplx st = params.sigma + params.tau;
    cplx smt = params.sigma - params.tau;
    cplx log_acc = 0.0;
    for (double psi : angles.psi) {
        double s = std::sin(psi / 2.0);
        if (s == 0.0) {
            if (st == cplx(0.0, 0.0)) {
                log_acc += cplx(0.0, 0.5) * smt * (psi - kPi);
                continue;
            }
            if (st.real() > 0.0) return 0.0;   // sin^{positive power} limit
            throw std::domain_error("kernel_pointwise: singular at psi = 0");
        }
        log_acc += st * std::log(s) + cplx(0.0, 0.5) * smt * (psi - kPi);
    }
    return std::exp(log_acc);
}

const char* to_string(PositivityClass c) {
    switch (c) {
        case PositivityClass::PositiveDefinite: return "positive-definite";
        case PositivityClass::NegativeDefinite: return "negative-definite";
        case PositivityClass::Indefinite: return "indefinite";
        case PositivityClass::SemiDefinite: return "semi-definite";
        case PositivityClass::OnIntegerLocus: return "on-integer-locus";
    }
    return "?";
}

PositivityClass classify_positivity(const KernelParams& params) {
    if (!params.real_parameters())
        throw std::invalid_argument("classify_positivity: needs real sigma, tau");
    double s = params.sigma.real(), t = params.tau.real();
    if (s == std::floor(s) || t == std::floor(t)) return PositivityClass::OnIntegerLocus;
    int n = params.n;
    if (std::floor(-s - n) != std::floor(t)) return PositivityClass::Indefinite;

    // common sign read at the reference signature (n-1, ..., 1, 0);
    // on the prefactor pole locus (sigma+tau = -n inside the square) the
    // m-independent scale is singular and the sign of the normalized part
    // alone is reported
    std::vector<long> ref(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ref[static_cast<size_t>(i)] = n - 1 - i;
    sig::Signature refsig(std::move(ref));
    double v;
    try {
        v = coefficient(refsig, params).real();
    } catch (const prefactor_pole_error&) {
        v = coefficient_normalized(refsig, params).real();
    }
    return v >= 0.0 ? PositivityClass::PositiveDefinite : PositivityClass::NegativeDefinite;
}

CoefficientTable build_coefficient_table(const KernelParams& params, long M) {
    if (M < 1) throw std::invalid_argument("build_coefficient_table: cutoff M >= 1");
    CoefficientTable t;
    t.params = params;
    t.cutoff = M;
    for (const auto& m : sig::all_signatures(params.n, M))
        t.entries.emplace(m, coefficient(m, params));
    return t;
}

cplx hermitian_form(const CoefficientTable& table, const HarmonicVector& f1,
                    const HarmonicVector& f2) {
    cplx acc = 0.0;
    for (const auto& [m, a1] : f1.amp) {
        auto it2 = f2.amp.find(m);
        if (it2 == f2.amp.end()) continue;
        auto itc = table.entries.find(m);
        if (itc == table.entries.end())
            throw std::out_of_range("hermitian_form: harmonic outside the table cutoff");
        acc += itc->second / static_cast<double>(sig::dimension(m)) * a1 *
               std::conj(it2->second);
    }
    return acc;
}

double l2_diagonal_check(const sig::Signature& m, int n, double tau) {
    if (m.n() != n) throw std::invalid_argument("l2_diagonal_check: size mismatch");
    double diffs = 1.0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) diffs *= static_cast<double>(m[a] - m[b]);
    double c = parity_sign(static_cast<long>(n) * (n - 1) / 2) * parity_sign(n) *
               std::pow(2.0, static_cast<double>(n) * n) *
               std::pow(std::sin(kPi * tau) / kPi, n);
    return c * diffs;
}

BerezinWallachResult berezin_wallach(double sigma, int n) {
    BerezinWallachResult r;
    if (sigma < -(static_cast<double>(n) - 1.0)) {
        r.semidefinite = true;
        r.alpha = -1;
        r.support = "m_" + std::to_string(n) + " >= 0";
        return r;
    }
    long k = std::lround(sigma);
    if (std::fabs(sigma - static_cast<double>(k)) < 1e-12 && k <= 0 && k >= -(n - 1)) {
        r.semidefinite = true;
        r.alpha = static_cast<int>(n + k);   // sigma = -n + alpha
        std::string rule = "m_" + std::to_string(n) + " = 0";
        for (int i = 1; i < r.alpha; ++i)
            rule += ", m_" + std::to_string(n - i) + " = " + std::to_string(i);
        r.support = rule;
        return r;
    }
    r.semidefinite = false;
    r.support = "";
    return r;
}

double sobolev_norm(const HarmonicVector& f, double s) {
    double acc = 0.0;
    for (const auto& [m, a] : f.amp) {
        double w = 1.0;
        for (long v : m.labels())
            w *= std::pow(1.0 + std::fabs(static_cast<double>(v)), s);
        acc += std::norm(a) * w;
    }
    return acc;
}

} // namespace ssk::kernel
