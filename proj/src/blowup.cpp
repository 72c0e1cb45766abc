#include "ssk/blowup.hpp"

#include <cmath>
#include <stdexcept>

#include "ssk/gamma_kit.hpp"

namespace ssk::blowup {

namespace {

constexpr double kLog2 = 0.69314718055994530942;

using gamma::SignedLogValue;

double log_factorial(long k) { return std::lgamma(static_cast<double>(k) + 1.0); }

void check_range(int n, int alpha) {
    if (n < 1) throw std::domain_error("blowup: n >= 1 required");
    if (alpha < 0 || alpha > n - 1)
        throw std::domain_error("blowup: alpha must lie in [0, n-1]");
}

// (s,t)-independent amplitude A(m); zero() on Tail signatures.
//
// Each reciprocal Gamma in the coefficient sits at (or off) the integer
// lattice when (sigma, tau) -> (-n+alpha, 0):
//   m_k >= alpha:  1/Gamma(sigma-m_k+n) has a zero of residue-rate
//                  (-1)^{m_k-alpha}(m_k-alpha)! * eps*s,
//   0 <= m_k < alpha: both Gammas are finite,
//   m_k < 0:       1/Gamma(tau+m_k+1) has a zero of rate
//                  (-1)^{m_k+1}(-m_k-1)! * eps*t,
// while the prefactor Gamma(sigma+tau+j) carries n-alpha simple poles of
// total rate prod (-1)^M/M! / (eps(s+t))^{n-alpha}. The eps powers cancel
// exactly on non-Tail signatures and overshoot (limit 0) on Tail ones.
SignedLogValue amplitude(const sig::Signature& m, int n, int alpha) {
    if (sig::classify_unipotent(m, alpha).is_tail()) return SignedLogValue::zero();

    SignedLogValue acc = SignedLogValue::one();

    // K_{n,alpha}: residues of the prefactor poles, the 2^{-(sigma+tau)n}
    // value and the finite prefactor Gammas
    long half = static_cast<long>(n) * (n - 1) / 2;
    if (half % 2 != 0) acc.sign = -acc.sign;
    acc.logmag += static_cast<double>(n - alpha) * n * kLog2;
    for (long M = 0; M < n - alpha; ++M) {
        if (M % 2 != 0) acc.sign = -acc.sign;
        acc.logmag -= log_factorial(M);
    }
    for (int j = 1; j <= alpha; ++j) acc.logmag += log_factorial(j - 1);

    if (m.sum() % 2 != 0) acc.sign = -acc.sign;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            acc *= SignedLogValue::from_value(static_cast<double>(m[a] - m[b]));

    for (int k = 0; k < n; ++k) {
        long v = m[k];
        if (v >= alpha) {
            if ((v - alpha) % 2 != 0) acc.sign = -acc.sign;
            acc.logmag += log_factorial(v - alpha) - log_factorial(v);
        } else if (v >= 0) {
            acc.logmag -= log_factorial(alpha - v - 1) + log_factorial(v);
        } else {
            if ((v + 1) % 2 != 0) acc.sign = -acc.sign;
            acc.logmag += log_factorial(-v - 1) - log_factorial(alpha - v - 1);
        }
    }
    return acc;
}

} // namespace

cplx limit_coefficient(const sig::Signature& m, const BlowupParams& bp) {
    check_range(bp.n, bp.alpha);
    if (m.n() != bp.n) throw std::invalid_argument("limit_coefficient: size mismatch");
    if (bp.s + bp.t == 0.0) throw std::domain_error("limit_coefficient: s+t = 0");

    SignedLogValue a = amplitude(m, bp.n, bp.alpha);
    if (a.is_zero()) return 0.0;

    int high = 0, neg = 0;
    for (int k = 0; k < bp.n; ++k) {
        if (m[k] >= bp.alpha) ++high;
        else if (m[k] < 0) ++neg;
    }
    double st = a.value();
    for (int i = 0; i < high; ++i) st *= bp.s;
    for (int i = 0; i < neg; ++i) st *= bp.t;
    return st / std::pow(bp.s + bp.t, bp.n - bp.alpha);
}

std::vector<kernel::CoefficientTable> decompose_lj(int n, int alpha, long M) {
    check_range(n, alpha);
    kernel::KernelParams base{n, cplx(static_cast<double>(-n + alpha), 0.0), cplx(0.0, 0.0)};
    std::vector<kernel::CoefficientTable> tables(static_cast<size_t>(n - alpha) + 1);
    for (auto& t : tables) {
        t.params = base;
        t.cutoff = M;
    }
    for (const auto& m : sig::all_signatures(n, M)) {
        auto cls = sig::classify_unipotent(m, alpha);
        if (cls.is_tail()) continue;
        tables[static_cast<size_t>(cls.j)].entries.emplace(m, amplitude(m, n, alpha).value());
    }
    return tables;
}

kernel::CoefficientTable lj_via_derivative(int j, int n, int alpha, long M) {
    check_range(n, alpha);
    int deg = n - alpha;
    if (j < 0 || j > deg) throw std::domain_error("lj_via_derivative: j out of [0, n-alpha]");

    kernel::CoefficientTable out;
    out.params = kernel::KernelParams{n, cplx(static_cast<double>(-n + alpha), 0.0),
                                      cplx(0.0, 0.0)};
    out.cutoff = M;

    for (const auto& m : sig::all_signatures(n, M)) {
        // Newton divided differences of P at t = 0..deg
        std::vector<double> dd(static_cast<size_t>(deg) + 1);
        for (int i = 0; i <= deg; ++i) {
            BlowupParams bp{n, alpha, 1.0, static_cast<double>(i)};
            dd[static_cast<size_t>(i)] =
                std::pow(1.0 + bp.t, deg) * limit_coefficient(m, bp).real();
        }
        for (int lev = 1; lev <= deg; ++lev)
            for (int i = deg; i >= lev; --i)
                dd[static_cast<size_t>(i)] =
                    (dd[static_cast<size_t>(i)] - dd[static_cast<size_t>(i - 1)]) /
                    static_cast<double>(lev);

        // expand the Newton form to monomial coefficients
        std::vector<double> poly{dd[static_cast<size_t>(deg)]};
        for (int k = deg - 1; k >= 0; --k) {
            poly.insert(poly.begin(), 0.0);
            for (size_t i = 0; i + 1 < poly.size(); ++i)
                poly[i] += poly[i + 1] * static_cast<double>(-k);
            poly[0] += dd[static_cast<size_t>(k)];
        }
        out.entries.emplace(m, poly[static_cast<size_t>(j)]);
    }
    return out;
}

} // namespace ssk::blowup
