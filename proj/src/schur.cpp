#include "ssk/schur.hpp"

#include <cmath>

#include "ssk/detail/determinant.hpp"

namespace ssk::schur {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double circular_gap(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, kTwoPi - d);
}

cplx bialternant(const sig::Signature& m, const std::vector<double>& psi) {
    int n = static_cast<int>(psi.size());
    std::vector<cplx> num(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            num[static_cast<size_t>(k) * n + j] =
                std::exp(cplx(0.0, static_cast<double>(m[j]) * psi[static_cast<size_t>(k)]));
    cplx den = 1.0;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            den *= std::exp(cplx(0.0, psi[static_cast<size_t>(k)])) -
                   std::exp(cplx(0.0, psi[static_cast<size_t>(l)]));
    return detail::determinant(std::move(num), n) / den;
}

} // namespace

EigenAngles::EigenAngles(std::vector<double> angles) : psi(std::move(angles)) {
    if (psi.empty()) throw std::invalid_argument("EigenAngles: need n >= 1");
    for (double& a : psi) {
        a = std::fmod(a, kTwoPi);
        if (a < 0.0) a += kTwoPi;
    }
}

cplx weyl_denominator(const EigenAngles& angles) {
    cplx den = 1.0;
    int n = angles.n();
    for (int l = 0; l < n; ++l)
        for (int k = l + 1; k < n; ++k)
            den *= std::exp(cplx(0.0, angles.psi[static_cast<size_t>(l)])) -
                   std::exp(cplx(0.0, angles.psi[static_cast<size_t>(k)]));
    return den;
}

cplx character(const sig::Signature& m, const EigenAngles& angles) {
    int n = angles.n();
    if (m.n() != n) throw std::invalid_argument("character: signature/angle size mismatch");
    if (n == 1) return std::exp(cplx(0.0, static_cast<double>(m[0]) * angles.psi[0]));

    bool all_equal = true;
    for (int k = 1; k < n; ++k)
        if (angles.psi[static_cast<size_t>(k)] != angles.psi[0]) { all_equal = false; break; }
    if (all_equal) {
        // scalar matrix e^{i theta} I: the numerator carries e^{i theta sum(m)}
        // but the Weyl denominator contributes e^{i theta n(n-1)/2}, so the
        // phase exponent is sum(m) - n(n-1)/2; dim exactly at theta = 0
        double theta = angles.psi[0];
        double expo = static_cast<double>(m.sum()) - 0.5 * n * (n - 1);
        cplx phase = std::exp(cplx(0.0, theta * expo));
        return phase * static_cast<double>(sig::dimension(m));
    }

    double min_gap = kTwoPi;
    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            min_gap = std::min(min_gap, circular_gap(angles.psi[static_cast<size_t>(k)],
                                                     angles.psi[static_cast<size_t>(l)]));
    if (min_gap >= 1e-6) return bialternant(m, angles.psi);

    // 0/0 regime: nudge the angles apart along fixed distinct directions and
    // extrapolate the O(h) error away
    auto shifted = [&](double h) {
        std::vector<double> p = angles.psi;
        for (int k = 0; k < n; ++k) p[static_cast<size_t>(k)] += h * static_cast<double>(k + 1);
        return bialternant(m, p);
    };
    const double h = 5e-4;
    return 2.0 * shifted(h / 2) - shifted(h);
}

} // namespace ssk::schur
