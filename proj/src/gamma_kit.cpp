#include "ssk/gamma_kit.hpp"

#include <cmath>
#include <limits>

namespace ssk::gamma {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos, g = 7, 9 terms. Relative error ~1e-14 on Re z >= 1/2, which the
// callers' 1e-10..1e-12 tolerances leave plenty of headroom for. Exact
// half-integer and integer spots that need 1e-14 go through the real path.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

cplx log_gamma_lanczos(cplx z) {
    // valid for Re z >= 0.5; formula in the z-1 convention
    z -= 1.0;
    cplx acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    cplx t = z + 7.5;
    return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(acc);
}

} // namespace

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && is_nonpositive_integer(z.real());
}

SignedLogValue SignedLogValue::from_value(double v) {
    if (v == 0.0) return zero();
    return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
}

double SignedLogValue::value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(logmag);
}

SignedLogValue signed_log_gamma(double x) {
    if (is_nonpositive_integer(x))
        throw pole_error("signed_log_gamma: pole at non-positive integer argument");
    int sign = 1;
    if (x < 0.0) {
        long n = static_cast<long>(std::floor(x));
        sign = (n % 2 == 0) ? 1 : -1;
    }
    return {sign, std::lgamma(x)};
}

cplx log_gamma(cplx z) {
    if (z.imag() == 0.0) {
        if (is_nonpositive_integer(z.real()))
            throw pole_error("log_gamma: pole at non-positive integer argument");
        SignedLogValue s = signed_log_gamma(z.real());
        return {s.logmag, s.sign < 0 ? kPi : 0.0};
    }
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // reflection: log G(z) = log pi - log sin(pi z) - log G(1-z)
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_lanczos(1.0 - z);
}

cplx gamma(cplx z) {
    if (z.imag() == 0.0) {
        double x = z.real();
        if (is_nonpositive_integer(x))
            throw pole_error("gamma: pole at non-positive integer argument");
        if (std::fabs(x) < 170.0) return std::tgamma(x);
        SignedLogValue s = signed_log_gamma(x);
        return s.value();
    }
    return std::exp(log_gamma(z));
}

cplx pochhammer(cplx a, long k) {
    cplx acc = 1.0;
    if (k >= 0) {
        for (long i = 0; i < k; ++i) acc *= a + static_cast<double>(i);
        return acc;
    }
    for (long i = 1; i <= -k; ++i) {
        cplx f = a - static_cast<double>(i);
        if (f == cplx(0.0, 0.0))
            throw pole_error("pochhammer: zero factor in the k < 0 branch");
        acc *= f;
    }
    return 1.0 / acc;
}

SignedLogValue pochhammer_slv(double a, long k) {
    // (a)_k = Gamma(a+k)/Gamma(a) off the pole lattice; walk the lattice by
    // direct products when an endpoint is a non-positive integer
    double hi = a + static_cast<double>(k);
    if (!is_nonpositive_integer(a) && !is_nonpositive_integer(hi)) {
        return signed_log_gamma(hi) / signed_log_gamma(a);
    }
    SignedLogValue acc = SignedLogValue::one();
    if (k >= 0) {
        for (long i = 0; i < k; ++i)
            acc *= SignedLogValue::from_value(a + static_cast<double>(i));
        return acc;
    }
    for (long i = 1; i <= -k; ++i) {
        double f = a - static_cast<double>(i);
        if (f == 0.0) throw pole_error("pochhammer: zero factor in the k < 0 branch");
        acc /= SignedLogValue::from_value(f);
    }
    return acc;
}

double reciprocal_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (std::fabs(x) < 170.0) return 1.0 / std::tgamma(x);
    SignedLogValue s = signed_log_gamma(x);
    return s.sign * std::exp(-s.logmag);
}

cplx reciprocal_gamma(cplx z) {
    if (z.imag() == 0.0) return reciprocal_gamma(z.real());
    return std::exp(-log_gamma(z));
}

double pole_leading_coefficient(long k) {
    if (k < 0) throw std::invalid_argument("pole_leading_coefficient: k must be >= 0");
    double v = 1.0;
    for (long i = 1; i <= k; ++i) v /= static_cast<double>(i);
    return (k % 2 == 0) ? v : -v;
}

} // namespace ssk::gamma
