#pragma once

// Sign-tracked, pole-aware Gamma arithmetic. Every expansion coefficient in
// this library is a ratio of Gamma values whose arguments walk across the
// pole lattice, so the primitives here make three guarantees:
//   - signs of real Gamma products are exact (never read off a rounded exp),
//   - 1/Gamma is exactly zero at non-positive integers, with no snapping
//     anywhere else,
//   - magnitudes are carried as logs, usable up to |x| ~ 1e4.

#include <complex>
#include <stdexcept>

namespace ssk::gamma {

using cplx = std::complex<double>;

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

// (sign, log|value|) pair; sign = 0 encodes exact zero and logmag is then
// meaningless.
struct SignedLogValue {
    int sign = 1;            // -1, 0, +1
    double logmag = 0.0;

    static SignedLogValue one() { return {1, 0.0}; }
    static SignedLogValue zero() { return {0, 0.0}; }
    static SignedLogValue from_value(double v);

    double value() const;
    bool is_zero() const { return sign == 0; }

    friend SignedLogValue operator*(SignedLogValue a, SignedLogValue b) {
        if (a.sign == 0 || b.sign == 0) return zero();
        return {a.sign * b.sign, a.logmag + b.logmag};
    }
    friend SignedLogValue operator/(SignedLogValue a, SignedLogValue b) {
        if (b.sign == 0) throw pole_error("SignedLogValue: division by exact zero");
        if (a.sign == 0) return zero();
        return {a.sign * b.sign, a.logmag - b.logmag};
    }
    SignedLogValue& operator*=(SignedLogValue b) { return *this = *this * b; }
    SignedLogValue& operator/=(SignedLogValue b) { return *this = *this / b; }
};

bool is_nonpositive_integer(double x);
bool is_nonpositive_integer(cplx z);

// sign(Gamma(x)) and log|Gamma(x)| for real non-pole x. The sign rule for
// x = n + alpha, alpha in (0,1): +1 when n >= 0 and (-1)^n when n < 0.
// Throws pole_error at x in {0,-1,-2,...}.
SignedLogValue signed_log_gamma(double x);

// log Gamma(z) for complex z, Lanczos with reflection for Re z < 1/2.
// The branch is whatever the reflection formula produces; callers only
// exponentiate it or take its real part.
cplx log_gamma(cplx z);

// Gamma(z) by exponentiating log_gamma; overflows to inf like tgamma would.
cplx gamma(cplx z);

// Pochhammer (a)_k: rising product for k >= 0, reciprocal of a falling
// product for k < 0, i.e. (a)_{-k} = 1/((a-1)(a-2)...(a-k)).
// Throws pole_error when a denominator factor vanishes.
cplx pochhammer(cplx a, long k);

// Real Pochhammer in sign-tracked log form (for |k| up to ~1e4).
SignedLogValue pochhammer_slv(double a, long k);

// 1/Gamma(z), entire: exactly 0 at z in {0,-1,-2,...}, otherwise the
// computed value with no snapping near the zeros.
cplx reciprocal_gamma(cplx z);
double reciprocal_gamma(double x);

// Residue of Gamma at -k: Gamma(z) = pole_leading_coefficient(k)/(z+k) + O(1).
double pole_leading_coefficient(long k);

} // namespace ssk::gamma
