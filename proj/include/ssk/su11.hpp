#pragma once

// The n = 1 theory on the circle: Fourier multipliers of the intertwining
// distribution, complementary-series inner products, the sl(2) action on
// Fourier truncations, the bilinear pairing, the parameter classification,
// coefficient asymptotics and the (1,0) blow-up limit.
//
// Parameters (p, q) relate to the kernel parameters by p = sigma+1,
// q = tau+1; Fourier index k and signature label m are opposite,
// k = -m (the two sides expand in reciprocal powers).

#include <complex>
#include <map>
#include <set>

namespace ssk::su11 {

using cplx = std::complex<double>;

struct Su11Params {
    cplx p{0.0, 0.0};
    cplx q{0.0, 0.0};
};

// Finitely supported Fourier data on modes k in [-window, window].
struct FourierTruncation {
    long window = 0;
    std::map<long, cplx> coefficients;

    explicit FourierTruncation(long K = 0) : window(K) {}

    void set(long k, cplx v);      // throws std::out_of_range beyond the window
    cplx at(long k) const;         // 0 when absent
};

// c_k = (-1)^k / (Gamma(p+k) Gamma(q-k)); the 1/Gamma(p+q-1) prefactor of
// the intertwiner is normalized out. Exact zeros on the integer loci.
cplx multiplier_c(long k, const Su11Params& params);

// h_k = (1-q)_k / ((p)_k Gamma(p) Gamma(q)); real non-integer p, q.
// Positive for all k when 0 < p < 1 and 0 < q < 1.
double complementary_inner(long k, const Su11Params& params);

enum class Lie { L0, Lplus, Lminus };

// L_0 z^k = (k + (p-q)/2) z^k,  L_- z^k = (k-q) z^{k-1},
// L_+ z^k = (k+p) z^{k+1}. Throws std::out_of_range when a nonzero
// coefficient would leave the window.
FourierTruncation lie_apply(Lie which, const Su11Params& params,
                            const FourierTruncation& f);

// Pi(f1, f2) = sum_k f1(k) f2(-k), the circle integral of the product
// (bilinear, no conjugation).
cplx pairing_pi(const FourierTruncation& f1, const FourierTruncation& f2);

enum class Su11Class { PrincipalUnitary, Complementary, HighestWeight, LowestWeight };

// All applicable labels; empty set when none apply. The principal and
// complementary families meet along p+q = 1, 0 < p < 1.
std::set<Su11Class> classify_su11(const Su11Params& params);

const char* to_string(Su11Class c);

// Limit at (p,q) = (1,0) along p = 1+eps*s, q = eps*t of the
// Gamma(p+q-1)-restored multiplier: t/(t+s) for k >= 0, -s/(t+s) for k < 0.
double blowup_multiplier_10(long k, double s, double t);

// Least-squares slope of log|c_k| against log|k| over k in [k_lo, k_hi]
// (k = 0 and exact zeros skipped); approximates 1 - Re(p+q).
double asymptotic_exponent(const Su11Params& params, long k_lo, long k_hi);

} // namespace ssk::su11
