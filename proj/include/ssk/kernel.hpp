#pragma once

// Expansion coefficients c_m(sigma, tau) of the determinant-power kernel
//   l_{sigma|tau}(z) = 2^{-(sigma+tau)n} det(1-z)^sigma det(1-conj z)^tau
// over U(n) characters, together with pointwise kernel values, the
// positivity classification of the real (sigma, tau) plane, diagonal
// Hermitian forms on harmonics, the tau = 0 (Berezin-Wallach) analysis and
// matrix Sobolev norms.

#include <complex>
#include <map>
#include <stdexcept>
#include <string>

#include "ssk/schur.hpp"
#include "ssk/signatures.hpp"

namespace ssk::kernel {

using cplx = std::complex<double>;

struct KernelParams {
    int n = 1;
    cplx sigma{0.0, 0.0};
    cplx tau{0.0, 0.0};

    bool real_parameters() const { return sigma.imag() == 0.0 && tau.imag() == 0.0; }
};

// Thrown when some Gamma(sigma+tau+j), j = 1..n, sits on a pole; the
// expansion normalization is then undefined (see the blow-up module and
// l2_diagonal_check for the renormalized limits).
struct prefactor_pole_error : std::domain_error {
    int j;
    explicit prefactor_pole_error(int j_)
        : std::domain_error("coefficient: Gamma(sigma+tau+" + std::to_string(j_) +
                            ") sits on a pole"),
          j(j_) {}
};

// c_m = (-1)^{n(n-1)/2} 2^{-(sigma+tau)n} prod_j Gamma(sigma+tau+j)
//       * (-1)^{sum m_j} prod_{a<b}(m_a - m_b)
//       * prod_j 1/(Gamma(sigma - m_j + n) Gamma(tau + m_j + 1)).
// Real parameters run through sign-tracked logs (signs exact, zeros exact);
// complex parameters through complex log-Gamma sums.
cplx coefficient(const sig::Signature& m, const KernelParams& params);

// The m-dependent factor alone: coefficient without the common prefactor
// (-1)^{n(n-1)/2} 2^{-(sigma+tau)n} prod_j Gamma(sigma+tau+j). Finite and
// sign-exact even on the prefactor pole locus; definiteness scans use this.
cplx coefficient_normalized(const sig::Signature& m, const KernelParams& params);

// Equivalent form with the reciprocal Gammas reflected into
// sin^n(-pi sigma)/pi^n * prod_j Gamma(-sigma + m_j - n + 1); valid off the
// integer loci, used only as an internal consistency check.
cplx coefficient_sin_form(const sig::Signature& m, const KernelParams& params);

// l_{sigma|tau} at eigenvalue angles:
//   exp{(i/2)(sigma-tau) sum_k (psi_k - pi)} prod_k sin^{sigma+tau}(psi_k/2).
// Throws std::domain_error at psi_k = 0 when Re(sigma+tau) < 0; returns the
// limit (0 or 1) on the closed half-plane boundary cases that have one.
cplx kernel_pointwise(const schur::EigenAngles& angles, const KernelParams& params);

enum class PositivityClass {
    PositiveDefinite,
    NegativeDefinite,
    Indefinite,
    SemiDefinite,
    OnIntegerLocus,
};

const char* to_string(PositivityClass c);

// For real non-integer sigma, tau: definite (sign read off the reference
// signature (n-1, ..., 1, 0)) iff floor(-sigma-n) = floor(tau), else
// indefinite. Integer sigma or tau answers OnIntegerLocus; those points are
// analyzed by berezin_wallach and the blow-up module instead.
PositivityClass classify_positivity(const KernelParams& params);

struct CoefficientTable {
    KernelParams params;
    long cutoff = 0;                          // labels range over [-cutoff, cutoff]
    std::map<sig::Signature, cplx> entries;
};

CoefficientTable build_coefficient_table(const KernelParams& params, long M);

// A function on U(n) represented through its elementary-harmonic expansion;
// per harmonic we keep one complex amplitude relative to an L2-normalized
// component, which is all the diagonal forms below consume.
struct HarmonicVector {
    std::map<sig::Signature, cplx> amp;
};

// <f1, f2> = sum_m (c_m / dim pi_m) <f1^m, f2^m>_{L2}.
// Throws std::out_of_range when a support label exceeds the table cutoff.
cplx hermitian_form(const CoefficientTable& table, const HarmonicVector& f1,
                    const HarmonicVector& f2);

// Analytic value of lim c_m / prod_j Gamma(sigma+tau+j) on sigma = -n - tau:
//   (-1)^{n(n-1)/2} (-1)^n 2^{n^2} (sin(pi tau)/pi)^n prod_{a<b}(m_a - m_b),
// proportional to dim pi_m with an m-independent constant.
double l2_diagonal_check(const sig::Signature& m, int n, double tau);

struct BerezinWallachResult {
    bool semidefinite = false;
    // alpha in {1..n} for sigma = -n + alpha; -1 on the continuous branch
    // sigma < -(n-1); meaningless when not semidefinite.
    int alpha = -1;
    std::string support;   // human-readable Omega_sigma rule
};

// tau = 0 line: positive semi-definite iff sigma in {0,-1,...,-(n-1)} or
// sigma < -(n-1); the support rule matches sig::omega_support.
BerezinWallachResult berezin_wallach(double sigma, int n);

// ||f||_s^2 = sum_m ||f^m||_{L2}^2 prod_j (1 + |m_j|)^s; s = 0 is plain L2.
double sobolev_norm(const HarmonicVector& f, double s);

} // namespace ssk::kernel
