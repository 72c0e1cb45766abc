#pragma once

// Quadrature oracles, independent of the Gamma-product coefficient formula:
// 1-D Lobachevsky-type integrals (closed form and tanh-sinh numerics), the
// determinant reduction of the coefficient integral to an n x n matrix of
// 1-D integrals, a fully direct torus quadrature for n <= 2, character
// orthogonality residuals, and a Gauss 2F1(..;1) summation check.

#include <complex>

#include "ssk/kernel.hpp"
#include "ssk/signatures.hpp"

namespace ssk::oracle {

using cplx = std::complex<double>;

struct QuadratureConfig {
    int node_budget = 4096;      // caps tanh-sinh level doubling
    double tolerance = 1e-10;    // relative termination target
    bool endpoint_singular = true;   // evaluate sin(.) from the endpoint distance
};

struct IntegralResult {
    cplx value;
    double error_estimate;   // a posteriori, relative to the L1 norm
};

// int_0^pi sin^{mu-1}(phi) e^{i b phi} dphi
//   = 2^{1-mu} pi Gamma(mu) e^{i b pi/2} / (Gamma((mu+b+1)/2) Gamma((mu-b+1)/2)).
// Closed form, valid by continuation off the poles of Gamma(mu);
// denominator poles give exact zeros. Throws gamma::pole_error at
// mu in {0,-1,-2,...}.
cplx lobachevsky_closed(cplx mu, cplx b);

// Same integral by tanh-sinh quadrature; requires Re mu > 0.
// Throws std::runtime_error when the error estimate stays above 1e-3.
IntegralResult lobachevsky_numeric(cplx mu, cplx b, const QuadratureConfig& cfg = {});

// c_m = (-1)^{n(n-1)/2} (2 pi)^{-n} det I(k,j) with
//   I(k,j) = int_0^{2pi} sin^{sigma+tau}(psi/2) e^{i(sigma-tau)(psi-pi)/2}
//            e^{i(k-1-m_j) psi} dpsi,
// every entry numeric. The sign is the parity of reversing the natural
// (descending) row order of the reduction into k = 1..n.
// Requires Re(sigma+tau) > -0.9 (integrable singularity with margin) and
// n <= 4.
cplx coefficient_det_reduction(const sig::Signature& m, const kernel::KernelParams& params,
                               const QuadratureConfig& cfg = {});

// c_m = (2 pi)^{-n} (n!)^{-1} int l(psi) conj(det{e^{i m_j psi_k}})
//       prod_{k<l}(e^{i psi_k} - e^{i psi_l}) dpsi
// by direct (nested) tanh-sinh over the torus; bypasses the determinant
// reduction entirely. n <= 2; Re(sigma+tau) > -0.9.
cplx coefficient_full_quadrature(const sig::Signature& m, const kernel::KernelParams& params,
                                 const QuadratureConfig& cfg = {});

// |<chi_{m1}, chi_{m2}>_{L2(U(n))} - delta_{m1,m2}| through the Weyl
// integration formula on a uniform torus grid (exact for trigonometric
// polynomials once the grid outruns the bandwidth). n <= 2.
double orthogonality_residual(const sig::Signature& m1, const sig::Signature& m2, int n,
                              const QuadratureConfig& cfg = {});

// | sum_{k<=terms} (1-p)_k (1-q)_k / (k!)^2  -  Gamma(p+q-1)/(Gamma(p)Gamma(q)) |.
// Requires Re(p+q) > 1 for convergence; the partial sum must be taken deep
// enough for the O(terms^{1-Re(p+q)}) tail to clear the caller's tolerance.
double gauss_2f1_check(cplx p, cplx q, long terms);

} // namespace ssk::oracle
