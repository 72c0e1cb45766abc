#pragma once

// Directional limits of the kernel coefficients at the integer points
// (sigma, tau) = (-n+alpha, 0): the value along sigma = -n+alpha+eps*s,
// tau = eps*t as eps -> 0 exists for every (s,t) with s+t != 0 and is a
// degree-0 homogeneous rational function of (s,t),
//
//   limit = A(m) * s^{#{m_k >= alpha}} t^{#{m_k < 0}} / (s+t)^{n-alpha},
//
// zero exactly on Tail signatures. Collecting the t^j s^{n-alpha-j} terms
// splits the limit kernel into pieces L_0 .. L_{n-alpha} supported on the
// unipotent classes Z(j).

#include <complex>
#include <vector>

#include "ssk/kernel.hpp"
#include "ssk/signatures.hpp"

namespace ssk::blowup {

using cplx = std::complex<double>;

struct BlowupParams {
    int n = 1;
    int alpha = 0;   // 0 <= alpha <= n-1
    double s = 1.0;
    double t = 1.0;
};

// Exact eps -> 0 limit of kernel::coefficient(m, -n+alpha+eps*s, eps*t),
// assembled from leading Laurent coefficients (no small-eps numerics).
// Returns exactly 0 when classify_unipotent(m, alpha) is Tail.
// Throws std::domain_error when s+t = 0 or alpha is out of range.
cplx limit_coefficient(const sig::Signature& m, const BlowupParams& bp);

// The n-alpha+1 tables L_0 .. L_{n-alpha} with
//   limit_coefficient(m, (n,alpha,s,t))
//     = sum_j t^j s^{n-alpha-j} / (s+t)^{n-alpha} * L_j(m);
// L_j carries entries exactly on the Z(j) signatures with labels in
// [-M, M]. Table params record the base point (sigma, tau) = (-n+alpha, 0).
std::vector<kernel::CoefficientTable> decompose_lj(int n, int alpha, long M);

// Independent route to L_j: per signature, the degree <= n-alpha polynomial
//   P(t) = (1+t)^{n-alpha} * limit_coefficient(m, (n, alpha, 1, t))
// is recovered by divided-difference interpolation at t = 0..n-alpha and
// its j-th coefficient reported. Entries are stored for every signature
// (off-support values are interpolation zeros, not dropped), so comparing
// against decompose_lj checks support and values at once.
// Throws std::domain_error for j outside [0, n-alpha].
kernel::CoefficientTable lj_via_derivative(int j, int n, int alpha, long M);

} // namespace ssk::blowup
