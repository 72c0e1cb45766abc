#pragma once

// U(n,n) in 2n x 2n block form: the defining relation g J g* = J with
// J = diag(1_n, -1_n), the Moebius action on unitary matrices
// z -> (a+zc)^{-1}(b+zd), its Jacobian on Haar measure, the Cartan
// decomposition g = diag(u1,v1) (cosh, sinh; sinh, cosh) diag(u2,v2), the
// determinant cocycle on the universal cover, and the covariance of the
// kernel under the action.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>

#include "ssk/kernel.hpp"
#include "ssk/schur.hpp"

namespace ssk::group {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

struct PseudoUnitaryElement {
    Mat a, b, c, d;

    int n() const { return static_cast<int>(a.rows()); }
    Mat full() const;   // the 2n x 2n block matrix
};

PseudoUnitaryElement operator*(const PseudoUnitaryElement& g1,
                               const PseudoUnitaryElement& g2);

// Largest singular value of g J g* - J.
double check_pseudounitary(const PseudoUnitaryElement& g);

// Haar-distributed unitary: QR of a complex Gaussian sample with the
// R-diagonal phases folded back in. Deterministic per seed.
Mat random_unitary(int n, std::uint64_t seed);

// Element built through the Cartan form with Haar corner unitaries and
// uniform t in [0, tmax], sorted descending. special_corners rescales each
// corner to determinant 1, which together with a small tmax keeps every
// determinant used by the cover and the covariance identity inside the
// principal branch.
PseudoUnitaryElement random_pseudounitary(int n, std::uint64_t seed, double tmax = 1.0,
                                          bool special_corners = false);

// z^{[g]} = (a+zc)^{-1}(b+zd); unitary in, unitary out.
// Throws std::domain_error when a+zc is numerically singular.
Mat moebius_act(const Mat& z, const PseudoUnitaryElement& g);

// Haar-measure Jacobian of the action at z: |det(a+zc)|^{-2n}.
double jacobian(const Mat& z, const PseudoUnitaryElement& g);

struct CartanFactors {
    Mat u1, v1;
    Eigen::VectorXd t;   // t_1 >= ... >= t_n >= 0
    Mat u2, v2;

    PseudoUnitaryElement reassemble() const;
};

// t from the singular values of block a (cosh t, forced by a a* - b b* = 1);
// corner unitaries from the singular vectors and the c, d blocks, with
// orthonormal completion on the t = 0 part.
CartanFactors cartan_decompose(const PseudoUnitaryElement& g);

struct CoveringElement {
    PseudoUnitaryElement g;
    cplx s{0.0, 0.0};   // a branch of log det(a)
    cplx t{0.0, 0.0};   // a branch of log det(d)
};

// Principal-branch lift.
CoveringElement lift(const PseudoUnitaryElement& g);

// max of |exp(s) - det(a)| and |exp(t) - det(d)|.
double check_covering(const CoveringElement& x);

// (g1,s1,t1)(g2,s2,t2) = (g1g2, s1+s2+tr ln(a1^{-1}a3a2^{-1}), ...t-blocks...)
// with tr ln through eigenvalue principal logs; requires the argument to
// stay in ||X - 1|| < 1 and throws std::domain_error otherwise (the bound
// holds automatically, ||a^{-1}b|| = max tanh t < 1 on both factors).
CoveringElement cover_multiply(const CoveringElement& x1, const CoveringElement& x2);

// w^{{x|y}} = w^x conj(w)^y through the principal log of w.
cplx double_power(cplx w, cplx x, cplx y);

// Eigenvalue angles of a unitary matrix, for evaluating central functions.
schur::EigenAngles eigen_angles(const Mat& unitary);

// Residual of the covariance law
//   l(u^{[g]} (v^{[g]})*) = l(uv*) W^{{-sigma|-tau}},
//   W = det(a+uc) conj(det(a+vc)),
// reported as max of the Frobenius residual of the matrix identity
//   1 - u^{[g]}(v^{[g]})* = (a+uc)^{-1} (1-uv*) (a+vc)^{-*}
// and the relative residual of the scalar identity. Valid on the principal
// branch (mild elements); throws std::domain_error on the det(1-uv*) = 0
// locus.
double kernel_covariance_residual(const Mat& u, const Mat& v,
                                  const PseudoUnitaryElement& g,
                                  const kernel::KernelParams& params);

} // namespace ssk::group
