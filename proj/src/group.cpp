#include "ssk/group.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace ssk::group {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double operator_norm(const Mat& m) {
    return m.jacobiSvd().singularValues()(0);
}

Mat random_unitary_from(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Mat z(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) z(i, j) = cplx(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<Mat> qr(z);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        cplx di = r(i, i);
        q.col(i) *= di / std::abs(di);
    }
    return q;
}

// trace of the principal matrix log on ||X - 1|| < 1, via eigenvalues
cplx trace_log(const Mat& x, const char* where) {
    Mat dev = x - Mat::Identity(x.rows(), x.cols());
    if (!(operator_norm(dev) < 1.0))
        throw std::domain_error(std::string(where) +
                                ": ||X - 1|| >= 1, log leaves the principal branch");
    Eigen::ComplexEigenSolver<Mat> es(x, false);
    cplx acc = 0.0;
    for (int i = 0; i < x.rows(); ++i) acc += std::log(es.eigenvalues()(i));
    return acc;
}

} // namespace

Mat PseudoUnitaryElement::full() const {
    int m = n();
    Mat g(2 * m, 2 * m);
    g.topLeftCorner(m, m) = a;
    g.topRightCorner(m, m) = b;
    g.bottomLeftCorner(m, m) = c;
    g.bottomRightCorner(m, m) = d;
    return g;
}

PseudoUnitaryElement operator*(const PseudoUnitaryElement& g1,
                               const PseudoUnitaryElement& g2) {
    return {g1.a * g2.a + g1.b * g2.c, g1.a * g2.b + g1.b * g2.d,
            g1.c * g2.a + g1.d * g2.c, g1.c * g2.b + g1.d * g2.d};
}

double check_pseudounitary(const PseudoUnitaryElement& g) {
    int m = g.n();
    Mat j = Mat::Identity(2 * m, 2 * m);
    j.bottomRightCorner(m, m) *= -1.0;
    Mat full = g.full();
    return operator_norm(full * j * full.adjoint() - j);
}

Mat random_unitary(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return random_unitary_from(rng, n);
}

PseudoUnitaryElement random_pseudounitary(int n, std::uint64_t seed, double tmax,
                                          bool special_corners) {
    std::mt19937_64 rng(seed);
    Mat u1 = random_unitary_from(rng, n);
    Mat v1 = random_unitary_from(rng, n);
    Mat u2 = random_unitary_from(rng, n);
    Mat v2 = random_unitary_from(rng, n);
    if (special_corners) {
        for (Mat* m : {&u1, &v1, &u2, &v2})
            *m /= std::pow(m->determinant(), 1.0 / static_cast<double>(n));
    }
    std::uniform_real_distribution<double> uni(0.0, tmax);
    std::vector<double> t(static_cast<size_t>(n));
    for (auto& v : t) v = uni(rng);
    std::sort(t.rbegin(), t.rend());

    Mat ch = Mat::Zero(n, n), sh = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        ch(i, i) = std::cosh(t[static_cast<size_t>(i)]);
        sh(i, i) = std::sinh(t[static_cast<size_t>(i)]);
    }
    return {u1 * ch * u2, u1 * sh * v2, v1 * sh * u2, v1 * ch * v2};
}

Mat moebius_act(const Mat& z, const PseudoUnitaryElement& g) {
    Mat s = g.a + z * g.c;
    auto svals = s.jacobiSvd().singularValues();
    double smin = svals(s.rows() - 1);
    double smax = svals(0);
    if (!(smin > 1e-12 * smax))
        throw std::domain_error("moebius_act: a + z c numerically singular");
    return s.partialPivLu().solve(g.b + z * g.d);
}

double jacobian(const Mat& z, const PseudoUnitaryElement& g) {
    cplx det = (g.a + z * g.c).determinant();
    if (det == cplx(0.0, 0.0)) throw std::domain_error("jacobian: singular a + z c");
    return std::pow(std::abs(det), -2.0 * static_cast<double>(g.n()));
}

PseudoUnitaryElement CartanFactors::reassemble() const {
    int n = static_cast<int>(t.size());
    Mat ch = Mat::Zero(n, n), sh = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        ch(i, i) = std::cosh(t(i));
        sh(i, i) = std::sinh(t(i));
    }
    return {u1 * ch * u2, u1 * sh * v2, v1 * sh * u2, v1 * ch * v2};
}

CartanFactors cartan_decompose(const PseudoUnitaryElement& g) {
    int n = g.n();
    Eigen::JacobiSVD<Mat> svd(g.a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    CartanFactors f;
    f.u1 = svd.matrixU();
    f.u2 = svd.matrixV().adjoint();
    f.t.resize(n);
    for (int i = 0; i < n; ++i)
        f.t(i) = std::acosh(std::max(1.0, svd.singularValues()(i)));

    // v1 from c = v1 sinh(t) u2 where sinh is invertible; orthonormal
    // completion on the t = 0 columns (those columns of c vanish)
    const double tol = 1e-9;
    Mat cu = g.c * f.u2.adjoint();
    f.v1 = Mat::Zero(n, n);
    std::vector<int> missing;
    for (int i = 0; i < n; ++i) {
        double sh = std::sinh(f.t(i));
        if (sh > tol)
            f.v1.col(i) = cu.col(i) / sh;
        else
            missing.push_back(i);
    }
    for (int idx : missing) {
        // basis vector with the largest component orthogonal to what exists
        Eigen::VectorXcd best;
        double best_norm = -1.0;
        for (int e = 0; e < n; ++e) {
            Eigen::VectorXcd cand = Eigen::VectorXcd::Zero(n);
            cand(e) = 1.0;
            for (int i = 0; i < n; ++i) {
                if (f.v1.col(i).norm() == 0.0) continue;   // not yet filled
                cand -= f.v1.col(i).dot(cand) * f.v1.col(i);
            }
            double nm = cand.norm();
            if (nm > best_norm) {
                best_norm = nm;
                best = cand;
            }
        }
        f.v1.col(idx) = best / best.norm();
    }

    // d = v1 cosh(t) v2 and cosh(t) is always invertible
    Mat ch_inv = Mat::Zero(n, n);
    for (int i = 0; i < n; ++i) ch_inv(i, i) = 1.0 / std::cosh(f.t(i));
    f.v2 = ch_inv * f.v1.adjoint() * g.d;
    return f;
}

CoveringElement lift(const PseudoUnitaryElement& g) {
    return {g, std::log(g.a.determinant()), std::log(g.d.determinant())};
}

double check_covering(const CoveringElement& x) {
    double ra = std::abs(std::exp(x.s) - x.g.a.determinant());
    double rd = std::abs(std::exp(x.t) - x.g.d.determinant());
    return std::max(ra, rd);
}

CoveringElement cover_multiply(const CoveringElement& x1, const CoveringElement& x2) {
    PseudoUnitaryElement g3 = x1.g * x2.g;
    Mat xa = x1.g.a.partialPivLu().solve(g3.a) * x2.g.a.inverse();
    Mat xd = x1.g.d.partialPivLu().solve(g3.d) * x2.g.d.inverse();
    cplx s3 = x1.s + x2.s + trace_log(xa, "cover_multiply");
    cplx t3 = x1.t + x2.t + trace_log(xd, "cover_multiply");
    return {g3, s3, t3};
}

cplx double_power(cplx w, cplx x, cplx y) {
    cplx lw = std::log(w);
    return std::exp(x * lw + y * std::conj(lw));
}

schur::EigenAngles eigen_angles(const Mat& unitary) {
    Eigen::ComplexEigenSolver<Mat> es(unitary, false);
    std::vector<double> psi(static_cast<size_t>(unitary.rows()));
    for (int i = 0; i < unitary.rows(); ++i) {
        double a = std::arg(es.eigenvalues()(i));
        if (a < 0.0) a += kTwoPi;
        psi[static_cast<size_t>(i)] = a;
    }
    return schur::EigenAngles(psi);
}

double kernel_covariance_residual(const Mat& u, const Mat& v,
                                  const PseudoUnitaryElement& g,
                                  const kernel::KernelParams& params) {
    int n = g.n();
    Mat uv = u * v.adjoint();
    Mat one = Mat::Identity(n, n);
    if (std::abs((one - uv).determinant()) < 1e-12)
        throw std::domain_error("kernel_covariance_residual: uv* has eigenvalue 1");

    Mat ug = moebius_act(u, g);
    Mat vg = moebius_act(v, g);
    Mat au = g.a + u * g.c;
    Mat av = g.a + v * g.c;

    Mat lhs_mat = one - ug * vg.adjoint();
    Mat rhs_mat = au.partialPivLu().solve((one - uv) * av.adjoint().inverse());
    double mat_res = (lhs_mat - rhs_mat).norm();

    cplx lhs = kernel::kernel_pointwise(eigen_angles(ug * vg.adjoint()), params);
    cplx w = au.determinant() * std::conj(av.determinant());
    cplx rhs = kernel::kernel_pointwise(eigen_angles(uv), params) *
               double_power(w, -params.sigma, -params.tau);
    double sc_res = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    return std::max(mat_res, sc_res);
}

} // namespace ssk::group
