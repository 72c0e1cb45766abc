#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ssk/group.hpp"

using namespace ssk;
using group::Mat;
using cplx = std::complex<double>;

namespace {
double unitary_residual(const Mat& u) {
    return (u.adjoint() * u - Mat::Identity(u.rows(), u.cols())).norm();
}
} // namespace

TEST_CASE("random_unitary is unitary and deterministic per seed") {
    for (int n : {1, 3}) {
        Mat u = group::random_unitary(n, 42);
        CHECK(unitary_residual(u) < 1e-13);
        CHECK((u - group::random_unitary(n, 42)).norm() == 0.0);
        CHECK((u - group::random_unitary(n, 43)).norm() > 1e-3);
    }
}

TEST_CASE("random_pseudounitary satisfies g J g* = J") {
    for (int n : {1, 2, 4}) {
        auto g = group::random_pseudounitary(n, 7);
        CHECK(group::check_pseudounitary(g) < 1e-12);
        auto h = group::random_pseudounitary(n, 8, 0.3, true);
        CHECK(group::check_pseudounitary(h) < 1e-12);
        CHECK(group::check_pseudounitary(g * h) < 1e-11);
        // full() lays the blocks out as advertised
        Mat f = g.full();
        CHECK((f.topLeftCorner(n, n) - g.a).norm() == 0.0);
        CHECK((f.bottomRightCorner(n, n) - g.d).norm() == 0.0);
    }
}

TEST_CASE("moebius_act maps unitaries to unitaries and composes") {
    int n = 3;
    Mat z = group::random_unitary(n, 11);
    auto g1 = group::random_pseudounitary(n, 12);
    auto g2 = group::random_pseudounitary(n, 13);

    Mat z1 = group::moebius_act(z, g1);
    CHECK(unitary_residual(z1) < 1e-11);

    Mat lhs = group::moebius_act(z1, g2);
    Mat rhs = group::moebius_act(z, g1 * g2);
    CHECK((lhs - rhs).norm() < 1e-10);
}

TEST_CASE("jacobian satisfies the chain rule and normalizes on U(n)") {
    int n = 2;
    Mat z = group::random_unitary(n, 21);
    auto g1 = group::random_pseudounitary(n, 22);
    auto g2 = group::random_pseudounitary(n, 23);

    double j12 = group::jacobian(z, g1 * g2);
    double chain = group::jacobian(z, g1) * group::jacobian(group::moebius_act(z, g1), g2);
    CHECK(std::fabs(j12 - chain) <= 1e-12 * j12);

    // diag(u, v) acts by z -> u^* z v kind of rotation: Haar preserved
    group::PseudoUnitaryElement rot{group::random_unitary(n, 24), Mat::Zero(n, n),
                                    Mat::Zero(n, n), group::random_unitary(n, 25)};
    CHECK(std::fabs(group::jacobian(z, rot) - 1.0) < 1e-13);
}

TEST_CASE("cartan_decompose splits and reassembles") {
    for (int n : {1, 2, 4}) {
        auto g = group::random_pseudounitary(n, 31);
        auto f = group::cartan_decompose(g);
        for (int i = 0; i + 1 < n; ++i) CHECK(f.t[i] >= f.t[i + 1]);
        CHECK(f.t[n - 1] >= 0.0);
        // SVD corners are unitary to a few ulps times the factor count
        CHECK(unitary_residual(f.u1) < 1e-11);
        CHECK(unitary_residual(f.v2) < 1e-11);
        auto re = f.reassemble();
        CHECK((re.full() - g.full()).norm() < 1e-9 * g.full().norm());
    }
}

TEST_CASE("the principal lift lands on the cover and multiplies by cocycle") {
    int n = 2;
    auto x1 = group::lift(group::random_pseudounitary(n, 41, 0.3, true));
    auto x2 = group::lift(group::random_pseudounitary(n, 42, 0.3, true));
    auto x3 = group::lift(group::random_pseudounitary(n, 43, 0.3, true));
    CHECK(group::check_covering(x1) < 1e-12);

    auto prod = group::cover_multiply(x1, x2);
    CHECK(group::check_covering(prod) < 1e-10);

    // associativity of the cocycle on mild elements
    auto a = group::cover_multiply(group::cover_multiply(x1, x2), x3);
    auto b = group::cover_multiply(x1, group::cover_multiply(x2, x3));
    CHECK(std::abs(a.s - b.s) < 1e-10);
    CHECK(std::abs(a.t - b.t) < 1e-10);
    CHECK((a.g.full() - b.g.full()).norm() < 1e-10);
}

TEST_CASE("double_power reduces to plain powers and absolute values") {
    cplx w(0.8, 0.45);
    CHECK(std::abs(group::double_power(w, cplx(2.0, 0.0), cplx(0.0, 0.0)) - w * w) <
          1e-14);
    CHECK(std::abs(group::double_power(w, cplx(1.0, 0.0), cplx(1.0, 0.0)) -
                   cplx(std::norm(w), 0.0)) < 1e-14);
    cplx x(0.7, -0.3), y(0.1, 0.2);
    cplx direct = std::exp(x * std::log(w) + y * std::conj(std::log(w)));
    CHECK(std::abs(group::double_power(w, x, y) - direct) < 1e-13);
}

TEST_CASE("eigen_angles recovers diagonal phases") {
    Mat u = Mat::Zero(2, 2);
    u(0, 0) = std::exp(cplx(0.0, 0.4));
    u(1, 1) = std::exp(cplx(0.0, 2.9));
    auto ang = group::eigen_angles(u);
    double lo = std::min(ang.psi[0], ang.psi[1]);
    double hi = std::max(ang.psi[0], ang.psi[1]);
    CHECK(lo == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(hi == doctest::Approx(2.9).epsilon(1e-12));
}

TEST_CASE("kernel covariance holds on mild elements") {
    int n = 2;
    Mat u = group::random_unitary(n, 51);
    Mat v = group::random_unitary(n, 52);
    auto g = group::random_pseudounitary(n, 53, 0.3, true);
    kernel::KernelParams params{n, -0.35, 0.6};
    CHECK(group::kernel_covariance_residual(u, v, g, params) < 1e-9);
}
