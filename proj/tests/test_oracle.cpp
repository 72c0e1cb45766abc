#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ssk/gamma_kit.hpp"
#include "ssk/kernel.hpp"
#include "ssk/oracle.hpp"
#include "ssk/signatures.hpp"

using namespace ssk;
using cplx = std::complex<double>;
using doctest::Approx;

TEST_CASE("lobachevsky closed form hits the pinned values") {
    CHECK(std::abs(oracle::lobachevsky_closed(2.0, 0.0) - cplx(2.0, 0.0)) < 1e-14);
    CHECK(std::abs(oracle::lobachevsky_closed(1.0, 3.0) - cplx(0.0, 2.0 / 3.0)) <
          1e-14);
    // denominator Gamma poles give exact zeros: mu = 1, b = 2 makes
    // (mu - b + 1)/2 = 0
    CHECK(oracle::lobachevsky_closed(1.0, 2.0) == cplx(0.0, 0.0));
    CHECK_THROWS_AS(oracle::lobachevsky_closed(0.0, 1.0), gamma::pole_error);
}

TEST_CASE("lobachevsky quadrature matches the closed form, singular included") {
    for (cplx mu : {cplx(0.6, 0.0), cplx(0.15, 0.4), cplx(2.3, -0.7)}) {
        for (cplx b : {cplx(0.0, 0.0), cplx(2.5, 0.0), cplx(-4.0, 0.6)}) {
            cplx closed = oracle::lobachevsky_closed(mu, b);
            auto numeric = oracle::lobachevsky_numeric(mu, b);
            CHECK(std::abs(numeric.value - closed) <=
                  1e-10 * std::max(std::abs(closed), 1.0));
        }
    }
    CHECK_THROWS_AS(oracle::lobachevsky_numeric(cplx(-0.2, 0.0), 1.0),
                    std::domain_error);
}

TEST_CASE("determinant reduction reproduces n = 1 coefficients") {
    kernel::KernelParams params{1, 0.3, 0.25};
    for (long m : {-2L, 0L, 1L, 3L}) {
        sig::Signature sig1 = sig::make_signature({m});
        cplx want = kernel::coefficient(sig1, params);
        cplx got = oracle::coefficient_det_reduction(sig1, params);
        CHECK(std::abs(got - want) <= 1e-9 * std::abs(want));
    }
}

TEST_CASE("determinant reduction reproduces n = 2 coefficients") {
    kernel::KernelParams params{2, -0.45, 0.3};
    for (const auto& m : sig::all_signatures(2, 2)) {
        cplx want = kernel::coefficient(m, params);
        cplx got = oracle::coefficient_det_reduction(m, params);
        CHECK(std::abs(got - want) <= 1e-8 * std::abs(want));
    }
}

TEST_CASE("oracles refuse non-integrable parameters") {
    sig::Signature m = sig::make_signature({0});
    // sigma + tau <= -0.9 leaves the integrable-singularity margin
    CHECK_THROWS_AS(oracle::coefficient_det_reduction(m, {1, -0.5, -0.45}),
                    std::domain_error);
    CHECK_THROWS_AS(oracle::coefficient_full_quadrature(m, {1, -0.5, -0.45}),
                    std::domain_error);
    CHECK_THROWS_AS(
        oracle::coefficient_det_reduction(sig::make_signature({0}), {2, 3.0, 1.0}),
        std::invalid_argument);
}

TEST_CASE("full quadrature agrees at n = 1 and n = 2 spots") {
    oracle::QuadratureConfig cfg{2048, 1e-7, true};

    kernel::KernelParams p1{1, -0.6, 0.25};
    for (long m : {-1L, 0L, 2L}) {
        sig::Signature sig1 = sig::make_signature({m});
        cplx want = kernel::coefficient(sig1, p1);
        cplx got = oracle::coefficient_full_quadrature(sig1, p1, cfg);
        CHECK(std::abs(got - want) <= 1e-6 * std::abs(want));
    }

    kernel::KernelParams p2{2, 0.35, -0.2};
    for (const auto& m : {sig::make_signature({1, 0}), sig::make_signature({2, -1})}) {
        cplx want = kernel::coefficient(m, p2);
        cplx got = oracle::coefficient_full_quadrature(m, p2, cfg);
        CHECK(std::abs(got - want) <= 1e-4 * std::abs(want));
    }

    // tau = 0 with a negative bottom label: the quadrature sees the zero too
    cplx z = oracle::coefficient_full_quadrature(sig::make_signature({-1}),
                                                 {1, 0.4, 0.0}, cfg);
    CHECK(std::abs(z) < 1e-8);
}

TEST_CASE("character orthogonality on exact grids") {
    CHECK(oracle::orthogonality_residual(sig::make_signature({2}),
                                         sig::make_signature({2}), 1) < 1e-12);
    CHECK(oracle::orthogonality_residual(sig::make_signature({2}),
                                         sig::make_signature({-1}), 1) < 1e-12);
    CHECK(oracle::orthogonality_residual(sig::make_signature({2, 0}),
                                         sig::make_signature({2, 0}), 2) < 1e-8);
    CHECK(oracle::orthogonality_residual(sig::make_signature({2, 0}),
                                         sig::make_signature({1, -1}), 2) < 1e-8);
}

TEST_CASE("terminating 2F1 sums match the Gamma ratio") {
    // 1 - p a negative integer terminates the series
    CHECK(oracle::gauss_2f1_check(3.0, 0.6, 50) < 1e-13);
    CHECK(oracle::gauss_2f1_check(4.0, 2.5, 50) < 1e-12);
    CHECK_THROWS_AS(oracle::gauss_2f1_check(0.4, 0.5, 50), std::domain_error);
}
