#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ssk/blowup.hpp"
#include "ssk/kernel.hpp"
#include "ssk/signatures.hpp"

using namespace ssk;
using cplx = std::complex<double>;
using doctest::Approx;

TEST_CASE("n = 1, alpha = 0 limits are the two-sided split of 2") {
    double s = 0.8, t = 1.7;
    for (long m : {0L, 1L, 3L}) {
        cplx v = blowup::limit_coefficient(sig::make_signature({m}), {1, 0, s, t});
        CHECK(v.real() == Approx(2.0 * s / (s + t)).epsilon(1e-13));
    }
    for (long m : {-1L, -4L}) {
        cplx v = blowup::limit_coefficient(sig::make_signature({m}), {1, 0, s, t});
        CHECK(v.real() == Approx(-2.0 * t / (s + t)).epsilon(1e-13));
    }
}

TEST_CASE("tail signatures have exactly zero limits") {
    // n = 2, alpha = 1: label 0 must be present
    CHECK(blowup::limit_coefficient(sig::make_signature({3, 2}), {2, 1, 1.0, 1.0}) ==
          cplx(0.0, 0.0));
    CHECK(blowup::limit_coefficient(sig::make_signature({2, -1}), {2, 1, 1.0, 1.0}) ==
          cplx(0.0, 0.0));
    CHECK(blowup::limit_coefficient(sig::make_signature({2, 0}), {2, 1, 1.0, 1.0}) !=
          cplx(0.0, 0.0));
}

TEST_CASE("limits are homogeneous of degree zero in the direction") {
    sig::Signature m = sig::make_signature({2, 0, -1});
    for (int alpha : {0, 1}) {
        cplx a = blowup::limit_coefficient(m, {3, alpha, 0.6, 1.1});
        cplx b = blowup::limit_coefficient(m, {3, alpha, 2.7 * 0.6, 2.7 * 1.1});
        CHECK(std::abs(a - b) <= 1e-13 * std::abs(a));
    }
}

TEST_CASE("degenerate directions and bad alpha throw") {
    sig::Signature m = sig::make_signature({1, 0});
    CHECK_THROWS_AS(blowup::limit_coefficient(m, {2, 0, 1.0, -1.0}), std::domain_error);
    CHECK_THROWS_AS(blowup::limit_coefficient(m, {2, 2, 1.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(blowup::limit_coefficient(m, {2, -1, 1.0, 1.0}), std::domain_error);
}

TEST_CASE("limits agree with small-eps coefficients away from the tail") {
    const double e1 = 1e-4, e2 = 1e-5;
    double s = 1.3, t = 0.9;
    for (int n : {1, 2}) {
        for (int alpha = 0; alpha <= n - 1; ++alpha) {
            for (const auto& m : sig::all_signatures(n, 2)) {
                cplx want = blowup::limit_coefficient(m, {n, alpha, s, t});
                if (want == cplx(0.0, 0.0)) continue;
                double v1 =
                    kernel::coefficient(m, {n, -n + alpha + e1 * s, e1 * t}).real();
                double v2 =
                    kernel::coefficient(m, {n, -n + alpha + e2 * s, e2 * t}).real();
                double rich = (10.0 * v2 - v1) / 9.0;
                CHECK(rich == Approx(want.real()).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("decompose_lj produces n - alpha + 1 pieces on the Z classes") {
    auto tables = blowup::decompose_lj(2, 0, 2);
    REQUIRE(tables.size() == 3);
    for (int j = 0; j <= 2; ++j) {
        for (const auto& [m, v] : tables[static_cast<size_t>(j)].entries) {
            auto cls = sig::classify_unipotent(m, 0);
            CHECK_FALSE(cls.is_tail());
            CHECK(cls.j == j);
            CHECK(v.imag() == 0.0);
        }
    }
    // base point recorded at (sigma, tau) = (-n + alpha, 0)
    CHECK(tables[0].params.sigma == cplx(-2.0, 0.0));
    CHECK(tables[0].params.tau == cplx(0.0, 0.0));
}

TEST_CASE("the pieces reconstruct every directional limit") {
    int n = 2;
    for (int alpha : {0, 1}) {
        auto tables = blowup::decompose_lj(n, alpha, 2);
        int deg = n - alpha;
        for (auto [s, t] : {std::pair{0.7, 1.9}, std::pair{-0.4, 1.2}}) {
            for (const auto& m : sig::all_signatures(n, 2)) {
                cplx want = blowup::limit_coefficient(m, {n, alpha, s, t});
                cplx sum = 0.0;
                for (int j = 0; j <= deg; ++j) {
                    auto it = tables[static_cast<size_t>(j)].entries.find(m);
                    if (it == tables[static_cast<size_t>(j)].entries.end()) continue;
                    sum += std::pow(t, j) * std::pow(s, deg - j) /
                           std::pow(s + t, deg) * it->second;
                }
                CHECK(std::abs(sum - want) <= 1e-12 * std::max(std::abs(want), 1.0));
            }
        }
    }
}

TEST_CASE("divided-difference route reproduces the pieces, zeros included") {
    for (int alpha : {0, 1}) {
        auto tables = blowup::decompose_lj(2, alpha, 2);
        int deg = 2 - alpha;
        for (int j = 0; j <= deg; ++j) {
            auto dd = blowup::lj_via_derivative(j, 2, alpha, 2);
            for (const auto& [m, v] : dd.entries) {
                auto it = tables[static_cast<size_t>(j)].entries.find(m);
                cplx want = (it == tables[static_cast<size_t>(j)].entries.end())
                                ? cplx(0.0, 0.0)
                                : it->second;
                CHECK(std::abs(v - want) <= 1e-9 * std::max(std::abs(want), 1.0));
            }
        }
        CHECK_THROWS_AS(blowup::lj_via_derivative(deg + 1, 2, alpha, 2),
                        std::domain_error);
    }
}
