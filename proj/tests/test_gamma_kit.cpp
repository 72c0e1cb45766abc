#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "ssk/gamma_kit.hpp"

using namespace ssk::gamma;
using doctest::Approx;

namespace {
const double kPi = 3.14159265358979323846;
const double kSqrtPi = 1.7724538509055160273;
} // namespace

TEST_CASE("signed_log_gamma reproduces factorials and half-integers") {
    CHECK(signed_log_gamma(1.0).value() == Approx(1.0));
    CHECK(signed_log_gamma(5.0).value() == Approx(24.0));
    CHECK(signed_log_gamma(0.5).value() == Approx(kSqrtPi));
    CHECK(signed_log_gamma(2.5).value() == Approx(1.5 * 0.5 * kSqrtPi));
}

TEST_CASE("signed_log_gamma sign alternates between negative poles") {
    // Gamma is negative on (-1,0), positive on (-2,-1), ...
    CHECK(signed_log_gamma(-0.5).sign == -1);
    CHECK(signed_log_gamma(-0.5).value() == Approx(-2.0 * kSqrtPi));
    CHECK(signed_log_gamma(-1.5).sign == 1);
    CHECK(signed_log_gamma(-1.5).value() == Approx(4.0 * kSqrtPi / 3.0));
    CHECK(signed_log_gamma(-2.5).sign == -1);
    CHECK(signed_log_gamma(-6.3).sign == -1);
    CHECK(signed_log_gamma(-5.7).sign == 1);
}

TEST_CASE("signed_log_gamma satisfies the reflection identity") {
    for (double x : {0.3, -0.7, -3.4, 2.6, -9.1}) {
        SignedLogValue lhs = signed_log_gamma(x) * signed_log_gamma(1.0 - x);
        double rhs = kPi / std::sin(kPi * x);
        CHECK(lhs.value() == Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("signed_log_gamma throws on the pole lattice") {
    CHECK_THROWS_AS(signed_log_gamma(0.0), pole_error);
    CHECK_THROWS_AS(signed_log_gamma(-3.0), pole_error);
    CHECK_NOTHROW(signed_log_gamma(-3.0 + 1e-9));
}

TEST_CASE("is_nonpositive_integer matches the pole lattice exactly") {
    CHECK(is_nonpositive_integer(0.0));
    CHECK(is_nonpositive_integer(-7.0));
    CHECK_FALSE(is_nonpositive_integer(1.0));
    CHECK_FALSE(is_nonpositive_integer(-7.0 + 1e-12));
    CHECK(is_nonpositive_integer(cplx(-2.0, 0.0)));
    CHECK_FALSE(is_nonpositive_integer(cplx(-2.0, 1e-13)));
}

TEST_CASE("SignedLogValue algebra tracks signs and exact zeros") {
    SignedLogValue a = SignedLogValue::from_value(-2.0);
    SignedLogValue b = SignedLogValue::from_value(0.5);
    CHECK((a * b).value() == Approx(-1.0));
    CHECK((a / b).value() == Approx(-4.0));
    CHECK(SignedLogValue::from_value(0.0).is_zero());
    CHECK(SignedLogValue::zero().value() == 0.0);
    CHECK((SignedLogValue::zero() * a).is_zero());
    CHECK_THROWS_AS(a / SignedLogValue::zero(), pole_error);
}

TEST_CASE("complex log_gamma agrees with the real branch and recurrence") {
    for (double x : {0.4, 1.7, 6.2}) {
        cplx lg = log_gamma(cplx(x, 0.0));
        CHECK(lg.imag() == Approx(0.0).epsilon(1e-13));
        CHECK(lg.real() == Approx(signed_log_gamma(x).logmag).epsilon(1e-13));
    }
    // Gamma(z+1) = z Gamma(z) off the real axis
    for (cplx z : {cplx(0.3, 1.2), cplx(-1.4, 0.8), cplx(2.5, -3.0)}) {
        cplx lhs = gamma(z + 1.0);
        cplx rhs = z * gamma(z);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
    }
}

TEST_CASE("|Gamma(i)|^2 = pi/sinh(pi)") {
    cplx g = gamma(cplx(0.0, 1.0));
    CHECK(std::norm(g) == Approx(kPi / std::sinh(kPi)).epsilon(1e-12));
}

TEST_CASE("pochhammer rises, falls, and hits exact poles") {
    CHECK(pochhammer(cplx(3.0, 0.0), 4).real() == Approx(3.0 * 4.0 * 5.0 * 6.0));
    CHECK(pochhammer(cplx(0.5, 0.0), 0).real() == Approx(1.0));
    // (a)_{-k} = 1/((a-1)...(a-k))
    CHECK(pochhammer(cplx(5.0, 0.0), -2).real() == Approx(1.0 / (4.0 * 3.0)));
    CHECK_THROWS_AS(pochhammer(cplx(1.0, 0.0), -1), pole_error);

    SignedLogValue slv = pochhammer_slv(-2.3, 3);
    CHECK(slv.value() == Approx(-2.3 * -1.3 * -0.3).epsilon(1e-13));
    CHECK(pochhammer_slv(0.7, -2).value() ==
          Approx(1.0 / ((0.7 - 1.0) * (0.7 - 2.0))).epsilon(1e-13));
}

TEST_CASE("reciprocal_gamma is exactly zero at the poles and only there") {
    CHECK(reciprocal_gamma(-4.0) == 0.0);
    CHECK(reciprocal_gamma(0.0) == 0.0);
    CHECK(reciprocal_gamma(cplx(-2.0, 0.0)) == cplx(0.0, 0.0));
    CHECK(reciprocal_gamma(-4.0 + 1e-9) != 0.0);
    CHECK(reciprocal_gamma(2.0) == Approx(1.0));
    CHECK(reciprocal_gamma(0.5) == Approx(1.0 / kSqrtPi));
}

TEST_CASE("pole_leading_coefficient carries the residues (-1)^k/k!") {
    CHECK(pole_leading_coefficient(0) == Approx(1.0));
    CHECK(pole_leading_coefficient(1) == Approx(-1.0));
    CHECK(pole_leading_coefficient(3) == Approx(-1.0 / 6.0));
    // Gamma(-k + eps) ~ coeff/eps: compare at a small offset
    double eps = 1e-7;
    double approx = signed_log_gamma(-3.0 + eps).value() * eps;
    CHECK(approx == Approx(pole_leading_coefficient(3)).epsilon(1e-5));
}
