#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ssk/gamma_kit.hpp"
#include "ssk/su11.hpp"

using namespace ssk::su11;
using cplx = std::complex<double>;
using doctest::Approx;

TEST_CASE("multiplier_c matches the Gamma reciprocal directly") {
    Su11Params params{0.25, 0.375};
    for (long k : {-3L, 0L, 1L, 4L}) {
        cplx got = multiplier_c(k, params);
        double kk = static_cast<double>(k);
        double want = ((k % 2 == 0) ? 1.0 : -1.0) /
                      (std::tgamma(0.25 + kk) * std::tgamma(0.375 - kk));
        CHECK(got.real() == Approx(want).epsilon(1e-12));
        CHECK(got.imag() == 0.0);
    }
}

TEST_CASE("multiplier_c is exactly zero on the integer loci") {
    // q - k a non-positive integer: 1/Gamma = 0
    CHECK(multiplier_c(0, {1.0, 0.0}) == cplx(0.0, 0.0));
    CHECK(multiplier_c(2, {1.0, 1.0}) == cplx(0.0, 0.0));
    // at (1, 0) every mode dies; one Gamma off the lattice revives it
    CHECK(multiplier_c(-1, {1.0, 0.0}) == cplx(0.0, 0.0));
    CHECK(multiplier_c(1, {1.0, 0.5}) != cplx(0.0, 0.0));
}

TEST_CASE("multiplier recurrences of the intertwining relations hold") {
    Su11Params params{cplx(0.7, 0.2), cplx(0.45, -0.1)};
    for (long k = -5; k <= 5; ++k) {
        double kk = static_cast<double>(k);
        cplx lhs = (kk + params.p) * multiplier_c(k + 1, params);
        cplx rhs = (kk + 1.0 - params.q) * multiplier_c(k, params);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(std::abs(lhs), 1.0));
    }
}

TEST_CASE("complementary_inner is positive inside the unit square") {
    for (auto [p, q] : {std::pair{0.25, 0.375}, std::pair{0.9, 0.1}}) {
        Su11Params params{p, q};
        CHECK(complementary_inner(0, params) ==
              Approx(1.0 / (std::tgamma(p) * std::tgamma(q))).epsilon(1e-12));
        for (long k = -12; k <= 12; ++k) CHECK(complementary_inner(k, params) > 0.0);
    }
}

TEST_CASE("FourierTruncation enforces its window") {
    FourierTruncation f(3);
    f.set(2, cplx(1.0, -1.0));
    f.set(-3, 0.5);
    CHECK(f.at(2) == cplx(1.0, -1.0));
    CHECK(f.at(0) == cplx(0.0, 0.0));
    CHECK_THROWS_AS(f.set(4, 1.0), std::out_of_range);
}

TEST_CASE("lie_apply implements the sl(2) action on modes") {
    Su11Params params{0.3, 0.8};
    FourierTruncation f(4);
    f.set(1, 2.0);

    auto l0 = lie_apply(Lie::L0, params, f);
    CHECK(std::abs(l0.at(1) - cplx(2.0 * (1.0 + (0.3 - 0.8) / 2.0), 0.0)) < 1e-15);

    auto lp = lie_apply(Lie::Lplus, params, f);
    CHECK(std::abs(lp.at(2) - cplx(2.0 * (1.0 + 0.3), 0.0)) < 1e-15);
    CHECK(lp.at(1) == cplx(0.0, 0.0));

    auto lm = lie_apply(Lie::Lminus, params, f);
    CHECK(std::abs(lm.at(0) - cplx(2.0 * (1.0 - 0.8), 0.0)) < 1e-15);

    FourierTruncation edge(1);
    edge.set(1, 1.0);
    CHECK_THROWS_AS(lie_apply(Lie::Lplus, params, edge), std::out_of_range);
}

TEST_CASE("pairing_pi pairs opposite modes bilinearly") {
    FourierTruncation f1(3), f2(3);
    f1.set(2, cplx(0.0, 1.0));
    f1.set(0, 3.0);
    f2.set(-2, cplx(2.0, 0.0));
    f2.set(0, cplx(1.0, 1.0));
    // sum_k f1(k) f2(-k), no conjugation
    cplx want = cplx(0.0, 1.0) * cplx(2.0, 0.0) + 3.0 * cplx(1.0, 1.0);
    CHECK(std::abs(pairing_pi(f1, f2) - want) < 1e-15);
}

TEST_CASE("classify_su11 labels the families") {
    auto comp = classify_su11({0.25, 0.375});
    CHECK(comp.count(Su11Class::Complementary) == 1);
    CHECK(comp.count(Su11Class::PrincipalUnitary) == 0);

    auto princ = classify_su11({cplx(0.5, 0.3), cplx(0.5, 0.3)});
    CHECK(princ.count(Su11Class::PrincipalUnitary) == 1);

    // the families meet on p + q = 1 inside the square
    auto both = classify_su11({0.3, 0.7});
    CHECK(both.count(Su11Class::PrincipalUnitary) == 1);
    CHECK(both.count(Su11Class::Complementary) == 1);

    CHECK(classify_su11({2.0, 0.0}).count(Su11Class::HighestWeight) == 1);
    CHECK(classify_su11({0.0, 1.5}).count(Su11Class::LowestWeight) == 1);
    CHECK(classify_su11({cplx(3.0, 1.0), cplx(-2.0, 0.4)}).empty());
    CHECK(to_string(Su11Class::Complementary) == std::string("complementary"));
}

TEST_CASE("blowup multiplier at (1,0) is the exact two-sided split") {
    CHECK(blowup_multiplier_10(3, 0.4, 1.1) == Approx(1.1 / 1.5).epsilon(1e-15));
    CHECK(blowup_multiplier_10(0, 0.4, 1.1) == Approx(1.1 / 1.5).epsilon(1e-15));
    CHECK(blowup_multiplier_10(-2, 0.4, 1.1) == Approx(-0.4 / 1.5).epsilon(1e-15));
    CHECK(blowup_multiplier_10(2, 0.4, 1.1) + (-blowup_multiplier_10(-2, 0.4, 1.1)) ==
          Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(blowup_multiplier_10(1, 1.0, -1.0), std::domain_error);
}

TEST_CASE("asymptotic exponent approximates 1 - Re(p+q)") {
    Su11Params params{0.7, 0.6};
    double slope = asymptotic_exponent(params, 30, 300);
    CHECK(std::fabs(slope - (1.0 - 1.3)) < 0.02);

    Su11Params wide{cplx(0.2, 0.5), cplx(0.9, -0.5)};
    double slope2 = asymptotic_exponent(wide, 30, 300);
    CHECK(std::fabs(slope2 - (1.0 - 1.1)) < 0.02);
}
