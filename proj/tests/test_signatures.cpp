#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ssk/signatures.hpp"

using namespace ssk::sig;

TEST_CASE("make_signature enforces strictly decreasing labels") {
    CHECK_NOTHROW(make_signature({3, 1, 0}));
    CHECK_NOTHROW(make_signature({5}));
    CHECK_THROWS_AS(make_signature({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(make_signature({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_signature({0, -1, -1}), std::invalid_argument);
}

TEST_CASE("dual reverses and reflects labels and is an involution") {
    Signature m = make_signature({4, 1, -2});
    Signature d = dual(m);
    // (n-1-m_n, ..., n-1-m_1) with n = 3
    CHECK(d.labels() == std::vector<long>{4, 1, -2});
    CHECK(dual(d) == m);

    Signature m2 = make_signature({3, 0});
    CHECK(dual(m2).labels() == std::vector<long>{1, -2});
    CHECK(dual(dual(m2)) == m2);

    // the trivial signature is self-dual
    Signature triv = make_signature({2, 1, 0});
    CHECK(dual(triv) == triv);
}

TEST_CASE("dimension is the Vandermonde over superfactorial, exactly") {
    CHECK(dimension(make_signature({0})) == 1);
    CHECK(dimension(make_signature({7})) == 1);
    CHECK(dimension(make_signature({1, 0})) == 1);
    CHECK(dimension(make_signature({2, 0})) == 2);
    CHECK(dimension(make_signature({2, 1, 0})) == 1);
    CHECK(dimension(make_signature({3, 1, 0})) == 3);      // fundamental of U(3)
    CHECK(dimension(make_signature({3, 2, 0})) == 3);      // its conjugate twist
    CHECK(dimension(make_signature({4, 2, 0})) == 8);      // adjoint
    CHECK(dimension(make_signature({3, 2, 1, 0})) == 1);
    CHECK(dimension(make_signature({4, 2, 1, 0})) == 4);
}

TEST_CASE("dimension is invariant under determinant shifts") {
    Signature m = make_signature({5, 2, -1});
    for (long k : {-3L, 1L, 10L}) {
        Signature s = shift_all(m, k);
        CHECK(s.labels() == std::vector<long>{5 + k, 2 + k, -1 + k});
        CHECK(dimension(s) == dimension(m));
    }
    CHECK(dual(m).sum() == -m.sum() + 3 * 2);
}

TEST_CASE("classify_unipotent at alpha = 0 counts negatives, no tail") {
    for (const auto& m : all_signatures(3, 2)) {
        UnipotentClass c = classify_unipotent(m, 0);
        CHECK_FALSE(c.is_tail());
        int neg = 0;
        for (long v : m.labels())
            if (v < 0) ++neg;
        CHECK(c.j == neg);
    }
}

TEST_CASE("classify_unipotent requires the obligatory block") {
    // alpha = 1: the label 0 must be present
    CHECK(classify_unipotent(make_signature({5, 0, -1}), 1).j == 1);
    CHECK_FALSE(classify_unipotent(make_signature({5, 0, -1}), 1).is_tail());
    CHECK(classify_unipotent(make_signature({5, 4, 3}), 1).is_tail());
    CHECK(classify_unipotent(make_signature({5, 4, -1}), 1).is_tail());

    // alpha = 2: labels 1, 0 both present; remaining ones negative or >= 2
    CHECK(classify_unipotent(make_signature({2, 1, 0}), 2).j == 0);
    CHECK(classify_unipotent(make_signature({1, 0, -3}), 2).j == 1);
    CHECK(classify_unipotent(make_signature({3, 1, -1}), 2).is_tail());
}

TEST_CASE("omega_support follows the Berezin-Wallach support rules") {
    // continuous branch sigma < -(n-1): m_n >= 0
    CHECK(omega_support(make_signature({3, 0}), -4.5));
    CHECK_FALSE(omega_support(make_signature({3, -1}), -4.5));

    // sigma = -n + alpha: bottom labels pinned to alpha-1, ..., 0
    // n = 2, sigma = -1 (alpha = 1): m_2 = 0
    CHECK(omega_support(make_signature({2, 0}), -1.0));
    CHECK_FALSE(omega_support(make_signature({2, 1}), -1.0));
    // n = 2, sigma = 0 (alpha = 2): m = (1, 0) only
    CHECK(omega_support(make_signature({1, 0}), 0.0));
    CHECK_FALSE(omega_support(make_signature({2, 0}), 0.0));

    CHECK_THROWS_AS(omega_support(make_signature({1, 0}), 0.5), std::domain_error);
    CHECK_THROWS_AS(omega_support(make_signature({1, 0}), -0.25), std::domain_error);
}

TEST_CASE("all_signatures enumerates the label window") {
    CHECK(all_signatures(1, 3).size() == 7);
    CHECK(all_signatures(2, 2).size() == 10);   // C(5, 2)
    CHECK(all_signatures(3, 2).size() == 10);   // C(5, 3)
    for (const auto& m : all_signatures(2, 2)) {
        CHECK(m[0] > m[1]);
        CHECK(m[0] <= 2);
        CHECK(m[1] >= -2);
    }
}

TEST_CASE("maya_string marks occupied labels, window printed downward") {
    CHECK(maya_string(make_signature({1, -1}), -2, 2) == ".#.#.");
    CHECK(maya_string(make_signature({0}), 0, 0) == "#");
    CHECK(maya_string(make_signature({3, 2}), -1, 1) == "...");
}
