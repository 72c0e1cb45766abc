#pragma once

// Signatures of U(n) irreducibles: strictly decreasing integer labels
// m_1 > ... > m_n, with the dual, the dimension formula, determinant shifts,
// the Maya-diagram view, and the unipotent classification used by the
// blow-up decomposition.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ssk::sig {

class Signature {
public:
    explicit Signature(std::vector<long> labels);

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<long>& labels() const { return labels_; }
    long operator[](int i) const { return labels_[static_cast<size_t>(i)]; }
    long sum() const;

    friend auto operator<=>(const Signature&, const Signature&) = default;

private:
    std::vector<long> labels_;
};

// Validating factory; rejects non-strictly-decreasing input.
Signature make_signature(std::vector<long> labels);

// m* = (n-1-m_n, ..., n-1-m_1), the labels of the conjugate representation.
Signature dual(const Signature& m);

// dim pi_m = prod_{a<b} (m_a - m_b) / prod_{j=1}^{n-1} j!
// Exact integer arithmetic; throws std::overflow_error past long long range.
long long dimension(const Signature& m);

// (m_1 + k, ..., m_n + k): tensoring with det^k.
Signature shift_all(const Signature& m, long k);

enum class UnipotentKind { Tail, Z };

struct UnipotentClass {
    UnipotentKind kind = UnipotentKind::Tail;
    int j = -1;   // valid when kind == Z; 0 <= j <= n - alpha

    bool is_tail() const { return kind == UnipotentKind::Tail; }
};

// Membership in the pieces Z(j) at the integer point alpha: the labels
// alpha-1, ..., 1, 0 must all be present (an obligatory contiguous block in
// sorted order), exactly j labels negative, and the remaining n-alpha-j
// labels >= alpha. Everything else is Tail. For alpha = 0 the obligatory
// block is empty and j = #negatives, so nothing is Tail.
UnipotentClass classify_unipotent(const Signature& m, int alpha);

// Membership of m in the support Omega_sigma of the semi-definite quotient
// at a Berezin-Wallach parameter (tau = 0 implied):
//   sigma < -(n-1):            m_n >= 0
//   sigma = -n + alpha, alpha in {1..n}: m_n = 0, m_{n-1} = 1, ..., m_{n-alpha+1} = alpha-1
// Throws std::domain_error for sigma outside the Berezin-Wallach set.
bool omega_support(const Signature& m, double sigma);

// All signatures with labels in [-M, M], lexicographically ordered.
std::vector<Signature> all_signatures(int n, long M);

// Maya diagram over the window [lo, hi]: '#' on occupied integers.
std::string maya_string(const Signature& m, long lo, long hi);

} // namespace ssk::sig
