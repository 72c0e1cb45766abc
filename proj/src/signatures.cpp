#include "ssk/signatures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ssk::sig {

Signature::Signature(std::vector<long> labels) : labels_(std::move(labels)) {
    if (labels_.empty())
        throw std::invalid_argument("Signature: need at least one label");
    for (size_t i = 1; i < labels_.size(); ++i)
        if (labels_[i - 1] <= labels_[i])
            throw std::invalid_argument("Signature: labels must strictly decrease");
}

long Signature::sum() const {
    return std::accumulate(labels_.begin(), labels_.end(), 0L);
}

Signature make_signature(std::vector<long> labels) {
    return Signature(std::move(labels));
}

Signature dual(const Signature& m) {
    int n = m.n();
    std::vector<long> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<size_t>(i)] = static_cast<long>(n) - 1 - m[n - 1 - i];
    return Signature(std::move(out));
}

long long dimension(const Signature& m) {
    int n = m.n();
    __int128 den = 1;
    for (long j = 1; j < n; ++j)
        for (long f = 2; f <= j; ++f) den *= f;
    __int128 num = 1;
    const __int128 guard = static_cast<__int128>(1) << 120;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            num *= (m[a] - m[b]);   // positive: labels strictly decrease
            if (num > guard)
                throw std::overflow_error("dimension: intermediate overflow");
        }
    }
    if (num % den != 0) throw std::logic_error("dimension: non-integer result");
    num /= den;
    if (num > static_cast<__int128>(std::numeric_limits<long long>::max()))
        throw std::overflow_error("dimension: exceeds long long range");
    return static_cast<long long>(num);
}

Signature shift_all(const Signature& m, long k) {
    std::vector<long> out = m.labels();
    for (long& v : out) v += k;
    return Signature(std::move(out));
}

UnipotentClass classify_unipotent(const Signature& m, int alpha) {
    int n = m.n();
    if (alpha < 0 || alpha > n - 1)
        throw std::domain_error("classify_unipotent: need 0 <= alpha <= n-1");
    int negatives = 0, block = 0, high = 0;
    for (int i = 0; i < n; ++i) {
        long v = m[i];
        if (v < 0) ++negatives;
        else if (v < alpha) ++block;   // labels are distinct, so block labels are a subset of {0..alpha-1}
        else ++high;
    }
    if (block != alpha) return {UnipotentKind::Tail, -1};
    return {UnipotentKind::Z, negatives};
}

bool omega_support(const Signature& m, double sigma) {
    int n = m.n();
    if (sigma < -(static_cast<double>(n) - 1.0))
        return m[n - 1] >= 0;
    double a = sigma + static_cast<double>(n);
    long alpha = std::lround(a);
    if (std::fabs(a - static_cast<double>(alpha)) > 1e-12 || alpha < 1 || alpha > n)
        throw std::domain_error("omega_support: sigma outside the Berezin-Wallach set");
    for (long i = 0; i < alpha; ++i)
        if (m[n - 1 - static_cast<int>(i)] != i) return false;
    return true;
}

std::vector<Signature> all_signatures(int n, long M) {
    if (n < 1) throw std::invalid_argument("all_signatures: n >= 1");
    if (M < 0 || 2 * M + 1 < n)
        throw std::invalid_argument("all_signatures: window too small for n labels");
    std::vector<Signature> out;
    std::vector<long> cur(static_cast<size_t>(n));
    // lexicographic descent: label i ranges below label i-1
    auto rec = [&](auto&& self, int i, long hi) -> void {
        if (i == n) { out.emplace_back(cur); return; }
        long need = static_cast<long>(n - 1 - i); // room for the remaining labels
        for (long v = hi; v - need >= -M; --v) {
            cur[static_cast<size_t>(i)] = v;
            self(self, i + 1, v - 1);
        }
    };
    rec(rec, 0, M);
    return out;
}

std::string maya_string(const Signature& m, long lo, long hi) {
    std::string s;
    for (long v = hi; v >= lo; --v) {
        bool occupied = std::find(m.labels().begin(), m.labels().end(), v) != m.labels().end();
        s += occupied ? '#' : '.';
    }
    return s;
}

} // namespace ssk::sig
