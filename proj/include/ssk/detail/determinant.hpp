#pragma once

// Dense determinant by partial-pivoted elimination, row-major storage.
// Sized for the n <= 8 matrices appearing in character ratios, oracle
// reductions and the determinant-identity checks; no blocking needed.

#include <cmath>
#include <cstddef>
#include <vector>

namespace ssk::detail {

template <class T>
T determinant(std::vector<T> a, int n) {
    T det = T(1);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a[static_cast<size_t>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double v = std::abs(a[static_cast<size_t>(r) * n + col]);
            if (v > best) { best = v; piv = r; }
        }
        if (best == 0.0) return T(0);
        if (piv != col) {
            for (int c = col; c < n; ++c)
                std::swap(a[static_cast<size_t>(piv) * n + c], a[static_cast<size_t>(col) * n + c]);
            det = -det;
        }
        T d = a[static_cast<size_t>(col) * n + col];
        det *= d;
        for (int r = col + 1; r < n; ++r) {
            T f = a[static_cast<size_t>(r) * n + col] / d;
            for (int c = col; c < n; ++c)
                a[static_cast<size_t>(r) * n + c] -= f * a[static_cast<size_t>(col) * n + c];
        }
    }
    return det;
}

} // namespace ssk::detail
