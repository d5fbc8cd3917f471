#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ucpt/matrix.hpp"

namespace ucpt {

/// Result of exact Gaussian elimination: the rank and an exact basis of the
/// right nullspace (each basis vector satisfies M v = 0 exactly).
struct RankNullspace {
    int rank = 0;
    std::vector<std::vector<ExScalar>> nullspace;  // each of length cols
};

/// Exact rank and nullspace over Q(i, sqrt2, sqrt3).  Pivots are chosen as
/// the first nonzero entry in row order within each column, so the output
/// basis is deterministic.
RankNullspace rank_nullspace(const ExMat& m);

/// Solves M x = rhs exactly; empty when the system is singular/inconsistent.
std::optional<std::vector<ExScalar>> solve_linear(const ExMat& m,
                                                  const std::vector<ExScalar>& rhs);

/// Exact inverse; throws when singular.
ExMat inverse(const ExMat& m);

namespace detail {

template <typename T>
T bareiss_divide(const T& a, const T& b) {
    return a / b;
}
inline TPoly bareiss_divide(const TPoly& a, const TPoly& b) { return a.exact_div(b); }

}  // namespace detail

/// Fraction-free Bareiss determinant.  Works over any integral domain in
/// which the intermediate divisions are exact (they always are for Bareiss);
/// a non-exact division over TPoly signals an implementation bug via
/// NotDivisible.  Polynomial matrices are capped at 36x36 to keep runtimes
/// bounded.
template <typename T>
T det_bareiss(Mat<T> m) {
    if (!m.is_square()) throw ShapeError("determinant of non-square matrix");
    const int n = m.rows();
    if constexpr (std::is_same_v<T, TPoly>) {
        if (n > 36) throw ExplicitTooLarge("polynomial determinant capped at 36x36");
    }
    if (n == 0) return scalar::one<T>();

    T prev_pivot = scalar::one<T>();
    bool negate = false;
    for (int k = 0; k < n - 1; ++k) {
        if (scalar::is_zero(m(k, k))) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (!scalar::is_zero(m(r, k))) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return scalar::zero<T>();
            for (int c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                T num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = detail::bareiss_divide(num, prev_pivot);
            }
            m(i, k) = scalar::zero<T>();
        }
        prev_pivot = m(k, k);
    }
    T det = m(n - 1, n - 1);
    return negate ? -det : det;
}

}  // namespace ucpt
