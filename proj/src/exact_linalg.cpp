#include "ucpt/exact_linalg.hpp"

namespace ucpt {

RankNullspace rank_nullspace(const ExMat& m) {
    const int rows = m.rows(), cols = m.cols();
    ExMat a = m;
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot_col(static_cast<std::size_t>(cols), false);

    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r)
            if (!a(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < cols; ++c) std::swap(a(row, c), a(p, c));
        ExScalar inv = a(row, col).inverse();
        for (int c = col; c < cols; ++c) a(row, c) = a(row, c) * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            ExScalar f = a(r, col);
            for (int c = col; c < cols; ++c) a(r, c) -= f * a(row, c);
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[static_cast<std::size_t>(col)] = true;
        ++row;
    }

    RankNullspace out;
    out.rank = row;
    for (int free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot_col[static_cast<std::size_t>(free_col)]) continue;
        std::vector<ExScalar> v(static_cast<std::size_t>(cols), ExScalar(0));
        v[static_cast<std::size_t>(free_col)] = ExScalar(1);
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
            v[static_cast<std::size_t>(pivot_col_of_row[r])] =
                -a(static_cast<int>(r), free_col);
        out.nullspace.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<ExScalar>> solve_linear(const ExMat& m,
                                                  const std::vector<ExScalar>& rhs) {
    if (static_cast<int>(rhs.size()) != m.rows()) throw ShapeError("solve_linear rhs size");
    // Eliminate on the augmented matrix.
    const int rows = m.rows(), cols = m.cols();
    ExMat a(rows, cols + 1);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) a(i, j) = m(i, j);
        a(i, cols) = rhs[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int p = -1;
        for (int r = row; r < rows; ++r)
            if (!a(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c <= cols; ++c) std::swap(a(row, c), a(p, c));
        ExScalar inv = a(row, col).inverse();
        for (int c = col; c <= cols; ++c) a(row, c) = a(row, c) * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            ExScalar f = a(r, col);
            for (int c = col; c <= cols; ++c) a(r, c) -= f * a(row, c);
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r)
        if (!a(r, cols).is_zero()) return std::nullopt;  // inconsistent

    if (row < cols) {
        // Underdetermined: return the particular solution with free vars 0
        // only if the caller needs a witness; a unique solve is expected here.
        // We still produce the particular solution.
    }
    std::vector<ExScalar> x(static_cast<std::size_t>(cols), ExScalar(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        x[static_cast<std::size_t>(pivot_col_of_row[r])] = a(static_cast<int>(r), cols);
    return x;
}

ExMat inverse(const ExMat& m) {
    if (!m.is_square()) throw ShapeError("inverse of non-square matrix");
    const int n = m.rows();
    ExMat a(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a(i, j) = m(i, j);
        a(i, n + i) = ExScalar(1);
    }
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) throw std::domain_error("matrix is singular");
        if (p != col)
            for (int c = 0; c < 2 * n; ++c) std::swap(a(col, c), a(p, c));
        ExScalar inv = a(col, col).inverse();
        for (int c = 0; c < 2 * n; ++c) a(col, c) = a(col, c) * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            ExScalar f = a(r, col);
            for (int c = 0; c < 2 * n; ++c) a(r, c) -= f * a(col, c);
        }
    }
    ExMat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = a(i, n + j);
    return out;
}

}  // namespace ucpt
