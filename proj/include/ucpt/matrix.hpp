#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "ucpt/errors.hpp"
#include "ucpt/exscalar.hpp"
#include "ucpt/tpoly.hpp"

namespace ucpt {

using CScalar = std::complex<double>;

namespace scalar {

inline ExScalar conjugate(const ExScalar& x) { return x.conj(); }
inline TPoly conjugate(const TPoly& p) { return p.conj(); }
inline CScalar conjugate(const CScalar& z) { return std::conj(z); }

inline bool is_zero(const ExScalar& x) { return x.is_zero(); }
inline bool is_zero(const TPoly& p) { return p.is_zero(); }
inline bool is_zero(const CScalar& z) { return z == CScalar(0.0, 0.0); }

template <typename T>
T zero() { return T(0); }
template <>
inline TPoly zero<TPoly>() { return TPoly{}; }
template <typename T>
T one() { return T(1); }

}  // namespace scalar

/// Dense row-major matrix over one scalar backend (ExScalar, TPoly, or
/// complex<double>).  All operations are pure; matrices are value types.
template <typename T>
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                   scalar::zero<T>()) {
        if (rows < 0 || cols < 0) throw ShapeError("negative matrix dimension");
    }
    Mat(int rows, int cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
            throw ShapeError("entry count does not match dimensions");
    }
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
        entries_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) throw ShapeError("ragged initializer");
            for (const auto& x : r) entries_.push_back(x);
        }
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int k = 0; k < n; ++k) m(k, k) = scalar::one<T>();
        return m;
    }
    static Mat zero(int rows, int cols) { return Mat(rows, cols); }
    /// |e_i><e_j| (0-based indices).
    static Mat unit(int n, int i, int j) {
        Mat m(n, n);
        m(i, j) = scalar::one<T>();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return entries_[idx(i, j)]; }
    const T& operator()(int i, int j) const { return entries_[idx(i, j)]; }

    const std::vector<T>& entries() const { return entries_; }
    std::vector<T>& entries() { return entries_; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    bool is_zero_matrix() const {
        for (const auto& x : entries_)
            if (!scalar::is_zero(x)) return false;
        return true;
    }

    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.entries_) x = -x;
        return r;
    }
    Mat& operator+=(const Mat& o) {
        check_same_shape(o, "add");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        check_same_shape(o, "sub");
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }
    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
        Mat out(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (scalar::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (scalar::is_zero(bkj)) continue;
                    out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    Mat scaled(const T& c) const {
        Mat r = *this;
        for (auto& x : r.entries_) x = x * c;
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat adjoint() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = scalar::conjugate((*this)(i, j));
        return r;
    }

    T trace() const {
        if (!is_square()) throw ShapeError("trace of non-square matrix");
        T acc = scalar::zero<T>();
        for (int k = 0; k < rows_; ++k) acc += (*this)(k, k);
        return acc;
    }

    /// Row-major flattening of a matrix into a 1 x (rows*cols) row vector.
    Mat vec_row() const {
        Mat r(1, rows_ * cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k];
        return r;
    }

    template <typename F>
    auto map(F&& f) const -> Mat<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        Mat<U> out(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

  private:
    std::size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw ShapeError("index out of range");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
    void check_same_shape(const Mat& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw ShapeError(std::string("shape mismatch in ") + op);
    }

    int rows_ = 0, cols_ = 0;
    std::vector<T> entries_;
};

using ExMat = Mat<ExScalar>;
using PolyMat = Mat<TPoly>;
using CMat = Mat<CScalar>;

/// Kronecker product; the first factor carries the coarse (block) index.
template <typename T>
Mat<T> kron(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (scalar::is_zero(a(i, j))) continue;
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
        }
    return out;
}

template <typename T>
Mat<T> direct_sum(const Mat<T>& a, const Mat<T>& b) {
    Mat<T> out(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

/// Hilbert-Schmidt inner product trace(A * B^dagger).
template <typename T>
T hs_inner(const Mat<T>& a, const Mat<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("hs_inner shape mismatch");
    T acc = scalar::zero<T>();
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) acc += a(i, j) * scalar::conjugate(b(i, j));
    return acc;
}

enum class TraceSide { first, second };

/// Partial trace of an (p*q) x (p*q) matrix over the coarse factor (first)
/// or the fine factor (second) of the Kronecker ordering.
template <typename T>
Mat<T> partial_trace(const Mat<T>& m, int p, int q, TraceSide side) {
    if (m.rows() != p * q || m.cols() != p * q)
        throw ShapeError("partial_trace dimension mismatch");
    if (side == TraceSide::first) {
        Mat<T> out(q, q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int i = 0; i < p; ++i) out(a, b) += m(i * q + a, i * q + b);
        return out;
    }
    Mat<T> out(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            for (int a = 0; a < q; ++a) out(i, j) += m(i * q + a, j * q + a);
    return out;
}

inline CMat to_cmat(const ExMat& m) {
    return m.map([](const ExScalar& x) { return x.to_complex(); });
}

inline PolyMat to_polymat(const ExMat& m) {
    return m.map([](const ExScalar& x) { return TPoly(x); });
}

inline ExMat eval_at(const PolyMat& m, const ExScalar& t) {
    return m.map([&t](const TPoly& p) { return p.eval(t); });
}

inline double max_abs(const CMat& m) {
    double mx = 0.0;
    for (const auto& z : m.entries()) mx = std::max(mx, std::abs(z));
    return mx;
}

}  // namespace ucpt
