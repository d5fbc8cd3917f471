#pragma once

#include <array>
#include <complex>
#include <iosfwd>
#include <string>

#include "ucpt/rational.hpp"

namespace ucpt {

/// Element of the Gaussian rationals Q(i).
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussianRational conj() const { return {re, -im}; }
    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// |z|^2, a rational.
    Rational norm_sq() const { return re * re + im * im; }

    GaussianRational inverse() const {
        Rational n = norm_sq();
        if (n.is_zero()) throw DivideByZero{};
        return {re / n, -im / n};
    }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    /// Text form "a/b", "c/d i", or "a/b+c/d i".
    std::string str() const;
    static GaussianRational parse(const std::string& text);
};

/// Exact scalar in the field Q(i, sqrt2, sqrt3), stored in the basis
/// {1, sqrt2, sqrt3, sqrt6} over Q(i):
///
///     x = c1 + c2*sqrt2 + c3*sqrt3 + c6*sqrt6.
///
/// The representation is unique, so equality is coordinate-wise.
/// Closed multiplication table: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
/// sqrt3*sqrt6 = 3*sqrt2.  conj() fixes the radicals and negates i.
class ExScalar {
  public:
    ExScalar() = default;
    ExScalar(long n) : c1_(Rational(n)) {}  // NOLINT(google-explicit-constructor)
    ExScalar(Rational r) : c1_(GaussianRational(std::move(r))) {}  // NOLINT
    ExScalar(GaussianRational g) : c1_(std::move(g)) {}  // NOLINT
    ExScalar(GaussianRational a1, GaussianRational a2, GaussianRational a3, GaussianRational a6)
        : c1_(std::move(a1)), c2_(std::move(a2)), c3_(std::move(a3)), c6_(std::move(a6)) {}

    static ExScalar i() { return ExScalar(GaussianRational(Rational(0), Rational(1))); }
    static ExScalar sqrt2() { return ExScalar({}, GaussianRational(Rational(1)), {}, {}); }
    static ExScalar sqrt3() { return ExScalar({}, {}, GaussianRational(Rational(1)), {}); }
    static ExScalar sqrt6() { return ExScalar({}, {}, {}, GaussianRational(Rational(1))); }
    /// (-1 + i sqrt3)/2, the primitive cube root of unity.
    static ExScalar omega() {
        return ExScalar(GaussianRational(Rational(-1, 2)), {},
                        GaussianRational(Rational(0), Rational(1, 2)), {});
    }

    const GaussianRational& part_1() const { return c1_; }
    const GaussianRational& part_sqrt2() const { return c2_; }
    const GaussianRational& part_sqrt3() const { return c3_; }
    const GaussianRational& part_sqrt6() const { return c6_; }

    bool is_zero() const { return c1_.is_zero() && c2_.is_zero() && c3_.is_zero() && c6_.is_zero(); }
    bool is_one() const { return c1_.re.is_one() && c1_.im.is_zero() && radical_free(); }
    /// True when the value lies in Q (no imaginary part, no radicals).
    bool is_rational() const { return c1_.is_real() && radical_free(); }
    /// True when invariant under conj(), i.e. all four coordinates are real.
    bool is_real() const {
        return c1_.is_real() && c2_.is_real() && c3_.is_real() && c6_.is_real();
    }

    /// The rational value; requires is_rational().
    Rational to_rational() const;

    ExScalar conj() const { return {c1_.conj(), c2_.conj(), c3_.conj(), c6_.conj()}; }
    ExScalar operator-() const { return {-c1_, -c2_, -c3_, -c6_}; }

    ExScalar& operator+=(const ExScalar& o);
    ExScalar& operator-=(const ExScalar& o);
    friend ExScalar operator+(ExScalar a, const ExScalar& b) { return a += b; }
    friend ExScalar operator-(ExScalar a, const ExScalar& b) { return a -= b; }
    friend ExScalar operator*(const ExScalar& a, const ExScalar& b);
    friend ExScalar operator/(const ExScalar& a, const ExScalar& b) { return a * b.inverse(); }

    friend bool operator==(const ExScalar& a, const ExScalar& b) {
        return a.c1_ == b.c1_ && a.c2_ == b.c2_ && a.c3_ == b.c3_ && a.c6_ == b.c6_;
    }
    friend bool operator!=(const ExScalar& a, const ExScalar& b) { return !(a == b); }

    /// Multiplicative inverse, computed by solving the 8x8 Q-linear system
    /// for x*y = 1 in the basis {1, i} x {1, sqrt2, sqrt3, sqrt6}.
    ExScalar inverse() const;

    /// |x|^2 = x * conj(x).
    ExScalar norm_sq() const { return *this * conj(); }

    std::complex<double> to_complex() const;

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const ExScalar& x);

  private:
    bool radical_free() const { return c2_.is_zero() && c3_.is_zero() && c6_.is_zero(); }

    GaussianRational c1_, c2_, c3_, c6_;
};

inline ExScalar conj(const ExScalar& x) { return x.conj(); }

}  // namespace ucpt
