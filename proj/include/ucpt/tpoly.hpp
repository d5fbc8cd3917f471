#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ucpt/exscalar.hpp"

namespace ucpt {

/// Univariate polynomial in the channel parameter t with ExScalar
/// coefficients, lowest degree first.  Normal form has no trailing zero
/// coefficient; the zero polynomial has an empty coefficient list and
/// degree() == -1 (the distinguished sentinel).
class TPoly {
  public:
    TPoly() = default;
    TPoly(ExScalar c) { coeffs_.push_back(std::move(c)); trim(); }  // NOLINT
    TPoly(Rational c) : TPoly(ExScalar(std::move(c))) {}            // NOLINT
    TPoly(long c) : TPoly(ExScalar(c)) {}                           // NOLINT
    explicit TPoly(std::vector<ExScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// The monomial t.
    static TPoly variable() { return TPoly(std::vector<ExScalar>{ExScalar(0), ExScalar(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const std::vector<ExScalar>& coeffs() const { return coeffs_; }
    ExScalar coeff(int k) const {
        return (k >= 0 && k <= degree()) ? coeffs_[static_cast<std::size_t>(k)] : ExScalar(0);
    }
    const ExScalar& leading() const { return coeffs_.back(); }

    /// True when every coefficient lies in Q.
    bool is_rational() const;

    TPoly operator-() const;
    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    /// Conjugates every coefficient (t is treated as a real parameter).
    TPoly conj() const;

    /// Scales by an exact nonzero constant.
    TPoly scaled(const ExScalar& c) const;

    /// Division with remainder over the coefficient field: *this = q*div + r.
    std::pair<TPoly, TPoly> divmod(const TPoly& div) const;

    /// Exact division; throws NotDivisible when the remainder is nonzero.
    TPoly exact_div(const TPoly& div) const;

    ExScalar eval(const ExScalar& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    TPoly derivative() const;

    /// Monic gcd over the coefficient field (Euclid).
    static TPoly gcd(TPoly a, TPoly b);

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const TPoly& p);

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<ExScalar> coeffs_;
};

inline TPoly conj(const TPoly& p) { return p.conj(); }

}  // namespace ucpt
