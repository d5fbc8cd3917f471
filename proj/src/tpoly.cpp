#include "ucpt/tpoly.hpp"

#include <ostream>
#include <sstream>

namespace ucpt {

bool TPoly::is_rational() const {
    for (const auto& c : coeffs_)
        if (!c.is_rational()) return false;
    return true;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, ExScalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return TPoly(std::move(out));
}

TPoly TPoly::conj() const {
    TPoly r = *this;
    for (auto& c : r.coeffs_) c = c.conj();
    return r;
}

TPoly TPoly::scaled(const ExScalar& c) const {
    TPoly r = *this;
    for (auto& x : r.coeffs_) x = x * c;
    r.trim();
    return r;
}

std::pair<TPoly, TPoly> TPoly::divmod(const TPoly& div) const {
    if (div.is_zero()) throw DivideByZero{};
    TPoly rem = *this;
    if (rem.degree() < div.degree()) return {TPoly{}, rem};
    std::vector<ExScalar> q(static_cast<std::size_t>(rem.degree() - div.degree()) + 1, ExScalar(0));
    ExScalar lead_inv = div.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= div.degree()) {
        int shift = rem.degree() - div.degree();
        ExScalar factor = rem.leading() * lead_inv;
        q[static_cast<std::size_t>(shift)] = factor;
        // rem -= factor * t^shift * div
        for (int k = 0; k <= div.degree(); ++k)
            rem.coeffs_[static_cast<std::size_t>(k + shift)] -=
                factor * div.coeffs_[static_cast<std::size_t>(k)];
        rem.trim();
    }
    return {TPoly(std::move(q)), rem};
}

TPoly TPoly::exact_div(const TPoly& div) const {
    auto [q, r] = divmod(div);
    if (!r.is_zero()) throw NotDivisible("polynomial division left remainder " + r.str());
    return q;
}

ExScalar TPoly::eval(const ExScalar& x) const {
    ExScalar acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

std::complex<double> TPoly::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k].to_complex();
    return acc;
}

TPoly TPoly::derivative() const {
    if (degree() <= 0) return {};
    std::vector<ExScalar> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = coeffs_[k] * ExScalar(static_cast<long>(k));
    return TPoly(std::move(out));
}

TPoly TPoly::gcd(TPoly a, TPoly b) {
    while (!b.is_zero()) {
        TPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.leading().inverse());
    return a;
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const auto& c = coeffs_[k];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        if (k == 0) {
            os << c.str();
        } else {
            if (!c.is_one()) os << "(" << c.str() << ")*";
            os << "t";
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.str(); }

}  // namespace ucpt
