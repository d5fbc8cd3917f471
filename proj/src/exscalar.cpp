#include "ucpt/exscalar.hpp"

#include <array>
#include <cmath>
#include <ostream>
#include <sstream>
#include <vector>

namespace ucpt {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt6 = std::sqrt(6.0);

}  // namespace

std::string Rational::str() const {
    std::ostringstream os;
    os << q_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.q_; }

Rational Rational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s));
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw DivideByZero{};
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational literal: '" + text + "'");
    }
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    if (!re.is_zero()) os << re;
    if (!im.is_zero()) {
        if (!re.is_zero() && im.sign() > 0) os << "+";
        if (im.is_one())
            os << "i";
        else if ((-im).is_one())
            os << "-i";
        else
            os << im << " i";
    }
    return os.str();
}

GaussianRational GaussianRational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty scalar literal");

    // Split "re±im i" at the last top-level +/- that is not a leading sign.
    bool has_i = s.back() == 'i';
    if (!has_i) return GaussianRational(Rational::parse(s));

    s.pop_back();  // drop 'i'
    // Find the sign separating the real part from the imaginary coefficient.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/' && s[k - 1] != '+' && s[k - 1] != '-') {
            split = k;
            break;
        }
    }
    auto parse_coeff = [](std::string c) {
        if (c.empty() || c == "+") return Rational(1);
        if (c == "-") return Rational(-1);
        return Rational::parse(c);
    };
    if (split == std::string::npos) return {Rational(0), parse_coeff(s)};
    return {Rational::parse(s.substr(0, split)), parse_coeff(s.substr(split))};
}

ExScalar& ExScalar::operator+=(const ExScalar& o) {
    c1_ += o.c1_;
    c2_ += o.c2_;
    c3_ += o.c3_;
    c6_ += o.c6_;
    return *this;
}

ExScalar& ExScalar::operator-=(const ExScalar& o) {
    c1_ -= o.c1_;
    c2_ -= o.c2_;
    c3_ -= o.c3_;
    c6_ -= o.c6_;
    return *this;
}

ExScalar operator*(const ExScalar& a, const ExScalar& b) {
    const GaussianRational two{Rational(2)}, three{Rational(3)}, six{Rational(6)};
    GaussianRational r1 = a.c1_ * b.c1_ + two * (a.c2_ * b.c2_) + three * (a.c3_ * b.c3_) +
                          six * (a.c6_ * b.c6_);
    GaussianRational r2 = a.c1_ * b.c2_ + a.c2_ * b.c1_ + three * (a.c3_ * b.c6_ + a.c6_ * b.c3_);
    GaussianRational r3 = a.c1_ * b.c3_ + a.c3_ * b.c1_ + two * (a.c2_ * b.c6_ + a.c6_ * b.c2_);
    GaussianRational r6 = a.c1_ * b.c6_ + a.c6_ * b.c1_ + a.c2_ * b.c3_ + a.c3_ * b.c2_;
    return {r1, r2, r3, r6};
}

Rational ExScalar::to_rational() const {
    if (!is_rational()) throw std::logic_error("ExScalar is not rational: " + str());
    return c1_.re;
}

ExScalar ExScalar::inverse() const {
    if (is_zero()) throw DivideByZero{};

    // Represent y -> x*y as an 8x8 matrix over Q in the basis
    // {1, i, sqrt2, i sqrt2, sqrt3, i sqrt3, sqrt6, i sqrt6} and solve M v = e1.
    auto unpack = [](const ExScalar& x) {
        return std::array<Rational, 8>{x.c1_.re, x.c1_.im, x.c2_.re, x.c2_.im,
                                       x.c3_.re, x.c3_.im, x.c6_.re, x.c6_.im};
    };
    auto pack = [](const std::array<Rational, 8>& v) {
        return ExScalar({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]});
    };

    std::array<std::array<Rational, 8>, 8> m;
    for (int j = 0; j < 8; ++j) {
        std::array<Rational, 8> basis_coords{};
        basis_coords[j] = Rational(1);
        std::array<Rational, 8> col = unpack(*this * pack(basis_coords));
        for (int i = 0; i < 8; ++i) m[i][j] = col[i];
    }

    std::array<Rational, 8> rhs{};
    rhs[0] = Rational(1);

    // Exact Gaussian elimination with partial (first nonzero) pivoting.
    std::array<int, 8> perm{0, 1, 2, 3, 4, 5, 6, 7};
    for (int col = 0; col < 8; ++col) {
        int pivot = -1;
        for (int r = col; r < 8; ++r)
            if (!m[perm[r]][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::logic_error("singular multiplication operator (field bug)");
        std::swap(perm[col], perm[pivot]);
        int p = perm[col];
        for (int r = col + 1; r < 8; ++r) {
            int rr = perm[r];
            if (m[rr][col].is_zero()) continue;
            Rational f = m[rr][col] / m[p][col];
            for (int c = col; c < 8; ++c) m[rr][c] -= f * m[p][c];
            rhs[rr] -= f * rhs[p];
        }
    }
    std::array<Rational, 8> sol{};
    for (int col = 7; col >= 0; --col) {
        int p = perm[col];
        Rational acc = rhs[p];
        for (int c = col + 1; c < 8; ++c) acc -= m[p][c] * sol[c];
        sol[col] = acc / m[p][col];
    }
    return pack(sol);
}

std::complex<double> ExScalar::to_complex() const {
    std::complex<double> z = c1_.to_complex();
    z += kSqrt2 * c2_.to_complex();
    z += kSqrt3 * c3_.to_complex();
    z += kSqrt6 * c6_.to_complex();
    return z;
}

std::string ExScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const GaussianRational& g, const char* radical) {
        if (g.is_zero()) return;
        std::string body = g.str();
        bool needs_parens = radical[0] != '\0' && (!g.re.is_zero() && !g.im.is_zero());
        if (!first) os << " + ";
        if (needs_parens)
            os << "(" << body << ")";
        else
            os << body;
        if (radical[0] != '\0') os << "*" << radical;
        first = false;
    };
    emit(c1_, "");
    emit(c2_, "sqrt2");
    emit(c3_, "sqrt3");
    emit(c6_, "sqrt6");
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExScalar& x) { return os << x.str(); }

}  // namespace ucpt
