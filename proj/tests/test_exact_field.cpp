#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "ucpt/exscalar.hpp"
#include "ucpt/roots.hpp"
#include "ucpt/tpoly.hpp"

using namespace ucpt;

namespace {

// Small deterministic generator for randomized field-axiom checks.
struct XorShift {
    std::uint64_t s;
    explicit XorShift(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    long small(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Rational random_rational(XorShift& rng) { return {rng.small(-9, 9), rng.small(1, 7)}; }

ExScalar random_exscalar(XorShift& rng) {
    auto g = [&rng]() { return GaussianRational(random_rational(rng), random_rational(rng)); };
    return {g(), g(), g(), g()};
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational::parse("-59/84") == Rational(-59, 84));
    CHECK(Rational::parse("107/21") == Rational(107, 21));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK_THROWS_AS(Rational(1, 0), DivideByZero);
    CHECK_THROWS_AS(Rational::parse("x/3"), ParseError);
}

TEST_CASE("closure table of the radicals") {
    const ExScalar s2 = ExScalar::sqrt2(), s3 = ExScalar::sqrt3(), s6 = ExScalar::sqrt6();
    CHECK(s2 * s3 == s6);
    CHECK(s2 * s6 == ExScalar(2) * s3);
    CHECK(s3 * s6 == ExScalar(3) * s2);
    CHECK(s2 * s2 == ExScalar(2));
    CHECK(s3 * s3 == ExScalar(3));
    CHECK(s6 * s6 == ExScalar(6));
}

TEST_CASE("difference of squares and Gaussian inverse") {
    ExScalar one(1), s2 = ExScalar::sqrt2();
    CHECK((one + s2) * (one - s2) == ExScalar(-1));

    ExScalar z = ExScalar(1) + ExScalar::i();
    ExScalar expect(GaussianRational(Rational(1, 2), Rational(-1, 2)));
    CHECK(z.inverse() == expect);
}

TEST_CASE("conjugation fixes radicals and negates i") {
    ExScalar x = ExScalar::sqrt2() + ExScalar::i() * ExScalar::sqrt3();
    ExScalar c = x.conj();
    CHECK(c == ExScalar::sqrt2() - ExScalar::i() * ExScalar::sqrt3());

    XorShift rng(12345);
    for (int k = 0; k < 50; ++k) {
        ExScalar a = random_exscalar(rng), b = random_exscalar(rng);
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("field axioms on random triples") {
    XorShift rng(777);
    for (int k = 0; k < 1000; ++k) {
        ExScalar a = random_exscalar(rng), b = random_exscalar(rng), c = random_exscalar(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == ExScalar(1));
        }
    }
}

TEST_CASE("omega is a cube root of unity") {
    ExScalar w = ExScalar::omega();
    CHECK(w * w * w == ExScalar(1));
    CHECK(w * w + w + ExScalar(1) == ExScalar(0));
}

TEST_CASE("scalar text round trip") {
    ExScalar x(GaussianRational(Rational(3, 5), Rational(-4, 5)));
    CHECK(x.part_1().str() == "3/5-4/5 i");
    CHECK(GaussianRational::parse("3/5-4/5 i") == x.part_1());
    CHECK(GaussianRational::parse("i") == GaussianRational(Rational(0), Rational(1)));
    CHECK(GaussianRational::parse("-i") == GaussianRational(Rational(0), Rational(-1)));
    CHECK(GaussianRational::parse("2 i") == GaussianRational(Rational(0), Rational(2)));
    CHECK(GaussianRational::parse("1/2+1/3 i") ==
          GaussianRational(Rational(1, 2), Rational(1, 3)));
}

TEST_CASE("polynomial arithmetic basics") {
    TPoly t = TPoly::variable();
    TPoly p = t * t - TPoly(1);

    SUBCASE("factorization") { CHECK(p.exact_div(t - TPoly(1)) == t + TPoly(1)); }
    SUBCASE("eval is a ring homomorphism") {
        XorShift rng(4242);
        for (int k = 0; k < 30; ++k) {
            std::vector<ExScalar> ca, cb;
            for (int j = 0; j <= 4; ++j) ca.push_back(random_exscalar(rng));
            for (int j = 0; j <= 3; ++j) cb.push_back(random_exscalar(rng));
            TPoly a{ca}, b{cb};
            ExScalar x = random_exscalar(rng);
            CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
            CHECK((a + b).eval(x) == a.eval(x) + b.eval(x));
        }
    }
    SUBCASE("eval at root") { CHECK(p.eval(ExScalar(1)) == ExScalar(0)); }
    SUBCASE("degree bookkeeping") {
        CHECK(((t + TPoly(1)) * (t - TPoly(1))).degree() == 2);
        CHECK(TPoly{}.degree() == -1);
    }
    SUBCASE("inexact division throws") {
        CHECK_THROWS_AS(p.exact_div(t - TPoly(2)), NotDivisible);
    }
}

TEST_CASE("root finding: paper cubics") {
    TPoly t = TPoly::variable();

    SUBCASE("x^3 - 3x + 2 = (x+2)(x-1)^2") {
        TPoly p = t * t * t - TPoly(3) * t + TPoly(2);
        RootReport r = find_roots(p, Rational(-3), Rational(3));
        REQUIRE(r.certified);
        CHECK(r.exact_roots.size() == 2);
        CHECK(r.multiplicity_of(Rational(1)) == 2);
        CHECK(r.multiplicity_of(Rational(-2)) == 1);
        CHECK(r.roots_in_interval.size() == 2);
    }
    SUBCASE("x^3 - 3x - 2 = (x-2)(x+1)^2") {
        TPoly p = t * t * t - TPoly(3) * t - TPoly(2);
        RootReport r = find_roots(p, Rational(-3), Rational(3));
        CHECK(r.multiplicity_of(Rational(-1)) == 2);
        CHECK(r.multiplicity_of(Rational(2)) == 1);
    }
    SUBCASE("zero polynomial is IdenticallyZero") {
        RootReport r = find_roots(TPoly{}, Rational(-1), Rational(1));
        CHECK(r.identically_zero);
    }
}

TEST_CASE("root finding: deflation bookkeeping and exactness") {
    TPoly t = TPoly::variable();
    // (t - 1/3)^2 (t + 59/84) (t^2 + 1): mixed rational and complex roots.
    TPoly p = (t - TPoly(Rational(1, 3))) * (t - TPoly(Rational(1, 3))) *
              (t + TPoly(Rational(59, 84))) * (t * t + TPoly(1));
    RootReport r = find_roots(p, Rational(-1), Rational(1));
    REQUIRE(r.certified);
    CHECK(r.multiplicity_of(Rational(1, 3)) == 2);
    CHECK(r.multiplicity_of(Rational(-59, 84)) == 1);

    int mult_sum = 0;
    for (const auto& e : r.exact_roots) {
        mult_sum += e.multiplicity;
        CHECK(p.eval(ExScalar(e.value)).is_zero());
    }
    CHECK(mult_sum + static_cast<int>(r.numeric_roots.size()) == p.degree());
    for (const auto& nr : r.numeric_roots) CHECK(nr.residual < 1e-10);
}

TEST_CASE("root finding: non-rational coefficients fall back to numeric") {
    TPoly t = TPoly::variable();
    TPoly p = t * t - TPoly(ExScalar::sqrt2());
    RootReport r = find_roots(p, Rational(-2), Rational(2));
    CHECK_FALSE(r.certified);
    CHECK(r.exact_roots.empty());
    REQUIRE(r.numeric_roots.size() == 2);
    for (const auto& nr : r.numeric_roots) CHECK(nr.residual < 1e-10);
}
