#include "ucpt/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

namespace ucpt {

namespace {

// ---------------------------------------------------------------------------
// Numeric phase: Aberth-Ehrlich with random-perturbation restarts.
// ---------------------------------------------------------------------------

std::complex<double> horner(const std::vector<std::complex<double>>& c,
                            const std::complex<double>& z) {
    std::complex<double> acc(0.0);
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

std::complex<double> horner_deriv(const std::vector<std::complex<double>>& c,
                                  const std::complex<double>& z) {
    std::complex<double> acc(0.0);
    for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
    return acc;
}

}  // namespace

std::vector<NumericRoot> aberth_roots(const std::vector<std::complex<double>>& coeffs_in) {
    std::vector<std::complex<double>> c = coeffs_in;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    const int n = static_cast<int>(c.size()) - 1;

    double scale = 0.0;
    for (const auto& a : c) scale = std::max(scale, std::abs(a));
    for (auto& a : c) a /= scale;

    // Cauchy bound on root moduli.
    double bound = 0.0;
    for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k] / c[n]));
    bound += 1.0;

    const double tol = 1e-12;
    const double golden = 2.0 * M_PI * 0.3819660112501051;
    std::uint64_t prng = 0x9e3779b97f4a7c15ull;  // deterministic restarts
    auto next_uniform = [&prng]() {
        prng ^= prng << 13;
        prng ^= prng >> 7;
        prng ^= prng << 17;
        return static_cast<double>(prng >> 11) / 9007199254740992.0;
    };

    std::vector<std::complex<double>> z(n);
    auto seed_guesses = [&](double jitter) {
        for (int i = 0; i < n; ++i) {
            double r = bound * (0.4 + 0.5 * (i + 0.5) / n) * (1.0 + jitter * (next_uniform() - 0.5));
            double th = golden * i + 0.35 + jitter * next_uniform();
            z[i] = std::polar(r, th);
        }
    };

    for (int attempt = 0; attempt < 6; ++attempt) {
        seed_guesses(attempt == 0 ? 0.0 : 0.3);
        bool converged = false;
        for (int iter = 0; iter < 600 && !converged; ++iter) {
            converged = true;
            for (int i = 0; i < n; ++i) {
                std::complex<double> p = horner(c, z[i]);
                if (std::abs(p) < tol) continue;
                std::complex<double> dp = horner_deriv(c, z[i]);
                std::complex<double> w = (std::abs(dp) > 0.0) ? p / dp : std::complex<double>(tol);
                std::complex<double> s(0.0);
                for (int j = 0; j < n; ++j)
                    if (j != i) s += 1.0 / (z[i] - z[j]);
                std::complex<double> denom = 1.0 - w * s;
                std::complex<double> step = (std::abs(denom) > 1e-300) ? w / denom : w;
                z[i] -= step;
                if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[i]))) converged = false;
            }
        }
        if (converged) break;
    }

    std::vector<NumericRoot> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = {z[i], std::abs(horner(c, z[i]))};
    std::sort(out.begin(), out.end(), [](const NumericRoot& a, const NumericRoot& b) {
        if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
        return a.value.imag() < b.value.imag();
    });
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Exact phase helpers.
// ---------------------------------------------------------------------------

std::vector<std::complex<double>> to_double_coeffs(const TPoly& p) {
    // Scale by the largest coefficient magnitude in exact arithmetic first,
    // so huge determinant coefficients do not overflow double.
    Rational max_abs(0);
    for (const auto& c : p.coeffs()) {
        Rational m = c.part_1().re.abs() + c.part_1().im.abs() + c.part_sqrt2().re.abs() +
                     c.part_sqrt2().im.abs() + c.part_sqrt3().re.abs() + c.part_sqrt3().im.abs() +
                     c.part_sqrt6().re.abs() + c.part_sqrt6().im.abs();
        if (m > max_abs) max_abs = m;
    }
    std::vector<std::complex<double>> out;
    out.reserve(p.coeffs().size());
    if (max_abs.is_zero()) return out;
    Rational inv = max_abs.inverse();
    for (const auto& c : p.coeffs()) {
        ExScalar scaled = c * ExScalar(inv);
        out.push_back(scaled.to_complex());
    }
    return out;
}

// Continued-fraction reconstruction of a rational close to x.
std::optional<Rational> reconstruct_rational(double x, double eps, long max_den) {
    if (!std::isfinite(x)) return std::nullopt;
    double a = x;
    long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(a)), q1 = 1;
    a -= std::floor(a);
    for (int it = 0; it < 64; ++it) {
        double approx = static_cast<double>(p1) / static_cast<double>(q1);
        if (std::abs(approx - x) <= eps) return Rational(p1, q1);
        if (a < 1e-15) break;
        a = 1.0 / a;
        double fl = std::floor(a);
        if (fl > 1e15) break;
        long ai = static_cast<long>(fl);
        a -= fl;
        long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
        if (q2 > max_den || q2 <= 0) break;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
    }
    return std::nullopt;
}

// Divisors of |n| when n is small enough to enumerate quickly.
std::optional<std::vector<mpz_class>> small_divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    if (n == 0 || !n.fits_ulong_p()) return std::nullopt;
    unsigned long v = n.get_ui();
    if (v > 1000000000000ul) return std::nullopt;
    std::vector<mpz_class> divs;
    for (unsigned long d = 1; static_cast<unsigned long long>(d) * d <= v; ++d) {
        if (v % d == 0) {
            divs.emplace_back(d);
            divs.emplace_back(v / d);
        }
        if (divs.size() > 4096) return std::nullopt;  // too many to be useful
    }
    return divs;
}

// Rational-root candidates of an integer polynomial via the rational root
// theorem, when the trailing/leading coefficients are small enough.
std::vector<Rational> rational_root_candidates(const TPoly& p) {
    std::vector<Rational> cands;
    if (p.degree() < 1) return cands;
    mpz_class lead_den(1), trail_den(1);
    // p has rational coefficients; clear denominators.
    mpz_class common_den(1);
    for (const auto& c : p.coeffs()) {
        const Rational r = c.part_1().re;
        common_den = lcm(common_den, r.den());
    }
    mpz_class a0, an;
    {
        Rational r0 = p.coeff(0).part_1().re * Rational(common_den);
        Rational rn = p.leading().part_1().re * Rational(common_den);
        a0 = r0.num();
        an = rn.num();
    }
    if (a0 == 0) return cands;  // caller strips zero roots first
    auto d0 = small_divisors(a0);
    auto dn = small_divisors(an);
    if (!d0 || !dn) return cands;
    for (const auto& u : *d0)
        for (const auto& v : *dn) {
            cands.emplace_back(u, v);
            cands.emplace_back(-u, v);
        }
    return cands;
}

}  // namespace

RootReport find_roots(const TPoly& p, const Rational& lo, const Rational& hi) {
    RootReport report;
    report.polynomial = p;
    if (p.is_zero()) {
        report.identically_zero = true;
        return report;
    }
    if (p.degree() == 0) return report;

    report.certified = p.is_rational();

    TPoly work = p;
    std::set<std::pair<std::string, std::string>> seen;  // num/den strings for dedup
    std::vector<Rational> verified;

    auto try_root = [&](const Rational& r) {
        auto key = std::make_pair(r.num().get_str(), r.den().get_str());
        if (seen.count(key)) return;
        seen.insert(key);
        if (p.eval(ExScalar(r)).is_zero()) verified.push_back(r);
    };

    if (report.certified) {
        // Roots at t = 0 come from the lowest nonzero coefficient.
        if (p.coeff(0).is_zero()) try_root(Rational(0));

        TPoly stripped = work;
        {
            TPoly t = TPoly::variable();
            while (!stripped.is_zero() && stripped.coeff(0).is_zero())
                stripped = stripped.exact_div(t);
        }

        // Candidate source 1: rational root theorem on the stripped polynomial.
        for (const auto& cand : rational_root_candidates(stripped)) try_root(cand);

        // Candidate source 2: numeric roots of the squarefree part, snapped to
        // nearby small rationals.  Multiple roots are collapsed by the exact
        // gcd so the numeric solver sees only simple roots.
        TPoly sf = stripped;
        if (sf.degree() >= 2) {
            TPoly g = TPoly::gcd(sf, sf.derivative());
            if (g.degree() >= 1) sf = sf.exact_div(g);
        }
        for (const auto& nr : aberth_roots(to_double_coeffs(sf))) {
            if (std::abs(nr.value.imag()) > 1e-7) continue;
            if (auto r = reconstruct_rational(nr.value.real(), 1e-7, 1000000L)) try_root(*r);
        }

        // Multiplicities by repeated exact deflation of the original polynomial.
        std::sort(verified.begin(), verified.end());
        for (const auto& r : verified) {
            TPoly lin(std::vector<ExScalar>{ExScalar(-r), ExScalar(1)});
            int mult = 0;
            while (true) {
                auto [q, rem] = work.divmod(lin);
                if (!rem.is_zero()) break;
                work = q;
                ++mult;
            }
            if (mult > 0) report.exact_roots.push_back({r, mult});
        }
    }

    // Numeric phase on whatever could not be deflated exactly.
    if (work.degree() >= 1) report.numeric_roots = aberth_roots(to_double_coeffs(work));

    for (const auto& e : report.exact_roots)
        if (lo < e.value && e.value < hi) report.roots_in_interval.push_back(e.value);

    return report;
}

}  // namespace ucpt
