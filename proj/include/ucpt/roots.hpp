#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ucpt/tpoly.hpp"

namespace ucpt {

/// Exact root with its multiplicity in the original polynomial.
struct ExactRoot {
    Rational value;
    int multiplicity = 1;
};

/// Numerically approximated root with the residual |p(r)| relative to the
/// largest coefficient magnitude.
struct NumericRoot {
    std::complex<double> value;
    double residual = 0.0;
};

/// Root analysis of a polynomial over an interval.
///
/// When the input has purely rational coefficients the exact phase is
/// certified: every entry of exact_roots satisfies p(r) = 0 exactly and
/// multiplicities come from repeated exact deflation.  Remaining roots are
/// approximated by Aberth-Ehrlich simultaneous iteration.
struct RootReport {
    TPoly polynomial;
    int degree_bound = -1;  // -1 when no bound was imposed
    bool identically_zero = false;
    bool certified = false;  // exact phase ran (rational coefficients)
    std::vector<ExactRoot> exact_roots;
    std::vector<NumericRoot> numeric_roots;  // roots of the deflated cofactor
    std::vector<Rational> roots_in_interval; // exact roots inside the open interval

    bool has_exact_root(const Rational& r) const {
        for (const auto& e : exact_roots)
            if (e.value == r) return true;
        return false;
    }
    int multiplicity_of(const Rational& r) const {
        for (const auto& e : exact_roots)
            if (e.value == r) return e.multiplicity;
        return 0;
    }
};

/// Finds roots of p, reporting the subset inside the open interval (lo, hi).
///
/// The zero polynomial yields a report with identically_zero = true (the
/// "det vanishes for all t" verdict, not an error).  Rational-coefficient
/// inputs get exact rational roots via integer root candidates after
/// clearing denominators (with numeric root reconstruction as a fallback
/// candidate source); every candidate is verified by exact evaluation before
/// being reported.
RootReport find_roots(const TPoly& p, const Rational& lo, const Rational& hi);

/// Aberth-Ehrlich simultaneous iteration on the given monic-normalized
/// coefficient list (lowest degree first).  Exposed for testing.
std::vector<NumericRoot> aberth_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace ucpt
