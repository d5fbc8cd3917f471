#include "ucpt/float_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ucpt {

namespace {

double off_diagonal_frobenius(const CMat& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

double frobenius(const CMat& a) {
    double s = 0.0;
    for (const auto& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

}  // namespace

HermitianEig hermitian_eig(const CMat& m) {
    if (!m.is_square()) throw ShapeError("hermitian_eig needs a square matrix");
    const int n = m.rows();
    double herm_defect = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            herm_defect = std::max(herm_defect, std::abs(m(i, j) - std::conj(m(j, i))));
    if (herm_defect >= 1e-10) throw NotHermitian("hermiticity defect " + std::to_string(herm_defect));

    CMat a = m;
    // Symmetrize to kill roundoff asymmetry.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (a(i, j) + std::conj(m(j, i)));

    CMat v = CMat::identity(n);
    const double target = 1e-13 * std::max(frobenius(a), 1e-300);

    for (int sweep = 0; sweep < 100 && off_diagonal_frobenius(a) > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                CScalar apq = a(p, q);
                if (std::abs(apq) == 0.0) continue;
                double app = a(p, p).real();
                double aqq = a(q, q).real();

                // Unitary 2x2 rotation diagonalizing [[app, apq], [conj(apq), aqq]].
                double absapq = std::abs(apq);
                CScalar phase = apq / absapq;
                double tau = (aqq - app) / (2.0 * absapq);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                CScalar sp = s * phase;

                for (int k = 0; k < n; ++k) {
                    CScalar akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - std::conj(sp) * akq;
                    a(k, q) = sp * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    CScalar apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sp * aqk;
                    a(q, k) = std::conj(sp) * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    CScalar vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(sp) * vkq;
                    v(k, q) = sp * vkp + c * vkq;
                }
                a(p, q) = CScalar(0.0);
                a(q, p) = CScalar(0.0);
            }
        }
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](int x, int y) { return a(x, x).real() > a(y, y).real(); });

    HermitianEig out;
    out.eigenvalues.resize(static_cast<std::size_t>(n));
    out.eigenvectors = CMat(n, n);
    for (int k = 0; k < n; ++k) {
        int src = order[static_cast<std::size_t>(k)];
        out.eigenvalues[static_cast<std::size_t>(k)] = a(src, src).real();
        for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, src);
    }
    return out;
}

int float_rank(const CMat& m, double tol_rel) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    double defect = 0.0;
    bool square = m.is_square();
    if (square) {
        for (int i = 0; i < m.rows() && defect < 1e-10; ++i)
            for (int j = 0; j < m.cols(); ++j)
                defect = std::max(defect, std::abs(m(i, j) - std::conj(m(j, i))));
    }
    std::vector<double> lambda;
    if (square && defect < 1e-10) {
        lambda = hermitian_eig(m).eigenvalues;  // PSD Gram path
    } else {
        lambda = hermitian_eig(m.adjoint() * m).eigenvalues;
    }
    double lmax = 0.0;
    for (double l : lambda) lmax = std::max(lmax, std::abs(l));
    if (lmax == 0.0) return 0;
    int rank = 0;
    for (double l : lambda)
        if (l > tol_rel * lmax) ++rank;
    return rank;
}

}  // namespace ucpt
