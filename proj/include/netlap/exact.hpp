#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "netlap/bigint.hpp"
#include "netlap/errors.hpp"
#include "netlap/int_matrix.hpp"
#include "netlap/signed_graph.hpp"

namespace netlap {

// Fraction-free Gaussian elimination (Bareiss). Pivot is the first nonzero
// entry in column order; every interior division is exact by Sylvester's
// identity and is checked (exact_div throws on a nonzero remainder).
// Returns the rank over the rationals. No floating arithmetic anywhere.
inline int rank_exact(const IntMatrix& input) {
    IntMatrix m = input;
    const int n = m.order();
    Bigint prev(1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int r = row; r < n; ++r)
            if (!m(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int c = col; c < n; ++c) std::swap(m(p, c), m(row, c));
        const Bigint pivot = m(row, col);
        for (int r = row + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c)
                m(r, c) = Bigint::exact_div(m(r, c) * pivot - m(r, col) * m(row, c), prev);
            m(r, col) = Bigint(0);
        }
        prev = pivot;
        ++row;
    }
    return row;
}

// Exact determinant via the same elimination; the last pivot of a full-rank
// run is det up to row-swap parity.
inline Bigint determinant_exact(const IntMatrix& input) {
    IntMatrix m = input;
    const int n = m.order();
    if (n == 0) return Bigint(1);
    Bigint prev(1);
    int swaps = 0;
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int r = col; r < n; ++r)
            if (!m(r, col).is_zero()) {
                p = r;
                break;
            }
        if (p < 0) return Bigint(0);
        if (p != col) {
            ++swaps;
            for (int c = col; c < n; ++c) std::swap(m(p, c), m(col, c));
        }
        const Bigint pivot = m(col, col);
        for (int r = col + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c)
                m(r, c) = Bigint::exact_div(m(r, c) * pivot - m(r, col) * m(col, c), prev);
            m(r, col) = Bigint(0);
        }
        prev = pivot;
    }
    return swaps % 2 ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

// Exact coefficients of det(xI - M) = sum_k c_k x^k, c_n = 1.
struct CharPoly {
    std::vector<Bigint> coeffs;  // index k holds c_k; size order + 1

    int order() const { return static_cast<int>(coeffs.size()) - 1; }

    // Multiplicity of the root 0; equals the nullity of M.
    int trailing_zeros() const {
        int k = 0;
        while (k < static_cast<int>(coeffs.size()) && coeffs[k].is_zero())
            ++k;
        return k;
    }

    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) out += ", ";
            out += coeffs[i].str();
        }
        return out + "]";
    }
};

// Division-free characteristic polynomial (Berkowitz). Each step extends the
// polynomial of the leading principal submatrix by one row/column through a
// lower-triangular Toeplitz convolution; only ring operations are used.
inline CharPoly char_poly(const IntMatrix& a) {
    const int n = a.order();
    std::vector<Bigint> poly;  // descending powers
    poly.push_back(Bigint(1));
    if (n > 0) poly.push_back(-a(0, 0));
    for (int m = 1; m < n; ++m) {
        // first column of the Toeplitz matrix: 1, -a_mm, -(R C), -(R M C), ...
        std::vector<Bigint> t(m + 2);
        t[0] = Bigint(1);
        t[1] = -a(m, m);
        std::vector<Bigint> v(m);
        for (int i = 0; i < m; ++i) v[i] = a(i, m);
        for (int step = 2; step <= m + 1; ++step) {
            Bigint dot;
            for (int i = 0; i < m; ++i) dot += a(m, i) * v[i];
            t[step] = -dot;
            if (step == m + 1) break;
            std::vector<Bigint> nv(m);
            for (int i = 0; i < m; ++i) {
                Bigint s;
                for (int j = 0; j < m; ++j) s += a(i, j) * v[j];
                nv[i] = std::move(s);
            }
            v = std::move(nv);
        }
        std::vector<Bigint> np(m + 2);
        for (std::size_t i = 0; i < t.size(); ++i)
            for (std::size_t j = 0; j < poly.size(); ++j)
                if (i + j < np.size()) np[i + j] += t[i] * poly[j];
        poly = std::move(np);
    }
    std::reverse(poly.begin(), poly.end());
    return {std::move(poly)};
}

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;

    friend bool operator==(const Inertia& a, const Inertia& b) {
        return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
    }
};

// Eigenvalue sign counts of a symmetric integer matrix, exactly. A symmetric
// matrix has an all-real spectrum, so Descartes' rule of signs on the exact
// characteristic polynomial is an equality: the positive-eigenvalue count is
// the number of sign variations across the nonzero coefficients, the zero
// count is the number of trailing zero coefficients.
inline Inertia inertia(const IntMatrix& m) {
    if (!m.is_symmetric()) throw input_error("inertia: matrix must be symmetric");
    CharPoly p = char_poly(m);
    const int n = m.order();
    Inertia res;
    res.zero = p.trailing_zeros();
    int variations = 0;
    int last = 0;
    for (int k = n; k >= res.zero; --k) {
        int s = p.coeffs[k].signum();
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    res.positive = variations;
    res.negative = n - res.positive - res.zero;
    return res;
}

inline int nullity(const SignedGraph& g) {
    return g.order() - rank_exact(net_laplacian(g));
}

// |lambda| at or below this counts as zero in the float spectrum. Scale-aware
// via the max-row-sum bound on the spectral radius; floats never decide
// nullity, the exact paths do.
inline double float_zero_tolerance(const IntMatrix& m) {
    return 1e-8 * (1.0 + m.max_abs_row_sum().to_double());
}

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted
// non-increasing. Residuals |Mv - lambda v| are checked against a scale-aware
// tolerance before returning.
inline std::vector<double> eigenvalues_float(const IntMatrix& mi) {
    if (!mi.is_symmetric()) throw input_error("eigenvalues_float: matrix must be symmetric");
    const int n = mi.order();
    std::vector<double> a(n * n), v(n * n, 0.0);
    auto A = [&](int i, int j) -> double& { return a[i * n + j]; };
    auto V = [&](int i, int j) -> double& { return v[i * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = mi(i, j).to_double();
    for (int i = 0; i < n; ++i) V(i, i) = 1.0;

    double fro = 0.0;
    for (double x : a) fro += x * x;
    fro = std::sqrt(fro);
    const double stop = 1e-14 * (fro > 1.0 ? fro : 1.0);

    const int max_sweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * A(p, q) * A(p, q);
        if (std::sqrt(off) <= stop) {
            converged = true;
            break;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = A(p, q);
                if (std::abs(apq) <= stop / (n * n + 1.0)) continue;
                double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = c * vkp - s * vkq;
                    V(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged && n > 1)
        throw numeric_error("eigenvalues_float: Jacobi sweeps did not converge for\n" + mi.str());

    // residual check against the original matrix
    const double res_tol = 1e-7 * (1.0 + mi.max_abs_row_sum().to_double());
    for (int j = 0; j < n; ++j) {
        double lambda = A(j, j);
        for (int i = 0; i < n; ++i) {
            double mv = 0.0;
            for (int k = 0; k < n; ++k) mv += mi(i, k).to_double() * V(k, j);
            if (std::abs(mv - lambda * V(i, j)) > res_tol)
                throw numeric_error("eigenvalues_float: residual check failed for\n" + mi.str());
        }
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = A(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

inline int float_zero_count(const std::vector<double>& eig, double tol) {
    int c = 0;
    for (double x : eig)
        if (std::abs(x) <= tol) ++c;
    return c;
}

// rank + nullity + inertia + float spectrum for one graph, all consistent
// by construction checks in the test suite.
struct SpectralSummary {
    int rank = 0;
    int nullity = 0;
    Inertia inertia;
    std::vector<double> eigenvalues;  // non-increasing
};

inline SpectralSummary spectral_summary(const SignedGraph& g) {
    IntMatrix lap = net_laplacian(g);
    SpectralSummary s;
    s.rank = rank_exact(lap);
    s.nullity = g.order() - s.rank;
    s.inertia = netlap::inertia(lap);
    s.eigenvalues = eigenvalues_float(lap);
    return s;
}

}  // namespace netlap
