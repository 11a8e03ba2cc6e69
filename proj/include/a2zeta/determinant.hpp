#pragma once

// Exact characteristic-series determinants.  det(1 - uM) and determinants of
// polynomial matrices are computed by evaluating at integer points, running
// fraction-free Bareiss elimination, and interpolating the (known-degree)
// result exactly.  Every interpolation is re-verified at one extra evaluation
// point, so a wrong degree bound cannot slip through silently.

#include <utility>
#include <vector>

#include "a2zeta/bigint.hpp"
#include "a2zeta/errors.hpp"
#include "a2zeta/poly.hpp"
#include "a2zeta/sparse_matrix.hpp"

namespace a2zeta {

// Determinant of a dense integer matrix by Bareiss' fraction-free elimination.
// All divisions are exact; the input is consumed.
inline Int bareiss_det(std::vector<std::vector<Int>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return Int(1);
    int sign = 1;
    Int prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Int(0);
            std::swap(m[static_cast<size_t>(k)], m[static_cast<size_t>(piv)]);
            sign = -sign;
        }
        const Int& pivot = m[static_cast<size_t>(k)][static_cast<size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int& mij = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
                mij = (mij * pivot -
                       m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                           m[static_cast<size_t>(k)][static_cast<size_t>(j)]) /
                      prev;
            }
            m[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = pivot;
    }
    Int d = m[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    return sign < 0 ? -d : d;
}

// Evaluation points 0, 1, -1, 2, -2, ...
inline Int evaluation_point(int k) {
    if (k == 0) return Int(0);
    return (k % 2 == 1) ? Int((k + 1) / 2) : Int(-(k / 2));
}

// Exact Lagrange interpolation through (points[i], values[i]).  The callers
// interpolate integer polynomials, so a non-integral coefficient indicates a
// broken degree bound and is rejected.
inline IntPoly interpolate_integer_poly(const std::vector<Int>& points,
                                        const std::vector<Int>& values) {
    const size_t n = points.size();
    std::vector<Rat> acc(n, Rat(0));
    for (size_t k = 0; k < n; ++k) {
        // basis_k(u) = prod_{j != k} (u - t_j), denom_k = prod_{j != k} (t_k - t_j);
        // basis coefficients are kept low-to-high
        std::vector<Int> basis{Int(1)};
        Int denom(1);
        for (size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            basis.push_back(Int(0));
            for (size_t i = basis.size() - 1; i > 0; --i)
                basis[i] = basis[i - 1] - points[j] * basis[i];
            basis[0] = -points[j] * basis[0];
            denom *= points[k] - points[j];
        }
        Rat scale = Rat(values[k]) / Rat(denom);
        for (size_t i = 0; i < basis.size(); ++i) acc[i] += scale * Rat(basis[i]);
    }
    std::vector<Int> coeffs(n);
    for (size_t i = 0; i < n; ++i) {
        if (boost::multiprecision::denominator(acc[i]) != 1)
            throw DegreeBoundViolated("interpolation produced a non-integral coefficient");
        coeffs[i] = boost::multiprecision::numerator(acc[i]);
    }
    return IntPoly::from_coeffs(std::move(coeffs));
}

namespace detail {

// Shared evaluate-interpolate-verify loop.  `eval(t)` must return the exact
// determinant value at u = t.
template <typename Eval>
IntPoly det_by_interpolation(int degree_bound, Eval&& eval) {
    std::vector<Int> pts, vals;
    pts.reserve(static_cast<size_t>(degree_bound) + 1);
    for (int k = 0; k <= degree_bound; ++k) {
        pts.push_back(evaluation_point(k));
        vals.push_back(eval(pts.back()));
    }
    IntPoly p = interpolate_integer_poly(pts, vals);
    const Int extra = evaluation_point(degree_bound + 1);
    if (p.eval(extra) != eval(extra))
        throw DegreeBoundViolated("extra-point verification failed: degree bound too small");
    return p;
}

}  // namespace detail

// det(1 - uM) for a square integer matrix M, as an exact integer polynomial of
// degree <= dim(M).  The 0x0 case gives the constant 1.
inline IntPoly det_one_minus_uM(const SparseMat& M) {
    if (M.rows() != M.cols()) throw NonSquare("det(1-uM) needs a square matrix");
    const int n = M.rows();
    auto eval = [&](const Int& t) {
        std::vector<std::vector<Int>> dense(
            static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
        for (int i = 0; i < n; ++i) dense[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
        for (const auto& [idx, v] : M.entries())
            dense[static_cast<size_t>(idx.first)][static_cast<size_t>(idx.second)] -= t * v;
        return bareiss_det(dense);
    };
    return detail::det_by_interpolation(n, eval);
}

// Determinant of a square matrix with polynomial entries, given a degree bound
// for the result.  Throws DegreeBoundViolated if the bound was too small.
inline IntPoly det_poly_matrix(const std::vector<std::vector<IntPoly>>& M, int degree_bound) {
    const int n = static_cast<int>(M.size());
    for (const auto& row : M)
        if (static_cast<int>(row.size()) != n)
            throw NonSquare("polynomial determinant needs a square matrix");
    if (degree_bound < 0) throw PreconditionFailed("degree bound must be nonnegative");
    auto eval = [&](const Int& t) {
        std::vector<std::vector<Int>> dense(static_cast<size_t>(n),
                                            std::vector<Int>(static_cast<size_t>(n)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dense[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    M[static_cast<size_t>(i)][static_cast<size_t>(j)].eval(t);
        return bareiss_det(dense);
    };
    return detail::det_by_interpolation(degree_bound, eval);
}

// Result of searching for the minimal m with Z * R = D^m.
struct PowerQuotient {
    bool found = false;
    int m = 0;
    IntPoly R;        // cofactor, valid when found
    IntPoly witness;  // when not found: a nonconstant factor of Z coprime to D
    std::string reason;
};

// Minimal m <= m_max such that Z divides D^m, by repeated gcd-stripping: each
// pass removes from Z every irreducible factor shared with D (at the
// multiplicity D carries), so the number of passes is exactly
// max_p ceil(mult_p Z / mult_p D).  If some factor of Z is coprime to D there
// is no solution and the offending factor is returned as a witness.
inline PowerQuotient extract_power_quotient(const IntPoly& Z, const IntPoly& D, int m_max) {
    if (m_max < 1) throw PreconditionFailed("m_max must be >= 1");
    if (Z.is_zero()) throw PreconditionFailed("Z must be nonzero");
    if (D.degree() < 1) throw PreconditionFailed("D must be nonconstant");
    PowerQuotient out;
    IntPoly w = Z.primitive_part();
    int passes = 0;
    while (w.degree() > 0) {
        IntPoly g = poly_gcd(w, D);
        if (g.degree() == 0) {
            out.found = false;
            out.witness = w;
            out.reason = "no solution: Z has a nonconstant factor coprime to D";
            return out;
        }
        w = w.divexact(g).primitive_part();
        ++passes;
        if (passes > m_max) {
            out.found = false;
            out.witness = w;
            out.reason = "no solution within m_max passes";
            return out;
        }
    }
    out.found = true;
    out.m = passes == 0 ? 1 : passes;  // D^0 = 1 is not a useful certificate
    out.R = D.pow(static_cast<unsigned>(out.m)).divexact(Z);
    return out;
}

}  // namespace a2zeta
