#pragma once

// Adjacency-type operators attached to a triangle complex: the edge-based
// continuation operator T, the vertex-based Hecke-type operators pi_1, pi_2
// and A_n, the chamber-based gallery operators L_1, L_2, L_3, L, the
// stabilized operator-polynomial H(u), and the scalar determinant
// D(u) = det(1 - u*pi_1 + u^2*q*pi_2 - u^3*q^3).
//
// All builders require a complex that passes validate(); matrices are indexed
// by the stored order of edges / vertices / chambers of the complex.

#include <array>
#include <string>
#include <vector>

#include "a2zeta/complex.hpp"
#include "a2zeta/determinant.hpp"
#include "a2zeta/errors.hpp"
#include "a2zeta/poly.hpp"
#include "a2zeta/sparse_matrix.hpp"

namespace a2zeta {

namespace detail {

inline void require_validated(const TriangleComplex& c, const char* who) {
  ValidationReport r = validate(c);
  if (!r.passed) {
    throw PreconditionFailed(std::string(who) +
                             ": complex does not satisfy the local axioms (" +
                             std::to_string(r.violations.size()) +
                             " violation(s) reported by validate)");
  }
}

}  // namespace detail

// T[f][e] = 1 if edge f is a geodesic continuation of edge e, else 0.
// Square of size num_edges; every column sums to q^2 on a valid complex.
inline SparseMat build_T(const TriangleComplex& c) {
  detail::require_validated(c, "build_T");
  const int m = c.num_edges();
  SparseMat T(m, m);
  for (int e = 0; e < m; ++e) {
    for (int f : c.out_edges(c.edge_head(e))) {
      if (c.geodesic_continuation(e, f)) T.add_at(f, e, Int(1));
    }
  }
  return T;
}

// Vertex operators on the free module over the vertex set.
//   pi_1[y][x] = number of positively oriented edges x -> y;
//   pi_2[y][x] = number of positively oriented edges y -> x
// (pi_2 sends x to the sum of the tails of the edges ending at x).
// Every column of either operator sums to q^2 + q + 1.
inline SparseMat build_pi(const TriangleComplex& c, int j) {
  if (j != 1 && j != 2)
    throw PreconditionFailed("build_pi: j must be 1 or 2, got " +
                             std::to_string(j));
  detail::require_validated(c, "build_pi");
  const int n = c.num_vertices();
  SparseMat P(n, n);
  for (int e = 0; e < c.num_edges(); ++e) {
    const int t = c.edge_tail(e), h = c.edge_head(e);
    if (j == 1)
      P.add_at(h, t, Int(1));  // x = tail contributes its head
    else
      P.add_at(t, h, Int(1));  // x = head contributes its tail
  }
  return P;
}

// A_n[y][x] = number of straight (geodesic) paths of n edges from x to y:
// edge sequences e_1, ..., e_n with tail(e_1) = x, head(e_n) = y and
// e_{i+1} a geodesic continuation of e_i for every i.
inline SparseMat build_A_direct(const TriangleComplex& c, int n) {
  if (n < 1)
    throw InvalidLength("build_A_direct: path length must be >= 1, got " +
                        std::to_string(n));
  detail::require_validated(c, "build_A_direct");
  const int nv = c.num_vertices();
  const int ne = c.num_edges();
  // Precompute continuation lists once.
  std::vector<std::vector<int>> cont(ne);
  for (int e = 0; e < ne; ++e)
    for (int f : c.out_edges(c.edge_head(e)))
      if (c.geodesic_continuation(e, f)) cont[e].push_back(f);
  SparseMat A(nv, nv);
  for (int x = 0; x < nv; ++x) {
    // walk[e] = number of straight paths from x whose last edge is e.
    std::vector<Int> walk(ne, Int(0));
    for (int e : c.out_edges(x)) walk[e] = Int(1);
    for (int step = 1; step < n; ++step) {
      std::vector<Int> next(ne, Int(0));
      for (int e = 0; e < ne; ++e) {
        if (walk[e] == 0) continue;
        for (int f : cont[e]) next[f] += walk[e];
      }
      walk.swap(next);
    }
    for (int e = 0; e < ne; ++e) {
      if (walk[e] != 0) A.add_at(c.edge_head(e), x, walk[e]);
    }
  }
  return A;
}

// A_1, ..., A_{n_max} with A_1, A_2, A_3 computed directly and the rest by
// the three-term recurrence
//   A_{n+1} = A_n * pi_1 - q * A_{n-1} * pi_2 + q^3 * A_{n-2}   (n >= 3).
inline std::vector<SparseMat> build_A_recursive(const TriangleComplex& c,
                                                int n_max) {
  if (n_max < 3)
    throw PreconditionFailed(
        "build_A_recursive: n_max must be >= 3, got " + std::to_string(n_max));
  detail::require_validated(c, "build_A_recursive");
  const Int q(c.q());
  const Int q3 = q * q * q;
  SparseMat pi1 = build_pi(c, 1);
  SparseMat pi2 = build_pi(c, 2);
  std::vector<SparseMat> A;
  A.reserve(static_cast<std::size_t>(n_max));
  for (int n = 1; n <= 3; ++n) A.push_back(build_A_direct(c, n));
  for (int n = 3; n < n_max; ++n) {
    SparseMat next = A[static_cast<std::size_t>(n - 1)] * pi1;
    next = next - A[static_cast<std::size_t>(n - 2)] * pi2 * q;
    next = next + A[static_cast<std::size_t>(n - 3)] * q3;
    A.push_back(std::move(next));
  }
  return A;
}

// Gallery operators on the free module over the chamber set.  Writing
// e_t(C) for the unique edge of chamber C whose tail has type t:
//   L_1[C'][C] = 1 if e_1(C') is a geodesic continuation of e_0(C),
//   L_2[C'][C] = 1 if e_2(C') is a geodesic continuation of e_1(C),
//   L_3[C'][C] = 1 if e_0(C') is a geodesic continuation of e_2(C),
// and L = L_3 * L_2 * L_1.  On a valid complex every column of each L_j
// sums to q^2 (q + 1).
struct GalleryOperators {
  SparseMat L1, L2, L3, L;
};

inline GalleryOperators build_L(const TriangleComplex& c) {
  detail::require_validated(c, "build_L");
  const int nc = c.num_chambers();
  // Chamber edge slot t holds the edge whose tail has type t (enforced by the
  // TriangleComplex constructor), so e_t(C) = chamber_edges(C)[t].
  auto build_step = [&](int t_from, int t_to) {
    SparseMat M(nc, nc);
    for (int C = 0; C < nc; ++C) {
      const int e = c.chamber_edges(C)[static_cast<std::size_t>(t_from)];
      for (int f : c.out_edges(c.edge_head(e))) {
        if (!c.geodesic_continuation(e, f)) continue;
        for (int C2 : c.chambers_of_edge(f)) {
          if (c.chamber_edges(C2)[static_cast<std::size_t>(t_to)] == f)
            M.add_at(C2, C, Int(1));
        }
      }
    }
    return M;
  };
  GalleryOperators g{build_step(0, 1), build_step(1, 2), build_step(2, 0),
                     SparseMat(nc, nc)};
  g.L = g.L3 * g.L2 * g.L1;
  return g;
}

// H(u): the degree-<=2 operator polynomial obtained by multiplying the
// truncated generating series F_N(u) = sum_{n=1}^{N} u^{n-1} A_n by
// (1 - u*pi_1 + u^2*q*pi_2 - u^3*q^3).  The product must stabilize: its
// coefficients in degrees 3 .. N-1 must vanish identically (the degrees
// >= N suffer from truncation of the series and are discarded).  The
// closed-form candidate coefficients
//   u^0: pi_2 - pi_1^2
//   u^1: pi_1^3 - pi_1*pi_2 + pi_1^2 - (q+1)*pi_2
//   u^2: pi_1^3 - (2q+1)*pi_1*pi_2 + (1+q+q^2)*q
// are also evaluated, and compared coefficientwise with the
// derived truncation; mismatches are reported, never thrown.  The derived
// truncation is additionally compared against
//   pi_1 - (q+1)*pi_2 * u + q*(q^2+q+1) * u^2.
struct HPair {
  int terms = 0;                          // N, the number of A_n terms used
  std::array<SparseMat, 3> derived;       // u^0, u^1, u^2 of F_N * (1-...)
  std::array<SparseMat, 3> candidate;       // closed-form candidate above
  std::array<bool, 3> coeff_match{};      // derived[k] == candidate[k]
  bool derived_matches_simple = false;    // derived == pi1 -(q+1)pi2 u + ...
};

inline HPair build_H(const TriangleComplex& c, int terms = 10) {
  if (terms < 4)
    throw PreconditionFailed("build_H: need at least 4 series terms, got " +
                             std::to_string(terms));
  detail::require_validated(c, "build_H");
  const int nv = c.num_vertices();
  const Int q(c.q());
  const Int q3 = q * q * q;
  SparseMat pi1 = build_pi(c, 1);
  SparseMat pi2 = build_pi(c, 2);
  SparseMat I = SparseMat::identity(nv);
  // Directly counted path operators: using the recurrence here would make the
  // stabilization check below true by construction instead of a theorem.
  std::vector<SparseMat> A;
  A.reserve(static_cast<std::size_t>(terms));
  for (int n = 1; n <= terms; ++n) A.push_back(build_A_direct(c, n));
  // Coefficient of u^k in F_N(u) * (1 - u*pi1 + u^2*q*pi2 - u^3*q^3) where
  // F_N has coefficient A_{k+1} in degree k (zero outside 0 <= k < N).
  auto fcoef = [&](int k) -> const SparseMat* {
    if (k < 0 || k >= terms) return nullptr;
    return &A[static_cast<std::size_t>(k)];
  };
  auto product_coef = [&](int k) {
    SparseMat out(nv, nv);
    if (const SparseMat* f = fcoef(k)) out = out + *f;
    if (const SparseMat* f = fcoef(k - 1)) out = out - *f * pi1;
    if (const SparseMat* f = fcoef(k - 2)) out = out + *f * pi2 * q;
    if (const SparseMat* f = fcoef(k - 3)) out = out - *f * q3;
    return out;
  };
  for (int k = 3; k <= terms - 1; ++k) {
    if (!product_coef(k).is_zero())
      throw StabilizationFailure(
          "build_H: coefficient of u^" + std::to_string(k) +
          " of the truncated product is nonzero (series does not stabilize)");
  }
  HPair h;
  h.terms = terms;
  h.derived = {product_coef(0), product_coef(1), product_coef(2)};
  SparseMat pi1sq = pi1 * pi1;
  SparseMat pi1cu = pi1sq * pi1;
  SparseMat pi1pi2 = pi1 * pi2;
  h.candidate[0] = pi2 - pi1sq;
  h.candidate[1] = pi1cu - pi1pi2 + pi1sq - pi2 * (q + Int(1));
  h.candidate[2] =
      pi1cu - pi1pi2 * (Int(2) * q + Int(1)) + I * ((Int(1) + q + q * q) * q);
  for (int k = 0; k < 3; ++k) h.coeff_match[static_cast<std::size_t>(k)] =
      (h.derived[static_cast<std::size_t>(k)] ==
       h.candidate[static_cast<std::size_t>(k)]);
  SparseMat simple0 = pi1;
  SparseMat simple1 = SparseMat(nv, nv) - pi2 * (q + Int(1));
  SparseMat simple2 = I * (q * (q * q + q + Int(1)));
  h.derived_matches_simple = (h.derived[0] == simple0 &&
                              h.derived[1] == simple1 &&
                              h.derived[2] == simple2);
  return h;
}

// D(u) = det(1 - u*pi_1 + u^2*q*pi_2 - u^3*q^3), a polynomial of degree at
// most 3 * num_vertices.
inline IntPoly build_D(const TriangleComplex& c) {
  detail::require_validated(c, "build_D");
  const int nv = c.num_vertices();
  const Int q(c.q());
  const Int q3 = q * q * q;
  SparseMat pi1 = build_pi(c, 1);
  SparseMat pi2 = build_pi(c, 2);
  // Entry (i, j) of the polynomial matrix 1 - u*pi1 + u^2*q*pi2 - u^3*q^3.
  std::vector<std::vector<IntPoly>> M(
      static_cast<std::size_t>(nv),
      std::vector<IntPoly>(static_cast<std::size_t>(nv)));
  for (int i = 0; i < nv; ++i) {
    for (int j = 0; j < nv; ++j) {
      std::vector<Int> coef(4, Int(0));
      if (i == j) {
        coef[0] = Int(1);
        coef[3] = -q3;
      }
      coef[1] = -pi1.at(i, j);
      coef[2] = q * pi2.at(i, j);
      M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          IntPoly::from_coeffs(std::move(coef));
    }
  }
  return det_poly_matrix(M, 3 * nv);
}

}  // namespace a2zeta
