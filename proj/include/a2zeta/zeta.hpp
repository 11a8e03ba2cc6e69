#pragma once

// The zeta pipeline: Z1 = det(1 - uT) with its degree audit, Z2 =
// det(1 - u^3 L), the reduced quotient Z = Z1/Z2, the vertex determinant
// D(u), series cross-checks, Euler-product comparisons against enumerated
// loops, and the power-quotient certificates Z1 * Q = D^m and Z * P = D^n.
//
// Every check that probes a classical identity is report-producing: a
// mismatch sets flags and records the first offending coefficient, but never
// throws and never changes control flow.  Exceptions are reserved for
// implementation-level failures.

#include <string>
#include <vector>

#include "a2zeta/complex.hpp"
#include "a2zeta/determinant.hpp"
#include "a2zeta/errors.hpp"
#include "a2zeta/loops.hpp"
#include "a2zeta/operators.hpp"
#include "a2zeta/poly.hpp"
#include "a2zeta/ratfun.hpp"

namespace a2zeta {

struct Z1Report {
  IntPoly z1;
  int observed_degree = 0;
  int num_edges = 0;
  Rat claimed_degree;            // (q+1) * N / 2 with N = number of vertices
  bool matches_num_edges = false;
  bool matches_claimed = false;
  bool det_T_nonzero = false;    // independent dense determinant of T
};

inline Z1Report compute_Z1(const TriangleComplex& c) {
  detail::require_validated(c, "compute_Z1");
  SparseMat T = build_T(c);
  Z1Report r;
  r.z1 = det_one_minus_uM(T);
  r.observed_degree = r.z1.degree();
  r.num_edges = c.num_edges();
  r.claimed_degree = Rat(Int(c.q() + 1) * Int(c.num_vertices()), Int(2));
  r.matches_num_edges = (r.observed_degree == r.num_edges);
  r.matches_claimed = (Rat(Int(r.observed_degree)) == r.claimed_degree);
  std::vector<std::vector<Int>> dense(
      static_cast<std::size_t>(T.rows()),
      std::vector<Int>(static_cast<std::size_t>(T.cols()), Int(0)));
  for (const auto& [idx, v] : T.entries())
    dense[static_cast<std::size_t>(idx.first)][static_cast<std::size_t>(
        idx.second)] = v;
  r.det_T_nonzero = (bareiss_det(dense) != 0);
  return r;
}

struct Z2Report {
  IntPoly z2;
  int observed_degree = 0;
  int num_chambers = 0;
  bool within_degree_bound = false;  // deg <= 3 * num_chambers
  bool in_u_cubed = false;           // support only at multiples of three
};

inline Z2Report compute_Z2(const TriangleComplex& c) {
  detail::require_validated(c, "compute_Z2");
  SparseMat L = build_L(c).L;
  Z2Report r;
  // det(1 - vL) in v, then v = u^3.
  r.z2 = det_one_minus_uM(L).inflate(3);
  r.observed_degree = r.z2.degree() < 0 ? 0 : r.z2.degree();
  r.num_chambers = c.num_chambers();
  r.within_degree_bound = (r.observed_degree <= 3 * r.num_chambers);
  r.in_u_cubed = true;
  for (int k = 0; k <= r.z2.degree(); ++k)
    if (k % 3 != 0 && r.z2.coeff(k) != 0) r.in_u_cubed = false;
  return r;
}

inline RatFun compute_Z(const TriangleComplex& c) {
  return RatFun::make(compute_Z1(c).z1, compute_Z2(c).z2);
}

// One coefficientwise comparison of two truncated series.
struct SeriesCheck {
  bool match = true;
  int first_mismatch_order = -1;
  std::string lhs_at_mismatch;
  std::string rhs_at_mismatch;
};

namespace detail {

inline SeriesCheck compare_series(const IntPoly& lhs, const IntPoly& rhs,
                                  int order) {
  SeriesCheck s;
  for (int k = 0; k < order; ++k) {
    if (lhs.coeff(k) != rhs.coeff(k)) {
      s.match = false;
      s.first_mismatch_order = k;
      s.lhs_at_mismatch = lhs.coeff(k).str();
      s.rhs_at_mismatch = rhs.coeff(k).str();
      break;
    }
  }
  return s;
}

}  // namespace detail

struct SeriesReport {
  int order = 0;
  // (i)  -Z1'/Z1 vs sum_{n>=1} u^{n-1} tr A_n (signs as the displayed
  //      log-derivative computation demands)
  SeriesCheck derivative_identity;
  // (ii) +Z1'/Z1 vs the same right-hand side (the unsigned classical form)
  SeriesCheck unsigned_variant;
  // (iii) trace of the stabilized product F_N(u) (1 - u pi1 + u^2 q pi2 -
  //       u^3 q^3) vs the trace of its degree-<=2 truncation
  SeriesCheck h_trace_identity;
};

inline SeriesReport verify_series_identities(const TriangleComplex& c,
                                             int order = 10) {
  if (order < 0 || order > 10)
    throw PreconditionFailed(
        "verify_series_identities: order must be between 0 and 10, got " +
        std::to_string(order));
  detail::require_validated(c, "verify_series_identities");
  SeriesReport rep;
  rep.order = order;
  if (order == 0) return rep;  // empty check passes

  // A_1 .. A_{terms}: enough terms that every compared degree of the product
  // in check (iii) sits in the stable range.
  const int terms = order + 3;
  std::vector<SparseMat> A;
  for (int n = 1; n <= terms; ++n) A.push_back(build_A_direct(c, n));

  IntPoly z1 = det_one_minus_uM(build_T(c));
  IntPoly lhs = neg_log_derivative_series(z1, order);

  std::vector<Int> trA;
  for (int n = 1; n <= order; ++n)
    trA.push_back(A[static_cast<std::size_t>(n - 1)].trace());
  IntPoly rhs = IntPoly::from_coeffs(trA);

  rep.derivative_identity = detail::compare_series(lhs, rhs, order);
  rep.unsigned_variant = detail::compare_series(-lhs, rhs, order);

  const Int q(c.q());
  const Int q3 = q * q * q;
  SparseMat pi1 = build_pi(c, 1);
  SparseMat pi2 = build_pi(c, 2);
  std::vector<Int> tprod;
  for (int k = 0; k < order; ++k) {
    Int t(0);
    if (k < terms) t += A[static_cast<std::size_t>(k)].trace();
    if (k - 1 >= 0 && k - 1 < terms)
      t -= (A[static_cast<std::size_t>(k - 1)] * pi1).trace();
    if (k - 2 >= 0 && k - 2 < terms)
      t += (A[static_cast<std::size_t>(k - 2)] * pi2).trace() * q;
    if (k - 3 >= 0 && k - 3 < terms)
      t -= A[static_cast<std::size_t>(k - 3)].trace() * q3;
    tprod.push_back(std::move(t));
  }
  HPair h = build_H(c, terms);
  std::vector<Int> th;
  for (int k = 0; k < 3; ++k) th.push_back(h.derived[static_cast<std::size_t>(k)].trace());
  rep.h_trace_identity = detail::compare_series(
      IntPoly::from_coeffs(std::move(tprod)), IntPoly::from_coeffs(std::move(th)),
      order);
  return rep;
}

// A power-quotient certificate: the minimal exponent e with
// base * cofactor = D^e (base = Z1, or base = Z = Z1/Z2).  When no exponent
// works the status is a loud no-solution report carrying a witness factor;
// nothing is thrown.
struct PowerCertificate {
  bool found = false;
  int exponent = 0;
  IntPoly cofactor;
  bool verified = false;  // exact re-multiplication of the claimed identity
  IntPoly witness;        // when !found: a factor of the base coprime to D
  std::string reason;
};

inline PowerCertificate certify_z1_power(const TriangleComplex& c,
                                         int m_max = 64) {
  detail::require_validated(c, "certify_z1_power");
  IntPoly z1 = det_one_minus_uM(build_T(c));
  IntPoly d = build_D(c);
  PowerQuotient pq = extract_power_quotient(z1, d, m_max);
  PowerCertificate out;
  if (!pq.found) {
    out.witness = pq.witness;
    out.reason = pq.reason;
    return out;
  }
  out.found = true;
  out.exponent = pq.m;
  out.cofactor = pq.R;
  out.verified = (z1 * pq.R == d.pow(static_cast<unsigned>(pq.m)));
  return out;
}

inline PowerCertificate certify_z_power(const TriangleComplex& c,
                                        int m_max = 64) {
  detail::require_validated(c, "certify_z_power");
  RatFun z = compute_Z(c);
  IntPoly d = build_D(c);
  PowerCertificate out;
  PowerQuotient pq = extract_power_quotient(z.num, d, m_max);
  if (!pq.found) {
    out.witness = pq.witness;
    out.reason = pq.reason;
    return out;
  }
  out.found = true;
  out.exponent = pq.m;
  out.cofactor = pq.R * z.den;
  // Z * P = D^n  <=>  num * P = D^n * den.
  out.verified = (z.num * out.cofactor ==
                  d.pow(static_cast<unsigned>(pq.m)) * z.den);
  return out;
}

// Euler-product comparisons against the enumerated loop lists.
struct EulerReport {
  int order = 0;          // comparisons are coefficientwise mod u^order
  SeriesCheck z1_check;   // product over primitive geodesic loops vs Z1
  SeriesCheck z_check;    // ratio geodesic/gallery products vs Z series
};

inline EulerReport compare_euler_products(const TriangleComplex& c,
                                          int order = 9, int n_max = 8) {
  detail::require_validated(c, "compare_euler_products");
  EulerReport rep;
  rep.order = order;
  GeodesicEnumeration ge = enumerate_geodesic_loops(c, n_max);
  IntPoly e1 = euler_product_truncated(ge.primitive_counts, order);
  IntPoly z1 = det_one_minus_uM(build_T(c));
  rep.z1_check = detail::compare_series(e1, z1.truncate(order), order);

  // Gallery Euler factor: primitive gallery loops of length l contribute
  // (1 - u^l); a loop with m chambers has l = m / 2.  Only lengths below
  // the truncation order matter.
  std::vector<Int> gp;  // gp[l-1] = number of primitive gallery loops of length l
  const int l_need = order - 1;
  const int k_need = l_need / 3;
  if (k_need >= 1) {
    GalleryEnumeration ga =
        enumerate_gallery_loops(c, k_need, 6 * k_need, 6 * k_need);
    gp.assign(static_cast<std::size_t>(l_need), Int(0));
    for (const GalleryLoop& g : ga.loops) {
      if (!g.primitive) continue;
      const int l = static_cast<int>(g.chambers.size()) / 2;
      if (l <= l_need) gp[static_cast<std::size_t>(l - 1)] += 1;
    }
  }
  IntPoly e2 = euler_product_truncated(gp, order);
  // Z series vs e1 / e2: compare e1 against (Z series) * e2 to stay in
  // integer arithmetic.
  RatFun z = compute_Z(c);
  IntPoly zser = z.series(order);
  rep.z_check =
      detail::compare_series(e1, series_mul(zser, e2, order), order);
  return rep;
}

struct ZetaReport {
  int q = 0;
  int num_vertices = 0;
  int num_edges = 0;
  int num_chambers = 0;
  Z1Report z1;
  Z2Report z2;
  RatFun z;
  IntPoly d;
  SeriesReport series;
  EulerReport euler;
  PowerCertificate z1_power;
  PowerCertificate z_power;
  TraceComparison traces;
  std::string trace_csv_ref;  // file the CSV table is written to ("" = none)
};

inline ZetaReport compute_zeta_report(const TriangleComplex& c, int order = 8,
                                      int m_max = 64,
                                      std::string trace_csv_ref = "") {
  if (order < 1 || order > 10)
    throw PreconditionFailed(
        "compute_zeta_report: order must be between 1 and 10, got " +
        std::to_string(order));
  detail::require_validated(c, "compute_zeta_report");
  ZetaReport rep;
  rep.q = c.q();
  rep.num_vertices = c.num_vertices();
  rep.num_edges = c.num_edges();
  rep.num_chambers = c.num_chambers();
  rep.z1 = compute_Z1(c);
  rep.z2 = compute_Z2(c);
  rep.z = RatFun::make(rep.z1.z1, rep.z2.z2);
  rep.d = build_D(c);
  rep.series = verify_series_identities(c, order);
  rep.euler = compare_euler_products(c, order + 1, order);
  rep.z1_power = certify_z1_power(c, m_max);
  rep.z_power = certify_z_power(c, m_max);
  rep.traces = compare_traces(c, order);
  rep.trace_csv_ref = std::move(trace_csv_ref);
  return rep;
}

}  // namespace a2zeta
