#pragma once

// Explicit enumeration of closed geodesic loops (cyclic edge sequences in
// which every step, including the wrap-around, is a geodesic continuation)
// and of closed rank-one gallery loops (cyclic chamber sequences bounded by
// two geodesics).  The enumeration walks the complex directly and never
// consults the transfer operators, so its totals serve as an independent
// cross-check of tr T^n and tr L^n.

#include <algorithm>
#include <map>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "a2zeta/complex.hpp"
#include "a2zeta/errors.hpp"
#include "a2zeta/operators.hpp"
#include "a2zeta/poly.hpp"
#include "a2zeta/sparse_matrix.hpp"

namespace a2zeta {

namespace detail {

// True when w is the lexicographically least among its rotations; ties keep
// exactly one representative per rotation class.
template <typename T>
bool is_canonical_rotation(const std::vector<T>& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const T& a = w[(i + r) % n];
      const T& b = w[i];
      if (a < b) return false;
      if (b < a) break;
    }
  }
  return true;
}

template <typename T>
int rotation_period(const std::vector<T>& w) {
  const int n = static_cast<int>(w.size());
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = (w[static_cast<std::size_t>(i)] ==
            w[static_cast<std::size_t>((i + p) % n)]);
    if (ok) return p;
  }
  return n;
}

}  // namespace detail

// A rotation class of closed geodesic edge loops, stored as its
// lexicographically least based representative.
struct GeodesicLoop {
  std::vector<int> edges;
  int period = 0;  // primitive length; the loop is primitive iff period == size
  bool primitive = false;
};

struct GeodesicEnumeration {
  int n_max = 0;
  // based_counts[n-1] = number of based closed geodesic walks of length n;
  // this is the quantity the trace of T^n must reproduce.
  std::vector<Int> based_counts;
  // primitive_counts[n-1] = number of primitive rotation classes of length n,
  // recovered from the based counts by Moebius inversion over divisors.
  std::vector<Int> primitive_counts;
  // All rotation classes of length <= n_max, one canonical representative
  // each, in enumeration order (imprimitive classes included and flagged).
  std::vector<GeodesicLoop> loops;
};

// Enumerates closed geodesic loops up to length n_max by depth-first search
// over continuation walks.  n_max above the hard bound (12) is rejected with
// BoundExceeded; the complex must satisfy the local axioms.
inline GeodesicEnumeration enumerate_geodesic_loops(const TriangleComplex& c,
                                                    int n_max = 10,
                                                    int bound = 12) {
  if (n_max < 1)
    throw PreconditionFailed("enumerate_geodesic_loops: n_max must be >= 1");
  if (n_max > bound)
    throw BoundExceeded("enumerate_geodesic_loops: n_max " +
                        std::to_string(n_max) + " exceeds the bound " +
                        std::to_string(bound));
  detail::require_validated(c, "enumerate_geodesic_loops");

  const int ne = c.num_edges();
  std::vector<std::vector<int>> cont(static_cast<std::size_t>(ne));
  for (int e = 0; e < ne; ++e)
    for (int f : c.out_edges(c.edge_head(e)))
      if (c.geodesic_continuation(e, f))
        cont[static_cast<std::size_t>(e)].push_back(f);

  GeodesicEnumeration out;
  out.n_max = n_max;
  out.based_counts.assign(static_cast<std::size_t>(n_max), Int(0));

  std::vector<int> walk;
  walk.reserve(static_cast<std::size_t>(n_max));
  // Depth-first over continuation walks from each start edge; every closure
  // (wrap-around step included) at depth d contributes one based walk of
  // length d.  A walk is materialized when it is the canonical rotation of
  // its class.
  auto dfs = [&](auto&& self, int start) -> void {
    const int last = walk.back();
    const int d = static_cast<int>(walk.size());
    if (c.edge_head(last) == c.edge_tail(start) &&
        !c.share_chamber(last, start)) {
      out.based_counts[static_cast<std::size_t>(d - 1)] += 1;
      if (detail::is_canonical_rotation(walk)) {
        GeodesicLoop l;
        l.edges = walk;
        l.period = detail::rotation_period(walk);
        l.primitive = (l.period == d);
        out.loops.push_back(std::move(l));
      }
    }
    if (d == n_max) return;
    for (int f : cont[static_cast<std::size_t>(last)]) {
      walk.push_back(f);
      self(self, start);
      walk.pop_back();
    }
  };
  for (int e = 0; e < ne; ++e) {
    walk.assign(1, e);
    dfs(dfs, e);
  }

  // Moebius inversion: n * P_n = sum_{d | n} mu(n/d) * W_d.
  out.primitive_counts.assign(static_cast<std::size_t>(n_max), Int(0));
  auto moebius = [](int m) {
    int mu = 1;
    for (int p = 2; p * p <= m; ++p) {
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        mu = -mu;
      }
    }
    if (m > 1) mu = -mu;
    return mu;
  };
  for (int n = 1; n <= n_max; ++n) {
    Int acc(0);
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      acc += Int(moebius(n / d)) * out.based_counts[static_cast<std::size_t>(d - 1)];
    }
    if (acc % n != 0)
      throw AxiomViolation(
          "enumerate_geodesic_loops: based counts are not consistent with "
          "rotation classes at length " + std::to_string(n));
    out.primitive_counts[static_cast<std::size_t>(n - 1)] = acc / n;
  }
  return out;
}

// prod_{n >= 1} (1 - u^n)^{P_n} truncated mod u^{order}, with P_n =
// primitive_counts[n-1].  Each factor is expanded by the binomial series;
// only j with j*n < order contribute, so arbitrary-precision exponents are
// handled exactly.
inline IntPoly euler_product_truncated(const std::vector<Int>& primitive_counts,
                                       int order) {
  IntPoly acc = IntPoly::one();
  for (std::size_t i = 0; i < primitive_counts.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const Int& P = primitive_counts[i];
    if (P == 0 || n >= order) continue;
    std::vector<Int> f(static_cast<std::size_t>(order), Int(0));
    f[0] = Int(1);
    Int binom(1);
    for (int j = 1; j * n < order; ++j) {
      // binom = C(P, j), computed incrementally; exact because each partial
      // product of consecutive integers is divisible by j!.
      binom = binom * (P - Int(j - 1)) / Int(j);
      f[static_cast<std::size_t>(j * n)] = (j % 2 == 0 ? binom : -binom);
    }
    acc = (acc * IntPoly::from_coeffs(std::move(f))).truncate(order);
  }
  return acc;
}

// A rotation class of closed rank-one gallery loops: a cyclic chamber
// sequence in which consecutive chambers share an edge, the shared-edge tail
// types step down by one, no chamber is the same as the one two steps back,
// and the two boundary edge paths are geodesic at every step.  The phase is
// the tail type of the edge shared by chambers[size-1] and chambers[0].
struct GalleryLoop {
  std::vector<int> chambers;
  int phase = 0;
  int period = 0;   // in chambers; the gallery length is size / 2
  bool primitive = false;
};

struct GalleryEnumeration {
  int k_max = 0;  // rows cover gallery lengths 3k, i.e. chamber counts 6k
  // based_counts[m-1] = number of based closed gallery sequences with m
  // chambers (phase distinctions included), for 1 <= m <= 6 * k_max.
  std::vector<Int> based_counts;
  // sums[k-1] = sum of l(c_0)/3 over loops of gallery length 3k
  //           = based_counts[6k-1] / 6, as an exact rational.
  std::vector<Rat> sums;
  std::vector<bool> sum_integral;
  // Chamber counts m (not multiples of 6) with a nonzero based count; the
  // local structure forces multiples of 3, and closed galleries are expected
  // to have even chamber count, so anything listed here is anomalous.
  std::vector<int> unexpected_lengths;
  // Rotation classes with at most materialize_cap chambers (canonical
  // representatives, phases included in the class identity).
  std::vector<GalleryLoop> loops;
  int materialize_cap = 0;
};

// Enumerates closed gallery loops with up to 6 * k_max chambers.  The walk
// space is the graph of states (previous chamber, current chamber, shared
// edge tail type); based closed gallery sequences of m chambers correspond
// to closed walks of length m in that graph.  Counting is done by exact
// power traces of the state transition matrix; loops with at most
// materialize_cap chambers are also listed explicitly via depth-first
// search.
inline GalleryEnumeration enumerate_gallery_loops(const TriangleComplex& c,
                                                  int k_max = 3,
                                                  int chamber_bound = 18,
                                                  int materialize_cap = 12) {
  if (k_max < 1)
    throw PreconditionFailed("enumerate_gallery_loops: k_max must be >= 1");
  if (6 * k_max > chamber_bound)
    throw BoundExceeded("enumerate_gallery_loops: " + std::to_string(6 * k_max) +
                        " chambers exceed the bound " +
                        std::to_string(chamber_bound));
  detail::require_validated(c, "enumerate_gallery_loops");

  const int m_max = 6 * k_max;
  GalleryEnumeration out;
  out.k_max = k_max;
  out.materialize_cap = materialize_cap;

  // States (P, C, tau): P != C share their tail-type-tau edge.
  struct State {
    int prev, cur, tau;
  };
  std::vector<State> states;
  std::map<std::tuple<int, int, int>, int> state_index;
  const int nc = c.num_chambers();
  for (int C = 0; C < nc; ++C) {
    for (int tau = 0; tau < 3; ++tau) {
      const int f = c.chamber_edges(C)[static_cast<std::size_t>(tau)];
      for (int P : c.chambers_of_edge(f)) {
        if (P == C) continue;
        if (c.chamber_edges(P)[static_cast<std::size_t>(tau)] != f) continue;
        state_index[{P, C, tau}] = static_cast<int>(states.size());
        states.push_back({P, C, tau});
      }
    }
  }

  // Transition (P, C, tau) -> (C, C', tau - 1): the chambers C and C' share
  // the tail-type-(tau-1) edge of C, C' avoids both C and P, and the free
  // (boundary) edge of P, of tail type tau - 1, continues geodesically into
  // the free edge of C', of tail type tau.
  const int ns = static_cast<int>(states.size());
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(ns));
  SparseMat M(ns, ns);
  for (int s = 0; s < ns; ++s) {
    const State& st = states[static_cast<std::size_t>(s)];
    const int tau2 = (st.tau + 2) % 3;  // tau - 1
    const int fp = c.chamber_edges(st.cur)[static_cast<std::size_t>(tau2)];
    const int free_prev =
        c.chamber_edges(st.prev)[static_cast<std::size_t>(tau2)];
    for (int C2 : c.chambers_of_edge(fp)) {
      if (C2 == st.cur || C2 == st.prev) continue;
      if (c.chamber_edges(C2)[static_cast<std::size_t>(tau2)] != fp) continue;
      const int free_next =
          c.chamber_edges(C2)[static_cast<std::size_t>(st.tau)];
      if (c.edge_head(free_prev) != c.edge_tail(free_next)) continue;
      if (!c.geodesic_continuation(free_prev, free_next)) continue;
      auto it = state_index.find({st.cur, C2, tau2});
      if (it == state_index.end()) continue;
      succ[static_cast<std::size_t>(s)].push_back(it->second);
      M.add_at(it->second, s, Int(1));
    }
  }

  out.based_counts = ns > 0 ? M.power_traces(m_max)
                            : std::vector<Int>(static_cast<std::size_t>(m_max),
                                               Int(0));
  for (int m = 1; m <= m_max; ++m) {
    if (m % 6 != 0 && out.based_counts[static_cast<std::size_t>(m - 1)] != 0)
      out.unexpected_lengths.push_back(m);
  }
  for (int k = 1; k <= k_max; ++k) {
    const Int& b = out.based_counts[static_cast<std::size_t>(6 * k - 1)];
    out.sums.push_back(Rat(b, Int(6)));
    out.sum_integral.push_back(b % 6 == 0);
  }

  // Materialize rotation classes of state cycles with <= materialize_cap
  // chambers.  The class representative is the canonical rotation of the
  // state index sequence; the stored loop carries the chamber sequence and
  // the phase of its first step.
  const int cap = std::min(materialize_cap, m_max);
  std::vector<int> swalk;
  auto dfs = [&](auto&& self, int start) -> void {
    const int last = swalk.back();
    const int d = static_cast<int>(swalk.size());
    bool closes = false;
    for (int nxt : succ[static_cast<std::size_t>(last)])
      if (nxt == start) closes = true;
    // Odd closed state walks do exist combinatorially; they wrap the strip
    // onto itself with a single boundary circle, so they do not bound two
    // geodesics and are not galleries.  They are counted in
    // unexpected_lengths but never materialized.
    if (closes && d % 2 == 0 && detail::is_canonical_rotation(swalk)) {
      GalleryLoop g;
      g.chambers.reserve(swalk.size());
      for (int s : swalk)
        g.chambers.push_back(states[static_cast<std::size_t>(s)].cur);
      // The phase is the tail type of the edge entering the first chamber,
      // i.e. the tau of the first state.
      g.phase = states[static_cast<std::size_t>(swalk.front())].tau;
      g.period = detail::rotation_period(swalk);
      g.primitive = (g.period == d);
      out.loops.push_back(std::move(g));
    }
    if (d == cap) return;
    for (int nxt : succ[static_cast<std::size_t>(last)]) {
      if (nxt < start) continue;  // canonical classes start at their minimum
      swalk.push_back(nxt);
      self(self, start);
      swalk.pop_back();
    }
  };
  for (int s = 0; s < ns && cap >= 1; ++s) {
    swalk.assign(1, s);
    dfs(dfs, s);
  }
  return out;
}

// One row of the side-by-side trace table.  The gallery columns are only
// populated when 3 divides n (gallery length n corresponds to tr L^{n/3});
// the match flag compares whatever is present in the row.
struct TraceRow {
  int n = 0;
  Int geodesic_sum;
  Int trace_T;
  bool has_gallery = false;
  Rat gallery_sum;
  Int trace_L;
  bool match = false;
};

struct TraceComparison {
  std::vector<TraceRow> rows;
  bool geodesic_all_match = true;
  bool gallery_all_match = true;
};

inline TraceComparison compare_traces(const TriangleComplex& c, int n_max = 8,
                                      int bound = 12) {
  detail::require_validated(c, "compare_traces");
  GeodesicEnumeration ge = enumerate_geodesic_loops(c, n_max, bound);
  std::vector<Int> trT = build_T(c).power_traces(n_max);
  const int k_max = n_max / 3;
  GalleryEnumeration ga;
  std::vector<Int> trL;
  if (k_max >= 1) {
    ga = enumerate_gallery_loops(c, k_max, 6 * k_max, 0);
    SparseMat L = build_L(c).L;
    trL = L.rows() > 0 ? L.power_traces(k_max)
                       : std::vector<Int>(static_cast<std::size_t>(k_max),
                                          Int(0));
  }
  TraceComparison out;
  for (int n = 1; n <= n_max; ++n) {
    TraceRow r;
    r.n = n;
    r.geodesic_sum = ge.based_counts[static_cast<std::size_t>(n - 1)];
    r.trace_T = trT[static_cast<std::size_t>(n - 1)];
    bool ok = (r.geodesic_sum == r.trace_T);
    if (!ok) out.geodesic_all_match = false;
    if (n % 3 == 0 && n / 3 <= k_max) {
      r.has_gallery = true;
      r.gallery_sum = ga.sums[static_cast<std::size_t>(n / 3 - 1)];
      r.trace_L = trL[static_cast<std::size_t>(n / 3 - 1)];
      if (r.gallery_sum != Rat(r.trace_L)) {
        ok = false;
        out.gallery_all_match = false;
      }
    }
    r.match = ok;
    out.rows.push_back(std::move(r));
  }
  return out;
}

inline std::string rat_to_string(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline void write_trace_csv(std::ostream& os, const TraceComparison& t) {
  os << "n,geodesic_sum,trace_T_n,gallery_sum,trace_L_n,match\n";
  for (const TraceRow& r : t.rows) {
    os << r.n << "," << r.geodesic_sum.str() << "," << r.trace_T.str() << ",";
    if (r.has_gallery)
      os << rat_to_string(r.gallery_sum) << "," << r.trace_L.str();
    else
      os << ",";
    os << "," << (r.match ? "yes" : "no") << "\n";
  }
}

}  // namespace a2zeta
