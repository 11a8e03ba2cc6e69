#pragma once

// The projective plane PG(2, q): canonical point/line representatives,
// incidence, the local non-incidence operator T and its rational partner T',
// and combinatorial checks on the one-vertex star model (the bipartite
// point/line incidence graph hung off a central vertex).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "a2zeta/bigint.hpp"
#include "a2zeta/errors.hpp"
#include "a2zeta/gf.hpp"

namespace a2zeta {

// Minimal dense rational matrix, just enough for the local operator checks.
struct RatMat {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;  // row-major

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + static_cast<size_t>(c)]; }
    const Rat& at(int r, int c) const {
        return a[static_cast<size_t>(r) * cols + static_cast<size_t>(c)];
    }

    static RatMat identity(int n) {
        RatMat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
        return m;
    }

    RatMat operator*(const RatMat& rhs) const {
        if (cols != rhs.rows) throw PreconditionFailed("matrix product shape mismatch");
        RatMat out(rows, rhs.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Rat& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < rhs.cols; ++j) out.at(i, j) += v * rhs.at(k, j);
            }
        return out;
    }

    bool operator==(const RatMat& rhs) const {
        return rows == rhs.rows && cols == rhs.cols && a == rhs.a;
    }
};

class ProjPlane {
public:
    // Canonical representative: last nonzero coordinate equals 1; reps are
    // listed in lexicographic order of the coordinate triple.
    static ProjPlane make(int q, int bound = 16) {
        ProjPlane pl(GF::make(q, bound));
        return pl;
    }

    int q() const { return field_.order(); }
    int size() const { return static_cast<int>(points_.size()); }  // q^2+q+1

    const std::vector<std::array<int, 3>>& points() const { return points_; }
    const std::vector<std::array<int, 3>>& lines() const { return lines_; }

    bool incident(int pt, int ln) const {
        return incid_[static_cast<size_t>(pt) * lines_.size() + static_cast<size_t>(ln)];
    }

    const std::vector<int>& lines_of_point(int pt) const {
        return lines_of_point_[static_cast<size_t>(pt)];
    }
    const std::vector<int>& points_of_line(int ln) const {
        return points_of_line_[static_cast<size_t>(ln)];
    }

    const GF& field() const { return field_; }

private:
    GF field_;
    std::vector<std::array<int, 3>> points_, lines_;
    std::vector<char> incid_;
    std::vector<std::vector<int>> lines_of_point_, points_of_line_;

    explicit ProjPlane(GF field) : field_(std::move(field)) {
        const int q = field_.order();
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b)
                for (int c = 0; c < q; ++c) {
                    std::array<int, 3> v{a, b, c};
                    int last = -1;
                    for (int i = 2; i >= 0; --i)
                        if (v[static_cast<size_t>(i)] != 0) {
                            last = i;
                            break;
                        }
                    if (last >= 0 && v[static_cast<size_t>(last)] == 1) points_.push_back(v);
                }
        lines_ = points_;  // self-dual parametrization
        const size_t n = points_.size();
        incid_.assign(n * n, 0);
        lines_of_point_.assign(n, {});
        points_of_line_.assign(n, {});
        for (size_t p = 0; p < n; ++p)
            for (size_t l = 0; l < n; ++l) {
                int dot = 0;
                for (int i = 0; i < 3; ++i)
                    dot = field_.add(dot, field_.mul(points_[p][static_cast<size_t>(i)],
                                                     lines_[l][static_cast<size_t>(i)]));
                if (dot == 0) {
                    incid_[p * n + l] = 1;
                    lines_of_point_[p].push_back(static_cast<int>(l));
                    points_of_line_[l].push_back(static_cast<int>(p));
                }
            }
    }
};

// Non-incidence 0/1 operator: rows indexed by points, columns by lines,
// entry 1 exactly when the point is NOT on the line.
inline RatMat local_T(const ProjPlane& pl) {
    const int n = pl.size();
    RatMat m(n, n);
    for (int p = 0; p < n; ++p)
        for (int l = 0; l < n; ++l)
            if (!pl.incident(p, l)) m.at(p, l) = Rat(1);
    return m;
}

// Rational partner of local_T: rows indexed by lines, columns by points,
// entry -(q-1)/q^2 on incidence and 1/q^2 otherwise.  These are the unique
// values making local_T * local_Tprime the identity (and vice versa): the
// diagonal of the product collects q^2 non-incident terms, forcing the
// off-incidence value 1/q^2, and the off-diagonal collects q incident plus
// q^2-q non-incident terms, forcing the incidence value -(q-1)/q^2.
inline RatMat local_Tprime(const ProjPlane& pl) {
    const int n = pl.size();
    const int q = pl.q();
    const Rat on = Rat(-(q - 1)) / Rat(q * q);
    const Rat off = Rat(1) / Rat(q * q);
    RatMat m(n, n);
    for (int l = 0; l < n; ++l)
        for (int p = 0; p < n; ++p) m.at(l, p) = pl.incident(p, l) ? on : off;
    return m;
}

struct StarReport {
    int q = 0;
    long long link_vertices = 0;    // 2(q^2+q+1)
    long long link_edges = 0;       // flags of the plane: (q^2+q+1)(q+1)
    bool center_degree_ok = false;  // center adjacent to all link vertices
    bool common_with_center_ok = false;  // |N(center) ∩ N(v)| = q+1 for all link v
    bool triple_bound_ok = false;        // no 3 link vertices share 2 common link neighbors
    bool passed = false;
};

// Star model: one central vertex joined to every point and every line of the
// plane, with point-line adjacencies given by incidence.  The checks are run
// on the graph itself rather than assumed from the plane axioms.
inline StarReport check_star(const ProjPlane& pl) {
    StarReport rep;
    rep.q = pl.q();
    const int n = pl.size();
    const int nl = 2 * n;  // link vertices: points 0..n-1, lines n..2n-1
    rep.link_vertices = nl;

    // adjacency of the link graph as bitsets
    const int words = (nl + 63) / 64;
    std::vector<uint64_t> adj(static_cast<size_t>(nl) * words, 0);
    auto set_bit = [&](int v, int w) {
        adj[static_cast<size_t>(v) * words + static_cast<size_t>(w / 64)] |=
            (uint64_t{1} << (w % 64));
    };
    long long edges = 0;
    for (int p = 0; p < n; ++p)
        for (int l : pl.lines_of_point(p)) {
            set_bit(p, n + l);
            set_bit(n + l, p);
            ++edges;
        }
    rep.link_edges = edges;

    // the center is adjacent to every link vertex by construction
    rep.center_degree_ok = true;

    // common neighbors of the center and a link vertex v are exactly the link
    // neighbors of v, so the count is the degree of v in the link graph
    auto popcount_row = [&](int v) {
        long long c = 0;
        for (int w = 0; w < words; ++w)
            c += __builtin_popcountll(adj[static_cast<size_t>(v) * words + static_cast<size_t>(w)]);
        return c;
    };
    rep.common_with_center_ok = true;
    for (int v = 0; v < nl; ++v)
        if (popcount_row(v) != rep.q + 1) rep.common_with_center_ok = false;

    // Triple bound inside the link: no three link vertices may have two or
    // more common link neighbors.  A pair with at most one common neighbor
    // cannot extend to a violating triple, which prunes the scan to pairs.
    rep.triple_bound_ok = true;
    std::vector<uint64_t> buf(static_cast<size_t>(words));
    for (int u = 0; u < nl && rep.triple_bound_ok; ++u)
        for (int v = u + 1; v < nl && rep.triple_bound_ok; ++v) {
            long long common = 0;
            for (int w = 0; w < words; ++w) {
                buf[static_cast<size_t>(w)] =
                    adj[static_cast<size_t>(u) * words + static_cast<size_t>(w)] &
                    adj[static_cast<size_t>(v) * words + static_cast<size_t>(w)];
                common += __builtin_popcountll(buf[static_cast<size_t>(w)]);
            }
            if (common < 2) continue;
            for (int x = 0; x < nl && rep.triple_bound_ok; ++x) {
                if (x == u || x == v) continue;
                long long triple = 0;
                for (int w = 0; w < words; ++w)
                    triple += __builtin_popcountll(
                        buf[static_cast<size_t>(w)] &
                        adj[static_cast<size_t>(x) * words + static_cast<size_t>(w)]);
                if (triple >= 2) rep.triple_bound_ok = false;
            }
        }

    rep.passed = rep.center_degree_ok && rep.common_with_center_ok && rep.triple_bound_ok &&
                 rep.link_edges == static_cast<long long>(n) * (rep.q + 1);
    return rep;
}

struct LocalCheckReport {
    int q = 0;
    int plane_size = 0;  // q^2+q+1
    bool counts_ok = false;         // q+1 points per line, q+1 lines per point
    bool unique_join_ok = false;    // any two points lie on exactly one line
    bool mmt_ok = false;            // M M^T = qI + J for the incidence matrix
    bool t_sums_ok = false;         // row and column sums of local_T equal q^2
    bool tt_prime_ok = false;       // local_T * local_Tprime = identity
    StarReport star;
    bool passed = false;
};

inline LocalCheckReport local_check(int q, int bound = 16) {
    ProjPlane pl = ProjPlane::make(q, bound);
    LocalCheckReport rep;
    rep.q = q;
    const int n = pl.size();
    rep.plane_size = n;

    rep.counts_ok = true;
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(pl.lines_of_point(i).size()) != q + 1) rep.counts_ok = false;
        if (static_cast<int>(pl.points_of_line(i).size()) != q + 1) rep.counts_ok = false;
    }

    // pairwise joins via incidence-vector intersections
    rep.unique_join_ok = true;
    rep.mmt_ok = true;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            int common = 0;
            for (int l : pl.lines_of_point(i))
                if (pl.incident(j, l)) ++common;
            const int expect = (i == j) ? q + 1 : 1;  // (M M^T)_{ij} with qI + J target
            if (common != expect) rep.mmt_ok = false;
            if (i != j && common != 1) rep.unique_join_ok = false;
        }

    RatMat T = local_T(pl);
    rep.t_sums_ok = true;
    for (int i = 0; i < n; ++i) {
        Rat rs(0), cs(0);
        for (int j = 0; j < n; ++j) {
            rs += T.at(i, j);
            cs += T.at(j, i);
        }
        if (rs != Rat(q) * q || cs != Rat(q) * q) rep.t_sums_ok = false;
    }

    rep.tt_prime_ok = (T * local_Tprime(pl) == RatMat::identity(n)) &&
                      (local_Tprime(pl) * T == RatMat::identity(n));

    rep.star = check_star(pl);
    rep.passed = rep.counts_ok && rep.unique_join_ok && rep.mmt_ok && rep.t_sums_ok &&
                 rep.tt_prime_ok && rep.star.passed;
    return rep;
}

}  // namespace a2zeta
