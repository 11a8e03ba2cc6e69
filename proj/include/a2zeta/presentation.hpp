#pragma once

// Triangle presentations over PG(2,q): a bijection lambda from points to
// lines together with a cyclically closed set of point triples such that for
// every flag (x, y on lambda(x)) there is a unique completion z, with
// z on lambda(y) and x on lambda(z).  Such a presentation determines a
// type cover: a 3-vertex quotient complex with one edge per (point, type)
// and one chamber per (triple class, rotation).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "a2zeta/complex.hpp"
#include "a2zeta/errors.hpp"
#include "a2zeta/projgeom.hpp"

namespace a2zeta {

struct TrianglePresentation {
    int q = 0;
    std::vector<int> lambda;                  // point index -> line index
    std::vector<std::array<int, 3>> triples;  // ordered triples, closed under rotation
};

struct PresentationCheckReport {
    int q = 0;
    long long flag_count = 0;    // incident (x, y on lambda(x)) pairs
    long long triple_count = 0;
    bool lambda_bijective = false;
    bool cyclically_closed = false;
    bool compatibility_ok = false;  // unique z per flag, none elsewhere
    bool size_ok = false;           // (q^2+q+1)(q+1) triples
    std::vector<std::string> violations;
    bool passed = false;
};

// Independent verifier: replays every invariant directly against the plane's
// incidence data, without trusting how the presentation was produced.
inline PresentationCheckReport check_presentation(const TrianglePresentation& p, int bound = 16) {
    ProjPlane pl = ProjPlane::make(p.q, bound);
    const int n = pl.size();
    PresentationCheckReport rep;
    rep.q = p.q;
    rep.triple_count = static_cast<long long>(p.triples.size());

    rep.lambda_bijective = true;
    if (static_cast<int>(p.lambda.size()) != n) {
        rep.lambda_bijective = false;
        rep.violations.push_back("lambda has " + std::to_string(p.lambda.size()) +
                                 " entries, expected " + std::to_string(n));
    } else {
        std::vector<char> used(static_cast<size_t>(n), 0);
        for (int x = 0; x < n; ++x) {
            const int l = p.lambda[static_cast<size_t>(x)];
            if (l < 0 || l >= n) {
                rep.lambda_bijective = false;
                rep.violations.push_back("lambda[" + std::to_string(x) + "] out of range");
            } else if (used[static_cast<size_t>(l)]) {
                rep.lambda_bijective = false;
                rep.violations.push_back("lambda not injective at line " + std::to_string(l));
            } else {
                used[static_cast<size_t>(l)] = 1;
            }
        }
    }

    std::set<std::array<int, 3>> tset;
    bool in_range = true;
    for (const auto& t : p.triples) {
        for (int v : t)
            if (v < 0 || v >= n) in_range = false;
        if (!in_range) {
            rep.violations.push_back("triple entry out of range");
            break;
        }
        if (!tset.insert(t).second)
            rep.violations.push_back("duplicate triple (" + std::to_string(t[0]) + "," +
                                     std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    }

    rep.cyclically_closed = in_range;
    if (in_range)
        for (const auto& t : tset)
            if (!tset.count({t[1], t[2], t[0]})) {
                rep.cyclically_closed = false;
                rep.violations.push_back("missing rotation of (" + std::to_string(t[0]) + "," +
                                         std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
            }

    rep.compatibility_ok = in_range && rep.lambda_bijective;
    if (rep.compatibility_ok) {
        std::map<std::pair<int, int>, int> completions;
        for (const auto& t : tset) ++completions[{t[0], t[1]}];
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                auto it = completions.find({x, y});
                const int have = it == completions.end() ? 0 : it->second;
                const bool flag = pl.incident(y, p.lambda[static_cast<size_t>(x)]);
                if (flag) ++rep.flag_count;
                const int want = flag ? 1 : 0;
                if (have != want) {
                    rep.compatibility_ok = false;
                    rep.violations.push_back(
                        "pair (" + std::to_string(x) + "," + std::to_string(y) + ") has " +
                        std::to_string(have) + " completions, expected " + std::to_string(want));
                }
            }
    }

    const long long want_size = static_cast<long long>(n) * (p.q + 1);
    rep.size_ok = rep.triple_count == want_size &&
                  rep.triple_count == static_cast<long long>(tset.size());
    if (!rep.size_ok)
        rep.violations.push_back("triple count " + std::to_string(rep.triple_count) +
                                 ", expected " + std::to_string(want_size));

    rep.passed = rep.violations.empty();
    return rep;
}

namespace detail {

// Backtracking search over (lambda, successor) with atomic triple
// assignment.  succ[x*n+y] = z encodes the triple (x,y,z); assigning it also
// assigns the rotations (y,z)->x and (z,x)->y, and records the incidence
// "x must lie on lambda(z)" when lambda(z) is still open.
class PresentationSearcher {
public:
    PresentationSearcher(const ProjPlane& pl, std::uint64_t seed, long long budget)
        : pl_(pl), n_(pl.size()), budget_(budget) {
        if (n_ > 63) throw BoundExceeded("presentation search supports q^2+q+1 <= 63");
        lambda_.assign(static_cast<size_t>(n_), -1);
        line_used_.assign(static_cast<size_t>(n_), 0);
        succ_.assign(static_cast<size_t>(n_) * n_, -1);
        req_.assign(static_cast<size_t>(n_), 0);
        line_mask_.assign(static_cast<size_t>(n_), 0);
        for (int l = 0; l < n_; ++l)
            for (int pt : pl_.points_of_line(l))
                line_mask_[static_cast<size_t>(l)] |= (std::uint64_t{1} << pt);
        // seeded, fixed value orders make the search deterministic per seed
        std::mt19937_64 rng(seed);
        line_order_.assign(static_cast<size_t>(n_), {});
        point_order_.assign(static_cast<size_t>(n_), {});
        for (int x = 0; x < n_; ++x) {
            auto& lo = line_order_[static_cast<size_t>(x)];
            lo.resize(static_cast<size_t>(n_));
            for (int l = 0; l < n_; ++l) lo[static_cast<size_t>(l)] = l;
            std::shuffle(lo.begin(), lo.end(), rng);
        }
        for (int l = 0; l < n_; ++l) {
            point_order_[static_cast<size_t>(l)] = pl_.points_of_line(l);
            std::shuffle(point_order_[static_cast<size_t>(l)].begin(),
                         point_order_[static_cast<size_t>(l)].end(), rng);
        }
    }

    TrianglePresentation run(int q) {
        if (!solve())
            throw SearchExhausted("no presentation found within node budget " +
                                  std::to_string(budget_));
        TrianglePresentation p;
        p.q = q;
        p.lambda = lambda_;
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                const int z = succ_[static_cast<size_t>(x) * n_ + static_cast<size_t>(y)];
                if (z >= 0) p.triples.push_back({x, y, z});
            }
        return p;
    }

private:
    const ProjPlane& pl_;
    int n_;
    long long budget_;
    long long nodes_ = 0;
    std::vector<int> lambda_;
    std::vector<char> line_used_;
    std::vector<int> succ_;
    std::vector<std::uint64_t> req_, line_mask_;
    std::vector<std::vector<int>> line_order_, point_order_;

    enum class Op { Lambda, Succ, Req };
    struct TrailEntry {
        Op op;
        int a;
        std::uint64_t old;
    };
    std::vector<TrailEntry> trail_;

    int succ_at(int x, int y) const {
        return succ_[static_cast<size_t>(x) * n_ + static_cast<size_t>(y)];
    }

    void set_succ(int x, int y, int z) {
        succ_[static_cast<size_t>(x) * n_ + static_cast<size_t>(y)] = z;
        trail_.push_back({Op::Succ, x * n_ + y, 0});
    }

    void add_req(int pt, int on_pt) {
        const std::uint64_t bit = std::uint64_t{1} << on_pt;
        if (req_[static_cast<size_t>(pt)] & bit) return;
        trail_.push_back({Op::Req, pt, req_[static_cast<size_t>(pt)]});
        req_[static_cast<size_t>(pt)] |= bit;
    }

    void rewind(size_t mark) {
        while (trail_.size() > mark) {
            const TrailEntry& e = trail_.back();
            switch (e.op) {
                case Op::Lambda:
                    line_used_[static_cast<size_t>(lambda_[static_cast<size_t>(e.a)])] = 0;
                    lambda_[static_cast<size_t>(e.a)] = -1;
                    break;
                case Op::Succ:
                    succ_[static_cast<size_t>(e.a)] = -1;
                    break;
                case Op::Req:
                    req_[static_cast<size_t>(e.a)] = e.old;
                    break;
            }
            trail_.pop_back();
        }
    }

    bool lambda_value_ok(int pt, int l) const {
        return !line_used_[static_cast<size_t>(l)] &&
               (req_[static_cast<size_t>(pt)] & ~line_mask_[static_cast<size_t>(l)]) == 0;
    }

    bool lambda_feasible(int pt, std::uint64_t extra) const {
        const std::uint64_t need = req_[static_cast<size_t>(pt)] | extra;
        for (int l = 0; l < n_; ++l)
            if (!line_used_[static_cast<size_t>(l)] &&
                (need & ~line_mask_[static_cast<size_t>(l)]) == 0)
                return true;
        return false;
    }

    void assign_lambda(int pt, int l) {
        lambda_[static_cast<size_t>(pt)] = l;
        line_used_[static_cast<size_t>(l)] = 1;
        trail_.push_back({Op::Lambda, pt, 0});
    }

    // orbit of the triple (x,y,z) under rotation, as flag pairs
    static std::array<std::pair<int, int>, 3> orbit(int x, int y, int z) {
        return {std::pair<int, int>{x, y}, {y, z}, {z, x}};
    }

    bool succ_value_ok(int x, int y, int z) const {
        // flags (y,z) and (z,x) must be assignable alongside (x,y)
        auto orb = orbit(x, y, z);
        for (int k = 1; k < 3; ++k) {
            const auto [a, b] = orb[static_cast<size_t>(k)];
            if (a == x && b == y) continue;  // fully degenerate triple (x,x,x)
            if (succ_at(a, b) != -1) return false;
        }
        const int lz = lambda_[static_cast<size_t>(z)];
        if (lz != -1) {
            if (!pl_.incident(x, lz)) return false;
        } else {
            if (!lambda_feasible(z, std::uint64_t{1} << x)) return false;
        }
        return true;
    }

    void assign_succ_triple(int x, int y, int z) {
        std::set<std::pair<int, int>> seen;
        for (const auto& [a, b] : orbit(x, y, z))
            if (seen.insert({a, b}).second) set_succ(a, b, succ_of_rotation(a, b, x, y, z));
        if (lambda_[static_cast<size_t>(z)] == -1) add_req(z, x);
    }

    static int succ_of_rotation(int a, int b, int x, int y, int z) {
        if (a == x && b == y) return z;
        if (a == y && b == z) return x;
        return y;
    }

    bool solve() {
        // variable selection: smallest domain among unassigned lambdas and
        // unblocked unresolved flags; empty domain fails immediately
        int best_kind = -1;  // 0 = lambda, 1 = flag
        int best_a = -1, best_b = -1;
        size_t best_size = static_cast<size_t>(-1);
        std::vector<int> best_domain;

        std::vector<int> domain;
        for (int pt = 0; pt < n_; ++pt) {
            if (lambda_[static_cast<size_t>(pt)] != -1) continue;
            domain.clear();
            for (int l : line_order_[static_cast<size_t>(pt)])
                if (lambda_value_ok(pt, l)) domain.push_back(l);
            if (domain.empty()) return false;
            if (domain.size() < best_size) {
                best_size = domain.size();
                best_kind = 0;
                best_a = pt;
                best_domain = domain;
            }
        }
        for (int x = 0; x < n_; ++x) {
            const int lx = lambda_[static_cast<size_t>(x)];
            if (lx == -1) continue;
            for (int y : point_order_[static_cast<size_t>(lx)]) {
                if (succ_at(x, y) != -1) continue;
                const int ly = lambda_[static_cast<size_t>(y)];
                if (ly == -1) continue;  // blocked; lambda(y) is already a variable
                domain.clear();
                for (int z : point_order_[static_cast<size_t>(ly)])
                    if (succ_value_ok(x, y, z)) domain.push_back(z);
                if (domain.empty()) return false;
                if (domain.size() < best_size ||
                    (domain.size() == best_size && best_kind == 0)) {
                    best_size = domain.size();
                    best_kind = 1;
                    best_a = x;
                    best_b = y;
                    best_domain = domain;
                }
            }
        }

        if (best_kind == -1) return true;  // everything assigned and resolved

        for (int v : best_domain) {
            if (++nodes_ > budget_)
                throw SearchExhausted("presentation search exceeded node budget " +
                                      std::to_string(budget_));
            const size_t mark = trail_.size();
            if (best_kind == 0)
                assign_lambda(best_a, v);
            else
                assign_succ_triple(best_a, best_b, v);
            if (solve()) return true;
            rewind(mark);
        }
        return false;
    }
};

}  // namespace detail

inline TrianglePresentation search_presentation(int q, std::uint64_t seed,
                                                long long node_budget = 5'000'000) {
    ProjPlane pl = ProjPlane::make(q);
    detail::PresentationSearcher searcher(pl, seed, node_budget);
    TrianglePresentation p = searcher.run(q);
    if (!check_presentation(p).passed)
        throw PreconditionFailed("internal error: search produced an invalid presentation");
    return p;
}

// The type cover of a presentation: vertices v0,v1,v2; an edge e(x,i) from
// v_i to v_{i+1} for every point x; and for every triple class and rotation
// i a chamber whose slot-k edge is e(class[(k-i) mod 3], k), deduplicated by
// its slot triple (fully degenerate classes yield one chamber, not three).
inline TriangleComplex build_quotient(const TrianglePresentation& p) {
    PresentationCheckReport chk = check_presentation(p);
    if (!chk.passed) {
        std::string msg = "presentation invariants fail:";
        for (const auto& v : chk.violations) msg += " [" + v + "]";
        throw InvalidPresentation(msg);
    }
    const int n = static_cast<int>(p.lambda.size());

    std::vector<VertexSpec> vs;
    for (int i = 0; i < 3; ++i) vs.push_back({"v" + std::to_string(i), i});
    auto eid = [](int x, int i) { return "e" + std::to_string(x) + "_" + std::to_string(i); };
    std::vector<EdgeSpec> es;
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < n; ++x)
            es.push_back({eid(x, i), "v" + std::to_string(i), "v" + std::to_string((i + 1) % 3)});

    // one representative per cyclic class: the lexicographically least rotation
    std::set<std::array<int, 3>> reps;
    for (const auto& t : p.triples) {
        std::array<int, 3> best = t;
        for (int r = 1; r < 3; ++r) {
            std::array<int, 3> rot = {t[static_cast<size_t>(r)], t[static_cast<size_t>((r + 1) % 3)],
                                      t[static_cast<size_t>((r + 2) % 3)]};
            if (rot < best) best = rot;
        }
        reps.insert(best);
    }

    std::vector<ChamberSpec> cs;
    std::set<std::array<std::string, 3>> seen;
    for (const auto& rep : reps)
        for (int i = 0; i < 3; ++i) {
            ChamberSpec c;
            c.id = "c" + std::to_string(rep[0]) + "_" + std::to_string(rep[1]) + "_" +
                   std::to_string(rep[2]) + "_" + std::to_string(i);
            for (int k = 0; k < 3; ++k)
                c.edges[static_cast<size_t>(k)] =
                    eid(rep[static_cast<size_t>(((k - i) % 3 + 3) % 3)], k);
            if (seen.insert(c.edges).second) cs.push_back(c);
        }

    TriangleComplex out(p.q, std::move(vs), std::move(es), std::move(cs));
    if (!validate(out).passed)
        throw AxiomViolation("internal error: generated quotient failed validation");
    return out;
}

}  // namespace a2zeta
