#pragma once

// Typed triangle multicomplexes: the finite quotients on which all operators
// act.  Vertices carry a type in Z/3, every stored edge is positively
// oriented (type increases by one around an edge), and chambers are directed
// 3-cycles with one edge of each tail type.  Parallel edges and repeated
// chambers are allowed.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "a2zeta/errors.hpp"

namespace a2zeta {

struct VertexSpec {
    std::string id;
    int type = 0;  // in {0,1,2}
};

struct EdgeSpec {
    std::string id;
    std::string tail, head;  // vertex ids
};

struct ChamberSpec {
    std::string id;
    std::array<std::string, 3> edges;  // tail types 0, 1, 2 in this order
};

class TriangleComplex {
public:
    // Structural problems (unresolvable ids, type-rule breaches, chambers
    // that do not close up) are errors at construction time; counting
    // problems are deferred to validate().  Diagnostics cite the array
    // index and id of the offending element.
    TriangleComplex(int q, std::vector<VertexSpec> vertices, std::vector<EdgeSpec> edges,
                    std::vector<ChamberSpec> chambers)
        : q_(q),
          vertices_(std::move(vertices)),
          edges_(std::move(edges)),
          chambers_(std::move(chambers)) {
        if (q_ < 2) throw PreconditionFailed("complex requires q >= 2");
        for (size_t i = 0; i < vertices_.size(); ++i) {
            const auto& v = vertices_[i];
            if (v.type < 0 || v.type > 2)
                throw TypeRuleViolation("vertices[" + std::to_string(i) + "] '" + v.id +
                                        "': type must be 0, 1 or 2");
            if (!vidx_.emplace(v.id, static_cast<int>(i)).second)
                throw PreconditionFailed("vertices[" + std::to_string(i) + "]: duplicate id '" +
                                         v.id + "'");
        }
        edge_tail_.resize(edges_.size());
        edge_head_.resize(edges_.size());
        out_edges_.assign(vertices_.size(), {});
        in_edges_.assign(vertices_.size(), {});
        for (size_t i = 0; i < edges_.size(); ++i) {
            const auto& e = edges_[i];
            if (!eidx_.emplace(e.id, static_cast<int>(i)).second)
                throw PreconditionFailed("edges[" + std::to_string(i) + "]: duplicate id '" +
                                         e.id + "'");
            auto t = vidx_.find(e.tail);
            if (t == vidx_.end())
                throw DanglingReference("edges[" + std::to_string(i) + "] '" + e.id +
                                        "': unknown tail vertex '" + e.tail + "'");
            auto h = vidx_.find(e.head);
            if (h == vidx_.end())
                throw DanglingReference("edges[" + std::to_string(i) + "] '" + e.id +
                                        "': unknown head vertex '" + e.head + "'");
            edge_tail_[i] = t->second;
            edge_head_[i] = h->second;
            const int tt = vertices_[static_cast<size_t>(t->second)].type;
            const int ht = vertices_[static_cast<size_t>(h->second)].type;
            if (ht != (tt + 1) % 3)
                throw TypeRuleViolation("edges[" + std::to_string(i) + "] '" + e.id +
                                        "': tail type " + std::to_string(tt) + " requires head type " +
                                        std::to_string((tt + 1) % 3) + ", found " +
                                        std::to_string(ht));
            out_edges_[static_cast<size_t>(t->second)].push_back(static_cast<int>(i));
            in_edges_[static_cast<size_t>(h->second)].push_back(static_cast<int>(i));
        }
        chamber_edges_.resize(chambers_.size());
        chambers_of_edge_.assign(edges_.size(), {});
        for (size_t i = 0; i < chambers_.size(); ++i) {
            const auto& c = chambers_[i];
            if (!cidx_.emplace(c.id, static_cast<int>(i)).second)
                throw PreconditionFailed("chambers[" + std::to_string(i) + "]: duplicate id '" +
                                         c.id + "'");
            std::array<int, 3> es{};
            for (int k = 0; k < 3; ++k) {
                auto it = eidx_.find(c.edges[static_cast<size_t>(k)]);
                if (it == eidx_.end())
                    throw DanglingReference("chambers[" + std::to_string(i) + "] '" + c.id +
                                            "': unknown edge '" + c.edges[static_cast<size_t>(k)] +
                                            "'");
                es[static_cast<size_t>(k)] = it->second;
            }
            for (int k = 0; k < 3; ++k) {
                const int tt =
                    vertices_[static_cast<size_t>(edge_tail_[static_cast<size_t>(es[static_cast<size_t>(k)])])]
                        .type;
                if (tt != k)
                    throw TypeRuleViolation("chambers[" + std::to_string(i) + "] '" + c.id +
                                            "': slot " + std::to_string(k) +
                                            " needs an edge with tail type " + std::to_string(k) +
                                            ", found " + std::to_string(tt));
            }
            for (int k = 0; k < 3; ++k) {
                const int cur = es[static_cast<size_t>(k)];
                const int nxt = es[static_cast<size_t>((k + 1) % 3)];
                if (edge_head_[static_cast<size_t>(cur)] != edge_tail_[static_cast<size_t>(nxt)])
                    throw TypeRuleViolation("chambers[" + std::to_string(i) + "] '" + c.id +
                                            "': edges do not form a directed 3-cycle");
            }
            chamber_edges_[i] = es;
            for (int k = 0; k < 3; ++k)
                chambers_of_edge_[static_cast<size_t>(es[static_cast<size_t>(k)])].push_back(
                    static_cast<int>(i));
            for (int k = 0; k < 3; ++k) {
                int a = es[static_cast<size_t>(k)];
                int b = es[static_cast<size_t>((k + 1) % 3)];
                cochamber_pairs_.insert({std::min(a, b), std::max(a, b)});
            }
        }
    }

    int q() const { return q_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_chambers() const { return static_cast<int>(chambers_.size()); }

    const std::vector<VertexSpec>& vertices() const { return vertices_; }
    const std::vector<EdgeSpec>& edges() const { return edges_; }
    const std::vector<ChamberSpec>& chambers() const { return chambers_; }

    int vertex_type(int v) const { return vertices_[static_cast<size_t>(v)].type; }
    int edge_tail(int e) const { return edge_tail_[static_cast<size_t>(e)]; }
    int edge_head(int e) const { return edge_head_[static_cast<size_t>(e)]; }
    const std::array<int, 3>& chamber_edges(int c) const {
        return chamber_edges_[static_cast<size_t>(c)];
    }

    int vertex_index(const std::string& id) const { return lookup(vidx_, id, "vertex"); }
    int edge_index(const std::string& id) const { return lookup(eidx_, id, "edge"); }
    int chamber_index(const std::string& id) const { return lookup(cidx_, id, "chamber"); }

    const std::vector<int>& out_edges(int v) const { return out_edges_[static_cast<size_t>(v)]; }
    const std::vector<int>& in_edges(int v) const { return in_edges_[static_cast<size_t>(v)]; }
    const std::vector<int>& chambers_of_edge(int e) const {
        return chambers_of_edge_[static_cast<size_t>(e)];
    }

    bool share_chamber(int e, int f) const {
        return cochamber_pairs_.count({std::min(e, f), std::max(e, f)}) > 0;
    }

    // Composition e then f makes a straight (angle-pi) segment exactly when
    // the two edges meet head-to-tail and no chamber contains them both.
    // Uses only chamber data, never vertex types.
    bool geodesic_continuation(int e, int f) const {
        if (edge_head_[static_cast<size_t>(e)] != edge_tail_[static_cast<size_t>(f)])
            throw NotComposable("edge '" + edges_[static_cast<size_t>(e)].id +
                                "' does not end where edge '" + edges_[static_cast<size_t>(f)].id +
                                "' starts");
        return !share_chamber(e, f);
    }

    bool geodesic_continuation(const std::string& e_id, const std::string& f_id) const {
        return geodesic_continuation(edge_index(e_id), edge_index(f_id));
    }

private:
    int q_;
    std::vector<VertexSpec> vertices_;
    std::vector<EdgeSpec> edges_;
    std::vector<ChamberSpec> chambers_;
    std::unordered_map<std::string, int> vidx_, eidx_, cidx_;
    std::vector<int> edge_tail_, edge_head_;
    std::vector<std::array<int, 3>> chamber_edges_;
    std::vector<std::vector<int>> out_edges_, in_edges_, chambers_of_edge_;
    std::set<std::pair<int, int>> cochamber_pairs_;

    static int lookup(const std::unordered_map<std::string, int>& m, const std::string& id,
                      const char* kind) {
        auto it = m.find(id);
        if (it == m.end())
            throw DanglingReference(std::string("unknown ") + kind + " id '" + id + "'");
        return it->second;
    }
};

struct ValidationReport {
    int q = 0;
    std::vector<long long> out_degree, in_degree;  // per vertex, with multiplicity
    std::vector<long long> chamber_count;          // per edge, with multiplicity
    std::vector<int> bad_out_vertices, bad_in_vertices, bad_chamber_edges;
    bool degrees_ok = false;
    bool chamber_counts_ok = false;
    bool global_count_ok = false;  // 3 |chambers| = (q+1) |edges|
    std::vector<std::string> violations;
    bool passed = false;
};

// Counting axioms of a building quotient: regular in- and out-degrees
// q^2+q+1, every edge in exactly q+1 chambers, and the double-count identity
// 3 |chambers| = (q+1) |edges|.  Violations are reported, never thrown.
inline ValidationReport validate(const TriangleComplex& c) {
    ValidationReport rep;
    rep.q = c.q();
    const long long deg = static_cast<long long>(c.q()) * c.q() + c.q() + 1;
    const long long per_edge = c.q() + 1;
    rep.out_degree.resize(static_cast<size_t>(c.num_vertices()));
    rep.in_degree.resize(static_cast<size_t>(c.num_vertices()));
    rep.chamber_count.resize(static_cast<size_t>(c.num_edges()));
    rep.degrees_ok = true;
    for (int v = 0; v < c.num_vertices(); ++v) {
        rep.out_degree[static_cast<size_t>(v)] = static_cast<long long>(c.out_edges(v).size());
        rep.in_degree[static_cast<size_t>(v)] = static_cast<long long>(c.in_edges(v).size());
        if (rep.out_degree[static_cast<size_t>(v)] != deg) {
            rep.degrees_ok = false;
            rep.bad_out_vertices.push_back(v);
            rep.violations.push_back("vertex '" + c.vertices()[static_cast<size_t>(v)].id +
                                     "': out-degree " +
                                     std::to_string(rep.out_degree[static_cast<size_t>(v)]) +
                                     ", expected " + std::to_string(deg));
        }
        if (rep.in_degree[static_cast<size_t>(v)] != deg) {
            rep.degrees_ok = false;
            rep.bad_in_vertices.push_back(v);
            rep.violations.push_back("vertex '" + c.vertices()[static_cast<size_t>(v)].id +
                                     "': in-degree " +
                                     std::to_string(rep.in_degree[static_cast<size_t>(v)]) +
                                     ", expected " + std::to_string(deg));
        }
    }
    rep.chamber_counts_ok = true;
    for (int e = 0; e < c.num_edges(); ++e) {
        rep.chamber_count[static_cast<size_t>(e)] =
            static_cast<long long>(c.chambers_of_edge(e).size());
        if (rep.chamber_count[static_cast<size_t>(e)] != per_edge) {
            rep.chamber_counts_ok = false;
            rep.bad_chamber_edges.push_back(e);
            rep.violations.push_back("edge '" + c.edges()[static_cast<size_t>(e)].id + "': lies in " +
                                     std::to_string(rep.chamber_count[static_cast<size_t>(e)]) +
                                     " chambers, expected " + std::to_string(per_edge));
        }
    }
    rep.global_count_ok = 3LL * c.num_chambers() == per_edge * c.num_edges();
    if (!rep.global_count_ok)
        rep.violations.push_back("global count: 3*" + std::to_string(c.num_chambers()) +
                                 " != " + std::to_string(per_edge) + "*" +
                                 std::to_string(c.num_edges()));
    rep.passed = rep.violations.empty();
    return rep;
}

struct ContinuationReport {
    int q = 0;
    std::vector<long long> forward, reverse;  // per edge
    bool passed = false;
};

// Geodesic continuation counts: every edge must have exactly q^2 forward and
// q^2 reverse continuations.  Requires a complex that passes validate();
// count failures abort with AxiomViolation naming the offending edges.
inline ContinuationReport continuation_counts(const TriangleComplex& c) {
    if (!validate(c).passed)
        throw PreconditionFailed("continuation_counts requires a complex passing validate");
    ContinuationReport rep;
    rep.q = c.q();
    const long long want = static_cast<long long>(c.q()) * c.q();
    rep.forward.assign(static_cast<size_t>(c.num_edges()), 0);
    rep.reverse.assign(static_cast<size_t>(c.num_edges()), 0);
    for (int e = 0; e < c.num_edges(); ++e)
        for (int f : c.out_edges(c.edge_head(e)))
            if (c.geodesic_continuation(e, f)) {
                ++rep.forward[static_cast<size_t>(e)];
                ++rep.reverse[static_cast<size_t>(f)];
            }
    std::string bad;
    for (int e = 0; e < c.num_edges(); ++e)
        if (rep.forward[static_cast<size_t>(e)] != want ||
            rep.reverse[static_cast<size_t>(e)] != want) {
            if (!bad.empty()) bad += ", ";
            bad += "'" + c.edges()[static_cast<size_t>(e)].id + "' (forward " +
                   std::to_string(rep.forward[static_cast<size_t>(e)]) + ", reverse " +
                   std::to_string(rep.reverse[static_cast<size_t>(e)]) + ")";
        }
    if (!bad.empty())
        throw AxiomViolation("edges with continuation count != q^2: " + bad);
    rep.passed = true;
    return rep;
}

}  // namespace a2zeta
