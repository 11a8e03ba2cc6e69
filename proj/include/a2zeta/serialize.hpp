#pragma once

// Canonical JSON serialization for complexes and presentations.  Writers
// emit a fixed key order and 2-space indentation so that identical inputs
// produce byte-identical files; load(save(x)) is the identity on canonical
// form.  Structural rule violations surface as TypeRuleViolation or
// DanglingReference (from complex construction); everything about the file
// itself (unreadable, malformed, missing or mistyped fields) is ParseError
// with an element-precise location.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "a2zeta/complex.hpp"
#include "a2zeta/errors.hpp"
#include "a2zeta/presentation.hpp"

namespace a2zeta {

namespace detail {

using Json = nlohmann::ordered_json;

inline Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "' for reading");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError("'" + path + "': " + ex.what());
    }
}

inline void write_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw PreconditionFailed("cannot open '" + path + "' for writing");
    out << j.dump(2) << "\n";
    if (!out) throw PreconditionFailed("failed writing '" + path + "'");
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

inline std::string str_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_string()) throw ParseError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

inline long long int_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_integer()) throw ParseError(where + ": field '" + key + "' must be an integer");
    return v.get<long long>();
}

}  // namespace detail

inline detail::Json complex_to_json(const TriangleComplex& c) {
    detail::Json j;
    j["q"] = c.q();
    j["vertices"] = detail::Json::array();
    for (const auto& v : c.vertices()) j["vertices"].push_back({{"id", v.id}, {"type", v.type}});
    j["edges"] = detail::Json::array();
    for (const auto& e : c.edges())
        j["edges"].push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    j["chambers"] = detail::Json::array();
    for (const auto& ch : c.chambers())
        j["chambers"].push_back(
            {{"id", ch.id}, {"edges", {ch.edges[0], ch.edges[1], ch.edges[2]}}});
    return j;
}

inline void save_complex(const TriangleComplex& c, const std::string& path) {
    detail::write_file(path, complex_to_json(c));
}

inline TriangleComplex load_complex(const std::string& path) {
    const detail::Json j = detail::parse_file(path);
    if (!j.is_object()) throw ParseError("'" + path + "': top level must be an object");
    const long long q = detail::int_field(j, "q", "'" + path + "'");

    std::vector<VertexSpec> vs;
    const detail::Json& jv = detail::field(j, "vertices", "'" + path + "'");
    if (!jv.is_array()) throw ParseError("'" + path + "': 'vertices' must be an array");
    for (size_t i = 0; i < jv.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        if (!jv[i].is_object()) throw ParseError(where + ": must be an object");
        VertexSpec v;
        v.id = detail::str_field(jv[i], "id", where);
        v.type = static_cast<int>(detail::int_field(jv[i], "type", where));
        vs.push_back(std::move(v));
    }

    std::vector<EdgeSpec> es;
    const detail::Json& je = detail::field(j, "edges", "'" + path + "'");
    if (!je.is_array()) throw ParseError("'" + path + "': 'edges' must be an array");
    for (size_t i = 0; i < je.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!je[i].is_object()) throw ParseError(where + ": must be an object");
        EdgeSpec e;
        e.id = detail::str_field(je[i], "id", where);
        e.tail = detail::str_field(je[i], "tail", where);
        e.head = detail::str_field(je[i], "head", where);
        es.push_back(std::move(e));
    }

    std::vector<ChamberSpec> cs;
    const detail::Json& jc = detail::field(j, "chambers", "'" + path + "'");
    if (!jc.is_array()) throw ParseError("'" + path + "': 'chambers' must be an array");
    for (size_t i = 0; i < jc.size(); ++i) {
        const std::string where = "chambers[" + std::to_string(i) + "]";
        if (!jc[i].is_object()) throw ParseError(where + ": must be an object");
        ChamberSpec ch;
        ch.id = detail::str_field(jc[i], "id", where);
        const detail::Json& ed = detail::field(jc[i], "edges", where);
        if (!ed.is_array() || ed.size() != 3)
            throw ParseError(where + ": 'edges' must be an array of 3 edge ids");
        for (int k = 0; k < 3; ++k) {
            if (!ed[static_cast<size_t>(k)].is_string())
                throw ParseError(where + ": 'edges' entries must be strings");
            ch.edges[static_cast<size_t>(k)] = ed[static_cast<size_t>(k)].get<std::string>();
        }
        cs.push_back(std::move(ch));
    }

    return TriangleComplex(static_cast<int>(q), std::move(vs), std::move(es), std::move(cs));
}

inline void save_presentation(const TrianglePresentation& p, const std::string& path) {
    detail::Json j;
    j["q"] = p.q;
    j["lambda"] = detail::Json::array();
    for (size_t x = 0; x < p.lambda.size(); ++x)
        j["lambda"].push_back({static_cast<long long>(x), p.lambda[x]});
    j["triples"] = detail::Json::array();
    for (const auto& t : p.triples) j["triples"].push_back({t[0], t[1], t[2]});
    detail::write_file(path, j);
}

inline TrianglePresentation load_presentation(const std::string& path) {
    const detail::Json j = detail::parse_file(path);
    if (!j.is_object()) throw ParseError("'" + path + "': top level must be an object");
    TrianglePresentation p;
    p.q = static_cast<int>(detail::int_field(j, "q", "'" + path + "'"));

    const detail::Json& jl = detail::field(j, "lambda", "'" + path + "'");
    if (!jl.is_array()) throw ParseError("'" + path + "': 'lambda' must be an array");
    std::vector<std::pair<long long, long long>> pairs;
    long long max_pt = -1;
    for (size_t i = 0; i < jl.size(); ++i) {
        const std::string where = "lambda[" + std::to_string(i) + "]";
        if (!jl[i].is_array() || jl[i].size() != 2 || !jl[i][0].is_number_integer() ||
            !jl[i][1].is_number_integer())
            throw ParseError(where + ": must be a [point, line] integer pair");
        pairs.emplace_back(jl[i][0].get<long long>(), jl[i][1].get<long long>());
        max_pt = std::max(max_pt, pairs.back().first);
    }
    if (static_cast<long long>(pairs.size()) != max_pt + 1)
        throw ParseError("'" + path + "': 'lambda' must cover points 0..n-1 exactly once");
    p.lambda.assign(pairs.size(), -1);
    for (size_t i = 0; i < pairs.size(); ++i) {
        const auto& [pt, ln] = pairs[i];
        if (pt < 0 || pt >= static_cast<long long>(pairs.size()) ||
            p.lambda[static_cast<size_t>(pt)] != -1)
            throw ParseError("lambda[" + std::to_string(i) +
                             "]: point indices must cover 0..n-1 exactly once");
        p.lambda[static_cast<size_t>(pt)] = static_cast<int>(ln);
    }

    const detail::Json& jt = detail::field(j, "triples", "'" + path + "'");
    if (!jt.is_array()) throw ParseError("'" + path + "': 'triples' must be an array");
    for (size_t i = 0; i < jt.size(); ++i) {
        const std::string where = "triples[" + std::to_string(i) + "]";
        if (!jt[i].is_array() || jt[i].size() != 3 || !jt[i][0].is_number_integer() ||
            !jt[i][1].is_number_integer() || !jt[i][2].is_number_integer())
            throw ParseError(where + ": must be an [i, j, k] integer triple");
        p.triples.push_back({jt[i][0].get<int>(), jt[i][1].get<int>(), jt[i][2].get<int>()});
    }
    return p;
}

}  // namespace a2zeta
