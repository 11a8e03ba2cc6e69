#pragma once

// Hand-built test complexes, constructed directly from closed-form data so
// they are independent of the generator under test.

#include <string>
#include <vector>

#include "a2zeta/complex.hpp"

namespace a2zeta_test {

// Type cover over the Fano plane from the perfect difference set {1,2,4}
// mod 7: lambda(x) = {x+1, x+2, x+4}, and the point triples are the cyclic
// rotations of (x, x+1, x+3) for x in Z/7.  One checks by hand that for
// every x and every y on lambda(x) there is a unique completing z.
// Vertices v0,v1,v2; edges e(x,i): v_i -> v_{i+1} per point x; for each
// triple-class representative and each rotation i one chamber whose slot-k
// edge is e(class[(k-i) mod 3], k).
inline a2zeta::TriangleComplex make_fano_cover() {
    using namespace a2zeta;
    std::vector<VertexSpec> vs;
    for (int i = 0; i < 3; ++i) vs.push_back({"v" + std::to_string(i), i});
    auto eid = [](int x, int i) { return "e" + std::to_string(x) + "_" + std::to_string(i); };
    std::vector<EdgeSpec> es;
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < 7; ++x)
            es.push_back({eid(x, i), "v" + std::to_string(i), "v" + std::to_string((i + 1) % 3)});
    std::vector<ChamberSpec> cs;
    for (int x = 0; x < 7; ++x) {
        const int cls[3] = {x, (x + 1) % 7, (x + 3) % 7};
        for (int i = 0; i < 3; ++i) {
            ChamberSpec c;
            c.id = "c" + std::to_string(x) + "_" + std::to_string(i);
            for (int k = 0; k < 3; ++k)
                c.edges[static_cast<size_t>(k)] = eid(cls[((k - i) % 3 + 3) % 3], k);
            cs.push_back(c);
        }
    }
    return TriangleComplex(2, vs, es, cs);
}

// The same cover with edge e0_0 and the three chambers through it removed.
// The result still constructs but fails validate(): v0 loses an out-edge,
// v1 an in-edge, and six surviving edges drop to two chambers each.
inline a2zeta::TriangleComplex make_fano_cover_without_edge() {
    using namespace a2zeta;
    TriangleComplex full = make_fano_cover();
    std::vector<EdgeSpec> es;
    for (const auto& e : full.edges())
        if (e.id != "e0_0") es.push_back(e);
    std::vector<ChamberSpec> cs;
    for (const auto& ch : full.chambers()) {
        bool hit = false;
        for (const auto& e : ch.edges)
            if (e == "e0_0") hit = true;
        if (!hit) cs.push_back(ch);
    }
    return TriangleComplex(2, full.vertices(), es, cs);
}

}  // namespace a2zeta_test
