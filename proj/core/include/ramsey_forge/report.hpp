#pragma once

#include <json.hpp>

#include "ramsey_forge/bitset.hpp"
#include "ramsey_forge/graph.hpp"
#include "ramsey_forge/rational.hpp"

namespace rf {

using Json = nlohmann::ordered_json;

// Certificates serialize rationals as {"num","den"} strings so reports
// stay exact and byte-stable regardless of magnitude.
inline Json to_json(const Rational& r) {
    return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

inline Json to_json(const VertexSet& s) {
    Json arr = Json::array();
    for (int v : s.to_vector()) arr.push_back(v);
    return arr;
}

inline std::string hex_digest(uint64_t d) {
    static const char* k = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, d >>= 4) s[size_t(i)] = k[d & 15];
    return s;
}

inline Json graph_summary(const Graph& g) {
    return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"digest", hex_digest(g.digest())}};
}

}  // namespace rf
