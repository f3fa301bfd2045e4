#pragma once

#include <json.hpp>

#include "sllt/poly.hpp"
#include "sllt/shapes.hpp"

namespace sllt {

using json = nlohmann::ordered_json;

// MPoly <-> canonical JSON: sorted array of {"coeff": "p/q", "exps": [[var, e], ...]}.
// Round-trips bit-exactly: term order is the canonical monomial order and
// exponent entries follow the canonical variable order.
inline json poly_to_json(const MPoly& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::array();
        for (const auto& [v, e] : m.entries()) exps.push_back({var_name(v), e});
        arr.push_back({{"coeff", rational_str(c)}, {"exps", exps}});
    }
    return arr;
}

inline MPoly poly_from_json(const json& j) {
    MPoly p;
    for (const auto& t : j) {
        Monomial m;
        for (const auto& ve : t.at("exps"))
            m = m.times(Monomial::variable(var_from_name(ve.at(0).get<std::string>()),
                                           ve.at(1).get<int>()));
        p += MPoly::term(m, rational_from_str(t.at("coeff").get<std::string>()));
    }
    return p;
}

inline json partition_to_json(const Partition& p) {
    return json(p.parts());
}

inline Partition partition_from_json(const json& j) {
    return Partition(j.get<std::vector<int>>());
}

inline json skew_to_json(const SkewShape& s) {
    return json{{"outer", partition_to_json(s.outer)}, {"inner", partition_to_json(s.inner)}};
}

inline SkewShape skew_from_json(const json& j) {
    return SkewShape(partition_from_json(j.at("outer")), partition_from_json(j.at("inner")));
}

}  // namespace sllt
