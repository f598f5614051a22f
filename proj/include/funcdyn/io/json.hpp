#pragma once

#include <string>
#include <vector>

#include "funcdyn/dynamics/orbit.hpp"
#include "funcdyn/dynamics/periodic.hpp"
#include "funcdyn/maps/rational_map.hpp"
#include "funcdyn/verify/report.hpp"

namespace funcdyn {

inline json field_to_json(const FieldSpec& f) {
    json j{{"q", f.q()}, {"p", f.p()}, {"k", f.k()}};
    if (f.k() > 1) j["modulus"] = FqPoly(make_field(f.p()), f.modulus()).to_string(f.symbol());
    return j;
}

/// {degree, F, G, resultant, bad_places} with coefficients of X^i Y^(d-i) listed by i.
inline json map_to_json(const RationalMap& phi) {
    auto coeffs = [](const Form& H) {
        json a = json::array();
        for (auto& c : H) a.push_back(c.to_string());
        return a;
    };
    json bad = json::array();
    for (auto& pl : phi.bad_places()) bad.push_back(pl.to_string());
    return {{"literal", phi.to_string()},
            {"affine", phi.to_affine_string()},
            {"degree", phi.degree()},
            {"coeff_degree", phi.coeff_degree()},
            {"F", coeffs(phi.F())},
            {"G", coeffs(phi.G())},
            {"resultant", phi.resultant().to_string()},
            {"bad_places", bad}};
}

inline json points_to_json(const std::vector<ProjPoint>& pts) {
    json a = json::array();
    for (auto& p : pts) a.push_back(p.to_string());
    return a;
}

inline json orbit_to_json(const OrbitRecord& o) {
    json j{{"start", o.start.to_string()},
           {"status", status_name(o.status)},
           {"tail", points_to_json(o.transient)},
           {"cycle", points_to_json(o.cycle)}};
    if (o.closed()) {
        j["tail_length"] = o.transient.size();
        j["cycle_length"] = o.cycle.size();
    }
    return j;
}

inline json cycles_to_json(const std::vector<std::vector<ProjPoint>>& cycles) {
    json a = json::array();
    for (auto& c : cycles) a.push_back({{"length", c.size()}, {"points", points_to_json(c)}});
    return a;
}

inline json periodic_to_json(const IntegralPeriodicPoints& pp) {
    json a = json::array();
    for (auto& x : pp.affine) a.push_back({{"point", x.point.to_string()}, {"period", x.period}});
    return {{"affine", a}, {"count", pp.affine.size()}, {"infinity_period", pp.infinity.period}};
}

}  // namespace funcdyn
