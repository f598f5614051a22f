#pragma once

#include <set>
#include <vector>

#include "funcdyn/dynamics/orbit.hpp"
#include "funcdyn/projective.hpp"

namespace funcdyn {

struct DeltaTable {
    Place place;
    std::vector<std::vector<Valuation>> delta;  // indexed like FiniteOrbitReport::points
};

struct FiniteOrbitReport {
    std::vector<ProjPoint> points;  // tail then cycle, in orbit order
    std::size_t n = 0;              // cycle length
    std::size_t tail = 0;           // number of tail points
    // phi^n-orbits partitioning the points; each chain is P_{-m+1}, ..., P_{-1}, P_0 with P_0 fixed by phi^n.
    std::vector<std::vector<ProjPoint>> chains;
    std::vector<Place> support;  // places with some positive pairwise distance
    std::vector<DeltaTable> tables;
    // Reductions of the tail points at good places of the support.
    std::vector<std::pair<Place, std::vector<ResiduePoint>>> tail_reductions;

    std::size_t size() const { return points.size(); }
};

/// Positions 0..T+n-1 split by residue mod n; each class runs through the tail into one cycle point.
inline std::vector<std::vector<std::size_t>> phi_n_chains(std::size_t tail, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t r = 0; r < n; ++r) {
        std::vector<std::size_t> chain;
        std::size_t i = r;
        for (; i < tail; i += n) chain.push_back(i);
        chain.push_back(i);
        out.push_back(std::move(chain));
    }
    return out;
}

/// Union of distance supports over all pairs of distinct points.
inline std::vector<Place> pairwise_support(const std::vector<ProjPoint>& pts) {
    std::vector<Place> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (auto& pd : distance_support(pts[i], pts[j]))
                if (std::find(out.begin(), out.end(), pd.place) == out.end()) out.push_back(pd.place);
    std::sort(out.begin(), out.end());
    return out;
}

inline FiniteOrbitReport finite_orbit_analyze(const RationalMap& phi, const OrbitRecord& orb) {
    if (!orb.closed()) fail(Errc::NotClosed, "orbit did not close");
    FiniteOrbitReport r;
    r.points = orb.points();
    r.n = orb.cycle.size();
    r.tail = orb.transient.size();
    for (auto& chain : phi_n_chains(r.tail, r.n)) {
        std::vector<ProjPoint> c;
        for (auto i : chain) c.push_back(r.points[i]);
        r.chains.push_back(std::move(c));
    }
    r.support = pairwise_support(r.points);
    for (auto& pl : r.support) {
        DeltaTable t{pl, std::vector<std::vector<Valuation>>(r.size(), std::vector<Valuation>(r.size()))};
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t j = 0; j < r.size(); ++j) t.delta[i][j] = log_distance(r.points[i], r.points[j], pl);
        r.tables.push_back(std::move(t));
        if (phi.has_good_reduction(pl) && r.tail > 0) {
            std::vector<ResiduePoint> red;
            for (std::size_t i = 0; i < r.tail; ++i) red.push_back(reduce_point(r.points[i], pl));
            r.tail_reductions.emplace_back(pl, std::move(red));
        }
    }
    return r;
}

}  // namespace funcdyn
