#pragma once

#include <algorithm>
#include <vector>

#include "funcdyn/maps/residue_map.hpp"

namespace funcdyn {

/// Functional graph of a map on P^1(k); node i is the affine point with encoding i, node #k is infinity.
struct FunctionalGraph {
    FieldSpec field;
    std::vector<elem_t> succ;
    std::vector<std::vector<elem_t>> cycles;  // each rotated to start at its smallest node
    std::vector<unsigned> tail_depth;         // steps until a periodic node is reached
    std::vector<long> cycle_of;               // cycle index for periodic nodes, -1 otherwise

    std::vector<std::size_t> cycle_lengths() const {
        std::vector<std::size_t> out;
        for (auto& c : cycles) out.push_back(c.size());
        std::sort(out.begin(), out.end());
        return out;
    }
    /// Exact period of a node's eventual cycle when the node is periodic, else 0.
    std::size_t period(elem_t node) const {
        return cycle_of[node] < 0 ? 0 : cycles[static_cast<std::size_t>(cycle_of[node])].size();
    }
};

inline FunctionalGraph reduced_graph(const ResidueMap& m) {
    if (m.resultant() == 0) fail(Errc::DegenerateResidueMap, "reduced map has vanishing resultant");
    FunctionalGraph g;
    g.field = m.field();
    const elem_t n = m.field().q() + 1;
    g.succ.resize(n);
    for (elem_t i = 0; i < n; ++i) g.succ[i] = m.evaluate(ResiduePoint::from_index(m.field(), i)).index();

    g.cycle_of.assign(n, -1);
    g.tail_depth.assign(n, 0);
    std::vector<std::uint8_t> state(n, 0);
    for (elem_t s = 0; s < n; ++s) {
        if (state[s]) continue;
        std::vector<elem_t> path;
        elem_t cur = s;
        while (state[cur] == 0) {
            state[cur] = 1;
            path.push_back(cur);
            cur = g.succ[cur];
        }
        if (state[cur] == 1) {
            auto at = std::find(path.begin(), path.end(), cur);
            std::vector<elem_t> cyc(at, path.end());
            std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
            for (auto c : cyc) g.cycle_of[c] = static_cast<long>(g.cycles.size());
            g.cycles.push_back(std::move(cyc));
            path.erase(at, path.end());
        }
        for (std::size_t k = path.size(); k-- > 0;) g.tail_depth[path[k]] = g.tail_depth[g.succ[path[k]]] + 1;
        for (auto p : path) state[p] = 2;
        for (auto& c : g.cycles)
            for (auto x : c) state[x] = 2;
    }
    std::sort(g.cycles.begin(), g.cycles.end());
    for (std::size_t i = 0; i < g.cycles.size(); ++i)
        for (auto x : g.cycles[i]) g.cycle_of[x] = static_cast<long>(i);
    return g;
}

}  // namespace funcdyn
