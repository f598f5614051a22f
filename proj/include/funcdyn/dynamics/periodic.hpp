#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "funcdyn/dynamics/orbit.hpp"
#include "funcdyn/projective.hpp"

namespace funcdyn {

struct PeriodicPoint {
    ProjPoint point;
    unsigned period = 0;
    friend bool operator==(const PeriodicPoint& a, const PeriodicPoint& b) {
        return a.point == b.point && a.period == b.period;
    }
    friend bool operator<(const PeriodicPoint& a, const PeriodicPoint& b) { return a.point < b.point; }
};

struct IntegralPeriodicPoints {
    std::vector<PeriodicPoint> affine;  // sorted by point
    PeriodicPoint infinity;             // always fixed for polynomial maps
};

namespace detail {

// p(q(X)) for polynomials in X with coefficients in F_q[t].
inline std::vector<FqPoly> compose_x(const std::vector<FqPoly>& p, const std::vector<FqPoly>& q) {
    const FieldSpec& f = p[0].field();
    std::vector<FqPoly> r{p.back()};
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        std::vector<FqPoly> next(r.size() + q.size() - 1, FqPoly(f));
        for (std::size_t a = 0; a < r.size(); ++a) {
            if (r[a].is_zero()) continue;
            for (std::size_t b = 0; b < q.size(); ++b)
                if (!q[b].is_zero()) next[a + b] += r[a] * q[b];
        }
        next[0] += p[i];
        r = std::move(next);
    }
    return r;
}

// Monic divisors of f (nonzero) with degree <= cap.
inline std::vector<FqPoly> monic_divisors(const FqPoly& f, long cap, std::uint64_t seed) {
    const FieldSpec& K = f.field();
    std::vector<FqPoly> out{FqPoly::one(K)};
    if (f.deg() <= 0) return out;
    for (auto& [p, m] : factorize(f, seed).factors) {
        const std::size_t n = out.size();
        for (std::size_t i = 0; i < n; ++i) {
            FqPoly acc = out[i];
            for (unsigned e = 1; e <= m; ++e) {
                acc = acc * p;
                if (acc.deg() > cap) break;
                out.push_back(acc);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool returns_within(const RationalMap& phi, const ProjPoint& x, unsigned n, std::optional<long> cap) {
    ProjPoint cur = x;
    for (unsigned i = 0; i < n; ++i) {
        cur = phi.evaluate(cur);
        if (cap && cur.height() > *cap) return false;
    }
    return cur == x;
}

inline unsigned exact_period(const RationalMap& phi, const ProjPoint& x, unsigned limit) {
    ProjPoint cur = x;
    for (unsigned k = 1; k <= limit; ++k) {
        cur = phi.evaluate(cur);
        if (cur == x) return k;
    }
    return 0;
}

}  // namespace detail

/// Periodic points in F_q(t) of a polynomial map with constant nonzero leading coefficient.
///
/// For n = 1..q forms psi_n(X) = phi^n(X) - X over F_q[t], strips the root 0, and tests every
/// (monic divisor of the constant term) x (unit) as a root. Divisors above the escape height
/// are skipped since no preperiodic point can have larger degree.
inline IntegralPeriodicPoints periodic_points_integral(const RationalMap& phi, std::uint64_t seed = 0) {
    if (!phi.is_unit_leading_polynomial())
        fail(Errc::NotUnitLeadingPolynomial, "expected a polynomial with leading coefficient in F_q^*");
    if (phi.degree() == 1) fail(Errc::InfinitePeriodicSet, "a unit-leading linear map has finite order: every point is periodic");
    const FieldSpec& K = phi.field();
    const unsigned q = K.q();
    const long cap = *escape_height(phi);
    const auto& c = phi.F();
    std::vector<FqPoly> iter = c;
    std::set<ProjPoint> found;
    for (unsigned n = 1; n <= q; ++n) {
        if (n > 1) iter = detail::compose_x(c, iter);
        std::vector<FqPoly> psi = iter;
        psi[1] -= FqPoly::one(K);
        std::size_t s = 0;
        while (psi[s].is_zero()) ++s;
        std::vector<ProjPoint> cand;
        if (s > 0) cand.push_back(ProjPoint::affine(FqPoly(K)));
        for (auto& dv : detail::monic_divisors(psi[s], cap, seed))
            for (elem_t u = 1; u < q; ++u) cand.push_back(ProjPoint::affine(dv.scale(u)));
        for (auto& x : cand)
            if (!found.count(x) && detail::returns_within(phi, x, n, cap)) found.insert(x);
    }
    IntegralPeriodicPoints out;
    for (auto& x : found) out.affine.push_back({x, detail::exact_period(phi, x, q)});
    out.infinity = {ProjPoint::infinity(K), 1};
    return out;
}

/// Rotation of a cycle that starts at its smallest point.
inline std::vector<ProjPoint> canonical_rotation(std::vector<ProjPoint> cyc) {
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    return cyc;
}

struct SearchBudget {
    std::size_t max_steps = 10000;
    long max_degree = 64;
};

/// The part of the dynamics reachable from a box of starting points.
struct BoxDynamics {
    enum class Fate : std::uint8_t { Periodic, Preperiodic, Escaped, Unknown };

    std::vector<ProjPoint> nodes;
    std::vector<long> succ;  // -1 when not computed (escaped or budget exhausted)
    std::vector<Fate> fate;
    std::vector<std::vector<std::size_t>> cycles;  // node indices, canonical rotation
    std::size_t starts = 0;                        // nodes [0, starts) are the box

    /// Closed forward orbit of a node (which must not be Escaped/Unknown).
    OrbitRecord orbit_of(std::size_t i) const {
        OrbitRecord rec;
        rec.start = nodes[i];
        std::vector<std::size_t> seq;
        std::unordered_map<std::size_t, std::size_t> pos;
        std::size_t cur = i;
        while (!pos.count(cur)) {
            pos[cur] = seq.size();
            seq.push_back(cur);
            cur = static_cast<std::size_t>(succ[cur]);
        }
        for (std::size_t k = 0; k < seq.size(); ++k)
            (k < pos[cur] ? rec.transient : rec.cycle).push_back(nodes[seq[k]]);
        rec.status = OrbitRecord::Status::Closed;
        return rec;
    }
};

/// Runs every point of degree <= B forward, sharing work between orbits.
inline BoxDynamics explore_box(const RationalMap& phi, long B, const SearchBudget& budget = {}) {
    BoxDynamics bx;
    std::unordered_map<ProjPoint, std::size_t, ProjPointHash> index;
    auto node = [&](const ProjPoint& p) {
        auto [it, inserted] = index.emplace(p, bx.nodes.size());
        if (inserted) {
            bx.nodes.push_back(p);
            bx.succ.push_back(-1);
            bx.fate.push_back(BoxDynamics::Fate::Unknown);
        }
        return it->second;
    };
    for (auto& p : enumerate_points(phi.field(), B)) node(p);
    bx.starts = bx.nodes.size();
    const auto cert = escape_height(phi);
    std::vector<std::uint8_t> state(bx.nodes.size(), 0);  // 0 new, 1 on current path, 2 resolved
    std::vector<std::size_t> path;
    for (std::size_t s = 0; s < bx.starts; ++s) {
        if (state[s] == 2) continue;
        path.clear();
        std::size_t cur = s;
        bool stopped = false;
        BoxDynamics::Fate stop_fate = BoxDynamics::Fate::Unknown;
        while (state[cur] == 0) {
            state[cur] = 1;
            path.push_back(cur);
            const long h = bx.nodes[cur].height();
            if (cert && h > *cert) {
                stopped = true;
                stop_fate = BoxDynamics::Fate::Escaped;
                break;
            }
            if (h > budget.max_degree || path.size() > budget.max_steps) {
                stopped = true;
                break;
            }
            const ProjPoint next = phi.evaluate(bx.nodes[cur]);
            const std::size_t ni = node(next);
            if (ni >= state.size()) state.resize(ni + 1, 0);
            bx.succ[cur] = static_cast<long>(ni);
            cur = ni;
        }
        BoxDynamics::Fate tail_fate = stop_fate;
        if (!stopped) {
            if (state[cur] == 1) {
                auto at = std::find(path.begin(), path.end(), cur);
                std::vector<std::size_t> cyc(at, path.end());
                for (auto c : cyc) bx.fate[c] = BoxDynamics::Fate::Periodic;
                auto mn = std::min_element(cyc.begin(), cyc.end(),
                                           [&](std::size_t a, std::size_t b) { return bx.nodes[a] < bx.nodes[b]; });
                std::rotate(cyc.begin(), mn, cyc.end());
                bx.cycles.push_back(std::move(cyc));
                tail_fate = BoxDynamics::Fate::Preperiodic;
            } else {
                const auto f = bx.fate[cur];
                tail_fate = (f == BoxDynamics::Fate::Periodic || f == BoxDynamics::Fate::Preperiodic)
                                ? BoxDynamics::Fate::Preperiodic
                                : f;
            }
        }
        for (auto p : path) {
            if (bx.fate[p] != BoxDynamics::Fate::Periodic) bx.fate[p] = tail_fate;
            state[p] = 2;
        }
    }
    std::sort(bx.cycles.begin(), bx.cycles.end(), [&](const auto& a, const auto& b) {
        return bx.nodes[a[0]] < bx.nodes[b[0]];
    });
    return bx;
}

/// Every cycle through a point of degree <= B, as canonical rotations.
inline std::vector<std::vector<ProjPoint>> find_cycles_bounded(const RationalMap& phi, long B,
                                                               const SearchBudget& budget = {}) {
    const BoxDynamics bx = explore_box(phi, B, budget);
    std::vector<std::vector<ProjPoint>> out;
    for (auto& c : bx.cycles) {
        std::vector<ProjPoint> cyc;
        for (auto i : c) cyc.push_back(bx.nodes[i]);
        out.push_back(std::move(cyc));
    }
    return out;
}

struct OracleMatch {
    bool match = true;
    std::vector<ProjPoint> only_integral;  // reported by periodic_points_integral but not found in the box
    std::vector<ProjPoint> only_search;    // found by search but not reported
};

/// Cross-validates periodic_points_integral against find_cycles_bounded on points of degree <= B.
inline OracleMatch periodic_oracle_match(const RationalMap& phi, long B, const SearchBudget& budget = {}) {
    const auto integral = periodic_points_integral(phi);
    std::set<ProjPoint> a, b;
    for (auto& pp : integral.affine)
        if (pp.point.height() <= B) a.insert(pp.point);
    for (auto& cyc : find_cycles_bounded(phi, B, budget))
        for (auto& p : cyc)
            if (!p.is_infinity() && p.height() <= B) b.insert(p);
    OracleMatch m;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(m.only_integral));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(m.only_search));
    m.match = m.only_integral.empty() && m.only_search.empty();
    return m;
}

}  // namespace funcdyn
