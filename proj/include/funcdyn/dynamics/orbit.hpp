#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "funcdyn/maps/rational_map.hpp"

namespace funcdyn {

/// Height beyond which an orbit provably escapes.
///
/// With D the largest coefficient degree, h(phi(P)) >= d h(P) - (2d-1) D, where h is the
/// max coordinate degree of coprime coordinates. Hence every preperiodic point has
/// h <= (2d-1) D / (d-1), and orbits past that height grow strictly. None for d = 1.
inline std::optional<long> escape_height(const RationalMap& phi) {
    const long d = phi.degree();
    if (d < 2) return std::nullopt;
    return ((2 * d - 1) * std::max(0L, phi.coeff_degree())) / (d - 1);
}

struct OrbitRecord {
    enum class Status { Closed, EscapedBudget, EscapedDegree, EscapedCertified };

    ProjPoint start;
    std::vector<ProjPoint> transient;  // tail, in orbit order
    std::vector<ProjPoint> cycle;      // starting at the first periodic point reached
    Status status = Status::EscapedBudget;

    bool closed() const { return status == Status::Closed; }
    std::size_t size() const { return transient.size() + cycle.size(); }
    std::vector<ProjPoint> points() const {
        std::vector<ProjPoint> all(transient);
        all.insert(all.end(), cycle.begin(), cycle.end());
        return all;
    }
};

inline std::string status_name(OrbitRecord::Status s) {
    switch (s) {
        case OrbitRecord::Status::Closed: return "closed";
        case OrbitRecord::Status::EscapedBudget: return "escaped(budget)";
        case OrbitRecord::Status::EscapedDegree: return "escaped(degree)";
        case OrbitRecord::Status::EscapedCertified: return "escaped(height certificate)";
    }
    return "?";
}

/// Forward orbit with cycle detection.
///
/// Stops as Escaped once max_steps points have been produced, once a coordinate degree
/// exceeds max_degree, or once the height passes the escape certificate.
inline OrbitRecord orbit(const RationalMap& phi, const ProjPoint& P, std::size_t max_steps = 10000,
                         long max_degree = 64) {
    if (max_steps == 0) fail(Errc::UsageError, "max_steps must be at least 1");
    OrbitRecord rec;
    rec.start = P;
    const auto cert = escape_height(phi);
    std::unordered_map<ProjPoint, std::size_t, ProjPointHash> seen;
    std::vector<ProjPoint> seq;
    ProjPoint cur = P;
    for (;;) {
        auto it = seen.find(cur);
        if (it != seen.end()) {
            rec.transient.assign(seq.begin(), seq.begin() + static_cast<long>(it->second));
            rec.cycle.assign(seq.begin() + static_cast<long>(it->second), seq.end());
            rec.status = OrbitRecord::Status::Closed;
            return rec;
        }
        if (cert && cur.height() > *cert) {
            rec.status = OrbitRecord::Status::EscapedCertified;
            rec.transient = std::move(seq);
            return rec;
        }
        if (cur.height() > max_degree) {
            rec.status = OrbitRecord::Status::EscapedDegree;
            rec.transient = std::move(seq);
            return rec;
        }
        if (seq.size() >= max_steps) {
            rec.status = OrbitRecord::Status::EscapedBudget;
            rec.transient = std::move(seq);
            return rec;
        }
        seen.emplace(cur, seq.size());
        seq.push_back(cur);
        cur = phi.evaluate(cur);
    }
}

}  // namespace funcdyn
