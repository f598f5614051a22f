#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "funcdyn/dynamics/finite_orbit.hpp"
#include "funcdyn/dynamics/graph.hpp"
#include "funcdyn/dynamics/periodic.hpp"
#include "funcdyn/maps/conjugacy.hpp"
#include "funcdyn/verify/report.hpp"

namespace funcdyn {

namespace detail {

inline json points_json(const std::vector<ProjPoint>& pts) {
    json a = json::array();
    for (auto& p : pts) a.push_back(p.to_string());
    return a;
}

inline std::string describe(const RationalMap& phi, const std::vector<ProjPoint>& pts) {
    std::string s = phi.to_string() + " on {";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + pts[i].to_string();
    return s + "}";
}

inline void require_cycle(const RationalMap& phi, const std::vector<ProjPoint>& cycle) {
    if (cycle.empty()) fail(Errc::NotACycle, "empty cycle");
    std::set<ProjPoint> seen(cycle.begin(), cycle.end());
    if (seen.size() != cycle.size()) fail(Errc::NotACycle, "cycle repeats a point");
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (phi.evaluate(cycle[i]) != cycle[(i + 1) % cycle.size()])
            fail(Errc::NotACycle, "phi(" + cycle[i].to_string() + ") is not the next point of the cycle");
}

/// Every place where some pairwise distance can be positive, plus all places of degree <= max_degree
/// (infinity included). Outside this set every distance between the points vanishes.
inline std::vector<Place> coverage_places(const std::vector<ProjPoint>& pts, unsigned max_degree = 2) {
    std::vector<Place> out = places_up_to(pts.empty() ? FieldSpec{} : pts[0].field(), max_degree);
    for (auto& pl : pairwise_support(pts))
        if (std::find(out.begin(), out.end(), pl) == out.end()) out.push_back(pl);
    std::sort(out.begin(), out.end());
    return out;
}

struct PairMismatch {
    std::pair<std::size_t, std::size_t> first, second;
    Valuation d1, d2;
};

// First pair whose distance differs from that of the pair (0, 1).
inline std::optional<PairMismatch> unequal_distances(const std::vector<ProjPoint>& pts, const Place& pl) {
    if (pts.size() < 3) return std::nullopt;
    const Valuation ref = log_distance(pts[0], pts[1], pl);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Valuation v = log_distance(pts[i], pts[j], pl);
            if (v != ref) return PairMismatch{{0, 1}, {i, j}, ref, v};
        }
    return std::nullopt;
}

inline json mismatch_json(const std::vector<ProjPoint>& pts, const Place& pl, const PairMismatch& m) {
    return {{"place", pl.to_string()},
            {"pair_a", {pts[m.first.first].to_string(), pts[m.first.second].to_string()}},
            {"delta_a", m.d1.to_string()},
            {"pair_b", {pts[m.second.first].to_string(), pts[m.second.second].to_string()}},
            {"delta_b", m.d2.to_string()}};
}

// Smallest residue field among good places; one exists of degree 1 whenever #bad <= 1.
inline std::uint64_t min_good_residue(const RationalMap& phi) {
    std::uint64_t best = 0;
    for (auto& pl : places_up_to(phi.field(), 1))
        if (phi.has_good_reduction(pl) && (best == 0 || pl.residue_size() < best)) best = pl.residue_size();
    return best;
}

inline json conjugacy_json(const ConjugacyResult& c) {
    static const char* kinds[] = {"small_set", "conjugate", "inapplicable", "failed"};
    json j{{"kind", kinds[static_cast<int>(c.kind)]},
           {"polynomial_case", c.polynomial_case},
           {"set_size", c.set_size},
           {"threshold", c.threshold}};
    if (c.kind == ConjugacyResult::Kind::Conjugate) {
        j["extension_q"] = c.extension.q();
        j["mu"] = c.mu->to_string();
        j["psi"] = c.psi->to_string();
    }
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

// Runs conjugacy detection, turning hypothesis failures into a Failed result.
inline ConjugacyResult try_conjugacy(const RationalMap& phi, const std::vector<ProjPoint>& pts,
                                     std::vector<std::size_t> subset = {}) {
    try {
        return detect_constant_field_conjugacy(phi, pts, std::move(subset));
    } catch (const Error& e) {
        ConjugacyResult r;
        r.kind = ConjugacyResult::Kind::Failed;
        r.note = e.what();
        return r;
    }
}

}  // namespace detail

/// Pairwise distances along a cycle agree at every good place (maps with at most one bad place).
inline VerificationReport check_equidistance(const RationalMap& phi, const std::vector<ProjPoint>& cycle) {
    auto r = make_report("equidistance", detail::describe(phi, cycle));
    detail::require_cycle(phi, cycle);
    r.stats["n"] = cycle.size();
    if (phi.bad_places().size() > 1) {
        r.not_applicable("map has more than one place of bad reduction");
        return r;
    }
    if (cycle.size() < 2) {
        r.not_applicable("a fixed point has no pairs");
        return r;
    }
    std::size_t checked = 0;
    json nonzero = json::array();
    for (auto& pl : detail::coverage_places(cycle)) {
        if (!phi.has_good_reduction(pl)) continue;
        ++checked;
        if (auto m = detail::unequal_distances(cycle, pl)) {
            r.fail_with("distances differ at " + pl.to_string(), detail::mismatch_json(cycle, pl, *m));
            return r;
        }
        const Valuation v = log_distance(cycle[0], cycle[1], pl);
        if (v != Valuation(0)) nonzero.push_back({{"place", pl.to_string()}, {"delta", v.to_string()}});
    }
    r.stats["places_checked"] = checked;
    r.stats["nonzero_distances"] = nonzero;
    return r;
}

/// n <= q + 1, n <= #k(pi) + 1 at good places, and n <= 2d unless phi is conjugate to a map over a finite field.
inline VerificationReport check_cycle_bounds(const RationalMap& phi, const std::vector<ProjPoint>& cycle) {
    auto r = make_report("cycle-bounds", detail::describe(phi, cycle));
    detail::require_cycle(phi, cycle);
    const std::size_t n = cycle.size();
    const unsigned q = phi.field().q(), d = phi.degree();
    r.stats["n"] = n;
    if (phi.bad_places().size() > 1) {
        r.not_applicable("map has more than one place of bad reduction");
        return r;
    }
    // For K = F_q(t) the constant p^D of the general bound is q.
    r.stats["q_plus_1"] = q + 1;
    r.stats["equality_q_plus_1"] = n == q + 1;
    if (n > q + 1) {
        r.fail_with("cycle longer than q + 1", {{"cycle", detail::points_json(cycle)}, {"bound", q + 1}});
        return r;
    }
    const std::uint64_t kmin = detail::min_good_residue(phi);
    r.stats["min_good_residue"] = kmin;
    if (n > kmin + 1) {
        r.fail_with("cycle longer than #k(p) + 1 at a good place",
                    {{"cycle", detail::points_json(cycle)}, {"residue_size", kmin}});
        return r;
    }
    bool affine = true;
    for (auto& p : cycle) affine = affine && !p.is_infinity();
    if (phi.is_unit_leading_polynomial() && d >= 2 && affine && n > q) {
        r.fail_with("polynomial cycle longer than q", {{"cycle", detail::points_json(cycle)}, {"bound", q}});
        return r;
    }
    r.stats["two_d"] = 2 * d;
    if (n > 2 * d) {
        const ConjugacyResult c = detail::try_conjugacy(phi, cycle);
        r.stats["conjugacy"] = detail::conjugacy_json(c);
        if (c.kind == ConjugacyResult::Kind::Failed) {
            r.fail_with("cycle longer than 2d without a constant-field conjugacy: " + c.note,
                        {{"cycle", detail::points_json(cycle)}, {"two_d", 2 * d}});
            return r;
        }
        if (c.kind == ConjugacyResult::Kind::Inapplicable) r.stats["degree_bound"] = "inapplicable: " + c.note;
    }
    return r;
}

/// Reduced cycle length at a good place is 1 or n.
inline VerificationReport check_reduced_dichotomy(const RationalMap& phi, const std::vector<ProjPoint>& cycle,
                                                  const Place& place) {
    auto r = make_report("dichotomy", detail::describe(phi, cycle) + " at " + place.to_string());
    detail::require_cycle(phi, cycle);
    if (phi.bad_places().size() > 1) {
        r.not_applicable("map has more than one place of bad reduction");
        return r;
    }
    if (!phi.has_good_reduction(place)) {
        r.not_applicable("bad place");
        return r;
    }
    const std::size_t n = cycle.size();
    const FunctionalGraph g = reduced_graph(phi.reduce(place));
    const std::size_t m = g.period(reduce_point(cycle[0], place).index());
    r.stats["n"] = n;
    r.stats["m"] = m;
    if (m != 1 && m != n)
        r.fail_with("reduced cycle length is neither 1 nor n",
                    {{"place", place.to_string()}, {"cycle", detail::points_json(cycle)}, {"m", m}});
    return r;
}

struct ThreePoints {
    RatFunc u, w, A, B;
    VerificationReport report;
};

/// Solves x1 y - y1 x = u (x3 y - y3 x) and x2 y - y2 x = w (x3 y - y3 x) for P = [x : y], and checks
/// that u, w are nonzero constants with A u + B w = 1. Requires equal distances from P to the Q_i at
/// every finite place.
inline ThreePoints three_points_witness(const ProjPoint& Q1, const ProjPoint& Q2, const ProjPoint& Q3,
                                        const ProjPoint& P) {
    const std::array<ProjPoint, 4> all{Q1, Q2, Q3, P};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (all[i] == all[j]) fail(Errc::HypothesisViolated, "points must be distinct: " + all[i].to_string());
    std::vector<Place> finite;
    for (auto* Q : {&Q1, &Q2, &Q3})
        for (auto& pd : distance_support(P, *Q))
            if (pd.place.is_finite() && std::find(finite.begin(), finite.end(), pd.place) == finite.end())
                finite.push_back(pd.place);
    for (auto& pl : finite) {
        const Valuation a = log_distance(P, Q1, pl), b = log_distance(P, Q2, pl), c = log_distance(P, Q3, pl);
        if (a != b || a != c)
            fail(Errc::HypothesisViolated, "distances from P to Q1, Q2, Q3 differ at " + pl.to_string());
    }
    const FqPoly c1 = cross_term(Q1, P), c2 = cross_term(Q2, P), c3 = cross_term(Q3, P);
    const FqPoly c12 = cross_term(Q1, Q2);
    ThreePoints out;
    out.u = RatFunc(c1, c3);
    out.w = RatFunc(c2, c3);
    out.A = RatFunc(cross_term(Q3, Q2), c12);
    out.B = RatFunc(cross_term(Q1, Q3), c12);
    auto is_unit = [](const RatFunc& x) { return !x.is_zero() && x.is_polynomial() && x.num().deg() == 0; };
    const bool units = is_unit(out.u) && is_unit(out.w);
    const bool equation = out.A * out.u + out.B * out.w == RatFunc(FqPoly::one(P.field()));
    out.report = make_report("three-points", "Q=(" + Q1.to_string() + ", " + Q2.to_string() + ", " +
                                                 Q3.to_string() + "), P=" + P.to_string());
    out.report.stats = {{"u", out.u.to_string()},
                        {"w", out.w.to_string()},
                        {"A", out.A.to_string()},
                        {"B", out.B.to_string()},
                        {"units", units},
                        {"equation", equation}};
    if (!units || !equation)
        out.report.fail_with(units ? "A u + B w != 1" : "u or w is not a nonzero constant", out.report.stats);
    return out;
}

/// Three-points configurations along a chain P_{-m+1} -> ... -> P_0 with P_0 fixed by the relevant iterate:
/// P = P_{-b}, Q1 = P_{-1}, Q2 = P_{-a}, Q3 = P_0 for 2 <= a < b <= m - 1. The bad place, if finite of
/// degree 1, is first moved to infinity. Returns nullopt when that is impossible.
inline std::optional<std::vector<std::array<ProjPoint, 4>>> fixed_point_configurations(
    const RationalMap& phi, const std::vector<ProjPoint>& chain) {
    const auto& bad = phi.bad_places();
    std::optional<detail::PlaceSwap> swap;
    if (bad.size() > 1) return std::nullopt;
    if (bad.size() == 1 && bad[0].is_finite()) {
        if (bad[0].degree() != 1) return std::nullopt;
        swap = detail::PlaceSwap{phi.field().neg(bad[0].poly().coeff(0))};
    }
    std::vector<ProjPoint> c;
    for (auto& p : chain) c.push_back(swap ? swap->point(p) : p);
    const std::size_t m = c.size();
    auto at = [&](std::size_t k) { return c[m - 1 - k]; };  // P_{-k}
    std::vector<std::array<ProjPoint, 4>> out;
    for (std::size_t b = 3; b + 1 <= m; ++b)
        for (std::size_t a = 2; a < b; ++a) out.push_back({at(1), at(a), at(0), at(b)});
    return out;
}

/// Orbit size bounds, tail reductions for n >= 4, and the fixed-point lemma on the phi^n chains for n <= 3.
inline VerificationReport check_orbit_bounds(const RationalMap& phi, const OrbitRecord& orb) {
    if (!orb.closed()) fail(Errc::NotClosed, "orbit did not close");
    const std::vector<ProjPoint> pts = orb.points();
    auto r = make_report("orbit-bounds", detail::describe(phi, pts));
    if (phi.bad_places().size() > 1) {
        r.not_applicable("map has more than one place of bad reduction");
        return r;
    }
    const FiniteOrbitReport rep = finite_orbit_analyze(phi, orb);
    const std::size_t size = rep.size(), n = rep.n;
    const unsigned d = phi.degree();
    const std::uint64_t kmin = detail::min_good_residue(phi);
    r.stats["size"] = size;
    r.stats["n"] = n;
    r.stats["tail"] = rep.tail;
    r.stats["bound_3k_plus_6"] = 3 * kmin + 6;
    if (size > 3 * kmin + 6) {
        r.fail_with("orbit larger than 3 #k(p) + 6", {{"orbit", detail::points_json(pts)}, {"residue_size", kmin}});
        return r;
    }

    std::vector<Place> good;
    for (auto& pl : detail::coverage_places(pts))
        if (phi.has_good_reduction(pl)) good.push_back(pl);

    // Tails of orbits with period >= 4 reduce injectively.
    if (n >= 4 && rep.tail >= 2) {
        for (auto& pl : good) {
            std::map<elem_t, std::size_t> seen;  // residue index -> tail position
            for (std::size_t i = 0; i < rep.tail; ++i) {
                auto [it, fresh] = seen.emplace(reduce_point(pts[i], pl).index(), i);
                if (!fresh) {
                    r.fail_with("two tail points share a reduction",
                                {{"place", pl.to_string()}, {"points", {pts[it->second].to_string(), pts[i].to_string()}}});
                    return r;
                }
            }
        }
        r.stats["tail_check"] = "pass";
    } else {
        r.stats["tail_check"] = n >= 4 ? "inapplicable: tail has fewer than two points" : "inapplicable: period below 4";
    }

    // Fixed-point lemma for each phi^n chain P_{-m+1} -> ... -> P_0.
    if (n <= 3) {
        std::size_t inequalities = 0;
        for (auto& chain : rep.chains) {
            const std::size_t m = chain.size();
            auto at = [&](std::size_t k) { return chain[m - 1 - k]; };
            if (m > kmin + 2) {
                r.fail_with("phi^n chain larger than #k(p) + 2",
                            {{"chain", detail::points_json(chain)}, {"residue_size", kmin}});
                return r;
            }
            for (auto& pl : good) {
                for (std::size_t b = 2; b + 1 <= m; ++b)
                    for (std::size_t a = 1; a < b; ++a) {
                        const Valuation ba = log_distance(at(b), at(a), pl), b0 = log_distance(at(b), at(0), pl),
                                        a0 = log_distance(at(a), at(0), pl);
                        ++inequalities;
                        if (ba != b0 || b0 > a0) {
                            r.fail_with("fixed-point chain inequality fails",
                                        {{"place", pl.to_string()},
                                         {"chain", detail::points_json(chain)},
                                         {"a", a},
                                         {"b", b},
                                         {"delta_b_a", ba.to_string()},
                                         {"delta_b_0", b0.to_string()},
                                         {"delta_a_0", a0.to_string()}});
                            return r;
                        }
                    }
                const std::vector<ProjPoint> rest(chain.begin() + 1, chain.end());
                if (auto mm = detail::unequal_distances(rest, pl)) {
                    r.fail_with("chain without its first point is not equidistant", detail::mismatch_json(rest, pl, *mm));
                    return r;
                }
            }
        }
        r.stats["chain_inequalities"] = inequalities;
    }

    // Degree-only bound: exceeding it forces a constant-field model of phi, phi^2 or phi^3.
    const std::size_t deg_bound = 6 * static_cast<std::size_t>(d) * d * d + 3;
    r.stats["bound_6d3_plus_3"] = deg_bound;
    if (size > deg_bound) {
        bool found = false;
        const std::vector<ProjPoint> cyc(pts.begin() + static_cast<long>(rep.tail), pts.end());
        found = detail::try_conjugacy(phi, cyc).kind == ConjugacyResult::Kind::Conjugate;
        if (!found && n <= 3) {
            const RationalMap it = iterate(phi, static_cast<unsigned>(n));
            for (auto& chain : rep.chains) {
                if (found) break;
                const std::vector<ProjPoint> rest(chain.begin() + 1, chain.end());
                found = detail::try_conjugacy(it, rest).kind == ConjugacyResult::Kind::Conjugate;
            }
        }
        if (!found && n >= 4 && rep.tail >= 2) {
            const std::vector<ProjPoint> tail(pts.begin(), pts.begin() + static_cast<long>(rep.tail));
            std::vector<std::size_t> sub;
            for (std::size_t i = 0; i + 1 < rep.tail; ++i) sub.push_back(i);
            found = detail::try_conjugacy(phi, tail, sub).kind == ConjugacyResult::Kind::Conjugate;
        }
        r.stats["degree_bound_conjugacy"] = found;
        if (!found) r.fail_with("orbit larger than 6d^3 + 3 with no constant-field model", {{"orbit", detail::points_json(pts)}});
    }
    return r;
}

/// Three-points witnesses on every phi^n chain of a closed orbit with period n <= 3.
inline VerificationReport check_three_points(const RationalMap& phi, const OrbitRecord& orb) {
    if (!orb.closed()) fail(Errc::NotClosed, "orbit did not close");
    const std::vector<ProjPoint> pts = orb.points();
    auto r = make_report("three-points", detail::describe(phi, pts));
    if (phi.bad_places().size() > 1) {
        r.not_applicable("map has more than one place of bad reduction");
        return r;
    }
    if (orb.cycle.size() > 3) {
        r.not_applicable("period above 3");
        return r;
    }
    std::size_t configs = 0;
    for (auto& chain : finite_orbit_analyze(phi, orb).chains) {
        const auto cfg = fixed_point_configurations(phi, chain);
        if (!cfg) {
            r.not_applicable("bad place of degree > 1 cannot be moved to infinity");
            return r;
        }
        for (auto& c : *cfg) {
            ++configs;
            ThreePoints tp;
            try {
                tp = three_points_witness(c[0], c[1], c[2], c[3]);
            } catch (const Error& e) {
                r.fail_with(std::string("hypothesis of the three-points lemma fails: ") + e.what(),
                            {{"Q", {c[0].to_string(), c[1].to_string(), c[2].to_string()}}, {"P", c[3].to_string()}});
                return r;
            }
            if (tp.report.failed()) {
                r.fail_with(tp.report.reason, tp.report.to_json());
                return r;
            }
        }
    }
    r.stats["configurations"] = configs;
    if (configs == 0) r.not_applicable("no chain has four or more points");
    return r;
}

/// A set with constant pairwise distance at a place has at most #k(p) + 1 points.
inline VerificationReport check_equidistant_cardinality(const std::vector<ProjPoint>& pts, const Place& place) {
    auto r = make_report("equidistant-cardinality", "{" + [&] {
        std::string s;
        for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? ", " : "") + pts[i].to_string();
        return s;
    }() + "} at " + place.to_string());
    std::set<ProjPoint> uniq(pts.begin(), pts.end());
    if (uniq.size() != pts.size()) fail(Errc::HypothesisViolated, "points must be distinct");
    if (detail::unequal_distances(pts, place))
        fail(Errc::HypothesisViolated, "pairwise distances at " + place.to_string() + " are not constant");
    const std::uint64_t k = place.residue_size();
    r.stats["size"] = pts.size();
    r.stats["bound"] = k + 1;
    r.stats["equality"] = pts.size() == k + 1;
    if (pts.size() > k + 1) r.fail_with("equidistant set larger than #k(p) + 1", {{"points", detail::points_json(pts)}});
    return r;
}

/// Periodic-point count and structure for a polynomial with constant leading coefficient.
inline VerificationReport check_per_bound_polynomial(const RationalMap& phi) {
    if (!phi.is_unit_leading_polynomial())
        fail(Errc::NotUnitLeadingPolynomial, "expected a polynomial with leading coefficient in F_q^*");
    auto r = make_report("per-bound", phi.to_affine_string());
    const unsigned q = phi.field().q(), d = phi.degree();
    if (d < 2) {
        r.not_applicable("linear map: every point is periodic");
        return r;
    }
    const IntegralPeriodicPoints per = periodic_points_integral(phi);
    const std::size_t count = per.affine.size();
    const std::size_t bound = static_cast<std::size_t>(q - 1) * (d - 1) + 1;
    std::map<unsigned, std::size_t> by_period;
    std::vector<ProjPoint> all;
    for (auto& pp : per.affine) {
        ++by_period[pp.period];
        all.push_back(pp.point);
        if (pp.period == 0 || pp.period > q || !pp.point.is_affine_integral()) {
            r.fail_with("periodic point with period above q or not integral",
                        {{"point", pp.point.to_string()}, {"period", pp.period}});
            return r;
        }
    }
    json periods = json::object();
    for (auto& [n, c] : by_period) periods[std::to_string(n)] = c;
    r.stats["count"] = count;
    r.stats["bound"] = bound;
    r.stats["equality"] = count == bound;
    r.stats["periods"] = periods;
    r.stats["infinity_fixed"] = true;
    if (count > bound) {
        r.fail_with("more than (q-1)(d-1)+1 periodic points", {{"points", detail::points_json(all)}});
        return r;
    }

    const std::size_t fixed = by_period.count(1) ? by_period[1] : 0;
    const std::size_t small = std::min<std::size_t>(d, q);
    std::string cls;
    if (count <= small) {
        cls = "at most min(d, q)";
    } else if (fixed == count) {
        cls = "(b) all periodic points fixed";
        if (count > d) r.fail_with("more than d fixed points", {{"points", detail::points_json(all)}});
    } else if (by_period.size() - (fixed ? 1 : 0) == 1 && fixed <= 1 &&
               std::prev(by_period.end())->second / std::prev(by_period.end())->first >= 2) {
        const unsigned n = std::prev(by_period.end())->first;
        cls = "(c) several " + std::to_string(n) + "-cycles" + (fixed ? " and one fixed point" : "");
        const std::size_t need = n + fixed;
        r.stats["cycle_length"] = n;
        if (need > q) r.fail_with("case (c) cycle length exceeds the constant field", {{"points", detail::points_json(all)}});
        if (need > d && !r.failed()) {
            // One cycle, with the fixed point if present, satisfies the hypotheses of the conjugacy criterion.
            std::vector<ProjPoint> set;
            for (auto& pp : per.affine)
                if (pp.period == 1) set.push_back(pp.point);
            for (auto& pp : per.affine)
                if (pp.period == n) {
                    const OrbitRecord oc = orbit(phi, pp.point);
                    set.insert(set.end(), oc.cycle.begin(), oc.cycle.end());
                    break;
                }
            const ConjugacyResult c = detail::try_conjugacy(phi, set);
            r.stats["conjugacy"] = detail::conjugacy_json(c);
            if (c.kind != ConjugacyResult::Kind::Conjugate)
                r.fail_with("case (c) cycle too long for d without a constant-field model", {{"set", detail::points_json(set)}});
        }
    } else {
        cls = "(a) conjugate to a polynomial over F_q";
        const ConjugacyResult c = detail::try_conjugacy(phi, all);
        r.stats["conjugacy"] = detail::conjugacy_json(c);
        if (c.kind != ConjugacyResult::Kind::Conjugate)
            r.fail_with("more than min(d, q) periodic points without a constant-field model",
                        {{"points", detail::points_json(all)}});
    }
    r.stats["class"] = cls;
    return r;
}

}  // namespace funcdyn
