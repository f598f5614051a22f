#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace fdtest;

namespace {

RationalMap M(const FieldSpec& f, const char* s) { return parse_map(f, s); }
ProjPoint A(const FqPoly& x) { return ProjPoint::affine(x); }

std::vector<ProjPoint> cycle_of(const RationalMap& phi, const ProjPoint& p) { return orbit(phi, p).cycle; }

}  // namespace

TEST(Equidistance, Examples) {
    const FieldSpec f2 = make_field(2);
    const RationalMap s = sharp_rational_map(f2);
    const auto r = check_equidistance(s, cycle_of(s, A(FqPoly(f2))));
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    EXPECT_TRUE(r.stats["nonzero_distances"].empty());

    const RationalMap q = M(f2, "X^2 + 1");
    EXPECT_TRUE(check_equidistance(q, cycle_of(q, A(FqPoly(f2)))).passed());

    const RationalMap xt = M(f2, "X^2 + t");
    for (auto& cyc : find_cycles_bounded(xt, 2)) {
        const auto rr = check_equidistance(xt, cyc);
        EXPECT_FALSE(rr.failed()) << rr.to_json().dump();
    }

    // Not a cycle.
    EXPECT_THROW(check_equidistance(q, {A(FqPoly(f2)), A(T(f2))}), Error);
    // Two bad places: the theorem does not apply.
    const RationalMap two_bad = M(f2, "[X^2 : t*Y^2]");
    EXPECT_EQ(check_equidistance(two_bad, {A(FqPoly(f2))}).status, Status::Inapplicable);
}

TEST(CycleBounds, Examples) {
    const FieldSpec f2 = make_field(2);
    const RationalMap s = sharp_rational_map(f2);
    const auto r = check_cycle_bounds(s, cycle_of(s, A(FqPoly(f2))));
    EXPECT_TRUE(r.passed());
    EXPECT_TRUE(r.stats["equality_q_plus_1"].get<bool>());

    const RationalMap q = M(f2, "X^2 + 1");
    const auto r2 = check_cycle_bounds(q, cycle_of(q, A(FqPoly(f2))));
    EXPECT_TRUE(r2.passed());
    EXPECT_FALSE(r2.stats.contains("conjugacy"));

    // A 5-cycle of a constant linear map exceeds 2d = 2 and is explained by conjugacy.
    const FieldSpec f5 = make_field(5);
    const RationalMap tr = M(f5, "X + 1");
    const auto r3 = check_cycle_bounds(tr, cycle_of(tr, A(FqPoly(f5))));
    EXPECT_TRUE(r3.passed()) << r3.to_json().dump();
    EXPECT_EQ(r3.stats["conjugacy"]["kind"], "conjugate");
}

TEST(Dichotomy, Examples) {
    const FieldSpec f2 = make_field(2);
    const RationalMap s = sharp_rational_map(f2);
    const auto cyc = cycle_of(s, A(FqPoly(f2)));
    const auto r = check_reduced_dichotomy(s, cyc, Place::finite(T(f2)));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.stats["m"], 3);

    // t -> t + 1 -> t: distinct modulo every finite place, both reduce to infinity at infinity.
    const RationalMap tr = M(f2, "X + 1");
    const auto c2 = cycle_of(tr, A(T(f2)));
    for (auto& pl : places_up_to(f2, 2)) {
        const auto rr = check_reduced_dichotomy(tr, c2, pl);
        EXPECT_TRUE(rr.passed());
        EXPECT_EQ(rr.stats["m"], pl.is_infinite() ? 1 : 2);
    }

    // Every cycle of X^2 + t in a small box, at every good place of degree <= 2.
    const RationalMap xt = M(f2, "X^2 + t");
    for (auto& c : find_cycles_bounded(xt, 2))
        for (auto& pl : places_up_to(f2, 2)) {
            if (!xt.has_good_reduction(pl)) continue;
            const auto rr = check_reduced_dichotomy(xt, c, pl);
            EXPECT_TRUE(rr.passed());
            const auto m = rr.stats["m"].get<std::size_t>();
            EXPECT_TRUE(m == 1 || m == c.size());
        }
}

TEST(OrbitBounds, Examples) {
    const FieldSpec f2 = make_field(2);
    const RationalMap phi = M(f2, "X^2 + X + 1");
    const auto r = check_orbit_bounds(phi, orbit(phi, A(FqPoly(f2))));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.stats["size"], 2);

    const FieldSpec f5 = make_field(5);
    const RationalMap psi = interpolate_graph({f5, {1, 2, 2, 2, 2}}, 5);
    const auto r5 = check_orbit_bounds(psi, orbit(psi, A(FqPoly(f5))));
    EXPECT_TRUE(r5.passed()) << r5.to_json().dump();
    EXPECT_GT(r5.stats["chain_inequalities"].get<std::size_t>(), 0u);

    const RationalMap s = sharp_rational_map(f2);
    const auto rp = check_orbit_bounds(s, orbit(s, A(FqPoly(f2))));
    EXPECT_TRUE(rp.passed());
    EXPECT_EQ(rp.stats["tail"], 0);
    EXPECT_NE(rp.stats["tail_check"].get<std::string>().find("inapplicable"), std::string::npos);

    EXPECT_THROW(check_orbit_bounds(M(f2, "X^2 + t"), orbit(M(f2, "X^2 + t"), A(T(f2)))), Error);
}

TEST(OrbitBounds, TailReductionWithLongCycle) {
    // Over F_7: 0 -> 1 -> 2 -> 3 -> 4 -> 5 -> 2, a 4-cycle with a two-point tail.
    const FieldSpec f7 = make_field(7);
    const RationalMap phi = interpolate_graph({f7, {1, 2, 3, 4, 5, 2, 6}}, 7);
    const auto o = orbit(phi, A(FqPoly(f7)));
    ASSERT_TRUE(o.closed());
    EXPECT_EQ(o.transient.size(), 2u);
    EXPECT_EQ(o.cycle.size(), 4u);
    const auto r = check_orbit_bounds(phi, o);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    EXPECT_EQ(r.stats["tail_check"], "pass");
}

TEST(ThreePoints, Examples) {
    const FieldSpec f5 = make_field(5);
    const ProjPoint Q1 = A(C(f5, 0)), Q2 = A(C(f5, 1)), Q3 = A(C(f5, 2)), P0 = A(C(f5, 3));
    const auto tp = three_points_witness(Q1, Q2, Q3, P0);
    EXPECT_TRUE(tp.report.passed());
    // Oracle: u = (x1 y - y1 x)/(x3 y - y3 x) = (0 - 3)/(2 - 3) = 3 in F_5.
    EXPECT_EQ(tp.u, RatFunc(C(f5, 3)));
    EXPECT_EQ(tp.w, RatFunc(C(f5, 2)));  // (1 - 3)/(2 - 3) = 2
    EXPECT_EQ(tp.A * tp.u + tp.B * tp.w, RatFunc(FqPoly::one(f5)));

    EXPECT_THROW(three_points_witness(Q1, Q2, Q1, P0), Error);
    // Distances from P to the Q_i differ at (t).
    EXPECT_THROW(three_points_witness(A(T(f5)), Q2, Q3, A(FqPoly(f5))), Error);
}

TEST(ThreePoints, FromFixedPointChain) {
    const FieldSpec f5 = make_field(5);
    // 0 -> 1 -> 2 -> 3 -> 3: a chain of four points into a fixed point.
    const RationalMap phi = interpolate_graph({f5, {1, 2, 3, 3, 3}}, 5);
    const auto o = orbit(phi, A(FqPoly(f5)));
    ASSERT_EQ(o.transient.size(), 3u);
    const auto r = check_three_points(phi, o);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    EXPECT_EQ(r.stats["configurations"], 1);

    const auto cfg = fixed_point_configurations(phi, finite_orbit_analyze(phi, o).chains[0]);
    ASSERT_TRUE(cfg);
    ASSERT_EQ(cfg->size(), 1u);
    const auto& c = (*cfg)[0];
    EXPECT_EQ(c[3], A(FqPoly(f5)));    // P = P_{-3}
    EXPECT_EQ(c[0], A(C(f5, 2)));      // Q1 = P_{-1}
    EXPECT_EQ(c[1], A(C(f5, 1)));      // Q2 = P_{-2}
    EXPECT_EQ(c[2], A(C(f5, 3)));      // Q3 = P_0

    const RationalMap s = sharp_rational_map(make_field(5));
    EXPECT_EQ(check_three_points(s, orbit(s, A(FqPoly(make_field(5))))).status, Status::Inapplicable);
}

TEST(EquidistantCardinality, Examples) {
    const FieldSpec f2 = make_field(2), f3 = make_field(3);
    const std::vector<ProjPoint> p1{A(FqPoly(f2)), A(FqPoly::one(f2)), ProjPoint::infinity(f2)};
    for (auto& pl : places_up_to(f2, 1)) {
        if (pl.is_infinite()) continue;
        const auto r = check_equidistant_cardinality(p1, pl);
        EXPECT_TRUE(r.passed());
        EXPECT_TRUE(r.stats["equality"].get<bool>());
    }
    const std::vector<ProjPoint> s{A(FqPoly(f3)), A(T(f3)), A(P(f3, {0, 2}))};
    const auto r = check_equidistant_cardinality(s, Place::finite(T(f3)));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.stats["size"], 3);
    EXPECT_EQ(log_distance(s[0], s[1], Place::finite(T(f3))), Valuation(1));
}

TEST(EquidistantCardinality, NoFourPointSetOverF2) {
    // Exhaustive: no four points of height <= 2 over F_2 are equidistant at (t).
    const FieldSpec f2 = make_field(2);
    const Place pl = Place::finite(T(f2));
    const auto pts = enumerate_points(f2, 2);
    std::size_t tried = 0;
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) {
            const Valuation dab = log_distance(pts[a], pts[b], pl);
            for (std::size_t c = b + 1; c < pts.size(); ++c) {
                if (log_distance(pts[a], pts[c], pl) != dab || log_distance(pts[b], pts[c], pl) != dab) continue;
                for (std::size_t e = c + 1; e < pts.size(); ++e) {
                    ++tried;
                    EXPECT_THROW(check_equidistant_cardinality({pts[a], pts[b], pts[c], pts[e]}, pl), Error);
                }
            }
        }
    EXPECT_GT(tried, 0u);
}

TEST(PerBound, Examples) {
    const FieldSpec f2 = make_field(2), f3 = make_field(3);
    const auto r = check_per_bound_polynomial(M(f2, "X^2 + 1"));
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.stats["count"], 2);
    EXPECT_TRUE(r.stats["equality"].get<bool>());

    const auto r2 = check_per_bound_polynomial(fixed_points_poly({FqPoly(f2), FqPoly::one(f2), T(f2)}));
    EXPECT_TRUE(r2.passed());
    EXPECT_EQ(r2.stats["count"], 3);
    EXPECT_TRUE(r2.stats["equality"].get<bool>());

    const auto r3 = check_per_bound_polynomial(multi_cycle_poly(FqElem(f3, 2), {T(f3)}));
    EXPECT_TRUE(r3.passed()) << r3.to_json().dump();
    EXPECT_GE(r3.stats["count"].get<std::size_t>(), 3u);
    EXPECT_LE(r3.stats["count"].get<std::size_t>(), 5u);

    EXPECT_THROW(check_per_bound_polynomial(M(f2, "(X^2+1)/X^2")), Error);
}

TEST(PerBound, FullCycleAttainsQ) {
    // A full q-cycle on F_q bumped to degree q: periods reach q exactly.
    for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
        const FieldSpec f = make_field_q(q);
        std::vector<elem_t> table(q);
        for (elem_t i = 0; i < q; ++i) table[i] = (i + 1) % q;
        const RationalMap phi = interpolate_graph({f, table}, q);
        const auto o = orbit(phi, A(FqPoly(f)));
        EXPECT_EQ(o.cycle.size(), q);
        const auto r = check_per_bound_polynomial(phi);
        EXPECT_TRUE(r.passed()) << r.to_json().dump();
    }
}

TEST(Census, MonicQuadraticsOverF2) {
    CensusSpec spec;
    spec.field = make_field(2);
    spec.family = Family::MonicPolynomial;
    const auto res = census(spec);
    EXPECT_EQ(res.maps, 16u);
    EXPECT_TRUE(res.all_pass()) << res.report.to_json().dump();
    for (auto& [n, c] : res.cycle_lengths) EXPECT_LE(n, 2u);
    EXPECT_EQ(res.tallies.at("equidistance").fail, 0u);
    EXPECT_EQ(res.oracle_mismatches, 0u);
}

TEST(Census, SymmetryReductionPreservesWeightedTallies) {
    CensusSpec spec;
    spec.field = make_field(2);
    spec.degree = 2;
    spec.coeff_bound = 1;
    spec.symmetry = true;
    const auto a = census(spec);
    spec.symmetry = false;
    const auto b = census(spec);
    EXPECT_LT(a.classes, b.classes);
    EXPECT_EQ(a.maps, b.maps);
    EXPECT_EQ(a.degenerate, b.degenerate);
    EXPECT_EQ(a.admissible, b.admissible);
    EXPECT_EQ(a.cycles, b.cycles);
    EXPECT_EQ(a.orbits, b.orbits);
    EXPECT_EQ(a.cycle_lengths, b.cycle_lengths);
    ASSERT_EQ(a.weighted.size(), b.weighted.size());
    for (auto& [k, t] : b.weighted) {
        EXPECT_EQ(a.weighted.at(k).pass, t.pass) << k;
        EXPECT_EQ(a.weighted.at(k).fail, t.fail) << k;
        EXPECT_EQ(a.weighted.at(k).inapplicable, t.inapplicable) << k;
    }
    EXPECT_TRUE(a.all_pass());
    // Without symmetry every normalized coefficient vector is visited once.
    EXPECT_EQ(b.maps, b.classes + b.degenerate);
}

TEST(Census, WorkersDoNotChangeResult) {
    CensusSpec spec;
    spec.field = make_field(3);
    spec.family = Family::MonicPolynomial;
    const auto a = census(spec);
    spec.workers = 3;
    const auto b = census(spec);
    EXPECT_EQ(a.report.to_json().dump(), b.report.to_json().dump());
}

TEST(Census, ConstantQuadraticsOverF2) {
    CensusSpec spec;
    spec.field = make_field(2);
    spec.coeff_bound = 0;
    spec.box = 0;
    const auto res = census(spec);
    EXPECT_TRUE(res.all_pass());
    EXPECT_EQ(res.long_cycles, res.long_cycles_conjugate);
    for (auto& [n, c] : res.cycle_lengths) EXPECT_LE(n, 3u);
}
