#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace fdtest;

namespace {

RationalMap M(const FieldSpec& f, const char* s) { return parse_map(f, s); }
ProjPoint A(const FqPoly& x) { return ProjPoint::affine(x); }

}  // namespace

TEST(InterpolateGraph, Examples) {
    const FieldSpec f2 = make_field(2);
    EXPECT_EQ(interpolate_graph({f2, {1, 0}}), M(f2, "X + 1"));
    EXPECT_EQ(interpolate_graph({f2, {1, 0}}, 2), M(f2, "X^2 + 1"));
    EXPECT_EQ(interpolate_graph({f2, {0, 1}}), M(f2, "X"));
    const FieldSpec f5 = make_field(5);
    EXPECT_EQ(interpolate_graph({f5, {0, 1, 2, 3, 4}}), M(f5, "X"));
    try {
        interpolate_graph({f5, {0, 1, 2, 3, 4}}, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DegreeTooSmall);
    }
    EXPECT_THROW(interpolate_graph({f5, {0, 1, 2}}), Error);
    EXPECT_THROW(interpolate_graph({f5, {0, 1, 2, 3, 7}}), Error);
}

TEST(InterpolateGraph, InducesTable) {
    Gen g(41);
    for (int i = 0; i < kPropertyInstances; ++i) {
        const FieldSpec f = g.field();
        std::vector<elem_t> table(f.q());
        for (auto& v : table) v = g.elem(f);
        const unsigned pick = static_cast<unsigned>(g.below(3));
        std::optional<unsigned> d;
        if (pick == 1) d = f.q();
        if (pick == 2) d = f.q() + 2;
        RationalMap phi;
        try {
            phi = interpolate_graph({f, table}, d);
        } catch (const Error& e) {
            // Constant tables have no nonconstant representative below degree q.
            ASSERT_EQ(e.code(), Errc::DegreeTooSmall);
            ASSERT_FALSE(d);
            continue;
        }
        if (d) {
            EXPECT_EQ(phi.degree(), *d);
            EXPECT_TRUE(phi.F().back().is_one());
        } else {
            EXPECT_LT(phi.degree(), f.q());
        }
        for (elem_t x = 0; x < f.q(); ++x) EXPECT_EQ(phi.evaluate(A(C(f, x))), A(C(f, table[x])));
    }
}

TEST(FixedPointsPoly, Examples) {
    const FieldSpec f3 = make_field(3), f2 = make_field(2);
    EXPECT_EQ(fixed_points_poly({FqPoly(f3)}), M(f3, "2*X"));
    const RationalMap psi = fixed_points_poly({T(f2), P(f2, {1, 1})});
    EXPECT_EQ(psi, M(f2, "(X + t)*(X + t + 1) + X"));
    for (auto& x : {T(f2), P(f2, {1, 1})}) EXPECT_EQ(psi.evaluate(A(x)), A(x));
    const RationalMap psi3 = fixed_points_poly({FqPoly(f3), FqPoly::one(f3), T(f3)});
    for (auto& x : {FqPoly(f3), FqPoly::one(f3), T(f3)}) EXPECT_EQ(psi3.evaluate(A(x)), A(x));
    try {
        fixed_points_poly({T(f3), T(f3)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::DuplicateInput);
    }
}

TEST(FixedPointsPoly, FixesEverySeed) {
    Gen g(42);
    for (int i = 0; i < kPropertyInstances; ++i) {
        const FieldSpec f = g.field();
        std::set<FqPoly> seeds;
        const std::size_t d = 2 + g.below(3);
        while (seeds.size() < d) seeds.insert(g.poly(f, 2));
        const std::vector<FqPoly> fs(seeds.begin(), seeds.end());
        const RationalMap psi = fixed_points_poly(fs);
        EXPECT_EQ(psi.degree(), d);
        EXPECT_TRUE(psi.F().back().is_one());
        for (auto& x : fs) EXPECT_EQ(psi.evaluate(A(x)), A(x));
    }
}

TEST(MultiCyclePoly, Examples) {
    const FieldSpec f3 = make_field(3), f5 = make_field(5);
    const RationalMap a = multi_cycle_poly(FqElem(f3, 2), {T(f3)});
    EXPECT_EQ(a, M(f3, "X*(X^2 - t^2) + 2*X"));
    EXPECT_EQ(a.evaluate(A(T(f3))), A(P(f3, {0, 2})));
    EXPECT_EQ(a.evaluate(A(P(f3, {0, 2}))), A(T(f3)));

    const RationalMap b = multi_cycle_poly(FqElem(f5, 2), {T(f5)});
    EXPECT_EQ(b.degree(), 5u);
    const auto o = orbit(b, A(T(f5)));
    ASSERT_TRUE(o.closed());
    EXPECT_EQ(o.cycle, (std::vector<ProjPoint>{A(T(f5)), A(P(f5, {0, 2})), A(P(f5, {0, 4})), A(P(f5, {0, 3}))}));
    EXPECT_EQ(b.evaluate(A(FqPoly(f5))), A(FqPoly(f5)));

    try {
        multi_cycle_poly(FqElem(f5, 1), {T(f5)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnitOrderOne);
    }
    try {
        multi_cycle_poly(FqElem(f5, 4), {T(f5), P(f5, {0, 4})});  // (4t)^2 = t^2
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::PowersCollide);
    }
}

TEST(MultiCyclePoly, AdvertisedCycles) {
    Gen g(43);
    int built = 0;
    for (int i = 0; i < kPropertyInstances; ++i) {
        const FieldSpec f = make_field_q(std::vector<std::uint32_t>{3, 4, 5, 7}[g.below(4)]);
        const FqElem w(f, g.unit(f));
        const std::uint64_t n = mul_order(w);
        if (n == 1) continue;
        std::vector<FqPoly> fs;
        const std::size_t m = 1 + g.below(2);
        for (std::size_t k = 0; k < m; ++k) fs.push_back(g.nonzero_poly(f, 1));
        RationalMap phi;
        try {
            phi = multi_cycle_poly(w, fs);
        } catch (const Error& e) {
            ASSERT_EQ(e.code(), Errc::PowersCollide);
            continue;
        }
        ++built;
        EXPECT_EQ(phi.degree(), m * n + 1);
        EXPECT_EQ(phi.evaluate(A(FqPoly(f))), A(FqPoly(f)));
        std::set<ProjPoint> all;
        for (auto& x : fs) {
            FqPoly cur = x;
            for (std::uint64_t k = 0; k < n; ++k) {
                const FqPoly next = cur * FqPoly::constant(w);
                EXPECT_EQ(phi.evaluate(A(cur)), A(next));
                EXPECT_TRUE(all.insert(A(cur)).second);  // cycles are disjoint
                cur = next;
            }
            EXPECT_EQ(cur, x);
        }
    }
    EXPECT_GT(built, 500);
}

TEST(SharpRationalMap, Examples) {
    const FieldSpec f2 = make_field(2);
    EXPECT_EQ(sharp_rational_map(f2), M(f2, "(X^2+1)/X^2"));
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        const FieldSpec f = make_field_q(q);
        const RationalMap phi = sharp_rational_map(f);
        EXPECT_EQ(phi.degree(), 2 * q - 2);
        EXPECT_LE(phi.bad_places().size(), 1u);
        const auto o = orbit(phi, A(FqPoly(f)));
        ASSERT_TRUE(o.closed());
        EXPECT_TRUE(o.transient.empty());
        ASSERT_EQ(o.cycle.size(), q + 1);
        EXPECT_TRUE(o.cycle[1].is_infinity());
        EXPECT_EQ(o.cycle[2], A(FqPoly::one(f)));
        // The cycle runs through every point of P^1(F_q), following the unit enumeration.
        const auto units = enumerate_units(f);
        for (std::size_t k = 0; k < units.size(); ++k) EXPECT_EQ(o.cycle[2 + k], A(FqPoly::constant(units[k])));
    }
}
