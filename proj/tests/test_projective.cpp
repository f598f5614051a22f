#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace fdtest;

TEST(ProjPoint, CanonicalRepresentative) {
    const FieldSpec f = make_field(3);
    const ProjPoint a(P(f, {0, 0, 1}), P(f, {0, 1}));  // [t^2 : t]
    EXPECT_EQ(a, ProjPoint::affine(T(f)));
    const ProjPoint b(P(f, {0, 2}), P(f, {2}));  // [2t : 2]
    EXPECT_EQ(b, ProjPoint::affine(T(f)));
    const ProjPoint inf(P(f, {2, 1}), FqPoly(f));
    EXPECT_TRUE(inf.is_infinity());
    EXPECT_EQ(inf, ProjPoint::infinity(f));
    EXPECT_THROW(ProjPoint(FqPoly(f), FqPoly(f)), Error);
}

TEST(Normalize, MinimumValuationIsZero) {
    const FieldSpec f = make_field(2);
    const ProjPoint P1 = ProjPoint::affine(T(f));
    const Place pt = Place::finite(T(f)), inf = Place::infinity(f);
    auto [x0, y0] = normalize_at(P1, pt);
    EXPECT_EQ(x0, RatFunc(T(f)));
    EXPECT_EQ(y0, RatFunc(FqPoly::one(f)));
    auto [x1, y1] = normalize_at(P1, inf);
    EXPECT_EQ(std::min(valuation(x1, inf), valuation(y1, inf)), Valuation(0));
    // Same point: ratio unchanged.
    EXPECT_EQ(x1 / y1, RatFunc(T(f)));

    Gen g(3);
    for (int i = 0; i < 300; ++i) {
        const FieldSpec k = g.small_field();
        const ProjPoint Q = g.point(k, 4);
        const Place pl = g.place(k);
        auto [x, y] = normalize_at(Q, pl);
        EXPECT_EQ(std::min(valuation(x, pl), valuation(y, pl)), Valuation(0));
        EXPECT_EQ(ProjPoint(x, y), Q);
    }
}

TEST(Reduce, Examples) {
    const FieldSpec f = make_field(2);
    const ProjPoint P1 = ProjPoint::affine(T(f));
    const ResiduePoint r1 = reduce_point(P1, Place::finite(P(f, {1, 1})));
    EXPECT_FALSE(r1.is_infinity());
    EXPECT_EQ(r1.x, 1u);
    const ResiduePoint r2 = reduce_point(P1, Place::finite(T(f)));
    EXPECT_EQ(r2.x, 0u);
    EXPECT_FALSE(r2.is_infinity());
    EXPECT_TRUE(reduce_point(P1, Place::infinity(f)).is_infinity());
}

TEST(LogDistance, Examples) {
    const FieldSpec f = make_field(2);
    const ProjPoint zero = ProjPoint::affine(FqPoly(f)), inf = ProjPoint::infinity(f);
    for (auto& pl : places_up_to(f, 3)) EXPECT_EQ(log_distance(zero, inf, pl), Valuation(0));
    EXPECT_EQ(log_distance(zero, ProjPoint::affine(T(f)), Place::finite(T(f))), Valuation(1));

    // Oracle: v(x1 y2 - x2 y1) - min(v x1, v y1) - min(v x2, v y2) from valuations.
    const ProjPoint a = ProjPoint::affine(T(f)), b = ProjPoint::affine(P(f, {1, 1}));
    const Place pinf = Place::infinity(f);
    auto v = [&](const FqPoly& p) { return pinf.valuation(p); };
    const Valuation oracle = v(a.x() * b.y() - b.x() * a.y()) - std::min(v(a.x()), v(a.y())) - std::min(v(b.x()), v(b.y()));
    EXPECT_EQ(log_distance(a, b, pinf), oracle);
    EXPECT_EQ(oracle, Valuation(2));
    EXPECT_EQ(log_distance(a, a, pinf), Valuation::pos_inf());
}

TEST(DistanceSupport, Examples) {
    const FieldSpec f = make_field(2);
    const ProjPoint zero = ProjPoint::affine(FqPoly(f));
    auto s1 = distance_support(zero, ProjPoint::affine(T(f)));
    ASSERT_EQ(s1.size(), 1u);
    EXPECT_EQ(s1[0].place, Place::finite(T(f)));
    EXPECT_EQ(s1[0].delta, 1);
    EXPECT_TRUE(distance_support(zero, ProjPoint::affine(FqPoly::one(f))).empty());
    auto s3 = distance_support(ProjPoint::affine(T(f)), ProjPoint::affine(P(f, {1, 1})));
    ASSERT_EQ(s3.size(), 1u);
    EXPECT_TRUE(s3[0].place.is_infinite());
    EXPECT_EQ(s3[0].delta, 2);
    try {
        distance_support(zero, zero);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::EqualPoints);
    }
}

TEST(DistanceSupport, AgreesWithDirectEvaluation) {
    Gen g(17);
    for (int i = 0; i < 300; ++i) {
        const FieldSpec f = g.small_field();
        const ProjPoint a = g.point(f, 3), b = g.point(f, 3);
        if (a == b) continue;
        std::map<Place, long> sup;
        for (auto& pd : distance_support(a, b)) sup[pd.place] = pd.delta;
        for (auto& pl : places_up_to(f, 3)) {
            const Valuation d = log_distance(a, b, pl);
            auto it = sup.find(pl);
            EXPECT_EQ(d, Valuation(it == sup.end() ? 0 : it->second)) << a.to_string() << " " << b.to_string();
        }
    }
}

TEST(LogDistance, ScalingInvarianceAndReductionLink) {
    Gen g(23);
    for (int i = 0; i < 500; ++i) {
        const FieldSpec f = g.small_field();
        const ProjPoint a = g.point(f, 3), b = g.point(f, 3);
        const Place pl = g.place(f);
        // Scaling the coordinates by lambda in K^* does not change the formula's value.
        const RatFunc lam = g.nonzero_ratfunc(f, 2);
        auto v = [&](const RatFunc& r) { return valuation(r, pl); };
        const RatFunc x1 = lam * RatFunc(a.x()), y1 = lam * RatFunc(a.y());
        const Valuation scaled = v(x1 * RatFunc(b.y()) - RatFunc(b.x()) * y1) - std::min(v(x1), v(y1)) -
                                 std::min(v(RatFunc(b.x())), v(RatFunc(b.y())));
        const Valuation d = log_distance(a, b, pl);
        EXPECT_EQ(d, scaled);
        EXPECT_EQ(d > Valuation(0), reduce_point(a, pl) == reduce_point(b, pl));
    }
}

TEST(EnumeratePoints, Counts) {
    const FieldSpec f2 = make_field(2), f3 = make_field(3);
    const auto p0 = enumerate_points(f2, 0);
    EXPECT_EQ(p0.size(), 3u);
    EXPECT_EQ(enumerate_points(f3, 0).size(), 4u);

    // Oracle: canonical coprime pairs of degree <= 1 over F_2, counted by brute force.
    const std::vector<std::vector<int>> polys{{}, {1}, {0, 1}, {1, 1}};
    auto divisible = [](const std::vector<int>& a, int root) {
        int v = 0;
        for (std::size_t i = a.size(); i-- > 0;) v = (v * root + a[i]) % 2;
        return v == 0;
    };
    int count = 0;
    for (auto& x : polys)
        for (auto& y : polys) {
            if (x.empty() && y.empty()) continue;
            bool coprime = true;
            for (int r : {0, 1})
                if (divisible(x, r) && divisible(y, r)) coprime = false;
            if (x.empty() && y.size() > 1) coprime = false;
            if (y.empty() && x.size() > 1) coprime = false;
            if (coprime) ++count;
        }
    const auto p1 = enumerate_points(f2, 1);
    EXPECT_EQ(p1.size(), static_cast<std::size_t>(count));
    EXPECT_EQ(count, 9);
    std::set<ProjPoint> uniq(p1.begin(), p1.end());
    EXPECT_EQ(uniq.size(), p1.size());
    EXPECT_EQ(enumerate_points(f2, 1), p1);
}
