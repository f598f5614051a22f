#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace fdtest;

namespace {

RationalMap M(const FieldSpec& f, const char* s) { return parse_map(f, s); }
ProjPoint A(const FqPoly& x) { return ProjPoint::affine(x); }

// Exact period of P by plain iteration, 0 if P does not return within `limit` steps.
unsigned brute_period(const RationalMap& phi, const ProjPoint& P, unsigned limit) {
    ProjPoint cur = P;
    for (unsigned n = 1; n <= limit; ++n) {
        cur = phi.evaluate(cur);
        if (cur == P) return n;
    }
    return 0;
}

}  // namespace

TEST(Orbit, Examples) {
    const FieldSpec f = make_field(2);
    const FqPoly zero(f), one = FqPoly::one(f);
    const auto o = orbit(M(f, "(X^2+1)/X^2"), A(zero));
    EXPECT_TRUE(o.closed());
    EXPECT_TRUE(o.transient.empty());
    ASSERT_EQ(o.cycle.size(), 3u);
    EXPECT_EQ(o.cycle[0], A(zero));
    EXPECT_EQ(o.cycle[1], ProjPoint::infinity(f));
    EXPECT_EQ(o.cycle[2], A(one));

    const auto fix = orbit(M(f, "X^2"), A(one));
    EXPECT_TRUE(fix.closed());
    EXPECT_EQ(fix.cycle, std::vector<ProjPoint>{A(one)});

    const auto esc = orbit(M(f, "X^2 + t"), A(T(f)));
    EXPECT_FALSE(esc.closed());
    // Degrees along the escaping orbit double.
    for (std::size_t i = 1; i < esc.transient.size(); ++i)
        EXPECT_EQ(esc.transient[i].height(), 2 * esc.transient[i - 1].height());

    const auto cut = orbit(M(f, "X^2 + t"), A(T(f)), 1, 64);
    EXPECT_EQ(cut.status, OrbitRecord::Status::EscapedBudget);
    EXPECT_THROW(orbit(M(f, "X^2"), A(one), 0), Error);
}

TEST(Orbit, ClosedRecordsAreConsistent) {
    Gen g(31);
    int closed = 0;
    for (int i = 0; i < 500; ++i) {
        const FieldSpec f = g.small_field();
        const RationalMap phi = g.map(f, 2, 1);
        const auto o = orbit(phi, g.point(f, 1), 500, 24);
        if (!o.closed()) continue;
        ++closed;
        ASSERT_GE(o.cycle.size(), 1u);
        const auto pts = o.points();
        std::set<ProjPoint> uniq(pts.begin(), pts.end());
        EXPECT_EQ(uniq.size(), pts.size());
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) EXPECT_EQ(phi.evaluate(pts[k]), pts[k + 1]);
        EXPECT_EQ(phi.evaluate(o.cycle.back()), o.cycle.front());
    }
    EXPECT_GT(closed, 100);
}

TEST(EscapeHeight, NoPreperiodicPointAbove) {
    // Oracle: brute-force closed orbits from every point up to twice the certificate.
    Gen g(32);
    for (int i = 0; i < 60; ++i) {
        const FieldSpec f = make_field(2);
        const RationalMap phi = g.map(f, 2, 1);
        const auto h = escape_height(phi);
        if (!h) continue;
        for (auto& p : enumerate_points(f, std::min(*h + 2, 3L))) {
            // Plain iteration, independent of the certificate used inside orbit().
            std::vector<ProjPoint> seq{p};
            std::set<ProjPoint> seen{p};
            for (int step = 0; step < 200 && seq.back().height() <= 48; ++step) {
                const ProjPoint n = phi.evaluate(seq.back());
                if (!seen.insert(n).second) {
                    for (auto& x : seq) EXPECT_LE(x.height(), *h) << phi.to_string() << " " << p.to_string();
                    break;
                }
                seq.push_back(n);
            }
        }
    }
    EXPECT_FALSE(escape_height(M(make_field(3), "X + t")));
}

TEST(Periodic, Examples) {
    const FieldSpec f2 = make_field(2), f3 = make_field(3);
    const auto a = periodic_points_integral(M(f2, "X^2 + 1"));
    const std::vector<PeriodicPoint> ea{{A(FqPoly(f2)), 2}, {A(FqPoly::one(f2)), 2}};
    EXPECT_EQ(a.affine, ea);
    EXPECT_TRUE(a.infinity.point.is_infinity());
    EXPECT_EQ(a.infinity.period, 1u);

    const auto b = periodic_points_integral(M(f3, "X^2"));
    const std::vector<PeriodicPoint> eb{{A(FqPoly(f3)), 1}, {A(FqPoly::one(f3)), 1}};
    EXPECT_EQ(b.affine, eb);

    const std::vector<FqPoly> fs{T(f3), P(f3, {1, 1}), P(f3, {0, 0, 1})};
    const auto c = periodic_points_integral(fixed_points_poly(fs));
    for (auto& x : fs) {
        const PeriodicPoint want{A(x), 1};
        EXPECT_NE(std::find(c.affine.begin(), c.affine.end(), want), c.affine.end()) << x.to_string();
    }

    try {
        periodic_points_integral(M(f2, "X + t"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InfinitePeriodicSet);
    }
    try {
        periodic_points_integral(M(f2, "t*X^2 + 1"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotUnitLeadingPolynomial);
    }
    EXPECT_THROW(periodic_points_integral(M(f2, "(X^2+1)/X^2")), Error);
}

TEST(Periodic, MatchesBruteForceAndPeriodBound) {
    // Oracle: every point of height <= the escape certificate, iterated 2q + 2 steps.
    Gen g(33);
    for (int i = 0; i < 150; ++i) {
        const FieldSpec f = make_field_q(g.coin() ? 2 : 3);
        const unsigned d = 2 + static_cast<unsigned>(g.below(2));
        const RationalMap phi = g.monic(f, d, 1);
        const long h = *escape_height(phi);
        std::set<std::pair<ProjPoint, unsigned>> brute;
        for (auto& x : polys_up_to(f, h)) {
            const unsigned per = brute_period(phi, A(x), 2 * f.q() + 2);
            if (per) brute.emplace(A(x), per);
        }
        std::set<std::pair<ProjPoint, unsigned>> got;
        for (auto& pp : periodic_points_integral(phi, g.below(100)).affine) {
            got.emplace(pp.point, pp.period);
            EXPECT_TRUE(pp.point.is_affine_integral());
            EXPECT_LE(pp.period, f.q());
        }
        EXPECT_EQ(got, brute) << phi.to_string();
    }
}

TEST(FindCycles, Examples) {
    const FieldSpec f2 = make_field(2);
    const auto c = find_cycles_bounded(M(f2, "(X^2+1)/X^2"), 0);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].size(), 3u);

    const auto s = find_cycles_bounded(M(f2, "X^2"), 1);
    ASSERT_EQ(s.size(), 3u);
    for (auto& cyc : s) EXPECT_EQ(cyc.size(), 1u);

    // wX with w of order 4 over F_5: every point other than 0 and infinity lies on a 4-cycle.
    const FieldSpec f5 = make_field(5);
    const auto w = find_cycles_bounded(M(f5, "2*X"), 1);
    std::size_t covered = 0;
    for (auto& cyc : w) {
        if (cyc.size() == 1) {
            EXPECT_TRUE(cyc[0].is_infinity() || cyc[0].x().is_zero());
            continue;
        }
        EXPECT_EQ(cyc.size(), 4u);
        covered += cyc.size();
    }
    EXPECT_EQ(covered, enumerate_points(f5, 1).size() - 2);
}

TEST(FindCycles, OracleMatchExamples) {
    const FieldSpec f2 = make_field(2), f3 = make_field(3);
    EXPECT_TRUE(periodic_oracle_match(M(f2, "X^2 + 1"), 2).match);
    EXPECT_TRUE(periodic_oracle_match(M(f3, "X^2"), 1).match);
    const RationalMap psi = fixed_points_poly({T(f2), P(f2, {1, 1})});
    const auto m = periodic_oracle_match(psi, 1);
    EXPECT_TRUE(m.match);
    const auto cycles = find_cycles_bounded(psi, 1);
    for (auto& x : {T(f2), P(f2, {1, 1})}) {
        bool found = false;
        for (auto& c : cycles) found = found || (c.size() == 1 && c[0] == A(x));
        EXPECT_TRUE(found);
    }
}

TEST(ExploreBox, FatesAgreeWithOrbit) {
    Gen g(34);
    for (int i = 0; i < 40; ++i) {
        const FieldSpec f = g.small_field();
        const RationalMap phi = g.map(f, 2, 1);
        const SearchBudget budget{400, 16};
        const auto bx = explore_box(phi, 1, budget);
        for (std::size_t s = 0; s < bx.starts; ++s) {
            const auto o = orbit(phi, bx.nodes[s], budget.max_steps, budget.max_degree);
            const auto fate = bx.fate[s];
            if (fate == BoxDynamics::Fate::Periodic) {
                EXPECT_TRUE(o.closed() && o.transient.empty());
            } else if (fate == BoxDynamics::Fate::Preperiodic) {
                ASSERT_TRUE(o.closed());
                EXPECT_FALSE(o.transient.empty());
                const auto rec = bx.orbit_of(s);
                EXPECT_EQ(rec.transient, o.transient);
                EXPECT_EQ(rec.cycle, o.cycle);
            } else if (fate == BoxDynamics::Fate::Escaped) {
                EXPECT_FALSE(o.closed());
            }
        }
    }
}

TEST(ReducedGraph, Examples) {
    const FieldSpec f2 = make_field(2), f3 = make_field(3);
    const auto sq = reduced_graph(ResidueMap(f2, {0, 0, 1}, {1, 0, 0}));
    EXPECT_EQ(sq.succ, (std::vector<elem_t>{0, 1, 2}));
    EXPECT_EQ(sq.cycle_lengths(), (std::vector<std::size_t>{1, 1, 1}));

    const auto g1 = reduced_graph(ResidueMap(f2, {1, 0, 1}, {1, 0, 0}));
    EXPECT_EQ(g1.succ, (std::vector<elem_t>{1, 0, 2}));
    EXPECT_EQ(g1.cycle_lengths(), (std::vector<std::size_t>{1, 2}));

    const auto tr = reduced_graph(ResidueMap(f3, {1, 1}, {1, 0}));
    EXPECT_EQ(tr.succ, (std::vector<elem_t>{1, 2, 0, 3}));
    EXPECT_EQ(tr.cycle_lengths(), (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(tr.period(0), 3u);
    EXPECT_EQ(tr.period(3), 1u);

    // X^2 + X over F_2 sends 0 and 1 to 0.
    const auto t = reduced_graph(ResidueMap(f2, {0, 1, 1}, {1, 0, 0}));
    EXPECT_EQ(t.tail_depth, (std::vector<unsigned>{0, 1, 0}));
    EXPECT_EQ(t.period(1), 0u);
}

TEST(ReducedGraph, PartitionsAllNodes) {
    Gen g(35);
    for (int i = 0; i < 300; ++i) {
        const FieldSpec f = g.field();
        const unsigned d = 1 + static_cast<unsigned>(g.below(3));
        std::vector<elem_t> a(d + 1), b(d + 1);
        for (auto& x : a) x = g.elem(f);
        for (auto& x : b) x = g.elem(f);
        ResidueMap m;
        try {
            m = ResidueMap(f, a, b);
        } catch (const Error&) {
            continue;
        }
        if (m.resultant() == 0) {
            EXPECT_THROW(reduced_graph(m), Error);
            continue;
        }
        const auto gr = reduced_graph(m);
        ASSERT_EQ(gr.succ.size(), f.q() + 1);
        std::size_t on_cycles = 0;
        for (auto& c : gr.cycles) on_cycles += c.size();
        std::size_t periodic = 0;
        for (elem_t v = 0; v <= f.q(); ++v) {
            if (gr.cycle_of[v] >= 0) {
                ++periodic;
                EXPECT_EQ(gr.tail_depth[v], 0u);
            } else {
                EXPECT_EQ(gr.tail_depth[v], gr.tail_depth[gr.succ[v]] + 1);
            }
            // Successor agrees with direct evaluation.
            EXPECT_EQ(gr.succ[v], m.evaluate(ResiduePoint::from_index(f, v)).index());
        }
        EXPECT_EQ(periodic, on_cycles);
    }
}

TEST(FiniteOrbit, Examples) {
    const FieldSpec f2 = make_field(2);
    const RationalMap phi = interpolate_graph(GraphSpec{f2, {1, 1}}, 2);
    EXPECT_EQ(phi, M(f2, "X^2 + X + 1"));
    const auto rep = finite_orbit_analyze(phi, orbit(phi, A(FqPoly(f2))));
    EXPECT_EQ(rep.tail, 1u);
    EXPECT_EQ(rep.n, 1u);
    EXPECT_EQ(rep.size(), 2u);

    const FieldSpec f5 = make_field(5);
    const RationalMap psi = interpolate_graph(GraphSpec{f5, {1, 2, 2, 2, 2}}, 5);
    const auto o = orbit(psi, A(FqPoly(f5)));
    ASSERT_TRUE(o.closed());
    EXPECT_EQ(o.transient, (std::vector<ProjPoint>{A(FqPoly(f5)), A(C(f5, 1))}));
    EXPECT_EQ(o.cycle, (std::vector<ProjPoint>{A(C(f5, 2))}));
    const auto r5 = finite_orbit_analyze(psi, o);
    EXPECT_EQ(r5.tail, 2u);
    ASSERT_EQ(r5.chains.size(), 1u);
    EXPECT_EQ(r5.chains[0].size(), 3u);

    const auto pure = finite_orbit_analyze(M(f2, "(X^2+1)/X^2"), orbit(M(f2, "(X^2+1)/X^2"), A(FqPoly(f2))));
    EXPECT_EQ(pure.tail, 0u);
    EXPECT_EQ(pure.n, 3u);
    EXPECT_TRUE(pure.tail_reductions.empty());

    const auto esc = orbit(M(f2, "X^2 + t"), A(T(f2)));
    EXPECT_THROW(finite_orbit_analyze(M(f2, "X^2 + t"), esc), Error);
}

TEST(FiniteOrbit, ChainsPartitionPositions) {
    EXPECT_EQ(phi_n_chains(3, 2), (std::vector<std::vector<std::size_t>>{{0, 2, 4}, {1, 3}}));
    EXPECT_EQ(phi_n_chains(0, 3), (std::vector<std::vector<std::size_t>>{{0}, {1}, {2}}));
    for (std::size_t tail = 0; tail < 12; ++tail)
        for (std::size_t n = 1; n < 6; ++n) {
            const auto ch = phi_n_chains(tail, n);
            ASSERT_EQ(ch.size(), n);
            std::vector<int> hit(tail + n, 0);
            for (auto& c : ch) {
                // Each chain ends at a cycle position and steps by n.
                EXPECT_GE(c.back(), tail);
                for (std::size_t k = 0; k + 1 < c.size(); ++k) EXPECT_EQ(c[k + 1], c[k] + n);
                for (auto i : c) ++hit[i];
            }
            for (auto h : hit) EXPECT_EQ(h, 1);
        }
}

TEST(LinearMaps, FiniteOrder) {
    // A unit-leading linear polynomial satisfies phi^n = id for some n <= q.
    Gen g(36);
    for (int i = 0; i < 200; ++i) {
        const FieldSpec f = g.field();
        const RationalMap phi = RationalMap::polynomial({g.poly(f, 2), C(f, g.unit(f))});
        const RationalMap id = M(f, "X");
        bool found = false;
        for (unsigned n = 1; n <= f.q() && !found; ++n) found = iterate(phi, n) == id;
        EXPECT_TRUE(found) << phi.to_string();
    }
}
