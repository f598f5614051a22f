#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "funcdyn.hpp"

namespace funcdyn {

inline void PrintTo(const RationalMap& m, std::ostream* os) { *os << m.to_string(); }
inline void PrintTo(const ResidueMap& m, std::ostream* os) { *os << m.to_string(); }
inline void PrintTo(const ProjPoint& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const ResiduePoint& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const FqPoly& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Place& p, std::ostream* os) { *os << p.to_string(); }

}  // namespace funcdyn

namespace fdtest {

using namespace funcdyn;

inline FqPoly P(const FieldSpec& f, std::vector<elem_t> c) { return FqPoly(f, std::move(c)); }
inline FqPoly T(const FieldSpec& f) { return FqPoly::t(f); }
inline FqPoly C(const FieldSpec& f, elem_t a) { return FqPoly::constant(f, a); }

/// Seeded generators for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
    bool coin() { return below(2) == 1; }

    FieldSpec field() {
        static const std::vector<std::uint32_t> qs{2, 3, 4, 5, 7, 8, 9};
        return make_field_q(qs[below(qs.size())]);
    }
    FieldSpec small_field() {
        static const std::vector<std::uint32_t> qs{2, 3, 4, 5};
        return make_field_q(qs[below(qs.size())]);
    }
    elem_t elem(const FieldSpec& f) { return static_cast<elem_t>(below(f.q())); }
    elem_t unit(const FieldSpec& f) { return static_cast<elem_t>(1 + below(f.q() - 1)); }

    FqPoly poly(const FieldSpec& f, long max_deg) {
        const long d = static_cast<long>(below(static_cast<std::uint64_t>(max_deg) + 2)) - 1;
        std::vector<elem_t> c;
        for (long i = 0; i <= d; ++i) c.push_back(elem(f));
        return FqPoly(f, c);
    }
    FqPoly nonzero_poly(const FieldSpec& f, long max_deg) {
        for (;;) {
            FqPoly p = poly(f, max_deg);
            if (!p.is_zero()) return p;
        }
    }
    RatFunc ratfunc(const FieldSpec& f, long max_deg) { return RatFunc(poly(f, max_deg), nonzero_poly(f, max_deg)); }
    RatFunc nonzero_ratfunc(const FieldSpec& f, long max_deg) {
        return RatFunc(nonzero_poly(f, max_deg), nonzero_poly(f, max_deg));
    }

    ProjPoint point(const FieldSpec& f, long max_deg) {
        for (;;) {
            FqPoly x = poly(f, max_deg), y = poly(f, max_deg);
            if (!x.is_zero() || !y.is_zero()) return ProjPoint(x, y);
        }
    }

    Place place(const FieldSpec& f, unsigned max_degree = 2) {
        const auto pls = places_up_to(f, max_degree);
        return pls[below(pls.size())];
    }

    /// Map of degree 1..max_d with coefficients of degree <= max_c; retries on vanishing resultant.
    RationalMap map(const FieldSpec& f, unsigned max_d, long max_c) {
        for (;;) {
            const unsigned d = 1 + static_cast<unsigned>(below(max_d));
            Form F, G;
            for (unsigned i = 0; i <= d; ++i) {
                F.push_back(poly(f, max_c));
                G.push_back(poly(f, max_c));
            }
            try {
                return RationalMap(std::move(F), std::move(G));
            } catch (const Error&) {
            }
        }
    }

    /// Monic polynomial map of degree d with coefficients of degree <= max_c.
    RationalMap monic(const FieldSpec& f, unsigned d, long max_c) {
        std::vector<FqPoly> c;
        for (unsigned i = 0; i < d; ++i) c.push_back(poly(f, max_c));
        c.push_back(FqPoly::one(f));
        return RationalMap::polynomial(c);
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

inline constexpr int kPropertyInstances = 1000;

}  // namespace fdtest
