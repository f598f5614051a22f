#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "funcdyn/algebra/factor.hpp"
#include "funcdyn/algebra/place.hpp"
#include "funcdyn/algebra/ratfunc.hpp"

namespace funcdyn {

/// Point of P^1(F_q(t)) with coprime coordinates in F_q[t]; canonical when y is monic, or y = 0 and x = 1.
class ProjPoint {
public:
    ProjPoint() = default;
    ProjPoint(FqPoly x, FqPoly y) {
        if (x.is_zero() && y.is_zero()) fail(Errc::BothZero, "[0 : 0] is not a point");
        FqPoly g = poly_gcd(x, y);
        if (!g.is_one()) {
            x = x / g;
            y = y / g;
        }
        elem_t s = y.is_zero() ? x.lead() : y.lead();
        if (s != 1) {
            elem_t si = x.field().inv(s);
            x = x.scale(si);
            y = y.scale(si);
        }
        x_ = std::move(x);
        y_ = std::move(y);
    }
    /// From a pair of rational functions (clears denominators).
    ProjPoint(const RatFunc& x, const RatFunc& y) : ProjPoint(x.num() * y.den(), y.num() * x.den()) {}

    static ProjPoint affine(const FqPoly& x) { return from_canonical(x, FqPoly::one(x.field())); }
    static ProjPoint affine(const RatFunc& x) { return ProjPoint(x.num(), x.den()); }
    static ProjPoint infinity(const FieldSpec& f) { return from_canonical(FqPoly::one(f), FqPoly(f)); }
    // Caller guarantees coprime canonical coordinates.
    static ProjPoint from_canonical(FqPoly x, FqPoly y) {
        ProjPoint p;
        p.x_ = std::move(x);
        p.y_ = std::move(y);
        return p;
    }

    const FqPoly& x() const { return x_; }
    const FqPoly& y() const { return y_; }
    const FieldSpec& field() const { return x_.field(); }
    bool is_infinity() const { return y_.is_zero(); }
    bool is_affine_integral() const { return y_.is_one(); }
    /// Height proxy: max coordinate degree.
    long height() const { return std::max(x_.deg(), y_.deg()); }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.x_ == b.x_ && a.y_ == b.y_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    /// Lexicographic on (y, x) with the polynomial order.
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) {
        if (a.y_ != b.y_) return a.y_ < b.y_;
        return a.x_ < b.x_;
    }
    std::size_t hash() const { return x_.hash() * 31 + y_.hash(); }

    std::string to_string() const {
        if (y_.is_zero()) return "inf";
        if (y_.is_one()) return x_.to_string();
        return "[" + x_.to_string() + " : " + y_.to_string() + "]";
    }

private:
    FqPoly x_, y_;
};

struct ProjPointHash {
    std::size_t operator()(const ProjPoint& p) const { return p.hash(); }
};

/// x1*y2 - x2*y1.
inline FqPoly cross_term(const ProjPoint& a, const ProjPoint& b) { return a.x() * b.y() - b.x() * a.y(); }

/// Point of P^1 over a finite field, canonical as [x : 1] or [1 : 0].
struct ResiduePoint {
    FieldSpec field;
    elem_t x = 0, y = 1;

    ResiduePoint() = default;
    ResiduePoint(FieldSpec f, elem_t x0, elem_t y0) : field(std::move(f)) {
        if (x0 == 0 && y0 == 0) fail(Errc::BothZero, "[0 : 0] is not a point");
        if (y0 == 0) {
            x = 1;
            y = 0;
        } else {
            x = field.div(x0, y0);
            y = 1;
        }
    }
    static ResiduePoint from_index(const FieldSpec& f, elem_t i) {
        return i == f.q() ? ResiduePoint(f, 1, 0) : ResiduePoint(f, i, 1);
    }
    bool is_infinity() const { return y == 0; }
    /// Position in P^1(k): affine x -> x, infinity -> #k.
    elem_t index() const { return y == 0 ? field.q() : x; }

    friend bool operator==(const ResiduePoint& a, const ResiduePoint& b) {
        return a.x == b.x && a.y == b.y && a.field == b.field;
    }
    friend bool operator!=(const ResiduePoint& a, const ResiduePoint& b) { return !(a == b); }
    std::string to_string() const { return y == 0 ? "inf" : field.format(x); }
};

/// Coordinates scaled so that min(v(x), v(y)) = 0 at the place.
inline std::pair<RatFunc, RatFunc> normalize_at(const ProjPoint& P, const Place& place) {
    if (place.is_finite()) return {RatFunc(P.x()), RatFunc(P.y())};
    // Coprime coordinates have minimal infinite valuation -max(deg x, deg y).
    const FqPoly tm = FqPoly::monomial(P.field(), 1, static_cast<std::size_t>(P.height()));
    return {RatFunc(P.x(), tm), RatFunc(P.y(), tm)};
}

/// Reduction of a polynomial into k(pi); leading coefficient at degree M for infinity.
inline elem_t reduce_poly(const FqPoly& a, const Place& place, const FieldSpec& k, long M = 0) {
    if (place.is_infinite()) return a.coeff(static_cast<std::size_t>(M));
    return k.from_coords((a % place.poly()).coeffs());
}

inline ResiduePoint reduce_point(const ProjPoint& P, const Place& place) {
    const FieldSpec k = place.residue_field();
    const long M = P.height();
    return ResiduePoint(k, reduce_poly(P.x(), place, k, M), reduce_poly(P.y(), place, k, M));
}

/// delta_pi(P, Q) = v(x1 y2 - x2 y1) - min(v(x1), v(y1)) - min(v(x2), v(y2)); +inf iff P = Q.
inline Valuation log_distance(const ProjPoint& P, const ProjPoint& Q, const Place& place) {
    FqPoly c = cross_term(P, Q);
    if (c.is_zero()) return Valuation::pos_inf();
    if (place.is_finite()) return place.valuation(c);
    return Valuation(-c.deg() + P.height() + Q.height());
}

struct PlaceDistance {
    Place place;
    long delta;
};

/// All places with positive distance, finite places in sorted order then infinity.
inline std::vector<PlaceDistance> distance_support(const ProjPoint& P, const ProjPoint& Q, std::uint64_t seed = 0) {
    FqPoly c = cross_term(P, Q);
    if (c.is_zero()) fail(Errc::EqualPoints, "distance support of a point with itself");
    std::vector<PlaceDistance> out;
    if (c.deg() > 0)
        for (auto& [p, m] : factorize(c, seed).factors) out.push_back({Place::finite_unchecked(p), static_cast<long>(m)});
    long dinf = -c.deg() + P.height() + Q.height();
    if (dinf > 0) out.push_back({Place::infinity(P.field()), dinf});
    return out;
}

/// All polynomials of degree <= B in the polynomial order.
inline std::vector<FqPoly> polys_up_to(const FieldSpec& f, long B) {
    std::vector<FqPoly> out{FqPoly(f)};
    for (long d = 0; d <= B; ++d) {
        std::vector<elem_t> c(static_cast<std::size_t>(d) + 1, 0);
        for (elem_t lead = 1; lead < f.q(); ++lead) {
            std::fill(c.begin(), c.end(), 0);
            c.back() = lead;
            for (;;) {
                out.emplace_back(f, c);
                long i = d - 1;
                while (i >= 0 && ++c[static_cast<std::size_t>(i)] == f.q()) c[static_cast<std::size_t>(i--)] = 0;
                if (i < 0) break;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every point with a coprime representative of degree <= B, canonical, infinity last.
inline std::vector<ProjPoint> enumerate_points(const FieldSpec& f, long B) {
    std::vector<ProjPoint> out;
    const auto polys = polys_up_to(f, B);
    for (const auto& y : polys) {
        if (!y.is_monic()) continue;
        for (const auto& x : polys) {
            if (y.deg() > 0 && !poly_gcd(x, y).is_one()) continue;
            out.push_back(ProjPoint::from_canonical(x, y));
        }
    }
    out.push_back(ProjPoint::infinity(f));
    return out;
}

}  // namespace funcdyn
