#pragma once

#include <string>

#include "funcdyn/maps/rational_map.hpp"

namespace funcdyn {

/// 2x2 matrix [[a, b], [c, d]] acting by [X : Y] -> [aX + bY : cX + dY].
struct Mobius {
    FqPoly a, b, c, d;

    static Mobius identity(const FieldSpec& f) { return {FqPoly::one(f), FqPoly(f), FqPoly(f), FqPoly::one(f)}; }
    /// X -> X + s.
    static Mobius translation(const FqPoly& s) {
        const FieldSpec& f = s.field();
        return {FqPoly::one(f), s, FqPoly(f), FqPoly::one(f)};
    }

    FqPoly det() const { return a * d - b * c; }

    /// Adjugate: inverse up to the scalar det.
    Mobius inverse() const {
        if (det().is_zero()) fail(Errc::SingularMobius, "singular matrix");
        return {d, -b, -c, a};
    }

    Mobius operator*(const Mobius& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }

    ProjPoint apply(const ProjPoint& P) const {
        if (det().is_zero()) fail(Errc::SingularMobius, "singular matrix");
        return ProjPoint(a * P.x() + b * P.y(), c * P.x() + d * P.y());
    }

    RationalMap as_map() const {
        FqPoly D = det();
        if (D.is_zero()) fail(Errc::SingularMobius, "singular matrix");
        return RationalMap::with_known_resultant({b, a}, {d, c}, D);
    }

    std::string to_string() const {
        return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
    }
};

/// mu o phi o mu^-1.
inline RationalMap conjugate(const RationalMap& phi, const Mobius& mu) {
    if (mu.det().is_zero()) fail(Errc::SingularMobius, "singular matrix");
    return compose(mu.as_map(), compose(phi, mu.inverse().as_map()));
}

}  // namespace funcdyn
