#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "funcdyn/algebra/factor.hpp"
#include "funcdyn/algebra/place.hpp"
#include "funcdyn/maps/forms.hpp"
#include "funcdyn/maps/linalg.hpp"
#include "funcdyn/maps/residue_map.hpp"
#include "funcdyn/projective.hpp"

namespace funcdyn {

/// Homogeneous resultant: determinant of the Sylvester matrix of (a_d, ..., a_0) and (b_d, ..., b_0).
inline FqPoly sylvester_resultant(const Form& F, const Form& G) {
    const FieldSpec& f = F[0].field();
    if (F.size() == 1) return FqPoly::one(f);
    return bareiss_det(sylvester_matrix<FqPoly>(F, G, FqPoly(f)), FqPoly::one(f), FqPoly(f));
}

/// Endomorphism of P^1 over F_q(t) of degree d >= 1, stored in global normalized form:
/// coefficients in F_q[t] with content 1, and the first nonzero coefficient in the
/// scan order G[0..d], F[0..d] monic. Resultant and bad places are computed on construction.
class RationalMap {
public:
    RationalMap() = default;

    /// From forms over F_q[t].
    RationalMap(Form F, Form G) { init(std::move(F), std::move(G), std::nullopt); }

    /// From forms over F_q(t); denominators are cleared first.
    static RationalMap from_rational(const std::vector<RatFunc>& F, const std::vector<RatFunc>& G) {
        if (F.size() != G.size() || F.empty()) fail(Errc::DegreeMismatch, "forms must share a degree");
        const FieldSpec& f = F[0].field();
        FqPoly l = FqPoly::one(f);
        for (const auto* side : {&F, &G})
            for (auto& c : *side) l = l / poly_gcd(l, c.den()) * c.den();
        Form a, b;
        for (auto& c : F) a.push_back(c.num() * (l / c.den()));
        for (auto& c : G) b.push_back(c.num() * (l / c.den()));
        return RationalMap(std::move(a), std::move(b));
    }

    /// Affine polynomial map X -> sum c_i X^i.
    static RationalMap polynomial(const std::vector<FqPoly>& c) {
        if (c.empty()) fail(Errc::DegreeMismatch, "empty polynomial");
        const FieldSpec& f = c[0].field();
        Form G = form_zero(f, c.size() - 1);
        G[0] = FqPoly::one(f);
        return RationalMap(c, std::move(G));
    }

    /// Map with forms whose resultant is already known (up to the normalization applied here).
    static RationalMap with_known_resultant(Form F, Form G, FqPoly res) {
        RationalMap m;
        m.init(std::move(F), std::move(G), std::move(res));
        return m;
    }

    const FieldSpec& field() const { return F_[0].field(); }
    unsigned degree() const { return static_cast<unsigned>(F_.size() - 1); }
    const Form& F() const { return F_; }
    const Form& G() const { return G_; }
    const FqPoly& resultant() const { return res_; }
    const std::vector<Place>& bad_places() const { return bad_; }
    /// Max coefficient degree.
    long coeff_degree() const { return D_; }
    bool has_good_reduction(const Place& p) const { return std::find(bad_.begin(), bad_.end(), p) == bad_.end(); }

    /// G = Y^d: an affine polynomial map.
    bool is_polynomial() const {
        if (!G_[0].is_one()) return false;
        for (std::size_t i = 1; i < G_.size(); ++i)
            if (!G_[i].is_zero()) return false;
        return true;
    }
    /// Polynomial map whose leading coefficient is a nonzero constant.
    bool is_unit_leading_polynomial() const { return is_polynomial() && F_.back().deg() == 0; }
    bool is_constant_coefficient() const { return D_ <= 0; }

    ProjPoint evaluate(const ProjPoint& P) const {
        if (P.is_affine_integral() && is_polynomial()) {
            FqPoly r = F_.back();
            for (std::size_t i = F_.size() - 1; i-- > 0;) r = r * P.x() + F_[i];
            return ProjPoint::affine(r);
        }
        if (P.is_infinity()) return ProjPoint(F_.back(), G_.back());
        return ProjPoint(form_eval(F_, P.x(), P.y()), form_eval(G_, P.x(), P.y()));
    }

    /// Reduction modulo a place of good reduction.
    ResidueMap reduce(const Place& place) const {
        if (!has_good_reduction(place)) fail(Errc::BadReductionPlace, "map has bad reduction at " + place.to_string());
        const FieldSpec k = place.residue_field();
        std::vector<elem_t> a, b;
        for (auto& c : F_) a.push_back(reduce_poly(c, place, k, D_));
        for (auto& c : G_) b.push_back(reduce_poly(c, place, k, D_));
        return ResidueMap(k, std::move(a), std::move(b));
    }

    friend bool operator==(const RationalMap& a, const RationalMap& b) { return a.F_ == b.F_ && a.G_ == b.G_; }
    friend bool operator!=(const RationalMap& a, const RationalMap& b) { return !(a == b); }

    /// Homogeneous literal "[F : G]".
    std::string to_string() const { return "[" + form_to_string(F_) + " : " + form_to_string(G_) + "]"; }

    /// Affine literal "(num)/(den)" with X standing for X/Y.
    std::string to_affine_string() const {
        auto affine = [](const Form& H) {
            std::string s = form_to_string(H);
            std::string out;
            // Drop Y factors: the dehomogenization at Y = 1.
            for (std::size_t i = 0; i < s.size(); ++i) {
                if (s[i] == 'Y') {
                    if (!out.empty() && out.back() == '*') out.pop_back();
                    std::size_t j = i + 1;
                    if (j < s.size() && s[j] == '^')
                        for (++j; j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])); ++j) {}
                    bool lone = (out.empty() || out.back() == '+') && (j == s.size() || s[j] == '+');
                    if (lone) out += "1";
                    i = j - 1;
                    continue;
                }
                out += s[i];
            }
            return out;
        };
        if (is_polynomial()) return affine(F_);
        return "(" + affine(F_) + ")/(" + affine(G_) + ")";
    }

private:
    void init(Form F, Form G, std::optional<FqPoly> known_res) {
        if (F.size() != G.size() || F.empty()) fail(Errc::DegreeMismatch, "forms must share a degree");
        if (F.size() < 2) fail(Errc::DegreeMismatch, "map degree must be at least 1");
        const FieldSpec f = F[0].field();
        FqPoly content(f);
        for (const auto* side : {&F, &G})
            for (auto& c : *side)
                if (!c.is_zero()) content = content.is_zero() ? c.monic() : poly_gcd(content, c);
        if (content.is_zero()) fail(Errc::BothZero, "both forms vanish");
        elem_t lead = 0;
        for (const auto* side : {&G, &F}) {
            for (auto& c : *side)
                if (!c.is_zero()) { lead = c.lead(); break; }
            if (lead) break;
        }
        // Dividing by content and scaling by a unit u multiplies Res by (u / content)^(2d).
        const elem_t u = f.inv(lead);
        const bool trivial = content.is_one() && u == 1;
        if (!trivial) {
            for (auto* side : {&F, &G})
                for (auto& c : *side) c = (c / content).scale(u);
        }
        F_ = std::move(F);
        G_ = std::move(G);
        D_ = std::max(form_max_coeff_degree(F_), form_max_coeff_degree(G_));
        const unsigned d = degree();
        if (known_res) {
            res_ = std::move(*known_res);
            if (!trivial && !res_.is_zero()) {
                const FqPoly s = content.pow(2 * d);
                res_ = (res_ / s).scale(f.pow(u, 2 * d));
            }
        } else {
            res_ = sylvester_resultant(F_, G_);
        }
        if (res_.is_zero()) fail(Errc::DegenerateMap, "forms share a common root (resultant vanishes)");
        if (res_.deg() > 0) {
            for (auto& p : irreducible_factors(res_)) bad_.push_back(Place::finite_unchecked(p));
        }
        if (res_.deg() < 2 * static_cast<long>(d) * D_) bad_.push_back(Place::infinity(f));
    }

    Form F_, G_;
    FqPoly res_;
    std::vector<Place> bad_;
    long D_ = 0;
};

/// phi o psi.
inline RationalMap compose(const RationalMap& phi, const RationalMap& psi) {
    Form F = form_substitute(phi.F(), psi.F(), psi.G());
    Form G = form_substitute(phi.G(), psi.F(), psi.G());
    // Res(phi o psi) = Res(phi)^deg(psi) * Res(psi)^(deg(phi)^2).
    FqPoly res = phi.resultant().pow(psi.degree()) * psi.resultant().pow(phi.degree() * phi.degree());
    return RationalMap::with_known_resultant(std::move(F), std::move(G), std::move(res));
}

inline RationalMap iterate(const RationalMap& phi, unsigned n) {
    if (n == 0) fail(Errc::IterateZero, "iterate count must be at least 1");
    RationalMap r = phi;
    for (unsigned i = 1; i < n; ++i) r = compose(phi, r);
    return r;
}

/// Constant-coefficient map over F_q(t) from a map over F_q.
inline RationalMap lift(const ResidueMap& m) {
    Form F, G;
    for (auto c : m.F()) F.push_back(FqPoly::constant(m.field(), c));
    for (auto c : m.G()) G.push_back(FqPoly::constant(m.field(), c));
    return RationalMap(std::move(F), std::move(G));
}

}  // namespace funcdyn
