#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "funcdyn/maps/interpolate.hpp"
#include "funcdyn/maps/mobius.hpp"
#include "funcdyn/maps/rational_map.hpp"

namespace funcdyn {

struct ConjugacyResult {
    enum class Kind { SmallSet, Conjugate, Inapplicable, Failed };
    Kind kind = Kind::Failed;
    bool polynomial_case = false;
    std::size_t set_size = 0;
    std::size_t threshold = 0;
    unsigned extension_degree = 1;  // e with the conjugacy realized over F_{q^e}(t)
    FieldSpec extension;
    std::optional<Mobius> mu;       // over F_{q^e}[t], in the original t-coordinate
    std::optional<ResidueMap> psi;  // over F_{q^e}
    std::string note;
};

namespace detail {

// sum c_i (alpha t + beta)^i (gamma t + delta)^(M - i): the homogeneous substitution t -> (alpha t + beta)/(gamma t + delta).
inline FqPoly substitute_t(const FqPoly& c, elem_t alpha, elem_t beta, elem_t gamma, elem_t delta, long M) {
    const FieldSpec& f = c.field();
    const FqPoly num(f, {beta, alpha}), den(f, {delta, gamma});
    FqPoly r(f);
    for (long i = 0; i <= c.deg(); ++i)
        if (c.coeff(static_cast<std::size_t>(i)))
            r += (num.pow(static_cast<unsigned long>(i)) * den.pow(static_cast<unsigned long>(M - i)))
                     .scale(c.coeff(static_cast<std::size_t>(i)));
    return r;
}

inline long max_deg(std::initializer_list<const FqPoly*> ps) {
    long m = 0;
    for (auto* p : ps) m = std::max(m, p->deg());
    return m;
}

// The automorphism t -> a + 1/t, which carries the place t - a to infinity.
struct PlaceSwap {
    elem_t a;
    FqPoly fwd(const FqPoly& c, long M) const { return substitute_t(c, a, 1, 1, 0, M); }
    FqPoly back(const FqPoly& c, long M) const {
        const FieldSpec& f = c.field();
        return substitute_t(c, 0, 1, 1, f.neg(a), M);
    }
    ProjPoint point(const ProjPoint& P) const {
        const long M = P.height();
        return ProjPoint(fwd(P.x(), M), fwd(P.y(), M));
    }
    RationalMap map(const RationalMap& phi) const {
        const long M = std::max(0L, phi.coeff_degree());
        Form F, G;
        for (auto& c : phi.F()) F.push_back(fwd(c, M));
        for (auto& c : phi.G()) G.push_back(fwd(c, M));
        return RationalMap(std::move(F), std::move(G));
    }
    Mobius mobius_back(const Mobius& m) const {
        const long M = max_deg({&m.a, &m.b, &m.c, &m.d});
        return {back(m.a, M), back(m.b, M), back(m.c, M), back(m.d, M)};
    }
};

inline Form embed_form(const Form& F, const FieldSpec& E) {
    Form r;
    for (auto& c : F) r.push_back(embed(c, E));
    return r;
}

inline Mobius embed_mobius(const Mobius& m, const FieldSpec& E) {
    return {embed(m.a, E), embed(m.b, E), embed(m.c, E), embed(m.d, E)};
}

// Checks mu o phi = psi o mu as maps, by cross-multiplying the two pairs of forms over E[t].
inline bool verify_conjugacy(const RationalMap& phi, const Mobius& mu, const ResidueMap& psi) {
    const FieldSpec& E = psi.field();
    if (psi.degree() != phi.degree()) return false;
    const Form F = embed_form(phi.F(), E), G = embed_form(phi.G(), E);
    const Mobius m = embed_mobius(mu, E);
    Form LF = form_add(form_scale(F, m.a), form_scale(G, m.b));
    Form LG = form_add(form_scale(F, m.c), form_scale(G, m.d));
    Form pF, pG;
    for (auto c : psi.F()) pF.push_back(FqPoly::constant(E, c));
    for (auto c : psi.G()) pG.push_back(FqPoly::constant(E, c));
    const Form muX{m.b, m.a}, muY{m.d, m.c};
    Form RF = form_substitute(pF, muX, muY), RG = form_substitute(pG, muX, muY);
    Form lhs = form_mul(LF, RG), rhs = form_mul(LG, RF);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (lhs[i] != rhs[i]) return false;
    return true;
}

}  // namespace detail

/// Pairs of points where the equidistance hypothesis fails at some finite place, if any.
/// Equidistance at every finite place means all cross terms of canonical coordinates are associates.
inline std::optional<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>>
finite_equidistance_violation(const std::vector<ProjPoint>& P) {
    std::optional<FqPoly> ref;
    std::pair<std::size_t, std::size_t> ref_pair{0, 0};
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j) {
            FqPoly c = cross_term(P[i], P[j]).monic();
            if (!ref) {
                ref = c;
                ref_pair = {i, j};
            } else if (c != *ref) {
                return std::make_pair(ref_pair, std::make_pair(i, j));
            }
        }
    return std::nullopt;
}

/// For a phi-invariant set with constant pairwise distances away from the bad place, either
/// certify that the set is small (<= d for polynomial maps on affine points, <= 2d in general)
/// or exhibit mu and psi over a finite field with mu o phi o mu^-1 = psi.
///
/// `subset` lists indices of P' (points whose images must lie in P); empty means all of P.
inline ConjugacyResult detect_constant_field_conjugacy(const RationalMap& phi_in, const std::vector<ProjPoint>& P,
                                                       std::vector<std::size_t> subset = {}) {
    ConjugacyResult out;
    const FieldSpec& K = phi_in.field();
    const unsigned d = phi_in.degree();
    if (subset.empty())
        for (std::size_t i = 0; i < P.size(); ++i) subset.push_back(i);
    out.set_size = subset.size();

    std::map<ProjPoint, std::size_t> index;
    for (std::size_t i = 0; i < P.size(); ++i)
        if (!index.emplace(P[i], i).second) fail(Errc::DuplicateInput, "repeated point " + P[i].to_string());
    std::vector<std::size_t> image(P.size(), P.size());
    for (auto i : subset) {
        auto it = index.find(phi_in.evaluate(P[i]));
        if (it == index.end())
            fail(Errc::HypothesisViolated, "image of " + P[i].to_string() + " leaves the set");
        image[i] = it->second;
    }

    bool all_affine = true;
    for (auto& p : P) all_affine = all_affine && !p.is_infinity();
    out.polynomial_case = phi_in.is_unit_leading_polynomial() && all_affine;

    if (out.polynomial_case) {
        // Differences x_j - x_i must all agree up to F_q^*.
        std::vector<RatFunc> x;
        for (auto& p : P) x.emplace_back(p.x(), p.y());
        out.threshold = d;
        if (P.size() >= 2) {
            const RatFunc base = x[1] - x[0];
            for (std::size_t i = 0; i < P.size(); ++i)
                for (std::size_t j = i + 1; j < P.size(); ++j) {
                    RatFunc r = (x[j] - x[i]) / base;
                    if (!r.is_polynomial() || r.num().deg() != 0)
                        fail(Errc::HypothesisViolated, "differences " + P[i].to_string() + " - " + P[j].to_string() +
                                                           " and " + P[0].to_string() + " - " + P[1].to_string() +
                                                           " are not unit multiples");
                }
        }
        if (subset.size() <= d) {
            out.kind = ConjugacyResult::Kind::SmallSet;
            return out;
        }
        // eta(X) = (X - x0)/(x1 - x0) sends P into F_q.
        const RatFunc base = x[1] - x[0];
        std::vector<elem_t> u(P.size());
        for (std::size_t i = 0; i < P.size(); ++i) u[i] = ((x[i] - x[0]) / base).num().coeff(0);
        std::vector<elem_t> xs, ys;
        for (auto i : subset) {
            xs.push_back(u[i]);
            ys.push_back(u[image[i]]);
        }
        auto coeffs = lagrange_interpolate(K, xs, ys);
        for (std::size_t k = d + 1; k < coeffs.size(); ++k) {
            if (coeffs[k] != 0) {
                out.kind = ConjugacyResult::Kind::Failed;
                out.note = "interpolating polynomial exceeds degree d";
                return out;
            }
        }
        coeffs.resize(d + 1, 0);
        std::vector<elem_t> G(d + 1, 0);
        G[0] = 1;
        ResidueMap psi(K, coeffs, G);
        const FqPoly L = base.den() * x[0].den() / poly_gcd(base.den(), x[0].den());
        const RatFunc Lr(L);
        Mobius eta{L, ((-x[0]) * Lr).num(), FqPoly(K), (base * Lr).num()};
        out.extension = K;
        out.mu = eta;
        out.psi = psi;
        out.kind = detail::verify_conjugacy(phi_in, eta, psi) ? ConjugacyResult::Kind::Conjugate
                                                               : ConjugacyResult::Kind::Failed;
        if (out.kind == ConjugacyResult::Kind::Failed) out.note = "interpolated polynomial does not conjugate";
        return out;
    }

    out.threshold = 2 * d;
    // Move the excluded place to infinity.
    const auto& bad = phi_in.bad_places();
    std::optional<detail::PlaceSwap> swap;
    if (bad.size() > 1) {
        out.kind = ConjugacyResult::Kind::Inapplicable;
        out.note = "more than one place of bad reduction";
        return out;
    }
    if (bad.size() == 1 && bad[0].is_finite()) {
        if (bad[0].degree() != 1) {
            out.kind = ConjugacyResult::Kind::Inapplicable;
            out.note = "bad place of degree > 1 cannot be moved to infinity over F_q(t)";
            return out;
        }
        swap = detail::PlaceSwap{K.neg(bad[0].poly().coeff(0))};
    }
    const RationalMap phi = swap ? swap->map(phi_in) : phi_in;
    std::vector<ProjPoint> Q;
    for (auto& p : P) Q.push_back(swap ? swap->point(p) : p);

    if (auto v = finite_equidistance_violation(Q)) {
        auto [a, b] = *v;
        fail(Errc::HypothesisViolated, "pairs (" + P[a.first].to_string() + ", " + P[a.second].to_string() + ") and (" +
                                           P[b.first].to_string() + ", " + P[b.second].to_string() +
                                           ") have different finite distances");
    }
    if (subset.size() <= 2 * d) {
        out.kind = ConjugacyResult::Kind::SmallSet;
        return out;
    }

    // M1 = [[y0, -x0], [a, b]] with a x0 + b y0 = 1 sends Q0 to [0 : 1].
    const Bezout bz = ext_gcd(Q[0].x(), Q[0].y());
    const Mobius M1{Q[0].y(), -Q[0].x(), bz.s, bz.t};
    std::vector<FqPoly> X, Y;
    for (auto& q : Q) {
        ProjPoint r = M1.apply(q);
        X.push_back(r.x());
        Y.push_back(r.y());
    }
    // Q_i = [x1 : y1 + u_i] after unit rescaling.
    const FqPoly x1 = X[1];
    std::vector<elem_t> ui(Q.size(), 0);
    for (std::size_t i = 1; i < Q.size(); ++i) {
        const elem_t c = K.div(X[i].lead(), x1.lead());
        if (X[i] != x1.scale(c)) fail(Errc::HypothesisViolated, "first coordinates are not unit multiples");
        Y[i] = Y[i].scale(K.inv(c));
        if (i > 1) {
            FqPoly diff = Y[i] - Y[1];
            if (diff.deg() != 0) fail(Errc::HypothesisViolated, "second coordinates do not differ by units");
            ui[i] = diff.coeff(0);
        }
    }
    const FqPoly y1 = Y[1];

    for (unsigned e = 1; e <= 8; ++e) {
        FieldSpec E = make_extension(K, e);
        // Smallest u (by encoding) with u + u_i != 0 for all i > 0.
        std::optional<elem_t> u;
        for (elem_t cand = 0; cand < E.q() && !u; ++cand) {
            bool ok = true;
            for (std::size_t i = 1; i < Q.size() && ok; ++i) ok = E.add(cand, ui[i]) != 0;
            if (ok) u = cand;
        }
        if (!u) continue;
        const FqPoly uE = FqPoly::constant(E, *u);
        const Mobius M2{FqPoly::one(E), FqPoly(E), uE - embed(y1, E), embed(x1, E)};
        const Mobius mu = M2 * detail::embed_mobius(M1, E);
        std::vector<ResiduePoint> z(Q.size());
        z[0] = ResiduePoint(E, 0, 1);
        for (std::size_t i = 1; i < Q.size(); ++i) z[i] = ResiduePoint(E, 1, E.add(*u, ui[i]));
        std::vector<Sample> samples;
        for (auto i : subset) samples.emplace_back(z[i], z[image[i]]);
        auto psi = rational_interpolate(E, samples, d);
        if (!psi) {
            // A solution over F is guaranteed once #F > 2d + 1.
            if (E.q() > 2 * d + 1) {
                out.kind = ConjugacyResult::Kind::Failed;
                out.note = "no admissible interpolation over F_" + std::to_string(E.q());
                return out;
            }
            continue;
        }
        out.extension = E;
        out.extension_degree = e;
        out.psi = psi;
        const bool ok = detail::verify_conjugacy(phi, mu, *psi);
        out.mu = swap ? swap->mobius_back(mu) : mu;
        out.kind = ok ? ConjugacyResult::Kind::Conjugate : ConjugacyResult::Kind::Failed;
        if (!ok) out.note = "interpolated map does not conjugate";
        return out;
    }
    out.kind = ConjugacyResult::Kind::Failed;
    out.note = "no suitable constant field extension found";
    return out;
}

}  // namespace funcdyn
