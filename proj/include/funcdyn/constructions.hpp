#pragma once

#include <optional>
#include <set>
#include <vector>

#include "funcdyn/dynamics/orbit.hpp"
#include "funcdyn/maps/interpolate.hpp"
#include "funcdyn/maps/rational_map.hpp"

namespace funcdyn {

/// A self-map of F_q given by its values on the encodings 0..q-1.
struct GraphSpec {
    FieldSpec field;
    std::vector<elem_t> table;
};

/// Polynomial over F_q inducing g on F_q.
///
/// Without a degree, returns the representative of degree < q. With d >= q, adds
/// X^{d-q} (X^q - X) so the result is monic of degree exactly d.
inline RationalMap interpolate_graph(const GraphSpec& g, std::optional<unsigned> d = std::nullopt) {
    const FieldSpec& f = g.field;
    const unsigned q = f.q();
    if (g.table.size() != q) fail(Errc::DegreeMismatch, "graph table needs exactly q entries");
    for (auto v : g.table)
        if (v >= q) fail(Errc::ParseError, "graph value outside the field");
    if (d && *d < q) fail(Errc::DegreeTooSmall, "target degree must be at least q");
    std::vector<elem_t> xs(q);
    for (elem_t i = 0; i < q; ++i) xs[i] = i;
    std::vector<elem_t> c = lagrange_interpolate(f, xs, g.table);
    if (d) {
        c.resize(*d + 1, 0);
        c[*d] = f.add(c[*d], 1);
        c[*d - q + 1] = f.sub(c[*d - q + 1], 1);
    }
    while (c.size() > 1 && c.back() == 0) c.pop_back();
    if (c.size() < 2) fail(Errc::DegreeTooSmall, "the table is constant; pass a degree >= q");
    std::vector<FqPoly> coeffs;
    for (auto a : c) coeffs.push_back(FqPoly::constant(f, a));
    return RationalMap::polynomial(coeffs);
}

/// prod (X - f_i) + X, which fixes every f_i.
inline RationalMap fixed_points_poly(const std::vector<FqPoly>& fs) {
    if (fs.empty()) fail(Errc::DegreeTooSmall, "need at least one fixed point");
    const FieldSpec& f = fs[0].field();
    std::set<FqPoly> seen;
    for (auto& x : fs)
        if (!seen.insert(x).second) fail(Errc::DuplicateInput, "fixed points must be distinct: " + x.to_string());
    std::vector<FqPoly> c{FqPoly::one(f)};
    for (auto& x : fs) {
        std::vector<FqPoly> next(c.size() + 1, FqPoly(f));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * x;
        }
        c = std::move(next);
    }
    c[1] += FqPoly::one(f);
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    if (c.size() < 2) fail(Errc::DegreeTooSmall, "the construction collapses to a constant");
    return RationalMap::polynomial(c);
}

/// X prod (X^n - f_i^n) + wX with n the order of w: 0 is fixed and each f_i lies on
/// the n-cycle f_i -> w f_i -> ... -> w^{n-1} f_i.
inline RationalMap multi_cycle_poly(const FqElem& w, const std::vector<FqPoly>& fs) {
    if (w.is_zero()) fail(Errc::ZeroElement, "w must be a unit");
    const std::uint64_t n = mul_order(w);
    if (n == 1) fail(Errc::UnitOrderOne, "w must have multiplicative order > 1");
    if (fs.empty()) fail(Errc::DegreeTooSmall, "need at least one cycle seed");
    const FieldSpec& f = w.field();
    std::set<FqPoly> powers;
    for (auto& x : fs) {
        require_same_field(f, x.field());
        if (x.is_zero()) fail(Errc::ZeroElement, "cycle seeds must be nonzero");
        if (!powers.insert(x.pow(n)).second) fail(Errc::PowersCollide, "n-th powers of the seeds must be distinct");
    }
    // Coefficients of prod (X^n - f_i^n), stored in steps of n.
    std::vector<FqPoly> c{FqPoly::one(f)};
    for (auto& pw : powers) {
        std::vector<FqPoly> next(c.size() + 1, FqPoly(f));
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= c[i] * pw;
        }
        c = std::move(next);
    }
    std::vector<FqPoly> out(n * fs.size() + 2, FqPoly(f));
    for (std::size_t i = 0; i < c.size(); ++i) out[i * n + 1] = c[i];
    out[1] += FqPoly::constant(w);
    return RationalMap::polynomial(out);
}

/// psi / X^{2q-2} where psi is monic of degree 2q-2 and cycles 0 -> 1 -> w_1 -> ... -> w_{q-2} -> 0
/// on F_q, with the w_i in enumerate_units order. The orbit of 0 is a (q+1)-cycle through infinity.
inline RationalMap sharp_rational_map(const FieldSpec& f) {
    const unsigned q = f.q();
    std::vector<elem_t> order{0};
    for (auto& u : enumerate_units(f)) order.push_back(u.value());
    GraphSpec g{f, std::vector<elem_t>(q)};
    for (std::size_t i = 0; i < order.size(); ++i) g.table[order[i]] = order[(i + 1) % order.size()];
    const unsigned d = 2 * q - 2;
    const RationalMap psi = interpolate_graph(g, d);
    Form G = form_zero(f, d);
    G[d] = FqPoly::one(f);
    RationalMap phi(psi.F(), std::move(G));

    const OrbitRecord orb = orbit(phi, ProjPoint::affine(FqPoly(f)));
    if (!orb.closed() || !orb.transient.empty() || orb.cycle.size() != q + 1 || phi.bad_places().size() > 1)
        fail(Errc::HypothesisViolated, "sharp construction did not produce a (q+1)-cycle");
    return phi;
}

}  // namespace funcdyn
