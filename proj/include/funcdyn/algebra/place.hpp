#pragma once

#include <optional>
#include <string>

#include "funcdyn/algebra/factor.hpp"
#include "funcdyn/algebra/ratfunc.hpp"

namespace funcdyn {

/// A place of F_q(t): a monic irreducible polynomial or the degree valuation at infinity.
class Place {
public:
    static Place infinity(const FieldSpec& f) { return Place(f, std::nullopt); }
    /// Finite place; pi must be monic irreducible (checked).
    static Place finite(const FqPoly& pi) {
        if (!pi.is_monic() || !is_irreducible(pi)) fail(Errc::ReducibleModulus, "place polynomial must be monic irreducible");
        return Place(pi.field(), pi);
    }
    /// Finite place without the irreducibility check, for polynomials already known irreducible.
    static Place finite_unchecked(const FqPoly& pi) { return Place(pi.field(), pi); }

    bool is_infinite() const { return !pi_.has_value(); }
    bool is_finite() const { return pi_.has_value(); }
    const FqPoly& poly() const { return *pi_; }
    const FieldSpec& base_field() const { return f_; }
    unsigned degree() const { return pi_ ? static_cast<unsigned>(pi_->deg()) : 1u; }
    std::uint64_t residue_size() const {
        std::uint64_t n = 1;
        for (unsigned i = 0; i < degree(); ++i) n *= f_.q();
        return n;
    }
    /// k(pi) = F_q[t]/(pi) as a tower over F_q; F_q itself at infinity.
    FieldSpec residue_field() const { return pi_ ? make_tower(f_, *pi_, "t") : f_; }

    Valuation valuation(const FqPoly& a) const {
        if (a.is_zero()) return Valuation::pos_inf();
        if (!pi_) return Valuation(-a.deg());
        return Valuation(multiplicity(a, *pi_));
    }
    Valuation valuation(const RatFunc& r) const {
        if (r.is_zero()) return Valuation::pos_inf();
        return valuation(r.num()) - valuation(r.den());
    }

    friend bool operator==(const Place& a, const Place& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
        return *a.pi_ == *b.pi_;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
    /// Finite places by polynomial order, infinity last.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return *a.pi_ < *b.pi_;
    }

    std::string to_string() const { return pi_ ? pi_->to_string() : "inf"; }

private:
    Place(FieldSpec f, std::optional<FqPoly> pi) : f_(std::move(f)), pi_(std::move(pi)) {}

    FieldSpec f_;
    std::optional<FqPoly> pi_;
};

inline Valuation valuation(const RatFunc& r, const Place& place) { return place.valuation(r); }

/// Monic irreducibles of degree exactly n over f, in enumeration order.
inline std::vector<FqPoly> irreducibles_of_degree(const FieldSpec& f, unsigned n) {
    std::vector<FqPoly> out;
    for_each_monic(f, n, [&](const FqPoly& p) {
        if (is_irreducible(p)) out.push_back(p);
        return false;
    });
    return out;
}

/// All finite places of degree <= n, then infinity.
inline std::vector<Place> places_up_to(const FieldSpec& f, unsigned n) {
    std::vector<Place> out;
    for (unsigned d = 1; d <= n; ++d)
        for (auto& p : irreducibles_of_degree(f, d)) out.push_back(Place::finite_unchecked(p));
    out.push_back(Place::infinity(f));
    return out;
}

}  // namespace funcdyn
