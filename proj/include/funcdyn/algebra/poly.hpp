#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "funcdyn/algebra/ext_int.hpp"
#include "funcdyn/algebra/field.hpp"

namespace funcdyn {

/// Univariate polynomial over F_q in the variable t; coefficients low to high, no trailing zeros.
class FqPoly {
public:
    FqPoly() = default;
    explicit FqPoly(FieldSpec f) : f_(std::move(f)) {}
    FqPoly(FieldSpec f, std::vector<elem_t> c) : f_(std::move(f)), c_(std::move(c)) { trim(); }

    static FqPoly constant(const FieldSpec& f, elem_t a) { return FqPoly(f, {a}); }
    static FqPoly constant(const FqElem& a) { return constant(a.field(), a.value()); }
    static FqPoly one(const FieldSpec& f) { return constant(f, 1); }
    static FqPoly t(const FieldSpec& f) { return FqPoly(f, {0, 1}); }
    static FqPoly monomial(const FieldSpec& f, elem_t a, std::size_t n) {
        std::vector<elem_t> c(n + 1, 0);
        c[n] = a;
        return FqPoly(f, std::move(c));
    }

    const FieldSpec& field() const { return f_; }
    const std::vector<elem_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1); }
    // Degree with -1 for zero; convenient for loops.
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    elem_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    elem_t lead() const { return c_.empty() ? 0 : c_.back(); }

    FqPoly operator+(const FqPoly& o) const {
        check(o);
        std::vector<elem_t> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.add(coeff(i), o.coeff(i));
        return FqPoly(f_, std::move(r));
    }
    FqPoly operator-() const {
        std::vector<elem_t> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.neg(c_[i]);
        return FqPoly(f_, std::move(r));
    }
    FqPoly operator-(const FqPoly& o) const {
        check(o);
        std::vector<elem_t> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.sub(coeff(i), o.coeff(i));
        return FqPoly(f_, std::move(r));
    }
    FqPoly operator*(const FqPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return FqPoly(f_);
        std::vector<elem_t> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                if (o.c_[j] != 0) r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
        }
        return FqPoly(f_, std::move(r));
    }
    FqPoly scale(elem_t a) const {
        if (a == 0) return FqPoly(f_);
        std::vector<elem_t> r(c_);
        for (auto& x : r) x = f_.mul(x, a);
        return FqPoly(f_, std::move(r));
    }
    FqPoly shift(std::size_t n) const {
        if (is_zero()) return *this;
        std::vector<elem_t> r(n, 0);
        r.insert(r.end(), c_.begin(), c_.end());
        return FqPoly(f_, std::move(r));
    }
    FqPoly& operator+=(const FqPoly& o) { return *this = *this + o; }
    FqPoly& operator-=(const FqPoly& o) { return *this = *this - o; }
    FqPoly& operator*=(const FqPoly& o) { return *this = *this * o; }

    /// Euclidean division; throws ZeroPolynomial on division by zero.
    std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const {
        check(d);
        if (d.is_zero()) fail(Errc::ZeroPolynomial, "division by the zero polynomial");
        if (c_.size() < d.c_.size()) return {FqPoly(f_), *this};
        std::vector<elem_t> r(c_), qv(c_.size() - d.c_.size() + 1, 0);
        const elem_t li = f_.inv(d.lead());
        const std::size_t dd = d.c_.size() - 1;
        for (std::size_t k = r.size(); k-- > dd;) {
            if (r[k] == 0) continue;
            elem_t m = f_.mul(r[k], li);
            qv[k - dd] = m;
            for (std::size_t j = 0; j <= dd; ++j) r[k - dd + j] = f_.sub(r[k - dd + j], f_.mul(m, d.c_[j]));
        }
        r.resize(dd);
        return {FqPoly(f_, std::move(qv)), FqPoly(f_, std::move(r))};
    }
    FqPoly operator%(const FqPoly& d) const { return divmod(d).second; }
    /// Exact quotient; throws NotDivisible when the remainder is nonzero.
    FqPoly operator/(const FqPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) fail(Errc::NotDivisible, "polynomial division is not exact");
        return q;
    }
    bool divides(const FqPoly& n) const { return (n % *this).is_zero(); }

    FqPoly monic() const { return is_zero() ? *this : scale(f_.inv(lead())); }

    FqPoly pow(unsigned long e) const {
        FqPoly r = one(f_), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }
    FqPoly powmod(unsigned long long e, const FqPoly& m) const {
        FqPoly r = one(f_) % m, b = *this % m;
        while (e) {
            if (e & 1) r = (r * b) % m;
            e >>= 1;
            if (e) b = (b * b) % m;
        }
        return r;
    }

    elem_t eval(elem_t x) const {
        elem_t r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = f_.add(f_.mul(r, x), c_[i]);
        return r;
    }
    FqPoly derivative() const {
        if (c_.size() <= 1) return FqPoly(f_);
        std::vector<elem_t> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_.mul(f_.from_int(static_cast<long>(i % f_.p())), c_[i]);
        return FqPoly(f_, std::move(r));
    }
    /// g with g^p = *this; requires every exponent to be a multiple of p.
    FqPoly pth_root() const {
        const std::size_t p = f_.p();
        std::vector<elem_t> r(c_.empty() ? 0 : (c_.size() - 1) / p + 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (i % p != 0) fail(Errc::NotDivisible, "polynomial is not a p-th power");
            r[i / p] = f_.pth_root(c_[i]);
        }
        return FqPoly(f_, std::move(r));
    }
    /// Substitute a polynomial for t.
    FqPoly compose(const FqPoly& g) const {
        FqPoly r(f_);
        for (std::size_t i = c_.size(); i-- > 0;) r = r * g + constant(f_, c_[i]);
        return r;
    }

    friend bool operator==(const FqPoly& a, const FqPoly& b) { return a.c_ == b.c_ && (a.f_ == b.f_ || (a.c_.empty())); }
    friend bool operator!=(const FqPoly& a, const FqPoly& b) { return !(a == b); }
    /// Total order: degree first, then coefficients from the top down.
    friend bool operator<(const FqPoly& a, const FqPoly& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

    std::size_t hash() const {
        std::size_t h = c_.size() * 0x9e3779b97f4a7c15ULL;
        for (auto x : c_) h = (h ^ x) * 0x100000001b3ULL + 0x7f4a7c15;
        return h;
    }

    /// Text form, e.g. "t^3+2*t+1"; coefficient symbols come from the field.
    std::string to_string(const std::string& var = "t") const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            std::string coef = f_.format(c_[i]);
            bool compound = coef.find('+') != std::string::npos || coef.find('*') != std::string::npos ||
                            coef.find('^') != std::string::npos;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += compound && c_.size() > 1 ? "(" + coef + ")" : coef;
                continue;
            }
            if (coef != "1") out += (compound ? "(" + coef + ")" : coef) + "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check(const FqPoly& o) const {
        if (f_.ptr() != o.f_.ptr()) require_same_field(f_, o.f_);
    }

    FieldSpec f_;
    std::vector<elem_t> c_;
};

/// Monic gcd; throws BothZero when both inputs vanish.
inline FqPoly poly_gcd(FqPoly a, FqPoly b) {
    if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

struct Bezout {
    FqPoly g, s, t;  // s*a + t*b = g, g monic
};

inline Bezout ext_gcd(const FqPoly& a, const FqPoly& b) {
    if (a.is_zero() && b.is_zero()) fail(Errc::BothZero, "gcd(0, 0) is undefined");
    const FieldSpec& f = a.field();
    FqPoly r0 = a, r1 = b, s0 = FqPoly::one(f), s1(f), t0(f), t1 = FqPoly::one(f);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FqPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    elem_t li = f.inv(r0.lead());
    return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

/// Multiplicity of the irreducible p in f (f nonzero).
inline long multiplicity(FqPoly f, const FqPoly& p) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "multiplicity in the zero polynomial");
    long m = 0;
    for (;;) {
        auto [q, r] = f.divmod(p);
        if (!r.is_zero()) return m;
        f = std::move(q);
        ++m;
    }
}

struct FqPolyHash {
    std::size_t operator()(const FqPoly& p) const { return p.hash(); }
};

}  // namespace funcdyn
