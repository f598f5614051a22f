#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "funcdyn/algebra/factor.hpp"
#include "funcdyn/algebra/ratfunc.hpp"
#include "funcdyn/maps/rational_map.hpp"
#include "funcdyn/projective.hpp"

namespace funcdyn {

/// Literal grammar shared by elements, polynomials, points and maps:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/')? unary)*        juxtaposition multiplies: "2t", "t(X+1)"
///   unary := ('+' | '-') unary | power
///   power := atom ('^' '-'? integer)?
///   atom  := integer | 't' | 'X' | 'Y' | field symbol | '(' expr ')'
/// Integers are read modulo p; the field symbol (usually "g") is the generator of F_q over F_p.
namespace detail {

// Polynomial in X, Y with coefficients in F_q(t), keyed by (deg_X, deg_Y).
using Bivar = std::map<std::pair<unsigned, unsigned>, RatFunc>;

struct Frac {
    Bivar num, den;
};

class LiteralParser {
public:
    LiteralParser(FieldSpec f, std::string_view text, bool allow_xy, std::string var = "t")
        : f_(std::move(f)), s_(text), allow_xy_(allow_xy), var_(std::move(var)) {}

    Frac parse_all() {
        Frac v = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail(Errc::ParseError, what + " at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    bool starts_atom() {
        skip();
        if (pos_ >= s_.size()) return false;
        const char c = s_[pos_];
        return c == '(' || std::isalnum(static_cast<unsigned char>(c));
    }

    RatFunc scalar(elem_t a) const { return RatFunc(FqPoly::constant(f_, a)); }
    Bivar constant(const RatFunc& c) const {
        Bivar b;
        if (!c.is_zero()) b.emplace(std::make_pair(0u, 0u), c);
        return b;
    }
    Frac frac(Bivar n) const { return {std::move(n), constant(scalar(1))}; }

    static Bivar add(const Bivar& a, const Bivar& b) {
        Bivar r = a;
        for (auto& [k, c] : b) {
            auto it = r.find(k);
            if (it == r.end()) {
                r.emplace(k, c);
            } else {
                it->second = it->second + c;
                if (it->second.is_zero()) r.erase(it);
            }
        }
        return r;
    }
    static Bivar neg(const Bivar& a) {
        Bivar r;
        for (auto& [k, c] : a) r.emplace(k, -c);
        return r;
    }
    static Bivar mul(const Bivar& a, const Bivar& b) {
        Bivar r;
        for (auto& [ka, ca] : a)
            for (auto& [kb, cb] : b) {
                const std::pair<unsigned, unsigned> k{ka.first + kb.first, ka.second + kb.second};
                const RatFunc c = ca * cb;
                auto it = r.find(k);
                if (it == r.end()) {
                    r.emplace(k, c);
                } else {
                    it->second = it->second + c;
                    if (it->second.is_zero()) r.erase(it);
                }
            }
        return r;
    }

    Frac expr() {
        Frac v = term();
        for (;;) {
            if (eat('+')) {
                Frac w = term();
                v = {add(mul(v.num, w.den), mul(w.num, v.den)), mul(v.den, w.den)};
            } else if (eat('-')) {
                Frac w = term();
                v = {add(mul(v.num, w.den), neg(mul(w.num, v.den))), mul(v.den, w.den)};
            } else {
                return v;
            }
        }
    }

    Frac term() {
        Frac v = unary();
        for (;;) {
            if (eat('*')) {
                Frac w = unary();
                v = {mul(v.num, w.num), mul(v.den, w.den)};
            } else if (eat('/')) {
                Frac w = unary();
                if (w.num.empty()) error("division by zero");
                v = {mul(v.num, w.den), mul(v.den, w.num)};
            } else if (starts_atom()) {
                Frac w = unary();
                v = {mul(v.num, w.num), mul(v.den, w.den)};
            } else {
                return v;
            }
        }
    }

    Frac unary() {
        if (eat('-')) {
            Frac v = unary();
            return {neg(v.num), v.den};
        }
        if (eat('+')) return unary();
        return power();
    }

    Frac power() {
        Frac base = atom();
        if (!eat('^')) return base;
        const bool negative = eat('-');
        skip();
        const unsigned long e = integer();
        if (e > kMaxExponent) error("exponent too large");
        if (negative) {
            if (base.num.empty()) error("zero to a negative power");
            std::swap(base.num, base.den);
        }
        Frac r = frac(constant(scalar(1)));
        for (unsigned long b = e; b; b >>= 1) {
            if (b & 1) r = {mul(r.num, base.num), mul(r.den, base.den)};
            if (b > 1) base = {mul(base.num, base.num), mul(base.den, base.den)};
        }
        return r;
    }

    unsigned long integer() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected an integer");
        unsigned long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            if (v > (~0ul - 9) / 10) error("integer too large");
            v = v * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
        }
        return v;
    }

    Frac atom() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        if (eat('(')) {
            Frac v = expr();
            if (!eat(')')) error("expected ')'");
            return v;
        }
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const unsigned long n = integer();
            return frac(constant(scalar(f_.from_int(static_cast<long>(n % f_.p())))));
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) error("unexpected '" + std::string(1, c) + "'");
        // Identifiers are single letters so that "tX" or "gt" read as products.
        std::string id(1, c);
        ++pos_;
        if (id == var_) return frac(constant(RatFunc(FqPoly::monomial(f_, 1, 1))));
        if (id == "X" || id == "Y") {
            if (!allow_xy_) error("variable " + id + " is not allowed here");
            Bivar b;
            b.emplace(id == "X" ? std::make_pair(1u, 0u) : std::make_pair(0u, 1u), scalar(1));
            return frac(std::move(b));
        }
        if (f_.q() != f_.p() && id == f_.symbol()) return frac(constant(scalar(f_.generator())));
        error("unknown symbol '" + id + "'");
    }

    static constexpr unsigned long kMaxExponent = 4096;

    FieldSpec f_;
    std::string_view s_;
    std::size_t pos_ = 0;
    bool allow_xy_;
    std::string var_;
};

inline bool has_xy(const Bivar& b) {
    for (auto& [k, c] : b)
        if (k.first || k.second) return true;
    return false;
}

inline RatFunc constant_value(const Bivar& b, const FieldSpec& f) {
    auto it = b.find({0u, 0u});
    return it == b.end() ? RatFunc(f) : it->second;
}

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

// Splits "[A : B]" into A and B; nullopt when the text is not bracketed.
inline std::optional<std::pair<std::string, std::string>> split_bracket(const std::string& s) {
    if (s.empty() || s.front() != '[') return std::nullopt;
    if (s.back() != ']') fail(Errc::ParseError, "unterminated '[' in \"" + s + "\"");
    int depth = 0;
    std::optional<std::size_t> colon;
    for (std::size_t i = 1; i + 1 < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        else if (s[i] == ')') --depth;
        else if (s[i] == ':' && depth == 0) {
            if (colon) fail(Errc::ParseError, "more than one ':' in \"" + s + "\"");
            colon = i;
        }
    }
    if (!colon) fail(Errc::ParseError, "expected ':' in \"" + s + "\"");
    return std::make_pair(s.substr(1, *colon - 1), s.substr(*colon + 1, s.size() - *colon - 2));
}

// Univariate polynomials over F_q(t), low to high, for cancelling common factors of affine maps.
using KPoly = std::vector<RatFunc>;

inline void kpoly_trim(KPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline KPoly kpoly_rem(KPoly a, const KPoly& b) {
    while (a.size() >= b.size()) {
        const RatFunc c = a.back() / b.back();
        const std::size_t sh = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = a[sh + i] - c * b[i];
        kpoly_trim(a);
    }
    return a;
}

inline KPoly kpoly_div(KPoly a, const KPoly& b) {
    KPoly q(a.size() - b.size() + 1, RatFunc(b[0].field()));
    while (!a.empty() && a.size() >= b.size()) {
        const RatFunc c = a.back() / b.back();
        const std::size_t sh = a.size() - b.size();
        q[sh] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = a[sh + i] - c * b[i];
        kpoly_trim(a);
    }
    return q;
}

inline KPoly kpoly_gcd(KPoly a, KPoly b) {
    while (!b.empty()) {
        KPoly r = kpoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline KPoly to_kpoly(const Bivar& b, const FieldSpec& f) {
    KPoly out;
    for (auto& [k, c] : b) {
        if (out.size() <= k.first) out.resize(k.first + 1, RatFunc(f));
        out[k.first] = c;
    }
    kpoly_trim(out);
    return out;
}

// Coefficients by X-degree of a form homogeneous of degree d; throws if not homogeneous.
inline std::vector<RatFunc> form_coefficients(const Bivar& b, long d, const FieldSpec& f) {
    std::vector<RatFunc> out(static_cast<std::size_t>(d) + 1, RatFunc(f));
    for (auto& [k, c] : b) {
        if (static_cast<long>(k.first + k.second) != d) fail(Errc::DegreeMismatch, "form is not homogeneous of degree " + std::to_string(d));
        out[k.first] = c;
    }
    return out;
}

inline long total_degree(const Bivar& b) {
    long d = -1;
    for (auto& [k, c] : b) d = std::max(d, static_cast<long>(k.first + k.second));
    return d;
}

}  // namespace detail

/// Element of F_q(t).
inline RatFunc parse_ratfunc(const FieldSpec& f, std::string_view text) {
    detail::Frac v = detail::LiteralParser(f, text, false).parse_all();
    return detail::constant_value(v.num, f) / detail::constant_value(v.den, f);
}

/// Element of F_q[t]; rejects proper fractions.
inline FqPoly parse_poly(const FieldSpec& f, std::string_view text, const std::string& var = "t") {
    detail::Frac v = detail::LiteralParser(f, text, false, var).parse_all();
    const RatFunc r = detail::constant_value(v.num, f) / detail::constant_value(v.den, f);
    if (!r.is_polynomial()) fail(Errc::ParseError, "expected a polynomial in " + var + ": \"" + std::string(text) + "\"");
    return r.num();
}

/// Element of F_q.
inline FqElem parse_element(const FieldSpec& f, std::string_view text) {
    const FqPoly p = parse_poly(f, text);
    if (p.deg() > 0) fail(Errc::ParseError, "expected a constant: \"" + std::string(text) + "\"");
    return f.element(p.coeff(0));
}

/// "inf", "[x : y]", or an affine value x in F_q(t).
inline ProjPoint parse_point(const FieldSpec& f, std::string_view text) {
    const std::string s = detail::trim(text);
    if (s == "inf" || s == "\xE2\x88\x9E") return ProjPoint::infinity(f);
    if (auto parts = detail::split_bracket(s)) return ProjPoint(parse_ratfunc(f, parts->first), parse_ratfunc(f, parts->second));
    return ProjPoint::affine(parse_ratfunc(f, s));
}

/// Homogeneous "[F : G]" in X, Y, or an affine rational function of X such as "(X^2+t)/X^2".
/// Coefficients may be rational functions of t; an optional "phi =" prefix is ignored.
inline RationalMap parse_map(const FieldSpec& f, std::string_view text) {
    std::string s = detail::trim(text);
    if (auto eq = s.find('='); eq != std::string::npos) {
        const std::string lhs = detail::trim(std::string_view(s).substr(0, eq));
        if (lhs.empty() || !std::all_of(lhs.begin(), lhs.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }))
            fail(Errc::ParseError, "malformed map literal \"" + s + "\"");
        s = detail::trim(std::string_view(s).substr(eq + 1));
    }
    if (auto parts = detail::split_bracket(s)) {
        auto side = [&](const std::string& t) {
            detail::Frac v = detail::LiteralParser(f, t, true).parse_all();
            if (detail::has_xy(v.den)) fail(Errc::ParseError, "forms must be polynomial in X and Y: \"" + t + "\"");
            const RatFunc c = detail::constant_value(v.den, f);
            detail::Bivar out;
            for (auto& [k, a] : v.num) out.emplace(k, a / c);
            return out;
        };
        const detail::Bivar F = side(parts->first), G = side(parts->second);
        const long d = std::max(detail::total_degree(F), detail::total_degree(G));
        if (d < 1) fail(Errc::DegreeMismatch, "map degree must be at least 1");
        return RationalMap::from_rational(detail::form_coefficients(F, d, f), detail::form_coefficients(G, d, f));
    }
    detail::Frac v = detail::LiteralParser(f, s, true).parse_all();
    for (const auto* b : {&v.num, &v.den})
        for (auto& [k, c] : *b)
            if (k.second) fail(Errc::ParseError, "affine literal must not use Y: \"" + s + "\"");
    detail::KPoly num = detail::to_kpoly(v.num, f), den = detail::to_kpoly(v.den, f);
    if (den.empty()) fail(Errc::ParseError, "division by zero in \"" + s + "\"");
    if (!num.empty()) {
        detail::KPoly g = detail::kpoly_gcd(num, den);
        if (g.size() > 1) {
            num = detail::kpoly_div(num, g);
            den = detail::kpoly_div(den, g);
        }
    }
    const std::size_t d = std::max(num.size(), den.size()) - 1;
    if (d < 1) fail(Errc::DegreeMismatch, "map degree must be at least 1: \"" + s + "\"");
    num.resize(d + 1, RatFunc(f));
    den.resize(d + 1, RatFunc(f));
    return RationalMap::from_rational(num, den);
}

/// F_q from the CLI flags. q alone picks the default modulus; p and k may be given instead of or
/// alongside q; a modulus is a monic polynomial in g over F_p and must be irreducible.
inline FieldSpec parse_field(std::optional<std::uint64_t> q, std::optional<std::uint32_t> p, std::optional<unsigned> k,
                             const std::optional<std::string>& modulus) {
    std::uint32_t pp = 0;
    unsigned kk = 1;
    if (q) {
        auto [a, b] = split_prime_power(*q);
        pp = a;
        kk = b;
        if (p && *p != pp) fail(Errc::UsageError, "--p disagrees with --q");
        if (k && *k != kk) fail(Errc::UsageError, "--k disagrees with --q");
    } else if (p) {
        if (!detail::is_prime(*p)) fail(Errc::CompositeP, std::to_string(*p) + " is not prime");
        pp = *p;
        kk = k.value_or(1);
        if (kk == 0) fail(Errc::NotPrimePower, "--k must be positive");
    } else {
        fail(Errc::UsageError, "a field is required: pass --q or --p");
    }
    std::uint64_t order = 1;
    for (unsigned i = 0; i < kk; ++i) {
        order *= pp;
        if (order > detail::kMaxFieldOrder) fail(Errc::FieldTooLarge, "field order exceeds " + std::to_string(detail::kMaxFieldOrder));
    }
    if (!modulus) return make_field(pp, kk);
    const FieldSpec fp = make_field(pp, 1);
    const FqPoly m = parse_poly(fp, *modulus, "g");
    if (m.deg() != static_cast<long>(kk) && (q || k))
        fail(Errc::ReducibleModulus, "modulus degree " + std::to_string(m.deg()) + " does not match k = " + std::to_string(kk));
    if (!m.is_monic()) fail(Errc::ReducibleModulus, "modulus must be monic");
    return make_field_with_modulus(pp, m.coeffs());
}

}  // namespace funcdyn
