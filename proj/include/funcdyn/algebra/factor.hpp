#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "funcdyn/algebra/field.hpp"
#include "funcdyn/algebra/poly.hpp"

namespace funcdyn {

namespace detail {

// x^(Q^n) mod f by repeated Frobenius.
inline FqPoly frobenius_power(const FqPoly& x, unsigned n, const FqPoly& f) {
    FqPoly r = x % f;
    for (unsigned i = 0; i < n; ++i) r = r.powmod(f.field().q(), f);
    return r;
}

}  // namespace detail

/// Rabin irreducibility test over F_q.
inline bool is_irreducible(const FqPoly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "irreducibility of zero");
    const long n = f.deg();
    if (n <= 0) return false;
    if (n == 1) return true;
    const FqPoly g = f.monic();
    const FqPoly t = FqPoly::t(f.field());
    if (detail::frobenius_power(t, static_cast<unsigned>(n), g) != t % g) return false;
    for (auto r : detail::prime_divisors(static_cast<std::uint64_t>(n))) {
        FqPoly h = detail::frobenius_power(t, static_cast<unsigned>(n / r), g) - t;
        if (!poly_gcd(g, h).is_one()) return false;
    }
    return true;
}

struct Factorization {
    elem_t unit = 0;                                   // leading coefficient of the input
    std::vector<std::pair<FqPoly, unsigned>> factors;  // monic irreducible, multiplicity; sorted

    FqPoly expand(const FieldSpec& f) const {
        FqPoly r = FqPoly::constant(f, unit);
        for (auto& [p, m] : factors) r *= p.pow(m);
        return r;
    }
};

namespace detail {

// Squarefree decomposition of a monic polynomial: pairs (squarefree part, multiplicity).
inline void squarefree_parts(const FqPoly& f, unsigned scale, std::vector<std::pair<FqPoly, unsigned>>& out) {
    if (f.deg() <= 0) return;
    FqPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_parts(f.pth_root(), scale * f.field().p(), out);
        return;
    }
    FqPoly c = poly_gcd(f, d);
    FqPoly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        FqPoly y = poly_gcd(w, c);
        FqPoly fac = w / y;
        if (!fac.is_one()) out.emplace_back(fac.monic(), i * scale);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) squarefree_parts(c.pth_root().monic(), scale * f.field().p(), out);
}

// Distinct-degree factorization of a squarefree monic polynomial.
inline std::vector<std::pair<FqPoly, unsigned>> distinct_degree(FqPoly f) {
    std::vector<std::pair<FqPoly, unsigned>> out;
    const FqPoly t = FqPoly::t(f.field());
    FqPoly h = t % f;
    for (unsigned i = 1; 2 * static_cast<long>(i) <= f.deg(); ++i) {
        h = h.powmod(f.field().q(), f);
        FqPoly g = poly_gcd(f, h - t);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.deg() > 0) out.emplace_back(f, static_cast<unsigned>(f.deg()));
    return out;
}

// Cantor-Zassenhaus splitting of g, a product of distinct monic irreducibles of degree r.
inline void equal_degree(const FqPoly& g, unsigned r, std::mt19937_64& rng, std::vector<FqPoly>& out) {
    if (g.deg() == static_cast<long>(r)) {
        out.push_back(g);
        return;
    }
    const FieldSpec& f = g.field();
    const std::uint32_t Q = f.q();
    std::uniform_int_distribution<elem_t> coef(0, Q - 1);
    for (;;) {
        std::vector<elem_t> c(static_cast<std::size_t>(g.deg()));
        for (auto& x : c) x = coef(rng);
        FqPoly a(f, c);
        if (a.deg() <= 0) continue;
        FqPoly b(f);
        if (Q % 2 == 1) {
            // a^((Q^r - 1)/2) = (a^(1 + Q + ... + Q^(r-1)))^((Q - 1)/2)
            FqPoly norm = FqPoly::one(f), ai = a;
            for (unsigned i = 0; i < r; ++i) {
                norm = (norm * ai) % g;
                ai = ai.powmod(Q, g);
            }
            b = norm.powmod((Q - 1) / 2, g) - FqPoly::one(f);
        } else {
            // Absolute trace a + a^2 + ... + a^(2^(kr-1)).
            const unsigned bits = f.k() * r;
            FqPoly term = a;
            for (unsigned i = 0; i < bits; ++i) {
                b = b + term;
                term = (term * term) % g;
            }
        }
        FqPoly h = poly_gcd(g, b.is_zero() ? g : b);
        if (h.is_one() || h.deg() == g.deg()) continue;
        equal_degree(h, r, rng, out);
        equal_degree(g / h, r, rng, out);
        return;
    }
}

}  // namespace detail

/// Complete factorization into monic irreducibles. The seed drives the equal-degree splitting only.
inline Factorization factorize(const FqPoly& f, std::uint64_t seed = 0) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "factorization of zero");
    Factorization out;
    out.unit = f.lead();
    std::vector<std::pair<FqPoly, unsigned>> sqf;
    detail::squarefree_parts(f.monic(), 1, sqf);
    std::mt19937_64 rng(seed);
    std::map<FqPoly, unsigned> acc;
    for (auto& [part, mult] : sqf) {
        for (auto& [g, r] : detail::distinct_degree(part)) {
            std::vector<FqPoly> irr;
            detail::equal_degree(g, r, rng, irr);
            for (auto& p : irr) acc[p] += mult;
        }
    }
    out.factors.assign(acc.begin(), acc.end());
    return out;
}

/// Distinct monic irreducible factors, sorted.
inline std::vector<FqPoly> irreducible_factors(const FqPoly& f, std::uint64_t seed = 0) {
    std::vector<FqPoly> out;
    for (auto& [p, m] : factorize(f, seed).factors) out.push_back(p);
    return out;
}

/// Monic polynomials of degree n over f, lexicographic in (c0, c1, ..., c_{n-1}).
template <class Fn>
bool for_each_monic(const FieldSpec& f, unsigned n, Fn&& fn) {
    std::vector<elem_t> c(n + 1, 0);
    c[n] = 1;
    for (;;) {
        if (fn(FqPoly(f, c))) return true;
        // c0 is the most significant position, so increment from the top.
        int i = static_cast<int>(n) - 1;
        while (i >= 0 && ++c[i] == f.q()) c[i--] = 0;
        if (i < 0) return false;
    }
}

inline FqPoly smallest_irreducible(const FieldSpec& f, unsigned n) {
    FqPoly found(f);
    for_each_monic(f, n, [&](const FqPoly& p) {
        if (!is_irreducible(p)) return false;
        found = p;
        return true;
    });
    return found;
}

namespace detail {

struct FieldCache {
    std::mutex mu;
    std::map<std::tuple<std::uint32_t, unsigned, std::vector<elem_t>>, FieldSpec> prime_level;
    std::map<std::tuple<const GaloisField*, std::vector<elem_t>, std::string>, FieldSpec> towers;
    std::map<std::pair<std::uint32_t, unsigned>, FieldSpec> smallest;
};

inline FieldCache& field_cache() {
    static FieldCache c;
    return c;
}

}  // namespace detail

/// F_p[g]/(modulus) with a caller-chosen modulus (coefficients low to high, monic).
inline FieldSpec make_field_with_modulus(std::uint32_t p, const std::vector<elem_t>& modulus) {
    if (!detail::is_prime(p)) fail(Errc::CompositeP, std::to_string(p) + " is not prime");
    if (modulus.size() < 2 || modulus.back() != 1)
        fail(Errc::ReducibleModulus, "modulus must be monic of positive degree");
    for (auto c : modulus)
        if (c >= p) fail(Errc::ReducibleModulus, "modulus coefficient out of range");
    auto& cache = detail::field_cache();
    const auto key = std::make_tuple(p, static_cast<unsigned>(modulus.size() - 1), modulus);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.prime_level.find(key);
        if (it != cache.prime_level.end()) return it->second;
    }
    if (modulus.size() > 2) {
        FieldSpec fp(std::make_shared<const detail::GaloisField>(p, std::vector<elem_t>{0, 1}, "g"));
        if (!is_irreducible(FqPoly(fp, modulus))) fail(Errc::ReducibleModulus, "modulus is reducible over F_p");
    }
    FieldSpec spec(std::make_shared<const detail::GaloisField>(p, modulus, "g"));
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.prime_level.emplace(key, spec).first->second;
}

/// Deterministic F_{p^k}: the modulus is the lexicographically smallest monic irreducible
/// of degree k, comparing coefficient vectors (c0, c1, ...) as integers.
inline FieldSpec make_field(std::uint32_t p, unsigned k = 1) {
    if (!detail::is_prime(p)) fail(Errc::CompositeP, std::to_string(p) + " is not prime");
    if (k == 0) fail(Errc::NotPrimePower, "field degree must be positive");
    auto& cache = detail::field_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.smallest.find({p, k});
        if (it != cache.smallest.end()) return it->second;
    }
    std::vector<elem_t> mod{0, 1};
    if (k > 1) {
        FieldSpec fp = make_field(p, 1);
        mod = smallest_irreducible(fp, k).coeffs();
    }
    FieldSpec spec = make_field_with_modulus(p, mod);
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.smallest.emplace(std::make_pair(p, k), spec).first->second;
}

/// Decompose q = p^k; throws NotPrimePower otherwise.
inline std::pair<std::uint32_t, unsigned> split_prime_power(std::uint64_t q) {
    if (q < 2) fail(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    auto primes = detail::prime_divisors(q);
    if (primes.size() != 1) fail(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
    unsigned k = 0;
    for (std::uint64_t x = q; x > 1; x /= primes[0]) ++k;
    return {static_cast<std::uint32_t>(primes[0]), k};
}

inline FieldSpec make_field_q(std::uint64_t q) {
    auto [p, k] = split_prime_power(q);
    return make_field(p, k);
}

/// base[symbol]/(modulus) for a monic irreducible modulus over base; encodings of base embed unchanged.
inline FieldSpec make_tower(const FieldSpec& base, const FqPoly& modulus, const std::string& symbol) {
    if (modulus.field() != base) fail(Errc::FieldMismatch, "modulus must live over the base field");
    if (!modulus.is_monic() || modulus.deg() < 1) fail(Errc::ReducibleModulus, "modulus must be monic of positive degree");
    auto& cache = detail::field_cache();
    const auto key = std::make_tuple(base.ptr().get(), modulus.coeffs(), symbol);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.towers.find(key);
        if (it != cache.towers.end()) return it->second;
    }
    FieldSpec spec(std::make_shared<const detail::GaloisField>(base.ptr(), modulus.coeffs(), symbol));
    std::lock_guard<std::mutex> lock(cache.mu);
    return cache.towers.emplace(key, spec).first->second;
}

/// Degree-e extension of base by its smallest irreducible, generator printed as `symbol`.
inline FieldSpec make_extension(const FieldSpec& base, unsigned e, const std::string& symbol = "h") {
    if (e == 1) return base;
    return make_tower(base, smallest_irreducible(base, e), symbol);
}

/// Image of an F_q polynomial in a tower over F_q (identity on encodings).
inline FqPoly embed(const FqPoly& f, const FieldSpec& ext) {
    if (f.field() == ext) return f;
    return FqPoly(ext, f.coeffs());
}

}  // namespace funcdyn
