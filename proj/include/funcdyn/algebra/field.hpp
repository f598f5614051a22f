#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "funcdyn/algebra/error.hpp"

namespace funcdyn {

/// Raw field element: index into the field's element encoding.
using elem_t = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kMaxAddTableOrder = 128;

/// Table-driven finite field.
///
/// Elements are encoded as integers whose base-b digits are the coordinates
/// over the immediate subfield (b = p for a prime-level field, b = #base for
/// a tower). Zero encodes as 0 and one as 1, and the base field embeds into a
/// tower with the identity on encodings.
class GaloisField {
public:
    // Prime-level field F_p[g]/(modulus). modulus is monic over F_p, coefficients low to high.
    GaloisField(std::uint32_t p, std::vector<elem_t> modulus, std::string symbol)
        : p_(p), digit_base_(p), modulus_(std::move(modulus)), symbol_(std::move(symbol)) {
        if (!is_prime(p)) fail(Errc::CompositeP, std::to_string(p) + " is not prime");
        init_common();
    }

    // Tower base[s]/(modulus), modulus monic over base.
    GaloisField(std::shared_ptr<const GaloisField> base, std::vector<elem_t> modulus, std::string symbol)
        : p_(base->p_), digit_base_(base->order_), base_(std::move(base)), modulus_(std::move(modulus)),
          symbol_(std::move(symbol)) {
        init_common();
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t order() const { return order_; }
    unsigned degree_over_base() const { return digits_; }
    unsigned abs_degree() const { return base_ ? digits_ * base_->abs_degree() : digits_; }
    const std::shared_ptr<const GaloisField>& base() const { return base_; }
    const std::vector<elem_t>& modulus() const { return modulus_; }
    const std::string& symbol() const { return symbol_; }
    std::uint32_t digit_base() const { return digit_base_; }

    elem_t add(elem_t a, elem_t b) const {
        if (!add_table_.empty()) return add_table_[a * order_ + b];
        return add_digitwise(a, b);
    }
    elem_t neg(elem_t a) const { return neg_[a]; }
    elem_t sub(elem_t a, elem_t b) const { return add(a, neg_[b]); }
    elem_t mul(elem_t a, elem_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    elem_t inv(elem_t a) const {
        if (a == 0) fail(Errc::ZeroElement, "inverse of zero");
        return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
    }
    elem_t div(elem_t a, elem_t b) const { return mul(a, inv(b)); }
    elem_t pow(elem_t a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t m = order_ - 1;
        return exp_[static_cast<std::uint32_t>((log_[a] * (e % m)) % m)];
    }
    // Discrete log with respect to the fixed primitive element.
    std::uint32_t log(elem_t a) const {
        if (a == 0) fail(Errc::ZeroElement, "log of zero");
        return log_[a];
    }
    elem_t primitive() const { return exp_[1]; }
    // Inverse Frobenius x -> x^(1/p).
    elem_t pth_root(elem_t a) const {
        if (a == 0) return 0;
        return exp_[static_cast<std::uint32_t>((std::uint64_t{log_[a]} * inv_p_) % (order_ - 1))];
    }
    elem_t from_int(long n) const {
        long r = n % static_cast<long>(p_);
        if (r < 0) r += p_;
        return static_cast<elem_t>(r);
    }

    std::vector<elem_t> digits(elem_t a) const {
        std::vector<elem_t> out(digits_);
        for (unsigned i = 0; i < digits_; ++i) {
            out[i] = a % digit_base_;
            a /= digit_base_;
        }
        return out;
    }
    elem_t from_digits(const std::vector<elem_t>& d) const {
        elem_t v = 0;
        for (unsigned i = digits_; i-- > 0;) v = v * digit_base_ + (i < d.size() ? d[i] : 0);
        return v;
    }

    bool structurally_equal(const GaloisField& o) const {
        if (this == &o) return true;
        if (p_ != o.p_ || order_ != o.order_ || modulus_ != o.modulus_ || digits_ != o.digits_) return false;
        if (!base_ || !o.base_) return !base_ && !o.base_;
        return base_->structurally_equal(*o.base_);
    }

private:
    void init_common() {
        if (modulus_.empty() || modulus_.back() != 1)
            fail(Errc::ReducibleModulus, "modulus must be monic of positive degree");
        digits_ = static_cast<unsigned>(modulus_.size() - 1);
        if (digits_ == 0) fail(Errc::ReducibleModulus, "modulus must have positive degree");
        std::uint64_t order = 1;
        for (unsigned i = 0; i < digits_; ++i) {
            order *= digit_base_;
            if (order > kMaxFieldOrder) fail(Errc::FieldTooLarge, "field order exceeds table limit");
        }
        order_ = static_cast<std::uint32_t>(order);

        neg_.resize(order_);
        for (elem_t a = 0; a < order_; ++a) {
            auto d = digits(a);
            for (auto& x : d) x = digit_neg(x);
            neg_[a] = from_digits(d);
        }
        if (order_ <= kMaxAddTableOrder) {
            add_table_.resize(std::size_t{order_} * order_);
            for (elem_t a = 0; a < order_; ++a)
                for (elem_t b = 0; b < order_; ++b) add_table_[a * order_ + b] = add_digitwise(a, b);
        }
        build_log_tables();
        std::uint64_t m = order_ - 1;
        inv_p_ = 1;
        if (m > 1) {
            // p is invertible modulo q-1.
            std::uint64_t pm = p_ % m;
            for (std::uint64_t x = 1; x < m; ++x)
                if ((pm * x) % m == 1) { inv_p_ = x; break; }
        }
    }

    elem_t digit_add(elem_t a, elem_t b) const { return base_ ? base_->add(a, b) : (a + b) % p_; }
    elem_t digit_mul(elem_t a, elem_t b) const {
        return base_ ? base_->mul(a, b) : static_cast<elem_t>((std::uint64_t{a} * b) % p_);
    }
    elem_t digit_neg(elem_t a) const { return base_ ? base_->neg(a) : (p_ - a) % p_; }

    elem_t add_digitwise(elem_t a, elem_t b) const {
        elem_t out = 0, scale = 1;
        for (unsigned i = 0; i < digits_; ++i) {
            out += digit_add(a % digit_base_, b % digit_base_) * scale;
            a /= digit_base_;
            b /= digit_base_;
            scale *= digit_base_;
        }
        return out;
    }

    // Schoolbook product modulo the defining polynomial; only used to build the tables.
    elem_t slow_mul(elem_t a, elem_t b) const {
        auto da = digits(a), db = digits(b);
        std::vector<elem_t> prod(2 * digits_, 0);
        for (unsigned i = 0; i < digits_; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < digits_; ++j)
                prod[i + j] = digit_add(prod[i + j], digit_mul(da[i], db[j]));
        }
        for (unsigned k = 2 * digits_ - 1; k >= digits_; --k) {
            elem_t c = prod[k];
            if (c == 0) continue;
            prod[k] = 0;
            for (unsigned j = 0; j < digits_; ++j)
                prod[k - digits_ + j] = digit_add(prod[k - digits_ + j], digit_neg(digit_mul(c, modulus_[j])));
        }
        prod.resize(digits_);
        return from_digits(prod);
    }

    elem_t slow_pow(elem_t a, std::uint64_t e) const {
        elem_t r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_log_tables() {
        const std::uint64_t m = order_ - 1;
        const auto primes = prime_divisors(m);
        elem_t g = 0;
        for (elem_t c = 1; c < order_; ++c) {
            bool ok = true;
            for (auto r : primes)
                if (slow_pow(c, m / r) == 1) { ok = false; break; }
            // slow_pow also catches zero divisors: a reducible modulus has no element of order q-1.
            if (ok && slow_pow(c, m) == 1) { g = c; break; }
        }
        if (g == 0) fail(Errc::ReducibleModulus, "modulus does not define a field");
        exp_.assign(2 * m + 1, 0);
        log_.assign(order_, 0);
        elem_t x = 1;
        for (std::uint64_t i = 0; i < m; ++i) {
            exp_[i] = x;
            if (i > 0 && x == 1) fail(Errc::ReducibleModulus, "modulus does not define a field");
            log_[x] = static_cast<std::uint32_t>(i);
            x = slow_mul(x, g);
        }
        for (std::uint64_t i = m; i < 2 * m + 1; ++i) exp_[i] = exp_[i - m];
    }

    std::uint32_t p_ = 0;
    std::uint32_t digit_base_ = 0;
    std::shared_ptr<const GaloisField> base_;
    std::vector<elem_t> modulus_;
    std::string symbol_;
    unsigned digits_ = 0;
    std::uint32_t order_ = 0;
    std::uint64_t inv_p_ = 1;
    std::vector<elem_t> neg_, add_table_, exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace detail

class FqElem;

/// Handle to an immutable finite field F_{p^k} (possibly a tower over a smaller field).
///
/// Copies share the underlying tables. Two handles compare equal when they
/// describe the same (p, modulus chain).
class FieldSpec {
public:
    FieldSpec() = default;
    explicit FieldSpec(std::shared_ptr<const detail::GaloisField> impl) : impl_(std::move(impl)) {}

    bool valid() const { return static_cast<bool>(impl_); }
    std::uint32_t p() const { return impl_->p(); }
    // Total degree over F_p.
    unsigned k() const { return impl_->abs_degree(); }
    std::uint32_t q() const { return impl_->order(); }
    unsigned degree_over_base() const { return impl_->degree_over_base(); }
    bool is_tower() const { return static_cast<bool>(impl_->base()); }
    FieldSpec base() const { return FieldSpec(impl_->base()); }
    const std::vector<elem_t>& modulus() const { return impl_->modulus(); }
    const std::string& symbol() const { return impl_->symbol(); }

    elem_t add(elem_t a, elem_t b) const { return impl_->add(a, b); }
    elem_t sub(elem_t a, elem_t b) const { return impl_->sub(a, b); }
    elem_t neg(elem_t a) const { return impl_->neg(a); }
    elem_t mul(elem_t a, elem_t b) const { return impl_->mul(a, b); }
    elem_t inv(elem_t a) const { return impl_->inv(a); }
    elem_t div(elem_t a, elem_t b) const { return impl_->div(a, b); }
    elem_t pow(elem_t a, std::uint64_t e) const { return impl_->pow(a, e); }
    elem_t pth_root(elem_t a) const { return impl_->pth_root(a); }
    elem_t from_int(long n) const { return impl_->from_int(n); }
    std::uint32_t log(elem_t a) const { return impl_->log(a); }
    elem_t primitive() const { return impl_->primitive(); }
    // The class of the generator symbol (the adjoined root of the modulus).
    elem_t generator() const { return q() == p() && !is_tower() ? from_int(-static_cast<long>(modulus()[0])) : impl_->digit_base(); }
    std::vector<elem_t> coords(elem_t a) const { return impl_->digits(a); }
    elem_t from_coords(const std::vector<elem_t>& c) const { return impl_->from_digits(c); }

    const detail::GaloisField& impl() const { return *impl_; }
    const std::shared_ptr<const detail::GaloisField>& ptr() const { return impl_; }

    FqElem element(elem_t v) const;
    FqElem zero() const;
    FqElem one() const;

    /// Human-readable element: integer for F_p, polynomial in the generator symbol otherwise.
    std::string format(elem_t a) const {
        if (!is_tower() && k() == 1) return std::to_string(a);
        auto c = coords(a);
        const FieldSpec sub = is_tower() ? base() : FieldSpec();
        std::string out;
        for (unsigned i = static_cast<unsigned>(c.size()); i-- > 0;) {
            if (c[i] == 0) continue;
            std::string coef = sub.valid() ? sub.format(c[i]) : std::to_string(c[i]);
            bool compound = coef.find_first_of("+") != std::string::npos;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += coef;
                continue;
            }
            if (coef != "1") out += (compound ? "(" + coef + ")" : coef) + "*";
            out += symbol();
            if (i > 1) out += "^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        if (a.impl_ == b.impl_) return true;
        if (!a.impl_ || !b.impl_) return false;
        return a.impl_->structurally_equal(*b.impl_);
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

private:
    std::shared_ptr<const detail::GaloisField> impl_;
};

inline void require_same_field(const FieldSpec& a, const FieldSpec& b) {
    if (a != b) fail(Errc::FieldMismatch, "operands live in different fields");
}

/// Element of a finite field, tied to its FieldSpec.
class FqElem {
public:
    FqElem() = default;
    FqElem(FieldSpec f, elem_t v) : field_(std::move(f)), v_(v) {}

    const FieldSpec& field() const { return field_; }
    elem_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    // Coordinates over the immediate subfield, length k.
    std::vector<elem_t> coeffs() const { return field_.coords(v_); }

    FqElem operator+(const FqElem& o) const { check(o); return {field_, field_.add(v_, o.v_)}; }
    FqElem operator-(const FqElem& o) const { check(o); return {field_, field_.sub(v_, o.v_)}; }
    FqElem operator*(const FqElem& o) const { check(o); return {field_, field_.mul(v_, o.v_)}; }
    FqElem operator/(const FqElem& o) const { check(o); return {field_, field_.div(v_, o.v_)}; }
    FqElem operator-() const { return {field_, field_.neg(v_)}; }
    FqElem inverse() const { return {field_, field_.inv(v_)}; }
    FqElem pow(std::uint64_t e) const { return {field_, field_.pow(v_, e)}; }

    friend bool operator==(const FqElem& a, const FqElem& b) { return a.v_ == b.v_ && a.field_ == b.field_; }
    friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }
    friend bool operator<(const FqElem& a, const FqElem& b) { return a.v_ < b.v_; }

    std::string to_string() const { return field_.format(v_); }
    friend std::ostream& operator<<(std::ostream& os, const FqElem& e) { return os << e.to_string(); }

private:
    void check(const FqElem& o) const { require_same_field(field_, o.field_); }

    FieldSpec field_;
    elem_t v_ = 0;
};

inline FqElem FieldSpec::element(elem_t v) const {
    if (v >= q()) fail(Errc::ParseError, "element index out of range");
    return {*this, v};
}
inline FqElem FieldSpec::zero() const { return {*this, 0}; }
inline FqElem FieldSpec::one() const { return {*this, 1}; }

/// Least n >= 1 with a^n = 1; divides q - 1.
inline std::uint64_t mul_order(const FqElem& a) {
    if (a.is_zero()) fail(Errc::ZeroElement, "multiplicative order of zero");
    const std::uint64_t m = a.field().q() - 1;
    return m / std::gcd<std::uint64_t, std::uint64_t>(a.field().log(a.value()), m);
}

/// All q - 1 units, ordered by encoding (so 1 comes first).
inline std::vector<FqElem> enumerate_units(const FieldSpec& f) {
    std::vector<FqElem> out;
    out.reserve(f.q() - 1);
    for (elem_t v = 1; v < f.q(); ++v) out.emplace_back(f, v);
    return out;
}

}  // namespace funcdyn
