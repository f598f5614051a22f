#pragma once

#include <string>
#include <utility>

#include "funcdyn/algebra/poly.hpp"

namespace funcdyn {

/// Element of F_q(t), stored reduced with a monic denominator.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(FieldSpec f) : num_(f), den_(FqPoly::one(f)) {}
    RatFunc(FqPoly n) : num_(std::move(n)), den_(FqPoly::one(num_.field())) {}  // NOLINT(implicit)
    RatFunc(FqPoly n, FqPoly d) {
        if (d.is_zero()) fail(Errc::ZeroPolynomial, "zero denominator");
        if (n.is_zero()) {
            num_ = std::move(n);
            den_ = FqPoly::one(d.field());
            return;
        }
        FqPoly g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = n / g;
            d = d / g;
        }
        elem_t li = d.field().inv(d.lead());
        num_ = n.scale(li);
        den_ = d.scale(li);
    }

    const FieldSpec& field() const { return num_.field(); }
    const FqPoly& num() const { return num_; }
    const FqPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
    RatFunc operator-(const RatFunc& o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
    RatFunc operator-() const { return {-num_, den_}; }
    RatFunc operator*(const RatFunc& o) const { return {num_ * o.num_, den_ * o.den_}; }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) fail(Errc::ZeroElement, "division by zero in F_q(t)");
        return {num_ * o.den_, den_ * o.num_};
    }
    RatFunc inverse() const { return RatFunc(FqPoly::one(field())) / *this; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        auto wrap = [](const FqPoly& p) {
            std::string s = p.to_string();
            return p.coeffs().size() > 1 || s.find_first_of("+*^") != std::string::npos ? "(" + s + ")" : s;
        };
        return wrap(num_) + "/" + wrap(den_);
    }

private:
    FqPoly num_, den_;
};

}  // namespace funcdyn
