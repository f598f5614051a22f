#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace funcdyn {

/// Integer extended by -inf and +inf.
///
/// Degrees use the -inf sentinel for the zero polynomial so that
/// deg(fg) = deg f + deg g holds without special cases; valuations use
/// +inf for the zero element.
class ExtInt {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    constexpr ExtInt() = default;
    constexpr ExtInt(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)

    static constexpr ExtInt neg_inf() { return ExtInt(Kind::NegInf); }
    static constexpr ExtInt pos_inf() { return ExtInt(Kind::PosInf); }

    constexpr Kind kind() const { return kind_; }
    constexpr bool is_finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    long value() const {
        if (!is_finite()) throw std::logic_error("ExtInt::value on infinite sentinel");
        return value_;
    }

    friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) {
        return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
    }
    friend constexpr bool operator<(const ExtInt& a, const ExtInt& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        return a.kind_ == Kind::Finite && a.value_ < b.value_;
    }
    friend constexpr bool operator!=(const ExtInt& a, const ExtInt& b) { return !(a == b); }
    friend constexpr bool operator>(const ExtInt& a, const ExtInt& b) { return b < a; }
    friend constexpr bool operator<=(const ExtInt& a, const ExtInt& b) { return !(b < a); }
    friend constexpr bool operator>=(const ExtInt& a, const ExtInt& b) { return !(a < b); }

    // -inf + +inf is undefined and throws.
    friend ExtInt operator+(const ExtInt& a, const ExtInt& b) {
        if (a.is_finite() && b.is_finite()) return ExtInt(a.value_ + b.value_);
        if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
            throw std::domain_error("ExtInt: -inf + +inf");
        return a.is_finite() ? b : a;
    }
    friend ExtInt operator-(const ExtInt& a) {
        if (a.is_finite()) return ExtInt(-a.value_);
        return a.is_pos_inf() ? neg_inf() : pos_inf();
    }
    friend ExtInt operator-(const ExtInt& a, const ExtInt& b) { return a + (-b); }

    std::string to_string() const {
        switch (kind_) {
            case Kind::NegInf: return "-inf";
            case Kind::PosInf: return "inf";
            default: return std::to_string(value_);
        }
    }
    friend std::ostream& operator<<(std::ostream& os, const ExtInt& v) { return os << v.to_string(); }

private:
    constexpr explicit ExtInt(Kind k) : kind_(k) {}

    Kind kind_ = Kind::Finite;
    long value_ = 0;
};

using Degree = ExtInt;
using Valuation = ExtInt;

}  // namespace funcdyn
