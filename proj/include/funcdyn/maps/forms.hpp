#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "funcdyn/algebra/poly.hpp"

namespace funcdyn {

/// Binary form of degree size()-1: entry i is the coefficient of X^i Y^(d-i).
using Form = std::vector<FqPoly>;

inline Form form_zero(const FieldSpec& f, std::size_t d) { return Form(d + 1, FqPoly(f)); }

inline Form form_mul(const Form& a, const Form& b) {
    const FieldSpec& f = a[0].field();
    Form r = form_zero(f, a.size() + b.size() - 2);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
}

inline Form form_add(const Form& a, const Form& b) {
    Form r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline Form form_scale(const Form& a, const FqPoly& c) {
    Form r(a);
    for (auto& x : r) x = x * c;
    return r;
}

/// F(x, y) for F of degree d, via a Horner scheme in x.
inline FqPoly form_eval(const Form& F, const FqPoly& x, const FqPoly& y) {
    const std::size_t d = F.size() - 1;
    FqPoly r = F[d];
    FqPoly ypow = FqPoly::one(x.field());
    for (std::size_t i = d; i-- > 0;) {
        ypow = ypow * y;
        r = r * x + F[i] * ypow;
    }
    return r;
}

/// Sum of c_i * P^i * Q^(d-i) where P, Q are forms of a common degree.
inline Form form_substitute(const Form& c, const Form& P, const Form& Q) {
    const std::size_t d = c.size() - 1;
    const FieldSpec& f = P[0].field();
    std::vector<Form> ppow{Form{FqPoly::one(f)}}, qpow{Form{FqPoly::one(f)}};
    for (std::size_t i = 1; i <= d; ++i) {
        ppow.push_back(form_mul(ppow.back(), P));
        qpow.push_back(form_mul(qpow.back(), Q));
    }
    Form r = form_zero(f, d * (P.size() - 1));
    for (std::size_t i = 0; i <= d; ++i)
        if (!c[i].is_zero()) r = form_add(r, form_scale(form_mul(ppow[i], qpow[d - i]), c[i]));
    return r;
}

inline long form_max_coeff_degree(const Form& F) {
    long m = -1;
    for (auto& c : F) m = std::max(m, c.deg());
    return m;
}

/// Text form in X, Y, e.g. "X^2+t*Y^2".
inline std::string form_to_string(const Form& F) {
    const std::size_t d = F.size() - 1;
    std::string out;
    for (std::size_t i = d + 1; i-- > 0;) {
        if (F[i].is_zero()) continue;
        std::string mono;
        auto var = [&](const char* v, std::size_t e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (e > 1) mono += "^" + std::to_string(e);
        };
        var("X", i);
        var("Y", d - i);
        std::string coef = F[i].to_string();
        const bool compound = coef.find_first_of("+") != std::string::npos;
        if (!out.empty()) out += "+";
        if (mono.empty()) out += coef;
        else if (F[i].is_one()) out += mono;
        else out += (compound ? "(" + coef + ")" : coef) + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

}  // namespace funcdyn
