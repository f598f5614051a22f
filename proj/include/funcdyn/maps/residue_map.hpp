#pragma once

#include <string>
#include <vector>

#include "funcdyn/maps/linalg.hpp"
#include "funcdyn/projective.hpp"

namespace funcdyn {

/// 2d x 2d Sylvester matrix of two degree-d forms given as coefficient lists (index i <-> X^i Y^(d-i)).
template <class T>
Matrix<T> sylvester_matrix(const std::vector<T>& F, const std::vector<T>& G, const T& zero) {
    const std::size_t d = F.size() - 1;
    Matrix<T> m(2 * d, std::vector<T>(2 * d, zero));
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t j = 0; j <= d; ++j) {
            m[r][r + j] = F[d - j];
            m[d + r][r + j] = G[d - j];
        }
    return m;
}

/// Map on P^1 over a finite field given by two forms of degree d.
class ResidueMap {
public:
    ResidueMap() = default;
    /// Scales so the first nonzero coefficient (scan order G[0..d], then F[0..d]) is 1.
    ResidueMap(FieldSpec k, std::vector<elem_t> F, std::vector<elem_t> G)
        : k_(std::move(k)), F_(std::move(F)), G_(std::move(G)) {
        if (F_.size() != G_.size() || F_.empty()) fail(Errc::DegreeMismatch, "forms must share a degree");
        elem_t lead = 0;
        for (auto c : G_)
            if (c) { lead = c; break; }
        if (!lead)
            for (auto c : F_)
                if (c) { lead = c; break; }
        if (!lead) fail(Errc::BothZero, "both forms vanish");
        if (lead != 1) {
            const elem_t inv = k_.inv(lead);
            for (auto& c : F_) c = k_.mul(c, inv);
            for (auto& c : G_) c = k_.mul(c, inv);
        }
    }

    const FieldSpec& field() const { return k_; }
    unsigned degree() const { return static_cast<unsigned>(F_.size() - 1); }
    const std::vector<elem_t>& F() const { return F_; }
    const std::vector<elem_t>& G() const { return G_; }

    elem_t resultant() const {
        if (degree() == 0) return 1;
        return field_det(k_, sylvester_matrix<elem_t>(F_, G_, 0));
    }

    elem_t eval_form(const std::vector<elem_t>& H, elem_t x, elem_t y) const {
        const std::size_t d = H.size() - 1;
        elem_t r = H[d], ypow = 1;
        for (std::size_t i = d; i-- > 0;) {
            ypow = k_.mul(ypow, y);
            r = k_.add(k_.mul(r, x), k_.mul(H[i], ypow));
        }
        return r;
    }

    ResiduePoint evaluate(const ResiduePoint& P) const {
        elem_t a = eval_form(F_, P.x, P.y), b = eval_form(G_, P.x, P.y);
        if (a == 0 && b == 0) fail(Errc::DegenerateResidueMap, "reduced forms vanish simultaneously");
        return ResiduePoint(k_, a, b);
    }

    friend bool operator==(const ResidueMap& a, const ResidueMap& b) {
        return a.F_ == b.F_ && a.G_ == b.G_ && a.k_ == b.k_;
    }

    std::string to_string() const {
        auto form = [&](const std::vector<elem_t>& H) {
            const std::size_t d = H.size() - 1;
            std::string out;
            for (std::size_t i = d + 1; i-- > 0;) {
                if (!H[i]) continue;
                std::string mono;
                if (i) mono = i > 1 ? "X^" + std::to_string(i) : "X";
                if (d - i) mono += std::string(mono.empty() ? "" : "*") + (d - i > 1 ? "Y^" + std::to_string(d - i) : "Y");
                std::string c = k_.format(H[i]);
                if (c.find('+') != std::string::npos) c = "(" + c + ")";
                if (!out.empty()) out += "+";
                if (mono.empty()) out += c;
                else if (H[i] == 1) out += mono;
                else out += c + "*" + mono;
            }
            return out.empty() ? std::string("0") : out;
        };
        return "[" + form(F_) + " : " + form(G_) + "]";
    }

private:
    FieldSpec k_;
    std::vector<elem_t> F_, G_;
};

}  // namespace funcdyn
