#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "funcdyn/maps/linalg.hpp"
#include "funcdyn/maps/residue_map.hpp"

namespace funcdyn {

/// Coefficients (low to high, length n) of the unique polynomial of degree < n through n points.
inline std::vector<elem_t> lagrange_interpolate(const FieldSpec& f, const std::vector<elem_t>& xs,
                                                const std::vector<elem_t>& ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n) fail(Errc::DegreeMismatch, "sample lists differ in length");
    std::vector<elem_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // basis = prod_{j != i} (X - x_j) / (x_i - x_j)
        std::vector<elem_t> basis{1};
        elem_t denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (xs[i] == xs[j]) fail(Errc::DuplicateSample, "repeated interpolation node");
            std::vector<elem_t> next(basis.size() + 1, 0);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] = f.add(next[k + 1], basis[k]);
                next[k] = f.sub(next[k], f.mul(basis[k], xs[j]));
            }
            basis = std::move(next);
            denom = f.mul(denom, f.sub(xs[i], xs[j]));
        }
        const elem_t scale = f.div(ys[i], denom);
        for (std::size_t k = 0; k < basis.size(); ++k) out[k] = f.add(out[k], f.mul(scale, basis[k]));
    }
    return out;
}

using Sample = std::pair<ResiduePoint, ResiduePoint>;

namespace detail {

inline std::vector<elem_t> form_powers_row(const FieldSpec& f, const ResiduePoint& z, std::size_t d) {
    // Row (x^j y^(d-j))_{j=0..d}.
    std::vector<elem_t> row(d + 1);
    for (std::size_t j = 0; j <= d; ++j) row[j] = f.mul(f.pow(z.x, j), f.pow(z.y, d - j));
    return row;
}

inline elem_t dot(const FieldSpec& f, const std::vector<elem_t>& a, const elem_t* b) {
    elem_t r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r = f.add(r, f.mul(a[i], b[i]));
    return r;
}

// Remove the common homogeneous factor of two forms (coefficient i <-> X^i Y^(d-i)).
inline std::pair<std::vector<elem_t>, std::vector<elem_t>> cancel_common_factor(const FieldSpec& f,
                                                                                std::vector<elem_t> A,
                                                                                std::vector<elem_t> B) {
    const std::size_t d = A.size() - 1;
    // Y^e divides a form iff its top e coefficients vanish.
    auto ypow = [&](const std::vector<elem_t>& H) {
        std::size_t e = 0;
        while (e <= d && H[d - e] == 0) ++e;
        return e;
    };
    std::size_t e = std::min(ypow(A), ypow(B));
    FqPoly a(f, A), b(f, B);
    FqPoly g = poly_gcd(a, b);
    const std::size_t nd = d - e - static_cast<std::size_t>(g.deg());
    if (!g.is_one()) {
        a = a / g;
        b = b / g;
    }
    std::vector<elem_t> ra(nd + 1, 0), rb(nd + 1, 0);
    for (std::size_t i = 0; i <= nd; ++i) {
        ra[i] = a.coeff(i);
        rb[i] = b.coeff(i);
    }
    return {ra, rb};
}

}  // namespace detail

/// Rational map of degree <= d over a finite field through the given samples.
///
/// Solves w_y A(z) - w_x B(z) = 0 for the coefficient vector (A, B) and returns a
/// solution that does not make A and B vanish together at any sample node, with
/// common factors cancelled. Returns nullopt when no such solution exists in the field.
inline std::optional<ResidueMap> rational_interpolate(const FieldSpec& f, const std::vector<Sample>& samples,
                                                      unsigned d, std::size_t max_candidates = 1u << 22) {
    if (samples.size() < 2 * static_cast<std::size_t>(d) + 1) fail(Errc::TooFewSamples, "need at least 2d+1 samples");
    std::set<elem_t> seen;
    for (auto& [z, w] : samples) {
        if (z.field != f || w.field != f) fail(Errc::FieldMismatch, "samples must live in the target field");
        if (!seen.insert(z.index()).second) fail(Errc::DuplicateSample, "repeated sample input " + z.to_string());
    }
    const std::size_t n = 2 * static_cast<std::size_t>(d) + 2;
    std::vector<std::vector<elem_t>> rows;
    Matrix<elem_t> sys;
    for (auto& [z, w] : samples) {
        auto r = detail::form_powers_row(f, z, d);
        std::vector<elem_t> eq(n);
        for (std::size_t j = 0; j <= d; ++j) {
            eq[j] = f.mul(w.y, r[j]);
            eq[d + 1 + j] = f.neg(f.mul(w.x, r[j]));
        }
        sys.push_back(std::move(eq));
        rows.push_back(std::move(r));
    }
    const auto basis = nullspace(f, sys, n);
    const std::size_t dim = basis.size();
    if (dim == 0) return std::nullopt;

    // Enumerate projective combinations: the first nonzero weight is 1.
    std::vector<elem_t> w(dim, 0);
    std::size_t tried = 0;
    for (std::size_t lead = 0; lead < dim; ++lead) {
        std::fill(w.begin(), w.end(), 0);
        w[lead] = 1;
        for (;;) {
            if (++tried > max_candidates) return std::nullopt;
            std::vector<elem_t> v(n, 0);
            for (std::size_t k = 0; k < dim; ++k) {
                if (w[k] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(w[k], basis[k][j]));
            }
            bool admissible = true;
            for (auto& r : rows) {
                if (detail::dot(f, r, v.data()) == 0 && detail::dot(f, r, v.data() + d + 1) == 0) {
                    admissible = false;
                    break;
                }
            }
            if (admissible) {
                std::vector<elem_t> A(v.begin(), v.begin() + d + 1), B(v.begin() + d + 1, v.end());
                auto [a, b] = detail::cancel_common_factor(f, std::move(A), std::move(B));
                return ResidueMap(f, std::move(a), std::move(b));
            }
            std::size_t k = dim;
            while (k-- > lead + 1) {
                if (++w[k] < f.q()) break;
                w[k] = 0;
            }
            if (k == lead) break;
        }
    }
    return std::nullopt;
}

}  // namespace funcdyn
