#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "funcdyn/verify/checks.hpp"

namespace funcdyn {

enum class Family { MonicPolynomial, Rational };

inline std::string family_name(Family f) { return f == Family::MonicPolynomial ? "monic" : "rational"; }

enum Check : unsigned {
    kEquidistance = 1u << 0,
    kCycleBounds = 1u << 1,
    kOrbitBounds = 1u << 2,
    kDichotomy = 1u << 3,
    kThreePoints = 1u << 4,
    kPerBound = 1u << 5,
    kPeriodicOracle = 1u << 6,
    kAllChecks = (1u << 7) - 1,
};

inline const std::vector<std::pair<Check, std::string>>& check_names() {
    static const std::vector<std::pair<Check, std::string>> names{
        {kEquidistance, "equidistance"}, {kCycleBounds, "cycle-bounds"}, {kOrbitBounds, "orbit-bounds"},
        {kDichotomy, "dichotomy"},       {kThreePoints, "three-points"}, {kPerBound, "per-bound"},
        {kPeriodicOracle, "periodic-oracle"}};
    return names;
}

/// A finite box of maps: all degree-d maps (or monic polynomials) whose coefficients in F_q[t]
/// have degree <= coeff_bound, explored from all points of height <= box.
struct CensusSpec {
    FieldSpec field;
    unsigned degree = 2;
    long coeff_bound = 1;
    Family family = Family::Rational;
    long box = 1;
    SearchBudget budget{};
    unsigned checks = kAllChecks;
    // Visit one map per orbit of PGL_2(F_q) x PGL_2(F_q) acting by conjugation in X and
    // substitution in t, weighting by orbit size. Rational family only.
    bool symmetry = true;
    unsigned workers = 1;
    std::size_t max_failures = 10;
    // Called for every cycle found; with several workers it may run concurrently.
    std::function<void(const RationalMap&, const std::vector<ProjPoint>&)> on_cycle;
};

struct CensusResult {
    VerificationReport report;
    std::map<std::string, Tally> tallies;           // per claim, over visited instances
    std::map<std::string, Tally> weighted;          // per claim, each instance counted orbit-size times
    std::uint64_t maps = 0;                         // maps in the box (weighted)
    std::uint64_t classes = 0;                      // maps visited
    std::uint64_t degenerate = 0;                   // coefficient vectors with vanishing resultant (weighted)
    std::uint64_t admissible = 0;                   // maps with at most one bad place (weighted)
    std::uint64_t cycles = 0;                       // cycles found (weighted)
    std::uint64_t orbits = 0;                       // maximal closed orbits checked (weighted)
    std::map<std::size_t, std::uint64_t> cycle_lengths;  // weighted histogram
    std::uint64_t equality_q_plus_1 = 0;            // cycles attaining q + 1 (weighted)
    std::uint64_t long_cycles = 0;                  // cycles longer than 2d (weighted)
    std::uint64_t long_cycles_conjugate = 0;
    std::uint64_t per_equality = 0;                 // polynomial maps attaining (q-1)(d-1)+1
    std::uint64_t three_point_configurations = 0;
    std::uint64_t tail_checks = 0;                  // orbits with n >= 4 and two or more tail points
    std::uint64_t oracle_mismatches = 0;
    std::vector<VerificationReport> failures;

    bool all_pass() const {
        for (auto& [k, t] : tallies)
            if (t.fail) return false;
        return true;
    }
};

namespace detail {

// Coefficient vectors of the rational box: 2d+2 polynomials of degree <= c in scan order
// G_0..G_d, F_0..F_d, flattened with the t-degree varying fastest.
class BoxCodec {
public:
    BoxCodec(FieldSpec f, unsigned d, long c) : f_(std::move(f)), d_(d), c_(static_cast<unsigned>(c)) {
        n_ = 2 * (d_ + 1) * (c_ + 1);
        size_ = 1;
        for (unsigned i = 0; i < n_; ++i) {
            if (size_ > (std::uint64_t{1} << 34) / f_.q()) fail(Errc::UsageError, "census box too large");
            size_ *= f_.q();
        }
    }

    unsigned width() const { return n_; }
    std::uint64_t size() const { return size_; }
    unsigned coeffs() const { return 2 * (d_ + 1); }
    unsigned span() const { return c_ + 1; }

    std::uint64_t encode(const std::vector<elem_t>& v) const {
        std::uint64_t code = 0;
        for (unsigned i = n_; i-- > 0;) code = code * f_.q() + v[i];
        return code;
    }
    void decode(std::uint64_t code, std::vector<elem_t>& v) const {
        v.resize(n_);
        for (unsigned i = 0; i < n_; ++i) {
            v[i] = static_cast<elem_t>(code % f_.q());
            code /= f_.q();
        }
    }

    /// Divides by the content and makes the first nonzero coefficient monic. False for the zero vector.
    bool normalize(std::vector<elem_t>& v) const {
        const unsigned s = span();
        std::vector<elem_t> g;  // running gcd, low to high
        for (unsigned k = 0; k < coeffs(); ++k) {
            std::vector<elem_t> a(v.begin() + k * s, v.begin() + (k + 1) * s);
            trim(a);
            if (a.empty()) continue;
            g = g.empty() ? a : gcd(std::move(g), std::move(a));
            if (g.size() == 1) break;
        }
        if (g.empty()) return false;
        if (g.size() > 1) {
            for (unsigned k = 0; k < coeffs(); ++k) {
                std::vector<elem_t> a(v.begin() + k * s, v.begin() + (k + 1) * s);
                trim(a);
                std::vector<elem_t> quo = divide(a, g);
                quo.resize(s, 0);
                std::copy(quo.begin(), quo.end(), v.begin() + k * s);
            }
        }
        for (unsigned k = 0; k < coeffs(); ++k) {
            elem_t lead = 0;
            for (unsigned j = s; j-- > 0;)
                if (v[k * s + j]) { lead = v[k * s + j]; break; }
            if (!lead) continue;
            if (lead != 1) {
                const elem_t inv = f_.inv(lead);
                for (auto& x : v) x = f_.mul(x, inv);
            }
            return true;
        }
        return false;
    }

    RationalMap to_map(const std::vector<elem_t>& v) const {
        const unsigned s = span();
        Form F, G;
        for (unsigned k = 0; k < coeffs(); ++k) {
            FqPoly p(f_, std::vector<elem_t>(v.begin() + k * s, v.begin() + (k + 1) * s));
            (k <= d_ ? G : F).push_back(std::move(p));
        }
        return RationalMap(std::move(F), std::move(G));
    }

private:
    void trim(std::vector<elem_t>& a) const {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    void make_monic(std::vector<elem_t>& a) const {
        const elem_t inv = f_.inv(a.back());
        for (auto& x : a) x = f_.mul(x, inv);
    }
    // a mod b, both trimmed and b nonzero.
    std::vector<elem_t> rem(std::vector<elem_t> a, const std::vector<elem_t>& b) const {
        const elem_t inv = f_.inv(b.back());
        while (a.size() >= b.size()) {
            const elem_t c = f_.mul(a.back(), inv);
            const std::size_t sh = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = f_.sub(a[sh + i], f_.mul(c, b[i]));
            trim(a);
        }
        return a;
    }
    std::vector<elem_t> gcd(std::vector<elem_t> a, std::vector<elem_t> b) const {
        while (!b.empty()) {
            std::vector<elem_t> r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        make_monic(a);
        return a;
    }
    std::vector<elem_t> divide(std::vector<elem_t> a, const std::vector<elem_t>& b) const {
        if (a.empty()) return {};
        std::vector<elem_t> q(a.size() - b.size() + 1, 0);
        const elem_t inv = f_.inv(b.back());
        while (!a.empty() && a.size() >= b.size()) {
            const elem_t c = f_.mul(a.back(), inv);
            const std::size_t sh = a.size() - b.size();
            q[sh] = c;
            for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = f_.sub(a[sh + i], f_.mul(c, b[i]));
            trim(a);
        }
        return q;
    }

    FieldSpec f_;
    unsigned d_, c_, n_;
    std::uint64_t size_;
};

// Representatives of PGL_2(F_q): first nonzero entry of (a, b, c, d) equal to 1.
inline std::vector<std::array<elem_t, 4>> pgl2(const FieldSpec& f) {
    std::vector<std::array<elem_t, 4>> out;
    const elem_t q = f.q();
    for (elem_t a = 0; a < q; ++a)
        for (elem_t b = 0; b < q; ++b)
            for (elem_t c = 0; c < q; ++c)
                for (elem_t d = 0; d < q; ++d) {
                    std::array<elem_t, 4> m{a, b, c, d};
                    const elem_t* first = std::find_if(m.begin(), m.end(), [](elem_t x) { return x != 0; });
                    if (first == m.end() || *first != 1) continue;
                    if (f.sub(f.mul(a, d), f.mul(b, c)) == 0) continue;
                    out.push_back(m);
                }
    return out;
}

// Coefficient of Z^k W^(n-k) in (a Z + b W)^i (c Z + d W)^(n-i), as an (n+1) x (n+1) matrix M[k][i].
inline std::vector<std::vector<elem_t>> binary_substitution(const FieldSpec& f, const std::array<elem_t, 4>& m,
                                                            unsigned n) {
    auto mul = [&](const std::vector<elem_t>& p, elem_t z, elem_t w) {
        // p in Z-degree order; multiply by (z Z + w W).
        std::vector<elem_t> r(p.size() + 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i) {
            r[i + 1] = f.add(r[i + 1], f.mul(p[i], z));
            r[i] = f.add(r[i], f.mul(p[i], w));
        }
        return r;
    };
    std::vector<std::vector<elem_t>> M(n + 1, std::vector<elem_t>(n + 1, 0));
    for (unsigned i = 0; i <= n; ++i) {
        std::vector<elem_t> p{1};
        for (unsigned j = 0; j < i; ++j) p = mul(p, m[0], m[1]);
        for (unsigned j = i; j < n; ++j) p = mul(p, m[2], m[3]);
        for (unsigned k = 0; k <= n; ++k) M[k][i] = p[k];
    }
    return M;
}

// Linear action on coefficient vectors: t -> (a t + b)/(c t + d) on every coefficient, then
// conjugation by mu = [[a', b'], [c', d']] in X.
class BoxSymmetry {
public:
    BoxSymmetry(const FieldSpec& f, unsigned d, long c) : f_(f), d_(d), s_(static_cast<unsigned>(c) + 1) {
        const auto group = pgl2(f);
        for (auto& sigma : group) {
            // a(t) = sum a_j t^j -> sum a_j (a t + b)^j (c t + d)^(c - j)
            T_.push_back(binary_substitution(f, sigma, s_ - 1));
        }
        for (auto& mu : group) {
            // F o nu with nu = adj(mu): X -> d X - b Y, Y -> -c X + a Y.
            const std::array<elem_t, 4> nu{mu[3], f.neg(mu[1]), f.neg(mu[2]), mu[0]};
            S_.push_back(binary_substitution(f, nu, d));
            mu_.push_back(mu);
        }
    }

    std::size_t size() const { return T_.size() * S_.size(); }

    void apply(std::size_t g, const std::vector<elem_t>& v, std::vector<elem_t>& out) const {
        const auto& T = T_[g / S_.size()];
        const auto& S = S_[g % S_.size()];
        const auto& mu = mu_[g % S_.size()];
        const unsigned nc = 2 * (d_ + 1);
        tmp_.assign(v.size(), 0);
        for (unsigned k = 0; k < nc; ++k)
            for (unsigned l = 0; l < s_; ++l) {
                elem_t acc = 0;
                for (unsigned j = 0; j < s_; ++j)
                    if (v[k * s_ + j]) acc = f_.add(acc, f_.mul(T[l][j], v[k * s_ + j]));
                tmp_[k * s_ + l] = acc;
            }
        out.assign(v.size(), 0);
        for (unsigned l = 0; l < s_; ++l) {
            // G at coefficient slots 0..d, F at d+1..2d+1.
            for (unsigned k = 0; k <= d_; ++k) {
                elem_t fk = 0, gk = 0;
                for (unsigned i = 0; i <= d_; ++i) {
                    if (const elem_t x = tmp_[(d_ + 1 + i) * s_ + l]) fk = f_.add(fk, f_.mul(S[k][i], x));
                    if (const elem_t y = tmp_[i * s_ + l]) gk = f_.add(gk, f_.mul(S[k][i], y));
                }
                out[(d_ + 1 + k) * s_ + l] = f_.add(f_.mul(mu[0], fk), f_.mul(mu[1], gk));
                out[k * s_ + l] = f_.add(f_.mul(mu[2], fk), f_.mul(mu[3], gk));
            }
        }
    }

private:
    FieldSpec f_;
    unsigned d_, s_;
    std::vector<std::vector<std::vector<elem_t>>> T_, S_;
    std::vector<std::array<elem_t, 4>> mu_;
    mutable std::vector<elem_t> tmp_;
};

struct Instance {
    RationalMap map;
    std::uint64_t weight = 1;
};

// Normalized coefficient vectors of the rational box, one per symmetry orbit when requested.
inline std::vector<Instance> rational_instances(const CensusSpec& spec, std::uint64_t& total,
                                                std::uint64_t& degenerate) {
    const BoxCodec codec(spec.field, spec.degree, spec.coeff_bound);
    std::vector<bool> seen(codec.size(), false);
    std::optional<BoxSymmetry> sym;
    if (spec.symmetry) sym.emplace(spec.field, spec.degree, spec.coeff_bound);
    std::vector<Instance> out;
    std::vector<elem_t> v, w, img;
    total = degenerate = 0;
    for (std::uint64_t code = 1; code < codec.size(); ++code) {
        if (seen[code]) continue;
        codec.decode(code, v);
        w = v;
        if (!codec.normalize(w) || codec.encode(w) != code) continue;
        std::uint64_t weight = 1;
        seen[code] = true;
        if (sym) {
            for (std::size_t g = 0; g < sym->size(); ++g) {
                sym->apply(g, v, img);
                codec.normalize(img);
                const std::uint64_t c = codec.encode(img);
                if (!seen[c]) {
                    seen[c] = true;
                    ++weight;
                }
            }
        }
        total += weight;
        try {
            out.push_back({codec.to_map(v), weight});
        } catch (const Error& e) {
            if (e.code() != Errc::DegenerateMap && e.code() != Errc::DegreeMismatch) throw;
            degenerate += weight;
        }
    }
    return out;
}

inline std::vector<Instance> monic_instances(const CensusSpec& spec) {
    const auto coeffs = polys_up_to(spec.field, spec.coeff_bound);
    std::vector<Instance> out;
    std::vector<std::size_t> idx(spec.degree, 0);
    for (;;) {
        std::vector<FqPoly> c;
        for (auto i : idx) c.push_back(coeffs[i]);
        c.push_back(FqPoly::one(spec.field));
        out.push_back({RationalMap::polynomial(c), 1});
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == coeffs.size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return out;
}

struct MapOutcome {
    std::map<std::string, Tally> tallies;
    std::vector<VerificationReport> failures;
    bool admissible = false;
    std::uint64_t cycles = 0, orbits = 0, equality_q_plus_1 = 0, long_cycles = 0, long_cycles_conjugate = 0,
                  per_equality = 0, three_point_configurations = 0, tail_checks = 0, oracle_mismatches = 0;
    std::map<std::size_t, std::uint64_t> cycle_lengths;
};

inline void record(MapOutcome& out, const VerificationReport& r, std::size_t max_failures) {
    out.tallies[r.claim].add(r.status);
    if (r.failed() && out.failures.size() < max_failures) out.failures.push_back(r);
}

// Runs the selected checks on one map, guarding each so that an exception becomes a Fail.
inline MapOutcome analyze_instance(const RationalMap& phi, const CensusSpec& spec) {
    MapOutcome out;
    if (phi.bad_places().size() > 1) return out;
    out.admissible = true;
    auto guarded = [&](const std::string& claim, const std::string& inst, auto&& fn) {
        try {
            record(out, fn(), spec.max_failures);
        } catch (const Error& e) {
            auto r = make_report(claim, inst);
            r.fail_with(std::string("error: ") + e.what(), {{"map", phi.to_string()}});
            record(out, r, spec.max_failures);
        }
    };

    const BoxDynamics bx = explore_box(phi, spec.box, spec.budget);
    const auto small_places = places_up_to(phi.field(), 2);
    for (auto& c : bx.cycles) {
        std::vector<ProjPoint> cyc;
        for (auto i : c) cyc.push_back(bx.nodes[i]);
        ++out.cycles;
        ++out.cycle_lengths[cyc.size()];
        if (spec.on_cycle) spec.on_cycle(phi, cyc);
        const std::string inst = describe(phi, cyc);
        if (spec.checks & kEquidistance)
            guarded("equidistance", inst, [&] { return check_equidistance(phi, cyc); });
        if (spec.checks & kCycleBounds)
            guarded("cycle-bounds", inst, [&] {
                auto r = check_cycle_bounds(phi, cyc);
                if (r.stats.value("equality_q_plus_1", false)) ++out.equality_q_plus_1;
                if (cyc.size() > 2 * phi.degree()) {
                    ++out.long_cycles;
                    if (r.stats.contains("conjugacy") && r.stats["conjugacy"]["kind"] == "conjugate")
                        ++out.long_cycles_conjugate;
                }
                return r;
            });
        if (spec.checks & kDichotomy)
            for (auto& pl : small_places)
                if (phi.has_good_reduction(pl))
                    guarded("dichotomy", inst, [&] { return check_reduced_dichotomy(phi, cyc, pl); });
    }

    if (spec.checks & (kOrbitBounds | kThreePoints)) {
        // Maximal closed orbits: closed nodes with no closed predecessor, plus cycles nothing feeds into.
        using Fate = BoxDynamics::Fate;
        auto closed = [&](std::size_t i) { return bx.fate[i] == Fate::Periodic || bx.fate[i] == Fate::Preperiodic; };
        std::vector<bool> has_pred(bx.nodes.size(), false), fed(bx.nodes.size(), false);
        for (std::size_t i = 0; i < bx.nodes.size(); ++i)
            if (closed(i) && bx.succ[i] >= 0) {
                has_pred[static_cast<std::size_t>(bx.succ[i])] = true;
                if (bx.fate[i] != Fate::Periodic) fed[static_cast<std::size_t>(bx.succ[i])] = true;
            }
        std::vector<std::size_t> starts;
        for (std::size_t i = 0; i < bx.nodes.size(); ++i)
            if (closed(i) && !has_pred[i]) starts.push_back(i);
        for (auto& c : bx.cycles)
            if (std::none_of(c.begin(), c.end(), [&](std::size_t i) { return static_cast<bool>(fed[i]); }))
                starts.push_back(c[0]);
        for (auto s : starts) {
            const OrbitRecord orb = bx.orbit_of(s);
            ++out.orbits;
            const std::string inst = describe(phi, orb.points());
            if (spec.checks & kOrbitBounds)
                guarded("orbit-bounds", inst, [&] {
                    auto r = check_orbit_bounds(phi, orb);
                    if (r.stats.value("tail_check", std::string()) == "pass") ++out.tail_checks;
                    return r;
                });
            if (spec.checks & kThreePoints)
                guarded("three-points", inst, [&] {
                    auto r = check_three_points(phi, orb);
                    out.three_point_configurations += r.stats.value("configurations", std::size_t{0});
                    return r;
                });
        }
    }

    // Polynomiality is not preserved by the box symmetries, so these run on the monic family only.
    if (spec.family == Family::MonicPolynomial && phi.degree() >= 2) {
        const std::string inst = phi.to_affine_string();
        if (spec.checks & kPerBound)
            guarded("per-bound", inst, [&] {
                auto r = check_per_bound_polynomial(phi);
                if (r.stats.value("equality", false)) ++out.per_equality;
                return r;
            });
        if (spec.checks & kPeriodicOracle)
            guarded("periodic-oracle", inst, [&] {
                auto r = make_report("periodic-oracle", inst);
                const OracleMatch m = periodic_oracle_match(phi, spec.box, spec.budget);
                r.stats = {{"box", spec.box}};
                if (!m.match) {
                    ++out.oracle_mismatches;
                    r.fail_with("integral periodic points disagree with the bounded search",
                                {{"only_integral", points_json(m.only_integral)},
                                 {"only_search", points_json(m.only_search)}});
                }
                return r;
            });
    }
    return out;
}

}  // namespace detail

/// Enumerates the box, keeps maps with at most one bad place, and runs the selected checks on every
/// cycle and maximal closed orbit reached from points of height <= box. Results are merged in
/// enumeration order, so they do not depend on the number of workers.
inline CensusResult census(const CensusSpec& spec) {
    if (spec.degree < 1) fail(Errc::DegreeTooSmall, "degree must be at least 1");
    if (spec.coeff_bound < 0 || spec.box < 0) fail(Errc::UsageError, "bounds must be non-negative");
    CensusResult res;
    std::vector<detail::Instance> inst;
    if (spec.family == Family::MonicPolynomial) {
        inst = detail::monic_instances(spec);
        res.maps = inst.size();
    } else {
        inst = detail::rational_instances(spec, res.maps, res.degenerate);
    }
    res.classes = inst.size();

    std::vector<detail::MapOutcome> outcomes(inst.size());
    const unsigned W = std::max(1u, std::min<unsigned>(spec.workers, static_cast<unsigned>(inst.size())));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < inst.size(); i += W) outcomes[i] = detail::analyze_instance(inst[i].map, spec);
    };
    if (W == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < W; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < inst.size(); ++i) {
        const auto& o = outcomes[i];
        const std::uint64_t wt = inst[i].weight;
        if (!o.admissible) continue;
        res.admissible += wt;
        res.cycles += wt * o.cycles;
        res.orbits += wt * o.orbits;
        res.equality_q_plus_1 += wt * o.equality_q_plus_1;
        res.long_cycles += wt * o.long_cycles;
        res.long_cycles_conjugate += wt * o.long_cycles_conjugate;
        res.per_equality += wt * o.per_equality;
        res.three_point_configurations += wt * o.three_point_configurations;
        res.tail_checks += wt * o.tail_checks;
        res.oracle_mismatches += wt * o.oracle_mismatches;
        for (auto& [n, c] : o.cycle_lengths) res.cycle_lengths[n] += wt * c;
        for (auto& [claim, t] : o.tallies) {
            res.tallies[claim] += t;
            Tally tw{t.pass * wt, t.fail * wt, t.inapplicable * wt};
            res.weighted[claim] += tw;
        }
        for (auto& f : o.failures)
            if (res.failures.size() < spec.max_failures) res.failures.push_back(f);
    }

    auto& r = res.report;
    r = make_report("census", "q=" + std::to_string(spec.field.q()) + " d=" + std::to_string(spec.degree) +
                                  " coeff-bound=" + std::to_string(spec.coeff_bound) + " family=" +
                                  family_name(spec.family) + " box=" + std::to_string(spec.box));
    json tallies = json::object(), weighted = json::object(), lengths = json::object();
    for (auto& [k, t] : res.tallies) tallies[k] = t.to_json();
    for (auto& [k, t] : res.weighted) weighted[k] = t.to_json();
    for (auto& [n, c] : res.cycle_lengths) lengths[std::to_string(n)] = c;
    r.stats = {{"maps", res.maps},
               {"classes", res.classes},
               {"symmetry", spec.symmetry && spec.family == Family::Rational},
               {"degenerate", res.degenerate},
               {"admissible", res.admissible},
               {"cycles", res.cycles},
               {"cycle_lengths", lengths},
               {"orbits", res.orbits},
               {"equality_q_plus_1", res.equality_q_plus_1},
               {"long_cycles", res.long_cycles},
               {"long_cycles_conjugate", res.long_cycles_conjugate},
               {"per_equality", res.per_equality},
               {"three_point_configurations", res.three_point_configurations},
               {"tail_checks", res.tail_checks},
               {"oracle_mismatches", res.oracle_mismatches},
               {"checks", tallies},
               {"checks_weighted", weighted}};
    if (!res.all_pass()) {
        json w = json::array();
        for (auto& f : res.failures) w.push_back(f.to_json());
        r.fail_with("some checks failed", w);
    } else if (res.admissible == 0) {
        r.not_applicable("no map in the box has at most one bad place");
    }
    return res;
}

}  // namespace funcdyn
