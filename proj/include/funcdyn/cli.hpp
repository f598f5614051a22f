#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "funcdyn/constructions.hpp"
#include "funcdyn/io/format.hpp"
#include "funcdyn/io/json.hpp"
#include "funcdyn/io/parse.hpp"
#include "funcdyn/verify/census.hpp"

namespace funcdyn {

/// Everything a run needs, validated. Literal inputs stay as text until the field is known.
struct RunConfig {
    std::optional<std::uint64_t> q;
    std::optional<std::uint32_t> p;
    std::optional<unsigned> k;
    std::optional<std::string> modulus;
    FieldSpec field;

    std::string command, subcommand;
    std::optional<std::string> map, start, place;
    std::string table, points, seeds, w;  // construct inputs, comma separated

    std::optional<long> bound;
    std::size_t max_steps = 10000;
    long max_degree = 64;
    std::uint64_t seed = 0;
    unsigned workers = 1;

    unsigned degree = 2;
    std::optional<unsigned> target_degree;
    long coeff_bound = 1;
    Family family = Family::Rational;
    bool symmetry = true;

    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> out;

    // Set when parsing already produced the whole answer (help text or a usage error).
    std::optional<int> early_exit;
    std::string early_text;

    SearchBudget budget() const { return {max_steps, max_degree}; }
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(trim(cur));
    return out;
}

inline void add_common_flags(CLI::App& app, RunConfig& c, std::string& format) {
    app.add_option("--q", c.q, "field order q = p^k");
    app.add_option("--p", c.p, "field characteristic");
    app.add_option("--k", c.k, "field degree over F_p");
    app.add_option("--modulus", c.modulus, "monic irreducible modulus in g, e.g. \"g^2+g+1\"");
    app.add_option("--map", c.map, "map literal: \"[F : G]\" or affine \"(X^2+t)/X^2\"");
    app.add_option("--start", c.start, "starting point: \"t+1\", \"[x : y]\" or \"inf\"");
    app.add_option("--place", c.place, "place: monic irreducible in t, or \"inf\"");
    app.add_option("--bound", c.bound, "search box: points of height <= B");
    app.add_option("--max-steps", c.max_steps, "orbit step budget")->check(CLI::PositiveNumber);
    app.add_option("--max-degree", c.max_degree, "abandon orbits whose height exceeds this")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", c.seed, "seed for randomized factorization");
    app.add_option("--workers", c.workers, "census worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", format, "json | table | csv");
    app.add_option("--out", c.out, "write the report to this path instead of stdout");
}

}  // namespace detail

/// Parses argv into a validated RunConfig. Usage errors are returned through early_exit = 2.
inline RunConfig parse_args(int argc, const char* const* argv) {
    RunConfig c;
    std::string format;
    std::string family = "rational";
    bool no_symmetry = false;
    CLI::App app{"Dynamics of rational maps on P^1 over F_q(t)", "funcdyn"};
    app.fallthrough();
    app.require_subcommand(1);
    detail::add_common_flags(app, c, format);

    app.add_subcommand("analyze", "resultant, bad places, escape height and cycles in a box");
    app.add_subcommand("orbit", "forward orbit of --start");
    app.add_subcommand("periodic", "periodic points (all integral ones for unit-leading polynomials)");

    auto* construct = app.add_subcommand("construct", "extremal constructions");
    construct->require_subcommand(1);
    construct->add_subcommand("sharp", "rational map with a (q+1)-cycle through 0 and infinity");
    auto* graph = construct->add_subcommand("graph", "polynomial inducing a self-map of F_q");
    graph->add_option("--table", c.table, "values on the encodings 0..q-1, comma separated")->required();
    graph->add_option("--deg", c.target_degree, "target degree (>= q)");
    auto* fixed = construct->add_subcommand("fixed", "polynomial fixing the given points");
    fixed->add_option("--points", c.points, "distinct polynomials in t, comma separated")->required();
    auto* cycles = construct->add_subcommand("cycles", "polynomial with several n-cycles, n the order of w");
    cycles->add_option("--w", c.w, "unit of F_q of order n > 1")->required();
    cycles->add_option("--seeds", c.seeds, "nonzero polynomials with distinct n-th powers")->required();

    auto* verify = app.add_subcommand("verify", "check a claim on a map or a census");
    verify->require_subcommand(1);
    for (const char* name : {"equidistance", "cycle-bounds", "orbit-bounds", "dichotomy", "three-points", "per-bound"})
        verify->add_subcommand(name, std::string("check ") + name);
    auto add_census_flags = [&](CLI::App* s) {
        s->add_option("--deg", c.degree, "map degree")->check(CLI::PositiveNumber);
        s->add_option("--coeff-bound", c.coeff_bound, "max degree in t of the coefficients")->check(CLI::NonNegativeNumber);
        s->add_option("--family", family, "rational | monic");
        s->add_flag("--no-symmetry", no_symmetry, "visit every map instead of one per symmetry class");
    };
    add_census_flags(verify->add_subcommand("census", "run every check over a census box"));
    add_census_flags(app.add_subcommand("census", "enumerate a box of maps and run every check"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success&) {
        std::ostringstream os;
        app.exit(CLI::CallForHelp(), os, os);
        c.early_exit = 0;
        c.early_text = os.str();
        return c;
    } catch (const CLI::ParseError& e) {
        c.early_exit = 2;
        c.early_text = std::string("usage error: ") + e.what() + "\n" + app.help();
        return c;
    }

    for (auto* s : app.get_subcommands()) {
        c.command = s->get_name();
        for (auto* sub : s->get_subcommands()) c.subcommand = sub->get_name();
    }

    auto usage = [&](const std::string& msg) {
        c.early_exit = 2;
        c.early_text = "usage error: " + msg + "\n";
        return c;
    };
    try {
        c.field = parse_field(c.q, c.p, c.k, c.modulus);
    } catch (const Error& e) {
        const std::string flag = c.modulus && e.code() == Errc::ReducibleModulus ? "--modulus" : c.q ? "--q" : "--p";
        return usage(flag + ": " + e.what());
    }
    if (!format.empty()) {
        try {
            c.format = parse_format(format);
        } catch (const Error& e) {
            return usage(e.what());
        }
    } else if (c.out && c.out->size() >= 4 && c.out->substr(c.out->size() - 4) == ".csv") {
        c.format = OutputFormat::Csv;
    }
    if (family == "monic") c.family = Family::MonicPolynomial;
    else if (family != "rational") return usage("--family must be rational or monic");
    c.symmetry = !no_symmetry;
    if (c.bound && *c.bound < 0) return usage("--bound must be non-negative");

    const bool is_census = c.command == "census" || c.subcommand == "census";
    const bool needs_map = !is_census && c.command != "construct";
    if (needs_map && !c.map) return usage("--map is required for " + c.command);
    if (c.command == "orbit" && !c.start) return usage("--start is required for orbit");
    if (c.subcommand == "orbit-bounds" && !c.start) return usage("--start is required for orbit-bounds");
    return c;
}

namespace detail {

struct Emitted {
    json doc;
    Status status = Status::Pass;
};

inline Emitted emit_report(const VerificationReport& r) { return {r.to_json(), r.status}; }

inline Emitted emit_reports(const std::string& claim, const std::vector<VerificationReport>& rs) {
    json a = json::array();
    std::vector<Status> st;
    for (auto& r : rs) {
        a.push_back(r.to_json());
        st.push_back(r.status);
    }
    const Status s = combine(st);
    return {{{"claim", claim}, {"status", status_name(s)}, {"reports", a}}, s};
}

// The cycle through --start, or every cycle found in the box when no start is given.
inline std::vector<std::vector<ProjPoint>> target_cycles(const RationalMap& phi, const RunConfig& c) {
    if (c.start) {
        const OrbitRecord o = orbit(phi, parse_point(phi.field(), *c.start), c.max_steps, c.max_degree);
        if (!o.closed()) fail(Errc::NotClosed, "orbit of " + *c.start + " did not close: " + status_name(o.status));
        return {o.cycle};
    }
    return find_cycles_bounded(phi, c.bound.value_or(1), c.budget());
}

inline json construction_witness(const RationalMap& phi, const RunConfig& c) {
    json j{{"map", phi.to_string()}, {"affine", phi.to_affine_string()}, {"details", map_to_json(phi)}};
    const OrbitRecord o = orbit(phi, ProjPoint::affine(FqPoly(phi.field())), c.max_steps, c.max_degree);
    j["orbit_of_0"] = orbit_to_json(o);
    j["cycles"] = cycles_to_json(find_cycles_bounded(phi, c.bound.value_or(1), c.budget()));
    return j;
}

inline Emitted run_construct(const RunConfig& c) {
    const FieldSpec& f = c.field;
    if (c.subcommand == "sharp") return {construction_witness(sharp_rational_map(f), c), Status::Pass};
    if (c.subcommand == "graph") {
        GraphSpec g{f, {}};
        for (auto& s : split_list(c.table)) g.table.push_back(parse_element(f, s).value());
        return {construction_witness(interpolate_graph(g, c.target_degree), c), Status::Pass};
    }
    if (c.subcommand == "fixed") {
        std::vector<FqPoly> pts;
        for (auto& s : split_list(c.points)) pts.push_back(parse_poly(f, s));
        return {construction_witness(fixed_points_poly(pts), c), Status::Pass};
    }
    std::vector<FqPoly> seeds;
    for (auto& s : split_list(c.seeds)) seeds.push_back(parse_poly(f, s));
    return {construction_witness(multi_cycle_poly(parse_element(f, c.w), seeds), c), Status::Pass};
}

inline Emitted run_census(const RunConfig& c) {
    CensusSpec s;
    s.field = c.field;
    s.degree = c.degree;
    s.coeff_bound = c.coeff_bound;
    s.family = c.family;
    s.box = c.bound.value_or(c.coeff_bound);
    s.budget = c.budget();
    s.symmetry = c.symmetry;
    s.workers = c.workers;
    const CensusResult r = census(s);
    return emit_report(r.report);
}

inline Emitted run_verify(const RunConfig& c) {
    if (c.subcommand == "census") return run_census(c);
    const RationalMap phi = parse_map(c.field, *c.map);
    const std::string& sub = c.subcommand;
    if (sub == "per-bound") return emit_report(check_per_bound_polynomial(phi));
    if (sub == "orbit-bounds" || sub == "three-points") {
        const OrbitRecord o = orbit(phi, parse_point(c.field, *c.start), c.max_steps, c.max_degree);
        return emit_report(sub == "orbit-bounds" ? check_orbit_bounds(phi, o) : check_three_points(phi, o));
    }
    std::vector<VerificationReport> rs;
    for (auto& cyc : target_cycles(phi, c)) {
        if (sub == "equidistance") {
            rs.push_back(check_equidistance(phi, cyc));
        } else if (sub == "cycle-bounds") {
            rs.push_back(check_cycle_bounds(phi, cyc));
        } else {
            std::vector<Place> places;
            if (c.place) {
                const std::string ps = trim(*c.place);
                places.push_back(ps == "inf" ? Place::infinity(c.field) : Place::finite(parse_poly(c.field, ps)));
            } else {
                for (auto& pl : places_up_to(c.field, 2))
                    if (phi.has_good_reduction(pl)) places.push_back(pl);
            }
            for (auto& pl : places) rs.push_back(check_reduced_dichotomy(phi, cyc, pl));
        }
    }
    if (rs.size() == 1) return emit_report(rs[0]);
    return emit_reports(sub, rs);
}

inline Emitted run_command(const RunConfig& c) {
    if (c.command == "construct") return run_construct(c);
    if (c.command == "verify") return run_verify(c);
    if (c.command == "census") return run_census(c);
    const RationalMap phi = parse_map(c.field, *c.map);
    if (c.command == "orbit") {
        const OrbitRecord o = orbit(phi, parse_point(c.field, *c.start), c.max_steps, c.max_degree);
        return {{{"map", phi.to_string()}, {"orbit", orbit_to_json(o)}}, Status::Pass};
    }
    if (c.command == "periodic") {
        json j{{"map", phi.to_string()}};
        if (phi.is_unit_leading_polynomial() && phi.degree() >= 2) {
            j["method"] = "integral";
            j["periodic"] = periodic_to_json(periodic_points_integral(phi, c.seed));
        } else {
            const long B = c.bound.value_or(1);
            j["method"] = "search";
            j["bound"] = B;
            j["cycles"] = cycles_to_json(find_cycles_bounded(phi, B, c.budget()));
        }
        return {j, Status::Pass};
    }
    // analyze
    json j{{"field", field_to_json(c.field)}, {"map", map_to_json(phi)}};
    const auto h = escape_height(phi);
    j["escape_height"] = h ? json(*h) : json(nullptr);
    json good = json::array();
    for (auto& pl : places_up_to(c.field, 1))
        if (phi.has_good_reduction(pl)) good.push_back(pl.to_string());
    j["good_places_degree_le_1"] = good;
    const long B = c.bound.value_or(1);
    j["bound"] = B;
    j["cycles"] = cycles_to_json(find_cycles_bounded(phi, B, c.budget()));
    return {j, Status::Pass};
}

}  // namespace detail

/// Executes a parsed config. Exit codes: 0 when nothing failed, 1 on any Fail, 2 on usage or
/// input errors (with a diagnostic on err).
inline int run(const RunConfig& c, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    if (c.early_exit) {
        (*c.early_exit == 0 ? out : err) << c.early_text;
        return *c.early_exit;
    }
    detail::Emitted e;
    try {
        e = detail::run_command(c);
    } catch (const Error& ex) {
        err << "error: " << ex.what() << "\n";
        return 2;
    }
    const std::string text = render(e.doc, c.format);
    if (c.out) {
        std::ofstream f(*c.out);
        if (!f) {
            err << "error: cannot write " << *c.out << "\n";
            return 2;
        }
        f << text;
    } else {
        out << text;
    }
    return e.status == Status::Fail ? 1 : 0;
}

}  // namespace funcdyn
