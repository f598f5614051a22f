// Lists the periodic points of a polynomial map with unit leading coefficient.
// Usage: periodic_points <q> "<map>", e.g. periodic_points 2 "X^2 + 1"

#include <cstdlib>
#include <iostream>

#include "funcdyn.hpp"

using namespace funcdyn;

int main(int argc, char** argv) {
    const std::uint64_t q = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2;
    const FieldSpec f = make_field_q(q);
    try {
        const RationalMap phi = parse_map(f, argc > 2 ? argv[2] : "X^2 + 1");
        const IntegralPeriodicPoints pp = periodic_points_integral(phi);
        std::cout << phi.to_affine_string() << " over F_" << q << "(t)\n";
        for (auto& x : pp.affine) std::cout << "  " << x.point.to_string() << "  period " << x.period << "\n";
        std::cout << "  inf  period " << pp.infinity.period << "\n";
        const auto r = check_per_bound_polynomial(phi);
        std::cout << r.to_json().dump(2) << "\n";
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
}
