// Builds the map with a (q+1)-cycle through 0 and infinity, then prints the cycle and the
// distances between its points at a few places.

#include <cstdlib>
#include <iostream>

#include "funcdyn.hpp"

using namespace funcdyn;

static void show(const RationalMap& phi, const ProjPoint& start) {
    const OrbitRecord o = orbit(phi, start);
    std::cout << "cycle of length " << o.cycle.size() << ":";
    for (auto& p : o.cycle) std::cout << " " << p.to_string();
    std::cout << "\n";
    for (auto& pl : places_up_to(phi.field(), 1)) {
        if (!phi.has_good_reduction(pl)) continue;
        std::cout << "  delta at " << pl.to_string() << ":";
        for (std::size_t i = 1; i < o.cycle.size(); ++i) std::cout << " " << log_distance(o.cycle[0], o.cycle[i], pl);
        std::cout << "\n";
    }
}

int main(int argc, char** argv) {
    const std::uint64_t q = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 3;
    const FieldSpec f = make_field_q(q);
    const RationalMap phi = sharp_rational_map(f);
    std::cout << "phi = " << phi.to_affine_string() << "\n";
    std::cout << "bad places:";
    for (auto& pl : phi.bad_places()) std::cout << " " << pl.to_string();
    std::cout << "\n";

    show(phi, ProjPoint::affine(FqPoly(f)));

    // The change of coordinates X -> tX + 1 gives the conjugate bad reduction at t and infinity.
    const Mobius mu{FqPoly::t(f), FqPoly::one(f), FqPoly(f), FqPoly::one(f)};
    const RationalMap psi = conjugate(phi, mu);
    std::cout << "\npsi = " << psi.to_affine_string() << "\n";
    show(psi, mu.apply(ProjPoint::affine(FqPoly(f))));
}
