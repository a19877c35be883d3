// Minimal library walkthrough: evaluate both sides of the character identity
// for the split rank-one pair at the quarter-turn torus point and show the
// fixed-point decomposition backing it.

#include <iostream>

#include "charid/catalog.hpp"
#include "charid/fixed_point.hpp"
#include "charid/packet.hpp"

int main() {
    using namespace charid;

    InnerFormPair pair = find_pair("sl2R/su2");
    Weight lambda = Rational(3) * pair.lie.R->rho();  // n = 3
    TorusPoint g = TorusPoint::parse("1/4");          // t = pi/2

    PacketReport report = verify_identity(pair, lambda, g, Route::both);
    std::cout << "pair " << report.pair_name << ", lambda = " << report.lambda.str()
              << ", g = " << report.point.str() << "\n";
    std::cout << "  lhs = " << report.lhs.str() << "\n";
    std::cout << "  rhs = " << report.rhs.str() << "\n";
    std::cout << "  equal: " << (report.equal ? "yes" : "no") << "\n\n";

    std::cout << "fixed-point summands over W_G/W_K:\n";
    for (int rep : pair.coset_reps) {
        Cyclotomic tau = tau_index_noncompact(pair, lambda, rep, g);
        std::cout << "  coset " << rep << ": " << tau.str() << "\n";
    }
    Pf1Result pf1 = verify_pf1_decomposition(pair, lambda, g);
    std::cout << "compact index " << pf1.compact_side.str() << " == regrouped sum "
              << pf1.regrouped_side.str() << ": " << (pf1.equal ? "yes" : "no") << "\n";
    return report.equal && pf1.equal ? 0 : 1;
}
