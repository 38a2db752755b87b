#ifndef CRITFORGE_LG_STABILITY_HPP
#define CRITFORGE_LG_STABILITY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "critforge/lg_pair.hpp"
#include "critforge/milnor.hpp"
#include "critforge/morse_split.hpp"
#include "critforge/quad_form.hpp"

namespace critforge {

/// External (Thom-Sebastiani) sum f(x) + g(y) on disjoint variable blocks.
LGPair ts_sum(const LGPair& p, const LGPair& r);

/// The quadratic-bundle action on critical charts: f goes to f boxplus q in
/// fresh variables, and the acting stable class is recorded alongside.
struct Stabilization {
    LGPair pair;
    GWClass action;
};
Stabilization stabilize(const LGPair& p, const QuadForm& q, Mode mode = Mode::Q);

/// The computable tuple of stable critical invariants: everything is
/// recomputable from the pair, and under the stabilization action only the
/// split-off GW class and the ambient parity transform (by the acting class
/// and its rank mod 2 respectively).
struct StableInvariants {
    std::size_t corank = 0;
    long mu = 0;
    long tjurina = 0;
    std::vector<long> hilbert;
    GWClass quad_gw;
    int total_dim_parity = 0;
    Series residual_normal; // canonically normalized residual jet
};

StableInvariants stable_invariants(const LGPair& p, unsigned N, Mode mode = Mode::Q,
                                   unsigned cap = kDefaultMilnorCap);

/// Comparison verdict. Distinguished carries machine-readable evidence of
/// which invariant differs; Consistent means no computed invariant separates
/// the pairs up to the working order — never a claim of full stable
/// equivalence, which finite-order data cannot certify.
struct Distinguished {
    std::string invariant; // "corank" | "mu" | "tjurina" | "hilbert" | "residual-jet"
    std::string lhs, rhs;  // printed values
};
struct ConsistentToOrder {
    unsigned order;
};
using CompareVerdict = std::variant<Distinguished, ConsistentToOrder>;

bool is_consistent(const CompareVerdict& v);
std::string to_string(const CompareVerdict& v);

CompareVerdict stable_compare(const LGPair& p1, const LGPair& p2, unsigned N,
                              unsigned cap = kDefaultMilnorCap);

/// Checks a claimed stable equivalence witness: phi must be a valid
/// coordinate change with compose((p1 boxplus q1).f, phi) == (p2 boxplus
/// q2).f mod m^{N+1}.
bool verify_stable_witness(const LGPair& p1, const LGPair& p2, const QuadForm& q1,
                           const QuadForm& q2, const CoordChange& phi, unsigned N);

} // namespace critforge

#endif
