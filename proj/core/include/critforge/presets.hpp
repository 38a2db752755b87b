#ifndef CRITFORGE_PRESETS_HPP
#define CRITFORGE_PRESETS_HPP

#include "critforge/isotopy.hpp"
#include "critforge/lg_pair.hpp"
#include "critforge/quad_form.hpp"

namespace critforge {

/// Built-in fixtures used by the CLI presets and the golden tests.

/// The quartic potential x^3 + y^4 with its function-preserving isotopy
/// x -> x + t y^4, y -> y (1 - 3t x^2 - 3t^2 x y^4 - t^3 y^8)^{1/4}:
/// phi_0 = id and phi_1 is a nontrivial automorphism fixing the potential.
struct QuarticIsotopyFixture {
    Series f; // trusted one order above N so jet checks run at full depth
    FamilyCoordChange family;
};
QuarticIsotopyFixture preset_quartic_isotopy(unsigned N);

/// The t = 1 member of the family above, built directly from the quartic
/// root series.
CoordChange preset_quartic_automorphism(unsigned N);

/// The determinant-one matrix family interpolating the identity to a
/// 3-cycle: rows (1-t^3, t, 0), (0, 1-t^3, t), (t(3-3t^3+t^6), 0, 1-t^3).
MatrixFamily preset_hyperbolic_3cycle();

/// The cubic stabilization pair: (A^1, x^3) against (A^2, x^3 + y^2), with
/// the rank-one acting form and the identity witness.
struct CubicPairFixture {
    LGPair p1;      // x^3 in one variable
    LGPair p2;      // x^3 + y^2 in two variables
    QuadForm q1;    // <1>
    QuadForm q2;    // empty
    CoordChange witness;
};
CubicPairFixture preset_cubic_pair(unsigned N);

} // namespace critforge

#endif
