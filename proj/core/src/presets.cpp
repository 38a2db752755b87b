#include "critforge/presets.hpp"

namespace critforge {

namespace {

Series quartic_potential(unsigned order) {
    Series x = Series::variable(2, 0, order);
    Series y = Series::variable(2, 1, order);
    return x * x * x + y * y * y * y;
}

} // namespace

QuarticIsotopyFixture preset_quartic_isotopy(unsigned N) {
    const unsigned forder = N + 1;
    Series f = quartic_potential(forder);

    FamilySeries x = FamilySeries::variable(2, 0, N);
    FamilySeries y = FamilySeries::variable(2, 1, N);
    const RatPoly t = RatPoly::t();

    FamilySeries y4 = y * y * y * y;
    FamilySeries y8 = y4 * y4;
    FamilySeries x2 = x * x;

    FamilySeries one = FamilySeries::constant(2, N, RatPoly(1));
    FamilySeries radicand = one - x2.scale(t * RatPoly(3)) - (x * y4).scale(t * t * RatPoly(3)) -
                            y8.scale(t * t * t);
    FamilySeries root = nth_root(radicand, 4);

    std::vector<FamilySeries> comps;
    comps.push_back(x + y4.scale(t));
    comps.push_back(y * root);
    return QuarticIsotopyFixture{std::move(f), FamilyCoordChange(2, N, std::move(comps))};
}

CoordChange preset_quartic_automorphism(unsigned N) {
    Series x = Series::variable(2, 0, N);
    Series y = Series::variable(2, 1, N);
    Series y4 = y * y * y * y;
    Series y8 = y4 * y4;
    Series x2 = x * x;
    Series one = Series::constant(2, N, Rat(1));
    Series radicand = one - x2.scale(Rat(3)) - (x * y4).scale(Rat(3)) - y8;
    Series h = nth_root(radicand, 4);
    std::vector<Series> comps{x + y4, y * h};
    return CoordChange(2, N, std::move(comps));
}

MatrixFamily preset_hyperbolic_3cycle() {
    const RatPoly t = RatPoly::t();
    const RatPoly t3 = t * t * t;
    const RatPoly a = RatPoly(1) - t3;
    const RatPoly corner = t * (RatPoly(3) - RatPoly(3) * t3 + t3 * t3); // t(3 - 3t^3 + t^6)
    std::vector<RatPoly> e{a,      t,         RatPoly(),
                           RatPoly(), a,      t,
                           corner, RatPoly(), a};
    return MatrixFamily(3, std::move(e));
}

CubicPairFixture preset_cubic_pair(unsigned N) {
    Series x1 = Series::variable(1, 0, N);
    LGPair p1(x1 * x1 * x1);

    Series x = Series::variable(2, 0, N);
    Series y = Series::variable(2, 1, N);
    LGPair p2(x * x * x + y * y);

    return CubicPairFixture{std::move(p1), std::move(p2), QuadForm::standard(1), QuadForm(),
                            CoordChange::identity(2, N)};
}

} // namespace critforge
