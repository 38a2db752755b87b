#include <doctest.h>

#include "critforge/coord_change.hpp"
#include "critforge/implicit_solve.hpp"
#include "critforge/presets.hpp"
#include "critforge/series.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace critforge;
using critforge::testing::S;

TEST_CASE("rational canonical form and arithmetic") {
    CHECK(Rat(2, 6) == Rat(1, 3));
    CHECK(Rat(-2, -6) == Rat(1, 3));
    CHECK(Rat(1, -3).den() == 3);
    CHECK(Rat(1, -3).sign() == -1);
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 2).inverse() == Rat(2));
    CHECK(Rat(4, 9).nth_root(2).value() == Rat(2, 3));
    CHECK(Rat(-8).nth_root(3).value() == Rat(-2));
    CHECK(!Rat(-4).nth_root(2).has_value());
    CHECK(!Rat(2).nth_root(2).has_value());
    CHECK(Rat::from_string("-3/6") == Rat(-1, 2));
    CHECK_THROWS_AS(Rat(1, 0), DomainError);
}

TEST_CASE("square classes") {
    CHECK(square_class(Rat(6)) == 6);
    CHECK(square_class(Rat(8)) == 2);
    CHECK(square_class(Rat(-12)) == -3);
    CHECK(square_class(Rat(1, 2)) == 2);   // num*den = 2
    CHECK(square_class(Rat(-1, 4)) == -1); // num*den = -4
    CHECK(square_class(Rat(49)) == 1);
    // Cofactor beyond the trial bound: a large prime squared.
    CHECK(squarefree_part(mpz_class("1000003") * mpz_class("1000003")) == 1);
    CHECK(squarefree_part(mpz_class("1000003") * mpz_class("1000033")) ==
          mpz_class("1000003") * mpz_class("1000033"));
}

TEST_CASE("series addition follows the min-order contract") {
    Series a = S("x + x^2", {"x"}, 5);
    Series b = S("-x", {"x"}, 5);
    CHECK(a + b == S("x^2", {"x"}, 5));

    Series c = S("1 + x", {"x"}, 3);
    Series zero2 = Series::zero(1, 2);
    Series sum = c + zero2;
    CHECK(sum.order() == 2);
    CHECK(sum == S("1 + x", {"x"}, 2));

    // The stabilized pair of the cubic example: direct expansion oracle.
    Series f = S("x^3 + y^4", {"x", "y"}, 6);
    Series g = S("y^2", {"x", "y"}, 6);
    CHECK(f + g == S("x^3 + y^2 + y^4", {"x", "y"}, 6));

    CHECK_THROWS_AS(S("x", {"x"}, 3) + Series::zero(2, 3), DimensionError);
}

TEST_CASE("series multiplication truncates exactly") {
    CHECK(S("x", {"x"}, 5) * S("x", {"x"}, 5) == S("x^2", {"x"}, 5));
    CHECK(S("1 + x", {"x"}, 2) * S("1 - x", {"x"}, 2) == S("1 - x^2", {"x"}, 2));
    CHECK(S("y^2", {"y"}, 3) * S("1 + y", {"y"}, 3) == S("y^2 + y^3", {"y"}, 3));
    // Over-order products vanish.
    CHECK((S("x^2", {"x"}, 3) * S("x^2", {"x"}, 3)).is_zero());
}

TEST_CASE("ord and canonical form") {
    CHECK(!Series::zero(2, 5).ord().has_value());
    CHECK(S("x^2 + y^3", {"x", "y"}, 5).ord().value() == 2);
    Series s = S("x + y", {"x", "y"}, 4) - S("y", {"x", "y"}, 4);
    CHECK(s.term_count() == 1); // no explicit zeros survive
}

TEST_CASE("compose substitutes adically") {
    Series f = S("x^2", {"x"}, 4);
    CoordChange phi(1, 4, {S("x + x^2", {"x"}, 4)});
    CHECK(compose(f, phi) == S("x^2 + 2*x^3 + x^4", {"x"}, 4));

    Series g = S("x^3 + x - 2*x^2", {"x"}, 6);
    CHECK(compose(g, CoordChange::identity(1, 6)) == g);

    Series c = S("3", {"x"}, 4);
    CHECK(compose(c, phi) == S("3", {"x"}, 4));

    // Substitution with nonzero constant term has no adic meaning.
    std::vector<Series> bad{S("1 + x", {"x"}, 4)};
    CHECK_THROWS_AS(compose(f, bad), DomainError);
}

TEST_CASE("the quartic automorphism preserves its potential") {
    // x -> x + y^4, y -> y (1 - 3x^2 - 3x y^4 - y^8)^{1/4} fixes x^3 + y^4.
    const unsigned N = 16;
    CoordChange phi = preset_quartic_automorphism(N);
    Series f = S("x^3 + y^4", {"x", "y"}, N);
    CHECK(compose(f, phi) == f);
    CHECK(!phi.is_identity());
}

TEST_CASE("coordinate change inversion") {
    CoordChange doubling(1, 4, {S("2*x", {"x"}, 4)});
    CHECK(invert_coordchange(doubling).component(0) == S("1/2*x", {"x"}, 4));

    CoordChange phi(1, 3, {S("x + x^2", {"x"}, 3)});
    CHECK(invert_coordchange(phi).component(0) == S("x - x^2 + 2*x^3", {"x"}, 3));

    CoordChange swap(2, 5, {S("y", {"x", "y"}, 5), S("x", {"x", "y"}, 5)});
    CHECK(invert_coordchange(swap) == swap);

    Series singular = S("x^2", {"x"}, 4);
    CHECK_THROWS_AS(CoordChange(1, 4, {singular}), SingularError);
}

TEST_CASE("nth_root") {
    CHECK(nth_root(S("1 + 2*x", {"x"}, 2), 2) == S("1 + x - 1/2*x^2", {"x"}, 2));
    CHECK(nth_root(S("1", {"x"}, 5), 7) == S("1", {"x"}, 5));

    Series u = S("1 - 3*x^2 - 3*x*y^4 - y^8", {"x", "y"}, 8);
    Series h = nth_root(u, 4);
    CHECK(h * h * h * h == u);
    CHECK(h.constant_coefficient() == Rat(1));

    CHECK(nth_root(S("4 + 4*x", {"x"}, 3), 2).constant_coefficient() == Rat(2));
    CHECK_THROWS_AS(nth_root(S("x", {"x"}, 3), 2), DomainError);
    CHECK_THROWS_AS(nth_root(S("2 + x", {"x"}, 3), 2), DomainError);
}

TEST_CASE("reciprocal") {
    Series u = S("1 + x + x^2", {"x"}, 6);
    Series v = reciprocal(u);
    CHECK(u * v == S("1", {"x"}, 6));
    CHECK_THROWS_AS(reciprocal(S("x", {"x"}, 3)), DomainError);
}

TEST_CASE("partial derivatives") {
    Series f = S("x^3 + y^4", {"x", "y"}, 8);
    CHECK(f.partial(0) == S("3*x^2", {"x", "y"}, 7));
    CHECK(f.partial(1) == S("4*y^3", {"x", "y"}, 7));
    CHECK(S("5", {"x"}, 4).partial(0).is_zero());
}

TEST_CASE("implicit_solve centers the fiber") {
    // One base variable x, one fiber variable y throughout.
    Series f = S("y^2 + 2*x*y", {"x", "y"}, 6);
    auto w = implicit_solve(f, 1);
    REQUIRE(w.size() == 1);
    CHECK(w[0] == S("-x", {"x"}, 5));

    Series q = S("y^2", {"x", "y"}, 6);
    CHECK(implicit_solve(q, 1)[0].is_zero());

    Series g = S("y^2 + x^2*y", {"x", "y"}, 4);
    CHECK(implicit_solve(g, 1)[0] == S("-1/2*x^2", {"x"}, 3));

    Series degenerate = S("y^3 + x*y", {"x", "y"}, 5);
    CHECK_THROWS_AS(implicit_solve(degenerate, 1), SingularError);
}

TEST_CASE("ring laws hold on random series") {
    testing::Rng rng(20240817);
    for (int i = 0; i < 120; ++i) {
        std::size_t n = 1 + (i % 3);
        unsigned order = 3 + (i % 4);
        Series a = testing::random_series(rng, n, order);
        Series b = testing::random_series(rng, n, order);
        Series c = testing::random_series(rng, n, order);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("compose is associative on random data") {
    testing::Rng rng(777);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = 1 + (i % 3);
        unsigned order = 4 + (i % 3);
        Series f = testing::random_series(rng, n, order);
        CoordChange phi = testing::random_coord_change(rng, n, order);
        CoordChange psi = testing::random_coord_change(rng, n, order);
        CHECK(compose(compose(f, phi), psi) == compose(f, compose_changes(phi, psi)));
    }
}

TEST_CASE("coordinate inversion round-trips on random data") {
    testing::Rng rng(12345);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = 1 + (i % 3);
        unsigned order = 4 + (i % 3);
        CoordChange phi = testing::random_coord_change(rng, n, order);
        CoordChange psi = invert_coordchange(phi);
        CHECK(compose_changes(phi, psi) == CoordChange::identity(n, order));
        CHECK(compose_changes(psi, phi) == CoordChange::identity(n, order));
    }
}

TEST_CASE("mixed partials commute on random data") {
    testing::Rng rng(999);
    for (int i = 0; i < 50; ++i) {
        Series f = testing::random_series(rng, 3, 6);
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b)
                CHECK(f.partial(a).partial(b) == f.partial(b).partial(a));
    }
}

TEST_CASE("family series lift and specialize") {
    Series f = S("x^2 - 3*y", {"x", "y"}, 4);
    FamilySeries lifted = lift_to_family(f);
    CHECK(specialize_family(lifted, Rat(7)) == f);

    FamilySeries ty = FamilySeries::variable(2, 1, 4).scale(RatPoly::t());
    CHECK(specialize_family(ty, Rat(0)).is_zero());
    CHECK(specialize_family(ty, Rat(1, 2)) == S("1/2*y", {"x", "y"}, 4));
}
