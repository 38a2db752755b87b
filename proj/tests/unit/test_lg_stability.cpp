#include <doctest.h>

#include "critforge/lg_stability.hpp"
#include "critforge/presets.hpp"
#include "support/generators.hpp"
#include "support/helpers.hpp"

using namespace critforge;
using critforge::testing::pair1;
using critforge::testing::pair2;
using critforge::testing::S;

TEST_CASE("ts_sum") {
    const unsigned N = 10;
    LGPair cubic = pair1("x^3", N);
    LGPair square{S("y^2", {"y"}, N)};
    LGPair sum = ts_sum(cubic, square);
    CHECK(sum.f() == S("x^3 + y^2", {"x", "y"}, N));

    LGPair empty{Series::zero(0, N)};
    CHECK(ts_sum(cubic, empty).f() == cubic.f());
    CHECK(ts_sum(empty, cubic).f() == cubic.f());
}

TEST_CASE("mu is multiplicative under ts_sum") {
    const unsigned N = 12;
    LGPair a = pair1("x^3", N);
    LGPair b{S("y^3", {"y"}, N)};
    CHECK(milnor_number(ts_sum(a, b), 10).mu.value() == 4);

    LGPair c = pair2("x^3 + y^4", N);
    LGPair d{S("x^2", {"x"}, N)};
    CHECK(milnor_number(ts_sum(c, d), 10).mu.value() == 6);
}

TEST_CASE("stabilize matches the quadratic-variable example") {
    const unsigned N = 10;
    Stabilization s = stabilize(pair1("x^3", N), QuadForm::diagonal({Rat(1)}));
    CHECK(s.pair.f() == S("x^3 + y^2", {"x", "y"}, N));
    CHECK(s.action.rank == 1);

    Stabilization two = stabilize(pair2("x^3 + y^4", N), QuadForm::standard(2));
    CHECK(two.pair.nvars() == 4);
    CHECK(milnor_number(two.pair, 9).mu.value() == 6);

    Stabilization none = stabilize(pair1("x^3", N), QuadForm());
    CHECK(none.pair.f() == pair1("x^3", N).f());
}

TEST_CASE("stable invariants transform correctly under stabilization") {
    const unsigned N = 10;
    testing::Rng rng(3141);
    int done = 0;
    while (done < 6) {
        std::size_t n = 1 + (done % 2);
        Series f = testing::random_isolated_cubic_plus(rng, n, N, 4);
        if (f.ord().value_or(0) < 3) continue;
        LGPair p{f};
        QuadForm q = testing::random_quadform(rng, 1 + (done % 3));

        StableInvariants base = stable_invariants(p, N);
        StableInvariants stab = stable_invariants(stabilize(p, q).pair, N);
        CHECK(stab.corank == base.corank);
        CHECK(stab.mu == base.mu);
        CHECK(stab.tjurina == base.tjurina);
        CHECK(stab.hilbert == base.hilbert);
        CHECK(stab.quad_gw == direct_sum(base.quad_gw, gw_class(q, Mode::Q)));
        CHECK(stab.total_dim_parity == (base.total_dim_parity + q.dim()) % 2);
        ++done;
    }
}

TEST_CASE("stable invariants of the example pairs") {
    const unsigned N = 10;
    StableInvariants a = stable_invariants(pair2("x^3 + y^2", N), N);
    CHECK(a.corank == 1);
    CHECK(a.mu == 2);
    CHECK(a.quad_gw.rank == 1);

    StableInvariants b = stable_invariants(pair2("x^3 + y^4", N), N);
    CHECK(b.corank == 2);
    CHECK(b.mu == 6);
    CHECK(b.quad_gw.rank == 0);

    StableInvariants c = stable_invariants(critforge::testing::pair3("x^2 + y^2 + z^2", N), N);
    CHECK(c.corank == 0);
    CHECK(c.mu == 1);
    CHECK(c.quad_gw.rank == 3);

    CHECK_THROWS_AS(stable_invariants(pair2("x^2*y", N), N), DomainError);
}

TEST_CASE("stable_compare on the cubic pair") {
    const unsigned N = 10;
    CompareVerdict v = stable_compare(pair1("x^3", N), pair2("x^3 + y^2", N), N);
    CHECK(is_consistent(v));

    CompareVerdict morse = stable_compare(pair1("x^2", N), pair2("x^2 + y^2", N), N);
    CHECK(is_consistent(morse));

    CompareVerdict distinct = stable_compare(pair1("x^3", N), pair1("x^4", N), N);
    REQUIRE(!is_consistent(distinct));
    CHECK(std::get<Distinguished>(distinct).invariant == "mu");
}

TEST_CASE("stable_compare is reflexive-consistent and symmetric") {
    const unsigned N = 8;
    testing::Rng rng(2025);
    for (int i = 0; i < 5; ++i) {
        Series f = testing::random_isolated_cubic_plus(rng, 2, N, 4);
        if (f.ord().value_or(0) < 3) continue;
        LGPair p{f};
        CHECK(is_consistent(stable_compare(p, p, N)));

        Series g = testing::random_isolated_cubic_plus(rng, 2, N, 4);
        if (g.ord().value_or(0) < 3) continue;
        LGPair q{g};
        CHECK(is_consistent(stable_compare(p, q, N)) == is_consistent(stable_compare(q, p, N)));
    }
}

TEST_CASE("verify_stable_witness on the cubic pair") {
    const unsigned N = 12;
    CubicPairFixture fx = preset_cubic_pair(N);
    CHECK(verify_stable_witness(fx.p1, fx.p2, fx.q1, fx.q2, fx.witness, N));

    // Swapping the variables of a symmetric sum is also a witness.
    LGPair sym = pair2("x^3 + y^3", N);
    CoordChange swap(2, N, {S("y", {"x", "y"}, N), S("x", {"x", "y"}, N)});
    CHECK(verify_stable_witness(sym, sym, QuadForm(), QuadForm(), swap, N));

    // A corrupted witness fails.
    CoordChange bad(2, N, {S("x + x^2", {"x", "y"}, N), S("y", {"x", "y"}, N)});
    CHECK(!verify_stable_witness(fx.p1, fx.p2, fx.q1, fx.q2, bad, N));

    CHECK_THROWS_AS(
        verify_stable_witness(fx.p1, fx.p2, QuadForm(), QuadForm(), fx.witness, N),
        DimensionError);
}

TEST_CASE("verify_stable_witness identity law") {
    const unsigned N = 8;
    testing::Rng rng(60);
    for (int i = 0; i < 5; ++i) {
        Series f = testing::random_isolated_cubic_plus(rng, 2, N, 4);
        if (f.ord().value_or(0) < 3) continue;
        LGPair p{f};
        QuadForm q = testing::random_quadform(rng, 2);
        CHECK(verify_stable_witness(p, p, q, q, CoordChange::identity(2 + q.dim(), N), N));
    }
}
