#include <benchmark/benchmark.h>

#include <random>

#include "critforge/implicit_solve.hpp"
#include "critforge/jet.hpp"
#include "critforge/milnor.hpp"
#include "critforge/morse_split.hpp"
#include "critforge/series.hpp"

using namespace critforge;

namespace {

std::mt19937_64 seeded_rng(unsigned salt) { return std::mt19937_64(0xC0FFEE ^ salt); }

Series dense_series(std::mt19937_64& rng, std::size_t nvars, unsigned order) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    Series::Terms terms;
    for (auto& m : monomials_up_to(nvars, order)) {
        int c = coeff(rng);
        if (c != 0) terms.emplace(std::move(m), Rat(c, 1 + (c & 3)));
    }
    return Series::from_terms(nvars, order, std::move(terms));
}

void BM_SeriesMul(benchmark::State& state) {
    auto rng = seeded_rng(1);
    const auto nvars = static_cast<std::size_t>(state.range(0));
    const unsigned order = static_cast<unsigned>(state.range(1));
    Series a = dense_series(rng, nvars, order);
    Series b = dense_series(rng, nvars, order);
    for (auto _ : state) {
        Series c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesMul)->Args({2, 10})->Args({3, 8})->Args({4, 8});

void BM_SeriesCompose(benchmark::State& state) {
    auto rng = seeded_rng(2);
    const auto nvars = static_cast<std::size_t>(state.range(0));
    const unsigned order = static_cast<unsigned>(state.range(1));
    Series f = dense_series(rng, nvars, order);
    std::vector<Series> tuple;
    for (std::size_t i = 0; i < nvars; ++i) {
        Series comp = Series::variable(nvars, i, order);
        Series tail = dense_series(rng, nvars, order);
        if (auto o = tail.ord(); o && *o == 0)
            tail = tail - Series::constant(nvars, order, tail.constant_coefficient());
        tuple.push_back(comp + tail * tail); // quadratic-and-up perturbation
    }
    for (auto _ : state) {
        Series c = compose(f, tuple);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_SeriesCompose)->Args({2, 10})->Args({3, 8});

void BM_NthRoot(benchmark::State& state) {
    auto rng = seeded_rng(3);
    const unsigned order = static_cast<unsigned>(state.range(0));
    Series u = dense_series(rng, 2, order);
    if (auto o = u.ord(); o && *o == 0)
        u = u - Series::constant(2, order, u.constant_coefficient());
    u = Series::constant(2, order, Rat(1)) + u; // unit with constant term 1
    for (auto _ : state) {
        Series r = nth_root(u, 4);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_NthRoot)->Arg(8)->Arg(16);

void BM_BareissRref(benchmark::State& state) {
    auto rng = seeded_rng(4);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uniform_int_distribution<int> coeff(-20, 20);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Rat(coeff(rng), 1 + (i + j) % 3);
    for (auto _ : state) {
        RrefResult r = rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_BareissRref)->Arg(16)->Arg(32)->Arg(64);

void BM_JetSpanDim(benchmark::State& state) {
    // Jacobian span of x^3 + y^5 + z^4 at increasing jet depth.
    const unsigned D = static_cast<unsigned>(state.range(0));
    Series f = Series::variable(3, 0, D + 2) * Series::variable(3, 0, D + 2) *
                   Series::variable(3, 0, D + 2) +
               [&] {
                   Series y = Series::variable(3, 1, D + 2);
                   return y * y * y * y * y;
               }() +
               [&] {
                   Series z = Series::variable(3, 2, D + 2);
                   return z * z * z * z;
               }();
    std::vector<Series> jac{f.partial(0), f.partial(1), f.partial(2)};
    for (auto _ : state) {
        std::size_t d = jet_span_dim(jac, D);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_JetSpanDim)->Arg(6)->Arg(8)->Arg(10);

void BM_MilnorNumber(benchmark::State& state) {
    LGPair p(Series::variable(2, 0, 20) * Series::variable(2, 0, 20) *
                 Series::variable(2, 0, 20) +
             [&] {
                 Series y = Series::variable(2, 1, 20);
                 return y * y * y * y * y;
             }());
    for (auto _ : state) {
        MilnorReport r = milnor_number(p, 16);
        benchmark::DoNotOptimize(r.mu);
    }
}
BENCHMARK(BM_MilnorNumber);

void BM_Split(benchmark::State& state) {
    const unsigned N = static_cast<unsigned>(state.range(0));
    // (x^3 + y^4 + z^2 + w^2) twisted by a fixed shear.
    const std::size_t n = 4;
    Series x = Series::variable(n, 0, N), y = Series::variable(n, 1, N);
    Series z = Series::variable(n, 2, N), w = Series::variable(n, 3, N);
    Series f = x * x * x + y * y * y * y + z * z + w * w;
    std::vector<Series> shear{x + y * z, y - w * w, z + x * y, w + x * x};
    LGPair p(compose(f, shear));
    for (auto _ : state) {
        SplitResult s = split(p, N);
        benchmark::DoNotOptimize(s.quad);
    }
}
BENCHMARK(BM_Split)->Arg(8)->Arg(10);

} // namespace

BENCHMARK_MAIN();
