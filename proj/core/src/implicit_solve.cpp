#include "critforge/implicit_solve.hpp"

#include "critforge/errors.hpp"
#include "critforge/rat_matrix.hpp"

namespace critforge {

std::vector<Series> implicit_solve(const Series& f, std::size_t base_count) {
    const std::size_t n = f.nvars();
    if (base_count > n)
        throw DimensionError("implicit_solve: more base variables than variables");
    const std::size_t r = n - base_count;
    const unsigned N = f.order();
    const unsigned w_order = N == 0 ? 0 : N - 1; // partials are trusted one order less

    std::vector<Series> fiber_partials;
    fiber_partials.reserve(r);
    for (std::size_t j = 0; j < r; ++j)
        fiber_partials.push_back(f.partial(base_count + j));

    // Fiber Hessian block at 0, read off the linear fiber terms of d_y f.
    RatMatrix h(r, r);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k)
            h.at(j, k) = fiber_partials[j].coeff(Monomial::variable(n, base_count + k));
    RatMatrix hinv;
    try {
        hinv = inverse(h);
    } catch (const SingularError&) {
        throw SingularError("degenerate-fiber-hessian",
                            "implicit_solve: fiber Hessian block at 0 is singular "
                            "(not relatively Morse)");
    }

    std::vector<Series> w(r, Series::zero(base_count, w_order));

    auto substituted = [&](std::size_t j) {
        // Tuple (x_1..x_c, w_1..w_r) as series in the base variables.
        std::vector<Series> tuple;
        tuple.reserve(n);
        for (std::size_t i = 0; i < base_count; ++i)
            tuple.push_back(Series::variable(base_count, i, w_order));
        for (std::size_t k = 0; k < r; ++k) tuple.push_back(w[k]);
        return compose(fiber_partials[j], tuple);
    };

    for (unsigned d = 1; d <= w_order; ++d) {
        std::vector<Series> err(r);
        bool any = false;
        for (std::size_t j = 0; j < r; ++j) {
            err[j] = substituted(j).homogeneous_part(d);
            any = any || !err[j].is_zero();
        }
        if (!any) continue;
        for (std::size_t k = 0; k < r; ++k) {
            Series delta = Series::zero(base_count, w_order);
            for (std::size_t j = 0; j < r; ++j)
                delta = delta + err[j].scale(hinv.at(k, j));
            w[k] = w[k] - delta;
        }
    }

    for (std::size_t j = 0; j < r; ++j)
        if (!substituted(j).is_zero())
            throw ContractViolation("implicit_solve: residual fiber partial did not vanish");
    return w;
}

} // namespace critforge
