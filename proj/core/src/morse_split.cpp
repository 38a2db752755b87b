#include "critforge/morse_split.hpp"

#include <algorithm>

#include "critforge/errors.hpp"
#include "critforge/implicit_solve.hpp"

namespace critforge {

namespace {

RatMatrix hessian_matrix(const Series& f) {
    const std::size_t n = f.nvars();
    RatMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Monomial m = Monomial::variable(n, i).times(Monomial::variable(n, j));
            Rat c = f.coeff(m);
            h.at(i, j) = (i == j) ? c * Rat(2) : c;
            h.at(j, i) = h.at(i, j);
        }
    }
    return h;
}

std::vector<unsigned> fiber_weights(std::size_t n, std::size_t base_count) {
    std::vector<unsigned> w(n, 0);
    for (std::size_t i = base_count; i < n; ++i) w[i] = 1;
    return w;
}

// r x r matrix of series; used for the quadratic coefficient bundle B(x).
using SeriesMatrix = std::vector<std::vector<Series>>;

SeriesMatrix bundle_of(const Series& h, std::size_t base_count) {
    const std::size_t n = h.nvars();
    const std::size_t r = n - base_count;
    SeriesMatrix b(r, std::vector<Series>(r, Series::zero(n, h.order())));
    const Series quad_part = h.graded_part(fiber_weights(n, base_count), 2);
    const Rat half(1, 2);
    for (const auto& [m, c] : quad_part.terms()) {
        std::size_t j = static_cast<std::size_t>(-1), k = static_cast<std::size_t>(-1);
        for (std::size_t i = base_count; i < n; ++i) {
            if (m.exponent(i) == 2) { j = k = i; break; }
            if (m.exponent(i) == 1) {
                if (j == static_cast<std::size_t>(-1)) j = i;
                else { k = i; break; }
            }
        }
        Monomial base_mono = m;
        base_mono = base_mono.divide_variable(j);
        base_mono = base_mono.divide_variable(k);
        Series piece = Series::from_terms(n, h.order(), {{base_mono, c}});
        if (j == k) {
            b[j - base_count][j - base_count] = b[j - base_count][j - base_count] + piece;
        } else {
            Series halved = piece.scale(half);
            b[j - base_count][k - base_count] = b[j - base_count][k - base_count] + halved;
            b[k - base_count][j - base_count] = b[k - base_count][j - base_count] + halved;
        }
    }
    return b;
}

RatMatrix bundle_constant_part(const SeriesMatrix& b) {
    const std::size_t r = b.size();
    RatMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) m.at(i, j) = b[i][j].constant_coefficient();
    return m;
}

SeriesMatrix series_matrix_product(const SeriesMatrix& a, const SeriesMatrix& b) {
    const std::size_t r = a.size();
    if (r == 0) return {};
    SeriesMatrix c(r, std::vector<Series>(r, Series::zero(a[0][0].nvars(), a[0][0].order())));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < r; ++j)
                c[i][j] = c[i][j] + a[i][k] * b[k][j];
        }
    return c;
}

// Newton iteration for the inverse of a series matrix whose constant part is
// invertible: X <- X (2I - B X), doubling the trusted order each step.
SeriesMatrix series_matrix_inverse(const SeriesMatrix& b, std::size_t nvars, unsigned order) {
    const std::size_t r = b.size();
    RatMatrix c0inv = inverse(bundle_constant_part(b));
    SeriesMatrix x(r, std::vector<Series>(r, Series::zero(nvars, order)));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            x[i][j] = Series::constant(nvars, order, c0inv.at(i, j));
    unsigned trusted = 0;
    while (trusted < order) {
        trusted = std::min(2 * trusted + 1, order);
        SeriesMatrix bx = series_matrix_product(b, x);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                Series two_minus = -bx[i][j];
                if (i == j) two_minus = two_minus + Series::constant(nvars, order, Rat(2));
                bx[i][j] = two_minus;
            }
        }
        x = series_matrix_product(x, bx);
    }
    return x;
}

CoordChange fiber_substitution(std::size_t n, std::size_t base_count, unsigned order,
                               const std::vector<Series>& fiber_images) {
    std::vector<Series> comps;
    comps.reserve(n);
    for (std::size_t i = 0; i < base_count; ++i)
        comps.push_back(Series::variable(n, i, order));
    for (std::size_t j = base_count; j < n; ++j) comps.push_back(fiber_images[j - base_count]);
    return CoordChange(n, order, std::move(comps));
}

} // namespace

HessianData hessian(const LGPair& p) {
    const std::size_t n = p.nvars();
    HessianData out;
    out.hessian = hessian_matrix(p.f());

    RatMatrix gram = out.hessian;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) gram.at(i, j) = gram.at(i, j) / Rat(2);

    // Kernel-first base change: kernel basis from the rref pivot structure,
    // completed by the pivot-column unit vectors.
    RrefResult r = rref(gram);
    out.rank = r.rank;
    out.corank = n - r.rank;

    std::vector<std::vector<Rat>> ker = kernel_basis(gram);
    RatMatrix p0(n, n);
    for (std::size_t j = 0; j < ker.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) p0.at(i, j) = ker[j][i];
    for (std::size_t k = 0; k < r.pivot_cols.size(); ++k)
        p0.at(r.pivot_cols[k], ker.size() + k) = Rat(1);

    RatMatrix inner = p0.transpose() * gram * p0;
    for (std::size_t i = 0; i < out.corank; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!inner.at(i, j).is_zero() || !inner.at(j, i).is_zero())
                throw ContractViolation("Hessian kernel block failed to vanish");

    // Diagonalize the non-degenerate block.
    RatMatrix block(out.rank, out.rank);
    for (std::size_t i = 0; i < out.rank; ++i)
        for (std::size_t j = 0; j < out.rank; ++j)
            block.at(i, j) = inner.at(out.corank + i, out.corank + j);
    SymmetricDiagonalization d = congruence_diagonalize(block);

    RatMatrix p1 = RatMatrix::identity(n);
    for (std::size_t i = 0; i < out.rank; ++i)
        for (std::size_t j = 0; j < out.rank; ++j)
            p1.at(out.corank + i, out.corank + j) = d.witness.at(i, j);

    out.witness = p0 * p1;
    out.diagonal.assign(n, Rat(0));
    for (std::size_t i = 0; i < out.rank; ++i) {
        if (d.entries[i].is_zero())
            throw ContractViolation("non-degenerate Hessian block produced a zero entry");
        out.diagonal[out.corank + i] = d.entries[i];
    }

    RatMatrix check = out.witness.transpose() * gram * out.witness;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (check.at(i, j) != ((i == j) ? out.diagonal[i] : Rat(0)))
                throw ContractViolation("Hessian congruence witness failed verification");
    return out;
}

RelativeMorseForward relative_morse_forward(const Series& h, std::size_t base_count,
                                            unsigned N) {
    const std::size_t n = h.nvars();
    if (base_count > n)
        throw DimensionError("relative_morse: more base variables than variables");
    const std::size_t r = n - base_count;
    if (h.order() < N)
        throw DomainError("order-too-low", "relative_morse: series trusted below requested order");

    const std::vector<unsigned> weights = fiber_weights(n, base_count);
    Series current = h.truncated(N);

    if (!current.graded_part(weights, 0).is_zero() || !current.graded_part(weights, 1).is_zero())
        throw DomainError("not-centered",
                          "relative_morse: h(x,0) and d_y h(x,0) must vanish; center with "
                          "implicit_solve first");

    CoordChange forward = CoordChange::identity(n, N);
    if (r == 0) {
        return RelativeMorseForward{QuadForm(), forward};
    }

    SeriesMatrix bundle = bundle_of(current, base_count);
    SeriesMatrix binv;
    try {
        binv = series_matrix_inverse(bundle, n, N);
    } catch (const SingularError&) {
        throw SingularError("degenerate-fiber-hessian",
                            "relative_morse: fiber Hessian block at 0 is degenerate");
    }

    const Rat half(1, 2);
    for (unsigned k = 3; k <= N; ++k) {
        Series defect = current.graded_part(weights, k);
        if (defect.is_zero()) continue;

        // Write the defect as sum_j y_j g_j, each monomial assigned to its
        // smallest-index fiber divisor.
        std::vector<Series> g(r, Series::zero(n, N));
        for (const auto& [m, c] : defect.terms()) {
            std::size_t j = base_count;
            while (m.exponent(j) == 0) ++j;
            g[j - base_count] =
                g[j - base_count] + Series::from_terms(n, N, {{m.divide_variable(j), c}});
        }

        std::vector<Series> images(r);
        for (std::size_t a = 0; a < r; ++a) {
            Series lambda = Series::zero(n, N);
            for (std::size_t bidx = 0; bidx < r; ++bidx) {
                if (g[bidx].is_zero() || binv[a][bidx].is_zero()) continue;
                lambda = lambda + binv[a][bidx] * g[bidx];
            }
            images[a] = Series::variable(n, base_count + a, N) - lambda.scale(half);
        }
        CoordChange phi = fiber_substitution(n, base_count, N, images);
        current = compose(current, phi);
        forward = compose_changes(forward, phi);
    }

    for (unsigned k = 3; k <= N; ++k)
        if (!current.graded_part(weights, k).is_zero())
            throw ContractViolation("relative Morse iteration left a higher-degree defect");

    // Diagonalize the residual quadratic bundle over Q[[x]]: constant
    // congruence first so every diagonal entry becomes a unit, then
    // fiberwise symmetric elimination.
    {
        SymmetricDiagonalization d0 = congruence_diagonalize(bundle_constant_part(bundle_of(current, base_count)));
        std::vector<Series> images(r);
        for (std::size_t a = 0; a < r; ++a) {
            Series img = Series::zero(n, N);
            for (std::size_t b = 0; b < r; ++b)
                img = img + Series::variable(n, base_count + b, N).scale(d0.witness.at(a, b));
            images[a] = img;
        }
        CoordChange s0 = fiber_substitution(n, base_count, N, images);
        current = compose(current, s0);
        forward = compose_changes(forward, s0);
    }

    for (std::size_t j = 0; j < r; ++j) {
        SeriesMatrix b = bundle_of(current, base_count);
        if (b[j][j].constant_coefficient().is_zero())
            throw ContractViolation("bundle diagonalization lost a unit pivot");
        Series pivot_inv = reciprocal(b[j][j]);
        bool any = false;
        std::vector<Series> images(r);
        for (std::size_t m = 0; m < r; ++m)
            images[m] = Series::variable(n, base_count + m, N);
        for (std::size_t m = j + 1; m < r; ++m) {
            if (b[j][m].is_zero()) continue;
            images[j] = images[j] - (b[j][m] * pivot_inv) * Series::variable(n, base_count + m, N);
            any = true;
        }
        if (!any) continue;
        CoordChange s = fiber_substitution(n, base_count, N, images);
        current = compose(current, s);
        forward = compose_changes(forward, s);
    }

    // Absorb the unit part of each diagonal coefficient by its square root.
    SeriesMatrix diag_bundle = bundle_of(current, base_count);
    std::vector<Rat> q_entries(r);
    {
        std::vector<Series> images(r);
        bool any = false;
        for (std::size_t j = 0; j < r; ++j) {
            const Series& a = diag_bundle[j][j];
            const Rat a0 = a.constant_coefficient();
            q_entries[j] = a0;
            Series unit = a.scale(a0.inverse());
            images[j] = Series::variable(n, base_count + j, N);
            if (unit != Series::constant(n, N, Rat(1))) {
                images[j] = images[j] * reciprocal(nth_root(unit, 2));
                any = true;
            }
        }
        if (any) {
            CoordChange s = fiber_substitution(n, base_count, N, images);
            current = compose(current, s);
            forward = compose_changes(forward, s);
        }
    }

    QuadForm quad = QuadForm::diagonal(q_entries);
    Series expected = embed(quad.as_series(N), n, base_count);
    if (current != expected)
        throw ContractViolation("relative Morse normal form is not the expected quadric");

    return RelativeMorseForward{std::move(quad), std::move(forward)};
}

RelativeMorseResult relative_morse(const Series& h, std::size_t base_count, unsigned N) {
    RelativeMorseForward fwd = relative_morse_forward(h, base_count, N);
    CoordChange tau = invert_coordchange(fwd.forward);
    return RelativeMorseResult{std::move(fwd.quad), std::move(tau), std::move(fwd.forward)};
}

Series SplitResult::normal_form() const {
    const std::size_t n = residual.nvars() + quad.dim();
    return embed(residual.f(), n, 0) + embed(quad.as_series(order), n, residual.nvars());
}

SplitResult split(const LGPair& p, unsigned N) {
    if (p.order() < N)
        throw DomainError("order-too-low", "split: potential trusted below requested order");
    const std::size_t n = p.nvars();
    const Series f = p.f().truncated(N);

    HessianData h = hessian(p);
    const std::size_t c = h.corank;

    CoordChange linear_change = CoordChange::from_linear(h.witness, N);
    Series f2 = compose(f, linear_change);

    // Fiber recentering through the implicit function theorem, re-tagged to
    // order N: the witness is explicit polynomial data, exact by choice.
    std::vector<Series> w = implicit_solve(f2, c);
    std::vector<Series> w_lifted;
    w_lifted.reserve(w.size());
    for (auto& wi : w)
        w_lifted.push_back(Series::from_terms(c, N, wi.terms()));

    std::vector<Series> recenter_images(h.rank);
    for (std::size_t j = 0; j < h.rank; ++j)
        recenter_images[j] =
            Series::variable(n, c + j, N) + embed(w_lifted[j], n, 0);
    CoordChange recenter = fiber_substitution(n, c, N, recenter_images);

    std::vector<Series> g_tuple;
    g_tuple.reserve(n);
    for (std::size_t i = 0; i < c; ++i) g_tuple.push_back(Series::variable(c, i, N));
    for (std::size_t j = 0; j < h.rank; ++j) g_tuple.push_back(w_lifted[j]);
    Series residual_series = compose(f2, g_tuple);

    Series centered = compose(f2, recenter) - embed(residual_series, n, 0);
    RelativeMorseForward rm = relative_morse_forward(centered, c, N);

    CoordChange witness =
        compose_changes(compose_changes(linear_change, recenter), rm.forward);

    SplitResult out{rm.quad, LGPair(residual_series), witness, N};

    if (auto o = out.residual.f().ord(); o && *o < 3)
        throw ContractViolation("split residual has nonvanishing Hessian");
    if (out.quad.dim() != h.rank)
        throw ContractViolation("split quadratic rank disagrees with the Hessian rank");
    if (compose(f, witness) != embed(out.residual.f(), n, 0) + embed(out.quad.as_series(N), n, c))
        throw ContractViolation("split witness failed its composition check");
    return out;
}

SplitResult minimal_model(const LGPair& p, unsigned N) { return split(p, N); }

} // namespace critforge
