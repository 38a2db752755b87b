#include "critforge/isotopy.hpp"

#include <algorithm>

#include "critforge/errors.hpp"
#include "critforge/jet.hpp"
#include "critforge/milnor.hpp"

namespace critforge {

namespace {

// Determinant of the linear part as a polynomial in t, by Laplace expansion
// (the linear part is small).
RatPoly linear_part_det(const std::vector<FamilySeries>& comps, std::size_t n) {
    std::vector<RatPoly> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            entries[i * n + j] = comps[i].coeff(Monomial::variable(n, j));
    MatrixFamily lin(n, std::move(entries));
    return matrix_family_det(lin);
}

} // namespace

FamilyCoordChange::FamilyCoordChange(std::size_t nvars, unsigned order,
                                     std::vector<FamilySeries> components)
    : nvars_(nvars), order_(order), comps_(std::move(components)) {
    if (comps_.size() != nvars_)
        throw DomainError("malformed-family", "family needs one component per variable");
    for (auto& c : comps_) {
        if (c.nvars() != nvars_)
            throw DomainError("malformed-family", "family component over wrong variable set");
        if (!c.constant_coefficient().is_zero())
            throw DomainError("malformed-family",
                              "family component has nonzero constant term");
        if (c.order() < order_)
            throw DomainError("malformed-family", "family component trusted below order");
        c = c.truncated(order_);
    }
    // The endpoints t = 0, 1 must specialize to valid coordinate changes;
    // the determinant may vanish at other parameter values (the checks in
    // verify_isotopy are coefficient-level and still meaningful there).
    RatPoly det = linear_part_det(comps_, nvars_);
    if (det.eval(Rat(0)).is_zero() || det.eval(Rat(1)).is_zero())
        throw DomainError("malformed-family",
                          "family linear part must be invertible at t = 0 and t = 1 "
                          "(determinant is " + det.to_string() + ")");
}

FamilyCoordChange FamilyCoordChange::constant_identity(std::size_t nvars, unsigned order) {
    std::vector<FamilySeries> comps;
    for (std::size_t i = 0; i < nvars; ++i)
        comps.push_back(FamilySeries::variable(nvars, i, order));
    return FamilyCoordChange(nvars, order, std::move(comps));
}

long FamilyCoordChange::tdeg() const {
    long d = 0;
    for (const auto& c : comps_)
        for (const auto& [m, poly] : c.terms()) d = std::max(d, poly.degree());
    return d;
}

CoordChange FamilyCoordChange::specialize(const Rat& t0) const {
    std::vector<Series> comps;
    comps.reserve(nvars_);
    for (const auto& c : comps_) comps.push_back(specialize_family(c, t0));
    return CoordChange(nvars_, order_, std::move(comps));
}

MatrixFamily::MatrixFamily(std::size_t n, std::vector<RatPoly> entries)
    : n_(n), e_(std::move(entries)) {
    if (e_.size() != n * n)
        throw DimensionError("matrix family entry count mismatch");
}

MatrixFamily MatrixFamily::identity(std::size_t n) {
    std::vector<RatPoly> e(n * n, RatPoly());
    for (std::size_t i = 0; i < n; ++i) e[i * n + i] = RatPoly(1);
    return MatrixFamily(n, std::move(e));
}

MatrixFamily operator*(const MatrixFamily& a, const MatrixFamily& b) {
    if (a.n_ != b.n_)
        throw DimensionError("matrix family product shape mismatch");
    const std::size_t n = a.n_;
    std::vector<RatPoly> e(n * n, RatPoly());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                e[i * n + j] += a.at(i, k) * b.at(k, j);
        }
    return MatrixFamily(n, std::move(e));
}

RatPoly matrix_family_det(const MatrixFamily& m) {
    const std::size_t n = m.n();
    if (n == 0) return RatPoly(1);

    // Fraction-free elimination over Q[t]; every division is exact.
    std::vector<std::vector<RatPoly>> a(n, std::vector<RatPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    RatPoly prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return RatPoly(); // singular for all t
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).divide_exact(prev);
            a[i][k] = RatPoly();
        }
        prev = a[k][k];
    }
    RatPoly det = a[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

RatMatrix specialize(const MatrixFamily& m, const Rat& t0) {
    RatMatrix out(m.n(), m.n());
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j) out.at(i, j) = m.at(i, j).eval(t0);
    return out;
}

IsotopyReport verify_isotopy(const Series& f, const FamilyCoordChange& phi, unsigned N) {
    if (phi.nvars() != f.nvars())
        throw DimensionError("verify_isotopy: family over wrong variable set");
    if (f.order() < N || phi.order() < N)
        throw DomainError("order-too-low", "verify_isotopy: inputs trusted below order");

    const unsigned order = N;
    FamilySeries f_family = lift_to_family(f.truncated(order));

    std::vector<FamilySeries> comps;
    for (const auto& c : phi.components()) comps.push_back(c.truncated(order));

    // (i) coefficient-level identity in t.
    FamilySeries composed = compose(f_family, comps);
    const bool preserved = composed == f_family;

    // (ii) the family starts at the identity.
    CoordChange phi0 = phi.specialize(Rat(0));
    const bool at_identity = phi0 == CoordChange::identity(f.nvars(), phi.order());

    // (iii) phi_1 - id lies in the Jacobian-ideal jets up to order N (capped
    // by the trust order of the partials).
    CoordChange phi1 = phi.specialize(Rat(1));
    std::vector<Series> jac;
    for (std::size_t i = 0; i < f.nvars(); ++i)
        jac.push_back(f.partial(i));
    const unsigned jet_order = std::min(order, f.order() == 0 ? 0 : f.order() - 1);
    JetBasis basis(f.nvars(), jet_order);
    JetEchelon ech = ideal_jet_echelon(jac, basis);
    bool fixes = true;
    for (std::size_t i = 0; i < f.nvars() && fixes; ++i) {
        Series diff = phi1.component(i).truncated(basis.max_degree()) -
                      Series::variable(f.nvars(), i, basis.max_degree());
        fixes = ech.in_span(jet_row(diff, basis));
    }

    IsotopyReport report{preserved, at_identity, fixes, std::move(phi1)};
    return report;
}

} // namespace critforge
