#include "critforge/coord_change.hpp"

#include "critforge/errors.hpp"

namespace critforge {

CoordChange::CoordChange(std::size_t nvars, unsigned order, std::vector<Series> components)
    : nvars_(nvars), order_(order), comps_(std::move(components)) {
    if (comps_.size() != nvars_)
        throw DimensionError("coordinate change needs one component per variable");
    for (auto& c : comps_) {
        if (c.nvars() != nvars_)
            throw DimensionError("coordinate change component over wrong variable set");
        if (!c.constant_coefficient().is_zero())
            throw DomainError("nonzero-constant-term",
                              "coordinate change component has nonzero constant term");
        if (c.order() < order_)
            throw DomainError("order-too-low", "component trusted below the declared order");
        c = c.truncated(order_);
    }
    if (rref(linear_part()).rank != nvars_)
        throw SingularError("singular-linear-part",
                            "coordinate change has a singular linear part");
}

CoordChange CoordChange::identity(std::size_t nvars, unsigned order) {
    std::vector<Series> comps;
    comps.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i)
        comps.push_back(Series::variable(nvars, i, order));
    return CoordChange(nvars, order, std::move(comps));
}

CoordChange CoordChange::from_linear(const RatMatrix& m, unsigned order) {
    if (m.rows() != m.cols())
        throw DimensionError("linear coordinate change needs a square matrix");
    std::vector<Series> comps;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Series c = Series::zero(m.cols(), order);
        for (std::size_t j = 0; j < m.cols(); ++j)
            c = c + Series::variable(m.cols(), j, order).scale(m.at(i, j));
        comps.push_back(std::move(c));
    }
    return CoordChange(m.rows(), order, std::move(comps));
}

RatMatrix CoordChange::linear_part() const {
    RatMatrix l(nvars_, nvars_);
    for (std::size_t i = 0; i < nvars_; ++i)
        for (std::size_t j = 0; j < nvars_; ++j)
            l.at(i, j) = comps_[i].coeff(Monomial::variable(nvars_, j));
    return l;
}

bool CoordChange::is_identity() const {
    return *this == identity(nvars_, order_);
}

std::string CoordChange::to_string(const std::vector<std::string>& names) const {
    std::string out = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i)
        out += (i ? ", " : "") + names.at(i) + " -> " + comps_[i].to_string(names);
    return out + ")";
}

CoordChange compose_changes(const CoordChange& a, const CoordChange& b) {
    if (a.nvars() != b.nvars())
        throw DimensionError("composing coordinate changes over different variable sets");
    std::vector<Series> comps;
    comps.reserve(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        comps.push_back(compose(a.component(i), b.components()));
    return CoordChange(a.nvars(), std::min(a.order(), b.order()), std::move(comps));
}

CoordChange invert_coordchange(const CoordChange& phi) {
    const std::size_t n = phi.nvars();
    const unsigned N = phi.order();

    RatMatrix linv;
    try {
        linv = inverse(phi.linear_part());
    } catch (const SingularError&) {
        throw SingularError("singular-linear-part",
                            "cannot invert: singular linear part");
    }

    std::vector<Series> psi;
    psi.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Series c = Series::zero(n, N);
        for (std::size_t j = 0; j < n; ++j)
            c = c + Series::variable(n, j, N).scale(linv.at(i, j));
        psi.push_back(std::move(c));
    }

    for (unsigned d = 2; d <= N; ++d) {
        // Degree-d error of phi(psi(z)) - z; the correction solves through
        // the inverse Jacobian, one coefficientwise linear solve per degree.
        std::vector<Series> err(n);
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            Series e = compose(phi.component(i), psi) - Series::variable(n, i, N);
            err[i] = e.homogeneous_part(d);
            any = any || !err[i].is_zero();
        }
        if (!any) continue;
        for (std::size_t i = 0; i < n; ++i) {
            Series delta = Series::zero(n, N);
            for (std::size_t j = 0; j < n; ++j)
                delta = delta + err[j].scale(linv.at(i, j));
            psi[i] = psi[i] - delta;
        }
    }

    CoordChange result(n, N, std::move(psi));
    for (std::size_t i = 0; i < n; ++i) {
        if (compose(phi.component(i), result.components()) != Series::variable(n, i, N))
            throw ContractViolation("coordinate change inverse failed its round-trip check");
    }
    return result;
}

} // namespace critforge
