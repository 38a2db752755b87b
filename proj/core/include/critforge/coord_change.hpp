#ifndef CRITFORGE_COORD_CHANGE_HPP
#define CRITFORGE_COORD_CHANGE_HPP

#include <vector>

#include "critforge/rat_matrix.hpp"
#include "critforge/series.hpp"

namespace critforge {

/// An adic automorphism of the formal neighborhood of the origin: one series
/// per ambient variable, each with zero constant term, whose linear part
/// (the Jacobian at 0) is invertible over Q. compose(f, phi) substitutes
/// phi's components into f.
class CoordChange {
public:
    CoordChange(std::size_t nvars, unsigned order, std::vector<Series> components);

    static CoordChange identity(std::size_t nvars, unsigned order);
    static CoordChange from_linear(const RatMatrix& m, unsigned order);

    std::size_t nvars() const noexcept { return nvars_; }
    unsigned order() const noexcept { return order_; }
    const std::vector<Series>& components() const noexcept { return comps_; }
    const Series& component(std::size_t i) const { return comps_.at(i); }

    RatMatrix linear_part() const;
    bool is_identity() const;

    friend bool operator==(const CoordChange& a, const CoordChange& b) {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const CoordChange& a, const CoordChange& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string() const { return to_string(Series::default_names(nvars_)); }

private:
    std::size_t nvars_;
    unsigned order_;
    std::vector<Series> comps_;
};

inline Series compose(const Series& f, const CoordChange& phi) {
    return compose(f, phi.components());
}

/// The coordinate change a after b in substitution order:
/// compose(f, compose_changes(a, b)) == compose(compose(f, a), b).
CoordChange compose_changes(const CoordChange& a, const CoordChange& b);

/// Compositional inverse, computed degree by degree through the inverse
/// Jacobian; the round trip with the input is the identity mod m^{N+1} and
/// is checked before returning.
CoordChange invert_coordchange(const CoordChange& phi);

} // namespace critforge

#endif
