#ifndef CRITFORGE_ISOTOPY_HPP
#define CRITFORGE_ISOTOPY_HPP

#include <string>
#include <vector>

#include "critforge/coord_change.hpp"
#include "critforge/lg_pair.hpp"
#include "critforge/ratpoly.hpp"
#include "critforge/series.hpp"

namespace critforge {

/// A polynomial one-parameter family of coordinate changes: one FamilySeries
/// per variable, zero constant term, with a linear part invertible for every
/// t (its determinant must be a unit, i.e. nonzero constant, polynomial).
/// Specializing t gives an ordinary CoordChange.
class FamilyCoordChange {
public:
    FamilyCoordChange(std::size_t nvars, unsigned order, std::vector<FamilySeries> components);

    static FamilyCoordChange constant_identity(std::size_t nvars, unsigned order);

    std::size_t nvars() const noexcept { return nvars_; }
    unsigned order() const noexcept { return order_; }
    const std::vector<FamilySeries>& components() const noexcept { return comps_; }

    /// Maximum degree in t across all coefficients.
    long tdeg() const;

    CoordChange specialize(const Rat& t0) const;

private:
    std::size_t nvars_;
    unsigned order_;
    std::vector<FamilySeries> comps_;
};

/// Square matrix with polynomial-in-t entries, e.g. a polynomial family of
/// linear automorphisms.
class MatrixFamily {
public:
    MatrixFamily(std::size_t n, std::vector<RatPoly> entries); // row-major

    static MatrixFamily identity(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    const RatPoly& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    RatPoly& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }

    friend MatrixFamily operator*(const MatrixFamily& a, const MatrixFamily& b);

private:
    std::size_t n_;
    std::vector<RatPoly> e_;
};

/// Exact determinant in Q[t], by fraction-free (Bareiss) elimination with
/// exact polynomial division.
RatPoly matrix_family_det(const MatrixFamily& m);

/// Exact evaluation at a rational parameter value.
RatMatrix specialize(const MatrixFamily& m, const Rat& t0);

/// Verification report for a one-parameter family of automorphisms against
/// a potential f. The three checks are independent:
///   (i)  f compose phi_t == f identically in t, mod m^{N+1};
///   (ii) phi_0 is the identity;
///   (iii) phi_1 fixes the critical-locus jets to first order, i.e. each
///        component of phi_1 - id lies in the Jacobian-ideal jets of f up
///        to order N. This jet-level check is a necessary condition for
///        fixing the critical locus; it is not claimed sufficient for
///        non-reduced critical loci.
struct IsotopyReport {
    bool function_preserved = false;
    bool starts_at_identity = false;
    bool fixes_critical_jets = false;
    CoordChange phi1;

    bool all_passed() const {
        return function_preserved && starts_at_identity && fixes_critical_jets;
    }
};

IsotopyReport verify_isotopy(const Series& f, const FamilyCoordChange& phi, unsigned N);

} // namespace critforge

#endif
