#ifndef CRITFORGE_IMPLICIT_SOLVE_HPP
#define CRITFORGE_IMPLICIT_SOLVE_HPP

#include <cstddef>
#include <vector>

#include "critforge/series.hpp"

namespace critforge {

/// Formal implicit function theorem for the fiber critical equations: given
/// f over base variables x (the first `base_count`) and fiber variables y
/// (the rest), solves d_y f(x, w(x)) = 0 for w, degree by degree, one exact
/// linear system per degree through the inverse fiber Hessian block.
///
/// Requires the fiber Hessian block of f at 0 to be invertible. Returns one
/// series in the base variables per fiber variable, with w(0) = 0; the
/// solution annihilates all fiber partials mod m^N where N = order(f).
std::vector<Series> implicit_solve(const Series& f, std::size_t base_count);

} // namespace critforge

#endif
