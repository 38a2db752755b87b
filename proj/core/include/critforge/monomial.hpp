#ifndef CRITFORGE_MONOMIAL_HPP
#define CRITFORGE_MONOMIAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "critforge/errors.hpp"

namespace critforge {

/// Exponent vector of a monomial in a fixed ambient variable set. The length
/// equals the ambient variable count; entries are non-negative.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}

    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const noexcept { return e_.size(); }
    std::uint32_t exponent(std::size_t i) const { return e_.at(i); }
    const std::vector<std::uint32_t>& exponents() const noexcept { return e_; }

    unsigned degree() const noexcept;
    bool is_constant() const noexcept { return degree() == 0; }

    Monomial times(const Monomial& o) const;
    Monomial times_variable(std::size_t i) const;
    /// Quotient by one variable; requires exponent(i) > 0.
    Monomial divide_variable(std::size_t i) const;
    bool divisible_by_variable(std::size_t i) const { return e_.at(i) > 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<std::uint32_t> e_;
};

/// Graded lexicographic order: lower total degree first; within a degree,
/// lexicographically larger exponent vectors come first, so in two
/// variables the iteration order is 1, x, y, x^2, x*y, y^2, x^3, ...
/// This is the global term order used for canonical output and for
/// jet-space column indexing everywhere.
struct GlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.exponents() > b.exponents(); // larger leading exponents first
    }
};

/// All monomials of a given total degree, in glex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

/// All monomials of degree <= max_degree, in glex order.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree);

} // namespace critforge

#endif
