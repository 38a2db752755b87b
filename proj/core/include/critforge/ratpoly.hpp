#ifndef CRITFORGE_RATPOLY_HPP
#define CRITFORGE_RATPOLY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "critforge/rational.hpp"

namespace critforge {

/// Dense univariate polynomial in the family parameter t, with exact
/// rational coefficients. Normalized: no trailing zero coefficients, so the
/// zero polynomial has an empty coefficient vector.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(Rat constant);                        // NOLINT: implicit by design
    RatPoly(int constant) : RatPoly(Rat(constant)) {}
    explicit RatPoly(std::vector<Rat> coeffs);

    static RatPoly t() { return RatPoly(std::vector<Rat>{Rat(0), Rat(1)}); }
    static RatPoly monomial(const Rat& c, std::size_t deg);

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    /// Degree of the zero polynomial is reported as -1.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

    const Rat& coeff(std::size_t k) const;
    const std::vector<Rat>& coeffs() const noexcept { return c_; }
    Rat constant_term() const { return c_.empty() ? Rat(0) : c_[0]; }

    Rat eval(const Rat& t0) const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { a += b; return a; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { a -= b; return a; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly& operator*=(const RatPoly& o) { *this = *this * o; return *this; }

    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    /// Multiplicative inverse; defined only for nonzero constants (the units
    /// of Q[t]).
    RatPoly inverse() const;

    /// Exact division; throws if the divisor does not divide exactly.
    RatPoly divide_exact(const RatPoly& divisor) const;

    std::string to_string() const; // e.g. "1 - 3*t^2 + t^3"

private:
    void normalize();

    std::vector<Rat> c_;
};

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

} // namespace critforge

#endif
