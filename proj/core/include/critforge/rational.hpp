#ifndef CRITFORGE_RATIONAL_HPP
#define CRITFORGE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "critforge/errors.hpp"

namespace critforge {

/// Exact rational number, always in canonical form: gcd(|num|, den) = 1 and
/// den > 0. All arithmetic is exact; there is no rounding anywhere in the
/// library.
///
/// This is a thin invariant-enforcing wrapper over GMP's mpq_class, which by
/// itself does not canonicalize on construction.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}                      // NOLINT: implicit by design
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den);
    Rat(long num, long den);

    static Rat from_string(const std::string& text); // "a", "-a/b"

    const mpq_class& raw() const noexcept { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const noexcept { return sgn(v_) == 0; }
    bool is_one() const noexcept { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const noexcept { return sgn(v_); }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat inverse() const;
    Rat abs() const { return Rat(mpq_class(::abs(v_))); }
    Rat pow(unsigned long e) const;

    /// Exact rational n-th root, if one exists. For even n the input must be
    /// non-negative and the positive root is returned.
    std::optional<Rat> nth_root(unsigned long n) const;

    std::string to_string() const; // "a" or "a/b"

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}

    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Squarefree part of a nonzero integer, sign included: the canonical
/// representative of its square class in Q* / (Q*)^2. Inputs must fit in
/// 63 bits in magnitude; larger values raise an overflow error (desk-scale
/// cap, factoring cost stays trivial below it).
mpz_class squarefree_part(const mpz_class& z);

/// Square class of a nonzero rational: squarefree_part(num * den).
mpz_class square_class(const Rat& r);

} // namespace critforge

#endif
