#include "critforge/rational.hpp"

#include <ostream>

namespace critforge {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw DomainError("zero-denominator", "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(long num, long den) : Rat(mpz_class(num), mpz_class(den)) {}

Rat Rat::from_string(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        mpz_class n;
        if (n.set_str(text, 10) != 0)
            throw DomainError("bad-rational", "cannot parse integer '" + text + "'");
        return Rat(n);
    }
    mpz_class n, d;
    if (n.set_str(text.substr(0, slash), 10) != 0 || d.set_str(text.substr(slash + 1), 10) != 0)
        throw DomainError("bad-rational", "cannot parse rational '" + text + "'");
    return Rat(n, d);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw DomainError("division-by-zero", "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero())
        throw DomainError("division-by-zero", "inverse of zero");
    mpq_class r(den(), num());
    r.canonicalize();
    return Rat(r.get_num(), r.get_den());
}

Rat Rat::pow(unsigned long e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    return Rat(n, d);
}

std::optional<Rat> Rat::nth_root(unsigned long n) const {
    if (n == 0)
        throw DomainError("bad-root-index", "0th root");
    if (n == 1) return *this;
    if (is_zero()) return Rat(0);
    if (n % 2 == 0 && sign() < 0) return std::nullopt;

    mpz_class an = ::abs(num()), ad = den();
    mpz_class rn, rd;
    bool exact_n = mpz_root(rn.get_mpz_t(), an.get_mpz_t(), n) != 0;
    bool exact_d = mpz_root(rd.get_mpz_t(), ad.get_mpz_t(), n) != 0;
    if (!exact_n || !exact_d) return std::nullopt;
    if (sign() < 0) rn = -rn; // n odd here
    return Rat(rn, rd);
}

std::string Rat::to_string() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

namespace {

constexpr unsigned long kTrialBound = 1000000;

} // namespace

mpz_class squarefree_part(const mpz_class& z) {
    if (z == 0)
        throw DomainError("zero-square-class", "square class of zero");
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), 2, 63);
    if (::abs(z) >= bound)
        throw DomainError("overflow", "square-class reduction capped at 2^63, got " + z.get_str());

    mpz_class rest = ::abs(z);
    mpz_class result = (sgn(z) < 0) ? -1 : 1;

    auto strip = [&](unsigned long p) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e % 2 == 1) result *= p;
    };

    strip(2);
    for (unsigned long p = 3; p <= kTrialBound && rest > 1; p += 2) {
        if (mpz_class(p) * p > rest) break; // remaining cofactor is prime
        strip(p);
    }

    if (rest > 1) {
        // Cofactor has no prime factor <= 10^6 and is < 2^63, so it is a
        // prime, a prime square, or a product of two distinct primes. All
        // three cases resolve without full factorization.
        if (mpz_perfect_square_p(rest.get_mpz_t())) {
            // even multiplicity, contributes nothing
        } else {
            result *= rest; // prime or squarefree semiprime
        }
    }
    return result;
}

mpz_class square_class(const Rat& r) {
    if (r.is_zero())
        throw DomainError("zero-square-class", "square class of zero");
    return squarefree_part(r.num() * r.den());
}

} // namespace critforge
