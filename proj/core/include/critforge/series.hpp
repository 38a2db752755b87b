#ifndef CRITFORGE_SERIES_HPP
#define CRITFORGE_SERIES_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "critforge/errors.hpp"
#include "critforge/monomial.hpp"
#include "critforge/ratpoly.hpp"
#include "critforge/rational.hpp"

namespace critforge {

/// Truncated multivariate formal power series over an exact coefficient ring
/// R (rationals, or polynomials in a family parameter). A series knows the
/// truncation order N it is trusted to: it represents an element of
/// R[[x_1..x_n]] modulo m^{N+1}, and every operation returns a result at the
/// minimum of the operand orders — precision is never invented.
///
/// Canonical form: no stored zero coefficients, no terms of degree > N, and
/// terms are kept in graded-lex order, so equal series compare equal
/// memberwise and print identically.
template <typename R>
class SeriesT {
public:
    using Terms = std::map<Monomial, R, GlexLess>;

    SeriesT() : nvars_(0), order_(0) {}

    static SeriesT zero(std::size_t nvars, unsigned order) { return SeriesT(nvars, order); }

    static SeriesT constant(std::size_t nvars, unsigned order, R value) {
        SeriesT s(nvars, order);
        if (!value.is_zero()) s.terms_.emplace(Monomial(nvars), std::move(value));
        return s;
    }

    static SeriesT variable(std::size_t nvars, std::size_t i, unsigned order) {
        SeriesT s(nvars, order);
        if (order >= 1) s.terms_.emplace(Monomial::variable(nvars, i), R(1));
        return s;
    }

    static SeriesT from_terms(std::size_t nvars, unsigned order, Terms terms) {
        SeriesT s(nvars, order);
        for (auto& [m, c] : terms) {
            if (m.nvars() != nvars)
                throw DimensionError("term monomial has wrong variable count");
            if (c.is_zero() || m.degree() > order) continue;
            s.terms_.emplace(m, std::move(c));
        }
        return s;
    }

    std::size_t nvars() const noexcept { return nvars_; }
    unsigned order() const noexcept { return order_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Minimal degree of a nonzero term; nullopt for the zero series.
    std::optional<unsigned> ord() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first.degree();
    }

    R coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? R(0) : it->second;
    }

    R constant_coefficient() const { return coeff(Monomial(nvars_)); }

    /// Retruncate to a lower (or equal) order. Raising the order would claim
    /// precision the series does not have.
    SeriesT truncated(unsigned new_order) const {
        if (new_order > order_)
            throw DomainError("order-raise", "cannot raise truncation order of a series");
        SeriesT s(nvars_, new_order);
        for (const auto& [m, c] : terms_) {
            if (m.degree() > new_order) break;
            s.terms_.emplace(m, c);
        }
        return s;
    }

    /// Terms whose weighted degree equals d, where weights has one entry per
    /// variable. All-ones weights select a homogeneous part.
    SeriesT graded_part(const std::vector<unsigned>& weights, unsigned d) const {
        if (weights.size() != nvars_)
            throw DimensionError("weight vector has wrong length");
        SeriesT s(nvars_, order_);
        for (const auto& [m, c] : terms_) {
            unsigned w = 0;
            for (std::size_t i = 0; i < nvars_; ++i) w += weights[i] * m.exponent(i);
            if (w == d) s.terms_.emplace(m, c);
        }
        return s;
    }

    SeriesT homogeneous_part(unsigned d) const {
        SeriesT s(nvars_, order_);
        for (const auto& [m, c] : terms_) {
            if (m.degree() == d) s.terms_.emplace(m, c);
            if (m.degree() > d) break;
        }
        return s;
    }

    SeriesT operator-() const {
        SeriesT s(nvars_, order_);
        for (const auto& [m, c] : terms_) s.terms_.emplace(m, -c);
        return s;
    }

    friend SeriesT operator+(const SeriesT& a, const SeriesT& b) {
        a.check_compatible(b);
        SeriesT s(a.nvars_, std::min(a.order_, b.order_));
        s.terms_ = a.truncmap(s.order_);
        for (const auto& [m, c] : b.terms_) {
            if (m.degree() > s.order_) break;
            auto [it, fresh] = s.terms_.emplace(m, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) s.terms_.erase(it);
            }
        }
        return s;
    }

    friend SeriesT operator-(const SeriesT& a, const SeriesT& b) { return a + (-b); }

    friend SeriesT operator*(const SeriesT& a, const SeriesT& b) {
        a.check_compatible(b);
        SeriesT s(a.nvars_, std::min(a.order_, b.order_));
        for (const auto& [ma, ca] : a.terms_) {
            const unsigned da = ma.degree();
            if (da > s.order_) break;
            for (const auto& [mb, cb] : b.terms_) {
                if (da + mb.degree() > s.order_) break;
                R prod = ca * cb;
                if (prod.is_zero()) continue;
                Monomial m = ma.times(mb);
                auto it = s.terms_.find(m);
                if (it == s.terms_.end()) {
                    s.terms_.emplace(std::move(m), std::move(prod));
                } else {
                    it->second += prod;
                    if (it->second.is_zero()) s.terms_.erase(it);
                }
            }
        }
        return s;
    }

    SeriesT scale(const R& c) const {
        SeriesT s(nvars_, order_);
        if (c.is_zero()) return s;
        for (const auto& [m, coef] : terms_) {
            R v = coef * c;
            if (!v.is_zero()) s.terms_.emplace(m, std::move(v));
        }
        return s;
    }

    friend bool operator==(const SeriesT& a, const SeriesT& b) {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SeriesT& a, const SeriesT& b) { return !(a == b); }

    /// Formal partial derivative; the result is trusted one order less.
    SeriesT partial(std::size_t i) const {
        if (i >= nvars_)
            throw DimensionError("partial: variable index out of range");
        SeriesT s(nvars_, order_ == 0 ? 0 : order_ - 1);
        for (const auto& [m, c] : terms_) {
            const std::uint32_t e = m.exponent(i);
            if (e == 0) continue;
            if (m.degree() - 1 > s.order_) continue;
            R v = c * R(static_cast<int>(e));
            if (!v.is_zero()) s.terms_.emplace(m.divide_variable(i), std::move(v));
        }
        return s;
    }

    std::string to_string(const std::vector<std::string>& names) const;
    std::string to_string() const { return to_string(default_names(nvars_)); }

    static std::vector<std::string> default_names(std::size_t nvars);

private:
    SeriesT(std::size_t nvars, unsigned order) : nvars_(nvars), order_(order) {}

    void check_compatible(const SeriesT& o) const {
        if (nvars_ != o.nvars_)
            throw DimensionError("series over different variable sets");
    }

    Terms truncmap(unsigned order) const {
        Terms t;
        for (const auto& [m, c] : terms_) {
            if (m.degree() > order) break;
            t.emplace(m, c);
        }
        return t;
    }

    std::size_t nvars_;
    unsigned order_;
    Terms terms_;
};

using Series = SeriesT<Rat>;

/// Series with polynomial-in-t coefficients: a polynomial family of series,
/// specializable at any rational parameter value.
using FamilySeries = SeriesT<RatPoly>;

/// Substitute tuple[i] for variable i of f. The tuple components must share
/// a common variable set and have zero constant term (adic convergence);
/// the result order is the minimum order among f and the components.
template <typename R>
SeriesT<R> compose(const SeriesT<R>& f, std::span<const SeriesT<R>> tuple);

template <typename R>
SeriesT<R> compose(const SeriesT<R>& f, const std::vector<SeriesT<R>>& tuple) {
    return compose(f, std::span<const SeriesT<R>>(tuple.data(), tuple.size()));
}

/// Multiplicative inverse of a series whose constant coefficient is a unit.
template <typename R>
SeriesT<R> reciprocal(const SeriesT<R>& u);

/// r with r^n = u mod m^{N+1}. The constant coefficient of u must be a unit
/// with an exact n-th root in the coefficient ring; for even n the positive
/// root is chosen. Newton iteration, doubling the trusted order each step.
template <typename R>
SeriesT<R> nth_root(const SeriesT<R>& u, unsigned long n);

/// View f in a larger variable set, sending variable i to offset + i.
template <typename R>
SeriesT<R> embed(const SeriesT<R>& f, std::size_t new_nvars, std::size_t offset);

/// Coefficient-wise ring map, e.g. lifting Q-series to constant families.
template <typename A, typename B, typename Fn>
SeriesT<B> map_coefficients(const SeriesT<A>& f, Fn&& fn) {
    typename SeriesT<B>::Terms terms;
    for (const auto& [m, c] : f.terms()) {
        B v = fn(c);
        if (!v.is_zero()) terms.emplace(m, std::move(v));
    }
    return SeriesT<B>::from_terms(f.nvars(), f.order(), std::move(terms));
}

inline FamilySeries lift_to_family(const Series& f) {
    return map_coefficients<Rat, RatPoly>(f, [](const Rat& c) { return RatPoly(c); });
}

inline Series specialize_family(const FamilySeries& f, const Rat& t0) {
    return map_coefficients<RatPoly, Rat>(f, [&](const RatPoly& c) { return c.eval(t0); });
}

// --- template implementations -------------------------------------------

template <typename R>
SeriesT<R> compose(const SeriesT<R>& f, std::span<const SeriesT<R>> tuple) {
    if (tuple.size() != f.nvars())
        throw DimensionError("compose: tuple size must equal the variable count of f");
    if (f.nvars() == 0) {
        // No variables to substitute: f is a constant.
        return f;
    }
    const std::size_t m_vars = tuple[0].nvars();
    unsigned order = f.order();
    for (const auto& t : tuple) {
        if (t.nvars() != m_vars)
            throw DimensionError("compose: tuple components over different variable sets");
        order = std::min(order, t.order());
        if (!t.constant_coefficient().is_zero())
            throw DomainError("nonzero-constant-term",
                              "compose: substituted series must have zero constant term");
    }

    // Evaluate each f-monomial by peeling one variable at a time, memoizing
    // along the divisor chain so shared prefixes are computed once.
    std::map<Monomial, SeriesT<R>, GlexLess> memo;
    memo.emplace(Monomial(f.nvars()), SeriesT<R>::constant(m_vars, order, R(1)));

    auto eval = [&](const Monomial& mono) -> const SeriesT<R>& {
        std::vector<Monomial> chain;
        Monomial cur = mono;
        while (memo.find(cur) == memo.end()) {
            chain.push_back(cur);
            std::size_t i = 0;
            while (cur.exponent(i) == 0) ++i;
            cur = cur.divide_variable(i);
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            std::size_t i = 0;
            while (it->exponent(i) == 0) ++i;
            const SeriesT<R>& prev = memo.at(it->divide_variable(i));
            memo.emplace(*it, prev * tuple[i]);
        }
        return memo.at(mono);
    };

    SeriesT<R> acc = SeriesT<R>::zero(m_vars, order);
    for (const auto& [mono, c] : f.terms()) {
        if (mono.degree() > order) break; // substituted terms start at this degree
        acc = acc + eval(mono).scale(c);
    }
    return acc;
}

template <typename R>
SeriesT<R> reciprocal(const SeriesT<R>& u) {
    const R c0 = u.constant_coefficient();
    if (c0.is_zero())
        throw DomainError("not-a-unit", "reciprocal of a series with zero constant term");
    const unsigned N = u.order();
    SeriesT<R> v = SeriesT<R>::constant(u.nvars(), N, c0.inverse());
    SeriesT<R> two = SeriesT<R>::constant(u.nvars(), N, R(2));
    unsigned trusted = 0;
    while (trusted < N) {
        trusted = std::min(2 * trusted + 1, N);
        v = v * (two - u * v);
    }
    return v;
}

template <typename R>
SeriesT<R> nth_root(const SeriesT<R>& u, unsigned long n) {
    if (n == 0)
        throw DomainError("bad-root-index", "0th series root");
    const R c0 = u.constant_coefficient();
    if (c0.is_zero())
        throw DomainError("not-a-unit", "n-th root of a series with zero constant term");

    R root(0);
    if constexpr (std::is_same_v<R, Rat>) {
        auto r = c0.nth_root(n);
        if (!r)
            throw DomainError("no-rational-root",
                              "constant term " + c0.to_string() + " has no rational " +
                                  std::to_string(n) + "-th root");
        root = *r;
    } else {
        if (!c0.is_constant())
            throw DomainError("no-rational-root",
                              "family n-th root requires a constant unit coefficient");
        auto r = c0.constant_term().nth_root(n);
        if (!r)
            throw DomainError("no-rational-root",
                              "constant term " + c0.to_string() + " has no rational " +
                                  std::to_string(n) + "-th root");
        root = R(*r);
    }

    const unsigned N = u.order();
    if (n == 1) return u;
    SeriesT<R> r = SeriesT<R>::constant(u.nvars(), N, root);
    unsigned trusted = 0;
    while (trusted < N) {
        trusted = std::min(2 * trusted + 1, N);
        // r <- r - (r^n - u) / (n * r^(n-1))
        SeriesT<R> pow = SeriesT<R>::constant(u.nvars(), N, R(1));
        for (unsigned long k = 0; k + 1 < n; ++k) pow = pow * r;
        SeriesT<R> delta = (pow * r - u) * reciprocal(pow.scale(R(static_cast<int>(n))));
        r = r - delta;
    }
    return r;
}

template <typename R>
SeriesT<R> embed(const SeriesT<R>& f, std::size_t new_nvars, std::size_t offset) {
    if (offset + f.nvars() > new_nvars)
        throw DimensionError("embed: target variable set too small");
    typename SeriesT<R>::Terms terms;
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::uint32_t> e(new_nvars, 0);
        for (std::size_t i = 0; i < f.nvars(); ++i) e[offset + i] = m.exponent(i);
        terms.emplace(Monomial(std::move(e)), c);
    }
    return SeriesT<R>::from_terms(new_nvars, f.order(), std::move(terms));
}

template <typename R>
std::vector<std::string> SeriesT<R>::default_names(std::size_t nvars) {
    static const char* base[] = {"x", "y", "z", "u", "v", "w"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i)
        names.push_back(i < 6 ? base[i] : "x" + std::to_string(i));
    return names;
}

template <typename R>
std::string SeriesT<R>::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.to_string();
        const bool negative = cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos;
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        if (negative) cs = cs.substr(1);
        const bool needs_parens = cs.find_first_of("+- ") != std::string::npos;
        std::string mono = m.to_string(names);
        if (mono == "1") {
            out += needs_parens ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += (needs_parens ? "(" + cs + ")" : cs) + "*" + mono;
        }
    }
    return out;
}

} // namespace critforge

#endif
