#include "critforge/ratpoly.hpp"

#include <ostream>

namespace critforge {

RatPoly::RatPoly(Rat constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly RatPoly::monomial(const Rat& c, std::size_t deg) {
    if (c.is_zero()) return RatPoly();
    std::vector<Rat> v(deg + 1, Rat(0));
    v[deg] = c;
    return RatPoly(std::move(v));
}

void RatPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rat& RatPoly::coeff(std::size_t k) const {
    static const Rat zero(0);
    return k < c_.size() ? c_[k] : zero;
}

Rat RatPoly::eval(const Rat& t0) const {
    Rat acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t0 + c_[k];
    return acc;
}

RatPoly RatPoly::operator-() const {
    RatPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    normalize();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(v));
}

RatPoly RatPoly::inverse() const {
    if (!is_constant() || is_zero())
        throw DomainError("not-a-unit", "only nonzero constants are invertible in Q[t]");
    return RatPoly(c_[0].inverse());
}

RatPoly RatPoly::divide_exact(const RatPoly& divisor) const {
    if (divisor.is_zero())
        throw DomainError("division-by-zero", "polynomial division by zero");
    if (is_zero()) return RatPoly();
    if (degree() < divisor.degree())
        throw DomainError("inexact-division", "polynomial division is not exact");
    std::vector<Rat> rem = c_;
    std::vector<Rat> quo(c_.size() - divisor.c_.size() + 1, Rat(0));
    const Rat lead_inv = divisor.c_.back().inverse();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rat q = rem[k + divisor.c_.size() - 1] * lead_inv;
        quo[k] = q;
        if (q.is_zero()) continue;
        for (std::size_t j = 0; j < divisor.c_.size(); ++j)
            rem[k + j] -= q * divisor.c_[j];
    }
    for (const auto& r : rem)
        if (!r.is_zero())
            throw DomainError("inexact-division", "polynomial division is not exact");
    return RatPoly(std::move(quo));
}

std::string RatPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        Rat c = c_[k];
        if (out.empty()) {
            if (c.sign() < 0) { out += "-"; c = -c; }
        } else {
            out += (c.sign() < 0) ? " - " : " + ";
            if (c.sign() < 0) c = -c;
        }
        if (k == 0) {
            out += c.to_string();
        } else {
            if (!c.is_one()) out += c.to_string() + "*";
            out += (k == 1) ? "t" : "t^" + std::to_string(k);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) { return os << p.to_string(); }

} // namespace critforge
