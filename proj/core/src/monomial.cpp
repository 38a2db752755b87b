#include "critforge/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace critforge {

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars)
        throw DimensionError("variable index out of range");
    Monomial m(nvars);
    m.e_[i] = 1;
    return m;
}

unsigned Monomial::degree() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), 0u);
}

Monomial Monomial::times(const Monomial& o) const {
    if (o.nvars() != nvars())
        throw DimensionError("monomial product across different variable sets");
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

Monomial Monomial::times_variable(std::size_t i) const {
    Monomial r(*this);
    ++r.e_.at(i);
    return r;
}

Monomial Monomial::divide_variable(std::size_t i) const {
    Monomial r(*this);
    if (r.e_.at(i) == 0)
        throw DomainError("indivisible", "monomial not divisible by requested variable");
    --r.e_[i];
    return r;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    if (names.size() != e_.size())
        throw DimensionError("variable name list has wrong length");
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(std::vector<std::uint32_t>{});
        return out;
    }
    std::vector<std::uint32_t> e(nvars, 0);
    // Recursively place the degree left to right; descending first-slot
    // exponent matches glex order.
    auto rec = [&](auto&& self, std::size_t slot, unsigned remaining) -> void {
        if (slot + 1 == nvars) {
            e[slot] = remaining;
            out.emplace_back(e);
            e[slot] = 0;
            return;
        }
        for (unsigned k = remaining + 1; k-- > 0;) {
            e[slot] = k;
            self(self, slot + 1, remaining - k);
        }
        e[slot] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
    std::vector<Monomial> out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        auto layer = monomials_of_degree(nvars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

} // namespace critforge
