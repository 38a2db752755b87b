#include "critforge/jet.hpp"

#include <algorithm>
#include <cstdlib>

#include "critforge/errors.hpp"

namespace critforge {

JetBasis::JetBasis(std::size_t nvars, unsigned max_degree)
    : nvars_(nvars), max_degree_(max_degree) {
    degree_begin_.resize(max_degree + 2, 0);
    for (unsigned d = 0; d <= max_degree; ++d) {
        degree_begin_[d] = monomials_.size();
        for (auto& m : monomials_of_degree(nvars, d)) monomials_.push_back(std::move(m));
    }
    degree_begin_[max_degree + 1] = monomials_.size();
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t JetBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
        throw DomainError("jet-overflow", "monomial outside the jet basis");
    return it->second;
}

SparseVec jet_row(const Series& f, const JetBasis& basis) {
    SparseVec row;
    row.reserve(f.term_count());
    // Series terms iterate glex-ascending; reverse for descending columns.
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        if (it->first.degree() > basis.max_degree()) continue;
        row.emplace_back(basis.index_of(it->first), it->second);
    }
    return row;
}

namespace {

// row -= coeff * pivot, both sorted descending by column.
SparseVec axpy(const SparseVec& row, const Rat& coeff, const SparseVec& pivot) {
    SparseVec out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first > pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first > row[i].first) {
            out.emplace_back(pivot[j].first, -(coeff * pivot[j].second));
            ++j;
        } else {
            Rat v = row[i].second - coeff * pivot[j].second;
            if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

void JetEchelon::reduce_lead(SparseVec& row) const {
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) return;
        row = axpy(row, row.front().second, it->second);
    }
}

bool JetEchelon::insert(SparseVec row) {
    reduce_lead(row);
    if (row.empty()) return false;
    const Rat inv = row.front().second.inverse();
    for (auto& [c, v] : row) v *= inv;
    const std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
}

bool JetEchelon::in_span(SparseVec v) const {
    reduce_lead(v);
    return v.empty();
}

SparseVec JetEchelon::reduce_full(const SparseVec& v) const {
    std::map<std::size_t, Rat, std::greater<>> work;
    for (const auto& [c, val] : v) work.emplace(c, val);
    SparseVec out;
    while (!work.empty()) {
        auto [c, val] = *work.begin();
        work.erase(work.begin());
        if (val.is_zero()) continue;
        auto it = pivots_.find(c);
        if (it == pivots_.end()) {
            out.emplace_back(c, val);
            continue;
        }
        // Eliminate: val * pivot row is subtracted; lead cancels exactly.
        const SparseVec& p = it->second;
        for (std::size_t k = 1; k < p.size(); ++k) {
            auto [wit, fresh] = work.emplace(p[k].first, Rat(0));
            wit->second -= val * p[k].second;
            if (wit->second.is_zero()) work.erase(wit);
            (void)fresh;
        }
    }
    return out;
}

std::vector<std::size_t> JetEchelon::standard_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ncols_; ++c)
        if (!pivots_.count(c)) out.push_back(c);
    return out;
}

namespace {

mpz_class jet_space_size(std::size_t nvars, unsigned D) {
    // C(nvars + D, D)
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(nvars) + D, D);
    return b;
}

} // namespace

void check_jet_budget(std::size_t nvars, unsigned D, const std::vector<Series>& generators) {
    const mpz_class cols = jet_space_size(nvars, D);
    mpz_class rows(0);
    for (const auto& g : generators) {
        auto o = g.ord();
        if (!o || *o > D) continue;
        rows += jet_space_size(nvars, D - *o);
    }
    if (rows * cols > max_jet_cells())
        throw ResourceError("jet matrix of " + rows.get_str() + "x" + cols.get_str() +
                            " cells exceeds CRITFORGE_MAX_CELLS");
}

JetEchelon ideal_jet_echelon(const std::vector<Series>& generators, const JetBasis& basis) {
    const unsigned D = basis.max_degree();
    check_jet_budget(basis.nvars(), D, generators);

    JetEchelon ech(basis.size());
    for (const auto& g : generators) {
        if (g.nvars() != basis.nvars())
            throw DimensionError("generator over wrong variable set");
        auto o = g.ord();
        if (!o || *o > D) continue;
        if (g.order() < D)
            throw DomainError("order-too-low",
                              "generator trusted only to order " + std::to_string(g.order()) +
                                  " but jets of degree " + std::to_string(D) + " are required");
        for (const auto& mult : monomials_up_to(basis.nvars(), D - *o)) {
            // Monomial shift of g, truncated to the basis degree.
            SparseVec row;
            row.reserve(g.term_count());
            for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
                Monomial shifted = it->first.times(mult);
                if (shifted.degree() > D) continue;
                row.emplace_back(basis.index_of(shifted), it->second);
            }
            ech.insert(std::move(row));
        }
    }
    return ech;
}

std::size_t jet_span_dim(const std::vector<Series>& generators, unsigned D) {
    if (generators.empty()) return 0;
    check_jet_budget(generators.front().nvars(), D, generators);
    JetBasis basis(generators.front().nvars(), D);
    return ideal_jet_echelon(generators, basis).rank();
}

std::size_t max_jet_cells() {
    static const std::size_t cap = [] {
        if (const char* env = std::getenv("CRITFORGE_MAX_CELLS")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(50000000);
    }();
    return cap;
}

} // namespace critforge
