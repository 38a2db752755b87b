#ifndef CRITFORGE_JET_HPP
#define CRITFORGE_JET_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "critforge/monomial.hpp"
#include "critforge/rational.hpp"
#include "critforge/series.hpp"

namespace critforge {

/// Ordered monomial basis of the jet space O/m^{D+1}: all monomials of
/// degree <= D in graded-lex order, with index lookup both ways.
class JetBasis {
public:
    JetBasis(std::size_t nvars, unsigned max_degree);

    std::size_t nvars() const noexcept { return nvars_; }
    unsigned max_degree() const noexcept { return max_degree_; }
    std::size_t size() const noexcept { return monomials_.size(); }

    const Monomial& monomial(std::size_t i) const { return monomials_.at(i); }
    std::size_t index_of(const Monomial& m) const;
    /// First index of the given degree block.
    std::size_t degree_begin(unsigned d) const { return degree_begin_.at(d); }

private:
    std::size_t nvars_;
    unsigned max_degree_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t, GlexLess> index_;
    std::vector<std::size_t> degree_begin_;
};

/// Sparse vector over the jet basis: (column, coefficient) pairs sorted by
/// descending column index, no zero coefficients. The leading column is the
/// glex-largest monomial present.
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

SparseVec jet_row(const Series& f, const JetBasis& basis);

/// Incremental sparse row echelon over Q, pivoting on the glex-largest
/// monomial of each row. This is the engine behind ideal-membership and
/// quotient-dimension computations on jet spaces; insertion order is fixed
/// by the callers, so ranks, pivots and reduced forms are deterministic.
class JetEchelon {
public:
    explicit JetEchelon(std::size_t ncols) : ncols_(ncols) {}

    /// Reduce a row against the current pivots and adopt it as a new pivot
    /// if it does not vanish. Returns true if the rank grew.
    bool insert(SparseVec row);

    std::size_t rank() const noexcept { return pivots_.size(); }
    std::size_t ncols() const noexcept { return ncols_; }

    bool in_span(SparseVec v) const;

    /// Full normal form: eliminates every pivot column, leaving a canonical
    /// representative supported on non-pivot (standard) columns.
    SparseVec reduce_full(const SparseVec& v) const;

    bool is_pivot_col(std::size_t c) const { return pivots_.count(c) != 0; }

    /// Non-pivot columns in ascending order.
    std::vector<std::size_t> standard_columns() const;

private:
    // Reduce only the leading entry repeatedly; stops when the lead is not a
    // pivot column (or the row is zero).
    void reduce_lead(SparseVec& row) const;

    std::size_t ncols_;
    std::map<std::size_t, SparseVec> pivots_; // lead col -> row, lead coeff 1
};

/// Dimension of the Q-span of { jet_D(m * g) : g in generators, m monomial
/// with deg(m) + ord(g) <= D } inside O/m^{D+1} — the degree-D jet image of
/// the ideal generated by the input series.
std::size_t jet_span_dim(const std::vector<Series>& generators, unsigned D);

/// Throws ResourceError if the Macaulay matrix for these generators at jet
/// degree D would exceed the cell budget. Purely combinatorial: safe to call
/// before any allocation.
void check_jet_budget(std::size_t nvars, unsigned D, const std::vector<Series>& generators);

/// The echelon of the same span, for callers that need membership tests or
/// the standard-monomial basis of the quotient.
JetEchelon ideal_jet_echelon(const std::vector<Series>& generators, const JetBasis& basis);

/// Jet-matrix cell budget, read once from CRITFORGE_MAX_CELLS (rows times
/// columns of the implied Macaulay matrix). Guards against runaway
/// eliminations at high truncation orders.
std::size_t max_jet_cells();

} // namespace critforge

#endif
