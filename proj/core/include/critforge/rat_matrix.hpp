#ifndef CRITFORGE_RAT_MATRIX_HPP
#define CRITFORGE_RAT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "critforge/rational.hpp"

namespace critforge {

/// Dense matrix with exact rational entries. Row-major storage, value
/// semantics. Sized for desk-scale exact elimination; anything above 5000
/// columns is refused rather than silently thrashing.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatMatrix transpose() const;
    bool is_symmetric() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    std::string to_string() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> a_;
};

struct RrefResult {
    RatMatrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form over Q. Forward elimination is fraction-free
/// (Bareiss) on an integer row-scaled copy, which keeps intermediate entry
/// sizes polynomial; the back pass normalizes pivots to 1 and reduces to
/// canonical rationals. Pivot choice is deterministic: leftmost nonzero
/// column, then smallest row index.
RrefResult rref(const RatMatrix& m);

/// Exact particular solution of M x = b, or nullopt if the system is
/// inconsistent ("no solution" is a value, not an error).
std::optional<std::vector<Rat>> solve_linear(const RatMatrix& m, const std::vector<Rat>& b);

/// Basis of the right kernel, one vector per non-pivot column, in column
/// order (deterministic).
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m);

/// Exact determinant (square input), by fraction-free elimination.
Rat determinant(const RatMatrix& m);

/// Exact inverse; throws SingularError on singular input.
RatMatrix inverse(const RatMatrix& m);

} // namespace critforge

#endif
