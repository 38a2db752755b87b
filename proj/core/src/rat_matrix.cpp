#include "critforge/rat_matrix.hpp"

#include <sstream>

#include "critforge/errors.hpp"

namespace critforge {

namespace {

constexpr std::size_t kMaxDenseCols = 5000;

void check_dense_size(std::size_t rows, std::size_t cols) {
    if (cols > kMaxDenseCols)
        throw ResourceError("dense matrix with " + std::to_string(cols) +
                            " columns exceeds the 5000-column limit");
    (void)rows;
}

// Integer matrix with per-row denominators cleared; rank/pivots/rref are
// invariant under row scaling.
struct ScaledRows {
    std::vector<std::vector<mpz_class>> z;
};

ScaledRows clear_denominators(const RatMatrix& m) {
    ScaledRows s;
    s.z.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        s.z[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            s.z[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    }
    return s;
}

struct Echelon {
    std::vector<std::vector<mpz_class>> z; // row echelon, fraction-free
    std::vector<std::size_t> pivot_cols;
    int swap_sign = 1;
};

// Fraction-free Bareiss forward elimination. Pivots: leftmost nonzero
// column, smallest row index.
Echelon bareiss_forward(ScaledRows rows, std::size_t cols) {
    Echelon e;
    e.z = std::move(rows.z);
    const std::size_t nrows = e.z.size();
    mpz_class prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && e.z[p][c] == 0) ++p;
        if (p == nrows) continue;
        if (p != r) {
            std::swap(e.z[p], e.z[r]);
            e.swap_sign = -e.swap_sign;
        }
        const mpz_class pivot = e.z[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = e.z[i][j] * pivot - e.z[i][c] * e.z[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                e.z[i][j] = std::move(t);
            }
            e.z[i][c] = 0;
        }
        prev = pivot;
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

} // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_dense_size(rows, cols);
    a_.assign(rows * cols, Rat(0));
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty()) return RatMatrix(0, 0);
    RatMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw DimensionError("ragged row list");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool RatMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_)
        throw DimensionError("matrix product shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix sum shape mismatch");
    RatMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionError("matrix difference shape mismatch");
    RatMatrix c = a;
    for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_)
        throw DimensionError("matrix-vector shape mismatch");
    std::vector<Rat> out(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (std::size_t j = 0; j < cols_; ++j)
            os << at(i, j).to_string() << (j + 1 < cols_ ? ", " : "");
        os << (i + 1 < rows_ ? ";\n" : "]");
    }
    return os.str();
}

RrefResult rref(const RatMatrix& m) {
    check_dense_size(m.rows(), m.cols());
    Echelon e = bareiss_forward(clear_denominators(m), m.cols());

    RrefResult out;
    out.pivot_cols = e.pivot_cols;
    out.rank = e.pivot_cols.size();
    out.rref = RatMatrix(m.rows(), m.cols());

    // Normalize pivots to 1 and back-substitute over Q.
    std::vector<std::vector<Rat>> rows(out.rank);
    for (std::size_t r = 0; r < out.rank; ++r) {
        rows[r].assign(m.cols(), Rat(0));
        const Rat inv = Rat(e.z[r][e.pivot_cols[r]]).inverse();
        for (std::size_t j = e.pivot_cols[r]; j < m.cols(); ++j)
            rows[r][j] = Rat(e.z[r][j]) * inv;
    }
    for (std::size_t r = out.rank; r-- > 0;) {
        for (std::size_t above = 0; above < r; ++above) {
            const Rat factor = rows[above][e.pivot_cols[r]];
            if (factor.is_zero()) continue;
            for (std::size_t j = e.pivot_cols[r]; j < m.cols(); ++j)
                rows[above][j] -= factor * rows[r][j];
        }
    }
    for (std::size_t r = 0; r < out.rank; ++r)
        for (std::size_t j = 0; j < m.cols(); ++j) out.rref.at(r, j) = rows[r][j];
    return out;
}

std::optional<std::vector<Rat>> solve_linear(const RatMatrix& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows())
        throw DimensionError("solve_linear: rhs length mismatch");
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    for (std::size_t k = 0; k < r.rank; ++k)
        if (r.pivot_cols[k] == m.cols()) return std::nullopt; // inconsistent row

    std::vector<Rat> x(m.cols(), Rat(0));
    for (std::size_t k = 0; k < r.rank; ++k)
        x[r.pivot_cols[k]] = r.rref.at(k, m.cols());
    return x;
}

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rat> v(m.cols(), Rat(0));
        v[j] = Rat(1);
        for (std::size_t k = 0; k < r.rank; ++k)
            v[r.pivot_cols[k]] = -r.rref.at(k, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("determinant of a non-square matrix");
    if (m.rows() == 0) return Rat(1);

    // Track the row scalings so the integer determinant can be descaled.
    Rat scale(1);
    ScaledRows s;
    s.z.resize(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        scale *= Rat(l);
        s.z[i].resize(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            s.z[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    }
    Echelon e = bareiss_forward(std::move(s), m.cols());
    if (e.pivot_cols.size() < m.rows()) return Rat(0);
    // After full-rank Bareiss, the last pivot is the determinant of the
    // integer matrix.
    Rat det = Rat(e.z[m.rows() - 1][m.cols() - 1]) * Rat(e.swap_sign);
    return det / scale;
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rat(1);
    }
    RrefResult r = rref(aug);
    for (std::size_t k = 0; k < n; ++k)
        if (r.rank <= k || r.pivot_cols[k] != k)
            throw SingularError("singular-matrix", "matrix is not invertible");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.rref.at(i, n + j);
    return inv;
}

} // namespace critforge
