#include "critforge/quad_form.hpp"

#include <algorithm>
#include <map>

#include "critforge/errors.hpp"

namespace critforge {

std::string to_string(Mode m) { return m == Mode::Q ? "Q" : "C-formal"; }

QuadForm::QuadForm(RatMatrix gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols())
        throw DimensionError("Gram matrix must be square");
    if (!gram_.is_symmetric())
        throw DomainError("not-symmetric", "Gram matrix must be symmetric");
    if (dim() > 0 && determinant(gram_).is_zero())
        throw SingularError("degenerate-form", "quadratic form is degenerate");
}

QuadForm QuadForm::standard(std::size_t n) { return QuadForm(RatMatrix::identity(n)); }

QuadForm QuadForm::diagonal(const std::vector<Rat>& entries) {
    RatMatrix g(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) g.at(i, i) = entries[i];
    return QuadForm(std::move(g));
}

QuadForm QuadForm::hyperbolic_plane() {
    RatMatrix g(2, 2);
    g.at(0, 1) = Rat(1);
    g.at(1, 0) = Rat(1);
    return QuadForm(std::move(g));
}

Rat QuadForm::evaluate(const std::vector<Rat>& v) const { return pair(v, v); }

Rat QuadForm::pair(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
    if (u.size() != dim() || v.size() != dim())
        throw DimensionError("vector length does not match form dimension");
    Rat acc(0);
    for (std::size_t i = 0; i < dim(); ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!gram_.at(i, j).is_zero()) acc += u[i] * gram_.at(i, j) * v[j];
    }
    return acc;
}

Series QuadForm::as_series(unsigned order) const {
    Series s = Series::zero(dim(), order);
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j) {
            if (gram_.at(i, j).is_zero()) continue;
            Series term = Series::variable(dim(), i, order) * Series::variable(dim(), j, order);
            s = s + term.scale(gram_.at(i, j));
        }
    return s;
}

GWClass direct_sum(const GWClass& a, const GWClass& b) {
    if (a.mode != b.mode)
        throw DomainError("mode-mismatch", "cannot sum GW classes across modes");
    GWClass c;
    c.mode = a.mode;
    c.rank = a.rank + b.rank;
    c.parity = static_cast<int>(c.rank % 2);
    c.disc = (a.mode == Mode::Q) ? squarefree_part(a.disc * b.disc) : mpz_class(1);
    return c;
}

SymmetricDiagonalization congruence_diagonalize(const RatMatrix& symmetric) {
    if (!symmetric.is_symmetric())
        throw DomainError("not-symmetric", "congruence diagonalization needs a symmetric matrix");
    const std::size_t n = symmetric.rows();
    RatMatrix b = symmetric;
    RatMatrix p = RatMatrix::identity(n);

    // Column operation x_target += c * x_source, applied congruently.
    auto add_col = [&](std::size_t target, std::size_t source, const Rat& c) {
        for (std::size_t i = 0; i < n; ++i) b.at(i, target) += c * b.at(i, source);
        for (std::size_t j = 0; j < n; ++j) b.at(target, j) += c * b.at(source, j);
        for (std::size_t i = 0; i < n; ++i) p.at(i, target) += c * p.at(i, source);
    };
    auto swap_cols = [&](std::size_t a, std::size_t c) {
        for (std::size_t i = 0; i < n; ++i) std::swap(b.at(i, a), b.at(i, c));
        for (std::size_t j = 0; j < n; ++j) std::swap(b.at(a, j), b.at(c, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(p.at(i, a), p.at(i, c));
    };

    for (std::size_t k = 0; k < n; ++k) {
        // First nonzero diagonal entry in the active block.
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i)
            if (!b.at(i, i).is_zero()) { pivot = i; break; }

        if (pivot == n) {
            // All-zero active diagonal: symmetrize the first nonzero
            // off-diagonal pair via u = v + w.
            std::size_t oi = n, oj = n;
            for (std::size_t i = k; i < n && oi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!b.at(i, j).is_zero()) { oi = i; oj = j; break; }
            if (oi == n) break; // active block is identically zero
            add_col(oi, oj, Rat(1)); // b(oi,oi) becomes 2*b(oi,oj)
            pivot = oi;
        }
        if (pivot != k) swap_cols(k, pivot);

        const Rat d = b.at(k, k);
        for (std::size_t m = k + 1; m < n; ++m) {
            if (b.at(k, m).is_zero()) continue;
            add_col(m, k, -(b.at(k, m) / d));
        }
    }

    SymmetricDiagonalization out;
    out.witness = std::move(p);
    out.entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.entries.push_back(b.at(i, i));

    // Exact verification of the witness.
    RatMatrix check = out.witness.transpose() * symmetric * out.witness;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat expect = (i == j) ? out.entries[i] : Rat(0);
            if (check.at(i, j) != expect)
                throw ContractViolation("congruence witness failed verification");
        }
    return out;
}

Diagonalization diagonalize(const QuadForm& q) {
    SymmetricDiagonalization d = congruence_diagonalize(q.gram());
    for (const auto& e : d.entries)
        if (e.is_zero())
            throw SingularError("degenerate-form",
                                "diagonalization of a non-degenerate form hit a zero entry");
    return Diagonalization{std::move(d.entries), std::move(d.witness)};
}

GWClass gw_class(const QuadForm& q, Mode mode) {
    GWClass c;
    c.mode = mode;
    c.rank = static_cast<long>(q.dim());
    c.parity = static_cast<int>(c.rank % 2);
    if (mode == Mode::Q && q.dim() > 0)
        c.disc = square_class(determinant(q.gram()));
    return c;
}

QuadForm direct_sum(const QuadForm& a, const QuadForm& b) {
    RatMatrix g(a.dim() + b.dim(), a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) g.at(i, j) = a.gram().at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            g.at(a.dim() + i, a.dim() + j) = b.gram().at(i, j);
    return QuadForm(std::move(g));
}

bool isotropic_split_check(const QuadForm& q, const std::vector<std::vector<Rat>>& subspace) {
    if (q.dim() % 2 != 0) return false;
    if (subspace.empty()) return q.dim() == 0;

    RatMatrix m(subspace.size(), q.dim());
    for (std::size_t i = 0; i < subspace.size(); ++i) {
        if (subspace[i].size() != q.dim())
            throw DimensionError("subspace vector length does not match form dimension");
        for (std::size_t j = 0; j < q.dim(); ++j) m.at(i, j) = subspace[i][j];
    }
    if (rref(m).rank != q.dim() / 2) return false;

    // Bilinearity: vanishing on the listed vectors pairwise is vanishing on
    // the span (characteristic zero).
    for (std::size_t i = 0; i < subspace.size(); ++i)
        for (std::size_t j = i; j < subspace.size(); ++j)
            if (!q.pair(subspace[i], subspace[j]).is_zero()) return false;
    return true;
}

OrientationTwist orientation_twist(const QuadForm& q, Mode mode) {
    GWClass c = gw_class(q, mode);
    return OrientationTwist{c.parity, c.disc};
}

std::optional<long> witt_split_count(const QuadForm& q) {
    Diagonalization d = diagonalize(q);
    std::map<mpz_class, long> pos; // unsigned square class -> surplus of + over -
    for (const auto& e : d.entries) {
        mpz_class cls = square_class(e);
        mpz_class mag = ::abs(cls);
        pos[mag] += (sgn(cls) > 0) ? 1 : -1;
    }
    for (const auto& [mag, surplus] : pos)
        if (surplus != 0) return std::nullopt; // entries do not pair off as <a, -a>
    return static_cast<long>(q.dim() / 2);
}

} // namespace critforge
