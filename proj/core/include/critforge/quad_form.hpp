#ifndef CRITFORGE_QUAD_FORM_HPP
#define CRITFORGE_QUAD_FORM_HPP

#include <optional>
#include <string>
#include <vector>

#include "critforge/rat_matrix.hpp"
#include "critforge/series.hpp"

namespace critforge {

/// Arithmetic mode. All Gram matrices stay rational either way; C-formal
/// mode only changes which stable invariants are considered meaningful
/// (square-class data collapses, rank survives).
enum class Mode { Q, CFormal };

std::string to_string(Mode m);

/// Non-degenerate quadratic form on a trivial bundle fiber: a symmetric
/// rational Gram matrix G with det G != 0; the quadratic function is
/// q(z) = z^T G z. The empty form (dim 0) is the unit for direct sums.
class QuadForm {
public:
    QuadForm() = default; // empty form
    explicit QuadForm(RatMatrix gram);

    static QuadForm standard(std::size_t n); // q_std = z_1^2 + ... + z_n^2
    static QuadForm diagonal(const std::vector<Rat>& entries);
    static QuadForm hyperbolic_plane();

    std::size_t dim() const noexcept { return gram_.rows(); }
    const RatMatrix& gram() const noexcept { return gram_; }
    bool is_empty() const noexcept { return dim() == 0; }

    Rat evaluate(const std::vector<Rat>& v) const;      // q(v)
    Rat pair(const std::vector<Rat>& u, const std::vector<Rat>& v) const; // u^T G v

    friend bool operator==(const QuadForm& a, const QuadForm& b) { return a.gram_ == b.gram_; }
    friend bool operator!=(const QuadForm& a, const QuadForm& b) { return !(a == b); }

    /// The quadratic function as a series in dim() fresh variables.
    Series as_series(unsigned order) const;

private:
    RatMatrix gram_;
};

/// Stable class of a non-degenerate form: the rank (the full invariant over
/// an algebraically closed field), its parity, and over Q the discriminant
/// square class as a signed squarefree integer. In C-formal mode the square
/// class collapses to the trivial token 1.
struct GWClass {
    long rank = 0;
    int parity = 0;        // rank mod 2
    mpz_class disc = 1;    // square class token
    Mode mode = Mode::Q;

    friend bool operator==(const GWClass& a, const GWClass& b) {
        return a.rank == b.rank && a.parity == b.parity && a.disc == b.disc && a.mode == b.mode;
    }
    friend bool operator!=(const GWClass& a, const GWClass& b) { return !(a == b); }
};

/// Monoid law on classes: rank adds, square classes multiply.
GWClass direct_sum(const GWClass& a, const GWClass& b);

struct Diagonalization {
    std::vector<Rat> entries; // all nonzero
    RatMatrix witness;        // P with P^T G P = diag(entries)
};

/// Congruence diagonalization with deterministic pivoting: first nonzero
/// diagonal entry; when the active diagonal is all zero, the first nonzero
/// off-diagonal pair is symmetrized by the substitution u = v + w and then
/// pivoted. The witness is verified exactly before returning.
Diagonalization diagonalize(const QuadForm& q);

/// Congruence diagonalization of an arbitrary symmetric matrix (degenerate
/// allowed); zero diagonal entries mark the kernel directions.
struct SymmetricDiagonalization {
    std::vector<Rat> entries;
    RatMatrix witness;
};
SymmetricDiagonalization congruence_diagonalize(const RatMatrix& symmetric);

GWClass gw_class(const QuadForm& q, Mode mode);

QuadForm direct_sum(const QuadForm& a, const QuadForm& b);

/// True iff the span of the given vectors is isotropic for q and has
/// dimension exactly dim(q)/2 — a maximal isotropic (Lagrangian) subspace.
bool isotropic_split_check(const QuadForm& q, const std::vector<std::vector<Rat>>& subspace);

/// The pair of stable twist invariants a quadratic-bundle action imprints
/// on glued data: the parity of the rank and the determinant square class.
struct OrientationTwist {
    int parity = 0;
    mpz_class disc = 1;
};
OrientationTwist orientation_twist(const QuadForm& q, Mode mode);

/// Number of hyperbolic summands when the diagonal entries pair off exactly
/// as <a, -a> after square-class reduction; nullopt when they do not (full
/// Q-Witt theory with Hasse invariants is out of scope).
std::optional<long> witt_split_count(const QuadForm& q);

} // namespace critforge

#endif
