#ifndef CRITFORGE_MILNOR_HPP
#define CRITFORGE_MILNOR_HPP

#include <optional>
#include <vector>

#include "critforge/jet.hpp"
#include "critforge/lg_pair.hpp"
#include "critforge/rat_matrix.hpp"

namespace critforge {

/// Result of the Milnor/Tjurina computation. A missing `mu` means the
/// computation was inconclusive up to the cap: the singularity is either
/// non-isolated or needs a higher jet order to certify — detection is only
/// semi-decidable at finite order, so this is a value, not an error.
///
/// When `mu` is present it comes with a Nakayama certificate at order
/// `certified_at`: the jet-level inclusion m^{D+1} <= J + m^{D+2} was
/// verified, which proves m^{D+1} <= J and hence that the computed quotient
/// dimension is exact.
struct MilnorReport {
    std::optional<long> mu;
    std::optional<unsigned> certified_at;
    std::vector<long> hilbert; // graded dimensions of the Milnor algebra
    std::optional<long> tjurina;
    unsigned cap_used = 0;

    bool isolated() const noexcept { return mu.has_value(); }
};

inline constexpr unsigned kDefaultMilnorCap = 64;

/// mu = dim_Q Q[[x]]/J(f) with a Nakayama certificate, via jet linear
/// algebra; fills the full report including the Tjurina number and the
/// Hilbert function of the Milnor algebra.
MilnorReport milnor_number(const LGPair& p, unsigned cap = kDefaultMilnorCap);

/// dim_Q Q[[x]]/((f) + J(f)), same certificate mechanism.
std::optional<long> tjurina_number(const LGPair& p, unsigned cap = kDefaultMilnorCap);

/// Euler characteristic of the Milnor fiber of an isolated singularity:
/// chi(F) = 1 + (-1)^(n-1) mu (classical Milnor formula). Throws
/// DomainError("non-isolated") when mu is not certified.
long euler_char_milnor_fiber(const LGPair& p, unsigned cap = kDefaultMilnorCap);

/// Local Donaldson-Thomas weight nu = (-1)^n (1 - chi(F)). For an isolated
/// critical point this evaluates to mu; the identity is asserted internally.
long behrend_value(const LGPair& p, unsigned cap = kDefaultMilnorCap);

/// The same weight under the two circulating sign conventions for the
/// vanishing-cycle Euler characteristic.  `canonical` is (-1)^n (1 - chi(F));
/// `alt_reduced` reads the alternative formula (-1)^(n-1) chi_red with the
/// unshifted (reduced-cohomology) convention, `alt_perverse` with the
/// perverse shift by [n]. The literature does not fix which shift the
/// alternative formula intends, so both are exposed read-only; the canonical
/// value is what `behrend_value` returns.
struct BehrendComparison {
    long canonical;
    long alt_reduced;
    long alt_perverse;
};
BehrendComparison behrend_comparison(const LGPair& p, unsigned cap = kDefaultMilnorCap);

/// The certified Milnor algebra A = Q[[x]]/J(f) as an explicit
/// finite-dimensional vector space: a standard-monomial basis plus exact
/// reduction to normal form, enough to realize multiplication operators.
class MilnorAlgebra {
public:
    long mu() const noexcept { return static_cast<long>(standard_cols_.size()); }
    unsigned certified_at() const noexcept { return certified_at_; }
    const JetBasis& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& standard_columns() const noexcept { return standard_cols_; }

    /// Coordinates of [s] in the standard-monomial basis.
    std::vector<Rat> coordinates(const Series& s) const;

    /// Matrix of multiplication by [s] on A, in the standard basis.
    RatMatrix multiplication_operator(const Series& s) const;

private:
    friend std::optional<MilnorAlgebra> milnor_algebra(const LGPair&, unsigned);
    MilnorAlgebra(JetBasis basis, JetEchelon echelon, unsigned certified_at);

    JetBasis basis_;
    JetEchelon echelon_;
    unsigned certified_at_;
    std::vector<std::size_t> standard_cols_;
    std::vector<std::size_t> col_position_; // basis column -> standard index
};

std::optional<MilnorAlgebra> milnor_algebra(const LGPair& p, unsigned cap = kDefaultMilnorCap);

/// Hypercohomology dimensions (h^-1, h^0) of the tangent complex of the
/// derived critical locus at the origin: the kernel and cokernel of the
/// Hessian of f acting on A^n, A the Milnor algebra. The two dimensions
/// agree for every input — the matrix is square and symmetric, the finite
/// shadow of the (-1)-shifted self-duality T = L[-1].
struct TangentComplexDims {
    long h_minus1;
    long h_0;
};
TangentComplexDims tangent_complex_dims(const LGPair& p, unsigned cap = kDefaultMilnorCap);

/// Dimension of H^0 of the Koszul model (Sym(T[-1]), contraction with df)
/// of the derived critical locus: the Milnor algebra again. Equals mu
/// whenever finite; the higher Koszul homology vanishes precisely when the
/// partials form a regular sequence, i.e. when mu is finite.
std::optional<long> koszul_h0(const LGPair& p, unsigned cap = kDefaultMilnorCap);

/// Jacobian ideal generators d_1 f .. d_n f (each trusted one order below f).
std::vector<Series> jacobian_generators(const LGPair& p);

} // namespace critforge

#endif
