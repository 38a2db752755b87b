#ifndef CRITFORGE_MORSE_SPLIT_HPP
#define CRITFORGE_MORSE_SPLIT_HPP

#include "critforge/coord_change.hpp"
#include "critforge/lg_pair.hpp"
#include "critforge/quad_form.hpp"

namespace critforge {

/// Exact second-derivative data of a potential at the origin, with a
/// congruence witness. The witness columns are arranged kernel-first: the
/// first `corank` columns span ker(H), chosen through the rref pivot
/// structure, so the diagonal starts with the zero block.
struct HessianData {
    RatMatrix hessian;       // H_ij = d_i d_j f (0)
    std::size_t rank = 0;
    std::size_t corank = 0;
    std::vector<Rat> diagonal; // of P^T (H/2) P: corank zeros, then nonzero entries
    RatMatrix witness;         // P, verified exactly
};

HessianData hessian(const LGPair& p);

/// Output of the fiberwise Morse normalization: tau is the witness
/// automorphism with compose(h, invert(tau)) equal to the quadratic form
/// q in the fiber variables, mod m^{N+1}; `forward` is that inverse,
/// compose(h, forward) == q embedded in the fiber block. The form has
/// constant rational coefficients: the unit parts of the coefficient bundle
/// are absorbed into the witness by exact square roots.
struct RelativeMorseResult {
    QuadForm quad;
    CoordChange tau;
    CoordChange forward;
};

/// Fiberwise formal Morse lemma over the base spanned by the first
/// `base_count` variables. Requires h(x, 0) = 0, d_y h(x, 0) = 0 (center
/// with implicit_solve first) and an invertible fiber Hessian block at 0.
///
/// Degree by degree in the fiber variables, k = 3..N: the fiber-degree-k
/// defect f_k is written as sum_j y_j g_j, assigning each monomial to its
/// smallest-index fiber variable; the corrector lambda = (1/2) B^{-1} g
/// solves through the inverse of the quadratic coefficient bundle B(x), and
/// y -> y - lambda is composed into the witness. The loop preserves the
/// bundle and kills every higher fiber degree mod m^{N+1}; afterwards the
/// bundle is congruence-diagonalized over Q[[x]] and the unit square roots
/// are absorbed.
RelativeMorseResult relative_morse(const Series& h, std::size_t base_count, unsigned N);

/// The same normalization without the final witness inversion: returns only
/// the quadratic form and the forward substitution. This is what the
/// splitting pipeline consumes; relative_morse layers tau on top.
struct RelativeMorseForward {
    QuadForm quad;
    CoordChange forward;
};
RelativeMorseForward relative_morse_forward(const Series& h, std::size_t base_count,
                                            unsigned N);

/// Splitting-lemma output: f composed with the witness equals the constant
/// quadratic form on the last `rank` variables plus the residual potential
/// on the first `corank` variables, exactly mod m^{N+1}. The identity is
/// machine-checked before the result is returned; the residual has order
/// >= 3 (vanishing Hessian), i.e. it is a minimal chart at the origin.
struct SplitResult {
    QuadForm quad;      // on rank fresh variables
    LGPair residual;    // on corank variables, zero Hessian
    CoordChange witness;
    unsigned order = 0;

    /// The normal form as a series on all variables: residual in the first
    /// corank slots, the quadratic form in the remaining rank slots.
    Series normal_form() const;
};

SplitResult split(const LGPair& p, unsigned N);

/// Same pipeline, read as computing a minimal model: the residual is a
/// minimal critical chart at the origin and `quad` is the split-off
/// quadratic bundle fiber.
SplitResult minimal_model(const LGPair& p, unsigned N);

} // namespace critforge

#endif
