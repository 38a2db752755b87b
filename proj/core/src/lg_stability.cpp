#include "critforge/lg_stability.hpp"

#include <sstream>

#include "critforge/errors.hpp"

namespace critforge {

LGPair ts_sum(const LGPair& p, const LGPair& r) {
    const std::size_t n = p.nvars() + r.nvars();
    const unsigned order = std::min(p.order(), r.order());
    Series sum = embed(p.f().truncated(order), n, 0) + embed(r.f().truncated(order), n, p.nvars());
    return LGPair(std::move(sum));
}

Stabilization stabilize(const LGPair& p, const QuadForm& q, Mode mode) {
    LGPair quadratic_pair(q.as_series(p.order()));
    return Stabilization{ts_sum(p, quadratic_pair), gw_class(q, mode)};
}

namespace {

// Graded-lex canonical scaling: when the lowest homogeneous part has a
// single term, rescale the series so that term's coefficient is 1;
// otherwise compare raw. A cheap sound refinement, not a right-equivalence
// normal form.
Series canonical_residual_jet(const Series& s) {
    auto o = s.ord();
    if (!o) return s;
    const Series lowest = s.homogeneous_part(*o);
    if (lowest.term_count() != 1) return s;
    return s.scale(lowest.terms().begin()->second.inverse());
}

std::string hilbert_to_string(const std::vector<long>& h) {
    std::string out = "[";
    for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "," : "") + std::to_string(h[i]);
    return out + "]";
}

} // namespace

StableInvariants stable_invariants(const LGPair& p, unsigned N, Mode mode, unsigned cap) {
    SplitResult s = split(p, N);
    MilnorReport rep = milnor_number(s.residual, std::min(cap, N == 0 ? 0 : N - 1));
    if (!rep.mu)
        throw DomainError("non-isolated",
                          "stable invariants need an isolated singularity (residual "
                          "inconclusive up to the cap)");
    StableInvariants out;
    out.corank = s.residual.nvars();
    out.mu = *rep.mu;
    out.tjurina = rep.tjurina.value();
    out.hilbert = rep.hilbert;
    out.quad_gw = gw_class(s.quad, mode);
    out.total_dim_parity = static_cast<int>(p.nvars() % 2);
    out.residual_normal = canonical_residual_jet(s.residual.f());
    return out;
}

bool is_consistent(const CompareVerdict& v) {
    return std::holds_alternative<ConsistentToOrder>(v);
}

std::string to_string(const CompareVerdict& v) {
    if (auto* c = std::get_if<ConsistentToOrder>(&v))
        return "CONSISTENT_TO_ORDER(" + std::to_string(c->order) + ")";
    const auto& d = std::get<Distinguished>(v);
    return "DISTINGUISHED(" + d.invariant + ": " + d.lhs + " vs " + d.rhs + ")";
}

CompareVerdict stable_compare(const LGPair& p1, const LGPair& p2, unsigned N, unsigned cap) {
    StableInvariants a = stable_invariants(p1, N, Mode::Q, cap);
    StableInvariants b = stable_invariants(p2, N, Mode::Q, cap);

    if (a.corank != b.corank)
        return Distinguished{"corank", std::to_string(a.corank), std::to_string(b.corank)};
    if (a.mu != b.mu)
        return Distinguished{"mu", std::to_string(a.mu), std::to_string(b.mu)};
    if (a.tjurina != b.tjurina)
        return Distinguished{"tjurina", std::to_string(a.tjurina), std::to_string(b.tjurina)};
    if (a.hilbert != b.hilbert)
        return Distinguished{"hilbert", hilbert_to_string(a.hilbert),
                             hilbert_to_string(b.hilbert)};
    // Residual jets live on corank-many variables on both sides by now; the
    // canonical normalization makes simple rescalings invisible, and a
    // difference is reported as jet-level evidence only.
    if (a.residual_normal != b.residual_normal)
        return Distinguished{"residual-jet", a.residual_normal.to_string(),
                             b.residual_normal.to_string()};
    return ConsistentToOrder{N};
}

bool verify_stable_witness(const LGPair& p1, const LGPair& p2, const QuadForm& q1,
                           const QuadForm& q2, const CoordChange& phi, unsigned N) {
    const std::size_t n1 = p1.nvars() + q1.dim();
    const std::size_t n2 = p2.nvars() + q2.dim();
    if (n1 != n2)
        throw DimensionError("verify_stable_witness: stabilized variable counts differ");
    if (phi.nvars() != n1)
        throw DimensionError("verify_stable_witness: witness has wrong variable count");

    const unsigned M =
        std::min(std::min<unsigned>(N, phi.order()), std::min(p1.order(), p2.order()));
    Series lhs = stabilize(p1, q1).pair.f().truncated(M);
    Series rhs = stabilize(p2, q2).pair.f().truncated(M);
    return compose(lhs, phi) == rhs;
}

} // namespace critforge
