#include "critforge/milnor.hpp"

#include <algorithm>

#include "critforge/errors.hpp"

namespace critforge {

std::vector<Series> jacobian_generators(const LGPair& p) {
    std::vector<Series> gens;
    gens.reserve(p.nvars());
    for (std::size_t i = 0; i < p.nvars(); ++i) gens.push_back(p.f().partial(i));
    return gens;
}

namespace {

struct QuotientResult {
    std::optional<long> dim;
    std::optional<unsigned> certified_at;
    std::vector<long> hilbert;
    unsigned cap_used = 0;
    std::optional<JetEchelon> certified_echelon; // at level certified_at
    std::optional<JetBasis> certified_basis;
};

// Quotient dimension of Q[[x]]/(gens) with a Nakayama certificate: walk the
// jet levels L = 1, 2, ...; at each level the span of the ideal jets gives
// Q_{L} = dim O/(I + m^{L+1}), and the certificate at D = L-1 holds when
// every degree-L monomial already lies in the ideal's jet span.
QuotientResult jet_quotient(const std::vector<Series>& gens, std::size_t nvars, unsigned cap) {
    unsigned honest = cap + 1;
    for (const auto& g : gens)
        if (!g.is_zero()) honest = std::min(honest, g.order());

    QuotientResult out;
    out.cap_used = honest == 0 ? 0 : honest - 1;

    std::vector<long> q; // q[d] = dim O/(I + m^{d+1})
    q.push_back(1);      // generators sit in m, so level 0 always has dim 1

    std::optional<JetBasis> prev_basis;
    std::optional<JetEchelon> prev_echelon;

    for (unsigned level = 1; level <= honest; ++level) {
        check_jet_budget(nvars, level, gens);
        JetBasis basis(nvars, level);
        JetEchelon ech = ideal_jet_echelon(gens, basis);
        const long q_level = static_cast<long>(basis.size() - ech.rank());

        // Certificate at D = level-1: the full degree-`level` monomial slice
        // must already lie in the span.
        bool certified = true;
        for (std::size_t c = basis.degree_begin(level); c < basis.size(); ++c) {
            if (!ech.in_span({{c, Rat(1)}})) {
                certified = false;
                break;
            }
        }

        if (certified) {
            const unsigned D = level - 1;
            out.certified_at = D;
            out.dim = q.back();
            out.hilbert.clear();
            for (std::size_t d = 0; d < q.size(); ++d)
                out.hilbert.push_back(q[d] - (d == 0 ? 0 : q[d - 1]));
            while (!out.hilbert.empty() && out.hilbert.back() == 0) out.hilbert.pop_back();
            if (D == 0) {
                out.certified_basis = JetBasis(nvars, 0);
                out.certified_echelon = JetEchelon(1);
            } else if (prev_basis) {
                out.certified_basis = std::move(prev_basis);
                out.certified_echelon = std::move(prev_echelon);
            }
            return out;
        }

        q.push_back(q_level);
        prev_basis = std::move(basis);
        prev_echelon = std::move(ech);
    }
    return out; // inconclusive up to the cap
}

} // namespace

MilnorReport milnor_number(const LGPair& p, unsigned cap) {
    QuotientResult mu = jet_quotient(jacobian_generators(p), p.nvars(), cap);

    MilnorReport report;
    report.mu = mu.dim;
    report.certified_at = mu.certified_at;
    report.hilbert = mu.hilbert;
    report.cap_used = mu.cap_used;
    report.tjurina = tjurina_number(p, cap);
    return report;
}

std::optional<long> tjurina_number(const LGPair& p, unsigned cap) {
    std::vector<Series> gens = jacobian_generators(p);
    if (!p.f().is_zero()) {
        // Match the trust order of the partials so every generator supports
        // the same jet depth.
        gens.push_back(p.f().truncated(p.order() == 0 ? 0 : p.order() - 1));
    }
    return jet_quotient(gens, p.nvars(), cap).dim;
}

long euler_char_milnor_fiber(const LGPair& p, unsigned cap) {
    MilnorReport r = milnor_number(p, cap);
    if (!r.mu)
        throw DomainError("non-isolated",
                          "Milnor fiber Euler characteristic needs an isolated singularity");
    const long sign = (p.nvars() % 2 == 0) ? -1 : 1; // (-1)^(n-1)
    return 1 + sign * *r.mu;
}

long behrend_value(const LGPair& p, unsigned cap) {
    MilnorReport r = milnor_number(p, cap);
    if (!r.mu)
        throw DomainError("non-isolated", "Behrend value needs an isolated singularity");
    const long chi = euler_char_milnor_fiber(p, cap);
    const long sign_n = (p.nvars() % 2 == 0) ? 1 : -1;
    const long nu = sign_n * (1 - chi);
    if (nu != *r.mu)
        throw ContractViolation("Behrend value disagrees with the Milnor number");
    return nu;
}

BehrendComparison behrend_comparison(const LGPair& p, unsigned cap) {
    const long nu = behrend_value(p, cap);
    const long chi = euler_char_milnor_fiber(p, cap);
    const long chi_red = chi - 1;
    const long sign_nm1 = (p.nvars() % 2 == 0) ? -1 : 1;
    const long sign_n = (p.nvars() % 2 == 0) ? 1 : -1;
    BehrendComparison c;
    c.canonical = nu;
    c.alt_reduced = sign_nm1 * chi_red;
    c.alt_perverse = sign_nm1 * sign_n * chi_red;
    return c;
}

MilnorAlgebra::MilnorAlgebra(JetBasis basis, JetEchelon echelon, unsigned certified_at)
    : basis_(std::move(basis)), echelon_(std::move(echelon)), certified_at_(certified_at) {
    standard_cols_ = echelon_.standard_columns();
    col_position_.assign(basis_.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < standard_cols_.size(); ++i)
        col_position_[standard_cols_[i]] = i;
}

std::vector<Rat> MilnorAlgebra::coordinates(const Series& s) const {
    if (s.order() < basis_.max_degree())
        throw DomainError("order-too-low",
                          "series trusted below the certified jet order of the algebra");
    SparseVec row;
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it) {
        if (it->first.degree() > basis_.max_degree()) continue; // in m^{D+1} <= J
        row.emplace_back(basis_.index_of(it->first), it->second);
    }
    SparseVec nf = echelon_.reduce_full(row);
    std::vector<Rat> coords(standard_cols_.size(), Rat(0));
    for (const auto& [c, v] : nf) coords[col_position_[c]] = v;
    return coords;
}

RatMatrix MilnorAlgebra::multiplication_operator(const Series& s) const {
    if (s.order() < basis_.max_degree())
        throw DomainError("order-too-low",
                          "series trusted below the certified jet order of the algebra");
    const std::size_t m = standard_cols_.size();
    RatMatrix op(m, m);
    for (std::size_t j = 0; j < m; ++j) {
        const Monomial& b = basis_.monomial(standard_cols_[j]);
        // s * x^b, truncated to the certified jet order.
        Series prod = Series::zero(basis_.nvars(), basis_.max_degree());
        typename Series::Terms terms;
        for (const auto& [mono, c] : s.terms()) {
            Monomial shifted = mono.times(b);
            if (shifted.degree() > basis_.max_degree()) continue;
            terms.emplace(std::move(shifted), c);
        }
        prod = Series::from_terms(basis_.nvars(), basis_.max_degree(), std::move(terms));
        std::vector<Rat> col = coordinates(prod);
        for (std::size_t i = 0; i < m; ++i) op.at(i, j) = col[i];
    }
    return op;
}

std::optional<MilnorAlgebra> milnor_algebra(const LGPair& p, unsigned cap) {
    QuotientResult r = jet_quotient(jacobian_generators(p), p.nvars(), cap);
    if (!r.dim || !r.certified_basis) return std::nullopt;
    MilnorAlgebra alg(std::move(*r.certified_basis), std::move(*r.certified_echelon),
                      *r.certified_at);
    if (alg.mu() != *r.dim)
        throw ContractViolation("Milnor algebra basis size disagrees with mu");
    return alg;
}

TangentComplexDims tangent_complex_dims(const LGPair& p, unsigned cap) {
    auto alg = milnor_algebra(p, cap);
    if (!alg)
        throw DomainError("non-isolated", "tangent complex dims need an isolated singularity");
    const std::size_t n = p.nvars();
    const std::size_t m = static_cast<std::size_t>(alg->mu());

    // Hessian of f acting A^n -> A^n, blockwise multiplication operators by
    // the second partials reduced mod J.
    RatMatrix big(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            RatMatrix block = alg->multiplication_operator(p.f().partial(i).partial(j));
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b) {
                    big.at(i * m + a, j * m + b) = block.at(a, b);
                    big.at(j * m + a, i * m + b) = block.at(a, b);
                }
        }
    }
    const std::size_t rank = rref(big).rank;
    TangentComplexDims dims;
    dims.h_minus1 = static_cast<long>(n * m - rank);
    dims.h_0 = static_cast<long>(n * m - rank);
    return dims;
}

std::optional<long> koszul_h0(const LGPair& p, unsigned cap) {
    // H^0 of (Sym(T[-1]), contraction with df) is O/(im of O^n -> O,
    // (a_i) -> sum a_i d_i f) — the Jacobian-ideal quotient computed by
    // milnor_number. Higher Koszul homology vanishes exactly when the
    // partials form a regular sequence, i.e. when this dimension is finite.
    return milnor_number(p, cap).mu;
}

} // namespace critforge
