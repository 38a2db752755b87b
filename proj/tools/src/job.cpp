#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "critforge/errors.hpp"
#include "critforge/expr.hpp"
#include "critforge/isotopy.hpp"
#include "critforge/lg_stability.hpp"
#include "critforge/milnor.hpp"
#include "critforge/morse_split.hpp"
#include "critforge/presets.hpp"
#include "jobspec.hpp"

namespace critforge::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr unsigned kFamilyTDegreeBound = 128;

int code_for(const Error& e) {
    if (dynamic_cast<const ContractViolation*>(&e)) return 3;
    if (e.code() == "non-isolated") return 2;
    return 1;
}

LGPair build_pair(const ExprInput& in, unsigned order) {
    ExprAst ast = parse_expr(in.expr, in.vars);
    return LGPair(ast.to_series(order));
}

Series build_series(const ExprInput& in, unsigned order) {
    return parse_expr(in.expr, in.vars).to_series(order);
}

std::vector<std::string> fresh_names(std::vector<std::string> taken, std::size_t count,
                                     const std::string& prefix) {
    std::vector<std::string> fresh;
    for (std::size_t i = 1; i <= count; ++i) {
        std::string name = prefix + std::to_string(i);
        while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "_";
        taken.push_back(name);
        fresh.push_back(name);
    }
    return fresh;
}

std::vector<std::string> merged_names(const std::vector<std::string>& a,
                                      const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (std::string name : b) {
        while (std::find(out.begin(), out.end(), name) != out.end()) name += "_2";
        out.push_back(name);
    }
    return out;
}

json gw_to_json(const GWClass& c) {
    return json{{"rank", c.rank},
                {"parity", c.parity},
                {"disc", c.disc.get_str()},
                {"mode", to_string(c.mode)}};
}

json series_to_json(const Series& s, const std::vector<std::string>& names) {
    return json{{"expr", s.to_string(names)}, {"vars", names}, {"order", s.order()}};
}

json coordchange_to_json(const CoordChange& cc, const std::vector<std::string>& names) {
    json comps = json::array();
    for (std::size_t i = 0; i < cc.nvars(); ++i)
        comps.push_back(names.at(i) + " -> " + cc.component(i).to_string(names));
    return json{{"components", comps}, {"order", cc.order()}};
}

json quad_to_json(const QuadForm& q) {
    json diag = json::array();
    if (!q.is_empty())
        for (const Rat& d : diagonalize(q).entries) diag.push_back(d.to_string());
    json gram = json::array();
    for (std::size_t i = 0; i < q.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < q.dim(); ++j) row.push_back(q.gram().at(i, j).to_string());
        gram.push_back(row);
    }
    return json{{"dim", q.dim()}, {"diagonal", diag}, {"gram", gram}};
}

json milnor_to_json(const MilnorReport& r) {
    json out{{"cap_used", r.cap_used}};
    out["mu"] = r.mu ? json(*r.mu) : json(nullptr);
    out["certified_at"] = r.certified_at ? json(*r.certified_at) : json(nullptr);
    out["tjurina"] = r.tjurina ? json(*r.tjurina) : json(nullptr);
    out["hilbert"] = r.hilbert;
    return out;
}

struct CommandOutput {
    int exit_code = 0;
    std::string status = "ok"; // "ok" | "inconclusive"
    json result;
    std::vector<std::string> human; // plain-text lines
};

Rat parse_rat_or_throw(const std::string& text) { return Rat::from_string(text); }

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(sep, pos);
        out.push_back(text.substr(pos, next == std::string::npos ? std::string::npos
                                                                 : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

FamilySeries family_component_from_expr(const std::string& text,
                                        const std::vector<std::string>& vars, unsigned N) {
    if (std::find(vars.begin(), vars.end(), "t") != vars.end())
        throw DomainError("reserved-variable", "'t' is reserved as the family parameter");
    std::vector<std::string> with_t = vars;
    with_t.push_back("t");
    // Polynomial input: evaluate exactly at a generous combined order, then
    // regrade so t does not count against the spatial truncation.
    Series raw = parse_expr(text, with_t).to_series(N + kFamilyTDegreeBound);
    FamilySeries::Terms terms;
    const std::size_t n = vars.size();
    for (const auto& [m, c] : raw.terms()) {
        std::vector<std::uint32_t> spatial(m.exponents().begin(), m.exponents().end() - 1);
        Monomial sm(std::move(spatial));
        if (sm.degree() > N) continue;
        const unsigned tdeg = m.exponent(n);
        auto it = terms.find(sm);
        if (it == terms.end())
            terms.emplace(sm, RatPoly::monomial(c, tdeg));
        else
            it->second += RatPoly::monomial(c, tdeg);
    }
    return FamilySeries::from_terms(n, N, std::move(terms));
}

MatrixFamily parse_matrix_family(const std::string& spec) {
    std::vector<std::string> rows = split_list(spec, ';');
    const std::size_t n = rows.size();
    std::vector<RatPoly> entries;
    for (const auto& row : rows) {
        std::vector<std::string> cells = split_list(row, ',');
        if (cells.size() != n)
            throw DomainError("bad-matrix", "matrix family must be square");
        for (const auto& cell : cells) entries.push_back(parse_expr(cell, {"t"}).to_ratpoly());
    }
    return MatrixFamily(n, std::move(entries));
}

// --- command handlers ----------------------------------------------------

void require_inputs(const JobSpec& job, std::size_t count) {
    if (job.inputs.size() != count)
        throw DomainError("usage", job.command + " expects " + std::to_string(count) +
                              " expression input(s), got " +
                              std::to_string(job.inputs.size()));
}

CommandOutput cmd_milnor(const JobSpec& job) {
    require_inputs(job, 1);
    LGPair p = build_pair(job.inputs[0], job.cap + 2);
    MilnorReport r = milnor_number(p, job.cap);
    CommandOutput out;
    out.result = milnor_to_json(r);
    if (!r.mu) {
        out.status = "inconclusive";
        out.exit_code = 2;
        out.human = {"mu: inconclusive at cap " + std::to_string(r.cap_used) +
                     " (no Nakayama certificate; possibly non-isolated)"};
        return out;
    }
    out.human.push_back("mu = " + std::to_string(*r.mu));
    out.human.push_back("certified_at = " + std::to_string(*r.certified_at));
    std::string h = "hilbert = [";
    for (std::size_t i = 0; i < r.hilbert.size(); ++i)
        h += (i ? "," : "") + std::to_string(r.hilbert[i]);
    out.human.push_back(h + "]");
    out.human.push_back("tjurina = " + std::to_string(*r.tjurina));
    return out;
}

CommandOutput cmd_tjurina(const JobSpec& job) {
    require_inputs(job, 1);
    LGPair p = build_pair(job.inputs[0], job.cap + 2);
    auto tau = tjurina_number(p, job.cap);
    CommandOutput out;
    out.result["tjurina"] = tau ? json(*tau) : json(nullptr);
    if (!tau) {
        out.status = "inconclusive";
        out.exit_code = 2;
        out.human = {"tjurina: inconclusive at cap " + std::to_string(job.cap)};
        return out;
    }
    out.human = {"tjurina = " + std::to_string(*tau)};
    return out;
}

CommandOutput cmd_behrend(const JobSpec& job) {
    require_inputs(job, 1);
    LGPair p = build_pair(job.inputs[0], job.cap + 2);
    MilnorReport r = milnor_number(p, job.cap);
    CommandOutput out;
    if (!r.mu) {
        out.result["nu"] = nullptr;
        out.status = "inconclusive";
        out.exit_code = 2;
        out.human = {"behrend: inconclusive at cap " + std::to_string(r.cap_used)};
        return out;
    }
    const long nu = behrend_value(p, job.cap);
    const long chi = euler_char_milnor_fiber(p, job.cap);
    out.result["nu"] = nu;
    out.result["mu"] = *r.mu;
    out.result["euler_char_milnor_fiber"] = chi;
    out.human.push_back("nu = " + std::to_string(nu));
    out.human.push_back("chi(F) = " + std::to_string(chi));
    if (job.compare_conventions) {
        BehrendComparison c = behrend_comparison(p, job.cap);
        out.result["conventions"] = json{{"canonical", c.canonical},
                                         {"alt_reduced", c.alt_reduced},
                                         {"alt_perverse", c.alt_perverse}};
        out.human.push_back("conventions: canonical = " + std::to_string(c.canonical) +
                            ", alt_reduced = " + std::to_string(c.alt_reduced) +
                            ", alt_perverse = " + std::to_string(c.alt_perverse) +
                            " (shift convention unresolved)");
    }
    return out;
}

CommandOutput cmd_split(const JobSpec& job) {
    require_inputs(job, 1);
    const auto& vars = job.inputs[0].vars;
    LGPair p = build_pair(job.inputs[0], job.order);
    SplitResult s = split(p, job.order);

    // Output coordinates: residual names first (kernel block), quad names
    // after, matching the witness variable slots.
    std::vector<std::string> res_names(vars.begin(), vars.begin() + s.residual.nvars());
    CommandOutput out;
    out.result["corank"] = s.residual.nvars();
    out.result["rank"] = s.quad.dim();
    out.result["quad"] = quad_to_json(s.quad);
    out.result["residual"] = series_to_json(s.residual.f(), res_names);
    out.result["witness"] = coordchange_to_json(s.witness, vars);
    out.result["order"] = s.order;
    out.result["verified"] = true; // checked on construction, or we threw

    out.human.push_back("corank = " + std::to_string(s.residual.nvars()) +
                        ", rank = " + std::to_string(s.quad.dim()));
    std::string diag = "quad = <";
    for (std::size_t i = 0; i < s.quad.dim(); ++i)
        diag += (i ? "," : "") + diagonalize(s.quad).entries[i].to_string();
    out.human.push_back(diag + ">");
    out.human.push_back("residual = " + s.residual.f().to_string(res_names));
    for (std::size_t i = 0; i < s.witness.nvars(); ++i)
        out.human.push_back("witness: " + vars[i] + " -> " +
                            s.witness.component(i).to_string(vars));
    out.human.push_back("verified: composition check passed at order " +
                        std::to_string(s.order));
    return out;
}

CommandOutput cmd_stabilize(const JobSpec& job) {
    require_inputs(job, 1);
    if (job.quad_specs.size() != 1)
        throw DomainError("usage", "stabilize expects exactly one --quad");
    LGPair p = build_pair(job.inputs[0], job.order);
    QuadForm q = parse_quadform_spec(job.quad_specs[0]);
    Stabilization s = stabilize(p, q, job.mode);

    std::vector<std::string> names = job.inputs[0].vars;
    for (auto& fresh : fresh_names(names, q.dim(), "q")) names.push_back(std::move(fresh));

    CommandOutput out;
    out.result["pair"] = series_to_json(s.pair.f(), names);
    out.result["action"] = gw_to_json(s.action);
    out.human.push_back("stabilized = " + s.pair.f().to_string(names));
    out.human.push_back("action: rank " + std::to_string(s.action.rank) + ", disc " +
                        s.action.disc.get_str());
    return out;
}

CommandOutput cmd_ts_sum(const JobSpec& job) {
    require_inputs(job, 2);
    LGPair a = build_pair(job.inputs[0], job.order);
    LGPair b = build_pair(job.inputs[1], job.order);
    LGPair sum = ts_sum(a, b);
    std::vector<std::string> names = merged_names(job.inputs[0].vars, job.inputs[1].vars);
    CommandOutput out;
    out.result["pair"] = series_to_json(sum.f(), names);
    out.human.push_back("sum = " + sum.f().to_string(names));
    return out;
}

CommandOutput cmd_invariants(const JobSpec& job) {
    require_inputs(job, 1);
    const unsigned order = std::max(job.order, job.cap + 2);
    LGPair p = build_pair(job.inputs[0], order);
    StableInvariants inv = stable_invariants(p, job.order, job.mode, job.cap);
    TangentComplexDims t = tangent_complex_dims(p, job.cap);
    const long nu = behrend_value(p, job.cap);
    const long chi = euler_char_milnor_fiber(p, job.cap);

    std::vector<std::string> res_names(job.inputs[0].vars.begin(),
                                       job.inputs[0].vars.begin() + inv.corank);
    CommandOutput out;
    out.result["corank"] = inv.corank;
    out.result["mu"] = inv.mu;
    out.result["tjurina"] = inv.tjurina;
    out.result["hilbert"] = inv.hilbert;
    out.result["quad_gw"] = gw_to_json(inv.quad_gw);
    out.result["total_dim_parity"] = inv.total_dim_parity;
    out.result["behrend"] = nu;
    out.result["euler_char_milnor_fiber"] = chi;
    out.result["tangent_complex"] = json{{"h_minus1", t.h_minus1}, {"h_0", t.h_0}};
    out.result["koszul_h0"] = koszul_h0(p, job.cap).value();
    out.result["residual_normal"] = inv.residual_normal.to_string(res_names);

    out.human.push_back("corank = " + std::to_string(inv.corank) +
                        ", mu = " + std::to_string(inv.mu) +
                        ", tjurina = " + std::to_string(inv.tjurina));
    out.human.push_back("behrend = " + std::to_string(nu) +
                        ", chi(F) = " + std::to_string(chi));
    out.human.push_back("tangent complex: h^-1 = " + std::to_string(t.h_minus1) +
                        ", h^0 = " + std::to_string(t.h_0));
    out.human.push_back("split-off form: rank " + std::to_string(inv.quad_gw.rank) +
                        ", disc " + inv.quad_gw.disc.get_str());
    return out;
}

CommandOutput cmd_stable_compare(const JobSpec& job) {
    JobSpec j = job;
    if (job.preset == "cubic-pair") {
        j.inputs = {{{"x"}, "x^3"}, {{"x", "y"}, "x^3 + y^2"}};
    } else if (!job.preset.empty()) {
        throw DomainError("usage", "unknown preset '" + job.preset + "'");
    }
    require_inputs(j, 2);
    LGPair a = build_pair(j.inputs[0], j.order);
    LGPair b = build_pair(j.inputs[1], j.order);
    CompareVerdict v = stable_compare(a, b, j.order, j.cap);

    CommandOutput out;
    if (is_consistent(v)) {
        out.result["consistent"] = true;
        out.result["order"] = std::get<ConsistentToOrder>(v).order;
    } else {
        const auto& d = std::get<Distinguished>(v);
        out.result["consistent"] = false;
        out.result["invariant"] = d.invariant;
        out.result["lhs"] = d.lhs;
        out.result["rhs"] = d.rhs;
    }
    out.human.push_back(to_string(v));
    return out;
}

CommandOutput cmd_verify_witness(const JobSpec& job) {
    JobSpec j = job;
    if (job.preset == "cubic-pair") {
        j.inputs = {{{"x"}, "x^3"}, {{"x", "y"}, "x^3 + y^2"}};
        j.quad_specs = {"std:1", "empty"};
        j.map_vars = {"x", "y"};
        j.map_comps = {"x", "y"};
    } else if (!job.preset.empty()) {
        throw DomainError("usage", "unknown preset '" + job.preset + "'");
    }
    require_inputs(j, 2);
    if (j.quad_specs.size() != 2)
        throw DomainError("usage", "verify-witness expects two --quad specs");
    if (j.map_comps.empty())
        throw DomainError("usage", "verify-witness expects --map components");

    LGPair p1 = build_pair(j.inputs[0], j.order);
    LGPair p2 = build_pair(j.inputs[1], j.order);
    QuadForm q1 = parse_quadform_spec(j.quad_specs[0]);
    QuadForm q2 = parse_quadform_spec(j.quad_specs[1]);

    std::vector<std::string> wvars = j.map_vars;
    if (wvars.empty()) wvars = j.inputs[0].vars;
    std::vector<Series> comps;
    for (const auto& c : j.map_comps)
        comps.push_back(parse_expr(c, wvars).to_series(j.order));
    CoordChange phi(wvars.size(), j.order, std::move(comps));

    const bool ok = verify_stable_witness(p1, p2, q1, q2, phi, j.order);
    CommandOutput out;
    out.result["verified"] = ok;
    out.human.push_back(ok ? "witness verified" : "witness FAILED");
    return out;
}

CommandOutput cmd_verify_isotopy(const JobSpec& job) {
    Series f = Series::zero(0, 0);
    std::vector<std::string> vars;
    std::optional<FamilyCoordChange> family;
    if (job.preset == "quartic-isotopy") {
        QuarticIsotopyFixture fx = preset_quartic_isotopy(job.order);
        f = fx.f;
        family = fx.family;
        vars = {"x", "y"};
    } else if (!job.preset.empty()) {
        throw DomainError("usage", "unknown preset '" + job.preset + "'");
    } else {
        require_inputs(job, 1);
        vars = job.inputs[0].vars;
        f = build_series(job.inputs[0], job.order + 1);
        if (job.family_comps.size() != vars.size())
            throw DomainError("usage",
                              "verify-isotopy expects one --family component per variable");
        std::vector<FamilySeries> comps;
        for (const auto& c : job.family_comps)
            comps.push_back(family_component_from_expr(c, vars, job.order));
        family.emplace(vars.size(), job.order, std::move(comps));
    }

    IsotopyReport report = verify_isotopy(f, *family, job.order);
    CommandOutput out;
    out.result["function_preserved"] = report.function_preserved;
    out.result["starts_at_identity"] = report.starts_at_identity;
    out.result["fixes_critical_jets"] = report.fixes_critical_jets;
    out.result["all_passed"] = report.all_passed();
    out.result["phi1"] = coordchange_to_json(report.phi1, vars);

    out.human.push_back(std::string("(i)   f o phi_t = f identically: ") +
                        (report.function_preserved ? "yes" : "NO"));
    out.human.push_back(std::string("(ii)  phi_0 = id: ") +
                        (report.starts_at_identity ? "yes" : "NO"));
    out.human.push_back(std::string("(iii) phi_1 fixes critical-locus jets: ") +
                        (report.fixes_critical_jets ? "yes" : "NO"));
    return out;
}

CommandOutput cmd_det_family(const JobSpec& job) {
    MatrixFamily m = MatrixFamily::identity(0);
    if (job.preset == "hyperbolic-3cycle") {
        m = preset_hyperbolic_3cycle();
    } else if (!job.preset.empty()) {
        throw DomainError("usage", "unknown preset '" + job.preset + "'");
    } else if (!job.matrix_spec.empty()) {
        m = parse_matrix_family(job.matrix_spec);
    } else {
        throw DomainError("usage", "det-family expects --matrix or --preset");
    }

    RatPoly det = matrix_family_det(m);
    CommandOutput out;
    out.result["det"] = det.to_string();
    out.result["det_is_one"] = (det == RatPoly(1));
    out.human.push_back("det = " + det.to_string());
    if (job.at_value) {
        Rat t0 = parse_rat_or_throw(*job.at_value);
        RatMatrix at = specialize(m, t0);
        json rows = json::array();
        for (std::size_t i = 0; i < at.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < at.cols(); ++k) row.push_back(at.at(i, k).to_string());
            rows.push_back(row);
        }
        out.result["at"] = json{{"t", t0.to_string()}, {"matrix", rows}};
        out.human.push_back("at t = " + t0.to_string() + ":");
        out.human.push_back(at.to_string());
    }
    return out;
}

CommandOutput cmd_gw_class(const JobSpec& job) {
    if (job.quad_specs.size() != 1)
        throw DomainError("usage", "gw-class expects exactly one --quad");
    QuadForm q = parse_quadform_spec(job.quad_specs[0]);
    GWClass c = gw_class(q, job.mode);
    CommandOutput out;
    out.result["gw"] = gw_to_json(c);
    out.result["quad"] = quad_to_json(q);
    auto witt = witt_split_count(q);
    out.result["witt_hyperbolic_pairs"] = witt ? json(*witt) : json(nullptr);
    out.human.push_back("rank = " + std::to_string(c.rank) +
                        ", parity = " + std::to_string(c.parity) + ", disc = " +
                        c.disc.get_str() + " (" + to_string(job.mode) + " mode)");
    if (witt) out.human.push_back("witt hyperbolic pairs = " + std::to_string(*witt));
    return out;
}

CommandOutput dispatch(const JobSpec& job) {
    if (job.command == "milnor") return cmd_milnor(job);
    if (job.command == "tjurina") return cmd_tjurina(job);
    if (job.command == "behrend") return cmd_behrend(job);
    if (job.command == "split" || job.command == "minimal-model") return cmd_split(job);
    if (job.command == "stabilize") return cmd_stabilize(job);
    if (job.command == "ts-sum") return cmd_ts_sum(job);
    if (job.command == "invariants") return cmd_invariants(job);
    if (job.command == "stable-compare") return cmd_stable_compare(job);
    if (job.command == "verify-witness") return cmd_verify_witness(job);
    if (job.command == "verify-isotopy") return cmd_verify_isotopy(job);
    if (job.command == "det-family") return cmd_det_family(job);
    if (job.command == "gw-class") return cmd_gw_class(job);
    throw DomainError("usage", "unknown command '" + job.command + "'");
}

json envelope(const JobSpec& job) {
    json env;
    env["schema"] = kSchemaVersion;
    env["command"] = job.command;
    env["mode"] = to_string(job.mode);
    env["order"] = job.order;
    env["cap"] = job.cap;
    json inputs = json::array();
    for (const auto& in : job.inputs)
        inputs.push_back(json{{"vars", in.vars}, {"expr", in.expr}});
    env["inputs"] = inputs;
    return env;
}

} // namespace

QuadForm parse_quadform_spec(const std::string& spec) {
    if (spec == "empty") return QuadForm();
    if (spec.rfind("std:", 0) == 0) {
        const long n = std::stol(spec.substr(4));
        if (n < 0 || n > 64)
            throw DomainError("bad-quadform", "std rank out of range");
        return QuadForm::standard(static_cast<std::size_t>(n));
    }
    if (spec.rfind("diag:", 0) == 0) {
        std::vector<Rat> entries;
        for (const auto& cell : split_list(spec.substr(5), ','))
            entries.push_back(Rat::from_string(cell));
        return QuadForm::diagonal(entries);
    }
    if (spec.rfind("mat:", 0) == 0) {
        std::vector<std::string> rows = split_list(spec.substr(4), ';');
        RatMatrix g(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::vector<std::string> cells = split_list(rows[i], ',');
            if (cells.size() != rows.size())
                throw DomainError("bad-quadform", "Gram matrix must be square");
            for (std::size_t j = 0; j < cells.size(); ++j)
                g.at(i, j) = Rat::from_string(cells[j]);
        }
        return QuadForm(std::move(g));
    }
    throw DomainError("bad-quadform",
                      "quadratic form spec must be empty | std:N | diag:... | mat:...");
}

RunResult run_job(const JobSpec& job) {
    json env = envelope(job);
    int code = 0;
    std::vector<std::string> human;
    try {
        if (job.order < 2)
            throw DomainError("usage", "truncation order must be at least 2");
        if (job.cap < job.order)
            throw DomainError("usage", "cap must be at least the truncation order");
        CommandOutput out = dispatch(job);
        env["status"] = out.status;
        env["result"] = out.result;
        code = out.exit_code;
        human = std::move(out.human);
        if (out.status == "inconclusive") human.insert(human.begin(), "status: inconclusive");
    } catch (const Error& e) {
        env["status"] = "error";
        env["error"] = json{{"code", e.code()}, {"message", e.what()}};
        code = code_for(e);
        human = {std::string("error (") + e.code() + "): " + e.what()};
    } catch (const std::exception& e) {
        env["status"] = "error";
        env["error"] = json{{"code", "internal"}, {"message", e.what()}};
        code = 3;
        human = {std::string("internal error: ") + e.what()};
    }

    RunResult res;
    res.exit_code = code;
    if (job.json) {
        res.output = env.dump() + "\n";
    } else {
        std::ostringstream os;
        for (const auto& line : human) os << line << "\n";
        res.output = os.str();
    }
    return res;
}

namespace {

JobSpec job_from_json(const json& j) {
    JobSpec job;
    job.command = j.at("command").get<std::string>();
    if (j.contains("inputs"))
        for (const auto& in : j.at("inputs"))
            job.inputs.push_back(
                {in.at("vars").get<std::vector<std::string>>(), in.at("expr").get<std::string>()});
    job.order = j.value("order", 12u);
    job.cap = j.value("cap", 64u);
    job.mode = j.value("mode", std::string("Q")) == "C-formal" ? Mode::CFormal : Mode::Q;
    job.json = true;
    if (j.contains("quads")) job.quad_specs = j.at("quads").get<std::vector<std::string>>();
    if (j.contains("map")) job.map_comps = j.at("map").get<std::vector<std::string>>();
    if (j.contains("map_vars")) job.map_vars = j.at("map_vars").get<std::vector<std::string>>();
    if (j.contains("family")) job.family_comps = j.at("family").get<std::vector<std::string>>();
    job.matrix_spec = j.value("matrix", std::string());
    job.preset = j.value("preset", std::string());
    if (j.contains("at")) job.at_value = j.at("at").get<std::string>();
    job.compare_conventions = j.value("compare", false);
    return job;
}

} // namespace

RunResult run_batch(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        return {1, "error (usage): cannot open batch file '" + path + "'\n"};

    std::vector<JobSpec> jobs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            jobs.push_back(job_from_json(json::parse(line)));
        } catch (const std::exception& e) {
            return {1, "error (usage): batch line " + std::to_string(lineno) + ": " +
                           e.what() + "\n"};
        }
    }

    // Jobs are independent and the library is pure; run them concurrently
    // and emit outputs in input order.
    std::vector<std::future<RunResult>> futures;
    futures.reserve(jobs.size());
    for (const auto& job : jobs)
        futures.push_back(std::async(std::launch::async, [&job] { return run_job(job); }));

    RunResult all;
    for (auto& f : futures) {
        RunResult r = f.get();
        all.exit_code = std::max(all.exit_code, r.exit_code);
        all.output += r.output;
    }
    return all;
}

} // namespace critforge::cli
