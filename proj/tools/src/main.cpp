#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "critforge/expr.hpp"
#include "jobspec.hpp"

using critforge::Mode;
using critforge::cli::JobSpec;
using critforge::cli::RunResult;

namespace {

struct CommonOpts {
    std::vector<std::string> vars;
    std::vector<std::string> exprs;
    unsigned order = 12;
    unsigned cap = 64;
    std::string mode = "Q";
    bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_inputs = true) {
    if (with_inputs) {
        cmd->add_option("--vars", opts.vars,
                        "Comma-separated ordered variable list, one per expression")
            ->type_size(1)
            ->allow_extra_args(false);
        cmd->add_option("expr", opts.exprs, "Polynomial expression(s)");
    }
    cmd->add_option("-N,--order", opts.order, "Truncation order (default 12)");
    cmd->add_option("--cap", opts.cap, "Certificate search cap (default 64)");
    cmd->add_option("--mode", opts.mode, "Arithmetic mode: Q or C-formal")
        ->check(CLI::IsMember({"Q", "C-formal"}));
    cmd->add_flag("--json", opts.json, "Machine-readable JSON output");
}

JobSpec to_job(const std::string& command, const CommonOpts& opts) {
    JobSpec job;
    job.command = command;
    job.order = opts.order;
    job.cap = opts.cap;
    job.mode = opts.mode == "C-formal" ? Mode::CFormal : Mode::Q;
    job.json = opts.json;
    for (std::size_t i = 0; i < opts.exprs.size(); ++i) {
        std::vector<std::string> vars =
            i < opts.vars.size() ? critforge::parse_variable_list(opts.vars[i])
                                 : std::vector<std::string>{};
        job.inputs.push_back({std::move(vars), opts.exprs[i]});
    }
    return job;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"critforge: exact singularity invariants and normal forms of "
                 "formal Landau-Ginzburg pairs"};
    app.require_subcommand(0, 1);

    std::string batch_file;
    app.add_option("--batch", batch_file,
                   "Run one JSON job per line of FILE concurrently (implies --json)");

    struct Sub {
        CLI::App* cmd;
        CommonOpts opts;
        std::vector<std::string> quads;
        std::vector<std::string> map_comps;
        std::string map_vars;
        std::vector<std::string> family;
        std::string matrix;
        std::string preset;
        std::string at;
        bool compare = false;
    };
    std::vector<Sub> subs(13);

    auto make = [&](std::size_t idx, const char* name, const char* desc,
                    bool with_inputs = true) -> Sub& {
        subs[idx].cmd = app.add_subcommand(name, desc);
        add_common(subs[idx].cmd, subs[idx].opts, with_inputs);
        return subs[idx];
    };

    make(0, "milnor", "Milnor number with Nakayama certificate, Hilbert function, Tjurina");
    make(1, "tjurina", "Tjurina number");
    Sub& behrend = make(2, "behrend", "Behrend function value at the origin");
    behrend.cmd->add_flag("--compare", behrend.compare,
                          "Also print the alternative sign conventions");
    make(3, "split", "Splitting lemma: quadratic form + minimal residual + witness");
    make(4, "minimal-model", "Alias of split, read as a minimal model computation");
    Sub& stab = make(5, "stabilize", "Thom-Sebastiani sum with a quadratic form");
    stab.cmd->add_option("--quad", stab.quads, "Quadratic form: empty|std:N|diag:...|mat:...")
        ->type_size(1)
        ->allow_extra_args(false);
    make(6, "ts-sum", "External Thom-Sebastiani sum of two pairs");
    make(7, "invariants", "Full stable-invariant report");
    Sub& cmp = make(8, "stable-compare", "Compare stable invariants of two pairs");
    cmp.cmd->add_option("--preset", cmp.preset, "Built-in fixture: cubic-pair");
    Sub& vw = make(9, "verify-witness", "Check a claimed stable equivalence witness");
    vw.cmd->add_option("--quad", vw.quads, "Acting forms, one per side (twice)")
        ->type_size(1)
        ->allow_extra_args(false);
    vw.cmd->add_option("--map", vw.map_comps, "Witness components (repeat per variable)")
        ->type_size(1)
        ->allow_extra_args(false);
    vw.cmd->add_option("--map-vars", vw.map_vars, "Variable list for the witness components");
    vw.cmd->add_option("--preset", vw.preset, "Built-in fixture: cubic-pair");
    Sub& vi = make(10, "verify-isotopy", "Verify a one-parameter family against a potential");
    vi.cmd->add_option("--family", vi.family,
                       "Family components in the declared variables plus t (one per variable)")
        ->type_size(1)
        ->allow_extra_args(false);
    vi.cmd->add_option("--preset", vi.preset, "Built-in fixture: quartic-isotopy");
    Sub& df = make(11, "det-family", "Determinant of a polynomial matrix family", false);
    df.cmd->add_option("--matrix", df.matrix, "Entries in t: rows ';', cells ','");
    df.cmd->add_option("--preset", df.preset, "Built-in fixture: hyperbolic-3cycle");
    df.cmd->add_option("--at", df.at, "Also specialize at a rational parameter value");
    Sub& gw = make(12, "gw-class", "Stable (GW) class of a quadratic form", false);
    gw.cmd->add_option("--quad", gw.quads, "Quadratic form: empty|std:N|diag:...|mat:...")
        ->type_size(1)
        ->allow_extra_args(false);

    const char* names[] = {"milnor",     "tjurina",        "behrend",       "split",
                           "minimal-model", "stabilize",   "ts-sum",        "invariants",
                           "stable-compare", "verify-witness", "verify-isotopy", "det-family",
                           "gw-class"};

    CLI11_PARSE(app, argc, argv);

    if (!batch_file.empty()) {
        RunResult r = critforge::cli::run_batch(batch_file);
        std::fputs(r.output.c_str(), stdout);
        return r.exit_code;
    }

    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!subs[i].cmd->parsed()) continue;
        JobSpec job = to_job(names[i], subs[i].opts);
        job.quad_specs = subs[i].quads;
        job.map_comps = subs[i].map_comps;
        if (!subs[i].map_vars.empty())
            job.map_vars = critforge::parse_variable_list(subs[i].map_vars);
        job.family_comps = subs[i].family;
        job.matrix_spec = subs[i].matrix;
        job.preset = subs[i].preset;
        if (!subs[i].at.empty()) job.at_value = subs[i].at;
        job.compare_conventions = subs[i].compare;
        RunResult r = critforge::cli::run_job(job);
        std::fputs(r.output.c_str(), stdout);
        return r.exit_code;
    }

    std::fputs(app.help().c_str(), stdout);
    return 1;
}
