#ifndef CRITFORGE_TOOLS_JOBSPEC_HPP
#define CRITFORGE_TOOLS_JOBSPEC_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "critforge/quad_form.hpp"
#include "critforge/rational.hpp"

namespace critforge::cli {

/// One expression input with its declared, ordered variable list. The
/// declaration order fixes the monomial order and hence every canonical
/// form in the output.
struct ExprInput {
    std::vector<std::string> vars;
    std::string expr;
};

/// A fully described job: one command invocation. `run_job` is pure —
/// everything needed is in here, so batch files can run jobs concurrently.
struct JobSpec {
    std::string command;
    std::vector<ExprInput> inputs;
    unsigned order = 12;
    unsigned cap = 64;
    Mode mode = Mode::Q;
    bool json = false;

    std::vector<std::string> quad_specs;  // "std:N" | "diag:a,b" | "mat:r;r" | "empty"
    std::vector<std::string> map_comps;   // witness components
    std::vector<std::string> map_vars;    // witness variable declaration
    std::vector<std::string> family_comps;
    std::string matrix_spec;              // rows ';', entries ',' (polynomials in t)
    std::string preset;
    std::optional<std::string> at_value;  // rational parameter for det-family
    bool compare_conventions = false;     // behrend --compare
};

struct RunResult {
    int exit_code = 0;
    std::string output;
};

/// Exit codes: 0 success, 1 usage/parse/input error, 2 inconclusive,
/// 3 internal contract violation.
RunResult run_job(const JobSpec& job);

/// Runs one JSON job per line of `path` concurrently; output lines are in
/// input order and the exit code is the maximum over the jobs.
RunResult run_batch(const std::string& path);

QuadForm parse_quadform_spec(const std::string& spec);

} // namespace critforge::cli

#endif
