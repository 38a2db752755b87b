#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

#include "jobspec.hpp"
#include "support/schema_check.hpp"

using namespace critforge;
using critforge::cli::JobSpec;
using critforge::cli::RunResult;
using critforge::cli::run_batch;
using critforge::cli::run_job;
using nlohmann::json;

namespace {

JobSpec base(const std::string& command) {
    JobSpec job;
    job.command = command;
    job.json = true;
    return job;
}

const critforge::testing::SchemaChecker& schema() {
    static critforge::testing::SchemaChecker checker(CRITFORGE_SCHEMA_PATH);
    return checker;
}

json run_checked(const JobSpec& job, int expect_code) {
    RunResult r = run_job(job);
    CHECK(r.exit_code == expect_code);
    json report = json::parse(r.output);
    std::string why;
    const bool valid = schema().validate_report(report, why);
    INFO(why);
    CHECK(valid);
    return report;
}

} // namespace

TEST_CASE("milnor command: golden value, schema, exit code") {
    JobSpec job = base("milnor");
    job.inputs = {{{"x", "y"}, "x^3 + y^4"}};
    json rep = run_checked(job, 0);
    CHECK(rep["result"]["mu"] == 6);
    CHECK(rep["result"]["tjurina"] == 6);
    CHECK(rep["result"]["hilbert"] == json::array({1, 2, 2, 1}));
    CHECK(rep["status"] == "ok");
}

TEST_CASE("milnor exits 2 on non-isolated input") {
    JobSpec job = base("milnor");
    job.inputs = {{{"x", "y"}, "x^2*y"}};
    json rep = run_checked(job, 2);
    CHECK(rep["status"] == "inconclusive");
    CHECK(rep["result"]["mu"].is_null());
}

TEST_CASE("usage and parse errors exit 1") {
    JobSpec job = base("milnor");
    job.inputs = {{{"x"}, "2x"}};
    RunResult r = run_job(job);
    CHECK(r.exit_code == 1);
    json rep = json::parse(r.output);
    CHECK(rep["status"] == "error");
    CHECK(rep["error"]["code"] == "parse-error");

    JobSpec no_inputs = base("milnor");
    CHECK(run_job(no_inputs).exit_code == 1);

    JobSpec bad_order = base("milnor");
    bad_order.inputs = {{{"x"}, "x^2"}};
    bad_order.order = 1;
    CHECK(run_job(bad_order).exit_code == 1);
}

TEST_CASE("identical inputs produce byte-identical outputs") {
    JobSpec job = base("invariants");
    job.inputs = {{{"x", "y"}, "x^3 + y^4"}};
    RunResult a = run_job(job);
    RunResult b = run_job(job);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());

    std::string why;
    json rep = json::parse(a.output);
    CHECK(schema().validate_report(rep, why));
}

TEST_CASE("split command reports a verified witness") {
    JobSpec job = base("split");
    job.inputs = {{{"x", "y"}, "x^3 + y^2"}};
    json rep = run_checked(job, 0);
    CHECK(rep["result"]["corank"] == 1);
    CHECK(rep["result"]["rank"] == 1);
    CHECK(rep["result"]["verified"] == true);
    CHECK(rep["result"]["residual"]["expr"] == "x^3");

    JobSpec mm = base("minimal-model");
    mm.inputs = job.inputs;
    json rep2 = run_checked(mm, 0);
    CHECK(rep2["result"]["residual"] == rep["result"]["residual"]);
}

TEST_CASE("stable-compare presets and values") {
    JobSpec job = base("stable-compare");
    job.inputs = {{{"x"}, "x^3"}, {{"x", "y"}, "x^3 + y^2"}};
    json rep = run_checked(job, 0);
    CHECK(rep["result"]["consistent"] == true);

    JobSpec preset = base("stable-compare");
    preset.preset = "cubic-pair";
    json rep2 = run_checked(preset, 0);
    CHECK(rep2["result"]["consistent"] == true);

    JobSpec distinct = base("stable-compare");
    distinct.inputs = {{{"x"}, "x^3"}, {{"x"}, "x^4"}};
    json rep3 = run_checked(distinct, 0);
    CHECK(rep3["result"]["consistent"] == false);
    CHECK(rep3["result"]["invariant"] == "mu");

    // Non-isolated input is inconclusive, exit 2.
    JobSpec bad = base("stable-compare");
    bad.inputs = {{{"x", "y"}, "x^2*y"}, {{"x"}, "x^2"}};
    RunResult r = run_job(bad);
    CHECK(r.exit_code == 2);
    CHECK(json::parse(r.output)["error"]["code"] == "non-isolated");
}

TEST_CASE("verify-witness command") {
    JobSpec job = base("verify-witness");
    job.preset = "cubic-pair";
    json rep = run_checked(job, 0);
    CHECK(rep["result"]["verified"] == true);

    JobSpec corrupt = base("verify-witness");
    corrupt.inputs = {{{"x"}, "x^3"}, {{"x", "y"}, "x^3 + y^2"}};
    corrupt.quad_specs = {"std:1", "empty"};
    corrupt.map_vars = {"x", "y"};
    corrupt.map_comps = {"x + y^2", "y"};
    json rep2 = run_checked(corrupt, 0);
    CHECK(rep2["result"]["verified"] == false);
}

TEST_CASE("verify-isotopy fixture and polynomial families") {
    JobSpec job = base("verify-isotopy");
    job.preset = "quartic-isotopy";
    job.order = 16;
    json rep = run_checked(job, 0);
    CHECK(rep["result"]["all_passed"] == true);

    JobSpec stretch = base("verify-isotopy");
    stretch.inputs = {{{"x"}, "x^2"}};
    stretch.family_comps = {"x + t*x"};
    stretch.order = 6;
    json rep2 = run_checked(stretch, 0);
    CHECK(rep2["result"]["function_preserved"] == false);
    CHECK(rep2["result"]["starts_at_identity"] == true);
}

TEST_CASE("det-family fixture") {
    JobSpec job = base("det-family");
    job.preset = "hyperbolic-3cycle";
    job.at_value = "1";
    json rep = run_checked(job, 0);
    CHECK(rep["result"]["det"] == "1");
    CHECK(rep["result"]["det_is_one"] == true);
    CHECK(rep["result"]["at"]["matrix"] ==
          json::array({json::array({"0", "1", "0"}), json::array({"0", "0", "1"}),
                       json::array({"1", "0", "0"})}));

    JobSpec manual = base("det-family");
    manual.matrix_spec = "t, 0; 0, 1";
    json rep2 = run_checked(manual, 0);
    CHECK(rep2["result"]["det"] == "t");
}

TEST_CASE("gw-class command and C-formal mode") {
    JobSpec job = base("gw-class");
    job.quad_specs = {"diag:2,3"};
    json rep = run_checked(job, 0);
    CHECK(rep["result"]["gw"]["disc"] == "6");
    CHECK(rep["result"]["witt_hyperbolic_pairs"].is_null());

    JobSpec cf = base("gw-class");
    cf.quad_specs = {"mat:0,1;1,0"};
    cf.mode = Mode::CFormal;
    json rep2 = run_checked(cf, 0);
    CHECK(rep2["result"]["gw"]["disc"] == "1");
    CHECK(rep2["result"]["gw"]["rank"] == 2);

    JobSpec degenerate = base("gw-class");
    degenerate.quad_specs = {"mat:1,1;1,1"};
    RunResult r = run_job(degenerate);
    CHECK(r.exit_code == 1);
}

TEST_CASE("stabilize and ts-sum commands") {
    JobSpec job = base("stabilize");
    job.inputs = {{{"x"}, "x^3"}};
    job.quad_specs = {"std:1"};
    json rep = run_checked(job, 0);
    CHECK(rep["result"]["pair"]["expr"] == "q1^2 + x^3"); // graded-lex order
    CHECK(rep["result"]["action"]["rank"] == 1);

    JobSpec sum = base("ts-sum");
    sum.inputs = {{{"x"}, "x^3"}, {{"x"}, "x^3"}};
    json rep2 = run_checked(sum, 0);
    CHECK(rep2["result"]["pair"]["vars"] == json::array({"x", "x_2"}));
}

TEST_CASE("behrend with convention comparison") {
    JobSpec job = base("behrend");
    job.inputs = {{{"x"}, "x^3"}};
    job.compare_conventions = true;
    json rep = run_checked(job, 0);
    CHECK(rep["result"]["nu"] == 2);
    CHECK(rep["result"]["conventions"]["canonical"] == 2);
    CHECK(rep["result"]["conventions"]["alt_perverse"] == -2);
}

TEST_CASE("batch runs jobs concurrently with ordered output") {
    const char* path = "critforge_batch_test.jsonl";
    {
        std::ofstream out(path);
        out << R"({"command":"milnor","inputs":[{"vars":["x"],"expr":"x^3"}]})" << "\n";
        out << R"({"command":"milnor","inputs":[{"vars":["x","y"],"expr":"x^3 + y^4"}]})"
            << "\n";
        out << R"({"command":"gw-class","quads":["std:2"]})" << "\n";
    }
    RunResult r = run_batch(path);
    std::remove(path);
    CHECK(r.exit_code == 0);

    std::istringstream lines(r.output);
    std::string line;
    std::vector<json> reports;
    while (std::getline(lines, line)) reports.push_back(json::parse(line));
    REQUIRE(reports.size() == 3);
    CHECK(reports[0]["result"]["mu"] == 2);
    CHECK(reports[1]["result"]["mu"] == 6);
    CHECK(reports[2]["result"]["gw"]["rank"] == 2);
    for (const auto& rep : reports) {
        std::string why;
        CHECK(schema().validate_report(rep, why));
    }

    // Exit code is the max across jobs.
    {
        std::ofstream out(path);
        out << R"({"command":"milnor","inputs":[{"vars":["x"],"expr":"x^3"}]})" << "\n";
        out << R"({"command":"milnor","inputs":[{"vars":["x","y"],"expr":"x^2*y"}],"cap":16})"
            << "\n";
    }
    RunResult r2 = run_batch(path);
    std::remove(path);
    CHECK(r2.exit_code == 2);
}

#ifdef CRITFORGE_TOOL_PATH
TEST_CASE("CRITFORGE_MAX_CELLS caps jet matrices through the binary") {
    const std::string cmd = std::string("CRITFORGE_MAX_CELLS=100 ") + CRITFORGE_TOOL_PATH +
                            " milnor --vars x,y \"x^3 + y^4\" --json"
                            " > critforge_cells_test.json 2>&1";
    const int raw = std::system(cmd.c_str());
    CHECK(WIFEXITED(raw));
    CHECK(WEXITSTATUS(raw) == 1);
    std::ifstream in("critforge_cells_test.json");
    json rep;
    in >> rep;
    std::remove("critforge_cells_test.json");
    CHECK(rep["status"] == "error");
    CHECK(rep["error"]["code"] == "resource-limit");
}
#endif

TEST_CASE("contract violations map to exit 3") {
    // Unknown command is usage (1); internal contract breaks are 3. Forcing
    // a genuine contract violation from the outside is not possible through
    // valid inputs, so only the mapping of the unknown command is checked
    // here; the 3-path is covered by the error-code mapper directly.
    JobSpec job = base("no-such-command");
    CHECK(run_job(job).exit_code == 1);
}
