#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the installed binary through the shell; env prefixes work as
// plain assignments before the quoted path.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string out_path = "/tmp/mckay_cli_stdout.txt";
    const std::string err_path = "/tmp/mckay_cli_stderr.txt";
    std::string cmd = env_prefix + (env_prefix.empty() ? "" : " ") + "\"" MCKAY_CLI_PATH "\" " +
                      args + " > " + out_path + " 2> " + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

}  // namespace

TEST_CASE("cli: prop1 exit codes and table output") {
    RunResult ok = run_cli("prop1 --max-n 3");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("command: prop1") != std::string::npos);
    CHECK(ok.out.find("symbols_rank_2") != std::string::npos);
    CHECK(ok.out.find("overall: PASS") != std::string::npos);

    CHECK(run_cli("prop1 --max-n 1").exit_code == 2);
    RunResult high = run_cli("prop1 --max-n 17");
    CHECK(high.exit_code == 2);
    CHECK(high.err.find("usage error") != std::string::npos);
}

TEST_CASE("cli: count json and csv formats") {
    RunResult js = run_cli("count --n 2 --format json");
    CHECK(js.exit_code == 0);
    auto j = nlohmann::json::parse(js.out);
    CHECK(j["command"] == "count");
    CHECK(j["parameters"]["n"] == "2");
    CHECK(j["parameters"]["mode"] == "enumerate");
    CHECK(j["pass"] == true);
    for (const auto& check : j["checks"]) CHECK(check["pass"] == true);
    CHECK(j["table"]["header"][0] == "m");

    RunResult csv = run_cli("count --n 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out == "m,classes\n0,4\n1,2\n2,1\n3,1\n");

    RunResult formula = run_cli("count --n 16 --mode formula");
    CHECK(formula.exit_code == 0);
    CHECK(formula.out.find("131072") != std::string::npos);

    CHECK(run_cli("count --n 13").exit_code == 2);
    CHECK(run_cli("count --n 2 --mode bogus").exit_code == 2);
    CHECK(run_cli("count --n 2 --format xml").exit_code == 2);
}

TEST_CASE("cli: sylow ranges") {
    RunResult brute = run_cli("sylow --n 3 --brute");
    CHECK(brute.exit_code == 0);
    CHECK(brute.out.find("commutator_quotient") != std::string::npos);
    CHECK(brute.out.find("16") != std::string::npos);

    RunResult big = run_cli("sylow --n 12");
    CHECK(big.exit_code == 0);
    CHECK(big.out.find("8192") != std::string::npos);

    CHECK(run_cli("sylow --n 5 --brute").exit_code == 2);
}

TEST_CASE("cli: oracle gating and failure path") {
    RunResult ok = run_cli("oracle sp4f2 --jobs 2");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("720") != std::string::npos);
    CHECK(ok.out.find("normalizer_equals_sylow") != std::string::npos);

    RunResult gated = run_cli("oracle sp6f2");
    CHECK(gated.exit_code == 2);
    CHECK(gated.err.find("confirm-large") != std::string::npos);

    CHECK(run_cli("oracle sp8f2").exit_code == 2);

    RunResult starved = run_cli("oracle sp4f2", "MCKAY_MEM_CAP_MB=0");
    CHECK(starved.exit_code == 1);
    CHECK(starved.err.find("error:") != std::string::npos);
}

TEST_CASE("cli: sp4 reports are byte-stable") {
    RunResult first = run_cli("sp4 --q 4 --ell 17 --format json");
    RunResult second = run_cli("sp4 --q 4 --ell 17 --format json");
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
    auto j = nlohmann::json::parse(first.out);
    CHECK(j["parameters"]["e"] == "4");
    CHECK(j["pass"] == true);

    RunResult split = run_cli("sp4 --q 4 --ell 3");
    CHECK(split.exit_code == 0);
    CHECK(split.out.find("72") != std::string::npos);

    CHECK(run_cli("sp4 --q 4 --ell 2").exit_code == 2);
    CHECK(run_cli("sp4 --q 6 --ell 5").exit_code == 2);
    CHECK(run_cli("sp4 --q 4 --ell 7").exit_code == 2);
}

TEST_CASE("cli: top-level usage") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("unknown-subcommand").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}
