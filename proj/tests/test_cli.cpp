#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(FRIEZE_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = "/tmp/frieze_cli_test_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const std::string a2 = write_temp("a2.json", R"({"n": 2, "arrows": [[2,1,1]]})");
const std::string kron = write_temp("kron.json", R"({"n": 2, "arrows": [[2,1,2]]})");
const std::string at2 = write_temp("at2.json", R"({"n": 3, "arrows": [[2,1,1],[3,1,1],[3,2,1]]})");
const std::string cyclic = write_temp("cyc.json", R"({"n": 3, "arrows": [[1,2,1],[2,3,1],[3,1,1]]})");

}  // namespace

TEST_CASE("orbit dumps JSON lines and repeats for A2") {
    RunResult r = run("orbit --quiver " + a2 + " --start 1,1 --steps 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "[\"1\",\"1\"]\n[\"2\",\"3\"]\n[\"2\",\"1\"]\n[\"1\",\"2\"]\n[\"3\",\"2\"]\n"
          "[\"1\",\"1\"]\n");
}

TEST_CASE("orbit with a zero start coordinate exits 2") {
    RunResult r = run("orbit --quiver " + a2 + " --start 0,1 --steps 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("non-invariant function exits 3") {
    RunResult r = run("invariant --quiver " + kron + " --h x1 --start 1,1 --k-max 4");
    CHECK(r.exit_code == 3);
}

TEST_CASE("invalid input exits 1") {
    CHECK(run("orbit --quiver " + cyclic + " --start 1,1,1 --steps 1").exit_code == 1);
    CHECK(run("orbit --quiver /tmp/does_not_exist_frieze.json --start 1 --steps 1").exit_code ==
          1);
    CHECK(run("invariant --quiver " + kron + " --h 'x1+' --start 1,1").exit_code == 1);
    CHECK(run("nonsense").exit_code == 1);
}

TEST_CASE("bit budget from the environment exits 3") {
    RunResult r = run("orbit --quiver " + kron + " --start 1,1 --steps 400",
                      "FRIEZE_BUDGET_BITS=64");
    CHECK(r.exit_code == 3);
    // An explicit flag overrides the environment.
    RunResult ok = run("orbit --quiver " + kron + " --start 1,1 --steps 10 --bit-budget 10000",
                       "FRIEZE_BUDGET_BITS=64");
    CHECK(ok.exit_code == 0);
}

TEST_CASE("classify") {
    RunResult r = run("classify --quiver " + kron);
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"kind\":\"tame\",\"diagram\":\"Kronecker\"}\n");
}

TEST_CASE("components output is deterministic byte for byte") {
    std::string cmd = "components --quiver " + at2 + " --start 1,1,1 --degree 2 --m-max 6";
    RunResult first = run(cmd);
    RunResult second = run(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("\"m\":2") != std::string::npos);
    CHECK(first.out.find("\"verified_cycle\":true") != std::string::npos);
}

TEST_CASE("vanish with offset and stride samples one residue class") {
    RunResult r = run("vanish --quiver " + at2 +
                      " --start 1,1,1 --degree 2 --offset 1 --stride 2 --pretty");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("x1 - 3*x2 + x3") != std::string::npos);
}

TEST_CASE("vanish reports a zero kernel for the wild triple Kronecker") {
    std::string triple = write_temp("triple.json", R"({"n": 2, "arrows": [[2,1,3]]})");
    RunResult r = run("vanish --quiver " + triple + " --start 1,1 --degree 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"kernel_dim\":0") != std::string::npos);
    CHECK(r.out.find("\"stabilized\":true") != std::string::npos);
}

TEST_CASE("reproduce: every case passes") {
    for (const std::string name : {"a2", "kronecker", "a3double", "atilde2", "qa5"}) {
        RunResult r = run("reproduce " + name);
        CHECK_MESSAGE(r.exit_code == 0, "case ", name);
        CHECK(r.out.find("\"pass\":true") != std::string::npos);
    }
    for (const std::string n : {"3", "4"}) {
        RunResult r = run("reproduce atilden --n " + n);
        CHECK_MESSAGE(r.exit_code == 0, "atilden --n ", n);
    }
    CHECK(run("reproduce unknown_case").exit_code == 1);
}

TEST_CASE("quiver subcommand normalizes and relabels") {
    std::string flipped = write_temp("flip.json", R"({"n": 2, "arrows": [[1,2,1]]})");
    RunResult r = run("quiver --quiver " + flipped);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[[2,1,1]]") != std::string::npos);
}
