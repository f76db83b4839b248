#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs a shell command, capturing stdout (stderr discarded).
RunResult run(const std::string& args) {
    std::string cmd = std::string(CHEVALLEY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

const std::string kFixtures = std::string(CHEVALLEY_DATA_DIR) + "/named_examples.txt";

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("classify against the pinned spec commands") {
    auto r = run("classify --type C --rank 2 --field deg=2,r1=2,r2=0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "outcome       not_solitary"));
    CHECK(contains(r.out, "Sp(1,1) at real places v0 and v1"));

    auto a2 = run("classify --type A --rank 2 --field deg=1,r1=1,r2=0");
    CHECK(a2.exit_code == 0);
    CHECK(contains(a2.out, "solitary_or_not_grothendieck_rigid"));

    auto f4 = run("classify --type F --rank 4 --field deg=1,r1=1,r2=0");
    CHECK(f4.exit_code == 0);
    CHECK(contains(f4.out, "csp_conditional"));
}

TEST_CASE("fsp and kerb subcommands") {
    auto fsp = run("fsp --type B --rank 3 --field deg=1,r1=1,r2=0");
    CHECK(fsp.exit_code == 0);
    CHECK(contains(fsp.out, "false"));

    auto kerb = run("kerb --type C --rank 2 --field deg=3,r1=3,r2=0");
    CHECK(kerb.exit_code == 0);
    CHECK(contains(kerb.out, "total_count        4"));
    CHECK(contains(kerb.out, "nontrivial_count   3"));
}

TEST_CASE("witness subcommand") {
    auto w = run("witness --type B --rank 5 --field deg=1,r1=1,r2=0");
    CHECK(w.exit_code == 0);
    CHECK(contains(w.out, "Spin(2,9)"));
    auto none = run("witness --type A --rank 2 --field deg=1,r1=1,r2=0");
    CHECK(none.exit_code == 0);
    CHECK(contains(none.out, "only not_solitary verdicts carry a witness"));
}

TEST_CASE("qform-check subcommand") {
    auto r = run("qform-check 1,1,1,1 -1,-1,-1,-1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "finite-isometric: true"));
    CHECK(contains(r.out, "real-isometric:   false"));
    CHECK(contains(r.out, "p=2"));
}

TEST_CASE("crossval subcommand") {
    auto r = run("crossval --type C --rank 2 --field deg=2,r1=2,r2=0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "agree         true"));
}

TEST_CASE("examples harness exit codes") {
    auto ok = run("examples --fixtures " + kFixtures);
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "passed 29 of 29"));

    const std::string tampered = std::string(CHEVALLEY_TMP_DIR) + "/tampered_examples.txt";
    {
        std::ofstream f(tampered);
        f << "Sp_2(Z[sqrt2]);C;2;deg=2,r1=2,r2=0;solitary_or_ngr\n";
    }
    auto bad = run("examples --fixtures " + tampered);
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.out, "FAIL Sp_2(Z[sqrt2])"));

    const std::string empty = std::string(CHEVALLEY_TMP_DIR) + "/empty_examples.txt";
    { std::ofstream f(empty); }
    CHECK(run("examples --fixtures " + empty).exit_code == 3);
    CHECK(run("examples --fixtures /nonexistent/file.txt").exit_code == 3);
}

TEST_CASE("argument errors exit with code 2") {
    CHECK(run("classify --type C --rank 2").exit_code == 2);                     // missing field
    CHECK(run("classify --type C --rank 2 --field deg=2,r1=3,r2=0").exit_code == 2);
    CHECK(run("classify --type X --rank 2 --field deg=1,r1=1,r2=0").exit_code == 2);
    CHECK(run("classify --type B --rank 1 --field deg=1,r1=1,r2=0").exit_code == 2);
    CHECK(run("qform-check 1,0 1,1").exit_code == 2);
    CHECK(run("--policy-a1 sometimes classify --type C --rank 2 --field deg=1,r1=1,r2=0")
              .exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("json output is byte-identical across runs") {
    std::string cmd = "--json classify --type D --rank 5 --field deg=2,r1=2,r2=0";
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "\"outcome\": \"not_solitary\""));

    auto ex = run("--json examples --fixtures " + kFixtures);
    CHECK(ex.exit_code == 0);
    CHECK(ex.out == run("--json examples --fixtures " + kFixtures).out);
}

TEST_CASE("policies flow through the CLI") {
    auto t = run("--policy-f4 true classify --type F --rank 4 --field deg=1,r1=1,r2=0");
    CHECK(contains(t.out, "not_solitary"));
    auto f = run("--policy-f4 false classify --type F --rank 4 --field deg=1,r1=1,r2=0");
    CHECK(contains(f.out, "solitary_or_not_grothendieck_rigid"));
}

TEST_CASE("golden bytes for table and json output") {
    auto table = run("classify --type C --rank 2 --field deg=2,r1=2,r2=0");
    CHECK(table.out ==
          "type          C2\n"
          "field         deg=2,r1=2,r2=0 signature (2,0)\n"
          "fsp           false\n"
          "outcome       not_solitary\n"
          "witness       Sp(1,1) at real places v0 and v1, split at all other places\n"
          "assumptions   (none)\n"
          "ker_b_count   2\n"
          "ker_g_count   2\n");

    auto json = run("--json fsp --type B --rank 3 --field deg=1,r1=1,r2=0");
    CHECK(json.out ==
          "{\n"
          "  \"field\": \"deg=1,r1=1,r2=0\",\n"
          "  \"fsp\": false,\n"
          "  \"rank\": 3,\n"
          "  \"type\": \"B\"\n"
          "}\n");
}

TEST_CASE("undecided local determinacy prints the actionable hint") {
    auto r = run("classify --type C --rank 3 --field deg=8,r1=4,r2=2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "outside_theorems"));
    CHECK(contains(r.out, "local determinacy undecided"));
    CHECK(contains(r.out, "set ld=yes or ld=no on the field profile"));
}
