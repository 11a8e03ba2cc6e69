// End-to-end checks of the command-line tool: exit-code semantics (0 pass,
// 1 invariant failure, 2 usage error), report content, and byte-level
// determinism.  The binary path is injected by the build; each invocation
// runs standalone with files in the test working directory.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#ifndef A2ZETA_CLI_PATH
#error "A2ZETA_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Runs the CLI with the given arguments, capturing stdout; stderr is
// discarded (it carries logs and timings, deliberately nondeterministic).
RunResult run(const std::string& args) {
    const std::string out_path = "cli_stdout_tmp.txt";
    const std::string cmd =
        std::string(A2ZETA_CLI_PATH) + " " + args + " > " + out_path + " 2> cli_stderr_tmp.txt";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    return r;
}

}  // namespace

TEST_CASE("local-check passes for small prime powers and rejects q=6") {
    for (int q : {2, 3}) {
        RunResult r = run("local-check --q " + std::to_string(q));
        CHECK(r.code == 0);
        CHECK(r.out.find("T * T' = identity") != std::string::npos);
        CHECK(r.out.find("local-check: PASS") != std::string::npos);
        CHECK(r.out.find("FAIL") == std::string::npos);
    }
    CHECK(run("local-check --q 6").code == 1);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("local-check").code == 2);                       // missing --q
    CHECK(run("local-check --q 99").code == 2);                // out of range
    CHECK(run("zeta --in no_such_file.json").code == 2);       // missing input
    CHECK(run("enumerate --in no_such_file.json --n-max 99").code == 2);
}

TEST_CASE("generate, validate, operators, zeta, enumerate pipeline") {
    RunResult gen = run("generate --q 2 --seed 0 --out cli_q2.json");
    REQUIRE(gen.code == 0);

    SECTION("generate is deterministic for a fixed seed") {
        RunResult again = run("generate --q 2 --seed 0 --out cli_q2_again.json");
        REQUIRE(again.code == 0);
        CHECK(slurp("cli_q2.json") == slurp("cli_q2_again.json"));
        std::remove("cli_q2_again.json");
    }

    SECTION("validate passes on the generated complex") {
        RunResult val = run("validate --in cli_q2.json");
        CHECK(val.code == 0);
        CHECK(val.out.find("violations: 0") != std::string::npos);
        CHECK(val.out.find("validate: PASS") != std::string::npos);
    }

    SECTION("validate reports violations and exits 1 on a broken complex") {
        // Drop the last chamber: every edge count and the global identity
        // break, and the violation list must say so.
        std::string text = slurp("cli_q2.json");
        const auto pos = text.rfind("    {");
        REQUIRE(pos != std::string::npos);
        const auto prev_bracket = text.rfind("},", pos);
        REQUIRE(prev_bracket != std::string::npos);
        std::string broken = text.substr(0, prev_bracket) + "}\n  ]\n}\n";
        std::ofstream("cli_q2_broken.json") << broken;
        RunResult val = run("validate --in cli_q2_broken.json");
        CHECK(val.code == 1);
        CHECK(val.out.find("validate: FAIL") != std::string::npos);
        CHECK(val.out.find("violations: 0") == std::string::npos);
        std::remove("cli_q2_broken.json");
    }

    SECTION("operators exports the expected matrix shapes") {
        RunResult ops = run("operators --in cli_q2.json --out cli_ops.json --n-max 3");
        REQUIRE(ops.code == 0);
        const std::string doc = slurp("cli_ops.json");
        CHECK(doc.find("\"T\"") != std::string::npos);
        CHECK(doc.find("\"L\"") != std::string::npos);
        CHECK(doc.find("\"pi1\"") != std::string::npos);
        CHECK(doc.find("\"pi2\"") != std::string::npos);
        CHECK(doc.find("\"rows\": 21") != std::string::npos);
        std::remove("cli_ops.json");
    }

    SECTION("zeta writes a deterministic report plus the referenced CSV") {
        RunResult z1 =
            run("zeta --in cli_q2.json --out cli_zr1.json --trace-csv cli_tr.csv --order 8");
        REQUIRE(z1.code == 0);
        RunResult z2 =
            run("zeta --in cli_q2.json --out cli_zr2.json --trace-csv cli_tr.csv --order 8");
        REQUIRE(z2.code == 0);
        CHECK(slurp("cli_zr1.json") == slurp("cli_zr2.json"));

        const std::string rep = slurp("cli_zr1.json");
        // Absent certificates are loud report content, not a failure exit.
        CHECK(rep.find("\"found\": false") != std::string::npos);
        CHECK(rep.find("\"reason\": \"no solution") != std::string::npos);
        CHECK(rep.find("\"claimed_degree\": \"9/2\"") != std::string::npos);
        CHECK(rep.find("\"trace_csv_ref\": \"cli_tr.csv\"") != std::string::npos);

        const std::string csv = slurp("cli_tr.csv");
        CHECK(csv.rfind("n,geodesic_sum,trace_T_n,gallery_sum,trace_L_n,match\n", 0) == 0);
        CHECK(csv.find("3,147,147,63/2,1323,no") != std::string::npos);
        std::remove("cli_zr1.json");
        std::remove("cli_zr2.json");
        std::remove("cli_tr.csv");
    }

    SECTION("enumerate emits the trace CSV to stdout") {
        RunResult en = run("enumerate --in cli_q2.json --n-max 6");
        REQUIRE(en.code == 0);
        CHECK(en.out.rfind("n,geodesic_sum,trace_T_n,gallery_sum,trace_L_n,match\n", 0) == 0);
        CHECK(en.out.find("6,12369,12369,4011/2,3005667,no") != std::string::npos);
    }

    std::remove("cli_q2.json");
}
