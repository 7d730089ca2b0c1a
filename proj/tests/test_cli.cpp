#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(BDSA_CLI_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[512];
    while (fgets(buffer, sizeof buffer, pipe)) output += buffer;
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "bdsa_cli_tests";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream out(path);
    out << text;
    return path;
}

}  // namespace

TEST_CASE("check subcommand") {
    auto f1 = write_temp("f1.bds", fixtures::kLoop);
    RunResult l = run_cli("check " + f1.string() + " l");
    CHECK(l.exit_code == 0);
    CHECK(l.output == "Condition (L): FAILS; cycle word=x base=a\n");

    auto f5 = write_temp("f5.bds", fixtures::kLoopExit);
    RunResult simple = run_cli("check " + f5.string() + " simple --method all");
    CHECK(simple.exit_code == 0);
    CHECK(simple.output == "simple: NO (not minimal; saturated hereditary ideal top={b})\n");

    RunResult k = run_cli("check " + f5.string() + " k --method all");
    CHECK(k.exit_code == 0);
    CHECK(k.output.find("Condition (K): FAILS") == 0);

    RunResult minimal = run_cli("check " + write_temp("f2.bds", fixtures::kO2).string() +
                                " minimal --method all");
    CHECK(minimal.exit_code == 0);
    CHECK(minimal.output == "minimal: YES\n");
}

TEST_CASE("invalid input exits with 2") {
    auto bad = write_temp("bad.bds", "atoms a b\nlabels x\nact x a = {a,c}\n");
    RunResult r = run_cli("check " + bad.string() + " l");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 3: UnknownAtom c") != std::string::npos);

    auto too_small = write_temp("small.bds", "atoms a b\nlabels x\nact x a = {b}\nideal x = {a}\n");
    CHECK(run_cli("validate " + too_small.string()).exit_code == 2);
}

TEST_CASE("validate, report and graph subcommands") {
    auto f2 = write_temp("f2.bds", fixtures::kO2);
    RunResult v = run_cli("validate " + f2.string());
    CHECK(v.exit_code == 0);
    CHECK(v.output.find("ok:") == 0);

    RunResult rep = run_cli("report " + f2.string());
    CHECK(rep.exit_code == 0);
    CHECK(rep.output.find("simple: YES") != std::string::npos);
    CHECK(rep.output.find("gauge-invariant ideal pairs (2)") != std::string::npos);

    RunResult js = run_cli("report " + f2.string() + " --json");
    CHECK(js.exit_code == 0);
    CHECK(js.output.find("\"schemaVersion\": 1") != std::string::npos);
    CHECK(js.output.find("\"satHereditaryIdeals\": 2") != std::string::npos);
    CHECK(js.output.find("\"maximalTails\": 1") != std::string::npos);
    CHECK(js.output.find("\"gaugePairs\": 2") != std::string::npos);
    CHECK(js.output.find("\"conditionL\": true") != std::string::npos);
    CHECK(js.output.find("\"conditionK\": true") != std::string::npos);
    CHECK(js.output.find("\"minimal\": true") != std::string::npos);
    CHECK(js.output.find("\"simple\": true") != std::string::npos);

    // Relative instances refuse the simplicity verdict but report the rest.
    auto relative = write_temp("relative.bds", std::string(fixtures::kO2) + "J = {}\n");
    RunResult rel = run_cli("report " + relative.string());
    CHECK(rel.exit_code == 0);
    CHECK(rel.output.find("simple: REFUSED (RelativeJNotSupported") != std::string::npos);
    RunResult relj = run_cli("report " + relative.string() + " --json");
    CHECK(relj.output.find("\"simple\": null") != std::string::npos);
    // Byte-stable across repeated runs and thread counts.
    CHECK(run_cli("report " + f2.string() + " --json").output == js.output);
    CHECK(run_cli("report " + f2.string() + " --json --threads 4").output == js.output);

    auto f4 = write_temp("f4.bds", fixtures::kTwoLoops);
    RunResult f4json = run_cli("report " + f4.string() + " --json");
    CHECK(f4json.output.find("\"satHereditaryIdeals\": 4") != std::string::npos);
    CHECK(f4json.output.find("\"maximalTails\": 2") != std::string::npos);
    CHECK(f4json.output.find("\"simple\": false") != std::string::npos);

    auto degenerate = write_temp("empty.bds", "atoms\nlabels\n");
    RunResult dj = run_cli("report " + degenerate.string() + " --json");
    CHECK(dj.exit_code == 0);
    CHECK(dj.output.find("\"degenerate\": true") != std::string::npos);
    CHECK(dj.output.find("\"minimal\": true") != std::string::npos);

    RunResult dot = run_cli("graph " + write_temp("f1.bds", fixtures::kLoop).string() + " --dot -");
    CHECK(dot.exit_code == 0);
    CHECK(dot.output.find("\"a\" -> \"a\" [label=\"x\"];") != std::string::npos);
}

TEST_CASE("quotient and bprime subcommands") {
    auto f5 = write_temp("f5.bds", fixtures::kLoopExit);
    RunResult q = run_cli("quotient " + f5.string() + " --top {b}");
    CHECK(q.exit_code == 0);
    CHECK(q.output == "atoms a\nlabels x y\nact x a = {a}\n");

    RunResult bad = run_cli("quotient " + f5.string() + " --top {a}");
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("NotHereditary") != std::string::npos);

    auto f1j = write_temp("f1j.bds", std::string(fixtures::kLoop) + "J = {}\n");
    RunResult bp = run_cli("bprime " + f1j.string());
    CHECK(bp.exit_code == 0);
    CHECK(bp.output.find("# a : pair(a)") != std::string::npos);
    CHECK(bp.output.find("# a_dft : defect(a)") != std::string::npos);
    CHECK(bp.output.find("act x a = {a,a_dft}") != std::string::npos);
}

TEST_CASE("crosscheck exit codes") {
    RunResult clean = run_cli("crosscheck --seed 1 --count 1");
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.find("0 core disagreements") != std::string::npos);

    // Seed 2 hides its only exit-free cycle behind an empty J, so the
    // verbatim transfer check disagrees by design (THEORY.md).
    RunResult known = run_cli("crosscheck --seed 2 --count 1");
    CHECK(known.exit_code == 3);
    CHECK(known.output.find("verbatim (L)-transfer") != std::string::npos);
    CHECK(known.output.find("act x b = {b}") != std::string::npos);
}

TEST_CASE("gen and ideals subcommands") {
    RunResult g1 = run_cli("gen --seed 1 --atoms 3 --labels 2");
    RunResult g2 = run_cli("gen --seed 1 --atoms 3 --labels 2");
    CHECK(g1.exit_code == 0);
    CHECK(g1.output == g2.output);
    CHECK(g1.output.find("atoms a b c") == 0);

    auto path = write_temp("gen.bds", g1.output);
    CHECK(run_cli("validate " + path.string()).exit_code == 0);

    auto f5 = write_temp("f5.bds", fixtures::kLoopExit);
    RunResult ideals = run_cli("ideals " + f5.string());
    CHECK(ideals.exit_code == 0);
    CHECK(ideals.output.find("{b} saturated J-saturated") != std::string::npos);

    RunResult tails = run_cli("tails " + f5.string());
    CHECK(tails.exit_code == 0);
    CHECK(tails.output.find("complement={b} cyclic base=a beta=x") != std::string::npos);

    RunResult gauge = run_cli("gauge-ideals " + f5.string());
    CHECK(gauge.exit_code == 0);
    CHECK(gauge.output.find("(H={b},S={a,b})") != std::string::npos);
}
