#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <sys/wait.h>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(LMG_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_file(const std::string& name, const std::string& text) {
    std::string path = "cli_" + name + ".lmg";
    std::ofstream f(path);
    f << text;
    return path;
}

} // namespace

TEST_CASE("classify") {
    std::string p = write_file("dag", "nodes: a b c\na -> b\nc -> b\n");
    RunResult r = run("classify " + p);
    CHECK(r.code == 0);
    CHECK(r.out.find("dag: yes") != std::string::npos);
    CHECK(r.out.find("ug: no") != std::string::npos);
    CHECK(r.out.find("mag: yes") != std::string::npos);
}

TEST_CASE("equiv exit codes") {
    std::string chain = write_file("chain", "nodes: a b c\na -> b\nb -> c\n");
    std::string rev = write_file("rev", "nodes: a b c\nb -> a\nc -> b\n");
    std::string vee = write_file("vee", "nodes: a b c\na -> b\nc -> b\n");
    for (const char* method : {"order", "paths", "oracle"}) {
        CHECK(run("equiv " + chain + " " + rev + " --method " + method).code == 0);
        CHECK(run("equiv " + chain + " " + vee + " --method " + method).code == 1);
    }
    RunResult w = run("equiv " + chain + " " + vee + " --witness");
    CHECK(w.code == 1);
    CHECK(w.out.find("witness:") != std::string::npos);
    CHECK(run("equiv " + chain + " missing.lmg").code == 2);
}

TEST_CASE("repr") {
    std::string c4 = write_file("c4", "nodes: a b c d\na -- b\nb -- c\nc -- d\nd -- a\n");
    RunResult r = run("repr " + c4 + " --as dag --explain");
    CHECK(r.code == 1);
    CHECK(r.out.find("impossible") != std::string::npos);
    CHECK(r.out.find("violated: NonChordal") != std::string::npos);
    CHECK(run("repr " + c4 + " --as ug").code == 0);
    CHECK(run("repr " + c4 + " --as nonsense").code == 2);
}

TEST_CASE("transform and verify") {
    std::string g = write_file("mix", "nodes: a b c d\na -- b\nb -> c\nc <-> d\n");
    RunResult t = run("transform " + g + " --to dag");
    CHECK(t.code == 0);
    CHECK(t.out == "nodes: a b c d\na -> b\nb -> c\nd -> c\n");
    RunResult logged = run("transform " + g + " --to dag --log");
    CHECK(logged.out.find("step 1:") != std::string::npos);

    std::string vee = write_file("vee2", "nodes: a b c\na -> b\nc -> b\n");
    CHECK(run("transform " + vee + " --to ug").code == 2);
    CHECK(run("transform " + vee + " --to ug --force").code == 0);

    CHECK(run("verify " + g + " --to dag").out == "PASS\n");
    CHECK(run("verify " + g + " --to dag").code == 0);
}

TEST_CASE("model output") {
    std::string chain = write_file("chain2", "nodes: i j k\ni -> k\nk -> j\n");
    RunResult r = run("model " + chain);
    CHECK(r.code == 0);
    CHECK(r.out == "i ⊥ j | k\n");
    RunResult capped = run("model " + chain + " --max-cond 0");
    CHECK(capped.out.empty());
}

TEST_CASE("parse errors exit 2") {
    std::string bad = write_file("bad", "nodes: a\na -- a\n");
    CHECK(run("model " + bad).code == 2);
    CHECK(run("nonsense").code == 2);
    CHECK(run("equiv onlyone.lmg").code == 2);
}

TEST_CASE("batch mode") {
    std::string a = write_file("b1", "nodes: a b\na -- b\n");
    std::string b = write_file("b2", "nodes: a b\na <-> b\n");
    RunResult r = run("classify " + a + " " + b + " --each");
    CHECK(r.code == 0);
    CHECK(r.out.find(a + ":") != std::string::npos);
    CHECK(r.out.find(b + ":") != std::string::npos);
    CHECK(run("classify " + a + " " + b).code == 2);
}
