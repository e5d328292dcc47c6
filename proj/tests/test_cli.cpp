#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out; // stdout and stderr
};

Run hdatool(const std::string& args)
{
    const std::string cmd = std::string("\"") + HDATOOL_PATH + "\" " + args + " 2>&1";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
        r.out += buf.data();
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string data(const std::string& name)
{
    return std::string("\"") + HDA_TEST_DATA + "/" + name + "\"";
}

std::filesystem::path scratch()
{
    const auto dir = std::filesystem::temp_directory_path() / "hdatool_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool contains(const std::string& text, const std::string& part)
{
    return text.find(part) != std::string::npos;
}

} // namespace

TEST_CASE("validate")
{
    auto r = hdatool("validate " + data("torus_ts.json"));
    CHECK(r.code == 0);
    CHECK(r.out == "valid transition system: 1/2\n");

    r = hdatool("validate " + data("dangling.json"));
    CHECK(r.code == 1);
    CHECK(contains(r.out, "ghost"));

    r = hdatool("validate " + data("nonextensional.json"));
    CHECK(r.code == 1);
    CHECK(contains(r.out, "extensionality"));

    r = hdatool("validate " + data("point.json"));
    CHECK(r.code == 0);
    CHECK(r.out == "valid transition system: 1\n");
}

TEST_CASE("build")
{
    auto r = hdatool("build " + data("torus_ts.json") + " --relation " + data("torus_acyclic.json"));
    CHECK(r.code == 0);
    CHECK(r.out == "counts: 1/2/1\n");

    r = hdatool("build " + data("torus_ts.json") + " --relation " + data("torus_independence.json"));
    CHECK(r.out == "counts: 1/2/2\n");

    r = hdatool("build " + data("torus_ts.json") + " --relation " + data("empty_relation.json"));
    CHECK(r.out == "counts: 1/2\n");

    r = hdatool("build " + data("three_loop_ts.json") + " --relation " + data("three_loop_priority.json"));
    CHECK(r.out == "counts: 1/3/3/1\n");

    r = hdatool("build " + data("three_loop_ts.json") + " --relation " + data("three_loop_independence.json"));
    CHECK(r.out == "counts: 1/3/6/6\n");

    r = hdatool("build " + data("three_loop_ts.json") + " --relation " + data("three_loop_independence.json")
                + " --max-dim 2");
    CHECK(r.code == 2);

    // two relation sources at once
    r = hdatool("build " + data("three_loop_ts.json") + " --relation " + data("three_loop_cyclic.json"));
    CHECK(r.code == 2);

    r = hdatool("build " + data("nonextensional.json") + " --relation " + data("empty_relation.json"));
    CHECK(r.code == 1);
}

TEST_CASE("build writes a model that validates and analyses")
{
    const auto dir = scratch();
    const auto model = (dir / "model.json").string();
    auto r = hdatool("build " + data("torus_ts.json") + " --relation " + data("torus_acyclic.json") + " --out \""
                     + model + "\"");
    REQUIRE(r.code == 0);
    r = hdatool("validate \"" + model + "\"");
    CHECK(r.out == "valid HDA: 1/2/1\n");

    r = hdatool("language \"" + model + "\"");
    CHECK(r.code == 0);
    CHECK(r.out == "H0: Z\nH1: Z^2\nH2: Z\nHL0: [ 1 ]\nHL1: [ a, b ]\nHL2: [ a^b ]\n");

    r = hdatool("homology \"" + model + "\" --coeff q");
    CHECK(r.out == "H0: Q\nH1: Q^2\nH2: Q\n");

    const auto sym = (dir / "sym.json").string();
    r = hdatool("symmetrize \"" + model + "\" --out \"" + sym + "\"");
    CHECK(r.out == "counts: 1/2/2\n");
    r = hdatool("validate \"" + sym + "\"");
    CHECK(r.out == "valid HDA: 1/2/2\n");
    std::filesystem::remove_all(dir);
}

TEST_CASE("language of the hollow square")
{
    const auto r = hdatool("language " + data("hollow_square.json"));
    CHECK(r.code == 0);
    CHECK(r.out == "H0: Z\nH1: Z\nHL0: [ 1 ]\nHL1: (0)\n");
}

TEST_CASE("check-theorem")
{
    auto r = hdatool("check-theorem " + data("torus_ts.json") + " --relation " + data("torus_priority.json"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "theorem: holds"));
    CHECK(contains(r.out, "Q: Q_0=1 Q_1=2 Q_2=1"));

    r = hdatool("check-theorem " + data("three_loop_ts.json") + " --relation " + data("three_loop_priority.json"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "HL3: [ a^b^c ]"));

    r = hdatool("check-theorem " + data("three_loop_ts.json") + " --relation " + data("three_loop_cyclic.json"));
    CHECK(r.code == 2);
    CHECK(contains(r.out, "not acyclic"));

    r = hdatool("check-theorem " + data("torus_ts.json") + " --relation " + data("torus_independence.json"));
    CHECK(r.code == 2);
}

TEST_CASE("gen-relation")
{
    auto r = hdatool("gen-relation " + data("three_loop_ts.json") + " --relation " + data("three_loop_priority.json"));
    CHECK(r.code == 0);
    CHECK(contains(r.out, "\"acyclic\""));

    const auto a = hdatool("gen-relation " + data("three_loop_ts.json") + " --seed 7");
    const auto b = hdatool("gen-relation " + data("three_loop_ts.json") + " --seed 7");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    r = hdatool("gen-relation " + data("three_loop_ts.json"));
    CHECK(r.code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(hdatool("").code == 2);
    CHECK(hdatool("frobnicate").code == 2);
    CHECK(hdatool("validate /nonexistent/file.json").code == 2);
    CHECK(hdatool("homology " + data("torus_ts.json") + " --coeff r").code == 2);
    CHECK(hdatool("--help").code == 0);
}

TEST_CASE("the pipeline is byte-stable")
{
    const auto dir = scratch();
    auto pipeline = [&](const std::string& tag) {
        const auto rel = (dir / (tag + "_rel.json")).string();
        const auto model = (dir / (tag + "_model.json")).string();
        std::string out = hdatool("gen-relation " + data("three_loop_ts.json") + " --seed 3 --out \"" + rel + "\"").out;
        out += hdatool("build " + data("three_loop_ts.json") + " --relation \"" + rel + "\" --out \"" + model + "\"").out;
        out += hdatool("language \"" + model + "\"").out;
        return out + slurp(rel) + slurp(model);
    };
    const auto first = pipeline("one");
    CHECK(first == pipeline("two"));
    CHECK(contains(first, "HL0: [ 1 ]"));
    std::filesystem::remove_all(dir);
}
