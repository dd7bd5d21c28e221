#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <string>

#include "eqloc/catalog.hpp"
#include "eqloc/io.hpp"

using namespace eqloc;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(EQLOC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path =
        (std::filesystem::temp_directory_path() / ("eqloc_cli_" + name)).string();
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path;
}

const char* kSphere = R"({"name":"S2","n":1,"fixed_points":[
  {"id":"n","weights":[1]},{"id":"s","weights":[-1]}]})";

const char* kCp2 = R"({"name":"CP2","n":2,"fixed_points":[
  {"id":"p0","weights":[1,2]},{"id":"p1","weights":[-1,1]},
  {"id":"p2","weights":[-2,-1]}],"index":3})";

} // namespace

TEST_CASE("exit codes: clean, math failure, malformed input") {
    auto sphere = write_temp("s2.json", kSphere);
    CHECK(run_cli("validate " + sphere).exit_code == 0);

    auto zero = write_temp("zero.json",
                           R"({"name":"bad","n":1,"fixed_points":[{"id":"p","weights":[0]}]})");
    CHECK(run_cli("validate " + zero).exit_code == 2);

    auto fake = write_temp("fake.json",
                           R"({"name":"fake","n":2,"fixed_points":[
                              {"id":"p0","weights":[1,2]},{"id":"p1","weights":[1,2]}]})");
    auto r = run_cli("validate " + fake);
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("N_j = N_{n-j}") != std::string::npos);

    CHECK(run_cli("validate does_not_exist.json").exit_code == 2);
    auto junk = write_temp("junk.json", "{ not json");
    CHECK(run_cli("validate " + junk).exit_code == 2);

    // unknown fields are rejected
    auto extra = write_temp("extra.json",
                            R"({"name":"S2","n":1,"fixed_points":[
                               {"id":"n","weights":[1]},{"id":"s","weights":[-1]}],
                               "surprise":true})");
    auto re = run_cli("validate " + extra);
    CHECK(re.exit_code == 2);
    CHECK(re.out.find("unknown field") != std::string::npos);
}

TEST_CASE("chern subcommand") {
    auto cp2 = write_temp("cp2.json", kCp2);
    auto r = run_cli("chern " + cp2 + " --partition 1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "9\n");
    CHECK(run_cli("chern " + cp2 + " --partition 2").out == "3\n");
    CHECK(run_cli("chern " + cp2 + " --partition 3").exit_code == 2);
}

TEST_CASE("index subcommand") {
    auto cp2 = write_temp("cp2b.json", kCp2);
    CHECK(run_cli("index " + cp2).out == "1\n"); // trivial bundle
    CHECK(run_cli("index " + cp2 + " --eta-multiple -1").out == "0\n");

    std::string bundle = write_temp("bundle.json", R"({"a":{"p0":0,"p1":0,"p2":0}})");
    CHECK(run_cli("index " + cp2 + " --bundle " + bundle).out == "1\n");
}

TEST_CASE("hilbert subcommand") {
    auto cp2 = write_temp("cp2c.json", kCp2);
    auto r = run_cli("hilbert " + cp2 + " --k0 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("H(z) = 1/2*z^2 + 3/2*z + 1") != std::string::npos);
    CHECK(r.out.find("U(t) = 1 ") != std::string::npos);

    // file index is the default
    CHECK(run_cli("hilbert " + cp2).exit_code == 0);

    auto bad = run_cli("hilbert " + cp2 + " --k0 2");
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("no consistent residue") != std::string::npos);

    CHECK(run_cli("hilbert " + cp2 + " --k0 3 --method chern").exit_code == 0);
    CHECK(run_cli("hilbert " + cp2 + " --k0 3 --method nope").exit_code == 2);
}

TEST_CASE("classify subcommand") {
    CHECK(run_cli("classify --n 3 --k0 4 --c1n 64 --c1n2c2 24").out.find("Hamiltonian") == 0);
    CHECK(run_cli("classify --n 3 --k0 4 --c1n 0 --c1n2c2 0").out.find("NonHamiltonian") == 0);
    CHECK(run_cli("classify --n 3 --k0 4 --c1n 10").out.find("Inconsistent") == 0);

    // a hand-edited H with H(-1) != 0 is a named rigidity violation
    auto r = run_cli("classify --n 1 --k0 2 --hilbert 2,1");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("index rigidity zero at k = -1") != std::string::npos);
}

TEST_CASE("ehrhart subcommand") {
    auto simplex = write_temp("simplex.json", R"({"dim":2,"vertices":[[0,0],[1,0],[0,1]]})");
    auto r = run_cli("ehrhart " + simplex);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1/2*z^2 + 3/2*z + 1") != std::string::npos);
    CHECK(r.out.find("k = 3") != std::string::npos);

    CHECK(run_cli("ehrhart " + simplex + " --xi 1,2 --compare-hilbert").exit_code == 0);
    CHECK(run_cli("ehrhart " + simplex + " --xi 1,1").exit_code == 2); // non-generic
}

TEST_CASE("weights beyond 64 bits travel as strings") {
    // localization over the rationals handles them; the Laurent expansion of
    // the equivariant index is deliberately bounded to sane exponents
    auto big = write_temp("big.json",
                          R"({"name":"big","n":1,"fixed_points":[
                             {"id":"n","weights":["10000000000000000000000000"]},
                             {"id":"s","weights":["-10000000000000000000000000"]}]})");
    auto chern = run_cli("chern " + big + " --partition 1");
    CHECK(chern.exit_code == 0);
    CHECK(chern.out == "2\n");
    auto idx = run_cli("index " + big);
    CHECK(idx.exit_code == 2);
    CHECK(idx.out.find("weight too large") != std::string::npos);

    S1Space parsed = parse_space_file(read_file(big));
    CHECK(emit_space_file(parsed) == emit_space_file(parse_space_file(emit_space_file(parsed))));
}

TEST_CASE("catalog subcommand and canonical round-trip") {
    auto list = run_cli("catalog list");
    CHECK(list.exit_code == 0);
    int lines = 0;
    for (char ch : list.out)
        if (ch == '\n') ++lines;
    CHECK(lines >= 8);

    CHECK(run_cli("catalog selftest").exit_code == 0);
    CHECK(run_cli("catalog emit V5").exit_code == 2);
    CHECK(run_cli("catalog emit CP3 2 4 6").exit_code == 2);

    // emit -> parse -> emit is byte-identical for every space entry
    std::vector<std::pair<std::string, std::vector<Integer>>> entries = {
        {"CPn", {Integer(3)}},
        {"CP3", {Integer(1), Integer(2), Integer(3)}},
        {"Hirzebruch", {Integer(2), Integer(1), Integer(1)}},
        {"Flag3", {}},
        {"ProductOfSpheres", {Integer(2)}},
        {"CP1xCP2", {}},
    };
    for (const auto& [key, params] : entries) {
        std::string emitted = emit_space_file(catalog_emit(key, params));
        std::string again = emit_space_file(parse_space_file(emitted));
        CHECK(emitted == again);
    }

    // and through the binary
    auto emitted = run_cli("catalog emit CP3 1 2 3");
    auto path = write_temp("roundtrip.json", emitted.out);
    CHECK(run_cli("validate " + path).exit_code == 0);
}
