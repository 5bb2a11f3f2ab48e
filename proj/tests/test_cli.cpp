#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sgstar/constructions.hpp"
#include "sgstar/signed_graph.hpp"

#ifndef SGSTAR_CLI_PATH
#error "SGSTAR_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "sgstar_cli_tests";
    fs::create_directories(dir);
    return dir;
}

// Runs `sgstar <args>` (optionally inside a shell pipeline) and captures
// stdout/stderr; the command string must be shell-safe.
CliResult run_shell(const std::string& command) {
    fs::path out = scratch_dir() / "out.txt";
    fs::path err = scratch_dir() / "err.txt";
    std::string full = command + " > " + out.string() + " 2> " + err.string();
    int status = std::system(full.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out), slurp(err)};
}

CliResult run_cli(const std::string& args) {
    return run_shell(std::string(SGSTAR_CLI_PATH) + " " + args);
}

fs::path write_quadrangle_file() {
    fs::path p = scratch_dir() / "quadrangle.sg";
    std::ofstream f(p);
    sgstar::write_graph(f, sgstar::quadrangle(1));
    return p;
}

}  // namespace

TEST_CASE("construct quadrangle emits the canonical file", "[cli]") {
    CliResult r = run_cli("construct quadrangle --neg 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4 4\n0 1 -1\n0 3 +1\n1 2 +1\n2 3 +1\n");

    r = run_cli("construct quadrangle --neg 2");
    CHECK(r.exit_code == 2);  // rejected by flag validation
}

TEST_CASE("spectrum output is deterministic and exact", "[cli]") {
    fs::path file = write_quadrangle_file();
    CliResult first = run_cli("spectrum " + file.string());
    CliResult second = run_cli("spectrum " + file.string());
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);  // byte-identical
    CHECK(first.out.find("\"sqrt(2)\"") != std::string::npos);
    CHECK(first.out.find("\"-sqrt(2)\"") != std::string::npos);
    CHECK(first.out.find("\"multiplicity\": 2") != std::string::npos);
    CHECK(first.out.find("\"version\": \"0.1.0\"") != std::string::npos);
}

TEST_CASE("stdin pipelines work", "[cli]") {
    std::string cli = SGSTAR_CLI_PATH;
    CliResult r = run_shell(cli + " construct quadrangle --neg 1 | " + cli +
                            " bounds - --mu \"sqrt(2)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"bound_name\": \"cubic\"") != std::string::npos);
    CHECK(r.out.find("\"attained\": true") != std::string::npos);

    r = run_shell(cli + " construct quadrangle --neg 3 | " + cli + " multiplicity - --mu=\"-sqrt(2)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"multiplicity\": 2") != std::string::npos);
}

TEST_CASE("missing files and bad input exit with code 2", "[cli]") {
    CliResult r = run_cli("multiplicity missing.sg --mu 2");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("missing.sg") != std::string::npos);
    CHECK(r.out.empty());

    fs::path bad = scratch_dir() / "bad.sg";
    std::ofstream(bad) << "2 1\n0 1 +2\n";
    r = run_cli("spectrum " + bad.string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("bad.sg:2") != std::string::npos);
    CHECK(r.err.find("+2") != std::string::npos);

    r = run_cli("multiplicity " + write_quadrangle_file().string() + " --mu bogus");
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("--mu") != std::string::npos);

    r = run_cli("frobnicate");
    CHECK(r.exit_code == 2);
}

TEST_CASE("star-set and verify-star-set", "[cli]") {
    fs::path file = write_quadrangle_file();
    CliResult r = run_cli("star-set " + file.string() + " --mu \"sqrt(2)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"star_set\": [\n      0,\n      1\n    ]") != std::string::npos);
    CHECK(r.out.find("\"verified\": true") != std::string::npos);

    r = run_cli("verify-star-set " + file.string() + " --mu \"sqrt(2)\" --set 0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"ok\": true") != std::string::npos);

    // wrong size: violation reported as data, exit code 1
    r = run_cli("verify-star-set " + file.string() + " --mu \"sqrt(2)\" --set 0");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("\"ok\": false") != std::string::npos);
    CHECK(r.out.find("multiplicity") != std::string::npos);
}

TEST_CASE("switch round-trips through the CLI", "[cli]") {
    fs::path file = write_quadrangle_file();
    CliResult once = run_cli("switch " + file.string() + " --set 0,2");
    CHECK(once.exit_code == 0);

    fs::path switched_file = scratch_dir() / "switched.sg";
    std::ofstream(switched_file) << once.out;
    CliResult twice = run_cli("switch " + switched_file.string() + " --set 0,2");
    CHECK(twice.out == slurp(file));
}

TEST_CASE("extend emits realizable extensions", "[cli]") {
    fs::path comp = scratch_dir() / "complement.sg";
    std::ofstream(comp) << "2 1\n0 1 +1\n";
    fs::path emit = scratch_dir() / "extensions";
    fs::remove_all(emit);

    CliResult r = run_cli("extend " + comp.string() + " --mu \"sqrt(2)\" --emit-dir " + emit.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"good_vector_count\": 4") != std::string::npos);
    CHECK(r.out.find("\"truncated\": false") != std::string::npos);

    // four maximal cliques of size 2, each realized as a 4-vertex graph
    int emitted = 0;
    for (auto& entry : fs::directory_iterator(emit)) {
        std::ifstream in(entry.path());
        sgstar::SignedGraph g = sgstar::read_graph(in, entry.path().string());
        CHECK(g.order() == 4);
        ++emitted;
    }
    CHECK(emitted == 4);

    r = run_cli("extend " + comp.string() + " --mu \"sqrt(2)\" --max-cliques 1");
    CHECK(r.out.find("\"truncated\": true") != std::string::npos);
}

TEST_CASE("srg report on the quadrangle", "[cli]") {
    fs::path file = write_quadrangle_file();
    CliResult r = run_cli("srg " + file.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"accepted\": true") != std::string::npos);
    CHECK(r.out.find("\"half_sum_consequence\": true") != std::string::npos);
    CHECK(r.out.find("\"eigenvalue_count\": null") != std::string::npos);  // not net-regular
    CHECK(r.out.find("not net-regular") != std::string::npos);
}

TEST_CASE("nonmain and certify", "[cli]") {
    fs::path file = write_quadrangle_file();
    CliResult r = run_cli("nonmain " + file.string() + " --mu \"sqrt(2)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"is_main\"") != std::string::npos);

    r = run_cli("certify " + file.string() + " --mu \"sqrt(2)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"independent\": true") != std::string::npos);
    CHECK(r.out.find("\"gram_identity\": true") != std::string::npos);
    CHECK(r.out.find("\"quadratic_bound_applicable\": false") != std::string::npos);
}
