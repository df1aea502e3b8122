#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("BLOCKINV_CLI");
    return env ? env : "";
}

RunResult run_cli(const std::string& args) {
    RunResult result;
    std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buffer;
    while (std::size_t n = fread(buffer.data(), 1, buffer.size(), pipe))
        result.out.append(buffer.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("cli basics" * doctest::skip(cli_path().empty())) {
    CHECK(run_cli("chi aronhold").out == "4\n");
    CHECK(run_cli("census cover-bound --m 15").out == "12\n");
    CHECK(run_cli("census total --vars 35 --degree 15").out ==
          "1575580702584\n");
    CHECK(run_cli("census ah --k 7 --d 3 --n 4").out == "1\n");
    CHECK(run_cli("census ah --k 2 --d 2 --n 3").out == "3\n");
    CHECK(run_cli("aut aronhold").out == "24\n");
    CHECK(run_cli("validate ottaviani15").out ==
          "points=15 blocks=9 block-size=5 biregular=yes degree=3 "
          "repeated-vertices=no repeated-blocks=no\n");
}

TEST_CASE("cli coloring output" * doctest::skip(cli_path().empty())) {
    write_file("k4.design", "# complete graph on four points\n0,1,2,3\n");
    auto count = run_cli("colorings k4.design --colors 4 --count-only");
    CHECK(count.exit_code == 0);
    CHECK(count.out == "24\n");

    auto listing = run_cli("colorings k4.design --colors 4");
    CHECK(listing.exit_code == 0);
    // 24 lines, each a permutation of 0..3
    int lines = 0;
    for (char ch : listing.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 24);
    CHECK(listing.out.substr(0, listing.out.find('\n')) == "0,1,2,3");

    auto json_mode = run_cli("--json colorings k4.design --colors 4 --count-only");
    CHECK(nlohmann::json::parse(json_mode.out)["count"] == 24);
}

TEST_CASE("cli eval" * doctest::skip(cli_path().empty())) {
    write_file("forms3.txt", "1,0,0\n0,1,0\n0,0,1\n1,1,1\n");
    auto value = run_cli("eval aronhold --forms forms3.txt");
    CHECK(value.exit_code == 0);
    CHECK((value.out == "24\n" || value.out == "-24\n"));

    auto parts = run_cli("eval aronhold --forms forms3.txt --parts 8");
    CHECK(parts.out == value.out);

    auto divided = run_cli("eval aronhold --forms forms3.txt --divisor 12");
    CHECK((divided.out == "2\n" || divided.out == "-2\n"));

    auto bad_div = run_cli("eval aronhold --forms forms3.txt --divisor 7");
    CHECK(bad_div.exit_code == 2);

    auto json_mode = run_cli("--json eval aronhold --forms forms3.txt");
    auto record = nlohmann::json::parse(json_mode.out);
    CHECK((record["value"] == "24" || record["value"] == "-24"));

    // batch over a graph-list file
    write_file("pair.designs", "0,1,2\n0,2,1\n");
    auto batch = run_cli("eval pair.designs --forms forms3.txt");
    CHECK(batch.exit_code == 0);
    CHECK(batch.out.find("raw=") != std::string::npos);
    CHECK(batch.out.find("gcd=") != std::string::npos);

    auto missing = run_cli("eval aronhold");
    CHECK(missing.exit_code == 1);
}

TEST_CASE("cli generate" * doctest::skip(cli_path().empty())) {
    auto gen = run_cli("generate --points 4 --blocks 4 --block-size 3 --degree 3");
    CHECK(gen.exit_code == 0);
    CHECK(gen.out == "0,1,2; 0,1,3; 0,2,3; 1,2,3\n");

    auto piped = run_cli(
        "generate --points 4 --blocks 4 --block-size 3 --degree 3 --pipeline 8");
    CHECK(piped.out.find("rejected_chi:4") != std::string::npos);

    auto guarded = run_cli("generate --points 15 --blocks 9 --block-size 5 --degree 3");
    CHECK(guarded.exit_code == 3);
}

TEST_CASE("cli error paths" * doctest::skip(cli_path().empty())) {
    CHECK(run_cli("chi no-such-input").exit_code == 2);
    CHECK(run_cli("chi").exit_code == 1);
    CHECK(run_cli("nonsense").exit_code == 1);
    write_file("broken.design", "0,0,1\n");
    CHECK(run_cli("validate broken.design").exit_code == 2);
}

TEST_CASE("cli determinism" * doctest::skip(cli_path().empty())) {
    auto a = run_cli("--json chi aronhold");
    auto b = run_cli("--json chi aronhold");
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::parse(a.out)["chi"] == 4);
}
