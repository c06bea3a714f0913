// End-to-end tests for the qwnull binary. The CLI path arrives as argv[1]
// (ctest passes $<TARGET_FILE:qwnull>) or via the QWNULL_CLI env var.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Runs the CLI with stderr folded into stdout.
RunResult run_cli(const std::string& args) {
    const std::string command = "'" + g_cli_path + "' " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() /
               ("qwnull_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("enumerate emits graph records and honors bounds") {
    const auto json_run = run_cli("enumerate --order 3");
    CHECK(json_run.exit_code == 0);
    const auto graphs = nlohmann::json::parse(json_run.output);
    REQUIRE(graphs.size() == 4);
    CHECK(graphs[0]["order"] == 3);
    CHECK(graphs[0]["edges"].size() == 2);
    CHECK(graphs[3]["edges"].size() == 3);

    const auto csv_run = run_cli("enumerate --order 4 --format csv");
    CHECK(csv_run.exit_code == 0);
    int lines = 0;
    for (char c : csv_run.output) lines += c == '\n';
    CHECK(lines == 39);  // header + 38 graphs

    CHECK(run_cli("enumerate --order 0").exit_code == 2);
    CHECK(run_cli("enumerate --order 9").exit_code == 2);
}

TEST_CASE("nullspace resolves selectors and reports exact dimensions") {
    const auto kk = run_cli("nullspace --order 3 --i K --j K");
    CHECK(kk.exit_code == 0);
    CHECK(nlohmann::json::parse(kk.output)["dim"] == 5);

    const auto paths = run_cli("nullspace --order 3 --edges-i 0b011 --edges-j 0b101");
    CHECK(paths.exit_code == 0);
    const auto parsed = nlohmann::json::parse(paths.output);
    CHECK(parsed["dim"] == 1);
    CHECK(parsed["basis"][0] == nlohmann::json::parse("[1,1,1,1,1,1,1,1,1]"));

    const auto by_index = run_cli("nullspace --order 3 --i 0 --j 3");
    CHECK(nlohmann::json::parse(by_index.output)["dim"] == 3);

    CHECK(run_cli("nullspace --order 3 --edges-i 0b1000 --edges-j 0b101").exit_code == 2);
    CHECK(run_cli("nullspace --order 3 --i K").exit_code == 2);
    CHECK(run_cli("nullspace --order 3 --i K --edges-i 7 --j K").exit_code == 2);
}

TEST_CASE("nullspace uniform-sum display basis sums to all-ones") {
    const auto run = run_cli("nullspace --order 3 --i K --j K --uniform-sum-basis");
    CHECK(run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(run.output);
    REQUIRE(parsed["dim"] == 5);
    std::array<long long, 9> sum{};
    for (const auto& row : parsed["basis"])
        for (std::size_t c = 0; c < 9; ++c) sum[c] += row[c].get<long long>();
    for (long long s : sum) CHECK(s == 1);
}

TEST_CASE("classify writes three deterministic files and a summary") {
    const auto dir = temp_dir();
    const auto prefix_a = (dir / "a").string();
    const auto prefix_b = (dir / "b").string();

    const auto first = run_cli("classify --order 3 --out '" + prefix_a + "'");
    CHECK(first.exit_code == 0);
    CHECK(first.output == "graphs=4 pairs=10 zones=5\n");
    const auto second = run_cli("classify --order 3 --out '" + prefix_b + "'");
    CHECK(second.exit_code == 0);

    for (const char* ext : {".json", ".csv", ".dot"}) {
        CAPTURE(ext);
        const auto a = slurp(prefix_a + ext);
        CHECK_FALSE(a.empty());
        CHECK(a == slurp(prefix_b + ext));
    }
    const auto report = nlohmann::json::parse(slurp(prefix_a + ".json"));
    CHECK(report["zone_count"] == 5);
    CHECK(report["subspaces"].size() == 5);

    CHECK(run_cli("classify --order 7").exit_code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify passes on honest data and fails on a tampered check file") {
    const auto dir = temp_dir();
    const auto prefix = (dir / "order2").string();
    REQUIRE(run_cli("classify --order 2 --out '" + prefix + "'").exit_code == 0);

    const auto clean = run_cli("verify --order 2 --seed 7 --check-file '" + prefix +
                               ".json'");
    CHECK(clean.exit_code == 0);
    CHECK(clean.output.find("result: PASS") != std::string::npos);

    auto tampered = nlohmann::json::parse(slurp(prefix + ".json"));
    tampered["subspaces"]["1"]["basis"][0][0] = 5;
    const auto tampered_path = dir / "tampered.json";
    std::ofstream(tampered_path) << tampered.dump();
    const auto bad = run_cli("verify --order 2 --seed 7 --check-file '" +
                             tampered_path.string() + "'");
    CHECK(bad.exit_code == 1);
    CHECK(bad.output.find("result: FAIL") != std::string::npos);

    const auto json_report = run_cli("verify --order 3 --seed 7 --format json");
    CHECK(json_report.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json_report.output);
    CHECK(parsed["passed"] == true);
    CHECK(parsed["zones"] == 5);
    std::filesystem::remove_all(dir);
}

TEST_CASE("walk outputs probabilities") {
    const auto rest = run_cli("walk --order 2 --graph K --start 0 --t 0");
    CHECK(rest.exit_code == 0);
    auto parsed = nlohmann::json::parse(rest.output);
    CHECK(parsed["probabilities"][0].get<double>() == doctest::Approx(1.0));
    CHECK(parsed["probabilities"][1].get<double>() == doctest::Approx(0.0));

    const auto swap = run_cli("walk --order 2 --graph K --start 0 --t 1.5707963267948966");
    parsed = nlohmann::json::parse(swap.output);
    CHECK(parsed["probabilities"][0].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(parsed["probabilities"][1].get<double>() == doctest::Approx(1.0).epsilon(1e-12));

    const auto uniform = run_cli("walk --order 3 --graph K --start 0 --t 5.5 --format csv");
    CHECK(uniform.exit_code == 0);
    CHECK(uniform.output.rfind("vertex,probability\n", 0) == 0);

    CHECK(run_cli("walk --order 2 --graph K --start 5 --t 0").exit_code == 2);
    CHECK(run_cli("walk --order 2 --graph K --edges 1 --start 0 --t 0").exit_code == 2);
}

TEST_CASE("walk accepts an amplitude file") {
    const auto dir = temp_dir();
    const auto state_path = dir / "state.json";
    std::ofstream(state_path) << "[0, [1.0, 0.0]]";
    const auto run = run_cli("walk --order 2 --graph K --state '" + state_path.string() +
                             "' --t 0");
    CHECK(run.exit_code == 0);
    const auto parsed = nlohmann::json::parse(run.output);
    CHECK(parsed["probabilities"][0].get<double>() == doctest::Approx(0.0));
    CHECK(parsed["probabilities"][1].get<double>() == doctest::Approx(1.0));

    std::ofstream(dir / "bad.json") << "[1.0, 1.0]";  // not normalized
    CHECK(run_cli("walk --order 2 --graph K --state '" + (dir / "bad.json").string() +
                  "' --t 1")
              .exit_code == 2);
    std::filesystem::remove_all(dir);
}

TEST_CASE("nullspace csv prints one basis vector per row") {
    const auto run = run_cli("nullspace --order 3 --i K --j K --format csv");
    CHECK(run.exit_code == 0);
    int lines = 0;
    for (char c : run.output) lines += c == '\n';
    CHECK(lines == 5);
    CHECK(run.output.rfind("1,0,0,0,0,1,0,1,0\n", 0) == 0);
}

TEST_CASE("environment variables override the order guards") {
    RunResult tightened;
    {
        const std::string command = "QWNULL_MAX_ORDER=3 '" + g_cli_path +
                                    "' classify --order 4 2>&1";
        FILE* pipe = popen(command.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 4096> buffer{};
        std::size_t got = 0;
        while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
            tightened.output.append(buffer.data(), got);
        const int status = pclose(pipe);
        tightened.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }
    CHECK(tightened.exit_code == 2);
    CHECK(tightened.output.find("[1, 3]") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("enumerate").exit_code == 2);           // missing --order
    CHECK(run_cli("enumerate --order 3 --format yaml").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

}  // TEST_SUITE

int main(int argc, char** argv) {
    const bool path_arg = argc > 1 && argv[1][0] != '-';
    if (path_arg) {
        g_cli_path = argv[1];
    } else if (const char* env = std::getenv("QWNULL_CLI")) {
        g_cli_path = env;
    }
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "usage: qwnull_cli_tests <path-to-qwnull-binary>\n");
        return 1;
    }
    doctest::Context context;
    context.applyCommandLine(path_arg ? argc - 1 : argc, path_arg ? argv + 1 : argv);
    return context.run();
}
