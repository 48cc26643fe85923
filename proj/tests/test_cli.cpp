#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path p = [] {
        fs::path d = fs::temp_directory_path() / ("forddisc_cli_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Runs the binary with the working directory set to a scratch dir; an
// optional environment prefix ("VAR=value") applies to just that invocation.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int seq = 0;
    fs::path so = work_dir() / ("stdout." + std::to_string(seq));
    fs::path se = work_dir() / ("stderr." + std::to_string(seq));
    ++seq;
    std::string cmd = "cd '" + work_dir().string() + "' && " + env_prefix + (env_prefix.empty() ? "" : " ") + "'" +
                      FORDDISC_BIN + "' " + args + " > '" + so.string() + "' 2> '" + se.string() + "'";
    int rc = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(rc)) r.code = WEXITSTATUS(rc);
    r.out = slurp(so);
    r.err = slurp(se);
    fs::remove(so);
    fs::remove(se);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST_CASE("generate writes ascii output with a summary") {
    auto r = run_cli("generate --order 3 --output f3.bits");
    REQUIRE(r.code == 0);
    CHECK(slurp(work_dir() / "f3.bits") == "00010111\n");
    CHECK(contains(r.out, "order=3"));
    CHECK(contains(r.out, "method=fkm"));
    CHECK(contains(r.out, "length=8"));
    CHECK(contains(r.out, "disc=3"));
    CHECK(contains(r.out, "argmax=3"));
    CHECK(contains(r.out, "output=f3.bits"));
}

TEST_CASE("generate default file names follow the order and format") {
    auto r = run_cli("generate --order 3");
    REQUIRE(r.code == 0);
    CHECK(slurp(work_dir() / "L3.bits") == "00010111\n");

    auto rp = run_cli("generate --order 3 --format packed");
    REQUIRE(rp.code == 0);
    std::string bytes = slurp(work_dir() / "L3.fdbs");
    REQUIRE(bytes.size() == 17);
    const unsigned char expect[17] = {'F', 'D', 'B', 'S', 1, 3, 8, 0, 0,
                                      0,   0,   0,   0,   0, 0, 0, 0x17};
    for (std::size_t i = 0; i < 17; ++i)
        CHECK(static_cast<unsigned char>(bytes[i]) == expect[i]);
}

TEST_CASE("generate methods produce identical bytes") {
    REQUIRE(run_cli("generate --order 6 --method fkm --output a.bits").code == 0);
    REQUIRE(run_cli("generate --order 6 --method greedy --output b.bits").code == 0);
    CHECK(slurp(work_dir() / "a.bits") == slurp(work_dir() / "b.bits"));

    REQUIRE(run_cli("generate --order 6 --method fkm --format packed --output a.fdbs").code == 0);
    REQUIRE(run_cli("generate --order 6 --method greedy --format packed --output b.fdbs").code == 0);
    CHECK(slurp(work_dir() / "a.fdbs") == slurp(work_dir() / "b.fdbs"));
}

TEST_CASE("generate usage and capacity errors") {
    CHECK(run_cli("generate --order 0").code == 2);
    CHECK(run_cli("generate").code == 2);
    CHECK(run_cli("generate --order 3 --method sideways").code == 2);
    auto r = run_cli("generate --order 40 --method greedy", "FORD_DISC_MAX_ORDER=26");
    CHECK(r.code == 3);
    CHECK(contains(r.err, "error:"));
}

TEST_CASE("analyze emits the pinned block table for order 5") {
    auto r = run_cli("analyze --order 5 --blocks");
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "k,length,word_count,skew,max_signed,min_signed\n"
          "4,5,1,3,4,1\n"
          "3,5,1,1,3,1\n"
          "2,10,2,0,3,0\n"
          "1,10,2,-4,1,-4\n");
    CHECK(run_cli("analyze --order 5").out == r.out); // --blocks is the default view
}

TEST_CASE("analyze json view") {
    auto r = run_cli("analyze --order 5 --json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["order"] == 5);
    REQUIRE(j["blocks"].size() == 4);
    CHECK(j["blocks"][0]["k"] == 4);
    CHECK(j["blocks"][3]["skew"] == -4);
    CHECK(j["blocks"][2]["length"] == 10);
}

TEST_CASE("analyze sandwich check") {
    auto r = run_cli("analyze --order 13 --check");
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "sandwich n=13, 4 <= k <= 10: PASS"));
}

TEST_CASE("analyze composite orders") {
    auto hint = run_cli("analyze --order 6");
    CHECK(hint.code == 2);
    CHECK(contains(hint.err, "--composite"));

    auto r = run_cli("analyze --order 6 --composite");
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "divisors=1,2,3"));
    CHECK(contains(r.out, "actual_symbols=10"));
    CHECK(contains(r.out, "word_bound=34"));
    CHECK(contains(r.out, "actual_le_bound=true"));
    CHECK(contains(r.out, "bound_lt_budget=true"));

    auto rj = run_cli("analyze --order 6 --composite --json");
    REQUIRE(rj.code == 0);
    json j = json::parse(rj.out);
    CHECK(j["actual_symbols"] == 10);
    CHECK(j["word_bound"] == "34");
    CHECK(j["divisors"] == json::array({1, 2, 3}));
    CHECK(j["actual_le_bound"] == true);
}

TEST_CASE("analyze domain errors") {
    CHECK(run_cli("analyze --order 2").code == 2);
    CHECK(run_cli("analyze --order 7", "FORD_DISC_MAX_ORDER=5").code == 3);
}

TEST_CASE("counts table output is exact") {
    auto r = run_cli("counts --k 2 --max-n 6");
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "k,n,a,b\n"
          "2,0,1,0\n"
          "2,1,2,0\n"
          "2,2,3,-2\n"
          "2,3,5,-5\n"
          "2,4,8,-12\n"
          "2,5,13,-25\n"
          "2,6,21,-50\n");
}

TEST_CASE("counts root mode and guards") {
    auto r = run_cli("counts --k 3 --rho");
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "k,value,residual,iterations"));
    CHECK(contains(r.out, "\n3,"));
    CHECK(contains(r.out, "1.83928675"));

    CHECK(run_cli("counts --k 3 --rho --tol 1e-15").code == 0);
    CHECK(run_cli("counts --k 1").code == 2);
    CHECK(run_cli("counts").code == 2);
}

TEST_CASE("verify oracle sweeps pass") {
    auto r = run_cli("verify --oracles");
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    json arr = json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 6);
    std::string claims;
    for (const auto& item : arr) {
        CHECK(item["pass"] == true);
        CHECK(item["scoped"] == true);
        claims += item["claim"].get<std::string>() + ";";
    }
    for (const char* c : {"table_matches_enumeration", "construction_equivalence", "debruijn_census",
                          "blocks_match_enumeration", "disc_reference_match", "reassembly"})
        CHECK(contains(claims, c));
}

TEST_CASE("verify --lemmas sweeps respect the scan depth") {
    CHECK(run_cli("verify --lemmas --k 4 --max-n 22").code == 0);
    CHECK(run_cli("verify --lemmas --k 3 --max-n 200").code == 0);

    auto r = run_cli("verify --lemmas --k 4 --max-n 23");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "verification failure: beta_alpha_ratio_bound"));
    CHECK(contains(r.err, "n=23"));
    json arr = json::parse(r.out);
    bool found = false;
    for (const auto& item : arr) {
        if (item["claim"] != "beta_alpha_ratio_bound") continue;
        found = true;
        CHECK(item["pass"] == false);
        CHECK(contains(item["counterexample"].get<std::string>(), "n=23"));
    }
    CHECK(found);
}

TEST_CASE("verify default grid reports the genuine inequality failure") {
    auto r = run_cli("verify");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "verification failure: beta_alpha_ratio_bound"));
    json arr = json::parse(r.out); // stdout stays machine-readable on failure
    CHECK(arr.is_array());
}

TEST_CASE("verify fault injection trips the failure path") {
    auto r = run_cli("verify --oracles --oracle-cap 8 --inject-fault");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "injected_fault"));
    json arr = json::parse(r.out);
    bool found = false;
    for (const auto& item : arr) {
        if (item["claim"] != "injected_fault") continue;
        found = true;
        CHECK(item["pass"] == false);
        CHECK(contains(item["counterexample"].get<std::string>(), "n=7"));
    }
    CHECK(found);
}

TEST_CASE("scaling output rows") {
    auto r = run_cli("scaling --min 3 --max 12");
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "n,disc,position,ratio");
    int rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 10);
    CHECK(contains(r.out, "\n3,3,3,1.02402\n"));
    char n5[64];
    std::snprintf(n5, sizeof n5, "\n5,8,18,%.6g\n", 40.0 / (32.0 * std::log(5.0)));
    CHECK(contains(r.out, n5));
}

TEST_CASE("scaling csv file matches stdout output") {
    auto direct = run_cli("scaling --min 5 --max 12");
    REQUIRE(direct.code == 0);
    auto filed = run_cli("scaling --min 5 --max 12 --csv s.csv");
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    CHECK(slurp(work_dir() / "s.csv") == direct.out);

    auto threaded = run_cli("scaling --min 5 --max 12 --threads 4");
    REQUIRE(threaded.code == 0);
    CHECK(threaded.out == direct.out);
}

TEST_CASE("scaling domain and capacity errors") {
    CHECK(run_cli("scaling --min 10 --max 9").code == 2);
    CHECK(run_cli("scaling --min 2 --max 27", "FORD_DISC_MAX_ORDER=26").code == 3);
    CHECK(run_cli("scaling --min 2 --max 12", "FORD_DISC_MAX_ORDER=10").code == 3);
    CHECK(run_cli("scaling --min 11 --max 12", "FORD_DISC_MAX_ORDER=12").code == 0);
    // malformed override falls back to the default cap
    CHECK(run_cli("scaling --min 2 --max 5", "FORD_DISC_MAX_ORDER=abc").code == 0);
    CHECK(run_cli("scaling --min 2 --max 27", "FORD_DISC_MAX_ORDER=70").code == 3);
}

TEST_CASE("top-level usage errors and help") {
    CHECK(run_cli("").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("--help").code == 0);
    CHECK(contains(run_cli("--help").out, "generate"));
}
