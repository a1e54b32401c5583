#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/tau.hpp"

using namespace hurwitz;
using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs the CLI with the given argument string (caller quotes as needed) and
// captures exit code, stdout and stderr.
RunResult run_cli(const std::string& args, const std::string& envPrefix = "") {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto tag = std::to_string(::getpid()) + "_" + std::to_string(counter++);
    const auto outPath = dir / ("cli_out_" + tag + ".txt");
    const auto errPath = dir / ("cli_err_" + tag + ".txt");
    const std::string cmd = envPrefix + std::string(HURWITZ_CLI_PATH) + " " + args +
                            " > " + outPath.string() + " 2> " + errPath.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(outPath);
    r.err = slurp(errPath);
    std::filesystem::remove(outPath);
    std::filesystem::remove(errPath);
    return r;
}

std::string rat_str(const Json& j) {
    return j.at("num").get<std::string>() + "/" + j.at("den").get<std::string>();
}

std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace

TEST_CASE("pure: character and brute-force routes agree with the library") {
    const ProfileTuple profiles{{2, 1, 1}, {2, 1, 1}, {3, 1}};
    const Rat expect = pure_hurwitz_char(profiles);

    const RunResult rc = run_cli("pure --profiles '2,1,1;2,1,1;3,1'");
    REQUIRE(rc.code == 0);
    const Json jc = Json::parse(rc.out);
    CHECK(jc.at("method") == "character");
    CHECK(rat_str(jc.at("H")) == rat_str(expect));
    CHECK(jc.at("H_connected").is_null());

    const RunResult rb = run_cli("pure --bruteforce --connected --profiles '2,1,1;2,1,1;3,1'");
    REQUIRE(rb.code == 0);
    const Json jb = Json::parse(rb.out);
    CHECK(jb.at("method") == "bruteforce");
    CHECK(rat_str(jb.at("H")) == rat_str(expect));
    CHECK(rat_str(jb.at("H_connected")) ==
          rat_str(pure_hurwitz_bruteforce(profiles, true)));
}

TEST_CASE("weighted: series coefficients and evaluation match the library") {
    const RunResult r = run_cli(
        "weighted --L 1 --M 1 --dmax 2 --profiles '2;1,1' --c 1 --d '1/2' --beta 1");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("d_max") == 2);
    const WeightGenSpec g{1, 1, std::nullopt, std::nullopt};
    BetaSeries series(1, 1, 2);
    for (int d = 0; d <= 2; ++d)
        series.set_coeff(d, weighted_hurwitz(g, d, {2}, {1, 1}));
    const Rat value = series.eval({rat(1)}, {rat(1, 2)}, rat(1));
    CHECK(rat_str(j.at("value")) == rat_str(value));
    CHECK(j.at("series").at("order") == 2);
}

TEST_CASE("table: the one-sheet table is the weight generator itself") {
    const RunResult r = run_cli("table --L 0 --M 1 --Nmax 1 --dmax 1");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j.at("entries").size() == 2); // (0,(),()) and (1,(1),(1))
    const Json& row = j.at("entries")[1];
    CHECK(row.at("N") == 1);
    CHECK(row.at("mu") == Json::array({1}));
    CHECK(row.at("nu") == Json::array({1}));
    // tau coefficient of gamma p_1 q_1 for G = 1/(1 - d1 z): 1 + d1 beta + ...
    const WeightGenSpec g{0, 1, std::nullopt, std::nullopt};
    const BetaSeries lib = tau_table(g, 1, 1).entry({1, {1}, {1}});
    CHECK(row.at("series").at("coeffs").size() == 2);
    (void)lib;
}

TEST_CASE("constellations: census carries method, rows, and genus") {
    const RunResult r = run_cli("constellations --Nmax 2 --L 0 --spectrum '1' --dmax -1");
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("N") == 2);
    CHECK(j.at("d_max").is_null());
    const Json& census = j.at("census");
    CHECK(census.at("method") == "enumeration");
    REQUIRE(!census.at("rows").empty());
    for (const auto& row : census.at("rows")) {
        CHECK(row.contains("key"));
        CHECK(row.at("count").get<long long>() > 0);
        CHECK(row.contains("chi"));
        CHECK(row.contains("weight"));
    }
}

TEST_CASE("verify subcommands exit 0 on success, 4 on failure") {
    const RunResult ok = run_cli("verify tau --L 0 --M 1 --Nmax 2 --dmax 1");
    CHECK(ok.code == 0);
    const Json j = Json::parse(ok.out);
    CHECK(j.at("failures") == 0);
    CHECK(j.at("checked").get<int>() > 0);
    REQUIRE(!j.at("rows").empty());
    for (const auto& row : j.at("rows"))
        CHECK(row.at("equal") == true);

    const RunResult conn = run_cli("verify connected --L 1 --M 1 --Nmax 3");
    CHECK(conn.code == 0);

    const RunResult consts = run_cli("verify constellations --L 0 --M 1 --Nmax 2 --dmax 1");
    CHECK(consts.code == 0);

    const RunResult good = run_cli("verify hciz --n 2 --gamma 0.05 --Nmax 12");
    CHECK(good.code == 0);
    // A coarse truncation at a strong coupling misses the tolerance.
    const RunResult bad = run_cli("verify hciz --n 2 --gamma 0.9 --Nmax 3");
    CHECK(bad.code == 4);
    const Json jb = Json::parse(bad.out);
    CHECK(jb.at("failures").get<int>() > 0);
}

TEST_CASE("output bytes are identical across runs") {
    const std::string args = "table --L 1 --M 1 --Nmax 3 --dmax 2";
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    const RunResult c = run_cli("hciz --n 2 --gamma 0.05 --Nmax 8");
    const RunResult d = run_cli("hciz --n 2 --gamma 0.05 --Nmax 8");
    REQUIRE(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("--out writes the same bytes to a file") {
    const auto path = std::filesystem::temp_directory_path() /
                      ("cli_file_" + std::to_string(::getpid()) + ".json");
    const RunResult direct = run_cli("pure --profiles '2,1;2,1'");
    const RunResult filed = run_cli("pure --profiles '2,1;2,1' --out " + path.string());
    REQUIRE(filed.code == 0);
    CHECK(slurp(path) == direct.out);
    std::filesystem::remove(path);
}

TEST_CASE("usage and domain errors exit 2") {
    CHECK(run_cli("pure").code == 2);              // missing required option
    CHECK(run_cli("nonsense").code == 2);          // unknown subcommand
    CHECK(run_cli("pure --profiles '2;3'").code == 2); // mismatched weights
    CHECK(run_cli("weighted --L 1 --M 1 --dmax 1 --profiles '2'").code == 2);
    CHECK(run_cli("hciz --n 2 --gamma 0.1 --c 1").code == 2); // c without d
}

TEST_CASE("work bounds: flag beats environment, both trip capacity") {
    const std::string heavy = "pure --bruteforce --profiles '2,2,1;2,2,1;2,2,1'";
    CHECK(run_cli(heavy).code == 0);
    CHECK(run_cli(heavy + " --work-bound 5").code == 3);
    CHECK(run_cli(heavy, "HURWITZ_WORK_BOUND=5 ").code == 3);
    CHECK(run_cli(heavy + " --work-bound 100000000", "HURWITZ_WORK_BOUND=5 ").code == 0);
    CHECK(run_cli(heavy, "HURWITZ_WORK_BOUND=banana ").code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("pure --help").code == 0);
}
