// End-to-end checks of the command-line tool: exit codes, CSV schema,
// determinism, manifest emission. The binary path arrives as argv[1]
// (wired up by CTest); all artifacts live in the working directory.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string g_cli;

int run(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " >cli_stdout.tmp 2>cli_stderr.tmp";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

void write_small_config(const std::string& path) {
    std::ofstream out(path);
    out << "region_radius_m=50\n"
        << "lambda_s=5e-3\n"
        << "lambda_m=1e-4\n"
        << "n_trials=500\n"
        << "seed=11\n";
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1)
        g_cli = argv[1];
    else if (const char* env = std::getenv("EHSCN_CLI_BIN"))
        g_cli = env;
    else {
        std::fprintf(stderr, "usage: cli_tests <path-to-ehscn-binary>\n");
        return 2;
    }
    doctest::Context ctx;
    return ctx.run();
}

TEST_CASE("show-defaults prints the paper parameter set") {
    REQUIRE(run("--show-defaults") == 0);
    const std::string out = slurp("cli_stdout.tmp");
    CHECK(out.find("eta=0.69999999999999996") != std::string::npos);
    CHECK(out.find("theta_t_db=5") != std::string::npos);
    CHECK(out.find("p_m_dbm=40") != std::string::npos);
    CHECK(out.find("n0_dbm=-120") != std::string::npos);
    CHECK(out.find("association=nearest_any") != std::string::npos);
}

TEST_CASE("bad config exits 1") {
    std::ofstream("cli_bad.cfg") << "beta=1.5\n";
    CHECK(run("point --config cli_bad.cfg --out cli_bad.csv") == 1);
    const std::string err = slurp("cli_stderr.tmp");
    CHECK(err.find("beta") != std::string::npos);
    std::remove("cli_bad.cfg");

    CHECK(run("point --config does_not_exist.cfg") == 1);
}

TEST_CASE("point runs are byte-reproducible") {
    write_small_config("cli_point.cfg");
    REQUIRE(run("point --config cli_point.cfg --seed 7 --out cli_a.csv") == 0);
    REQUIRE(run("point --config cli_point.cfg --seed 7 --out cli_b.csv") == 0);
    const std::string a = slurp("cli_a.csv");
    CHECK(!a.empty());
    CHECK(a == slurp("cli_b.csv"));

    const auto lines = lines_of(a);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] ==
          "outage_mean,outage_ci_lo,outage_ci_hi,ee_mean,ee_ci_lo,ee_ci_hi,"
          "n_trials,n_failed");

    SUBCASE("different seed changes the result") {
        REQUIRE(run("point --config cli_point.cfg --seed 8 --out cli_c.csv") ==
                0);
        CHECK(a != slurp("cli_c.csv"));
    }

    SUBCASE("manifest reruns reproduce the CSV exactly") {
        // the manifest doubles as a config file with the resolved values
        REQUIRE(run("point --config cli_a.csv.manifest --out cli_d.csv") == 0);
        CHECK(a == slurp("cli_d.csv"));
    }

    std::remove("cli_point.cfg");
}

TEST_CASE("sweep-beta emits one row per grid point") {
    write_small_config("cli_sweep.cfg");
    REQUIRE(run("sweep-beta --config cli_sweep.cfg --grid 0:1:0.25 "
                "--out cli_sweep.csv") == 0);
    const auto lines = lines_of(slurp("cli_sweep.csv"));
    REQUIRE(lines.size() == 6);  // header + 5 rows
    CHECK(lines[0].rfind("param_value,", 0) == 0);
    CHECK(lines[1].rfind("0,", 0) == 0);
    CHECK(lines[5].rfind("1,", 0) == 0);
    std::remove("cli_sweep.cfg");
}

TEST_CASE("compare-association labels both curves") {
    write_small_config("cli_assoc.cfg");
    REQUIRE(run("compare-association --config cli_assoc.cfg --grid 0:0.4:0.2 "
                "--out cli_assoc.csv") == 0);
    const auto lines = lines_of(slurp("cli_assoc.csv"));
    REQUIRE(lines.size() == 7);  // header + 3 rows per policy
    CHECK(lines[0].rfind("association,param_value,", 0) == 0);
    int n_any = 0;
    int n_off = 0;
    for (const auto& line : lines) {
        if (line.rfind("nearest_any,", 0) == 0)
            ++n_any;
        if (line.rfind("offgrid_only,", 0) == 0)
            ++n_off;
    }
    CHECK(n_any == 3);
    CHECK(n_off == 3);
    std::remove("cli_assoc.cfg");
}

TEST_CASE("compare-pathloss runs dual and single variants") {
    write_small_config("cli_cp.cfg");
    REQUIRE(run("compare-pathloss --config cli_cp.cfg --grid 2e-3,6e-3 "
                "--out cli_cp.csv") == 0);
    const auto lines = lines_of(slurp("cli_cp.csv"));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0].rfind("pathloss_mode,param_value,", 0) == 0);
    CHECK(lines[1].rfind("dual,", 0) == 0);
    CHECK(lines[3].rfind("single,", 0) == 0);
    std::remove("cli_cp.cfg");
}

TEST_CASE("optimize reports a winner with separation flag") {
    write_small_config("cli_opt.cfg");
    REQUIRE(run("optimize --config cli_opt.cfg --param beta "
                "--objective min_outage --grid 0:1:0.5 --out cli_opt.csv") ==
            0);
    const auto lines = lines_of(slurp("cli_opt.csv"));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].rfind("objective,param,param_value,", 0) == 0);
    CHECK(lines[1].rfind("min_outage,beta,", 0) == 0);
    std::remove("cli_opt.cfg");
}

TEST_CASE("unknown preset fails cleanly") {
    CHECK(run("sweep-beta --preset nope --out cli_x.csv") == 1);
}
