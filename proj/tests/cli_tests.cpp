#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(LEVYCLT_CLI_PATH) + " " + args + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE(is.good());
    std::ostringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

bool exists(const std::string& path) {
    std::ifstream is(path);
    return is.good();
}

const std::string kPowerLog2 =
    "--family powerlog --sigma-shell 2.718281828459045 --beta 2 --dim 1";

} // namespace

TEST_CASE("scaling: writes csv + json + config echo and exits 0") {
    CHECK(run_cli("scaling " + kPowerLog2 +
                  " --t 10 100 --seed 9 --out /tmp/levyclt_cli_sc") == 0);
    CHECK(exists("/tmp/levyclt_cli_sc.csv"));
    CHECK(exists("/tmp/levyclt_cli_sc.json"));
    const auto echo = slurp("/tmp/levyclt_cli_sc.config.json");
    CHECK(echo.find("\"seed\"") != std::string::npos);
    CHECK(echo.find("\"kappa\"") != std::string::npos);
    const auto csv = slurp("/tmp/levyclt_cli_sc.csv");
    CHECK(csv.find("delta_closed_form") != std::string::npos);
    CHECK(csv.find(';') == std::string::npos); // '.' decimal, ',' separator
}

TEST_CASE("config file + flag overrides: flags win") {
    {
        std::ofstream os("/tmp/levyclt_cli.conf");
        os << "family = powerlog\nsigma_shell = 2.718281828459045\n"
           << "beta = 1\ndim = 1\n";
    }
    CHECK(run_cli("scaling --config /tmp/levyclt_cli.conf --beta 2 --t 100 "
                  "--seed 1 --out /tmp/levyclt_cli_ov") == 0);
    const auto echo = slurp("/tmp/levyclt_cli_ov.config.json");
    CHECK(echo.find("\"beta\": \"2\"") != std::string::npos);
}

TEST_CASE("exit code taxonomy") {
    // Unknown family: config error.
    CHECK(run_cli("scaling --family cauchy --dim 1 --t 10 --out /tmp/levyclt_x") == 2);
    // Invalid grid: config error.
    CHECK(run_cli("sweep " + kPowerLog2 +
                  " --t-min 100 --t-max 10 --seed 1 --out /tmp/levyclt_x") == 2);
    // Degenerate scaling (zero measure, zero Gaussian part): numeric error.
    CHECK(run_cli("scaling --family zero --dim 1 --t 10 --seed 1 "
                  "--out /tmp/levyclt_x") == 3);
    // Unreadable config file: I/O error.
    CHECK(run_cli("scaling --config /nonexistent/levy.conf --t 10 "
                  "--out /tmp/levyclt_x") == 4);
    // demo-circle in d = 1: config error.
    CHECK(run_cli("demo-circle --circle-dim 1 --seed 1 --out /tmp/levyclt_x") == 2);
    // wasserstein requires dim 1.
    CHECK(run_cli("wasserstein " + kPowerLog2 + " --dim 2 --seed 1 "
                  "--out /tmp/levyclt_x") == 2);
}

TEST_CASE("sweep reruns are byte identical, independent of --threads") {
    const std::string base = "sweep " + kPowerLog2 +
                             " --t-min 100 --t-max 1000 --t-ratio 3.1622776601683795 "
                             "--mc 1000 --seed 77 ";
    CHECK(run_cli(base + "--threads 1 --out /tmp/levyclt_cli_s1") == 0);
    CHECK(run_cli(base + "--threads 1 --out /tmp/levyclt_cli_s2") == 0);
    CHECK(run_cli(base + "--threads 4 --out /tmp/levyclt_cli_s3") == 0);
    const auto j1 = slurp("/tmp/levyclt_cli_s1.json");
    CHECK(j1 == slurp("/tmp/levyclt_cli_s2.json"));
    CHECK(j1 == slurp("/tmp/levyclt_cli_s3.json"));
    CHECK(slurp("/tmp/levyclt_cli_s1.csv") == slurp("/tmp/levyclt_cli_s3.csv"));
}

TEST_CASE("asmussen: malformed moment spec rejected, table well formed") {
    CHECK(run_cli("asmussen " + kPowerLog2 + " -p 7 --seed 1 --out /tmp/levyclt_x") == 2);
    CHECK(run_cli("asmussen --family powerlog --sigma-shell 2.718281828459045 "
                  "--beta 3 --dim 2 -p 1 --n-list 64 256 --mc 20000 --seed 4 "
                  "--out /tmp/levyclt_cli_as") == 0);
    const auto csv = slurp("/tmp/levyclt_cli_as.csv");
    CHECK(csv.rfind("n,estimate,ci,target", 0) == 0);
    // Target column is constant across n.
    std::istringstream is(csv);
    std::string line, t1, t2;
    std::getline(is, line);
    std::getline(is, t1);
    std::getline(is, t2);
    CHECK(t1.substr(t1.rfind(',')) == t2.substr(t2.rfind(',')));
}

TEST_CASE("extract-seq consumes a tabulated csv") {
    {
        std::ofstream os("/tmp/levyclt_cli_tab.csv");
        os << "t,g\n";
        for (int i = 0; i < 3000; ++i) {
            const double u = 0.001 + i * (13.8 / 2999.0);
            os.precision(17);
            os << std::exp(u) << "," << 1.0 / ((u + 1.0) * (u + 1.0)) << "\n";
        }
    }
    CHECK(run_cli("extract-seq --input /tmp/levyclt_cli_tab.csv "
                  "--out /tmp/levyclt_cli_ex") == 0);
    const auto csv = slurp("/tmp/levyclt_cli_ex.csv");
    CHECK(csv.rfind("n,t,g,m", 0) == 0);
    CHECK(run_cli("extract-seq --input /nonexistent.csv --out /tmp/levyclt_x") == 4);
}
