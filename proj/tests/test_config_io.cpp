#include <doctest.h>

#include "levyclt/batch_io.hpp"
#include "levyclt/config.hpp"
#include "levyclt/errors.hpp"
#include "levyclt/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace levyclt;

TEST_CASE("key-value parsing: comments, whitespace, overrides, errors") {
    const auto kv = parse_key_values(
        "# triplet\n"
        "family = powerlog\n"
        "  sigma_shell=2.718281828459045   # inner radius\n"
        "beta = 1\n"
        "beta = 2\n"
        "\n"
        "dim = 2\n");
    CHECK(kv.at("family") == "powerlog");
    CHECK(kv.at("beta") == "2");
    CHECK(kv.at("dim") == "2");
    CHECK(kv.size() == 4);

    CHECK_THROWS_AS(parse_key_values("no equals sign here"), ConfigError);
    CHECK_THROWS_AS(parse_key_values("= value"), ConfigError);
}

TEST_CASE("triplet assembly from keys") {
    auto kv = parse_key_values(
        "family = powerlog\nsigma_shell = 2.718281828459045\nbeta = 2\ndim = 2\n"
        "gaussian_cov = 1 0 0 1\nkappa = 3.5\n");
    const auto cfg = triplet_from_key_values(kv);
    CHECK(cfg.triplet.dim() == 2);
    CHECK(cfg.triplet.measure.family == MeasureFamily::PowerLog);
    CHECK(cfg.triplet.measure.beta == 2.0);
    CHECK(cfg.triplet.gaussian_cov(0, 0) == 1.0);
    CHECK(cfg.triplet.gaussian_cov(0, 1) == 0.0);
    REQUIRE(cfg.kappa.has_value());
    CHECK(*cfg.kappa == 3.5);

    kv["gaussian_cov"] = "0.5";
    CHECK(triplet_from_key_values(kv).triplet.gaussian_cov(1, 1) == 0.5);
    kv["gaussian_cov"] = "1 2 3";
    CHECK_THROWS_AS(triplet_from_key_values(kv), ConfigError);

    CHECK_THROWS_AS(triplet_from_key_values(parse_key_values("family = cauchy\n")),
                    ConfigError);
    CHECK_THROWS_AS(triplet_from_key_values(parse_key_values("dim = 1\n")),
                    ConfigError);
    CHECK_THROWS_AS(
        triplet_from_key_values(parse_key_values(
            "family = powerlog\nsigma_shell = 2.7\nbeta = 2\nkappa = 0.5\n")),
        ConfigError);

    const auto zero = triplet_from_key_values(parse_key_values("family = zero\ndim = 3\n"));
    CHECK(zero.triplet.measure.family == MeasureFamily::Zero);
    CHECK_FALSE(zero.kappa.has_value());
}

TEST_CASE("missing config file raises an I/O error") {
    CHECK_THROWS_AS(load_triplet_config("/nonexistent/path/levy.conf"), IoError);
}

TEST_CASE("binary batch round trip is bit exact") {
    SampleBatch batch;
    batch.t = 3.5;
    batch.n = 7;
    batch.d = 2;
    batch.seed = 0x123456789ABCDEFull;
    for (std::uint32_t i = 0; i < batch.n * batch.d; ++i)
        batch.values.push_back(std::sin(i) * 1e3);
    const std::string path = "/tmp/levyclt_test_batch.lclb";
    write_lclb(batch, path);
    const auto back = read_lclb(path);
    CHECK(back.t == batch.t);
    CHECK(back.n == batch.n);
    CHECK(back.d == batch.d);
    CHECK(back.seed == batch.seed);
    CHECK(back.values == batch.values);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_lclb("/nonexistent/levyclt.lclb"), IoError);
}

TEST_CASE("corrupt magic is rejected") {
    const std::string path = "/tmp/levyclt_bad_magic.lclb";
    {
        std::ofstream os(path, std::ios::binary);
        os << "NOPE followed by garbage";
    }
    CHECK_THROWS_AS(read_lclb(path), IoError);
    std::remove(path.c_str());
}

TEST_CASE("CSV export uses 17 significant digits and a dot decimal") {
    SampleBatch batch;
    batch.t = 1.0;
    batch.n = 1;
    batch.d = 2;
    batch.values = {1.0 / 3.0, -2.5e-8};
    const std::string path = "/tmp/levyclt_test_batch.csv";
    write_batch_csv(batch, path);
    std::ifstream is(path);
    std::string header, row;
    std::getline(is, header);
    std::getline(is, row);
    CHECK(row.find("0.33333333333333331") != std::string::npos);
    CHECK(row.find("-2.4999999999999999e-08") != std::string::npos);
    CHECK(row.find(',') != std::string::npos);
    std::remove(path.c_str());
}
