#include "qha/config.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("qha-io-test-" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

}  // namespace

TEST_CASE("phase table CSV round trip is exact") {
    const qha::LineGrid g(16, 12.0 / 16.0);
    const qha::PhaseGrid pg(g);
    const qha::PhaseFunction F = qha::test::pseudo_random_table(pg, 7);
    TempDir dir;
    const std::string path = dir.file("table.csv");
    qha::write_phase_csv(F, path);
    const qha::PhaseFunction back = qha::read_phase_csv(path, pg);
    CHECK((back.values - F.values).cwiseAbs().maxCoeff() == 0.0);

    std::ifstream is(path);
    std::string header;
    std::getline(is, header);
    CHECK(header.front() == ',');
    CHECK(header.find(',') != std::string::npos);

    const qha::PhaseGrid other{qha::LineGrid(32, 12.0 / 32.0)};
    CHECK_THROWS_AS(qha::read_phase_csv(path, other), std::runtime_error);
}

TEST_CASE("complex cell grammar covers signs and exponents") {
    using qha::detail::complex_cell;
    using qha::detail::parse_complex_cell;
    for (qha::cplx v : {qha::cplx(1.5, -0.25), qha::cplx(-3e-15, 2e+16),
                        qha::cplx(0.0, 0.0), qha::cplx(-1.0, -1e-300)}) {
        CHECK(parse_complex_cell(complex_cell(v)) == v);
    }
    CHECK(parse_complex_cell("1+2j") == qha::cplx(1.0, 2.0));
    CHECK(parse_complex_cell("-1e-5-2E+3j") == qha::cplx(-1e-5, -2e3));
    CHECK_THROWS_AS(parse_complex_cell("3.5"), std::runtime_error);
    CHECK_THROWS_AS(parse_complex_cell("j"), std::runtime_error);
}

TEST_CASE("phase table binary dump round trips and rejects bad magic") {
    const qha::LineGrid g(12, 1.0);
    const qha::PhaseGrid pg(g);
    const qha::PhaseFunction F = qha::test::pseudo_random_table(pg, 9);
    TempDir dir;
    const std::string path = dir.file("table.qhaphf");
    qha::write_phase_binary(F, path);
    const qha::PhaseFunction back = qha::read_phase_binary(path, pg);
    CHECK((back.values - F.values).cwiseAbs().maxCoeff() == 0.0);

    const qha::PhaseGrid other{qha::LineGrid(16, 1.0)};
    CHECK_THROWS_AS(qha::read_phase_binary(path, other), std::runtime_error);

    const std::string bad = dir.file("bad.qhaphf");
    std::ofstream(bad, std::ios::binary) << "NOTMAGIC" << std::string(32, 'x');
    CHECK_THROWS_AS(qha::read_phase_binary(bad, pg), std::runtime_error);
}

TEST_CASE("operator kernel binary dump round trips") {
    const qha::LineGrid g(10, 0.5);
    qha::OperatorMatrix T = qha::OperatorMatrix::zero(g);
    qha::detail::Rng rng(4);
    for (int r = 0; r < g.n; ++r) {
        for (int c = 0; c < g.n; ++c) T.kernel(r, c) = rng.cnormal();
    }
    TempDir dir;
    const std::string path = dir.file("kernel.qhaopk");
    qha::write_operator_binary(T, path);
    const qha::OperatorMatrix back = qha::read_operator_binary(path, g);
    CHECK((back.kernel - T.kernel).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(qha::read_operator_binary(path, qha::LineGrid(12, 0.5)),
                    std::runtime_error);
    const std::string bad = dir.file("bad.qhaopk");
    std::ofstream(bad, std::ios::binary) << "QHAPHF01" << std::string(8, 0);
    CHECK_THROWS_AS(qha::read_operator_binary(bad, g), std::runtime_error);
}

TEST_CASE("spectrum and series CSV exports are well formed") {
    TempDir dir;
    qha::SingularSpectrum s(3);
    s << 2.0, 1.0, 0.25;
    const std::string spath = dir.file("spectrum.csv");
    qha::write_spectrum_csv(s, spath);
    std::ifstream is(spath);
    std::string line;
    std::getline(is, line);
    CHECK(line == "index,singular_value");
    std::getline(is, line);
    CHECK(line == "0,2");

    qha::ExperimentReport rep;
    rep.series["eps2"] = std::vector<double>{0.1, 0.2};
    rep.series["gap"] = std::vector<double>{1.0, 0.5};
    const std::string cpath = dir.file("series.csv");
    qha::write_series_csv(rep, cpath);
    std::ifstream cs(cpath);
    std::getline(cs, line);
    CHECK(line == "eps2,gap");
    std::getline(cs, line);
    CHECK(line == "0.1,1");
}

TEST_CASE("run config parsing validates grid, dimension and seed") {
    const qha::ordered_json good = {
        {"n", 64}, {"length", 12.0}, {"d", 1}, {"seed", 17}};
    const qha::RunConfig cfg = qha::parse_run_config(good);
    CHECK(cfg.n == 64);
    CHECK(cfg.length == 12.0);
    CHECK(cfg.has_seed);
    CHECK(cfg.seed == 17);
    CHECK(cfg.grid() == qha::LineGrid(64, 12.0 / 64.0));

    CHECK_FALSE(qha::parse_run_config({{"n", 64}}).has_seed);
    CHECK_THROWS_AS(qha::parse_run_config({{"n", 63}}), qha::ConfigError);
    CHECK_THROWS_AS(qha::parse_run_config({{"n", 64}, {"d", 2}}),
                    qha::ConfigError);
    CHECK_THROWS_AS(qha::parse_run_config({{"length", -1.0}}),
                    qha::ConfigError);
    CHECK_THROWS_AS(qha::parse_run_config({{"n", "big"}}), qha::ConfigError);
    CHECK_THROWS_AS(qha::parse_run_config(qha::ordered_json::array()),
                    qha::ConfigError);
}

TEST_CASE("exponents parse numbers and the inf token") {
    CHECK(qha::exponent_from_json(qha::ordered_json(2.0)) == 2.0);
    CHECK(qha::exponent_from_json(qha::ordered_json("inf")) == qha::kInf);
    CHECK_THROWS_AS(qha::exponent_from_json(qha::ordered_json(0.5)),
                    qha::ConfigError);
    CHECK_THROWS_AS(qha::exponent_from_json(qha::ordered_json("huge")),
                    qha::ConfigError);
}

TEST_CASE("symbols build from config blocks") {
    const qha::PhaseGrid pg{qha::LineGrid(32, 12.0 / 32.0)};
    const qha::MultiplierSymbol br = qha::symbol_from_config(
        {{"family", "bochner_riesz"}, {"delta", 1.0}}, pg);
    CHECK(br.compact_support.has_value());
    CHECK(br.sup_norm == Catch::Approx(1.0));

    const qha::MultiplierSymbol gs =
        qha::symbol_from_config({{"family", "gaussian"}, {"eps", 1.0}}, pg);
    CHECK_FALSE(gs.compact_support.has_value());

    const qha::MultiplierSymbol cs =
        qha::symbol_from_config({{"family", "constant"}, {"value", 0.5}}, pg);
    CHECK(cs.sup_norm == 0.5);

    CHECK_THROWS_AS(qha::symbol_from_config({{"family", "unknown"}}, pg),
                    qha::ConfigError);
    CHECK_THROWS_AS(qha::symbol_from_config({{"family", "bochner_riesz"}}, pg),
                    qha::ConfigError);
    CHECK_THROWS_AS(
        qha::symbol_from_config(
            {{"family", "gaussian"}, {"eps", 1.0}, {"support", 2.0}}, pg),
        qha::ConfigError);

    TempDir dir;
    const std::string path = dir.file("symbol.csv");
    qha::write_phase_csv(qha::bochner_riesz(pg, 2.0).table, path);
    const qha::MultiplierSymbol fromCsv = qha::symbol_from_config(
        {{"family", "csv"}, {"path", path}, {"support", 1.0}}, pg);
    CHECK(fromCsv.compact_support == 1.0);
    CHECK(fromCsv.sup_norm == Catch::Approx(1.0));
    CHECK_THROWS_AS(
        qha::symbol_from_config({{"family", "csv"}, {"path", "/nope"}}, pg),
        qha::ConfigError);
}
