#include "qha/experiments.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

namespace {

double note_value(const qha::ExperimentReport& rep, const std::string& key) {
    for (const auto& row : rep.checks) {
        if (row.contains("check") && row["check"] == key) {
            return row["value"].get<double>();
        }
    }
    FAIL("missing note " << key);
    return 0.0;
}

}  // namespace

TEST_CASE("core transform experiments pass on the small grid") {
    const qha::LineGrid g = qha::test::small_grid();
    // The Gaussian ambiguity check needs the wide frequency window of the
    // full grid: on the 64-point grid the edge alias is already 1.4e-5.
    CHECK(qha::ambiguity_gaussian_check(qha::test::default_grid()).pass);
    CHECK(qha::pool_unitarity_check(g, 5, 31).pass);
    CHECK(qha::covariance_check(g, 8, 32).pass);
    CHECK(qha::sft_check(qha::PhaseGrid(g), 33).pass);
    CHECK(qha::roundtrip_identity_check(g, 34).pass);
}

TEST_CASE("convolution and transform suites pass with small ensembles") {
    const qha::LineGrid g(48, 12.0 / 48.0);
    for (const qha::ExperimentReport& rep : qha::werner_young_suite(g, 6, 41)) {
        CHECK(rep.pass);
        CHECK(rep.max_ratio() <= 1.0 + 1e-6);
    }
    for (const qha::ExperimentReport& rep :
         qha::hausdorff_young_suite(g, 6, 42)) {
        CHECK(rep.pass);
    }
}

TEST_CASE("commutation, adjoint and algebra experiments pass") {
    const qha::PhaseGrid pg{qha::test::small_grid()};
    CHECK(qha::commutation_experiment(pg, 51).pass);
    CHECK(qha::weyl_commutation_experiment(pg, 52).pass);
    CHECK(qha::adjoint_parity_check(pg, 53).pass);
    CHECK(qha::algebra_nesting_check(pg, 54).pass);
}

TEST_CASE("norm-estimate experiments pass at reduced budget") {
    const qha::PhaseGrid pg{qha::test::small_grid()};
    const qha::EstimateBudget budget{8, 12, 61, 4};
    const qha::ExperimentReport iso = qha::isometry_experiment(pg, budget);
    CHECK(iso.pass);
    const qha::ExperimentReport dual = qha::duality_experiment(pg, budget);
    CHECK(dual.pass);
}

TEST_CASE("quantized Gaussian family experiment") {
    const qha::LineGrid g(128, 12.0 / 128.0);
    const qha::ExperimentReport rep =
        qha::gaussian_weyl_experiment(g, {0.3, 0.45, 0.5, 0.55, 1.0});
    CHECK(rep.pass);
    CHECK_THROWS_AS(qha::gaussian_weyl_experiment(g, {-0.1}),
                    std::invalid_argument);
    CHECK(qha::gaussian_lp_check(qha::PhaseGrid(g)).pass);
}

TEST_CASE("parity limit experiment extrapolates to the parity pairing") {
    const qha::LineGrid g = qha::test::default_grid();
    const std::vector<qha::ExperimentReport> reps =
        qha::parity_limit_experiment(g);
    REQUIRE(reps.size() == 3);
    for (const qha::ExperimentReport& rep : reps) {
        INFO(rep.name);
        CHECK(rep.pass);
    }
    // The targets are 2, -2 and 0 for the canonical pairs.
    CHECK(note_value(reps[0], "target") == Catch::Approx(2.0).margin(1e-6));
    CHECK(note_value(reps[1], "target") == Catch::Approx(-2.0).margin(1e-6));
    CHECK(note_value(reps[2], "target") == Catch::Approx(0.0).margin(1e-8));
}

TEST_CASE("m(0) recovery is eps independent") {
    const qha::PhaseGrid pg{qha::LineGrid(128, 12.0 / 128.0)};
    for (const qha::MultiplierSymbol& m :
         {qha::constant_symbol(pg, 1.0), qha::bochner_riesz(pg, 1.0),
          qha::sine_symbol(pg)}) {
        const qha::ExperimentReport rep = qha::m_at_zero_recovery(m);
        INFO(rep.to_json().dump(2));
        CHECK(rep.pass);
    }
}

TEST_CASE("equivalence experiment over a common-support bump family") {
    const qha::PhaseGrid pg{qha::test::small_grid()};
    const qha::EstimateBudget budget{6, 10, 71, 4};
    // R = 2 bump via the Bochner-Riesz profile scaled to radius 2.
    qha::PhaseFunction t =
        qha::PhaseFunction::sample(pg, [](double x, double xi) {
            const double u = 1.0 - (x * x + xi * xi) / 4.0;
            return u <= 0.0 ? 0.0 : u;
        });
    const qha::MultiplierSymbol m{std::move(t), 2.0};

    const qha::ExperimentReport p2 = qha::equivalence_experiment(m, 2.0, budget);
    INFO(p2.to_json().dump(2));
    CHECK(p2.pass);
    const qha::ExperimentReport p1 =
        qha::equivalence_experiment(m, 1.0, budget, false);
    CHECK(p1.pass);

    // Unannotated support and oversized support must throw.
    const qha::MultiplierSymbol bare{qha::gaussian_symbol(pg, 1.0).table};
    CHECK_THROWS_AS(qha::equivalence_experiment(bare, 2.0, budget),
                    std::invalid_argument);
    qha::PhaseFunction wide_t =
        qha::PhaseFunction::sample(pg, [](double x, double xi) {
            const double u = 1.0 - (x * x + xi * xi) / 16.0;
            return u <= 0.0 ? 0.0 : u;
        });
    const qha::MultiplierSymbol wide{std::move(wide_t), 4.0};
    CHECK_THROWS_AS(qha::equivalence_experiment(wide, 2.0, budget),
                    std::invalid_argument);
}

TEST_CASE("modulation probe agrees with the direct sum on a tiny grid") {
    const int n = 24;
    const qha::PhaseGrid pg{qha::LineGrid(n, 12.0 / n)};
    const qha::PhaseFunction F = qha::test::pseudo_random_table(pg, 81);

    for (double q : {1.0, qha::kInf}) {
        const double fast = qha::modulation_probe(F, q);
        // Direct evaluation of the windowed 2D Fourier coefficients.
        const double dA = pg.cell_area();
        const double root2 = std::sqrt(2.0);
        Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
        double sup = 0.0;
        for (int ux = 0; ux < n; ++ux) {
            for (int uk = 0; uk < n; ++uk) {
                for (int c = 0; c < n; ++c) {
                    for (int d = 0; d < n; ++d) {
                        qha::cplx v = 0.0;
                        for (int a = 0; a < n; ++a) {
                            for (int k = 0; k < n; ++k) {
                                const double wx =
                                    pg.x.point(pg.x.wrap(a - (ux - n / 2)));
                                const double wxi =
                                    pg.xi.point(pg.x.wrap(k - (uk - n / 2)));
                                const double win =
                                    root2 * std::exp(-std::numbers::pi *
                                                     (wx * wx + wxi * wxi));
                                const double ang =
                                    -2.0 * std::numbers::pi *
                                    double((a - n / 2) * (c - n / 2) +
                                           (k - n / 2) * (d - n / 2)) /
                                    n;
                                v += F.values(a, k) * win *
                                     std::polar(1.0, ang);
                            }
                        }
                        const double mag = std::abs(dA * v);
                        sup = std::max(sup, mag);
                        if (q != qha::kInf) {
                            acc(c, d) += std::pow(mag, q) * dA;
                        }
                    }
                }
            }
        }
        const double direct =
            q == qha::kInf ? sup : std::pow(acc.maxCoeff(), 1.0 / q);
        CHECK(fast == Catch::Approx(direct).epsilon(1e-9));
    }

    qha::PhaseFunction zero(pg);
    CHECK(qha::modulation_probe(zero, 2.0) == 0.0);
    const qha::PhaseFunction gauss =
        qha::PhaseFunction::sample(pg, [](double x, double xi) {
            return std::exp(-std::numbers::pi * (x * x + xi * xi));
        });
    CHECK(std::isfinite(qha::modulation_probe(gauss, 1.0)));
    CHECK(qha::modulation_report(gauss).pass);

    const qha::PhaseGrid big{qha::LineGrid(64, 12.0 / 64.0)};
    CHECK_THROWS_AS(qha::modulation_probe(qha::PhaseFunction(big), 2.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(qha::modulation_probe(zero, 0.5), std::invalid_argument);
}

TEST_CASE("trace probe emits data without asserting") {
    const qha::ExperimentReport rep =
        qha::trace_probe_question(qha::test::small_grid(), 91);
    CHECK(rep.pass);
    CHECK(rep.series.contains("trace_ratio"));
    for (double v : rep.series["trace_ratio"].get<std::vector<double>>()) {
        CHECK(std::isfinite(v));
        CHECK(v > 0.0);
    }
}

TEST_CASE("weak Lorentz symbol report") {
    const qha::ExperimentReport rep =
        qha::lorentz_symbol_report(qha::PhaseGrid(qha::test::small_grid()), 95);
    CHECK(rep.pass);
}

TEST_CASE("blow-up of the (2,1) estimate under rank-budget doubling") {
    const qha::PhaseGrid pg{qha::test::default_grid()};
    const qha::ExperimentReport rep = qha::blow_up_experiment(pg);
    INFO(rep.to_json().dump(2));
    CHECK(rep.pass);
    const std::vector<double> values =
        rep.series["estimate"].get<std::vector<double>>();
    REQUIRE(values.size() == 4);
    // The projector witness gives exactly sqrt(K) = b for this symbol.
    const double expected[] = {1.0, 2.0, 4.0, 8.0};
    for (std::size_t i = 0; i < values.size(); ++i) {
        CHECK(values[i] == Catch::Approx(expected[i]).margin(1e-6));
    }
    CHECK_THROWS_AS(
        qha::blow_up_experiment(qha::PhaseGrid(qha::test::small_grid()),
                                {1, 2, 8}),
        std::invalid_argument);
}

TEST_CASE("refinement ladder decays for Gaussian fixtures and flags wrap") {
    const qha::ExperimentReport good =
        qha::refine_experiment({64, 128, 256}, 12.0);
    INFO(good.to_json().dump(2));
    CHECK(good.pass);
    CHECK(note_value(good, "wrap_stall") == 0.0);
    const std::vector<double> ladder =
        good.series["gaussian_error"].get<std::vector<double>>();
    CHECK(ladder.front() > ladder.back());

    const qha::ExperimentReport cramped = qha::refine_experiment({32, 64}, 3.0);
    CHECK(note_value(cramped, "wrap_stall") == 1.0);
}

TEST_CASE("seeded reports are byte identical") {
    CHECK(qha::determinism_check(qha::LineGrid(48, 12.0 / 48.0), 99).pass);
}
