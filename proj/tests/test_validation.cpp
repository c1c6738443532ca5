#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "gsm/closed_form.hpp"
#include "gsm/errors.hpp"
#include "gsm/validation.hpp"

using namespace gsm;

namespace {

const DimensionlessParams kScenarioA{0.01, 1.15, 10.0, 10.0, 1.0, 1.0};

}  // namespace

TEST_CASE("relative deviation") {
    // published glucose cell pair at the strongest Thiele modulus
    const Deviation d = relative_deviation(0.4479, 0.4503);
    CHECK(!d.flagged);
    CHECK(d.value == doctest::Approx(0.005358338914936275).epsilon(1e-12));
    CHECK(std::abs(d.value - 0.0053) < 2e-4);

    CHECK(relative_deviation(0.7, 0.7).value == 0.0);
    CHECK(relative_deviation(0.0, 0.0).value == 0.0);
    CHECK(!relative_deviation(0.0, 0.0).flagged);
    CHECK(relative_deviation(0.0, 0.1).flagged);
}

TEST_CASE("mean of the published deviation column") {
    const double nums[] = {0.4479, 0.4666, 0.5246, 0.6264, 0.7806, 0.9999};
    const double approx[] = {0.4503, 0.4690, 0.5267, 0.6280, 0.7815, 1.0000};
    double mean = 0.0;
    for (int i = 0; i < 6; ++i) mean += relative_deviation(nums[i], approx[i]).value;
    mean /= 6.0;
    CHECK(std::abs(mean - 0.0030) < 2e-4);
}

TEST_CASE("glucose comparison table") {
    const ErrorReport report = reproduce_table(1, Grid(201), SolverConfig{});
    CHECK(report.table_id == 1);
    CHECK(report.species == Species::glucose);
    REQUIRE(report.scenarios.size() == 3);

    const ScenarioReport& weak = report.scenarios[0];
    REQUIRE(weak.rows.size() == 6);
    CHECK(weak.params.gamma_e1 == 10.0);
    CHECK(!weak.qualitative);
    CHECK(weak.rows[0].x == 0.0);
    CHECK(std::abs(weak.rows[0].vim - 0.9528) < 5e-4);
    CHECK(std::abs(weak.rows[0].numerical - 0.9528) < 2e-3);

    // wall row: both routes equal the boundary value exactly
    const ErrorReportRow& wall = weak.rows[5];
    CHECK(wall.numerical == 1.0);
    CHECK(wall.vim == 1.0);
    CHECK(wall.dev_vim.value == 0.0);
    CHECK(wall.dev_agm.value == 0.0);

    for (const ScenarioReport& s : report.scenarios) {
        CHECK(s.mean_dev_vim <= 0.01);
        double mean = 0.0;
        for (const ErrorReportRow& row : s.rows) mean += row.dev_vim.value;
        mean /= static_cast<double>(s.rows.size());
        CHECK(s.mean_dev_vim == doctest::Approx(mean).epsilon(1e-12));
    }
}

TEST_CASE("oxygen comparison table flags the unreproducible columns") {
    const ErrorReport report = reproduce_table(2, Grid(201), SolverConfig{});
    REQUIRE(report.scenarios.size() == 3);
    CHECK(!report.scenarios[0].qualitative);
    CHECK(report.scenarios[1].qualitative);
    CHECK(report.scenarios[2].qualitative);
    CHECK(std::abs(report.scenarios[0].rows[0].vim - 0.9764) < 5e-4);
}

TEST_CASE("gluconic acid comparison table") {
    const ErrorReport report = reproduce_table(3, Grid(201), SolverConfig{});
    REQUIRE(report.scenarios.size() == 3);
    CHECK(std::abs(report.scenarios[0].rows[0].vim - 0.1774) < 5e-4);
    CHECK(std::abs(report.scenarios[2].rows[0].vim - 1.4192) < 5e-4);
    for (const ScenarioReport& s : report.scenarios) {
        CHECK(s.mean_dev_vim <= 0.07);
        CHECK(s.rows[5].numerical == 0.0);
        CHECK(s.rows[5].vim == 0.0);
        CHECK(s.rows[5].dev_vim.value == 0.0);
    }
}

TEST_CASE("table contracts") {
    CHECK_THROWS_AS(reproduce_table(4, Grid(201), SolverConfig{}), ContractError);
    // 200 points cannot host X = 0.2 exactly
    CHECK_THROWS_AS(reproduce_table(1, Grid(200), SolverConfig{}), ContractError);
}

TEST_CASE("table generation is deterministic") {
    const ErrorReport a = reproduce_table(1, Grid(101), SolverConfig{});
    const ErrorReport b = reproduce_table(1, Grid(101), SolverConfig{});
    for (std::size_t s = 0; s < a.scenarios.size(); ++s) {
        for (std::size_t r = 0; r < a.scenarios[s].rows.size(); ++r) {
            CHECK(a.scenarios[s].rows[r].numerical == b.scenarios[s].rows[r].numerical);
            CHECK(a.scenarios[s].rows[r].vim == b.scenarios[s].rows[r].vim);
        }
    }
}

TEST_CASE("profile sweep") {
    const double k_anchor = thiele_k(10.0, 0.01, 1.15);
    const std::vector<double> ks{k_anchor};
    const SweepResult direct = profile_sweep(Species::glucose, "k", ks, kScenarioA, 11);
    REQUIRE(direct.series.size() == 1);
    CHECK(direct.x.front() == 0.0);
    CHECK(direct.x.back() == 1.0);
    CHECK(std::abs(direct.series[0].y.front() - 0.9528) < 5e-4);

    const std::vector<double> gammas{5.0, 20.0, 40.0};
    const SweepResult acid =
        profile_sweep(Species::gluconic_acid, "gammaS1", gammas,
                      DimensionlessParams{0.1, 1.0, 5.0, 5.0, 1.0, 1.0}, 21);
    REQUIRE(acid.series.size() == 3);
    for (const SweepSeries& s : acid.series) CHECK(s.y.back() == 0.0);  // wall value

    DimensionlessParams no_sink = kScenarioA;
    no_sink.gamma_s1 = 0.0;
    const std::vector<double> etas{0.5, 1.0};
    const SweepResult oxygen = profile_sweep(Species::oxygen, "eta", etas, no_sink, 9);
    for (const SweepSeries& s : oxygen.series) {
        for (double y : s.y) CHECK(y == 1.0);
    }
}

TEST_CASE("profile sweep contracts") {
    const std::vector<double> one{1.0};
    CHECK_THROWS_WITH_AS(
        profile_sweep(Species::glucose, "gamma", one, kScenarioA, 11),
        "unknown sweep parameter 'gamma' (valid: alpha, beta, gammaE1, gammaS1, eta, mu, k)",
        ContractError);
    CHECK_THROWS_AS(profile_sweep(Species::glucose, "alpha", {}, kScenarioA, 11), ContractError);
    CHECK_THROWS_AS(profile_sweep(Species::glucose, "alpha", one, kScenarioA, 1), ContractError);
}

TEST_CASE("sensitivity shares for the glucose target") {
    const Grid grid(201);
    const SolverConfig cfg;
    const SensitivityReport report =
        sensitivity_analysis(Species::glucose, kScenarioA, grid, cfg);
    REQUIRE(report.entries.size() == 6);

    double sum = 0.0;
    double share_alpha = 0.0, share_beta = 0.0, share_mu = -1.0;
    for (const SensitivityEntry& e : report.entries) {
        CHECK(!e.failed);
        CHECK(e.share_percent >= 0.0);
        sum += e.share_percent;
        if (e.parameter == "alpha") share_alpha = e.share_percent;
        if (e.parameter == "beta") share_beta = e.share_percent;
        if (e.parameter == "mu") share_mu = e.share_percent;
    }
    CHECK(std::abs(sum - 100.0) < 0.1);
    // the glucose equation never sees the acid diffusivity
    CHECK(share_mu == 0.0);
    CHECK(share_alpha > share_beta);
}

TEST_CASE("sensitivity agrees with the closed-form oracle") {
    // central differences of sech(sqrt(k)) through the linearized group k
    const auto closed_form_center = [](double alpha, double beta) {
        return 1.0 / std::cosh(std::sqrt(thiele_k(10.0, alpha, beta)));
    };
    const double delta = 0.01;
    const double f0 = closed_form_center(0.01, 1.15);
    const double oracle_alpha =
        std::abs((closed_form_center(0.01 * 1.01, 1.15) - closed_form_center(0.01 * 0.99, 1.15)) /
                 f0) /
        (2.0 * delta);
    const double oracle_beta =
        std::abs((closed_form_center(0.01, 1.15 * 1.01) - closed_form_center(0.01, 1.15 * 0.99)) /
                 f0) /
        (2.0 * delta);
    CHECK(oracle_alpha > oracle_beta);  // 1/alpha dominates the denominator

    const SensitivityReport report =
        sensitivity_analysis(Species::glucose, kScenarioA, Grid(201), SolverConfig{}, delta);
    const double s_alpha = report.entries[0].sensitivity;
    const double s_beta = report.entries[1].sensitivity;
    CHECK(s_alpha / oracle_alpha == doctest::Approx(1.0).epsilon(0.05));
    CHECK(s_beta / oracle_beta == doctest::Approx(1.0).epsilon(0.10));
}

TEST_CASE("sensitivity is deterministic and validates delta") {
    const Grid grid(101);
    const SolverConfig cfg;
    const SensitivityReport a = sensitivity_analysis(Species::oxygen, kScenarioA, grid, cfg);
    const SensitivityReport b = sensitivity_analysis(Species::oxygen, kScenarioA, grid, cfg);
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        CHECK(a.entries[i].share_percent == b.entries[i].share_percent);
    }
    CHECK_THROWS_AS(sensitivity_analysis(Species::glucose, kScenarioA, grid, cfg, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sensitivity_analysis(Species::glucose, kScenarioA, grid, cfg, 0.2),
                    std::invalid_argument);
}

TEST_CASE("sensitivity with the mean functional") {
    const SensitivityReport report =
        sensitivity_analysis(Species::gluconic_acid, kScenarioA, Grid(101), SolverConfig{}, 0.01,
                             SensitivityFunctional::mean_over_x);
    double sum = 0.0;
    for (const SensitivityEntry& e : report.entries) sum += e.share_percent;
    CHECK(std::abs(sum - 100.0) < 0.1);
}

TEST_CASE("steady invariant audit on a converged solution") {
    const Grid grid(201);
    const ConcentrationField f = solve_steady(kScenarioA, grid, SolverConfig{});
    const InvariantAudit audit = check_steady_invariants(f, kScenarioA);
    CHECK(audit.coupling_uv <= 1e-8);
    CHECK(audit.coupling_uw <= 1e-8);
    CHECK(audit.boundary == 0.0);
    CHECK(audit.u_nondecreasing);
    CHECK(audit.v_nondecreasing);
    CHECK(audit.w_nonincreasing);
    CHECK(!audit.negative_concentration);
    CHECK(audit.min_u >= 0.0);
}

TEST_CASE("steady invariant audit on the sampled closed forms") {
    const Grid grid(101);
    const ClosedFormCoefficients c = closed_form_coefficients(kScenarioA);
    ConcentrationField f;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.point(i);
        f.u.push_back(steady_u(x, c));
        f.v.push_back(steady_v(x, kScenarioA, c));
        f.w.push_back(steady_w(x, kScenarioA, c));
    }
    const InvariantAudit audit = check_steady_invariants(f, kScenarioA);
    CHECK(audit.coupling_uv <= 1e-12);
    CHECK(audit.coupling_uw <= 1e-12);
}

TEST_CASE("monotone, nonnegative steady solutions across the table scenarios") {
    const Grid grid(101);
    const SolverConfig cfg;
    std::vector<DimensionlessParams> scenarios;
    for (double g : {10.0, 210.0, 350.0}) scenarios.push_back({0.01, 1.15, g, 10.0, 1.0, 1.0});
    for (double g : {5.0, 20.0, 40.0}) scenarios.push_back({0.1, 1.0, 5.0, g, 1.0, 1.0});
    for (const DimensionlessParams& p : scenarios) {
        const ConcentrationField f = solve_steady(p, grid, cfg);
        const InvariantAudit audit = check_steady_invariants(f, p);
        CHECK(audit.u_nondecreasing);
        CHECK(audit.v_nondecreasing);
        CHECK(audit.w_nonincreasing);
        CHECK(!audit.negative_concentration);
        CHECK(audit.min_u >= 0.0);
        CHECK(audit.min_v >= 0.0);
    }
}

TEST_CASE("audit reports an injected boundary violation") {
    const Grid grid(51);
    ConcentrationField f = solve_steady(kScenarioA, grid, SolverConfig{});
    f.w.back() = 0.5;
    const InvariantAudit audit = check_steady_invariants(f, kScenarioA);
    CHECK(audit.boundary == 0.5);
    CHECK(!audit.w_nonincreasing);
}

TEST_CASE("sensitivity is invariant under a joint physical rescaling") {
    DimensionalParams d;
    d.c_g_star = 1e-2;
    d.c_ox_star = 1.15e-3;
    d.d_g = 1e-6;
    d.d_ox = 1e-6;
    d.d_a = 1e-6;
    d.k_g = 1.0;
    d.k_ox = 1e-3;
    d.v_max = 1e-5;
    d.half_thickness = 0.1;
    DimensionalParams scaled = d;
    scaled.v_max *= 4.0;
    scaled.d_g *= 4.0;
    scaled.d_ox *= 4.0;
    scaled.d_a *= 4.0;

    const DimensionlessParams p1 = nondimensionalize(d);
    const DimensionlessParams p2 = nondimensionalize(scaled);
    CHECK(p1.gamma_e1 == p2.gamma_e1);

    const Grid grid(101);
    const SolverConfig cfg;
    const SensitivityReport r1 = sensitivity_analysis(Species::glucose, p1, grid, cfg);
    const SensitivityReport r2 = sensitivity_analysis(Species::glucose, p2, grid, cfg);
    for (std::size_t i = 0; i < r1.entries.size(); ++i) {
        CHECK(r1.entries[i].share_percent == r2.entries[i].share_percent);
    }
}
