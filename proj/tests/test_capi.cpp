#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "gsm.h"

namespace {

gsm_params scenario_a() { return gsm_params{0.01, 1.15, 10.0, 10.0, 1.0, 1.0}; }

}  // namespace

TEST_CASE("version and error strings exist") {
    CHECK(gsm_version() != nullptr);
    CHECK(gsm_last_error() != nullptr);
}

TEST_CASE("nondimensionalize through the C surface") {
    gsm_dimensional_params d{1e-2, 1.15e-3, 1e-6, 1e-6, 1e-6, 1.0, 1e-3, 1e-5, 0.1};
    gsm_params p{};
    REQUIRE(gsm_nondimensionalize(&d, &p) == GSM_OK);
    CHECK(p.gamma_e1 == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(p.alpha == doctest::Approx(0.01).epsilon(1e-12));

    d.d_g = -1.0;
    CHECK(gsm_nondimensionalize(&d, &p) == GSM_ERROR_DOMAIN);
    CHECK(std::string(gsm_last_error()).find("d_g") != std::string::npos);
    CHECK(gsm_nondimensionalize(nullptr, &p) == GSM_ERROR_CONTRACT);
}

TEST_CASE("kinetics through the C surface") {
    double g = 0.0;
    REQUIRE(gsm_reaction_term(1.0, 1.0, 0.01, 1.15, &g) == GSM_OK);
    CHECK(g == doctest::Approx(0.009816474605207).epsilon(1e-12));
    CHECK(gsm_reaction_term(-1.0, 1.0, 0.01, 1.15, &g) == GSM_ERROR_DOMAIN);

    double u = 0, v = 0, w = 0;
    REQUIRE(gsm_initial_profile(0.0, &u, &v, &w) == GSM_OK);
    CHECK(u == doctest::Approx(0.6480542736638855).epsilon(1e-14));
    CHECK(u + w == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(gsm_initial_profile(2.0, &u, &v, &w) == GSM_ERROR_DOMAIN);
}

TEST_CASE("closed forms through the C surface") {
    const gsm_params p = scenario_a();
    double k = 0.0, m = 0.0;
    REQUIRE(gsm_thiele_k(10.0, 0.01, 1.15, &k) == GSM_OK);
    CHECK(k == doctest::Approx(0.09816474605207).epsilon(1e-12));
    REQUIRE(gsm_agm_m(10.0, 0.01, 1.15, 1e-12, &m) == GSM_OK);
    CHECK(std::abs(m - 0.3133) < 5e-4);

    gsm_closed_form_coefficients c{};
    REQUIRE(gsm_closed_form_coefficients_compute(&p, 1e-12, &c) == GSM_OK);
    CHECK(std::abs(c.m - c.sqrt_k) <= 1e-10);

    double u = 0, v = 0, w = 0;
    REQUIRE(gsm_closed_form_profile(&p, GSM_CLOSED_FORM_VIM, 0.0, &u, &v, &w) == GSM_OK);
    CHECK(std::abs(u - 0.9528) < 5e-4);
    CHECK(std::abs(v - 0.9764) < 5e-4);
    double ua = 0;
    REQUIRE(gsm_closed_form_profile(&p, GSM_CLOSED_FORM_AGM, 0.0, &ua, nullptr, nullptr) ==
            GSM_OK);
    CHECK(std::abs(ua - u) < 1e-9);
    CHECK(gsm_closed_form_profile(&p, 7, 0.0, &u, &v, &w) == GSM_ERROR_CONTRACT);

    REQUIRE(gsm_vim_profile(&p, 0.0, 0.1, &u, &v, &w) == GSM_OK);
    CHECK(u == doctest::Approx(0.7064760380079059).epsilon(1e-12));
}

TEST_CASE("steady solve and audit through the C surface") {
    const gsm_params p = scenario_a();
    gsm_solver_config cfg;
    gsm_solver_config_defaults(&cfg);
    CHECK(cfg.grid_n == 201);

    gsm_field* field = nullptr;
    REQUIRE(gsm_solve_steady(&p, &cfg, &field) == GSM_OK);
    REQUIRE(field != nullptr);
    const size_t n = gsm_field_size(field);
    CHECK(n == 201);

    std::vector<double> x(n), u(n), v(n), w(n);
    REQUIRE(gsm_field_values(field, x.data(), u.data(), v.data(), w.data()) == GSM_OK);
    CHECK(x.front() == 0.0);
    CHECK(x.back() == 1.0);
    CHECK(std::abs(u.front() - 0.9528) < 2e-3);
    CHECK(u.back() == 1.0);
    CHECK(w.back() == 0.0);

    double rate = 1.0;
    REQUIRE(gsm_residual_norm(field, &p, &rate) == GSM_OK);
    CHECK(rate <= cfg.steady_tol);

    gsm_invariant_audit audit{};
    REQUIRE(gsm_check_steady_invariants(field, &p, &audit) == GSM_OK);
    CHECK(audit.coupling_uv <= 1e-8);
    CHECK(audit.coupling_uw <= 1e-8);
    CHECK(audit.u_nondecreasing == 1);
    CHECK(audit.negative_concentration == 0);

    gsm_field_free(field);
}

TEST_CASE("transient solve through the C surface") {
    const gsm_params p = scenario_a();
    gsm_solver_config cfg;
    gsm_solver_config_defaults(&cfg);
    cfg.grid_n = 51;

    const double samples[] = {0.0, 0.05};
    gsm_field** fields = nullptr;
    int reached_steady = -1;
    REQUIRE(gsm_solve_transient(&p, &cfg, 0.05, samples, 2, &fields, &reached_steady) == GSM_OK);
    REQUIRE(fields != nullptr);
    CHECK(gsm_field_tau(fields[0]) == 0.0);
    CHECK(gsm_field_tau(fields[1]) == doctest::Approx(0.05));
    CHECK(reached_steady == 0);

    std::vector<double> u0(51), u1(51);
    REQUIRE(gsm_field_values(fields[0], nullptr, u0.data(), nullptr, nullptr) == GSM_OK);
    REQUIRE(gsm_field_values(fields[1], nullptr, u1.data(), nullptr, nullptr) == GSM_OK);
    CHECK(u0.front() == doctest::Approx(0.6480542736638855).epsilon(1e-14));
    CHECK(u1.front() > u0.front());  // relaxing toward the steady profile

    gsm_field_array_free(fields, 2);

    // unsorted samples are an API misuse
    const double bad[] = {0.05, 0.0};
    CHECK(gsm_solve_transient(&p, &cfg, 0.05, bad, 2, &fields, nullptr) == GSM_ERROR_CONTRACT);
}

TEST_CASE("convergence order through the C surface") {
    const gsm_params p{0.01, 1.15, 210.0, 10.0, 1.0, 1.0};
    const int grids[] = {51, 101, 201};
    double order = 0.0;
    int exact = -1;
    REQUIRE(gsm_estimate_convergence_order(&p, nullptr, grids, 3, &order, &exact) == GSM_OK);
    CHECK(exact == 0);
    CHECK(order > 1.8);
    CHECK(order < 2.2);
}

TEST_CASE("tables through the C surface") {
    gsm_table* table = nullptr;
    REQUIRE(gsm_reproduce_table(1, nullptr, &table) == GSM_OK);
    REQUIRE(table != nullptr);
    CHECK(gsm_table_scenario_count(table) == 3);
    CHECK(gsm_table_row_count(table, 0) == 6);

    gsm_params sp{};
    int qualitative = -1;
    REQUIRE(gsm_table_scenario(table, 0, &sp, &qualitative) == GSM_OK);
    CHECK(sp.gamma_e1 == 10.0);
    CHECK(qualitative == 0);

    double cols[6];
    REQUIRE(gsm_table_row(table, 0, 0, cols) == GSM_OK);
    CHECK(cols[0] == 0.0);
    CHECK(std::abs(cols[2] - 0.9528) < 5e-4);

    double mean_vim = 1.0, mean_agm = 1.0;
    REQUIRE(gsm_table_means(table, 0, &mean_vim, &mean_agm) == GSM_OK);
    CHECK(mean_vim <= 0.01);

    CHECK(gsm_table_row(table, 0, 9, cols) == GSM_ERROR_CONTRACT);
    gsm_table_free(table);

    CHECK(gsm_reproduce_table(9, nullptr, &table) == GSM_ERROR_CONTRACT);
}

TEST_CASE("sweep through the C surface") {
    const gsm_params p = scenario_a();
    const double values[] = {10.0, 210.0};
    gsm_sweep* sweep = nullptr;
    REQUIRE(gsm_profile_sweep(GSM_SPECIES_GLUCOSE, "gammaE1", values, 2, &p, 11, &sweep) ==
            GSM_OK);
    CHECK(gsm_sweep_series_count(sweep) == 2);
    CHECK(gsm_sweep_resolution(sweep) == 11);

    std::vector<double> x(11), y(11);
    REQUIRE(gsm_sweep_x(sweep, x.data()) == GSM_OK);
    const char* name = nullptr;
    double value = 0.0;
    REQUIRE(gsm_sweep_series(sweep, 0, &name, &value, y.data()) == GSM_OK);
    CHECK(std::string(name) == "gammaE1=10");
    CHECK(value == 10.0);
    CHECK(std::abs(y.front() - 0.9528) < 5e-4);
    CHECK(y.back() == 1.0);
    gsm_sweep_free(sweep);

    CHECK(gsm_profile_sweep(GSM_SPECIES_GLUCOSE, "nope", values, 2, &p, 11, &sweep) ==
          GSM_ERROR_CONTRACT);
    CHECK(std::string(gsm_last_error()).find("alpha") != std::string::npos);
}

TEST_CASE("sensitivity through the C surface") {
    const gsm_params p = scenario_a();
    gsm_sensitivity* report = nullptr;
    REQUIRE(gsm_sensitivity_analysis(GSM_SPECIES_GLUCOSE, &p, nullptr, 0.01,
                                     GSM_FUNCTIONAL_VALUE_AT_CENTER, &report) == GSM_OK);
    REQUIRE(gsm_sensitivity_count(report) == 6);
    double sum = 0.0;
    double share_mu = -1.0;
    for (size_t i = 0; i < 6; ++i) {
        const char* name = nullptr;
        double sensitivity = 0.0, share = 0.0;
        int failed = -1;
        REQUIRE(gsm_sensitivity_entry(report, i, &name, &sensitivity, &share, &failed) == GSM_OK);
        CHECK(failed == 0);
        sum += share;
        if (std::strcmp(name, "mu") == 0) share_mu = share;
    }
    CHECK(std::abs(sum - 100.0) < 0.1);
    CHECK(share_mu == 0.0);
    gsm_sensitivity_free(report);

    CHECK(gsm_sensitivity_analysis(GSM_SPECIES_GLUCOSE, &p, nullptr, 0.5,
                                   GSM_FUNCTIONAL_VALUE_AT_CENTER, &report) == GSM_ERROR_DOMAIN);
}
