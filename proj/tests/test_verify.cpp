#include <doctest.h>

#include <cmath>
#include <memory>

#include <mexlab/report_json.hpp>
#include <mexlab/verify.hpp>

using namespace mexlab;

TEST_CASE("check_gf_vs_oracle passes for every variant")
{
    for (auto v : all_variants) {
        const auto r = check_gf_vs_oracle(v, 10);
        CHECK(r.passed());
        CHECK_FALSE(r.first_failure.has_value());
        CHECK(r.check_name == "gf_oracle_" + std::string(to_string(v)));
    }
    CHECK_THROWS_AS(check_gf_vs_oracle(MexVariant::All, 12, 10), OracleLimitError);
}

TEST_CASE("compare_series reports the first differing coefficient")
{
    const auto a = pochhammer(PochSpec::minus_q_q(), 50);
    const auto perturbed = a + Series::monomial(17, 50) + Series::monomial(30, 50);
    const auto r = compare_series("perturbed", a, perturbed);
    CHECK_FALSE(r.passed());
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->n == 17);
    CHECK(r.first_failure->expected == a[17].get_str());
    CHECK(r.first_failure->actual == perturbed[17].get_str());
    CHECK(compare_series("same", a, a).passed());
}

TEST_CASE("identity checks")
{
    CHECK(check_euler_identity(1).passed());
    CHECK(check_euler_identity(300).passed());
    CHECK(check_phi11_identity(300).passed());
    CHECK(check_overlined_telescoping(300).passed());
    CHECK(check_all_fixed_point(300).passed());
    for (auto v : all_variants) {
        CHECK(check_count_sums(v, 80).passed());
    }
    CHECK_THROWS_AS(check_euler_identity(0), std::invalid_argument);
}

TEST_CASE("parity checks")
{
    const auto all_even = check_parity_all_even(2000);
    CHECK(all_even.passed());
    CHECK(all_even.metrics.at("spot_checks") == 20);

    const auto tri = check_triangular_parity(5000);
    CHECK(tri.passed());
    // Triangular numbers up to 5000: j = 1..99.
    CHECK(tri.metrics.at("odd_count") == 99);

    CHECK_THROWS_AS(check_parity_all_even(0), std::invalid_argument);
    CHECK_THROWS_AS(check_triangular_parity(0), std::invalid_argument);
}

TEST_CASE("parity density at 10^4 matches the calibration run")
{
    const auto r = check_parity_density(10000);
    CHECK(r.passed());
    // 162 odd values in [1, 10^4], from an independent Python expansion.
    CHECK(r.metrics.at("odd_count") == 162);
    CHECK(r.metrics.at("density") == doctest::Approx(0.9838).epsilon(1e-12));
    CHECK(r.metrics.at("density_prefix_625") == doctest::Approx(0.936).epsilon(1e-12));
    CHECK(r.metrics.at("density_prefix_2500") == doctest::Approx(0.968).epsilon(1e-12));
    CHECK(r.notes.at("odd_positions").rfind("1,2,5,7,12,15,22,26,", 0) == 0);
    CHECK(r.notes.at("odd_positions_all_generalized_pentagonal") == "yes");
}

TEST_CASE("parity density negative control")
{
    const std::size_t n = 1000;
    auto odd = std::make_unique<bool[]>(n);
    const auto r = parity_density_report("constant_odd", std::span<const bool>(odd.get(), n));
    CHECK_FALSE(r.passed());
    CHECK(r.metrics.at("density") == 0.0);
    CHECK(r.first_failure.has_value());

    // Decreasing density trips the trend guard even above the floor.
    auto trend = std::make_unique<bool[]>(n);
    for (std::size_t i = 0; i < n; ++i) {
        trend[i] = i < 500 || i % 10 != 0;
    }
    const auto t = parity_density_report("decaying", std::span<const bool>(trend.get(), n));
    CHECK_FALSE(t.passed());

    CHECK_THROWS_AS(parity_density_report("short", std::span<const bool>(odd.get(), 50)), std::invalid_argument);
}

TEST_CASE("asymptotic ratio table")
{
    const std::vector<std::int64_t> points{4, 100, 400, 900, 1600, 2500};
    const auto [rows, r] = asym_ratio_table(points);
    CHECK(r.passed());
    REQUIRE(rows.size() == 6);
    // Ratios from exact Python big-integer values.
    const double expected[] = {0.5975816741465566, 0.8603681356415065, 0.9204054528548711,
                               0.9441475527785126, 0.9569420390370048, 0.9649556264757396};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].ratio == doctest::Approx(expected[i]).epsilon(1e-10));
        CHECK(rows[i].predicted == doctest::Approx(std::exp(M_PI * std::sqrt(double(points[i]))) / (4.0 * points[i])).epsilon(1e-14));
    }
    CHECK(rows[0].exact == 20);
    CHECK(r.metrics.at("final_deviation") < asym_final_tolerance);

    CHECK_THROWS_AS(asym_ratio_table(std::span<const std::int64_t>{}), std::invalid_argument);
    const std::vector<std::int64_t> unordered{400, 100};
    CHECK_THROWS_AS(asym_ratio_table(unordered), std::invalid_argument);
}

TEST_CASE("sigma Taylor check")
{
    const double ts[] = {0.05, 0.1};
    const auto r = check_sigma_taylor(ts);
    CHECK(r.passed());
    CHECK(r.metrics.at("value_t=0.05") == doctest::Approx(1.9106411341329046).epsilon(1e-12));

    // Near t = 0 the value approaches the leading term 2.
    const double tiny[] = {0.005};
    const auto near_zero = check_sigma_taylor(tiny, 20000);
    CHECK(near_zero.passed());
    CHECK(std::abs(near_zero.metrics.at("value_t=0.005") - 2.0) < 0.011);

    const double bad[] = {0.3};
    CHECK_THROWS_AS(check_sigma_taylor(bad), std::invalid_argument);
    const double zero[] = {0.0};
    CHECK_THROWS_AS(check_sigma_taylor(zero), std::invalid_argument);
    CHECK_THROWS_AS(check_sigma_taylor(ts, 399), std::invalid_argument);
}

TEST_CASE("Ingham scaling")
{
    const auto r = check_ingham_scaling(2000);
    CHECK(r.passed());
    CHECK(r.metrics.at("scaled_t=0.3") == doctest::Approx(0.8160800017268472).epsilon(1e-9));
    CHECK(r.metrics.at("scaled_t=0.25") == doctest::Approx(0.8371324827793775).epsilon(1e-9));
    CHECK(r.metrics.at("scaled_t=0.2") == doctest::Approx(0.8607745539901817).epsilon(1e-9));

    const double grid[] = {0.3, 0.25, 0.2};
    const auto constant = ingham_scaling_report("constant", Series::one(2000), grid);
    CHECK_FALSE(constant.passed());
    CHECK(constant.metrics.at("scaled_t=0.2") < 1e-3);

    // e^{-0.01 * 1000} is far above the tail bound.
    const double too_small[] = {0.01};
    CHECK_THROWS_AS(check_ingham_scaling(1000, too_small), std::invalid_argument);
    CHECK_THROWS_AS(check_ingham_scaling(799), std::invalid_argument);
    const double increasing[] = {0.2, 0.3};
    CHECK_THROWS_AS(check_ingham_scaling(2000, increasing), std::invalid_argument);
}

TEST_CASE("reports are deterministic and JSON round-trips")
{
    SuiteConfig c;
    c.oracle_n_max = 12;
    c.identity_order = 200;
    c.parity_n_max = 400;
    c.triangular_n_max = 400;
    c.asym_points = {100, 400};
    c.ingham_order = 1000;
    c.count_sum_order = 60;
    const auto first = run_suite(c);
    c.workers = 1;
    const auto second = run_suite(c);
    REQUIRE(first.size() == suite_check_names().size());
    CHECK(first == second);
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].check_name == suite_check_names()[i]);
        CHECK(first[i].passed());
        const auto j = to_json(first[i]);
        CHECK(j.at("status") == "PASS");
        CHECK(j.at("metrics").is_object());
        CHECK_FALSE(j.contains("first_failure"));
        CHECK(report_from_json(j) == first[i]);
    }

    const auto only = run_suite(c, std::string("euler"));
    REQUIRE(only.size() == 1);
    CHECK(only[0].check_name == "euler");
    CHECK_THROWS_AS(run_suite(c, std::string("nope")), std::invalid_argument);
}

TEST_CASE("failed report JSON carries the witness")
{
    VerifyReport r;
    r.check_name = "x";
    r.range_checked = "n <= 3";
    r.fail({3, 2, "4", "5"});
    r.fail({4, std::nullopt, "9", "9"});
    const auto j = to_json(r);
    CHECK(j.at("status") == "FAIL");
    CHECK(j.at("first_failure").at("n") == 3);
    CHECK(j.at("first_failure").at("m") == 2);
    CHECK(report_from_json(j) == r);
}
