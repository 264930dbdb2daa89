#include <doctest.h>

#include <mexlab/combinat.hpp>
#include <mexlab/qfactory.hpp>

using namespace mexlab;

namespace
{

// Brute-force values for n = 0..15, from an independent enumeration of
// (overlined distinct set, ordinary partition) pairs.
const long pbar_table[] = {1, 2, 4, 8, 14, 24, 40, 64, 100, 154, 232, 344, 504, 728, 1040, 1472};
const long sigma_non[] = {1, 3, 6, 13, 24, 42, 73, 120, 192, 302, 465, 702, 1046, 1536, 2226, 3195};
const long sigma_over[] = {1, 3, 5, 12, 20, 35, 60, 97, 152, 236, 360, 536, 791, 1148, 1648, 2345};
const long sigma_all[] = {1, 4, 6, 18, 28, 50, 94, 150, 238, 372, 594, 882, 1326, 1934, 2810, 4066};

} // namespace

TEST_CASE("variant names round-trip")
{
    for (auto v : all_variants) {
        CHECK(parse_variant(to_string(v)) == v);
    }
    CHECK_FALSE(parse_variant("Overlined").has_value());
}

TEST_CASE("pochhammer")
{
    CHECK(pochhammer(PochSpec::minus_q_q(2), 4) == Series::from_coeffs({1, 1, 1, 1}, 4));
    CHECK(pochhammer(PochSpec::q_q(0), 5) == Series::one(5));
    CHECK(pochhammer(PochSpec::q_q(2), 3) == Series::from_coeffs({1, -1, -1, 1}, 3));
    // Euler's pentagonal theorem: 1 - q - q^2 + q^5 + q^7 - ...
    CHECK(pochhammer(PochSpec::q_q(), 12) == Series::from_coeffs({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}, 12));

    const std::size_t N = 2000;
    const auto lhs = pochhammer(PochSpec::minus_q_q(), N);
    CHECK(lhs == pochhammer(PochSpec::q2_q2(), N) * invert(pochhammer(PochSpec::q_q(), N)));
    CHECK(lhs == invert(pochhammer(PochSpec::q_q2(), N)));

    CHECK_THROWS_AS(pochhammer({0, 1, 1, std::nullopt}, 3), std::invalid_argument);
    CHECK_THROWS_AS(pochhammer({1, 3, 1, std::nullopt}, 3), std::invalid_argument);
    CHECK_THROWS_AS(pochhammer({1, 1, 0, std::nullopt}, 3), std::invalid_argument);
}

TEST_CASE("overpartition_gf")
{
    const auto p = overpartition_gf(15);
    for (int n = 0; n <= 15; ++n) {
        CHECK(p[n] == pbar_table[n]);
    }
    CHECK(overpartition_gf(0) == Series::one(0));
    CHECK(overpartition_gf(200, 2) == reduce_mod(overpartition_gf(200), 2));
}

TEST_CASE("ramanujan_sigma")
{
    const auto s = ramanujan_sigma(20);
    CHECK(s[0] == 1);
    CHECK(s[1] == 1);
    // Independent Python expansion of the defining sum.
    CHECK(s == Series::from_coeffs({1, 1, -1, 2, -2, 1, 0, 1, -2, 0, 2, 0, -1, -2, 2, 1, 0, -2, 2, -2, 0}, 20));
    CHECK(ramanujan_sigma(500, 7) == reduce_mod(ramanujan_sigma(500), 7));
}

TEST_CASE("phi11")
{
    CHECK(phi11(0)[0] == 1);
    CHECK(phi11(1000) == phi11_simplified(1000));
    CHECK((overpartition_gf(3) * phi11(3))[3] == 18);
}

TEST_CASE("sigma_mex_gf matches brute-force tables")
{
    const auto non = sigma_mex_gf(MexVariant::NonOverlined, 15);
    const auto over = sigma_mex_gf(MexVariant::Overlined, 15);
    const auto all = sigma_mex_gf(MexVariant::All, 15);
    for (int n = 0; n <= 15; ++n) {
        CHECK(non[n] == sigma_non[n]);
        CHECK(over[n] == sigma_over[n]);
        CHECK(all[n] == sigma_all[n]);
    }
    CHECK(over[3] == 12);
    CHECK(all[4] == 28);
    CHECK(sigma_mex_gf(MexVariant::All, 0) == Series::one(0));
}

TEST_CASE("mex_count_gf")
{
    CHECK(mex_count_gf(MexVariant::Overlined, 2, 3)[3] == 2);
    CHECK(mex_count_gf(MexVariant::Overlined, 1, 3)[3] == 5);
    CHECK(mex_count_gf(MexVariant::All, 3, 3)[3] == 4);
    CHECK(mex_count_gf(MexVariant::All, 2, 3)[3] == 2);
    CHECK(mex_count_gf(MexVariant::Overlined, 10, 20).is_zero());
    CHECK_THROWS_AS(mex_count_gf(MexVariant::All, 0, 3), std::invalid_argument);

    for (auto v : all_variants) {
        for (unsigned n = 0; n <= 20; ++n) {
            const auto d = mex_distribution(n);
            for (std::size_t m = 1; m <= max_feasible_mex(20) + 1; ++m) {
                CHECK(mex_count_gf(v, m, 20)[n] == BigInt(static_cast<unsigned long>(d.count(v, m))));
            }
        }
    }
}

TEST_CASE("per-m series sum to pbar and to sigma")
{
    const std::size_t N = 150;
    const auto pbar = overpartition_gf(N);
    for (auto v : all_variants) {
        auto total = Series::zero(N);
        auto weighted = Series::zero(N);
        for (std::size_t m = 1; m <= max_feasible_mex(N); ++m) {
            const auto c = mex_count_gf(v, m, N);
            total = total + c;
            weighted = weighted + Series::from_coeffs({static_cast<long>(m)}, N) * c;
        }
        CHECK(total == pbar);
        CHECK(weighted == sigma_mex_gf(v, N));
    }
}

TEST_CASE("raw sums equal the simplified products")
{
    CHECK(overlined_mex_raw_sum(2000) == sigma_mex_gf(MexVariant::Overlined, 2000));
    CHECK(all_mex_raw_sum(2000) == sigma_mex_gf(MexVariant::All, 2000));
}

TEST_CASE("coefficients are non-negative")
{
    for (auto v : all_variants) {
        const auto s = sigma_mex_gf(v, 500);
        for (std::size_t n = 0; n <= 500; ++n) {
            CHECK(s[n] > 0);
        }
    }
}

TEST_CASE("modular builders agree with reduced exact builders")
{
    for (auto v : all_variants) {
        CHECK(sigma_mex_gf(v, 300, 2) == reduce_mod(sigma_mex_gf(v, 300), 2));
        CHECK(mex_count_gf(v, 4, 300, 5) == reduce_mod(mex_count_gf(v, 4, 300), 5));
    }
    CHECK(phi11(300, 3) == reduce_mod(phi11(300), 3));
    CHECK_THROWS_AS(overpartition_gf(10, 1), std::invalid_argument);
}

TEST_CASE("max_feasible_mex")
{
    CHECK(max_feasible_mex(0) == 1);
    CHECK(max_feasible_mex(1) == 2);
    CHECK(max_feasible_mex(2) == 2);
    CHECK(max_feasible_mex(3) == 3);
    CHECK(max_feasible_mex(6) == 4);
}
