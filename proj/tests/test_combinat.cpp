#include <doctest.h>

#include <set>

#include <mexlab/combinat.hpp>

using namespace mexlab;

namespace
{

std::vector<std::string> texts(const std::vector<Overpartition> &v)
{
    std::vector<std::string> out;
    for (const auto &pi : v) {
        out.push_back(pi.to_string());
    }
    return out;
}

Overpartition op(std::vector<PartGroup> g)
{
    return Overpartition(std::move(g));
}

} // namespace

TEST_CASE("partitions are listed in decreasing lexicographic order")
{
    std::vector<std::string> got;
    for (const auto &p : partitions(4)) {
        got.push_back(p.to_string());
    }
    CHECK(got == std::vector<std::string>{"4", "3+1", "2+2", "2+1+1", "1+1+1+1"});
    CHECK(partitions(0).size() == 1);
    CHECK(partitions(10).size() == 42);
}

TEST_CASE("overpartitions of 3 in table order")
{
    const auto all = enumerate_overpartitions(3);
    CHECK(texts(all) == std::vector<std::string>{"3", "3~", "2+1", "2~+1", "2+1~", "2~+1~", "1+1+1", "1~+1+1"});

    const std::vector<unsigned> over{1, 1, 1, 1, 2, 3, 1, 2};
    const std::vector<unsigned> every{1, 1, 3, 3, 3, 3, 2, 2};
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].mex(MexVariant::Overlined) == over[i]);
        CHECK(all[i].mex(MexVariant::All) == every[i]);
        CHECK(all[i].weight() == 3);
    }
}

TEST_CASE("enumeration edge cases")
{
    const auto empty = enumerate_overpartitions(0);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].groups().empty());
    CHECK(empty[0].to_string().empty());
    for (auto v : all_variants) {
        CHECK(empty[0].mex(v) == 1);
    }
    CHECK(enumerate_overpartitions(4).size() == 14);
    CHECK_THROWS_AS(enumerate_overpartitions(46), OracleLimitError);
    CHECK_THROWS_AS(enumerate_overpartitions(12, 10), OracleLimitError);
    CHECK(enumerate_overpartitions(12, 12).size() == 504);
}

TEST_CASE("enumeration has no duplicates and respects the canonical form")
{
    for (unsigned n = 0; n <= 12; ++n) {
        std::set<std::string> seen;
        for (const auto &pi : enumerate_overpartitions(n)) {
            CHECK(pi.weight() == n);
            CHECK(seen.insert(pi.to_string()).second);
            const auto &g = pi.groups();
            for (std::size_t i = 1; i < g.size(); ++i) {
                CHECK(g[i].part < g[i - 1].part);
            }
        }
    }
}

TEST_CASE("mex_statistic")
{
    CHECK(mex_statistic(op({{2, 1, true}, {1, 1, true}}), MexVariant::Overlined) == 3);
    CHECK(mex_statistic(op({{2, 1, false}, {1, 1, false}}), MexVariant::All) == 3);
    CHECK(mex_statistic(op({{1, 3, true}}), MexVariant::NonOverlined) == 2);
    // A lone overlined 1 leaves no non-overlined 1.
    CHECK(mex_statistic(op({{2, 1, false}, {1, 1, true}}), MexVariant::NonOverlined) == 1);
    CHECK(mex_statistic(op({{3, 1, true}, {2, 2, true}, {1, 1, false}}), MexVariant::All) == 4);
    CHECK(mex_statistic(op({{3, 1, true}, {2, 2, true}, {1, 1, false}}), MexVariant::Overlined) == 1);
    CHECK(mex_statistic(op({{3, 1, true}, {2, 2, true}, {1, 1, false}}), MexVariant::NonOverlined) == 3);

    CHECK_THROWS_AS(op({{1, 1, false}, {2, 1, false}}), std::invalid_argument);
    CHECK_THROWS_AS(op({{2, 0, false}}), std::invalid_argument);
}

TEST_CASE("oracle sums and counts")
{
    CHECK(sigma_mex_oracle(3, MexVariant::Overlined) == 12);
    CHECK(sigma_mex_oracle(3, MexVariant::All) == 18);
    CHECK(sigma_mex_oracle(4, MexVariant::All) == 28);
    CHECK(sigma_mex_oracle(3, MexVariant::NonOverlined) == 13);
    for (auto v : all_variants) {
        CHECK(sigma_mex_oracle(0, v) == 1);
    }
    CHECK(count_mex_oracle(3, 1, MexVariant::Overlined) == 5);
    CHECK(count_mex_oracle(3, 2, MexVariant::All) == 2);
    for (auto v : all_variants) {
        CHECK(count_mex_oracle(3, 5, v) == 0);
    }
    CHECK_THROWS_AS(count_mex_oracle(3, 0, MexVariant::All), std::invalid_argument);
    CHECK_THROWS_AS(sigma_mex_oracle(50, MexVariant::All), OracleLimitError);
}

TEST_CASE("multiset expansion")
{
    const auto s = overpartitions_from_multiset({5, 3, 3, 3, 2, 2});
    CHECK(s.size() == 8);
    std::set<std::string> distinct;
    for (const auto &pi : s) {
        CHECK(pi.weight() == 18);
        distinct.insert(pi.to_string());
    }
    CHECK(distinct.size() == 8);
    CHECK(distinct.count("5~+3~+3+3+2~+2") == 1);

    CHECK(texts(overpartitions_from_multiset({7})) == std::vector<std::string>{"7", "7~"});
    CHECK(texts(overpartitions_from_multiset({1, 1, 1, 1})) == std::vector<std::string>{"1+1+1+1", "1~+1+1+1"});
    CHECK_THROWS_AS(overpartitions_from_multiset({}), std::invalid_argument);
    CHECK_THROWS_AS(overpartitions_from_multiset({2, 0}), std::invalid_argument);
}

TEST_CASE("class decomposition")
{
    const auto c4 = class_decomposition(4);
    REQUIRE(c4.size() == 5);
    const std::vector<std::uint64_t> sizes{2, 4, 2, 4, 2};
    const std::vector<unsigned> mex{1, 2, 1, 3, 2};
    std::uint64_t total = 0;
    BigInt weighted = 0;
    for (std::size_t k = 0; k < 5; ++k) {
        CHECK(c4[k].size == sizes[k]);
        CHECK(c4[k].mex_all == mex[k]);
        CHECK(c4[k].members.size() == sizes[k]);
        for (const auto &pi : c4[k].members) {
            CHECK(pi.underlying() == c4[k].underlying);
            CHECK(pi.mex(MexVariant::All) == c4[k].mex_all);
        }
        total += c4[k].size;
        weighted += BigInt(static_cast<unsigned long>(c4[k].size * c4[k].mex_all));
    }
    CHECK(total == 14);
    CHECK(weighted == 28);

    const auto c1 = class_decomposition(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].size == 2);
    CHECK(c1[0].mex_all == 2);
    CHECK(texts(c1[0].members) == std::vector<std::string>{"1", "1~"});
}

TEST_CASE("property: class sizes are 2^(distinct parts) and even")
{
    for (unsigned n = 1; n <= 25; ++n) {
        BigInt weighted = 0;
        for (const auto &cls : class_decomposition(n)) {
            CHECK(cls.size == (std::uint64_t{1} << cls.underlying.distinct_parts()));
            CHECK(cls.size % 2 == 0);
            weighted += BigInt(static_cast<unsigned long>(cls.size)) * cls.mex_all;
        }
        CHECK(weighted == sigma_mex_oracle(n, MexVariant::All));
    }
}

TEST_CASE("property: subset monotonicity of mex")
{
    for (unsigned n = 0; n <= 20; ++n) {
        for_each_overpartition(n, [](const Overpartition &pi) {
            const auto all = pi.mex(MexVariant::All);
            CHECK(pi.mex(MexVariant::Overlined) <= all);
            CHECK(pi.mex(MexVariant::NonOverlined) <= all);
        });
    }
}

TEST_CASE("property: distribution totals and determinism across workers")
{
    for (unsigned n = 0; n <= 20; ++n) {
        const auto serial = mex_distribution(n, default_oracle_limit, 1);
        const auto parallel = mex_distribution(n, default_oracle_limit, 4);
        CHECK(serial.total == parallel.total);
        for (auto v : all_variants) {
            CHECK(serial.count_vector(v) == parallel.count_vector(v));
            CHECK(serial.sigma_of(v) == parallel.sigma_of(v));
            std::uint64_t sum = 0;
            BigInt weighted = 0;
            for (std::size_t m = 1; m < serial.count_vector(v).size(); ++m) {
                sum += serial.count(v, m);
                weighted += BigInt(static_cast<unsigned long>(m * serial.count(v, m)));
            }
            CHECK(sum == serial.total);
            CHECK(weighted == serial.sigma_of(v));
        }
    }
    CHECK(mex_distribution(25, default_oracle_limit, 1).total == 31066);
}

TEST_CASE("enumeration order is reproducible")
{
    CHECK(texts(enumerate_overpartitions(9)) == texts(enumerate_overpartitions(9)));
}
