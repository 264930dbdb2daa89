#include <mexlab/verify.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <memory>
#include <numbers>
#include <random>
#include <stdexcept>

namespace mexlab
{

void VerifyReport::fail(Witness w)
{
    status = Status::Fail;
    if (!first_failure) {
        first_failure = std::move(w);
    }
}

namespace
{

std::string upto(std::size_t n)
{
    return "n <= " + std::to_string(n);
}

bool is_triangular(std::size_t n)
{
    // 8n + 1 must be an odd square.
    const auto d = 8 * n + 1;
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(d)));
    while (r * r > d) {
        --r;
    }
    while ((r + 1) * (r + 1) <= d) {
        ++r;
    }
    return r * r == d;
}

bool is_generalized_pentagonal(std::size_t n)
{
    // n = k(3k -+ 1)/2  <=>  24n + 1 is a square.
    const auto d = 24 * n + 1;
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(d)));
    while (r * r > d) {
        --r;
    }
    while ((r + 1) * (r + 1) <= d) {
        ++r;
    }
    return r * r == d;
}

// log of a positive big integer in double precision, safe far beyond 1e308.
double log_big(const BigInt &x)
{
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

double sigma_taylor_poly(double t)
{
    return 2.0 - 2.0 * t + 5.0 * t * t - (55.0 / 3.0) * t * t * t + (1073.0 / 12.0) * t * t * t * t;
}

double sigma_taylor_bound(double t)
{
    return 2.0 * (32671.0 / 60.0) * std::pow(t, 5);
}

std::string fmt_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace

VerifyReport check_gf_vs_oracle(MexVariant variant, unsigned n_max, unsigned oracle_limit)
{
    VerifyReport r;
    r.check_name = "gf_oracle_" + std::string(to_string(variant));
    r.range_checked = "0 <= n <= " + std::to_string(n_max) + ", all feasible m";
    if (n_max > oracle_limit) {
        throw OracleLimitError(n_max, oracle_limit);
    }

    const auto gf = sigma_mex_gf(variant, n_max);
    // One past the feasibility bound, so a spurious nonzero would show up.
    const auto m_top = max_feasible_mex(n_max) + 1;
    std::vector<Series> count_gfs;
    for (std::size_t m = 1; m <= m_top; ++m) {
        count_gfs.push_back(mex_count_gf(variant, m, n_max));
    }

    std::size_t values_checked = 0;
    for (unsigned n = 0; n <= n_max; ++n) {
        const auto d = mex_distribution(n, oracle_limit, 0);
        const auto &expected = d.sigma_of(variant);
        ++values_checked;
        if (gf[n] != expected) {
            r.fail({n, std::nullopt, expected.get_str(), gf[n].get_str()});
        }
        const auto &cv = d.count_vector(variant);
        for (std::size_t m = 1; m <= m_top; ++m) {
            const BigInt want(static_cast<unsigned long>(d.count(variant, m)));
            ++values_checked;
            if (count_gfs[m - 1][n] != want) {
                r.fail({n, static_cast<std::int64_t>(m), want.get_str(), count_gfs[m - 1][n].get_str()});
            }
        }
        if (cv.size() > m_top + 1) {
            r.fail({n, static_cast<std::int64_t>(cv.size() - 1), "count series covers m",
                    "oracle saw mex beyond the feasibility bound"});
        }
    }
    r.metrics["values_checked"] = static_cast<double>(values_checked);
    r.metrics["max_m"] = static_cast<double>(m_top);
    return r;
}

VerifyReport compare_series(std::string name, const Series &expected, const Series &actual)
{
    VerifyReport r;
    r.check_name = std::move(name);
    const auto order = std::min(expected.order(), actual.order());
    r.range_checked = upto(order);
    const auto idx = first_mismatch(expected, actual);
    if (idx >= 0) {
        const auto i = static_cast<std::size_t>(idx);
        r.fail({idx, std::nullopt, expected[i].get_str(), actual[i].get_str()});
    }
    r.metrics["order"] = static_cast<double>(order);
    return r;
}

VerifyReport check_euler_identity(std::size_t N)
{
    if (N < 1) {
        throw std::invalid_argument("check_euler_identity: order must be >= 1");
    }
    const auto product = pochhammer(PochSpec::minus_q_q(), N);
    const auto odd_route = invert(pochhammer(PochSpec::q_q2(), N));
    const auto even_route = mul(pochhammer(PochSpec::q2_q2(), N), invert(pochhammer(PochSpec::q_q(), N)));

    auto r = compare_series("euler", product, odd_route);
    if (r.passed()) {
        const auto second = compare_series("euler", product, even_route);
        if (!second.passed()) {
            r.fail(*second.first_failure);
        }
    }
    r.range_checked = upto(N) + ", three forms of (-q;q)_inf";
    return r;
}

VerifyReport check_phi11_identity(std::size_t N)
{
    auto r = compare_series("phi11", phi11_simplified(N), phi11(N));
    r.range_checked = upto(N);
    return r;
}

VerifyReport check_overlined_telescoping(std::size_t N)
{
    auto r = compare_series("overlined_telescoping", sigma_mex_gf(MexVariant::Overlined, N), overlined_mex_raw_sum(N));
    r.range_checked = upto(N);
    return r;
}

VerifyReport check_all_fixed_point(std::size_t N)
{
    auto r = compare_series("all_fixed_point", sigma_mex_gf(MexVariant::All, N), all_mex_raw_sum(N));
    r.range_checked = upto(N);
    return r;
}

VerifyReport check_count_sums(MexVariant variant, std::size_t N)
{
    VerifyReport r;
    r.check_name = "count_sums_" + std::string(to_string(variant));
    r.range_checked = upto(N) + ", m <= " + std::to_string(max_feasible_mex(N));

    auto total = Series::zero(N);
    auto weighted = Series::zero(N);
    for (std::size_t m = 1; m <= max_feasible_mex(N); ++m) {
        const auto c = mex_count_gf(variant, m, N);
        total = total + c;
        weighted = weighted + Series::from_coeffs({static_cast<long>(m)}, N) * c;
    }
    const auto pbar = overpartition_gf(N);
    const auto gf = sigma_mex_gf(variant, N);
    if (auto i = first_mismatch(pbar, total); i >= 0) {
        r.fail({i, std::nullopt, pbar[i].get_str(), total[i].get_str()});
    }
    if (auto i = first_mismatch(gf, weighted); i >= 0) {
        r.fail({i, std::nullopt, gf[i].get_str(), weighted[i].get_str()});
    }
    return r;
}

VerifyReport check_parity_all_even(std::size_t n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("check_parity_all_even: n_max must be >= 1");
    }
    VerifyReport r;
    r.check_name = "parity_all_even";
    r.range_checked = "1 <= n <= " + std::to_string(n_max) + " (mod-2 series)";

    const auto sigma2 = sigma_mex_gf(MexVariant::All, n_max, 2);
    const auto pbar2 = overpartition_gf(n_max, 2);
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (sigma2[n] != 0) {
            r.fail({static_cast<std::int64_t>(n), std::nullopt, "sigma_all even", "odd"});
            break;
        }
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (pbar2[n] != 0) {
            r.fail({static_cast<std::int64_t>(n), std::nullopt, "pbar even", "odd"});
            break;
        }
    }

    // Guard the reduction path with exact integers at seeded random n.
    const std::size_t spot_max = std::min<std::size_t>(n_max, 1500);
    const auto exact = sigma_mex_gf(MexVariant::All, spot_max);
    const auto exact_pbar = overpartition_gf(spot_max);
    std::mt19937_64 rng(0x6d65786c6162ULL);
    std::uniform_int_distribution<std::size_t> pick(1, spot_max);
    for (int i = 0; i < 20; ++i) {
        const auto n = pick(rng);
        const bool exact_even = mpz_even_p(exact[n].get_mpz_t()) && mpz_even_p(exact_pbar[n].get_mpz_t());
        const bool reduced_agrees = BigInt(exact[n] % 2) == sigma2[n] && BigInt(exact_pbar[n] % 2) == pbar2[n];
        if (!exact_even || !reduced_agrees) {
            r.fail({static_cast<std::int64_t>(n), std::nullopt, "even, agreeing with mod-2 series",
                    exact[n].get_str() + " / " + exact_pbar[n].get_str()});
        }
    }
    r.metrics["spot_checks"] = 20;
    r.metrics["spot_max"] = static_cast<double>(spot_max);
    return r;
}

VerifyReport parity_density_report(std::string name, std::span<const bool> is_even)
{
    const std::size_t n_max = is_even.size();
    if (n_max < 100) {
        throw std::invalid_argument("parity density needs n_max >= 100");
    }
    VerifyReport r;
    r.check_name = std::move(name);
    r.range_checked = "1 <= n <= " + std::to_string(n_max);

    std::vector<std::size_t> even_prefix(n_max + 1, 0);
    for (std::size_t n = 1; n <= n_max; ++n) {
        even_prefix[n] = even_prefix[n - 1] + (is_even[n - 1] ? 1 : 0);
    }
    auto density = [&](std::size_t x) { return static_cast<double>(even_prefix[x]) / static_cast<double>(x); };

    // Dyadic prefixes n_max / 2^k down to 100, listed ascending.
    std::vector<std::size_t> prefixes;
    for (std::size_t x = n_max; x >= 100; x /= 2) {
        prefixes.push_back(x);
    }
    std::reverse(prefixes.begin(), prefixes.end());

    const double final_density = density(n_max);
    r.metrics["density"] = final_density;
    r.metrics["odd_count"] = static_cast<double>(n_max - even_prefix[n_max]);
    for (auto x : prefixes) {
        r.metrics["density_prefix_" + std::to_string(x)] = density(x);
    }

    for (std::size_t i = 1; i < prefixes.size(); ++i) {
        if (density(prefixes[i]) < density(prefixes[i - 1]) - density_trend_slack) {
            r.fail({static_cast<std::int64_t>(prefixes[i]), std::nullopt,
                    ">= " + fmt_double(density(prefixes[i - 1]) - density_trend_slack), fmt_double(density(prefixes[i]))});
        }
    }
    const auto quarter = std::max<std::size_t>(n_max / 4, 1);
    if (final_density < density(quarter) - density_trend_slack) {
        r.fail({static_cast<std::int64_t>(n_max), std::nullopt, ">= " + fmt_double(density(quarter) - density_trend_slack),
                fmt_double(final_density)});
    }
    if (final_density < density_floor) {
        r.fail({static_cast<std::int64_t>(n_max), std::nullopt, ">= " + fmt_double(density_floor), fmt_double(final_density)});
    }
    return r;
}

VerifyReport check_parity_density(std::size_t n_max)
{
    const auto s2 = sigma_mex_gf(MexVariant::Overlined, n_max, 2);
    // std::vector<bool> is not contiguous, so no span over it.
    auto flags = std::make_unique<bool[]>(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        flags[n - 1] = s2[n] == 0;
    }
    auto r = parity_density_report("parity_density", std::span<const bool>(flags.get(), n_max));

    // Where the odd values sit is recorded, not asserted.
    std::string odd_positions;
    bool all_pentagonal = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (!flags[n - 1]) {
            if (!odd_positions.empty()) {
                odd_positions += ',';
            }
            odd_positions += std::to_string(n);
            all_pentagonal = all_pentagonal && is_generalized_pentagonal(n);
        }
    }
    r.notes["odd_positions"] = odd_positions;
    r.notes["odd_positions_all_generalized_pentagonal"] = all_pentagonal ? "yes" : "no";
    return r;
}

VerifyReport check_triangular_parity(std::size_t n_max)
{
    if (n_max < 1) {
        throw std::invalid_argument("check_triangular_parity: n_max must be >= 1");
    }
    VerifyReport r;
    r.check_name = "triangular_parity";
    r.range_checked = "1 <= n <= " + std::to_string(n_max) + " (mod-2 series, nonoverlined)";
    const auto s2 = sigma_mex_gf(MexVariant::NonOverlined, n_max, 2);
    std::size_t odd = 0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const bool is_odd = s2[n] != 0;
        odd += is_odd ? 1 : 0;
        if (is_odd != is_triangular(n)) {
            r.fail({static_cast<std::int64_t>(n), std::nullopt, is_triangular(n) ? "odd" : "even", is_odd ? "odd" : "even"});
        }
    }
    r.metrics["odd_count"] = static_cast<double>(odd);
    return r;
}

std::pair<std::vector<AsymRow>, VerifyReport> asym_ratio_table(std::span<const std::int64_t> points)
{
    if (points.empty()) {
        throw std::invalid_argument("asym_ratio_table: empty point list");
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] < 1 || (i > 0 && points[i] <= points[i - 1])) {
            throw std::invalid_argument("asym_ratio_table: points must be positive and strictly ascending");
        }
    }
    const auto N = static_cast<std::size_t>(points.back());
    const auto gf = sigma_mex_gf(MexVariant::Overlined, N);

    std::vector<AsymRow> rows;
    VerifyReport r;
    r.check_name = "asym_ratio";
    r.range_checked = "n in {";
    for (std::size_t i = 0; i < points.size(); ++i) {
        r.range_checked += (i ? "," : "") + std::to_string(points[i]);
    }
    r.range_checked += "}";

    std::optional<double> prev_dev;
    for (auto n : points) {
        AsymRow row;
        row.n = n;
        row.exact = gf[static_cast<std::size_t>(n)];
        const double nd = static_cast<double>(n);
        const double log_pred = std::numbers::pi * std::sqrt(nd) - std::log(4.0 * nd);
        row.predicted = std::exp(log_pred);
        row.ratio = std::exp(log_big(row.exact) - log_pred);
        const double dev = std::abs(row.ratio - 1.0);
        r.metrics["ratio_" + std::to_string(n)] = row.ratio;
        if (n >= asym_min_point) {
            if (prev_dev && dev > *prev_dev + asym_step_slack) {
                r.fail({n, std::nullopt, "|ratio-1| <= " + fmt_double(*prev_dev + asym_step_slack), fmt_double(dev)});
            }
            prev_dev = dev;
        }
        rows.push_back(std::move(row));
    }
    const auto &last = rows.back();
    const double last_dev = std::abs(last.ratio - 1.0);
    r.metrics["final_deviation"] = last_dev;
    if (last.n >= asym_final_min_point && last_dev >= asym_final_tolerance) {
        r.fail({last.n, std::nullopt, "|ratio-1| < " + fmt_double(asym_final_tolerance), fmt_double(last_dev)});
    }
    return {std::move(rows), std::move(r)};
}

VerifyReport check_sigma_taylor(std::span<const double> t_values, std::size_t N)
{
    if (N < 400) {
        throw std::invalid_argument("check_sigma_taylor: truncation order must be >= 400");
    }
    if (t_values.empty()) {
        throw std::invalid_argument("check_sigma_taylor: no t values");
    }
    for (double t : t_values) {
        if (!(t > 0.0 && t <= 0.2)) {
            throw std::invalid_argument("check_sigma_taylor: t must lie in (0, 0.2], got " + fmt_double(t));
        }
    }
    VerifyReport r;
    r.check_name = "sigma_taylor";
    r.range_checked = "sigma(q) to order " + std::to_string(N) + " at " + std::to_string(t_values.size()) + " t values";
    const auto sigma = ramanujan_sigma(N);
    for (double t : t_values) {
        const double value = evaluate_real(sigma, std::exp(-t));
        const double err = std::abs(value - sigma_taylor_poly(t));
        const double bound = sigma_taylor_bound(t);
        const auto key = fmt_double(t);
        r.metrics["value_t=" + key] = value;
        r.metrics["error_t=" + key] = err;
        r.metrics["bound_t=" + key] = bound;
        if (err > bound) {
            r.fail({0, std::nullopt, "|sigma(e^-" + key + ") - P4| <= " + fmt_double(bound), fmt_double(err)});
        }
    }
    return r;
}

VerifyReport ingham_scaling_report(std::string name, const Series &A, std::span<const double> t_grid)
{
    if (t_grid.empty()) {
        t_grid = default_ingham_grid;
    }
    const auto N = A.order();
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const double t = t_grid[i];
        if (!(t > 0.0) || (i > 0 && t >= t_grid[i - 1])) {
            throw std::invalid_argument("ingham scaling: t grid must be positive and strictly decreasing");
        }
        if (std::exp(-t * static_cast<double>(N)) >= ingham_tail_bound) {
            throw std::invalid_argument("ingham scaling: e^{-tN} >= 1e-8 at t = " + fmt_double(t) + ", N = "
                                        + std::to_string(N) + "; raise N or drop the small t");
        }
    }

    VerifyReport r;
    r.check_name = std::move(name);
    r.range_checked = "t grid of " + std::to_string(t_grid.size()) + " points, coefficients n <= " + std::to_string(N);

    std::optional<double> prev_dev;
    for (double t : t_grid) {
        const double value = evaluate_real(A, std::exp(-t));
        const double scaled = value * std::sqrt(std::numbers::pi / t) * std::exp(-std::numbers::pi * std::numbers::pi / (4.0 * t));
        const double dev = std::abs(scaled - 1.0);
        r.metrics["scaled_t=" + fmt_double(t)] = scaled;
        if (prev_dev && dev >= *prev_dev) {
            r.fail({0, std::nullopt, "|scaled-1| < " + fmt_double(*prev_dev) + " at t=" + fmt_double(t), fmt_double(dev)});
        }
        prev_dev = dev;
    }

    // Ingham's theorem needs weakly increasing coefficients.
    for (std::size_t n = 0; n < N; ++n) {
        if (A[n + 1] < A[n]) {
            r.fail({static_cast<std::int64_t>(n + 1), std::nullopt, ">= " + A[n].get_str(), A[n + 1].get_str()});
            break;
        }
    }
    return r;
}

VerifyReport check_ingham_scaling(std::size_t N, std::span<const double> t_grid)
{
    if (N < 800) {
        throw std::invalid_argument("check_ingham_scaling: order must be >= 800");
    }
    return ingham_scaling_report("ingham_scaling", sigma_mex_gf(MexVariant::Overlined, N), t_grid);
}

const std::vector<std::string> &suite_check_names()
{
    static const std::vector<std::string> names{
        "gf_oracle_nonoverlined",
        "gf_oracle_overlined",
        "gf_oracle_all",
        "count_sums_nonoverlined",
        "count_sums_overlined",
        "count_sums_all",
        "euler",
        "phi11",
        "overlined_telescoping",
        "all_fixed_point",
        "parity_all_even",
        "parity_density",
        "triangular_parity",
        "asym_ratio",
        "sigma_taylor",
        "ingham_scaling",
    };
    return names;
}

std::vector<VerifyReport> run_suite(const SuiteConfig &c, const std::optional<std::string> &only)
{
    const auto &names = suite_check_names();
    if (only && std::find(names.begin(), names.end(), *only) == names.end()) {
        throw std::invalid_argument("unknown check '" + *only + "'");
    }

    auto job = [&c](const std::string &name) -> VerifyReport {
        for (auto v : all_variants) {
            if (name == "gf_oracle_" + std::string(to_string(v))) {
                return check_gf_vs_oracle(v, c.oracle_n_max, c.oracle_limit);
            }
            if (name == "count_sums_" + std::string(to_string(v))) {
                return check_count_sums(v, c.count_sum_order);
            }
        }
        if (name == "euler") {
            return check_euler_identity(c.identity_order);
        }
        if (name == "phi11") {
            return check_phi11_identity(c.identity_order);
        }
        if (name == "overlined_telescoping") {
            return check_overlined_telescoping(c.identity_order);
        }
        if (name == "all_fixed_point") {
            return check_all_fixed_point(c.identity_order);
        }
        if (name == "parity_all_even") {
            return check_parity_all_even(c.parity_n_max);
        }
        if (name == "parity_density") {
            return check_parity_density(c.parity_n_max);
        }
        if (name == "triangular_parity") {
            return check_triangular_parity(c.triangular_n_max);
        }
        if (name == "asym_ratio") {
            return asym_ratio_table(c.asym_points).second;
        }
        if (name == "sigma_taylor") {
            return check_sigma_taylor(c.taylor_t);
        }
        return check_ingham_scaling(c.ingham_order);
    };

    std::vector<std::string> selected;
    for (const auto &n : names) {
        if (!only || *only == n) {
            selected.push_back(n);
        }
    }

    std::vector<VerifyReport> out;
    if (c.workers == 1 || selected.size() == 1) {
        for (const auto &n : selected) {
            out.push_back(job(n));
        }
        return out;
    }
    std::vector<std::future<VerifyReport>> futures;
    for (const auto &n : selected) {
        futures.push_back(std::async(std::launch::async, job, n));
    }
    for (auto &f : futures) {
        out.push_back(f.get());
    }
    return out;
}

} // namespace mexlab
