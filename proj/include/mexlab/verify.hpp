#ifndef MEXLAB_VERIFY_HPP
#define MEXLAB_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <mexlab/combinat.hpp>
#include <mexlab/qfactory.hpp>
#include <mexlab/series.hpp>

namespace mexlab
{

enum class Status { Pass, Fail };

// Concrete counterexample. `m` is set when the failure concerns a per-mex count.
struct Witness {
    std::int64_t n = 0;
    std::optional<std::int64_t> m;
    std::string expected;
    std::string actual;

    friend bool operator==(const Witness &, const Witness &) = default;
};

struct VerifyReport {
    std::string check_name;
    Status status = Status::Pass;
    std::string range_checked;
    std::optional<Witness> first_failure;
    std::map<std::string, double> metrics;
    // Free-form observations (e.g. positions of odd values); not part of PASS logic.
    std::map<std::string, std::string> notes;

    bool passed() const noexcept
    {
        return status == Status::Pass;
    }
    // Marks the report failed and records the first witness only.
    void fail(Witness w);

    friend bool operator==(const VerifyReport &, const VerifyReport &) = default;
};

struct AsymRow {
    std::int64_t n = 0;
    BigInt exact;
    double predicted = 0; // e^{pi sqrt(n)} / (4n)
    double ratio = 0;     // exact / predicted
};

// Points below this are tabulated but excluded from the monotonicity logic.
inline constexpr std::int64_t asym_min_point = 100;
inline constexpr double asym_step_slack = 0.02;
inline constexpr double asym_final_tolerance = 0.25;
inline constexpr std::int64_t asym_final_min_point = 2000;

inline constexpr double density_floor = 0.85;
inline constexpr double density_trend_slack = 0.01;

// Series generating functions agree with brute-force enumeration, for the
// sigma values and every feasible per-m count, 0 <= n <= n_max.
VerifyReport check_gf_vs_oracle(MexVariant variant, unsigned n_max, unsigned oracle_limit = default_oracle_limit);

// Coefficientwise equality of two series to their common order, reported
// under `name` with the first differing index as witness.
VerifyReport compare_series(std::string name, const Series &expected, const Series &actual);

// (-q;q)_inf = 1/(q;q^2)_inf = (q^2;q^2)_inf/(q;q)_inf to order N.
VerifyReport check_euler_identity(std::size_t N);
// Defining 1phi1 sum vs. sum 2^n q^{n(n+1)/2}/(-q;q)_n.
VerifyReport check_phi11_identity(std::size_t N);
// Pbar * sum m q^{C(m,2)}/(-q;q)_m vs. Pbar * sigma(q).
VerifyReport check_overlined_telescoping(std::size_t N);
// The all-parts raw sum vs. Pbar * 1phi1.
VerifyReport check_all_fixed_point(std::size_t N);
// Sum over m of count and m*count series reproduce pbar and the sigma-mex gf.
VerifyReport check_count_sums(MexVariant variant, std::size_t N);

// sigma_all(n) and pbar(n) even for 1 <= n <= n_max, via mod-2 series, plus
// exact-integer spot checks at 20 seeded random n.
VerifyReport check_parity_all_even(std::size_t n_max);

// Density of even values of sigma_overlined(n) over [1, n_max] and its dyadic
// prefixes. Requires n_max >= 100.
VerifyReport check_parity_density(std::size_t n_max);
// The density logic on an arbitrary parity sequence; is_even[n-1] refers to n.
VerifyReport parity_density_report(std::string name, std::span<const bool> is_even);

// sigma_nonoverlined(n) odd exactly at triangular n in [1, n_max].
VerifyReport check_triangular_parity(std::size_t n_max);

// Exact sigma_overlined(n) against e^{pi sqrt n}/(4n). Throws
// std::invalid_argument on an empty or non-ascending point list.
std::pair<std::vector<AsymRow>, VerifyReport> asym_ratio_table(std::span<const std::int64_t> points);

// |sigma(e^{-t}) - P4(t)| <= 2 * (32671/60) t^5 with the series truncated at N.
// Throws std::invalid_argument for t outside (0, 0.2] or N < 400.
VerifyReport check_sigma_taylor(std::span<const double> t_values, std::size_t N = 800);

inline constexpr double ingham_tail_bound = 1e-8;

// A(e^{-t}) sqrt(pi) t^{-1/2} e^{-pi^2/(4t)} for A = Pbar * sigma over a
// decreasing t grid, required to increase toward 1, plus the weak
// monotonicity of the coefficients of A up to N. Throws
// std::invalid_argument when N < 800 or e^{-tN} >= 1e-8 for some t.
VerifyReport check_ingham_scaling(std::size_t N, std::span<const double> t_grid = {});
// Same, for an arbitrary series A.
VerifyReport ingham_scaling_report(std::string name, const Series &A, std::span<const double> t_grid);

inline constexpr double default_ingham_grid[] = {0.30, 0.25, 0.20};

// Settings for the full suite run by `mexlab verify`.
struct SuiteConfig {
    unsigned oracle_n_max = 30;
    unsigned oracle_limit = default_oracle_limit;
    std::size_t identity_order = 2000;
    std::size_t parity_n_max = 10000;
    std::size_t triangular_n_max = 5000;
    std::vector<std::int64_t> asym_points{100, 400, 900, 1600, 2500};
    std::vector<double> taylor_t{0.05, 0.1};
    std::size_t ingham_order = 2000;
    std::size_t count_sum_order = 200;
    unsigned workers = 0; // 0 = hardware concurrency
};

// Names accepted by run_suite's `only` argument, in report order.
const std::vector<std::string> &suite_check_names();

// Runs the checks concurrently and returns the reports in the fixed order of
// suite_check_names(). `only` restricts the run to one check; unknown names
// throw std::invalid_argument.
std::vector<VerifyReport> run_suite(const SuiteConfig &config, const std::optional<std::string> &only = std::nullopt);

} // namespace mexlab

#endif
