#ifndef MEXLAB_QFACTORY_HPP
#define MEXLAB_QFACTORY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <mexlab/series.hpp>

namespace mexlab
{

// Which parts of an overpartition the minimal excludant looks at.
enum class MexVariant { NonOverlined, Overlined, All };

inline constexpr MexVariant all_variants[] = {MexVariant::NonOverlined, MexVariant::Overlined, MexVariant::All};

std::string_view to_string(MexVariant v);
// Accepts "nonoverlined", "overlined", "all" (case-sensitive).
std::optional<MexVariant> parse_variant(std::string_view name);

// Finite or infinite product prod_j (1 + sign q^{first + step*j}).
//
// sign = -1 gives the usual q-Pochhammer factors (1 - q^k); sign = +1 gives
// (1 + q^k). An absent length means the infinite product, truncated at the
// requested order.
struct PochSpec {
    int sign = -1;
    unsigned step = 1;
    unsigned first = 1;
    std::optional<std::size_t> length;

    // (q;q)_m / (q;q)_inf
    static PochSpec q_q(std::optional<std::size_t> length = std::nullopt)
    {
        return {-1, 1, 1, length};
    }
    // (-q;q)_m / (-q;q)_inf
    static PochSpec minus_q_q(std::optional<std::size_t> length = std::nullopt)
    {
        return {+1, 1, 1, length};
    }
    // (q^2;q^2)_inf
    static PochSpec q2_q2()
    {
        return {-1, 2, 2, std::nullopt};
    }
    // (q;q^2)_inf
    static PochSpec q_q2()
    {
        return {-1, 2, 1, std::nullopt};
    }
};

// Builders. Every builder takes the truncation order N and an optional
// modulus (0 = exact integers); with a modulus the whole computation runs in
// Z/mZ, which is how the parity checks reach large N cheaply.

// Throws std::invalid_argument for sign not in {+1,-1}, step not in {1,2}, or first == 0.
Series pochhammer(const PochSpec &spec, std::size_t N, unsigned long modulus = 0);

// Pbar(q) = (-q;q)_inf / (q;q)_inf, the overpartition generating function.
Series overpartition_gf(std::size_t N, unsigned long modulus = 0);

// Ramanujan's sigma(q) = sum_{m>=0} q^{m(m+1)/2} / (-q;q)_m.
Series ramanujan_sigma(std::size_t N, unsigned long modulus = 0);

// 1phi1(q; -q; q, -2q) from its defining basic hypergeometric sum,
//   sum_n (q;q)_n / ((-q;q)_n (q;q)_n) * (-1)^n q^{n(n-1)/2} * (-2q)^n.
Series phi11(std::size_t N, unsigned long modulus = 0);

// The simplified form sum_n 2^n q^{n(n+1)/2} / (-q;q)_n.
Series phi11_simplified(std::size_t N, unsigned long modulus = 0);

// Generating function of the sigma-mex sum for a variant. Constant term is 1.
//   Overlined:    Pbar * sigma
//   All:          Pbar * 1phi1(q;-q;q,-2q)
//   NonOverlined: (-q;q)_inf^3
Series sigma_mex_gf(MexVariant variant, std::size_t N, unsigned long modulus = 0);

// Series whose q^n coefficient counts overpartitions of n with mex exactly m.
// Throws std::invalid_argument for m < 1.
Series mex_count_gf(MexVariant variant, std::size_t m, std::size_t N, unsigned long modulus = 0);

// Largest m whose per-m count series can be nonzero at order N, i.e. the
// largest m with m(m-1)/2 <= N.
std::size_t max_feasible_mex(std::size_t N);

// Unsimplified sides of the generating-function identities.

// Pbar * sum_{m>=1} m q^{m(m-1)/2} / (-q;q)_m  (before telescoping to Pbar * sigma).
Series overlined_mex_raw_sum(std::size_t N, unsigned long modulus = 0);

// Pbar * sum_{m>=1} m 2^{m-1} q^{m(m-1)/2} (1 - q^m) / (-q;q)_m  (the all-parts sum before
// the fixed-point rearrangement).
Series all_mex_raw_sum(std::size_t N, unsigned long modulus = 0);

} // namespace mexlab

#endif
