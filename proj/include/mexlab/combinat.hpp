#ifndef MEXLAB_COMBINAT_HPP
#define MEXLAB_COMBINAT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <mexlab/qfactory.hpp>
#include <mexlab/series.hpp>

namespace mexlab
{

inline constexpr unsigned default_oracle_limit = 45;

// Thrown when an enumeration is requested beyond the configured oracle limit.
class OracleLimitError : public std::length_error
{
public:
    OracleLimitError(unsigned n, unsigned limit);
};

// One distinct part value of an overpartition: `count` copies of `part`, the
// first of which is overlined when `overlined` is set.
struct PartGroup {
    unsigned part = 0;
    unsigned count = 0;
    bool overlined = false;

    friend bool operator==(const PartGroup &, const PartGroup &) = default;
};

// Ordinary partition in multiplicity form, parts strictly decreasing.
struct Partition {
    std::vector<PartGroup> groups; // overlined is always false

    unsigned weight() const;
    std::size_t distinct_parts() const
    {
        return groups.size();
    }
    // "2+1+1"; the empty partition renders as "".
    std::string to_string() const;

    friend bool operator==(const Partition &, const Partition &) = default;
};

class Overpartition
{
public:
    Overpartition() = default;
    // Validates: parts positive and strictly decreasing, counts positive.
    explicit Overpartition(std::vector<PartGroup> groups);

    // The 2^d overpartitions sharing an underlying partition are indexed by a
    // mask whose bit i overlines the i-th largest distinct part.
    static Overpartition from_partition(const Partition &p, std::uint64_t overline_mask);

    const std::vector<PartGroup> &groups() const noexcept
    {
        return groups_;
    }
    unsigned weight() const;
    // Overline erasure.
    Partition underlying() const;
    std::uint64_t overline_mask() const;

    // Least positive integer missing from the overlined parts, the
    // non-overlined parts, or all parts.
    unsigned mex(MexVariant variant) const;

    // Parts joined with '+', overlined copies marked with a trailing '~',
    // e.g. "3~+3+1". The empty overpartition renders as "".
    std::string to_string() const;

    friend bool operator==(const Overpartition &, const Overpartition &) = default;

private:
    std::vector<PartGroup> groups_;
};

unsigned mex_statistic(const Overpartition &pi, MexVariant variant);

// Ordinary partitions of n in lexicographically decreasing order
// (for n = 4: 4, 3+1, 2+2, 2+1+1, 1+1+1+1). Stops early if visit returns false.
void for_each_partition(unsigned n, const std::function<bool(const Partition &)> &visit);
std::vector<Partition> partitions(unsigned n);

// Every overpartition of n exactly once: underlying partitions in
// lexicographically decreasing order, then overline masks ascending.
// Throws OracleLimitError if n > limit.
void for_each_overpartition(unsigned n, const std::function<void(const Overpartition &)> &visit,
                            unsigned limit = default_oracle_limit);
std::vector<Overpartition> enumerate_overpartitions(unsigned n, unsigned limit = default_oracle_limit);

// All overpartitions with the given multiset of parts; 2^(distinct values) of them.
// Throws std::invalid_argument for an empty multiset or a zero element.
std::vector<Overpartition> overpartitions_from_multiset(std::vector<unsigned> elements);

// Per-variant mex distribution of the overpartitions of one n.
struct MexDistribution {
    unsigned n = 0;
    std::uint64_t total = 0;                // pbar(n)
    std::vector<std::uint64_t> counts[3];   // counts[v][m] = #{pi : mex_v(pi) = m}, index 0 unused
    BigInt sigma[3];                        // sum of mex_v over all overpartitions

    const std::vector<std::uint64_t> &count_vector(MexVariant v) const
    {
        return counts[static_cast<int>(v)];
    }
    std::uint64_t count(MexVariant v, std::size_t m) const;
    const BigInt &sigma_of(MexVariant v) const
    {
        return sigma[static_cast<int>(v)];
    }
};

// Exhaustive tally. The work is split by largest part across `workers`
// threads (0 = hardware concurrency); the result does not depend on it.
MexDistribution mex_distribution(unsigned n, unsigned limit = default_oracle_limit, unsigned workers = 1);

// Brute-force sigma-mex value; n = 0 gives 1.
BigInt sigma_mex_oracle(unsigned n, MexVariant variant, unsigned limit = default_oracle_limit);
std::uint64_t count_mex_oracle(unsigned n, std::size_t m, MexVariant variant, unsigned limit = default_oracle_limit);

// Overpartitions of n grouped by overline erasure.
struct OverlineClass {
    Partition underlying;
    std::uint64_t size = 0;   // 2^(distinct parts)
    unsigned mex_all = 0;     // shared by every member
    std::vector<Overpartition> members;
};

std::vector<OverlineClass> class_decomposition(unsigned n, unsigned limit = default_oracle_limit);

} // namespace mexlab

#endif
