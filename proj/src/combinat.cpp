#include <mexlab/combinat.hpp>

#include <algorithm>
#include <future>
#include <map>
#include <thread>

namespace mexlab
{

OracleLimitError::OracleLimitError(unsigned n, unsigned limit)
    : std::length_error("enumeration of n = " + std::to_string(n) + " exceeds the oracle limit "
                        + std::to_string(limit) + " (raise it with --oracle-limit)")
{
}

namespace
{

bool in_variant_set(const PartGroup &g, MexVariant v)
{
    switch (v) {
        case MexVariant::Overlined:
            return g.overlined;
        case MexVariant::NonOverlined:
            return g.count > (g.overlined ? 1u : 0u);
        case MexVariant::All:
            return true;
    }
    return false;
}

std::string render(const std::vector<PartGroup> &groups)
{
    std::string out;
    for (const auto &g : groups) {
        for (unsigned c = 0; c < g.count; ++c) {
            if (!out.empty()) {
                out += '+';
            }
            out += std::to_string(g.part);
            if (c == 0 && g.overlined) {
                out += '~';
            }
        }
    }
    return out;
}

// Depth-first generation of partitions in multiplicity form; parts <= max_part.
bool partitions_rec(unsigned rem, unsigned max_part, std::vector<PartGroup> &stack,
                    const std::function<bool(const Partition &)> &visit)
{
    if (rem == 0) {
        return visit(Partition{stack});
    }
    for (unsigned p = std::min(rem, max_part); p >= 1; --p) {
        for (unsigned c = rem / p; c >= 1; --c) {
            stack.push_back({p, c, false});
            const bool go_on = partitions_rec(rem - c * p, p - 1, stack, visit);
            stack.pop_back();
            if (!go_on) {
                return false;
            }
        }
    }
    return true;
}

void check_limit(unsigned n, unsigned limit)
{
    if (n > limit) {
        throw OracleLimitError(n, limit);
    }
}

void tally_partition(const Partition &p, MexDistribution &d)
{
    const auto k = p.distinct_parts();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        const auto pi = Overpartition::from_partition(p, mask);
        ++d.total;
        for (auto v : all_variants) {
            const auto m = pi.mex(v);
            auto &cv = d.counts[static_cast<int>(v)];
            if (cv.size() <= m) {
                cv.resize(m + 1, 0);
            }
            ++cv[m];
        }
    }
}

void merge_into(MexDistribution &dst, const MexDistribution &src)
{
    dst.total += src.total;
    for (int v = 0; v < 3; ++v) {
        auto &a = dst.counts[v];
        const auto &b = src.counts[v];
        if (a.size() < b.size()) {
            a.resize(b.size(), 0);
        }
        for (std::size_t m = 0; m < b.size(); ++m) {
            a[m] += b[m];
        }
    }
}

} // namespace

unsigned Partition::weight() const
{
    unsigned w = 0;
    for (const auto &g : groups) {
        w += g.part * g.count;
    }
    return w;
}

std::string Partition::to_string() const
{
    return render(groups);
}

Overpartition::Overpartition(std::vector<PartGroup> groups) : groups_(std::move(groups))
{
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        if (groups_[i].part == 0 || groups_[i].count == 0) {
            throw std::invalid_argument("overpartition: parts and counts must be positive");
        }
        if (i > 0 && groups_[i].part >= groups_[i - 1].part) {
            throw std::invalid_argument("overpartition: part values must be strictly decreasing");
        }
    }
}

Overpartition Overpartition::from_partition(const Partition &p, std::uint64_t overline_mask)
{
    Overpartition out;
    out.groups_ = p.groups;
    for (std::size_t i = 0; i < out.groups_.size(); ++i) {
        out.groups_[i].overlined = (overline_mask >> i) & 1u;
    }
    return out;
}

unsigned Overpartition::weight() const
{
    unsigned w = 0;
    for (const auto &g : groups_) {
        w += g.part * g.count;
    }
    return w;
}

Partition Overpartition::underlying() const
{
    Partition p{groups_};
    for (auto &g : p.groups) {
        g.overlined = false;
    }
    return p;
}

std::uint64_t Overpartition::overline_mask() const
{
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < groups_.size(); ++i) {
        if (groups_[i].overlined) {
            mask |= std::uint64_t{1} << i;
        }
    }
    return mask;
}

unsigned Overpartition::mex(MexVariant variant) const
{
    unsigned candidate = 1;
    for (auto it = groups_.rbegin(); it != groups_.rend(); ++it) {
        if (!in_variant_set(*it, variant)) {
            continue;
        }
        if (it->part != candidate) {
            break;
        }
        ++candidate;
    }
    return candidate;
}

std::string Overpartition::to_string() const
{
    return render(groups_);
}

unsigned mex_statistic(const Overpartition &pi, MexVariant variant)
{
    return pi.mex(variant);
}

void for_each_partition(unsigned n, const std::function<bool(const Partition &)> &visit)
{
    std::vector<PartGroup> stack;
    partitions_rec(n, n, stack, visit);
}

std::vector<Partition> partitions(unsigned n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition &p) {
        out.push_back(p);
        return true;
    });
    return out;
}

void for_each_overpartition(unsigned n, const std::function<void(const Overpartition &)> &visit, unsigned limit)
{
    check_limit(n, limit);
    for_each_partition(n, [&](const Partition &p) {
        const auto k = p.distinct_parts();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            visit(Overpartition::from_partition(p, mask));
        }
        return true;
    });
}

std::vector<Overpartition> enumerate_overpartitions(unsigned n, unsigned limit)
{
    std::vector<Overpartition> out;
    for_each_overpartition(n, [&](const Overpartition &pi) { out.push_back(pi); }, limit);
    return out;
}

std::vector<Overpartition> overpartitions_from_multiset(std::vector<unsigned> elements)
{
    if (elements.empty()) {
        throw std::invalid_argument("multiset must be non-empty");
    }
    if (std::find(elements.begin(), elements.end(), 0u) != elements.end()) {
        throw std::invalid_argument("multiset elements must be positive integers");
    }
    std::map<unsigned, unsigned, std::greater<>> mult;
    for (unsigned e : elements) {
        ++mult[e];
    }
    Partition p;
    for (const auto &[part, count] : mult) {
        p.groups.push_back({part, count, false});
    }
    std::vector<Overpartition> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.distinct_parts()); ++mask) {
        out.push_back(Overpartition::from_partition(p, mask));
    }
    return out;
}

std::uint64_t MexDistribution::count(MexVariant v, std::size_t m) const
{
    const auto &cv = count_vector(v);
    return m < cv.size() ? cv[m] : 0;
}

MexDistribution mex_distribution(unsigned n, unsigned limit, unsigned workers)
{
    check_limit(n, limit);
    MexDistribution d;
    d.n = n;

    if (n == 0) {
        tally_partition(Partition{}, d);
    } else {
        if (workers == 0) {
            workers = std::max(1u, std::thread::hardware_concurrency());
        }
        workers = std::min(workers, n);
        // Worker w takes largest parts p with p % workers == w; partials are
        // merged in worker order, and addition commutes, so the tally is
        // independent of scheduling.
        auto run = [n, workers](unsigned w) {
            MexDistribution part;
            for (unsigned p = n; p >= 1; --p) {
                if (p % workers != w) {
                    continue;
                }
                for (unsigned c = n / p; c >= 1; --c) {
                    std::vector<PartGroup> stack{{p, c, false}};
                    partitions_rec(n - c * p, p - 1, stack, [&](const Partition &q) {
                        tally_partition(q, part);
                        return true;
                    });
                }
            }
            return part;
        };
        if (workers == 1) {
            d = run(0);
        } else {
            std::vector<std::future<MexDistribution>> futures;
            for (unsigned w = 0; w < workers; ++w) {
                futures.push_back(std::async(std::launch::async, run, w));
            }
            for (auto &f : futures) {
                merge_into(d, f.get());
            }
        }
        d.n = n;
    }

    for (auto v : all_variants) {
        const int vi = static_cast<int>(v);
        d.sigma[vi] = 0;
        for (std::size_t m = 1; m < d.counts[vi].size(); ++m) {
            d.sigma[vi] += BigInt(static_cast<unsigned long>(m)) * BigInt(static_cast<unsigned long>(d.counts[vi][m]));
        }
    }
    return d;
}

BigInt sigma_mex_oracle(unsigned n, MexVariant variant, unsigned limit)
{
    // The empty overpartition has mex 1 in every variant, which matches the
    // sigma(0) = 1 convention.
    return mex_distribution(n, limit).sigma_of(variant);
}

std::uint64_t count_mex_oracle(unsigned n, std::size_t m, MexVariant variant, unsigned limit)
{
    if (m < 1) {
        throw std::invalid_argument("count_mex_oracle: mex value must be >= 1");
    }
    return mex_distribution(n, limit).count(variant, m);
}

std::vector<OverlineClass> class_decomposition(unsigned n, unsigned limit)
{
    check_limit(n, limit);
    std::vector<OverlineClass> out;
    for_each_partition(n, [&](const Partition &p) {
        OverlineClass cls;
        cls.underlying = p;
        cls.size = std::uint64_t{1} << p.distinct_parts();
        for (std::uint64_t mask = 0; mask < cls.size; ++mask) {
            cls.members.push_back(Overpartition::from_partition(p, mask));
        }
        cls.mex_all = cls.members.front().mex(MexVariant::All);
        out.push_back(std::move(cls));
        return true;
    });
    return out;
}

} // namespace mexlab
