#include <mexlab/qfactory.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace mexlab
{

namespace
{

// Coefficient rings for the in-place product kernels. Exact arithmetic runs
// on GMP integers; modular arithmetic runs on machine words (modulus < 2^32).
struct ExactRing {
    using value_type = BigInt;

    value_type from(const BigInt &x) const
    {
        return x;
    }
    void add(value_type &dst, const value_type &x) const
    {
        mpz_add(dst.get_mpz_t(), dst.get_mpz_t(), x.get_mpz_t());
    }
    void sub(value_type &dst, const value_type &x) const
    {
        mpz_sub(dst.get_mpz_t(), dst.get_mpz_t(), x.get_mpz_t());
    }
    void addmul(value_type &dst, const value_type &c, const value_type &x) const
    {
        mpz_addmul(dst.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
    }
    BigInt to_big(const value_type &x) const
    {
        return x;
    }
};

struct ModRing {
    using value_type = std::uint64_t;
    std::uint64_t m;

    value_type from(const BigInt &x) const
    {
        return mpz_fdiv_ui(x.get_mpz_t(), m);
    }
    void add(value_type &dst, value_type x) const
    {
        dst += x;
        if (dst >= m) {
            dst -= m;
        }
    }
    void sub(value_type &dst, value_type x) const
    {
        dst = dst >= x ? dst - x : dst + m - x;
    }
    void addmul(value_type &dst, value_type c, value_type x) const
    {
        dst = (dst + c * x) % m;
    }
    BigInt to_big(value_type x) const
    {
        return BigInt(static_cast<unsigned long>(x));
    }
};

template <class Ring>
using Buf = std::vector<typename Ring::value_type>;

template <class Ring>
Buf<Ring> unit_buf(const Ring &r, std::size_t N)
{
    Buf<Ring> v(N + 1, r.from(BigInt(0)));
    v[0] = r.from(BigInt(1));
    return v;
}

// v *= (1 + sign q^k)
template <class Ring>
void mul_binomial(const Ring &r, Buf<Ring> &v, std::size_t k, int sign)
{
    for (std::size_t i = v.size(); i-- > k;) {
        if (sign > 0) {
            r.add(v[i], v[i - k]);
        } else {
            r.sub(v[i], v[i - k]);
        }
    }
}

// v /= (1 + sign q^k)
template <class Ring>
void div_binomial(const Ring &r, Buf<Ring> &v, std::size_t k, int sign)
{
    for (std::size_t i = k; i < v.size(); ++i) {
        if (sign > 0) {
            r.sub(v[i], v[i - k]);
        } else {
            r.add(v[i], v[i - k]);
        }
    }
}

// acc += c q^shift v
template <class Ring>
void add_shifted(const Ring &r, Buf<Ring> &acc, const Buf<Ring> &v, std::size_t shift, const BigInt &c)
{
    const auto cc = r.from(c);
    for (std::size_t i = 0; i + shift < acc.size(); ++i) {
        r.addmul(acc[i + shift], cc, v[i]);
    }
}

template <class Ring>
Series to_series(const Ring &r, const Buf<Ring> &v, unsigned long modulus)
{
    std::vector<BigInt> out;
    out.reserve(v.size());
    for (const auto &x : v) {
        out.push_back(r.to_big(x));
    }
    return Series::from_coeffs(std::move(out), static_cast<std::int64_t>(v.size()) - 1, modulus);
}

// Runs body(ring) in exact or modular arithmetic and wraps the result.
template <class Body>
Series with_ring(unsigned long modulus, Body &&body)
{
    if (modulus == 1) {
        throw std::invalid_argument("qfactory: modulus must be 0 (exact) or >= 2");
    }
    if (modulus == 0) {
        ExactRing r;
        return to_series(r, body(r), 0);
    }
    if (modulus > UINT32_MAX) {
        throw std::invalid_argument("qfactory: modulus must fit in 32 bits");
    }
    ModRing r{modulus};
    return to_series(r, body(r), modulus);
}

std::size_t tri(std::size_t m)
{
    return m * (m + 1) / 2;
}

template <class Ring>
Buf<Ring> pochhammer_buf(const Ring &r, const PochSpec &spec, std::size_t N)
{
    auto v = unit_buf(r, N);
    for (std::size_t j = 0; !spec.length || j < *spec.length; ++j) {
        const std::size_t e = spec.first + spec.step * j;
        // Factors beyond the order are 1 + O(q^{N+1}).
        if (e > N) {
            break;
        }
        mul_binomial(r, v, e, spec.sign);
    }
    return v;
}

template <class Ring>
Buf<Ring> overpartition_buf(const Ring &r, std::size_t N)
{
    auto v = pochhammer_buf(r, PochSpec::minus_q_q(), N);
    for (std::size_t k = 1; k <= N; ++k) {
        div_binomial(r, v, k, -1);
    }
    return v;
}

// sum_{m >= m0} weight(m) q^{shift(m)} / (-q;q)_m, with 1/(-q;q)_m built
// incrementally. Stops at the first m whose shift exceeds N.
template <class Ring, class Weight, class Shift>
Buf<Ring> minus_q_q_sum(const Ring &r, std::size_t N, std::size_t m0, Weight weight, Shift shift)
{
    auto acc = Buf<Ring>(N + 1, r.from(BigInt(0)));
    auto inv = unit_buf(r, N);
    for (std::size_t m = 0;; ++m) {
        if (m >= 1) {
            div_binomial(r, inv, m, +1);
        }
        if (m < m0) {
            continue;
        }
        const std::size_t e = shift(m);
        if (e > N) {
            break;
        }
        add_shifted(r, acc, inv, e, weight(m));
    }
    return acc;
}

void check_spec(const PochSpec &spec)
{
    if (spec.sign != 1 && spec.sign != -1) {
        throw std::invalid_argument("pochhammer: sign must be +1 or -1");
    }
    if (spec.step != 1 && spec.step != 2) {
        throw std::invalid_argument("pochhammer: step must be 1 or 2");
    }
    if (spec.first == 0) {
        throw std::invalid_argument("pochhammer: first exponent must be positive");
    }
}

BigInt pow2(std::size_t k)
{
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
    return p;
}

} // namespace

std::string_view to_string(MexVariant v)
{
    switch (v) {
        case MexVariant::NonOverlined:
            return "nonoverlined";
        case MexVariant::Overlined:
            return "overlined";
        case MexVariant::All:
            return "all";
    }
    return "?";
}

std::optional<MexVariant> parse_variant(std::string_view name)
{
    for (auto v : all_variants) {
        if (to_string(v) == name) {
            return v;
        }
    }
    return std::nullopt;
}

std::size_t max_feasible_mex(std::size_t N)
{
    std::size_t m = 1;
    while ((m + 1) * m / 2 <= N) {
        ++m;
    }
    return m;
}

Series pochhammer(const PochSpec &spec, std::size_t N, unsigned long modulus)
{
    check_spec(spec);
    return with_ring(modulus, [&](const auto &r) { return pochhammer_buf(r, spec, N); });
}

Series overpartition_gf(std::size_t N, unsigned long modulus)
{
    return with_ring(modulus, [&](const auto &r) { return overpartition_buf(r, N); });
}

Series ramanujan_sigma(std::size_t N, unsigned long modulus)
{
    return with_ring(modulus, [&](const auto &r) {
        return minus_q_q_sum(
            r, N, 0, [](std::size_t) { return BigInt(1); }, tri);
    });
}

Series phi11_simplified(std::size_t N, unsigned long modulus)
{
    return with_ring(modulus, [&](const auto &r) { return minus_q_q_sum(r, N, 0, pow2, tri); });
}

Series phi11(std::size_t N, unsigned long modulus)
{
    return with_ring(modulus, [&](const auto &r) {
        using R = std::decay_t<decltype(r)>;
        auto acc = Buf<R>(N + 1, r.from(BigInt(0)));
        // ratio = (q;q)_n / ((-q;q)_n (q;q)_n), with a = q, b = -q, z = -2q.
        auto ratio = unit_buf(r, N);
        for (std::size_t n = 0;; ++n) {
            if (n >= 1) {
                mul_binomial(r, ratio, n, -1); // (a;q)_n gains (1 - q^n)
                div_binomial(r, ratio, n, +1); // (b;q)_n gains (1 + q^n)
                div_binomial(r, ratio, n, -1); // (q;q)_n gains (1 - q^n)
            }
            // (-1)^n q^{n(n-1)/2} (-2q)^n
            const std::size_t e = n * (n - 1) / 2 + n;
            if (e > N) {
                break;
            }
            BigInt sign_part = (n % 2 == 0) ? 1 : -1;
            BigInt z_coeff;
            mpz_ui_pow_ui(z_coeff.get_mpz_t(), 2, n);
            if (n % 2 == 1) {
                z_coeff = -z_coeff;
            }
            add_shifted(r, acc, ratio, e, BigInt(sign_part * z_coeff));
        }
        return acc;
    });
}

Series sigma_mex_gf(MexVariant variant, std::size_t N, unsigned long modulus)
{
    switch (variant) {
        case MexVariant::Overlined:
            return mul(overpartition_gf(N, modulus), ramanujan_sigma(N, modulus));
        case MexVariant::All:
            return mul(overpartition_gf(N, modulus), phi11(N, modulus));
        case MexVariant::NonOverlined: {
            const auto d = pochhammer(PochSpec::minus_q_q(), N, modulus);
            return mul(mul(d, d), d);
        }
    }
    throw std::invalid_argument("sigma_mex_gf: unknown variant");
}

Series mex_count_gf(MexVariant variant, std::size_t m, std::size_t N, unsigned long modulus)
{
    if (m < 1) {
        throw std::invalid_argument("mex_count_gf: mex value must be >= 1");
    }
    const std::size_t shift = m * (m - 1) / 2;
    return with_ring(modulus, [&](const auto &r) {
        using R = std::decay_t<decltype(r)>;
        auto out = Buf<R>(N + 1, r.from(BigInt(0)));
        if (shift > N) {
            return out;
        }
        switch (variant) {
            case MexVariant::Overlined: {
                // Pbar q^{C(m,2)} / (-q;q)_m
                auto v = overpartition_buf(r, N);
                for (std::size_t k = 1; k <= m && k <= N; ++k) {
                    div_binomial(r, v, k, +1);
                }
                add_shifted(r, out, v, shift, BigInt(1));
                break;
            }
            case MexVariant::All: {
                // Pbar 2^{m-1} q^{C(m,2)} (1 - q^m) / (-q;q)_m
                auto v = overpartition_buf(r, N);
                for (std::size_t k = 1; k <= m && k <= N; ++k) {
                    div_binomial(r, v, k, +1);
                }
                if (m <= N) {
                    mul_binomial(r, v, m, -1);
                }
                add_shifted(r, out, v, shift, pow2(m - 1));
                break;
            }
            case MexVariant::NonOverlined: {
                // Overlined parts: any distinct set, (-q;q)_inf. Non-overlined parts:
                // each of 1..m-1 at least once (q^k / (1 - q^k)), m absent, and every
                // k > m free (1 / (1 - q^k)).
                auto v = pochhammer_buf(r, PochSpec::minus_q_q(), N);
                for (std::size_t k = 1; k <= N; ++k) {
                    if (k != m) {
                        div_binomial(r, v, k, -1);
                    }
                }
                add_shifted(r, out, v, shift, BigInt(1));
                break;
            }
        }
        return out;
    });
}

Series overlined_mex_raw_sum(std::size_t N, unsigned long modulus)
{
    const auto sum = with_ring(modulus, [&](const auto &r) {
        return minus_q_q_sum(
            r, N, 1, [](std::size_t m) { return BigInt(static_cast<unsigned long>(m)); },
            [](std::size_t m) { return m * (m - 1) / 2; });
    });
    return mul(overpartition_gf(N, modulus), sum);
}

Series all_mex_raw_sum(std::size_t N, unsigned long modulus)
{
    const auto sum = with_ring(modulus, [&](const auto &r) {
        using R = std::decay_t<decltype(r)>;
        auto acc = Buf<R>(N + 1, r.from(BigInt(0)));
        auto inv = unit_buf(r, N);
        for (std::size_t m = 1;; ++m) {
            div_binomial(r, inv, m, +1);
            const std::size_t e = m * (m - 1) / 2;
            if (e > N) {
                break;
            }
            auto term = inv;
            mul_binomial(r, term, m, -1);
            add_shifted(r, acc, term, e, BigInt(static_cast<unsigned long>(m)) * pow2(m - 1));
        }
        return acc;
    });
    return mul(overpartition_gf(N, modulus), sum);
}

} // namespace mexlab
