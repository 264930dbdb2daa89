#include <mexlab/series.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace mexlab
{

namespace
{

unsigned long common_modulus(const Series &a, const Series &b)
{
    if (a.modulus() != 0 && b.modulus() != 0 && a.modulus() != b.modulus()) {
        throw std::invalid_argument("series: operands reduced modulo different integers ("
                                    + std::to_string(a.modulus()) + " vs " + std::to_string(b.modulus()) + ")");
    }
    return a.modulus() != 0 ? a.modulus() : b.modulus();
}

void reduce_in_place(std::vector<BigInt> &v, unsigned long m)
{
    if (m == 0) {
        return;
    }
    for (auto &c : v) {
        mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), m);
    }
}

std::vector<std::uint64_t> residues(std::span<const BigInt> v, std::size_t len, unsigned long m)
{
    std::vector<std::uint64_t> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = mpz_fdiv_ui(v[i].get_mpz_t(), m);
    }
    return out;
}

} // namespace

Series::Series() : coeffs_(1) {}

Series::Series(std::vector<BigInt> coeffs, unsigned long modulus) : coeffs_(std::move(coeffs)), modulus_(modulus)
{
    reduce_in_place(coeffs_, modulus_);
}

Series Series::from_coeffs(std::vector<BigInt> values, std::int64_t trunc_order, unsigned long modulus)
{
    if (trunc_order < 0) {
        throw std::invalid_argument("series: negative truncation order " + std::to_string(trunc_order));
    }
    if (values.empty()) {
        throw std::invalid_argument("series: empty coefficient list");
    }
    if (modulus == 1) {
        throw std::invalid_argument("series: modulus must be 0 (exact) or >= 2");
    }
    const auto len = static_cast<std::size_t>(trunc_order) + 1;
    if (values.size() > len) {
        throw std::invalid_argument("series: " + std::to_string(values.size()) + " coefficients exceed order "
                                    + std::to_string(trunc_order));
    }
    values.resize(len);
    return Series(std::move(values), modulus);
}

Series Series::from_coeffs(std::initializer_list<long> values, std::int64_t trunc_order)
{
    std::vector<BigInt> v;
    v.reserve(values.size());
    for (long x : values) {
        v.emplace_back(x);
    }
    return from_coeffs(std::move(v), trunc_order);
}

Series Series::zero(std::size_t order)
{
    return Series(std::vector<BigInt>(order + 1), 0);
}

Series Series::one(std::size_t order)
{
    return monomial(0, order);
}

Series Series::monomial(std::size_t exponent, std::size_t order)
{
    std::vector<BigInt> v(order + 1);
    if (exponent <= order) {
        v[exponent] = 1;
    }
    return Series(std::move(v), 0);
}

const BigInt &Series::at(std::size_t n) const
{
    if (n > order()) {
        throw std::out_of_range("series: coefficient index " + std::to_string(n) + " beyond order "
                                + std::to_string(order()));
    }
    return coeffs_[n];
}

bool Series::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt &c) { return c == 0; });
}

Series Series::truncated(std::size_t order) const
{
    std::vector<BigInt> v(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
    v.resize(order + 1);
    return Series(std::move(v), modulus_);
}

std::string Series::to_string(std::size_t max_terms) const
{
    std::ostringstream os;
    std::size_t shown = 0;
    for (std::size_t n = 0; n <= order() && shown < max_terms; ++n) {
        const BigInt &c = coeffs_[n];
        if (c == 0) {
            continue;
        }
        BigInt mag = abs(c);
        if (shown == 0) {
            os << (c < 0 ? "-" : "");
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (n == 0 || mag != 1) {
            os << mag.get_str();
        }
        if (n >= 1) {
            os << 'q';
        }
        if (n >= 2) {
            os << '^' << n;
        }
        ++shown;
    }
    if (shown == 0) {
        os << '0';
    }
    os << " + O(q^" << order() + 1 << ')';
    if (modulus_ != 0) {
        os << " mod " << modulus_;
    }
    return os.str();
}

Series add(const Series &a, const Series &b)
{
    const auto m = common_modulus(a, b);
    const auto len = std::min(a.order(), b.order()) + 1;
    std::vector<BigInt> v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v[i] = a.coeffs_[i] + b.coeffs_[i];
    }
    return Series(std::move(v), m);
}

Series sub(const Series &a, const Series &b)
{
    const auto m = common_modulus(a, b);
    const auto len = std::min(a.order(), b.order()) + 1;
    std::vector<BigInt> v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v[i] = a.coeffs_[i] - b.coeffs_[i];
    }
    return Series(std::move(v), m);
}

Series negate(const Series &a)
{
    std::vector<BigInt> v(a.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = -a.coeffs_[i];
    }
    return Series(std::move(v), a.modulus_);
}

Series mul(const Series &a, const Series &b)
{
    const auto m = common_modulus(a, b);
    const auto len = std::min(a.order(), b.order()) + 1;

    // Word-sized residues: accumulate each output coefficient in 128 bits and
    // reduce once. Products are < 2^64, so no overflow for any realistic len.
    if (m != 0 && m <= std::numeric_limits<std::uint32_t>::max()) {
        const auto ra = residues(a.coeffs_, len, m);
        const auto rb = residues(b.coeffs_, len, m);
        std::vector<BigInt> v(len);
        for (std::size_t n = 0; n < len; ++n) {
            unsigned __int128 acc = 0;
            for (std::size_t i = 0; i <= n; ++i) {
                acc += static_cast<unsigned __int128>(ra[i]) * rb[n - i];
            }
            v[n] = static_cast<unsigned long>(acc % m);
        }
        return Series(std::move(v), m);
    }

    std::vector<BigInt> v(len);
    for (std::size_t i = 0; i < len; ++i) {
        const auto *ai = a.coeffs_[i].get_mpz_t();
        if (mpz_sgn(ai) == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < len; ++j) {
            mpz_addmul(v[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
        }
    }
    return Series(std::move(v), m);
}

Series invert(const Series &a)
{
    const auto len = a.coeffs_.size();
    const BigInt &c0 = a.coeffs_[0];
    // b_0 = 1/a_0; we only need a_0 to be its own inverse, or a unit mod m.
    BigInt inv0;
    if (a.modulus_ == 0) {
        if (c0 != 1 && c0 != -1) {
            throw std::domain_error("invert: constant term " + c0.get_str() + " is not +1 or -1");
        }
        inv0 = c0;
    } else {
        const BigInt mod(a.modulus_);
        if (mpz_invert(inv0.get_mpz_t(), c0.get_mpz_t(), mod.get_mpz_t()) == 0) {
            throw std::domain_error("invert: constant term " + c0.get_str() + " is not a unit modulo "
                                    + std::to_string(a.modulus_));
        }
    }

    // Sparse factors such as (q;q)_inf have few nonzero terms; iterate only over those.
    std::vector<std::size_t> support;
    for (std::size_t k = 1; k < len; ++k) {
        if (a.coeffs_[k] != 0) {
            support.push_back(k);
        }
    }

    std::vector<BigInt> b(len);
    b[0] = inv0;
    BigInt acc;
    for (std::size_t n = 1; n < len; ++n) {
        acc = 0;
        for (std::size_t k : support) {
            if (k > n) {
                break;
            }
            mpz_addmul(acc.get_mpz_t(), a.coeffs_[k].get_mpz_t(), b[n - k].get_mpz_t());
        }
        b[n] = -inv0 * acc;
        if (a.modulus_ != 0) {
            mpz_fdiv_r_ui(b[n].get_mpz_t(), b[n].get_mpz_t(), a.modulus_);
        }
    }
    return Series(std::move(b), a.modulus_);
}

double evaluate_real(const Series &a, double q0)
{
    if (!(q0 > 0.0 && q0 < 1.0)) {
        throw std::domain_error("evaluate_real: q0 must lie in (0, 1), got " + std::to_string(q0));
    }
    double acc = 0.0;
    const auto c = a.coeffs();
    for (std::size_t n = c.size(); n-- > 0;) {
        acc = acc * q0 + c[n].get_d();
    }
    return acc;
}

Series reduce_mod(const Series &a, unsigned long m)
{
    if (m < 2) {
        throw std::invalid_argument("reduce_mod: modulus must be >= 2, got " + std::to_string(m));
    }
    if (a.modulus_ != 0 && a.modulus_ % m != 0) {
        throw std::invalid_argument("reduce_mod: series already reduced modulo " + std::to_string(a.modulus_)
                                    + ", which is not a multiple of " + std::to_string(m));
    }
    return Series(a.coeffs_, m);
}

std::int64_t first_mismatch(const Series &a, const Series &b)
{
    const auto len = std::min(a.order(), b.order()) + 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (a[i] != b[i]) {
            return static_cast<std::int64_t>(i);
        }
    }
    return -1;
}

} // namespace mexlab
