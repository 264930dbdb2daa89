#ifndef MEXLAB_SERIES_HPP
#define MEXLAB_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mexlab
{

using BigInt = mpz_class;

// Truncated power series sum_{n=0}^{N} c_n q^n with exact integer coefficients.
//
// Truncation contract: every binary operation silently truncates its result
// to the smaller of the two operand orders. Callers are expected to build all
// factors of an expression at one global order N.
//
// A series may optionally live in Z/mZ (modulus() != 0). Such series are
// produced by reduce_mod() and by the qfactory builders when asked for a
// modulus; coefficients are then kept in [0, m). Mixing a reduced series with
// an exact one reduces the exact operand; mixing two different moduli throws.
class Series
{
public:
    // The constant 0 at order 0.
    Series();

    // Zero-pads `values` up to trunc_order; extra values beyond trunc_order
    // are rejected. Throws std::invalid_argument on a negative order or empty
    // input.
    static Series from_coeffs(std::vector<BigInt> values, std::int64_t trunc_order, unsigned long modulus = 0);
    static Series from_coeffs(std::initializer_list<long> values, std::int64_t trunc_order);

    static Series zero(std::size_t order);
    static Series one(std::size_t order);
    // q^exponent (the zero series if exponent > order).
    static Series monomial(std::size_t exponent, std::size_t order);

    std::size_t order() const noexcept
    {
        return coeffs_.size() - 1;
    }
    unsigned long modulus() const noexcept
    {
        return modulus_;
    }
    std::span<const BigInt> coeffs() const noexcept
    {
        return coeffs_;
    }
    // Coefficient of q^n; n must be <= order().
    const BigInt &operator[](std::size_t n) const
    {
        return coeffs_[n];
    }
    const BigInt &at(std::size_t n) const;

    bool is_zero() const;
    Series truncated(std::size_t order) const;

    friend bool operator==(const Series &, const Series &) = default;

    // Human-readable rendering of the low-order terms, e.g. "1 + q - 2q^3 + O(q^6)".
    std::string to_string(std::size_t max_terms = 12) const;

private:
    Series(std::vector<BigInt> coeffs, unsigned long modulus);

    friend Series add(const Series &, const Series &);
    friend Series sub(const Series &, const Series &);
    friend Series mul(const Series &, const Series &);
    friend Series negate(const Series &);
    friend Series invert(const Series &);
    friend Series reduce_mod(const Series &, unsigned long);

    std::vector<BigInt> coeffs_;
    unsigned long modulus_ = 0;
};

Series add(const Series &a, const Series &b);
Series sub(const Series &a, const Series &b);
// Cauchy product truncated to min(a.order(), b.order()).
Series mul(const Series &a, const Series &b);
Series negate(const Series &a);

// Multiplicative inverse of a series with constant term +1 or -1 (or any unit
// when reduced mod m). Throws std::domain_error otherwise.
Series invert(const Series &a);

// sum c_n q0^n in double precision, Horner from the top coefficient down.
// Throws std::domain_error unless 0 < q0 < 1.
double evaluate_real(const Series &a, double q0);

// Coefficientwise residues in [0, m). Throws std::invalid_argument if m < 2.
Series reduce_mod(const Series &a, unsigned long m);

inline Series operator+(const Series &a, const Series &b)
{
    return add(a, b);
}
inline Series operator-(const Series &a, const Series &b)
{
    return sub(a, b);
}
inline Series operator*(const Series &a, const Series &b)
{
    return mul(a, b);
}
inline Series operator-(const Series &a)
{
    return negate(a);
}

// Index of the first differing coefficient up to the common order, or -1 when
// the two series agree there.
std::int64_t first_mismatch(const Series &a, const Series &b);

} // namespace mexlab

#endif
