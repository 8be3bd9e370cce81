#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "pisen/errors.hpp"

namespace pisen {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Working parameters shared by a computation: the prime p and the
/// default absolute precision M (number of guaranteed p-adic digits).
struct PadicContext {
    long long p = 5;
    long precision = 24;

    PadicContext() = default;
    PadicContext(long long p, long precision);
};

bool is_prime(long long n);

/// An element of Q_p known to a guaranteed absolute precision.
///
/// A nonzero value is stored as unit * p^v with 0 < unit < p^(prec - v)
/// and unit not divisible by p; the scalar stands for the set of field
/// elements congruent to unit * p^v modulo p^prec. Zero comes in two
/// flavours: exact zero (infinite precision, absorbs addition) and
/// "zero at precision prec" (all known digits vanish).
class PadicScalar {
public:
    // Sentinel precision for exact values; safely addable without overflow.
    static constexpr long kExact = 1L << 40;

    static PadicScalar exact_zero(long long p);
    static PadicScalar zero(long long p, long prec);
    static PadicScalar one(long long p, long prec);
    static PadicScalar from_integer(const BigInt& n, const PadicContext& ctx);
    static PadicScalar from_rational(const BigInt& num, const BigInt& den,
                                     const PadicContext& ctx);
    static PadicScalar from_rational(const BigRational& q, const PadicContext& ctx);
    // Reconstructs a scalar from its stored representation (deserialization).
    static PadicScalar from_parts(long long p, long v, const BigInt& unit, long prec);

    long long prime() const { return p_; }
    /// Valuation; for a zero-at-precision this is its precision (the value
    /// is only known to be divisible by p^prec), kExact for exact zero.
    long valuation() const { return v_; }
    long precision() const { return prec_; }
    /// Digits of guaranteed relative precision (prec - v); 0 for zeros.
    long relative_precision() const { return is_zero() ? 0 : prec_ - v_; }
    const BigInt& unit_part() const { return unit_; }

    bool is_zero() const { return unit_ == 0; }
    bool is_exact_zero() const { return unit_ == 0 && prec_ >= kExact; }
    /// True when the value is certified divisible by p^prec.
    bool is_zero_to(long prec) const { return v_ >= prec; }

    PadicScalar operator+(const PadicScalar& rhs) const;
    PadicScalar operator-(const PadicScalar& rhs) const;
    PadicScalar operator*(const PadicScalar& rhs) const;
    PadicScalar operator-() const;
    PadicScalar inv() const;
    PadicScalar div(const PadicScalar& rhs) const { return *this * rhs.inv(); }

    /// Multiply / divide by an exact nonzero integer (no precision cap).
    PadicScalar mul_exact(const BigInt& n) const;
    PadicScalar div_exact(const BigInt& n) const;
    /// Multiply by p^e exactly.
    PadicScalar shift(long e) const;

    PadicScalar pow_int(long e) const;

    /// p-adic logarithm; requires v(x-1) >= 1 (>= 2 for p = 2).
    PadicScalar log() const;
    /// p-adic exponential; requires v(x) >= 1 (>= 2 for p = 2).
    PadicScalar exp() const;
    /// x^a = exp(a * log x) for a p-adic integer exponent a.
    PadicScalar pow_zp(const PadicScalar& a) const;

    /// Forgets digits beyond the given absolute precision.
    PadicScalar truncate(long prec) const;

    bool equals_to(const PadicScalar& rhs, long prec) const;
    /// Identical stored representation.
    bool same_repr(const PadicScalar& rhs) const;

    /// The canonical representative unit * p^v as an exact rational.
    BigRational representative() const;
    /// Representative as "a" or "a/b" (b a power of p).
    std::string to_string() const;

private:
    PadicScalar(long long p, long v, BigInt unit, long prec)
        : p_(p), v_(v), unit_(std::move(unit)), prec_(prec) {}

    BigInt pow_p(long e) const;

    long long p_ = 0;
    long v_ = kExact;
    BigInt unit_ = 0;
    long prec_ = kExact;
};

/// Sum of a p-adic log/exp style series is delegated to these helpers so
/// matrix and scalar code share the same truncation rule.
long log_series_cutoff(long long p, long term_valuation, long target_prec);

} // namespace pisen
