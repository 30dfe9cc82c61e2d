#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "errors.hpp"

namespace iterate_census {

/// Signed scratch integer for intermediate sums that may dip below zero.
using BigInt = mpz_class;

/// Arbitrary-precision natural number. Construction from a negative value throws.
class BigNat {
public:
    BigNat() = default;
    BigNat(unsigned long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    BigNat(unsigned int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    BigNat(int v) : BigNat(BigInt(v)) {}    // NOLINT(google-explicit-constructor)
    BigNat(long v) : BigNat(BigInt(v)) {}   // NOLINT(google-explicit-constructor)
    BigNat(unsigned long long v) : value_(std::to_string(v)) {}  // NOLINT
    explicit BigNat(BigInt v) : value_(std::move(v)) {
        if (sgn(value_) < 0) throw ArgumentError("BigNat: negative value " + value_.get_str());
    }

    static BigNat from_string(const std::string& decimal) {
        BigInt v;
        if (decimal.empty() || v.set_str(decimal, 10) != 0) {
            throw ArgumentError("BigNat: not a decimal integer: '" + decimal + "'");
        }
        return BigNat(std::move(v));
    }

    [[nodiscard]] const BigInt& value() const noexcept { return value_; }
    [[nodiscard]] std::string str() const { return value_.get_str(); }
    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] std::size_t bit_length() const noexcept {
        return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
    }

    BigNat& operator+=(const BigNat& o) { value_ += o.value_; return *this; }
    BigNat& operator*=(const BigNat& o) { value_ *= o.value_; return *this; }

    friend BigNat operator+(BigNat a, const BigNat& b) { return a += b; }
    friend BigNat operator*(BigNat a, const BigNat& b) { return a *= b; }
    /// Checked subtraction: throws if b > a.
    friend BigNat operator-(const BigNat& a, const BigNat& b) {
        return BigNat(BigInt(a.value_ - b.value_));
    }

    friend bool operator==(const BigNat& a, const BigNat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigNat& v) { return os << v.str(); }

private:
    BigInt value_{0};
};

/// Exact rational in lowest terms with positive denominator.
class BigRat {
public:
    BigRat() = default;
    BigRat(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    BigRat(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    explicit BigRat(const BigInt& v) : value_(v) {}
    explicit BigRat(const BigNat& v) : value_(v.value()) {}
    BigRat(const BigInt& num, const BigInt& den) {
        if (sgn(den) == 0) throw ArgumentError("BigRat: zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(value_); }
    [[nodiscard]] std::string str() const { return value_.get_str(); }
    [[nodiscard]] const mpq_class& value() const noexcept { return value_; }

    BigRat& operator+=(const BigRat& o) { value_ += o.value_; return *this; }
    BigRat& operator-=(const BigRat& o) { value_ -= o.value_; return *this; }
    BigRat& operator*=(const BigRat& o) { value_ *= o.value_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw ArgumentError("BigRat: division by zero");
        value_ /= o.value_;
        return *this;
    }
    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }
    BigRat operator-() const { BigRat r; r.value_ = -value_; return r; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigRat& v) { return os << v.str(); }

private:
    mpq_class value_{0};
};

/// Converts an integral rational to a natural number; throws ConsistencyError otherwise.
inline BigNat to_nat(const BigRat& r, const std::string& context) {
    if (!r.is_integer() || r.sign() < 0) {
        throw ConsistencyError(context + ": expected a non-negative integer, got " + r.str());
    }
    return BigNat(r.numerator());
}

/// Converts a rational to a double via scaled integer division: q = floor(|r| * 2^s)
/// with s chosen so q has 63 or 64 significant bits, then q is rounded to 53 bits.
/// Numerator and denominator are never materialized as floats, so values far
/// outside double range (e.g. S_n^2 at n = 2000) are handled.
inline double to_double(const BigRat& r) {
    static_assert(sizeof(unsigned long) == 8, "expects 64-bit unsigned long");
    if (r.is_zero()) return 0.0;
    BigInt num = abs(r.numerator());
    BigInt den = r.denominator();
    const long nbits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    const long dbits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    const long shift = dbits - nbits + 63;
    if (shift >= 0) {
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    } else {
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    }
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const double mag = std::ldexp(static_cast<double>(mpz_get_ui(q.get_mpz_t())),
                                  static_cast<int>(-shift));
    return r.sign() < 0 ? -mag : mag;
}

}  // namespace iterate_census
