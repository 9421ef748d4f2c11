#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "qbx/error.hpp"

namespace qbx {

// Exact field element.  Two modes share one type so that every algorithm is
// field-generic: rationals (arbitrary precision, p == 0) and the prime field
// F_p for p < 2^31 (value reduced into [0, p)).  Mixed-mode arithmetic
// coerces an exact rational into F_p when its denominator is invertible;
// this is what lets algorithm-internal literals like Scalar(1) combine with
// coefficients of either mode.
class Scalar {
  public:
    Scalar() : q_(0), r_(0), p_(0) {}
    Scalar(long v) : q_(v), r_(0), p_(0) {}
    explicit Scalar(const mpq_class& q) : q_(q), r_(0), p_(0) { q_.canonicalize(); }

    // val may be any residue; p must already be validated prime.
    static Scalar fp(std::uint64_t val, std::uint32_t p);
    static Scalar zero_like(const Scalar& s);
    static Scalar one_like(const Scalar& s);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t prime() const { return p_; }
    const mpq_class& rational_value() const;
    std::uint64_t fp_value() const { return r_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const; // throws input_error on zero / non-invertible

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // Rationals render as "num/den" (den always present, canonical form);
    // F_p values render as the least nonnegative residue.
    std::string str() const;

    // Accepts "num", "num/den", optional leading '-'.  mode_like carries the
    // target field; parsing into F_p reduces mod p.
    static Scalar parse(const std::string& text, const Scalar& mode_like);

  private:
    mpq_class q_;
    std::uint64_t r_;
    std::uint32_t p_;

    static void coerce(Scalar& a, Scalar& b);
};

// Trial-division primality for the F_p mode; rejects p < 2 and p > 2^31.
bool is_valid_prime(std::uint64_t p);

// Default prime for a field spec that names F_p without a modulus.
inline constexpr std::uint32_t kDefaultPrime = 2147483647u;

} // namespace qbx
