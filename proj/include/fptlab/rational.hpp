#ifndef FPTLAB_RATIONAL_HPP
#define FPTLAB_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fptlab {

// All core arithmetic is exact. Int/Rational are GMP-backed; a Rational is
// always stored canonically (lowest terms, denominator > 0).
using Int = mpz_class;
using Rational = mpq_class;

/// num/den, canonicalized. Throws std::domain_error if den == 0.
Rational make_rational(const Int& num, const Int& den);
Rational make_rational(long num, long den);

/// Parses "num", "num/den" or "-num/den" (decimal). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Int floor_rational(const Rational& q);
Int ceil_rational(const Rational& q);
bool is_integer(const Rational& q);

/// base^exp as an Int (exp >= 0).
Int pow_int(const Int& base, unsigned long exp);

/// Canonical "num/den" (or "num" when den == 1).
std::string to_string(const Rational& q);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Characteristic of the ambient ring. Construction validates primality.
class Prime {
public:
    explicit Prime(std::uint64_t value);
    std::uint64_t value() const { return value_; }

    friend bool operator==(Prime a, Prime b) { return a.value_ == b.value_; }
    friend bool operator!=(Prime a, Prime b) { return a.value_ != b.value_; }

private:
    std::uint64_t value_;
};

} // namespace fptlab

#endif
