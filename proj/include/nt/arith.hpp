#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace nt {

/// Unbounded non-negative integer. Negative values are rejected at the
/// parse boundary; internal arithmetic may pass through signed temporaries.
using Nat = mpz_class;

/// Unbounded signed integer.
using Int = mpz_class;

/// Exact rational, always kept canonical: lowest terms, positive denominator.
using Rat = mpq_class;

/// Parses a decimal natural ("1234"). Rejects signs, whitespace and garbage.
Nat parse_natural(std::string_view text);

/// Parses "p", "-p", "p/q" or "-p/q" with q > 0; result is canonicalized.
Rat parse_rational(std::string_view text);

std::string to_decimal(const Nat& value);

/// "p/q", or just "p" when the denominator is 1.
std::string to_decimal(const Rat& value);

/// base^exponent mod modulus, least non-negative residue. 0^0 is 1 mod modulus.
/// Throws std::domain_error when modulus is 0.
Nat modpow(const Nat& base, const Nat& exponent, const Nat& modulus);

Nat gcd(const Nat& a, const Nat& b);
Nat lcm(const Nat& a, const Nat& b);

/// numerator * denominator^{-1} mod modulus, reduced into [0, modulus).
/// Requires modulus >= 2 and gcd(denominator, modulus) = 1; throws
/// std::domain_error otherwise.
Nat rational_mod(const Rat& r, const Nat& modulus);

namespace detail {

// 64-bit kernels shared by the hot loops in powersum/factor/survey.
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, const mpz_class& exponent, std::uint64_t m);

bool fits_u64(const mpz_class& v);
std::uint64_t to_u64(const mpz_class& v);

}  // namespace detail

}  // namespace nt
