#include "nt/arith.hpp"

#include <stdexcept>

namespace nt {

namespace detail {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

std::uint64_t powmod(std::uint64_t base, const mpz_class& exponent, std::uint64_t m) {
  if (m == 1) return 0;
  if (mpz_fits_ulong_p(exponent.get_mpz_t()))
    return powmod(base, static_cast<std::uint64_t>(mpz_get_ui(exponent.get_mpz_t())), m);
  std::uint64_t result = 1;
  base %= m;
  // left-to-right ladder over the exponent's bits
  for (std::size_t i = mpz_sizeinbase(exponent.get_mpz_t(), 2); i-- > 0;) {
    result = mulmod(result, result, m);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mulmod(result, base, m);
  }
  return result;
}

bool fits_u64(const mpz_class& v) { return v >= 0 && mpz_fits_ulong_p(v.get_mpz_t()); }

std::uint64_t to_u64(const mpz_class& v) {
  return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

}  // namespace detail

Nat parse_natural(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("parse_natural: empty input");
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("parse_natural: not a decimal natural: '" +
                                  std::string(text) + "'");
  return Nat(std::string(text), 10);
}

Rat parse_rational(std::string_view text) {
  auto bad = [&] {
    return std::invalid_argument("parse_rational: not a rational: '" + std::string(text) + "'");
  };
  std::string_view num = text;
  std::string_view den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
    if (den.empty()) throw bad();
    for (char c : den)
      if (c < '0' || c > '9') throw bad();
  }
  if (!num.empty() && num[0] == '-') num.remove_prefix(1);
  if (num.empty()) throw bad();
  for (char c : num)
    if (c < '0' || c > '9') throw bad();

  Rat r(std::string(text), 10);
  if (r.get_den() == 0) throw std::invalid_argument("parse_rational: zero denominator");
  r.canonicalize();
  return r;
}

std::string to_decimal(const Nat& value) { return value.get_str(); }

std::string to_decimal(const Rat& value) { return value.get_str(); }

Nat modpow(const Nat& base, const Nat& exponent, const Nat& modulus) {
  if (modulus == 0) throw std::domain_error("modpow: modulus must be >= 1");
  if (exponent < 0) throw std::domain_error("modpow: negative exponent");
  if (detail::fits_u64(modulus)) {
    std::uint64_t m = detail::to_u64(modulus);
    std::uint64_t b = mpz_fdiv_ui(base.get_mpz_t(), m);  // base mod m, non-negative
    return Nat(static_cast<unsigned long>(detail::powmod(b, exponent, m)));
  }
  Nat result;
  mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return result;
}

Nat gcd(const Nat& a, const Nat& b) {
  Nat result;
  mpz_gcd(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

Nat lcm(const Nat& a, const Nat& b) {
  Nat result;
  mpz_lcm(result.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return result;
}

Nat rational_mod(const Rat& r, const Nat& modulus) {
  if (modulus < 2) throw std::domain_error("rational_mod: modulus must be >= 2");
  Nat den = r.get_den();
  Nat inverse;
  if (mpz_invert(inverse.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw std::domain_error("rational_mod: denominator " + to_decimal(den) +
                            " not invertible mod " + to_decimal(modulus));
  Nat numerator_mod;
  mpz_mod(numerator_mod.get_mpz_t(), r.get_num().get_mpz_t(), modulus.get_mpz_t());
  return numerator_mod * inverse % modulus;
}

}  // namespace nt
