#include "nt/powersum.hpp"

#include <stdexcept>

namespace nt {

namespace {

void check_query(const Nat& n, const Nat& e) {
  if (n < 2) throw std::domain_error("power sum: modulus must be >= 2");
  if (e < 1) throw std::domain_error("power sum: exponent must be >= 1");
}

// sum_{j=1}^{q-1} j^e mod q by direct summation, q fitting a machine word
std::uint64_t block_sum_u64(std::uint64_t q, const Nat& e) {
  std::uint64_t acc = 0;
  for (std::uint64_t j = 1; j < q; ++j) {
    unsigned __int128 sum = static_cast<unsigned __int128>(acc) + detail::powmod(j, e, q);
    acc = static_cast<std::uint64_t>(sum >= q ? sum - q : sum);
  }
  return acc;
}

Nat block_sum_mpz(const Nat& q, const Nat& e) {
  Nat acc = 0;
  for (Nat j = 1; j < q; ++j) acc = (acc + modpow(j, e, q)) % q;
  return acc;
}

}  // namespace

Nat power_sum_naive(const Nat& n, const Nat& e) {
  check_query(n, e);
  if (detail::fits_u64(n)) return Nat(static_cast<unsigned long>(block_sum_u64(detail::to_u64(n), e)));
  return block_sum_mpz(n, e);
}

Nat power_sum_fast(const Factorization& f, const Nat& e) {
  check_query(f.value, e);
  const Nat& n = f.value;

  // accumulate x = S(n, e) by CRT over the prime-power blocks of n
  Nat x = 0;
  Nat modulus = 1;
  for (const auto& [p, r] : f.factors) {
    Nat q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), r);
    Nat block;
    if (r == 1) {
      // e-th powers of the units form a subgroup: sum is -1 when it is the
      // whole group, i.e. (p-1) | e, and 0 otherwise
      block = mpz_divisible_p(e.get_mpz_t(), Nat(p - 1).get_mpz_t()) ? Nat(p - 1) : Nat(0);
    } else if (detail::fits_u64(q)) {
      block = Nat(static_cast<unsigned long>(block_sum_u64(detail::to_u64(q), e)));
    } else {
      block = block_sum_mpz(q, e);
    }
    Nat residue = (n / q) % q * block % q;

    // combine x (mod modulus) with residue (mod q); the moduli are coprime
    Nat inverse;
    mpz_invert(inverse.get_mpz_t(), modulus.get_mpz_t(), q.get_mpz_t());
    Nat t = (residue - x) % q * inverse % q;
    if (t < 0) t += q;
    x += modulus * t;
    modulus *= q;
  }
  return x;
}

}  // namespace nt
