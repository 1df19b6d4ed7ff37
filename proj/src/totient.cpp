#include "nt/totient.hpp"

namespace nt {

namespace {

Nat lambda_prime_power(const Nat& p, unsigned e) {
  if (p == 2) {
    if (e == 1) return 1;
    if (e == 2) return 2;
    Nat result = 1;
    mpz_mul_2exp(result.get_mpz_t(), result.get_mpz_t(), e - 2);
    return result;
  }
  Nat power;
  mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e - 1);
  return power * (p - 1);
}

}  // namespace

Nat euler_phi(const Factorization& f) {
  Nat result = 1;
  for (const auto& [p, e] : f.factors) {
    Nat power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e - 1);
    result *= power * (p - 1);
  }
  return result;
}

Nat carmichael_lambda(const Factorization& f) {
  Nat result = 1;
  for (const auto& [p, e] : f.factors) result = lcm(result, lambda_prime_power(p, e));
  return result;
}

TotientPair totients(const Factorization& f) {
  return {euler_phi(f), carmichael_lambda(f)};
}

}  // namespace nt
