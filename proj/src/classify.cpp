#include "nt/classify.hpp"

#include <mutex>
#include <stdexcept>

#include "nt/powersum.hpp"
#include "nt/totient.hpp"

namespace nt {

namespace {

void require_composite(const Factorization& f, const char* who) {
  if (!f.is_composite())
    throw std::invalid_argument(std::string(who) + ": " + to_decimal(f.value) +
                                " is not composite");
}

void require_positive_k(const Nat& k, const char* who) {
  if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
}

bool divides(const Nat& d, const Nat& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

Rat binom(unsigned n, unsigned k) {
  Nat b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rat(b);
}

}  // namespace

bool GiugaEvidence::agreed() const {
  bool seen = false;
  bool value = false;
  for (Verdict v : {divisibility, reciprocal_sum, powersum_phi, bernoulli, derivative}) {
    if (v == Verdict::Skipped) continue;
    bool b = v == Verdict::True;
    if (seen && b != value) return false;
    seen = true;
    value = b;
  }
  return true;
}

bool is_giuga(const Factorization& f) {
  if (!f.is_composite()) return false;
  for (const auto& [p, e] : f.factors) {
    // p^2 | n makes p | n/p, so n/p - 1 = -1 (mod p) and the test fails on its own
    if (!divides(p, f.value / p - 1)) return false;
  }
  return true;
}

Rat bernoulli_exact(unsigned k, unsigned limit) {
  if (k > limit)
    throw std::domain_error("bernoulli_exact: index " + std::to_string(k) +
                            " exceeds limit " + std::to_string(limit));
  if (k >= 3 && k % 2 == 1) return Rat(0);

  static std::vector<Rat> cache{Rat(1), Rat(-1, 2)};
  static std::mutex cache_mutex;
  std::lock_guard<std::mutex> lock(cache_mutex);
  // B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j, odd B_j >= 3 vanishing
  while (cache.size() <= k) {
    unsigned m = static_cast<unsigned>(cache.size());
    if (m % 2 == 1) {
      cache.emplace_back(0);
      continue;
    }
    Rat sum = cache[0] * binom(m + 1, 0) + cache[1] * binom(m + 1, 1);
    for (unsigned j = 2; j < m; j += 2) sum += cache[j] * binom(m + 1, j);
    cache.push_back(-sum / Rat(m + 1));
  }
  return cache[k];
}

Nat arithmetic_derivative(const Factorization& f) {
  Nat result = 0;
  for (const auto& [p, e] : f.factors) result += e * (f.value / p);
  return result;
}

GiugaEvidence giuga_evidence(const Factorization& f, unsigned bernoulli_limit) {
  require_composite(f, "giuga_evidence");
  const Nat& n = f.value;
  GiugaEvidence evidence;

  evidence.divisibility = is_giuga(f) ? Verdict::True : Verdict::False;

  Rat sum(0);
  for (const auto& [p, e] : f.factors) sum += Rat(1) / Rat(p);
  sum -= Rat(1) / Rat(n);
  evidence.reciprocal_sum = sum.get_den() == 1 ? Verdict::True : Verdict::False;

  Nat phi = euler_phi(f);
  evidence.powersum_phi = power_sum_fast(f, phi) == n - 1 ? Verdict::True : Verdict::False;

  if (phi <= bernoulli_limit) {
    try {
      Rat agoh = Rat(n) * bernoulli_exact(static_cast<unsigned>(phi.get_ui()), bernoulli_limit);
      agoh.canonicalize();
      evidence.bernoulli = rational_mod(agoh, n) == n - 1 ? Verdict::True : Verdict::False;
    } catch (const std::domain_error& e) {
      evidence.bernoulli = Verdict::False;
      evidence.note = std::string("bernoulli congruence inapplicable: ") + e.what();
    }
  }

  evidence.derivative =
      arithmetic_derivative(f) % n == 1 ? Verdict::True : Verdict::False;
  return evidence;
}

bool is_carmichael(const Factorization& f) {
  if (!f.is_composite()) return false;
  Nat n1 = f.value - 1;
  bool by_lambda = divides(carmichael_lambda(f), n1);
  bool by_korselt = f.is_square_free();
  if (by_korselt)
    for (const auto& [p, e] : f.factors)
      if (!divides(p - 1, n1)) {
        by_korselt = false;
        break;
      }
  if (by_lambda != by_korselt)
    throw std::logic_error("is_carmichael: lambda and Korselt criteria disagree on " +
                           to_decimal(f.value));
  return by_lambda;
}

bool is_k_carmichael(const Factorization& f, const Nat& k) {
  require_positive_k(k, "is_k_carmichael");
  return divides(carmichael_lambda(f), k * (f.value - 1));
}

Nat k_min(const Factorization& f) {
  Nat lambda = carmichael_lambda(f);
  return lambda / gcd(lambda, f.value - 1);
}

SquareFreeVerdicts square_free_characterizations(const Factorization& f, const Nat& k,
                                                 unsigned base_limit) {
  require_composite(f, "square_free_characterizations");
  require_positive_k(k, "square_free_characterizations");
  if (!f.is_square_free())
    throw std::invalid_argument("square_free_characterizations: " + to_decimal(f.value) +
                                " is not square-free");
  const Nat& n = f.value;
  Nat target = k * (n - 1);

  SquareFreeVerdicts verdicts{};
  verdicts.lambda_divides = divides(carmichael_lambda(f), target);

  verdicts.local_divides = true;
  for (const auto& [p, e] : f.factors)
    if (!divides(p - 1, target)) {
      verdicts.local_divides = false;
      break;
    }

  verdicts.base_congruence = true;
  Nat kn = k * n;
  for (unsigned a = 0; a <= base_limit; ++a) {
    Nat base(a);
    if (modpow(base, kn, n) != modpow(base, k, n)) {
      verdicts.base_congruence = false;
      break;
    }
  }
  return verdicts;
}

bool is_k_strong_giuga(const Factorization& f, const Nat& k) {
  require_composite(f, "is_k_strong_giuga");
  require_positive_k(k, "is_k_strong_giuga");
  return is_giuga(f) && is_k_carmichael(f, k);
}

bool k_strong_congruence(const Nat& n, const Nat& k, const Nat& naive_limit) {
  if (n < 2) throw std::domain_error("k_strong_congruence: n must be >= 2");
  require_positive_k(k, "k_strong_congruence");
  if (n > naive_limit)
    throw std::domain_error("k_strong_congruence: " + to_decimal(n) +
                            " exceeds the naive-oracle guard " + to_decimal(naive_limit) +
                            "; use the factored classifier");
  return power_sum_naive(n, k * (n - 1)) == n - 1;
}

std::vector<Nat> kset(const Factorization& f, std::size_t count) {
  require_composite(f, "kset");
  std::vector<Nat> out;
  if (!is_giuga(f)) return out;
  Nat step = k_min(f);
  out.reserve(count);
  for (std::size_t t = 1; t <= count; ++t) out.push_back(step * static_cast<unsigned long>(t));
  return out;
}

bool is_strong_giuga(const Factorization& f) {
  require_composite(f, "is_strong_giuga");
  return is_giuga(f) && is_carmichael(f);
}

KClass classify(const Factorization& f) {
  KClass record;
  record.n = f.value;
  record.factorization = f;
  record.phi = euler_phi(f);
  record.lambda = carmichael_lambda(f);
  record.is_composite = f.is_composite();
  record.is_square_free = f.is_square_free();
  record.is_giuga = is_giuga(f);
  record.is_carmichael = record.is_composite && is_carmichael(f);
  record.k_min = record.lambda / gcd(record.lambda, record.n - 1);
  return record;
}

const std::vector<Nat>& known_giuga_numbers() {
  static const std::vector<Nat> values = {
      Nat("30"),
      Nat("858"),
      Nat("1722"),
      Nat("66198"),
      Nat("2214408306"),
      Nat("24423128562"),
      Nat("432749205173838"),
      Nat("14737133470010574"),
      Nat("550843391309130318"),
      Nat("244197000982499715087866346"),
      Nat("554079914617070801288578559178"),
      Nat("1910667181420507984555759916338506"),
      Nat("42000179497077470620387115096706566324041957537516306092287644161425572115"
          "82098432545190323474818"),
  };
  return values;
}

}  // namespace nt
