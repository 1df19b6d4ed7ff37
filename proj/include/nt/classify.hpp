#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nt/factor.hpp"

namespace nt {

enum class Verdict { True, False, Skipped };

/// Outcome of the five equivalent Giuga characterizations. On a correct
/// build all non-skipped verdicts agree; agreed() is the test surface.
struct GiugaEvidence {
  Verdict divisibility = Verdict::Skipped;    // p | n/p - 1 for every p | n
  Verdict reciprocal_sum = Verdict::Skipped;  // sum 1/p - 1/n integral
  Verdict powersum_phi = Verdict::Skipped;    // S(n, phi(n)) = n - 1
  Verdict bernoulli = Verdict::Skipped;       // n*B_phi(n) = -1 mod n
  Verdict derivative = Verdict::Skipped;      // n' = a*n + 1
  std::string note;                           // diagnostic, e.g. why bernoulli failed

  bool agreed() const;
};

/// Composite n with p | (n/p - 1) for every prime p | n. A square factor
/// makes the condition fail on its own; no pre-filter.
bool is_giuga(const Factorization& f);

/// Evaluates all five characterizations on a composite n. The Bernoulli
/// congruence is computed only when phi(n) <= bernoulli_limit (exact B_k is
/// quadratic big-rational work), otherwise marked Skipped.
GiugaEvidence giuga_evidence(const Factorization& f, unsigned bernoulli_limit = 300);

/// Exact B_k (B_1 = -1/2 convention) via the binomial recurrence, memoized.
/// Throws std::domain_error above the limit.
Rat bernoulli_exact(unsigned k, unsigned limit = 2000);

/// n' = n * sum r_i/p_i; 1 for primes.
Nat arithmetic_derivative(const Factorization& f);

/// Composite n with lambda(n) | n-1. Also evaluates the Korselt form
/// (square-free and p-1 | n-1 for all p) and insists the two agree.
bool is_carmichael(const Factorization& f);

/// lambda(n) | k(n-1). No compositeness requirement. Requires k >= 1.
bool is_k_carmichael(const Factorization& f, const Nat& k);

/// lambda(n) / gcd(lambda(n), n-1): the least k making n k-Carmichael;
/// is_k_carmichael(f, k) holds exactly when k_min(f) | k.
Nat k_min(const Factorization& f);

/// The three equivalent square-free k-Carmichael characterizations, each
/// evaluated independently (the base congruence a^{kn} = a^k over
/// a in [0, base_limit]). Requires a square-free composite input.
struct SquareFreeVerdicts {
  bool lambda_divides;   // lambda(n) | k(n-1)
  bool local_divides;    // p-1 | k(n-1) for every prime p | n
  bool base_congruence;  // a^{kn} = a^k (mod n) for a in [0, base_limit]
};
SquareFreeVerdicts square_free_characterizations(const Factorization& f, const Nat& k,
                                                 unsigned base_limit);

/// Giuga and k-Carmichael. Requires composite input and k >= 1.
bool is_k_strong_giuga(const Factorization& f, const Nat& k);

/// The defining congruence sum_{j=1}^{n-1} j^{k(n-1)} = -1 (mod n), evaluated
/// by the naive power sum. Costs about n modpows, so refuses n > naive_limit.
bool k_strong_congruence(const Nat& n, const Nat& k, const Nat& naive_limit = Nat(100000));

/// First `count` elements of {k : n is a k-strong Giuga number}: the
/// multiples of k_min when n is Giuga, empty otherwise. Composite input.
std::vector<Nat> kset(const Factorization& f, std::size_t count);

/// A counterexample to Giuga's conjecture: both Giuga and Carmichael.
bool is_strong_giuga(const Factorization& f);

/// Per-number classification record (CLI diagnostics surface).
struct KClass {
  Nat n;
  Factorization factorization;
  Nat phi;
  Nat lambda;
  bool is_composite = false;
  bool is_square_free = false;
  bool is_giuga = false;
  bool is_carmichael = false;
  Nat k_min;  // lambda / gcd(lambda, n-1); 1 exactly when lambda | n-1
};
KClass classify(const Factorization& f);

/// The 13 known Giuga numbers (OEIS A007850), ascending.
const std::vector<Nat>& known_giuga_numbers();

}  // namespace nt
